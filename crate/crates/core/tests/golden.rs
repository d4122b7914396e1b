//! Fixture values, frozen from an exhaustive enumeration done outside this
//! crate.

mod common;

use common::{labels, set};
use critsets::critical::{
    critical_difference, find_critical_set, independent_part, ker_fast, ker_slow, max_critical_independent_set,
};
use critsets::fixtures;
use critsets::matching::maximum_matching;
use critsets::mis::{enumerate_maximum_independent_sets, Guard};
use critsets::oracle::{oracle_max_critical_independent_sets, OracleBudget};

struct Expect {
    name: &'static str,
    n: usize,
    dc: usize,
    ker: &'static [&'static str],
    core: &'static [&'static str],
    corona: &'static [&'static str],
    alpha: usize,
    mu: usize,
    alpha_c: usize,
    core_critical: bool,
}

const TABLE: &[Expect] = &[
    Expect { name: "G1", n: 5, dc: 1, ker: &["a", "b"], core: &["a", "b"], corona: &["a", "b", "w", "z"], alpha: 3, mu: 2, alpha_c: 3, core_critical: true },
    Expect { name: "G2", n: 7, dc: 1, ker: &["x", "y"], core: &["x", "y", "z"], corona: &["p", "q", "x", "y", "z"], alpha: 4, mu: 3, alpha_c: 4, core_critical: true },
    Expect { name: "G3", n: 12, dc: 1, ker: &["u", "v"], core: &["t", "u", "v", "w"], corona: &["C", "E", "F", "H", "t", "u", "v", "w"], alpha: 6, mu: 5, alpha_c: 3, core_critical: false },
    Expect { name: "Gfig3", n: 15, dc: 2, ker: &["a", "b", "c"], core: &["a", "b", "c", "u"], corona: &["a", "b", "b10", "b11", "b5", "b6", "c", "t5", "t6", "t9", "u", "v"], alpha: 8, mu: 6, alpha_c: 4, core_critical: false },
    Expect { name: "K2", n: 2, dc: 0, ker: &[], core: &[], corona: &["a", "b"], alpha: 1, mu: 1, alpha_c: 1, core_critical: true },
    Expect { name: "P3", n: 3, dc: 1, ker: &["a", "c"], core: &["a", "c"], corona: &["a", "c"], alpha: 2, mu: 1, alpha_c: 2, core_critical: true },
    Expect { name: "K23", n: 5, dc: 1, ker: &["c", "d", "e"], core: &["c", "d", "e"], corona: &["c", "d", "e"], alpha: 3, mu: 2, alpha_c: 3, core_critical: true },
    Expect { name: "C5", n: 5, dc: 0, ker: &[], core: &[], corona: &["1", "2", "3", "4", "5"], alpha: 2, mu: 2, alpha_c: 0, core_critical: true },
];

#[test]
fn fixture_table() {
    for e in TABLE {
        let g = fixtures::graph(e.name).unwrap();
        let name = e.name;
        assert_eq!(g.order(), e.n, "{name}");
        assert_eq!(critical_difference(&g), e.dc, "{name}");
        assert_eq!(g.labels_of(&ker_fast(&g)), labels(e.ker), "{name}");
        assert_eq!(ker_slow(&g), ker_fast(&g), "{name}");
        let om = enumerate_maximum_independent_sets(&g, Guard::ENUMERATION).unwrap();
        assert_eq!(om.alpha, e.alpha, "{name}");
        assert_eq!(g.labels_of(&om.core), labels(e.core), "{name}");
        assert_eq!(g.labels_of(&om.corona), labels(e.corona), "{name}");
        assert_eq!(maximum_matching(&g).size(), e.mu, "{name}");
        assert_eq!(max_critical_independent_set(&g).len(), e.alpha_c, "{name}");
        assert_eq!(g.difference(&om.core) == e.dc as i64, e.core_critical, "{name}");
    }
}

#[test]
fn omega_members() {
    let g = fixtures::graph("G3").unwrap();
    let om = enumerate_maximum_independent_sets(&g, Guard::ENUMERATION).unwrap();
    let mut got: Vec<Vec<String>> = om.sets.iter().map(|s| g.labels_of(s)).collect();
    got.sort();
    let want: Vec<Vec<String>> = [["C", "F", "t", "u", "v", "w"], ["C", "H", "t", "u", "v", "w"], ["E", "F", "t", "u", "v", "w"], ["E", "H", "t", "u", "v", "w"]]
        .iter()
        .map(|s| labels(s))
        .collect();
    assert_eq!(got, want);

    let gf = fixtures::graph("Gfig3").unwrap();
    assert_eq!(enumerate_maximum_independent_sets(&gf, Guard::ENUMERATION).unwrap().sets.len(), 9);
    let c5 = fixtures::graph("C5").unwrap();
    assert_eq!(enumerate_maximum_independent_sets(&c5, Guard::ENUMERATION).unwrap().sets.len(), 5);
}

#[test]
fn named_sets() {
    let g2 = fixtures::graph("G2").unwrap();
    assert_eq!(g2.difference(&set(&g2, &["x", "y", "z", "p", "q"])), 1);
    assert_eq!(g2.difference(&set(&g2, &["x", "y"])), 1);

    let g3 = fixtures::graph("G3").unwrap();
    assert_eq!(g3.difference(&set(&g3, &["t", "u", "v"])), 1);
    assert_eq!(g3.difference(&set(&g3, &["t", "u", "v", "w"])), 0);

    let gf = fixtures::graph("Gfig3").unwrap();
    assert_eq!(gf.difference(&set(&gf, &["a", "b", "c"])), 2);
    let j = set(&gf, &["a", "b", "c", "v"]);
    assert!(gf.is_independent(&j));
    assert_eq!(gf.difference(&j), 2);
    assert_eq!(max_critical_independent_set(&gf), j);
    let all = oracle_max_critical_independent_sets(&gf, OracleBudget::uniform(16)).unwrap();
    assert_eq!(all, vec![j]);
}

#[test]
fn max_critical_independent_sets_of_small_fixtures() {
    let b = OracleBudget::default();
    let k2 = fixtures::graph("K2").unwrap();
    let got: Vec<_> = oracle_max_critical_independent_sets(&k2, b).unwrap().iter().map(|s| k2.labels_of(s)).collect();
    assert_eq!(got, vec![labels(&["a"]), labels(&["b"])]);
    let g1 = fixtures::graph("G1").unwrap();
    let got: Vec<_> = oracle_max_critical_independent_sets(&g1, b).unwrap().iter().map(|s| g1.labels_of(s)).collect();
    assert_eq!(got.len(), 2);
    assert!(got.contains(&labels(&["a", "b", "w"])) && got.contains(&labels(&["a", "b", "z"])));
}

#[test]
fn constructive_idc() {
    for (name, g) in fixtures::all() {
        let i = independent_part(&g, &find_critical_set(&g));
        assert!(g.is_independent(&i), "{name}");
        assert_eq!(g.difference(&i), critical_difference(&g) as i64, "{name}");
    }
}
