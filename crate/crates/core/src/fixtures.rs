//! Built-in example graphs.
//!
//! `G1`, `G2`, `G3` and `Gfig3` are the small non-quasi-regularizable examples
//! used throughout the literature on critical sets; `K2`, `P3`, `K23` and `C5`
//! are analytic checks.

use crate::graph::Graph;
use crate::io::parse_edge_list;

pub const G1: &str = "\
a u
u w
u b
u z
w z
";

pub const G2: &str = "\
x a
a z
z b
a y
b p
b q
p q
";

pub const G3: &str = "\
v A
u A
t A
t B
B D
D w
w G
B C
B E
C D
C E
D E
F G
F H
G H
";

pub const GFIG3: &str = "\
a b4
b4 b5
b5 b6
b6 b7
b7 u
u b9
b9 b10
b10 b11
b4 c
b b4
b5 t5
t5 t6
t6 b7
b9 t9
t9 b10
b11 v
";

pub const K2: &str = "a b\n";

pub const P3: &str = "a b\nb c\n";

pub const K23: &str = "\
a c
a d
a e
b c
b d
b e
";

pub const C5: &str = "\
1 2
2 3
3 4
4 5
5 1
";

/// Names in output order.
pub const NAMES: [&str; 8] = ["G1", "G2", "G3", "Gfig3", "K2", "P3", "K23", "C5"];

pub fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        "G1" => G1,
        "G2" => G2,
        "G3" => G3,
        "Gfig3" => GFIG3,
        "K2" => K2,
        "P3" => P3,
        "K23" => K23,
        "C5" => C5,
        _ => return None,
    })
}

/// Parsed fixture by name.
pub fn graph(name: &str) -> Option<Graph> {
    text(name).map(|t| parse_edge_list(t).expect("built-in fixture parses"))
}

pub fn all() -> Vec<(&'static str, Graph)> {
    NAMES.iter().map(|&n| (n, graph(n).unwrap())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<(usize, usize)> = all().iter().map(|(_, g)| (g.order(), g.size())).collect();
        assert_eq!(sizes, [(5, 5), (7, 7), (12, 15), (15, 16), (2, 1), (3, 2), (5, 6), (5, 5)]);
    }

    #[test]
    fn fixtures_have_no_isolated_vertices() {
        assert!(all().iter().all(|(_, g)| !g.has_isolated_vertices()));
    }
}
