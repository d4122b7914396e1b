//! Machine-checkable statements about critical sets, `ker`, `core` and
//! `corona`, evaluated on one graph at a time.
//!
//! Each check declares its hypotheses and skips itself when they fail. A check
//! made of several parts passes only when every part ran; if a guard stops a
//! part and nothing failed, the check is skipped with reason `guard_exceeded`.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::critical::{independent_part, max_critical_independent_set, CriticalStructure};
use crate::generate::Rng;
use crate::graph::{Graph, VertexSet};
use crate::matching::{maximum_matching, saturating_matching};
use crate::mis::{enumerate_maximum_independent_sets, exact_alpha, is_local_max_independent_set, Guard, OmegaFamily};
use crate::oracle::{scan_independent_sets, IndependentScan, OracleBudget, SubsetTable};

/// Stable check identifiers `C1`..`C17`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckId(u8);

impl CheckId {
    pub const ALL: [CheckId; 17] = {
        let mut all = [CheckId(0); 17];
        let mut i = 0;
        while i < 17 {
            all[i] = CheckId(i as u8 + 1);
            i += 1;
        }
        all
    };

    pub fn new(k: u8) -> Option<CheckId> {
        (1..=17).contains(&k).then_some(CheckId(k))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn statement(self) -> &'static str {
        match self.0 {
            1 => "quasi-regularizable iff every independent S has |S| <= |N(S)|",
            2 => "every independent A disjoint from S in Omega(G) matches into S",
            3 => "for critical independent A and X = A+N(A), a maximum matching of G[X] matches X-S into S and mu(G[X]) = |X-S|",
            4 => "d_c = id_c",
            5 => "critical independent => local maximum => inside some maximum independent set, and N(S) matches into S",
            6 => "for critical independent A and X = A+N(A): G[X] is KE, alpha(G[V-X]) <= mu(G[V-X]), mu splits",
            7 => "d_c >= alpha - mu",
            8 => "for a maximum critical independent J: alpha = alpha(G[X]) + alpha(G[V-X]) = alpha_c + alpha(G[V-X]), G[X] KE",
            9 => "d is supermodular, critical sets form a lattice, ker is the intersection of critical sets",
            10 => "n >= zeta >= alpha >= xi >= eps >= d_c >= alpha-mu and xi >= alpha-mu+eps-d_c",
            11 => "d_c > 0 without isolated vertices: eps > d_c >= alpha-mu >= 1 and xi > alpha-mu+eps-d_c",
            12 => "some independent S with |S| > |N(S)| => xi > d_c",
            13 => "connected bipartite (or tree) with n >= 2 => xi != 1",
            14 => "pendant vertices lie in every maximum critical independent set",
            15 => "connected and alpha > mu => xi > alpha - mu",
            16 => "alpha > (n+k-1)/2 => xi >= k+1, and xi >= k+2 when n+k-1 is even",
            _ => "ker is a subset of core",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check `{0}` (expected C1..C17)")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, UnknownCheck> {
        let t = s.trim();
        t.strip_prefix(['C', 'c'])
            .and_then(|k| k.parse().ok())
            .and_then(CheckId::new)
            .ok_or_else(|| UnknownCheck(t.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `C1,C4,...`.
pub fn parse_check_list(s: &str) -> Result<Vec<CheckId>, UnknownCheck> {
    let mut ids: Vec<CheckId> = s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    HypothesisFalse,
    GuardExceeded,
    AssumptionViolated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Text(String),
    Set(Vec<String>),
    Sets(Vec<Vec<String>>),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => s.serialize_i64(*v),
            Value::Bool(v) => s.serialize_bool(*v),
            Value::Text(v) => s.serialize_str(v),
            Value::Set(v) => v.serialize(s),
            Value::Sets(v) => v.serialize(s),
        }
    }
}

/// Evidence in insertion order, serialized as a JSON object with that key
/// order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness(pub Vec<(String, Value)>);

impl Witness {
    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: CheckId,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<SkipReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub isolated_vertices: bool,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub oracle_subsets: usize,
    pub oracle_matching: usize,
    pub alpha_vertices: usize,
    pub enumeration_vertices: usize,
    pub enumeration_nodes: u64,
    pub pair_limit: usize,
    pub supermodular_pairs: usize,
    pub scan_nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: GraphSummary,
    pub budgets: Budgets,
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn result(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub checks: Vec<CheckId>,
    pub oracle: OracleBudget,
    pub alpha_guard: Guard,
    pub enumeration_guard: Guard,
    /// Max order for checks that range over pairs of enumerated sets (C2,
    /// C9 lattice, oracle-enumerated instances of C3/C5/C6).
    pub pair_limit: usize,
    /// Random pairs for the supermodularity sample; graphs with at most 6
    /// vertices are checked on all pairs instead.
    pub supermodular_pairs: usize,
    /// Node cap for the independent-set scan that stands in for the subset
    /// table in C1 and C14 above the oracle limit.
    pub scan_nodes: u64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            checks: CheckId::ALL.to_vec(),
            oracle: OracleBudget::default(),
            alpha_guard: Guard::ALPHA,
            enumeration_guard: Guard::ENUMERATION,
            pair_limit: 12,
            supermodular_pairs: 64,
            scan_nodes: 20_000_000,
            seed: 0,
        }
    }
}

impl VerifyConfig {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            oracle_subsets: self.oracle.subset_limit,
            oracle_matching: self.oracle.matching_limit,
            alpha_vertices: self.alpha_guard.max_vertices,
            enumeration_vertices: self.enumeration_guard.max_vertices,
            enumeration_nodes: self.enumeration_guard.max_nodes,
            pair_limit: self.pair_limit,
            supermodular_pairs: self.supermodular_pairs,
            scan_nodes: self.scan_nodes,
        }
    }
}

/// Results shared by the checks on one graph.
struct Cache<'g> {
    g: &'g Graph,
    cfg: &'g VerifyConfig,
    dc: i64,
    ker: VertexSet,
    witness: VertexSet,
    mu: OnceCell<usize>,
    alpha: OnceCell<Option<usize>>,
    omega: OnceCell<Option<OmegaFamily>>,
    table: OnceCell<Option<SubsetTable>>,
    scan: OnceCell<Option<IndependentScan>>,
    j: OnceCell<VertexSet>,
}

impl<'g> Cache<'g> {
    fn new(g: &'g Graph, cfg: &'g VerifyConfig) -> Self {
        let s = CriticalStructure::new(g);
        Cache {
            g,
            cfg,
            dc: s.critical_difference() as i64,
            ker: s.ker(),
            witness: independent_part(g, &s.maximum_critical_set()),
            mu: OnceCell::new(),
            alpha: OnceCell::new(),
            omega: OnceCell::new(),
            table: OnceCell::new(),
            scan: OnceCell::new(),
            j: OnceCell::new(),
        }
    }

    fn n(&self) -> usize {
        self.g.order()
    }

    fn mu(&self) -> i64 {
        *self.mu.get_or_init(|| maximum_matching(self.g).size()) as i64
    }

    fn alpha(&self) -> Option<i64> {
        self.alpha
            .get_or_init(|| match self.omega.get() {
                Some(Some(om)) => Some(om.alpha),
                _ => exact_alpha(self.g, self.cfg.alpha_guard).exact(),
            })
            .map(|a| a as i64)
    }

    fn omega(&self) -> Option<&OmegaFamily> {
        self.omega
            .get_or_init(|| enumerate_maximum_independent_sets(self.g, self.cfg.enumeration_guard).ok())
            .as_ref()
    }

    fn table(&self) -> Option<&SubsetTable> {
        self.table.get_or_init(|| SubsetTable::new(self.g, self.cfg.oracle).ok()).as_ref()
    }

    fn scan(&self) -> Option<&IndependentScan> {
        self.scan
            .get_or_init(|| scan_independent_sets(self.g, self.cfg.scan_nodes).ok())
            .as_ref()
    }

    fn pairs_ok(&self) -> bool {
        self.n() <= self.cfg.pair_limit
    }

    fn j(&self) -> &VertexSet {
        self.j.get_or_init(|| max_critical_independent_set(self.g))
    }

    /// Critical independent sets the universally quantified checks are run
    /// on: `ker`, the witness, `J`, and at small order every one of them.
    fn instances(&self) -> (Vec<(String, VertexSet)>, bool) {
        let mut out = vec![
            ("ker".to_string(), self.ker.clone()),
            ("witness".to_string(), self.witness.clone()),
            ("max_critical".to_string(), self.j().clone()),
        ];
        let mut complete = false;
        if self.pairs_ok() {
            if let Some(t) = self.table() {
                complete = true;
                for (i, x) in t.critical_independent_sets().into_iter().enumerate() {
                    out.push((format!("enumerated_{i}"), VertexSet::from_mask(x as u128)));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|(_, s)| seen.insert(s.clone()));
        (out, complete)
    }
}

/// Accumulates the witness and the verdict of one check.
struct Eval<'g> {
    g: &'g Graph,
    witness: Witness,
    failed: bool,
    unavailable: Vec<&'static str>,
}

impl<'g> Eval<'g> {
    fn new(g: &'g Graph) -> Self {
        Eval {
            g,
            witness: Witness::default(),
            failed: false,
            unavailable: Vec::new(),
        }
    }

    fn num(&mut self, key: &str, v: i64) -> &mut Self {
        self.witness.0.push((key.to_string(), Value::Int(v)));
        self
    }

    fn set(&mut self, key: &str, s: &VertexSet) -> &mut Self {
        self.witness.0.push((key.to_string(), Value::Set(self.g.labels_of(s))));
        self
    }

    fn text(&mut self, key: &str, s: impl Into<String>) -> &mut Self {
        self.witness.0.push((key.to_string(), Value::Text(s.into())));
        self
    }

    fn flag(&mut self, key: &str, v: bool) -> &mut Self {
        self.witness.0.push((key.to_string(), Value::Bool(v)));
        self
    }

    /// Records a claim; a false claim fails the check.
    fn claim(&mut self, key: &str, holds: bool) -> bool {
        self.witness.0.push((key.to_string(), Value::Bool(holds)));
        self.failed |= !holds;
        holds
    }

    fn unavailable(&mut self, part: &'static str) {
        self.unavailable.push(part);
    }

    fn finish(self, id: CheckId) -> CheckResult {
        let (outcome, skip_reason, detail) = if self.failed {
            (Outcome::Fail, None, None)
        } else if !self.unavailable.is_empty() {
            (
                Outcome::Skipped,
                Some(SkipReason::GuardExceeded),
                Some(format!("not evaluated: {}", self.unavailable.join(", "))),
            )
        } else {
            (Outcome::Pass, None, None)
        };
        CheckResult {
            check: id,
            outcome,
            skip_reason,
            detail,
            witness: self.witness,
        }
    }
}

fn skipped(id: CheckId, reason: SkipReason, detail: &str) -> CheckResult {
    CheckResult {
        check: id,
        outcome: Outcome::Skipped,
        skip_reason: Some(reason),
        detail: Some(detail.to_string()),
        witness: Witness::default(),
    }
}

/// Runs every enabled check on `g`. Never stops at the first failure.
pub fn run_checks(name: &str, g: &Graph, cfg: &VerifyConfig) -> VerificationReport {
    let c = Cache::new(g, cfg);
    let results = cfg.checks.iter().map(|&id| run_one(id, &c)).collect();
    VerificationReport {
        graph: GraphSummary {
            name: name.to_string(),
            n: g.order(),
            m: g.size(),
            isolated_vertices: g.has_isolated_vertices(),
            connected: g.is_connected(),
        },
        budgets: cfg.budgets(),
        seed: cfg.seed,
        results,
    }
}

fn run_one(id: CheckId, c: &Cache) -> CheckResult {
    match id.0 {
        1 => c1(id, c),
        2 => c2(id, c),
        3 => c3(id, c),
        4 => c4(id, c),
        5 => c5(id, c),
        6 => c6(id, c),
        7 => c7(id, c),
        8 => c8(id, c),
        9 => c9(id, c),
        10 => c10(id, c),
        11 => c11(id, c),
        12 => c12(id, c),
        13 => c13(id, c),
        14 => c14(id, c),
        15 => c15(id, c),
        16 => c16(id, c),
        _ => c17(id, c),
    }
}

fn c1(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let fast = c.dc == 0;
    e.num("dc", c.dc);
    let oracle = match c.table() {
        Some(t) => Some(t.masks().all(|x| !t.is_independent(x) || t.difference(x) <= 0)),
        None => c.scan().map(|s| s.idc <= 0),
    };
    match oracle {
        Some(oracle) => {
            e.flag("fast_quasi_regularizable", fast).flag("oracle_quasi_regularizable", oracle);
            e.claim("agree", fast == oracle);
        }
        None => e.unavailable("oracle"),
    }
    e.finish(id)
}

fn c2(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let (Some(om), Some(t)) = (c.omega(), c.table().filter(|_| c.pairs_ok())) else {
        e.unavailable("enumeration of Omega(G) and Ind(G)");
        return e.finish(id);
    };
    let ind = t.independent_sets();
    let mut tested = 0i64;
    'outer: for s in &om.sets {
        let smask = s.to_mask() as u32;
        for &a in &ind {
            if a & smask != 0 {
                continue;
            }
            tested += 1;
            let aset = VertexSet::from_mask(a as u128);
            if saturating_matching(c.g, &aset, s).expect("disjoint").is_none() {
                e.set("S", s).set("A", &aset);
                e.claim("A_matches_into_S", false);
                break 'outer;
            }
        }
    }
    e.num("maximum_independent_sets", om.sets.len() as i64).num("pairs_tested", tested);
    e.finish(id)
}

/// Applies `f` to every instance, stopping at the first failure.
fn over_instances(c: &Cache, e: &mut Eval, mut f: impl FnMut(&mut Eval, &VertexSet) -> Result<bool, &'static str>) {
    let (instances, complete) = c.instances();
    let mut tested = 0;
    for (label, a) in &instances {
        match f(e, a) {
            Ok(true) => tested += 1,
            Ok(false) => {
                e.text("instance", label.clone()).set("A", a);
                break;
            }
            Err(part) => {
                e.unavailable(part);
                break;
            }
        }
    }
    e.num("instances", tested);
    if !complete && !e.failed {
        e.text("coverage", "ker, witness, max_critical");
    }
}

fn c3(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let g = c.g;
    over_instances(c, &mut e, |e, a| {
        let x = g.closed_neighborhood(a);
        let h = g.induced_subgraph(&x);
        let om = enumerate_maximum_independent_sets(&h.graph, c.cfg.enumeration_guard).map_err(|_| "Omega(G[X])")?;
        let m = maximum_matching(&h.graph);
        for s in &om.sets {
            let rest = VertexSet::full(h.graph.order()).difference(s);
            let into = rest.iter().all(|v| m.mate(v).is_some_and(|w| s.contains(w)));
            if !into || m.size() != rest.len() {
                e.set("S", &h.to_host(s)).num("mu_GX", m.size() as i64).num("X_minus_S", rest.len() as i64);
                e.claim("matches_X_minus_S_into_S", into);
                e.claim("mu_equals_X_minus_S", m.size() == rest.len());
                return Ok(false);
            }
        }
        Ok(true)
    });
    e.finish(id)
}

fn c4(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let d = c.g.difference(&c.witness);
    e.num("dc", c.dc).num("idc", d).set("witness", &c.witness);
    e.claim("witness_independent", c.g.is_independent(&c.witness));
    e.claim("dc_equals_idc", d == c.dc);
    e.finish(id)
}

fn c5(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    let g = c.g;
    over_instances(c, &mut e, |e, a| {
        let local = is_local_max_independent_set(g, a, c.cfg.alpha_guard).map_err(|_| "local maximum test")?;
        let inside = om.sets.iter().any(|s| a.is_subset(s));
        let na = g.neighborhood(a);
        let matched = saturating_matching(g, &na, a).expect("disjoint").is_some();
        if local && inside && matched {
            return Ok(true);
        }
        e.claim("local_maximum", local);
        e.claim("inside_maximum_independent_set", inside);
        e.claim("N(A)_matches_into_A", matched);
        Ok(false)
    });
    e.finish(id)
}

fn c6(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let g = c.g;
    let mu = c.mu();
    over_instances(c, &mut e, |e, a| {
        let x = g.closed_neighborhood(a);
        let y = VertexSet::full(g.order()).difference(&x);
        let hx = g.induced_subgraph(&x).graph;
        let hy = g.induced_subgraph(&y).graph;
        let ax = exact_alpha(&hx, c.cfg.alpha_guard).exact().ok_or("alpha(G[X])")? as i64;
        let ay = exact_alpha(&hy, c.cfg.alpha_guard).exact().ok_or("alpha(G[V-X])")? as i64;
        let mx = maximum_matching(&hx).size() as i64;
        let my = maximum_matching(&hy).size() as i64;
        let ke = ax + mx == x.len() as i64;
        let small = ay <= my;
        let split = mx + my == mu;
        if ke && small && split {
            return Ok(true);
        }
        e.num("alpha_GX", ax).num("mu_GX", mx).num("X", x.len() as i64);
        e.num("alpha_GVX", ay).num("mu_GVX", my).num("mu", mu);
        e.claim("GX_koenig_egervary", ke);
        e.claim("alpha_GVX_le_mu_GVX", small);
        e.claim("mu_splits", split);
        Ok(false)
    });
    e.finish(id)
}

fn c7(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let Some(alpha) = c.alpha() else {
        e.unavailable("alpha");
        return e.finish(id);
    };
    e.num("dc", c.dc).num("alpha", alpha).num("mu", c.mu());
    e.claim("dc_ge_alpha_minus_mu", c.dc >= alpha - c.mu());
    e.finish(id)
}

fn c8(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let g = c.g;
    let j = c.j().clone();
    let x = g.closed_neighborhood(&j);
    let y = VertexSet::full(g.order()).difference(&x);
    let hx = g.induced_subgraph(&x).graph;
    let hy = g.induced_subgraph(&y).graph;
    let guard = c.cfg.alpha_guard;
    let (Some(alpha), Some(ax), Some(ay)) = (
        c.alpha(),
        exact_alpha(&hx, guard).exact().map(|a| a as i64),
        exact_alpha(&hy, guard).exact().map(|a| a as i64),
    ) else {
        e.unavailable("alpha");
        return e.finish(id);
    };
    let alpha_c = j.len() as i64;
    let mx = maximum_matching(&hx).size() as i64;
    e.set("J", &j).num("alpha", alpha).num("alpha_GX", ax).num("alpha_GVX", ay);
    e.num("alpha_c", alpha_c).num("mu_GX", mx).num("X", x.len() as i64);
    e.claim("J_critical_independent", g.is_independent(&j) && g.difference(&j) == c.dc);
    if c.n() <= c.cfg.oracle.subset_limit {
        if let Some(t) = c.table() {
            let oracle = t.critical_independent_sets().iter().map(|s| s.count_ones()).max().unwrap_or(0) as i64;
            e.num("oracle_alpha_c", oracle);
            e.claim("J_maximum", oracle == alpha_c);
        }
    }
    e.claim("alpha_splits", alpha == ax + ay);
    e.claim("alpha_equals_alpha_c_plus_rest", alpha == alpha_c + ay);
    e.claim("GX_koenig_egervary", ax + mx == x.len() as i64);
    e.finish(id)
}

fn c9(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let g = c.g;
    let n = c.n();
    // supermodularity
    let mut pairs: Vec<(VertexSet, VertexSet)> = Vec::new();
    if n <= 6 {
        for a in 0..1u128 << n {
            for b in 0..1u128 << n {
                pairs.push((VertexSet::from_mask(a), VertexSet::from_mask(b)));
            }
        }
    } else {
        let mut rng = Rng::new(c.cfg.seed);
        for _ in 0..c.cfg.supermodular_pairs {
            let mut draw = || -> VertexSet { g.vertices().filter(|_| rng.next_u64() >> 63 == 1).collect() };
            let a = draw();
            let b = draw();
            pairs.push((a, b));
        }
    }
    e.num("supermodular_pairs", pairs.len() as i64);
    for (a, b) in &pairs {
        let lhs = g.difference(&a.union(b)) + g.difference(&a.intersection(b));
        let rhs = g.difference(a) + g.difference(b);
        if lhs < rhs {
            e.set("A", a).set("B", b).num("lhs", lhs).num("rhs", rhs);
            e.claim("supermodular", false);
            return e.finish(id);
        }
    }
    // lattice closure and ker as intersection
    match c.table().filter(|_| c.pairs_ok()) {
        Some(t) => {
            let dc = t.dc();
            let crit = t.critical_sets();
            e.num("critical_sets", crit.len() as i64);
            for (i, &a) in crit.iter().enumerate() {
                for &b in &crit[i..] {
                    if t.difference(a | b) != dc || t.difference(a & b) != dc {
                        e.set("A", &VertexSet::from_mask(a as u128)).set("B", &VertexSet::from_mask(b as u128));
                        e.claim("union_critical", t.difference(a | b) == dc);
                        e.claim("intersection_critical", t.difference(a & b) == dc);
                        return e.finish(id);
                    }
                }
            }
            let full = ((1u64 << n) - 1) as u32;
            let all = VertexSet::from_mask(crit.iter().fold(full, |acc, &x| acc & x) as u128);
            let ind = t.critical_independent_sets().iter().fold(full, |acc, &x| acc & x);
            let ind = VertexSet::from_mask(ind as u128);
            e.set("ker", &c.ker).set("meet_critical_sets", &all).set("meet_critical_independent_sets", &ind);
            e.claim("ker_is_meet_of_critical_sets", all == c.ker && ind == c.ker);
        }
        None => e.unavailable("lattice closure and ker identity (oracle)"),
    }
    e.finish(id)
}

/// `(n, zeta, alpha, xi, eps, dc, alpha - mu)` when `Ω(G)` is available.
struct Chain {
    n: i64,
    zeta: i64,
    alpha: i64,
    xi: i64,
    eps: i64,
    dc: i64,
    am: i64,
}

fn chain(c: &Cache) -> Option<Chain> {
    let om = c.omega()?;
    Some(Chain {
        n: c.n() as i64,
        zeta: om.zeta() as i64,
        alpha: om.alpha as i64,
        xi: om.xi() as i64,
        eps: c.ker.len() as i64,
        dc: c.dc,
        am: om.alpha as i64 - c.mu(),
    })
}

fn chain_witness(e: &mut Eval, ch: &Chain) {
    e.num("n", ch.n).num("zeta", ch.zeta).num("alpha", ch.alpha).num("xi", ch.xi);
    e.num("eps", ch.eps).num("dc", ch.dc).num("alpha_minus_mu", ch.am);
}

fn c10(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let Some(ch) = chain(c) else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    chain_witness(&mut e, &ch);
    e.claim(
        "chain",
        ch.n >= ch.zeta && ch.zeta >= ch.alpha && ch.alpha >= ch.xi && ch.xi >= ch.eps && ch.eps >= ch.dc && ch.dc >= ch.am,
    );
    e.claim("xi_ge_alpha_minus_mu_plus_eps_minus_dc", ch.xi >= ch.am + ch.eps - ch.dc);
    e.finish(id)
}

fn c11(id: CheckId, c: &Cache) -> CheckResult {
    if c.dc == 0 {
        return skipped(id, SkipReason::HypothesisFalse, "requires d_c > 0");
    }
    if c.g.has_isolated_vertices() {
        return skipped(id, SkipReason::HypothesisFalse, "requires no isolated vertices");
    }
    let mut e = Eval::new(c.g);
    let Some(ch) = chain(c) else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    chain_witness(&mut e, &ch);
    e.claim("eps_gt_dc", ch.eps > ch.dc);
    e.claim("dc_ge_alpha_minus_mu", ch.dc >= ch.am);
    e.claim("alpha_minus_mu_ge_1", ch.am >= 1);
    e.claim("xi_gt_alpha_minus_mu_plus_eps_minus_dc", ch.xi > ch.am + ch.eps - ch.dc);
    e.finish(id)
}

fn c12(id: CheckId, c: &Cache) -> CheckResult {
    if c.dc == 0 {
        return skipped(id, SkipReason::HypothesisFalse, "requires an independent S with |S| > |N(S)|");
    }
    if c.g.has_isolated_vertices() {
        return skipped(id, SkipReason::AssumptionViolated, "isolated vertices (K1 alone has xi = d_c = 1)");
    }
    let mut e = Eval::new(c.g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    e.set("S", &c.witness).num("xi", om.xi() as i64).num("dc", c.dc);
    e.claim("xi_gt_dc", om.xi() as i64 > c.dc);
    e.finish(id)
}

fn c13(id: CheckId, c: &Cache) -> CheckResult {
    let g = c.g;
    if c.n() < 2 || !g.is_connected() || !g.is_bipartite() {
        return skipped(id, SkipReason::HypothesisFalse, "requires a connected bipartite graph with n >= 2");
    }
    let mut e = Eval::new(g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    e.text("class", if g.is_tree() { "tree" } else { "connected bipartite" });
    e.set("core", &om.core).num("xi", om.xi() as i64);
    e.claim("xi_ne_1", om.xi() != 1);
    e.finish(id)
}

fn c14(id: CheckId, c: &Cache) -> CheckResult {
    let pend = c.g.pendant_vertices();
    if pend.is_empty() {
        return skipped(id, SkipReason::HypothesisFalse, "no pendant vertices");
    }
    let mut e = Eval::new(c.g);
    let maximum: Vec<VertexSet> = match (c.table(), c.scan()) {
        (Some(t), _) => {
            let sets = t.critical_independent_sets();
            let top = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
            sets.into_iter().filter(|s| s.count_ones() == top).map(|s| VertexSet::from_mask(s as u128)).collect()
        }
        (None, Some(scan)) => scan.maximum.clone(),
        (None, None) => {
            e.unavailable("oracle maximum critical independent sets");
            return e.finish(id);
        }
    };
    let top = maximum.first().map_or(0, VertexSet::len);
    e.set("pendant", &pend).num("alpha_c", top as i64).num("maximum_critical_independent_sets", maximum.len() as i64);
    if let Some(bad) = maximum.iter().find(|s| !pend.is_subset(s)) {
        e.set("J", bad).set("missing", &pend.difference(bad));
        e.claim("pendant_in_every_J", false);
    }
    e.finish(id)
}

fn c15(id: CheckId, c: &Cache) -> CheckResult {
    if !c.g.is_connected() || c.g.has_isolated_vertices() {
        return skipped(id, SkipReason::HypothesisFalse, "requires a connected graph without isolated vertices");
    }
    let mut e = Eval::new(c.g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    let am = om.alpha as i64 - c.mu();
    if am <= 0 {
        return skipped(id, SkipReason::HypothesisFalse, "requires alpha > mu");
    }
    e.num("xi", om.xi() as i64).num("alpha", om.alpha as i64).num("mu", c.mu());
    e.claim("xi_gt_alpha_minus_mu", om.xi() as i64 > am);
    e.finish(id)
}

fn c16(id: CheckId, c: &Cache) -> CheckResult {
    if c.g.has_isolated_vertices() {
        return skipped(id, SkipReason::AssumptionViolated, "isolated vertices (K1 has alpha = 1 > 1/2, xi = 1)");
    }
    let mut e = Eval::new(c.g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    let (n, alpha, xi) = (c.n() as i64, om.alpha as i64, om.xi() as i64);
    // alpha > (n + k - 1) / 2  <=>  k < 2 alpha - n + 1
    let kmax = 2 * alpha - n;
    if kmax < 1 {
        return skipped(id, SkipReason::HypothesisFalse, "no k >= 1 with alpha > (n+k-1)/2");
    }
    e.num("n", n).num("alpha", alpha).num("xi", xi).num("k_max", kmax);
    for k in 1..=kmax {
        let need = if (n + k - 1) % 2 == 0 { k + 2 } else { k + 1 };
        if xi < need {
            e.num("k", k).num("required_xi", need);
            e.claim("xi_bound", false);
            break;
        }
    }
    e.finish(id)
}

fn c17(id: CheckId, c: &Cache) -> CheckResult {
    let mut e = Eval::new(c.g);
    let Some(om) = c.omega() else {
        e.unavailable("Omega(G)");
        return e.finish(id);
    };
    e.set("ker", &c.ker).set("core", &om.core);
    e.claim("ker_subset_core", c.ker.is_subset(&om.core));
    e.finish(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::tree;

    fn outcome(r: &VerificationReport, k: u8) -> Outcome {
        r.result(CheckId::new(k).unwrap()).unwrap().outcome
    }

    #[test]
    fn check_ids_round_trip() {
        assert_eq!(CheckId::ALL.len(), 17);
        assert_eq!("C11".parse::<CheckId>().unwrap().to_string(), "C11");
        assert!("C18".parse::<CheckId>().is_err());
        assert!("X1".parse::<CheckId>().is_err());
        assert_eq!(parse_check_list("C10, C1,C10").unwrap(), vec![CheckId(1), CheckId(10)]);
    }

    #[test]
    fn g2_passes_including_strict_ker_in_core() {
        let g = fixtures::graph("G2").unwrap();
        let r = run_checks("G2", &g, &VerifyConfig::default());
        let bad: Vec<_> = r.results.iter().filter(|x| x.outcome != Outcome::Pass && x.skip_reason != Some(SkipReason::HypothesisFalse)).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let c17 = r.result(CheckId(17)).unwrap();
        assert_eq!(c17.witness.get("ker"), Some(&Value::Set(vec!["x".into(), "y".into()])));
        assert_eq!(c17.witness.get("core"), Some(&Value::Set(vec!["x".into(), "y".into(), "z".into()])));
    }

    #[test]
    fn k2_skips_non_quasi_regularizable_checks() {
        let g = fixtures::graph("K2").unwrap();
        let r = run_checks("K2", &g, &VerifyConfig::default());
        for k in [11, 12] {
            let res = r.result(CheckId(k)).unwrap();
            assert_eq!(res.outcome, Outcome::Skipped);
            assert_eq!(res.skip_reason, Some(SkipReason::HypothesisFalse));
        }
        let fails: Vec<_> = r.failures().map(|f| f.check.number()).collect();
        assert_eq!(fails, [14]);
    }

    #[test]
    fn tree_15_seed_7_c13() {
        let g = tree(15, 7).unwrap();
        let r = run_checks("tree", &g, &VerifyConfig::default());
        assert_eq!(outcome(&r, 13), Outcome::Pass);
    }

    #[test]
    fn strictness_fails_on_k23_with_witness() {
        // xi = eps = 3 and alpha - mu = d_c = 1, so xi > alpha-mu+eps-d_c reads 3 > 3.
        let g = fixtures::graph("K23").unwrap();
        let r = run_checks("K23", &g, &VerifyConfig::default());
        let c11 = r.result(CheckId(11)).unwrap();
        assert_eq!(c11.outcome, Outcome::Fail);
        assert_eq!(c11.witness.get("xi_gt_alpha_minus_mu_plus_eps_minus_dc"), Some(&Value::Bool(false)));
        assert_eq!(c11.witness.get("eps_gt_dc"), Some(&Value::Bool(true)));
        assert_eq!(outcome(&r, 10), Outcome::Pass);
    }

    #[test]
    fn pendant_claim_fails_on_k2() {
        // {a} and {b} are both maximum critical independent sets.
        let g = fixtures::graph("K2").unwrap();
        let r = run_checks("K2", &g, &VerifyConfig::default());
        let c14 = r.result(CheckId(14)).unwrap();
        assert_eq!(c14.outcome, Outcome::Fail);
        assert_eq!(c14.witness.get("J"), Some(&Value::Set(vec!["a".into()])));
        assert_eq!(c14.witness.get("missing"), Some(&Value::Set(vec!["b".into()])));
    }

    #[test]
    fn guard_trips_become_skips() {
        let g = fixtures::graph("Gfig3").unwrap();
        let cfg = VerifyConfig {
            enumeration_guard: Guard {
                max_vertices: 5,
                max_nodes: 10,
            },
            ..VerifyConfig::default()
        };
        let r = run_checks("Gfig3", &g, &cfg);
        let c17 = r.result(CheckId(17)).unwrap();
        assert_eq!(c17.outcome, Outcome::Skipped);
        assert_eq!(c17.skip_reason, Some(SkipReason::GuardExceeded));
    }

    #[test]
    fn scan_stands_in_for_the_subset_table() {
        let g = fixtures::graph("Gfig3").unwrap();
        let small = OracleBudget {
            subset_limit: 10,
            matching_limit: 10,
        };
        let cfg = VerifyConfig {
            checks: vec![CheckId(1), CheckId(14)],
            oracle: small,
            ..VerifyConfig::default()
        };
        let r = run_checks("Gfig3", &g, &cfg);
        assert!(r.results.iter().all(|x| x.outcome == Outcome::Pass));
        let c14 = r.result(CheckId(14)).unwrap();
        assert_eq!(c14.witness.get("alpha_c"), Some(&Value::Int(4)));

        let starved = VerifyConfig { scan_nodes: 5, ..cfg };
        let r = run_checks("Gfig3", &g, &starved);
        assert!(r.results.iter().all(|x| x.skip_reason == Some(SkipReason::GuardExceeded)));
    }

    #[test]
    fn deterministic_json() {
        let g = fixtures::graph("G3").unwrap();
        let a = serde_json::to_string(&run_checks("G3", &g, &VerifyConfig::default())).unwrap();
        let b = serde_json::to_string(&run_checks("G3", &g, &VerifyConfig::default())).unwrap();
        assert_eq!(a, b);
    }
}
