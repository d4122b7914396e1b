//! The single-graph analysis report behind `critsets analyze`.

use std::fmt::{self, Write as _};

use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

use crate::critical::{independent_part, ker_slow, max_critical_independent_set, CriticalStructure};
use crate::graph::{Graph, VertexSet};
use crate::matching::maximum_matching;
use crate::mis::{enumerate_maximum_independent_sets, exact_alpha, greedy_independent_set, Alpha, Guard};
use crate::oracle::{self, OracleBudget};

pub const SCHEMA: u32 = 1;

/// `α_c` is only computed up to this order (it runs one matching per vertex).
pub const ALPHA_C_LIMIT: usize = 1000;

/// A value that may have been withheld; serializes as `"unavailable"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Maybe<T> {
    Known(T),
    Unavailable,
}

impl<T> Maybe<T> {
    pub fn known(&self) -> Option<&T> {
        match self {
            Maybe::Known(v) => Some(v),
            Maybe::Unavailable => None,
        }
    }
}

impl<T: Serialize> Serialize for Maybe<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Maybe::Known(v) => v.serialize(s),
            Maybe::Unavailable => s.serialize_str("unavailable"),
        }
    }
}

/// `α` as a number, or `[lower, upper]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaField(pub Alpha);

impl Serialize for AlphaField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Alpha::Exact(a) => s.serialize_u64(a as u64),
            Alpha::Bounds { lower, upper } => [lower, upper].serialize(s),
        }
    }
}

/// Brute-force values next to the fast ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSection {
    pub dc: usize,
    pub ker: Vec<String>,
    pub alpha: usize,
    pub mu: usize,
    pub alpha_c: usize,
    pub quasi_regularizable: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub isolated_vertices: bool,
    pub alpha: AlphaField,
    pub mu: usize,
    pub dc: usize,
    pub idc: i64,
    pub ker: Vec<String>,
    pub epsilon: usize,
    pub core: Maybe<Vec<String>>,
    pub xi: Maybe<usize>,
    pub corona: Maybe<Vec<String>>,
    pub zeta: Maybe<usize>,
    pub koenig_egervary: Maybe<bool>,
    pub quasi_regularizable: bool,
    pub critical_independent_set: Vec<String>,
    pub alpha_c: Maybe<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Maybe<OracleSection>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub alpha_guard: Guard,
    pub enumeration_guard: Guard,
    /// Enumerate `Ω(G)` for core and corona.
    pub core: bool,
    pub oracle: Option<OracleBudget>,
    /// Recompute `ker` vertex by vertex and compare.
    pub cross_check: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            alpha_guard: Guard::ALPHA,
            enumeration_guard: Guard::ENUMERATION,
            core: true,
            oracle: None,
            cross_check: false,
        }
    }
}

/// An internal consistency check failed; the report cannot be trusted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant breach: {0}")]
pub struct InvariantBreach(pub String);

pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport, InvariantBreach> {
    let n = g.order();
    let s = CriticalStructure::new(g);
    let dc = s.critical_difference();
    let ker = s.ker();
    let witness = independent_part(g, &s.maximum_critical_set());
    let idc = g.difference(&witness);
    if idc != dc as i64 || !g.is_independent(&witness) {
        return Err(InvariantBreach(format!("witness has difference {idc}, d_c = {dc}")));
    }
    if opts.cross_check {
        let slow = ker_slow(g);
        if slow != ker {
            return Err(InvariantBreach(format!(
                "ker_fast = {:?} but ker_slow = {:?}",
                g.labels_of(&ker),
                g.labels_of(&slow)
            )));
        }
    }
    let mu = maximum_matching(g).size();

    let omega = if opts.core {
        enumerate_maximum_independent_sets(g, opts.enumeration_guard).ok()
    } else {
        None
    };
    let alpha = match &omega {
        Some(om) => Alpha::Exact(om.alpha),
        None if opts.core => exact_alpha(g, opts.alpha_guard),
        // without core work only the polynomial bounds are reported
        None => Alpha::Bounds {
            lower: greedy_independent_set(g).len(),
            upper: n - mu,
        },
    };
    let koenig_egervary = match alpha {
        Alpha::Exact(a) => Maybe::Known(a + mu == n),
        Alpha::Bounds { lower, .. } if lower + mu == n => Maybe::Known(true),
        Alpha::Bounds { .. } => Maybe::Unavailable,
    };
    let alpha_c = if n <= ALPHA_C_LIMIT {
        Maybe::Known(max_critical_independent_set(g).len())
    } else {
        Maybe::Unavailable
    };

    let oracle = opts.oracle.map(|b| oracle_section(g, b, dc, &ker, &alpha, mu, &alpha_c));

    let labels = |x: &VertexSet| g.labels_of(x);
    let report = AnalysisReport {
        schema: SCHEMA,
        n,
        m: g.size(),
        isolated_vertices: g.has_isolated_vertices(),
        alpha: AlphaField(alpha),
        mu,
        dc,
        idc,
        ker: labels(&ker),
        epsilon: ker.len(),
        core: omega.as_ref().map_or(Maybe::Unavailable, |om| Maybe::Known(labels(&om.core))),
        xi: omega.as_ref().map_or(Maybe::Unavailable, |om| Maybe::Known(om.xi())),
        corona: omega.as_ref().map_or(Maybe::Unavailable, |om| Maybe::Known(labels(&om.corona))),
        zeta: omega.as_ref().map_or(Maybe::Unavailable, |om| Maybe::Known(om.zeta())),
        koenig_egervary,
        quasi_regularizable: dc == 0,
        critical_independent_set: labels(&witness),
        alpha_c,
        oracle,
    };
    if let Some(bad) = report.chain_violation() {
        return Err(InvariantBreach(bad));
    }
    Ok(report)
}

fn oracle_section(
    g: &Graph,
    b: OracleBudget,
    dc: usize,
    ker: &VertexSet,
    alpha: &Alpha,
    mu: usize,
    alpha_c: &Maybe<usize>,
) -> Maybe<OracleSection> {
    let run = || -> Result<OracleSection, oracle::OracleError> {
        let odc = oracle::oracle_dc(g, b)?;
        let oker = oracle::oracle_ker(g, b)?;
        let oalpha = oracle::oracle_alpha(g, b)?;
        let omu = oracle::oracle_mu(g, b)?;
        let oac = oracle::oracle_max_critical_independent_sets(g, b)?[0].len();
        let oqr = oracle::oracle_quasi_regularizable(g, b)?;
        let agrees = odc == dc
            && &oker == ker
            && alpha.exact().is_none_or(|a| a == oalpha)
            && omu == mu
            && alpha_c.known().is_none_or(|&a| a == oac)
            && oqr == (dc == 0);
        Ok(OracleSection {
            dc: odc,
            ker: g.labels_of(&oker),
            alpha: oalpha,
            mu: omu,
            alpha_c: oac,
            quasi_regularizable: oqr,
            agrees,
        })
    };
    run().map_or(Maybe::Unavailable, Maybe::Known)
}

impl AnalysisReport {
    /// `n ≥ ζ ≥ α ≥ ξ ≥ ε ≥ d_c ≥ α−μ` over the values that are known.
    pub fn chain(&self) -> [Option<i64>; 7] {
        let alpha = self.alpha.0.exact().map(|a| a as i64);
        [
            Some(self.n as i64),
            self.zeta.known().map(|&z| z as i64),
            alpha,
            self.xi.known().map(|&x| x as i64),
            Some(self.epsilon as i64),
            Some(self.dc as i64),
            alpha.map(|a| a - self.mu as i64),
        ]
    }

    /// Describes the first adjacent pair of known chain values that is out
    /// of order.
    pub fn chain_violation(&self) -> Option<String> {
        let c = self.chain();
        for i in 0..c.len() - 1 {
            if let (Some(a), Some(b)) = (c[i], c[i + 1]) {
                if a < b {
                    return Some(format!("chain position {i}: {a} < {b}"));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn show_set(s: &[String]) -> String {
    format!("{{{}}}", s.join(", "))
}

fn show<T: fmt::Display>(m: &Maybe<T>) -> String {
    match m {
        Maybe::Known(v) => v.to_string(),
        Maybe::Unavailable => "unavailable".to_string(),
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(
            f,
            "n = {}, m = {}{}",
            self.n,
            self.m,
            if self.isolated_vertices { " (has isolated vertices)" } else { "" }
        )?;
        let alpha = match self.alpha.0 {
            Alpha::Exact(a) => a.to_string(),
            Alpha::Bounds { lower, upper } => format!("[{lower}, {upper}]"),
        };
        writeln!(f, "α = {alpha}, μ = {}, d_c = {}, id_c = {}", self.mu, self.dc, self.idc)?;
        writeln!(f, "ker = {}  ε = {}", show_set(&self.ker), self.epsilon)?;
        match (&self.core, &self.corona) {
            (Maybe::Known(core), Maybe::Known(corona)) => {
                writeln!(f, "core = {}  ξ = {}", show_set(core), show(&self.xi))?;
                writeln!(f, "corona = {}  ζ = {}", show_set(corona), show(&self.zeta))?;
            }
            _ => writeln!(f, "core, corona: unavailable")?,
        }
        writeln!(f, "critical independent set = {}", show_set(&self.critical_independent_set))?;
        writeln!(f, "α_c = {}", show(&self.alpha_c))?;
        let ke = self.koenig_egervary.known().map_or("unavailable", |&b| yes(b));
        writeln!(f, "König–Egerváry: {ke}, quasi-regularizable: {}", yes(self.quasi_regularizable))?;
        let mut nums = String::new();
        for (i, v) in self.chain().iter().enumerate() {
            if i > 0 {
                nums.push_str(" ≥ ");
            }
            match v {
                Some(v) => write!(nums, "{v}")?,
                None => nums.push('?'),
            }
        }
        writeln!(f, "n ≥ ζ ≥ α ≥ ξ ≥ ε ≥ d_c ≥ α−μ")?;
        writeln!(f, "{nums}")?;
        if let Some(o) = &self.oracle {
            match o {
                Maybe::Known(o) => writeln!(
                    f,
                    "oracle: d_c = {}, ker = {}, α = {}, μ = {}, α_c = {} ({})",
                    o.dc,
                    show_set(&o.ker),
                    o.alpha,
                    o.mu,
                    o.alpha_c,
                    if o.agrees { "agrees" } else { "DISAGREES" }
                )?,
                Maybe::Unavailable => writeln!(f, "oracle: over budget")?,
            }
        }
        Ok(())
    }
}
