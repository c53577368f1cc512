//! The identity catalog: every statement the engine verifies, with both sides
//! as independent evaluators, plus the parameter sweeps a standard
//! verification run covers.

pub mod catalog;
pub mod seeds;

pub use catalog::catalog;
pub use seeds::{LimitProduct, SeedId};

use crate::error::{Error, Result};
use crate::exactalg::{coeff, QPoly, QSeries, XLaurentPoly, DEFAULT_ORDER};
use serde::Serialize;
use std::sync::Arc;
use std::time::Instant;

/// Parameter ranges for a standard verification run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RunConfig {
    pub l_max: i64,
    pub v_max: u32,
    pub order: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { l_max: 25, v_max: 3, order: DEFAULT_ORDER }
    }
}

/// A concrete evaluation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    pub l: i64,
    pub v: u32,
    pub n: i64,
    pub m: i64,
    pub order: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params { l: 0, v: 1, n: 0, m: 0, order: DEFAULT_ORDER }
    }
}

/// What an evaluator returns.
#[derive(Clone, Debug)]
pub enum Value {
    Poly(QPoly),
    Series(QSeries),
    Laurent(XLaurentPoly),
    Ints(Vec<i64>),
}

/// First disagreement between two evaluations, with exact coefficients
/// rendered as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Value {
    pub fn diff(&self, rhs: &Value) -> Option<Mismatch> {
        match (self, rhs) {
            (Value::Poly(a), Value::Poly(b)) => a.first_mismatch(b).map(|e| Mismatch {
                location: format!("q^{e}"),
                lhs: coeff::display(&a.coeff(e)),
                rhs: coeff::display(&b.coeff(e)),
            }),
            (Value::Series(a), Value::Series(b)) => a.first_mismatch(b).map(|e| Mismatch {
                location: format!("q^{e}"),
                lhs: coeff::display(&a.coeff(e)),
                rhs: coeff::display(&b.coeff(e)),
            }),
            (Value::Laurent(a), Value::Laurent(b)) => a.first_mismatch(b).map(|(xp, e)| Mismatch {
                location: format!("x^{xp} q^{e}"),
                lhs: coeff::display(&a.x_coeff(xp).coeff(e)),
                rhs: coeff::display(&b.x_coeff(xp).coeff(e)),
            }),
            (Value::Ints(a), Value::Ints(b)) => {
                if a.len() != b.len() {
                    return Some(Mismatch {
                        location: "length".into(),
                        lhs: a.len().to_string(),
                        rhs: b.len().to_string(),
                    });
                }
                a.iter().zip(b).position(|(x, y)| x != y).map(|i| Mismatch {
                    location: format!("index {i}"),
                    lhs: a[i].to_string(),
                    rhs: b[i].to_string(),
                })
            }
            _ => Some(Mismatch {
                location: "shape".into(),
                lhs: self.kind_name().into(),
                rhs: rhs.kind_name().into(),
            }),
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Value::Poly(_) => "polynomial",
            Value::Series(_) => "series",
            Value::Laurent(_) => "laurent",
            Value::Ints(_) => "integers",
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::Series(s) => write!(f, "{s}"),
            Value::Laurent(x) => write!(f, "{x}"),
            Value::Ints(v) => write!(f, "{v:?}"),
        }
    }
}

/// What kind of object both sides evaluate to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Polynomial,
    Laurent,
    Series,
    IntegerSequence,
}

/// The parameter grid a standard run sweeps for one identity.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sweep {
    /// l = 0..=min(cap, cfg.l_max).
    L { cap: i64 },
    /// n, m = 0..=min(cap, cfg.l_max) independently.
    Nm { cap: i64 },
    /// v = 1..=cfg.v_max crossed with l = 0..=min(cap, cfg.l_max).
    LByV { cap: i64 },
    /// v = 1..=cfg.v_max at series order cfg.order.
    V,
    /// A single fixed v at series order cfg.order.
    VFixed { v: u32 },
    /// One check at series order cfg.order.
    Series,
    /// Integer window n = radius, evaluated over j in [-radius, radius].
    JWindow { radius: i64 },
}

impl Sweep {
    pub fn param_sets(&self, cfg: &RunConfig) -> Vec<Params> {
        let base = Params { order: cfg.order, ..Params::default() };
        match *self {
            Sweep::L { cap } => (0..=cap.min(cfg.l_max)).map(|l| Params { l, ..base }).collect(),
            Sweep::Nm { cap } => {
                let top = cap.min(cfg.l_max);
                let mut out = Vec::new();
                for n in 0..=top {
                    for m in 0..=top {
                        out.push(Params { n, m, ..base });
                    }
                }
                out
            }
            Sweep::LByV { cap } => {
                let mut out = Vec::new();
                for v in 1..=cfg.v_max {
                    for l in 0..=cap.min(cfg.l_max) {
                        out.push(Params { l, v, ..base });
                    }
                }
                out
            }
            Sweep::V => (1..=cfg.v_max).map(|v| Params { v, ..base }).collect(),
            Sweep::VFixed { v } => vec![Params { v, ..base }],
            Sweep::Series => vec![base],
            Sweep::JWindow { radius } => vec![Params { n: radius, ..base }],
        }
    }
}

pub type Evaluator = Arc<dyn Fn(&Params) -> Result<Value> + Send + Sync>;

pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: Kind,
    /// Where the statement is on record.
    pub citation: &'static str,
    /// Normalization conventions and provenance relative to the citation.
    pub notes: &'static str,
    pub sweep: Sweep,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

/// Evaluator-free view of a record, for catalog export.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: Kind,
    pub citation: &'static str,
    pub notes: &'static str,
    pub sweep: Sweep,
}

impl From<&IdentityRecord> for CatalogEntry {
    fn from(r: &IdentityRecord) -> Self {
        CatalogEntry {
            id: r.id,
            title: r.title,
            kind: r.kind,
            citation: r.citation,
            notes: r.notes,
            sweep: r.sweep,
        }
    }
}

/// Outcome of one evaluation point.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Params,
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
    pub millis: u128,
}

pub fn check_record(record: &IdentityRecord, params: &Params) -> Result<CheckResult> {
    let start = Instant::now();
    let lhs = (record.lhs)(params)?;
    let rhs = (record.rhs)(params)?;
    let mismatch = lhs.diff(&rhs);
    Ok(CheckResult {
        id: record.id.to_string(),
        params: *params,
        pass: mismatch.is_none(),
        mismatch,
        millis: start.elapsed().as_millis(),
    })
}

/// Run a record over its standard sweep.
pub fn verify_record(record: &IdentityRecord, cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    record
        .sweep
        .param_sets(cfg)
        .iter()
        .map(|p| check_record(record, p))
        .collect()
}

pub fn find(records: &[IdentityRecord], id: &str) -> Result<usize> {
    records
        .iter()
        .position(|r| r.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_respect_config_caps() {
        let cfg = RunConfig { l_max: 5, v_max: 2, order: 10 };
        assert_eq!(Sweep::L { cap: 40 }.param_sets(&cfg).len(), 6);
        assert_eq!(Sweep::L { cap: 3 }.param_sets(&cfg).len(), 4);
        assert_eq!(Sweep::Nm { cap: 40 }.param_sets(&cfg).len(), 36);
        assert_eq!(Sweep::LByV { cap: 40 }.param_sets(&cfg).len(), 12);
        assert_eq!(Sweep::V.param_sets(&cfg).len(), 2);
        assert_eq!(Sweep::Series.param_sets(&cfg)[0].order, 10);
    }

    #[test]
    fn value_diff_reports_location() {
        let a = Value::Poly(QPoly::from_ints(&[1, 2, 3]));
        let b = Value::Poly(QPoly::from_ints(&[1, 2, 4]));
        let m = a.diff(&b).unwrap();
        assert_eq!(m.location, "q^2");
        assert_eq!((m.lhs.as_str(), m.rhs.as_str()), ("3", "4"));
        assert!(a.diff(&a.clone()).is_none());
    }

    #[test]
    fn shape_mismatch_is_reported_not_hidden() {
        let a = Value::Poly(QPoly::one());
        let b = Value::Ints(vec![1]);
        assert_eq!(a.diff(&b).unwrap().location, "shape");
    }
}
