//! Bailey pair states and the special lemma step.
//!
//! A state holds a = 0|1, an alpha-sequence in closed form, and the finite
//! side F(L) defined by F(L) = sum_j alpha_j [2L+a choose L-j] in the state's
//! base. Seeds provide F(L) as a closed-form polynomial; each lemma step
//! replaces F by the weighted r-sum and bumps the alpha exponent by j^2 + a·j
//! (in base units).

use super::alpha::AlphaSpec;
use crate::error::{Error, Result};
use crate::exactalg::QPoly;
use crate::qkit::{poch_qq_range, qbinom};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub type ClosedForm = Arc<dyn Fn(i64) -> QPoly + Send + Sync>;

/// Which binomial slot a raw identity uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// [2L+a choose L+j]; re-indexed by j -> -j at ingestion.
    LPlusJ,
    /// [2L+a choose L-j]; already canonical.
    LMinusJ,
}

/// A raw identity as read off the page: a closed form for the binomial-sum
/// value, the alpha weights in whichever slot the display uses, and a = 0|1.
#[derive(Clone)]
pub struct SeedDescriptor {
    pub slot: Slot,
    pub alpha: AlphaSpec,
    pub a: u8,
    pub closed_form: ClosedForm,
}

#[derive(Clone)]
pub struct BaileyState {
    a: u8,
    alpha: AlphaSpec,
    depth: u32,
    seed: ClosedForm,
    memo: Arc<Mutex<HashMap<(u32, i64), Arc<QPoly>>>>,
}

/// Per-L outcome of checking the defining relation.
#[derive(Clone, Debug)]
pub struct StateCheck {
    pub l: i64,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct StateReport {
    pub checks: Vec<StateCheck>,
}

impl StateReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl BaileyState {
    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn base(&self) -> u32 {
        self.alpha.base
    }

    pub fn alpha(&self) -> &AlphaSpec {
        &self.alpha
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Replace the alpha spec, keeping F. Only meaningful for negative tests
    /// (a corrupted alpha must make verification fail).
    pub fn with_alpha(&self, alpha: AlphaSpec) -> BaileyState {
        BaileyState { alpha, ..self.clone() }
    }

    /// The finite side F(L) at this state's depth.
    pub fn f(&self, l: i64) -> Arc<QPoly> {
        assert!(l >= 0);
        // Fill bottom-up so the lock is only held briefly per entry.
        for d in 0..=self.depth {
            for r in 0..=l {
                let key = (d, r);
                if self.memo.lock().unwrap().contains_key(&key) {
                    continue;
                }
                let value = if d == 0 {
                    (self.seed)(r)
                } else {
                    self.step_sum(d - 1, r)
                };
                self.memo.lock().unwrap().insert(key, Arc::new(value));
            }
        }
        self.memo.lock().unwrap()[&(self.depth, l)].clone()
    }

    /// sum_{r=0..L} q_b^(r^2+ar) (q_b;q_b)_{2L+a} / ((q_b)_{L-r} (q_b)_{2r+a})
    /// · F_prev(r), written with the binomial kernel pulled out so every
    /// factor is an exact polynomial.
    fn step_sum(&self, prev_depth: u32, l: i64) -> QPoly {
        let a = self.a as i64;
        let b = self.base();
        let mut acc = QPoly::zero();
        for r in 0..=l {
            let prev = self.memo.lock().unwrap()[&(prev_depth, r)].clone();
            if prev.is_zero() {
                continue;
            }
            let kernel = qbinom(2 * l + a, l - r, b);
            let cofactor = poch_qq_range(b, (2 * r + a + 1) as u32, (l + r + a) as u32);
            let shift = (b as i64 * (r * r + a * r)) as usize;
            let term = (&(&kernel * &cofactor) * &prev).shifted(shift);
            acc = &acc + &term;
        }
        acc
    }

    /// The binomial-kernel side sum_j alpha_j [2L+a choose L-j], computed
    /// independently of F.
    pub fn alpha_side(&self, l: i64) -> Result<QPoly> {
        alpha_binomial_sum(&self.alpha, self.a, l)
    }

    /// Check F(L) = sum_j alpha_j [2L+a choose L-j] for L = 0..=l_max.
    pub fn verify(&self, l_max: i64) -> Result<StateReport> {
        let mut report = StateReport::default();
        for l in 0..=l_max {
            let lhs = self.f(l);
            let rhs = self.alpha_side(l)?;
            let first_mismatch = lhs.first_mismatch(&rhs);
            report.checks.push(StateCheck {
                l,
                pass: first_mismatch.is_none(),
                first_mismatch,
            });
        }
        Ok(report)
    }
}

/// sum_j alpha_j q^(e(j)) [2L+a choose L-j] in the alpha's base.
pub fn alpha_binomial_sum(alpha: &AlphaSpec, a: u8, l: i64) -> Result<QPoly> {
    let a = a as i64;
    let mut acc = QPoly::zero();
    for j in -(l + a)..=l {
        let w = alpha.weight(j);
        if w == 0 {
            continue;
        }
        let e = alpha.exponent_at(j)?;
        if e < 0 {
            return Err(Error::NegativeExponent { j });
        }
        let kernel = qbinom(2 * l + a, l - j, alpha.base);
        let term = kernel.shifted(e as usize).scale(&crate::exactalg::coeff::cint(w));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Ingest a raw identity: re-index into the canonical [2L+a choose L-j] slot
/// and check the defining relation at the probe values L = 0..=2.
pub fn canonicalize_seed(raw: &SeedDescriptor) -> Result<BaileyState> {
    let alpha = match raw.slot {
        Slot::LPlusJ => raw.alpha.reflected(),
        Slot::LMinusJ => raw.alpha,
    };
    let state = BaileyState {
        a: raw.a,
        alpha,
        depth: 0,
        seed: raw.closed_form.clone(),
        memo: Arc::new(Mutex::new(HashMap::new())),
    };
    for l in 0..=2 {
        let lhs = state.f(l);
        let rhs = state.alpha_side(l)?;
        if *lhs != rhs {
            return Err(Error::ConventionMismatch { l });
        }
    }
    Ok(state)
}

/// One application of the special lemma.
pub fn bailey_step(state: &BaileyState) -> BaileyState {
    BaileyState {
        alpha: state.alpha.bumped(state.a),
        depth: state.depth + 1,
        ..state.clone()
    }
}

/// Iterate the lemma v times.
pub fn bailey_chain(state: &BaileyState, v: u32) -> BaileyState {
    let mut s = state.clone();
    for _ in 0..v {
        s = bailey_step(&s);
    }
    s
}
