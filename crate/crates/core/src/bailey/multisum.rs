//! Pruned enumeration of the v-fold nested sums produced by iterating the
//! lemma, in the L -> infinity limit:
//!
//!   sum_{n_1..n_v >= 0} q_b^(sum_i N_i(N_i+a)) · tail(n_v)
//!     / ((q_b)_{n_1} ... (q_b)_{n_(v-1)} (q_b)_{2 n_v + a})
//!
//! with N_i = n_i + ... + n_v. Enumeration runs over the partial sums
//! r_i = N_i (so r_1 >= r_2 >= ... >= r_v >= 0) and prunes any branch whose
//! exponent already exceeds the truncation order.

use super::state::ClosedForm;
use crate::exactalg::{coeff, QSeries};
use crate::qkit::poch_qq;

/// The innermost-factor family of a chain's multisum.
#[derive(Clone)]
pub struct MultisumSpec {
    pub base: u32,
    pub a: u8,
    /// Numerator polynomial at the innermost index (plain-q units).
    pub tail: ClosedForm,
}

pub fn multisum_lhs(spec: &MultisumSpec, v: u32, order: usize) -> QSeries {
    multisum_lhs_with_margin(spec, v, order, 0)
}

/// Same sum, but enumerated with a deliberately enlarged exponent cutoff;
/// the extra branches cannot change coefficients <= order, which the tests
/// use as a pruning-soundness check.
pub fn multisum_lhs_with_margin(spec: &MultisumSpec, v: u32, order: usize, margin: usize) -> QSeries {
    assert!(v >= 1);
    let b = spec.base as i64;
    let a = spec.a as i64;
    let cutoff = (order + margin) as i64;

    // Largest index any branch can reach: b·r(r+a) <= cutoff.
    let mut r_max = 0i64;
    while b * (r_max + 1) * (r_max + 1 + a) <= cutoff {
        r_max += 1;
    }
    let inv_poch: Vec<QSeries> = (0..=(2 * r_max + a) as u32)
        .map(|m| {
            QSeries::from_poly(&poch_qq(m, spec.base), order)
                .inv()
                .expect("(q;q)_m has unit constant term")
        })
        .collect();

    let mut out = QSeries::zero(order);
    let one = QSeries::one(order);
    rec(spec, v, order, cutoff, &inv_poch, &mut out, 1, i64::MAX, 0, &one);
    out
}

#[allow(clippy::too_many_arguments)]
fn rec(
    spec: &MultisumSpec,
    v: u32,
    order: usize,
    cutoff: i64,
    inv_poch: &[QSeries],
    out: &mut QSeries,
    i: u32,
    r_prev: i64,
    exp_acc: i64,
    acc: &QSeries,
) {
    let b = spec.base as i64;
    let a = spec.a as i64;
    for r in 0..=r_prev {
        let e = exp_acc + b * r * (r + a);
        if e > cutoff {
            break;
        }
        // Attach the denominator factor (q_b)_{n_(i-1)} with n_(i-1) = r_prev - r.
        let acc_r = if i == 1 {
            acc.clone()
        } else {
            acc.mul(&inv_poch[(r_prev - r) as usize])
        };
        if i == v {
            if e > order as i64 {
                continue;
            }
            let tail = (spec.tail)(r);
            if tail.is_zero() {
                continue;
            }
            let term = acc_r.mul(&inv_poch[(2 * r + a) as usize]).mul_poly(&tail);
            add_shifted(out, &term, e as usize);
        } else {
            rec(spec, v, order, cutoff, inv_poch, out, i + 1, r, e, &acc_r);
        }
    }
}

fn add_shifted(out: &mut QSeries, term: &QSeries, shift: usize) {
    let order = out.order();
    for idx in 0..=order - shift {
        let c = term.coeff(idx);
        if !coeff::is_zero(&c) {
            out.add_term(&c, idx + shift);
        }
    }
}
