//! The chain engine: closed-form alpha-sequences, the special lemma step,
//! pruned multisum enumeration, and L -> infinity limits.

pub mod alpha;
pub mod multisum;
pub mod state;

pub use alpha::AlphaSpec;
pub use multisum::{multisum_lhs, multisum_lhs_with_margin, MultisumSpec};
pub use state::{
    alpha_binomial_sum, bailey_chain, bailey_step, canonicalize_seed, BaileyState, ClosedForm,
    SeedDescriptor, Slot, StateCheck, StateReport,
};

use crate::error::Result;
use crate::exactalg::QSeries;
use crate::qkit::poch_qq_infinite;

/// The L -> infinity value of a state's binomial-kernel side:
/// theta(alpha) / (q_b; q_b)_inf, truncated at the order.
pub fn limit_rhs(alpha: &AlphaSpec, order: usize) -> Result<QSeries> {
    let theta = alpha.theta_series(order)?;
    let inv = poch_qq_infinite(alpha.base, order).inv()?;
    Ok(theta.mul(&inv))
}
