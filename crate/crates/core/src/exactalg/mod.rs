//! Exact coefficient, polynomial, Laurent, and truncated-series arithmetic.
//!
//! Everything here is immutable after construction and safe to share across
//! threads; all operations are pure.

pub mod coeff;
mod qpoly;
mod qseries;
mod xlaurent;

pub use coeff::Coeff;
pub use qpoly::QPoly;
pub use qseries::QSeries;
pub use xlaurent::XLaurentPoly;

/// Default truncation order for series work.
pub const DEFAULT_ORDER: usize = 200;
