//! The coefficient field: exact arbitrary-precision rationals.
//!
//! All identities handled by this crate have integer coefficients; rationals
//! only appear transiently (division by 2 from `(-1;q)_n` factors, series
//! inversion with non-unit constant term). `num::BigRational` already keeps
//! values in lowest terms with a positive denominator, so it is used directly.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Coeff = BigRational;

/// Coefficient from an integer.
pub fn cint(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficient from a numerator/denominator pair.
pub fn crat(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_zero(c: &Coeff) -> bool {
    c.is_zero()
}

pub fn zero() -> Coeff {
    Coeff::zero()
}

pub fn one() -> Coeff {
    Coeff::one()
}

/// True if the coefficient is an integer.
pub fn is_integer(c: &Coeff) -> bool {
    c.denom().is_one()
}

/// Decimal rendering of the numerator, used by the CLI serializers.
pub fn numer_string(c: &Coeff) -> String {
    c.numer().to_string()
}

pub fn denom_string(c: &Coeff) -> String {
    c.denom().to_string()
}

/// Compact human-readable form: integers print without the denominator.
pub fn display(c: &Coeff) -> String {
    if is_integer(c) {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn is_negative(c: &Coeff) -> bool {
    c.is_negative()
}
