//! Closed-form alpha-sequences: character factor, sign factor, quadratic
//! exponent in the summation index, and the base the binomial kernel lives in.

use crate::error::Result;
use crate::exactalg::QSeries;
use crate::qkit::theta::{theta_sum, theta_weight, CharSpec, QuadExp, SignRule};
use serde::Serialize;

/// alpha_j = character(j) · sign(j) · q^(exponent(j)), with the q-binomial
/// kernel in the variable q^base. The exponent is in plain-q units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaSpec {
    pub character: Option<CharSpec>,
    pub sign: SignRule,
    pub exponent: QuadExp,
    pub base: u32,
}

impl AlphaSpec {
    pub fn new(character: Option<CharSpec>, sign: SignRule, exponent: QuadExp, base: u32) -> Self {
        assert!(base >= 1);
        AlphaSpec { character, sign, exponent, base }
    }

    /// The integer weight multiplying q^(exponent(j)).
    pub fn weight(&self, j: i64) -> i64 {
        theta_weight(self.sign, self.character.as_ref(), j)
    }

    pub fn exponent_at(&self, j: i64) -> Result<i64> {
        self.exponent.eval(j)
    }

    /// Re-index j -> -j (moves a [.. choose L+j] slot to [.. choose L-j]).
    pub fn reflected(&self) -> AlphaSpec {
        AlphaSpec {
            character: self.character.map(|c| c.reflected()),
            sign: self.sign, // (-1)^(-j) = (-1)^j
            exponent: self.exponent.reflected(),
            base: self.base,
        }
    }

    /// One lemma application: multiply alpha_j by (q^base)^(j^2 + a·j).
    pub fn bumped(&self, a: u8) -> AlphaSpec {
        AlphaSpec {
            exponent: self.exponent.bumped(self.base as i64, self.base as i64 * a as i64),
            ..*self
        }
    }

    /// The bilateral sum of alpha_j q^(exponent(j)) truncated at the order.
    pub fn theta_series(&self, order: usize) -> Result<QSeries> {
        theta_sum(&self.exponent, self.sign, self.character.as_ref(), order)
    }
}
