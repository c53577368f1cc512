//! Bilateral theta-type sums: sum over j of weight(j) · q^(e(j)) with a
//! quadratic exponent, an optional alternating sign, and an optional shifted
//! Legendre character mod 3.

use super::character::legendre3;
use crate::error::{Error, Result};
use crate::exactalg::{coeff, QSeries};
use serde::Serialize;

/// e(j) = (a2·j^2 + a1·j + a0) / den, den >= 1, a2 >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadExp {
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
    pub den: i64,
}

impl QuadExp {
    pub fn new(a2: i64, a1: i64, a0: i64, den: i64) -> Self {
        assert!(den >= 1 && a2 >= 1);
        QuadExp { a2, a1, a0, den }
    }

    pub fn numerator_at(&self, j: i64) -> i64 {
        self.a2 * j * j + self.a1 * j + self.a0
    }

    /// Exact integer value; fails on fractional exponents.
    pub fn eval(&self, j: i64) -> Result<i64> {
        let num = self.numerator_at(j);
        if num.rem_euclid(self.den) != 0 {
            return Err(Error::NonIntegralExponent { j });
        }
        Ok(num.div_euclid(self.den))
    }

    /// The exponent after re-indexing j -> -j.
    pub fn reflected(&self) -> QuadExp {
        QuadExp { a1: -self.a1, ..*self }
    }

    /// Add quad·j^2 + lin·j (integer coefficients in q-units).
    pub fn bumped(&self, quad: i64, lin: i64) -> QuadExp {
        QuadExp {
            a2: self.a2 + quad * self.den,
            a1: self.a1 + lin * self.den,
            ..*self
        }
    }
}

/// Optional alternating-sign weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum SignRule {
    #[default]
    None,
    /// (-1)^j
    AltJ,
    /// (-1)^(j+1)
    AltJPlus1,
}

impl SignRule {
    pub fn eval(&self, j: i64) -> i64 {
        let alt = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        match self {
            SignRule::None => 1,
            SignRule::AltJ => alt,
            SignRule::AltJPlus1 => -alt,
        }
    }
    // (-1)^(-j) = (-1)^j, so reflection leaves the rule unchanged.
}

/// Shifted Legendre character: ((shift + s·j)/3) with s = -1 when negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharSpec {
    pub shift: i64,
    pub negated: bool,
}

impl CharSpec {
    pub fn new(shift: i64, negated: bool) -> Self {
        CharSpec { shift, negated }
    }

    pub fn eval(&self, j: i64) -> i64 {
        let arg = if self.negated { self.shift - j } else { self.shift + j };
        legendre3(arg)
    }

    pub fn reflected(&self) -> CharSpec {
        CharSpec { negated: !self.negated, ..*self }
    }
}

/// Combined term weight at index j.
pub fn theta_weight(sign: SignRule, character: Option<&CharSpec>, j: i64) -> i64 {
    let chi = character.map_or(1, |c| c.eval(j));
    if chi == 0 {
        return 0;
    }
    chi * sign.eval(j)
}

/// Sum over all j with e(j) <= order of weight(j)·q^(e(j)).
///
/// The exponent is convex with positive leading coefficient, so scanning
/// outward from the vertex and stopping once the exponent exceeds the order
/// on each side is exhaustive.
pub fn theta_sum(
    exponent: &QuadExp,
    sign: SignRule,
    character: Option<&CharSpec>,
    order: usize,
) -> Result<QSeries> {
    let mut s = QSeries::zero(order);
    let bound = (order as i64) * exponent.den;
    // Integer minimizer of the exponent; scans away from it are monotone.
    let mut vertex = (-exponent.a1).div_euclid(2 * exponent.a2);
    if exponent.numerator_at(vertex + 1) < exponent.numerator_at(vertex) {
        vertex += 1;
    }

    let mut add = |j: i64| -> Result<bool> {
        if exponent.numerator_at(j) > bound {
            return Ok(false);
        }
        let w = theta_weight(sign, character, j);
        if w != 0 {
            let e = exponent.eval(j)?;
            if e < 0 {
                return Err(Error::NegativeExponent { j });
            }
            s.add_term(&coeff::cint(w), e as usize);
        }
        Ok(true)
    };

    let mut j = vertex;
    while add(j)? {
        j -= 1;
    }
    let mut j = vertex + 1;
    while add(j)? {
        j += 1;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QPoly;

    #[test]
    fn plain_squares() {
        // sum q^(j^2), order 4: 1 + 2q + 2q^4
        let s = theta_sum(&QuadExp::new(1, 0, 0, 1), SignRule::None, None, 4).unwrap();
        assert_eq!(s, QSeries::from_poly(&QPoly::from_ints(&[1, 2, 0, 0, 2]), 4));
    }

    #[test]
    fn odd_character_even_exponent_vanishes() {
        // weight (j/3) is odd, exponent j^2 even: everything cancels.
        let s = theta_sum(
            &QuadExp::new(1, 0, 0, 1),
            SignRule::None,
            Some(&CharSpec::new(0, false)),
            4,
        )
        .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn shifted_character_with_sign() {
        // weight ((j+1)/3)·(-1)^j, exponent j^2, order 4.
        // j=0: +1; j=1: -(2/3)=+1? ((1+1)/3) = -1 times (-1)^1 = +1;
        // j=-1: ((0)/3)=0; j=2: (3/3)=0; j=-2: ((-1)/3)=-1 times (+1) = -1.
        let s = theta_sum(
            &QuadExp::new(1, 0, 0, 1),
            SignRule::AltJ,
            Some(&CharSpec::new(1, false)),
            4,
        )
        .unwrap();
        assert_eq!(s, QSeries::from_poly(&QPoly::from_ints(&[1, 1, 0, 0, -1]), 4));
    }

    #[test]
    fn fractional_exponent_rejected() {
        // e(j) = j^2/2 is fractional at odd j; the downward scan hits j=-1 first.
        let err = theta_sum(&QuadExp::new(1, 0, 0, 2), SignRule::None, None, 4);
        assert_eq!(err, Err(Error::NonIntegralExponent { j: -1 }));
    }
}
