//! Laurent polynomials in a second variable x with exact QPoly coefficients.

use super::qpoly::QPoly;
use std::fmt;

/// Laurent polynomial in x; coeffs[i] is the QPoly at x^(min_pow + i).
/// Leading and trailing zero entries are trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XLaurentPoly {
    min_pow: i64,
    coeffs: Vec<QPoly>,
}

impl XLaurentPoly {
    pub fn zero() -> Self {
        XLaurentPoly::default()
    }

    pub fn one() -> Self {
        XLaurentPoly::term(QPoly::one(), 0)
    }

    /// p · x^pow.
    pub fn term(p: QPoly, pow: i64) -> Self {
        XLaurentPoly {
            min_pow: pow,
            coeffs: vec![p],
        }
        .trimmed()
    }

    pub fn from_parts(min_pow: i64, coeffs: Vec<QPoly>) -> Self {
        XLaurentPoly { min_pow, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(p) if p.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|p| p.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_pow += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_pow = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Inclusive x-power range, None when zero.
    pub fn x_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.min_pow, self.min_pow + self.coeffs.len() as i64 - 1))
        }
    }

    /// Coefficient of x^pow.
    pub fn x_coeff(&self, pow: i64) -> QPoly {
        let idx = pow - self.min_pow;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            QPoly::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn add(&self, rhs: &XLaurentPoly) -> XLaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_pow.min(rhs.min_pow);
        let max = (self.min_pow + self.coeffs.len() as i64)
            .max(rhs.min_pow + rhs.coeffs.len() as i64);
        let mut coeffs = vec![QPoly::zero(); (max - min) as usize];
        for (i, p) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_pow - min) as usize + i] = p.clone();
        }
        for (i, p) in rhs.coeffs.iter().enumerate() {
            let idx = (rhs.min_pow - min) as usize + i;
            coeffs[idx] = &coeffs[idx] + p;
        }
        XLaurentPoly { min_pow: min, coeffs }.trimmed()
    }

    pub fn mul(&self, rhs: &XLaurentPoly) -> XLaurentPoly {
        self.mul_impl(rhs, None)
    }

    /// Product with every QPoly coefficient truncated at q-order `q_order`.
    /// Valid for mod-q^(order+1) work when all inputs have non-negative
    /// q-exponents, since truncation then commutes with multiplication.
    pub fn mul_trunc(&self, rhs: &XLaurentPoly, q_order: usize) -> XLaurentPoly {
        self.mul_impl(rhs, Some(q_order))
    }

    fn mul_impl(&self, rhs: &XLaurentPoly, q_order: Option<usize>) -> XLaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return XLaurentPoly::zero();
        }
        let min = self.min_pow + rhs.min_pow;
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs = vec![QPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut prod = a * b;
                if let Some(n) = q_order {
                    prod = prod.truncated(n);
                }
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        if let Some(n) = q_order {
            for p in &mut coeffs {
                *p = p.truncated(n);
            }
        }
        XLaurentPoly { min_pow: min, coeffs }.trimmed()
    }

    /// Truncate every coefficient at q-order `q_order`.
    pub fn truncated_q(&self, q_order: usize) -> XLaurentPoly {
        XLaurentPoly {
            min_pow: self.min_pow,
            coeffs: self.coeffs.iter().map(|p| p.truncated(q_order)).collect(),
        }
        .trimmed()
    }

    /// First (x-power, q-exponent) at which the two differ.
    pub fn first_mismatch(&self, rhs: &XLaurentPoly) -> Option<(i64, usize)> {
        let lo = self.min_pow.min(rhs.min_pow);
        let hi = (self.min_pow + self.coeffs.len() as i64)
            .max(rhs.min_pow + rhs.coeffs.len() as i64);
        for pow in lo..hi {
            if let Some(e) = self.x_coeff(pow).first_mismatch(&rhs.x_coeff(pow)) {
                return Some((pow, e));
            }
        }
        None
    }
}

impl fmt::Debug for XLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "XLaurent[0]");
        }
        write!(f, "XLaurent[")?;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            write!(f, " ({})*x^{}", p, self.min_pow + i as i64)?;
        }
        write!(f, " ]")
    }
}

impl fmt::Display for XLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let pow = self.min_pow + i as i64;
            if pow == 0 {
                write!(f, "({})", p)?;
            } else {
                write!(f, "({})*x^{}", p, pow)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(pow: i64) -> XLaurentPoly {
        XLaurentPoly::term(QPoly::one(), pow)
    }

    #[test]
    fn difference_of_squares() {
        // (x + x^-1)(x - x^-1) = x^2 - x^-2
        let a = x(1).add(&x(-1));
        let b = x(1).add(&XLaurentPoly::term(QPoly::from_ints(&[-1]), -1));
        let expect = x(2).add(&XLaurentPoly::term(QPoly::from_ints(&[-1]), -2));
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn mul_identity() {
        let a = x(2).add(&XLaurentPoly::term(QPoly::from_ints(&[0, 3]), -1));
        assert_eq!(a.mul(&XLaurentPoly::one()), a);
    }

    #[test]
    fn commutes() {
        let xq = XLaurentPoly::term(QPoly::q_power(1), 1);
        let qx = XLaurentPoly::term(QPoly::q_power(1), 1);
        assert_eq!(xq.mul(&qx), qx.mul(&xq));
    }
}
