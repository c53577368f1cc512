//! Exact dense polynomials in q over the rational coefficient field.

use super::coeff::{self, Coeff};
use crate::error::{Error, Result};
use num::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Size above which multiplication switches from schoolbook to Karatsuba.
const KARATSUBA_THRESHOLD: usize = 64;

/// Dense polynomial in q; index = exponent, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<Coeff>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Coeff, exp: usize) -> Self {
        let mut coeffs = vec![coeff::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// q^exp.
    pub fn q_power(exp: usize) -> Self {
        QPoly::monomial(coeff::one(), exp)
    }

    /// 1 + c·q^exp.
    pub fn one_plus(c: Coeff, exp: usize) -> Self {
        if exp == 0 {
            return QPoly::constant(coeff::one() + c);
        }
        let mut coeffs = vec![coeff::zero(); exp + 1];
        coeffs[0] = coeff::one();
        coeffs[exp] = c;
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integers, index = exponent.
    pub fn from_ints(ints: &[i64]) -> Self {
        QPoly::from_coeffs(ints.iter().map(|&n| coeff::cint(n)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> Coeff {
        self.coeffs.get(exp).cloned().unwrap_or_else(coeff::zero)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Coeff) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: usize) -> QPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![coeff::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// In-place multiplication by the sparse factor (1 + c·q^k), k >= 1.
    pub fn mul_binomial(&mut self, c: &Coeff, k: usize) {
        assert!(k >= 1, "sparse factor exponent must be positive");
        if self.is_zero() || c.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + k, coeff::zero());
        for i in (0..n).rev() {
            let add = &self.coeffs[i] * c;
            self.coeffs[i + k] += add;
        }
        self.trim();
    }

    /// In-place exact division by (1 + c·q^k), k >= 1.
    pub fn div_binomial(&mut self, c: &Coeff, k: usize) -> Result<()> {
        assert!(k >= 1, "sparse factor exponent must be positive");
        if self.is_zero() {
            return Ok(());
        }
        // Synthetic division: quotient coefficients in place, low to high.
        let n = self.coeffs.len();
        if n < k {
            return Err(Error::NonzeroRemainder);
        }
        for i in k..n {
            let sub = &self.coeffs[i - k] * c;
            self.coeffs[i] -= sub;
        }
        // The top k coefficients must now be zero (remainder).
        for i in n - k..n {
            if !self.coeffs[i].is_zero() {
                return Err(Error::NonzeroRemainder);
            }
        }
        self.coeffs.truncate(n - k);
        self.trim();
        Ok(())
    }

    /// Exact quotient self / b; errors if b is zero or does not divide.
    pub fn exact_div(&self, b: &QPoly) -> Result<QPoly> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let da = self.degree().unwrap();
        let db = b.degree().unwrap();
        if da < db {
            return Err(Error::NonzeroRemainder);
        }
        let lead = b.coeffs[db].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![coeff::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &rem[i + db] / &lead;
            if !c.is_zero() {
                for j in 0..=db {
                    let sub = &b.coeffs[j] * &c;
                    rem[i + j] -= sub;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// q -> q^k, exponent-wise.
    pub fn substitute_power(&self, k: i64) -> Result<QPoly> {
        if k < 1 {
            return Err(Error::InvalidExponent(k));
        }
        let k = k as usize;
        if self.is_zero() || k == 1 {
            return Ok(self.clone());
        }
        let mut coeffs = vec![coeff::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Ok(QPoly { coeffs })
    }

    /// Drop all terms with exponent > order.
    pub fn truncated(&self, order: usize) -> QPoly {
        if self.coeffs.len() <= order + 1 {
            return self.clone();
        }
        QPoly::from_coeffs(self.coeffs[..=order].to_vec())
    }

    /// First exponent at which the two polynomials differ.
    pub fn first_mismatch(&self, other: &QPoly) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeff(i) != other.coeff(i))
    }

    fn mul_schoolbook(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        let mut out = vec![coeff::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out[i + j] += ai * bj;
            }
        }
        out
    }

    fn mul_karatsuba(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
            return QPoly::mul_schoolbook(a, b);
        }
        let half = a.len().max(b.len()) / 2;
        let (a0, a1) = a.split_at(half.min(a.len()));
        let (b0, b1) = b.split_at(half.min(b.len()));

        let low = QPoly::mul_karatsuba(a0, b0);
        let mut out = vec![coeff::zero(); a.len() + b.len() - 1];
        for (i, c) in low.iter().enumerate() {
            out[i] += c;
        }
        if !a1.is_empty() && !b1.is_empty() {
            let high = QPoly::mul_karatsuba(a1, b1);
            for (i, c) in high.iter().enumerate() {
                out[2 * half + i] += c;
            }
            let asum: Vec<Coeff> = sum_parts(a0, a1);
            let bsum: Vec<Coeff> = sum_parts(b0, b1);
            let mid = QPoly::mul_karatsuba(&asum, &bsum);
            for (i, c) in mid.iter().enumerate() {
                out[half + i] += c;
            }
            for (i, c) in low.iter().enumerate() {
                out[half + i] -= c;
            }
            for (i, c) in high.iter().enumerate() {
                out[half + i] -= c;
            }
        } else {
            // One operand fits entirely in the low half.
            let (rest, off) = if a1.is_empty() { (b1, half) } else { (a1, half) };
            let small = if a1.is_empty() { a0 } else { b0 };
            if !rest.is_empty() {
                let high = QPoly::mul_karatsuba(small, rest);
                for (i, c) in high.iter().enumerate() {
                    out[off + i] += c;
                }
            }
        }
        out
    }
}

fn sum_parts(lo: &[Coeff], hi: &[Coeff]) -> Vec<Coeff> {
    let mut out = lo.to_vec();
    if out.len() < hi.len() {
        out.resize(hi.len(), coeff::zero());
    }
    for (i, c) in hi.iter().enumerate() {
        out[i] += c;
    }
    out
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), coeff::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), coeff::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(QPoly::mul_karatsuba(&self.coeffs, &rhs.coeffs))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly[{}]", self)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = super::coeff::display(c);
            let (sign, mag) = if let Some(rest) = s.strip_prefix('-') {
                ("-", rest.to_string())
            } else {
                ("+", s)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                1 if mag == "1" => write!(f, "q")?,
                1 => write!(f, "{}*q", mag)?,
                _ if mag == "1" => write!(f, "q^{}", i)?,
                _ => write!(f, "{}*q^{}", mag, i)?,
            }
        }
        Ok(())
    }
}
