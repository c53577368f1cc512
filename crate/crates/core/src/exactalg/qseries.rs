//! Truncated formal power series in q, coefficient-exact up to a stated order.

use super::coeff::{self, Coeff};
use super::qpoly::QPoly;
use crate::error::{Error, Result};
use num::Zero;
use std::fmt;

/// Power series known exactly for exponents 0..=order.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<Coeff>, // length order + 1
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![coeff::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = coeff::one();
        s
    }

    pub fn constant(c: Coeff, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_poly(p: &QPoly, order: usize) -> Self {
        let mut s = QSeries::zero(order);
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, exp: usize) -> Coeff {
        self.coeffs.get(exp).cloned().unwrap_or_else(coeff::zero)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> QSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        QSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut s = QSeries::zero(order);
        for i in 0..=order {
            s.coeffs[i] = &self.coeffs[i] + &rhs.coeffs[i];
        }
        s
    }

    pub fn sub(&self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut s = QSeries::zero(order);
        for i in 0..=order {
            s.coeffs[i] = &self.coeffs[i] - &rhs.coeffs[i];
        }
        s
    }

    pub fn scale(&self, c: &Coeff) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Add c·q^exp in place; exponents beyond the order are dropped.
    pub fn add_term(&mut self, c: &Coeff, exp: usize) {
        if exp <= self.order {
            self.coeffs[exp] += c;
        }
    }

    /// Add q^shift · p in place, truncating at the order.
    pub fn add_shifted_poly(&mut self, p: &QPoly, shift: usize) {
        for (i, c) in p.coeffs().iter().enumerate() {
            if shift + i > self.order {
                break;
            }
            self.coeffs[shift + i] += c;
        }
    }

    /// Product truncated at min(self.order, rhs.order).
    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut s = QSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                s.coeffs[i + j] += a * b;
            }
        }
        s
    }

    pub fn mul_poly(&self, p: &QPoly) -> QSeries {
        let mut s = QSeries::zero(self.order);
        for (j, b) in p.coeffs().iter().enumerate().take(self.order + 1) {
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate().take(self.order + 1 - j) {
                if a.is_zero() {
                    continue;
                }
                s.coeffs[i + j] += a * b;
            }
        }
        s
    }

    /// In-place multiplication by the sparse factor (1 + c·q^k), k >= 1.
    pub fn mul_binomial(&mut self, c: &Coeff, k: usize) {
        if c.is_zero() || k > self.order {
            return;
        }
        for i in (0..=self.order - k).rev() {
            let add = &self.coeffs[i] * c;
            self.coeffs[i + k] += add;
        }
    }

    /// Multiplicative inverse to the series order.
    pub fn inv(&self) -> Result<QSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertible);
        }
        let c0 = self.coeffs[0].clone();
        let mut out = QSeries::zero(self.order);
        out.coeffs[0] = coeff::one() / &c0;
        for n in 1..=self.order {
            let mut acc = coeff::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = -acc / &c0;
        }
        Ok(out)
    }

    /// q -> q^k, exponent-wise; the result keeps the same order.
    pub fn substitute_power(&self, k: i64) -> Result<QSeries> {
        if k < 1 {
            return Err(Error::InvalidExponent(k));
        }
        let k = k as usize;
        let mut s = QSeries::zero(self.order);
        for i in 0..=self.order / k {
            s.coeffs[i * k] = self.coeffs[i].clone();
        }
        Ok(s)
    }

    /// Coefficient-wise equality up to the min of the two orders.
    pub fn agrees_with(&self, rhs: &QSeries) -> bool {
        self.first_mismatch(rhs).is_none()
    }

    /// First exponent (<= min order) where the two series differ.
    pub fn first_mismatch(&self, rhs: &QSeries) -> Option<usize> {
        let order = self.order.min(rhs.order);
        (0..=order).find(|&i| self.coeffs[i] != rhs.coeffs[i])
    }

    /// Compare against a polynomial up to the given order.
    pub fn first_mismatch_poly(&self, p: &QPoly, up_to: usize) -> Option<usize> {
        let order = self.order.min(up_to);
        (0..=order).find(|&i| self.coeffs[i] != p.coeff(i))
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = QPoly::from_coeffs(self.coeffs[..self.order.min(12) + 1].to_vec());
        write!(f, "QSeries[{} + O(q^{})]", head, self.order + 1)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = QPoly::from_coeffs(self.coeffs.clone());
        write!(f, "{} + O(q^{})", head, self.order + 1)
    }
}
