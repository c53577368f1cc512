//! The quintuple product
//!   Q(q, z) = (q, -z, -q/z; q)_inf (q/z^2, z^2 q; q^2)_inf
//!           = sum_k (-1)^k q^((3k^2-k)/2) z^(3k) (1 + z q^k),
//! specialized to q -> q^base and z -> z_sign·q^z_pow, with both sides
//! computed independently as truncated series.

use crate::error::{Error, Result};
use crate::exactalg::{coeff, QSeries};

/// A specialization Q(q^base, z_sign·q^z_pow).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuintupleSpec {
    pub base: u32,
    pub z_sign: i8,
    pub z_pow: i64,
}

impl QuintupleSpec {
    pub fn new(base: u32, z_sign: i8, z_pow: i64) -> Self {
        assert!(z_sign == 1 || z_sign == -1);
        QuintupleSpec { base, z_sign, z_pow }
    }

    fn ill(&self) -> Error {
        Error::IllSpecialized {
            base: self.base,
            z_sign: self.z_sign,
            z_pow: self.z_pow,
        }
    }

    /// Every infinite-product factor must keep a strictly positive exponent;
    /// the only exponent-zero factor allowed is the harmless (1 + 1).
    pub fn validate(&self) -> Result<()> {
        let a = self.base as i64;
        let b = self.z_pow;
        if b < 0 || a - b < 1 || a - 2 * b < 1 {
            return Err(self.ill());
        }
        if b == 0 && self.z_sign == -1 {
            // (-z; q)_inf would contain the factor (1 - 1).
            return Err(self.ill());
        }
        Ok(())
    }
}

/// The alternating sum side, truncated at the order.
pub fn quintuple_sum(spec: &QuintupleSpec, order: usize) -> Result<QSeries> {
    spec.validate()?;
    let a = spec.base as i64;
    let b = spec.z_pow;
    let s = spec.z_sign as i64;
    let n = order as i64;
    let mut out = QSeries::zero(order);

    // With z = s·q^b the k-th term is (-1)^k z^(3k) q^((3k^2-k)a/2) (1+zq^(ak)),
    // i.e. exponent e1 = a(3k^2-k)/2 + 3bk with weight (-s)^k plus exponent
    // e2 = e1 + b + ak with weight (-s)^k · s; e2 >= e1 for k >= 0 and
    // e2 <= e1 for k <= 0, which gives the monotone stopping rules below.
    let e1 = |k: i64| a * (3 * k * k - k) / 2 + 3 * b * k;
    let sgn = |k: i64| if k.rem_euclid(2) == 0 { 1i64 } else { -s };

    let mut k = 0i64;
    loop {
        let x1 = e1(k);
        if x1 > n {
            break;
        }
        out.add_term(&coeff::cint(sgn(k)), x1 as usize);
        let x2 = x1 + b + a * k;
        if x2 <= n {
            out.add_term(&coeff::cint(sgn(k) * s), x2 as usize);
        }
        k += 1;
    }
    let mut k = -1i64;
    loop {
        let x1 = e1(k);
        let x2 = x1 + b + a * k;
        debug_assert!(x2 >= 0, "validated specializations keep exponents non-negative");
        if x2 > n {
            break;
        }
        out.add_term(&coeff::cint(sgn(k) * s), x2 as usize);
        if x1 <= n {
            out.add_term(&coeff::cint(sgn(k)), x1 as usize);
        }
        k -= 1;
    }
    Ok(out)
}

/// The five-factor product side, truncated at the order.
pub fn quintuple_product(spec: &QuintupleSpec, order: usize) -> Result<QSeries> {
    spec.validate()?;
    let a = spec.base as usize;
    let b = spec.z_pow as usize;
    let s = coeff::cint(spec.z_sign as i64);
    let m1 = coeff::cint(-1);
    let mut out = QSeries::one(order);

    let mut mul_family = |first: usize, step: usize, c: &coeff::Coeff| {
        let mut e = first;
        loop {
            if e > order {
                break;
            }
            if e == 0 {
                // Validation only lets this happen as (1 + 1).
                out = out.scale(&coeff::cint(2));
            } else {
                out.mul_binomial(c, e);
            }
            e += step;
        }
    };

    mul_family(a, a, &m1); // (q^a; q^a)_inf
    mul_family(b, a, &s); // (-z; q^a)_inf = prod (1 + s q^(b+ak))
    mul_family(a - b, a, &s); // (-q^a/z; q^a)_inf
    mul_family(a - 2 * b, 2 * a, &m1); // (q^a/z^2; q^(2a))_inf
    mul_family(a + 2 * b, 2 * a, &m1); // (z^2 q^a; q^(2a))_inf
    Ok(out)
}

/// Both sides at once.
pub fn quintuple_sides(spec: &QuintupleSpec, order: usize) -> Result<(QSeries, QSeries)> {
    Ok((quintuple_sum(spec, order)?, quintuple_product(spec, order)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_minus_one_rejected() {
        let spec = QuintupleSpec::new(1, -1, 0);
        assert!(matches!(quintuple_sides(&spec, 10), Err(Error::IllSpecialized { .. })));
    }

    #[test]
    fn constant_term() {
        // Q(q^6, -q): constant term 1 from the k=0 sum term.
        let spec = QuintupleSpec::new(6, -1, 1);
        let (sum, product) = quintuple_sides(&spec, 0).unwrap();
        assert_eq!(sum.coeff(0), coeff::one());
        assert_eq!(product.coeff(0), coeff::one());
    }

    #[test]
    fn sum_equals_product_deep() {
        for spec in [
            QuintupleSpec::new(18, 1, 3),
            QuintupleSpec::new(18, 1, 5),
            QuintupleSpec::new(18, 1, 7),
            QuintupleSpec::new(6, -1, 1),
            QuintupleSpec::new(9, -1, 2),
            QuintupleSpec::new(9, 1, 1),
        ] {
            let (sum, product) = quintuple_sides(&spec, 100).unwrap();
            assert_eq!(sum, product, "{spec:?}");
        }
    }
}
