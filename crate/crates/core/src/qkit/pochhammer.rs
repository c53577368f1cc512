//! q-Pochhammer symbols (a;q)_n for a = ±q^c, finite and truncated-infinite,
//! plus the closed-form Pochhammer-ratio factorizations the seed identities use.

use crate::error::{Error, Result};
use crate::exactalg::{coeff, QPoly, QSeries};

/// Number of factors in a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// (±q^c; q^d)_n: sign picks a = +q^c or a = -q^c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochhammerSpec {
    pub sign: i8,
    pub offset: u32,
    pub step: u32,
    pub len: Length,
}

impl PochhammerSpec {
    pub fn new(sign: i8, offset: u32, step: u32, len: Length) -> Self {
        assert!(sign == 1 || sign == -1);
        assert!(step >= 1);
        PochhammerSpec { sign, offset, step, len }
    }

    pub fn finite(sign: i8, offset: u32, step: u32, n: u32) -> Self {
        PochhammerSpec::new(sign, offset, step, Length::Finite(n))
    }

    pub fn infinite(sign: i8, offset: u32, step: u32) -> Self {
        PochhammerSpec::new(sign, offset, step, Length::Infinite)
    }
}

/// Exact product for a finite spec; the empty product is 1.
pub fn pochhammer_finite(spec: &PochhammerSpec) -> QPoly {
    let n = match spec.len {
        Length::Finite(n) => n,
        Length::Infinite => panic!("pochhammer_finite requires a finite length"),
    };
    let mut p = QPoly::one();
    let c = coeff::cint(-(spec.sign as i64));
    for k in 0..n {
        let e = (spec.offset + k * spec.step) as usize;
        if e == 0 {
            // (1 -+ q^0): either the zero polynomial or the constant 2.
            p = p.scale(&(coeff::one() + &c));
        } else {
            p.mul_binomial(&c, e);
        }
    }
    p
}

/// Truncated infinite product; factors beyond the order cannot affect it.
pub fn pochhammer_infinite(spec: &PochhammerSpec, order: usize) -> Result<QSeries> {
    if spec.sign == 1 && spec.offset == 0 {
        return Err(Error::DivergentSpec);
    }
    let mut s = QSeries::one(order);
    let c = coeff::cint(-(spec.sign as i64));
    let mut k = 0u32;
    loop {
        let e = (spec.offset as usize) + (k as usize) * (spec.step as usize);
        if e > order {
            break;
        }
        if e == 0 {
            s = s.scale(&coeff::cint(2));
        } else {
            s.mul_binomial(&c, e);
        }
        k += 1;
    }
    Ok(s)
}

/// (q^base; q^base)_n as an exact polynomial.
pub fn poch_qq(n: u32, base: u32) -> QPoly {
    pochhammer_finite(&PochhammerSpec::finite(1, base, base, n))
}

/// prod_{i=from..=to} (1 - q^(base*i)); empty when from > to.
pub fn poch_qq_range(base: u32, from: u32, to_inclusive: u32) -> QPoly {
    let mut p = QPoly::one();
    let m1 = coeff::cint(-1);
    let mut i = from.max(1);
    while i <= to_inclusive {
        p.mul_binomial(&m1, (base * i) as usize);
        i += 1;
    }
    p
}

/// (q^base; q^base)_inf truncated at the order.
pub fn poch_qq_infinite(base: u32, order: usize) -> QSeries {
    pochhammer_infinite(&PochhammerSpec::infinite(1, base, base), order)
        .expect("positive offset")
}

/// (-1;q^3)_n / (-1;q)_n = prod_{k=1}^{n-1} (1 - q^k + q^(2k)).
pub fn ratio_neg_one(n: u32) -> QPoly {
    let mut p = QPoly::one();
    for k in 1..n {
        let k = k as usize;
        let mut factor = vec![coeff::zero(); 2 * k + 1];
        factor[0] = coeff::one();
        factor[k] = coeff::cint(-1);
        factor[2 * k] = coeff::one();
        p = &p * &QPoly::from_coeffs(factor);
    }
    p
}

/// (q^3;q^6)_n / (q;q^2)_n = prod_{k=1}^{n} (1 + q^(2k-1) + q^(2(2k-1))).
pub fn ratio_q3_q6(n: u32) -> QPoly {
    let mut p = QPoly::one();
    for k in 1..=n {
        let e = 2 * (k as usize) - 1;
        let mut factor = vec![coeff::zero(); 2 * e + 1];
        factor[0] = coeff::one();
        factor[e] = coeff::one();
        factor[2 * e] = coeff::one();
        p = &p * &QPoly::from_coeffs(factor);
    }
    p
}

/// (q^3;q^3)_n / (q;q)_n = prod_{k=1}^{n} (1 + q^k + q^(2k)).
pub fn ratio_cubic(n: u32) -> QPoly {
    let mut p = QPoly::one();
    for k in 1..=n {
        let k = k as usize;
        let mut factor = vec![coeff::zero(); 2 * k + 1];
        factor[0] = coeff::one();
        factor[k] = coeff::one();
        factor[2 * k] = coeff::one();
        p = &p * &QPoly::from_coeffs(factor);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_cases() {
        // (q;q)_0 = 1
        assert_eq!(pochhammer_finite(&PochhammerSpec::finite(1, 1, 1, 0)), QPoly::one());
        // (-1;q)_2 = 2 + 2q
        assert_eq!(
            pochhammer_finite(&PochhammerSpec::finite(-1, 0, 1, 2)),
            QPoly::from_ints(&[2, 2])
        );
        // (q^3;q^6)_1 = 1 - q^3
        assert_eq!(
            pochhammer_finite(&PochhammerSpec::finite(1, 3, 6, 1)),
            QPoly::from_ints(&[1, 0, 0, -1])
        );
    }

    #[test]
    fn infinite_cases() {
        // Euler: (q;q)_inf = 1 - q - q^2 + q^5 + ...
        let s = pochhammer_infinite(&PochhammerSpec::infinite(1, 1, 1), 5).unwrap();
        let expect = QSeries::from_poly(&QPoly::from_ints(&[1, -1, -1, 0, 0, 1]), 5);
        assert_eq!(s, expect);

        // (q;q^2)_inf at order 0 is 1.
        let s = pochhammer_infinite(&PochhammerSpec::infinite(1, 1, 2), 0).unwrap();
        assert_eq!(s, QSeries::one(0));

        assert_eq!(
            pochhammer_infinite(&PochhammerSpec::infinite(1, 0, 1), 5),
            Err(Error::DivergentSpec)
        );
    }

    #[test]
    fn ratios_match_exact_division() {
        for n in 0..=30u32 {
            // (-1;q^3)_n / (-1;q)_n
            let num = pochhammer_finite(&PochhammerSpec::finite(-1, 0, 3, n));
            let den = pochhammer_finite(&PochhammerSpec::finite(-1, 0, 1, n));
            assert_eq!(num.exact_div(&den).unwrap(), ratio_neg_one(n), "neg-one ratio n={n}");

            // (q^3;q^6)_n / (q;q^2)_n
            let num = pochhammer_finite(&PochhammerSpec::finite(1, 3, 6, n));
            let den = pochhammer_finite(&PochhammerSpec::finite(1, 1, 2, n));
            assert_eq!(num.exact_div(&den).unwrap(), ratio_q3_q6(n), "q3q6 ratio n={n}");

            // (q^3;q^3)_n / (q;q)_n
            let num = poch_qq(n, 3);
            let den = poch_qq(n, 1);
            assert_eq!(num.exact_div(&den).unwrap(), ratio_cubic(n), "cubic ratio n={n}");
        }
    }
}
