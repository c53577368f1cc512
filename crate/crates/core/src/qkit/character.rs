//! The Legendre symbol mod 3 and its exact Eisenstein-integer realization
//! (j/3) = (w^j - wbar^j) / (w - wbar) with w a primitive cube root of unity.

/// (j/3): +1 on j = 1 mod 3, -1 on j = -1 mod 3, 0 on j = 0 mod 3.
pub fn legendre3(j: i64) -> i64 {
    match j.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// a + b*w with w^2 = -1 - w.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    /// w itself.
    pub const OMEGA: EisensteinInt = EisensteinInt::new(0, 1);

    /// wbar = w^2 = -1 - w (also 1/w).
    pub const OMEGA_BAR: EisensteinInt = EisensteinInt::new(-1, -1);

    pub fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: self.a * rhs.a - self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a - self.b * rhs.b,
        }
    }

    pub fn sub(self, rhs: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a - rhs.a, self.b - rhs.b)
    }

    /// w^j for any integer j; w has order 3, so the exponent reduces mod 3.
    pub fn pow_unit(self, j: i64) -> EisensteinInt {
        debug_assert!(self == EisensteinInt::OMEGA);
        let mut acc = EisensteinInt::new(1, 0);
        for _ in 0..j.rem_euclid(3) {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by (w - wbar) = 1 + 2w; panics if not divisible.
    pub fn div_w_minus_wbar(self) -> i64 {
        // (c + dw)(1 + 2w) = (c - 2d) + (2c - d)w  =>  solve for c, d.
        let d_num = self.b - 2 * self.a;
        assert!(d_num % 3 == 0, "not divisible by w - wbar");
        let d = d_num / 3;
        let c = self.a + 2 * d;
        assert!(d == 0, "quotient is not a rational integer: {c} + {d}w");
        c
    }
}

/// (w^j - wbar^j) / (w - wbar), evaluated exactly in the Eisenstein ring.
pub fn eisenstein_chi(j: i64) -> i64 {
    let wj = EisensteinInt::OMEGA.pow_unit(j);
    let wbj = EisensteinInt::OMEGA.pow_unit(-j);
    wj.sub(wbj).div_w_minus_wbar()
}
