//! The nine seed identities and the hierarchy data attached to each: the
//! alpha-sequence in its display slot, the closed-form product side, the
//! multisum tail, and the quintuple-product shape of the L -> infinity limit.

use crate::bailey::{canonicalize_seed, AlphaSpec, BaileyState, ClosedForm, MultisumSpec, SeedDescriptor, Slot};
use crate::error::Result;
use crate::exactalg::{coeff, QPoly};
use crate::qkit::theta::{CharSpec, QuadExp, SignRule};
use crate::qkit::{ratio_cubic, ratio_neg_one, ratio_q3_q6, QuintupleSpec};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeedId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

/// How a chain's L -> infinity theta side factors:
/// theta = q^q_shift · Q(spec).
#[derive(Clone, Copy, Debug)]
pub struct LimitProduct {
    pub spec: QuintupleSpec,
    pub q_shift: usize,
}

impl SeedId {
    pub const ALL: [SeedId; 9] = [
        SeedId::A,
        SeedId::B,
        SeedId::C,
        SeedId::D,
        SeedId::E,
        SeedId::F,
        SeedId::G,
        SeedId::H,
        SeedId::I,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            SeedId::A => "A",
            SeedId::B => "B",
            SeedId::C => "C",
            SeedId::D => "D",
            SeedId::E => "E",
            SeedId::F => "F",
            SeedId::G => "G",
            SeedId::H => "H",
            SeedId::I => "I",
        }
    }

    pub fn a(&self) -> u8 {
        match self {
            SeedId::A | SeedId::D => 0,
            _ => 1,
        }
    }

    pub fn base(&self) -> u32 {
        match self {
            SeedId::C | SeedId::D | SeedId::E | SeedId::F => 2,
            _ => 1,
        }
    }

    /// The alpha weights exactly as displayed, together with the binomial
    /// slot the display uses.
    pub fn descriptor(&self) -> SeedDescriptor {
        let binom_j_minus_one = QuadExp::new(1, -3, 2, 2); // C(j-1, 2)
        let binom_j = QuadExp::new(1, -1, 0, 2); // C(j, 2)
        let squares = QuadExp::new(1, 0, 0, 1);
        let (slot, character, sign, exponent) = match self {
            SeedId::A | SeedId::B => {
                (Slot::LPlusJ, CharSpec::new(0, false), SignRule::None, binom_j_minus_one)
            }
            SeedId::C | SeedId::D => (Slot::LPlusJ, CharSpec::new(1, false), SignRule::AltJ, squares),
            SeedId::E => (Slot::LMinusJ, CharSpec::new(1, false), SignRule::AltJ, squares),
            SeedId::F => (Slot::LMinusJ, CharSpec::new(0, false), SignRule::AltJ, squares),
            SeedId::G => (Slot::LMinusJ, CharSpec::new(1, false), SignRule::AltJ, binom_j),
            SeedId::H => (Slot::LMinusJ, CharSpec::new(0, false), SignRule::AltJ, binom_j),
            SeedId::I => (Slot::LMinusJ, CharSpec::new(2, false), SignRule::AltJPlus1, binom_j),
        };
        SeedDescriptor {
            slot,
            alpha: AlphaSpec::new(Some(character), sign, exponent, self.base()),
            a: self.a(),
            closed_form: self.closed_form(),
        }
    }

    /// The alpha weights in the canonical [2L+a choose L-j] slot.
    pub fn canonical_alpha(&self) -> AlphaSpec {
        let d = self.descriptor();
        match d.slot {
            Slot::LPlusJ => d.alpha.reflected(),
            Slot::LMinusJ => d.alpha,
        }
    }

    /// The canonical alpha after v lemma applications.
    pub fn chain_alpha(&self, v: u32) -> AlphaSpec {
        let mut alpha = self.canonical_alpha();
        for _ in 0..v {
            alpha = alpha.bumped(self.a());
        }
        alpha
    }

    pub fn state(&self) -> Result<BaileyState> {
        canonicalize_seed(&self.descriptor())
    }

    pub fn closed_form(&self) -> ClosedForm {
        match self {
            SeedId::A => Arc::new(f_a),
            SeedId::B => Arc::new(f_b),
            SeedId::C => Arc::new(f_c),
            SeedId::D | SeedId::E => Arc::new(|l| ratio_q3_q6(l as u32)),
            SeedId::F => Arc::new(|l| ratio_q3_q6(l as u32).shifted(2 * l as usize + 1)),
            SeedId::G => Arc::new(f_g),
            SeedId::H => Arc::new(f_h),
            SeedId::I => Arc::new(f_i),
        }
    }

    pub fn multisum_spec(&self) -> MultisumSpec {
        MultisumSpec {
            base: self.base(),
            a: self.a(),
            tail: self.closed_form(),
        }
    }

    /// The quintuple-product shape of the v-fold limit's theta side, when one
    /// is on record. The one-step seeds G, H, I only carry a v = 1 shape.
    pub fn limit_product(&self, v: u32) -> Option<LimitProduct> {
        assert!(v >= 1);
        let v64 = v as i64;
        let lp = |base: i64, z_sign: i8, z_pow: i64, q_shift: usize| LimitProduct {
            spec: QuintupleSpec::new(base as u32, z_sign, z_pow),
            q_shift,
        };
        match self {
            SeedId::A => Some(lp(6 * v64 + 3, -1, 3 * v64, v as usize)),
            SeedId::B => Some(lp(6 * v64 + 3, -1, 2 * v64, 0)),
            SeedId::C => Some(lp(12 * v64 + 6, 1, 1, 0)),
            SeedId::D => Some(lp(12 * v64 + 6, 1, 2 * v64 + 1, 0)),
            SeedId::E => Some(lp(12 * v64 + 6, 1, 4 * v64 + 1, 0)),
            SeedId::F => Some(lp(12 * v64 + 6, 1, 4 * v64 + 3, 1)),
            SeedId::G if v == 1 => Some(lp(9, 1, 2, 0)),
            SeedId::H if v == 1 => Some(lp(9, 1, 4, 1)),
            SeedId::I if v == 1 => Some(lp(9, 1, 1, 0)),
            _ => None,
        }
    }
}

/// Sum of c·q^e monomials with distinct exponents.
fn sparse(terms: &[(i64, usize)]) -> QPoly {
    let mut p = QPoly::zero();
    for &(c, e) in terms {
        p = &p + &QPoly::monomial(coeff::cint(c), e);
    }
    p
}

fn f_a(l: i64) -> QPoly {
    if l == 0 {
        return QPoly::zero();
    }
    let l = l as usize;
    let mut p = &ratio_neg_one(l as u32 - 1) * &QPoly::from_ints(&[1, 1, 1]);
    p.mul_binomial(&coeff::cint(-1), l);
    p.shifted(l - 1)
}

fn f_b(l: i64) -> QPoly {
    let l = l as usize;
    let tail = sparse(&[(1, 0), (1, 1), (-1, l + 1)]);
    (&ratio_neg_one(l as u32) * &tail).shifted(l)
}

fn f_c(l: i64) -> QPoly {
    let mut p = ratio_q3_q6(l as u32);
    p.mul_binomial(&coeff::one(), 2 * l as usize + 1);
    p
}

fn f_g(l: i64) -> QPoly {
    if l == 0 {
        return QPoly::one();
    }
    let l = l as usize;
    let tail = sparse(&[(2, 0), (1, l), (1, l + 1), (-1, 2 * l + 1)]);
    &ratio_cubic(l as u32 - 1) * &tail
}

fn f_h(l: i64) -> QPoly {
    if l == 0 {
        return QPoly::q_power(1);
    }
    let l = l as usize;
    let tail = sparse(&[(-1, 0), (1, l), (1, l + 1), (2, 2 * l + 1)]);
    &ratio_cubic(l as u32 - 1) * &tail
}

fn f_i(l: i64) -> QPoly {
    if l == 0 {
        return QPoly::from_ints(&[1, 1]);
    }
    let l = l as usize;
    let tail = sparse(&[(1, 0), (2, l), (2, l + 1), (1, 2 * l + 1)]);
    &ratio_cubic(l as u32 - 1) * &tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bailey::alpha_binomial_sum;

    #[test]
    fn every_seed_canonicalizes() {
        for seed in SeedId::ALL {
            assert!(seed.state().is_ok(), "seed {}", seed.key());
        }
    }

    #[test]
    fn reflected_slot_differs_from_display_slot() {
        // For an a = 1 seed in the L+j slot the raw alpha must NOT satisfy
        // the canonical relation as-is (the summation window is asymmetric);
        // ingestion has to re-index. Seed C at L = 1 separates the two
        // conventions.
        let d = SeedId::C.descriptor();
        let raw = alpha_binomial_sum(&d.alpha, d.a, 1).unwrap();
        let canon = alpha_binomial_sum(&SeedId::C.canonical_alpha(), d.a, 1).unwrap();
        assert_ne!(raw, canon);
        assert_eq!(canon, f_c(1));
    }

    #[test]
    fn closed_forms_at_origin() {
        assert!(f_a(0).is_zero());
        assert_eq!(f_b(0), QPoly::one());
        assert_eq!(f_g(0), QPoly::one());
        assert_eq!(f_h(0), QPoly::q_power(1));
        assert_eq!(f_i(0), QPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn limit_products_validate() {
        for seed in SeedId::ALL {
            for v in 1..=4 {
                if let Some(lp) = seed.limit_product(v) {
                    lp.spec.validate().unwrap();
                }
            }
        }
    }
}
