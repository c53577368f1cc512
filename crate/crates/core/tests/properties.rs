//! Structural invariants: exact-arithmetic laws on randomized inputs, and the
//! slot/limit invariants of the chain machinery.

use proptest::prelude::*;
use qident_core::bailey::{alpha_binomial_sum, bailey_chain, multisum_lhs, multisum_lhs_with_margin, AlphaSpec};
use qident_core::exactalg::{coeff, QPoly, QSeries};
use qident_core::qkit::theta::{CharSpec, QuadExp, SignRule};
use qident_core::qkit::qbinom;
use qident_core::registry::SeedId;

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 0..8).prop_map(|v| QPoly::from_ints(&v))
}

fn alpha_spec() -> impl Strategy<Value = AlphaSpec> {
    (
        1i64..=3,
        -4i64..=4,
        prop::option::of((0i64..=2, any::<bool>())),
        prop_oneof![Just(SignRule::None), Just(SignRule::AltJ), Just(SignRule::AltJPlus1)],
        1u32..=2,
    )
        .prop_map(|(a2, a1, ch, sign, base)| {
            // Constant offset 12 keeps every exponent in the probed window
            // non-negative.
            AlphaSpec::new(
                ch.map(|(s, n)| CharSpec::new(s, n)),
                sign,
                QuadExp::new(a2, a1, 12, 1),
                base,
            )
        })
}

/// sum_j alpha_j [2L+a choose L+j]: the L+j-slot sum, written out directly.
fn plus_slot_sum(alpha: &AlphaSpec, a: u8, l: i64) -> QPoly {
    let a = a as i64;
    let mut acc = QPoly::zero();
    for j in -l..=(l + a) {
        let w = alpha.weight(j);
        if w == 0 {
            continue;
        }
        let e = alpha.exponent.eval(j).unwrap();
        let kernel = qbinom(2 * l + a, l + j, alpha.base);
        acc = &acc + &kernel.shifted(e as usize).scale(&coeff::cint(w));
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn series_inverse_roundtrips(c0 in 1i64..=5, sign in any::<bool>(), tail in prop::collection::vec(-6i64..=6, 0..10)) {
        let mut s = QSeries::constant(coeff::cint(if sign { -c0 } else { c0 }), 30);
        for (i, c) in tail.iter().enumerate() {
            s.add_term(&coeff::cint(*c), i + 1);
        }
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv), QSeries::one(30));
    }

    #[test]
    fn power_substitution_composes(p in small_poly(), k in 1i64..=3, m in 1i64..=3) {
        let stepwise = p.substitute_power(k).unwrap().substitute_power(m).unwrap();
        prop_assert_eq!(stepwise, p.substitute_power(k * m).unwrap());
    }

    #[test]
    fn slot_reflection_preserves_binomial_sums(alpha in alpha_spec(), a in 0u8..=1, l in 0i64..=5) {
        // Re-indexing j -> -j moves the L+j slot to the canonical L-j slot
        // without changing the value.
        let plus = plus_slot_sum(&alpha, a, l);
        let canonical = alpha_binomial_sum(&alpha.reflected(), a, l).unwrap();
        prop_assert_eq!(plus, canonical);
    }

    #[test]
    fn multisum_pruning_is_sound(v in 1u32..=3, margin in 1usize..=40) {
        let spec = SeedId::E.multisum_spec();
        let tight = multisum_lhs(&spec, v, 50);
        let loose = multisum_lhs_with_margin(&spec, v, 50, margin);
        prop_assert_eq!(tight, loose);
    }
}

#[test]
fn lemma_step_preserves_defining_relation() {
    for seed in SeedId::ALL {
        let state = seed.state().unwrap();
        for v in 1..=2 {
            let chained = bailey_chain(&state, v);
            for l in 0..=6 {
                let lhs = chained.f(l);
                let rhs = chained.alpha_side(l).unwrap();
                assert_eq!(*lhs, rhs, "seed {} v={v} L={l}", seed.key());
            }
        }
    }
}

#[test]
fn finite_chain_converges_to_multisum() {
    // Every binomial kernel [2L+a choose L-j] tends to 1/(q^b;q^b)_inf, so
    // F_v(L) itself must agree with the L -> infinity multisum through
    // order b*L.
    for seed in [SeedId::B, SeedId::E] {
        let state = seed.state().unwrap();
        let b = seed.base();
        for v in 1..=2 {
            let chained = bailey_chain(&state, v);
            for l in [10i64, 15] {
                let order = (b as i64 * l) as usize;
                let finite = QSeries::from_poly(&chained.f(l), order);
                let limit = multisum_lhs(&seed.multisum_spec(), v, order);
                assert!(
                    finite.truncated(order) == limit.truncated(order),
                    "seed {} v={v} L={l}",
                    seed.key()
                );
            }
        }
    }
}

#[test]
fn gaussian_binomial_symmetry() {
    for top in 0..=20i64 {
        for bottom in 0..=top {
            assert_eq!(qbinom(top, bottom, 1), qbinom(top, top - bottom, 1));
        }
    }
}
