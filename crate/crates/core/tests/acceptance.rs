//! End-to-end acceptance gate. Each test covers one acceptance criterion and
//! prints a single PASS/FAIL line (visible with `--nocapture`).

use qident_core::bailey::{alpha_binomial_sum, multisum_lhs, MultisumSpec};
use qident_core::exactalg::{coeff, QPoly, QSeries};
use qident_core::qkit::theta::{QuadExp, SignRule};
use qident_core::qkit::{
    eisenstein_chi, legendre3, poch_qq_infinite, pochhammer_finite, qbinom, qbinom_product,
    quintuple_product, quintuple_sides, ratio_cubic, ratio_neg_one, ratio_q3_q6, PochhammerSpec,
    QuintupleSpec,
};
use qident_core::registry::{catalog, find, verify_record, RunConfig, SeedId};

fn criterion(n: u32, name: &str, pass: bool) {
    println!("ACCEPTANCE {n:02} {name}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance criterion {n} failed: {name}");
}

fn records_pass(ids: &[&str], cfg: &RunConfig) -> bool {
    let records = catalog();
    ids.iter().all(|id| {
        let record = &records[find(&records, id).unwrap()];
        verify_record(record, cfg)
            .unwrap()
            .iter()
            .all(|r| r.pass)
    })
}

/// Product route for a chain limit: q^shift · Q(spec) / (q^b; q^b)_inf.
fn product_route(seed: SeedId, v: u32, order: usize) -> QSeries {
    let lp = seed.limit_product(v).unwrap();
    let mut s = quintuple_product(&lp.spec, order).unwrap();
    if lp.q_shift > 0 {
        s = s.mul_poly(&QPoly::q_power(lp.q_shift));
    }
    s.mul(&poch_qq_infinite(seed.base(), order).inv().unwrap())
}

#[test]
fn c01_seed_identities_exact_to_l_40() {
    let cfg = RunConfig { l_max: 40, v_max: 1, order: 50 };
    let ids: Vec<String> = SeedId::ALL.iter().map(|s| format!("SEED-{}", s.key())).collect();
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    criterion(1, "nine seed identities exact for L = 0..40", records_pass(&refs, &cfg));
}

#[test]
fn c02_triple_product_analogues() {
    let cfg = RunConfig { l_max: 40, v_max: 1, order: 200 };
    criterion(
        2,
        "triple product analogue (n,m <= 12), q-binomial theorem (L <= 20), bilateral form (order 200)",
        records_pass(&["JTP-POLY", "QBT", "JTP"], &cfg),
    );
}

#[test]
fn c03_capparelli_finite_and_series() {
    let cfg = RunConfig { l_max: 25, v_max: 1, order: 200 };
    criterion(
        3,
        "Capparelli identity: finite form L = 0..25 and series form at order 200",
        records_pass(&["CAP-POLY", "CAP", "QPI-CAP"], &cfg),
    );
}

#[test]
fn c04_chain_defining_relations() {
    let cfg = RunConfig { l_max: 15, v_max: 4, order: 50 };
    criterion(
        4,
        "iterated hierarchies satisfy the defining relation for v = 1..4, L = 0..15",
        records_pass(&["CHAIN-A", "CHAIN-B", "CHAIN-C", "CHAIN-D", "CHAIN-E", "CHAIN-F"], &cfg),
    );
}

#[test]
fn c05_chain_limits_vs_quintuple_products() {
    let order = 200;
    let mut pass = true;
    for seed in [SeedId::A, SeedId::B, SeedId::C, SeedId::D, SeedId::E, SeedId::F] {
        for v in 1..=3 {
            let lhs = multisum_lhs(&seed.multisum_spec(), v, order);
            pass &= lhs == product_route(seed, v, order);
        }
    }
    // The companion multisum with exponent sum N_i^2.
    for v in 1..=3u32 {
        let spec = MultisumSpec {
            base: 1,
            a: 0,
            tail: std::sync::Arc::new(|n| ratio_neg_one(n as u32)),
        };
        let lhs = multisum_lhs(&spec, v, order);
        let q = quintuple_product(&QuintupleSpec::new(6 * v + 3, -1, v as i64 + 1), order).unwrap();
        let rhs = q.mul(&poch_qq_infinite(1, order).inv().unwrap());
        pass &= lhs == rhs;
    }
    criterion(
        5,
        "multisum limits equal quintuple products at order 200 for v = 1..3",
        pass,
    );
}

#[test]
fn c06_named_series_identities() {
    let cfg = RunConfig { l_max: 1, v_max: 1, order: 200 };
    criterion(
        6,
        "Ramanujan's entry and Slater's items 124/125 emerge at v = 1, order 200",
        records_pass(&["RAMANUJAN", "SLATER-124", "SLATER-125"], &cfg),
    );
}

#[test]
fn c07_one_step_limits_with_prefactor() {
    let order = 200;
    let cfg = RunConfig { l_max: 1, v_max: 1, order };
    let mut pass = records_pass(
        &["CHAIN-G-LIM", "CHAIN-H-LIM", "CHAIN-I-LIM", "CHAIN-G-PROD", "CHAIN-H-PROD", "CHAIN-I-PROD"],
        &cfg,
    );

    // The (1+q)-normalized form of the third limit: dividing the closed form
    // by (1+q) divides the product side by the same factor.
    let one_plus_q = QPoly::from_ints(&[1, 1]);
    let cf = SeedId::I.closed_form();
    let spec = MultisumSpec {
        base: 1,
        a: 1,
        tail: std::sync::Arc::new(move |n| cf(n).exact_div(&one_plus_q).unwrap()),
    };
    let lhs = multisum_lhs(&spec, 1, order);
    let mut denom = poch_qq_infinite(1, order);
    denom.mul_binomial(&coeff::one(), 1); // (1+q) (q;q)_inf
    let rhs = quintuple_product(&QuintupleSpec::new(9, 1, 1), order)
        .unwrap()
        .mul(&denom.inv().unwrap());
    pass &= lhs == rhs;

    criterion(
        7,
        "one-step limits at order 200, including the (1+q)-normalized form",
        pass,
    );
}

#[test]
fn c08_character_oracles() {
    let pass = (-1000..=1000).all(|j| {
        legendre3(j) == eisenstein_chi(j)
            && legendre3(j) + legendre3(j + 1) + legendre3(j + 2) == 0
            && legendre3(-j) == -legendre3(j)
    });
    criterion(8, "Legendre symbol mod 3 agrees with the Eisenstein formula on |j| <= 1000", pass);
}

#[test]
fn c09_building_block_cross_checks() {
    let mut pass = true;

    // Gaussian binomials: Pascal recurrence route vs product/division route.
    for base in [1u32, 2] {
        for top in 0..=30i64 {
            for bottom in 0..=top {
                pass &= qbinom(top, bottom, base) == qbinom_product(top, bottom, base);
            }
        }
    }

    // Closed ratio factorizations vs raw Pochhammer division.
    for n in 0..=30u32 {
        let num = pochhammer_finite(&PochhammerSpec::finite(-1, 0, 3, n));
        let den = pochhammer_finite(&PochhammerSpec::finite(-1, 0, 1, n));
        pass &= num.exact_div(&den).unwrap() == ratio_neg_one(n);
        let num = pochhammer_finite(&PochhammerSpec::finite(1, 3, 6, n));
        let den = pochhammer_finite(&PochhammerSpec::finite(1, 1, 2, n));
        pass &= num.exact_div(&den).unwrap() == ratio_q3_q6(n);
        let num = pochhammer_finite(&PochhammerSpec::finite(1, 3, 3, n));
        let den = pochhammer_finite(&PochhammerSpec::finite(1, 1, 1, n));
        pass &= num.exact_div(&den).unwrap() == ratio_cubic(n);
    }

    // Quintuple product: sum route vs product route for every specialization
    // the catalog uses.
    let mut specs = vec![QuintupleSpec::new(6, -1, 1)];
    for seed in SeedId::ALL {
        for v in 1..=3 {
            if let Some(lp) = seed.limit_product(v) {
                specs.push(lp.spec);
            }
        }
    }
    for v in 1..=3i64 {
        specs.push(QuintupleSpec::new(6 * v as u32 + 3, -1, v + 1));
    }
    for spec in specs {
        let (sum, product) = quintuple_sides(&spec, 300).unwrap();
        pass &= sum == product;
    }

    criterion(9, "building blocks agree along independent routes", pass);
}

#[test]
fn c10_mutation_sensitivity() {
    // Corrupting any ingredient of a seed's alpha weights must break the
    // identity within L <= 5; a verifier that still passes is vacuous.
    let mut pass = true;
    for seed in SeedId::ALL {
        let alpha = seed.canonical_alpha();
        let cf = seed.closed_form();
        let mutants = [
            qident_core::bailey::AlphaSpec {
                character: alpha.character.map(|c| qident_core::qkit::theta::CharSpec::new(c.shift + 1, c.negated)),
                ..alpha
            },
            qident_core::bailey::AlphaSpec {
                sign: match alpha.sign {
                    SignRule::None => SignRule::AltJ,
                    SignRule::AltJ => SignRule::None,
                    SignRule::AltJPlus1 => SignRule::AltJ,
                },
                ..alpha
            },
            qident_core::bailey::AlphaSpec {
                exponent: QuadExp::new(
                    alpha.exponent.a2,
                    alpha.exponent.a1 + 2 * alpha.exponent.den,
                    alpha.exponent.a0,
                    alpha.exponent.den,
                ),
                ..alpha
            },
        ];
        for (which, mutant) in mutants.iter().enumerate() {
            let detected = (0..=5).any(|l| match alpha_binomial_sum(mutant, seed.a(), l) {
                Ok(sum) => sum != cf(l),
                // A corrupted exponent may go negative or fractional; that is
                // detection too.
                Err(_) => true,
            });
            if !detected {
                println!("undetected mutation {which} on seed {}", seed.key());
                pass = false;
            }
        }
    }
    criterion(10, "corrupted alpha data is detected at small L", pass);
}
