//! Construction of the full identity catalog.
//!
//! Every record evaluates its two sides along genuinely different routes:
//! binomial-kernel sums against closed-form products, lemma-step recursions
//! against direct alpha sums, multisum enumerations against theta series,
//! and theta series against quintuple products.

use super::seeds::SeedId;
use super::{Evaluator, IdentityRecord, Kind, Params, Sweep, Value};
use crate::bailey::{alpha_binomial_sum, bailey_chain, limit_rhs, multisum_lhs, AlphaSpec, MultisumSpec};
use crate::error::Result;
use crate::exactalg::{QPoly, QSeries, XLaurentPoly};
use crate::qkit::theta::{CharSpec, QuadExp, SignRule};
use crate::qkit::{
    bilateral_sides, eisenstein_chi, legendre3, poch_qq, poch_qq_infinite, poch_qq_range,
    qbinom_theorem_sides, quintuple_product, ratio_neg_one, triple_product_poly_sides,
    QuintupleSpec,
};
use std::sync::Arc;

fn poly<F>(f: F) -> Evaluator
where
    F: Fn(&Params) -> Result<QPoly> + Send + Sync + 'static,
{
    Arc::new(move |p| f(p).map(Value::Poly))
}

fn series<F>(f: F) -> Evaluator
where
    F: Fn(&Params) -> Result<QSeries> + Send + Sync + 'static,
{
    Arc::new(move |p| f(p).map(Value::Series))
}

fn laurent<F>(f: F) -> Evaluator
where
    F: Fn(&Params) -> Result<XLaurentPoly> + Send + Sync + 'static,
{
    Arc::new(move |p| f(p).map(Value::Laurent))
}

fn ints<F>(f: F) -> Evaluator
where
    F: Fn(&Params) -> Result<Vec<i64>> + Send + Sync + 'static,
{
    Arc::new(move |p| f(p).map(Value::Ints))
}

/// alpha weights of the even-kernel Capparelli character sum.
fn cap_alpha() -> AlphaSpec {
    AlphaSpec::new(Some(CharSpec::new(1, false)), SignRule::None, QuadExp::new(1, 0, 0, 1), 1)
}

const CAP_SPEC: QuintupleSpec = QuintupleSpec { base: 6, z_sign: -1, z_pow: 1 };

/// Both sides of the finite Capparelli identity with denominators cleared:
/// each side is multiplied by (q)_floor(L/2) (q^3;q^3)_floor(L/3), which turns
/// every double-sum term into an exact polynomial.
fn cap_poly_sides(l: i64) -> Result<(QPoly, QPoly)> {
    let m_max = l / 2;
    let n_max = l / 3;
    let mut lhs = QPoly::zero();
    for n in 0..=n_max {
        for m in 0..=(l - 3 * n) / 2 {
            let e = (2 * m * m + 6 * m * n + 6 * n * n) as usize;
            let kernel = poch_qq_range(1, (l - 3 * n - 2 * m + 1) as u32, l as u32);
            let clear_m = poch_qq_range(1, m as u32 + 1, m_max as u32);
            let clear_n = poch_qq_range(3, n as u32 + 1, n_max as u32);
            let term = (&(&kernel * &clear_m) * &clear_n).shifted(e);
            lhs = &lhs + &term;
        }
    }
    let clear = &poch_qq(m_max as u32, 1) * &poch_qq(n_max as u32, 3);
    let rhs = &alpha_binomial_sum(&cap_alpha(), 0, l)? * &clear;
    Ok((lhs, rhs))
}

/// The Capparelli double sum as a series:
/// sum_{m,n} q^(2m^2+6mn+6n^2) / ((q)_m (q^3;q^3)_n).
fn cap_series(order: usize) -> Result<QSeries> {
    let mut out = QSeries::zero(order);
    let mut n = 0i64;
    while 6 * n * n <= order as i64 {
        let inv_n = QSeries::from_poly(&poch_qq(n as u32, 3), order).inv()?;
        let mut m = 0i64;
        loop {
            let e = 2 * m * m + 6 * m * n + 6 * n * n;
            if e > order as i64 {
                break;
            }
            let inv_m = QSeries::from_poly(&poch_qq(m as u32, 1), order).inv()?;
            let term = inv_n.mul(&inv_m);
            for k in 0..=order - e as usize {
                out.add_term(&term.coeff(k), k + e as usize);
            }
            m += 1;
        }
        n += 1;
    }
    Ok(out)
}

/// Product-route right-hand side of a chain limit:
/// q^q_shift · Q(spec) / (q^base; q^base)_inf.
fn quintuple_limit_series(seed: SeedId, v: u32, order: usize) -> Result<QSeries> {
    let lp = seed
        .limit_product(v)
        .expect("caller only asks for recorded quintuple shapes");
    let mut s = quintuple_product(&lp.spec, order)?;
    if lp.q_shift > 0 {
        s = s.mul_poly(&QPoly::q_power(lp.q_shift));
    }
    Ok(s.mul(&poch_qq_infinite(seed.base(), order).inv()?))
}

struct SeedMeta {
    seed: SeedId,
    seed_id: &'static str,
    chain_id: &'static str,
    lim_id: &'static str,
    prod_id: &'static str,
    title: &'static str,
    citation: &'static str,
    notes: &'static str,
    lim_notes: &'static str,
}

const SEED_META: [SeedMeta; 9] = [
    SeedMeta {
        seed: SeedId::A,
        seed_id: "SEED-A",
        chain_id: "CHAIN-A",
        lim_id: "CHAIN-A-LIM",
        prod_id: "CHAIN-A-PROD",
        title: "(j/3)-weighted even Gaussian sum with exponent C(j-1,2)",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.5",
        notes: "The cited prefactor (1-q^3)/(1-q) is multiplied into the closed form.",
        lim_notes: "Both sides are q^v times the cited hierarchy display, whose exponent carries -(v-1); the theta side factors as q^v.Q(q^(6v+3), -q^(3v)). The cited product writes the same thing with the (1-q^3)/(1-q) factor moved into (q^(12v+9); q^(12v+6))_inf over (q^2; q)_inf.",
    },
    SeedMeta {
        seed: SeedId::B,
        seed_id: "SEED-B",
        chain_id: "CHAIN-B",
        lim_id: "CHAIN-B-LIM",
        prod_id: "CHAIN-B-PROD",
        title: "(j/3)-weighted odd Gaussian sum with exponent C(j-1,2)",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.7",
        notes: "",
        lim_notes: "Theta side equals Q(q^(6v+3), -q^(2v)).",
    },
    SeedMeta {
        seed: SeedId::C,
        seed_id: "SEED-C",
        chain_id: "CHAIN-C",
        lim_id: "CHAIN-C-LIM",
        prod_id: "CHAIN-C-PROD",
        title: "((j+1)/3)-weighted alternating odd sum in base q^2, slot L+j",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.8; the same statement is displayed in the introduction. The v=1 limit is McLaughlin-Sills, Thm 4.8",
        notes: "The cited product (q^3;q^6)_L (1-q^(2(1+2L))) / (q;q^2)_(L+1) is stored in the equivalent form (q^3;q^6)_L (1+q^(2L+1)) / (q;q^2)_L.",
        lim_notes: "Theta side equals Q(q^(12v+6), q).",
    },
    SeedMeta {
        seed: SeedId::D,
        seed_id: "SEED-D",
        chain_id: "CHAIN-D",
        lim_id: "CHAIN-D-LIM",
        prod_id: "CHAIN-D-PROD",
        title: "((j+1)/3)-weighted alternating even sum in base q^2, slot L+j",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.9",
        notes: "",
        lim_notes: "Theta side equals Q(q^(12v+6), q^(2v+1)); v=1 is Ramanujan's entry proven by Andrews-Berndt.",
    },
    SeedMeta {
        seed: SeedId::E,
        seed_id: "SEED-E",
        chain_id: "CHAIN-E",
        lim_id: "CHAIN-E-LIM",
        prod_id: "CHAIN-E-PROD",
        title: "((j+1)/3)-weighted alternating odd sum in base q^2, slot L-j",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.10",
        notes: "",
        lim_notes: "Theta side equals Q(q^(12v+6), q^(4v+1)); v=1 is item 124 in Slater's list.",
    },
    SeedMeta {
        seed: SeedId::F,
        seed_id: "SEED-F",
        chain_id: "CHAIN-F",
        lim_id: "CHAIN-F-LIM",
        prod_id: "CHAIN-F-PROD",
        title: "(j/3)-weighted alternating odd sum in base q^2, slot L-j",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Theorem 1.11",
        notes: "",
        lim_notes: "Both sides are q times the cited hierarchy display (the monomial q^(1+2L) stays inside the closed form); theta side equals q.Q(q^(12v+6), q^(4v+3)). v=1 is item 125 in Slater's list.",
    },
    SeedMeta {
        seed: SeedId::G,
        seed_id: "SEED-G",
        chain_id: "CHAIN-G",
        lim_id: "CHAIN-G-LIM",
        prod_id: "CHAIN-G-PROD",
        title: "((j+1)/3)-weighted alternating odd sum with exponent C(j,2)",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Section 3, eq. (y)",
        notes: "",
        lim_notes: "Theta side at v=1 equals Q(q^9, q^2).",
    },
    SeedMeta {
        seed: SeedId::H,
        seed_id: "SEED-H",
        chain_id: "CHAIN-H",
        lim_id: "CHAIN-H-LIM",
        prod_id: "CHAIN-H-PROD",
        title: "(j/3)-weighted alternating odd sum with exponent C(j,2)",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Section 3, eq. (z)",
        notes: "",
        lim_notes: "Both sides are q times the cited limit display; theta side at v=1 equals q.Q(q^9, q^4).",
    },
    SeedMeta {
        seed: SeedId::I,
        seed_id: "SEED-I",
        chain_id: "CHAIN-I",
        lim_id: "CHAIN-I-LIM",
        prod_id: "CHAIN-I-PROD",
        title: "((j+2)/3)-weighted sign-flipped odd sum with exponent C(j,2)",
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Section 3, eq. (xy)",
        notes: "Obtained in the source by adding eqs. (y) and (z) via (j/3)+((j+1)/3)+((j+2)/3) = 0.",
        lim_notes: "Theta side at v=1 equals Q(q^9, q). The cited limit display divides the closed form by its (1+q) factor, so its product carries (-q;q^9)_inf = (1+q)(-q^10;q^9)_inf split accordingly.",
    },
];

/// Build the full catalog.
pub fn catalog() -> Vec<IdentityRecord> {
    let mut records = Vec::new();

    records.push(IdentityRecord {
        id: "QBT",
        title: "q-binomial theorem, base q^2 with x marker",
        kind: Kind::Laurent,
        citation: "G. E. Andrews, The Theory of Partitions, eq. (3.3.6)",
        notes: "",
        sweep: Sweep::L { cap: 20 },
        lhs: laurent(|p| Ok(qbinom_theorem_sides(p.l as u32).0)),
        rhs: laurent(|p| Ok(qbinom_theorem_sides(p.l as u32).1)),
    });

    records.push(IdentityRecord {
        id: "JTP-POLY",
        title: "Polynomial analogue of the Jacobi triple product",
        kind: Kind::Laurent,
        citation: "G. E. Andrews, The Theory of Partitions, p. 49",
        notes: "",
        sweep: Sweep::Nm { cap: 12 },
        lhs: laurent(|p| Ok(triple_product_poly_sides(p.n as u32, p.m as u32).0)),
        rhs: laurent(|p| Ok(triple_product_poly_sides(p.n as u32, p.m as u32).1)),
    });

    records.push(IdentityRecord {
        id: "JTP",
        title: "Jacobi triple product identity",
        kind: Kind::Laurent,
        citation: "G. E. Andrews, The Theory of Partitions, Thm 2.8",
        notes: "Bilateral in x; both sides truncated at the q-order.",
        sweep: Sweep::Series,
        lhs: laurent(|p| Ok(bilateral_sides(p.order).0)),
        rhs: laurent(|p| Ok(bilateral_sides(p.order).1)),
    });

    records.push(IdentityRecord {
        id: "CAP-POLY",
        title: "Finite form of the analytic Capparelli identity",
        kind: Kind::Polynomial,
        citation: "Berkovich-Uncu, quoted as Theorem 1.3 in: A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3",
        notes: "Both sides are multiplied by (q)_floor(L/2) (q^3;q^3)_floor(L/3) to clear denominators.",
        sweep: Sweep::L { cap: 25 },
        lhs: poly(|p| cap_poly_sides(p.l).map(|s| s.0)),
        rhs: poly(|p| cap_poly_sides(p.l).map(|s| s.1)),
    });

    records.push(IdentityRecord {
        id: "CAP",
        title: "Analytic Capparelli identity",
        kind: Kind::Series,
        citation: "Kanade-Russell / Kursungoz, quoted as eq. (cpi) in: A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3",
        notes: "",
        sweep: Sweep::Series,
        lhs: series(|p| cap_series(p.order)),
        rhs: series(|p| {
            let q = quintuple_product(&CAP_SPEC, p.order)?;
            Ok(q.mul(&poch_qq_infinite(1, p.order).inv()?))
        }),
    });

    records.push(IdentityRecord {
        id: "QPI-CAP",
        title: "Capparelli character theta sum as a quintuple product",
        kind: Kind::Series,
        citation: "Specialization of the quintuple product identity, Gasper-Rahman ex. 5.6",
        notes: "sum_j ((j+1)/3) q^(j^2) = Q(q^6, -q).",
        sweep: Sweep::Series,
        lhs: series(|p| cap_alpha().theta_series(p.order)),
        rhs: series(|p| quintuple_product(&CAP_SPEC, p.order)),
    });

    for meta in &SEED_META {
        let seed = meta.seed;
        let state = seed.state().expect("seed data satisfies its own defining relation");

        records.push(IdentityRecord {
            id: meta.seed_id,
            title: meta.title,
            kind: Kind::Polynomial,
            citation: meta.citation,
            notes: meta.notes,
            sweep: Sweep::L { cap: 40 },
            lhs: poly(move |p| alpha_binomial_sum(&seed.canonical_alpha(), seed.a(), p.l)),
            rhs: {
                let cf = seed.closed_form();
                poly(move |p| Ok(cf(p.l)))
            },
        });

        records.push(IdentityRecord {
            id: meta.chain_id,
            title: "Defining relation of the iterated hierarchy",
            kind: Kind::Polynomial,
            citation: meta.citation,
            notes: "Left side iterates the lemma step from the seed; right side sums the bumped alpha against the binomial kernel.",
            sweep: Sweep::LByV { cap: 15 },
            lhs: poly(move |p| Ok((*bailey_chain(&state, p.v).f(p.l)).clone())),
            rhs: poly(move |p| alpha_binomial_sum(&seed.chain_alpha(p.v), seed.a(), p.l)),
        });

        records.push(IdentityRecord {
            id: meta.lim_id,
            title: "L -> infinity limit of the hierarchy: multisum = theta / (q^b; q^b)_inf",
            kind: Kind::Series,
            citation: meta.citation,
            notes: meta.lim_notes,
            sweep: Sweep::V,
            lhs: series(move |p| Ok(multisum_lhs(&seed.multisum_spec(), p.v, p.order))),
            rhs: series(move |p| limit_rhs(&seed.chain_alpha(p.v), p.order)),
        });

        records.push(IdentityRecord {
            id: meta.prod_id,
            title: "Quintuple-product form of the hierarchy's theta side",
            kind: Kind::Series,
            citation: meta.citation,
            notes: meta.lim_notes,
            sweep: match seed {
                SeedId::G | SeedId::H | SeedId::I => Sweep::VFixed { v: 1 },
                _ => Sweep::V,
            },
            lhs: series(move |p| seed.chain_alpha(p.v).theta_series(p.order)),
            rhs: series(move |p| {
                let lp = seed.limit_product(p.v).expect("sweep stays within recorded shapes");
                let mut s = quintuple_product(&lp.spec, p.order)?;
                if lp.q_shift > 0 {
                    s = s.mul_poly(&QPoly::q_power(lp.q_shift));
                }
                Ok(s)
            }),
        });
    }

    records.push(IdentityRecord {
        id: "MS-PLUSPLUS",
        title: "Companion multisum with exponent sum N_i^2",
        kind: Kind::Series,
        citation: "McLaughlin-Sills, eq. (5.9); quoted as eq. (++) in: A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3",
        notes: "External result stated for comparison in the source; verified here, not derived from a seed.",
        sweep: Sweep::V,
        lhs: series(|p| {
            let spec = MultisumSpec {
                base: 1,
                a: 0,
                tail: Arc::new(|n| ratio_neg_one(n as u32)),
            };
            Ok(multisum_lhs(&spec, p.v, p.order))
        }),
        rhs: series(|p| {
            let v = p.v as i64;
            let spec = QuintupleSpec::new((6 * v + 3) as u32, -1, v + 1);
            let q = quintuple_product(&spec, p.order)?;
            Ok(q.mul(&poch_qq_infinite(1, p.order).inv()?))
        }),
    });

    records.push(IdentityRecord {
        id: "RAMANUJAN",
        title: "Ramanujan's mod-18 Rogers-Ramanujan type identity",
        kind: Kind::Series,
        citation: "Andrews-Berndt, Ramanujan's Lost Notebook, Entry 5 (3.4); the v=1 case of the even base-q^2 hierarchy",
        notes: "",
        sweep: Sweep::VFixed { v: 1 },
        lhs: series(|p| Ok(multisum_lhs(&SeedId::D.multisum_spec(), 1, p.order))),
        rhs: series(|p| quintuple_limit_series(SeedId::D, 1, p.order)),
    });

    records.push(IdentityRecord {
        id: "SLATER-124",
        title: "Slater's identity (124)",
        kind: Kind::Series,
        citation: "L. J. Slater, Further identities of the Rogers-Ramanujan type, item 124; the v=1 case of the odd base-q^2 hierarchy",
        notes: "",
        sweep: Sweep::VFixed { v: 1 },
        lhs: series(|p| Ok(multisum_lhs(&SeedId::E.multisum_spec(), 1, p.order))),
        rhs: series(|p| quintuple_limit_series(SeedId::E, 1, p.order)),
    });

    records.push(IdentityRecord {
        id: "SLATER-125",
        title: "Slater's identity (125)",
        kind: Kind::Series,
        citation: "L. J. Slater, Further identities of the Rogers-Ramanujan type, item 125; the v=1 case of the shifted odd base-q^2 hierarchy",
        notes: "Both sides are q times the cited display.",
        sweep: Sweep::VFixed { v: 1 },
        lhs: series(|p| Ok(multisum_lhs(&SeedId::F.multisum_spec(), 1, p.order))),
        rhs: series(|p| quintuple_limit_series(SeedId::F, 1, p.order)),
    });

    records.push(IdentityRecord {
        id: "CHAR-EISENSTEIN",
        title: "Legendre symbol mod 3 via Eisenstein units",
        kind: Kind::IntegerSequence,
        citation: "Eisenstein's sine formula for the Legendre symbol, specialized to p = 3",
        notes: "(j/3) = (w^j - wbar^j)/(w - wbar) with w a primitive cube root of unity, evaluated in exact Eisenstein-integer arithmetic.",
        sweep: Sweep::JWindow { radius: 1000 },
        lhs: ints(|p| Ok((-p.n..=p.n).map(legendre3).collect())),
        rhs: ints(|p| Ok((-p.n..=p.n).map(eisenstein_chi).collect())),
    });

    records.push(IdentityRecord {
        id: "CHAR-PERIOD",
        title: "Three consecutive Legendre mod-3 values sum to zero",
        kind: Kind::IntegerSequence,
        citation: "A. Berkovich, On the q-binomial identities involving the Legendre symbol modulo 3, Section 3",
        notes: "",
        sweep: Sweep::JWindow { radius: 1000 },
        lhs: ints(|p| {
            Ok((-p.n..=p.n)
                .map(|j| legendre3(j) + legendre3(j + 1) + legendre3(j + 2))
                .collect())
        }),
        rhs: ints(|p| Ok(vec![0; (2 * p.n + 1) as usize])),
    });

    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{check_record, find, RunConfig};

    #[test]
    fn ids_are_unique() {
        let records = catalog();
        let mut ids: Vec<_> = records.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), records.len());
    }

    #[test]
    fn every_seed_has_all_four_records() {
        let records = catalog();
        for key in ["A", "B", "C", "D", "E", "F", "G", "H", "I"] {
            for pattern in [format!("SEED-{key}"), format!("CHAIN-{key}"), format!("CHAIN-{key}-LIM"), format!("CHAIN-{key}-PROD")] {
                assert!(find(&records, &pattern).is_ok(), "missing {pattern}");
            }
        }
        for id in ["QBT", "JTP-POLY", "JTP", "CAP-POLY", "CAP", "QPI-CAP", "MS-PLUSPLUS", "RAMANUJAN", "SLATER-124", "SLATER-125", "CHAR-EISENSTEIN", "CHAR-PERIOD"] {
            assert!(find(&records, id).is_ok(), "missing {id}");
        }
    }

    #[test]
    fn cap_poly_small_cases() {
        for l in 0..=6 {
            let (lhs, rhs) = cap_poly_sides(l).unwrap();
            assert_eq!(lhs, rhs, "L = {l}");
        }
    }

    #[test]
    fn quick_smoke_sweep() {
        // A fast low-order pass over every record; the deep runs live in the
        // integration suites.
        let cfg = RunConfig { l_max: 4, v_max: 2, order: 30 };
        let records = catalog();
        for record in &records {
            for params in record.sweep.param_sets(&cfg) {
                let res = check_record(record, &params).unwrap();
                assert!(res.pass, "{} at {:?}: {:?}", record.id, params, res.mismatch);
            }
        }
    }
}
