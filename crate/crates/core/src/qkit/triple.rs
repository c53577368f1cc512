//! The bivariate triple-product layer: the finite two-parameter identity,
//! its one-sided q-binomial-theorem specialization, and the full bilateral
//! form truncated in q.

use super::qbinom::qbinom;
use crate::exactalg::{QPoly, XLaurentPoly};

/// Both sides of the finite identity
///   sum_{i=-n}^m q^(i^2) x^i [n+m choose n+i]_(q^2)
///     = (-q/x; q^2)_n (-qx; q^2)_m,
/// each as an exact Laurent polynomial in x.
pub fn triple_product_poly_sides(n: u32, m: u32) -> (XLaurentPoly, XLaurentPoly) {
    let (n_i, m_i) = (n as i64, m as i64);
    let mut lhs = XLaurentPoly::zero();
    for i in -n_i..=m_i {
        let b = qbinom(n_i + m_i, n_i + i, 2);
        if b.is_zero() {
            continue;
        }
        let term = b.shifted((i * i) as usize);
        lhs = lhs.add(&XLaurentPoly::term(term, i));
    }

    let mut rhs = XLaurentPoly::one();
    for k in 0..n {
        // (1 + q^(2k+1) x^-1)
        let f = XLaurentPoly::one().add(&XLaurentPoly::term(
            QPoly::q_power((2 * k + 1) as usize),
            -1,
        ));
        rhs = rhs.mul(&f);
    }
    for k in 0..m {
        // (1 + q^(2k+1) x)
        let f = XLaurentPoly::one().add(&XLaurentPoly::term(
            QPoly::q_power((2 * k + 1) as usize),
            1,
        ));
        rhs = rhs.mul(&f);
    }
    (lhs, rhs)
}

/// Both sides of sum_{i=0}^L q^(i^2) x^i [L choose i]_(q^2) = (-xq; q^2)_L.
pub fn qbinom_theorem_sides(l: u32) -> (XLaurentPoly, XLaurentPoly) {
    let l_i = l as i64;
    let mut lhs = XLaurentPoly::zero();
    for i in 0..=l_i {
        let b = qbinom(l_i, i, 2);
        lhs = lhs.add(&XLaurentPoly::term(b.shifted((i * i) as usize), i));
    }
    let mut rhs = XLaurentPoly::one();
    for k in 0..l {
        let f = XLaurentPoly::one().add(&XLaurentPoly::term(
            QPoly::q_power((2 * k + 1) as usize),
            1,
        ));
        rhs = rhs.mul(&f);
    }
    (lhs, rhs)
}

/// Both sides of the bilateral identity
///   sum_i q^(i^2) x^i = (-q/x, -qx, q^2; q^2)_inf,
/// as Laurent polynomials in x whose q-coefficients are exact mod q^(order+1).
pub fn bilateral_sides(order: usize) -> (XLaurentPoly, XLaurentPoly) {
    let mut lhs = XLaurentPoly::zero();
    let mut i = 0i64;
    while (i * i) as usize <= order {
        lhs = lhs.add(&XLaurentPoly::term(QPoly::q_power((i * i) as usize), i));
        if i > 0 {
            lhs = lhs.add(&XLaurentPoly::term(QPoly::q_power((i * i) as usize), -i));
        }
        i += 1;
    }

    // Only factors whose q-exponent is <= order can contribute mod q^(order+1).
    let mut rhs = XLaurentPoly::one();
    let mut e = 1usize;
    while e <= order {
        let down = XLaurentPoly::one().add(&XLaurentPoly::term(QPoly::q_power(e), -1));
        let up = XLaurentPoly::one().add(&XLaurentPoly::term(QPoly::q_power(e), 1));
        rhs = rhs.mul_trunc(&down, order).mul_trunc(&up, order);
        e += 2;
    }
    let mut e = 2usize;
    while e <= order {
        let factor = XLaurentPoly::term(QPoly::one_plus(crate::exactalg::coeff::cint(-1), e), 0);
        rhs = rhs.mul_trunc(&factor, order);
        e += 2;
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QPoly;

    #[test]
    fn degenerate_case() {
        let (lhs, rhs) = triple_product_poly_sides(0, 0);
        assert_eq!(lhs, XLaurentPoly::one());
        assert_eq!(rhs, XLaurentPoly::one());
    }

    #[test]
    fn one_one_constant_coefficient() {
        // Coefficient of x^0 in (1 + q/x)(1 + qx) is 1 + q^2.
        let (lhs, rhs) = triple_product_poly_sides(1, 1);
        assert_eq!(rhs.x_coeff(0), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_sided_case_matches_general() {
        // n = 0 reduces the general identity to the q-binomial theorem.
        for l in 0..=8 {
            let (g_lhs, g_rhs) = triple_product_poly_sides(0, l);
            let (s_lhs, s_rhs) = qbinom_theorem_sides(l);
            assert_eq!(g_lhs, s_lhs);
            assert_eq!(g_rhs, s_rhs);
            assert_eq!(s_lhs, s_rhs);
        }
    }

    #[test]
    fn bilateral_truncated() {
        let (lhs, rhs) = bilateral_sides(25);
        assert_eq!(lhs, rhs);
    }
}
