//! Gaussian (q-binomial) coefficients.
//!
//! The primary route builds rows of the Pascal-type recurrence
//! [m+n choose m] = [m+n-1 choose m] + q^n [m+n-1 choose m-1]
//! and memoizes them (only the lower half of each row is stored; the other
//! half comes from the [t choose b] = [t choose t-b] symmetry). The product
//! formula with exact division is kept as an independent cross-check.

use crate::exactalg::{coeff, QPoly};
use std::sync::{Arc, Mutex, OnceLock};

// rows[t][b] = [t choose b]_q for b <= t/2.
static ROWS: OnceLock<Mutex<Vec<Vec<Arc<QPoly>>>>> = OnceLock::new();

fn rows() -> &'static Mutex<Vec<Vec<Arc<QPoly>>>> {
    ROWS.get_or_init(|| Mutex::new(vec![vec![Arc::new(QPoly::one())]]))
}

fn row_get(table: &[Vec<Arc<QPoly>>], t: usize, b: usize) -> Arc<QPoly> {
    let b = b.min(t - b);
    table[t][b].clone()
}

fn base_entry(top: usize, bottom: usize) -> Arc<QPoly> {
    let mut table = rows().lock().unwrap();
    while table.len() <= top {
        let t = table.len();
        let mut row = Vec::with_capacity(t / 2 + 1);
        for b in 0..=t / 2 {
            let p = if b == 0 {
                Arc::new(QPoly::one())
            } else {
                // [t choose b] = [t-1 choose b] + q^(t-b) [t-1 choose b-1]
                let keep = row_get(&table, t - 1, b);
                let carry = row_get(&table, t - 1, b - 1);
                Arc::new(&*keep + &carry.shifted(t - b))
            };
            row.push(p);
        }
        table.push(row);
    }
    row_get(&table, top, bottom)
}

/// [top choose bottom] in the variable q^base; zero outside 0 <= bottom <= top.
pub fn qbinom(top: i64, bottom: i64, base: u32) -> QPoly {
    if top < 0 || bottom < 0 || bottom > top {
        return QPoly::zero();
    }
    let p = base_entry(top as usize, bottom as usize);
    if base == 1 {
        (*p).clone()
    } else {
        p.substitute_power(base as i64).expect("base >= 1")
    }
}

/// Product-formula route: (q;q)_top / ((q;q)_bottom (q;q)_(top-bottom)),
/// computed by sparse multiplication and exact sparse division.
pub fn qbinom_product(top: i64, bottom: i64, base: u32) -> QPoly {
    if top < 0 || bottom < 0 || bottom > top {
        return QPoly::zero();
    }
    let (top, bottom) = (top as usize, bottom as usize);
    let k = bottom.min(top - bottom);
    let m1 = coeff::cint(-1);
    let mut p = QPoly::one();
    // prod_{i=1}^{k} (1 - q^(top-k+i)) / (1 - q^i)
    for i in 1..=k {
        p.mul_binomial(&m1, (top - k + i) * base as usize);
    }
    for i in 1..=k {
        p.div_binomial(&m1, i * base as usize)
            .expect("q-binomial product formula divides exactly");
    }
    p
}
