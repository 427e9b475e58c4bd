//! Quotient dimensions by plain linear algebra over F2.
//!
//! `dim R / (I + m^k)` equals the number of monomials of degree `< k` minus
//! the rank of the truncated multiples `w * g`, `g` a generator. No
//! Gröbner machinery is involved.

use std::collections::HashMap;

use crate::poly::{monomials_below, F2Poly, Monomial};

use super::{GbError, IdealBasis};

/// Upper bound on Macaulay-matrix rows.
pub const MACAULAY_ROW_LIMIT: usize = 2_000_000;
const BIT_LIMIT: usize = 1 << 33;

pub fn macaulay_oracle_dim(ideal: &IdealBasis<crate::poly::F2>, k: u32) -> Result<usize, GbError> {
    let n = ideal.ring.num_vars as usize;
    let monos = monomials_below(n, k);
    let col: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let gens: Vec<F2Poly> = ideal.generators.iter().map(|g| g.truncate(k)).filter(|g| !g.is_zero()).collect();

    let mut rows = 0usize;
    for g in &gens {
        let low = g.min_degree().unwrap();
        rows += monos.iter().filter(|w| w.degree() + low < k).count();
    }
    if rows > MACAULAY_ROW_LIMIT || rows.saturating_mul(monos.len()) > BIT_LIMIT {
        return Err(GbError::TooLarge { rows, limit: MACAULAY_ROW_LIMIT });
    }

    let words = monos.len().div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for g in &gens {
        let low = g.min_degree().unwrap();
        for w in monos.iter().filter(|w| w.degree() + low < k) {
            let mut row = vec![0u64; words];
            for (_, m) in g.terms() {
                if m.degree() + w.degree() < k {
                    let c = col[&m.mul(w)];
                    row[c / 64] ^= 1 << (c % 64);
                }
            }
            insert_row(&mut pivots, row);
        }
    }
    Ok(monos.len() - pivots.len())
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn insert_row(pivots: &mut HashMap<usize, Vec<u64>>, mut row: Vec<u64>) {
    while let Some(p) = lowest_bit(&row) {
        match pivots.get(&p) {
            Some(prow) => {
                for (a, b) in row.iter_mut().zip(prow) {
                    *a ^= b;
                }
            }
            None => {
                pivots.insert(p, row);
                return;
            }
        }
    }
}
