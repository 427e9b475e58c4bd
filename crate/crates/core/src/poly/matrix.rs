//! 2x2 matrices with polynomial entries.

use super::coeff::Coefficient;
use super::monomial::Var;
use super::polynomial::{Polynomial, Ring};
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix2<C: Coefficient> {
    pub entries: [[Polynomial<C>; 2]; 2],
}

impl<C: Coefficient> PolyMatrix2<C> {
    pub fn new(entries: [[Polynomial<C>; 2]; 2]) -> Self {
        let r = entries[0][0].ring();
        assert!(entries.iter().flatten().all(|p| p.ring() == r), "matrix entries from different rings");
        PolyMatrix2 { entries }
    }

    pub fn identity(ring: Ring) -> Self {
        let one = Polynomial::one(ring);
        let zero = Polynomial::zero(ring);
        PolyMatrix2 { entries: [[one.clone(), zero.clone()], [zero, one]] }
    }

    /// `I + X` where `X = [[x_b, x_{b+1}], [x_{b+2}, x_{b+3}]]`.
    pub fn generic_unipotent(ring: Ring, base: Var) -> Self {
        let v = |k: Var| Polynomial::var(ring, base + k);
        let one = Polynomial::one(ring);
        PolyMatrix2 { entries: [[&one + &v(0), v(1)], [v(2), &one + &v(3)]] }
    }

    pub fn ring(&self) -> Ring {
        self.entries[0][0].ring()
    }

    pub fn mat_mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        PolyMatrix2 { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let e = |i: usize, j: usize| &a[i][j] - &b[i][j];
        PolyMatrix2 { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn trace(&self) -> Polynomial<C> {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> Polynomial<C> {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Entries in row-major order.
    pub fn into_entries(self) -> [Polynomial<C>; 4] {
        let [[a, b], [c, d]] = self.entries;
        [a, b, c, d]
    }
}

/// Evaluates a word `[(generator, ±1)]` on generator matrices. Inverse
/// letters need an explicit inverse matrix in `inverses`.
pub fn mat_word<C: Coefficient>(
    ring: Ring,
    generators: &[PolyMatrix2<C>],
    inverses: &[Option<PolyMatrix2<C>>],
    word: &[(usize, i32)],
) -> Result<PolyMatrix2<C>, PolyError> {
    let mut acc = PolyMatrix2::identity(ring);
    for &(g, e) in word {
        let m = if e > 0 {
            generators.get(g).ok_or(PolyError::InverseNotAvailable(g))?
        } else {
            inverses.get(g).and_then(|m| m.as_ref()).ok_or(PolyError::InverseNotAvailable(g))?
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mat_mul(m);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Integer, ZPoly};

    #[test]
    fn square_of_generic_matrix_has_expected_trace() {
        let r = Ring::grevlex(4);
        let s = PolyMatrix2::<Integer>::generic_unipotent(r, 0);
        let sq = mat_word(r, std::slice::from_ref(&s), &[None], &[(0, 1), (0, 1)]).unwrap();
        // x1^2+x4^2+2*x1+2*x4+2*x2*x3 + 2 in 1-based names
        let expect: ZPoly = parse_poly(r, "x0^2 + x3^2 + 2*x0 + 2*x3 + 2*x1*x2 + 2").unwrap();
        assert_eq!(sq.trace(), expect);
    }

    #[test]
    fn identity_word_and_right_identity() {
        let r = Ring::grevlex(4);
        let s = PolyMatrix2::<Integer>::generic_unipotent(r, 0);
        assert_eq!(mat_word(r, std::slice::from_ref(&s), &[None], &[]).unwrap(), PolyMatrix2::identity(r));
        assert_eq!(s.mat_mul(&PolyMatrix2::identity(r)), s);
    }

    #[test]
    fn missing_inverse_is_reported() {
        let r = Ring::grevlex(4);
        let s = PolyMatrix2::<Integer>::generic_unipotent(r, 0);
        assert!(matches!(mat_word(r, &[s], &[None], &[(0, -1)]), Err(PolyError::InverseNotAvailable(0))));
    }
}
