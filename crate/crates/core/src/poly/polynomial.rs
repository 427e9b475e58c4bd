//! Sparse multivariate polynomials in canonical (sorted, zero-free) form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::coeff::{Coefficient, Domain, Integer, F2};
use super::monomial::{Monomial, MonomialOrder, Var};
use super::PolyError;

/// Descriptor of a polynomial ring: number of variables and monomial order.
/// The coefficient domain is carried by the coefficient type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub num_vars: u32,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn grevlex(num_vars: u32) -> Self {
        Ring { num_vars, order: MonomialOrder::GradedReverseLex }
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        Ring { order, ..self }
    }
}

/// A polynomial: terms sorted strictly decreasing in the ring's order, no
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coefficient> {
    ring: Ring,
    terms: Vec<(C, Monomial)>,
}

pub type F2Poly = Polynomial<F2>;
pub type ZPoly = Polynomial<Integer>;

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: Ring, c: C) -> Self {
        Self::term(ring, c, Monomial::one())
    }

    pub fn var(ring: Ring, v: Var) -> Self {
        assert!((v as u32) < ring.num_vars, "variable x{v} out of range");
        Self::term(ring, C::one(), Monomial::var(v))
    }

    pub fn term(ring: Ring, c: C, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero(ring)
        } else {
            Polynomial { ring, terms: vec![(c, m)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms: combines like monomials,
    /// drops zeros and sorts.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (c, m) in terms {
            debug_assert!(m.max_var().is_none_or(|v| (v as u32) < ring.num_vars));
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(C, Monomial)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        let order = ring.order;
        terms.sort_unstable_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial { ring, terms }
    }

    /// Wraps terms that are already sorted strictly decreasing with no zeros.
    pub(crate) fn from_sorted_unchecked(ring: Ring, terms: Vec<(C, Monomial)>) -> Self {
        let p = Polynomial { ring, terms };
        debug_assert!(p.is_canonical());
        p
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| !t.0.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| self.ring.order.compare(&w[0].1, &w[1].1) == Ordering::Greater)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn domain(&self) -> Domain {
        C::DOMAIN
    }

    pub fn terms(&self) -> &[(C, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(C, Monomial)> {
        self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    pub fn leading_term(&self) -> Option<&(C, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).min()
    }

    pub fn coeff_of(&self, m: &Monomial) -> C {
        self.terms.iter().find(|t| &t.1 == m).map(|t| t.0.clone()).unwrap_or_else(C::zero)
    }

    /// Re-sorts the terms under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.ring.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial { ring: self.ring.with_order(order), terms }
    }

    /// Same terms viewed in a ring with more variables.
    pub fn extend_vars(&self, num_vars: u32) -> Self {
        assert!(num_vars >= self.ring.num_vars);
        Polynomial { ring: Ring { num_vars, ..self.ring }, terms: self.terms.clone() }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::DomainMismatch {
                left: format!("{}[{} vars, {}]", C::DOMAIN, self.ring.num_vars, self.ring.order.name()),
                right: format!("{}[{} vars, {}]", C::DOMAIN, other.ring.num_vars, other.ring.order.name()),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let order = self.ring.order;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &C| if negate_other { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((rhs(&b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].0.sub(&b[j].0) } else { a[i].0.add(&b[j].0) };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (rhs(&t.0), t.1.clone())));
        Polynomial { ring: self.ring, terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(self.ring);
        for (c, m) in &small.terms {
            acc = acc.merge(&large.mul_term(c, m), false);
        }
        acc
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(d, n)| {
                let p = d.mul(c);
                (!p.is_zero()).then(|| (p, n.mul(m)))
            })
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(c, &Monomial::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..e {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Drops every term of total degree `>= k`: the image in `R / m^k`.
    pub fn truncate(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|t| t.1.degree() < k).cloned().collect();
        Polynomial { ring: self.ring, terms }
    }

    /// `self - c * m * g`, optionally dropping terms of degree `>= trunc`
    /// from the product before merging.
    pub fn sub_mul_term(&self, c: &C, m: &Monomial, g: &Self, trunc: Option<u32>) -> Self {
        let order = self.ring.order;
        let a = &self.terms;
        let md = m.degree();
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        for (gc, gm) in &g.terms {
            if let Some(k) = trunc {
                if gm.degree() + md >= k {
                    continue;
                }
            }
            let pc = gc.mul(c);
            if pc.is_zero() {
                continue;
            }
            let pm = gm.mul(m);
            while i < a.len() && order.compare(&a[i].1, &pm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].1 == pm {
                let s = a[i].0.sub(&pc);
                if !s.is_zero() {
                    out.push((s, pm));
                }
                i += 1;
            } else {
                out.push((pc.neg(), pm));
            }
        }
        out.extend(a[i..].iter().cloned());
        Polynomial { ring: self.ring, terms: out }
    }

    /// Applies `f` to every coefficient, landing in another domain.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(c, m)| {
                let d = f(c);
                (!d.is_zero()).then(|| (d, m.clone()))
            })
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// Substitutes a polynomial for every variable.
    pub fn substitute(&self, images: &[Polynomial<C>]) -> Polynomial<C> {
        assert_eq!(images.len(), self.ring.num_vars as usize);
        let target = images.first().map(|p| p.ring).unwrap_or(self.ring);
        let mut acc = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for &(v, e) in m.factors() {
                t = t.mul_impl(&images[v as usize].pow(e as u32));
            }
            acc = acc.merge(&t, false);
        }
        acc
    }
}

impl ZPoly {
    /// Image under the reduction `Z -> F2`.
    pub fn reduce_mod2(&self) -> F2Poly {
        self.map_coeffs(|c| F2(c.div_rem_euclid(&Integer::Small(2)).1.is_one()))
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[Integer]) -> Integer {
        let mut acc = Integer::Small(0);
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                for _ in 0..e {
                    t = Coefficient::mul(&t, &point[v as usize]);
                }
            }
            acc = Coefficient::add(&acc, &t);
        }
        acc
    }
}

impl F2Poly {
    /// Lift to integer coefficients with representatives 0 and 1.
    pub fn lift_to_integers(&self) -> ZPoly {
        self.map_coeffs(|_| Integer::Small(1))
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Coefficient> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<C: Coefficient> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&C::one().neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zring(n: u32) -> Ring {
        Ring::grevlex(n)
    }

    #[test]
    fn binomial_square_over_integers_and_f2() {
        let r = zring(1);
        let x = ZPoly::var(r, 0);
        let one = ZPoly::one(r);
        let s = (&x + &one).pow(2);
        assert_eq!(s.to_string(), "x0^2 + 2*x0 + 1");
        let xf = F2Poly::var(r, 0);
        let sf = (&xf + &F2Poly::one(r)).pow(2);
        assert_eq!(sf.to_string(), "x0^2 + 1");
        assert!((&sf + &sf).is_zero());
    }

    #[test]
    fn truncation_examples() {
        let r = zring(1);
        let x = F2Poly::var(r, 0);
        let one = F2Poly::one(r);
        let f = &(&x.pow(2) + &x) + &one;
        assert_eq!(f.truncate(2).to_string(), "x0 + 1");
        assert!(f.truncate(0).is_zero());
        let cube = (&x + &one).pow(3);
        assert_eq!(cube.to_string(), "x0^3 + x0^2 + x0 + 1");
        assert_eq!(cube.truncate(3).to_string(), "x0^2 + x0 + 1");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ZPoly::var(zring(2), 0);
        let b = ZPoly::var(zring(3), 0);
        assert!(matches!(a.checked_add(&b), Err(PolyError::DomainMismatch { .. })));
    }

    #[test]
    fn sub_mul_term_truncates() {
        let r = zring(2);
        let x = ZPoly::var(r, 0);
        let y = ZPoly::var(r, 1);
        let g = &(&x * &y) + &x;
        let f = ZPoly::zero(r);
        let h = f.sub_mul_term(&Integer::Small(3), &Monomial::var(1), &g, Some(3));
        assert_eq!(h.to_string(), "-3*x0*x1");
    }

    #[test]
    fn reorder_to_local() {
        let r = zring(2);
        let x = ZPoly::var(r, 0);
        let f = &x.pow(2) + &x;
        let l = f.with_order(MonomialOrder::NegDegReverseLex);
        assert_eq!(l.leading_monomial(), Some(&Monomial::var(0)));
        assert!(l.is_canonical());
    }
}
