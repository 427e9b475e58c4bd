//! Sparse monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Variable index inside a polynomial ring.
pub type Var = u16;

/// A power product stored as `(variable, exponent)` pairs sorted by
/// variable, with zero exponents never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: SmallVec<[(Var, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut factors = SmallVec::new();
        factors.push((v, e));
        Monomial { degree: e as u32, factors }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u16)>>(pairs: I) -> Self {
        let mut factors: SmallVec<[(Var, u16); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        factors.sort_unstable_by_key(|p| p.0);
        let mut merged: SmallVec<[(Var, u16); 6]> = SmallVec::new();
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|p| p.1 as u32).sum();
        Monomial { degree, factors: merged }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exps: &[u16]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i as Var, e)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn factors(&self) -> &[(Var, u16)] {
        &self.factors
    }

    pub fn exponent(&self, v: Var) -> u16 {
        match self.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// Largest variable index occurring, if any.
    pub fn max_var(&self) -> Option<Var> {
        self.factors.last().map(|p| p.0)
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<u16> {
        let mut out = vec![0; num_vars];
        for &(v, e) in &self.factors {
            out[v as usize] = e;
        }
        out
    }

    /// One bit per variable (modulo 64); a necessary condition for divisibility.
    pub fn divmask(&self) -> u64 {
        self.factors.iter().fold(0u64, |m, &(v, _)| m | (1u64 << (v % 64)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { degree: self.degree + other.degree, factors }
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.factors.len() > other.factors.len() {
            return false;
        }
        let mut j = 0;
        let b = &other.factors;
        for &(v, e) in &self.factors {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut factors = SmallVec::with_capacity(other.factors.len());
        let mut i = 0;
        for &(v, e) in &other.factors {
            if i < self.factors.len() && self.factors[i].0 == v {
                let d = e - self.factors[i].1;
                if d > 0 {
                    factors.push((v, d));
                }
                i += 1;
            } else {
                factors.push((v, e));
            }
        }
        Monomial { degree: other.degree - self.degree, factors }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        let degree = factors.iter().map(|p: &(Var, u16)| p.1 as u32).sum();
        Monomial { degree, factors }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.divmask() & other.divmask() == 0 {
            return true;
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Reverse-lexicographic tie break for monomials of equal degree: the
    /// monomial with the smaller exponent in the last differing variable is
    /// the larger one.
    fn revlex_tiebreak(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (va, ea) = a[i - 1];
            let (vb, eb) = b[j - 1];
            match va.cmp(&vb) {
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        // equal degree forces both to run out together
        (j > 0).cmp(&(i > 0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order (global).
    GradedReverseLex,
    /// Negative-degree reverse lexicographic order: lower total degree is
    /// larger, ties broken as in `GradedReverseLex`. This is a local order;
    /// it is a well-order only on a degree-truncated monomial set, which is
    /// the only setting in which the engine uses it.
    NegDegReverseLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GradedReverseLex => {
                a.degree.cmp(&b.degree).then_with(|| a.revlex_tiebreak(b))
            }
            MonomialOrder::NegDegReverseLex => {
                b.degree.cmp(&a.degree).then_with(|| a.revlex_tiebreak(b))
            }
        }
    }

    pub fn is_global(self) -> bool {
        matches!(self, MonomialOrder::GradedReverseLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GradedReverseLex => "grevlex",
            MonomialOrder::NegDegReverseLex => "negdegrevlex",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::GradedReverseLex),
            "negdegrevlex" => Some(MonomialOrder::NegDegReverseLex),
            _ => None,
        }
    }
}

/// Calls `f` on every monomial in `num_vars` variables of total degree
/// exactly `degree`.
pub fn for_each_monomial_of_degree(num_vars: usize, degree: u32, mut f: impl FnMut(&Monomial)) {
    fn rec(
        start: usize,
        num_vars: usize,
        left: u32,
        cur: &mut Vec<(Var, u16)>,
        f: &mut dyn FnMut(&Monomial),
    ) {
        if left == 0 {
            f(&Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        for v in start..num_vars {
            for e in (1..=left).rev() {
                cur.push((v as Var, e as u16));
                rec(v + 1, num_vars, left - e, cur, f);
                cur.pop();
            }
        }
    }
    rec(0, num_vars, degree, &mut Vec::new(), &mut f);
}

/// All monomials of total degree below `bound`, grouped by increasing degree.
pub fn monomials_below(num_vars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..bound {
        for_each_monomial_of_degree(num_vars, d, |m| out.push(m.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_degree_one_is_lex() {
        let o = MonomialOrder::GradedReverseLex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn grevlex_last_variable_decides() {
        let o = MonomialOrder::GradedReverseLex;
        // x1*x3 < x2^2
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 1]), &m(&[1, 1, 1])), Ordering::Equal);
    }

    #[test]
    fn local_order_prefers_low_degree() {
        let o = MonomialOrder::NegDegReverseLex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(o.compare(&Monomial::one(), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 0, 2]);
        let b = m(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn monomial_counts() {
        // C(n + d - 1, d)
        let mut c = 0;
        for_each_monomial_of_degree(4, 3, |_| c += 1);
        assert_eq!(c, 20);
        assert_eq!(monomials_below(3, 3).len(), 10);
    }
}
