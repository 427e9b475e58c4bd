//! Critical-pair bookkeeping with the Gebauer–Möller installation of
//! Buchberger's product and chain criteria.

use crate::poly::{Integer, Monomial};

/// The quantity a pair is keyed by: a monomial lcm over a field, a term
/// lcm (coefficient and monomial) over the integers.
pub(crate) trait LcmKey: Clone + PartialEq {
    fn divides(&self, other: &Self) -> bool;
    fn monomial(&self) -> &Monomial;
}

impl LcmKey for Monomial {
    fn divides(&self, other: &Self) -> bool {
        Monomial::divides(self, other)
    }
    fn monomial(&self) -> &Monomial {
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct TermLcm {
    pub coeff: Integer,
    pub mono: Monomial,
}

impl LcmKey for TermLcm {
    fn divides(&self, other: &Self) -> bool {
        self.mono.divides(&other.mono) && self.coeff.divides(&other.coeff)
    }
    fn monomial(&self) -> &Monomial {
        &self.mono
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Pair<K> {
    pub i: usize,
    pub j: usize,
    pub lcm: K,
    pub sugar: u32,
}

/// A candidate pair `(g, h)` for a newly inserted `h`.
pub(crate) struct Candidate<K> {
    pub g: usize,
    pub lcm: K,
    pub sugar: u32,
    /// The product criterion applies: the S-polynomial is known to reduce
    /// to zero.
    pub product: bool,
}

/// Installs the candidates for a new basis element `h` into `pairs`.
///
/// `lcm_with_h(i)` must return the lcm key of `LT(basis[i])` and `LT(h)`,
/// `lt_h` the key of `LT(h)` itself.
pub(crate) fn gebauer_moeller<K: LcmKey>(
    pairs: &mut Vec<Pair<K>>,
    cands: Vec<Candidate<K>>,
    h: usize,
    lt_h: &K,
    lcm_with_h: impl Fn(usize) -> K,
) {
    // old pairs made redundant by h
    pairs.retain(|p| {
        if !lt_h.divides(&p.lcm) {
            return true;
        }
        let li = lcm_with_h(p.i);
        let lj = lcm_with_h(p.j);
        li == p.lcm || lj == p.lcm
    });

    // drop candidates whose lcm is a proper multiple of another candidate's
    let n = cands.len();
    let mut keep = vec![true; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && cands[b].lcm.divides(&cands[a].lcm) && cands[b].lcm != cands[a].lcm {
                keep[a] = false;
                break;
            }
        }
    }
    // among equal lcms keep one, or none if any satisfies the product criterion
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for a in (0..n).filter(|&a| keep[a]) {
        match groups.iter_mut().find(|g| cands[g[0]].lcm == cands[a].lcm) {
            Some(g) => g.push(a),
            None => groups.push(vec![a]),
        }
    }
    for group in groups {
        let killed = group.iter().any(|&a| cands[a].product);
        for (idx, &a) in group.iter().enumerate() {
            keep[a] = !killed && idx == 0;
        }
    }
    for (a, c) in cands.into_iter().enumerate() {
        if keep[a] {
            pairs.push(Pair { i: c.g, j: h, lcm: c.lcm, sugar: c.sugar });
        }
    }
}

/// Removes and returns every pair of minimal sugar, in a deterministic
/// order.
pub(crate) fn pop_min_batch<K: LcmKey>(
    pairs: &mut Vec<Pair<K>>,
    cmp: impl Fn(&Monomial, &Monomial) -> std::cmp::Ordering,
) -> Vec<Pair<K>> {
    let Some(min) = pairs.iter().map(|p| p.sugar).min() else {
        return Vec::new();
    };
    let (mut batch, rest): (Vec<_>, Vec<_>) = pairs.drain(..).partition(|p| p.sugar == min);
    *pairs = rest;
    batch.sort_by(|a, b| cmp(a.lcm.monomial(), b.lcm.monomial()).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
    batch
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn proper_multiple_is_dropped() {
        let mut pairs = Vec::new();
        let cands = vec![
            Candidate { g: 0, lcm: m(&[1, 1, 0]), sugar: 2, product: false },
            Candidate { g: 1, lcm: m(&[2, 1, 0]), sugar: 3, product: false },
        ];
        gebauer_moeller(&mut pairs, cands, 2, &m(&[0, 1, 0]), |_| m(&[0, 0, 0]));
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].i, 0);
    }

    #[test]
    fn equal_lcm_group_with_product_pair_vanishes() {
        let mut pairs = Vec::new();
        let cands = vec![
            Candidate { g: 0, lcm: m(&[1, 1]), sugar: 2, product: false },
            Candidate { g: 1, lcm: m(&[1, 1]), sugar: 2, product: true },
        ];
        gebauer_moeller(&mut pairs, cands, 2, &m(&[0, 1]), |_| m(&[1, 1]));
        assert!(pairs.is_empty());
    }

    #[test]
    fn old_pair_removed_by_chain() {
        // pair (0,1) with lcm x*y*z; new h with LM y, lcm(0,h) = x*y, lcm(1,h) = y*z
        let mut pairs = vec![Pair { i: 0, j: 1, lcm: m(&[1, 1, 1]), sugar: 3 }];
        gebauer_moeller(&mut pairs, Vec::new(), 2, &m(&[0, 1, 0]), |i| if i == 0 { m(&[1, 1, 0]) } else { m(&[0, 1, 1]) });
        assert!(pairs.is_empty());
    }
}
