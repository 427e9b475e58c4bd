#![allow(dead_code)]

use psdef::groebner::IdealBasis;
use psdef::group::FiniteGroup;
use psdef::poly::{Coefficient, Integer, Monomial, Polynomial, Ring, F2};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_monomial(rng: &mut impl Rng, num_vars: u32, min_deg: u32, max_deg: u32) -> Monomial {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut exps = vec![0u16; num_vars as usize];
    for _ in 0..d {
        exps[rng.gen_range(0..num_vars as usize)] += 1;
    }
    Monomial::from_exponents(&exps)
}

pub fn random_poly<C: Coefficient>(
    rng: &mut impl Rng,
    ring: Ring,
    min_deg: u32,
    max_deg: u32,
    max_terms: usize,
    coeff: &mut impl FnMut(&mut dyn rand::RngCore) -> C,
) -> Polynomial<C> {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(C, Monomial)> = (0..n).map(|_| (coeff(&mut *rng), random_monomial(rng, ring.num_vars, min_deg, max_deg))).collect();
    Polynomial::from_terms(ring, terms)
}

pub fn f2_coeff(_: &mut dyn rand::RngCore) -> F2 {
    F2(true)
}

pub fn small_int(rng: &mut dyn rand::RngCore) -> Integer {
    let v = rng.gen_range(-4i64..=4);
    Integer::from(if v == 0 { 1 } else { v })
}

/// Up to four variables, generators without constant term and of degree
/// at most three.
pub fn random_f2_ideal(rng: &mut impl Rng) -> IdealBasis<F2> {
    let ring = Ring::grevlex(rng.gen_range(1..=4));
    let n = rng.gen_range(1..=4);
    let gens = (0..n).map(|_| random_poly(rng, ring, 1, 3, 4, &mut f2_coeff)).collect();
    IdealBasis::new(ring, gens, "random").unwrap()
}

/// Small integer ideals whose strong bases stay modest.
pub fn random_z_ideal(rng: &mut impl Rng) -> IdealBasis<Integer> {
    let ring = Ring::grevlex(rng.gen_range(1..=3));
    let n = rng.gen_range(1..=3);
    let gens = (0..n).map(|_| random_poly(rng, ring, 0, 2, 3, &mut small_int)).collect();
    IdealBasis::new(ring, gens, "random").unwrap()
}

/// Every group of order at most four, each as a multiplication table.
pub fn groups_up_to_four() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("Z/{n}"), psdef::group::cyclic(n).unwrap().0));
    }
    out.push(("(Z/2)^2".into(), psdef::group::abelian_2group(&[2, 2]).unwrap().0));
    out
}

/// The same group with its non-identity elements renamed by a random
/// permutation.
pub fn relabel(g: &FiniteGroup, rng: &mut impl Rng) -> FiniteGroup {
    let n = g.order();
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    perm.insert(0, 0);
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            table[perm[x]][perm[y]] = perm[g.mul(x, y)];
        }
    }
    FiniteGroup::build_from_table(table).unwrap()
}
