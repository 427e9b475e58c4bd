//! The pseudodeformation ideal of a finite group over F2 and its Hilbert
//! function.
//!
//! A two-dimensional pseudocharacter is a pair `(T, D)` with `D` a
//! homomorphism to units and `D(g) T(g^-1 h) - T(g) T(h) + T(gh) = 0`.
//! Reducing mod 2 around the trivial residual pair (`T = 2 = 0`, `D = 1`)
//! gives one variable `tau_g = T(g)` and one `delta_g = D(g) - 1` per
//! element.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{
    buchberger_field_with, cache::GbCache, is_member, standard_monomials, FieldOptions, GbError, GroebnerBasis, IdealBasis,
    Limits, Membership, ResourceLimit,
};
use crate::group::FiniteGroup;
use crate::poly::{F2Poly, Monomial, Ring, Var, F2};

#[derive(Debug, Error)]
pub enum PsError {
    #[error("stopped on {limit} after {} truncation levels", partial.dims.len())]
    ResourceLimit { limit: ResourceLimit, partial: HilbertProfile },
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error("element {0} is not in the group")]
    BadElement(usize),
}

/// Variable layout: `tau_g` is `x_g`, `delta_g` is `x_{|G| + g}`.
#[derive(Clone, Debug)]
pub struct PsVariableMap {
    pub group: FiniteGroup,
}

impl PsVariableMap {
    pub fn new(group: FiniteGroup) -> Self {
        PsVariableMap { group }
    }

    pub fn num_vars(&self) -> u32 {
        2 * self.group.order() as u32
    }

    pub fn ring(&self) -> Ring {
        Ring::grevlex(self.num_vars())
    }

    pub fn tau(&self, g: usize) -> Var {
        g as Var
    }

    pub fn delta(&self, g: usize) -> Var {
        (self.group.order() + g) as Var
    }

    pub fn tau_poly(&self, g: usize) -> F2Poly {
        F2Poly::var(self.ring(), self.tau(g))
    }

    pub fn delta_poly(&self, g: usize) -> F2Poly {
        F2Poly::var(self.ring(), self.delta(g))
    }

    pub fn var_name(&self, v: Var) -> String {
        let n = self.group.order();
        let v = v as usize;
        if v < n {
            format!("T({})", self.group.label(v))
        } else {
            format!("D({})-1", self.group.label(v - n))
        }
    }
}

pub fn build_psdef_ideal(group: &FiniteGroup) -> (PsVariableMap, IdealBasis<F2>) {
    let map = PsVariableMap::new(group.clone());
    let n = group.order();
    let t = |g: usize| map.tau_poly(g);
    let d = |g: usize| map.delta_poly(g);
    let mut gens = vec![t(0), d(0)];
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            gens.push(&t(gh) + &t(group.mul(h, g)));
        }
    }
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            gens.push(&(&(&d(gh) + &(&d(g) * &d(h))) + &d(g)) + &d(h));
        }
    }
    for g in 0..n {
        for h in 0..n {
            let j = group.mul(group.inv(g), h);
            let gh = group.mul(g, h);
            gens.push(&(&(&(&d(g) * &t(j)) + &t(j)) + &(&t(g) * &t(h))) + &t(gh));
        }
    }
    let ideal = IdealBasis::new(map.ring(), gens, format!("pseudodeformation ideal of a group of order {n}"))
        .expect("generators live in the map's ring");
    (map, ideal)
}

/// `dims[j] = dim R / (I + m^(j+1))` for the truncation levels computed,
/// ending at the first level where the dimension stops growing (the
/// confirming level itself is not repeated).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub dims: Vec<usize>,
    pub series: Vec<usize>,
    pub stabilized: bool,
    pub total: Option<usize>,
}

impl HilbertProfile {
    fn from_dims(dims: Vec<usize>, stabilized: bool) -> Self {
        let series = dims.iter().enumerate().map(|(i, &d)| if i == 0 { d } else { d - dims[i - 1] }).collect();
        let total = stabilized.then(|| *dims.last().unwrap());
        HilbertProfile { dims, series, stabilized, total }
    }
}

/// Settings shared by the truncated runs.
#[derive(Clone, Debug, Default)]
pub struct PsOptions {
    pub limits: Limits,
    pub jobs: Option<usize>,
    pub cache: Option<GbCache>,
}

/// Basis of `I` computed in `R / m^k`, via the cache when one is set.
pub fn truncated_basis(ideal: &IdealBasis<F2>, k: u32, opts: &PsOptions) -> Result<GroebnerBasis<F2>, GbError> {
    let fopts = FieldOptions { limits: opts.limits, jobs: opts.jobs, ..Default::default() };
    match &opts.cache {
        Some(c) => Ok(c.get_or_compute(ideal, Some(k), || buchberger_field_with(ideal, Some(k), &fopts))?.0),
        None => buchberger_field_with(ideal, Some(k), &fopts),
    }
}

/// Counts of standard monomials by degree for a truncated basis: the
/// Hilbert function of the associated graded ring below the truncation.
pub fn graded_counts(gb: &GroebnerBasis<F2>) -> Result<Vec<usize>, GbError> {
    let k = gb.truncation.ok_or(GbError::NotTruncated)?;
    let mut counts = vec![0; k as usize];
    for m in standard_monomials(gb)? {
        counts[m.degree() as usize] += 1;
    }
    Ok(counts)
}

pub fn hilbert_profile(group: &FiniteGroup, k_max: u32, opts: &PsOptions) -> Result<HilbertProfile, PsError> {
    let (_, ideal) = build_psdef_ideal(group);
    hilbert_profile_of(&ideal, k_max, opts)
}

/// Runs truncations `k = 1, 2, ...` until `dim R/(I + m^k)` repeats or
/// `k` passes `k_max + 1`.
pub fn hilbert_profile_of(ideal: &IdealBasis<F2>, k_max: u32, opts: &PsOptions) -> Result<HilbertProfile, PsError> {
    let mut dims: Vec<usize> = Vec::new();
    for k in 1..=k_max.max(1) + 1 {
        let gb = truncated_basis(ideal, k, opts)?;
        if let Some(limit) = gb.incomplete {
            return Err(PsError::ResourceLimit { limit, partial: HilbertProfile::from_dims(dims, false) });
        }
        let dim = standard_monomials(&gb)?.len();
        if dims.last() == Some(&dim) {
            return Ok(HilbertProfile::from_dims(dims, true));
        }
        if k > k_max {
            break;
        }
        dims.push(dim);
    }
    Ok(HilbertProfile::from_dims(dims, false))
}

/// `dim R^ps / (2)`, the stabilized total of the Hilbert profile.
pub fn d_of_ps(group: &FiniteGroup, opts: &PsOptions) -> Result<usize, PsError> {
    const K_CAP: u32 = 64;
    let p = hilbert_profile(group, K_CAP, opts)?;
    match p.total {
        Some(t) => Ok(t),
        None => Err(PsError::ResourceLimit { limit: ResourceLimit::MaxDegree, partial: p }),
    }
}

/// Whether `tau_g` lies in `I + m^k`.
pub fn witness_membership(group: &FiniteGroup, g: usize, k: u32, opts: &PsOptions) -> Result<Membership, PsError> {
    if g >= group.order() {
        return Err(PsError::BadElement(g));
    }
    if k == 0 {
        return Ok(Membership::Yes);
    }
    let (map, ideal) = build_psdef_ideal(group);
    let gb = truncated_basis(&ideal, k, opts)?;
    Ok(is_member(&map.tau_poly(g), &gb)?)
}

/// Leading monomials of a truncated basis rendered with `T(..)`/`D(..)-1`
/// names, for display.
pub fn describe_monomial(map: &PsVariableMap, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.factors()
        .iter()
        .map(|&(v, e)| if e == 1 { map.var_name(v) } else { format!("({})^{e}", map.var_name(v)) })
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::macaulay_oracle_dim;
    use crate::group::{abelian_2group, cyclic, dihedral};

    #[test]
    fn trivial_group() {
        let g = cyclic(1).unwrap().0;
        let (map, ideal) = build_psdef_ideal(&g);
        assert!(ideal.generators.contains(&map.tau_poly(0)));
        assert!(ideal.generators.contains(&map.delta_poly(0)));
        let p = hilbert_profile(&g, 4, &PsOptions::default()).unwrap();
        assert_eq!(p.dims, vec![1]);
        assert_eq!(p.total, Some(1));
        assert_eq!(witness_membership(&g, 0, 3, &PsOptions::default()).unwrap(), Membership::Yes);
    }

    #[test]
    fn z2_has_dimension_three() {
        let g = cyclic(2).unwrap().0;
        assert_eq!(d_of_ps(&g, &PsOptions::default()).unwrap(), 3);
        let (_, ideal) = build_psdef_ideal(&g);
        assert_eq!(macaulay_oracle_dim(&ideal, 4).unwrap(), 3);
    }

    #[test]
    fn small_families() {
        let o = PsOptions::default();
        assert_eq!(d_of_ps(&abelian_2group(&[4]).unwrap().0, &o).unwrap(), 10);
        assert_eq!(d_of_ps(&abelian_2group(&[2, 2]).unwrap().0, &o).unwrap(), 10);
        assert_eq!(d_of_ps(&dihedral(4).unwrap().0, &o).unwrap(), 11);
    }

    #[test]
    fn generator_count_bound() {
        let g = dihedral(4).unwrap().0;
        let (map, ideal) = build_psdef_ideal(&g);
        assert!(ideal.generators.len() <= 2 + 3 * 64);
        assert_eq!(map.num_vars(), 16);
        assert_eq!(map.var_name(map.delta(1)), "D(r)-1");
    }
}
