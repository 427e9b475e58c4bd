//! Gröbner-basis engine.
//!
//! * [`buchberger_field`]: reduced bases over a field, optionally computed
//!   in `R / m^k` (degree truncation).
//! * [`strong_buchberger_int`]: strong bases over the integers.
//! * [`normal_form`], [`is_member`], [`standard_monomial_count`].
//! * [`macaulay_oracle_dim`]: linear-algebra cross-check of quotient
//!   dimensions, independent of the Buchberger code path.
//!
//! Truncated runs work in the local order [`MonomialOrder::NegDegReverseLex`]:
//! on the truncated monomial set it is a well-order and the leading term of
//! `w * f` is either `w * LT(f)` or the whole product vanishes, so
//! truncation commutes with every step of Buchberger's algorithm.

pub mod cache;
mod field;
mod integer;
mod macaulay;
mod pairs;
mod reduce;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Coefficient, Monomial, MonomialOrder, PolyError, Polynomial, Ring};

pub use field::{buchberger_field, buchberger_field_with, FieldOptions};
pub use integer::{
    membership_certificate, strong_buchberger_int, strong_buchberger_int_with, verify_certificate, IntOptions,
    verify_cofactors, CertTerm, MembershipCertificate, NodeRef,
};
pub use macaulay::{macaulay_oracle_dim, MACAULAY_ROW_LIMIT};
pub use reduce::{is_member, normal_form, standard_monomial_count, standard_monomials};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Macaulay matrix too large: {rows} rows exceeds the limit of {limit}")]
    TooLarge { rows: usize, limit: usize },
    #[error("standard monomials are only finite for a truncated basis")]
    NotTruncated,
    #[error("a local monomial order needs a truncation degree")]
    LocalOrderWithoutTruncation,
}

/// Generators of an ideal in a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis<C: Coefficient> {
    pub ring: Ring,
    pub generators: Vec<Polynomial<C>>,
    pub provenance: String,
}

impl<C: Coefficient> IdealBasis<C> {
    /// Drops zero generators and literal duplicates (first occurrence kept).
    pub fn new(ring: Ring, generators: Vec<Polynomial<C>>, provenance: impl Into<String>) -> Result<Self, GbError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(PolyError::DomainMismatch {
                    left: format!("{ring:?}"),
                    right: format!("{:?}", g.ring()),
                }
                .into());
            }
            if !g.is_zero() && seen.insert(g.clone()) {
                out.push(g);
            }
        }
        Ok(IdealBasis { ring, generators: out, provenance: provenance.into() })
    }
}

/// Resource limits for a Gröbner run. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub timeout: Option<Duration>,
    pub max_basis: Option<usize>,
    pub max_degree: Option<u32>,
}

impl Limits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(mut self, t: Duration) -> Self {
        self.timeout = Some(t);
        self
    }
}

/// Why a run stopped early.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResourceLimit {
    MaxDegree,
    MaxBasis,
    Timeout,
}

impl std::fmt::Display for ResourceLimit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ResourceLimit::MaxDegree => "max_degree",
            ResourceLimit::MaxBasis => "max_basis",
            ResourceLimit::Timeout => "timeout",
        };
        f.write_str(s)
    }
}

pub(crate) struct Budget {
    limits: Limits,
    start: Instant,
}

impl Budget {
    pub(crate) fn new(limits: Limits) -> Self {
        Budget { limits, start: Instant::now() }
    }

    pub(crate) fn check(&self, basis_len: usize, degree: u32) -> Option<ResourceLimit> {
        if let Some(t) = self.limits.timeout {
            if self.start.elapsed() > t {
                return Some(ResourceLimit::Timeout);
            }
        }
        if let Some(m) = self.limits.max_basis {
            if basis_len > m {
                return Some(ResourceLimit::MaxBasis);
            }
        }
        if let Some(d) = self.limits.max_degree {
            if degree > d {
                return Some(ResourceLimit::MaxDegree);
            }
        }
        None
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

/// Counters collected during a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_degree: u32,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Output of a Gröbner run.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C: Coefficient> {
    pub ring: Ring,
    pub basis: Vec<Polynomial<C>>,
    pub truncation: Option<u32>,
    pub reduced: bool,
    /// `Some` when the run stopped on a resource limit; the basis is then
    /// only a subset of a Gröbner basis of the ideal.
    pub incomplete: Option<ResourceLimit>,
    pub stats: GbStats,
}

impl<C: Coefficient> GroebnerBasis<C> {
    pub fn is_complete(&self) -> bool {
        self.incomplete.is_none()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.basis.iter().filter_map(|p| p.leading_monomial()).collect()
    }

    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(|p| p.leading_monomial().is_some_and(Monomial::is_one) && p.leading_coeff().is_some_and(|c| c.is_one()))
    }

    pub fn max_degree(&self) -> u32 {
        self.basis.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0)
    }
}

/// Three-valued membership answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        })
    }
}

/// The ring a truncated or untruncated run actually works in.
pub(crate) fn working_ring(ring: Ring, truncation: Option<u32>) -> Result<Ring, GbError> {
    match truncation {
        Some(_) => Ok(ring.with_order(MonomialOrder::NegDegReverseLex)),
        None if ring.order.is_global() => Ok(ring),
        None => Err(GbError::LocalOrderWithoutTruncation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Integer, F2};

    fn f2_ideal(n: u32, gens: &[&str]) -> IdealBasis<F2> {
        let r = Ring::grevlex(n);
        IdealBasis::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect(), "test").unwrap()
    }

    fn z_ideal(n: u32, gens: &[&str]) -> IdealBasis<Integer> {
        let r = Ring::grevlex(n);
        IdealBasis::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect(), "test").unwrap()
    }

    #[test]
    fn truncation_of_inhomogeneous_ideal() {
        // R/(x^2 + y, m^3) has basis 1, x, x^2
        let ideal = f2_ideal(2, &["x0^2 + x1"]);
        let gb = buchberger_field(&ideal, Some(3));
        assert_eq!(standard_monomial_count(&gb).unwrap(), 3);
        assert_eq!(macaulay_oracle_dim(&ideal, 3).unwrap(), 3);
    }

    #[test]
    fn field_basis_of_cyclic_relations() {
        let ideal = f2_ideal(2, &["x0^2 + x1", "x1^2 + x0"]);
        let gb = buchberger_field(&ideal, None);
        let lms: Vec<String> = gb.leading_monomials().iter().map(|m| m.to_string()).collect();
        assert!(gb.is_complete());
        for g in &ideal.generators {
            assert_eq!(is_member(g, &gb).unwrap(), Membership::Yes);
        }
        assert!(!lms.is_empty());
        assert_eq!(is_member(&parse_poly(ideal.ring, "x0").unwrap(), &gb).unwrap(), Membership::No);
    }

    #[test]
    fn integer_basis_finds_gcd() {
        let ideal = z_ideal(1, &["2*x0", "3*x0"]);
        let gb = strong_buchberger_int(&ideal);
        assert_eq!(gb.basis.len(), 1);
        assert_eq!(gb.basis[0].to_string(), "x0");
        let ideal = z_ideal(2, &["2*x0", "3*x1"]);
        let gb = strong_buchberger_int(&ideal);
        let x0x1 = parse_poly(ideal.ring, "x0*x1").unwrap();
        assert_eq!(is_member(&x0x1, &gb).unwrap(), Membership::Yes);
        let x0 = parse_poly(ideal.ring, "x0").unwrap();
        assert_eq!(is_member(&x0, &gb).unwrap(), Membership::No);
    }

    #[test]
    fn certificates_expand_back() {
        let ideal = z_ideal(2, &["2*x0 + x1", "3*x1^2 - 1", "x0*x1 + 4"]);
        let target = parse_poly(ideal.ring, "6*x0*x1^2 + 3*x1^3 - 2*x0 - x1").unwrap();
        let (m, cert) = membership_certificate(&target, &ideal, &IntOptions::default()).unwrap();
        assert_eq!(m, Membership::Yes);
        let cert = cert.unwrap();
        assert!(verify_certificate(&cert));
        let cof = cert.cofactors(10_000).unwrap();
        assert!(verify_cofactors(&target, &cert.generators, &cof));
        let mut bad = cert.clone();
        bad.element = parse_poly(ideal.ring, "x0").unwrap();
        assert!(!verify_certificate(&bad));
    }
}
