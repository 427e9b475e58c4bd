//! Counting two-dimensional semisimple representations and comparing the
//! count with the dimension of the pseudodeformation ring.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::Membership;
use crate::group::{class_structure, FiniteGroup, NamedGroup, Word};
use crate::liftring::{build_lift_ideal, coeff_membership, trace_defect, LiftError, LiftOptions, WitnessMode};
use crate::psring::{d_of_ps, witness_membership, PsError, PsOptions};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("irreducible degrees are not determined: {} multisets fit", profile.nonlinear_degree_multisets.len())]
    AmbiguousProfile { profile: Box<IrrepProfile> },
    #[error("no closed-form bound for family {0}")]
    UnsupportedFamily(Family),
    #[error("group of order {order} is not in family {family}")]
    NotInFamily { family: Family, order: usize },
    #[error("{0}")]
    Missing(String),
    #[error(transparent)]
    Ps(#[from] PsError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Abelian,
    Dihedral,
    Extraspecial,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Abelian => "abelian",
            Family::Dihedral => "dihedral",
            Family::Extraspecial => "extraspecial",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "abelian" => Ok(Family::Abelian),
            "dihedral" => Ok(Family::Dihedral),
            "extraspecial" | "extraspecial32" => Ok(Family::Extraspecial),
            _ => Err(format!("unknown family `{s}` (abelian, dihedral, extraspecial)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepProfile {
    pub order: usize,
    pub num_classes: usize,
    /// Number of one-dimensional characters, `|G^ab|`.
    pub n1: usize,
    /// Every nonincreasing list of degrees `>= 2` with the right count and
    /// sum of squares.
    pub nonlinear_degree_multisets: Vec<Vec<usize>>,
    pub n2: Option<usize>,
    /// Two-dimensional semisimple representations: irreducible ones plus
    /// unordered pairs of characters.
    pub n_g: Option<usize>,
}

fn degree_multisets(count: usize, sum_sq: usize, max_deg: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if count == 0 {
        if sum_sq == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for d in (2..=max_deg).rev() {
        let sq = d * d;
        if sq * count > sum_sq {
            continue;
        }
        if 4 * count > sum_sq {
            break;
        }
        cur.push(d);
        degree_multisets(count - 1, sum_sq - sq, d, out, cur);
        cur.pop();
    }
}

/// Candidate degree data of the irreducible complex representations, from
/// the class count and `|G^ab|` alone.
pub fn candidate_profile(g: &FiniteGroup) -> IrrepProfile {
    let cs = class_structure(g);
    let order = g.order();
    let n1 = cs.abelianization.order();
    let count = cs.num_classes() - n1;
    let sum_sq = order - n1;
    let mut multisets = Vec::new();
    let max_deg = (sum_sq as f64).sqrt() as usize + 1;
    degree_multisets(count, sum_sq, max_deg, &mut multisets, &mut Vec::new());
    let n2 = match multisets.as_slice() {
        [only] => Some(only.iter().filter(|&&d| d == 2).count()),
        _ => None,
    };
    IrrepProfile {
        order,
        num_classes: cs.num_classes(),
        n1,
        nonlinear_degree_multisets: multisets,
        n2,
        n_g: n2.map(|n2| n2 + n1 * (n1 + 1) / 2),
    }
}

pub fn irrep_profile(g: &FiniteGroup) -> Result<IrrepProfile, RepError> {
    let p = candidate_profile(g);
    if p.n2.is_none() {
        return Err(RepError::AmbiguousProfile { profile: Box::new(p) });
    }
    Ok(p)
}

/// `m` with `g` dihedral of order `2m`: an element of order `m` and an
/// involution outside its span inverting it.
fn dihedral_m(g: &FiniteGroup) -> Option<usize> {
    let n = g.order();
    if !n.is_multiple_of(2) || n < 4 {
        return None;
    }
    let m = n / 2;
    let r = (0..n).find(|&x| g.element_order(x) == m)?;
    let span = g.generated_subgroup(&[r]);
    (0..n).find(|&s| !span.contains(&s) && g.element_order(s) == 2 && g.conjugate(r, s) == g.inv(r)).map(|_| m)
}

/// Upper bound on `d(R^ps)` from the spanning set of traces, determinants
/// and products of traces, in the two families where it has a closed form.
pub fn span_upper_bound(g: &FiniteGroup, family: Family) -> Result<usize, RepError> {
    match family {
        Family::Abelian => {
            if !g.is_abelian() {
                return Err(RepError::NotInFamily { family, order: g.order() });
            }
            let l = g.order();
            Ok(l * (l + 1) / 2)
        }
        Family::Dihedral => {
            let m = dihedral_m(g).ok_or(RepError::NotInFamily { family, order: g.order() })?;
            Ok((m + 18) / 2)
        }
        Family::Extraspecial => Err(RepError::UnsupportedFamily(family)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    FreeIsomorphic,
    Distinct,
    Inconclusive,
}

/// The pair of facts separating the two rings: `T(w) - 2` survives in the
/// pseudodeformation ring modulo `m^3` yet vanishes in the lifting ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub element: String,
    pub ps_k: u32,
    pub ps_member: Membership,
    pub lift_member: Membership,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub family: Family,
    pub upper_bound_d_ps: Option<usize>,
    pub lower_bound_rank: Option<usize>,
    pub computed_dim: Option<usize>,
    pub witness: Option<WitnessRecord>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default)]
pub struct VerdictOptions {
    pub ps: PsOptions,
    pub lift: LiftOptions,
    pub witness_mode: WitnessMode,
}

/// Default witness word `a^2` for the extraspecial family.
pub fn default_witness_word() -> Word {
    vec![(0, 2)]
}

/// `Distinct` exactly when `T(w) - 2` survives modulo `m^3` in the
/// pseudodeformation ring but lies in the integral lifting ideal.
pub fn witness_verdict(ps_member: Membership, lift_member: Membership) -> Verdict {
    if ps_member == Membership::No && lift_member == Membership::Yes {
        Verdict::Distinct
    } else {
        Verdict::Inconclusive
    }
}

pub fn iso_verdict(group: &NamedGroup, family: Family, opts: &VerdictOptions) -> Result<BoundReport, RepError> {
    let g = &group.group;
    let lower = candidate_profile(g).n_g;
    let computed = Some(d_of_ps(g, &opts.ps)?);
    match family {
        Family::Abelian | Family::Dihedral => {
            let upper = span_upper_bound(g, family)?;
            let verdict = if Some(upper) == lower && Some(upper) == computed {
                Verdict::FreeIsomorphic
            } else {
                Verdict::Inconclusive
            };
            Ok(BoundReport { family, upper_bound_d_ps: Some(upper), lower_bound_rank: lower, computed_dim: computed, witness: None, verdict })
        }
        Family::Extraspecial => {
            let pres = group.presentation.as_ref().ok_or_else(|| RepError::Missing("extraspecial verdict needs the presentation".into()))?;
            let word = default_witness_word();
            let element = g.eval_word(&word, &pres.generator_elements);
            let ps_k = 3;
            let ps_member = witness_membership(g, element, ps_k, &opts.ps)?;
            let model = build_lift_ideal(pres, opts.witness_mode)?;
            let t = trace_defect(&model, &word)?;
            let lift_member = coeff_membership(&model, &t, &opts.lift)?.member;
            let verdict = witness_verdict(ps_member, lift_member);
            let witness = WitnessRecord { element: pres.format_word(&word), ps_k, ps_member, lift_member };
            Ok(BoundReport {
                family,
                upper_bound_d_ps: None,
                lower_bound_rank: lower,
                computed_dim: computed,
                witness: Some(witness),
                verdict,
            })
        }
    }
}
