//! Framed lifting ideals over the integers.
//!
//! Each generator `s` is sent to a generic matrix `I + X_s`; every relation
//! `lhs = rhs` contributes the four entries of `M(lhs) - M(rhs)`. Inverse
//! letters are evaluated on a witness matrix `I + Y_s` together with the
//! equations `(I + X_s)(I + Y_s) = (I + Y_s)(I + X_s) = I`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{
    buchberger_field_with, cache::GbCache, is_member, membership_certificate, strong_buchberger_int_with, FieldOptions,
    GbError, GroebnerBasis, IdealBasis, IntOptions, Limits, Membership, MembershipCertificate, ResourceLimit,
};
use crate::group::{GroupPresentation, Word};
use crate::poly::{mat_word, Coefficient, Integer, PolyError, PolyMatrix2, Ring, Var, ZPoly};

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// Which generators get an inverse witness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessMode {
    /// Every generator, and every relation is used as the relator
    /// `lhs * rhs^-1`.
    All,
    /// Relations are first rewritten by moving inverse letters at either
    /// end of a side to the other side; witnesses are adjoined only for
    /// generators still occurring inverted.
    #[default]
    AsNeeded,
}

#[derive(Clone, Debug)]
pub struct LiftModel {
    pub presentation: GroupPresentation,
    pub mode: WitnessMode,
    pub ring: Ring,
    /// Generator index for each witness slot.
    pub witnessed: Vec<usize>,
    /// The relations actually encoded, after any rewriting.
    pub encoded_relations: Vec<(Word, Word)>,
    pub ideal: IdealBasis<Integer>,
}

/// Moves inverse letters at the ends of `lhs` and `rhs` across until both
/// ends are positive. `s^-1 u = v` becomes `u = s v`, `u s^-1 = v` becomes
/// `u = v s`.
fn move_inverses(lhs: &Word, rhs: &Word) -> (Word, Word) {
    let mut sides = [lhs.clone(), rhs.clone()];
    loop {
        let mut changed = false;
        for i in 0..2 {
            let (left, right) = sides.split_at_mut(1);
            let (a, b) = if i == 0 { (&mut left[0], &mut right[0]) } else { (&mut right[0], &mut left[0]) };
            if let Some(&(s, e)) = a.last() {
                if e < 0 {
                    a.pop();
                    b.push((s, -e));
                    changed = true;
                }
            }
            if let Some(&(s, e)) = a.first() {
                if e < 0 {
                    a.remove(0);
                    b.insert(0, (s, -e));
                    changed = true;
                }
            }
        }
        if !changed {
            let [l, r] = sides;
            return (l, r);
        }
    }
}

fn has_inverse(w: &Word, s: usize) -> bool {
    w.iter().any(|&(g, e)| g == s && e < 0)
}

impl LiftModel {
    pub fn num_generators(&self) -> usize {
        self.presentation.num_generators()
    }

    /// First variable of `X_s`; its entries are `x_b, x_{b+1}, x_{b+2}, x_{b+3}`
    /// in row-major order.
    pub fn x_base(&self, s: usize) -> Var {
        (4 * s) as Var
    }

    pub fn y_base(&self, s: usize) -> Option<Var> {
        self.witnessed.iter().position(|&g| g == s).map(|slot| (4 * (self.num_generators() + slot)) as Var)
    }

    pub fn generator_matrices(&self) -> (Vec<PolyMatrix2<Integer>>, Vec<Option<PolyMatrix2<Integer>>>) {
        let n = self.num_generators();
        let gens = (0..n).map(|s| PolyMatrix2::generic_unipotent(self.ring, self.x_base(s))).collect();
        let invs = (0..n).map(|s| self.y_base(s).map(|b| PolyMatrix2::generic_unipotent(self.ring, b))).collect();
        (gens, invs)
    }

    /// Human-readable name of a variable, e.g. `a[1,2]` or `inv(b)[2,2]`.
    pub fn var_name(&self, v: Var) -> String {
        let v = v as usize;
        let n = self.num_generators();
        let entry = ["1,1", "1,2", "2,1", "2,2"][v % 4];
        let block = v / 4;
        if block < n {
            format!("{}[{entry}]", self.presentation.generator_names[block])
        } else {
            format!("inv({})[{entry}]", self.presentation.generator_names[self.witnessed[block - n]])
        }
    }
}

pub fn build_lift_ideal(p: &GroupPresentation, mode: WitnessMode) -> Result<LiftModel, LiftError> {
    let n = p.num_generators();
    if n == 0 {
        return Err(LiftError::InvalidPresentation("no generators".into()));
    }
    for (l, r) in &p.relations {
        if let Some(&(s, _)) = l.iter().chain(r).find(|&&(s, _)| s >= n) {
            return Err(LiftError::InvalidPresentation(format!("relation uses generator {s} of {n}")));
        }
    }
    let encoded_relations: Vec<(Word, Word)> = match mode {
        WitnessMode::All => p.relators().into_iter().map(|w| (w, Vec::new())).collect(),
        WitnessMode::AsNeeded => p.relations.iter().map(|(l, r)| move_inverses(l, r)).collect(),
    };
    let witnessed: Vec<usize> = match mode {
        WitnessMode::All => (0..n).collect(),
        WitnessMode::AsNeeded => {
            (0..n).filter(|&s| encoded_relations.iter().any(|(l, r)| has_inverse(l, s) || has_inverse(r, s))).collect()
        }
    };
    let ring = Ring::grevlex((4 * (n + witnessed.len())) as u32);
    let mut model = LiftModel {
        presentation: p.clone(),
        mode,
        ring,
        witnessed,
        encoded_relations,
        ideal: IdealBasis::new(ring, Vec::new(), "")?,
    };
    let (gens, invs) = model.generator_matrices();
    let id = PolyMatrix2::identity(ring);
    let mut polys = Vec::new();
    for (l, r) in &model.encoded_relations {
        let ml = mat_word(ring, &gens, &invs, l)?;
        let mr = mat_word(ring, &gens, &invs, r)?;
        polys.extend(ml.sub(&mr).into_entries());
    }
    for &s in &model.witnessed {
        let y = invs[s].as_ref().unwrap();
        polys.extend(gens[s].mat_mul(y).sub(&id).into_entries());
        polys.extend(y.mat_mul(&gens[s]).sub(&id).into_entries());
    }
    model.ideal = IdealBasis::new(ring, polys, format!("framed lifting ideal of {} ({:?})", p.name, mode))?;
    Ok(model)
}

/// `tr M(word) - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceElement {
    pub word: Word,
    pub polynomial: ZPoly,
}

pub fn trace_defect(model: &LiftModel, word: &Word) -> Result<TraceElement, LiftError> {
    let (gens, invs) = model.generator_matrices();
    let m = mat_word(model.ring, &gens, &invs, word)?;
    let two = ZPoly::constant(model.ring, Integer::from(2));
    Ok(TraceElement { word: word.clone(), polynomial: &m.trace() - &two })
}

#[derive(Clone, Debug, Default)]
pub struct LiftOptions {
    pub limits: Limits,
    pub jobs: Option<usize>,
    pub cache: Option<GbCache>,
}

/// Outcome of a membership test over the integers.
#[derive(Clone, Debug, Serialize)]
pub struct LiftOutcome {
    pub member: Membership,
    /// Membership of the reduction mod 2 in the ideal mod 2.
    pub mod2: Membership,
    pub basis_size: usize,
    pub max_degree: u32,
    pub incomplete: Option<ResourceLimit>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Strong basis of the lifting ideal, via the cache when one is set.
pub fn lift_basis(model: &LiftModel, opts: &LiftOptions) -> Result<GroebnerBasis<Integer>, GbError> {
    let iopts = IntOptions { limits: opts.limits, jobs: opts.jobs, ..Default::default() };
    match &opts.cache {
        Some(c) => Ok(c.get_or_compute(&model.ideal, None, || strong_buchberger_int_with(&model.ideal, &iopts))?.0),
        None => strong_buchberger_int_with(&model.ideal, &iopts),
    }
}

/// Decides whether the element vanishes in the lifting ring. A mod-2 check
/// runs first: failure there already rules out membership over the
/// integers.
pub fn coeff_membership(model: &LiftModel, element: &TraceElement, opts: &LiftOptions) -> Result<LiftOutcome, LiftError> {
    let start = Instant::now();
    let ring2 = model.ring;
    let ideal2 = IdealBasis::new(ring2, model.ideal.generators.iter().map(|g| g.reduce_mod2()).collect(), "mod 2")?;
    let fopts = FieldOptions { limits: opts.limits, jobs: opts.jobs, ..Default::default() };
    let gb2 = match &opts.cache {
        Some(c) => c.get_or_compute(&ideal2, None, || buchberger_field_with(&ideal2, None, &fopts))?.0,
        None => buchberger_field_with(&ideal2, None, &fopts)?,
    };
    let mod2 = is_member(&element.polynomial.reduce_mod2(), &gb2)?;
    if mod2 == Membership::No {
        return Ok(LiftOutcome {
            member: Membership::No,
            mod2,
            basis_size: gb2.basis.len(),
            max_degree: gb2.max_degree(),
            incomplete: None,
            elapsed: start.elapsed(),
        });
    }
    let gb = lift_basis(model, opts)?;
    let member = is_member(&element.polynomial, &gb)?;
    Ok(LiftOutcome {
        member,
        mod2,
        basis_size: gb.basis.len(),
        max_degree: gb.max_degree(),
        incomplete: gb.incomplete,
        elapsed: start.elapsed(),
    })
}

/// Cofactors writing the element in the ideal generators, if it is a member.
pub fn coeff_certificate(
    model: &LiftModel,
    element: &TraceElement,
    opts: &LiftOptions,
) -> Result<(Membership, Option<MembershipCertificate>), LiftError> {
    let iopts = IntOptions { limits: opts.limits, jobs: opts.jobs, ..Default::default() };
    Ok(membership_certificate(&element.polynomial, &model.ideal, &iopts)?)
}

/// Integer point of the lifting variety where the element is nonzero,
/// found by searching `X_s` entries in `-bound..=bound`. Witness entries
/// are filled in from the inverse, so only unimodular `I + X_s` qualify
/// for witnessed generators. Gives up after `max_points` candidates.
pub fn find_point_certificate(model: &LiftModel, element: &TraceElement, bound: i64, max_points: usize) -> Option<Vec<Integer>> {
    let n = model.num_generators();
    let nv = model.ring.num_vars as usize;
    let side = (2 * bound + 1) as usize;
    let per_gen = side.pow(4);
    let total = per_gen.checked_pow(n as u32)?;
    if total > max_points {
        return None;
    }
    let mut point = vec![Integer::from(0); nv];
    for idx in 0..total {
        let mut rest = idx;
        let mut ok = true;
        for s in 0..n {
            let mut code = rest % per_gen;
            rest /= per_gen;
            let mut x = [0i64; 4];
            for e in x.iter_mut() {
                *e = (code % side) as i64 - bound;
                code /= side;
            }
            let b = model.x_base(s) as usize;
            for k in 0..4 {
                point[b + k] = Integer::from(x[k]);
            }
            if let Some(yb) = model.y_base(s) {
                // (I+X)^-1 - I for det(I+X) = +-1
                let (p, q, r, t) = (1 + x[0], x[1], x[2], 1 + x[3]);
                let det = p * t - q * r;
                if det != 1 && det != -1 {
                    ok = false;
                    break;
                }
                let inv = [t * det - 1, -q * det, -r * det, p * det - 1];
                for k in 0..4 {
                    point[yb as usize + k] = Integer::from(inv[k]);
                }
            }
        }
        if !ok {
            continue;
        }
        if model.ideal.generators.iter().all(|g| Coefficient::is_zero(&g.eval(&point))) && !Coefficient::is_zero(&element.polynomial.eval(&point)) {
            return Some(point);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, extraspecial_32_plus};
    use crate::poly::parse_poly;

    fn z2_model(mode: WitnessMode) -> LiftModel {
        let (_, p) = cyclic(2).unwrap();
        build_lift_ideal(&p, mode).unwrap()
    }

    #[test]
    fn involution_equations() {
        let m = z2_model(WitnessMode::AsNeeded);
        assert_eq!(m.ring.num_vars, 4);
        let r = m.ring;
        let x = |i: Var| ZPoly::var(r, i);
        let two = ZPoly::constant(r, Integer::from(2));
        let s = &(&two + &x(0)) + &x(3);
        let expect = [
            &(&(&two * &x(0)) + &(&x(0) * &x(0))) + &(&x(1) * &x(2)),
            &x(1) * &s,
            &x(2) * &s,
            &(&x(1) * &x(2)) + &(&x(3) * &(&two + &x(3))),
        ];
        for e in &expect {
            assert!(m.ideal.generators.contains(e), "missing {e}");
        }
    }

    #[test]
    fn trace_of_square() {
        let (_, p) = extraspecial_32_plus();
        let m = build_lift_ideal(&p, WitnessMode::AsNeeded).unwrap();
        let t = trace_defect(&m, &vec![(0, 2)]).unwrap();
        let want: ZPoly = parse_poly(m.ring, "x0^2 + x3^2 + 2*x0 + 2*x3 + 2*x1*x2").unwrap();
        assert_eq!(t.polynomial, want);
        assert!(trace_defect(&m, &vec![]).unwrap().polynomial.is_zero());
        // only a appears inverted (bab = a^-1 becomes baba = 1)
        assert!(m.witnessed.is_empty());
        assert_eq!(m.ring.num_vars, 16);
        let all = build_lift_ideal(&p, WitnessMode::All).unwrap();
        assert_eq!(all.ring.num_vars, 32);
    }

    #[test]
    fn involution_trace_is_not_a_member() {
        for mode in [WitnessMode::AsNeeded, WitnessMode::All] {
            let m = z2_model(mode);
            let t = trace_defect(&m, &vec![(0, 1)]).unwrap();
            let out = coeff_membership(&m, &t, &LiftOptions::default()).unwrap();
            assert_eq!(out.member, Membership::No);
            let pt = find_point_certificate(&m, &t, 2, 1_000_000).expect("point");
            assert_eq!(t.polynomial.eval(&pt), Integer::from(-2));
        }
    }

    #[test]
    fn trivial_relator_forces_zero() {
        let p = GroupPresentation {
            name: "trivial".into(),
            generator_names: vec!["s".into()],
            relations: vec![(vec![(0, 1)], vec![])],
            generator_elements: vec![0],
        };
        let m = build_lift_ideal(&p, WitnessMode::AsNeeded).unwrap();
        let gb = lift_basis(&m, &LiftOptions::default()).unwrap();
        let lms: Vec<String> = gb.basis.iter().map(|g| g.to_string()).collect();
        assert_eq!(lms, vec!["x3", "x2", "x1", "x0"]);
    }
}
