//! Normal forms, membership and standard monomials.

use std::cmp::Ordering;

use crate::poly::{Coefficient, FieldCoefficient, Integer, Monomial, MonomialOrder, Polynomial, Var, F2};

use super::{GbError, GroebnerBasis, Membership};

/// One reduction step `f -= q * w * basis[index]`.
pub(crate) type TraceStep<C> = (C, Monomial, usize);

/// Leading-monomial index for divisor lookups. Reducers are scanned in
/// insertion order, so the first eligible element always wins.
pub(crate) struct Reducers<'a, C: Coefficient> {
    polys: Vec<&'a Polynomial<C>>,
    masks: Vec<u64>,
    degrees: Vec<u32>,
}

impl<'a, C: Coefficient> Reducers<'a, C> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Polynomial<C>>) -> Self {
        let polys: Vec<_> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys.iter().map(|p| p.leading_monomial().unwrap().divmask()).collect();
        let degrees = polys.iter().map(|p| p.leading_monomial().unwrap().degree()).collect();
        Reducers { polys, masks, degrees }
    }

    pub(crate) fn get(&self, i: usize) -> &'a Polynomial<C> {
        self.polys[i]
    }

    /// Reducers whose leading monomial divides `m`, in scan order.
    fn divisors<'s>(&'s self, m: &'s Monomial) -> impl Iterator<Item = usize> + 's {
        let mask = m.divmask();
        let deg = m.degree();
        (0..self.polys.len()).filter(move |&i| {
            self.degrees[i] <= deg
                && self.masks[i] & !mask == 0
                && self.polys[i].leading_monomial().unwrap().divides(m)
        })
    }
}

/// Geometric buckets holding a polynomial as a few sorted runs of
/// geometrically growing length. Runs are stored in ascending order so the
/// leading term of a run sits at its end.
struct GeoBucket<C: Coefficient> {
    runs: Vec<Vec<(C, Monomial)>>,
    order: MonomialOrder,
}

impl<C: Coefficient> GeoBucket<C> {
    fn new(order: MonomialOrder, terms: Vec<(C, Monomial)>) -> Self {
        let mut g = GeoBucket { runs: Vec::new(), order };
        let mut asc = terms;
        asc.reverse();
        g.insert_run(asc);
        g
    }

    fn slot(len: usize) -> usize {
        let mut i = 0;
        let mut cap = 8;
        while len > cap {
            cap *= 4;
            i += 1;
        }
        i
    }

    fn insert_run(&mut self, mut run: Vec<(C, Monomial)>) {
        loop {
            if run.is_empty() {
                return;
            }
            let i = Self::slot(run.len());
            if self.runs.len() <= i {
                self.runs.resize_with(i + 1, Vec::new);
            }
            if self.runs[i].is_empty() {
                self.runs[i] = run;
                return;
            }
            let other = std::mem::take(&mut self.runs[i]);
            run = merge_ascending(other, run, self.order);
        }
    }

    /// Adds `-q * w * tail`, where `tail` is sorted descending; products of
    /// degree `>= trunc` are dropped.
    fn sub_scaled(&mut self, q: &C, w: &Monomial, tail: &[(C, Monomial)], trunc: Option<u32>) {
        let wd = w.degree();
        let nq = q.neg();
        let mut run: Vec<(C, Monomial)> = Vec::with_capacity(tail.len());
        for (c, m) in tail.iter().rev() {
            if trunc.is_some_and(|k| m.degree() + wd >= k) {
                continue;
            }
            let pc = c.mul(&nq);
            if !pc.is_zero() {
                run.push((pc, m.mul(w)));
            }
        }
        self.insert_run(run);
    }

    /// Removes and returns the leading term, or `None` when empty.
    fn pop_leading(&mut self) -> Option<(C, Monomial)> {
        loop {
            let mut best: Option<usize> = None;
            for (i, r) in self.runs.iter().enumerate() {
                if let Some(t) = r.last() {
                    best = match best {
                        Some(b) if self.order.compare(&self.runs[b].last().unwrap().1, &t.1) != Ordering::Less => Some(b),
                        _ => Some(i),
                    };
                }
            }
            let b = best?;
            let (mut c, m) = self.runs[b].pop().unwrap();
            for i in 0..self.runs.len() {
                if i != b && self.runs[i].last().is_some_and(|t| t.1 == m) {
                    let (c2, _) = self.runs[i].pop().unwrap();
                    c = c.add(&c2);
                }
            }
            if !c.is_zero() {
                return Some((c, m));
            }
        }
    }

    /// Remaining terms, sorted descending.
    fn into_descending(self) -> Vec<(C, Monomial)> {
        let order = self.order;
        let mut acc: Vec<(C, Monomial)> = Vec::new();
        for r in self.runs {
            acc = merge_ascending(acc, r, order);
        }
        acc.reverse();
        acc
    }
}

fn merge_ascending<C: Coefficient>(a: Vec<(C, Monomial)>, b: Vec<(C, Monomial)>, order: MonomialOrder) -> Vec<(C, Monomial)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => order.compare(&x.1, &y.1),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (c1, m) = ia.next().unwrap();
                let (c2, _) = ib.next().unwrap();
                let c = c1.add(&c2);
                if !c.is_zero() {
                    out.push((c, m));
                }
            }
        }
    }
    out
}

/// Full reduction over a field. With `top_only`, stops at the first
/// irreducible term.
pub(crate) fn field_reduce<C: FieldCoefficient>(
    f: &Polynomial<C>,
    reducers: &Reducers<'_, C>,
    trunc: Option<u32>,
    top_only: bool,
    mut trace: Option<&mut Vec<TraceStep<C>>>,
) -> Polynomial<C> {
    let ring = f.ring();
    let terms = match trunc {
        Some(k) => f.truncate(k).into_terms(),
        None => f.terms().to_vec(),
    };
    let mut bucket = GeoBucket::new(ring.order, terms);
    let mut done: Vec<(C, Monomial)> = Vec::new();
    while let Some((c, m)) = bucket.pop_leading() {
        let hit = reducers.divisors(&m).next();
        match hit {
            Some(ri) => {
                let r = reducers.get(ri);
                let (lc, lm) = r.leading_term().unwrap();
                let q = c.mul(&lc.inv());
                let w = lm.quotient_of(&m);
                bucket.sub_scaled(&q, &w, &r.terms()[1..], trunc);
                if let Some(t) = trace.as_deref_mut() {
                    t.push((q, w, ri));
                }
            }
            None => {
                done.push((c, m));
                if top_only {
                    done.extend(bucket.into_descending());
                    break;
                }
            }
        }
    }
    Polynomial::from_sorted_unchecked(ring, done)
}

/// Full strong reduction over the integers: each term `a * m` whose
/// monomial is divisible by `LM(r)` has its coefficient replaced by the
/// least nonnegative residue modulo `LC(r)`, scanning reducers in order
/// until no reducer applies.
pub(crate) fn int_reduce(
    f: &Polynomial<Integer>,
    reducers: &Reducers<'_, Integer>,
    top_only: bool,
    mut trace: Option<&mut Vec<TraceStep<Integer>>>,
) -> Polynomial<Integer> {
    let ring = f.ring();
    let mut bucket = GeoBucket::new(ring.order, f.terms().to_vec());
    let mut done: Vec<(Integer, Monomial)> = Vec::new();
    let mut pending: Option<(Integer, Monomial)> = None;
    loop {
        let (a, m) = match pending.take() {
            Some(t) => t,
            None => match bucket.pop_leading() {
                Some(t) => t,
                None => break,
            },
        };
        let hit = reducers.divisors(&m).find(|&i| {
            let lc = reducers.get(i).leading_coeff().unwrap();
            a.is_negative() || a >= *lc
        });
        match hit {
            Some(ri) => {
                let r = reducers.get(ri);
                let (lc, lm) = r.leading_term().unwrap();
                let (q, rem) = a.div_rem_euclid(lc);
                let w = lm.quotient_of(&m);
                bucket.sub_scaled(&q, &w, &r.terms()[1..], None);
                if let Some(t) = trace.as_deref_mut() {
                    t.push((q, w, ri));
                }
                if !rem.is_zero() {
                    // the remainder stays leading: tail terms are smaller
                    pending = Some((rem, m));
                }
            }
            None => {
                done.push((a, m));
                if top_only {
                    done.extend(bucket.into_descending());
                    break;
                }
            }
        }
    }
    Polynomial::from_sorted_unchecked(ring, done)
}

/// Coefficient domains the engine can reduce over.
pub trait GbCoefficient: Coefficient {
    /// Full normal form of `f` against `basis`.
    fn reduce_with(f: &Polynomial<Self>, basis: &[Polynomial<Self>], trunc: Option<u32>) -> Polynomial<Self>;
}

impl GbCoefficient for F2 {
    fn reduce_with(f: &Polynomial<Self>, basis: &[Polynomial<Self>], trunc: Option<u32>) -> Polynomial<Self> {
        field_reduce(f, &Reducers::new(basis), trunc, false, None)
    }
}

impl GbCoefficient for Integer {
    fn reduce_with(f: &Polynomial<Self>, basis: &[Polynomial<Self>], trunc: Option<u32>) -> Polynomial<Self> {
        let f = match trunc {
            Some(k) => f.truncate(k),
            None => f.clone(),
        };
        int_reduce(&f, &Reducers::new(basis), false, None)
    }
}

/// Brings `f` into the basis ring (and into `R / m^k` for truncated bases).
pub(crate) fn to_basis_ring<C: Coefficient>(f: &Polynomial<C>, b: &GroebnerBasis<C>) -> Result<Polynomial<C>, GbError> {
    if f.ring().num_vars != b.ring.num_vars {
        return Err(crate::poly::PolyError::DomainMismatch {
            left: format!("{} vars", f.ring().num_vars),
            right: format!("{} vars", b.ring.num_vars),
        }
        .into());
    }
    let g = f.with_order(b.ring.order);
    Ok(match b.truncation {
        Some(k) => g.truncate(k),
        None => g,
    })
}

/// Normal form of `f` modulo `B` (modulo `B + m^k` when `B` is truncated
/// at `k`), returned in `f`'s own monomial order.
pub fn normal_form<C: GbCoefficient>(f: &Polynomial<C>, b: &GroebnerBasis<C>) -> Result<Polynomial<C>, GbError> {
    let g = to_basis_ring(f, b)?;
    let nf = C::reduce_with(&g, &b.basis, b.truncation);
    Ok(nf.with_order(f.ring().order))
}

/// Membership of `f` in the ideal of `B` (plus `m^k` when truncated).
/// A nonzero normal form against an incomplete basis proves nothing.
pub fn is_member<C: GbCoefficient>(f: &Polynomial<C>, b: &GroebnerBasis<C>) -> Result<Membership, GbError> {
    let nf = normal_form(f, b)?;
    Ok(if nf.is_zero() {
        Membership::Yes
    } else if b.is_complete() {
        Membership::No
    } else {
        Membership::Unknown
    })
}

/// Monomials of degree below the truncation degree that no leading monomial
/// divides, in increasing degree.
pub fn standard_monomials<C: Coefficient>(b: &GroebnerBasis<C>) -> Result<Vec<Monomial>, GbError> {
    let k = b.truncation.ok_or(GbError::NotTruncated)?;
    let lms: Vec<&Monomial> = b.leading_monomials();
    let reducible = |m: &Monomial| lms.iter().any(|l| l.divides(m));
    let mut out = Vec::new();
    let n = b.ring.num_vars as usize;
    // depth-first over exponent vectors, variables in increasing order;
    // a divisible monomial has only divisible multiples
    fn rec(
        m: &Monomial,
        start: usize,
        n: usize,
        k: u32,
        reducible: &dyn Fn(&Monomial) -> bool,
        out: &mut Vec<Monomial>,
    ) {
        out.push(m.clone());
        if m.degree() + 1 >= k {
            return;
        }
        for v in start..n {
            let next = m.mul(&Monomial::var(v as Var));
            if !reducible(&next) {
                rec(&next, v, n, k, reducible, out);
            }
        }
    }
    if k > 0 && !reducible(&Monomial::one()) {
        rec(&Monomial::one(), 0, n, k, &reducible, &mut out);
    }
    out.sort_by(|a, b| MonomialOrder::GradedReverseLex.compare(a, b));
    Ok(out)
}

/// `dim R / (I + m^k)` over the field, read off a basis truncated at `k`.
pub fn standard_monomial_count<C: Coefficient>(b: &GroebnerBasis<C>) -> Result<usize, GbError> {
    standard_monomials(b).map(|v| v.len())
}
