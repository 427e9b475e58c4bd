//! Strong Gröbner bases over the integers.
//!
//! Pairs are S-pairs (term lcm of the leading terms) and G-pairs (Bézout
//! combination of the leading coefficients at the monomial lcm). A finished
//! basis is strong: the leading term of every ideal element is divisible,
//! coefficient and monomial, by some leading term of the basis.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::poly::{Coefficient, Integer, Monomial, Polynomial, Ring, ZPoly};

use super::pairs::{gebauer_moeller, pop_min_batch, Candidate, Pair, TermLcm};
use super::reduce::{int_reduce, Reducers, TraceStep};
use super::{working_ring, Budget, GbError, GbStats, GroebnerBasis, IdealBasis, Limits, Membership};

#[derive(Clone, Debug, Default)]
pub struct IntOptions {
    pub limits: Limits,
    pub jobs: Option<usize>,
    /// Process one randomly chosen pending item at a time.
    pub shuffle_seed: Option<u64>,
    /// Disable the product and chain criteria.
    pub no_criteria: bool,
}

/// A polynomial the certificate refers to: an input generator or an
/// earlier derived node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeRef {
    Generator(usize),
    Node(usize),
}

/// `c * m * node`.
pub type CertTerm = (Integer, Monomial, NodeRef);

/// Membership proof as a derivation: node `j` is the sum of its terms,
/// each referring only to generators and nodes before `j`, so every node
/// lies in the ideal; `element` must equal the sum of `combination`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub element: ZPoly,
    pub generators: Vec<ZPoly>,
    pub nodes: Vec<Vec<CertTerm>>,
    pub combination: Vec<CertTerm>,
}

fn eval_terms(ring: Ring, terms: &[CertTerm], gens: &[ZPoly], nodes: &[ZPoly]) -> Option<ZPoly> {
    let mut acc = ZPoly::zero(ring);
    for (c, m, r) in terms {
        let p = match *r {
            NodeRef::Generator(i) => gens.get(i)?,
            NodeRef::Node(j) => nodes.get(j)?,
        };
        acc = acc.sub_mul_term(&c.neg(), m, p, None);
    }
    Some(acc)
}

impl MembershipCertificate {
    /// Expands the derivation into explicit cofactors `element = sum
    /// cofactors[i] * generators[i]`, or `None` once an intermediate
    /// cofactor exceeds `max_terms` terms.
    pub fn cofactors(&self, max_terms: usize) -> Option<Vec<ZPoly>> {
        let ring = self.element.ring().with_order(self.generators.first()?.ring().order);
        let n = self.generators.len();
        let expand = |terms: &[CertTerm], nodes: &[Vec<ZPoly>]| -> Option<Vec<ZPoly>> {
            let mut cof = vec![ZPoly::zero(ring); n];
            for (c, m, r) in terms {
                match *r {
                    NodeRef::Generator(i) => cof[i] = cof[i].sub_mul_term(&c.neg(), m, &ZPoly::one(ring), None),
                    NodeRef::Node(j) => {
                        for (dst, src) in cof.iter_mut().zip(&nodes[j]) {
                            *dst = dst.sub_mul_term(&c.neg(), m, src, None);
                        }
                    }
                }
            }
            (cof.iter().map(|p| p.len()).sum::<usize>() <= max_terms).then_some(cof)
        };
        let mut nodes: Vec<Vec<ZPoly>> = Vec::with_capacity(self.nodes.len());
        for t in &self.nodes {
            let e = expand(t, &nodes)?;
            nodes.push(e);
        }
        expand(&self.combination, &nodes)
    }
}

/// Replays the derivation and checks that it produces `element`.
pub fn verify_certificate(cert: &MembershipCertificate) -> bool {
    let Some(first) = cert.generators.first() else {
        return cert.element.is_zero() && cert.combination.is_empty();
    };
    let ring = first.ring();
    if cert.generators.iter().any(|g| g.ring() != ring) || cert.element.ring().num_vars != ring.num_vars {
        return false;
    }
    let mut nodes: Vec<ZPoly> = Vec::with_capacity(cert.nodes.len());
    for t in &cert.nodes {
        match eval_terms(ring, t, &cert.generators, &nodes) {
            Some(p) => nodes.push(p),
            None => return false,
        }
    }
    eval_terms(ring, &cert.combination, &cert.generators, &nodes) == Some(cert.element.with_order(ring.order))
}

/// `element == sum cofactors[i] * generators[i]` by direct expansion.
pub fn verify_cofactors(element: &ZPoly, generators: &[ZPoly], cofactors: &[ZPoly]) -> bool {
    if generators.len() != cofactors.len() || generators.is_empty() {
        return false;
    }
    let ring = generators[0].ring();
    let mut acc = ZPoly::zero(ring);
    for (c, g) in cofactors.iter().zip(generators) {
        match c.checked_mul(g).and_then(|p| acc.checked_add(&p)) {
            Ok(s) => acc = s,
            Err(_) => return false,
        }
    }
    acc == element.with_order(ring.order)
}

pub fn strong_buchberger_int(ideal: &IdealBasis<Integer>) -> GroebnerBasis<Integer> {
    strong_buchberger_int_with(ideal, &IntOptions::default()).expect("unlimited run cannot fail")
}

pub fn strong_buchberger_int_with(ideal: &IdealBasis<Integer>, opts: &IntOptions) -> Result<GroebnerBasis<Integer>, GbError> {
    let ring = working_ring(ideal.ring, None)?;
    Ok(in_pool(opts.jobs, || Engine::new(ring, opts, false).run(ideal)))
}

/// Decides membership of `f` and, when it holds, returns cofactors
/// expressing `f` in the original generators.
pub fn membership_certificate(
    f: &ZPoly,
    ideal: &IdealBasis<Integer>,
    opts: &IntOptions,
) -> Result<(Membership, Option<MembershipCertificate>), GbError> {
    let ring = working_ring(ideal.ring, None)?;
    let (gb, engine) = in_pool(opts.jobs, || {
        let mut e = Engine::new(ring, opts, true);
        let gb = e.run(ideal);
        (gb, e)
    });
    let g = f.with_order(ring.order);
    let idx = engine.active_indices();
    let reducers = Reducers::new(idx.iter().map(|&i| &engine.polys[i]));
    let mut trace = Vec::new();
    let nf = int_reduce(&g, &reducers, false, Some(&mut trace));
    if !nf.is_zero() {
        let m = if gb.is_complete() { Membership::No } else { Membership::Unknown };
        return Ok((m, None));
    }
    let combination = trace.iter().map(|(q, w, ri)| (q.clone(), w.clone(), NodeRef::Node(idx[*ri]))).collect();
    let cert = MembershipCertificate {
        element: g,
        generators: ideal.generators.iter().map(|p| p.with_order(ring.order)).collect(),
        nodes: engine.derivations,
        combination,
    };
    Ok((Membership::Yes, Some(cert)))
}

fn in_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}

#[derive(Clone, Debug)]
enum Item {
    Input(usize),
    S(Pair<TermLcm>),
    G(Pair<TermLcm>),
}

impl Item {
    fn sugar(&self, input_sugar: &[u32]) -> u32 {
        match self {
            Item::Input(k) => input_sugar[*k],
            Item::S(p) | Item::G(p) => p.sugar,
        }
    }
}

struct Engine<'o> {
    ring: Ring,
    opts: &'o IntOptions,
    polys: Vec<ZPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    s_pairs: Vec<Pair<TermLcm>>,
    g_pairs: Vec<Pair<TermLcm>>,
    track: bool,
    derivations: Vec<Vec<CertTerm>>,
    stats: GbStats,
}

fn lt_key(p: &ZPoly) -> TermLcm {
    let (c, m) = p.leading_term().unwrap();
    TermLcm { coeff: c.clone(), mono: m.clone() }
}

impl<'o> Engine<'o> {
    fn new(ring: Ring, opts: &'o IntOptions, track: bool) -> Self {
        Engine {
            ring,
            opts,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            s_pairs: Vec::new(),
            g_pairs: Vec::new(),
            track,
            derivations: Vec::new(),
            stats: GbStats::default(),
        }
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&i| self.active[i]).collect()
    }

    /// Some active leading term divides `c * m` coefficient- and monomialwise.
    fn strongly_reducible(&self, c: &Integer, m: &Monomial) -> bool {
        (0..self.polys.len()).any(|i| {
            self.active[i] && {
                let (lc, lm) = self.polys[i].leading_term().unwrap();
                lm.divides(m) && lc.divides(c)
            }
        })
    }

    /// The unreduced item polynomial and, when tracking, its derivation.
    fn item_poly(&self, item: &Item, inputs: &[ZPoly]) -> (ZPoly, Option<Vec<CertTerm>>) {
        let zero = ZPoly::zero(self.ring);
        match item {
            Item::Input(k) => {
                let d = self.track.then(|| vec![(Integer::from(1), Monomial::one(), NodeRef::Generator(*k))]);
                (inputs[*k].clone(), d)
            }
            Item::S(p) | Item::G(p) => {
                let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
                let (fc, fm) = f.leading_term().unwrap();
                let (gc, gm) = g.leading_term().unwrap();
                let wf = fm.quotient_of(&p.lcm.mono);
                let wg = gm.quotient_of(&p.lcm.mono);
                let (a, b) = match item {
                    // a*wf*f + b*wg*g with a*fc = -b*gc = lcm
                    Item::S(_) => (p.lcm.coeff.div_exact(fc), p.lcm.coeff.div_exact(gc).neg()),
                    // u*fc + v*gc = gcd
                    _ => {
                        let (_, u, v) = fc.ext_gcd(gc);
                        (u, v)
                    }
                };
                let poly = zero.sub_mul_term(&a.neg(), &wf, f, None).sub_mul_term(&b.neg(), &wg, g, None);
                let d = self.track.then(|| vec![(a, wf, NodeRef::Node(p.i)), (b, wg, NodeRef::Node(p.j))]);
                (poly, d)
            }
        }
    }

    fn apply_trace(d: &mut Vec<CertTerm>, trace: &[TraceStep<Integer>], idx: &[usize]) {
        d.extend(trace.iter().map(|(q, w, ri)| (q.neg(), w.clone(), NodeRef::Node(idx[*ri]))));
    }

    fn insert(&mut self, mut h: ZPoly, sugar: u32, mut deriv: Option<Vec<CertTerm>>) {
        if h.leading_coeff().unwrap().is_negative() {
            h = -&h;
            if let Some(d) = deriv.as_mut() {
                for t in d.iter_mut() {
                    t.0 = t.0.neg();
                }
            }
        }
        let key_h = lt_key(&h);
        let hi = self.polys.len();
        let mut cands = Vec::new();
        for g in 0..self.polys.len() {
            if !self.active[g] {
                continue;
            }
            let key_g = lt_key(&self.polys[g]);
            let mono = key_g.mono.lcm(&key_h.mono);
            let coeff = key_g.coeff.lcm(&key_h.coeff);
            let sugar_g = self.sugar[g] + mono.degree() - key_g.mono.degree();
            let sugar_h = sugar + mono.degree() - key_h.mono.degree();
            let pair_sugar = sugar_g.max(sugar_h);
            let product = !self.opts.no_criteria && key_g.mono.is_coprime(&key_h.mono) && key_g.coeff.gcd(&key_h.coeff).is_one();
            if !key_g.coeff.divides(&key_h.coeff) && !key_h.coeff.divides(&key_g.coeff) {
                let d = key_g.coeff.gcd(&key_h.coeff);
                let lcm = TermLcm { coeff: d, mono: mono.clone() };
                self.g_pairs.push(Pair { i: g, j: hi, lcm, sugar: pair_sugar });
            }
            cands.push(Candidate { g, lcm: TermLcm { coeff, mono }, sugar: pair_sugar, product });
        }
        if self.opts.no_criteria {
            for c in cands {
                self.s_pairs.push(Pair { i: c.g, j: hi, lcm: c.lcm, sugar: c.sugar });
            }
        } else {
            let polys = &self.polys;
            let lcm_with_h = |i: usize| {
                let k = lt_key(&polys[i]);
                TermLcm { coeff: k.coeff.lcm(&key_h.coeff), mono: k.mono.lcm(&key_h.mono) }
            };
            gebauer_moeller(&mut self.s_pairs, cands, hi, &key_h, lcm_with_h);
        }
        for g in 0..self.polys.len() {
            if self.active[g] {
                let (lc, lm) = self.polys[g].leading_term().unwrap();
                if key_h.mono.divides(lm) && key_h.coeff.divides(lc) {
                    self.active[g] = false;
                }
            }
        }
        self.stats.max_degree = self.stats.max_degree.max(h.total_degree().unwrap_or(0));
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        if let Some(d) = deriv {
            self.derivations.push(d);
        }
    }

    fn next_batch(&mut self, pending: &mut Vec<usize>, input_sugar: &[u32], rng: Option<&mut ChaCha8Rng>) -> Vec<Item> {
        if let Some(rng) = rng {
            let total = pending.len() + self.s_pairs.len() + self.g_pairs.len();
            if total == 0 {
                return Vec::new();
            }
            let pick = *(0..total).collect::<Vec<_>>().choose(rng).unwrap();
            return if pick < pending.len() {
                vec![Item::Input(pending.swap_remove(pick))]
            } else if pick < pending.len() + self.s_pairs.len() {
                vec![Item::S(self.s_pairs.swap_remove(pick - pending.len()))]
            } else {
                vec![Item::G(self.g_pairs.swap_remove(pick - pending.len() - self.s_pairs.len()))]
            };
        }
        let min = pending
            .iter()
            .map(|&k| input_sugar[k])
            .chain(self.s_pairs.iter().map(|p| p.sugar))
            .chain(self.g_pairs.iter().map(|p| p.sugar))
            .min();
        let Some(min) = min else { return Vec::new() };
        let order = self.ring.order;
        let cmp = |a: &Monomial, b: &Monomial| order.compare(a, b);
        let mut items = Vec::new();
        let (now, later): (Vec<usize>, Vec<usize>) = pending.drain(..).partition(|&k| input_sugar[k] == min);
        *pending = later;
        items.extend(now.into_iter().map(Item::Input));
        // G-pairs first: they tend to shrink leading coefficients
        if self.g_pairs.iter().any(|p| p.sugar == min) {
            items.extend(pop_min_batch(&mut self.g_pairs, cmp).into_iter().map(Item::G));
        }
        if self.s_pairs.iter().any(|p| p.sugar == min) {
            items.extend(pop_min_batch(&mut self.s_pairs, cmp).into_iter().map(Item::S));
        }
        items
    }

    fn run(&mut self, ideal: &IdealBasis<Integer>) -> GroebnerBasis<Integer> {
        let budget = Budget::new(self.opts.limits);
        let inputs: Vec<ZPoly> = ideal.generators.iter().map(|g| g.with_order(self.ring.order)).collect();
        let input_sugar: Vec<u32> = inputs.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        let mut pending: Vec<usize> = (0..inputs.len()).filter(|&k| !inputs[k].is_zero()).collect();
        let mut rng = self.opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
        let mut incomplete = None;

        loop {
            let mut batch = self.next_batch(&mut pending, &input_sugar, rng.as_mut());
            if batch.is_empty() {
                break;
            }
            // a G-pair is only needed while its leading term is not yet covered
            batch.retain(|it| match it {
                Item::G(p) => !self.strongly_reducible(&p.lcm.coeff, &p.lcm.mono),
                _ => true,
            });
            if batch.is_empty() {
                continue;
            }
            let degree = batch[0].sugar(&input_sugar);
            let active_count = self.active.iter().filter(|&&a| a).count();
            if let Some(limit) = budget.check(active_count, degree) {
                incomplete = Some(limit);
                break;
            }
            self.stats.pairs_considered += batch.len();

            let reduced: Vec<(ZPoly, Option<Vec<CertTerm>>, u32)> = {
                let idx = self.active_indices();
                let reducers = Reducers::new(idx.iter().map(|&i| &self.polys[i]));
                let this = &*self;
                let work = |item: &Item| {
                    let (f, cof) = this.item_poly(item, &inputs);
                    let mut trace = Vec::new();
                    let r = int_reduce(&f, &reducers, true, this.track.then_some(&mut trace));
                    let cof = cof.map(|mut c| {
                        Self::apply_trace(&mut c, &trace, &idx);
                        c
                    });
                    (r, cof, item.sugar(&input_sugar))
                };
                if batch.len() > 1 {
                    batch.par_iter().map(work).collect()
                } else {
                    batch.iter().map(work).collect()
                }
            };
            for (r, cof, sugar) in reduced {
                self.stats.pairs_reduced += 1;
                if r.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                let idx = self.active_indices();
                let mut trace = Vec::new();
                let r = {
                    let reducers = Reducers::new(idx.iter().map(|&i| &self.polys[i]));
                    int_reduce(&r, &reducers, false, self.track.then_some(&mut trace))
                };
                if r.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                let cof = cof.map(|mut c| {
                    Self::apply_trace(&mut c, &trace, &idx);
                    c
                });
                self.insert(r, sugar, cof);
            }
        }

        let basis = canonical_basis(&self.polys, &self.active);
        self.stats.elapsed = budget.elapsed();
        GroebnerBasis { ring: self.ring, basis, truncation: None, reduced: true, incomplete, stats: self.stats.clone() }
    }
}

/// Minimal strong basis with positive leading coefficients and fully reduced
/// tails, sorted by increasing leading monomial (then coefficient).
fn canonical_basis(polys: &[ZPoly], active: &[bool]) -> Vec<ZPoly> {
    let mut keep: Vec<&ZPoly> = polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
    if keep.is_empty() {
        return Vec::new();
    }
    let order = keep[0].ring().order;
    keep.sort_by(|a, b| {
        let (ac, am) = a.leading_term().unwrap();
        let (bc, bm) = b.leading_term().unwrap();
        order.compare(am, bm).then(ac.cmp(bc))
    });
    // drop leading terms strongly divisible by another (first of equals kept)
    let lts: Vec<_> = keep.iter().map(|p| lt_key(p)).collect();
    let minimal: Vec<&ZPoly> = (0..keep.len())
        .filter(|&i| {
            !(0..keep.len()).any(|j| {
                j != i && lts[j].mono.divides(&lts[i].mono) && lts[j].coeff.divides(&lts[i].coeff) && (lts[j] != lts[i] || j < i)
            })
        })
        .map(|i| keep[i])
        .collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| *q));
        let lt = Polynomial::from_sorted_unchecked(p.ring(), vec![p.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_unchecked(p.ring(), p.terms()[1..].to_vec());
        let tail = int_reduce(&tail, &others, false, None);
        out.push(&lt + &tail);
    }
    out
}
