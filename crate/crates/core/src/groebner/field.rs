//! Buchberger's algorithm over a field, with optional degree truncation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::poly::{FieldCoefficient, Monomial, Polynomial, Ring};

use super::pairs::{gebauer_moeller, pop_min_batch, Candidate, Pair};
use super::reduce::{field_reduce, GbCoefficient, Reducers};
use super::{working_ring, Budget, GbError, GbStats, GroebnerBasis, IdealBasis, Limits};

/// Knobs for [`buchberger_field_with`].
#[derive(Clone, Debug, Default)]
pub struct FieldOptions {
    pub limits: Limits,
    /// Worker threads for batch reduction; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Process one randomly chosen pending item at a time instead of
    /// minimal-degree batches. The reduced basis does not depend on it.
    pub shuffle_seed: Option<u64>,
    /// Disable the product and chain criteria (every pair is reduced).
    pub no_criteria: bool,
}

/// Reduced Gröbner basis of `ideal`, or of `ideal + m^k` computed in
/// `R / m^k` when `truncation = Some(k)`.
pub fn buchberger_field<C: FieldCoefficient + GbCoefficient>(
    ideal: &IdealBasis<C>,
    truncation: Option<u32>,
) -> GroebnerBasis<C> {
    buchberger_field_with(ideal, truncation, &FieldOptions::default()).expect("unlimited run cannot fail")
}

pub fn buchberger_field_with<C: FieldCoefficient + GbCoefficient>(
    ideal: &IdealBasis<C>,
    truncation: Option<u32>,
    opts: &FieldOptions,
) -> Result<GroebnerBasis<C>, GbError> {
    let ring = working_ring(ideal.ring, truncation)?;
    let run = || {
        let mut engine = Engine::new(ring, truncation, opts);
        engine.run(ideal)
    };
    Ok(match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    })
}

enum Item {
    Input(usize),
    Pair(Pair<Monomial>),
}

struct Engine<'o, C: FieldCoefficient> {
    ring: Ring,
    trunc: Option<u32>,
    opts: &'o FieldOptions,
    polys: Vec<Polynomial<C>>,
    active: Vec<bool>,
    pairs: Vec<Pair<Monomial>>,
    stats: GbStats,
}

impl<'o, C: FieldCoefficient + GbCoefficient> Engine<'o, C> {
    fn new(ring: Ring, trunc: Option<u32>, opts: &'o FieldOptions) -> Self {
        Engine { ring, trunc, opts, polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), stats: GbStats::default() }
    }

    fn reducers(&self) -> Reducers<'_, C> {
        Reducers::new(self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p))
    }

    fn s_poly(&self, p: &Pair<Monomial>) -> Polynomial<C> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let wf = f.leading_monomial().unwrap().quotient_of(&p.lcm);
        let wg = g.leading_monomial().unwrap().quotient_of(&p.lcm);
        // both are monic
        let a = Polynomial::zero(self.ring).sub_mul_term(&C::one().neg(), &wf, f, self.trunc);
        a.sub_mul_term(&C::one(), &wg, g, self.trunc)
    }

    fn item_poly(&self, item: &Item, inputs: &[Polynomial<C>]) -> Polynomial<C> {
        match item {
            Item::Input(k) => inputs[*k].clone(),
            Item::Pair(p) => self.s_poly(p),
        }
    }

    fn insert(&mut self, h: Polynomial<C>) {
        let lc_inv = h.leading_coeff().unwrap().inv();
        let h = h.scale(&lc_inv);
        let h_lm = h.leading_monomial().unwrap().clone();
        let hi = self.polys.len();
        let mut cands = Vec::new();
        for (g, p) in self.polys.iter().enumerate() {
            if !self.active[g] {
                continue;
            }
            let g_lm = p.leading_monomial().unwrap();
            let lcm = g_lm.lcm(&h_lm);
            if self.trunc.is_some_and(|k| lcm.degree() >= k) {
                continue;
            }
            cands.push(Candidate {
                g,
                sugar: lcm.degree(),
                product: !self.opts.no_criteria && g_lm.is_coprime(&h_lm),
                lcm,
            });
        }
        if self.opts.no_criteria {
            for c in cands {
                self.pairs.push(Pair { i: c.g, j: hi, lcm: c.lcm, sugar: c.sugar });
            }
        } else {
            let polys = &self.polys;
            gebauer_moeller(&mut self.pairs, cands, hi, &h_lm, |i| polys[i].leading_monomial().unwrap().lcm(&h_lm));
        }
        for g in 0..self.polys.len() {
            if self.active[g] && h_lm.divides(self.polys[g].leading_monomial().unwrap()) {
                self.active[g] = false;
            }
        }
        self.stats.max_degree = self.stats.max_degree.max(h.total_degree().unwrap_or(0));
        self.polys.push(h);
        self.active.push(true);
    }

    fn run(&mut self, ideal: &IdealBasis<C>) -> GroebnerBasis<C> {
        let budget = Budget::new(self.opts.limits);
        let inputs: Vec<Polynomial<C>> = ideal
            .generators
            .iter()
            .map(|g| {
                let g = g.with_order(self.ring.order);
                match self.trunc {
                    Some(k) => g.truncate(k),
                    None => g,
                }
            })
            .filter(|g| !g.is_zero())
            .collect();
        let mut pending_inputs: Vec<(u32, usize)> =
            inputs.iter().enumerate().map(|(k, g)| (g.leading_monomial().unwrap().degree(), k)).collect();
        let mut rng = self.opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
        let mut incomplete = None;

        loop {
            let batch: Vec<Item> = match rng.as_mut() {
                Some(rng) => {
                    let total = pending_inputs.len() + self.pairs.len();
                    if total == 0 {
                        break;
                    }
                    let pick = (0..total).collect::<Vec<_>>().choose(rng).copied().unwrap();
                    if pick < pending_inputs.len() {
                        vec![Item::Input(pending_inputs.swap_remove(pick).1)]
                    } else {
                        vec![Item::Pair(self.pairs.swap_remove(pick - pending_inputs.len()))]
                    }
                }
                None => {
                    let min_in = pending_inputs.iter().map(|p| p.0).min();
                    let min_pair = self.pairs.iter().map(|p| p.sugar).min();
                    let deg = match (min_in, min_pair) {
                        (None, None) => break,
                        (a, b) => a.into_iter().chain(b).min().unwrap(),
                    };
                    let mut items = Vec::new();
                    if min_in == Some(deg) {
                        let (now, later): (Vec<_>, Vec<_>) = pending_inputs.drain(..).partition(|p| p.0 == deg);
                        pending_inputs = later;
                        items.extend(now.into_iter().map(|p| Item::Input(p.1)));
                    }
                    if min_pair == Some(deg) {
                        let order = self.ring.order;
                        items.extend(pop_min_batch(&mut self.pairs, |a, b| order.compare(a, b)).into_iter().map(Item::Pair));
                    }
                    items
                }
            };
            let degree = match &batch[0] {
                Item::Input(k) => inputs[*k].leading_monomial().unwrap().degree(),
                Item::Pair(p) => p.sugar,
            };
            let active_count = self.active.iter().filter(|&&a| a).count();
            if let Some(limit) = budget.check(active_count, degree) {
                incomplete = Some(limit);
                break;
            }
            self.stats.pairs_considered += batch.len();

            let reduced: Vec<Polynomial<C>> = {
                let reducers = self.reducers();
                let this = &*self;
                let work = |item: &Item| {
                    let f = this.item_poly(item, &inputs);
                    field_reduce(&f, &reducers, this.trunc, true, None)
                };
                if batch.len() > 1 {
                    batch.par_iter().map(work).collect()
                } else {
                    batch.iter().map(work).collect()
                }
            };
            for r in reduced {
                self.stats.pairs_reduced += 1;
                if r.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                let r = {
                    let reducers = self.reducers();
                    field_reduce(&r, &reducers, self.trunc, false, None)
                };
                if r.is_zero() {
                    self.stats.zero_reductions += 1;
                    continue;
                }
                self.insert(r);
            }
        }

        let basis = interreduce(&self.polys, &self.active, self.trunc);
        self.stats.elapsed = budget.elapsed();
        GroebnerBasis {
            ring: self.ring,
            basis,
            truncation: self.trunc,
            reduced: true,
            incomplete,
            stats: std::mem::take(&mut self.stats),
        }
    }
}

/// Reduced form of the active elements: minimal leading monomials, monic,
/// tails fully reduced, sorted by increasing leading monomial.
fn interreduce<C: FieldCoefficient>(polys: &[Polynomial<C>], active: &[bool], trunc: Option<u32>) -> Vec<Polynomial<C>> {
    let mut keep: Vec<&Polynomial<C>> = polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
    if keep.is_empty() {
        return Vec::new();
    }
    let order = keep[0].ring().order;
    keep.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // in a truncated ring a tail term can be a multiple of its own leading monomial
    let reducers = Reducers::new(keep.iter().copied());
    let mut out = Vec::with_capacity(keep.len());
    for p in &keep {
        let lt = Polynomial::from_sorted_unchecked(p.ring(), vec![p.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_unchecked(p.ring(), p.terms()[1..].to_vec());
        let tail = field_reduce(&tail, &reducers, trunc, false, None);
        let full = &lt + &tail;
        let inv = full.leading_coeff().unwrap().inv();
        out.push(full.scale(&inv));
    }
    out
}
