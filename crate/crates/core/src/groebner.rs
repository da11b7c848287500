//! Gröbner bases of ideals and of submodules of free modules over `Q[x_1..x_n]`.
//!
//! Buchberger's algorithm with sugar-based normal pair selection and the
//! Gebauer–Möller installation of pairs. Ideals are rank-one modules, so a
//! single implementation serves both. Coefficient lifts are tracked by
//! replaying every reduction step on cofactor vectors over the original
//! generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Weighted degree first, reverse lexicographic tie-break.
    WeightedGrevLex(Vec<u32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleRanking {
    /// Compare components first; lower component index is larger.
    PositionOverTerm,
    /// Compare (shifted) degree and monomial first, then position.
    TermOverPosition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub monomial: MonomialOrder,
    pub ranking: ModuleRanking,
    /// Degree shift of each free-module basis vector (missing entries are 0).
    pub shifts: Vec<i64>,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder { monomial: MonomialOrder::GrevLex, ranking: ModuleRanking::TermOverPosition, shifts: vec![] }
    }

    pub fn lex() -> Self {
        TermOrder { monomial: MonomialOrder::Lex, ranking: ModuleRanking::TermOverPosition, shifts: vec![] }
    }

    pub fn weighted(weights: &[u32]) -> Self {
        TermOrder {
            monomial: MonomialOrder::WeightedGrevLex(weights.to_vec()),
            ranking: ModuleRanking::TermOverPosition,
            shifts: vec![],
        }
    }

    pub fn with_ranking(mut self, ranking: ModuleRanking) -> Self {
        self.ranking = ranking;
        self
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        self.shifts = shifts;
        self
    }

    pub fn shift(&self, comp: usize) -> i64 {
        self.shifts.get(comp).copied().unwrap_or(0)
    }

    /// Grading used for sugar and homogeneity: weighted degree for weighted
    /// orders, total degree otherwise.
    pub fn degree(&self, m: &Monomial) -> i64 {
        match &self.monomial {
            MonomialOrder::WeightedGrevLex(w) => m.weighted_degree(w),
            _ => m.total_degree() as i64,
        }
    }

    pub fn term_degree(&self, t: &Term) -> i64 {
        self.degree(&t.mon) + self.shift(t.comp)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.monomial {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex | MonomialOrder::WeightedGrevLex(_) => {
                self.degree(a).cmp(&self.degree(b)).then_with(|| revlex(a, b))
            }
        }
    }

    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        match self.ranking {
            ModuleRanking::PositionOverTerm => {
                b.comp.cmp(&a.comp).then_with(|| self.cmp_monomials(&a.mon, &b.mon))
            }
            ModuleRanking::TermOverPosition => {
                let by_degree = match self.monomial {
                    MonomialOrder::Lex => Ordering::Equal,
                    _ => self.term_degree(a).cmp(&self.term_degree(b)),
                };
                by_degree
                    .then_with(|| self.cmp_monomials(&a.mon, &b.mon))
                    .then_with(|| b.comp.cmp(&a.comp))
            }
        }
    }
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for i in (0..a.0.len()).rev() {
        if a.0[i] != b.0[i] {
            // smaller exponent in the last differing variable is larger
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub comp: usize,
    pub mon: Monomial,
}

/// Element of a free module `A^r`, given by its component polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModuleElement {
    pub components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleElement { components }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        FreeModuleElement { components: vec![Polynomial::zero(nvars); rank] }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        FreeModuleElement { components: self.components.iter().map(|c| c * p).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeModuleElement {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        FreeModuleElement {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Sorted (descending) sparse representation used inside the algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    pub terms: Vec<(Term, Rational)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_components(comps: &[Polynomial], order: &TermOrder) -> Self {
        let mut terms: Vec<(Term, Rational)> = comps
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.terms().map(move |(m, a)| (Term { comp: c, mon: *m }, a.clone())))
            .collect();
        terms.sort_by(|a, b| order.cmp_terms(&b.0, &a.0));
        Vector { terms }
    }

    pub fn from_poly(p: &Polynomial, order: &TermOrder) -> Self {
        Self::from_components(std::slice::from_ref(p), order)
    }

    pub fn to_components(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(nvars); rank];
        for (t, c) in &self.terms {
            out[t.comp].add_term(t.mon, c.clone());
        }
        out
    }

    pub fn leading(&self) -> Option<&(Term, Rational)> {
        self.terms.first()
    }

    pub fn lt(&self) -> Term {
        self.terms[0].0
    }

    fn make_monic(&mut self) -> Rational {
        let lc = self.terms[0].1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
        lc
    }

    pub fn is_homogeneous(&self, order: &TermOrder) -> bool {
        let mut it = self.terms.iter().map(|(t, _)| order.term_degree(t));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }
}

/// `h - c * m * g`, all sorted descending.
fn sub_scaled(h: &[(Term, Rational)], c: &Rational, m: &Monomial, g: &[(Term, Rational)], order: &TermOrder) -> Vec<(Term, Rational)> {
    let mut out = Vec::with_capacity(h.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < h.len() || j < g.len() {
        if j == g.len() {
            out.extend_from_slice(&h[i..]);
            break;
        }
        let gt = Term { comp: g[j].0.comp, mon: g[j].0.mon.mul(m) };
        if i == h.len() {
            out.push((gt, -(c * &g[j].1)));
            j += 1;
            continue;
        }
        match order.cmp_terms(&h[i].0, &gt) {
            Ordering::Greater => {
                out.push(h[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gt, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &h[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((gt, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn cofactor_sub(acc: &mut [Polynomial], c: &Rational, m: &Monomial, cof: &[Polynomial]) {
    for (a, g) in acc.iter_mut().zip(cof) {
        if !g.is_zero() {
            *a = &*a - &g.mul_monomial(m, c);
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    pub track_lifts: bool,
    /// Abort with `DegreeBoundExceeded` if a pair of larger sugar degree is selected.
    pub degree_bound: Option<i64>,
}

/// Reduced Gröbner basis, together with the generators it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub nvars: usize,
    pub rank: usize,
    pub elements: Vec<Vector>,
    pub generators: Vec<FreeModuleElement>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    sugar: i64,
}

pub fn groebner_basis(gens: &[FreeModuleElement], nvars: usize, order: &TermOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    let rank = gens.iter().map(|g| g.rank()).max().unwrap_or(1).max(1);
    if gens.iter().any(|g| g.rank() != rank) {
        return Err(Error::Precondition("module elements of different rank".into()));
    }
    let generators: Vec<FreeModuleElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let ngens = generators.len();
    let track = opts.track_lifts;

    let mut store: Vec<Vector> = Vec::new();
    let mut cofs: Vec<Vec<Polynomial>> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let unit_cof = |k: usize| -> Vec<Polynomial> {
        (0..ngens)
            .map(|l| if l == k { Polynomial::one(nvars) } else { Polynomial::zero(nvars) })
            .collect()
    };

    // Seed with the generators, each reduced by what came before.
    let mut seeds: Vec<(Vector, Vec<Polynomial>)> = generators
        .iter()
        .enumerate()
        .map(|(k, g)| (Vector::from_components(&g.components, order), if track { unit_cof(k) } else { vec![] }))
        .collect();
    seeds.sort_by(|a, b| order.cmp_terms(&a.0.lt(), &b.0.lt()));
    for (v, cof) in seeds {
        let sug = v.terms.iter().map(|(t, _)| order.term_degree(t)).max().unwrap_or(0);
        let (r, rc) = reduce_full(v, cof, &store, &cofs, &active, order, track);
        if r.is_zero() {
            continue;
        }
        install(r, rc, sug, &mut store, &mut cofs, &mut sugar, &mut active, &mut pairs, order, rank);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp_terms(&pairs[a].lcm, &pairs[b].lcm))
                    .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        if let Some(bound) = opts.degree_bound {
            if p.sugar > bound {
                return Err(Error::DegreeBoundExceeded(bound as u32));
            }
        }
        let (s, sc) = s_vector(&store[p.i], &store[p.j], track.then(|| (&cofs[p.i][..], &cofs[p.j][..])), p.lcm, order);
        let (r, rc) = reduce_full(s, sc, &store, &cofs, &active, order, track);
        if r.is_zero() {
            continue;
        }
        install(r, rc, p.sugar, &mut store, &mut cofs, &mut sugar, &mut active, &mut pairs, order, rank);
    }

    // Interreduce the active elements into the reduced basis.
    let mut idx: Vec<usize> = (0..store.len()).filter(|&k| active[k]).collect();
    idx.sort_by(|&a, &b| order.cmp_terms(&store[a].lt(), &store[b].lt()));
    let mut elements: Vec<Vector> = Vec::new();
    let mut ecofs: Vec<Vec<Polynomial>> = Vec::new();
    let basis: Vec<Vector> = idx.iter().map(|&k| store[k].clone()).collect();
    let bcofs: Vec<Vec<Polynomial>> = if track { idx.iter().map(|&k| cofs[k].clone()).collect() } else { vec![] };
    for k in 0..basis.len() {
        let others_active: Vec<bool> = (0..basis.len()).map(|l| l != k).collect();
        let mut v = basis[k].clone();
        let lead = v.terms.remove(0);
        let tail = Vector { terms: v.terms };
        let zero_cof = if track { vec![Polynomial::zero(nvars); ngens] } else { vec![] };
        let (r, rc) = reduce_full(tail, zero_cof, &basis, &bcofs, &others_active, order, track);
        let mut terms = vec![lead];
        terms.extend(r.terms);
        elements.push(Vector { terms });
        if track {
            let c: Vec<Polynomial> = bcofs[k].iter().zip(&rc).map(|(a, b)| a + b).collect();
            ecofs.push(c);
        }
    }
    Ok(GroebnerBasis {
        order: order.clone(),
        nvars,
        rank,
        elements,
        generators,
        cofactors: track.then_some(ecofs),
    })
}

#[allow(clippy::too_many_arguments)]
fn install(
    mut r: Vector,
    mut rc: Vec<Polynomial>,
    sug: i64,
    store: &mut Vec<Vector>,
    cofs: &mut Vec<Vec<Polynomial>>,
    sugar: &mut Vec<i64>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    order: &TermOrder,
    rank: usize,
) {
    let lc = r.make_monic();
    if !rc.is_empty() && !lc.is_one() {
        let inv = lc.recip();
        rc = rc.iter().map(|p| p.scale(&inv)).collect();
    }
    let h = store.len();
    let lt_h = r.lt();
    store.push(r);
    cofs.push(rc);
    sugar.push(sug);
    active.push(true);

    let product_ok = rank == 1;
    let pair_sugar = |i: usize, lcm: &Term, store: &[Vector], sugar: &[i64]| -> i64 {
        let lt = store[i].lt();
        sugar[i] + order.degree(&lcm.mon) - order.degree(&lt.mon)
    };

    // Gebauer–Möller update.
    let mut cand: Vec<(usize, Term, bool)> = Vec::new();
    for g in 0..h {
        if !active[g] {
            continue;
        }
        let lt_g = store[g].lt();
        if lt_g.comp != lt_h.comp {
            continue;
        }
        let lcm = Term { comp: lt_h.comp, mon: lt_h.mon.lcm(&lt_g.mon) };
        let disjoint = product_ok && lt_h.mon.gcd_is_one(&lt_g.mon);
        cand.push((g, lcm, disjoint));
    }
    // Chain criterion among the new pairs.
    let mut keep: Vec<(usize, Term, bool)> = Vec::new();
    for k in 0..cand.len() {
        let (g, lcm, disjoint) = cand[k];
        if disjoint {
            keep.push(cand[k]);
            continue;
        }
        let dominated = cand.iter().enumerate().any(|(l, &(_, lcm2, _))| {
            l != k && lcm2.mon.divides(&lcm.mon) && (lcm2.mon != lcm.mon || l < k)
        }) || keep.iter().any(|&(_, lcm2, _)| lcm2.mon.divides(&lcm.mon) && lcm2.mon != lcm.mon);
        if !dominated {
            keep.push((g, lcm, disjoint));
        }
    }
    // Drop pairs whose lcm is a strict multiple of lt(h) with both new lcms different.
    pairs.retain(|p| {
        if p.lcm.comp != lt_h.comp || !lt_h.mon.divides(&p.lcm.mon) {
            return true;
        }
        let li = lt_h.mon.lcm(&store[p.i].lt().mon);
        let lj = lt_h.mon.lcm(&store[p.j].lt().mon);
        li == p.lcm.mon || lj == p.lcm.mon
    });
    for (g, lcm, disjoint) in keep {
        if disjoint {
            continue;
        }
        let s = pair_sugar(h, &lcm, store, sugar).max(pair_sugar(g, &lcm, store, sugar));
        pairs.push(Pair { i: g, j: h, lcm, sugar: s });
    }
    // Elements whose leading term is a multiple of lt(h) are no longer needed
    // as reducers; pairs already queued keep referencing them.
    for g in 0..h {
        if active[g] {
            let lt_g = store[g].lt();
            if lt_g.comp == lt_h.comp && lt_h.mon.divides(&lt_g.mon) {
                active[g] = false;
            }
        }
    }
}

fn s_vector(a: &Vector, b: &Vector, cofs: Option<(&[Polynomial], &[Polynomial])>, lcm: Term, order: &TermOrder) -> (Vector, Vec<Polynomial>) {
    let ma = a.lt().mon.quotient_of(&lcm.mon);
    let mb = b.lt().mon.quotient_of(&lcm.mon);
    // both monic
    let scaled_a: Vec<(Term, Rational)> = a
        .terms
        .iter()
        .skip(1)
        .map(|(t, c)| (Term { comp: t.comp, mon: t.mon.mul(&ma) }, c.clone()))
        .collect();
    let tail_b = &b.terms[1..];
    let terms = sub_scaled(&scaled_a, &Rational::one(), &mb, tail_b, order);
    let cof = match cofs {
        None => vec![],
        Some((ca, cb)) => ca
            .iter()
            .zip(cb)
            .map(|(x, y)| &x.mul_monomial(&ma, &Rational::one()) - &y.mul_monomial(&mb, &Rational::one()))
            .collect(),
    };
    (Vector { terms }, cof)
}

/// Fully reduces `h` by the active elements; returns the remainder and the
/// updated cofactors (`h_original - sum q_k g_k` bookkeeping: the cofactor of
/// the remainder in terms of the original generators).
fn reduce_full(
    mut h: Vector,
    mut cof: Vec<Polynomial>,
    basis: &[Vector],
    cofs: &[Vec<Polynomial>],
    active: &[bool],
    order: &TermOrder,
    track: bool,
) -> (Vector, Vec<Polynomial>) {
    let mut rem: Vec<(Term, Rational)> = Vec::new();
    while !h.terms.is_empty() {
        let (lt, lc) = h.terms[0].clone();
        let reducer = (0..basis.len()).find(|&k| {
            active[k] && {
                let g = basis[k].lt();
                g.comp == lt.comp && g.mon.divides(&lt.mon)
            }
        });
        match reducer {
            Some(k) => {
                let g = &basis[k];
                let m = g.lt().mon.quotient_of(&lt.mon);
                // g is monic
                h.terms = sub_scaled(&h.terms, &lc, &m, &g.terms, order);
                if track {
                    cofactor_sub(&mut cof, &lc, &m, &cofs[k]);
                }
            }
            None => {
                rem.push(h.terms.remove(0));
            }
        }
    }
    (Vector { terms: rem }, cof)
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tracks_lifts(&self) -> bool {
        self.cofactors.is_some()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.elements.iter().map(|e| e.lt()).collect()
    }

    /// Basis elements as component polynomials.
    pub fn element_components(&self) -> Vec<Vec<Polynomial>> {
        self.elements.iter().map(|e| e.to_components(self.rank, self.nvars)).collect()
    }

    /// Basis elements of an ideal (rank one) as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.to_components(1, self.nvars).remove(0)).collect()
    }

    pub fn contains_one(&self) -> bool {
        self.rank == 1 && self.elements.iter().any(|e| e.lt().mon.is_one())
    }

    pub fn normal_form_vector(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let all = vec![true; self.elements.len()];
        let h = Vector::from_components(&v.components, &self.order);
        let (r, _) = reduce_full(h, vec![], &self.elements, &[], &all, &self.order, false);
        FreeModuleElement::new(r.to_components(self.rank, self.nvars))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.normal_form_vector(&FreeModuleElement::new(vec![f.clone()])).components.remove(0)
    }

    pub fn contains_vector(&self, v: &FreeModuleElement) -> bool {
        self.normal_form_vector(v).is_zero()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Coefficients `c_k` with `v = sum c_k * generators[k]`, when `v` lies in
    /// the module. Requires a basis computed with `track_lifts`.
    pub fn lift_vector(&self, v: &FreeModuleElement) -> Option<Vec<Polynomial>> {
        let cofs = self.cofactors.as_ref()?;
        let all = vec![true; self.elements.len()];
        let h = Vector::from_components(&v.components, &self.order);
        let zero = vec![Polynomial::zero(self.nvars); self.generators.len()];
        let (r, c) = reduce_full(h, zero, &self.elements, cofs, &all, &self.order, true);
        if !r.is_zero() {
            return None;
        }
        // The bookkeeping accumulated -sum q_k cof_k; v = sum q_k g_k.
        Some(c.iter().map(|p| -p).collect())
    }

    pub fn lift(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        self.lift_vector(&FreeModuleElement::new(vec![f.clone()]))
    }

    /// Checks `f = sum c_k g_k` exactly.
    pub fn verify_lift(&self, v: &FreeModuleElement, lift: &[Polynomial]) -> bool {
        let mut acc = FreeModuleElement::zero(self.rank, self.nvars);
        for (c, g) in lift.iter().zip(&self.generators) {
            acc = acc.add(&g.scale_poly(c));
        }
        acc == *v
    }

    /// Whether every element of `other` lies in this module.
    pub fn contains_all(&self, other: &[FreeModuleElement]) -> bool {
        other.iter().all(|v| self.contains_vector(v))
    }
}

/// Ideal of `Q[x_1..x_n]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
}

/// Result of a colength computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colength {
    Finite { count: usize, standard_monomials: Vec<Monomial> },
    Infinite,
}

impl Colength {
    pub fn count(&self) -> Option<usize> {
        match self {
            Colength::Finite { count, .. } => Some(*count),
            Colength::Infinite => None,
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, generators }
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let g = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring.clone(), g))
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn weights(&self) -> &[u32] {
        &self.ring.weights
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Every generator weighted-homogeneous for the ring weights.
    pub fn is_quasi_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous(&self.ring.weights))
    }

    pub fn default_order(&self) -> TermOrder {
        TermOrder::weighted(&self.ring.weights)
    }

    pub fn groebner(&self) -> GroebnerBasis {
        self.groebner_with(&self.default_order(), &GbOptions::default()).expect("unbounded Buchberger cannot fail")
    }

    pub fn groebner_with_lifts(&self) -> GroebnerBasis {
        let opts = GbOptions { track_lifts: true, degree_bound: None };
        self.groebner_with(&self.default_order(), &opts).expect("unbounded Buchberger cannot fail")
    }

    pub fn groebner_with(&self, order: &TermOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
        let gens: Vec<FreeModuleElement> = self.generators.iter().map(|g| FreeModuleElement::new(vec![g.clone()])).collect();
        groebner_basis(&gens, self.nvars(), order, opts)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().contains(f)
    }

    /// Same ideal as `other` (double inclusion through Gröbner bases).
    pub fn equals(&self, other: &Ideal) -> bool {
        let a = self.groebner();
        let b = other.groebner();
        other.generators.iter().all(|g| a.contains(g)) && self.generators.iter().all(|g| b.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        let mut seen = BTreeSet::new();
        for a in &self.generators {
            for b in &other.generators {
                let p = a * b;
                let key = format!("{p:?}");
                if seen.insert(key) {
                    g.push(p);
                }
            }
        }
        Ideal::new(self.ring.clone(), g)
    }

    /// `I^k`, generated by the products of `k` generators (minimalised through the basis).
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::new(self.ring.clone(), vec![Polynomial::one(self.nvars())]);
        for _ in 0..k {
            acc = acc.product(self);
            let gb = acc.groebner();
            acc = Ideal::new(self.ring.clone(), gb.polynomials());
        }
        acc
    }

    /// The maximal ideal of the origin.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring.clone(), (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn fmt(&self) -> String {
        let g: Vec<String> = self.generators.iter().map(|p| self.ring.fmt_poly(p)).collect();
        format!("({})", g.join(", "))
    }

    pub fn colength(&self) -> Result<Colength> {
        colength_of_basis(&self.groebner())
    }

    /// Krull dimension of `A/I`, read from the leading monomials.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.groebner();
        if gb.contains_one() {
            return Err(Error::UnitIdeal);
        }
        let lts: Vec<Monomial> = gb.leading_terms().iter().map(|t| t.mon).collect();
        Ok(monomial_dimension(&lts, self.nvars()))
    }
}

/// Largest set of variables `S` such that no monomial is supported inside `S`.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for s in 0u32..(1 << nvars) {
        if supports.iter().all(|&sup| sup & !s != 0) {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

pub fn colength_of_basis(gb: &GroebnerBasis) -> Result<Colength> {
    if gb.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let n = gb.nvars;
    let lts: Vec<Monomial> = gb.leading_terms().iter().map(|t| t.mon).collect();
    let mut bounds = vec![0u16; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let pure = lts
            .iter()
            .filter(|m| m.support().all(|j| j == i) && m.exp(i) > 0)
            .map(|m| m.exp(i))
            .min();
        match pure {
            Some(e) => *b = e,
            None => return Ok(Colength::Infinite),
        }
    }
    let mut std = Vec::new();
    let mut cur = vec![0u16; n];
    loop {
        let m = Monomial::from_exponents(&cur);
        if !lts.iter().any(|l| l.divides(&m)) {
            std.push(m);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                std.sort();
                return Ok(Colength::Finite { count: std.len(), standard_monomials: std });
            }
            cur[k] += 1;
            if cur[k] < bounds[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// Generators of the module of relations `sum s_i v_i = 0` among the given vectors.
///
/// Computed from a position-over-term basis of the module generated by
/// `(v_i, e_i)` in `A^{r+m}`: its elements supported in the last `m`
/// components generate the syzygies.
pub fn syzygies(vectors: &[FreeModuleElement], nvars: usize, order: &TermOrder) -> Result<Vec<FreeModuleElement>> {
    syzygies_with(vectors, nvars, order, &GbOptions::default())
}

/// As [`syzygies`], with an optional sugar bound on the underlying basis.
pub fn syzygies_with(vectors: &[FreeModuleElement], nvars: usize, order: &TermOrder, opts: &GbOptions) -> Result<Vec<FreeModuleElement>> {
    let m = vectors.len();
    if m == 0 {
        return Ok(vec![]);
    }
    let r = vectors[0].rank();
    if vectors.iter().any(|v| v.rank() != r) {
        return Err(Error::Precondition("syzygies: vectors of different rank".into()));
    }
    let mut shifts: Vec<i64> = (0..r).map(|c| order.shift(c)).collect();
    for v in vectors {
        // shift of e_i = degree of v_i, so that (v_i, e_i) stays homogeneous
        let deg = Vector::from_components(&v.components, order)
            .terms
            .first()
            .map(|(t, _)| order.term_degree(t))
            .unwrap_or(0);
        shifts.push(deg);
    }
    let aug_order = TermOrder {
        monomial: order.monomial.clone(),
        ranking: ModuleRanking::PositionOverTerm,
        shifts,
    };
    let aug: Vec<FreeModuleElement> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut comps = v.components.clone();
            for k in 0..m {
                comps.push(if k == i { Polynomial::one(nvars) } else { Polynomial::zero(nvars) });
            }
            FreeModuleElement::new(comps)
        })
        .collect();
    let opts = GbOptions { track_lifts: false, degree_bound: opts.degree_bound };
    let gb = groebner_basis(&aug, nvars, &aug_order, &opts)?;
    let mut out = Vec::new();
    for e in &gb.elements {
        if e.lt().comp >= r {
            let comps = e.to_components(r + m, nvars);
            debug_assert!(comps[..r].iter().all(|p| p.is_zero()));
            out.push(FreeModuleElement::new(comps[r..].to_vec()));
        }
    }
    Ok(out)
}

/// Checks `sum s_i v_i = 0` exactly.
pub fn is_syzygy(s: &FreeModuleElement, vectors: &[FreeModuleElement], nvars: usize) -> bool {
    let r = vectors.first().map(|v| v.rank()).unwrap_or(0);
    let mut acc = FreeModuleElement::zero(r, nvars);
    for (c, v) in s.components.iter().zip(vectors) {
        acc = acc.add(&v.scale_poly(c));
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn r2() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }

    fn polys(ring: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| ring.parse(t).unwrap()).collect()
    }

    #[test]
    fn trivial_bases() {
        let r = r2();
        let gb = Ideal::parse(&r, &["x", "y"]).unwrap().groebner();
        assert_eq!(gb.polynomials(), polys(&r, &["y", "x"]));
        let gb = Ideal::parse(&r, &["x^2", "y"]).unwrap().groebner();
        assert_eq!(gb.polynomials(), polys(&r, &["y", "x^2"]));
    }

    #[test]
    fn x2_plus_y2_and_xy() {
        let r = r2();
        let gb = Ideal::parse(&r, &["x^2+y^2", "x*y"]).unwrap().groebner();
        let mut got = gb.polynomials();
        let mut want = polys(&r, &["x*y", "x^2+y^2", "y^3"]);
        got.sort_by_key(|p| format!("{p:?}"));
        want.sort_by_key(|p| format!("{p:?}"));
        assert_eq!(got, want);
    }

    #[test]
    fn membership_and_lifts() {
        let r = r2();
        let ideal = Ideal::parse(&r, &["x^2+y^2", "x*y"]).unwrap();
        let gb = ideal.groebner_with_lifts();
        let x2 = r.parse("x^2").unwrap();
        assert_eq!(gb.normal_form(&x2), r.parse("-y^2").unwrap());
        assert!(!gb.contains(&x2));
        let y3 = r.parse("y^3").unwrap();
        let lift = gb.lift(&y3).expect("member");
        assert!(gb.verify_lift(&FreeModuleElement::new(vec![y3.clone()]), &lift));
        assert_eq!(lift, polys(&r, &["y", "-x"]));
        let g0 = ideal.generators[0].clone();
        let l0 = gb.lift(&g0).unwrap();
        assert_eq!(l0, polys(&r, &["1", "0"]));
    }

    #[test]
    fn colengths() {
        let r = r2();
        assert_eq!(Ideal::parse(&r, &["x", "y"]).unwrap().colength().unwrap().count(), Some(1));
        let c = Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap().colength().unwrap();
        assert_eq!(c.count(), Some(4));
        let r3 = Ring::new(&["x", "y", "z"]).unwrap();
        assert_eq!(Ideal::parse(&r3, &["x^2", "x*y", "z"]).unwrap().colength().unwrap(), Colength::Infinite);
        assert_eq!(Ideal::parse(&r, &["x+1", "x"]).unwrap().colength(), Err(Error::UnitIdeal));
    }

    #[test]
    fn koszul_syzygies() {
        let r = r2();
        let v: Vec<FreeModuleElement> = polys(&r, &["x", "y"]).into_iter().map(|p| FreeModuleElement::new(vec![p])).collect();
        let s = syzygies(&v, 2, &TermOrder::grevlex()).unwrap();
        assert_eq!(s.len(), 1);
        let want = FreeModuleElement::new(polys(&r, &["y", "-x"]));
        let neg = FreeModuleElement::new(polys(&r, &["-y", "x"]));
        assert!(s[0] == want || s[0] == neg);
        let f = r.parse("x^2+y").unwrap();
        let g = r.parse("y^3-x").unwrap();
        let v = vec![FreeModuleElement::new(vec![f.clone()]), FreeModuleElement::new(vec![g.clone()])];
        let s = syzygies(&v, 2, &TermOrder::grevlex()).unwrap();
        assert_eq!(s.len(), 1);
        assert!(is_syzygy(&s[0], &v, 2));
        // proportional to (g, -f)
        let c = &s[0].components[0];
        assert!(c == &g || c == &(-&g));
    }

    #[test]
    fn idempotent_and_deterministic() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let ideal = Ideal::parse(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]).unwrap();
        let gb = ideal.groebner();
        let again = Ideal::new(r.clone(), gb.polynomials()).groebner();
        assert_eq!(gb.polynomials(), again.polynomials());
        assert_eq!(gb.polynomials(), ideal.groebner().polynomials());
    }

    #[test]
    fn degree_bound_is_reported() {
        let r = r2();
        let ideal = Ideal::parse(&r, &["x^3 - y", "x*y^2 - 1"]).unwrap();
        let opts = GbOptions { track_lifts: false, degree_bound: Some(2) };
        assert_eq!(ideal.groebner_with(&TermOrder::grevlex(), &opts).unwrap_err(), Error::DegreeBoundExceeded(2));
    }

    #[test]
    fn lex_order_elimination() {
        let r = r2();
        let ideal = Ideal::parse(&r, &["x - y^2", "x*y - 1"]).unwrap();
        let gb = ideal.groebner_with(&TermOrder::lex(), &GbOptions::default()).unwrap();
        // lex basis contains a polynomial in y alone
        assert!(gb.polynomials().iter().any(|p| p.monomials().all(|m| m.exp(0) == 0)));
        assert!(gb.contains(&r.parse("y^3 - 1").unwrap()));
        let _ = int(0);
    }
}
