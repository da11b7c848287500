//! Hilbert series of graded quotients, torus-equivariant series of monomial
//! quotients, semigroup restriction, and series of `J`-adic graded pieces.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, Rational};
use crate::character::{unit, Character, CharacterSeries, ClosedForm};
use crate::derivations::{minimal_monomials, monomialize, preserves, DerivationModule};
use crate::error::{Error, Result};
use crate::groebner::{Colength, Ideal};
use crate::poly::Monomial;
use crate::series::{expand_series, quasi_polynomial_of, reconstruct_rational, DenomFactor, QuasiPolynomial, RationalSeries, SeriesPrefix};

pub use crate::series::dimension_multiplicity;

/// Largest generator count accepted by [`equivariant_series_monomial`].
pub const MAX_EQUIVARIANT_GENERATORS: usize = 15;

/// Numerator of the Hilbert series of `A/(gens)` over `prod (1 - t^{w_i})`,
/// by the colon recursion `K(I + (m)) = K(I) - t^{deg m} K(I : m)`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<BigInt> {
    let gens = minimal_monomials(gens);
    let mut out = numerator_rec(&gens, weights);
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn numerator_rec(gens: &[Monomial], weights: &[u32]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    // pairwise coprime generators: product formula
    if gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.gcd_is_one(b))) {
        let mut acc = vec![BigInt::one()];
        for m in gens {
            let d = m.weighted_degree(weights) as usize;
            let mut next = vec![BigInt::zero(); acc.len() + d];
            for (k, c) in acc.iter().enumerate() {
                next[k] += c;
                next[k + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let (last, rest) = gens.split_last().expect("nonempty");
    let colon: Vec<Monomial> = rest.iter().map(|g| last.quotient_of(&g.lcm(last))).collect();
    let colon = minimal_monomials(&colon);
    let a = numerator_rec(rest, weights);
    let b = numerator_rec(&colon, weights);
    let shift = last.weighted_degree(weights) as usize;
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + shift)];
    for (k, c) in a.into_iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.into_iter().enumerate() {
        out[k + shift] -= c;
    }
    out
}

fn weight_denominator(weights: &[u32]) -> Vec<DenomFactor> {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &w in weights {
        *counts.entry(w).or_default() += 1;
    }
    counts.into_iter().map(|(n, mult)| DenomFactor::new(n, mult)).collect()
}

/// Hilbert series of `A/I` for a weighted-homogeneous `I`, with denominator
/// `prod (1 - t^{w_i})`, read off the initial ideal.
pub fn hilbert_series_quotient(ideal: &Ideal) -> Result<RationalSeries> {
    if !ideal.is_quasi_homogeneous() {
        return Err(Error::NotHomogeneous(ideal.fmt()));
    }
    let gb = ideal.groebner();
    let lts: Vec<Monomial> = gb.leading_terms().iter().map(|t| t.mon).collect();
    let num = monomial_numerator(&lts, ideal.weights());
    RationalSeries::new(num, weight_denominator(ideal.weights()))
}

/// Degreewise count of standard monomials of `I` through weighted degree `bound`.
pub fn standard_monomial_counts(ideal: &Ideal, bound: usize) -> Vec<u64> {
    let gb = ideal.groebner();
    let lts: Vec<Monomial> = gb.leading_terms().iter().map(|t| t.mon).collect();
    let mut counts = vec![0u64; bound + 1];
    for m in monomials_up_to(ideal.weights(), bound) {
        if !lts.iter().any(|l| l.divides(&m)) {
            counts[m.weighted_degree(ideal.weights()) as usize] += 1;
        }
    }
    counts
}

/// All monomials of weighted degree at most `bound`.
pub fn monomials_up_to(weights: &[u32], bound: usize) -> Vec<Monomial> {
    fn go(i: usize, left: usize, w: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        let step = w[i] as usize;
        let mut e = 0;
        while e * step <= left {
            cur[i] = e as u16;
            go(i + 1, left - e * step, w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, bound, weights, &mut vec![0; weights.len()], &mut out);
    out
}

/// Equivariant series of `A/I` for a monomial ideal, expanded through
/// weighted degree `bound`:
/// `sum_S (-1)^|S| q^{lcm S} t^{deg lcm S} / prod (1 - q_i t^{w_i})`.
pub fn equivariant_series_monomial(ideal: &Ideal, bound: usize) -> Result<CharacterSeries> {
    let n = ideal.nvars();
    let gens = if ideal.is_zero() { Vec::new() } else { monomialize(ideal).ok_or(Error::NotMonomial)? };
    if gens.len() > MAX_EQUIVARIANT_GENERATORS {
        return Err(Error::TooManyGenerators(gens.len()));
    }
    let weights = ideal.weights();
    let mut num: BTreeMap<Character, (BigInt, u32)> = BTreeMap::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut l = Monomial::one();
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                l = l.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let ch: Character = (0..n).map(|i| l.exp(i) as i32).collect();
        let e = num.entry(ch).or_insert((BigInt::zero(), l.weighted_degree(weights) as u32));
        e.0 += sign;
    }
    let numerator = num.into_iter().filter(|(_, (c, _))| !c.is_zero()).map(|(ch, (c, e))| (c, ch, e)).collect();
    let denominator = (0..n)
        .map(|i| {
            let mut ch = unit(n);
            ch[i] = 1;
            (ch, weights[i])
        })
        .collect();
    Ok(CharacterSeries::from_closed(n, ClosedForm { numerator, denominator }, bound))
}

/// Finitely generated subsemigroup of `Z^m`, with membership decided by a
/// bounded search over sums of at most `max_summands` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSpec {
    pub rank: usize,
    pub generators: Vec<Character>,
    pub max_summands: usize,
}

impl SemigroupSpec {
    pub fn new(rank: usize, generators: Vec<Character>, max_summands: usize) -> Self {
        SemigroupSpec { rank, generators, max_summands }
    }

    /// `N^m`.
    pub fn orthant(rank: usize) -> Self {
        let gens = (0..rank)
            .map(|i| {
                let mut c = unit(rank);
                c[i] = 1;
                c
            })
            .collect();
        SemigroupSpec::new(rank, gens, 64)
    }

    /// `N (1, ..., 1)`.
    pub fn diagonal(rank: usize) -> Self {
        SemigroupSpec::new(rank, vec![vec![1; rank]], 64)
    }

    /// `{0}`.
    pub fn trivial(rank: usize) -> Self {
        SemigroupSpec::new(rank, Vec::new(), 0)
    }

    pub fn contains(&self, a: &Character) -> bool {
        if a.iter().all(|&x| x == 0) {
            return true;
        }
        let nonneg = self.generators.iter().all(|g| g.iter().all(|&x| x >= 0));
        if nonneg {
            if a.iter().any(|&x| x < 0) {
                return false;
            }
            let mut seen = HashSet::new();
            return self.reach_down(a, &mut seen);
        }
        let mut frontier: BTreeSet<Character> = BTreeSet::from([unit(self.rank)]);
        let mut seen = frontier.clone();
        for _ in 0..self.max_summands {
            let mut next = BTreeSet::new();
            for p in &frontier {
                for g in &self.generators {
                    let s: Character = p.iter().zip(g).map(|(x, y)| x + y).collect();
                    if &s == a {
                        return true;
                    }
                    if seen.insert(s.clone()) {
                        next.insert(s);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    // nonnegative generators: subtract until zero, never going negative
    fn reach_down(&self, a: &Character, failed: &mut HashSet<Character>) -> bool {
        if a.iter().all(|&x| x == 0) {
            return true;
        }
        if failed.contains(a) {
            return false;
        }
        for g in &self.generators {
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            let r: Character = a.iter().zip(g).map(|(x, y)| x - y).collect();
            if r.iter().all(|&x| x >= 0) && self.reach_down(&r, failed) {
                return true;
            }
        }
        failed.insert(a.clone());
        false
    }
}

/// Outcome of checking `Γ + Γ^c ⊆ Γ^c` on the characters found through the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub pairs_checked: usize,
    pub holds_to_bound: bool,
    pub counterexample: Option<(Character, Character)>,
    pub bound: usize,
}

/// Keeps the characters in `gamma` and checks the noetherianity condition
/// `Γ + Γ^c ⊆ Γ^c` on the support of the series.
pub fn gamma_restriction(cs: &CharacterSeries, gamma: &SemigroupSpec) -> (CharacterSeries, ConditionReport) {
    let support = cs.support();
    let (inside, outside): (Vec<Character>, Vec<Character>) = support.into_iter().partition(|a| gamma.contains(a));
    let mut pairs = 0;
    let mut counterexample = None;
    'outer: for g in &inside {
        for c in &outside {
            pairs += 1;
            let s: Character = g.iter().zip(c).map(|(x, y)| x + y).collect();
            if gamma.contains(&s) {
                counterexample = Some((g.clone(), c.clone()));
                break 'outer;
            }
        }
    }
    let keep: BTreeSet<Character> = inside.into_iter().collect();
    let restricted = cs.restrict(|a| keep.contains(a));
    let report = ConditionReport { pairs_checked: pairs, holds_to_bound: counterexample.is_none(), counterexample, bound: cs.bound() };
    (restricted, report)
}

/// Module whose `J`-adic pieces are measured.
#[derive(Clone, Debug)]
pub enum ModuleSpec {
    Ring,
    Quotient(Ideal),
}

#[derive(Clone, Debug, Default)]
pub struct GradedPiecesOptions {
    /// Derivation module that must preserve `J`.
    pub preserved_by: Option<DerivationModule>,
    /// Certificate that the fibre Lie algebra is solvable.
    pub fibre_solvable: Option<bool>,
    /// Denominator to use instead of `(1 - t)^{mu(J)}`.
    pub denominator: Option<Vec<DenomFactor>>,
}

/// Series of the graded pieces `J^i M / J^{i+1} M`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedPieceReport {
    pub dims: Vec<u64>,
    pub series: RationalSeries,
    pub coefficient: QuasiPolynomial,
    pub cumulative: QuasiPolynomial,
    pub dimension: u32,
    pub multiplicity: Rational,
    /// Whether the dimensions are lengths over the fibre Lie algebra.
    pub lengths_certified: bool,
    pub caveat: Option<String>,
}

impl GradedPieceReport {
    /// Builds the report from the listed dimensions, reconstructing over `denom`.
    pub fn from_dims(dims: Vec<u64>, denom: &[DenomFactor], lengths_certified: bool, caveat: Option<String>) -> Result<Self> {
        let prefix = SeriesPrefix::from_ints(dims.iter().map(|&d| d as i64));
        let series = reconstruct_rational(&prefix, denom)?;
        let qps = quasi_polynomial_of(&series);
        let (dimension, multiplicity) = dimension_multiplicity(&series)?;
        let report = GradedPieceReport {
            dims,
            series,
            coefficient: qps.coefficient,
            cumulative: qps.cumulative,
            dimension,
            multiplicity,
            lengths_certified,
            caveat,
        };
        report.check_round_trip()?;
        Ok(report)
    }

    fn check_round_trip(&self) -> Result<()> {
        let exp = expand_series(&self.series, self.dims.len().saturating_sub(1));
        if exp != SeriesPrefix::from_ints(self.dims.iter().map(|&d| d as i64)) {
            return Err(Error::Inconsistent("series does not reproduce the graded dimensions".into()));
        }
        let qp = &self.coefficient;
        for (n, &d) in self.dims.iter().enumerate() {
            if n as u64 >= qp.n0 && qp.eval(n as u64) != Rational::from_integer(d.into()) {
                return Err(Error::Inconsistent(format!("quasi-polynomial disagrees with dimension at {n}")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dims": self.dims,
            "series": self.series.to_json(),
            "series_text": self.series.display(),
            "quasi_polynomial": self.coefficient.to_json(),
            "cumulative": self.cumulative.to_json(),
            "dimension": self.dimension,
            "multiplicity": fmt_rational(&self.multiplicity),
            "lengths_certified": self.lengths_certified,
            "caveat": self.caveat,
        })
    }
}

fn colength_of(ideal: &Ideal) -> Result<usize> {
    if let Some(ms) = monomialize_fast(ideal) {
        return monomial_colength(&ms, ideal.nvars()).ok_or(Error::NotPrimary);
    }
    match ideal.colength()? {
        Colength::Finite { count, .. } => Ok(count),
        Colength::Infinite => Err(Error::NotPrimary),
    }
}

/// Generators that are all single terms, as minimal monomials.
fn monomialize_fast(ideal: &Ideal) -> Option<Vec<Monomial>> {
    let ms: Option<Vec<Monomial>> = ideal.generators.iter().map(|g| if g.len() == 1 { g.monomials().next().copied() } else { None }).collect();
    ms.map(|v| minimal_monomials(&v))
}

/// Number of monomials outside the monomial ideal, if finite.
pub fn monomial_colength(gens: &[Monomial], n: usize) -> Option<usize> {
    if gens.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let mut bounds = vec![0u16; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        *b = gens.iter().filter(|m| m.support().all(|j| j == i) && m.exp(i) > 0).map(|m| m.exp(i)).min()?;
    }
    let mut count = 0;
    let mut cur = vec![0u16; n];
    'walk: loop {
        let m = Monomial::from_exponents(&cur);
        if !gens.iter().any(|g| g.divides(&m)) {
            count += 1;
        }
        for k in 0..n {
            cur[k] += 1;
            if cur[k] < bounds[k] {
                continue 'walk;
            }
            cur[k] = 0;
        }
        return Some(count);
    }
}

/// `J^0, ..., J^k`, each power built from the previous one.
fn ideal_powers(j: &Ideal, k: u32) -> Vec<Ideal> {
    let n = j.nvars();
    if let Some(ms) = monomialize_fast(j) {
        let mut acc = vec![Monomial::one()];
        let mut out = Vec::with_capacity(k as usize + 1);
        for i in 0..=k {
            if i > 0 {
                let prod: Vec<Monomial> = acc.iter().flat_map(|a| ms.iter().map(move |b| a.mul(b))).collect();
                acc = minimal_monomials(&prod);
            }
            let gens = acc.iter().map(|m| crate::poly::Polynomial::monomial(n, *m, Rational::one())).collect();
            out.push(Ideal::new(j.ring.clone(), gens));
        }
        return out;
    }
    let base = Ideal::new(j.ring.clone(), j.groebner().polynomials());
    let mut out = vec![Ideal::new(j.ring.clone(), vec![crate::poly::Polynomial::one(n)])];
    for i in 1..=k as usize {
        let next = out[i - 1].product(&base);
        out.push(Ideal::new(j.ring.clone(), next.groebner().polynomials()));
    }
    out
}

/// Minimal number of generators of an `m`-primary ideal: `dim J / mJ`.
pub fn minimal_generator_count(j: &Ideal) -> Result<usize> {
    let m = Ideal::maximal(&j.ring);
    Ok(colength_of(&m.product(j))? - colength_of(j)?)
}

/// Dimensions of `J^i M / J^{i+1} M` for `i <= n`, computed from colengths
/// of `J^i + I` with `M = A/I`.
pub fn graded_piece_dims(j: &Ideal, module: &ModuleSpec, n: usize) -> Result<Vec<u64>> {
    let base = match module {
        ModuleSpec::Ring => None,
        ModuleSpec::Quotient(i) => Some(i),
    };
    let with_base = |p: Ideal| match base {
        Some(i) => p.sum(i),
        None => p,
    };
    colength_of(j)?;
    let powers = ideal_powers(j, n as u32 + 1);
    let mut prev = 0;
    let mut dims = Vec::with_capacity(n + 1);
    for (i, p) in powers.into_iter().enumerate() {
        let c = match colength_of(&with_base(p)) {
            Ok(c) => c,
            Err(Error::UnitIdeal) => 0,
            Err(e) => return Err(e),
        };
        if i > 0 {
            dims.push((c - prev) as u64);
        }
        prev = c;
    }
    Ok(dims)
}

/// Graded pieces of `M` along an `m`-primary `J`, reconstructed as a rational
/// series over `(1 - t)^{mu(J)}` unless another denominator is given.
pub fn graded_pieces_series(j: &Ideal, module: &ModuleSpec, n: usize, opts: &GradedPiecesOptions) -> Result<GradedPieceReport> {
    if j.groebner().contains_one() {
        return Err(Error::UnitIdeal);
    }
    if j.colength()? == Colength::Infinite {
        return Err(Error::NotPrimary);
    }
    if let Some(dm) = &opts.preserved_by {
        if !preserves(dm, j) {
            return Err(Error::Precondition(format!("{} is not preserved by the derivation module", j.fmt())));
        }
    }
    let dims = graded_piece_dims(j, module, n)?;
    let denom = match &opts.denominator {
        Some(d) => d.clone(),
        None => vec![DenomFactor::new(1, minimal_generator_count(j)? as u32)],
    };
    let certified = opts.fibre_solvable == Some(true);
    let caveat = (!certified).then(|| "requires solvable fibre: values are dimensions, not certified lengths".to_string());
    GradedPieceReport::from_dims(dims, &denom, certified, caveat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::character::integrate_characters;
    use crate::poly::Ring;

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
        Ideal::parse(&Ring::new(vars).unwrap(), gens).unwrap()
    }

    #[test]
    fn quotient_series() {
        let z = ideal(&["x", "y", "z"], &[]);
        assert_eq!(hilbert_series_quotient(&z).unwrap(), RationalSeries::from_i64(&[1], &[(1, 3)]));
        let i = ideal(&["x", "y"], &["x^2", "x*y", "y^3"]);
        let rs = hilbert_series_quotient(&i).unwrap();
        assert_eq!(expand_series(&rs, 5), SeriesPrefix::from_ints([1, 2, 1, 0, 0, 0]));
        let i = ideal(&["x", "y", "z"], &["x^2", "x*y", "z"]);
        let rs = hilbert_series_quotient(&i).unwrap();
        assert_eq!(expand_series(&rs, 6), SeriesPrefix::from_ints([1, 2, 1, 1, 1, 1, 1]));
        let nh = ideal(&["x", "y"], &["x^2 + y"]);
        assert!(matches!(hilbert_series_quotient(&nh), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn quotient_series_matches_standard_monomials() {
        let ring = Ring::with_weights(vec!["x".into(), "y".into(), "z".into()], vec![1, 2, 2]).unwrap();
        let i = Ideal::parse(&ring, &["z^2 - x^2*y"]).unwrap();
        let rs = hilbert_series_quotient(&i).unwrap();
        let counts = standard_monomial_counts(&i, 12);
        assert_eq!(expand_series(&rs, 12), SeriesPrefix::from_ints(counts.iter().map(|&c| c as i64)));
        let i = ideal(&["x", "y"], &["x^2 + y^2", "x*y"]);
        let rs = hilbert_series_quotient(&i).unwrap();
        assert_eq!(expand_series(&rs, 6), SeriesPrefix::from_ints([1, 2, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn equivariant_closed_forms() {
        let i = ideal(&["x"], &[]);
        let cs = equivariant_series_monomial(&i, 4).unwrap();
        let cf = cs.closed.clone().unwrap();
        assert_eq!(cf.numerator, vec![(BigInt::one(), vec![0], 0)]);
        assert_eq!(cf.denominator, vec![(vec![1], 1)]);
        let i = ideal(&["x", "y"], &["x*y"]);
        let cf = equivariant_series_monomial(&i, 4).unwrap().closed.unwrap();
        assert_eq!(cf.numerator, vec![(BigInt::one(), vec![0, 0], 0), (-BigInt::one(), vec![1, 1], 2)]);
        let i = ideal(&["x", "y"], &["x^2", "x*y"]);
        let cs = equivariant_series_monomial(&i, 8).unwrap();
        let mut num = cs.closed.clone().unwrap().numerator;
        num.sort_by(|a, b| a.1.cmp(&b.1));
        let want = vec![
            (BigInt::one(), vec![0, 0], 0),
            (-BigInt::one(), vec![1, 1], 2),
            (-BigInt::one(), vec![2, 0], 2),
            (BigInt::one(), vec![2, 1], 3),
        ];
        assert_eq!(num, want);
        let int = integrate_characters(&cs);
        assert_eq!(int.prefix, expand_series(&hilbert_series_quotient(&i).unwrap(), 8));
        let bad = ideal(&["x", "y"], &["x^2 + y^2"]);
        assert_eq!(equivariant_series_monomial(&bad, 4).unwrap_err(), Error::NotMonomial);
    }

    #[test]
    fn semigroups() {
        let d = SemigroupSpec::diagonal(2);
        assert!(d.contains(&vec![3, 3]));
        assert!(!d.contains(&vec![3, 2]));
        assert!(SemigroupSpec::orthant(3).contains(&vec![1, 0, 4]));
        assert!(SemigroupSpec::trivial(2).contains(&vec![0, 0]));
        assert!(!SemigroupSpec::trivial(2).contains(&vec![1, 0]));
        let z = SemigroupSpec::new(1, vec![vec![2], vec![-3]], 10);
        assert!(z.contains(&vec![1]));
    }

    #[test]
    fn diagonal_restriction_of_plane() {
        let cs = equivariant_series_monomial(&ideal(&["x", "y"], &[]), 12).unwrap();
        let (r, rep) = gamma_restriction(&cs, &SemigroupSpec::diagonal(2));
        assert!(rep.holds_to_bound);
        let int = integrate_characters(&r);
        let want = expand_series(&RationalSeries::from_i64(&[1], &[(2, 1)]), 12);
        assert_eq!(int.prefix, want);
        let (full, _) = gamma_restriction(&cs, &SemigroupSpec::orthant(2));
        assert_eq!(full.coeffs, cs.coeffs);
        let (zero, _) = gamma_restriction(&cs, &SemigroupSpec::trivial(2));
        assert_eq!(integrate_characters(&zero).prefix.to_i64(), [vec![1], vec![0; 12]].concat());
    }

    #[test]
    fn cusp_graded_pieces() {
        let j = ideal(&["x", "y"], &["x^2", "y"]);
        let rep = graded_pieces_series(&j, &ModuleSpec::Ring, 8, &GradedPiecesOptions::default()).unwrap();
        assert_eq!(rep.dims, (0..=8).map(|i| 2 * (i + 1)).collect::<Vec<u64>>());
        assert_eq!(rep.series, RationalSeries::from_i64(&[2], &[(1, 2)]));
        assert_eq!((rep.dimension, rep.multiplicity.clone()), (2, int(2)));
        assert!(rep.caveat.is_some());
    }

    #[test]
    fn maximal_ideal_pieces() {
        for n in 1..=3 {
            let ring = Ring::standard(n);
            let m = Ideal::maximal(&ring);
            let rep = graded_pieces_series(&m, &ModuleSpec::Ring, 6, &GradedPiecesOptions::default()).unwrap();
            assert_eq!(rep.series, RationalSeries::from_i64(&[1], &[(1, n as u32)]));
            assert_eq!((rep.dimension, rep.multiplicity), (n as u32, int(1)));
        }
        let j = ideal(&["x", "y"], &["x", "y^2"]);
        assert_eq!(minimal_generator_count(&j).unwrap(), 2);
        let q = ModuleSpec::Quotient(ideal(&["x", "y"], &["x*y"]));
        let m = Ideal::maximal(&Ring::standard(2));
        let rep = graded_pieces_series(&m, &q, 6, &GradedPiecesOptions::default()).unwrap();
        assert_eq!(rep.dims, vec![1, 2, 2, 2, 2, 2, 2]);
        assert_eq!(rep.multiplicity, int(2));
        let _ = rat(1, 2);
    }

    #[test]
    fn non_primary_rejected() {
        let j = ideal(&["x", "y"], &["x"]);
        let err = graded_pieces_series(&j, &ModuleSpec::Ring, 4, &GradedPiecesOptions::default()).unwrap_err();
        assert_eq!(err, Error::NotPrimary);
    }
}
