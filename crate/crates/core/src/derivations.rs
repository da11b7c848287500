//! Derivations tangent to an ideal, Jacobian ideals, quasi-homogeneous
//! weights and monomial ideals.

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, syzygies_with, FreeModuleElement, GbOptions, GroebnerBasis, Ideal, TermOrder};
use crate::matrix::rref;
use crate::poly::{Monomial, Polynomial, Ring};

/// `sum a_i d/dx_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        Derivation { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Derivation { coeffs: vec![Polynomial::zero(n); n] }
    }

    pub fn partial(n: usize, i: usize) -> Self {
        let mut d = Self::zero(n);
        d.coeffs[i] = Polynomial::one(n);
        d
    }

    /// `x_i d/dx_i`.
    pub fn coordinate_euler(ring: &Ring, i: usize) -> Self {
        let mut d = Self::zero(ring.nvars());
        d.coeffs[i] = ring.var(i);
        d
    }

    /// `sum w_i x_i d/dx_i`.
    pub fn euler(ring: &Ring, weights: &[u32]) -> Self {
        Derivation {
            coeffs: (0..ring.nvars()).map(|i| ring.var(i).scale(&int(weights[i] as i64))).collect(),
        }
    }

    /// Parses `[a_1, ..., a_n]` style coefficient lists.
    pub fn parse(ring: &Ring, coeffs: &[&str]) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::Parse(format!("derivation needs {} coefficients", ring.nvars())));
        }
        Ok(Derivation { coeffs: coeffs.iter().map(|c| ring.parse(c)).collect::<Result<_>>()? })
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(f.nvars());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = f.derivative(i);
            if !d.is_zero() {
                acc = &acc + &(a * &d);
            }
        }
        acc
    }

    /// `[self, other] = sum_i (self(other_i) - other(self_i)) d/dx_i`.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        Derivation {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| &self.apply(b) - &other.apply(a))
                .collect(),
        }
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Derivation {
        Derivation { coeffs: self.coeffs.iter().map(|a| a * p).collect() }
    }

    /// Degree `max_i (wdeg a_i - w_i)`; `None` for the zero derivation.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.weighted_degree(weights).map(|d| d - weights[i] as i64))
            .max()
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.coeffs.iter().enumerate().flat_map(|(i, a)| {
            a.monomials().map(move |m| m.weighted_degree(weights) - weights[i] as i64)
        });
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// All coefficients vanish at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.coeffs.iter().all(|a| a.constant_term().is_zero())
    }

    /// Value at the origin, `(a_1(0), ..., a_n(0))`.
    pub fn value_at_origin(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|a| a.constant_term()).collect()
    }

    pub fn to_element(&self) -> FreeModuleElement {
        FreeModuleElement::new(self.coeffs.clone())
    }

    pub fn format(&self, ring: &Ring) -> String {
        let mut parts = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = format!("d_{}", ring.vars[i]);
            let s = if a.is_monomial() || a.len() == 1 {
                let c = a.format(ring);
                if c == "1" {
                    d
                } else if c == "-1" {
                    format!("-{d}")
                } else {
                    format!("{c}*{d}")
                }
            } else {
                format!("({})*{d}", a.format(ring))
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

/// Order on `Der(A) = A^n` making homogeneous derivations homogeneous vectors.
pub fn derivation_order(weights: &[u32]) -> TermOrder {
    TermOrder::weighted(weights).with_shifts(weights.iter().map(|&w| -(w as i64)).collect())
}

/// Finitely generated module of derivations preserving an ideal.
#[derive(Clone, Debug)]
pub struct DerivationModule {
    pub ring: Ring,
    pub ideal: Ideal,
    pub generators: Vec<Derivation>,
    /// `Some(D)` when computed in the non-graded fallback with sugar bound `D`.
    pub certified_degree: Option<i64>,
    gb: OnceLock<GroebnerBasis>,
}

impl DerivationModule {
    /// Builds a module after checking that every generator preserves the ideal.
    pub fn new(ideal: Ideal, generators: Vec<Derivation>) -> Result<Self> {
        let gb = ideal.groebner();
        for (k, d) in generators.iter().enumerate() {
            for f in &ideal.generators {
                if !gb.contains(&d.apply(f)) {
                    return Err(Error::Precondition(format!(
                        "generator {} does not preserve the ideal",
                        k + 1
                    )));
                }
            }
        }
        Ok(Self::unchecked(ideal, generators, None))
    }

    fn unchecked(ideal: Ideal, generators: Vec<Derivation>, certified_degree: Option<i64>) -> Self {
        let generators = generators.into_iter().filter(|d| !d.is_zero()).collect();
        DerivationModule { ring: ideal.ring.clone(), ideal, generators, certified_degree, gb: OnceLock::new() }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn weights(&self) -> &[u32] {
        &self.ring.weights
    }

    pub fn order(&self) -> TermOrder {
        derivation_order(self.weights())
    }

    /// Module Gröbner basis with coefficient lifts over `generators`.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            let gens: Vec<FreeModuleElement> = self.generators.iter().map(|d| d.to_element()).collect();
            let gens = if gens.is_empty() { vec![FreeModuleElement::zero(self.nvars(), self.nvars())] } else { gens };
            groebner_basis(&gens, self.nvars(), &self.order(), &GbOptions { track_lifts: true, degree_bound: None })
                .expect("unbounded computation")
        })
    }

    pub fn contains(&self, d: &Derivation) -> bool {
        d.is_zero() || (!self.generators.is_empty() && self.groebner().contains_vector(&d.to_element()))
    }

    /// Coefficients `c_k` with `d = sum c_k generators[k]`.
    pub fn lift(&self, d: &Derivation) -> Option<Vec<Polynomial>> {
        if self.generators.is_empty() {
            return d.is_zero().then(Vec::new);
        }
        self.groebner().lift_vector(&d.to_element())
    }

    pub fn contains_all(&self, ds: &[Derivation]) -> bool {
        ds.iter().all(|d| self.contains(d))
    }

    /// Same submodule of `Der(A)` (double inclusion).
    pub fn same_module(&self, other: &DerivationModule) -> bool {
        self.contains_all(&other.generators) && other.contains_all(&self.generators)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|d| d.is_homogeneous(self.weights()))
    }

    /// Minimal generating set by graded Nakayama: generators sorted by degree,
    /// each kept only if not in the module generated by those kept before.
    pub fn minimal(&self) -> DerivationModule {
        let w = self.weights().to_vec();
        let mut sorted = self.generators.clone();
        sorted.sort_by_key(|d| d.weighted_degree(&w));
        let mut kept: Vec<Derivation> = Vec::new();
        for d in sorted {
            let sub = DerivationModule::unchecked(self.ideal.clone(), kept.clone(), self.certified_degree);
            if !sub.contains(&d) {
                kept.push(d);
            }
        }
        DerivationModule::unchecked(self.ideal.clone(), kept, self.certified_degree)
    }

    /// All generators vanish at the origin, i.e. the module lies in `m Der(A)`.
    pub fn is_logarithmic_at_origin(&self) -> bool {
        self.generators.iter().all(|d| d.vanishes_at_origin())
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators.iter().map(|d| d.format(&self.ring)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct TangentOptions {
    /// Sugar bound for inputs that are not quasi-homogeneous.
    pub degree_bound: i64,
}

impl Default for TangentOptions {
    fn default() -> Self {
        TangentOptions { degree_bound: 10 }
    }
}

pub fn tangent_derivations(ideal: &Ideal) -> Result<DerivationModule> {
    tangent_derivations_with(ideal, &TangentOptions::default())
}

/// Generators of `{d : d(f_j) in I for all j}`, computed as the projection of
/// a single syzygy module and verified by re-application.
pub fn tangent_derivations_with(ideal: &Ideal, opts: &TangentOptions) -> Result<DerivationModule> {
    let n = ideal.nvars();
    let ring = &ideal.ring;
    if ideal.is_zero() {
        let gens = (0..n).map(|i| Derivation::partial(n, i)).collect();
        return Ok(DerivationModule::unchecked(ideal.clone(), gens, None));
    }
    let igb = ideal.groebner();
    if igb.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let graded = ideal.is_quasi_homogeneous();
    let bound = if graded {
        None
    } else {
        let top = ideal.generators.iter().filter_map(|f| f.weighted_degree(&ring.weights)).max().unwrap_or(0);
        Some(opts.degree_bound.max(2 * top + 2))
    };
    let fs = &ideal.generators;
    let s = fs.len();
    let degs: Vec<i64> = fs.iter().map(|f| f.weighted_degree(&ring.weights).unwrap_or(0)).collect();
    let mut vectors: Vec<FreeModuleElement> = Vec::new();
    for i in 0..n {
        vectors.push(FreeModuleElement::new(fs.iter().map(|f| f.derivative(i)).collect()));
    }
    for j in 0..s {
        for f in fs {
            let mut comps = vec![Polynomial::zero(n); s];
            comps[j] = f.clone();
            vectors.push(FreeModuleElement::new(comps));
        }
    }
    // In a graded setting the column of d/dx_i has degree -w_i once component j
    // is shifted by -deg f_j.
    let order = TermOrder::weighted(&ring.weights).with_shifts(degs.iter().map(|d| -d).collect());
    let syz = syzygies_with(&vectors, n, &order, &GbOptions { track_lifts: false, degree_bound: bound })?;
    let mut gens: Vec<Derivation> = Vec::new();
    for sz in syz {
        let d = Derivation::new(sz.components[..n].to_vec());
        if !d.is_zero() && !gens.contains(&d) {
            gens.push(d);
        }
    }
    for (k, d) in gens.iter().enumerate() {
        for f in fs {
            if !igb.contains(&d.apply(f)) {
                return Err(Error::Inconsistent(format!("computed derivation {} does not preserve the ideal", k + 1)));
            }
        }
    }
    let dm = DerivationModule::unchecked(ideal.clone(), gens, bound);
    Ok(if graded { dm.minimal() } else { dm })
}

/// Whether `d` lies in the module.
pub fn contains_derivation(dm: &DerivationModule, d: &Derivation) -> bool {
    dm.contains(d)
}

/// Height of `I` (codimension of `V(I)`), from the Krull dimension of the
/// initial ideal. Only weighted-homogeneous and principal ideals are treated
/// as determined: their components all pass through the origin.
pub fn height(ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let n = ideal.nvars();
    if ideal.generators.len() == 1 {
        let f = &ideal.generators[0];
        if !f.constant_term().is_zero() {
            return Err(Error::UnitIdeal);
        }
        return Ok(1);
    }
    if !ideal.is_quasi_homogeneous() {
        return Err(Error::HeightUndetermined(
            "ideal is not weighted-homogeneous; supply the height explicitly".into(),
        ));
    }
    Ok(n - ideal.krull_dimension()?)
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    let nv = m.first().and_then(|r| r.first()).map(|p| p.nvars()).unwrap_or(1);
    match k {
        0 => Polynomial::one(nv),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(nv);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let t = &m[0][j] * &determinant(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `I` plus all `r x r` minors of the Jacobian matrix, `r` the height of `I`
/// (or `height_override`). For a principal ideal this is the Tjurina ideal.
pub fn jacobian_ideal(ideal: &Ideal, height_override: Option<usize>) -> Result<Ideal> {
    let r = match height_override {
        Some(r) => r,
        None => height(ideal)?,
    };
    if ideal.groebner().contains_one() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    let fs = &ideal.generators;
    let jac: Vec<Vec<Polynomial>> = fs.iter().map(|f| (0..n).map(|i| f.derivative(i)).collect()).collect();
    let mut gens = fs.clone();
    if r > 0 && r <= fs.len() && r <= n {
        for rows in subsets(fs.len(), r) {
            for cols in subsets(n, r) {
                let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&a| cols.iter().map(|&b| jac[a][b].clone()).collect()).collect();
                let d = determinant(&sub);
                if !d.is_zero() && !gens.contains(&d) {
                    gens.push(d);
                }
            }
        }
    }
    Ok(Ideal::new(ideal.ring.clone(), gens))
}

/// Checks `d(g) in J` for every generator `d` of the module and `g` of `J`.
pub fn preserves(dm: &DerivationModule, j: &Ideal) -> bool {
    let gb = j.groebner();
    dm.generators.iter().all(|d| j.generators.iter().all(|g| gb.contains(&d.apply(g))))
}

/// Positive integer weights making `f` weighted-homogeneous, with its degree.
///
/// Variables absent from `f` get weight 1. Among solutions found by searching
/// the free parameters of the linear system, the one of least degree (then
/// lexicographically least weights) is returned.
pub fn quasi_homogeneous_weights(f: &Polynomial) -> Option<(Vec<u32>, u32)> {
    if f.is_zero() {
        return None;
    }
    let n = f.nvars();
    let mons: Vec<Monomial> = f.monomials().copied().collect();
    let present: Vec<usize> = (0..n).filter(|&i| mons.iter().any(|m| m.exp(i) > 0)).collect();
    if present.is_empty() {
        // nonzero constant: homogeneous of degree 0 for any weights
        return Some((vec![1; n], 0));
    }
    let rows: Vec<Vec<Rational>> = mons[1..]
        .iter()
        .map(|m| present.iter().map(|&i| int(m.exp(i) as i64 - mons[0].exp(i) as i64)).collect())
        .collect();
    let k = present.len();
    let (red, pivots) = if rows.is_empty() { (vec![], vec![]) } else { rref(rows) };
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    let cap: u64 = 200_000;
    let per = (cap as f64).powf(1.0 / free.len() as f64).floor() as u64;
    let limit = per.clamp(1, 24);
    let mut best: Option<(u32, Vec<u32>)> = None;
    let mut vals = vec![1u64; free.len()];
    loop {
        let mut w = vec![Rational::zero(); k];
        for (f_idx, &c) in free.iter().enumerate() {
            w[c] = int(vals[f_idx] as i64);
        }
        let mut ok = true;
        for (row, &p) in red.iter().zip(&pivots) {
            // w_p = -sum_{free} row[c] w_c
            let v = free.iter().fold(Rational::zero(), |acc, &c| acc - &row[c] * &w[c]);
            if !v.is_integer() || !v.is_positive() {
                ok = false;
                break;
            }
            w[p] = v;
        }
        if ok {
            let mut weights = vec![1u32; n];
            for (idx, &i) in present.iter().enumerate() {
                weights[i] = w[idx].to_integer().to_u32().unwrap_or(u32::MAX);
            }
            if (0..n).all(|i| present.contains(&i)) {
                let g = weights.iter().fold(0u32, |a, &b| a.gcd(&b));
                for x in weights.iter_mut() {
                    *x /= g;
                }
            }
            let d = mons[0].weighted_degree(&weights) as u32;
            let better = match &best {
                None => true,
                Some((bd, bw)) => (d, &weights) < (*bd, bw),
            };
            if better {
                best = Some((d, weights));
            }
        }
        // next parameter vector
        let mut i = 0;
        loop {
            if i == vals.len() {
                return best.map(|(d, w)| (w, d));
            }
            vals[i] += 1;
            if vals[i] <= limit {
                break;
            }
            vals[i] = 1;
            i += 1;
        }
    }
}

/// Weights making every generator of `I` weighted-homogeneous, trying the
/// weights of each generator in turn.
pub fn ideal_weights(ideal: &Ideal) -> Option<Vec<u32>> {
    if ideal.is_zero() {
        return Some(vec![1; ideal.nvars()]);
    }
    if ideal.is_quasi_homogeneous() {
        return Some(ideal.ring.weights.clone());
    }
    let n = ideal.nvars();
    if ideal.generators.iter().all(|g| g.is_homogeneous(&vec![1; n])) {
        return Some(vec![1; n]);
    }
    for g in &ideal.generators {
        if let Some((w, _)) = quasi_homogeneous_weights(g) {
            if ideal.generators.iter().all(|h| h.is_homogeneous(&w)) {
                return Some(w);
            }
        }
    }
    None
}

/// Minimal monomial generators of `I`, when `I` is generated by the monomials
/// occurring in its generators; `None` otherwise.
pub fn monomialize(ideal: &Ideal) -> Option<Vec<Monomial>> {
    let mut all: Vec<Monomial> = ideal.generators.iter().flat_map(|g| g.monomials().copied()).collect();
    all.sort();
    all.dedup();
    let minimal = minimal_monomials(&all);
    let gb = ideal.groebner();
    let n = ideal.nvars();
    if minimal.iter().all(|m| gb.contains(&Polynomial::monomial(n, *m, Rational::one()))) {
        Some(minimal)
    } else {
        None
    }
}

/// Drops monomials divisible by another in the list; sorted output.
pub fn minimal_monomials(ms: &[Monomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = ms.to_vec();
    v.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp(a)));
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// `d(I) in I` for every generator of `I`.
pub fn preserves_ideal(d: &Derivation, ideal: &Ideal) -> bool {
    let gb = ideal.groebner();
    ideal.generators.iter().all(|f| gb.contains(&d.apply(f)))
}

/// `Some(c)` when `b = c * a` for a rational `c`.
pub fn is_constant_multiple(a: &Derivation, b: &Derivation) -> Option<Rational> {
    let (i, ai) = a.coeffs.iter().enumerate().find(|(_, p)| !p.is_zero())?;
    let m = ai.monomials().next()?;
    let bc = b.coeffs[i].coeff(m);
    if bc.is_zero() {
        return None;
    }
    let c = &bc / &ai.coeff(m);
    (a.scale(&c) == *b).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars).unwrap()
    }

    #[test]
    fn derivation_basics() {
        let r = ring(&["x", "y"]);
        let d = Derivation::parse(&r, &["x", "2*y"]).unwrap();
        let f = r.parse("x^2*y + y^2").unwrap();
        assert_eq!(d.apply(&f), r.parse("4*x^2*y + 4*y^2").unwrap());
        let e = Derivation::parse(&r, &["y", "0"]).unwrap();
        // [x d_x + 2y d_y, y d_x] = (2y - y) d_x = y d_x
        assert_eq!(d.bracket(&e), e);
        assert_eq!(d.weighted_degree(&[1, 2]), Some(0));
        assert_eq!(d.format(&r), "x*d_x + 2*y*d_y");
    }

    #[test]
    fn weights_of_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(quasi_homogeneous_weights(&r.parse("z^2 - x^2*y").unwrap()), Some((vec![1, 2, 2], 4)));
        assert_eq!(quasi_homogeneous_weights(&r.parse("x^3 + y^3 + z^3").unwrap()), Some((vec![1, 1, 1], 3)));
        assert_eq!(quasi_homogeneous_weights(&r.parse("x^2 + x^3").unwrap()), None);
        assert_eq!(quasi_homogeneous_weights(&r.parse("x^3 - y^2").unwrap()), Some((vec![2, 3, 1], 6)));
    }

    #[test]
    fn tjurina_ideals() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^3 - y^2"]).unwrap();
        let j = jacobian_ideal(&i, None).unwrap();
        assert!(j.equals(&Ideal::parse(&r, &["x^2", "y"]).unwrap()));
        let r3 = ring(&["x", "y", "z"]).reweighted(vec![1, 2, 2]).unwrap();
        let w = Ideal::parse(&r3, &["z^2 - x^2*y"]).unwrap();
        let j = jacobian_ideal(&w, None).unwrap();
        assert!(j.equals(&Ideal::parse(&r3, &["x^2", "x*y", "z"]).unwrap()));
    }

    #[test]
    fn height_rules() {
        let r = ring(&["x", "y", "z", "w"]);
        assert_eq!(height(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap(), 2);
        assert_eq!(height(&Ideal::parse(&r, &["x*y", "x*z"]).unwrap()).unwrap(), 1);
        assert!(matches!(
            height(&Ideal::parse(&r, &["x + y^2", "z"]).unwrap()),
            Err(Error::HeightUndetermined(_))
        ));
    }

    #[test]
    fn coordinate_subspace_derivations() {
        let r = ring(&["a", "b", "c"]);
        let i = Ideal::parse(&r, &["a", "b"]).unwrap();
        let dm = tangent_derivations(&i).unwrap();
        let n = 3;
        let mut want = vec![Derivation::partial(n, 2)];
        for p in 0..2 {
            for q in 0..2 {
                let mut d = Derivation::zero(n);
                d.coeffs[q] = r.var(p);
                want.push(d);
            }
        }
        let wm = DerivationModule::new(i.clone(), want).unwrap();
        assert!(dm.same_module(&wm));
        assert!(dm.contains(&Derivation::partial(n, 2)));
        assert!(!dm.contains(&Derivation::partial(n, 0)));
        assert_eq!(dm.generators.len(), 5);
    }

    #[test]
    fn monomial_extraction() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2*y + x*y^2", "x^2*y - x*y^2"]).unwrap();
        let m = monomialize(&i).unwrap();
        assert_eq!(m.len(), 2);
        assert!(monomialize(&Ideal::parse(&r, &["x^2 + y^2", "x*y"]).unwrap()).is_none());
        assert!(monomialize(&Ideal::parse(&r, &["(x+y)^2"]).unwrap()).is_none());
        let single = monomialize(&Ideal::parse(&r, &["x^3*y"]).unwrap()).unwrap();
        assert_eq!(single, vec![Monomial::from_exponents(&[3, 1])]);
    }

    #[test]
    fn determinants() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let m = vec![
            vec![p("x"), p("1"), p("0")],
            vec![p("0"), p("y"), p("1")],
            vec![p("1"), p("0"), p("x")],
        ];
        // x*(x*y) - 1*(0 - 1) + 0
        assert_eq!(determinant(&m), p("x^2*y + 1"));
    }
}
