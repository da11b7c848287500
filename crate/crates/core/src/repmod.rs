//! Matrix representations of Lie algebras: invariants, sl_2 weight theory,
//! Cayley–Sylvester counts, composition series with sl-block recognition, and
//! the sl_2 local system on the affine line.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{int, partitions_in_rectangle, Rational};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, FreeModuleElement, GbOptions, GroebnerBasis, ModuleRanking, TermOrder};
use crate::liealg::LieAlgebra;
use crate::matrix::{kernel_of_rows, Matrix, Subspace};
use crate::poly::{Polynomial, Ring};

/// Representation `rho: L -> gl(N)` given on the basis of `L`.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub algebra: LieAlgebra,
    pub dim: usize,
    pub mats: Vec<Matrix>,
}

impl MatrixRep {
    /// Checks `rho([e_i, e_j]) = [rho(e_i), rho(e_j)]` for all pairs.
    pub fn new(algebra: LieAlgebra, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != algebra.dim() {
            return Err(Error::Precondition("one matrix per basis element is required".into()));
        }
        let dim = mats.first().map(|m| m.rows).unwrap_or(0);
        if mats.iter().any(|m| m.rows != dim || m.cols != dim) {
            return Err(Error::Precondition("action matrices must be square of equal size".into()));
        }
        let rep = MatrixRep { algebra, dim, mats };
        for i in 0..rep.mats.len() {
            for j in i + 1..rep.mats.len() {
                if rep.mats[i].commutator(&rep.mats[j]) != rep.image(&rep.algebra.bracket_basis(i, j)) {
                    return Err(Error::Inconsistent(format!(
                        "not a representation: bracket of {} and {} is not respected",
                        rep.algebra.labels[i], rep.algebra.labels[j]
                    )));
                }
            }
        }
        Ok(rep)
    }

    pub fn trivial(algebra: LieAlgebra, n: usize) -> Self {
        let mats = vec![Matrix::zeros(n, n); algebra.dim()];
        MatrixRep { algebra, dim: n, mats }
    }

    /// `rho(x)` for `x` in coordinates.
    pub fn image(&self, x: &[Rational]) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.mats) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn direct_sum(&self, other: &MatrixRep) -> MatrixRep {
        let n = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(n, n);
                for i in 0..a.rows {
                    for j in 0..a.cols {
                        m.data[i][j] = a.data[i][j].clone();
                    }
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m.data[a.rows + i][a.cols + j] = b.data[i][j].clone();
                    }
                }
                m
            })
            .collect();
        MatrixRep { algebra: self.algebra.clone(), dim: n, mats }
    }

    /// `rho ⊗ 1 + 1 ⊗ sigma`.
    pub fn tensor(&self, other: &MatrixRep) -> MatrixRep {
        let (p, q) = (self.dim, other.dim);
        let n = p * q;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(n, n);
                for i in 0..p {
                    for k in 0..q {
                        for j in 0..p {
                            if !a.data[i][j].is_zero() {
                                m.data[i * q + k][j * q + k] += &a.data[i][j];
                            }
                        }
                        for l in 0..q {
                            if !b.data[k][l].is_zero() {
                                m.data[i * q + k][i * q + l] += &b.data[k][l];
                            }
                        }
                    }
                }
                m
            })
            .collect();
        MatrixRep { algebra: self.algebra.clone(), dim: n, mats }
    }
}

/// Common kernel of the given action matrices: dimension and basis.
pub fn invariants_dimension(rep: &MatrixRep, nil: &[Matrix]) -> (usize, Vec<Vec<Rational>>) {
    let rows: Vec<Vec<Rational>> = nil
        .iter()
        .flat_map(|m| m.data.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned())
        .collect();
    let basis = kernel_of_rows(&rows, rep.dim);
    (basis.len(), basis)
}

/// Invariants of the basis elements with the given indices.
pub fn invariants_of_indices(rep: &MatrixRep, idx: &[usize]) -> (usize, Vec<Vec<Rational>>) {
    let mats: Vec<Matrix> = idx.iter().map(|&i| rep.mats[i].clone()).collect();
    invariants_dimension(rep, &mats)
}

/// `V_d` in the weight basis `u_0..u_d` (weight of `u_i` is `d - 2i`):
/// `X u_i = i u_{i-1}`, `Y u_i = (d - i) u_{i+1}`.
pub fn sl2_irreducible(d: usize) -> MatrixRep {
    symmetric_power(1, d)
}

/// `S^n(V_d)` on monomials in `u_0..u_d`, with `sl_2` acting by derivations.
pub fn symmetric_power(n: usize, d: usize) -> MatrixRep {
    let monos = monomials_of_degree(d + 1, n);
    let index: BTreeMap<Vec<u16>, usize> = monos.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    let dim = monos.len();
    let mut h = Matrix::zeros(dim, dim);
    let mut x = Matrix::zeros(dim, dim);
    let mut y = Matrix::zeros(dim, dim);
    for (col, m) in monos.iter().enumerate() {
        let weight: i64 = m.iter().enumerate().map(|(i, &a)| a as i64 * (d as i64 - 2 * i as i64)).sum();
        h.data[col][col] = int(weight);
        for i in 0..=d {
            let a = m[i];
            if a == 0 {
                continue;
            }
            // X: u_i -> i u_{i-1}
            if i > 0 {
                let mut t = m.clone();
                t[i] -= 1;
                t[i - 1] += 1;
                x.data[index[&t]][col] += int(a as i64 * i as i64);
            }
            // Y: u_i -> (d - i) u_{i+1}
            if i < d {
                let mut t = m.clone();
                t[i] -= 1;
                t[i + 1] += 1;
                y.data[index[&t]][col] += int(a as i64 * (d - i) as i64);
            }
        }
    }
    MatrixRep { algebra: LieAlgebra::sl2(), dim, mats: vec![h, x, y] }
}

fn monomials_of_degree(nvars: usize, deg: usize) -> Vec<Vec<u16>> {
    fn go(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a as u16;
            go(i + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(0, deg, &mut vec![0; nvars], &mut out);
    out
}

/// Eigenvalues of a semisimple element with multiplicities and eigenvectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub multiplicities: BTreeMap<i64, usize>,
    /// Eigenvectors, grouped by eigenvalue in increasing order.
    pub basis: Vec<Vec<Rational>>,
}

/// Weight decomposition of `h`, whose eigenvalues must be integers in
/// `[-N, N]` (true for `H` in any `sl_2`-module of dimension `N`).
pub fn weight_data(h: &Matrix) -> Result<WeightData> {
    let n = h.rows;
    let mut multiplicities = BTreeMap::new();
    let mut basis = Vec::new();
    if h.is_diagonal() {
        let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let v = h.get(i, i);
            let w = v.is_integer().then(|| v.to_integer().to_i64()).flatten().ok_or(Error::NotDiagonalizable)?;
            by_weight.entry(w).or_default().push(i);
        }
        for (w, idx) in by_weight {
            multiplicities.insert(w, idx.len());
            for i in idx {
                let mut e = vec![Rational::zero(); n];
                e[i] = Rational::one();
                basis.push(e);
            }
        }
        return Ok(WeightData { multiplicities, basis });
    }
    let bound = n as i64;
    for w in -bound..=bound {
        let shifted = h.sub(&Matrix::identity(n).scale(&int(w)));
        let ker = shifted.kernel();
        if !ker.is_empty() {
            multiplicities.insert(w, ker.len());
            basis.extend(ker);
        }
    }
    if basis.len() != n {
        return Err(Error::NotDiagonalizable);
    }
    Ok(WeightData { multiplicities, basis })
}

fn require_sl2(rep: &MatrixRep) -> Result<()> {
    if rep.algebra.dim() != 3 || rep.algebra.nonzero_brackets().count() != 3 {
        return Err(Error::Precondition("expected sl_2 with basis H, X, Y".into()));
    }
    let s = LieAlgebra::sl2();
    for i in 0..3 {
        for j in 0..3 {
            if rep.algebra.bracket_basis(i, j) != s.bracket_basis(i, j) {
                return Err(Error::Precondition("expected sl_2 with basis H, X, Y".into()));
            }
        }
    }
    Ok(())
}

/// Multiplicity of each highest weight `e` in an `sl_2`-module.
pub fn decompose_sl2(rep: &MatrixRep) -> Result<BTreeMap<u32, usize>> {
    require_sl2(rep)?;
    let wd = weight_data(&rep.mats[0])?;
    let dim_of = |w: i64| wd.multiplicities.get(&w).copied().unwrap_or(0);
    let mut out = BTreeMap::new();
    let top = wd.multiplicities.keys().max().copied().unwrap_or(0);
    for e in 0..=top {
        let a = dim_of(e);
        let b = dim_of(e + 2);
        if b > a {
            return Err(Error::Inconsistent(format!("weight multiplicities are not unimodal at {e}")));
        }
        if a > b {
            out.insert(e as u32, a - b);
        }
    }
    let total: usize = out.iter().map(|(e, m)| (*e as usize + 1) * m).sum();
    if total != rep.dim {
        return Err(Error::Inconsistent(format!("weights account for {total} of {} dimensions", rep.dim)));
    }
    Ok(out)
}

/// `[S^n(S^d V) : S^e V] = p(k) - p(k - 1)` with `k = (nd - e)/2`, `p` counting
/// partitions in the `n x d` rectangle.
pub fn cayley_sylvester(n: u32, d: u32, e: u32) -> BigInt {
    let nd = n as i64 * d as i64;
    let e = e as i64;
    if e > nd || (nd - e) % 2 != 0 {
        return BigInt::zero();
    }
    let k = (nd - e) / 2;
    partitions_in_rectangle(k, d as i64, n as i64) - partitions_in_rectangle(k - 1, d as i64, n as i64)
}

/// Dimension of the degree-`n` covariants of binary forms of degree `d`.
pub fn covariant_dimension(n: u32, d: u32) -> BigInt {
    (0..=n * d).map(|e| cayley_sylvester(n, d, e)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    /// Composition factor dimensions, bottom of the series first.
    pub factor_dims: Vec<usize>,
    /// Factor dimensions at least 2.
    pub sl_blocks: Vec<usize>,
    /// The diagonal trace-zero matrices lie in the span of the algebra.
    pub hypothesis: bool,
    /// Structure statement, present only under the hypothesis.
    pub conclusion: Option<String>,
}

/// Maximum module dimension handled by [`recognition_sl_blocks`].
pub const RECOGNITION_CAP: usize = 10;

/// Smallest invariant subspace containing `w` and `v`.
pub fn submodule_closure(mats: &[Matrix], w: &Subspace, v: &[Rational]) -> Subspace {
    let mut s = w.clone();
    let mut queue = vec![v.to_vec()];
    while let Some(u) = queue.pop() {
        if s.insert(&u) {
            for m in mats {
                queue.push(m.mul_vec(&u));
            }
        }
    }
    s
}

/// Composition series of `V` under the matrices spanning `g`, by repeated
/// extraction of minimal invariant subspaces generated by basis vectors.
pub fn recognition_sl_blocks(mats: &[Matrix]) -> Result<Recognition> {
    let n = mats.first().map(|m| m.rows).unwrap_or(0);
    if n > RECOGNITION_CAP {
        return Err(Error::DimensionTooLarge(n));
    }
    let flat: Vec<Vec<Rational>> = mats.iter().map(|m| m.flatten()).collect();
    let span = Subspace::span(&flat, n * n);
    let hypothesis = (0..n.saturating_sub(1)).all(|i| {
        let mut h = Matrix::zeros(n, n);
        h.set(i, i, Rational::one());
        h.set(i + 1, i + 1, -Rational::one());
        span.contains(&h.flatten())
    });
    let mut w = Subspace::zero(n);
    let mut factor_dims = Vec::new();
    while w.dim() < n {
        let mut best: Option<Subspace> = None;
        for k in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::one();
            if w.contains(&e) {
                continue;
            }
            let s = submodule_closure(mats, &w, &e);
            let better = match &best {
                None => true,
                Some(b) => s.dim() < b.dim() || (s.dim() == b.dim() && lex_less(&s.rows, &b.rows)),
            };
            if better {
                best = Some(s);
            }
        }
        let s = best.expect("some basis vector lies outside a proper subspace");
        factor_dims.push(s.dim() - w.dim());
        w = s;
    }
    let sl_blocks: Vec<usize> = factor_dims.iter().copied().filter(|&d| d >= 2).collect();
    let conclusion = hypothesis.then(|| {
        if sl_blocks.is_empty() {
            "g is solvable".to_string()
        } else {
            let parts: Vec<String> = sl_blocks.iter().map(|d| format!("sl_{d}")).collect();
            format!("g = r ⋊ ({})", parts.join(" ⊕ "))
        }
    });
    Ok(Recognition { factor_dims, sl_blocks, hypothesis, conclusion })
}

fn lex_less(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    for (x, y) in a.iter().zip(b) {
        for (p, q) in x.iter().zip(y) {
            if p != q {
                return p < q;
            }
        }
    }
    false
}

/// One step of the filtration of `R ⊗ V_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    /// Components of `m_i` in the basis `u_0..u_d`, as polynomials in `x`.
    pub vector: Vec<String>,
    pub h_eigenvalue: i64,
    /// `c` with `X m_i = c x m_i` modulo the next submodule.
    pub raising_factor: String,
    /// Whether `X m_i = (h/2) x m_i` modulo the next submodule.
    pub half_factor_holds: bool,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Filtration {
    pub d: usize,
    pub steps: Vec<FiltrationStep>,
    pub rank_one_quotients: usize,
    pub certified: bool,
    pub notes: Vec<String>,
}

/// Operators `1 ⊗ H`, `1 ⊗ X`, `1 ⊗ Y` on `R ⊗ V_d`, `R = Q[x]`, where `sl_2`
/// acts on `R` by `H -> 2x d/dx`, `X -> x^2 d/dx`, `Y -> -d/dx`.
struct LocalSystem {
    ring: Ring,
    d: usize,
}

impl LocalSystem {
    fn apply(&self, op: usize, m: &[Polynomial]) -> Vec<Polynomial> {
        let x = self.ring.var(0);
        let d = self.d;
        let anchor = |r: &Polynomial| -> Polynomial {
            let dr = r.derivative(0);
            match op {
                0 => (&x * &dr).scale(&int(2)),
                1 => &(&x * &x) * &dr,
                _ => -&dr,
            }
        };
        let mut out: Vec<Polynomial> = m.iter().map(anchor).collect();
        for (i, r) in m.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            match op {
                0 => out[i] = &out[i] + &r.scale(&int(d as i64 - 2 * i as i64)),
                1 => {
                    if i > 0 {
                        out[i - 1] = &out[i - 1] + &r.scale(&int(i as i64));
                    }
                }
                _ => {
                    if i < d {
                        out[i + 1] = &out[i + 1] + &r.scale(&int((d - i) as i64));
                    }
                }
            }
        }
        out
    }

    fn order(&self) -> TermOrder {
        TermOrder::grevlex().with_ranking(ModuleRanking::PositionOverTerm)
    }

    fn basis(&self, gens: &[Vec<Polynomial>]) -> GroebnerBasis {
        let els: Vec<FreeModuleElement> = if gens.is_empty() {
            vec![FreeModuleElement::zero(self.d + 1, 1)]
        } else {
            gens.iter().map(|g| FreeModuleElement::new(g.clone())).collect()
        };
        groebner_basis(&els, 1, &self.order(), &GbOptions::default()).expect("unbounded")
    }

    /// Submodule generated by `gens` under `R` and the three operators.
    fn generated(&self, gens: &[Vec<Polynomial>]) -> GroebnerBasis {
        let mut cur: Vec<Vec<Polynomial>> = gens.iter().filter(|g| g.iter().any(|p| !p.is_zero())).cloned().collect();
        loop {
            let gb = self.basis(&cur);
            let mut grew = false;
            for g in gb.element_components() {
                for op in 0..3 {
                    let v = self.apply(op, &g);
                    if !gb.contains_vector(&FreeModuleElement::new(v.clone())) {
                        cur.push(v);
                        grew = true;
                    }
                }
            }
            if !grew {
                return gb;
            }
        }
    }
}

fn rank_of(gb: &GroebnerBasis) -> usize {
    let mut comps: Vec<usize> = gb.elements.iter().filter(|e| !e.is_zero()).map(|e| e.lt().comp).collect();
    comps.sort();
    comps.dedup();
    comps.len()
}

/// Builds `m_0 = 1 ⊗ u_d` and `m_{i+1} = (1 ⊗ X - λ_i x) m_i`, and certifies
/// that the generated submodules form a filtration of `R ⊗ V_d` with `d + 1`
/// successive quotients of rank one.
pub fn sl2_algebroid_filtration(d: usize) -> Result<Sl2Filtration> {
    let ring = Ring::new(&["x"]).expect("ring");
    let ls = LocalSystem { ring: ring.clone(), d };
    let x = ring.var(0);
    let zero = Polynomial::zero(1);
    let mut ms: Vec<Vec<Polynomial>> = Vec::new();
    let mut m = vec![zero.clone(); d + 1];
    m[d] = Polynomial::one(1);
    let lambda0 = -(d as i64);
    for i in 0..=d + 1 {
        ms.push(m.clone());
        let lambda = lambda0 + 2 * i as i64;
        let xm: Vec<Polynomial> = m.iter().map(|p| &(&x * p) * &Polynomial::constant(1, int(lambda))).collect();
        m = ls.apply(1, &m).iter().zip(&xm).map(|(a, b)| a - b).collect();
    }
    let subs: Vec<GroebnerBasis> = ms.iter().map(|m| ls.generated(std::slice::from_ref(m))).collect();
    let mut notes = Vec::new();
    let mut certified = true;
    let full = ls.basis(&(0..=d).map(|k| {
        let mut e = vec![zero.clone(); d + 1];
        e[k] = Polynomial::one(1);
        e
    }).collect::<Vec<_>>());
    if rank_of(&subs[0]) != d + 1 || !subs[0].contains_all(&full.generators) {
        certified = false;
        notes.push("the submodule generated by 1 ⊗ u_d is not all of R ⊗ V".into());
    }
    let mut steps = Vec::new();
    let mut quotients = 0;
    for i in 0..=d {
        let lambda = lambda0 + 2 * i as i64;
        let mi = &ms[i];
        let next = &subs[i + 1];
        let cur = &subs[i];
        let fe = |v: &[Polynomial]| FreeModuleElement::new(v.to_vec());
        let contained = cur.contains_all(&next.generators);
        let ri = rank_of(cur);
        let rn = if next.elements.iter().all(|e| e.is_zero()) { 0 } else { rank_of(next) };
        // N_i = N_{i+1} + R m_i
        let mut gens: Vec<Vec<Polynomial>> = next.element_components();
        gens.push(mi.clone());
        let sum = ls.basis(&gens);
        let equal = sum.contains_all(&cur.generators) && cur.contains_all(&sum.generators);
        let y_kills = ls.apply(2, mi).iter().all(|p| p.is_zero());
        let h_diff: Vec<Polynomial> = ls.apply(0, mi).iter().zip(mi).map(|(a, b)| a - &b.scale(&int(lambda))).collect();
        let h_ok = h_diff.iter().all(|p| p.is_zero());
        let xm = ls.apply(1, mi);
        let lam_x: Vec<Polynomial> = mi.iter().map(|p| (&x * p).scale(&int(lambda))).collect();
        let full_ok = next.contains_vector(&fe(&xm.iter().zip(&lam_x).map(|(a, b)| a - b).collect::<Vec<_>>()));
        let half: Vec<Polynomial> = mi.iter().map(|p| (&x * p).scale(&Rational::new(lambda.into(), 2.into()))).collect();
        let half_ok = next.contains_vector(&fe(&xm.iter().zip(&half).map(|(a, b)| a - b).collect::<Vec<_>>()));
        let ok = contained && ri == rn + 1 && equal && y_kills && h_ok && full_ok;
        if !ok {
            certified = false;
            notes.push(format!("step {i}: filtration conditions fail"));
        } else {
            quotients += 1;
        }
        if ok && !half_ok {
            notes.push(format!(
                "step {i}: X acts on the quotient as {lambda}*x, not ({lambda}/2)*x"
            ));
        }
        steps.push(FiltrationStep {
            vector: mi.iter().map(|p| ring.fmt_poly(p)).collect(),
            h_eigenvalue: lambda,
            raising_factor: lambda.to_string(),
            half_factor_holds: half_ok,
            rank: ri,
        });
    }
    let last_zero = subs[d + 1].elements.iter().all(|e| e.is_zero()) || rank_of(&subs[d + 1]) == 0;
    if !last_zero {
        certified = false;
        notes.push("the last submodule is not zero".into());
    }
    certified &= quotients == d + 1;
    Ok(Sl2Filtration { d, steps, rank_one_quotients: quotients, certified, notes })
}

/// How the lengths of symmetric powers were certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthPath {
    /// Solvable image: every composition factor is one-dimensional.
    Solvable,
    /// `V` is the irreducible `sl_2`-module of highest weight `d`, up to scalars.
    Covariant { d: usize },
    /// Reductive image with a split triangular decomposition; lengths are
    /// dimensions of highest weight vectors.
    HighestWeight,
}

/// Basis of the linear span of the given matrices.
pub fn span_basis(mats: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = Vec::new();
    let Some(first) = mats.first() else { return out };
    let mut sp = Subspace::zero(first.rows * first.cols);
    for m in mats {
        if sp.insert(&m.flatten()) {
            out.push(m.clone());
        }
    }
    out
}

fn unflatten(v: &[Rational], n: usize) -> Matrix {
    Matrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect())
}

/// Action of `a in gl(V)` on `S^n(V)` in the monomial basis of
/// [`symmetric_power_basis`], extended as a derivation.
pub fn symmetric_power_action(a: &Matrix, n: usize) -> Matrix {
    let r = a.rows;
    let monos = symmetric_power_basis(r, n);
    let index: BTreeMap<&Vec<u16>, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut out = Matrix::zeros(monos.len(), monos.len());
    for (col, m) in monos.iter().enumerate() {
        for j in 0..r {
            if m[j] == 0 {
                continue;
            }
            for i in 0..r {
                let c = a.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let mut t = m.clone();
                t[j] -= 1;
                t[i] += 1;
                out.data[index[&t]][col] += c * int(m[j] as i64);
            }
        }
    }
    out
}

/// Exponent vectors of the degree-`n` monomials in `r` variables.
pub fn symmetric_power_basis(r: usize, n: usize) -> Vec<Vec<u16>> {
    monomials_of_degree(r, n)
}

fn image_algebra(basis: &[Matrix]) -> Result<LieAlgebra> {
    LieAlgebra::from_matrices(basis, (1..=basis.len()).map(|k| format!("g{k}")).collect())
}

fn matrices_of(sub: &Subspace, basis: &[Matrix]) -> Vec<Matrix> {
    sub.rows
        .iter()
        .map(|c| {
            let mut acc = Matrix::zeros(basis[0].rows, basis[0].cols);
            for (x, m) in c.iter().zip(basis) {
                if !x.is_zero() {
                    acc = acc.add(&m.scale(x));
                }
            }
            acc
        })
        .collect()
}

/// `Some(d)` when the derived algebra of the span is a three-dimensional
/// simple algebra acting absolutely irreducibly on `V` (`dim V = d + 1`) and
/// the span lies in the derived algebra plus scalars.
pub fn sl2_irreducible_certificate(mats: &[Matrix]) -> Option<usize> {
    let basis = span_basis(mats);
    if basis.is_empty() {
        return None;
    }
    let r = basis[0].rows;
    let g = image_algebra(&basis).ok()?;
    let s = matrices_of(&g.derived_algebra(), &basis);
    if s.len() != 3 {
        return None;
    }
    let sa = image_algebra(&s).ok()?;
    if sa.killing_radical().rank != 3 {
        return None;
    }
    // commutant {X : [X, s_k] = 0}
    let mut rows = Vec::new();
    for m in &s {
        for i in 0..r {
            for j in 0..r {
                let mut row = vec![Rational::zero(); r * r];
                for k in 0..r {
                    // (XM - MX)_{ij} = sum_k X_ik M_kj - M_ik X_kj
                    row[i * r + k] += m.get(k, j);
                    row[k * r + j] -= m.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    if kernel_of_rows(&rows, r * r).len() != 1 {
        return None;
    }
    let mut with_scalars: Vec<Vec<Rational>> = s.iter().map(|m| m.flatten()).collect();
    with_scalars.push(Matrix::identity(r).flatten());
    let sp = Subspace::span(&with_scalars, r * r);
    basis.iter().all(|m| sp.contains(&m.flatten())).then_some(r - 1)
}

/// Split triangular data `(h, n+)` of the span, when it is reductive with
/// centre acting diagonally, its derived algebra `s` decomposes as
/// `(s ∩ diagonal) ⊕ (s ∩ strictly upper) ⊕ (s ∩ strictly lower)`, and
/// `s ∩ diagonal` is self-centralising in `s`.
pub fn highest_weight_certificate(mats: &[Matrix]) -> Option<(Vec<Matrix>, Vec<Matrix>)> {
    let basis = span_basis(mats);
    if basis.is_empty() {
        return None;
    }
    let r = basis[0].rows;
    let g = image_algebra(&basis).ok()?;
    let center = g.center();
    if g.killing_radical().radical_dim != center.dim() {
        return None;
    }
    if matrices_of(&center, &basis).iter().any(|m| !m.is_diagonal()) {
        return None;
    }
    let s_mats = matrices_of(&g.derived_algebra(), &basis);
    let s = Subspace::span(&s_mats.iter().map(|m| m.flatten()).collect::<Vec<_>>(), r * r);
    let units = |keep: &dyn Fn(usize, usize) -> bool| {
        let mut v = Vec::new();
        for i in 0..r {
            for j in 0..r {
                if keep(i, j) {
                    v.push(unit_matrix(r, i, j).flatten());
                }
            }
        }
        Subspace::span(&v, r * r)
    };
    let h = s.intersect(&units(&|i, j| i == j));
    let up = s.intersect(&units(&|i, j| i < j));
    let low = s.intersect(&units(&|i, j| i > j));
    if h.dim() + up.dim() + low.dim() != s.dim() {
        return None;
    }
    let h_mats: Vec<Matrix> = h.rows.iter().map(|v| unflatten(v, r)).collect();
    // centraliser of h inside s
    let mut rows = Vec::new();
    for hm in &h_mats {
        let comms: Vec<Vec<Rational>> = s_mats.iter().map(|m| hm.commutator(m).flatten()).collect();
        for k in 0..r * r {
            rows.push(comms.iter().map(|c| c[k].clone()).collect::<Vec<_>>());
        }
    }
    let cent = kernel_of_rows(&rows, s_mats.len());
    let cent_dim = Subspace::span(
        &cent
            .iter()
            .map(|c| {
                let mut acc = vec![Rational::zero(); r * r];
                for (x, m) in c.iter().zip(&s_mats) {
                    for (a, b) in acc.iter_mut().zip(m.flatten()) {
                        *a += x * &b;
                    }
                }
                acc
            })
            .collect::<Vec<_>>(),
        r * r,
    )
    .dim();
    if cent_dim != h.dim() {
        return None;
    }
    Some((h_mats, up.rows.iter().map(|v| unflatten(v, r)).collect()))
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Rational::one());
    m
}

/// Dimension of the common kernel of `n+` on `S^n(V)`, computed blockwise
/// over the weight spaces of the diagonal elements `h`.
pub fn highest_weight_count(h: &[Matrix], nplus: &[Matrix], n: usize) -> usize {
    let r = h.first().or(nplus.first()).map(|m| m.rows).unwrap_or(0);
    let monos = symmetric_power_basis(r, n);
    let mut blocks: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (k, m) in monos.iter().enumerate() {
        let w: Vec<Rational> = h
            .iter()
            .map(|hm| (0..r).map(|i| hm.get(i, i) * int(m[i] as i64)).fold(Rational::zero(), |a, b| a + b))
            .collect();
        blocks.entry(w).or_default().push(k);
    }
    let acts: Vec<Matrix> = nplus.iter().map(|e| symmetric_power_action(e, n)).collect();
    let mut total = 0;
    for cols in blocks.values() {
        let mut rows = Vec::new();
        for a in &acts {
            for row in &a.data {
                let sub: Vec<Rational> = cols.iter().map(|&c| row[c].clone()).collect();
                if sub.iter().any(|x| !x.is_zero()) {
                    rows.push(sub);
                }
            }
        }
        total += kernel_of_rows(&rows, cols.len()).len();
    }
    total
}

/// Lengths of `S^n(V)`, `n <= depth`, over the Lie algebra spanned by `mats`.
pub fn symmetric_power_lengths(mats: &[Matrix], r: usize, depth: usize) -> Result<(Vec<u64>, LengthPath)> {
    let basis = span_basis(mats);
    let solvable = basis.is_empty() || image_algebra(&basis)?.is_solvable();
    if solvable {
        let dims = (0..=depth)
            .map(|n| match r {
                0 => (n == 0) as u64,
                _ => crate::arith::binomial((n + r - 1) as u64, (r - 1) as u64).to_u64().unwrap_or(u64::MAX),
            })
            .collect();
        return Ok((dims, LengthPath::Solvable));
    }
    if let Some(d) = sl2_irreducible_certificate(&basis) {
        let dims = (0..=depth).map(|n| covariant_dimension(n as u32, d as u32).to_u64().unwrap_or(u64::MAX)).collect();
        return Ok((dims, LengthPath::Covariant { d }));
    }
    if let Some((h, nplus)) = highest_weight_certificate(&basis) {
        let dims = (0..=depth).map(|n| highest_weight_count(&h, &nplus, n) as u64).collect();
        return Ok((dims, LengthPath::HighestWeight));
    }
    Err(Error::Precondition("length not certified: image is neither solvable nor split reductive".into()))
}

/// Whether every listed matrix is nilpotent (checked by `M^N = 0`).
pub fn is_nilpotent(m: &Matrix) -> bool {
    let mut p = m.clone();
    for _ in 0..m.rows {
        if p.is_zero() {
            return true;
        }
        p = p.mul(m);
    }
    p.is_zero()
}

/// Signed sum check used by tests and reports: `sum_e (e + 1) mult(e)`.
pub fn weighted_total(dec: &BTreeMap<u32, usize>) -> usize {
    dec.iter().map(|(e, m)| (*e as usize + 1) * m).sum()
}

/// Integer value of a nonnegative rational, when it is one.
pub fn as_count(q: &Rational) -> Option<usize> {
    (q.is_integer() && !q.is_negative()).then(|| q.to_integer().to_usize()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    #[test]
    fn small_decompositions() {
        let s2v1 = symmetric_power(2, 1);
        assert_eq!(decompose_sl2(&s2v1).unwrap(), BTreeMap::from([(2, 1)]));
        let s2v2 = symmetric_power(2, 2);
        assert_eq!(decompose_sl2(&s2v2).unwrap(), BTreeMap::from([(0, 1), (4, 1)]));
        let v1 = sl2_irreducible(1);
        let t = v1.tensor(&v1);
        let t = MatrixRep::new(t.algebra.clone(), t.mats.clone()).unwrap();
        assert_eq!(decompose_sl2(&t).unwrap(), BTreeMap::from([(0, 1), (2, 1)]));
    }

    #[test]
    fn representations_are_validated() {
        let rep = symmetric_power(3, 2);
        assert!(MatrixRep::new(rep.algebra.clone(), rep.mats.clone()).is_ok());
        let mut bad = rep.mats.clone();
        bad[1] = bad[1].scale(&int(2));
        assert!(MatrixRep::new(rep.algebra, bad).is_err());
    }

    #[test]
    fn highest_vectors() {
        let v = sl2_irreducible(4);
        assert_eq!(invariants_of_indices(&v, &[1]).0, 1);
        let v2 = sl2_irreducible(2).direct_sum(&sl2_irreducible(0));
        assert_eq!(invariants_of_indices(&v2, &[1]).0, 2);
        let triv = MatrixRep::trivial(LieAlgebra::sl2(), 3);
        assert_eq!(invariants_of_indices(&triv, &[1]).0, 3);
    }

    #[test]
    fn cayley_sylvester_values() {
        assert_eq!(cayley_sylvester(2, 2, 0), big(1));
        assert_eq!(cayley_sylvester(2, 2, 2), big(0));
        assert_eq!(cayley_sylvester(2, 2, 4), big(1));
        for d in 0..=5 {
            assert_eq!(cayley_sylvester(1, d, d), big(1));
            assert_eq!(covariant_dimension(0, d), big(1));
            for n in 0..=5 {
                assert_eq!(cayley_sylvester(n, d, n * d), big(1));
            }
        }
        let d2: Vec<BigInt> = (0..6).map(|n| covariant_dimension(n, 2)).collect();
        assert_eq!(d2, [1, 1, 2, 2, 3, 3].map(big));
        assert_eq!(covariant_dimension(4, 3), big(5));
    }

    #[test]
    fn weight_data_of_non_diagonal_h() {
        // H conjugated by an upper unitriangular matrix
        let h = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(-1)]]);
        let wd = weight_data(&h).unwrap();
        assert_eq!(wd.multiplicities, BTreeMap::from([(-1, 1), (1, 1)]));
        let j = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]);
        assert_eq!(weight_data(&j), Err(Error::NotDiagonalizable));
    }

    fn unit(n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, Rational::one());
        m
    }

    #[test]
    fn recognition_examples() {
        let gl3: Vec<Matrix> = (0..9).map(|k| unit(3, k / 3, k % 3)).collect();
        let r = recognition_sl_blocks(&gl3).unwrap();
        assert_eq!((r.factor_dims.clone(), r.sl_blocks.clone(), r.hypothesis), (vec![3], vec![3], true));
        let mut upper: Vec<Matrix> = vec![unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2)];
        upper.extend((0..3).map(|i| unit(3, i, i)));
        let r = recognition_sl_blocks(&upper).unwrap();
        assert_eq!(r.factor_dims, vec![1, 1, 1]);
        assert!(r.sl_blocks.is_empty());
        assert!(recognition_sl_blocks(&[Matrix::zeros(11, 11)]).is_err());
    }

    #[test]
    fn block_diagonal_sl2_sl3() {
        let mut mats = vec![unit(5, 0, 1), unit(5, 1, 0)];
        for i in 2..5 {
            for j in 2..5 {
                if i != j {
                    mats.push(unit(5, i, j));
                }
            }
        }
        for i in 0..4 {
            let mut h = unit(5, i, i);
            h.set(i + 1, i + 1, -Rational::one());
            mats.push(h);
        }
        let r = recognition_sl_blocks(&mats).unwrap();
        let mut dims = r.factor_dims.clone();
        dims.sort();
        assert_eq!(dims, vec![2, 3]);
        assert!(r.hypothesis);
        assert_eq!(r.conclusion.as_deref(), Some("g = r ⋊ (sl_2 ⊕ sl_3)"));
    }

    #[test]
    fn length_paths() {
        // gl_3 on C^3: S^n irreducible
        let gl3: Vec<Matrix> = (0..9).map(|k| unit(3, k / 3, k % 3)).collect();
        let (dims, path) = symmetric_power_lengths(&gl3, 3, 5).unwrap();
        assert_eq!(dims, vec![1; 6]);
        assert_eq!(path, LengthPath::HighestWeight);
        // diagonal torus: solvable
        let diag: Vec<Matrix> = (0..3).map(|i| unit(3, i, i)).collect();
        let (dims, path) = symmetric_power_lengths(&diag, 3, 3).unwrap();
        assert_eq!((dims, path), (vec![1, 3, 6, 10], LengthPath::Solvable));
        // sl_2 on V_3 plus scalars: covariant counts, and the highest weight
        // route on the same matrices agrees
        let v3 = sl2_irreducible(3);
        let mut mats = v3.mats.clone();
        mats.push(Matrix::identity(4));
        let (dims, path) = symmetric_power_lengths(&mats, 4, 8).unwrap();
        assert_eq!(path, LengthPath::Covariant { d: 3 });
        let (h, nplus) = highest_weight_certificate(&mats).unwrap();
        let hw: Vec<u64> = (0..=8).map(|n| highest_weight_count(&h, &nplus, n) as u64).collect();
        assert_eq!(dims, hw);
        assert_eq!(dims, vec![1, 1, 2, 3, 5, 6, 8, 10, 13]);
    }

    #[test]
    fn symmetric_power_action_is_a_representation() {
        let v2 = sl2_irreducible(2);
        let mats: Vec<Matrix> = v2.mats.iter().map(|m| symmetric_power_action(m, 3)).collect();
        let rep = MatrixRep::new(LieAlgebra::sl2(), mats).unwrap();
        assert_eq!(decompose_sl2(&rep).unwrap(), decompose_sl2(&symmetric_power(3, 2)).unwrap());
    }

    #[test]
    fn local_system_small_cases() {
        for d in 0..=4 {
            let f = sl2_algebroid_filtration(d).unwrap();
            assert!(f.certified, "{:?}", f.notes);
            assert_eq!(f.rank_one_quotients, d + 1);
            let eig: Vec<i64> = f.steps.iter().map(|s| s.h_eigenvalue).collect();
            assert_eq!(eig, (0..=d as i64).map(|i| -(d as i64) + 2 * i).collect::<Vec<_>>());
            for s in &f.steps {
                assert_eq!(s.half_factor_holds, s.h_eigenvalue == 0);
            }
        }
    }
}
