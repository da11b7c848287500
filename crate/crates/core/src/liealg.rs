//! Finite-dimensional Lie algebras over Q given by structure constants, and
//! the fibre Lie algebra `T/mT` of a module of derivations.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{fmt_rational, int, parse_rational, Rational};
use crate::derivations::{Derivation, DerivationModule};
use crate::error::{Error, Result};
use crate::matrix::{kernel_of_rows, solve_combination, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `[e_i, e_j]` for `i < j`, nonzero entries only.
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    pub labels: Vec<String>,
}

/// Dimensions of a descending chain of subalgebras, up to the first repeat or 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesChain {
    pub dims: Vec<usize>,
}

impl SeriesChain {
    pub fn last(&self) -> usize {
        *self.dims.last().unwrap_or(&0)
    }

    pub fn reaches_zero(&self) -> bool {
        self.last() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingRadical {
    pub killing: Matrix,
    pub rank: usize,
    pub radical_dim: usize,
    pub radical_basis: Vec<Vec<Rational>>,
}

/// Isomorphism invariants used to compare algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived: Vec<usize>,
    pub lower_central: Vec<usize>,
    pub killing_rank: usize,
    pub radical_dim: usize,
    pub center_dim: usize,
    pub solvable: bool,
}

impl LieAlgebra {
    /// Builds the algebra from brackets `[e_i, e_j]` (0-based, any order of
    /// `i`, `j`), checking antisymmetry consistency and the Jacobi identity.
    pub fn new(dim: usize, brackets: Vec<(usize, usize, Vec<Rational>)>, labels: Vec<String>) -> Result<Self> {
        let mut map: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for (i, j, c) in brackets {
            if i >= dim || j >= dim || c.len() != dim {
                return Err(Error::Precondition(format!("bracket ({i}, {j}) out of range")));
            }
            if i == j {
                if c.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Precondition(format!("[e{0}, e{0}] must vanish", i + 1)));
                }
                continue;
            }
            let (key, val) = if i < j { ((i, j), c) } else { ((j, i), c.iter().map(|x| -x.clone()).collect()) };
            if let Some(prev) = map.get(&key) {
                if *prev != val {
                    return Err(Error::Precondition(format!("conflicting brackets for ({}, {})", key.0 + 1, key.1 + 1)));
                }
            }
            if val.iter().any(|x| !x.is_zero()) {
                map.insert(key, val);
            }
        }
        let labels = if labels.len() == dim { labels } else { (1..=dim).map(|k| format!("e{k}")).collect() };
        let l = LieAlgebra { dim, brackets: map, labels };
        l.check_jacobi()?;
        Ok(l)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, brackets: BTreeMap::new(), labels: (1..=dim).map(|k| format!("e{k}")).collect() }
    }

    /// `sl_2` with basis `H, X, Y`: `[H,X] = 2X`, `[H,Y] = -2Y`, `[X,Y] = H`.
    pub fn sl2() -> Self {
        LieAlgebra::new(
            3,
            vec![
                (0, 1, vec![int(0), int(2), int(0)]),
                (0, 2, vec![int(0), int(0), int(-2)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
            vec!["H".into(), "X".into(), "Y".into()],
        )
        .expect("sl2")
    }

    /// `gl_n` with matrix units `E_ij` as basis (row-major).
    pub fn gl(n: usize) -> Self {
        let mats: Vec<Matrix> = (0..n * n)
            .map(|k| {
                let mut m = Matrix::zeros(n, n);
                m.set(k / n, k % n, Rational::one());
                m
            })
            .collect();
        let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
        LieAlgebra::from_matrices(&mats, labels).expect("gl_n")
    }

    /// Linear Lie algebra spanned by linearly independent matrices closed
    /// under commutators.
    pub fn from_matrices(mats: &[Matrix], labels: Vec<String>) -> Result<Self> {
        let flat: Vec<Vec<Rational>> = mats.iter().map(|m| m.flatten()).collect();
        if Subspace::span(&flat, flat.first().map(|v| v.len()).unwrap_or(0)).dim() != mats.len() {
            return Err(Error::Precondition("matrices are linearly dependent".into()));
        }
        let mut br = Vec::new();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                let c = mats[i].commutator(&mats[j]).flatten();
                let coords = solve_combination(&flat, &c)
                    .ok_or_else(|| Error::Precondition("matrices are not closed under commutators".into()))?;
                br.push((i, j, coords));
            }
        }
        LieAlgebra::new(mats.len(), br, labels)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut brackets = BTreeMap::new();
        for (&(i, j), c) in &self.brackets {
            let mut v = c.clone();
            v.resize(dim, Rational::zero());
            brackets.insert((i, j), v);
        }
        for (&(i, j), c) in &other.brackets {
            let mut v = vec![Rational::zero(); self.dim];
            v.extend(c.iter().cloned());
            brackets.insert((i + self.dim, j + self.dim), v);
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra { dim, brackets, labels }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| vec![Rational::zero(); self.dim])
        } else if i > j {
            self.brackets
                .get(&(j, i))
                .map(|c| c.iter().map(|x| -x.clone()).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim])
        } else {
            vec![Rational::zero(); self.dim]
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), c) in &self.brackets {
            // x_i y_j - x_j y_i
            let a = &x[i] * &y[j] - &x[j] * &y[i];
            if a.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                if !ck.is_zero() {
                    *o += &a * ck;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the basis (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vec<Rational>)> {
        self.brackets.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    fn check_jacobi(&self) -> Result<()> {
        let m = self.dim;
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let a = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let b = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let c = self.bracket(&self.bracket(&ek, &ei), &ej);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Err(Error::Inconsistent(format!(
                            "Jacobi identity fails for ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::span(&(0..self.dim).map(|i| self.basis_vector(i)).collect::<Vec<_>>(), self.dim)
    }

    /// Span of `[u, v]` for `u` in `a`, `v` in `b`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in &a.rows {
            for v in &b.rows {
                let w = self.bracket(u, v);
                if w.iter().any(|x| !x.is_zero()) {
                    vecs.push(w);
                }
            }
        }
        Subspace::span(&vecs, self.dim)
    }

    /// `D^0 = g`, `D^{s+1} = [D^s, D^s]`.
    pub fn derived_series(&self) -> SeriesChain {
        let mut cur = self.full_space();
        let mut dims = vec![cur.dim()];
        while cur.dim() > 0 {
            let next = self.bracket_space(&cur, &cur);
            let d = next.dim();
            dims.push(d);
            if d == cur.dim() {
                break;
            }
            cur = next;
        }
        SeriesChain { dims }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().reaches_zero()
    }

    /// `C^0 = g`, `C^{s+1} = [g, C^s]`.
    pub fn lower_central_series(&self) -> SeriesChain {
        let g = self.full_space();
        let mut cur = g.clone();
        let mut dims = vec![cur.dim()];
        while cur.dim() > 0 {
            let next = self.bracket_space(&g, &cur);
            let d = next.dim();
            dims.push(d);
            if d == cur.dim() {
                break;
            }
            cur = next;
        }
        SeriesChain { dims }
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = self.full_space();
        self.bracket_space(&g, &g)
    }

    pub fn center(&self) -> Subspace {
        // x central iff [x, e_j] = 0 for all j: linear conditions on x
        let m = self.dim;
        let mut rows = Vec::new();
        for j in 0..m {
            for k in 0..m {
                // coefficient of e_k in [x, e_j] = sum_i x_i c_{ij}^k
                rows.push((0..m).map(|i| self.bracket_basis(i, j)[k].clone()).collect());
            }
        }
        Subspace::span(&kernel_of_rows(&rows, m), m)
    }

    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let v = ads[i].mul(&ads[j]).trace();
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    /// Solvable radical `{x : kappa(x, [g, g]) = 0}`.
    pub fn killing_radical(&self) -> KillingRadical {
        let killing = self.killing_form();
        let rank = killing.rank();
        let dg = self.derived_algebra();
        let rows: Vec<Vec<Rational>> = dg.rows.iter().map(|y| killing.mul_vec(y)).collect();
        let radical_basis = if rows.is_empty() {
            (0..self.dim).map(|i| self.basis_vector(i)).collect()
        } else {
            kernel_of_rows(&rows, self.dim)
        };
        KillingRadical { killing, rank, radical_dim: radical_basis.len(), radical_basis }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let derived = self.derived_series();
        let kr = self.killing_radical();
        Fingerprint {
            dim: self.dim,
            solvable: derived.reaches_zero(),
            derived: derived.dims,
            lower_central: self.lower_central_series().dims,
            killing_rank: kr.rank,
            radical_dim: kr.radical_dim,
            center_dim: self.center().dim(),
        }
    }

    /// `{dim, brackets: [[i, j, [c..]]], labels}` with 1-based indices.
    pub fn to_json(&self) -> Value {
        let br: Vec<Value> = self
            .brackets
            .iter()
            .map(|(&(i, j), c)| json!([i + 1, j + 1, c.iter().map(fmt_rational).collect::<Vec<_>>()]))
            .collect();
        json!({"dim": self.dim, "brackets": br, "labels": self.labels})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("lie algebra json: {m}"));
        let dim = v.get("dim").and_then(|d| d.as_u64()).ok_or_else(|| bad("missing dim"))? as usize;
        let labels: Vec<String> = v
            .get("labels")
            .and_then(|l| l.as_array())
            .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
            .unwrap_or_default();
        let mut br = Vec::new();
        for entry in v.get("brackets").and_then(|b| b.as_array()).ok_or_else(|| bad("missing brackets"))? {
            let e = entry.as_array().ok_or_else(|| bad("bracket entry must be an array"))?;
            if e.len() != 3 {
                return Err(bad("bracket entry must be [i, j, coeffs]"));
            }
            let i = e[0].as_u64().filter(|&i| i >= 1).ok_or_else(|| bad("indices are 1-based"))? as usize;
            let j = e[1].as_u64().filter(|&j| j >= 1).ok_or_else(|| bad("indices are 1-based"))? as usize;
            let c = e[2]
                .as_array()
                .ok_or_else(|| bad("coefficients must be an array"))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => parse_rational(&n.to_string()),
                    _ => Err(bad("coefficient must be a rational string")),
                })
                .collect::<Result<Vec<_>>>()?;
            br.push((i - 1, j - 1, c));
        }
        LieAlgebra::new(dim, br, labels)
    }

    /// Brackets as text, e.g. `[d1, d3] = 2*d3`.
    pub fn bracket_table(&self) -> Vec<String> {
        self.brackets
            .iter()
            .map(|(&(i, j), c)| format!("[{}, {}] = {}", self.labels[i], self.labels[j], self.format_vector(c)))
            .collect()
    }

    pub fn format_vector(&self, c: &[Rational]) -> String {
        let mut out = String::new();
        for (k, a) in c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a < &Rational::zero();
            let abs = if neg { -a.clone() } else { a.clone() };
            let term = if abs.is_one() { self.labels[k].clone() } else { format!("{}*{}", fmt_rational(&abs), self.labels[k]) };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Fibre Lie algebra together with the derivations representing its basis.
#[derive(Clone, Debug)]
pub struct Fibre {
    pub algebra: LieAlgebra,
    pub basis: Vec<Derivation>,
    pub module: DerivationModule,
}

/// `T/mT` for a module of derivations vanishing at the origin.
///
/// The basis is a minimal homogeneous generating set. Brackets are expressed
/// in it through coefficient lifts whose values at the origin give the
/// structure constants.
pub fn fibre_lie_algebra(dm: &DerivationModule) -> Result<Fibre> {
    fibre_impl(dm, None, true)
}

/// As [`fibre_lie_algebra`], without requiring the generators to vanish at
/// the origin. Used for smooth and toral cases where `d/dx_i` lies in the
/// module; the Jacobi identity is still verified.
pub fn fibre_lie_algebra_permissive(dm: &DerivationModule) -> Result<Fibre> {
    fibre_impl(dm, None, false)
}

/// Fibre algebra expressed in a caller-chosen minimal generating set.
pub fn fibre_in_basis(dm: &DerivationModule, basis: Vec<Derivation>, labels: Vec<String>) -> Result<Fibre> {
    let mut f = fibre_impl(dm, Some(basis), false)?;
    if labels.len() == f.algebra.dim() {
        f.algebra.labels = labels;
    }
    Ok(f)
}

fn fibre_impl(dm: &DerivationModule, basis: Option<Vec<Derivation>>, strict: bool) -> Result<Fibre> {
    if !dm.ideal.is_quasi_homogeneous() {
        return Err(Error::NotQuasiHomogeneous("fibre extraction needs a weighted-homogeneous ideal".into()));
    }
    if !dm.is_homogeneous() {
        return Err(Error::NotQuasiHomogeneous("module generators are not homogeneous".into()));
    }
    let minimal = dm.minimal();
    let module = match basis {
        None => minimal,
        Some(b) => {
            let given = DerivationModule::new(dm.ideal.clone(), b)?;
            if !given.same_module(dm) {
                return Err(Error::Precondition("supplied basis does not generate the module".into()));
            }
            if given.generators.len() != minimal.generators.len() || !given.is_homogeneous() {
                return Err(Error::Precondition("supplied basis is not a minimal homogeneous generating set".into()));
            }
            given
        }
    };
    if strict {
        if let Some((k, _)) = module.generators.iter().enumerate().find(|(_, d)| !d.vanishes_at_origin()) {
            return Err(Error::NotLogarithmic(format!(
                "generator {} = {} has a nonzero value at the origin",
                k + 1,
                module.generators[k].format(&module.ring)
            )));
        }
    }
    let gens = module.generators.clone();
    let m = gens.len();
    let mut br = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let b = gens[i].bracket(&gens[j]);
            let lift = module
                .lift(&b)
                .ok_or_else(|| Error::Inconsistent(format!("bracket of generators {} and {} leaves the module", i + 1, j + 1)))?;
            let c: Vec<Rational> = lift.iter().map(|p| p.constant_term()).collect();
            br.push((i, j, c));
        }
    }
    let labels = (1..=m).map(|k| format!("d{k}")).collect();
    let algebra = LieAlgebra::new(m, br, labels)?;
    Ok(Fibre { algebra, basis: gens, module })
}
