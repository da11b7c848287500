//! Exact dense matrices over Q with zero-skipping elimination and products.

use num_traits::{One, Zero};

use crate::arith::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Rational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Rational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map(|r| r.len()).unwrap_or(0);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i][j] = v.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i][j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    t.data[j][i] = v.clone();
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.data
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self.data[i][i])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let sparse_other: Vec<Vec<(usize, &Rational)>> = other
            .data
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_other[k] {
                    out.data[i][j] += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let data = self.data.iter().map(|r| r.iter().map(|x| x * c).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn rank(&self) -> usize {
        rref(self.data.clone()).1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        kernel_of_rows(&self.data, self.cols)
    }

    /// Flattens row-major, for linear algebra on spaces of matrices.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.iter().flat_map(|r| r.iter().cloned()).collect()
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row: Vec<(usize, Rational)> = rows[r]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (j, v) in &pivot_row {
                rows[i][*j] -= &f * v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn kernel_of_rows(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (red, pivots) = rref(rows.to_vec());
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in red.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Echelon basis of a span of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub dim_ambient: usize,
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(vectors: &[Vec<Rational>], dim_ambient: usize) -> Self {
        let (rows, pivots) = rref(vectors.to_vec());
        Subspace { dim_ambient, rows, pivots }
    }

    pub fn zero(dim_ambient: usize) -> Self {
        Subspace { dim_ambient, rows: vec![], pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating against the echelon basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        w[j] -= &f * x;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Subspace::span(&v, self.dim_ambient)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        if r.iter().all(|x| x.is_zero()) {
            return false;
        }
        let mut rows = self.rows.clone();
        rows.push(r);
        *self = Subspace::span(&rows, self.dim_ambient);
        true
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // v = sum a_i s_i = sum b_j o_j
        let n = self.dim_ambient;
        let k = self.dim();
        let cols: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|r| r.iter().map(|x| -x.clone()).collect()))
            .collect();
        let m = Matrix::from_columns(&cols, n);
        let ker = m.kernel();
        let vecs: Vec<Vec<Rational>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); n];
                for (a, s) in c[..k].iter().zip(&self.rows) {
                    if !a.is_zero() {
                        for (x, y) in v.iter_mut().zip(s) {
                            *x += a * y;
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(&vecs, n)
    }
}

/// Solves `sum c_i vectors[i] = target`, returning one solution.
pub fn solve_combination(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = target.len();
    let k = vectors.len();
    // augmented system: rows indexed by coordinates
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(rows);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        sol[p] = row[k].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn products_and_commutators() {
        let x = m(&[&[0, 1], &[0, 0]]);
        let y = m(&[&[0, 0], &[1, 0]]);
        let h = m(&[&[1, 0], &[0, -1]]);
        assert_eq!(x.commutator(&y), h);
        assert_eq!(h.commutator(&x), x.scale(&int(2)));
        assert_eq!(h.mul(&Matrix::identity(2)), h);
    }

    #[test]
    fn subspaces() {
        let s = Subspace::span(&[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]], 3);
        let t = Subspace::span(&[vec![int(0), int(1), int(1)], vec![int(1), int(1), int(0)]], 3);
        assert_eq!(s.intersect(&t).dim(), 1);
        assert!(s.intersect(&t).contains(&[int(1), int(1), int(0)]));
        assert_eq!(s.sum(&t).dim(), 3);
        let c = solve_combination(&[vec![int(1), int(1)], vec![int(1), int(-1)]], &[int(3), int(1)]).unwrap();
        assert_eq!(c, vec![int(2), int(1)]);
        assert!(solve_combination(&[vec![int(1), int(1)]], &[int(1), int(0)]).is_none());
    }
}
