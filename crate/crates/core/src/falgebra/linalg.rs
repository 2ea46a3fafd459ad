//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<Fe>`. Matrices are row-major and act on column
//! vectors: `apply(v)[i] = sum_j m[i][j] v[j]`.

use super::field::{Fe, Field};

pub type Vector = Vec<Fe>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Fe::ZERO; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Fe::ONE;
    v
}

pub fn is_zero(v: &[Fe]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `y += c * x`
pub fn axpy(f: &Field, y: &mut [Fe], c: Fe, x: &[Fe]) {
    if c.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(c, xi));
        }
    }
}

pub fn add(f: &Field, a: &[Fe], b: &[Fe]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn sub(f: &Field, a: &[Fe], b: &[Fe]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn scale(f: &Field, c: Fe, a: &[Fe]) -> Vector {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

pub fn dot(f: &Field, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Fe::ONE);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Fe) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn apply(&self, f: &Field, v: &[Fe]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(f, self.row(i), v)).collect()
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let (src, dst) = (other.row(k), i);
                let row = &mut out.data[dst * other.cols..(dst + 1) * other.cols];
                axpy(f, row, a, src);
            }
        }
        out
    }

    pub fn sub(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: sub(f, &self.data, &other.data) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for x in self.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row: Vector = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let factor = self.get(i, c);
                    if !factor.is_zero() {
                        axpy(f, self.row_mut(i), f.neg(factor), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel(&self, f: &Field) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.cols);
            v[free] = Fe::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{w : w M = 0}`.
    pub fn left_kernel(&self, f: &Field) -> Vec<Vector> {
        self.transpose().kernel(f)
    }

    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fe::ONE);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(f: &Field, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Fe]>,
    {
        let rows: Vec<Vector> = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(ambient, &rows);
        let pivots = m.rref(f);
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Kernel of a linear map given as a matrix with `ambient` columns.
    pub fn kernel_of(f: &Field, m: &Matrix) -> Self {
        Subspace::span(f, m.cols(), m.kernel(f))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Residue of `v` after eliminating against the basis pivots.
    pub fn reduce(&self, f: &Field, v: &[Fe]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                axpy(f, &mut r, f.neg(c), b);
            }
        }
        r
    }

    pub fn contains(&self, f: &Field, v: &[Fe]) -> bool {
        is_zero(&self.reduce(f, v))
    }

    /// Coordinates of `v` in the echelon basis. Only meaningful when `v` lies
    /// in the subspace.
    pub fn coordinates(&self, v: &[Fe]) -> Vector {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    pub fn combine(&self, f: &Field, coords: &[Fe]) -> Vector {
        let mut out = zero_vec(self.ambient);
        for (b, &c) in self.basis.iter().zip(coords) {
            axpy(f, &mut out, c, b);
        }
        out
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(f, b))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        Subspace::span(f, self.ambient, self.basis.iter().chain(&other.basis))
    }

    /// Intersection via the Zassenhaus block elimination.
    pub fn intersection(&self, f: &Field, other: &Subspace) -> Subspace {
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(n);
        }
        let mut rows = Vec::new();
        for b in &self.basis {
            let mut r = b.clone();
            r.extend_from_slice(b);
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(Fe::ZERO, n));
            rows.push(r);
        }
        let mut m = Matrix::from_rows(2 * n, &rows);
        let pivots = m.rref(f);
        let inter = pivots.iter().enumerate().filter(|(_, &p)| p >= n).map(|(r, _)| m.row(r)[n..].to_vec());
        Subspace::span(f, n, inter)
    }

    /// Vectors from `candidates` that extend this subspace's basis, chosen
    /// greedily in order.
    pub fn extend_with(&self, f: &Field, candidates: &[Vector]) -> Vec<Vector> {
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for c in candidates {
            if !acc.contains(f, c) {
                chosen.push(c.clone());
                acc = acc.sum(f, &Subspace::span(f, self.ambient, [c]));
            }
        }
        chosen
    }
}

/// Coordinates with respect to an arbitrary (not echelon) basis of a subspace.
///
/// Picks pivot columns of the basis and inverts the square restriction, so
/// that `coords(v) = v[pivots] * inv`.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    pivots: Vec<usize>,
    inverse: Matrix,
    basis: Vec<Vector>,
}

impl CoordinateMap {
    /// `basis` must be linearly independent.
    pub fn new(f: &Field, ambient: usize, basis: Vec<Vector>) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(CoordinateMap { pivots: Vec::new(), inverse: Matrix::zeros(0, 0), basis });
        }
        let m = Matrix::from_rows(ambient, &basis);
        let pivots = m.clone().rref(f);
        if pivots.len() != k {
            return None;
        }
        let mut sq = Matrix::zeros(k, k);
        for i in 0..k {
            for (j, &p) in pivots.iter().enumerate() {
                sq.set(i, j, m.get(i, p));
            }
        }
        let inverse = sq.inverse(f)?;
        Some(CoordinateMap { pivots, inverse, basis })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords(&self, f: &Field, v: &[Fe]) -> Vector {
        let k = self.basis.len();
        let restricted: Vector = self.pivots.iter().map(|&p| v[p]).collect();
        (0..k)
            .map(|j| (0..k).fold(Fe::ZERO, |acc, i| f.add(acc, f.mul(restricted[i], self.inverse.get(i, j)))))
            .collect()
    }

    pub fn combine(&self, f: &Field, coords: &[Fe]) -> Vector {
        let n = self.basis.first().map_or(0, |b| b.len());
        let mut out = zero_vec(n);
        for (b, &c) in self.basis.iter().zip(coords) {
            axpy(f, &mut out, c, b);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn kernel_and_rank() {
        let f = Field::new(3, 1).unwrap();
        let m = Matrix::from_rows(3, &[v(&f, &[1, 2, 0]), v(&f, &[2, 1, 0])]);
        assert_eq!(m.rank(&f), 1);
        let k = m.kernel(&f);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(is_zero(&m.apply(&f, x)));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(5, 1).unwrap();
        let m = Matrix::from_rows(2, &[v(&f, &[1, 2]), v(&f, &[3, 4])]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(2));
        let sing = Matrix::from_rows(2, &[v(&f, &[1, 2]), v(&f, &[2, 4])]);
        assert!(sing.inverse(&f).is_none());
    }

    #[test]
    fn intersection_and_sum() {
        let f = Field::new(2, 1).unwrap();
        let a = Subspace::span(&f, 3, [v(&f, &[1, 0, 0]), v(&f, &[0, 1, 0])]);
        let b = Subspace::span(&f, 3, [v(&f, &[0, 1, 0]), v(&f, &[0, 0, 1])]);
        let i = a.intersection(&f, &b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&f, &v(&f, &[0, 1, 0])));
        assert_eq!(a.sum(&f, &b).dim(), 3);
    }

    #[test]
    fn coordinate_map_recovers_coefficients() {
        let f = Field::new(3, 2).unwrap();
        let basis = vec![v(&f, &[1, 1, 0, 2]), v(&f, &[0, 1, 1, 1])];
        let cm = CoordinateMap::new(&f, 4, basis).unwrap();
        let c = vec![f.element(5), f.element(7)];
        let x = cm.combine(&f, &c);
        assert_eq!(cm.coords(&f, &x), c);
    }
}
