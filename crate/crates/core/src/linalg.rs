//! Dense exact linear algebra over Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use crate::univariate::UniPoly;

type G = GaussianRational;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![G::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, G::one())
    }

    pub fn scalar(n: usize, c: G) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diag(values: &[G]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Malformed("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| G::from_int(v)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Matrix whose columns are `cols` (all of equal length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<G>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &G {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: G) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[G] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<G> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<G>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the matrix is `c·Id`.
    pub fn as_scalar(&self) -> Option<G> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { G::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &c } else { &G::zero() };
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn trace(&self) -> G {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &G) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ArityMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[G]) -> Vec<G> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = G::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let t = m.get(r, j);
                        if !t.is_zero() {
                            let v = m.get(i, j) - &(&f * t);
                            m.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<G>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![G::zero(); self.cols];
                v[f] = G::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Malformed("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, G::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> G {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = self.rows;
        let mut det = G::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return G::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(T·Id - A)` by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![G::zero(); n + 1];
        coeffs[n] = G::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self * &m;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = -(am.trace() * G::ratio(1, k as i64));
        }
        UniPoly::new(coeffs)
    }

    /// Minimal polynomial, monic.
    pub fn min_poly(&self) -> UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut span = Span::new(n * n);
        let mut powers: Vec<Vec<G>> = Vec::new();
        let mut p = Self::identity(n);
        loop {
            let v = p.data.clone();
            if let Some(combo) = span.express(&v) {
                // A^k = Σ combo_j A^j  =>  T^k - Σ combo_j T^j
                let k = powers.len();
                let mut coeffs: Vec<G> = combo.iter().map(|c| -c).collect();
                coeffs.resize(k, G::zero());
                coeffs.push(G::one());
                return UniPoly::new(coeffs);
            }
            span.insert(&v);
            powers.push(v);
            p = &p * self;
        }
    }

    /// Evaluates a univariate polynomial at this matrix.
    pub fn eval_poly(&self, p: &UniPoly) -> Self {
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Rows of the submatrix `rows × cols`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Neg for &'a Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// A subspace of `Q(i)^len` kept as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Span {
    len: usize,
    /// `(pivot, row)` with `row[pivot] = 1` and every other row zero at `pivot`.
    rows: Vec<(usize, Vec<G>)>,
    /// Original vectors, parallel to `rows`, for reporting spanning sets.
    originals: Vec<Vec<G>>,
    /// Coordinates of each echelon row in terms of `originals`.
    coords: Vec<Vec<G>>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Span {
            len,
            rows: Vec::new(),
            originals: Vec::new(),
            coords: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// The inserted vectors that were independent, in insertion order.
    pub fn basis(&self) -> &[Vec<G>] {
        &self.originals
    }

    /// Echelon rows (a basis of the same space).
    pub fn echelon(&self) -> impl Iterator<Item = &Vec<G>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Residual of `v` and its expansion coefficients in echelon rows.
    fn reduce(&self, v: &[G]) -> (Vec<G>, Vec<G>) {
        let mut r = v.to_vec();
        let mut c = vec![G::zero(); self.rows.len()];
        for (k, (p, row)) in self.rows.iter().enumerate() {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            c[k] = f;
        }
        (r, c)
    }

    pub fn contains(&self, v: &[G]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Coefficients expressing `v` in [`Span::basis`], if `v` lies in the span.
    pub fn express(&self, v: &[G]) -> Option<Vec<G>> {
        let (r, c) = self.reduce(v);
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        let mut out = vec![G::zero(); self.originals.len()];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&self.coords[k]) {
                if !x.is_zero() {
                    *o += &(ck * x);
                }
            }
        }
        Some(out)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[G]) -> bool {
        assert_eq!(v.len(), self.len);
        let (mut r, c) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let idx = self.originals.len();
        // new row = (v - Σ c_k row_k) * inv, in original coordinates
        let mut coord = vec![G::zero(); idx + 1];
        coord[idx] = inv.clone();
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let f = ck * &inv;
            for (o, x) in coord.iter_mut().zip(&self.coords[k]) {
                if !x.is_zero() {
                    *o -= &(&f * x);
                }
            }
        }
        for co in self.coords.iter_mut() {
            co.push(G::zero());
        }
        // keep the basis fully reduced at the new pivot
        for k in 0..self.rows.len() {
            let f = self.rows[k].1[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in self.rows[k].1.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in self.coords[k].iter_mut().zip(&coord) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push((p, r));
        self.coords.push(coord);
        self.originals.push(v.to_vec());
        true
    }
}

/// Basis of the intersection of the kernels of `maps` (each `rows × n`).
pub fn common_kernel(maps: &[Matrix], n: usize) -> Vec<Vec<G>> {
    let total: usize = maps.iter().map(Matrix::rows).sum();
    let mut stacked = Matrix::zeros(total, n);
    let mut r = 0;
    for m in maps {
        assert_eq!(m.cols(), n);
        for i in 0..m.rows() {
            for j in 0..n {
                stacked.set(r, j, m.get(i, j).clone());
            }
            r += 1;
        }
    }
    stacked.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.det(), G::from_int(1));
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn nullspace_rank() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        for v in m.nullspace() {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
        assert_eq!(m.nullspace().len(), 2);
    }

    #[test]
    fn characteristic_and_minimal() {
        let m = Matrix::from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let cp = m.char_poly();
        assert_eq!(cp.eval(&G::from_int(2)), G::zero());
        assert_eq!(cp.degree(), Some(3));
        let mp = m.min_poly();
        assert_eq!(mp.degree(), Some(2));
        assert!(m.eval_poly(&mp).is_zero());
        assert!(m.eval_poly(&cp).is_zero());
    }

    #[test]
    fn span_expresses_in_original_basis() {
        let mut s = Span::new(3);
        let a = vec![G::from_int(1), G::from_int(1), G::from_int(0)];
        let b = vec![G::from_int(0), G::from_int(1), G::from_int(1)];
        assert!(s.insert(&a));
        assert!(s.insert(&b));
        let target: Vec<G> = a.iter().zip(&b).map(|(x, y)| &(x * &G::from_int(2)) - &(y * &G::from_int(3))).collect();
        assert!(!s.insert(&target));
        assert_eq!(s.express(&target).unwrap(), vec![G::from_int(2), G::from_int(-3)]);
        assert!(s.express(&[G::from_int(1), G::zero(), G::zero()]).is_none());
    }

    #[test]
    fn kron_dims() {
        let a = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&Matrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(&k * &k, Matrix::identity(4));
    }
}
