use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix.
///
/// Matrices act on column vectors. For maps on a tensor square, column
/// `i*d + j` is the image of `e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Product skipping zero entries of the left factor; the structure maps
    /// handled here are mostly permutation-like, so this is much faster than
    /// the naive triple loop.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
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
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|p| (p / self.cols, p % self.cols))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Drops row `r`.
    pub fn remove_row(&self, r: usize) -> Self {
        let rows = self.to_rows().into_iter().enumerate().filter(|(i, _)| *i != r).map(|(_, x)| x);
        Matrix { rows: self.rows - 1, cols: self.cols, data: rows.flatten().collect() }
    }
}

impl<S: Field> Matrix<S> {
    /// Reduced row echelon form together with the pivot columns.
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
            let inv = S::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(Error::NotInvertible { rank, size: n });
        }
        Ok(Self::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }

    /// Solves `self * x = b`, if a solution exists.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant by cofactor expansion; only sensible for small matrices.
    pub fn cofactor_determinant(&self) -> S {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut det = S::zero();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let minor = Self::from_fn(n - 1, n - 1, |r, c| {
                self.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = a.clone() * minor.cofactor_determinant();
            det = if j % 2 == 0 { det + term } else { det - term };
        }
        det
    }
}

/// Kronecker product, left factor major:
/// `(A⊗B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l]`.
pub fn kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let (rb, cb) = (b.rows, b.cols);
    let mut out = Matrix::zeros(a.rows * rb, a.cols * cb);
    let width = out.cols;
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.data[(i * rb + k) * width + j * cb + l] = x.clone() * y.clone();
                    }
                }
            }
        }
    }
    out
}

/// The permutation `e_i ⊗ e_j ↦ e_j ⊗ e_i` on a `d`-dimensional tensor square.
pub fn flip_matrix<S: Scalar>(d: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            m.set(j * d + i, i * d + j, S::one());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    fn c3() -> Matrix<Rational> {
        m(&[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn kron_of_identities() {
        let i2 = Matrix::<Rational>::identity(2);
        assert_eq!(kron(&i2, &i2), Matrix::identity(4));
    }

    #[test]
    fn flip_on_three_factors() {
        let t = kron(&flip_matrix::<Rational>(2), &Matrix::identity(2));
        // e2⊗e1⊗e1 has flat index 4, e1⊗e2⊗e1 has index 2.
        let mut v = vec![rat(0); 8];
        v[4] = rat(1);
        let w = t.apply(&v).unwrap();
        assert_eq!(w.iter().position(|x| *x == rat(1)), Some(2));
    }

    #[test]
    fn kron_matches_entrywise_loop() {
        let a = c3();
        let b = Matrix::<Rational>::identity(2);
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 8));
        for i in 0..4 {
            for j in 0..4 {
                for p in 0..2 {
                    for q in 0..2 {
                        let expect = a.get(i, j).clone() * b.get(p, q).clone();
                        assert_eq!(k.get(i * 2 + p, j * 2 + q), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn flip_basics() {
        assert_eq!(flip_matrix::<Rational>(1), Matrix::identity(1));
        let f = flip_matrix::<Rational>(2);
        assert_eq!(f, m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
        for d in 2..=3 {
            let f = flip_matrix::<Rational>(d);
            assert_eq!(f.mul(&f).unwrap(), Matrix::identity(d * d));
        }
    }

    #[test]
    fn inverse_of_flip_and_singular_witness() {
        let f = flip_matrix::<Rational>(2);
        assert_eq!(f.invert().unwrap(), f);
        assert_eq!(Matrix::<Rational>::identity(4).invert().unwrap(), Matrix::identity(4));
        let mut single = Matrix::<Rational>::zeros(4, 4);
        single.set(0, 2, rat(1));
        assert_eq!(single.invert(), Err(Error::NotInvertible { rank: 1, size: 4 }));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(a.solve(&[rat(1), rat(3)]).is_none());
        let x = a.solve(&[rat(2), rat(4)]).unwrap();
        assert_eq!(a.apply(&x).unwrap(), vec![rat(2), rat(4)]);
    }

    #[test]
    fn generic_over_floats() {
        let a = Matrix::<f64>::from_rows(vec![vec![2.0, 0.0], vec![0.0, 4.0]]).unwrap();
        let inv = a.invert().unwrap();
        assert_eq!(inv.get(1, 1), &0.25);
        assert_eq!(a.rank(), 2);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-2i64..=2, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(rat).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
            prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        }

        #[test]
        fn inverse_or_zero_determinant(n in 1usize..=4, seed in proptest::collection::vec(-2i64..=2, 16)) {
            let a = Matrix::new(n, n, seed[..n * n].iter().map(|&x| rat(x)).collect()).unwrap();
            match a.invert() {
                Ok(inv) => prop_assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(n)),
                Err(Error::NotInvertible { rank, .. }) => {
                    prop_assert!(rank < n);
                    prop_assert_eq!(a.cofactor_determinant(), rat(0));
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
