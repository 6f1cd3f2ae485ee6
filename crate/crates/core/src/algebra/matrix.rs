//! Dense square matrices over any [`RingElement`].

use std::fmt;

use rand::Rng;

use super::field::{Fp, PrimeField};
use super::ring::{expect_words, FiniteRing, RingElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixShape<S> {
    pub n: usize,
    pub inner: S,
}

/// Row-major n×n matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.entries.chunks(self.n).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<T: RingElement> Matrix<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("matrix dimension must be positive"));
        }
        if entries.len() != n * n {
            return Err(Error::domain(format!("expected {} entries, found {}", n * n, entries.len())));
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix rows must form a square"));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// All entries equal to `zero`.
    pub fn filled(n: usize, zero: &T) -> Self {
        Self::from_fn(n, |_, _| zero.clone())
    }

    pub fn identity_like(n: usize, template: &T) -> Self {
        let (zero, one) = (template.zero_like(), template.one_like());
        Self::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[T]) -> Self {
        let zero = diag[0].zero_like();
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i].clone() } else { zero.clone() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn map<U: RingElement>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Leading principal k×k submatrix.
    pub fn leading(&self, k: usize) -> Self {
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// Matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.n - 1;
        Self::from_fn(n, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                let mut acc = self.get(i, 0).mul(&v[0]);
                for (j, vj) in v.iter().enumerate().skip(1) {
                    acc = acc.add(&self.get(i, j).mul(vj));
                }
                acc
            })
            .collect()
    }

    /// Entry-wise left multiplication by a ring scalar.
    pub fn scale_by(&self, c: &T) -> Self {
        self.map(|x| c.mul(x))
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Matrix { n: self.n, entries }
    }
}

impl Matrix<Fp> {
    pub fn from_u64(field: PrimeField, rows: &[&[u64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| field.elem(v)).collect()).collect())
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::identity_like(n, &field.zero())
    }

    pub fn values(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(|r| r.iter().map(|c| c.value()).collect()).collect()
    }
}

impl<T: RingElement> RingElement for Matrix<T> {
    fn base_field(&self) -> PrimeField {
        self.entries[0].base_field()
    }
    fn zero_like(&self) -> Self {
        Self::filled(self.n, &self.entries[0].zero_like())
    }
    fn one_like(&self) -> Self {
        Self::identity_like(self.n, &self.entries[0])
    }
    fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a.sub(b))
    }
    fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = self.get(i, 0).mul(rhs.get(0, j));
            for k in 1..n {
                acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
            }
            acc
        })
    }
    fn scale(&self, c: Fp) -> Self {
        self.map(|a| a.scale(c))
    }
}

impl<T: FiniteRing> FiniteRing for Matrix<T> {
    type Shape = MatrixShape<T::Shape>;

    fn shape(&self) -> Self::Shape {
        MatrixShape { n: self.n, inner: self.entries[0].shape() }
    }
    fn zero_of(shape: &Self::Shape) -> Self {
        Self::filled(shape.n, &T::zero_of(&shape.inner))
    }
    fn random<R: Rng + ?Sized>(shape: &Self::Shape, rng: &mut R) -> Self {
        Self::from_fn(shape.n, |_, _| T::random(&shape.inner, rng))
    }
    fn field_of(shape: &Self::Shape) -> PrimeField {
        T::field_of(&shape.inner)
    }
    fn word_count(shape: &Self::Shape) -> usize {
        shape.n * shape.n * T::word_count(&shape.inner)
    }
    fn to_words(&self) -> Vec<u64> {
        self.entries.iter().flat_map(|e| e.to_words()).collect()
    }
    fn from_words(shape: &Self::Shape, words: &[u64]) -> Result<Self> {
        expect_words(words, Self::word_count(shape))?;
        let w = T::word_count(&shape.inner);
        let entries = words.chunks(w).map(|c| T::from_words(&shape.inner, c)).collect::<Result<_>>()?;
        Self::new(shape.n, entries)
    }
}
