//! Polynomial matrices with a public degree bound, stored in the dual view
//! as a polynomial A_0 + A_1 X + ... + A_d X^d with matrix coefficients.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::extfield::{ExtField, ExtFieldElement};
use super::field::{Fp, PrimeField};
use super::matrix::Matrix;
use super::poly::Polynomial;
use super::ring::{expect_words, FiniteRing, RingElement};
use super::series::TruncSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatShape {
    pub field: PrimeField,
    pub n: usize,
    pub d: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    field: PrimeField,
    n: usize,
    coeffs: Vec<Matrix<Fp>>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix(d<={}) {:?}", self.d_bound(), self.to_entry_matrix())
    }
}

impl PolyMatrix {
    /// Builds from coefficient matrices A_0..A_d; the degree bound is d.
    pub fn from_coeff_matrices(coeffs: Vec<Matrix<Fp>>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::domain("at least one coefficient matrix is required"))?;
        let (field, n) = (first.base_field(), first.dim());
        if coeffs.iter().any(|c| c.dim() != n) {
            return Err(Error::domain("coefficient matrices differ in dimension"));
        }
        Ok(PolyMatrix { field, n, coeffs })
    }

    /// Builds from n×n polynomial entries, checking each degree against `d_bound`.
    pub fn from_entries(n: usize, d_bound: usize, entries: &[Polynomial]) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::domain(format!("expected {} polynomial entries", n * n)));
        }
        let field = entries[0].field();
        for (k, e) in entries.iter().enumerate() {
            if e.degree() > d_bound as isize {
                return Err(Error::domain(format!(
                    "entry ({}, {}) has degree {} above the bound {d_bound}",
                    k / n,
                    k % n,
                    e.degree()
                )));
            }
        }
        let coeffs = (0..=d_bound).map(|t| Matrix::from_fn(n, |i, j| entries[i * n + j].coeff(t))).collect();
        Ok(PolyMatrix { field, n, coeffs })
    }

    pub fn from_entry_matrix(m: &Matrix<Polynomial>, d_bound: usize) -> Result<Self> {
        Self::from_entries(m.dim(), d_bound, m.entries())
    }

    pub fn constant(m: &Matrix<Fp>) -> Self {
        PolyMatrix { field: m.base_field(), n: m.dim(), coeffs: vec![m.clone()] }
    }

    pub fn zero(field: PrimeField, n: usize, d: usize) -> Self {
        let z = Matrix::filled(n, &field.zero());
        PolyMatrix { field, n, coeffs: vec![z; d + 1] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::constant(&Matrix::identity(field, n))
    }

    /// X·I_n.
    pub fn scalar_x(field: PrimeField, n: usize) -> Self {
        let mut z = Self::zero(field, n, 1);
        z.coeffs[1] = Matrix::identity(field, n);
        z
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn d_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff_matrices(&self) -> &[Matrix<Fp>] {
        &self.coeffs
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|c| *c.get(i, j)).collect())
    }

    pub fn to_entry_matrix(&self) -> Matrix<Polynomial> {
        Matrix::from_fn(self.n, |i, j| self.entry(i, j))
    }

    /// Largest actual entry degree (-1 for the zero matrix).
    pub fn actual_degree(&self) -> isize {
        (0..self.coeffs.len()).rev().find(|&t| !self.coeffs[t].is_zero()).map_or(-1, |t| t as isize)
    }

    /// Same value with a different degree bound; fails if that would drop
    /// nonzero coefficients.
    pub fn with_bound(&self, d: usize) -> Result<Self> {
        if self.actual_degree() > d as isize {
            return Err(Error::domain(format!("degree {} exceeds bound {d}", self.actual_degree())));
        }
        Ok(self.resized(d))
    }

    /// Pads with zero blocks or drops blocks above degree `d`.
    pub fn resized(&self, d: usize) -> Self {
        let zero = Matrix::filled(self.n, &self.field.zero());
        let coeffs = (0..=d).map(|t| self.coeffs.get(t).cloned().unwrap_or_else(|| zero.clone())).collect();
        PolyMatrix { field: self.field, n: self.n, coeffs }
    }

    /// Entry-wise Horner evaluation, Σ A_j α^j.
    pub fn eval(&self, alpha: Fp) -> Matrix<Fp> {
        let mut acc = self.coeffs[self.coeffs.len() - 1].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.scale(alpha).add(c);
        }
        acc
    }

    /// Multiplication by X^k.
    pub fn shift(&self, k: usize) -> Self {
        let zero = Matrix::filled(self.n, &self.field.zero());
        let mut coeffs = vec![zero; k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyMatrix { field: self.field, n: self.n, coeffs }
    }

    /// Reduction modulo X^m into M_n(K[[X]]/X^m).
    pub fn to_series_matrix(&self, m: usize) -> Matrix<TruncSeries> {
        Matrix::from_fn(self.n, |i, j| TruncSeries::from_polynomial(&self.entry(i, j), m))
    }

    pub fn from_series_matrix(m: &Matrix<TruncSeries>) -> Self {
        let len = m.get(0, 0).len();
        let coeffs = (0..len).map(|t| m.map(|s| s.coeffs()[t])).collect();
        PolyMatrix { field: m.base_field(), n: m.dim(), coeffs }
    }

    /// Reduction modulo the extension modulus.
    pub fn to_ext_matrix(&self, ext: &Arc<ExtField>) -> Result<Matrix<ExtFieldElement>> {
        let entries = (0..self.n * self.n)
            .map(|k| ext.element(&self.entry(k / self.n, k % self.n)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.n, entries)
    }

    /// Inverse of [`to_ext_matrix`](Self::to_ext_matrix): lifts residues of
    /// degree < deg f to a polynomial matrix with bound deg f − 1.
    pub fn from_ext_matrix(m: &Matrix<ExtFieldElement>) -> Self {
        let ext = m.get(0, 0).ext();
        let entries: Vec<Polynomial> = m.entries().iter().map(|e| e.residue().clone()).collect();
        Self::from_entries(m.dim(), ext.degree() - 1, &entries).expect("residues are reduced")
    }
}

impl RingElement for PolyMatrix {
    fn base_field(&self) -> PrimeField {
        self.field
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.field, self.n, self.d_bound())
    }
    fn one_like(&self) -> Self {
        Self::identity(self.field, self.n)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        let d = self.d_bound().max(rhs.d_bound());
        let (a, b) = (self.resized(d), rhs.resized(d));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect();
        PolyMatrix { field: self.field, n: self.n, coeffs }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn neg(&self) -> Self {
        PolyMatrix { field: self.field, n: self.n, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    /// Degree bound of the product is the sum of the bounds.
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        let d = self.d_bound() + rhs.d_bound();
        let mut coeffs: Vec<Option<Matrix<Fp>>> = vec![None; d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let p = a.mul(b);
                coeffs[i + j] = Some(match coeffs[i + j].take() {
                    Some(acc) => acc.add(&p),
                    None => p,
                });
            }
        }
        let zero = Matrix::filled(self.n, &self.field.zero());
        PolyMatrix {
            field: self.field,
            n: self.n,
            coeffs: coeffs.into_iter().map(|c| c.unwrap_or_else(|| zero.clone())).collect(),
        }
    }
    fn scale(&self, c: Fp) -> Self {
        PolyMatrix { field: self.field, n: self.n, coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect() }
    }
}

impl FiniteRing for PolyMatrix {
    type Shape = PolyMatShape;

    fn shape(&self) -> PolyMatShape {
        PolyMatShape { field: self.field, n: self.n, d: self.d_bound() }
    }
    fn zero_of(shape: &PolyMatShape) -> Self {
        Self::zero(shape.field, shape.n, shape.d)
    }
    fn random<R: Rng + ?Sized>(shape: &PolyMatShape, rng: &mut R) -> Self {
        let coeffs = (0..=shape.d).map(|_| Matrix::from_fn(shape.n, |_, _| shape.field.random(rng))).collect();
        PolyMatrix { field: shape.field, n: shape.n, coeffs }
    }
    fn field_of(shape: &PolyMatShape) -> PrimeField {
        shape.field
    }
    fn word_count(shape: &PolyMatShape) -> usize {
        shape.n * shape.n * (shape.d + 1)
    }
    fn to_words(&self) -> Vec<u64> {
        self.coeffs.iter().flat_map(|c| c.entries().iter().map(|e| e.value())).collect()
    }
    fn from_words(shape: &PolyMatShape, words: &[u64]) -> Result<Self> {
        expect_words(words, Self::word_count(shape))?;
        let nn = shape.n * shape.n;
        let coeffs = words
            .chunks(nn)
            .map(|c| {
                let entries = c.iter().map(|&w| shape.field.try_elem(w)).collect::<Result<Vec<_>>>()?;
                Matrix::new(shape.n, entries)
            })
            .collect::<Result<_>>()?;
        Ok(PolyMatrix { field: shape.field, n: shape.n, coeffs })
    }
}
