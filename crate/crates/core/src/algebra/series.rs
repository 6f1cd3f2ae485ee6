//! Power series truncated modulo X^m.

use std::fmt;

use rand::Rng;

use super::field::{Fp, PrimeField};
use super::poly::{mul_coeffs, Polynomial, KARATSUBA_CROSSOVER};
use super::ring::{expect_words, CommutativeRing, FiniteRing, RingElement, UnitRing};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesShape {
    pub field: PrimeField,
    pub m: usize,
}

/// Element of K[[X]]/X^m, stored as exactly m coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    field: PrimeField,
    coeffs: Vec<Fp>,
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod X^{}", self.to_polynomial(), self.coeffs.len())
    }
}

impl TruncSeries {
    pub fn new(field: PrimeField, coeffs: Vec<Fp>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("series length must be positive"));
        }
        Ok(TruncSeries { field, coeffs })
    }

    pub fn from_u64(field: PrimeField, coeffs: &[u64]) -> Result<Self> {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn zero(field: PrimeField, m: usize) -> Self {
        assert!(m > 0, "series length must be positive");
        TruncSeries { field, coeffs: vec![field.zero(); m] }
    }

    pub fn one(field: PrimeField, m: usize) -> Self {
        Self::constant(field.one(), m)
    }

    pub fn constant(c: Fp, m: usize) -> Self {
        let mut s = Self::zero(c.field(), m);
        s.coeffs[0] = c;
        s
    }

    /// Reduction of a polynomial modulo X^m.
    pub fn from_polynomial(p: &Polynomial, m: usize) -> Self {
        assert!(m > 0, "series length must be positive");
        TruncSeries { field: p.field(), coeffs: p.padded(m) }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.clone())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    pub fn coeff_values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn constant_term(&self) -> Fp {
        self.coeffs[0]
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "series lengths differ");
    }

    /// Inverse by Newton iteration g <- g·(2 − a·g), doubling precision.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::domain("series with zero constant term is not invertible"));
        }
        let m = self.coeffs.len();
        let mut g = vec![c0.inv()?];
        let mut prec = 1;
        while prec < m {
            prec = (2 * prec).min(m);
            let ag = truncated_mul(&self.coeffs[..prec], &g, prec);
            let mut two_minus: Vec<Fp> = ag.iter().map(|&c| -c).collect();
            two_minus[0] += self.field.elem(2);
            g = truncated_mul(&g, &two_minus, prec);
        }
        Ok(TruncSeries { field: self.field, coeffs: g })
    }
}

fn truncated_mul(a: &[Fp], b: &[Fp], m: usize) -> Vec<Fp> {
    let field = a[0].field();
    if a.len().min(b.len()) > KARATSUBA_CROSSOVER {
        let mut full = mul_coeffs(a, b);
        full.resize(m, field.zero());
        return full;
    }
    let mut out = vec![field.zero(); m];
    for (i, &x) in a.iter().enumerate().take(m) {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(m - i) {
            out[i + j] += x * y;
        }
    }
    out
}

impl RingElement for TruncSeries {
    fn base_field(&self) -> PrimeField {
        self.field
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.field, self.coeffs.len())
    }
    fn one_like(&self) -> Self {
        Self::one(self.field, self.coeffs.len())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a + b).collect();
        TruncSeries { field: self.field, coeffs }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a - b).collect();
        TruncSeries { field: self.field, coeffs }
    }
    fn neg(&self) -> Self {
        TruncSeries { field: self.field, coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let m = self.coeffs.len();
        TruncSeries { field: self.field, coeffs: truncated_mul(&self.coeffs, &rhs.coeffs, m) }
    }
    fn scale(&self, c: Fp) -> Self {
        TruncSeries { field: self.field, coeffs: self.coeffs.iter().map(|&x| x * c).collect() }
    }
}

impl CommutativeRing for TruncSeries {}

impl UnitRing for TruncSeries {
    fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl FiniteRing for TruncSeries {
    type Shape = SeriesShape;

    fn shape(&self) -> SeriesShape {
        SeriesShape { field: self.field, m: self.coeffs.len() }
    }
    fn zero_of(shape: &SeriesShape) -> Self {
        Self::zero(shape.field, shape.m)
    }
    fn random<R: Rng + ?Sized>(shape: &SeriesShape, rng: &mut R) -> Self {
        TruncSeries { field: shape.field, coeffs: (0..shape.m).map(|_| shape.field.random(rng)).collect() }
    }
    fn field_of(shape: &SeriesShape) -> PrimeField {
        shape.field
    }
    fn word_count(shape: &SeriesShape) -> usize {
        shape.m
    }
    fn to_words(&self) -> Vec<u64> {
        self.coeff_values()
    }
    fn from_words(shape: &SeriesShape, words: &[u64]) -> Result<Self> {
        expect_words(words, shape.m)?;
        let coeffs = words.iter().map(|&w| shape.field.try_elem(w)).collect::<Result<_>>()?;
        Ok(TruncSeries { field: shape.field, coeffs })
    }
}
