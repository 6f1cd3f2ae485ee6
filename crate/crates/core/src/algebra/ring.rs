//! Ring abstractions shared by the plain algebra and the MPC layers.

use std::fmt::Debug;

use rand::Rng;

use super::field::{Fp, PrimeField};
use crate::error::Result;

/// A (not necessarily commutative) GF(q)-algebra element whose shape is
/// carried by the value itself.
///
/// Graded types such as [`PolyMatrix`](super::PolyMatrix) combine operands
/// of different degree bounds by taking the larger bound for sums and the
/// sum of bounds for products.
pub trait RingElement: Clone + PartialEq + Debug {
    fn base_field(&self) -> PrimeField;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Action of a GF(q) scalar.
    fn scale(&self, c: Fp) -> Self;
}

/// Marker for commutative rings; required by division-free determinants and
/// Lagrange combinations with ring-valued nodes.
pub trait CommutativeRing: RingElement {}

/// Commutative ring where units can be recognised and inverted locally.
pub trait UnitRing: CommutativeRing {
    fn is_unit(&self) -> bool;
    fn try_inverse(&self) -> Option<Self>;
}

/// A unit ring in which every nonzero element is a unit.
pub trait FieldLike: UnitRing {}

/// A finite ring whose elements flatten to a fixed number of GF(q) words.
/// Everything that can be secret-shared implements this.
pub trait FiniteRing: RingElement {
    type Shape: Clone + Debug + PartialEq;

    fn shape(&self) -> Self::Shape;
    fn zero_of(shape: &Self::Shape) -> Self;
    fn random<R: Rng + ?Sized>(shape: &Self::Shape, rng: &mut R) -> Self;
    fn field_of(shape: &Self::Shape) -> PrimeField;
    fn word_count(shape: &Self::Shape) -> usize;
    fn to_words(&self) -> Vec<u64>;
    fn from_words(shape: &Self::Shape, words: &[u64]) -> Result<Self>;
}

impl RingElement for Fp {
    fn base_field(&self) -> PrimeField {
        self.field()
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero(&self) -> bool {
        Fp::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn scale(&self, c: Fp) -> Self {
        *self * c
    }
}

impl CommutativeRing for Fp {}

impl UnitRing for Fp {
    fn is_unit(&self) -> bool {
        !Fp::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl FieldLike for Fp {}

impl FiniteRing for Fp {
    type Shape = PrimeField;

    fn shape(&self) -> PrimeField {
        self.field()
    }
    fn zero_of(shape: &PrimeField) -> Self {
        shape.zero()
    }
    fn random<R: Rng + ?Sized>(shape: &PrimeField, rng: &mut R) -> Self {
        shape.random(rng)
    }
    fn field_of(shape: &PrimeField) -> PrimeField {
        *shape
    }
    fn word_count(_: &PrimeField) -> usize {
        1
    }
    fn to_words(&self) -> Vec<u64> {
        vec![self.value()]
    }
    fn from_words(shape: &PrimeField, words: &[u64]) -> Result<Self> {
        expect_words(words, 1)?;
        shape.try_elem(words[0])
    }
}

pub(crate) fn expect_words(words: &[u64], n: usize) -> Result<()> {
    if words.len() != n {
        return Err(crate::error::Error::domain(format!(
            "expected {n} words, found {}",
            words.len()
        )));
    }
    Ok(())
}
