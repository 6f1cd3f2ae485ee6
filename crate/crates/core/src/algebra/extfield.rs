//! The field K[X]/f for a public monic irreducible f.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::field::{Fp, PrimeField};
use super::irreducible::is_irreducible;
use super::poly::Polynomial;
use super::ring::{expect_words, CommutativeRing, FieldLike, FiniteRing, RingElement, UnitRing};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    modulus: Polynomial,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[X]/({:?})", self.modulus)
    }
}

impl ExtField {
    /// Checks that `modulus` is monic and irreducible.
    pub fn new(modulus: Polynomial) -> Result<Arc<Self>> {
        if !modulus.is_monic() || modulus.degree() < 1 {
            return Err(Error::domain("extension modulus must be monic of positive degree"));
        }
        if !is_irreducible(&modulus) {
            return Err(Error::domain(format!("{modulus:?} is not irreducible")));
        }
        Ok(Arc::new(ExtField { modulus }))
    }

    /// Skips the irreducibility test for moduli already validated elsewhere.
    pub(crate) fn trusted(modulus: Polynomial) -> Arc<Self> {
        Arc::new(ExtField { modulus })
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree() as usize
    }

    pub fn base(&self) -> PrimeField {
        self.modulus.field()
    }

    /// Reduces an arbitrary polynomial into the field.
    pub fn element(self: &Arc<Self>, p: &Polynomial) -> Result<ExtFieldElement> {
        Ok(ExtFieldElement { ext: Arc::clone(self), residue: p.rem(&self.modulus)? })
    }

    pub fn zero(self: &Arc<Self>) -> ExtFieldElement {
        ExtFieldElement { ext: Arc::clone(self), residue: Polynomial::zero(self.base()) }
    }

    pub fn one(self: &Arc<Self>) -> ExtFieldElement {
        ExtFieldElement { ext: Arc::clone(self), residue: Polynomial::one(self.base()) }
    }

    pub fn from_base(self: &Arc<Self>, c: Fp) -> ExtFieldElement {
        ExtFieldElement { ext: Arc::clone(self), residue: Polynomial::constant(c) }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtFieldElement {
    ext: Arc<ExtField>,
    residue: Polynomial,
}

impl fmt::Debug for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.residue)
    }
}

impl ExtFieldElement {
    pub fn ext(&self) -> &Arc<ExtField> {
        &self.ext
    }

    pub fn residue(&self) -> &Polynomial {
        &self.residue
    }

    fn with(&self, residue: Polynomial) -> Self {
        ExtFieldElement { ext: Arc::clone(&self.ext), residue }
    }

    fn check(&self, other: &Self) {
        debug_assert!(self.ext == other.ext, "mixed extension moduli");
    }

    /// Inverse via extended Euclid against the modulus.
    pub fn inverse(&self) -> Result<Self> {
        if self.residue.is_zero() {
            return Err(Error::domain("inversion of zero"));
        }
        let (g, s, _) = self.residue.ext_gcd(&self.ext.modulus);
        if g.degree() != 0 {
            return Err(Error::domain("element shares a factor with the modulus"));
        }
        Ok(self.with(s.rem(&self.ext.modulus)?))
    }
}

impl RingElement for ExtFieldElement {
    fn base_field(&self) -> PrimeField {
        self.ext.base()
    }
    fn zero_like(&self) -> Self {
        self.ext.zero()
    }
    fn one_like(&self) -> Self {
        self.ext.one()
    }
    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(self.residue.add(&rhs.residue))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(self.residue.sub(&rhs.residue))
    }
    fn neg(&self) -> Self {
        self.with(self.residue.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(self.residue.mul(&rhs.residue).rem(&self.ext.modulus).expect("nonzero modulus"))
    }
    fn scale(&self, c: Fp) -> Self {
        self.with(self.residue.scale(c))
    }
}

impl CommutativeRing for ExtFieldElement {}

impl UnitRing for ExtFieldElement {
    fn is_unit(&self) -> bool {
        !self.residue.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl FieldLike for ExtFieldElement {}

impl FiniteRing for ExtFieldElement {
    type Shape = Arc<ExtField>;

    fn shape(&self) -> Arc<ExtField> {
        Arc::clone(&self.ext)
    }
    fn zero_of(shape: &Arc<ExtField>) -> Self {
        shape.zero()
    }
    fn random<R: Rng + ?Sized>(shape: &Arc<ExtField>, rng: &mut R) -> Self {
        let f = shape.base();
        let coeffs = (0..shape.degree()).map(|_| f.random(rng)).collect();
        ExtFieldElement { ext: Arc::clone(shape), residue: Polynomial::new(f, coeffs) }
    }
    fn field_of(shape: &Arc<ExtField>) -> PrimeField {
        shape.base()
    }
    fn word_count(shape: &Arc<ExtField>) -> usize {
        shape.degree()
    }
    fn to_words(&self) -> Vec<u64> {
        self.residue.padded(self.ext.degree()).iter().map(|c| c.value()).collect()
    }
    fn from_words(shape: &Arc<ExtField>, words: &[u64]) -> Result<Self> {
        expect_words(words, shape.degree())?;
        let f = shape.base();
        let coeffs = words.iter().map(|&w| f.try_elem(w)).collect::<Result<_>>()?;
        Ok(ExtFieldElement { ext: Arc::clone(shape), residue: Polynomial::new(f, coeffs) })
    }
}
