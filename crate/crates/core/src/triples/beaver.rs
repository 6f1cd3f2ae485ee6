use std::sync::Arc;

use super::TripleKind;
use crate::algebra::{
    ExtField, ExtFieldElement, FiniteRing, Fp, Matrix, MatrixShape, PolyMatShape, PolyMatrix, Polynomial, PrimeField,
    SeriesShape, TruncSeries,
};
use crate::engine::ProtocolContext;
use crate::error::{Error, Result};
use crate::sharing::Shared;

/// Shares of (x, y, z) with x = y·z.
#[derive(Clone, Debug)]
pub struct BeaverTriple<T> {
    pub id: u64,
    pub kind: TripleKind,
    pub x: Shared<T>,
    pub y: Shared<T>,
    pub z: Shared<T>,
}

impl<T: FiniteRing> BeaverTriple<T> {
    /// Per-player words x‖y‖z, the stored layout.
    pub fn share_words(&self) -> Vec<Vec<u64>> {
        (1..=self.x.players())
            .map(|p| {
                let mut w = self.x.value(p).to_words();
                w.extend(self.y.value(p).to_words());
                w.extend(self.z.value(p).to_words());
                w
            })
            .collect()
    }
}

/// Rings with a Beaver triple kind.
pub trait Triplable: FiniteRing {
    fn triple_kind(shape: &Self::Shape) -> TripleKind;

    /// Splits one player's stored words x‖y‖z into ring elements.
    fn decode_triple(shape: &Self::Shape, words: &[u64]) -> Result<(Self, Self, Self)>;
}

fn split3(words: &[u64], xw: usize, fw: usize) -> Result<(&[u64], &[u64], &[u64])> {
    if words.len() != xw + 2 * fw {
        return Err(Error::domain(format!("triple share has {} words, expected {}", words.len(), xw + 2 * fw)));
    }
    Ok((&words[..xw], &words[xw..xw + fw], &words[xw + fw..]))
}

fn decode_same<T: FiniteRing>(shape: &T::Shape, words: &[u64]) -> Result<(T, T, T)> {
    let w = T::word_count(shape);
    let (x, y, z) = split3(words, w, w)?;
    Ok((T::from_words(shape, x)?, T::from_words(shape, y)?, T::from_words(shape, z)?))
}

/// Polynomial-matrix triple with product bound 2d.
fn decode_polymat(field: PrimeField, n: usize, d: usize, words: &[u64]) -> Result<(PolyMatrix, PolyMatrix, PolyMatrix)> {
    let wide = PolyMatShape { field, n, d: 2 * d };
    let narrow = PolyMatShape { field, n, d };
    let (x, y, z) = split3(words, PolyMatrix::word_count(&wide), PolyMatrix::word_count(&narrow))?;
    Ok((PolyMatrix::from_words(&wide, x)?, PolyMatrix::from_words(&narrow, y)?, PolyMatrix::from_words(&narrow, z)?))
}

fn ext_kind(ext: &ExtField) -> TripleKind {
    TripleKind::ExtField { modulus: ext.modulus().coeff_values() }
}

impl Triplable for Fp {
    fn triple_kind(_: &PrimeField) -> TripleKind {
        TripleKind::Field
    }
    fn decode_triple(shape: &PrimeField, words: &[u64]) -> Result<(Self, Self, Self)> {
        decode_same(shape, words)
    }
}

impl Triplable for TruncSeries {
    fn triple_kind(shape: &SeriesShape) -> TripleKind {
        TripleKind::Series { m: shape.m }
    }
    fn decode_triple(shape: &SeriesShape, words: &[u64]) -> Result<(Self, Self, Self)> {
        decode_same(shape, words)
    }
}

impl Triplable for ExtFieldElement {
    fn triple_kind(shape: &Arc<ExtField>) -> TripleKind {
        ext_kind(shape)
    }
    fn decode_triple(shape: &Arc<ExtField>, words: &[u64]) -> Result<(Self, Self, Self)> {
        decode_same(shape, words)
    }
}

impl Triplable for PolyMatrix {
    fn triple_kind(shape: &PolyMatShape) -> TripleKind {
        TripleKind::PolyMatrix { n: shape.n, d: shape.d }
    }
    fn decode_triple(shape: &PolyMatShape, words: &[u64]) -> Result<(Self, Self, Self)> {
        decode_polymat(shape.field, shape.n, shape.d, words)
    }
}

/// Entry rings whose matrices have a triple kind. Series and extension
/// matrices reuse polynomial-matrix triples reduced modulo X^m or f.
pub trait MatrixEntry: FiniteRing {
    fn matrix_triple_kind(n: usize, inner: &Self::Shape) -> TripleKind;
    #[allow(clippy::type_complexity)]
    fn decode_matrix_triple(n: usize, inner: &Self::Shape, words: &[u64])
        -> Result<(Matrix<Self>, Matrix<Self>, Matrix<Self>)>;
}

impl MatrixEntry for Fp {
    fn matrix_triple_kind(n: usize, _: &PrimeField) -> TripleKind {
        TripleKind::Matrix { n }
    }
    fn decode_matrix_triple(n: usize, inner: &PrimeField, words: &[u64]) -> Result<(Matrix<Fp>, Matrix<Fp>, Matrix<Fp>)> {
        decode_same(&MatrixShape { n, inner: *inner }, words)
    }
}

impl MatrixEntry for TruncSeries {
    fn matrix_triple_kind(n: usize, inner: &SeriesShape) -> TripleKind {
        TripleKind::PolyMatrix { n, d: inner.m - 1 }
    }
    fn decode_matrix_triple(
        n: usize,
        inner: &SeriesShape,
        words: &[u64],
    ) -> Result<(Matrix<Self>, Matrix<Self>, Matrix<Self>)> {
        let (x, y, z) = decode_polymat(inner.field, n, inner.m - 1, words)?;
        Ok((x.to_series_matrix(inner.m), y.to_series_matrix(inner.m), z.to_series_matrix(inner.m)))
    }
}

impl MatrixEntry for ExtFieldElement {
    fn matrix_triple_kind(n: usize, inner: &Arc<ExtField>) -> TripleKind {
        TripleKind::PolyMatrix { n, d: inner.degree() - 1 }
    }
    fn decode_matrix_triple(
        n: usize,
        inner: &Arc<ExtField>,
        words: &[u64],
    ) -> Result<(Matrix<Self>, Matrix<Self>, Matrix<Self>)> {
        let (x, y, z) = decode_polymat(inner.base(), n, inner.degree() - 1, words)?;
        Ok((x.to_ext_matrix(inner)?, y.to_ext_matrix(inner)?, z.to_ext_matrix(inner)?))
    }
}

impl<T: MatrixEntry> Triplable for Matrix<T> {
    fn triple_kind(shape: &MatrixShape<T::Shape>) -> TripleKind {
        T::matrix_triple_kind(shape.n, &shape.inner)
    }
    fn decode_triple(shape: &MatrixShape<T::Shape>, words: &[u64]) -> Result<(Self, Self, Self)> {
        T::decode_matrix_triple(shape.n, &shape.inner, words)
    }
}

impl ProtocolContext {
    /// Next triple of the kind matching `shape`, split into ring shares.
    /// Consumption is recorded when the triple is used.
    pub fn take_triple<T: Triplable>(&mut self, shape: &T::Shape) -> Result<BeaverTriple<T>> {
        let kind = T::triple_kind(shape);
        let raw = self.store_mut().take(&kind)?;
        let (mut xs, mut ys, mut zs) = (Vec::new(), Vec::new(), Vec::new());
        for words in &raw.shares {
            let (x, y, z) = T::decode_triple(shape, words)?;
            xs.push(x);
            ys.push(y);
            zs.push(z);
        }
        Ok(BeaverTriple {
            id: raw.id,
            kind,
            x: Shared::from_values(xs),
            y: Shared::from_values(ys),
            z: Shared::from_values(zs),
        })
    }
}

/// Monic modulus from a stored kind.
pub(crate) fn ext_from_kind(field: PrimeField, modulus: &[u64]) -> Arc<ExtField> {
    ExtField::trusted(Polynomial::from_u64(field, modulus))
}
