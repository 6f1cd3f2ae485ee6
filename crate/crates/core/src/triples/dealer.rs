//! Trusted out-of-band dealer: samples plain triples and deals them.

use rand::Rng;

use super::TripleKind;
use crate::algebra::{ExtField, FiniteRing, Fp, Matrix, MatrixShape, PolyMatShape, PolyMatrix, Polynomial, PrimeField, RingElement, SeriesShape, TruncSeries};
use crate::error::Result;

/// A uniformly random triple of `kind` in the clear, laid out as x‖y‖z.
pub(crate) fn plain_triple<R: Rng + ?Sized>(kind: &TripleKind, field: PrimeField, rng: &mut R) -> Result<Vec<u64>> {
    fn pack<T: FiniteRing>(x: T, y: T, z: T) -> Vec<u64> {
        let mut w = x.to_words();
        w.extend(y.to_words());
        w.extend(z.to_words());
        w
    }
    Ok(match kind {
        TripleKind::Field => {
            let (y, z) = (field.random(rng), field.random(rng));
            pack(y * z, y, z)
        }
        TripleKind::Series { m } => {
            let shape = SeriesShape { field, m: *m };
            let (y, z) = (TruncSeries::random(&shape, rng), TruncSeries::random(&shape, rng));
            pack(y.mul(&z), y, z)
        }
        TripleKind::Matrix { n } => {
            let shape = MatrixShape { n: *n, inner: field };
            let (y, z) = (Matrix::<Fp>::random(&shape, rng), Matrix::<Fp>::random(&shape, rng));
            pack(y.mul(&z), y, z)
        }
        TripleKind::PolyMatrix { n, d } => {
            let shape = PolyMatShape { field, n: *n, d: *d };
            let (y, z) = (PolyMatrix::random(&shape, rng), PolyMatrix::random(&shape, rng));
            pack(y.mul(&z), y, z)
        }
        TripleKind::ExtField { modulus } => {
            let ext = ExtField::trusted(Polynomial::from_u64(field, modulus));
            let y = crate::algebra::ExtFieldElement::random(&ext, rng);
            let z = crate::algebra::ExtFieldElement::random(&ext, rng);
            pack(y.mul(&z), y, z)
        }
    })
}

/// Additive sharing of a word vector: the first N−1 shares are uniform and
/// the last one completes the sum.
pub(crate) fn deal_words<R: Rng + ?Sized>(words: &[u64], field: PrimeField, players: usize, rng: &mut R) -> Vec<Vec<u64>> {
    let mut last: Vec<Fp> = words.iter().map(|&w| field.elem(w)).collect();
    let mut shares = Vec::with_capacity(players);
    for _ in 1..players {
        let s: Vec<Fp> = (0..words.len()).map(|_| field.random(rng)).collect();
        for (l, &v) in last.iter_mut().zip(&s) {
            *l -= v;
        }
        shares.push(s.iter().map(|v| v.value()).collect());
    }
    shares.push(last.iter().map(|v| v.value()).collect());
    shares
}

/// Reconstructs a stored triple and checks x = y·z.
pub fn verify_plain(kind: &TripleKind, field: PrimeField, shares: &[Vec<u64>]) -> Result<bool> {
    fn check<T: super::Triplable>(shape: &T::Shape, words: &[u64]) -> Result<bool> {
        let (x, y, z) = T::decode_triple(shape, words)?;
        Ok(x == y.mul(&z))
    }
    let width = kind.words_per_player();
    let mut sum = vec![field.zero(); width];
    for s in shares {
        if s.len() != width {
            return Err(crate::error::Error::Input(format!("{kind} triple needs {width} words per player")));
        }
        for (acc, &w) in sum.iter_mut().zip(s) {
            *acc += field.try_elem(w)?;
        }
    }
    let words: Vec<u64> = sum.iter().map(|v| v.value()).collect();
    match kind {
        TripleKind::Field => check::<Fp>(&field, &words),
        TripleKind::Series { m } => check::<TruncSeries>(&SeriesShape { field, m: *m }, &words),
        TripleKind::Matrix { n } => check::<Matrix<Fp>>(&MatrixShape { n: *n, inner: field }, &words),
        TripleKind::PolyMatrix { n, d } => check::<PolyMatrix>(&PolyMatShape { field, n: *n, d: *d }, &words),
        TripleKind::ExtField { modulus } => {
            check::<crate::algebra::ExtFieldElement>(&super::ext_from_kind(field, modulus), &words)
        }
    }
}
