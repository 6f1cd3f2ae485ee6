use std::sync::Arc;

use super::beaver::{beaver_mul, beaver_mul_many, reveal, reveal_many};
use crate::algebra::{ExtField, ExtFieldElement, FieldLike, FiniteRing, Fp, PrimeField, SeriesShape, TruncSeries, UnitRing};
use crate::cost_model::{inverse_candidates, unit_candidates, MAX_FALLBACK_BATCHES};
use crate::engine::ProtocolContext;
use crate::error::{Error, LeakSignal, Result};
use crate::sharing::{rand_share, Shared};
use crate::triples::Triplable;

/// A unit ring with a linear unit witness: x is a unit iff its witness is.
pub trait MaskRing: UnitRing + Triplable {
    type Witness: UnitRing + Triplable;

    fn witness(&self) -> Self::Witness;
    fn witness_shape(shape: &Self::Shape) -> <Self::Witness as FiniteRing>::Shape;
    /// log2 of the witness ring's size.
    fn witness_bits(shape: &Self::Shape) -> f64;
}

impl MaskRing for Fp {
    type Witness = Fp;
    fn witness(&self) -> Fp {
        *self
    }
    fn witness_shape(shape: &PrimeField) -> PrimeField {
        *shape
    }
    fn witness_bits(shape: &PrimeField) -> f64 {
        (shape.modulus() as f64).log2()
    }
}

impl MaskRing for TruncSeries {
    type Witness = Fp;
    fn witness(&self) -> Fp {
        self.constant_term()
    }
    fn witness_shape(shape: &SeriesShape) -> PrimeField {
        shape.field
    }
    fn witness_bits(shape: &SeriesShape) -> f64 {
        (shape.field.modulus() as f64).log2()
    }
}

impl MaskRing for ExtFieldElement {
    type Witness = ExtFieldElement;
    fn witness(&self) -> Self {
        self.clone()
    }
    fn witness_shape(shape: &Arc<ExtField>) -> Arc<ExtField> {
        shape.clone()
    }
    fn witness_bits(shape: &Arc<ExtField>) -> f64 {
        shape.degree() as f64 * (shape.base().modulus() as f64).log2()
    }
}

/// Draws batches of candidates until `accept` picks one. Each batch costs
/// the rounds of `attempt`; rejected candidates are metered as retries.
fn las_vegas<C>(
    ctx: &mut ProtocolContext,
    mut attempt: impl FnMut(&mut ProtocolContext) -> Result<(Vec<C>, Vec<bool>)>,
    exhausted: impl FnOnce() -> Error,
) -> Result<C> {
    for batch in 0..=MAX_FALLBACK_BATCHES {
        let (cands, ok) = ctx.scope(&format!("batch{batch}"), &mut attempt)?;
        match ok.iter().position(|&b| b) {
            Some(j) => {
                (0..j).for_each(|_| ctx.note_retry());
                return Ok(cands.into_iter().nth(j).expect("index in range"));
            }
            None => (0..ok.len()).for_each(|_| ctx.note_retry()),
        }
    }
    let err = exhausted();
    if err.is_leak() {
        ctx.note_leak();
    }
    Err(err)
}

/// Uniform shared unit (2 rounds): a candidate's witness is multiplied by a
/// fresh mask and opened; a unit product certifies the candidate.
pub fn rand_unit<R: MaskRing>(ctx: &mut ProtocolContext, shape: &R::Shape) -> Result<Shared<R>> {
    ctx.scope("rand_unit", |ctx| {
        let k = unit_candidates(R::witness_bits(shape), ctx.lambda());
        let wshape = R::witness_shape(shape);
        las_vegas(
            ctx,
            |ctx| {
                let cands: Vec<Shared<R>> = (0..k).map(|_| rand_share(ctx, shape)).collect();
                let masks: Vec<Shared<R::Witness>> = (0..k).map(|_| rand_share(ctx, &wshape)).collect();
                let wits: Vec<Shared<R::Witness>> = cands.iter().map(|c| c.map(|v| v.witness())).collect();
                let pairs: Vec<_> = wits.iter().zip(&masks).collect();
                let prods = beaver_mul_many(ctx, &pairs)?;
                let opened = reveal_many(ctx, &prods.iter().collect::<Vec<_>>(), "unit_test")?;
                Ok((cands, opened.iter().map(|w| w.is_unit()).collect()))
            },
            || Error::RetriesExhausted("no unit candidate survived".into()),
        )
    })
}

/// Uniform unit of the series ring.
pub fn rand_poly_inv(ctx: &mut ProtocolContext, m: usize) -> Result<Shared<TruncSeries>> {
    rand_unit(ctx, &SeriesShape { field: ctx.field(), m })
}

/// Shared unit together with a sharing of its inverse (2 rounds).
pub fn rand_unit_pair<R: MaskRing>(ctx: &mut ProtocolContext, shape: &R::Shape) -> Result<(Shared<R>, Shared<R>)> {
    ctx.scope("rand_unit_pair", |ctx| {
        let k = unit_candidates(R::witness_bits(shape), ctx.lambda());
        las_vegas(
            ctx,
            |ctx| {
                let rs: Vec<Shared<R>> = (0..k).map(|_| rand_share(ctx, shape)).collect();
                let ss: Vec<Shared<R>> = (0..k).map(|_| rand_share(ctx, shape)).collect();
                let pairs: Vec<_> = rs.iter().zip(&ss).collect();
                let prods = beaver_mul_many(ctx, &pairs)?;
                let opened = reveal_many(ctx, &prods.iter().collect::<Vec<_>>(), "pair_test")?;
                let ok: Vec<bool> = opened.iter().map(|w| w.is_unit()).collect();
                let cands = rs
                    .into_iter()
                    .zip(ss)
                    .zip(opened)
                    .map(|((r, s), w)| match ctx.public(|| w.try_inverse()) {
                        Some(inv) => (r, s.mul_public(&inv)),
                        None => (r, s),
                    })
                    .collect();
                Ok((cands, ok))
            },
            || Error::RetriesExhausted("no invertible pair survived".into()),
        )
    })
}

/// Inverse of a shared nonzero element of a field (2 rounds).
pub fn inverse_field<R: MaskRing + FieldLike>(ctx: &mut ProtocolContext, a: &Shared<R>) -> Result<Shared<R>> {
    ctx.scope("inverse", |ctx| {
        let shape = a.value(1).shape();
        let k = inverse_candidates(R::witness_bits(&shape), ctx.lambda());
        las_vegas(
            ctx,
            |ctx| {
                let masks: Vec<Shared<R>> = (0..k).map(|_| rand_share(ctx, &shape)).collect();
                let pairs: Vec<_> = masks.iter().map(|r| (a, r)).collect();
                let prods = beaver_mul_many(ctx, &pairs)?;
                let opened = reveal_many(ctx, &prods.iter().collect::<Vec<_>>(), "inverse_mask")?;
                let ok: Vec<bool> = opened.iter().map(|w| !w.is_zero()).collect();
                let cands = masks
                    .into_iter()
                    .zip(opened)
                    .map(|(r, w)| match ctx.public(|| w.try_inverse()) {
                        Some(inv) => r.mul_public(&inv),
                        None => r,
                    })
                    .collect();
                Ok((cands, ok))
            },
            || Error::Leak(LeakSignal::ZeroSecret),
        )
    })
}

/// Inverse of a shared unit series (4 rounds): a unit mask hides the
/// secret, the product is opened and inverted locally.
pub fn inverse_series(ctx: &mut ProtocolContext, a: &Shared<TruncSeries>) -> Result<Shared<TruncSeries>> {
    ctx.scope("inverse_series", |ctx| {
        let m = a.value(1).len();
        let mask = rand_poly_inv(ctx, m)?;
        let w = beaver_mul(ctx, a, &mask)?;
        let w = reveal(ctx, &w, "inverse_series")?;
        let Ok(inv) = ctx.public(|| w.inverse()) else {
            ctx.note_leak();
            return Err(Error::Leak(LeakSignal::NonUnit));
        };
        Ok(mask.mul_public(&inv))
    })
}
