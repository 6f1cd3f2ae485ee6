use crate::algebra::{FiniteRing, PolyMatrix};
use crate::engine::{as_player, ProtocolContext};
use crate::error::{Error, Result};
use crate::sharing::Shared;
use crate::triples::{BeaverTriple, Triplable};

/// Sums broadcast word vectors into public ring elements, one per chunk.
fn open_chunks<T: FiniteRing>(ctx: &mut ProtocolContext, shapes: &[T::Shape], payloads: &[Vec<u64>]) -> Result<Vec<T>> {
    ctx.public(|| {
        let mut offset = 0;
        let mut out = Vec::with_capacity(shapes.len());
        for shape in shapes {
            let w = T::word_count(shape);
            let mut acc = T::from_words(shape, &payloads[0][offset..offset + w])?;
            for p in &payloads[1..] {
                acc = acc.add(&T::from_words(shape, &p[offset..offset + w])?);
            }
            out.push(acc);
            offset += w;
        }
        Ok(out)
    })
}

/// Opens several shared values in one round.
pub fn reveal_many<T: FiniteRing>(ctx: &mut ProtocolContext, values: &[&Shared<T>], tag: &str) -> Result<Vec<T>> {
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let players = ctx.players();
    if values.iter().any(|v| v.players() != players) {
        return Err(Error::bug("sharing does not cover every player"));
    }
    let shapes: Vec<T::Shape> = values.iter().map(|v| v.value(1).shape()).collect();
    let payloads: Vec<Vec<u64>> =
        (1..=players).map(|p| values.iter().flat_map(|v| v.value(p).to_words()).collect()).collect();
    let received = ctx.broadcast(tag, payloads)?;
    open_chunks(ctx, &shapes, &received)
}

pub fn reveal<T: FiniteRing>(ctx: &mut ProtocolContext, value: &Shared<T>, tag: &str) -> Result<T> {
    Ok(reveal_many(ctx, &[value], tag)?.pop().expect("one value"))
}

/// Several products in one round, each with its own triple.
pub fn beaver_mul_many<T: Triplable>(
    ctx: &mut ProtocolContext,
    pairs: &[(&Shared<T>, &Shared<T>)],
) -> Result<Vec<Shared<T>>> {
    let triples = pairs
        .iter()
        .map(|(a, b)| {
            let shape = a.value(1).shape();
            if b.value(1).shape() != shape {
                return Err(Error::domain("Beaver operands live in different rings"));
            }
            ctx.take_triple::<T>(&shape)
        })
        .collect::<Result<Vec<_>>>()?;
    mul_with_triples(ctx, pairs, triples)
}

fn mul_with_triples<T: Triplable>(
    ctx: &mut ProtocolContext,
    pairs: &[(&Shared<T>, &Shared<T>)],
    triples: Vec<BeaverTriple<T>>,
) -> Result<Vec<Shared<T>>> {
    let mut masked = Vec::with_capacity(2 * pairs.len());
    for ((a, b), t) in pairs.iter().zip(&triples) {
        let shape = a.value(1).shape();
        if t.kind != T::triple_kind(&shape) {
            return Err(Error::domain(format!("a {} triple cannot multiply in this ring", t.kind)));
        }
        ctx.consume_triple(t.id, &t.kind)?;
        masked.push(a.sub(&t.y));
        masked.push(b.sub(&t.z));
    }
    let refs: Vec<&Shared<T>> = masked.iter().collect();
    let opened = reveal_many(ctx, &refs, "beaver")?;
    Ok(triples
        .iter()
        .zip(opened.chunks(2))
        .map(|(t, de)| {
            let (d, e) = (&de[0], &de[1]);
            let de_term = as_player(0, || d.mul(e));
            t.x.add(&t.y.mul_public(e)).add(&t.z.public_mul(d)).add_public(&de_term)
        })
        .collect())
}

pub fn beaver_mul<T: Triplable>(ctx: &mut ProtocolContext, a: &Shared<T>, b: &Shared<T>) -> Result<Shared<T>> {
    Ok(beaver_mul_many(ctx, &[(a, b)])?.pop().expect("one product"))
}

/// Product with an explicitly supplied triple.
pub fn beaver_mul_with<T: Triplable>(
    ctx: &mut ProtocolContext,
    a: &Shared<T>,
    b: &Shared<T>,
    triple: BeaverTriple<T>,
) -> Result<Shared<T>> {
    Ok(mul_with_triples(ctx, &[(a, b)], vec![triple])?.pop().expect("one product"))
}

/// Product of shared polynomial matrices with a common degree bound.
pub fn mul_polymat(ctx: &mut ProtocolContext, a: &Shared<PolyMatrix>, b: &Shared<PolyMatrix>) -> Result<Shared<PolyMatrix>> {
    let d = a.value(1).d_bound().max(b.value(1).d_bound());
    let a = a.map(|m| m.resized(d));
    let b = b.map(|m| m.resized(d));
    beaver_mul(ctx, &a, &b)
}
