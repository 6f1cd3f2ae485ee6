//! Triples of composite rings built interactively from lower kinds.

use std::sync::Arc;

use super::{BeaverTriple, Triplable};
use crate::algebra::{ExtField, ExtFieldElement, Fp, Matrix, MatrixShape, PolyMatShape, PolyMatrix, SeriesShape, TruncSeries};
use crate::engine::ProtocolContext;
use crate::error::{Error, Result};
use crate::protocols::beaver_mul_many;
use crate::sharing::{rand_share, share_interpolate_field, share_interpolate_public, share_polymatrix_eval, Shared};

/// Dealer field triples; no communication.
pub fn bt_field_dealer(ctx: &mut ProtocolContext, count: usize) -> Result<Vec<BeaverTriple<Fp>>> {
    let field = ctx.field();
    (0..count).map(|_| ctx.take_triple::<Fp>(&field)).collect()
}

/// Dealer triples over K[X]/f; no communication.
pub fn bt_extfield_dealer(
    ctx: &mut ProtocolContext,
    ext: &Arc<ExtField>,
    count: usize,
) -> Result<Vec<BeaverTriple<ExtFieldElement>>> {
    (0..count).map(|_| ctx.take_triple::<ExtFieldElement>(ext)).collect()
}

fn assemble<T: Triplable>(ctx: &mut ProtocolContext, shape: &T::Shape, x: Shared<T>, y: Shared<T>, z: Shared<T>) -> BeaverTriple<T> {
    BeaverTriple { id: ctx.store_mut().fresh_id(), kind: T::triple_kind(shape), x, y, z }
}

/// Series triple from 2m−1 field triples in one round: evaluate the shared
/// factors at 1..2m−1, multiply pointwise, interpolate and truncate.
pub fn bt_poly(ctx: &mut ProtocolContext, m: usize) -> Result<BeaverTriple<TruncSeries>> {
    let field = ctx.field();
    if m == 0 || field.modulus() <= 2 * m as u64 {
        return Err(Error::domain(format!("series triples of length {m} need q > {}", 2 * m)));
    }
    ctx.scope("bt_poly", |ctx| {
        let shape = SeriesShape { field, m };
        let y: Shared<TruncSeries> = rand_share(ctx, &shape);
        let z: Shared<TruncSeries> = rand_share(ctx, &shape);
        let points: Vec<Fp> = (1..2 * m as u64).map(|v| field.elem(v)).collect();
        let ys: Vec<Shared<Fp>> = points.iter().map(|&a| y.map(|s| s.to_polynomial().eval(a))).collect();
        let zs: Vec<Shared<Fp>> = points.iter().map(|&a| z.map(|s| s.to_polynomial().eval(a))).collect();
        let pairs: Vec<_> = ys.iter().zip(&zs).collect();
        let prods = beaver_mul_many(ctx, &pairs)?;
        let pts: Vec<(Fp, Shared<Fp>)> = points.into_iter().zip(prods).collect();
        let x = share_interpolate_field(&pts)?.map(|p| TruncSeries::from_polynomial(p, m));
        Ok(assemble(ctx, &shape, x, y, z))
    })
}

/// Matrix triple from n³ field triples in one round.
pub fn bt_mat(ctx: &mut ProtocolContext, n: usize) -> Result<BeaverTriple<Matrix<Fp>>> {
    let field = ctx.field();
    ctx.scope("bt_mat", |ctx| {
        let shape = MatrixShape { n, inner: field };
        let y: Shared<Matrix<Fp>> = rand_share(ctx, &shape);
        let z: Shared<Matrix<Fp>> = rand_share(ctx, &shape);
        let (ye, ze): (Vec<_>, Vec<_>) = (0..n * n).map(|k| (y.entry(k / n, k % n), z.entry(k / n, k % n))).unzip();
        let mut pairs = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    pairs.push((&ye[i * n + k], &ze[k * n + j]));
                }
            }
        }
        let prods = beaver_mul_many(ctx, &pairs)?;
        let entries: Vec<Shared<Fp>> = prods
            .chunks(n)
            .map(|c| c[1..].iter().fold(c[0].clone(), |acc, p| acc.add(p)))
            .collect();
        let x = Shared::from_entries(n, &entries)?;
        Ok(assemble(ctx, &shape, x, y, z))
    })
}

/// Polynomial-matrix triple with product bound 2d from 2d+1 matrix triples
/// in one round, at the evaluation points 1..2d+1.
pub fn bt_polymat(ctx: &mut ProtocolContext, n: usize, d: usize) -> Result<BeaverTriple<PolyMatrix>> {
    let field = ctx.field();
    if field.modulus() <= 2 * d as u64 + 1 {
        return Err(Error::domain(format!("polynomial-matrix triples of degree {d} need q > {}", 2 * d + 1)));
    }
    ctx.scope("bt_polymat", |ctx| {
        let shape = PolyMatShape { field, n, d };
        let y: Shared<PolyMatrix> = rand_share(ctx, &shape);
        let z: Shared<PolyMatrix> = rand_share(ctx, &shape);
        let points: Vec<Fp> = (1..=2 * d as u64 + 1).map(|v| field.elem(v)).collect();
        let ys: Vec<_> = points.iter().map(|&a| share_polymatrix_eval(&y, a)).collect();
        let zs: Vec<_> = points.iter().map(|&a| share_polymatrix_eval(&z, a)).collect();
        let pairs: Vec<_> = ys.iter().zip(&zs).collect();
        let prods = beaver_mul_many(ctx, &pairs)?;
        let pts: Vec<_> = points.into_iter().zip(prods).collect();
        let x = share_interpolate_public(&pts)?;
        Ok(assemble(ctx, &shape, x, y, z))
    })
}
