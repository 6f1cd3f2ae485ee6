use std::sync::Arc;

use super::dims;
use super::field::det_field_general;
use crate::algebra::{irreducible_poly, ExtField, ExtFieldElement, PolyMatrix, Polynomial};
use crate::engine::ProtocolContext;
use crate::error::Result;
use crate::sharing::Shared;

/// Determinant in K[X]/f for a public irreducible f of degree nd+1.
pub fn det_modf_ext(
    ctx: &mut ProtocolContext,
    a: &Shared<PolyMatrix>,
) -> Result<(Arc<ExtField>, Shared<ExtFieldElement>)> {
    let (n, d) = dims(a);
    let field = ctx.field();
    ctx.scope("det_modf", |ctx| {
        let f = ctx.scope("modulus", |ctx| {
            let mut coin = ctx.coin().clone();
            ctx.public(|| irreducible_poly(field, n * d + 1, &mut coin))
        });
        let ext = ExtField::trusted(f);
        let lifted = a.try_map(|p| p.to_ext_matrix(&ext))?;
        let det = det_field_general::<ExtFieldElement>(ctx, &lifted)?;
        Ok((ext, det))
    })
}

/// Determinant as a polynomial; exact since deg det ≤ nd < deg f.
pub fn det_modf(ctx: &mut ProtocolContext, a: &Shared<PolyMatrix>) -> Result<Shared<Polynomial>> {
    let (_, det) = det_modf_ext(ctx, a)?;
    Ok(det.map(|e| e.residue().clone()))
}
