use super::beaver::beaver_mul;
use super::fanin::fan_in_mul;
use super::units::{rand_unit, MaskRing};
use crate::algebra::{Fp, Matrix, PolyMatShape, PolyMatrix, PrimeField};
use crate::engine::ProtocolContext;
use crate::error::{Error, Result};
use crate::sharing::{rand_share, Shared};
use crate::triples::MatrixEntry;

/// Random invertible H = U·L with U upper and L lower triangular, unit
/// diagonals. With `with_det`, also a sharing of det H = Π u_i·Π l_i.
/// 7 rounds with the determinant, 3 without.
#[allow(clippy::type_complexity)]
pub fn rand_inv_mat<R: MaskRing + MatrixEntry>(
    ctx: &mut ProtocolContext,
    n: usize,
    inner: &R::Shape,
    with_det: bool,
) -> Result<(Shared<Matrix<R>>, Option<Shared<R>>)> {
    if n == 0 {
        return Err(Error::domain("matrix dimension must be positive"));
    }
    ctx.scope("rand_inv_mat", |ctx| {
        let units = ctx.par_map("unit", 0..2 * n, |ctx, _, _| rand_unit::<R>(ctx, inner));
        let units = units.into_iter().collect::<Result<Vec<_>>>()?;
        let zero = Shared::from_values(vec![R::zero_of(inner); ctx.players()]);
        let mut upper = Vec::with_capacity(n * n);
        let mut lower = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (u, l) = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => (units[i].clone(), units[n + i].clone()),
                    std::cmp::Ordering::Less => (rand_share(ctx, inner), zero.clone()),
                    std::cmp::Ordering::Greater => (zero.clone(), rand_share(ctx, inner)),
                };
                upper.push(u);
                lower.push(l);
            }
        }
        let u = Shared::from_entries(n, &upper)?;
        let l = Shared::from_entries(n, &lower)?;
        if !with_det {
            return Ok((beaver_mul(ctx, &u, &l)?, None));
        }
        let (h, det) = ctx.par2(|ctx| beaver_mul(ctx, &u, &l), |ctx| fan_in_mul(ctx, &units));
        Ok((h?, Some(det?)))
    })
}

/// Random polynomial matrix of degree ≤ d whose constant coefficient is
/// invertible (3 rounds): F·X + G with G from [`rand_inv_mat`].
pub fn rand_inv_polymat(ctx: &mut ProtocolContext, n: usize, d: usize) -> Result<Shared<PolyMatrix>> {
    ctx.scope("rand_inv_polymat", |ctx| {
        let field = ctx.field();
        let (g, _) = rand_inv_mat::<Fp>(ctx, n, &field, false)?;
        let g = g.map(PolyMatrix::constant);
        if d == 0 {
            return Ok(g);
        }
        let f: Shared<PolyMatrix> = rand_share(ctx, &PolyMatShape { field, n, d: d - 1 });
        Ok(f.map(|p| p.shift(1)).add(&g))
    })
}

/// Every (U, L) pair of the masking construction over a small field,
/// for counting arguments.
pub fn enumerate_masks(field: PrimeField, n: usize) -> Vec<(Matrix<Fp>, Matrix<Fp>)> {
    let q = field.modulus();
    let tri = n * (n - 1) / 2;
    let free = 2 * tri;
    let mut out = Vec::new();
    let diag_count = (q - 1).pow(2 * n as u32);
    let free_count = q.pow(free as u32);
    for dk in 0..diag_count {
        for fk in 0..free_count {
            let (mut dv, mut fv) = (dk, fk);
            let mut u = Matrix::filled(n, &field.zero());
            let mut l = Matrix::filled(n, &field.zero());
            for i in 0..n {
                u.set(i, i, field.elem(dv % (q - 1) + 1));
                dv /= q - 1;
                l.set(i, i, field.elem(dv % (q - 1) + 1));
                dv /= q - 1;
            }
            for i in 0..n {
                for j in i + 1..n {
                    u.set(i, j, field.elem(fv % q));
                    fv /= q;
                    l.set(j, i, field.elem(fv % q));
                    fv /= q;
                }
            }
            out.push((u, l));
        }
    }
    out
}
