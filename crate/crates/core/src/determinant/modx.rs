use super::dims;
use super::field::{combine_at_zero, small_order};
use crate::algebra::{det_berkowitz, FiniteRing, Matrix, PolyMatrix, SeriesShape, TruncSeries, UnitRing};
use crate::engine::ProtocolContext;
use crate::error::{Error, LeakSignal, Result};
use crate::protocols::{beaver_mul, inverse_series, rand_inv_mat, reveal, reveal_many};
use crate::sharing::{rand_share, Shared};

/// A shared random matrix over the series ring with invertible constant
/// coefficient, together with a sharing of its determinant.
#[derive(Clone, Debug)]
pub struct MaskTriple {
    pub h: Shared<Matrix<TruncSeries>>,
    pub det: Shared<TruncSeries>,
}

/// Mask over K[[X]]/X^{det_degree+1} (7 rounds).
pub fn rand_mat_poly_det(ctx: &mut ProtocolContext, n: usize, det_degree: usize) -> Result<MaskTriple> {
    let shape = SeriesShape { field: ctx.field(), m: det_degree + 1 };
    ctx.scope("rand_mat_poly_det", |ctx| {
        let (h, det) = rand_inv_mat::<TruncSeries>(ctx, n, &shape, true)?;
        Ok(MaskTriple { h, det: det.expect("determinant requested") })
    })
}

/// Determinant of a shared series matrix with invertible constant
/// coefficient (11 rounds).
pub fn det_modx_series(ctx: &mut ProtocolContext, a: &Shared<Matrix<TruncSeries>>) -> Result<Shared<TruncSeries>> {
    let n = a.value(1).dim();
    let m = a.value(1).get(0, 0).len();
    ctx.scope("det_modx", |ctx| {
        let mask = rand_mat_poly_det(ctx, n, m - 1)?;
        let (inv, e) = ctx.par2(
            |ctx| inverse_series(ctx, &mask.det),
            |ctx| {
                let blinded = beaver_mul(ctx, a, &mask.h)?;
                reveal(ctx, &blinded, "blinded_matrix")
            },
        );
        let (inv, e) = (inv?, e?);
        let det_e = ctx.public(|| det_berkowitz(&e));
        if !det_e.is_unit() {
            ctx.note_leak();
            return Err(Error::Leak(LeakSignal::Singular));
        }
        Ok(inv.mul_public(&det_e))
    })
}

/// Determinant of a shared polynomial matrix with invertible constant
/// coefficient, over K[[X]]/X^{nd+1}; lossless since deg det ≤ nd.
pub fn det_modx(ctx: &mut ProtocolContext, a: &Shared<PolyMatrix>) -> Result<Shared<TruncSeries>> {
    let (n, d) = dims(a);
    let m = n * d + 1;
    let series = a.map(|p| p.to_series_matrix(m));
    det_modx_series(ctx, &series)
}

/// Where the interpolation nodes of [`det_modx_general`] come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PointSource {
    /// Drawn from the public coin.
    #[default]
    Public,
    /// Each player contributes a random summand and the sums are opened;
    /// one extra round.
    Revealed,
}

/// Determinant of any shared polynomial matrix (11 rounds, 12 with
/// revealed points): det(z_j·I − A) at 2n+1 series z_j with distinct
/// constant terms, combined at 0 with Lagrange weights over the series ring.
pub fn det_modx_general(
    ctx: &mut ProtocolContext,
    a: &Shared<PolyMatrix>,
    source: PointSource,
) -> Result<Shared<TruncSeries>> {
    let (n, d) = dims(a);
    let m = n * d + 1;
    let field = ctx.field();
    let bits = (field.modulus() as f64).log2();
    if small_order(bits, n + 1).is_some() {
        return Err(Error::domain(format!("{n}×{n} determinants need q > {n}")));
    }
    ctx.scope("det_modx_general", |ctx| {
        let count = small_order(bits, 2 * n + 1).unwrap_or(2 * n + 1);
        let shape = SeriesShape { field, m };
        let zs = match source {
            PointSource::Public => {
                let mut zs: Vec<TruncSeries> = Vec::with_capacity(count);
                while zs.len() < count {
                    let z = TruncSeries::random(&shape, ctx.coin());
                    if zs.iter().all(|w| w.constant_term() != z.constant_term()) {
                        zs.push(z);
                    }
                }
                zs
            }
            PointSource::Revealed => {
                let draws: Vec<Shared<TruncSeries>> = (0..count).map(|_| rand_share(ctx, &shape)).collect();
                let opened = reveal_many(ctx, &draws.iter().collect::<Vec<_>>(), "points")?;
                let mut zs: Vec<TruncSeries> = Vec::with_capacity(count);
                for z in opened {
                    if zs.iter().all(|w| w.constant_term() != z.constant_term()) {
                        zs.push(z);
                    }
                }
                zs
            }
        };
        let series = a.map(|p| p.to_series_matrix(m));
        let results = ctx.par_map("point", zs.iter(), |ctx, _, z| {
            let shifted = series.neg().add_public(&Matrix::diagonal(&vec![z.clone(); n]));
            det_modx_series(ctx, &shifted)
        });
        combine_at_zero(ctx, n, zs, results)
    })
}
