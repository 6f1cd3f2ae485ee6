use crate::algebra::{det_gauss, lagrange_weights_at_zero, FieldLike, Matrix};
use crate::engine::ProtocolContext;
use crate::error::{Error, LeakSignal, Result};
use crate::protocols::{beaver_mul, inverse_field, rand_inv_mat, reveal, MaskRing};
use crate::sharing::Shared;
use crate::triples::MatrixEntry;

/// Fields the constant-matrix determinant runs over: GF(q) and K[X]/f.
pub trait DetRing: MaskRing + FieldLike + MatrixEntry {}

impl<T: MaskRing + FieldLike + MatrixEntry> DetRing for T {}

/// Determinant of a shared invertible matrix (9 rounds): A is blinded by a
/// random H of known shared determinant and A·H is opened.
pub fn det_field_invertible<R: DetRing>(ctx: &mut ProtocolContext, a: &Shared<Matrix<R>>) -> Result<Shared<R>> {
    let n = a.value(1).dim();
    let inner = a.value(1).get(0, 0).shape();
    ctx.scope("det_invertible", |ctx| {
        let (h, det_h) = rand_inv_mat::<R>(ctx, n, &inner, true)?;
        let det_h = det_h.expect("determinant requested");
        let (inv, e) = ctx.par2(
            |ctx| inverse_field(ctx, &det_h),
            |ctx| {
                let blinded = beaver_mul(ctx, a, &h)?;
                reveal(ctx, &blinded, "blinded_matrix")
            },
        );
        let (inv, e) = (inv?, e?);
        let det_e = ctx.public(|| det_gauss(&e));
        if det_e.is_zero() {
            ctx.note_leak();
            return Err(Error::Leak(LeakSignal::Singular));
        }
        Ok(inv.mul_public(&det_e))
    })
}

/// Size of a field given log2 of its order, when it is small.
pub(crate) fn small_order(bits: f64, bound: usize) -> Option<usize> {
    (bits < (bound as f64).log2()).then(|| bits.exp2().round() as usize)
}

/// Determinant of any shared matrix (9 rounds): det(zI − A) at 2n+1
/// public points in parallel, at most n of which are eigenvalues, then
/// the characteristic polynomial is interpolated at 0.
pub fn det_field_general<R: DetRing>(ctx: &mut ProtocolContext, a: &Shared<Matrix<R>>) -> Result<Shared<R>> {
    let n = a.value(1).dim();
    let inner = a.value(1).get(0, 0).shape();
    let bits = R::witness_bits(&inner);
    if small_order(bits, n + 1).is_some() {
        return Err(Error::domain(format!("{n}×{n} determinants need more than {n} field elements")));
    }
    ctx.scope("det_general", |ctx| {
        let count = small_order(bits, 2 * n + 1).unwrap_or(2 * n + 1);
        let mut zs: Vec<R> = Vec::with_capacity(count);
        while zs.len() < count {
            let z = R::random(&inner, ctx.coin());
            if !zs.contains(&z) {
                zs.push(z);
            }
        }
        let results = ctx.par_map("point", zs.iter(), |ctx, _, z| {
            let shifted = a.neg().add_public(&Matrix::diagonal(&vec![z.clone(); n]));
            det_field_invertible(ctx, &shifted)
        });
        combine_at_zero(ctx, n, zs, results)
    })
}

/// (−1)^n Σ l_j(0)·[χ(z_j)] over the first n+1 successful points.
pub(crate) fn combine_at_zero<R: crate::algebra::UnitRing>(
    ctx: &mut ProtocolContext,
    n: usize,
    zs: Vec<R>,
    results: Vec<Result<Shared<R>>>,
) -> Result<Shared<R>> {
    let mut good = Vec::with_capacity(n + 1);
    for (z, r) in zs.into_iter().zip(results) {
        match r {
            Ok(s) => good.push((z, s)),
            Err(Error::Leak(LeakSignal::Singular)) => {}
            Err(e) => return Err(e),
        }
    }
    if good.len() < n + 1 {
        return Err(Error::RetriesExhausted(format!("only {} of {} points avoided the spectrum", good.len(), n + 1)));
    }
    good.truncate(n + 1);
    let nodes: Vec<R> = good.iter().map(|(z, _)| z.clone()).collect();
    let weights = ctx.public(|| -> Result<Vec<R>> {
        let w = lagrange_weights_at_zero(&nodes)?;
        Ok(if n % 2 == 1 { w.iter().map(|x| x.neg()).collect() } else { w })
    })?;
    let terms: Vec<(R, &Shared<R>)> = weights.into_iter().zip(good.iter().map(|(_, s)| s)).collect();
    Shared::ring_combination(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{det_reference_field, FiniteRing, Fp, MatrixShape, PrimeField};
    use crate::engine::run;
    use crate::sharing::Dealer;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn invertible_matrices() {
        let f = gf(101);
        let shape = MatrixShape { n: 3, inner: f };
        let mut d = Dealer::new(1);
        run(3, f, 2, None, |ctx| {
            let mut seen = 0;
            while seen < 200 {
                let a = Matrix::<Fp>::random(&shape, d.rng());
                if det_reference_field(&a).is_zero() {
                    continue;
                }
                seen += 1;
                let s = d.deal(&a, 3)?;
                assert_eq!(det_field_invertible(ctx, &s)?.open(), det_reference_field(&a));
            }
            Ok(())
        })
        .unwrap();
        let id = Dealer::new(2).deal(&Matrix::identity(f, 3), 2).unwrap();
        let out = run(2, f, 1, None, |ctx| det_field_invertible(ctx, &id)).unwrap();
        assert!(out.output.open().is_one());
        assert_eq!(out.meter.rounds, 9);
    }

    #[test]
    fn singular_matrix_signalled() {
        let f = gf(101);
        let a = Matrix::from_u64(f, &[&[1, 2], &[2, 4]]).unwrap();
        let s = Dealer::new(3).deal(&a, 3).unwrap();
        let out = run(3, f, 1, None, |ctx| det_field_invertible(ctx, &s));
        assert!(matches!(out, Err(Error::Leak(LeakSignal::Singular))));
    }

    #[test]
    fn general_matrices() {
        let f = gf(101);
        let mut d = Dealer::new(4);
        let shape = MatrixShape { n: 3, inner: f };
        run(3, f, 5, None, |ctx| {
            for k in 0..200 {
                let mut a = Matrix::<Fp>::random(&shape, d.rng());
                if k % 3 == 0 {
                    let row: Vec<Fp> = (0..3).map(|j| *a.get(0, j)).collect();
                    for (j, v) in row.into_iter().enumerate() {
                        a.set(2, j, v);
                    }
                }
                let s = d.deal(&a, 3)?;
                assert_eq!(det_field_general(ctx, &s)?.open(), det_reference_field(&a));
            }
            Ok(())
        })
        .unwrap();
    }

    #[test]
    fn scalar_and_small_fields() {
        let f = gf(7);
        let s = Dealer::new(5).deal(&Matrix::from_u64(f, &[&[4]]).unwrap(), 2).unwrap();
        let out = run(2, f, 1, None, |ctx| det_field_general(ctx, &s)).unwrap();
        assert_eq!(out.output.open().value(), 4);
        assert_eq!(out.meter.rounds, 9);

        // fewer than 2n+1 field elements: every element is used
        let f = gf(3);
        let a = Matrix::from_u64(f, &[&[0, 2], &[1, 0]]).unwrap();
        let s = Dealer::new(6).deal(&a, 2).unwrap();
        let out = run(2, f, 3, None, |ctx| det_field_general(ctx, &s)).unwrap();
        assert_eq!(out.output.open(), det_reference_field(&a));

        let f = gf(2);
        let s = Dealer::new(6).deal(&Matrix::identity(f, 2), 2).unwrap();
        assert!(matches!(run(2, f, 3, None, |ctx| det_field_general(ctx, &s)), Err(Error::Domain(_))));
    }
}
