use super::beaver::{beaver_mul_many, reveal_many};
use super::units::{rand_unit_pair, MaskRing};
use crate::engine::ProtocolContext;
use crate::error::{Error, LeakSignal, Result};
use crate::sharing::Shared;

/// Product of t shared units in 5 rounds, independent of t.
///
/// With unit pairs (r_j, r_j⁻¹), j = 0..t, the players open
/// y_j = x_j·r_{j−1}·r_j⁻¹; the public product telescopes to
/// (Π x_j)·r_0·r_t⁻¹ and is corrected by a sharing of r_0⁻¹·r_t.
pub fn fan_in_mul<R: MaskRing>(ctx: &mut ProtocolContext, xs: &[Shared<R>]) -> Result<Shared<R>> {
    let t = xs.len();
    if t == 0 {
        return Err(Error::domain("fan-in product of no operands"));
    }
    ctx.scope("fan_in", |ctx| {
        let shape = xs[0].value(1).shape();
        let pairs = ctx.par_map("pair", 0..=t, |ctx, _, _| rand_unit_pair::<R>(ctx, &shape));
        let pairs = pairs.into_iter().collect::<Result<Vec<_>>>()?;

        let mut ops: Vec<(&Shared<R>, &Shared<R>)> = (1..=t).map(|j| (&pairs[j - 1].0, &pairs[j].1)).collect();
        ops.push((&pairs[0].1, &pairs[t].0));
        let mut steps = beaver_mul_many(ctx, &ops)?;
        let correction = steps.pop().expect("correction term");

        let masked: Vec<_> = xs.iter().zip(&steps).collect();
        let masked = beaver_mul_many(ctx, &masked)?;
        let opened = reveal_many(ctx, &masked.iter().collect::<Vec<_>>(), "fan_in")?;
        if opened.iter().any(|y| !y.is_unit()) {
            ctx.note_leak();
            return Err(Error::Leak(LeakSignal::NonUnit));
        }
        let product = ctx.public(|| {
            let (first, rest) = opened.split_first().expect("t ≥ 1");
            rest.iter().fold(first.clone(), |acc, y| acc.mul(y))
        });
        Ok(correction.mul_public(&product))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fp, PrimeField, RingElement, SeriesShape, TruncSeries};
    use crate::engine::run;
    use crate::sharing::Dealer;

    #[test]
    fn field_products() {
        let f = PrimeField::new(7).unwrap();
        let mut d = Dealer::new(1);
        let deal = |d: &mut Dealer, v: &[u64]| v.iter().map(|&x| d.deal(&f.elem(x), 3).unwrap()).collect::<Vec<_>>();
        let xs = deal(&mut d, &[1, 1, 1]);
        assert!(run(3, f, 1, None, |ctx| fan_in_mul(ctx, &xs)).unwrap().output.open().is_one());
        let xs = deal(&mut d, &[2, 3, 4]);
        let out = run(3, f, 2, None, |ctx| fan_in_mul(ctx, &xs)).unwrap();
        assert_eq!(out.output.open().value(), 3);
        assert_eq!(out.meter.rounds, 5);
    }

    #[test]
    fn series_cube() {
        let f = PrimeField::new(7).unwrap();
        let a = TruncSeries::from_u64(f, &[1, 1, 0]).unwrap();
        let mut d = Dealer::new(2);
        let xs: Vec<_> = (0..3).map(|_| d.deal(&a, 2).unwrap()).collect();
        let out = run(2, f, 3, None, |ctx| fan_in_mul(ctx, &xs)).unwrap();
        assert_eq!(out.output.open().coeff_values(), vec![1, 3, 3]);
    }

    #[test]
    fn rounds_do_not_depend_on_length() {
        let f = PrimeField::new(101).unwrap();
        let shape = SeriesShape { field: f, m: 3 };
        let mut d = Dealer::new(3);
        for t in [1, 2, 4, 8] {
            let plain: Vec<TruncSeries> = (0..t)
                .map(|k| TruncSeries::from_u64(f, &[k as u64 + 1, 5, 7]).unwrap())
                .collect();
            let xs: Vec<_> = plain.iter().map(|x| d.deal(x, 3).unwrap()).collect();
            let out = run(3, f, t as u64, None, |ctx| fan_in_mul(ctx, &xs)).unwrap();
            let expect = plain.iter().fold(TruncSeries::one(f, shape.m), |acc, x| acc.mul(x));
            assert_eq!(out.output.open(), expect);
            assert_eq!(out.meter.rounds, 5, "t = {t}");
        }
    }

    #[test]
    fn non_unit_operand_signalled() {
        let f = PrimeField::new(11).unwrap();
        let mut d = Dealer::new(4);
        let xs: Vec<_> = [3u64, 0, 5].iter().map(|&v| d.deal(&f.elem(v), 2).unwrap()).collect::<Vec<_>>();
        let err = run(2, f, 1, None, |ctx| fan_in_mul::<Fp>(ctx, &xs)).unwrap_err();
        assert!(matches!(err, Error::Leak(LeakSignal::NonUnit)));
    }
}
