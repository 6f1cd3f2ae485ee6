//! Shared determinants of polynomial matrices: evaluation/interpolation,
//! the mod X^{nd+1} method and the mod f method.

mod field;
mod modf;
mod modx;

use std::fmt;
use std::str::FromStr;

pub use field::{det_field_general, det_field_invertible, DetRing};
pub use modf::{det_modf, det_modf_ext};
pub use modx::{det_modx, det_modx_general, det_modx_series, rand_mat_poly_det, MaskTriple, PointSource};

use crate::algebra::{Fp, PolyMatrix, Polynomial};
use crate::engine::{CostMeter, ProtocolContext};
use crate::error::{Error, Result};
use crate::sharing::{share_interpolate_field, share_polymatrix_eval, Shared};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    EvalInterpol,
    /// Requires an invertible constant coefficient.
    ModX,
    ModXGeneral,
    ModF,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::EvalInterpol, Method::ModX, Method::ModXGeneral, Method::ModF];
    /// The methods valid on every input.
    pub const GENERAL: [Method; 3] = [Method::EvalInterpol, Method::ModXGeneral, Method::ModF];

    pub fn name(self) -> &'static str {
        match self {
            Method::EvalInterpol => "evalinterp",
            Method::ModX => "modx",
            Method::ModXGeneral => "modx-general",
            Method::ModF => "modf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown method '{s}' (expected evalinterp, modx, modx-general or modf)")))
    }
}

pub(crate) fn dims(a: &Shared<PolyMatrix>) -> (usize, usize) {
    let m = a.value(1);
    (m.dim(), m.d_bound())
}

/// Evaluates at 0..nd, takes each field determinant and interpolates.
pub fn det_eval_interpol(ctx: &mut ProtocolContext, a: &Shared<PolyMatrix>) -> Result<Shared<Polynomial>> {
    let (n, d) = dims(a);
    let field = ctx.field();
    if field.modulus() <= (n * d) as u64 {
        return Err(Error::domain(format!("{} evaluation points need q > {}", n * d + 1, n * d)));
    }
    ctx.scope("det_eval_interpol", |ctx| {
        let points: Vec<Fp> = (0..=(n * d) as u64).map(|x| field.elem(x)).collect();
        let dets = ctx.par_map("point", points.iter(), |ctx, _, &x| {
            let m = share_polymatrix_eval(a, x);
            det_field_general::<Fp>(ctx, &m)
        });
        let pts = points.into_iter().zip(dets).map(|(x, s)| Ok((x, s?))).collect::<Result<Vec<_>>>()?;
        share_interpolate_field(&pts)
    })
}

/// Shared determinant as a polynomial, by any method.
pub fn det_polymat(ctx: &mut ProtocolContext, method: Method, a: &Shared<PolyMatrix>) -> Result<Shared<Polynomial>> {
    match method {
        Method::EvalInterpol => det_eval_interpol(ctx, a),
        Method::ModX => Ok(det_modx(ctx, a)?.map(|s| s.to_polynomial())),
        Method::ModXGeneral => Ok(det_modx_general(ctx, a, PointSource::Public)?.map(|s| s.to_polynomial())),
        Method::ModF => det_modf(ctx, a),
    }
}

/// Output of one method run.
#[derive(Clone, Debug)]
pub struct DetResult {
    pub method: Method,
    pub det: Shared<Polynomial>,
    pub meter: CostMeter,
}

/// Runs the three general methods on one input and checks that they agree.
pub fn compare_methods(ctx: &mut ProtocolContext, a: &Shared<PolyMatrix>) -> Result<(Polynomial, Vec<DetResult>)> {
    let mut rows = Vec::new();
    for method in Method::GENERAL {
        let (det, meter) = ctx.measure(|ctx| ctx.scope(method.name(), |ctx| det_polymat(ctx, method, a)));
        rows.push(DetResult { method, det: det?, meter });
    }
    let det = rows[0].det.open();
    for r in &rows[1..] {
        let other = r.det.open();
        if other != det {
            return Err(Error::Correctness(format!("{} gives {other:?}, {} gives {det:?}", r.method, rows[0].method)));
        }
    }
    Ok((det, rows))
}
