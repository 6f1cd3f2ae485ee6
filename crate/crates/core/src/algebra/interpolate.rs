//! Lagrange interpolation over GF(q) with values in any GF(q)-module.

use super::field::Fp;
use super::matrix::Matrix;
use super::poly::Polynomial;
use super::polymatrix::PolyMatrix;
use super::ring::{RingElement, UnitRing};
use crate::error::{Error, Result};

fn check_distinct(xs: &[Fp]) -> Result<()> {
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(Error::domain(format!("duplicate abscissa {a}")));
        }
    }
    Ok(())
}

/// Lagrange basis polynomials l_i(X) = Π_{j≠i} (X − x_j)/(x_i − x_j).
pub fn lagrange_basis(xs: &[Fp]) -> Result<Vec<Polynomial>> {
    let field = xs.first().ok_or_else(|| Error::domain("interpolation needs at least one point"))?.field();
    check_distinct(xs)?;
    xs.iter()
        .enumerate()
        .map(|(i, &xi)| {
            let mut num = Polynomial::one(field);
            let mut den = field.one();
            for (j, &xj) in xs.iter().enumerate() {
                if i != j {
                    num = num.mul(&Polynomial::new(field, vec![-xj, field.one()]));
                    den *= xi - xj;
                }
            }
            Ok(num.scale(den.inv()?))
        })
        .collect()
}

/// Coefficients (ascending) of the interpolant through `(x_i, v_i)`, for
/// values in any module over GF(q).
pub fn interpolate_coeffs<V: RingElement>(points: &[(Fp, V)]) -> Result<Vec<V>> {
    let xs: Vec<Fp> = points.iter().map(|p| p.0).collect();
    let basis = lagrange_basis(&xs)?;
    let zero = points[0].1.zero_like();
    Ok((0..points.len())
        .map(|t| {
            points.iter().zip(&basis).fold(zero.clone(), |acc, ((_, v), l)| {
                let c = l.coeff(t);
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&v.scale(c))
                }
            })
        })
        .collect())
}

pub fn interpolate_field(points: &[(Fp, Fp)]) -> Result<Polynomial> {
    let coeffs = interpolate_coeffs(points)?;
    Ok(Polynomial::new(points[0].0.field(), coeffs))
}

/// Matrix interpolant with degree bound #points − 1.
pub fn interpolate_matrix(points: &[(Fp, Matrix<Fp>)]) -> Result<PolyMatrix> {
    let n = points.first().ok_or_else(|| Error::domain("interpolation needs at least one point"))?.1.dim();
    if points.iter().any(|(_, m)| m.dim() != n) {
        return Err(Error::domain("interpolation points differ in dimension"));
    }
    PolyMatrix::from_coeff_matrices(interpolate_coeffs(points)?)
}

/// Weights l_j(0) = Π_{k≠j} (0 − z_k)/(z_j − z_k) over a commutative ring;
/// every difference z_j − z_k must be a unit.
pub fn lagrange_weights_at_zero<R: UnitRing>(nodes: &[R]) -> Result<Vec<R>> {
    let first = nodes.first().ok_or_else(|| Error::domain("interpolation needs at least one point"))?;
    let one = first.one_like();
    nodes
        .iter()
        .enumerate()
        .map(|(j, zj)| {
            let mut num = one.clone();
            let mut den = one.clone();
            for (k, zk) in nodes.iter().enumerate() {
                if j != k {
                    num = num.mul(&zk.neg());
                    den = den.mul(&zj.sub(zk));
                }
            }
            let inv = den.try_inverse().ok_or_else(|| Error::domain("interpolation nodes do not differ by units"))?;
            Ok(num.mul(&inv))
        })
        .collect()
}
