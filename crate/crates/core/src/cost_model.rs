//! Closed-form costs of the determinant pipelines, as implemented.
//!
//! Counts assume no fallback batch is ever needed in the Las Vegas
//! samplers (probability at most 2^-λ per sampler) and q ≥ 2n+1.

use crate::determinant::Method;

/// Matrix-multiplication exponent used by the asymptotic tables; products
/// are computed classically.
pub const MATMUL_EXPONENT: f64 = 3.0;

/// Extra candidate batches a Las Vegas sampler may draw before giving up.
pub const MAX_FALLBACK_BATCHES: usize = 8;

fn candidates(lambda: u32, log2_fail: f64) -> usize {
    if log2_fail >= 0.0 {
        return usize::MAX;
    }
    ((lambda as f64 / -log2_fail).ceil() as usize).max(1)
}

/// Candidates drawn so that some (r, s) pair with r·s a unit exists except
/// with probability 2^-λ, for a witness ring of size 2^`log2_size`.
pub fn unit_candidates(log2_size: f64, lambda: u32) -> usize {
    // fail = 1 − (1 − p)², p = 2^-b
    let p = (-log2_size).exp2();
    candidates(lambda, (p * (2.0 - p)).log2())
}

/// Masks drawn so that some mask r ≠ 0 exists except with probability 2^-λ.
pub fn inverse_candidates(log2_size: f64, lambda: u32) -> usize {
    candidates(lambda, -log2_size)
}

/// Evaluation points used by the general-case subroutines.
pub fn general_points(n: usize, q: u64) -> usize {
    ((2 * n + 1) as u64).min(q) as usize
}

/// Triples consumed, by report column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TripleCounts {
    pub field: u64,
    pub series: u64,
    pub mat: u64,
    pub polymat: u64,
    pub extfield: u64,
}

/// Field-like triples and matrix triples of one invertible-case field
/// determinant over a ring whose unit test costs `ku` and inverse `ki`.
fn invertible_case(n: usize, ku: usize, ki: usize) -> (u64, u64) {
    let n = n as u64;
    let (ku, ki) = (ku as u64, ki as u64);
    ((4 * n + 1) * (ku + 1) + ki, 2)
}

pub fn rounds(method: Method) -> u64 {
    match method {
        Method::EvalInterpol | Method::ModF => 9,
        Method::ModX | Method::ModXGeneral => 11,
    }
}

pub fn expected_triples(method: Method, n: usize, d: usize, q: u64, lambda: u32) -> TripleCounts {
    let bits = (q as f64).log2();
    let ku = unit_candidates(bits, lambda) as u64;
    let p = general_points(n, q) as u64;
    let (n64, d64) = (n as u64, d as u64);
    match method {
        Method::EvalInterpol => {
            let (fld, mat) = invertible_case(n, ku as usize, inverse_candidates(bits, lambda));
            let pts = n64 * d64 + 1;
            TripleCounts { field: pts * p * fld, mat: pts * p * mat, ..Default::default() }
        }
        Method::ModX | Method::ModXGeneral => {
            let one = TripleCounts {
                field: (2 * n64 + 1) * ku,
                series: (2 * n64 + 1) * (ku + 2),
                polymat: 2,
                ..Default::default()
            };
            if method == Method::ModX {
                one
            } else {
                TripleCounts { field: p * one.field, series: p * one.series, polymat: p * one.polymat, ..one }
            }
        }
        Method::ModF => {
            let kbits = (n * d + 1) as f64 * bits;
            let (ext, mat) = invertible_case(n, unit_candidates(kbits, lambda), inverse_candidates(kbits, lambda));
            TripleCounts { extfield: p * ext, polymat: p * mat, ..Default::default() }
        }
    }
}

/// Field triples needed to build the field and series triples of a mod-X
/// run with the interactive generators.
pub fn modx_field_equivalent(counts: &TripleCounts, n: usize, d: usize) -> u64 {
    counts.field + counts.series * (2 * (n * d + 1) as u64 - 1)
}
