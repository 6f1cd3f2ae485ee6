//! Determinants: Berkowitz (division-free, any commutative ring) and
//! Gaussian elimination (fields).

use super::field::Fp;
use super::matrix::Matrix;
use super::poly::Polynomial;
use super::polymatrix::PolyMatrix;
use super::ring::{CommutativeRing, FieldLike};

/// Coefficients of det(λI − A), highest degree first (p[0] = 1).
pub fn berkowitz_charpoly<T: CommutativeRing>(a: &Matrix<T>) -> Vec<T> {
    let n = a.dim();
    let one = a.get(0, 0).one_like();
    let zero = one.zero_like();
    let mut p = vec![one.clone(), a.get(0, 0).neg()];
    for k in 1..n {
        // A_{k+1} = [[A_k, col], [row, corner]]
        let col: Vec<T> = (0..k).map(|i| a.get(i, k).clone()).collect();
        let row: Vec<T> = (0..k).map(|j| a.get(k, j).clone()).collect();
        let sub = a.leading(k);
        let mut c = Vec::with_capacity(k + 2);
        c.push(one.clone());
        c.push(a.get(k, k).neg());
        let mut v = col;
        for step in 0..k {
            let dot = row.iter().zip(&v).fold(zero.clone(), |acc, (r, x)| acc.add(&r.mul(x)));
            c.push(dot.neg());
            if step + 1 < k {
                v = sub.apply(&v);
            }
        }
        // Lower-triangular Toeplitz (k+2)×(k+1) with first column c, times p.
        let next: Vec<T> = (0..k + 2)
            .map(|i| {
                let mut acc = zero.clone();
                for (j, pj) in p.iter().enumerate().take(i + 1) {
                    acc = acc.add(&c[i - j].mul(pj));
                }
                acc
            })
            .collect();
        p = next;
    }
    p
}

/// Division-free determinant over any commutative ring.
pub fn det_berkowitz<T: CommutativeRing>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let p = berkowitz_charpoly(a);
    if n % 2 == 0 {
        p[n].clone()
    } else {
        p[n].neg()
    }
}

/// Determinant by Gaussian elimination with pivot search.
pub fn det_gauss<T: FieldLike>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let mut rows = a.rows();
    let mut det = a.get(0, 0).one_like();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return det.zero_like();
        };
        if piv != col {
            rows.swap(piv, col);
            det = det.neg();
        }
        let pivot = rows[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.try_inverse().expect("nonzero elements are units");
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for c in col..n {
                let t = factor.mul(&rows[col][c]);
                rows[r][c] = rows[r][c].sub(&t);
            }
        }
    }
    det
}

pub fn det_reference_field(a: &Matrix<Fp>) -> Fp {
    det_gauss(a)
}

/// Exact determinant in K[X], computed by Berkowitz without truncation.
pub fn det_reference_polymat(a: &PolyMatrix) -> Polynomial {
    det_berkowitz(&a.to_entry_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;
    use crate::algebra::polymatrix::tests::example_matrix;
    use crate::algebra::ring::{FiniteRing, RingElement};
    use crate::algebra::series::{SeriesShape, TruncSeries};
    use crate::algebra::matrix::MatrixShape;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    /// Independent oracle: Laplace expansion along the first row.
    fn cofactor<T: CommutativeRing>(a: &Matrix<T>) -> T {
        let n = a.dim();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = a.get(0, 0).zero_like();
        for j in 0..n {
            let term = a.get(0, j).mul(&cofactor(&a.minor(0, j)));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn field_examples() {
        let f = gf(7);
        assert_eq!(det_reference_field(&Matrix::from_u64(f, &[&[1, 2], &[3, 4]]).unwrap()).value(), 5);
        assert!(det_reference_field(&Matrix::identity(f, 3)).is_one());
        assert!(det_reference_field(&Matrix::from_u64(f, &[&[1, 2], &[2, 4]]).unwrap()).is_zero());
    }

    #[test]
    fn example_polymatrix_matches_cofactor() {
        for q in [7, 11, 101, 65537] {
            let a = example_matrix(q);
            let det = det_reference_polymat(&a);
            assert_eq!(det, cofactor(&a.to_entry_matrix()));
            assert!(det.degree() <= 6);
        }
    }

    #[test]
    fn polymatrix_examples() {
        let f = gf(101);
        let x = Polynomial::x(f);
        let z = Polynomial::zero(f);
        let diag = PolyMatrix::from_entries(2, 1, &[x.clone(), z.clone(), z.clone(), x.clone()]).unwrap();
        assert_eq!(det_reference_polymat(&diag), x.mul(&x));
        let p = Polynomial::from_u64(f, &[3, 1, 4]);
        let q = Polynomial::from_u64(f, &[1, 5]);
        let eq_rows = PolyMatrix::from_entries(2, 2, &[p.clone(), q.clone(), p, q]).unwrap();
        assert!(det_reference_polymat(&eq_rows).is_zero());
    }

    #[test]
    fn berkowitz_matches_gauss_and_cofactor() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=5 {
            for _ in 0..40 {
                let a = Matrix::<Fp>::random(&MatrixShape { n, inner: gf(13) }, &mut rng);
                let b = det_berkowitz(&a);
                assert_eq!(b, det_gauss(&a));
                assert_eq!(b, cofactor(&a));
            }
        }
    }

    #[test]
    fn berkowitz_over_series_matches_cofactor() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let shape = MatrixShape { n: 3, inner: SeriesShape { field: gf(101), m: 4 } };
        for _ in 0..30 {
            let a = Matrix::<TruncSeries>::random(&shape, &mut rng);
            assert_eq!(det_berkowitz(&a), cofactor(&a));
        }
    }

    #[test]
    fn degree_bound_over_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let f = gf(101);
        for k in 0..500 {
            let (n, d) = (1 + k % 4, (k / 4) % 4);
            let a = PolyMatrix::random(&crate::algebra::PolyMatShape { field: f, n, d }, &mut rng);
            assert!(det_reference_polymat(&a).degree() <= (n * d) as isize);
        }
    }

    proptest! {
        #[test]
        fn evaluation_commutes_with_det(seed in any::<u64>(), n in 1usize..4, d in 0usize..3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = gf(97);
            let a = PolyMatrix::random(&crate::algebra::PolyMatShape { field: f, n, d }, &mut rng);
            let det = det_reference_polymat(&a);
            for _ in 0..20 {
                let alpha = f.random(&mut rng);
                prop_assert_eq!(det_reference_field(&a.eval(alpha)), det.eval(alpha));
            }
        }
    }
}
