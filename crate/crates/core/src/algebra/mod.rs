//! Plain (non-secret) algebra over GF(q) and the reference oracles.

pub mod det;
pub mod extfield;
pub mod field;
pub mod interpolate;
pub mod irreducible;
pub mod matrix;
pub mod poly;
pub mod polymatrix;
pub mod ring;
pub mod series;

pub use det::{berkowitz_charpoly, det_berkowitz, det_gauss, det_reference_field, det_reference_polymat};
pub use extfield::{ExtField, ExtFieldElement};
pub use field::{field_ops, is_prime, Fp, PrimeField};
pub use interpolate::{interpolate_field, interpolate_matrix, lagrange_basis, lagrange_weights_at_zero};
pub use irreducible::{irreducible_poly, is_irreducible};
pub use matrix::{Matrix, MatrixShape};
pub use poly::Polynomial;
pub use polymatrix::{PolyMatShape, PolyMatrix};
pub use ring::{CommutativeRing, FieldLike, FiniteRing, RingElement, UnitRing};
pub use series::{SeriesShape, TruncSeries};
