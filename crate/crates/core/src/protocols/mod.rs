//! Interactive protocols: reveal, Beaver multiplication, masked inversion,
//! random units, fan-in products and random invertible matrices.

mod beaver;
mod fanin;
mod randmat;
mod units;

pub use beaver::{beaver_mul, beaver_mul_many, beaver_mul_with, mul_polymat, reveal, reveal_many};
pub use fanin::fan_in_mul;
pub use randmat::{enumerate_masks, rand_inv_mat, rand_inv_polymat};
pub use units::{inverse_field, inverse_series, rand_poly_inv, rand_unit, rand_unit_pair, MaskRing};
