//! Beaver triples: the trusted dealer, the store consumed by protocols,
//! the binary file format and the interactive generators.

mod beaver;
mod dealer;
mod file;
mod generate;
mod kind;
mod store;

pub use beaver::{BeaverTriple, MatrixEntry, Triplable};
pub(crate) use beaver::ext_from_kind;
pub use dealer::verify_plain;
pub use file::TripleFile;
pub use generate::{bt_extfield_dealer, bt_field_dealer, bt_mat, bt_poly, bt_polymat};
pub use kind::{TripleCategory, TripleKind};
pub use store::{RawTriple, Supply, TripleStore};
