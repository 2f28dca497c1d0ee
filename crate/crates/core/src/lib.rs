//! Exact symmetric functions over the field `Q(q, t)`.

pub mod bases;
pub mod cache;
pub mod identities;
pub mod linalg;
pub mod operators;
pub mod partitions;
pub mod polyengine;
pub mod scalar;
pub mod symfunc;

pub use partitions::Partition;
pub use scalar::{PolyQT, RatQT, Rational, ScalarError};

/// Drop every memoized basis element, determinant and operator term.
pub fn clear_caches() {
    bases::clear_memos();
    operators::clear_memos();
}
