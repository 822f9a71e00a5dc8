//! Linear algebra over GF(2) with bilinear and quadratic forms.
//!
//! Vectors are packed into a `u64` (bit `i` is coordinate `i + 1`), so the
//! dimension is capped at 64. Matrices act on the left on column vectors.

mod form;
mod matrix;
mod reduce;
mod vector;

pub use form::{BilinearForm, QuadraticForm};
pub use matrix::BitMatrix;
pub use reduce::{perp_quotient, Reduction};
pub use vector::BitVector;

pub(crate) const MAX_DIM: usize = 64;

#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

#[inline]
pub(crate) fn mask(dim: usize) -> u64 {
    if dim == 64 { u64::MAX } else { (1u64 << dim) - 1 }
}
