//! Finite group machinery for index computations in mapping class groups of
//! nonorientable surfaces.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`perm`]: permutations, stabilizer chains, centralizers in the full
//!   symmetric group, conjugacy of permutation representations, normal
//!   closures and coset actions.
//! * [`gf2`]: packed linear algebra over GF(2), bilinear and quadratic forms,
//!   transvections and Arf invariants.
//! * [`symp`]: concrete models of `Sp(2g, 2)`, its orthogonal subgroups and
//!   the exceptional outer automorphism of the symmetric group on six points.
//! * [`mcg`]: the crosscap model of `N_{h,1}`, its curve system, the mod-2
//!   homology action of the standard generators and the relation catalogue.
//! * [`verify`]: reconstruction of the small permutation representations and
//!   the constraint solvers used to replay the uniqueness arguments.
//!
//! Composition is always `(p * q)(x) = p(q(x))`: the right factor acts first.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod gf2;
pub mod mcg;
pub mod perm;
pub mod symp;
pub mod verify;

pub use error::{Error, Result};
