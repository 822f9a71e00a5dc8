//! Permutation-group engine.

mod cycles;
mod element;
mod group;
mod gset;
mod ops;
mod permutation;
mod representation;

pub use element::GroupElement;
pub use group::PermGroup;
pub use gset::{centralizer_in_sym, conjugating_element};
pub use ops::{coset_action, normal_closure, commutator, commutator_subgroup, conjugate_subgroups};
pub use permutation::Permutation;
pub use representation::{PermRep, Representation};

use alloc::vec::Vec;

use crate::{Error, Result};

/// The orbit of `point` under `gens`, in breadth-first discovery order.
pub fn orbit(degree: usize, gens: &[Permutation], point: u32) -> Result<Vec<u32>> {
    if point as usize >= degree {
        return Err(Error::PointOutOfRange { point: point as usize, degree });
    }
    check_degrees(degree, gens)?;
    let mut seen = alloc::vec![false; degree];
    Ok(orbit_from(gens, point, &mut seen))
}

fn orbit_from(gens: &[Permutation], point: u32, seen: &mut [bool]) -> Vec<u32> {
    seen[point as usize] = true;
    let mut out = alloc::vec![point];
    let mut k = 0;
    while k < out.len() {
        let x = out[k];
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

/// Partition of the points into orbits, ordered by smallest point; each
/// orbit is listed in discovery order from its smallest point.
pub fn orbits(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = alloc::vec![false; degree];
    let mut out = Vec::new();
    for x in 0..degree as u32 {
        if !seen[x as usize] {
            out.push(orbit_from(gens, x, &mut seen));
        }
    }
    out
}

pub fn is_transitive(degree: usize, gens: &[Permutation]) -> bool {
    degree <= 1 || orbits(degree, gens).len() == 1
}

/// Orbit sizes, sorted descending.
pub fn orbit_sizes(degree: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut sizes: Vec<usize> = orbits(degree, gens).iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

pub(crate) fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(Error::DegreeMismatch { expected: degree, found: g.degree() }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_generators_give_singletons() {
        let orbs = orbits(4, &[]);
        assert_eq!(orbs, [[0], [1], [2], [3]]);
        assert!(!is_transitive(4, &[]));
    }

    #[test]
    fn orbit_errors() {
        assert!(orbit(3, &[], 3).is_err());
        assert!(orbit(3, &[Permutation::identity(4)], 0).is_err());
    }

    #[test]
    fn orbit_of_point() {
        let g = Permutation::parse_cycles("(1 3)(2 4 5)", 6).unwrap();
        assert_eq!(orbit(6, core::slice::from_ref(&g), 1).unwrap(), [1, 3, 4]);
        assert_eq!(orbit_sizes(6, &[g]), [3, 2, 1]);
    }
}
