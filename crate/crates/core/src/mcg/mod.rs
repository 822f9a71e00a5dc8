//! Combinatorial model of the nonorientable surface `N_{h,1}` as a disc with
//! `h` crosscaps: the curves `gamma_{i,j}`, the standard twist generators,
//! the crosscap transposition `U`, their mod-2 homology action and the
//! relations they satisfy.

mod homology;
mod relations;

pub use homology::{epsilon, homology_rep, reduced_form, twist_image_generators};
pub use relations::{check_relations, expected_relations, Letter, Relation, RelationKind, RelationReport, Word};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::gf2::BitVector;
use crate::{Error, Result};

/// `N_{h,n}` with `h = 2g + r`, `r` in `{1, 2}`.
///
/// The boundary count only selects between `N_{h,0}` and `N_{h,1}`; the
/// generator images used here are the same for both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub h: usize,
    pub n: usize,
}

impl SurfaceModel {
    pub fn new(h: usize, n: usize) -> Result<Self> {
        if h < 4 || n > 1 {
            return Err(Error::SurfaceOutOfRange(h));
        }
        Ok(SurfaceModel { h, n })
    }

    pub fn g(&self) -> usize {
        (self.h - 1) / 2
    }

    pub fn r(&self) -> usize {
        self.h - 2 * self.g()
    }
}

/// The simple closed curve `gamma_{i,j}` (1-based crosscaps `i..=j`), whose
/// mod-2 class is `e_i + .. + e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Curve {
    pub i: usize,
    pub j: usize,
    pub class: BitVector,
}

impl Curve {
    /// Two-sided exactly when it passes through an even number of crosscaps.
    pub fn two_sided(&self) -> bool {
        (self.j - self.i) % 2 == 1
    }
}

pub fn curve_class(h: usize, i: usize, j: usize) -> Result<Curve> {
    if i < 1 || i > j || j > h || h > crate::gf2::BitVector::all_ones(64).dim() {
        return Err(Error::CurveIndex { h, i, j });
    }
    Ok(Curve { i, j, class: BitVector::interval(h, i - 1, j - 1) })
}

/// Generator set flavor: the full mapping class group or the twist subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    M,
    T,
}

impl core::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Flavor::M),
            "T" | "t" => Ok(Flavor::T),
            _ => Err(Error::Invalid(format!("unknown flavor {s:?}"))),
        }
    }
}

pub fn twist_name(i: usize) -> String {
    format!("T{i}")
}

pub const U: &str = "U";
pub const U_SQUARED: &str = "U^2";

/// Name of the generator `U T_i U^-1`.
pub fn conjugated_twist_name(i: usize) -> String {
    format!("UT{i}U^-1")
}

/// The curves `alpha_0 .. alpha_{h-1}` followed by `alpha_{2g+2}`:
/// `alpha_i = gamma_{i,i+1}`, `alpha_0 = gamma_{1,4}`, `alpha_{2g+2} =
/// gamma_{1,2g}`. For `g = 2`, `alpha_0` and `alpha_6` coincide.
pub fn humphries_system(h: usize) -> Result<Vec<(usize, Curve)>> {
    if h < 5 {
        return Err(Error::SurfaceOutOfRange(h));
    }
    let g = (h - 1) / 2;
    let mut out = alloc::vec![(0, curve_class(h, 1, 4)?)];
    for i in 1..h {
        out.push((i, curve_class(h, i, i + 1)?));
    }
    out.push((2 * g + 2, curve_class(h, 1, 2 * g)?));
    Ok(out)
}

/// The curve `alpha_index` on `N_h`.
pub fn alpha(h: usize, index: usize) -> Result<Curve> {
    humphries_system(h)?
        .into_iter()
        .find(|&(i, _)| i == index)
        .map(|(_, c)| c)
        .ok_or(Error::CurveIndex { h, i: index, j: index })
}

/// Minimal intersection number of two curves of the family: 1 when the
/// crosscap intervals strictly interleave, 0 when disjoint or nested.
pub fn geometric_intersection(c1: &Curve, c2: &Curve) -> usize {
    let interleave = |a: &Curve, b: &Curve| a.i < b.i && b.i <= a.j && a.j < b.j;
    usize::from(interleave(c1, c2) || interleave(c2, c1))
}

/// Named generators of `M(N_{h,1})` (flavor M) or of the twist subgroup
/// (flavor T), plus the auxiliary twist `T_{2g+2}`.
#[derive(Clone, Debug)]
pub struct GeneratorSystem {
    pub surface: SurfaceModel,
    pub flavor: Flavor,
}

impl GeneratorSystem {
    pub fn new(h: usize, flavor: Flavor) -> Result<Self> {
        Ok(GeneratorSystem { surface: SurfaceModel::new(h, 1)?, flavor })
    }

    pub fn twist_names(&self) -> Vec<String> {
        (0..self.surface.h).map(twist_name).collect()
    }

    /// Generators in declared order.
    pub fn generator_names(&self) -> Vec<String> {
        let h = self.surface.h;
        let mut names = self.twist_names();
        match self.flavor {
            Flavor::M => names.push(U.into()),
            Flavor::T => {
                names.push(U_SQUARED.into());
                names.push(conjugated_twist_name(h - 2));
                if h <= 5 {
                    names.push(conjugated_twist_name(0));
                }
            }
        }
        names
    }

    pub fn auxiliary_name(&self) -> String {
        twist_name(2 * self.surface.g() + 2)
    }

    /// `generator_names` followed by the auxiliary twist.
    pub fn all_names(&self) -> Vec<String> {
        let mut names = self.generator_names();
        names.push(self.auxiliary_name());
        names
    }

    /// Words in the flavor-M generators defining each flavor-T generator.
    pub fn derived_words(&self) -> Vec<(String, Word)> {
        let h = self.surface.h;
        let mut out = alloc::vec![(String::from(U_SQUARED), Word::parse("U U"))];
        out.push((conjugated_twist_name(h - 2), Word::conjugate(U, &twist_name(h - 2))));
        if h <= 5 {
            out.push((conjugated_twist_name(0), Word::conjugate(U, &twist_name(0))));
        }
        out
    }
}
