use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::mcg::twist_name;
use crate::perm::{centralizer_in_sym, orbit_sizes, PermRep, Permutation};
use crate::symp::{build_sp, form_orbit_action};
use crate::{Error, Result};

/// Which orthogonal subgroup: `Minus` for Arf invariant 1, `Plus` for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn arf(&self) -> bool {
        *self == Sign::Minus
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-" | "minus" => Ok(Sign::Minus),
            "+" | "plus" => Ok(Sign::Plus),
            _ => Err(Error::Invalid(alloc::format!("unknown sign {s:?}"))),
        }
    }
}

/// The transitive representation of the genus-`g` twist generators on the
/// cosets of the orthogonal subgroup of the given sign, realized as the
/// action on quadratic refinements. Names are `T0 .. T{2g}` and `T{2g+2}`.
pub fn build_phi(g: usize, sign: Sign) -> Result<PermRep> {
    if !(2..=crate::symp::MAX_GENUS).contains(&g) {
        return Err(Error::GenusOutOfRange(g));
    }
    form_orbit_action(&build_sp(g)?, sign.arf())
}

fn images(rep: &PermRep, indices: impl Iterator<Item = usize>) -> Result<Vec<Permutation>> {
    indices.map(|i| rep.require(&twist_name(i)).cloned()).collect()
}

/// Orbit sizes (descending) of the generators `T0 .. T{2g-2}`, which
/// generate the genus-`(g-1)` subsurface group.
pub fn restriction_orbits(rep: &PermRep, g: usize) -> Result<Vec<usize>> {
    if g < 3 {
        return Err(Error::GenusOutOfRange(g));
    }
    Ok(orbit_sizes(rep.degree(), &images(rep, 0..=2 * g - 2)?))
}

/// A computed centralizer and the value it should have.
#[derive(Clone, Debug)]
pub struct CentralizerCheck {
    pub order: u128,
    pub elements: Vec<Permutation>,
    pub expected: Vec<Permutation>,
}

impl CentralizerCheck {
    fn new(degree: usize, xs: &[Permutation], mut expected: Vec<Permutation>) -> Result<Self> {
        let c = centralizer_in_sym(degree, xs)?;
        let order = c.order();
        let mut elements = if order <= 720 { c.elements() } else { Vec::new() };
        elements.sort();
        expected.sort();
        expected.dedup();
        Ok(CentralizerCheck { order, elements, expected })
    }

    pub fn holds(&self) -> bool {
        self.order == self.expected.len() as u128 && self.elements == self.expected
    }
}

/// The four centralizer statements for a representation of the genus-`g`
/// generators (`T6` must be present at `g = 2`):
/// (a) `C{w1, w2, w4} = {1, w4}` at `g = 2`;
/// (b) `C{w0 .. w_{2g-1}} = {1, w_{2g+2}}`;
/// (c) `C{w0 .. w_{2g-2}, w_{2g}} = {1, w_{2g}}` for `g >= 3`;
/// (d) the centralizer of all images is trivial.
#[derive(Clone, Debug)]
pub struct CentralizerStatements {
    pub a: Option<CentralizerCheck>,
    pub b: CentralizerCheck,
    pub c: Option<CentralizerCheck>,
    pub d: CentralizerCheck,
}

impl CentralizerStatements {
    pub fn holds(&self) -> bool {
        self.a.as_ref().is_none_or(|x| x.holds()) && self.b.holds() && self.c.as_ref().is_none_or(|x| x.holds()) && self.d.holds()
    }
}

pub fn stated_centralizers(g: usize, rep: &PermRep) -> Result<CentralizerStatements> {
    if g < 2 {
        return Err(Error::GenusOutOfRange(g));
    }
    let m = rep.degree();
    let w = |i: usize| rep.require(&twist_name(i)).cloned();
    let id = Permutation::identity(m);
    let a = if g == 2 {
        Some(CentralizerCheck::new(m, &images(rep, [1, 2, 4].into_iter())?, alloc::vec![id.clone(), w(4)?])?)
    } else {
        None
    };
    let b = CentralizerCheck::new(m, &images(rep, 0..2 * g)?, alloc::vec![id.clone(), w(2 * g + 2)?])?;
    let c = if g >= 3 {
        let xs = images(rep, (0..=2 * g - 2).chain([2 * g]))?;
        Some(CentralizerCheck::new(m, &xs, alloc::vec![id.clone(), w(2 * g)?])?)
    } else {
        None
    };
    let d = CentralizerCheck::new(m, &rep.permutations(), alloc::vec![id])?;
    Ok(CentralizerStatements { a, b, c, d })
}
