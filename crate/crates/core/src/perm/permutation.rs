use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::perm::GroupElement;
use crate::{Error, Result};

/// A bijection of `{0, .., degree - 1}`.
///
/// Points are stored 0-based; the cycle-notation text format (see
/// [`Permutation::parse_cycles`] and the `Display` impl) is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if seen[x] {
                return Err(Error::NotAPermutation(alloc::format!("{x} appears twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let x = x as usize;
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(Error::NotAPermutation(alloc::format!(
                        "point {} occurs in two cycles",
                        x + 1
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Transposition of two 0-based points.
    pub fn transposition(degree: usize, a: u32, b: u32) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        images.swap(a as usize, b as usize);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `self * other`: `x -> self(other(x))`.
    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Points moved by `self`, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x as u32 != y)
            .map(|(x, _)| x as u32)
            .collect()
    }

    /// Points fixed by `self`, ascending.
    pub fn fixed_points(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x as u32 == y)
            .map(|(x, _)| x as u32)
            .collect()
    }

    /// The partition of the points into support and fixed set.
    pub fn support_fixed(&self) -> (Vec<u32>, Vec<u32>) {
        (self.support(), self.fixed_points())
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|&(x, &y)| x as u32 != y).map(|(x, _)| x as u32)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    /// Does `self` map `set` onto itself?
    pub fn preserves(&self, set: &[u32]) -> bool {
        let mut member = alloc::vec![false; self.degree()];
        for &x in set {
            member[x as usize] = true;
        }
        set.iter().all(|&x| member[self.apply(x) as usize])
    }

    /// Copy of `self` on a larger point set, fixing the new points.
    pub fn extended(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Restriction to a block `offset..offset + len` that `self` preserves,
    /// renumbered to start at zero.
    pub fn restrict_block(&self, offset: usize, len: usize) -> Option<Permutation> {
        let mut images = Vec::with_capacity(len);
        for x in offset..offset + len {
            let y = self.images[x] as usize;
            if y < offset || y >= offset + len {
                return None;
            }
            images.push((y - offset) as u32);
        }
        Some(Permutation { images })
    }

    /// Relabel points: returns `x -> relabel(self(relabel^-1(x)))`.
    pub fn relabeled(&self, relabel: &[u32]) -> Permutation {
        let mut images = alloc::vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[relabel[x] as usize] = relabel[y as usize];
        }
        Permutation { images }
    }
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }

    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn degree(&self) -> usize {
        self.images.len()
    }
}

impl Permutation {
    /// `self * other`; panics in debug builds on a degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        GroupElement::compose(self, other)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| {
            self.images[other.images[x] as usize] == other.images[y as usize]
        })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
