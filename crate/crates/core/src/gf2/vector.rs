use core::fmt;

use crate::gf2::{mask, MAX_DIM};
use crate::{Error, Result};

/// A vector in GF(2)^dim.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitVector {
    dim: u8,
    bits: u64,
}

impl BitVector {
    pub fn new(dim: usize, bits: u64) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(BitVector { dim: dim as u8, bits: bits & mask(dim) })
    }

    pub fn zero(dim: usize) -> Self {
        BitVector::new(dim, 0).expect("dimension checked by caller")
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        BitVector { dim: dim as u8, bits: 1 << i }
    }

    /// `e_i + .. + e_j` for 0-based `i <= j`.
    pub fn interval(dim: usize, i: usize, j: usize) -> Self {
        assert!(i <= j && j < dim);
        BitVector { dim: dim as u8, bits: mask(j + 1) & !mask(i) }
    }

    pub fn all_ones(dim: usize) -> Self {
        BitVector { dim: dim as u8, bits: mask(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Parses a line of `0`/`1` characters, first character = first coordinate.
    pub fn parse(line: &str) -> Result<Self> {
        let line = line.trim();
        let mut bits = 0u64;
        for (i, c) in line.chars().enumerate() {
            match c {
                '0' => {}
                '1' if i < MAX_DIM => bits |= 1 << i,
                _ => return Err(Error::Invalid(alloc::format!("bad vector line {line:?}"))),
            }
        }
        BitVector::new(line.chars().count(), bits)
    }
}

impl core::ops::Add for BitVector {
    type Output = BitVector;
    fn add(self, rhs: BitVector) -> BitVector {
        debug_assert_eq!(self.dim, rhs.dim);
        BitVector { dim: self.dim, bits: self.bits ^ rhs.bits }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
