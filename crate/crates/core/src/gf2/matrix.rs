use alloc::vec::Vec;
use core::fmt;

use crate::gf2::{mask, BitVector, MAX_DIM};
use crate::perm::{GroupElement, Permutation};
use crate::{Error, Result};

/// A square matrix over GF(2), stored by columns: `cols[j] = M e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    dim: usize,
    cols: Vec<u64>,
}

impl BitMatrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim <= MAX_DIM);
        BitMatrix { dim, cols: (0..dim).map(|j| 1u64 << j).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        BitMatrix { dim, cols: alloc::vec![0; dim] }
    }

    /// Builds from column images `M e_j`.
    pub fn from_columns(dim: usize, cols: Vec<u64>) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        if cols.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: cols.len() });
        }
        let m = mask(dim);
        Ok(BitMatrix { dim, cols: cols.into_iter().map(|c| c & m).collect() })
    }

    /// Builds from rows; bit `j` of `rows[i]` is entry `(i, j)`.
    pub fn from_rows(dim: usize, rows: &[u64]) -> Result<Self> {
        if rows.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: rows.len() });
        }
        let mut cols = alloc::vec![0u64; dim];
        for (i, &r) in rows.iter().enumerate() {
            for (j, c) in cols.iter_mut().enumerate() {
                if (r >> j) & 1 == 1 {
                    *c |= 1 << i;
                }
            }
        }
        BitMatrix::from_columns(dim, cols)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.cols[col] >> row) & 1 == 1
    }

    pub fn rows(&self) -> Vec<u64> {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(0u64, |r, j| r | (((self.cols[j] >> i) & 1) << j)))
            .collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix { dim: self.dim, cols: self.rows() }
    }

    #[inline]
    pub fn apply_bits(&self, x: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = x;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            out ^= self.cols[j];
            rest &= rest - 1;
        }
        out
    }

    pub fn apply(&self, x: BitVector) -> BitVector {
        debug_assert_eq!(x.dim(), self.dim);
        BitVector::new(self.dim, self.apply_bits(x.bits())).expect("same dimension")
    }

    /// `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        debug_assert_eq!(self.dim, other.dim);
        BitMatrix { dim: self.dim, cols: other.cols.iter().map(|&c| self.apply_bits(c)).collect() }
    }

    /// Rank and a basis of the kernel `{x : Mx = 0}`.
    pub fn rank_kernel(&self) -> (usize, Vec<BitVector>) {
        // Row-reduce; bit j of a row is the coefficient of x_j.
        let mut rows = self.rows();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for col in 0..self.dim {
            let Some(p) = (r..self.dim).find(|&i| (rows[i] >> col) & 1 == 1) else { continue };
            rows.swap(r, p);
            for i in 0..self.dim {
                if i != r && (rows[i] >> col) & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            pivots.push(col);
            r += 1;
        }
        let rank = pivots.len();
        let mut kernel = Vec::new();
        for free in (0..self.dim).filter(|c| !pivots.contains(c)) {
            let mut x = 1u64 << free;
            for (k, &pc) in pivots.iter().enumerate() {
                if (rows[k] >> free) & 1 == 1 {
                    x |= 1 << pc;
                }
            }
            kernel.push(BitVector::new(self.dim, x).expect("dimension"));
        }
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        self.rank_kernel().0
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    /// Gauss-Jordan inverse.
    pub fn try_inverse(&self) -> Option<BitMatrix> {
        let n = self.dim;
        let mut rows = self.rows();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let p = (col..n).find(|&i| (rows[i] >> col) & 1 == 1)?;
            rows.swap(col, p);
            inv.swap(col, p);
            for i in 0..n {
                if i != col && (rows[i] >> col) & 1 == 1 {
                    rows[i] ^= rows[col];
                    inv[i] ^= inv[col];
                }
            }
        }
        Some(BitMatrix::from_rows(n, &inv).expect("dimension"))
    }

    /// The permutation induced on the nonzero vectors, where point `p`
    /// (0-based) stands for the vector with bit pattern `p + 1`.
    pub fn nonzero_vector_action(&self) -> Permutation {
        let count = (1u64 << self.dim) - 1;
        let images = (1..=count).map(|v| (self.apply_bits(v) - 1) as u32).collect();
        Permutation::from_images(images).expect("invertible matrix permutes nonzero vectors")
    }

    /// Parses `n` lines of `n` characters from `{0, 1}`; line `i` is row `i`.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let n = lines.len();
        let mut rows = Vec::with_capacity(n);
        for line in &lines {
            let v = BitVector::parse(line)?;
            if v.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
            }
            rows.push(v.bits());
        }
        BitMatrix::from_rows(n, &rows)
    }
}

impl GroupElement for BitMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        self.try_inverse().expect("group elements are invertible")
    }

    fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, &c)| c == 1 << j)
    }

    fn identity_like(&self) -> Self {
        BitMatrix::identity(self.dim)
    }

    fn degree(&self) -> usize {
        self.dim
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().into_iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{}", BitVector::new(self.dim, row).expect("dimension"))?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn identity_and_zero_rank() {
        let (r, k) = BitMatrix::identity(5).rank_kernel();
        assert_eq!((r, k.len()), (5, 0));
        let (r, k) = BitMatrix::zero(4).rank_kernel();
        assert_eq!((r, k.len()), (0, 4));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = BitMatrix::from_rows(4, &[0b0011, 0b0110, 0b0101, 0b0000]).unwrap();
        let (r, ker) = m.rank_kernel();
        assert_eq!(r + ker.len(), 4);
        assert_eq!(r, 2);
        assert!(ker.iter().all(|v| m.apply(*v).is_zero()));
    }

    #[test]
    fn inverse_round_trip() {
        let m = BitMatrix::from_rows(3, &[0b011, 0b110, 0b001]).unwrap();
        let inv = m.try_inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(BitMatrix::zero(3).try_inverse().is_none());
    }

    #[test]
    fn text_format() {
        let m = BitMatrix::from_rows(3, &[0b001, 0b011, 0b100]).unwrap();
        assert_eq!(m.to_string(), "100\n110\n001");
        assert_eq!(BitMatrix::parse("100\n110\n001\n").unwrap(), m);
        assert!(BitMatrix::parse("10\n110").is_err());
    }
}
