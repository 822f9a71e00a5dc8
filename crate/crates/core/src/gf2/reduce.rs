use alloc::vec::Vec;

use crate::gf2::{mask, BilinearForm, BitMatrix, BitVector};
use crate::{Error, Result};

/// The reduction of `(V_h, B)` with `B` the identity form to a symplectic
/// space of dimension `2g`, `h = 2g + 1` or `h = 2g + 2`.
///
/// With `w` the all-ones vector, `w^perp` is the even-weight subspace. For
/// odd `h` the form is nondegenerate on it; for even `h` its radical is
/// `<w>` and we pass to `w^perp / <w>`. The reduced basis is the image of
/// `f_i = e_i + e_{i+1}`, `i = 1..2g`, whose Gram matrix is the chain form
/// (`B(f_i, f_j) = 1` iff `|i - j| = 1`).
#[derive(Clone, Debug)]
pub struct Reduction {
    ambient: usize,
    reduced: BilinearForm,
}

pub fn perp_quotient(form: &BilinearForm, w: BitVector) -> Result<Reduction> {
    let h = form.dim();
    if *form != BilinearForm::identity(h) {
        return Err(Error::Invalid("reduction expects the identity form".into()));
    }
    if w.dim() != h || w != BitVector::all_ones(h) {
        return Err(Error::NotCharacteristicVector);
    }
    if h < 3 {
        return Err(Error::SurfaceOutOfRange(h));
    }
    let g = (h - 1) / 2;
    let lifts: Vec<u64> = (0..2 * g).map(|i| 0b11u64 << i).collect();
    let cols = lifts
        .iter()
        .map(|&a| lifts.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | ((form.eval_bits(a, b) as u64) << j)))
        .collect();
    let reduced = BilinearForm::new(BitMatrix::from_columns(2 * g, cols)?)?;
    Ok(Reduction { ambient: h, reduced })
}

impl Reduction {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn genus(&self) -> usize {
        self.reduced.dim() / 2
    }

    pub fn reduced_form(&self) -> &BilinearForm {
        &self.reduced
    }

    /// Whether `h` is even, so that the all-ones vector spans a radical.
    pub fn has_radical(&self) -> bool {
        self.ambient.is_multiple_of(2)
    }

    /// Representative in `V_h` of a reduced vector.
    pub fn lift(&self, y: BitVector) -> BitVector {
        let bits = (0..self.reduced.dim())
            .filter(|&i| y.get(i))
            .fold(0u64, |acc, i| acc ^ (0b11u64 << i));
        BitVector::new(self.ambient, bits).expect("dimension")
    }

    /// Reduced coordinates of `x`, which must lie in `w^perp` (even weight).
    pub fn project(&self, x: BitVector) -> Result<BitVector> {
        if x.dim() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: x.dim() });
        }
        if x.weight() % 2 == 1 {
            return Err(Error::Invalid("vector is not orthogonal to the all-ones vector".into()));
        }
        // Coordinates in the f-basis are prefix parities.
        let mut c = x.bits();
        let mut shift = 1;
        while shift < 64 {
            c ^= c << shift;
            shift <<= 1;
        }
        c &= mask(self.ambient - 1);
        if self.has_radical() && (c >> (self.ambient - 2)) & 1 == 1 {
            // Subtract w = f_1 + f_3 + .. + f_{h-1}.
            let w_coords = (0..self.ambient - 1).step_by(2).fold(0u64, |acc, i| acc | (1 << i));
            c ^= w_coords;
        }
        BitVector::new(self.reduced.dim(), c & mask(self.reduced.dim()))
    }

    /// The map induced on the reduced space by an isometry of `V_h`.
    pub fn reduce_matrix(&self, m: &BitMatrix) -> Result<BitMatrix> {
        if !BilinearForm::identity(self.ambient).is_preserved_by(m) {
            return Err(Error::NotAnIsometry);
        }
        let cols = (0..self.reduced.dim())
            .map(|i| {
                let image = m.apply(self.lift(BitVector::basis(self.reduced.dim(), i)));
                self.project(image).map(|v| v.bits())
            })
            .collect::<Result<Vec<u64>>>()?;
        BitMatrix::from_columns(self.reduced.dim(), cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_genus_reduction_is_symplectic() {
        for h in 5..=12 {
            let r = perp_quotient(&BilinearForm::identity(h), BitVector::all_ones(h)).unwrap();
            assert_eq!(r.reduced_form().dim(), 2 * ((h - 1) / 2));
            assert!(r.reduced_form().is_alternating());
            assert!(r.reduced_form().is_nondegenerate());
        }
    }

    #[test]
    fn even_genus_all_ones_is_isotropic() {
        let w = BitVector::all_ones(6);
        let b = BilinearForm::identity(6);
        assert!(!b.eval(w, w));
        let r = perp_quotient(&b, w).unwrap();
        assert_eq!(r.project(w).unwrap(), BitVector::zero(4));
    }

    #[test]
    fn project_inverts_lift() {
        let r = perp_quotient(&BilinearForm::identity(7), BitVector::all_ones(7)).unwrap();
        for y in 0..64 {
            let v = BitVector::new(6, y).unwrap();
            assert_eq!(r.project(r.lift(v)).unwrap(), v);
        }
    }

    #[test]
    fn wrong_inputs() {
        let b = BilinearForm::identity(5);
        assert_eq!(perp_quotient(&b, BitVector::basis(5, 0)).unwrap_err(), Error::NotCharacteristicVector);
        assert!(perp_quotient(&BilinearForm::standard_symplectic(2), BitVector::all_ones(4)).is_err());
    }
}
