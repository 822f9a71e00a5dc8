use alloc::vec::Vec;

use crate::gf2::{mask, parity, BitMatrix, BitVector};
use crate::{Error, Result};

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    gram: BitMatrix,
}

impl BilinearForm {
    pub fn new(gram: BitMatrix) -> Result<Self> {
        if gram != gram.transpose() {
            return Err(Error::Invalid("Gram matrix is not symmetric".into()));
        }
        Ok(BilinearForm { gram })
    }

    /// The dot product: identity Gram matrix.
    pub fn identity(dim: usize) -> Self {
        BilinearForm { gram: BitMatrix::identity(dim) }
    }

    /// Standard symplectic form on `(a_1, b_1, .., a_g, b_g)`.
    pub fn standard_symplectic(g: usize) -> Self {
        let cols = (0..2 * g).map(|j| 1u64 << (j ^ 1)).collect();
        BilinearForm { gram: BitMatrix::from_columns(2 * g, cols).expect("dimension") }
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &BitMatrix {
        &self.gram
    }

    #[inline]
    pub fn eval_bits(&self, x: u64, y: u64) -> bool {
        parity(x & self.gram.apply_bits(y))
    }

    pub fn eval(&self, x: BitVector, y: BitVector) -> bool {
        self.eval_bits(x.bits(), y.bits())
    }

    /// `B(e_i, e_i) = 0` for every basis vector.
    pub fn is_alternating(&self) -> bool {
        (0..self.dim()).all(|i| !self.gram.get(i, i))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    /// Does `m` satisfy `B(mx, my) = B(x, y)`, i.e. `m^T G m = G`?
    pub fn is_preserved_by(&self, m: &BitMatrix) -> bool {
        m.dim() == self.dim() && m.transpose().mul(&self.gram).mul(m) == self.gram
    }

    /// The transvection `x -> x + B(x, a) a`.
    pub fn transvection(&self, a: BitVector) -> Result<BitMatrix> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: a.dim() });
        }
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
        if self.eval(a, a) {
            return Err(Error::NotIsotropic);
        }
        let cols = (0..self.dim())
            .map(|j| {
                let e = 1u64 << j;
                if self.eval_bits(e, a.bits()) { e ^ a.bits() } else { e }
            })
            .collect();
        BitMatrix::from_columns(self.dim(), cols)
    }

    /// A basis `(a_1, b_1, .., a_g, b_g)` with `B(a_i, b_i) = 1` and every
    /// other pairing zero.
    pub fn symplectic_basis(&self) -> Result<Vec<BitVector>> {
        if !self.is_alternating() {
            return Err(Error::NotAlternating);
        }
        if self.dim() % 2 == 1 || !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let mut rest: Vec<u64> = (0..self.dim()).map(|i| 1u64 << i).collect();
        let mut basis = Vec::with_capacity(self.dim());
        while let Some(a) = rest.first().copied() {
            let Some(bpos) = rest.iter().position(|&b| self.eval_bits(a, b)) else {
                return Err(Error::DegenerateForm);
            };
            let b = rest[bpos];
            rest.remove(bpos);
            rest.remove(0);
            for v in rest.iter_mut() {
                let mut w = *v;
                if self.eval_bits(*v, b) {
                    w ^= a;
                }
                if self.eval_bits(*v, a) {
                    w ^= b;
                }
                *v = w;
            }
            basis.push(BitVector::new(self.dim(), a)?);
            basis.push(BitVector::new(self.dim(), b)?);
        }
        Ok(basis)
    }
}

/// A quadratic refinement `q` of an alternating nondegenerate form `B`:
/// `q(x + y) = q(x) + q(y) + B(x, y)`. Stored by its values on the
/// standard basis (bit `i` is `q(e_{i+1})`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    form: BilinearForm,
    values: u64,
}

impl QuadraticForm {
    pub fn new(form: BilinearForm, values: u64) -> Result<Self> {
        if !form.is_alternating() {
            return Err(Error::NotAlternating);
        }
        if !form.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let values = values & mask(form.dim());
        Ok(QuadraticForm { form, values })
    }

    /// All `2^dim` refinements of `form`, ordered by basis values.
    pub fn all_refinements(form: &BilinearForm) -> Result<Vec<QuadraticForm>> {
        let n = form.dim();
        (0..1u64 << n).map(|v| QuadraticForm::new(form.clone(), v)).collect()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn values(&self) -> u64 {
        self.values
    }

    pub fn eval_bits(&self, x: u64) -> bool {
        let mut acc = parity(self.values & x);
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Cross terms B(e_i, e_j) for j > i in the support.
            acc ^= parity(self.form.gram().columns()[i] & rest);
        }
        acc
    }

    pub fn eval(&self, x: BitVector) -> bool {
        self.eval_bits(x.bits())
    }

    /// Arf invariant `sum q(a_i) q(b_i)` over a symplectic basis.
    pub fn arf(&self) -> bool {
        let basis = self.form.symplectic_basis().expect("refined form is symplectic");
        basis.chunks(2).fold(false, |acc, pair| acc ^ (self.eval(pair[0]) & self.eval(pair[1])))
    }

    /// The left action `(M q)(x) = q(M^-1 x)`.
    pub fn act(&self, m: &BitMatrix) -> Result<QuadraticForm> {
        if !self.form.is_preserved_by(m) {
            return Err(Error::NotAnIsometry);
        }
        let inv = m.try_inverse().ok_or(Error::NotAnIsometry)?;
        Ok(self.act_by_inverse(&inv))
    }

    /// `x -> q(inv x)` where `inv` is already known to be the inverse of an
    /// isometry.
    pub fn act_by_inverse(&self, inv: &BitMatrix) -> QuadraticForm {
        let values = (0..self.form.dim())
            .fold(0u64, |acc, i| acc | ((self.eval_bits(inv.columns()[i]) as u64) << i));
        QuadraticForm { form: self.form.clone(), values }
    }
}
