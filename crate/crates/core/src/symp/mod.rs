//! Concrete symplectic groups over GF(2), their orthogonal subgroups, and
//! the exceptional automorphism of the symmetric group on six points.

mod alpha;

pub use alpha::{
    adjacent_transposition_labels, alpha_generator_images, alpha_table, alpha_twisted_subgroup, is_inner,
    AutomorphismTable, S6Identification,
};

use alloc::vec::Vec;

use crate::gf2::{BilinearForm, BitMatrix, QuadraticForm};
use crate::mcg::{twist_image_generators, twist_name};
use crate::perm::{PermGroup, PermRep, Permutation, Representation};
use crate::{Error, Result};

pub const MAX_GENUS: usize = 5;

/// `(m_g^-, m_g^+) = (2^{g-1}(2^g - 1), 2^{g-1}(2^g + 1))`, the numbers of
/// quadratic refinements with Arf invariant 1 and 0.
pub fn m_indices(g: usize) -> (u128, u128) {
    assert!(g >= 1, "genus must be positive");
    let half = 1u128 << (g - 1);
    let full = 1u128 << g;
    (half * (full - 1), half * (full + 1))
}

/// `|Sp(2g, 2)| = 2^{g^2} prod_{i=1..g} (4^i - 1)`.
pub fn sp_order(g: usize) -> u128 {
    (1..=g as u32).fold(1u128 << (g * g), |acc, i| acc * (4u128.pow(i) - 1))
}

/// `Sp(2g, 2)` realized on the reduced homology of `N_{2g+1}`: the form is
/// the chain form and the generators are the images of the twists `T_0 ..
/// T_{2g}` and `T_{2g+2}` (only `T_1, T_2` when `g = 1`).
#[derive(Clone, Debug)]
pub struct SpModel {
    g: usize,
    form: BilinearForm,
    gens: Representation<BitMatrix>,
    group: PermGroup,
}

pub fn build_sp(g: usize) -> Result<SpModel> {
    if g == 0 || g > MAX_GENUS {
        return Err(Error::GenusOutOfRange(g));
    }
    let mut named = twist_image_generators(g)?;
    named.sort_by_key(|&(i, _)| i);
    let mut gens = Representation::new(2 * g);
    for (i, m) in named {
        gens.push(twist_name(i), m)?;
    }
    let form = crate::mcg::reduced_form(2 * g + 1)?;
    let group = PermGroup::new((1 << (2 * g)) - 1, gens.images().map(|m| m.nonzero_vector_action()).collect())?;
    Ok(SpModel { g, form, gens, group })
}

impl SpModel {
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn generators(&self) -> &Representation<BitMatrix> {
        &self.gens
    }

    /// The generators acting on nonzero vectors (point `p` is the vector
    /// with bits `p + 1`).
    pub fn vector_action(&self) -> PermRep {
        self.gens.map(self.group.degree(), |m| m.nonzero_vector_action()).expect("degrees agree")
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The matrix of an element of the vector action.
    pub fn matrix_of(&self, p: &Permutation) -> Result<BitMatrix> {
        if p.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch { expected: self.group.degree(), found: p.degree() });
        }
        let n = 2 * self.g;
        let cols = (0..n).map(|j| p.apply((1u32 << j) - 1) as u64 + 1).collect();
        BitMatrix::from_columns(n, cols)
    }

    /// All refinements of the model's form with the given Arf invariant,
    /// ordered lexicographically by `(q(e_1), q(e_2), ..)`.
    pub fn forms(&self, arf: bool) -> Vec<QuadraticForm> {
        let mut forms: Vec<QuadraticForm> = QuadraticForm::all_refinements(&self.form)
            .expect("model form is symplectic")
            .into_iter()
            .filter(|q| q.arf() == arf)
            .collect();
        let n = 2 * self.g as u32;
        forms.sort_by_key(|q| q.values().reverse_bits() >> (64 - n));
        forms
    }

    /// The first form of `forms(arf)`.
    pub fn canonical_form(&self, arf: bool) -> QuadraticForm {
        self.forms(arf).swap_remove(0)
    }
}

/// The action of `gens` on the orbit of `q0`, numbered breadth-first from
/// `q0` with generators applied in declared order. Returns the forms in
/// point order and the representation.
pub fn form_action(gens: &Representation<BitMatrix>, q0: &QuadraticForm) -> Result<(Vec<QuadraticForm>, PermRep)> {
    let n = q0.form().dim();
    if gens.degree() != n {
        return Err(Error::DimensionMismatch { expected: n, found: gens.degree() });
    }
    let mut inverses = Vec::with_capacity(gens.len());
    for m in gens.images() {
        if !q0.form().is_preserved_by(m) {
            return Err(Error::NotAnIsometry);
        }
        inverses.push(m.try_inverse().ok_or(Error::NotAnIsometry)?);
    }
    let mut slot = alloc::vec![u32::MAX; 1 << n];
    let mut points = alloc::vec![q0.clone()];
    slot[q0.values() as usize] = 0;
    let mut images: Vec<Vec<u32>> = alloc::vec![Vec::new(); gens.len()];
    let mut k = 0;
    while k < points.len() {
        for (s, inv) in inverses.iter().enumerate() {
            let q = points[k].act_by_inverse(inv);
            let idx = &mut slot[q.values() as usize];
            if *idx == u32::MAX {
                *idx = points.len() as u32;
                points.push(q);
            }
            images[s].push(*idx);
        }
        k += 1;
    }
    let mut rep = PermRep::new(points.len());
    for (name, imgs) in gens.names().zip(images) {
        rep.push(name, Permutation::from_images(imgs)?)?;
    }
    Ok((points, rep))
}

/// Action of the model's generators on the refinements with the given Arf
/// invariant, starting from the canonical one. Degree `m_g^-` for Arf 1 and
/// `m_g^+` for Arf 0.
pub fn form_orbit_action(model: &SpModel, arf: bool) -> Result<PermRep> {
    Ok(form_action(&model.gens, &model.canonical_form(arf))?.1)
}

/// The stabilizer of `q` in the model, as a subgroup of the action on
/// nonzero vectors.
pub fn orthogonal_stabilizer(model: &SpModel, q: &QuadraticForm) -> Result<PermGroup> {
    if q.form() != &model.form {
        return Err(Error::IncompatibleForm);
    }
    let (_, orbit) = form_action(&model.gens, q)?;
    let n = model.group.degree();
    let k = orbit.degree();
    let combined: Vec<Permutation> = model
        .gens
        .images()
        .zip(orbit.images())
        .map(|(m, o)| {
            let mut images = m.nonzero_vector_action().images().to_vec();
            images.extend(o.images().iter().map(|&x| x + n as u32));
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    let big = PermGroup::with_base_prefix(n + k, combined, alloc::vec![n as u32])?;
    let stab = big.stabilizer(n as u32);
    let gens = stab.generators().iter().map(|g| g.restrict_block(0, n).expect("vectors form a block")).collect();
    PermGroup::new(n, gens)
}
