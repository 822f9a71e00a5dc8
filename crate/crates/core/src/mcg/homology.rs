use alloc::vec::Vec;

use crate::gf2::{perp_quotient, BilinearForm, BitMatrix, BitVector, Reduction};
use crate::mcg::{humphries_system, twist_name, U};
use crate::perm::Representation;
use crate::{Error, Result};

const MIN_H: usize = 5;
const MAX_H: usize = 12;

fn check_range(h: usize) -> Result<()> {
    if !(MIN_H..=MAX_H).contains(&h) {
        return Err(Error::SurfaceOutOfRange(h));
    }
    Ok(())
}

/// The swap `e_{h-1} <-> e_h`.
fn crosscap_swap(h: usize) -> BitMatrix {
    let mut cols: Vec<u64> = (0..h).map(|i| 1u64 << i).collect();
    cols.swap(h - 2, h - 1);
    BitMatrix::from_columns(h, cols).expect("permutation matrix")
}

/// Action on `V_h` of `T_0 .. T_{h-1}`, `U` and `T_{2g+2}` (in that order).
/// Twists act by transvections for the identity form; `U` swaps the two
/// rightmost crosscaps.
pub fn homology_rep(h: usize) -> Result<Representation<BitMatrix>> {
    check_range(h)?;
    let form = BilinearForm::identity(h);
    let curves = humphries_system(h)?;
    let mut rep = Representation::new(h);
    let (aux, chain) = curves.split_last().expect("nonempty system");
    for (i, c) in chain {
        rep.push(twist_name(*i), form.transvection(c.class)?)?;
    }
    rep.push(U, crosscap_swap(h))?;
    rep.push(twist_name(aux.0), form.transvection(aux.1.class)?)?;
    Ok(rep)
}

/// `homology_rep(h)` pushed down to the reduced symplectic space of
/// dimension `2g`.
pub fn epsilon(h: usize) -> Result<Representation<BitMatrix>> {
    let full = homology_rep(h)?;
    let red = reduction(h)?;
    let mut rep = Representation::new(red.reduced_form().dim());
    for (name, m) in full.iter() {
        rep.push(name, red.reduce_matrix(m)?)?;
    }
    Ok(rep)
}

/// The chain form on the reduced space of `N_h`.
pub fn reduced_form(h: usize) -> Result<BilinearForm> {
    Ok(reduction(h)?.reduced_form().clone())
}

pub(crate) fn reduction(h: usize) -> Result<Reduction> {
    perp_quotient(&BilinearForm::identity(h), BitVector::all_ones(h))
}

/// Transvections of the reduced space by the reduced classes of
/// `alpha_1 .. alpha_{2g}`, then `alpha_0` and `alpha_{2g+2}` when `g >= 2`,
/// computed on `N_{2g+1}`. Also defined for `g = 1`.
pub fn twist_image_generators(g: usize) -> Result<Vec<(usize, BitMatrix)>> {
    if g == 0 {
        return Err(Error::GenusOutOfRange(g));
    }
    let h = 2 * g + 1;
    let red = reduction(h)?;
    let form = red.reduced_form();
    let mut indices: Vec<(usize, usize, usize)> = (1..=2 * g).map(|i| (i, i, i + 1)).collect();
    if g >= 2 {
        indices.push((0, 1, 4));
        indices.push((2 * g + 2, 1, 2 * g));
    }
    indices
        .into_iter()
        .map(|(name, i, j)| {
            let class = crate::mcg::curve_class(h, i, j)?.class;
            Ok((name, form.transvection(red.project(class)?)?))
        })
        .collect()
}
