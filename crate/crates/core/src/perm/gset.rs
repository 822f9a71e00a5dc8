//! Maps between sets with a labeled permutation action: equivariant
//! bijections are determined on each orbit by the image of one base point,
//! so centralizers in the full symmetric group and conjugators between
//! representations reduce to extending base-point choices along Schreier
//! trees.

use alloc::vec::Vec;

use crate::perm::{check_degrees, PermGroup, PermRep, Permutation};
use crate::{Error, Result};

const UNSET: u32 = u32::MAX;

/// `(point, image)` pairs of a partial bijection.
type PointMap = Vec<(u32, u32)>;

/// An orbit with its breadth-first Schreier tree: `edges[k]` says
/// `points[k + 1] = gens[gen](parent)`.
struct OrbitTree {
    points: Vec<u32>,
    edges: Vec<(u32, usize)>,
    signature: Vec<usize>,
}

fn orbit_trees(degree: usize, gens: &[Permutation]) -> Vec<OrbitTree> {
    let mut seen = alloc::vec![false; degree];
    let mut trees = Vec::new();
    for start in 0..degree as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut points = alloc::vec![start];
        let mut edges = Vec::new();
        let mut k = 0;
        while k < points.len() {
            let x = points[k];
            for (s, g) in gens.iter().enumerate() {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    points.push(y);
                    edges.push((x, s));
                }
            }
            k += 1;
        }
        let signature = signature(gens, &points);
        trees.push(OrbitTree { points, edges, signature });
    }
    trees
}

/// Orbit size followed by the number of fixed points of each generator on
/// the orbit; equivariant bijections preserve it.
fn signature(gens: &[Permutation], points: &[u32]) -> Vec<usize> {
    let mut sig = alloc::vec![points.len()];
    sig.extend(gens.iter().map(|g| points.iter().filter(|&&x| g.apply(x) == x).count()));
    sig
}

/// Extends `tree.points[0] -> image` to an equivariant injection from the
/// orbit (under `src`) into the points (under `dst`). Points already marked
/// in `taken` may not be used. On success returns `(point, image)` pairs.
fn extend(
    src: &[Permutation],
    tree: &OrbitTree,
    dst: &[Permutation],
    image: u32,
    scratch: &mut [u32],
    taken: &mut [bool],
) -> Option<Vec<(u32, u32)>> {
    let mut assigned: Vec<(u32, u32)> = Vec::with_capacity(tree.points.len());
    let mut ok = true;
    let root = tree.points[0];
    scratch[root as usize] = image;
    if taken[image as usize] {
        ok = false;
    } else {
        taken[image as usize] = true;
        assigned.push((root, image));
        for (k, &(parent, s)) in tree.edges.iter().enumerate() {
            let q = tree.points[k + 1];
            let y = dst[s].apply(scratch[parent as usize]);
            scratch[q as usize] = y;
            if taken[y as usize] {
                ok = false;
                break;
            }
            taken[y as usize] = true;
            assigned.push((q, y));
        }
    }
    if ok {
        'check: for &x in &tree.points {
            let mx = scratch[x as usize];
            for (g, h) in src.iter().zip(dst) {
                if scratch[g.apply(x) as usize] != h.apply(mx) {
                    ok = false;
                    break 'check;
                }
            }
        }
    }
    for &(x, y) in &assigned {
        scratch[x as usize] = UNSET;
        taken[y as usize] = false;
    }
    scratch[root as usize] = UNSET;
    ok.then_some(assigned)
}

/// Centralizer of `xs` in the full symmetric group on `m` points.
///
/// Orbits of `<xs>` are grouped into isomorphism classes; the centralizer is
/// the product over classes of `Aut(orbit) wr S_k`, and its generators are
/// the automorphisms of one orbit per class plus a transposition and a
/// cycle permuting the isomorphic orbits.
pub fn centralizer_in_sym(m: usize, xs: &[Permutation]) -> Result<PermGroup> {
    check_degrees(m, xs)?;
    let trees = orbit_trees(m, xs);
    let mut scratch = alloc::vec![UNSET; m];
    let mut taken = alloc::vec![false; m];

    // classes[c] = (representative tree index, [(tree index, map from representative)])
    let mut classes: Vec<(usize, Vec<(usize, PointMap)>)> = Vec::new();
    for (t, tree) in trees.iter().enumerate() {
        let mut placed = false;
        for (rep, members) in classes.iter_mut() {
            let rep_tree = &trees[*rep];
            if rep_tree.signature != tree.signature {
                continue;
            }
            let found = tree
                .points
                .iter()
                .find_map(|&y| extend(xs, rep_tree, xs, y, &mut scratch, &mut taken));
            if let Some(map) = found {
                members.push((t, map));
                placed = true;
                break;
            }
        }
        if !placed {
            let id: Vec<(u32, u32)> = tree.points.iter().map(|&x| (x, x)).collect();
            classes.push((t, alloc::vec![(t, id)]));
        }
    }

    let mut gens = Vec::new();
    for (rep, members) in &classes {
        let rep_tree = &trees[*rep];
        for &y in &rep_tree.points[1..] {
            if let Some(map) = extend(xs, rep_tree, xs, y, &mut scratch, &mut taken) {
                gens.push(perm_from_pairs(m, map.iter().copied()));
            }
        }
        let k = members.len();
        if k >= 2 {
            let phi = &members[1].1;
            let pairs = phi.iter().copied().chain(phi.iter().map(|&(a, b)| (b, a)));
            gens.push(perm_from_pairs(m, pairs.into_iter()));
        }
        if k >= 3 {
            // O_j -> O_{j+1} via phi_{j+1} o phi_j^-1, O_k -> O_1 via phi_k^-1.
            let mut pairs = Vec::new();
            for j in 0..k {
                let next = (j + 1) % k;
                for (idx, &(_, img)) in members[j].1.iter().enumerate() {
                    pairs.push((img, members[next].1[idx].1));
                }
            }
            gens.push(perm_from_pairs(m, pairs.into_iter()));
        }
    }
    PermGroup::new(m, gens)
}

fn perm_from_pairs(m: usize, pairs: impl Iterator<Item = (u32, u32)>) -> Permutation {
    let mut images: Vec<u32> = (0..m as u32).collect();
    for (x, y) in pairs {
        images[x as usize] = y;
    }
    Permutation::from_images_unchecked(images)
}

/// Finds `y` with `phi(x) = y * psi(x) * y^-1` for every generator `x`, or
/// `None` if the representations are not conjugate.
///
/// Such `y` is an equivariant bijection from the `psi`-action to the
/// `phi`-action. Orbits are matched greedily; this is exhaustive because
/// orbit isomorphism is an equivalence relation.
pub fn conjugating_element(phi: &PermRep, psi: &PermRep) -> Result<Option<Permutation>> {
    if !phi.same_names(psi) {
        let names: Vec<&str> = phi.names().collect();
        return Err(Error::NameMismatch(alloc::format!("expected generators {names:?}")));
    }
    if phi.degree() != psi.degree() {
        return Err(Error::DegreeMismatch { expected: phi.degree(), found: psi.degree() });
    }
    let m = phi.degree();
    let dst: Vec<Permutation> = phi.permutations();
    let src: Vec<Permutation> =
        phi.names().map(|n| psi.get(n).expect("names checked").clone()).collect();
    let src_trees = orbit_trees(m, &src);
    let dst_trees = orbit_trees(m, &dst);
    let mut used = alloc::vec![false; dst_trees.len()];
    let mut scratch = alloc::vec![UNSET; m];
    let mut taken = alloc::vec![false; m];
    let mut images = alloc::vec![UNSET; m];

    for tree in &src_trees {
        let mut matched = false;
        for (d, dtree) in dst_trees.iter().enumerate() {
            if used[d] || dtree.signature != tree.signature {
                continue;
            }
            let found =
                dtree.points.iter().find_map(|&y| extend(&src, tree, &dst, y, &mut scratch, &mut taken));
            if let Some(map) = found {
                for (x, y) in map {
                    images[x as usize] = y;
                }
                used[d] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    Ok(Some(Permutation::from_images_unchecked(images)))
}
