use alloc::vec::Vec;

use crate::perm::{GroupElement, PermGroup, PermRep, Permutation};
use crate::{Error, Result};

/// `[a, b] = a b a^-1 b^-1`.
pub fn commutator<E: GroupElement>(a: &E, b: &E) -> E {
    a.compose(b).compose(&a.inverse()).compose(&b.inverse())
}

/// Smallest subgroup of `group` containing `elems` and normalized by it.
pub fn normal_closure(group: &PermGroup, elems: &[Permutation]) -> Result<PermGroup> {
    for e in elems {
        if !group.try_contains(e)? {
            return Err(Error::NotInGroup);
        }
    }
    let degree = group.degree();
    let mut closure = PermGroup::new(degree, Vec::new())?;
    let mut pending: Vec<Permutation> = elems.to_vec();
    while let Some(x) = pending.pop() {
        if closure.contains(&x) {
            continue;
        }
        closure = closure.closure(core::slice::from_ref(&x));
        for g in group.generators() {
            pending.push(g.conjugate(&x));
        }
    }
    Ok(closure)
}

/// Derived subgroup: normal closure of the generator commutators.
pub fn commutator_subgroup(group: &PermGroup) -> PermGroup {
    let gens = group.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            comms.push(commutator(a, b));
        }
    }
    normal_closure(group, &comms).expect("commutators lie in the group")
}

/// Action of the named generators of `group` on the cosets `rH` of the
/// subgroup `H = { x : member(x) }`.
///
/// Cosets are numbered in breadth-first order from `H` itself (point 1 in
/// cycle notation), applying generators in their declared order. The result
/// is transitive and the stabilizer of the first point is `H`.
pub fn coset_action(
    group: &PermRep,
    member: impl Fn(&Permutation) -> bool,
    index_bound: usize,
) -> Result<PermRep> {
    let degree = group.degree();
    let gens: Vec<&Permutation> = group.images().collect();
    let mut reps: Vec<Permutation> = alloc::vec![Permutation::identity(degree)];
    let mut rep_inverses: Vec<Permutation> = alloc::vec![Permutation::identity(degree)];
    let mut images: Vec<Vec<u32>> = alloc::vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < reps.len() {
        for (s, g) in gens.iter().enumerate() {
            let moved = g.compose(&reps[i]);
            let found = rep_inverses.iter().position(|ri| member(&ri.compose(&moved)));
            let j = match found {
                Some(j) => j,
                None => {
                    if reps.len() == index_bound {
                        return Err(Error::IndexBoundExceeded(index_bound));
                    }
                    rep_inverses.push(moved.inverse());
                    reps.push(moved);
                    reps.len() - 1
                }
            };
            images[s].push(j as u32);
        }
        i += 1;
    }
    let mut rep = PermRep::new(reps.len());
    for ((name, _), imgs) in group.iter().zip(images) {
        rep.push(name, Permutation::from_images(imgs)?)?;
    }
    Ok(rep)
}

/// Exhaustive search for `c` in `ambient` with `c b c^-1 = a`.
pub fn conjugate_subgroups(ambient: &PermGroup, a: &PermGroup, b: &PermGroup) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    ambient
        .elements()
        .into_iter()
        .find(|c| b.generators().iter().all(|x| a.contains(&c.conjugate(x))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn normal_closure_in_s4() {
        let s4 = PermGroup::symmetric(4);
        let n = normal_closure(&s4, &[p("(1 2)(3 4)", 4)]).unwrap();
        assert_eq!(n.order(), 4);
        let a4 = normal_closure(&s4, &[p("(1 2 3)", 4)]).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(normal_closure(&s4, &[Permutation::identity(4)]).unwrap().order(), 1);
    }

    #[test]
    fn normal_closure_rejects_outsiders() {
        let a4 = PermGroup::new(4, alloc::vec![p("(1 2 3)", 4), p("(2 3 4)", 4)]).unwrap();
        assert_eq!(normal_closure(&a4, &[p("(1 2)", 4)]).unwrap_err(), Error::NotInGroup);
    }

    #[test]
    fn derived_subgroup_of_s5() {
        assert_eq!(commutator_subgroup(&PermGroup::symmetric(5)).order(), 60);
    }

    #[test]
    fn coset_action_on_point_stabilizer() {
        let g = PermRep::from_pairs(4, [("s", p("(1 2)", 4)), ("c", p("(1 2 3 4)", 4))]).unwrap();
        let act = coset_action(&g, |x| x.apply(3) == 3, 10).unwrap();
        assert_eq!(act.degree(), 4);
        assert!(crate::perm::is_transitive(4, &act.permutations()));
        assert!(coset_action(&g, |x| x.apply(3) == 3, 3).is_err());
        let trivial = coset_action(&g, |_| true, 1).unwrap();
        assert_eq!(trivial.degree(), 1);
    }
}
