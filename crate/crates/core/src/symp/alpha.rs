use alloc::vec::Vec;

use crate::gf2::{BitMatrix, QuadraticForm};
use crate::perm::{conjugating_element, GroupElement, PermGroup, PermRep, Permutation};
use crate::symp::{form_action, orthogonal_stabilizer, SpModel};
use crate::{Error, Result};

const N: usize = 6;
const ORDER: usize = 720;

fn p6(text: &str) -> Permutation {
    Permutation::parse_cycles(text, N).expect("valid constant")
}

/// The labeling of the genus-two twists by adjacent transpositions:
/// `T_i -> (i i+1)` for `i = 1..4` and `T_0 -> (5 6)`.
pub fn adjacent_transposition_labels() -> PermRep {
    PermRep::from_pairs(
        N,
        [("T1", "(1 2)"), ("T2", "(2 3)"), ("T3", "(3 4)"), ("T4", "(4 5)"), ("T0", "(5 6)")]
            .into_iter()
            .map(|(n, c)| (n, p6(c))),
    )
    .expect("valid constant")
}

/// The exceptional automorphism on the adjacent transpositions.
pub fn alpha_generator_images() -> Vec<(Permutation, Permutation)> {
    [
        ("(1 2)", "(1 2)(3 5)(4 6)"),
        ("(2 3)", "(1 3)(2 4)(5 6)"),
        ("(3 4)", "(1 2)(3 6)(4 5)"),
        ("(4 5)", "(1 3)(2 5)(4 6)"),
        ("(5 6)", "(1 2)(3 4)(5 6)"),
    ]
    .into_iter()
    .map(|(a, b)| (p6(a), p6(b)))
    .collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lehmer-code rank of a permutation of six points.
fn rank(p: &Permutation) -> usize {
    let im = p.images();
    (0..N).fold(0, |acc, i| {
        let smaller = im[i + 1..].iter().filter(|&&x| x < im[i]).count();
        acc + smaller * factorial(N - 1 - i)
    })
}

fn unrank(mut r: usize) -> Permutation {
    let mut pool: Vec<u32> = (0..N as u32).collect();
    let mut images = Vec::with_capacity(N);
    for i in 0..N {
        let f = factorial(N - 1 - i);
        images.push(pool.remove(r / f));
        r %= f;
    }
    Permutation::from_images(images).expect("bijection")
}

/// An endomorphism of the symmetric group on six points, stored as its
/// value on every element (indexed by Lehmer rank).
#[derive(Clone, Debug, PartialEq)]
pub struct AutomorphismTable {
    images: Vec<Permutation>,
}

impl AutomorphismTable {
    /// Extends generator assignments multiplicatively by walking the Cayley
    /// graph; fails if two words for the same element disagree or the
    /// generators do not generate.
    pub fn from_generator_images(assignments: &[(Permutation, Permutation)]) -> Result<Self> {
        let mut images: Vec<Option<Permutation>> = alloc::vec![None; ORDER];
        let id = Permutation::identity(N);
        images[rank(&id)] = Some(id.clone());
        let mut queue = alloc::vec![id];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k].clone();
            let tx = images[rank(&x)].clone().expect("queued elements are assigned");
            for (s, ts) in assignments {
                let y = s.compose(&x);
                let ty = ts.compose(&tx);
                match &images[rank(&y)] {
                    Some(prev) if *prev != ty => {
                        return Err(Error::Invalid(alloc::format!("assignment not multiplicative at {y}")))
                    }
                    Some(_) => {}
                    None => {
                        images[rank(&y)] = Some(ty);
                        queue.push(y);
                    }
                }
            }
            k += 1;
        }
        let images = images.into_iter().collect::<Option<Vec<_>>>();
        images
            .map(|images| AutomorphismTable { images })
            .ok_or_else(|| Error::Invalid("assignments do not generate".into()))
    }

    /// Conjugation `x -> c x c^-1`.
    pub fn conjugation(c: &Permutation) -> Self {
        AutomorphismTable { images: all_elements().iter().map(|x| c.conjugate(x)).collect() }
    }

    pub fn apply(&self, x: &Permutation) -> &Permutation {
        &self.images[rank(x)]
    }

    /// `self o other`.
    pub fn compose(&self, other: &AutomorphismTable) -> AutomorphismTable {
        AutomorphismTable { images: other.images.iter().map(|y| self.apply(y).clone()).collect() }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = [false; ORDER];
        self.images.iter().all(|y| !core::mem::replace(&mut seen[rank(y)], true))
    }

    /// `t(x y) = t(x) t(y)` for all elements `x` and all `y` in `gens`.
    pub fn is_multiplicative_on(&self, gens: &[Permutation]) -> bool {
        all_elements()
            .iter()
            .all(|x| gens.iter().all(|y| *self.apply(&x.compose(y)) == self.apply(x).compose(self.apply(y))))
    }

    pub fn image_of_group(&self, group: &PermGroup) -> Result<PermGroup> {
        PermGroup::new(N, group.generators().iter().map(|g| self.apply(g).clone()).collect())
    }
}

/// The 720 permutations of six points in rank order.
pub fn all_elements() -> Vec<Permutation> {
    (0..ORDER).map(unrank).collect()
}

pub fn alpha_table() -> AutomorphismTable {
    AutomorphismTable::from_generator_images(&alpha_generator_images()).expect("alpha is well defined")
}

/// A `c` with `t(x) = c x c^-1` for every `x`, if any (checked on the
/// adjacent transpositions, which generate).
pub fn is_inner(t: &AutomorphismTable) -> Option<Permutation> {
    let gens: Vec<Permutation> = adjacent_transposition_labels().permutations();
    all_elements().into_iter().find(|c| gens.iter().all(|s| c.conjugate(s) == *t.apply(s)))
}

/// A fixed isomorphism from the genus-two model of `Sp(4, 2)` to the
/// symmetric group on six points, sending each twist generator to its
/// adjacent transposition label. It is the action on the six refinements
/// with Arf invariant 1, relabeled by `conjugator`.
#[derive(Clone, Debug)]
pub struct S6Identification {
    forms: Vec<QuadraticForm>,
    conjugator: Permutation,
}

impl S6Identification {
    pub fn new(model: &SpModel) -> Result<Self> {
        if model.g() != 2 {
            return Err(Error::GenusOutOfRange(model.g()));
        }
        let (forms, action) = form_action(model.generators(), &model.canonical_form(true))?;
        let labels = adjacent_transposition_labels();
        let names: Vec<&str> = labels.names().collect();
        let conjugator = conjugating_element(&labels, &action.restrict(&names)?)?
            .ok_or_else(|| Error::Invalid("form action does not match the labeling".into()))?;
        Ok(S6Identification { forms, conjugator })
    }

    pub fn conjugator(&self) -> &Permutation {
        &self.conjugator
    }

    /// Image of a symplectic matrix.
    pub fn map_matrix(&self, m: &BitMatrix) -> Result<Permutation> {
        let inv = m.try_inverse().ok_or(Error::NotAnIsometry)?;
        let images = self
            .forms
            .iter()
            .map(|q| {
                let moved = q.act_by_inverse(&inv);
                self.forms.iter().position(|f| *f == moved).map(|i| i as u32).ok_or(Error::NotAnIsometry)
            })
            .collect::<Result<Vec<u32>>>()?;
        let rho = Permutation::from_images(images)?;
        Ok(self.conjugator.conjugate(&rho))
    }

    /// Image of a subgroup of the model's vector action.
    pub fn map_group(&self, model: &SpModel, group: &PermGroup) -> Result<PermGroup> {
        let gens = group
            .generators()
            .iter()
            .map(|p| self.map_matrix(&model.matrix_of(p)?))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(N, gens)
    }
}

/// `alpha` applied to the stabilizer of the canonical Arf-1 form, inside the
/// six-point model of `Sp(4, 2)`.
pub fn alpha_twisted_subgroup(model: &SpModel) -> Result<PermGroup> {
    let ident = S6Identification::new(model)?;
    let o_minus = orthogonal_stabilizer(model, &model.canonical_form(true))?;
    alpha_table().image_of_group(&ident.map_group(model, &o_minus)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::conjugate_subgroups;
    use crate::symp::build_sp;

    #[test]
    fn rank_is_a_bijection() {
        let all = all_elements();
        assert_eq!(all.len(), ORDER);
        for (r, p) in all.iter().enumerate() {
            assert_eq!(rank(p), r);
        }
        assert!(all[0].is_identity());
    }

    #[test]
    fn alpha_values() {
        let t = alpha_table();
        assert_eq!(*t.apply(&p6("(1 2)")), p6("(1 2)(3 5)(4 6)"));
        assert_eq!(*t.apply(&p6("(5 6)")), p6("(1 2)(3 4)(5 6)"));
        assert!(t.apply(&Permutation::identity(N)).is_identity());
        assert!(t.is_bijective());
        assert!(t.is_multiplicative_on(&adjacent_transposition_labels().permutations()));
    }

    #[test]
    fn alpha_is_outer_and_squares_to_inner() {
        let t = alpha_table();
        assert_eq!(is_inner(&t), None);
        let c = is_inner(&t.compose(&t)).expect("square is inner");
        for x in all_elements().iter().step_by(37) {
            assert_eq!(c.conjugate(x), *t.apply(t.apply(x)));
        }
    }

    #[test]
    fn inner_detection() {
        let c = p6("(1 2)");
        assert_eq!(is_inner(&AutomorphismTable::conjugation(&c)), Some(c));
    }

    #[test]
    fn bad_assignment_rejected() {
        let mut gens = alpha_generator_images();
        gens[0].1 = p6("(1 2)");
        assert!(AutomorphismTable::from_generator_images(&gens).is_err());
        assert!(AutomorphismTable::from_generator_images(&gens[..2]).is_err());
    }

    #[test]
    fn identification_labels_generators() {
        let model = build_sp(2).unwrap();
        let ident = S6Identification::new(&model).unwrap();
        for (name, s) in adjacent_transposition_labels().iter() {
            assert_eq!(&ident.map_matrix(model.generators().get(name).unwrap()).unwrap(), s);
        }
        assert_eq!(ident.map_group(&model, model.group()).unwrap().order(), 720);
    }

    #[test]
    fn twisted_subgroup_not_conjugate_to_o_minus() {
        let model = build_sp(2).unwrap();
        let ident = S6Identification::new(&model).unwrap();
        let o_minus = ident.map_group(&model, &orthogonal_stabilizer(&model, &model.canonical_form(true)).unwrap()).unwrap();
        let twisted = alpha_twisted_subgroup(&model).unwrap();
        assert_eq!(twisted.order(), 120);
        let s6 = PermGroup::symmetric(N);
        assert_eq!(conjugate_subgroups(&s6, &o_minus, &twisted), None);
        // Point stabilizer versus transitive subgroup.
        assert!(!o_minus.is_transitive());
        assert!(twisted.is_transitive());
    }

    #[test]
    fn twisted_o_plus_is_conjugate() {
        let model = build_sp(2).unwrap();
        let ident = S6Identification::new(&model).unwrap();
        let o_plus = ident.map_group(&model, &orthogonal_stabilizer(&model, &model.canonical_form(false)).unwrap()).unwrap();
        let twisted = alpha_table().image_of_group(&o_plus).unwrap();
        assert_eq!(twisted.order(), 72);
        assert!(conjugate_subgroups(&PermGroup::symmetric(N), &o_plus, &twisted).is_some());
    }

    #[test]
    fn wrong_genus_rejected() {
        assert!(alpha_twisted_subgroup(&build_sp(3).unwrap()).is_err());
    }
}
