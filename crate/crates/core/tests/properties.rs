//! Algebraic invariants checked on generated inputs.

mod common;

use crosscap_core::gf2::{BitMatrix, QuadraticForm};
use crosscap_core::perm::{centralizer_in_sym, coset_action, orbits, is_transitive, conjugating_element, PermGroup, PermRep, Permutation};
use crosscap_core::symp::{build_sp, m_indices, sp_order, alpha_table, adjacent_transposition_labels};
use crosscap_core::verify::{constraint_search, replay, Constraint};
use proptest::prelude::*;

fn perm(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perms(m: usize, k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(m), k)
}

fn sized_perms(max: usize, k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1..=max).prop_flat_map(move |m| (Just(m), perms(m, k.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative((m, ps) in sized_perms(12, 3..=3)) {
        let (p, q, r) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(p.compose(q).compose(r), p.compose(&q.compose(r)));
        prop_assert_eq!(p.compose(q).inverse(), q.inverse().compose(&p.inverse()));
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.compose(&Permutation::identity(m)), p.clone());
    }

    #[test]
    fn orbits_partition_the_points((m, gens) in sized_perms(12, 0..=3)) {
        let blocks = orbits(m, &gens);
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(all, (0..m as u32).collect::<Vec<_>>());
        for b in &blocks {
            for g in &gens {
                prop_assert!(g.preserves(b));
            }
        }
        prop_assert_eq!(is_transitive(m, &gens), blocks.len() == 1);
    }

    #[test]
    fn cycle_notation_round_trips((m, ps) in sized_perms(15, 1..=1)) {
        let text = ps[0].to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, m).unwrap(), ps[0].clone());
    }

    #[test]
    fn centralizer_elements_commute((m, xs) in sized_perms(10, 0..=2)) {
        let c = centralizer_in_sym(m, &xs).unwrap();
        for u in c.generators() {
            for x in &xs {
                prop_assert!(u.commutes_with(x));
            }
        }
    }

    #[test]
    fn commuting_elements_preserve_fixed_and_moved_sets((m, xs) in sized_perms(9, 1..=1), pick in any::<u64>()) {
        let u = &xs[0];
        let c = centralizer_in_sym(m, &xs).unwrap();
        let v = c.element(pick as u128 % c.order());
        let (support, fixed) = u.support_fixed();
        prop_assert!(v.preserves(&support));
        prop_assert!(v.preserves(&fixed));
    }

    #[test]
    fn conjugated_representation_is_recognized((m, xs) in sized_perms(10, 1..=3), y in (1..=10usize).prop_flat_map(perm)) {
        prop_assume!(y.degree() == m);
        let phi = PermRep::from_pairs(m, xs.iter().enumerate().map(|(i, x)| (format!("g{i}"), x.clone()))).unwrap();
        let psi = phi.conjugated_by(&y);
        let z = conjugating_element(&phi, &psi).unwrap().expect("conjugate by construction");
        for (n, x) in phi.iter() {
            prop_assert_eq!(&z.compose(psi.get(n).unwrap()).compose(&z.inverse()), x);
        }
    }

    #[test]
    fn coset_action_counts((m, gens) in sized_perms(7, 1..=3), hgen in (1..=7usize).prop_flat_map(perm), picks in prop::collection::vec(any::<u64>(), 100)) {
        prop_assume!(hgen.degree() == m);
        let group = PermGroup::new(m, gens.clone()).unwrap();
        let sub = PermGroup::new(m, vec![group.element(hgen.images().iter().map(|&x| x as u128).sum::<u128>() % group.order())]).unwrap();
        let rep = PermRep::from_pairs(m, gens.iter().enumerate().map(|(i, g)| (format!("g{i}"), g.clone()))).unwrap();
        let action = coset_action(&rep, |x| sub.contains(x), 5040).unwrap();
        prop_assert_eq!(action.degree() as u128 * sub.order(), group.order());
        prop_assert!(is_transitive(action.degree(), &action.permutations()));
        for k in picks {
            let x = group.element(k as u128 % group.order());
            let word_image = image_of(&rep, &action, &x, &group);
            prop_assert_eq!(word_image.apply(0) == 0, sub.contains(&x));
        }
    }

    #[test]
    fn matrix_rank_plus_nullity(n in 1usize..=12, seed in prop::collection::vec(any::<u64>(), 12)) {
        let cols: Vec<u64> = seed[..n].iter().map(|c| c & ((1u64 << n) - 1)).collect();
        let m = BitMatrix::from_columns(n, cols).unwrap();
        let (rank, kernel) = m.rank_kernel();
        prop_assert_eq!(rank + kernel.len(), n);
        for v in kernel {
            prop_assert!(m.apply(v).is_zero());
        }
        prop_assert_eq!(m.transpose().rank(), rank);
    }

    #[test]
    fn arf_is_invariant_and_action_is_a_left_action(g in 1usize..=4, i in any::<u64>(), j in any::<u64>(), k in any::<u64>()) {
        let model = build_sp(g).unwrap();
        let order = model.group().order();
        let mat = |x: u64| model.matrix_of(&model.group().element(x as u128 % order)).unwrap();
        let (a, b) = (mat(i), mat(j));
        let forms = QuadraticForm::all_refinements(model.form()).unwrap();
        let q = &forms[k as usize % forms.len()];
        let bq = q.act(&b).unwrap();
        prop_assert_eq!(bq.arf(), q.arf());
        prop_assert_eq!(q.act(&a.mul(&b)).unwrap(), bq.act(&a).unwrap());
    }

    #[test]
    fn constraint_order_does_not_matter(case in 0usize..9, shuffle in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let (m, tau) = replay::tau_cases().swap_remove(case);
        let table = crosscap_core::verify::PhiTable::builtin(crosscap_core::verify::TableName::Phi2Minus).rep;
        let w = |n: &str| table.get(n).unwrap().extended(m).compose(&tau);
        let cs = vec![
            Constraint::CommutesWith(w("T1")),
            Constraint::CommutesWith(w("T2")),
            Constraint::BraidsWith(w("T0")),
            Constraint::BraidsWith(w("T4")),
            Constraint::RestrictsTo(tau.clone()),
        ];
        let reordered: Vec<Constraint> = shuffle.iter().map(|&i| cs[i].clone()).collect();
        prop_assert_eq!(constraint_search(m, &cs).unwrap(), constraint_search(m, &reordered).unwrap());
    }
}

/// The image of a group element under the coset action, found by writing
/// it as a word in the generators via the chain of the ambient group.
fn image_of(rep: &PermRep, action: &PermRep, x: &Permutation, group: &PermGroup) -> Permutation {
    // Breadth-first search over the group for a word reaching `x`.
    let m = rep.degree();
    let mut seen = std::collections::BTreeMap::new();
    seen.insert(Permutation::identity(m), Permutation::identity(action.degree()));
    let mut queue = vec![Permutation::identity(m)];
    let mut k = 0;
    while k < queue.len() {
        let cur = queue[k].clone();
        if &cur == x {
            return seen[&cur].clone();
        }
        let img = seen[&cur].clone();
        for ((_, g), (_, a)) in rep.iter().zip(action.iter()) {
            let next = g.compose(&cur);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), a.compose(&img));
                queue.push(next);
            }
        }
        k += 1;
    }
    panic!("{x} not in group of order {}", group.order());
}

#[test]
fn refinement_counts_by_arf() {
    for g in 1..=5 {
        let model = build_sp(g).unwrap();
        let forms = QuadraticForm::all_refinements(model.form()).unwrap();
        assert_eq!(forms.len(), 1 << (2 * g));
        let odd = forms.iter().filter(|q| q.arf()).count() as u128;
        assert_eq!((odd, forms.len() as u128 - odd), m_indices(g));
    }
}

#[test]
fn orbit_times_stabilizer_is_group_order() {
    for g in 1..=4 {
        let model = build_sp(g).unwrap();
        assert_eq!(model.group().order(), sp_order(g));
        for arf in [true, false] {
            let q = model.canonical_form(arf);
            let orbit = crosscap_core::symp::form_orbit_action(&model, arf).unwrap().degree() as u128;
            let stab = crosscap_core::symp::orthogonal_stabilizer(&model, &q).unwrap().order();
            assert_eq!(orbit * stab, sp_order(g), "g={g} arf={arf}");
        }
    }
}

#[test]
fn alpha_respects_coxeter_relations() {
    let t = alpha_table();
    let gens = adjacent_transposition_labels().permutations();
    // Table order is (1 2), (2 3), (3 4), (4 5), (5 6).
    for (i, a) in gens.iter().enumerate() {
        let ta = t.apply(a);
        assert!(ta.compose(ta).is_identity());
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let tb = t.apply(b);
            if j == i + 1 {
                assert_eq!(ta.compose(tb).compose(ta), tb.compose(ta).compose(tb));
            } else {
                assert!(ta.commutes_with(tb));
            }
        }
    }
    assert!(t.is_bijective());
    assert!(t.is_multiplicative_on(&gens));
}
