//! End-to-end checks tying the surface model, the symplectic model and the
//! reconstructed representations together.

use crosscap_core::gf2::BitMatrix;
use crosscap_core::mcg::{epsilon, homology_rep, twist_name, Flavor, GeneratorSystem, U};
use crosscap_core::perm::{commutator, commutator_subgroup, conjugating_element, normal_closure, GroupElement, PermGroup, PermRep, Permutation};
use crosscap_core::symp::{build_sp, form_action, m_indices, sp_order};
use crosscap_core::verify::{build_phi, extension_solve, replay, PhiTable, Sign, TableName};

fn vector_group(mats: &[BitMatrix]) -> PermGroup {
    let degree = (1usize << mats[0].dim()) - 1;
    PermGroup::new(degree, mats.iter().map(|m| m.nonzero_vector_action()).collect()).unwrap()
}

#[test]
fn epsilon_is_onto_the_symplectic_group() {
    for h in 5..=10 {
        let g = (h - 1) / 2;
        let eps = epsilon(h).unwrap();
        let mats: Vec<BitMatrix> = eps.images().cloned().collect();
        assert_eq!(vector_group(&mats).order(), sp_order(g), "h={h}");
    }
}

#[test]
fn twist_image_orders() {
    for h in 5..=10 {
        let g = (h - 1) / 2;
        let system = GeneratorSystem::new(h, Flavor::M).unwrap();
        let full = homology_rep(h).unwrap();
        let twists: Vec<BitMatrix> =
            system.twist_names().iter().map(|n| full.get(n).unwrap().clone()).collect();
        let group = vector_group(&twists);
        let expected = if h % 2 == 0 { sp_order(g) << (2 * g + 1) } else { sp_order(g) };
        assert_eq!(group.order(), expected, "h={h}");
        assert!(group.contains(&full.get(U).unwrap().nonzero_vector_action()));
    }
}

#[test]
fn built_representations_are_involutive_and_transitive() {
    for g in 2..=4 {
        let (minus, plus) = m_indices(g);
        for (sign, degree) in [(Sign::Minus, minus), (Sign::Plus, plus)] {
            let rep = build_phi(g, sign).unwrap();
            assert_eq!(rep.degree() as u128, degree);
            assert!(crosscap_core::perm::is_transitive(rep.degree(), &rep.permutations()));
            assert!(rep.images().all(|x| x.compose(x).is_identity()));
        }
    }
}

fn expect(ext: &crosscap_core::verify::Extension, name: &str, value: &Permutation) {
    assert_eq!(ext.image(name).unwrap(), value, "h={} {:?} {name}", ext.h, ext.flavor);
}

#[test]
fn every_extension_is_unique_with_the_expected_values() {
    for g in 2..=3 {
        let mut bases: Vec<PermRep> = [Sign::Minus, Sign::Plus].iter().map(|&s| build_phi(g, s).unwrap()).collect();
        if g == 2 {
            bases.push(PhiTable::builtin(TableName::Phi1Alpha).with_alias());
        }
        for base in &bases {
            let w = |i: usize| base.get(&twist_name(i)).unwrap().clone();
            let id = Permutation::identity(base.degree());
            for r in 1..=2 {
                for flavor in [Flavor::M, Flavor::T] {
                    let ext = extension_solve(g, r, flavor, base).unwrap();
                    let u = if r == 1 { w(2 * g) } else { w(2 * g + 2) };
                    match flavor {
                        Flavor::M => expect(&ext, "U", &u),
                        Flavor::T => {
                            expect(&ext, "U^2", &id);
                            if ext.h == 5 {
                                expect(&ext, "UT0U^-1", &w(4).conjugate(&w(0)));
                            }
                        }
                    }
                    if r == 2 {
                        expect(&ext, &twist_name(2 * g + 1), &w(2 * g + 2));
                    }
                }
            }
        }
    }
}

#[test]
fn flavor_m_extension_is_the_form_orbit_action() {
    for g in 2..=3 {
        let model = build_sp(g).unwrap();
        for sign in [Sign::Minus, Sign::Plus] {
            let base = build_phi(g, sign).unwrap();
            for r in 1..=2 {
                let h = 2 * g + r;
                let ext = extension_solve(g, r, Flavor::M, &base).unwrap();
                let names = GeneratorSystem::new(h, Flavor::M).unwrap().generator_names();
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                let eps = epsilon(h).unwrap().restrict(&names).unwrap();
                let (_, action) = form_action(&eps, &model.canonical_form(sign.arf())).unwrap();
                let solved = ext.rep.restrict(&names).unwrap();
                assert!(conjugating_element(&action, &solved).unwrap().is_some(), "g={g} r={r} {sign:?}");
            }
        }
    }
}

#[test]
fn replays_hold_for_every_tau() {
    for (m, tau) in replay::tau_cases() {
        for r in replay::odd_minus(m, &tau).unwrap() {
            assert!(r.holds(), "odd minus {} m={m} tau={tau}", r.unknown);
        }
        assert!(replay::even_minus(m, &tau).unwrap().holds(), "even minus m={m} tau={tau}");
        for r in replay::odd_alpha(m, &tau).unwrap() {
            assert!(r.holds(), "odd alpha {} m={m} tau={tau}", r.unknown);
        }
    }
}

#[test]
fn normal_closure_of_one_commutator_is_the_derived_subgroup() {
    for (h, order) in [(5usize, 360u128), (7, sp_order(3))] {
        let eps = epsilon(h).unwrap();
        let mats: Vec<BitMatrix> = eps.images().cloned().collect();
        let group = vector_group(&mats);
        let w = |i: usize| eps.get(&twist_name(i)).unwrap().nonzero_vector_action();
        let closure = normal_closure(&group, &[commutator(&w(1), &w(2))]).unwrap();
        assert_eq!(closure.order(), commutator_subgroup(&group).order());
        assert_eq!(closure.order(), order);
    }
}

#[test]
fn index_arithmetic_guard() {
    for g in 4..=8 {
        let (prev_minus, _) = m_indices(g - 1);
        let (_, plus) = m_indices(g);
        assert!(5 * prev_minus > plus, "g={g}");
    }
}
