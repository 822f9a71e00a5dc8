use alloc::string::String;
use alloc::vec::Vec;

use crate::mcg::{conjugated_twist_name, expected_relations, twist_name, Flavor, GeneratorSystem, Relation, U, U_SQUARED};
use crate::perm::{centralizer_in_sym, GroupElement, PermRep, Permutation};
use crate::{Error, Result};

/// Largest candidate set enumerated per unknown.
const MAX_CANDIDATES: u128 = 1 << 16;

/// The unique extension of a genus-`g` representation to the generators of
/// `N_{2g+r,1}`, with the size of the search that established it.
#[derive(Clone, Debug)]
pub struct Extension {
    pub h: usize,
    pub flavor: Flavor,
    pub rep: PermRep,
    /// Elements of the centralizer each unknown was drawn from.
    pub candidates: usize,
    /// Assignments examined.
    pub examined: usize,
}

/// Generators whose images must commute with the conjugator `a`, with
/// `phi(U x U^-1) = a phi(x) a^-1` on the subsurface group.
fn constraint_indices(g: usize, r: usize) -> Vec<usize> {
    match (g, r) {
        (2, 1) => alloc::vec![1, 2, 4],
        (_, 1) => (0..=2 * g - 2).chain([2 * g]).collect(),
        _ => (0..2 * g).collect(),
    }
}

/// Images of twist generators meeting once must not commute: by the normal
/// generation of the commutator subgroup this would make the whole image
/// abelian.
fn braid_pairs_noncommuting(rep: &PermRep, rels: &[Relation]) -> Result<bool> {
    for rel in rels.iter().filter(|r| r.is_braid_type()) {
        if rel.x.evaluate(rep)?.commutes_with(&rel.y.evaluate(rep)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves for the images of the generators outside the subsurface group.
///
/// Every unknown (`U`, or `U^2` and the hidden conjugator for flavor T, and
/// `T_{2g+1}` when `r = 2`) lies in a centralizer computed from `base`. Each
/// assignment is kept iff it satisfies the relation catalogue, has
/// nonabelian image, and keeps braid-related pairs noncommuting. Exactly
/// one assignment must survive.
pub fn extension_solve(g: usize, r: usize, flavor: Flavor, base: &PermRep) -> Result<Extension> {
    if !(1..=2).contains(&r) || g < 2 {
        return Err(Error::GenusOutOfRange(g));
    }
    let h = 2 * g + r;
    let system = GeneratorSystem::new(h, flavor)?;
    let m = base.degree();
    let w = |i: usize| base.require(&twist_name(i)).cloned();
    let xs: Vec<Permutation> = constraint_indices(g, r).into_iter().map(w).collect::<Result<_>>()?;
    let cent = centralizer_in_sym(m, &xs)?;
    if cent.order() > MAX_CANDIDATES {
        return Err(Error::SearchSpaceTooLarge(cent.order()));
    }
    let pool = cent.elements();
    let rels = expected_relations(h, flavor)?;
    let ones = [Permutation::identity(m)];
    let t_pool: &[Permutation] = if r == 2 { &pool } else { &ones };
    let v_pool: &[Permutation] = if flavor == Flavor::T { &pool } else { &ones };

    let mut survivors: Vec<PermRep> = Vec::new();
    let mut examined = 0;
    for a in &pool {
        for v in v_pool {
            for t in t_pool {
                examined += 1;
                let mut rep = PermRep::new(m);
                for i in 0..h {
                    let img = if i == 2 * g + 1 { t.clone() } else { w(i)? };
                    rep.push(twist_name(i), img)?;
                }
                match flavor {
                    Flavor::M => rep.push(U, a.clone())?,
                    Flavor::T => {
                        rep.push(U_SQUARED, v.clone())?;
                        rep.push(conjugated_twist_name(h - 2), a.conjugate(&w(h - 2)?))?;
                        if h <= 5 {
                            rep.push(conjugated_twist_name(0), a.conjugate(&w(0)?))?;
                        }
                    }
                }
                rep.push(system.auxiliary_name(), w(2 * g + 2)?)?;
                let report = crate::mcg::check_relations(&rep, &rels)?;
                if report.passed() && !report.abelian && braid_pairs_noncommuting(&rep, &rels)? {
                    survivors.push(rep);
                }
            }
        }
    }
    if survivors.len() != 1 {
        return Err(Error::NotUnique(survivors.len()));
    }
    let rep = survivors.pop().expect("one survivor");
    Ok(Extension { h, flavor, rep, candidates: pool.len(), examined })
}

impl Extension {
    pub fn image(&self, name: &str) -> Option<&Permutation> {
        self.rep.get(name)
    }

    /// The generator names of the extended representation, in order.
    pub fn names(&self) -> Vec<String> {
        self.rep.names().map(String::from).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::verify::{build_phi, PhiTable, Sign, TableName};

    #[test]
    fn genus_two_odd_minus() {
        let base = PhiTable::builtin(TableName::Phi2Minus).with_alias();
        let ext = extension_solve(2, 1, Flavor::M, &base).unwrap();
        assert_eq!(ext.image("U").unwrap().to_string(), "(4 5)");
    }

    #[test]
    fn genus_two_even_minus() {
        let base = PhiTable::builtin(TableName::Phi2Minus).with_alias();
        for flavor in [Flavor::M, Flavor::T] {
            let ext = extension_solve(2, 2, flavor, &base).unwrap();
            assert_eq!(ext.image("T5").unwrap().to_string(), "(5 6)");
        }
    }

    #[test]
    fn genus_two_alpha_twist_flavor() {
        let base = PhiTable::builtin(TableName::Phi1Alpha).with_alias();
        let ext = extension_solve(2, 1, Flavor::T, &base).unwrap();
        assert!(ext.image("U^2").unwrap().is_identity());
        assert_eq!(ext.image("UT3U^-1").unwrap().to_string(), "(1 4)(2 6)(3 5)");
        let w = |n: &str| base.get(n).unwrap().clone();
        assert_eq!(ext.image("UT0U^-1").unwrap(), &w("T4").compose(&w("T0")).compose(&w("T4")));
    }

    #[test]
    fn genus_three_values() {
        for sign in [Sign::Minus, Sign::Plus] {
            let base = build_phi(3, sign).unwrap();
            let ext = extension_solve(3, 1, Flavor::M, &base).unwrap();
            assert_eq!(ext.image("U"), base.get("T6"));
            let ext = extension_solve(3, 2, Flavor::M, &base).unwrap();
            assert_eq!(ext.image("U"), base.get("T8"));
            assert_eq!(ext.image("T7"), base.get("T8"));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let base = PhiTable::builtin(TableName::Phi2Minus).with_alias();
        assert!(extension_solve(2, 3, Flavor::M, &base).is_err());
        assert!(extension_solve(1, 1, Flavor::M, &base).is_err());
    }

    #[test]
    fn corrupted_base_has_no_unique_extension() {
        let mut base = PermRep::new(6);
        for (n, p) in PhiTable::builtin(TableName::Phi2Minus).with_alias().iter() {
            let img = if n == "T4" { Permutation::parse_cycles("(1 2)", 6).unwrap() } else { p.clone() };
            base.push(n, img).unwrap();
        }
        assert!(extension_solve(2, 1, Flavor::M, &base).is_err());
    }
}
