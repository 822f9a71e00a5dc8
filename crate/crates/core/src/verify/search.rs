use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::{Error, Result};

/// Largest number of complete assignments the search may have to visit
/// when the degree exceeds 10.
pub const SEARCH_LIMIT: u128 = 10_000_000;
const EXHAUSTIVE_DEGREE: usize = 10;
const UNSET: u32 = u32::MAX;

/// A condition on an unknown permutation `x`. Points are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `x c = c x`
    CommutesWith(Permutation),
    /// `x c x = c x c`
    BraidsWith(Permutation),
    /// `x c^-1 x = c^-1 x c^-1`
    BraidsWithInverseOf(Permutation),
    /// Every point moved by `x` lies in the set.
    SupportWithin(Vec<u32>),
    /// `x` fixes every point of the set.
    FixesPointwise(Vec<u32>),
    /// `x` agrees with `t` on the support of `t`.
    RestrictsTo(Permutation),
}

impl Constraint {
    pub fn holds(&self, x: &Permutation) -> bool {
        match self {
            Constraint::CommutesWith(c) => x.commutes_with(c),
            Constraint::BraidsWith(c) => braids(x, c),
            Constraint::BraidsWithInverseOf(c) => braids(x, &c.inverse()),
            Constraint::SupportWithin(set) => x.support().iter().all(|p| set.contains(p)),
            Constraint::FixesPointwise(set) => set.iter().all(|&p| x.apply(p) == p),
            Constraint::RestrictsTo(t) => t.support().iter().all(|&p| x.apply(p) == t.apply(p)),
        }
    }

    fn degree(&self) -> Option<usize> {
        match self {
            Constraint::CommutesWith(c)
            | Constraint::BraidsWith(c)
            | Constraint::BraidsWithInverseOf(c)
            | Constraint::RestrictsTo(c) => Some(c.degree()),
            _ => None,
        }
    }
}

fn braids(x: &Permutation, c: &Permutation) -> bool {
    x.compose(c).compose(x) == c.compose(x).compose(c)
}

struct Search<'a> {
    m: usize,
    image: Vec<u32>,
    used: Vec<bool>,
    trail: Vec<u32>,
    commuting: Vec<&'a Permutation>,
    commuting_inv: Vec<Permutation>,
    checks: &'a [Constraint],
    found: Vec<Permutation>,
}

impl Search<'_> {
    /// Assigns `p -> y` and everything forced through the commuting
    /// constraints. On conflict the partial assignment is left on the trail.
    fn assign(&mut self, p: u32, y: u32) -> bool {
        let mut queue = alloc::vec![(p, y)];
        while let Some((p, y)) = queue.pop() {
            let cur = self.image[p as usize];
            if cur != UNSET {
                if cur != y {
                    return false;
                }
                continue;
            }
            if self.used[y as usize] {
                return false;
            }
            self.image[p as usize] = y;
            self.used[y as usize] = true;
            self.trail.push(p);
            for (c, ci) in self.commuting.iter().zip(&self.commuting_inv) {
                queue.push((c.apply(p), c.apply(y)));
                queue.push((ci.apply(p), ci.apply(y)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().expect("nonempty trail");
            self.used[self.image[p as usize] as usize] = false;
            self.image[p as usize] = UNSET;
        }
    }

    fn run(&mut self, from: usize) {
        let Some(p) = (from..self.m).find(|&p| self.image[p] == UNSET) else {
            let x = Permutation::from_images(self.image.clone()).expect("complete injective assignment");
            if self.checks.iter().all(|c| c.holds(&x)) {
                self.found.push(x);
            }
            return;
        };
        for y in 0..self.m as u32 {
            if self.used[y as usize] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(p as u32, y) {
                self.run(p + 1);
            }
            self.undo(mark);
        }
    }
}

/// All permutations of `m` points satisfying every constraint, sorted.
///
/// Points pinned by `FixesPointwise`, `SupportWithin` and `RestrictsTo` are
/// assigned first; commuting constraints then propagate each choice along
/// the orbits of the commuting elements. The remaining constraints are
/// checked on complete assignments.
pub fn constraint_search(m: usize, constraints: &[Constraint]) -> Result<Vec<Permutation>> {
    if let Some(d) = constraints.iter().filter_map(Constraint::degree).find(|&d| d != m) {
        return Err(Error::DegreeMismatch { expected: m, found: d });
    }
    let mut pinned: Vec<(u32, u32)> = Vec::new();
    for c in constraints {
        match c {
            Constraint::FixesPointwise(set) => pinned.extend(set.iter().map(|&p| (p, p))),
            Constraint::SupportWithin(set) => {
                pinned.extend((0..m as u32).filter(|p| !set.contains(p)).map(|p| (p, p)))
            }
            Constraint::RestrictsTo(t) => pinned.extend(t.support().into_iter().map(|p| (p, t.apply(p)))),
            _ => {}
        }
    }
    if let Some(&(p, _)) = pinned.iter().find(|&&(p, _)| p as usize >= m) {
        return Err(Error::PointOutOfRange { point: p as usize, degree: m });
    }
    let mut free = alloc::vec![true; m];
    for &(p, _) in &pinned {
        free[p as usize] = false;
    }
    let free = free.iter().filter(|&&f| f).count();
    if m > EXHAUSTIVE_DEGREE {
        let space = (1..=free as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX);
        if space > SEARCH_LIMIT {
            return Err(Error::SearchSpaceTooLarge(space));
        }
    }
    let commuting: Vec<&Permutation> = constraints
        .iter()
        .filter_map(|c| match c {
            Constraint::CommutesWith(c) => Some(c),
            _ => None,
        })
        .collect();
    let mut search = Search {
        m,
        image: alloc::vec![UNSET; m],
        used: alloc::vec![false; m],
        trail: Vec::new(),
        commuting_inv: commuting.iter().map(|c| c.inverse()).collect(),
        commuting,
        checks: constraints,
        found: Vec::new(),
    };
    for (p, y) in pinned {
        if !search.assign(p, y) {
            return Ok(Vec::new());
        }
    }
    search.run(0);
    let mut found = search.found;
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn contradictory_constraints() {
        // Commuting and braiding with c forces x = c.
        let c = p("(1 2)", 2);
        let both = [Constraint::CommutesWith(c.clone()), Constraint::BraidsWith(c.clone())];
        assert_eq!(constraint_search(2, &both).unwrap(), core::slice::from_ref(&c));
        let mut with_fixed = both.to_vec();
        with_fixed.push(Constraint::FixesPointwise(alloc::vec![0]));
        assert!(constraint_search(2, &with_fixed).unwrap().is_empty());
    }

    #[test]
    fn commuting_with_a_transposition() {
        let found = constraint_search(4, &[Constraint::CommutesWith(p("(1 2)", 4))]).unwrap();
        assert_eq!(found.len(), 4);
        assert!(found.iter().all(|x| x.commutes_with(&p("(1 2)", 4))));
    }

    #[test]
    fn braid_partners_of_a_transposition() {
        let found = constraint_search(3, &[Constraint::BraidsWith(p("(1 2)", 3))]).unwrap();
        // Every transposition braids with c; the identity does not.
        let names: Vec<_> = found.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["(2 3)", "(1 2)", "(1 3)"]);
    }

    #[test]
    fn pinned_points_respected() {
        let found = constraint_search(
            4,
            &[Constraint::FixesPointwise(alloc::vec![0]), Constraint::SupportWithin(alloc::vec![0, 1, 2])],
        )
        .unwrap();
        assert_eq!(found, [Permutation::identity(4), p("(2 3)", 4)]);
        let found = constraint_search(4, &[Constraint::RestrictsTo(p("(3 4)", 4))]).unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn degree_checked() {
        assert!(constraint_search(4, &[Constraint::CommutesWith(p("(1 2)", 3))]).is_err());
    }

    #[test]
    fn large_degree_needs_a_bound() {
        assert!(matches!(constraint_search(12, &[]), Err(Error::SearchSpaceTooLarge(_))));
        let few: Vec<u32> = (0..4).collect();
        assert_eq!(constraint_search(12, &[Constraint::SupportWithin(few)]).unwrap().len(), 24);
    }
}
