use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::perm::Permutation;
use crate::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// strong generators fixing all earlier base points.
#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// point -> index into `orbit`/`reps`, or ABSENT.
    slot: Vec<u32>,
    /// (u, u^-1) with u(base) = orbit[k].
    reps: Vec<(Permutation, Permutation)>,
    /// Schreier generators (orbit[k], gens[s]) for s < checked[k] are known
    /// to sift through the levels below.
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Level {
        let mut slot = alloc::vec![ABSENT; degree];
        slot[base as usize] = 0;
        let id = Permutation::identity(degree);
        Level {
            base,
            gens: Vec::new(),
            orbit: alloc::vec![base],
            slot,
            reps: alloc::vec![(id.clone(), id)],
            checked: alloc::vec![0],
        }
    }

    fn rep_inverse(&self, point: u32) -> Option<&Permutation> {
        match self.slot[point as usize] {
            ABSENT => None,
            k => Some(&self.reps[k as usize].1),
        }
    }

    /// Adds a generator and extends the orbit without disturbing existing
    /// transversal elements.
    fn push_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let new = self.gens.len() - 1;
        let mut k = 0;
        let old_len = self.orbit.len();
        while k < self.orbit.len() {
            let point = self.orbit[k];
            let range = if k < old_len { new..new + 1 } else { 0..self.gens.len() };
            for s in range {
                let image = self.gens[s].apply(point);
                if self.slot[image as usize] == ABSENT {
                    let u = self.gens[s].compose(&self.reps[k].0);
                    let ui = u.inverse();
                    self.slot[image as usize] = self.orbit.len() as u32;
                    self.orbit.push(image);
                    self.reps.push((u, ui));
                    self.checked.push(0);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set. Base points not supplied up front are
/// chosen as the smallest point moved by the element that needs them.
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

impl Chain {
    pub(crate) fn new(degree: usize, base_prefix: &[u32]) -> Chain {
        Chain { degree, levels: base_prefix.iter().map(|&b| Level::new(degree, b)).collect() }
    }

    pub(crate) fn build(degree: usize, base_prefix: &[u32], gens: &[Permutation]) -> Chain {
        let mut chain = Chain::new(degree, base_prefix);
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// at which it stopped (`levels.len()` if it passed every level).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match level.rep_inverse(beta) {
                None => return (h, l),
                Some(ui) => {
                    if beta != level.base {
                        h = ui.compose(&h);
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    /// Adds `g` as a strong generator on levels `from..=to`, creating a new
    /// level when `to` is past the end.
    fn insert_strong(&mut self, g: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = g.smallest_moved_point().expect("strong generator must be nontrivial");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=to {
            self.levels[l].push_generator(g.clone());
        }
    }

    /// Adds a generator and restores the chain invariant. Returns `false` if
    /// `g` was already a member.
    pub(crate) fn add_generator(&mut self, g: &Permutation) -> bool {
        let (residue, j) = self.sift(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.insert_strong(residue, 0, j);
        self.complete(j);
        true
    }

    /// Schreier-Sims completion, working from level `start` upwards to 0.
    fn complete(&mut self, start: usize) {
        let mut i = start.min(self.levels.len() - 1) as isize;
        while i >= 0 {
            let lvl = i as usize;
            let mut restart = None;
            'scan: for k in 0..self.levels[lvl].orbit.len() {
                while self.levels[lvl].checked[k] < self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = level.checked[k];
                    let gen = &level.gens[s];
                    let u = &level.reps[k].0;
                    let image = gen.apply(level.orbit[k]);
                    let vi = level.rep_inverse(image).expect("orbit is closed");
                    let schreier = vi.compose(&gen.compose(u));
                    self.levels[lvl].checked[k] += 1;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.sift(&schreier, lvl + 1);
                    if !residue.is_identity() {
                        self.insert_strong(residue, lvl + 1, j);
                        restart = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    fn contains(&self, g: &Permutation) -> bool {
        self.sift(g, 0).0.is_identity()
    }
}

/// A permutation group given by generators, with a stabilizer chain built on
/// first use and read-only afterwards.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    base_prefix: Vec<u32>,
    chain: OnceBox<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceBox::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Box::new(c.clone()));
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            base_prefix: self.base_prefix.clone(),
            chain,
        }
    }
}

impl core::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PermGroup").field("degree", &self.degree).field("gens", &self.gens).finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(degree, gens, Vec::new())
    }

    /// A group whose chain starts with the given base points (useful for
    /// point stabilizers).
    pub fn with_base_prefix(degree: usize, gens: Vec<Permutation>, base_prefix: Vec<u32>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        if let Some(&b) = base_prefix.iter().find(|&&b| b as usize >= degree) {
            return Err(Error::PointOutOfRange { point: b as usize, degree });
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { degree, gens, base_prefix, chain: OnceBox::new() })
    }

    fn from_chain(degree: usize, gens: Vec<Permutation>, chain: Chain) -> Self {
        let cell = OnceBox::new();
        let _ = cell.set(Box::new(chain));
        PermGroup { degree, gens, base_prefix: Vec::new(), chain: cell }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), base_prefix: Vec::new(), chain: OnceBox::new() }
    }

    /// The full symmetric group, generated by `(1 2)` and `(1 2 .. m)`.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::transposition(degree, 0, 1));
            let cycle: Vec<u32> = (0..degree as u32).map(|x| (x + 1) % degree as u32).collect();
            gens.push(Permutation::from_images_unchecked(cycle));
        }
        PermGroup::new(degree, gens).expect("degrees agree")
    }

    fn chain(&self) -> &Chain {
        self.chain.get_or_init(|| Box::new(Chain::build(self.degree, &self.base_prefix, &self.gens)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Exact membership; a permutation of another degree is never a member.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn try_contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        Ok(self.chain().contains(g))
    }

    /// Is every element of `other` contained in `self`?
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain().levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.chain().levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Element number `index` (`0 <= index < order`) in the mixed-radix
    /// numbering given by the chain's transversals.
    pub fn element(&self, mut index: u128) -> Permutation {
        let chain = self.chain();
        assert!(index < chain.order(), "element index out of range");
        let mut g = Permutation::identity(self.degree);
        for level in &chain.levels {
            let n = level.orbit.len() as u128;
            let k = (index % n) as usize;
            index /= n;
            g = g.compose(&level.reps[k].0);
        }
        g
    }

    /// All elements, in chain order. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let order = self.order();
        assert!(order <= 1 << 24, "refusing to enumerate a group of order {order}");
        (0..order).map(|i| self.element(i)).collect()
    }

    /// Stabilizer of `point`, with its own chain taken from this group's.
    pub fn stabilizer(&self, point: u32) -> PermGroup {
        let mut prefix = alloc::vec![point];
        prefix.extend(self.base_prefix.iter().copied().filter(|&b| b != point));
        let chain = Chain::build(self.degree, &prefix, &self.gens);
        let mut tail = chain.clone();
        tail.levels.remove(0);
        let gens = match chain.levels.get(1) {
            Some(_) => chain.levels[1].gens.clone(),
            None => Vec::new(),
        };
        PermGroup::from_chain(self.degree, gens, tail)
    }

    /// The group generated by `self` and `extra`.
    pub fn closure(&self, extra: &[Permutation]) -> PermGroup {
        let mut chain = self.chain().clone();
        let mut gens = self.gens.clone();
        for g in extra {
            if chain.add_generator(g) {
                gens.push(g.clone());
            }
        }
        PermGroup::from_chain(self.degree, gens, chain)
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        super::orbits(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        super::is_transitive(self.degree, &self.gens)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Same set of elements.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 1..=7usize {
            let expected: u128 = (1..=n as u128).product();
            assert_eq!(PermGroup::symmetric(n).order(), expected);
        }
    }

    #[test]
    fn adjacent_transpositions_generate_s6() {
        let gens = ["(1 2)", "(2 3)", "(3 4)", "(4 5)", "(5 6)"].iter().map(|s| p(s, 6)).collect();
        let g = PermGroup::new(6, gens).unwrap();
        assert_eq!(g.order(), 720);
        assert_eq!(g.base(), [0, 1, 2, 3, 4]);
    }

    #[test]
    fn membership() {
        let g = PermGroup::new(3, alloc::vec![p("(1 2)", 3), p("(2 3)", 3)]).unwrap();
        assert!(g.contains(&p("(1 3)", 3)));
        let a4 = PermGroup::new(4, alloc::vec![p("(1 2 3)", 4), p("(2 3 4)", 4)]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p("(1 2)", 4)));
        assert!(a4.try_contains(&p("(1 2)", 5)).is_err());
    }

    #[test]
    fn stabilizer_of_point() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(2);
        assert_eq!(st.order(), 24);
        assert!(st.generators().iter().all(|g| g.apply(2) == 2));
        assert!(st.contains(&p("(1 2)(4 5)", 5)));
        assert!(!st.contains(&p("(1 3)", 5)));
    }

    #[test]
    fn elements_are_distinct_members() {
        let g = PermGroup::new(5, alloc::vec![p("(1 2 3 4 5)", 5), p("(2 5)(3 4)", 5)]).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 10);
        let mut sorted = els.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
        assert!(els.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn closure_grows() {
        let c = PermGroup::new(4, alloc::vec![p("(1 2 3 4)", 4)]).unwrap();
        assert_eq!(c.order(), 4);
        let d = c.closure(&[p("(1 3)", 4)]);
        assert_eq!(d.order(), 8);
        assert_eq!(d.closure(&[p("(1 2)", 4)]).order(), 24);
    }
}
