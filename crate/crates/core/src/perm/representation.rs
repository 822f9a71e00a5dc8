use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::perm::{GroupElement, Permutation};
use crate::{Error, Result};

/// An ordered assignment of group elements to named abstract generators.
///
/// All images act on a set (or space) of the same size. The name order is
/// significant: searches and numberings walk generators in this order.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<E = Permutation> {
    degree: usize,
    gens: Vec<(String, E)>,
}

/// A permutation representation.
pub type PermRep = Representation<Permutation>;

impl<E: GroupElement> Representation<E> {
    pub fn new(degree: usize) -> Self {
        Representation { degree, gens: Vec::new() }
    }

    pub fn from_pairs<S: Into<String>>(
        degree: usize,
        pairs: impl IntoIterator<Item = (S, E)>,
    ) -> Result<Self> {
        let mut rep = Representation::new(degree);
        for (name, e) in pairs {
            rep.push(name, e)?;
        }
        Ok(rep)
    }

    /// Appends a generator; names must be unique and degrees must agree.
    pub fn push(&mut self, name: impl Into<String>, image: E) -> Result<()> {
        let name = name.into();
        if image.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: image.degree() });
        }
        if self.get(&name).is_some() {
            return Err(Error::NameMismatch(alloc::format!("duplicate generator {name}")));
        }
        self.gens.push((name, image));
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&E> {
        self.gens.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn require(&self, name: &str) -> Result<&E> {
        self.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.gens.iter().map(|(n, _)| n.as_str())
    }

    pub fn images(&self) -> impl Iterator<Item = &E> {
        self.gens.iter().map(|(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &E)> {
        self.gens.iter().map(|(n, e)| (n.as_str(), e))
    }

    /// Sub-representation on the listed names, in the listed order.
    pub fn restrict(&self, names: &[&str]) -> Result<Self> {
        let mut rep = Representation::new(self.degree);
        for &name in names {
            rep.push(name, self.require(name)?.clone())?;
        }
        Ok(rep)
    }

    /// Applies `f` to every image, keeping names and order.
    pub fn map<F: GroupElement>(&self, degree: usize, f: impl Fn(&E) -> F) -> Result<Representation<F>> {
        Representation::from_pairs(degree, self.gens.iter().map(|(n, e)| (n.clone(), f(e))))
    }

    /// Same generator names, in any order.
    pub fn same_names(&self, other: &Self) -> bool {
        self.len() == other.len() && self.names().all(|n| other.get(n).is_some())
    }

    /// Whether all generator images commute pairwise (the image is abelian).
    pub fn is_abelian(&self) -> bool {
        let imgs: Vec<&E> = self.images().collect();
        imgs.iter().enumerate().all(|(i, a)| imgs[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

impl Representation<Permutation> {
    /// The generator images as a plain list.
    pub fn permutations(&self) -> Vec<Permutation> {
        self.images().cloned().collect()
    }

    /// Conjugate every image by `y`: `x -> y * x * y^-1`.
    pub fn conjugated_by(&self, y: &Permutation) -> PermRep {
        let yi = y.inverse();
        Representation {
            degree: self.degree,
            gens: self.gens.iter().map(|(n, e)| (n.clone(), y.compose(e).compose(&yi))).collect(),
        }
    }

    /// Relabel points through `relabel` (old point -> new point).
    pub fn relabeled(&self, relabel: &[u32]) -> PermRep {
        Representation {
            degree: self.degree,
            gens: self.gens.iter().map(|(n, e)| (n.clone(), e.relabeled(relabel))).collect(),
        }
    }
}
