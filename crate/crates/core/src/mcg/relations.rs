use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::mcg::{alpha, conjugated_twist_name, geometric_intersection, humphries_system, twist_name, Flavor, U, U_SQUARED};
use crate::perm::{GroupElement, Representation};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    pub inverse: bool,
}

/// A product of named generators and their inverses, read left to right
/// (the rightmost letter acts first).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn generator(name: &str) -> Word {
        Word(alloc::vec![Letter { name: name.into(), inverse: false }])
    }

    /// `x y x^-1`.
    pub fn conjugate(x: &str, y: &str) -> Word {
        Word::generator(x) * Word::generator(y) * Word::generator(x).inverse()
    }

    /// Space-separated letters; `^-1` marks an inverse, and names that
    /// themselves contain `^` are written in parentheses, e.g. `(U^2)^-1`.
    pub fn parse(text: &str) -> Word {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let (body, inverse) = match tok.strip_suffix("^-1") {
                    Some(b) if !b.is_empty() && (!b.starts_with('(') || b.ends_with(')')) => (b, true),
                    _ => (tok, false),
                };
                let name = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
                Letter { name: name.into(), inverse }
            })
            .collect();
        Word(letters)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| Letter { name: l.name.clone(), inverse: !l.inverse }).collect())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|l| l.name.as_str())
    }

    pub fn evaluate<E: GroupElement>(&self, rep: &Representation<E>) -> Result<E> {
        let mut acc: Option<E> = None;
        for letter in &self.0 {
            let g = rep.require(&letter.name)?;
            let g = if letter.inverse { g.inverse() } else { g.clone() };
            acc = Some(match acc {
                None => g,
                Some(a) => a.compose(&g),
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => {
                let any = rep.images().next().ok_or_else(|| crate::Error::Invalid("empty representation".into()))?;
                Ok(any.identity_like())
            }
        }
    }
}

impl core::ops::Mul for Word {
    type Output = Word;
    fn mul(mut self, rhs: Word) -> Word {
        self.0.extend(rhs.0);
        self
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.name.contains('^') {
                write!(f, "({})", l.name)?;
            } else {
                f.write_str(&l.name)?;
            }
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// `x y = y x`
    Commute,
    /// `x y x = y x y`
    Braid,
    /// `x y^-1 x = y^-1 x y^-1`
    BraidWithInverse,
    /// `x y x^-1 = y^-1`
    TwistInversion,
}

impl RelationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RelationKind::Commute => "commute",
            RelationKind::Braid => "braid",
            RelationKind::BraidWithInverse => "braid_with_inverse",
            RelationKind::TwistInversion => "twist_inversion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub x: Word,
    pub y: Word,
}

impl Relation {
    pub fn new(kind: RelationKind, x: Word, y: Word) -> Self {
        Relation { kind, x, y }
    }

    pub fn commute(x: Word, y: Word) -> Self {
        Relation::new(RelationKind::Commute, x, y)
    }

    pub fn braid(x: Word, y: Word) -> Self {
        Relation::new(RelationKind::Braid, x, y)
    }

    pub fn braid_with_inverse(x: Word, y: Word) -> Self {
        Relation::new(RelationKind::BraidWithInverse, x, y)
    }

    pub fn twist_inversion(x: Word, y: Word) -> Self {
        Relation::new(RelationKind::TwistInversion, x, y)
    }

    /// The two sides as words.
    pub fn sides(&self) -> (Word, Word) {
        let (x, y) = (self.x.clone(), self.y.clone());
        match self.kind {
            RelationKind::Commute => (x.clone() * y.clone(), y * x),
            RelationKind::Braid => (x.clone() * y.clone() * x.clone(), y.clone() * x * y),
            RelationKind::BraidWithInverse => {
                let yi = y.inverse();
                (x.clone() * yi.clone() * x.clone(), yi.clone() * x * yi)
            }
            RelationKind::TwistInversion => (x.clone() * y.clone() * x.inverse(), y.inverse()),
        }
    }

    /// Relations of braid type come from twists about curves meeting once.
    pub fn is_braid_type(&self) -> bool {
        matches!(self.kind, RelationKind::Braid | RelationKind::BraidWithInverse)
    }

    pub fn holds<E: GroupElement>(&self, rep: &Representation<E>) -> Result<bool> {
        let (l, r) = self.sides();
        Ok(l.evaluate(rep)? == r.evaluate(rep)?)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.sides();
        write!(f, "{}({}, {}): {} = {}", self.kind.as_str(), self.x, self.y, l, r)
    }
}

/// Relations among the twist generators from the intersection pattern, then
/// the relations involving `U` (flavor M) or the derived generators
/// (flavor T).
pub fn expected_relations(h: usize, flavor: Flavor) -> Result<Vec<Relation>> {
    let mut curves = humphries_system(h)?;
    if curves[1..].iter().any(|(_, c)| *c == curves[0].1) {
        curves.pop();
    }
    let mut rels = Vec::new();
    for (k, (i, ci)) in curves.iter().enumerate() {
        for (j, cj) in &curves[k + 1..] {
            let (x, y) = (Word::generator(&twist_name(*i)), Word::generator(&twist_name(*j)));
            rels.push(match geometric_intersection(ci, cj) {
                1 => Relation::braid(x, y),
                _ => Relation::commute(x, y),
            });
        }
    }
    let t = |i: usize| Word::generator(&twist_name(i));
    let commuting_with_u: Vec<usize> = (1..=h - 3).chain((h >= 6).then_some(0)).collect();
    match flavor {
        Flavor::M => {
            let u = Word::generator(U);
            rels.push(Relation::twist_inversion(u.clone(), t(h - 1)));
            rels.push(Relation::braid_with_inverse(Word::conjugate(U, &twist_name(h - 2)), t(h - 2)));
            if h == 5 {
                rels.push(Relation::braid_with_inverse(Word::conjugate(U, &twist_name(0)), t(0)));
            }
            for &i in &commuting_with_u {
                rels.push(Relation::commute(u.clone(), t(i)));
            }
        }
        Flavor::T => {
            let p = Word::generator(U_SQUARED);
            let x = Word::generator(&conjugated_twist_name(h - 2));
            for &i in &commuting_with_u {
                rels.push(Relation::commute(p.clone(), t(i)));
            }
            rels.push(Relation::commute(p.clone(), t(h - 1)));
            rels.push(Relation::braid_with_inverse(x.clone(), t(h - 2)));
            rels.push(Relation::braid_with_inverse(Word::conjugate(U_SQUARED, &twist_name(h - 2)), x.clone()));
            let target = alpha(h, h - 2)?;
            for &i in &commuting_with_u {
                if geometric_intersection(&alpha(h, i)?, &target) == 0 {
                    rels.push(Relation::commute(x.clone(), t(i)));
                }
            }
            if h == 5 {
                let y = Word::generator(&conjugated_twist_name(0));
                rels.push(Relation::braid_with_inverse(y.clone(), t(0)));
                rels.push(Relation::braid_with_inverse(Word::conjugate(U_SQUARED, &twist_name(0)), y));
            }
        }
    }
    Ok(rels)
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub results: Vec<(Relation, bool)>,
    pub abelian: bool,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Relation> {
        self.results.iter().filter(|(_, ok)| !ok).map(|(r, _)| r)
    }
}

/// Evaluates every relation on `rep`; an undefined name is an error.
pub fn check_relations<E: GroupElement>(rep: &Representation<E>, rels: &[Relation]) -> Result<RelationReport> {
    let results = rels.iter().map(|r| Ok((r.clone(), r.holds(rep)?))).collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { results, abelian: rep.is_abelian() })
}
