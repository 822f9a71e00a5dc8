//! Local searches for the images of the extra generators on `N_5` and
//! `N_6` when the genus-two images act as a six-point table times an
//! involution `tau` on the remaining points.

use alloc::string::String;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::verify::{constraint_search, Constraint, PhiTable, TableName};
use crate::Result;

/// `(m, tau)` for `tau` in `1, (7 8), (7 8)(9 10)` and every degree
/// `m <= 10` that contains its support.
pub fn tau_cases() -> Vec<(usize, Permutation)> {
    let mut out = Vec::new();
    for (k, text) in ["()", "(7 8)", "(7 8)(9 10)"].into_iter().enumerate() {
        for m in 6 + 2 * k..=10 {
            out.push((m, Permutation::parse_cycles(text, m).expect("valid constant")));
        }
    }
    out
}

/// `w_i = phi(T_i) tau` for `i = 0..4`.
fn twisted(table: TableName, m: usize, tau: &Permutation) -> Result<[Permutation; 5]> {
    let rep = PhiTable::builtin(table).rep;
    let w = |i: usize| -> Result<Permutation> {
        Ok(rep.require(&alloc::format!("T{i}"))?.extended(m).compose(tau))
    };
    Ok([w(0)?, w(1)?, w(2)?, w(3)?, w(4)?])
}

fn with_tau(text: &str, tau: &Permutation) -> Permutation {
    Permutation::parse_cycles(text, tau.degree()).expect("valid constant").compose(tau)
}

/// One unknown's solution set together with what it should be.
#[derive(Clone, Debug)]
pub struct Replay {
    pub unknown: String,
    pub m: usize,
    pub tau: Permutation,
    pub solutions: Vec<Permutation>,
    /// The unique expected solution.
    pub expected: Option<Permutation>,
    /// A set every solution must preserve.
    pub preserved: Option<Vec<u32>>,
}

impl Replay {
    pub fn holds(&self) -> bool {
        let unique = self.expected.as_ref().is_none_or(|e| self.solutions.len() == 1 && self.solutions[0] == *e);
        let preserved = self.preserved.as_ref().is_none_or(|set| self.solutions.iter().all(|x| x.preserves(set)));
        unique && preserved
    }
}

fn replay(
    unknown: &str,
    m: usize,
    tau: &Permutation,
    constraints: &[Constraint],
    expected: Option<Permutation>,
    preserved: Option<Vec<u32>>,
) -> Result<Replay> {
    Ok(Replay {
        unknown: unknown.into(),
        m,
        tau: tau.clone(),
        solutions: constraint_search(m, constraints)?,
        expected,
        preserved,
    })
}

/// Odd case, six-point table of sign minus: `w'_3 = (3 5) tau` and
/// `w'_0 = (4 6) tau`.
pub fn odd_minus(m: usize, tau: &Permutation) -> Result<Vec<Replay>> {
    use Constraint::*;
    let [w0, w1, w2, w3, w4] = twisted(TableName::Phi2Minus, m, tau)?;
    let w434 = w4.compose(&w3).compose(&w4);
    let w3p = replay(
        "UT3U^-1",
        m,
        tau,
        &[CommutesWith(w1.clone()), CommutesWith(w434), BraidsWith(w3), BraidsWith(w2.clone()), RestrictsTo(tau.clone())],
        Some(with_tau("(3 5)", tau)),
        None,
    )?;
    let w3_image = w3p.solutions.first().cloned().unwrap_or_else(|| with_tau("(3 5)", tau));
    let w0p = replay(
        "UT0U^-1",
        m,
        tau,
        &[CommutesWith(w1), CommutesWith(w2), CommutesWith(w3_image), BraidsWith(w0), BraidsWith(w4), RestrictsTo(tau.clone())],
        Some(with_tau("(4 6)", tau)),
        None,
    )?;
    Ok(alloc::vec![w3p, w0p])
}

/// Even case, sign minus: `w_5 = (5 6) tau`.
pub fn even_minus(m: usize, tau: &Permutation) -> Result<Replay> {
    use Constraint::*;
    let [w0, w1, w2, w3, w4] = twisted(TableName::Phi2Minus, m, tau)?;
    replay(
        "T5",
        m,
        tau,
        &[CommutesWith(w1), CommutesWith(w2), CommutesWith(w3), CommutesWith(w0), BraidsWith(w4), RestrictsTo(tau.clone())],
        Some(with_tau("(5 6)", tau)),
        None,
    )
}

/// Odd case with the exceptional table: every candidate for `w'_3`, `w'_0`,
/// `u` and `v` preserves the six table points.
pub fn odd_alpha(m: usize, tau: &Permutation) -> Result<Vec<Replay>> {
    use Constraint::*;
    let [w0, w1, w2, w3, w4] = twisted(TableName::Phi1Alpha, m, tau)?;
    let x: Vec<u32> = (0..6).collect();
    let w1434 = w1.compose(&w4).compose(&w3).compose(&w4);
    let mut out = alloc::vec![replay(
        "UT3U^-1",
        m,
        tau,
        &[CommutesWith(w1.clone()), CommutesWith(w1434), BraidsWith(w3), BraidsWith(w2.clone())],
        None,
        Some(x.clone()),
    )?];
    out.push(replay(
        "UT0U^-1",
        m,
        tau,
        &[CommutesWith(w1.clone()), CommutesWith(w2.clone()), BraidsWith(w0), BraidsWith(w4.clone())],
        None,
        Some(x.clone()),
    )?);
    for name in ["U", "U^2"] {
        let cs = [CommutesWith(w1.clone()), CommutesWith(w2.clone()), CommutesWith(w4.clone())];
        out.push(replay(name, m, tau, &cs, None, Some(x.clone()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn composition_anchors() {
        let [_, w1, w2, w3, w4] = twisted(TableName::Phi1Alpha, 6, &Permutation::identity(6)).unwrap();
        assert_eq!(w2.compose(&w1).to_string(), "(1 4 5)(2 3 6)");
        assert_eq!(w1.compose(&w4).compose(&w3).compose(&w4).to_string(), "(1 6)(2 4)");
    }

    #[test]
    fn tau_case_list() {
        let cases = tau_cases();
        assert_eq!(cases.len(), 5 + 3 + 1);
        assert!(cases.iter().all(|(m, t)| t.degree() == *m && t.compose(t).is_identity()));
    }

    #[test]
    fn odd_minus_small() {
        let tau = Permutation::parse_cycles("(7 8)", 8).unwrap();
        let r = odd_minus(8, &tau).unwrap();
        assert_eq!(r[0].solutions.len(), 1);
        assert_eq!(r[0].solutions[0].to_string(), "(3 5)(7 8)");
        assert_eq!(r[1].solutions[0].to_string(), "(4 6)(7 8)");
        assert!(r.iter().all(Replay::holds));
    }

    #[test]
    fn even_minus_identity_tau() {
        let r = even_minus(6, &Permutation::identity(6)).unwrap();
        assert!(r.holds(), "{:?}", r.solutions);
    }

    #[test]
    fn odd_alpha_identity_tau() {
        let rs = odd_alpha(6, &Permutation::identity(6)).unwrap();
        assert!(rs.iter().all(Replay::holds));
    }
}
