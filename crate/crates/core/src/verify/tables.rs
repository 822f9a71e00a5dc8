use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::{PermRep, Permutation};
use crate::{Error, Result};

/// The three small representations of the genus-two twist group given by
/// explicit generator images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableName {
    Phi2Minus,
    Phi1Alpha,
    Phi2Plus,
}

impl TableName {
    pub const ALL: [TableName; 3] = [TableName::Phi2Minus, TableName::Phi1Alpha, TableName::Phi2Plus];

    pub fn as_str(&self) -> &'static str {
        match self {
            TableName::Phi2Minus => "phi2_minus",
            TableName::Phi1Alpha => "phi1_alpha",
            TableName::Phi2Plus => "phi2_plus",
        }
    }

    fn data(&self) -> (usize, [&'static str; 5]) {
        match self {
            TableName::Phi2Minus => (6, ["(1 2)", "(2 3)", "(3 4)", "(4 5)", "(5 6)"]),
            TableName::Phi1Alpha => (
                6,
                ["(1 2)(3 5)(4 6)", "(1 3)(2 4)(5 6)", "(1 2)(3 6)(4 5)", "(1 3)(2 5)(4 6)", "(1 2)(3 4)(5 6)"],
            ),
            TableName::Phi2Plus => (
                10,
                [
                    "(3 5)(6 8)(9 10)",
                    "(2 3)(4 6)(7 9)",
                    "(1 2)(6 10)(8 9)",
                    "(2 4)(3 6)(5 8)",
                    "(4 7)(6 9)(8 10)",
                ],
            ),
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| Error::Invalid(alloc::format!("unknown table {s:?}")))
    }
}

/// Table row order: `T1 .. T4` then `T0`.
pub const TABLE_NAMES: [&str; 5] = ["T1", "T2", "T3", "T4", "T0"];

#[derive(Clone, Debug, PartialEq)]
pub struct PhiTable {
    pub name: TableName,
    pub rep: PermRep,
}

impl PhiTable {
    pub fn builtin(name: TableName) -> PhiTable {
        let (degree, cycles) = name.data();
        let rep = PermRep::from_pairs(
            degree,
            TABLE_NAMES.iter().zip(cycles).map(|(n, c)| (*n, Permutation::parse_cycles(c, degree).expect("valid table"))),
        )
        .expect("valid table");
        PhiTable { name, rep }
    }

    /// The table with `T6` added as a second name for `T0`.
    pub fn with_alias(&self) -> PermRep {
        let mut rep = self.rep.clone();
        let t0 = rep.get("T0").expect("table defines T0").clone();
        rep.push("T6", t0).expect("T6 is new");
        rep
    }
}

pub fn builtin_tables() -> Vec<PhiTable> {
    TableName::ALL.into_iter().map(PhiTable::builtin).collect()
}
