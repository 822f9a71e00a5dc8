//! Reconstruction of the small permutation representations of the genus-`g`
//! twist group, their centralizers, the unique extensions to the
//! nonorientable generators, and the constraint searches used to replay the
//! case analysis on `N_5` and `N_6`.

mod extension;
pub mod replay;
mod phi;
mod search;
mod tables;

pub use extension::{extension_solve, Extension};
pub use phi::{build_phi, stated_centralizers, restriction_orbits, CentralizerCheck, CentralizerStatements, Sign};
pub use search::{constraint_search, Constraint, SEARCH_LIMIT};
pub use tables::{builtin_tables, PhiTable, TableName, TABLE_NAMES};
