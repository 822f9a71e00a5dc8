use std::fmt::Write as _;

use crosscap_core::mcg::{epsilon, expected_relations, Flavor};
use crosscap_core::perm::PermRep;
use crosscap_core::symp::{alpha_twisted_subgroup, build_sp, orthogonal_stabilizer, sp_order};
use crosscap_core::verify::{build_phi, PhiTable, Sign, TableName, TABLE_NAMES};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RepKind {
    Epsilon,
    PhiMinus,
    PhiPlus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RepFormat {
    Cycles,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupKind {
    Sp,
    OMinus,
    OPlus,
    OAlpha,
}

/// `T1 (1 2)` per line, in table order.
pub fn tables(name: &str) -> Result<String, CliError> {
    let name: TableName = name.parse().map_err(|_| CliError::Usage(format!("unknown table {name:?}")))?;
    let table = PhiTable::builtin(name);
    let mut out = String::new();
    for n in TABLE_NAMES {
        let _ = writeln!(out, "{n} {}", table.rep.get(n).expect("table names"));
    }
    Ok(out)
}

fn cycles(rep: &PermRep) -> String {
    rep.iter().map(|(n, x)| format!("{n} {x}\n")).collect()
}

pub fn rep(which: RepKind, g: usize, h: Option<usize>, format: RepFormat) -> Result<String, CliError> {
    match which {
        RepKind::Epsilon => {
            let h = h.unwrap_or(2 * g + 1);
            if (h - 1) / 2 != g {
                return Err(CliError::Usage(format!("h = {h} is not a surface of genus {g}")));
            }
            let eps = epsilon(h)?;
            Ok(match format {
                RepFormat::Matrix => eps.iter().map(|(n, m)| format!("{n}\n{m}\n")).collect(),
                RepFormat::Cycles => cycles(&eps.map((1 << (2 * g)) - 1, |m| m.nonzero_vector_action())?),
            })
        }
        RepKind::PhiMinus | RepKind::PhiPlus => {
            if format == RepFormat::Matrix {
                return Err(CliError::Usage("permutation representations have no matrix format".into()));
            }
            if h.is_some() {
                return Err(CliError::Usage("--h applies to epsilon only".into()));
            }
            let sign = if which == RepKind::PhiMinus { Sign::Minus } else { Sign::Plus };
            Ok(cycles(&build_phi(g, sign)?))
        }
    }
}

pub fn relations(h: usize, flavor: &str) -> Result<String, CliError> {
    let flavor: Flavor = flavor.parse().map_err(|_| CliError::Usage(format!("unknown flavor {flavor:?}")))?;
    Ok(expected_relations(h, flavor)?.iter().map(|r| format!("{r}\n")).collect())
}

/// `order N index K`, the index taken in `Sp(2g, 2)`.
pub fn group(name: GroupKind, g: usize) -> Result<String, CliError> {
    let model = build_sp(g)?;
    let order = match name {
        GroupKind::Sp => model.group().order(),
        GroupKind::OMinus => orthogonal_stabilizer(&model, &model.canonical_form(true))?.order(),
        GroupKind::OPlus => orthogonal_stabilizer(&model, &model.canonical_form(false))?.order(),
        GroupKind::OAlpha => alpha_twisted_subgroup(&model)?.order(),
    };
    Ok(format!("order {order} index {}\n", sp_order(g) / order))
}
