//! Cycle notation: `(1 2)(3 5)(4 6)`, 1-based, fixed points omitted, `()` for
//! the identity. Parsing also accepts `id` and arbitrary whitespace.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;
use crate::{Error, Result};

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Permutation {
    /// Parses 1-based cycle notation into a permutation of `degree` points.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(input)?;
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }

    /// Parses cycle notation, taking the degree to be the largest point
    /// mentioned (at least `min_degree`).
    pub fn parse_cycles_min_degree(input: &str, min_degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(input)?;
        let max = cycles.iter().flatten().map(|&x| x as usize + 1).max().unwrap_or(0);
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(max.max(min_degree), &refs)
    }
}

fn parse_err(input: &str, reason: &'static str) -> Error {
    Error::CycleParse { input: input.to_string(), reason }
}

/// Returns 0-based cycles.
fn parse_cycle_list(input: &str) -> Result<Vec<Vec<u32>>> {
    let trimmed = input.trim();
    if trimmed == "id" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut number = String::new();
    let flush = |number: &mut String, cycle: &mut Vec<u32>| -> Result<()> {
        if number.is_empty() {
            return Ok(());
        }
        let value: u32 = number.parse().map_err(|_| parse_err(input, "bad number"))?;
        if value == 0 {
            return Err(parse_err(input, "points are 1-based"));
        }
        cycle.push(value - 1);
        number.clear();
        Ok(())
    };
    for c in trimmed.chars() {
        match (c, current.as_mut()) {
            ('(', None) => current = Some(Vec::new()),
            ('(', Some(_)) => return Err(parse_err(input, "nested parenthesis")),
            (')', Some(cycle)) => {
                flush(&mut number, cycle)?;
                let cycle = current.take().unwrap();
                if cycle.len() > 1 {
                    cycles.push(cycle);
                }
            }
            (')', None) => return Err(parse_err(input, "unbalanced parenthesis")),
            (d, Some(_)) if d.is_ascii_digit() => number.push(d),
            (w, Some(cycle)) if w.is_whitespace() || w == ',' => flush(&mut number, cycle)?,
            (w, None) if w.is_whitespace() => {}
            _ => return Err(parse_err(input, "unexpected character")),
        }
    }
    if current.is_some() {
        return Err(parse_err(input, "unterminated cycle"));
    }
    Ok(cycles)
}
