use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::chain::IntegerMatrix;
use crate::covers::FiniteGroup;
use crate::error::{Error, Result};
use crate::sset::{GenId, Simplex};

pub const MATRIX_HEADER: &str = "kansets-matrix 1";
pub const GROUP_HEADER: &str = "kansets-group 1";

/// Lines after the header, skipping blanks and `#` comments, numbered from 1.
fn body<'a>(text: &'a str, header: &str) -> Result<Vec<(usize, &'a str)>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l == header => {}
        _ => return Err(Error::Parse { line: 1, msg: format!("expected header {header:?}") }),
    }
    Ok(lines.filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#')).collect())
}

/// Inverse of the `Display` impl of [`IntegerMatrix`].
pub fn parse_matrix(text: &str) -> Result<IntegerMatrix> {
    let lines = body(text, MATRIX_HEADER)?;
    let (line, shape) = *lines.first().ok_or(Error::Parse { line: 1, msg: "missing shape line".into() })?;
    let dims: Vec<usize> = shape.split_whitespace().map(str::parse).collect::<std::result::Result<_, _>>().map_err(
        |_| Error::Parse { line, msg: format!("bad shape line {shape:?}") },
    )?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse { line, msg: "shape line needs two numbers".into() });
    };
    if lines.len() - 1 != rows {
        return Err(Error::Parse { line, msg: format!("{rows} rows declared, {} given", lines.len() - 1) });
    }
    let mut m = IntegerMatrix::zeros(rows, cols);
    for (i, &(line, l)) in lines[1..].iter().enumerate() {
        let entries: Vec<BigInt> = l
            .split_whitespace()
            .map(|t| t.parse::<BigInt>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse { line, msg: format!("bad matrix row {l:?}") })?;
        if entries.len() != cols {
            return Err(Error::Parse { line, msg: format!("{cols} columns declared, {} given", entries.len()) });
        }
        for (j, v) in entries.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// ```text
/// kansets-group 1
/// elements: e a
/// e a
/// a e
/// ```
/// Row `x`, column `y` holds the name of `x·y`.
pub fn print_group(g: &FiniteGroup) -> String {
    let mut out = format!("{GROUP_HEADER}\nelements: {}\n", g.names().join(" "));
    for row in g.table() {
        let names: Vec<&str> = row.iter().map(|&v| g.name(v)).collect();
        let _ = writeln!(out, "{}", names.join(" "));
    }
    out
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let lines = body(text, GROUP_HEADER)?;
    let (line, first) = *lines.first().ok_or(Error::Parse { line: 1, msg: "missing elements line".into() })?;
    let names: Vec<String> = first
        .strip_prefix("elements:")
        .ok_or(Error::Parse { line, msg: "expected \"elements:\"".into() })?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::Parse { line, msg: format!("element {n} listed twice") });
        }
    }
    if lines.len() - 1 != names.len() {
        return Err(Error::Parse { line, msg: format!("{} elements but {} table rows", names.len(), lines.len() - 1) });
    }
    let table = lines[1..]
        .iter()
        .map(|&(line, l)| {
            l.split_whitespace()
                .map(|t| {
                    names.iter().position(|n| n == t).ok_or(Error::Parse { line, msg: format!("unknown element {t}") })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_table(names, table)
}

/// Parses the `Display` form of a simplex, e.g. `s1s0[0:2]` or `[1:0]`.
pub fn parse_simplex(text: &str) -> Result<Simplex> {
    let bad = || Error::Parse { line: 1, msg: format!("bad simplex {text:?}") };
    let open = text.find('[').ok_or_else(bad)?;
    let (word, base) = text.split_at(open);
    let (dim, idx) = base
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .and_then(|b| b.split_once(':'))
        .ok_or_else(bad)?;
    let id = GenId::new(dim.parse().map_err(|_| bad())?, idx.parse().map_err(|_| bad())?);
    let word = if word.is_empty() {
        Vec::new()
    } else {
        word.strip_prefix('s')
            .ok_or_else(bad)?
            .split('s')
            .map(|j| j.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?
    };
    Simplex::new(id, word)
}
