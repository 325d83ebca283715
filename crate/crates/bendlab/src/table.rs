//! Result tables and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::{ensure, Context, Result};
use bendlab_core::Complex64;

/// Formats like C's `%.9g`: nine significant digits, trailing zeros dropped.
pub fn g9(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Real(f64),
    Complex(Complex64),
    Flag(bool),
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<Complex64> for Cell {
    fn from(z: Complex64) -> Self {
        Cell::Complex(z)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Flag(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Text,
    Int,
    Real,
    Complex,
    Flag,
}

impl Cell {
    fn kind(&self) -> Kind {
        match self {
            Cell::Text(_) => Kind::Text,
            Cell::Int(_) => Kind::Int,
            Cell::Real(_) => Kind::Real,
            Cell::Complex(_) => Kind::Complex,
            Cell::Flag(_) => Kind::Flag,
        }
    }
}

/// A table with typed columns; complex columns expand to `name_re,name_im`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultTable {
    columns: Vec<(String, Kind)>,
    rows: Vec<Vec<Cell>>,
}

impl ResultTable {
    pub fn new(columns: &[(&str, Kind)]) -> Self {
        ResultTable {
            columns: columns.iter().map(|(n, k)| (n.to_string(), *k)).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) -> Result<()> {
        ensure!(row.len() == self.columns.len(), "row has {} cells, expected {}", row.len(), self.columns.len());
        for (cell, (name, kind)) in row.iter().zip(&self.columns) {
            ensure!(cell.kind() == *kind, "column {name} expects {kind:?}, got {:?}", cell.kind());
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    /// Every `pass` flag in the table, if there is such a column.
    pub fn all_pass(&self) -> bool {
        match self.columns.iter().position(|(n, _)| n == "pass") {
            None => true,
            Some(k) => self.rows.iter().all(|r| r[k] == Cell::Flag(true)),
        }
    }

    pub fn header(&self) -> String {
        let mut names = Vec::new();
        for (n, k) in &self.columns {
            if *k == Kind::Complex {
                names.push(format!("{n}_re"));
                names.push(format!("{n}_im"));
            } else {
                names.push(n.clone());
            }
        }
        names.join(",")
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Text(s) => s.clone(),
                    Cell::Int(n) => n.to_string(),
                    Cell::Real(x) => g9(*x),
                    Cell::Complex(z) => format!("{},{}", g9(z.re), g9(z.im)),
                    Cell::Flag(b) => b.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }
}

/// Writes next to the destination, then renames over it.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
