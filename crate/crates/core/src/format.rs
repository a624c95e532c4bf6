//! The JSON structure file format and the solution table format.
//!
//! Parsing goes through a loosely typed mirror of the file so that negative
//! or oversized entries are reported with their path (`add[2][3]`) instead of
//! a generic deserialization error. Serialization is hand-written so output
//! is byte-stable: fixed key order, one table row per line.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Deserialize;
use thiserror::Error;

use crate::semibrace::{AlmostLeftSemiBrace, LeftSemiBrace};
use crate::table::{BinOpTable, Element, SelfMap};
use crate::truss::{BraceLikeSemiTruss, LambdaFamily, LeftSemiTruss, SkewLeftTruss};
use crate::ybe::SolutionMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("kind/field mismatch: {0}")]
    KindFieldMismatch(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    SemiTruss,
    BraceLike,
    SkewTruss,
    SemiBrace,
    Almost,
}

impl StructureKind {
    pub const ALL: [StructureKind; 5] = [
        StructureKind::SemiTruss,
        StructureKind::BraceLike,
        StructureKind::SkewTruss,
        StructureKind::SemiBrace,
        StructureKind::Almost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::SemiTruss => "semi-truss",
            StructureKind::BraceLike => "brace-like",
            StructureKind::SkewTruss => "skew-truss",
            StructureKind::SemiBrace => "semi-brace",
            StructureKind::Almost => "almost",
        }
    }

    /// `(lambda, sigma, iota)` presence required by the kind.
    fn fields(self) -> (bool, bool, bool) {
        match self {
            StructureKind::SemiTruss | StructureKind::BraceLike => (true, false, false),
            StructureKind::SkewTruss => (false, true, false),
            StructureKind::SemiBrace => (false, false, false),
            StructureKind::Almost => (false, false, true),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

/// A validated structure file: tables are square of size `order` and every
/// entry lies in `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub kind: StructureKind,
    pub order: usize,
    pub labels: Option<Vec<String>>,
    pub add: Vec<Vec<Element>>,
    pub mul: Vec<Vec<Element>>,
    pub lambda: Option<Vec<Vec<Element>>>,
    pub sigma: Option<Vec<Element>>,
    pub iota: Option<Vec<Element>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: String,
    order: i64,
    labels: Option<Vec<String>>,
    add: Vec<Vec<i64>>,
    mul: Vec<Vec<i64>>,
    lambda: Option<Vec<Vec<i64>>>,
    sigma: Option<Vec<i64>>,
    iota: Option<Vec<i64>>,
}

fn check_entry(path: String, v: i64, n: usize) -> Result<Element, FormatError> {
    if v < 0 || v as u64 >= n as u64 {
        return Err(FormatError::Range(format!(
            "{path} = {v} out of range for order {n}"
        )));
    }
    Ok(v as Element)
}

fn check_vector(name: &str, raw: &[i64], n: usize) -> Result<Vec<Element>, FormatError> {
    if raw.len() != n {
        return Err(FormatError::Shape(format!(
            "{name} has length {}, expected {n}",
            raw.len()
        )));
    }
    raw.iter()
        .enumerate()
        .map(|(i, &v)| check_entry(format!("{name}[{i}]"), v, n))
        .collect()
}

fn check_matrix(name: &str, raw: &[Vec<i64>], n: usize) -> Result<Vec<Vec<Element>>, FormatError> {
    if raw.len() != n {
        return Err(FormatError::Shape(format!(
            "{name} has {} rows, expected {n}",
            raw.len()
        )));
    }
    raw.iter()
        .enumerate()
        .map(|(a, row)| check_vector(&format!("{name}[{a}]"), row, n))
        .collect()
}

fn presence(kind: StructureKind, field: &str, present: bool, required: bool) -> Result<(), FormatError> {
    match (present, required) {
        (false, true) => Err(FormatError::KindFieldMismatch(format!(
            "kind `{kind}` requires field `{field}`"
        ))),
        (true, false) => Err(FormatError::KindFieldMismatch(format!(
            "kind `{kind}` does not take field `{field}`"
        ))),
        _ => Ok(()),
    }
}

pub fn parse_structure(text: &str) -> Result<StructureFile, FormatError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax(e.to_string()))?;
    let kind = raw
        .kind
        .parse::<StructureKind>()
        .map_err(FormatError::Syntax)?;
    if raw.order < 1 {
        return Err(FormatError::Range(format!("order = {} must be at least 1", raw.order)));
    }
    let n = raw.order as usize;
    let (need_lambda, need_sigma, need_iota) = kind.fields();
    presence(kind, "lambda", raw.lambda.is_some(), need_lambda)?;
    presence(kind, "sigma", raw.sigma.is_some(), need_sigma)?;
    presence(kind, "iota", raw.iota.is_some(), need_iota)?;
    if let Some(labels) = &raw.labels {
        if labels.len() != n {
            return Err(FormatError::Shape(format!(
                "labels has length {}, expected {n}",
                labels.len()
            )));
        }
    }
    Ok(StructureFile {
        kind,
        order: n,
        labels: raw.labels,
        add: check_matrix("add", &raw.add, n)?,
        mul: check_matrix("mul", &raw.mul, n)?,
        lambda: raw.lambda.map(|m| check_matrix("lambda", &m, n)).transpose()?,
        sigma: raw.sigma.map(|v| check_vector("sigma", &v, n)).transpose()?,
        iota: raw.iota.map(|v| check_vector("iota", &v, n)).transpose()?,
    })
}

fn write_matrix(out: &mut String, rows: &[Vec<Element>]) {
    out.push_str("[\n");
    for (i, row) in rows.iter().enumerate() {
        let sep = if i + 1 < rows.len() { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", json_vector(row));
    }
    out.push_str("  ]");
}

fn json_vector(v: &[Element]) -> String {
    serde_json::to_string(v).expect("integers serialize")
}

impl StructureFile {
    fn bare(kind: StructureKind, add: &BinOpTable, mul: &BinOpTable) -> Self {
        StructureFile {
            kind,
            order: add.order(),
            labels: None,
            add: add.rows(),
            mul: mul.rows(),
            lambda: None,
            sigma: None,
            iota: None,
        }
    }

    pub fn from_semi_truss(t: &LeftSemiTruss) -> Self {
        StructureFile {
            lambda: Some(t.lambda().rows()),
            ..Self::bare(StructureKind::SemiTruss, t.add().table(), t.mul().table())
        }
    }

    pub fn from_brace_like(t: &BraceLikeSemiTruss) -> Self {
        StructureFile {
            lambda: Some(t.lambda().rows()),
            ..Self::bare(StructureKind::BraceLike, t.add().table(), t.mul().table())
        }
    }

    pub fn from_skew_truss(t: &SkewLeftTruss) -> Self {
        StructureFile {
            sigma: Some(t.sigma().image().to_vec()),
            ..Self::bare(StructureKind::SkewTruss, t.add().table(), t.mul().table())
        }
    }

    pub fn from_semi_brace(s: &LeftSemiBrace) -> Self {
        Self::bare(StructureKind::SemiBrace, s.add().table(), s.mul().table())
    }

    pub fn from_almost(a: &AlmostLeftSemiBrace) -> Self {
        StructureFile {
            iota: Some(a.iota().image().to_vec()),
            ..Self::bare(StructureKind::Almost, a.add().table(), a.mul().table())
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn add_table(&self) -> BinOpTable {
        BinOpTable::from_rows(&self.add).expect("validated on parse")
    }

    pub fn mul_table(&self) -> BinOpTable {
        BinOpTable::from_rows(&self.mul).expect("validated on parse")
    }

    pub fn lambda_family(&self) -> Option<LambdaFamily> {
        self.lambda
            .as_ref()
            .map(|rows| LambdaFamily::from_rows(rows).expect("validated on parse"))
    }

    pub fn sigma_map(&self) -> Option<SelfMap> {
        self.sigma
            .as_ref()
            .map(|v| SelfMap::new(v.clone()).expect("validated on parse"))
    }

    pub fn iota_map(&self) -> Option<SelfMap> {
        self.iota
            .as_ref()
            .map(|v| SelfMap::new(v.clone()).expect("validated on parse"))
    }

    /// Label of `a`, falling back to its index.
    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"kind\": \"{}\",", self.kind);
        let _ = writeln!(out, "  \"order\": {},", self.order);
        if let Some(labels) = &self.labels {
            let _ = writeln!(out, "  \"labels\": {},", serde_json::to_string(labels).expect("strings serialize"));
        }
        out.push_str("  \"add\": ");
        write_matrix(&mut out, &self.add);
        out.push_str(",\n  \"mul\": ");
        write_matrix(&mut out, &self.mul);
        if let Some(lambda) = &self.lambda {
            out.push_str(",\n  \"lambda\": ");
            write_matrix(&mut out, lambda);
        }
        if let Some(sigma) = &self.sigma {
            let _ = write!(out, ",\n  \"sigma\": {}", json_vector(sigma));
        }
        if let Some(iota) = &self.iota {
            let _ = write!(out, ",\n  \"iota\": {}", json_vector(iota));
        }
        out.push_str("\n}\n");
        out
    }
}

/// `{"kind": .., "order": n, "table": [..]}` for bare semigroups and groups.
pub fn table_to_json(kind: &str, table: &BinOpTable) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"kind\": \"{kind}\",");
    let _ = writeln!(out, "  \"order\": {},", table.order());
    out.push_str("  \"table\": ");
    write_matrix(&mut out, &table.rows());
    out.push_str("\n}\n");
    out
}

pub fn solution_to_json(r: &SolutionMap) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"order\": {},", r.order());
    out.push_str("  \"out1\": ");
    write_matrix(&mut out, r.out1());
    out.push_str(",\n  \"out2\": ");
    write_matrix(&mut out, r.out2());
    out.push_str("\n}\n");
    out
}

pub fn parse_solution(text: &str) -> Result<SolutionMap, FormatError> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RawSolution {
        order: i64,
        out1: Vec<Vec<i64>>,
        out2: Vec<Vec<i64>>,
    }
    let raw: RawSolution = serde_json::from_str(text).map_err(|e| FormatError::Syntax(e.to_string()))?;
    if raw.order < 1 {
        return Err(FormatError::Range(format!("order = {} must be at least 1", raw.order)));
    }
    let n = raw.order as usize;
    let out1 = check_matrix("out1", &raw.out1, n)?;
    let out2 = check_matrix("out2", &raw.out2, n)?;
    Ok(SolutionMap::from_rows(out1, out2).expect("validated above"))
}
