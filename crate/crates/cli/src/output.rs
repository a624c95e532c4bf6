use serde_json::Value;
use trusslab::format::StructureFile;
use trusslab::{Element, ElementSet};

pub struct Output {
    pub json: bool,
    pub quiet: bool,
}

impl Output {
    /// Human-readable line; suppressed by `--json` and `--quiet`.
    pub fn line(&self, s: impl AsRef<str>) {
        if !self.json && !self.quiet {
            println!("{}", s.as_ref());
        }
    }

    /// The single JSON document printed under `--json`.
    pub fn document(&self, v: &Value) {
        if self.json && !self.quiet {
            println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
        }
    }
}

pub fn set(file: &StructureFile, xs: &ElementSet) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| file.label(x)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn matrix(rows: &[Vec<Element>]) -> String {
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("    {}", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
