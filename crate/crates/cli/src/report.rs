//! Tables over a directory of search certificates.

use std::path::Path;

use anyhow::{Context, Result};
use spex_core::certificate::Certificate;

use crate::ReportFormat;

const COLUMNS: [&str; 13] = [
    "file",
    "n",
    "constraint",
    "connectivity",
    "pruning",
    "examined",
    "feasible",
    "winner",
    "rho_lo",
    "rho_hi",
    "unique",
    "heuristic",
    "config_hash",
];

fn row(file: &str, c: &Certificate) -> Vec<String> {
    let enc = |v: &serde_json::Value| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
    vec![
        file.to_string(),
        c.spec.n.to_string(),
        c.spec.constraint.to_string(),
        enc(&serde_json::to_value(c.spec.connectivity).unwrap()),
        enc(&serde_json::to_value(c.spec.pruning).unwrap()),
        c.examined.to_string(),
        c.feasible.to_string(),
        c.winner.clone().unwrap_or_default(),
        c.rho.as_ref().map(|r| format!("{:.12}", r.lo)).unwrap_or_default(),
        c.rho.as_ref().map(|r| format!("{:.12}", r.hi)).unwrap_or_default(),
        c.unique.to_string(),
        c.heuristic.to_string(),
        c.config_hash.clone(),
    ]
}

/// Reads every `*.json` file in `dir` (sorted by name); any unreadable or
/// unsupported certificate aborts the report.
pub fn render(dir: &Path, format: ReportFormat) -> Result<String> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    for path in &files {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cert = Certificate::from_json(&text).with_context(|| format!("{}", path.display()))?;
        let name = path.file_name().unwrap().to_string_lossy();
        rows.push(row(&name, &cert));
    }
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(COLUMNS)?;
            for r in &rows {
                w.write_record(r)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        ReportFormat::Markdown => {
            let mut s = format!("| {} |\n|{}\n", COLUMNS.join(" | "), "---|".repeat(COLUMNS.len()));
            for r in &rows {
                let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
                s.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
            Ok(s)
        }
    }
}
