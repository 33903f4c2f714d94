//! Presentations and label files shipped with the tool.

use std::path::Path;

use sha2::{Digest, Sha256};

use operad_core::presentation::Presentation;
use operad_core::trees::Mode;

use crate::error::{CliError, Result};
use crate::format::PresFile;

pub const PRESENTATIONS: &[(&str, &str)] = &[
    ("ass", include_str!("../data/ass.pres")),
    ("lie", include_str!("../data/lie.pres")),
    ("comm", include_str!("../data/comm.pres")),
    ("ns-poisson", include_str!("../data/ns-poisson.pres")),
    ("digebra", include_str!("../data/digebra.pres")),
    ("ainfty-mu3", include_str!("../data/ainfty-mu3.pres")),
];

pub const LABELS: &[(&str, &str)] = &[("ass-phi", include_str!("../data/ass-phi.labels"))];

fn lookup(table: &'static [(&str, &str)], name: &str) -> Option<&'static str> {
    table.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// A builtin name or a path, read into memory.
pub fn read_source(table: &'static [(&str, &str)], name: &str) -> Result<(String, String)> {
    if let Some(t) = lookup(table, name) {
        return Ok((name.to_string(), t.to_string()));
    }
    let path = Path::new(name);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        return Ok((name.to_string(), text));
    }
    let known: Vec<&str> = table.iter().map(|(n, _)| *n).collect();
    Err(CliError::Usage(format!("`{name}` is neither a file nor one of: {}", known.join(", "))))
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub file: PresFile,
    /// First 16 hex digits of the SHA-256 of the normalized file.
    pub hash: String,
}

impl Loaded {
    pub fn presentation(&self) -> &Presentation {
        &self.file.presentation
    }
}

pub fn hash_text(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub fn load(name: &str, mode: Option<Mode>) -> Result<Loaded> {
    let (origin, text) = read_source(PRESENTATIONS, name)?;
    let mut file = PresFile::parse(&origin, &text)?;
    if let Some(m) = mode.filter(|m| *m != file.presentation.mode) {
        let p = &file.presentation;
        let rels: Vec<(String, String)> =
            p.relations.iter().map(|r| (r.label.clone(), r.element.to_string())).collect();
        let pairs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        file.presentation = Presentation::parse(&p.name, m, p.generators.clone(), &pairs)?;
        file.col_aliases.clear();
        file.row_aliases.clear();
    }
    let hash = hash_text(&file.write());
    Ok(Loaded { file, hash })
}
