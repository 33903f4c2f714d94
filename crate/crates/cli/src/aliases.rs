//! Published basis labels for the builtin presentations.

use std::collections::BTreeMap;

use operad_core::algebra::{rat, Rational, Signed, SparseMatrix};
use operad_core::presentation::{PiMatrix, RelationModule};
use operad_core::trees::{canonicalize, parse_tree, SymbolResolver, Tree};

use crate::error::{CliError, Result};
use crate::format::{AliasLine, PresFile};

/// For every alias, in file order: the canonical basis index and the sign
/// relating the alias to that basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AliasTable {
    pub rows: Vec<(usize, String, i32)>,
    pub cols: Vec<(usize, String, i32)>,
}

fn resolve(
    lines: &[AliasLine],
    n: usize,
    syms: &dyn SymbolResolver,
    place: &dyn Fn(&Tree) -> Result<(usize, i32)>,
) -> Result<Vec<(usize, String, i32)>> {
    let mut out = Vec::new();
    for a in lines {
        let t = parse_tree(&a.tree, syms).map_err(|e| CliError::Alias(format!("{}: {e}", a.tree)))?;
        if t.arity() != n {
            continue;
        }
        let (i, s) = place(&t)?;
        out.push((i, a.alias.clone(), s * a.sign));
    }
    Ok(out)
}

fn check_bijective(list: &[(usize, String, i32)], size: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; size];
    for (i, a, _) in list {
        if std::mem::replace(&mut seen[*i], true) {
            return Err(CliError::Alias(format!("{what} alias `{a}` repeats a basis element")));
        }
    }
    if list.len() != size {
        return Err(CliError::Alias(format!("{} of {size} {what}s have aliases", list.len())));
    }
    Ok(())
}

impl AliasTable {
    /// The aliases for arity `pm.arity`, or `None` if the file has none.
    pub fn resolve(rm: &RelationModule, pm: &PiMatrix, file: &PresFile) -> Result<Option<AliasTable>> {
        let mode = rm.mode();
        let n = pm.arity;
        let gens = rm.generators.clone();
        let mut all = gens.clone();
        all.extend(rm.relation_labels());
        let cols = resolve(&file.col_aliases, n, &gens, &|t| {
            let (c, s) = canonicalize(t, mode);
            let j = pm.col_index(&c).ok_or_else(|| CliError::Alias(format!("{t} is not a basis tree")))?;
            Ok((j, s))
        })?;
        let rows = resolve(&file.row_aliases, n, &all, &|t| {
            let e = rm.canonical(t);
            let mut it = e.iter();
            match (it.next(), it.next()) {
                (Some((m, c)), None) if c.abs() == rat(1) => {
                    let i = pm.row_index(m).ok_or_else(|| CliError::Alias(format!("{t} is not a module monomial")))?;
                    Ok((i, if c.is_positive() { 1 } else { -1 }))
                }
                _ => Err(CliError::Alias(format!("{t} is not a signed module monomial"))),
            }
        })?;
        if rows.is_empty() && cols.is_empty() {
            return Ok(None);
        }
        check_bijective(&rows, pm.rows.len(), "row")?;
        check_bijective(&cols, pm.cols.len(), "column")?;
        Ok(Some(AliasTable { rows, cols }))
    }

    /// `m` in alias order and alias signs, labelled by the aliases.
    pub fn apply(&self, m: &SparseMatrix) -> SparseMatrix {
        let rpos: BTreeMap<usize, (usize, i32)> =
            self.rows.iter().enumerate().map(|(k, (i, _, s))| (*i, (k, *s))).collect();
        let cpos: BTreeMap<usize, (usize, i32)> =
            self.cols.iter().enumerate().map(|(k, (j, _, s))| (*j, (k, *s))).collect();
        let mut out = SparseMatrix::new(
            self.rows.iter().map(|r| r.1.clone()).collect(),
            self.cols.iter().map(|c| c.1.clone()).collect(),
        );
        for ((r, c), x) in m.entries() {
            let (k, s) = rpos[r];
            let (l, t) = cpos[c];
            out.set(k, l, x * Rational::from_integer((s * t).into()));
        }
        out
    }

    pub fn row(&self, alias: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.1 == alias)
    }

    pub fn col(&self, alias: &str) -> Option<usize> {
        self.cols.iter().position(|c| c.1 == alias)
    }
}
