//! Line-oriented presentation and label files.
//!
//! ```text
//! operad ass
//! mode nonsigma
//! gen x arity 2
//! rel r : x(1,x(2,3)) - x(x(1,2),3)
//! alias col x(x(x(1,2),3),4) a
//! alias row r(x(1,2),3,4) 1 -1
//! coeff r x(1,x(2,3)) Phi
//! ```

use std::fmt::Write;

use operad_core::presentation::Presentation;
use operad_core::trees::{gen_labels, parse_element, GeneratorSymbol, Mode, Symmetry};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AliasLine {
    pub tree: String,
    pub alias: String,
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffLine {
    pub relation: String,
    pub term: String,
    pub base: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PresFile {
    pub presentation: Presentation,
    pub col_aliases: Vec<AliasLine>,
    pub row_aliases: Vec<AliasLine>,
    pub coeffs: Vec<CoeffLine>,
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::NonSigma => "nonsigma",
        Mode::Symmetric => "symmetric",
    }
}

fn parse_sign(file: &str, line: usize, tok: Option<&str>) -> Result<i32> {
    match tok {
        None | Some("1") | Some("+1") => Ok(1),
        Some("-1") => Ok(-1),
        Some(t) => Err(CliError::Syntax { file: file.into(), line, msg: format!("bad sign `{t}`") }),
    }
}

impl PresFile {
    pub fn parse(file: &str, text: &str) -> Result<PresFile> {
        let err = |line: usize, msg: String| CliError::Syntax { file: file.into(), line, msg };
        let mut name = None;
        let mut mode = Mode::NonSigma;
        let mut gens: Vec<GeneratorSymbol> = Vec::new();
        let mut rels: Vec<(usize, String, String)> = Vec::new();
        let (mut cols, mut rows, mut coeffs) = (Vec::new(), Vec::new(), Vec::new());
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = strip(raw);
            if body.is_empty() {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            match toks[0] {
                "operad" if toks.len() == 2 => name = Some(toks[1].to_string()),
                "mode" if toks.len() == 2 => {
                    mode = match toks[1] {
                        "nonsigma" => Mode::NonSigma,
                        "symmetric" => Mode::Symmetric,
                        m => return Err(err(line, format!("unknown mode `{m}`"))),
                    }
                }
                "gen" => {
                    if toks.len() < 4 || toks[2] != "arity" {
                        return Err(err(line, "expected `gen <name> arity <k>`".into()));
                    }
                    let arity = toks[3].parse().map_err(|_| err(line, format!("bad arity `{}`", toks[3])))?;
                    let mut g = GeneratorSymbol::new(toks[1], arity);
                    let mut rest = &toks[4..];
                    while let [key, val, tail @ ..] = rest {
                        match *key {
                            "degree" => g.degree = val.parse().map_err(|_| err(line, format!("bad degree `{val}`")))?,
                            "sym" => {
                                g.symmetry = match *val {
                                    "anti" => Symmetry::Sign,
                                    "comm" => Symmetry::Trivial,
                                    s => return Err(err(line, format!("unknown symmetry `{s}`"))),
                                }
                            }
                            other => return Err(err(line, format!("unknown generator option `{other}`"))),
                        }
                        rest = tail;
                    }
                    if !rest.is_empty() {
                        return Err(err(line, "dangling generator option".into()));
                    }
                    gens.push(g);
                }
                "rel" => {
                    let Some((head, expr)) = body.split_once(':') else {
                        return Err(err(line, "expected `rel <label> : <expression>`".into()));
                    };
                    let head: Vec<&str> = head.split_whitespace().collect();
                    if head.len() != 2 {
                        return Err(err(line, "expected `rel <label> : <expression>`".into()));
                    }
                    rels.push((line, head[1].to_string(), expr.trim().to_string()));
                }
                "alias" if toks.len() == 4 || toks.len() == 5 => {
                    let a = AliasLine {
                        tree: toks[2].into(),
                        alias: toks[3].into(),
                        sign: parse_sign(file, line, toks.get(4).copied())?,
                    };
                    match toks[1] {
                        "col" => cols.push(a),
                        "row" => rows.push(a),
                        s => return Err(err(line, format!("alias kind must be `row` or `col`, got `{s}`"))),
                    }
                }
                "coeff" if toks.len() == 4 => {
                    coeffs.push(CoeffLine { relation: toks[1].into(), term: toks[2].into(), base: toks[3].into() })
                }
                t => return Err(err(line, format!("unrecognized statement `{t}`"))),
            }
        }
        let name = name.ok_or_else(|| err(0, "missing `operad <name>`".into()))?;
        // Check every relation on its own first so errors carry a line.
        let labels = gen_labels(&gens, mode)?;
        for (line, _, expr) in &rels {
            parse_element(expr, &labels).map_err(|e| err(*line, e.to_string()))?;
        }
        let pairs: Vec<(&str, &str)> = rels.iter().map(|(_, l, e)| (l.as_str(), e.as_str())).collect();
        let presentation = Presentation::parse(&name, mode, gens, &pairs)?;
        Ok(PresFile { presentation, col_aliases: cols, row_aliases: rows, coeffs })
    }

    pub fn from_presentation(p: Presentation) -> PresFile {
        PresFile { presentation: p, col_aliases: Vec::new(), row_aliases: Vec::new(), coeffs: Vec::new() }
    }

    pub fn write(&self) -> String {
        let p = &self.presentation;
        let mut out = String::new();
        writeln!(out, "operad {}", p.name).unwrap();
        writeln!(out, "mode {}", mode_name(p.mode)).unwrap();
        for g in &p.generators {
            write!(out, "gen {} arity {}", g.name, g.arity).unwrap();
            if g.degree != 0 {
                write!(out, " degree {}", g.degree).unwrap();
            }
            match g.symmetry {
                Symmetry::None => {}
                Symmetry::Sign => out.push_str(" sym anti"),
                Symmetry::Trivial => out.push_str(" sym comm"),
            }
            out.push('\n');
        }
        for r in &p.relations {
            writeln!(out, "rel {} : {}", r.label, r.element).unwrap();
        }
        for (kind, list) in [("col", &self.col_aliases), ("row", &self.row_aliases)] {
            for a in list {
                write!(out, "alias {kind} {} {}", a.tree, a.alias).unwrap();
                if a.sign != 1 {
                    write!(out, " {}", a.sign).unwrap();
                }
                out.push('\n');
            }
        }
        for c in &self.coeffs {
            writeln!(out, "coeff {} {} {}", c.relation, c.term, c.base).unwrap();
        }
        out
    }
}

/// One decorated entry of `π(n)`, addressed by row and column aliases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelEntry {
    pub row: String,
    pub col: String,
    pub base: String,
    pub decoration: String,
}

/// `entry <row> <col> <base> [decoration]`, decoration defaulting to `_`.
pub fn parse_labels(file: &str, text: &str) -> Result<Vec<LabelEntry>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let body = strip(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] != "entry" || !(4..=5).contains(&toks.len()) {
            return Err(CliError::Syntax {
                file: file.into(),
                line: k + 1,
                msg: "expected `entry <row> <col> <base> [decoration]`".into(),
            });
        }
        out.push(LabelEntry {
            row: toks[1].into(),
            col: toks[2].into(),
            base: toks[3].into(),
            decoration: toks.get(4).unwrap_or(&"_").to_string(),
        });
    }
    Ok(out)
}
