use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Element, Label, Tree};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Looks up vertex labels by name.
pub trait SymbolResolver {
    fn resolve(&self, name: &str) -> Option<Arc<Label>>;
}

impl SymbolResolver for [Arc<Label>] {
    fn resolve(&self, name: &str) -> Option<Arc<Label>> {
        self.iter().find(|l| l.name == name).cloned()
    }
}

impl SymbolResolver for Vec<Arc<Label>> {
    fn resolve(&self, name: &str) -> Option<Arc<Label>> {
        self.as_slice().resolve(name)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { col: self.pos + 1, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&alloc::format!("expected `{}`", c as char))
        }
    }

    fn integer(&mut self) -> Option<String> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn ident(&mut self) -> Option<String> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() {
            let c = self.s[self.pos];
            let ok = c.is_ascii_alphanumeric() || c == b'_' || c == b'!' || c == b'\'' || c == b'.';
            if !ok || (self.pos == start && c.is_ascii_digit()) {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn tree(c: &mut Cursor<'_>, syms: &dyn SymbolResolver) -> Result<Tree> {
    if let Some(num) = c.integer() {
        let v: u32 = num.parse().map_err(|_| Error::Parse { col: c.pos, msg: "leaf out of range".into() })?;
        if v == 0 {
            return c.err("leaves are numbered from 1");
        }
        return Ok(Tree::Leaf(v));
    }
    let start = c.pos;
    let Some(name) = c.ident() else {
        return c.err("expected a leaf number or a symbol");
    };
    let Some(label) = syms.resolve(&name) else {
        c.pos = start;
        return c.err(&alloc::format!("unknown symbol `{name}`"));
    };
    c.expect(b'(')?;
    let mut kids = alloc::vec![tree(c, syms)?];
    while c.eat(b',') {
        kids.push(tree(c, syms)?);
    }
    c.expect(b')')?;
    if kids.len() != label.arity {
        c.pos = start;
        return c.err(&alloc::format!("`{name}` takes {} inputs, got {}", label.arity, kids.len()));
    }
    Ok(Tree::Node(label, kids))
}

fn check_leaves(t: &Tree, c: &Cursor<'_>) -> Result<()> {
    let mut ls = t.leaves();
    ls.sort_unstable();
    if ls.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
        return c.err("leaf labels must be exactly 1..n");
    }
    Ok(())
}

/// Parses a single monomial such as `x(x(1,2),3)`.
pub fn parse_tree(text: &str, syms: &dyn SymbolResolver) -> Result<Tree> {
    let mut c = Cursor::new(text);
    let t = tree(&mut c, syms)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    check_leaves(&t, &c)?;
    Ok(t)
}

/// Parses a signed sum of monomials with optional rational coefficients,
/// e.g. `x(x(1,2),3) - 1/2*x(1,x(2,3))`.
pub fn parse_element(text: &str, syms: &dyn SymbolResolver) -> Result<Element> {
    let mut c = Cursor::new(text);
    let mut terms: Vec<(Tree, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let mut neg = false;
        if c.eat(b'-') {
            neg = true;
        } else if !c.eat(b'+') && !first {
            break;
        }
        first = false;
        let save = c.pos;
        let mut coeff = Rational::from_integer(BigInt::from(1));
        if let Some(num) = c.integer() {
            let mut q = Rational::from_integer(num.parse::<BigInt>().unwrap());
            if c.eat(b'/') {
                let Some(den) = c.integer() else {
                    return c.err("expected a denominator");
                };
                let den: BigInt = den.parse().unwrap();
                if den == BigInt::from(0) {
                    return c.err("zero denominator");
                }
                q /= Rational::from_integer(den);
                c.expect(b'*')?;
                coeff = q;
            } else if c.eat(b'*') {
                coeff = q;
            } else {
                // a bare leaf term
                c.pos = save;
            }
        }
        let t = tree(&mut c, syms)?;
        check_leaves(&t, &c)?;
        if neg {
            coeff = -coeff;
        }
        terms.push((t, coeff));
        if c.at_end() {
            break;
        }
    }
    if !c.at_end() {
        return c.err("expected `+` or `-`");
    }
    let arity = terms[0].0.arity();
    let mut e = Element::zero(arity);
    for (t, q) in terms {
        if t.arity() != arity {
            return c.err("terms have different arities");
        }
        e.add_term(t, q);
    }
    Ok(e)
}
