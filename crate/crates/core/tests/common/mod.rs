#![allow(dead_code)]

use operad_core::presentation::Presentation;
use operad_core::trees::{GeneratorSymbol, Mode, Symmetry};

pub fn ass() -> Presentation {
    Presentation::parse(
        "ass",
        Mode::NonSigma,
        vec![GeneratorSymbol::new("x", 2)],
        &[("r", "x(1,x(2,3)) - x(x(1,2),3)")],
    )
    .unwrap()
}

pub fn lie() -> Presentation {
    Presentation::parse(
        "lie",
        Mode::Symmetric,
        vec![GeneratorSymbol::new("x", 2).with_symmetry(Symmetry::Sign)],
        &[("r", "x(1,x(2,3)) + x(2,x(3,1)) + x(3,x(1,2))")],
    )
    .unwrap()
}

pub fn comm() -> Presentation {
    Presentation::parse(
        "comm",
        Mode::Symmetric,
        vec![GeneratorSymbol::new("y", 2).with_symmetry(Symmetry::Trivial)],
        &[("s", "y(1,y(2,3)) - y(y(1,2),3)")],
    )
    .unwrap()
}

pub fn ns_poisson() -> Presentation {
    let mut rels = Vec::new();
    let ops = ["o", "b"];
    let mut texts = Vec::new();
    for a in ops {
        for b in ops {
            texts.push((format!("r{a}{b}"), format!("{a}(1,{b}(2,3)) - {b}({a}(1,2),3)")));
        }
    }
    for (l, t) in &texts {
        rels.push((l.as_str(), t.as_str()));
    }
    Presentation::parse(
        "ns-poisson",
        Mode::NonSigma,
        vec![GeneratorSymbol::new("o", 2), GeneratorSymbol::new("b", 2)],
        &rels,
    )
    .unwrap()
}

pub fn digebra() -> Presentation {
    Presentation::parse(
        "digebra",
        Mode::NonSigma,
        vec![GeneratorSymbol::new("o", 2), GeneratorSymbol::new("b", 2)],
        &[
            ("r1", "o(1,o(2,3)) - o(o(1,2),3)"),
            ("r2", "o(1,o(2,3)) - o(1,b(2,3))"),
            ("r3", "o(b(1,2),3) - b(1,o(2,3))"),
            ("r4", "b(o(1,2),3) - b(b(1,2),3)"),
            ("r5", "b(1,b(2,3)) - b(b(1,2),3)"),
        ],
    )
    .unwrap()
}

pub fn ainfty() -> Presentation {
    Presentation::parse(
        "ainfty-mu3",
        Mode::NonSigma,
        vec![GeneratorSymbol::new("m", 3).with_degree(-1)],
        &[("r", "m(m(1,2,3),4,5) + m(1,m(2,3,4),5) + m(1,2,m(3,4,5))")],
    )
    .unwrap()
}
