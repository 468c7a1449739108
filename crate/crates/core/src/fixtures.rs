//! The lattices shipped under `fixtures/`, embedded at compile time.

use crate::format::parse_lattice;
use crate::lattice::Lattice;

pub const FIG1: &str = include_str!("../fixtures/fig1.lat");
pub const FIG2: &str = include_str!("../fixtures/fig2.lat");
pub const FIG4: &str = include_str!("../fixtures/fig4.lat");
pub const FIG5: &str = include_str!("../fixtures/fig5.lat");
pub const FIG6_PATTERN: &str = include_str!("../fixtures/fig6-pattern.lat");
pub const FIG7_PATTERN: &str = include_str!("../fixtures/fig7-pattern.lat");
pub const MN: &str = include_str!("../fixtures/mn.lat");

/// `(file name, contents)` for every shipped fixture.
pub const ALL: [(&str, &str); 7] = [
    ("fig1.lat", FIG1),
    ("fig2.lat", FIG2),
    ("fig4.lat", FIG4),
    ("fig5.lat", FIG5),
    ("fig6-pattern.lat", FIG6_PATTERN),
    ("fig7-pattern.lat", FIG7_PATTERN),
    ("mn.lat", MN),
];

fn load(text: &str) -> Lattice {
    parse_lattice(text).expect("shipped fixture is a lattice")
}

/// Non-modular complemented lattice with ten elements.
pub fn fig1() -> Lattice {
    load(FIG1)
}

/// Subspace lattice of GF(2)³.
pub fn fig2() -> Lattice {
    load(FIG2)
}

/// 2 × M₃.
pub fn fig4() -> Lattice {
    load(FIG4)
}

/// Non-modular relatively complemented lattice; `[e, 1]` is M₄.
pub fn fig5() -> Lattice {
    load(FIG5)
}

pub fn fig6_pattern() -> Lattice {
    load(FIG6_PATTERN)
}

pub fn fig7_pattern() -> Lattice {
    load(FIG7_PATTERN)
}

pub fn mn() -> Lattice {
    load(MN)
}
