use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice has no elements")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("cover relation is cyclic (through `{0}`)")]
    Cycle(String),
    #[error("not a lattice: `{x}` and `{y}` have no {which}")]
    NotALattice {
        x: String,
        y: String,
        which: &'static str,
    },
    #[error("poset has no {0} element")]
    NoBounds(&'static str),
    #[error("sets belong to different lattices")]
    UniverseMismatch,
    #[error("`{a}` is not below `{b}`")]
    NotComparable { a: String, b: String },
    #[error("`{0}` lies outside the interval")]
    OutsideInterval(String),
    #[error("M_n needs n >= 3 (got {0})")]
    MnTooSmall(usize),
    #[error("lattice would have {0} elements, the limit is {max}", max = crate::MAX_ELEMENTS)]
    SizeOverflow(usize),
    #[error("closed-set family needs a < b")]
    DegenerateInterval,
    #[error("hypothesis not met: {0}")]
    HypothesisFailed(String),
    #[error("x -> (x^ab)^ab is not injective on the interval")]
    InjectivityFailed,
    #[error("interval is not complemented: `{0}` has no relative complement")]
    NotComplemented(String),
    #[error("bad factor list: {0}")]
    BadFactors(String),
    #[error("enumeration is limited to n <= 8 (got {0})")]
    SizeBound(usize),
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// True for errors about the lattice description itself (syntax, order
    /// or size), as opposed to a bad query against a valid lattice.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Empty
                | Error::DuplicateElement(_)
                | Error::Cycle(_)
                | Error::NotALattice { .. }
                | Error::NoBounds(_)
                | Error::SizeOverflow(_)
                | Error::Parse { .. }
        )
    }
}
