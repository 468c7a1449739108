//! Finite lattices and the operator of relative complementation.
//!
//! [`Lattice`] stores a finite bounded lattice with precomputed join and
//! meet tables. On top of it:
//!
//! * [`complement`]: complements `x⁺`, relative complements `x^ab` in an
//!   [`Interval`], the induced sets `x̄_ab`, `x̂_ab`, and the induced-element
//!   test.
//! * [`closure`]: the closure operator `A ↦ (A^ab)^ab`, the ortholattice of
//!   closed sets, and the `≤₁` preorder.
//! * [`verify`]: checkers for the structural statements about these
//!   operators, returning [`CheckReport`]s with counterexamples.
//! * [`enumerate`]: every lattice up to isomorphism with at most 8 elements,
//!   and a driver running the checkers over all of them.
//! * [`format`] and [`dot`]: the `.lat` text format and Graphviz export.

pub mod closure;
pub mod complement;
pub mod dot;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod format;
pub mod interval;
pub mod iso;
pub mod lattice;
pub mod regress;
pub mod set;
pub mod verify;

pub use error::{Error, Result};
pub use interval::Interval;
pub use lattice::{ElementId, Lattice};
pub use set::ElementSet;
pub use verify::CheckReport;

/// Largest lattice the library will build.
pub const MAX_ELEMENTS: usize = 4096;
