//! Finite structures `(A, →, ⊙, ¬, 1, ≼)` and the axiom catalog.
//!
//! The catalog combines a commutative residuated monoid under a quasi-order
//! (QO-*, MON-*, TOP, RES, COMPAT) with the Wajsberg identities W1-W4 and
//! the LINK condition tying `→` to `≼`. Each axiom is checked separately and
//! failures carry the first violating tuple in lexicographic order.

mod axioms;
mod order;
mod structure;
mod validate;

pub use axioms::{holds_at, Axiom, AxiomSet, UnknownAxiom};
pub(crate) use axioms::{eval, find_tuple, Blocked, Interp, Probe};
pub use order::QuasiOrder;
pub use structure::{FiniteStructure, StructureBuilder, StructureError, Table};
pub use validate::{
    find_violation, validate, validate_axioms, Classification, Diagnostic, ValidationReport,
};

/// An element of a finite carrier, identified by its index `0..n`.
pub type Element = usize;

/// The implication order of `s`: `x ≼ y` iff `x → y = 1`.
pub fn derived_order(s: &FiniteStructure) -> QuasiOrder {
    s.derived_order()
}

/// The Wajsberg join `(x → y) → y`.
pub fn join(s: &FiniteStructure, x: Element, y: Element) -> Element {
    s.join(x, y)
}
