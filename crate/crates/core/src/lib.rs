//! Finite quasi-ordered residuated Wajsberg structures: validation against
//! an axiom catalog, filter and implicative-filter analysis, checkers for
//! the implicative-filter propositions, small-model search, and a text
//! format with JSON reports.

pub mod filters;
pub mod io;
pub mod model;
pub mod propositions;
pub mod search;

pub use filters::{FilterKind, FilterVerdict, Subset};
pub use model::{validate, Axiom, AxiomSet, Classification, Element, FiniteStructure, QuasiOrder};
pub use search::{enumerate_models, gen_lukasiewicz, CanonicalForm, SearchConfig};
