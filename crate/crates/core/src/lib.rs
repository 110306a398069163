//! Spectral extremal tooling for `K_{s,t}`-minor-free graphs.
//!
//! The crate is organised around a small simple-graph type ([`Graph`]) with a
//! bitset tier for graphs of at most 64 vertices and an adjacency-list tier for
//! larger constructions. On top of it sit:
//!
//! * [`families`]: generators for the named extremal constructions,
//! * [`minors`]: minor containment with branch-set witnesses and the
//!   `(s,t)`-property,
//! * [`spectral`]: certified spectral-radius enclosures, exact characteristic
//!   polynomials and exact comparisons,
//! * [`search`]: isomorph-free enumeration, exhaustive extremal search,
//!   candidate showdowns and theorem verification drivers,
//! * [`graph6`] and [`certificate`]: interchange formats.


pub mod certificate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod minors;
pub mod search;

pub mod spectral;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{CanonicalCode, DegreeSequence, Graph, Tier};
pub use minors::{BranchModel, MinorMode, MinorPattern};
pub use spectral::{PerronVector, RootInterval};
