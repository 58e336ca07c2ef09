//! Finite p-group computations around non-inner central automorphisms.
//!
//! Groups are materialized as multiplication tables ([`FiniteGroup`]). On top
//! of that the crate computes the structural subgroups of a p-group
//! ([`structure`]), finds a decomposition `G = H x K` with `H` a non-trivial
//! abelian direct factor ([`decompose`]), builds the automorphism
//! `m h^i k -> m h^i k g^i` ([`construct`]), checks every claimed property
//! exhaustively ([`verify`]) and cross-validates the result by brute-force
//! enumeration on small groups ([`oracle`]).

pub mod abelian;
pub mod catalogue;
pub mod construct;
pub mod decompose;
pub mod error;
pub mod group;
pub mod map;
pub mod oracle;
pub mod spec;
pub mod structure;
pub mod verify;

pub use error::{DecompositionError, Error, Result};
pub use group::{FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use map::GroupMap;
pub use spec::{build_group, GroupSpec, SpecFile};
pub use verify::{run_theorem_pipeline, TheoremReport};
