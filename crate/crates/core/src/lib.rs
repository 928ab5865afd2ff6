//! Finite crossed modules of groups and their liftings.
//!
//! Every object in this crate is a finite, fully tabulated structure that
//! is validated exhaustively on construction, so every value reachable
//! through the public API satisfies its axioms.

pub mod derivation;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod groupoid;
pub mod homotopy;
pub mod lifting;
pub mod xmod;

pub use derivation::{Derivation, DerivationSemigroup};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupAction, GroupHom, Subgroup};
pub use groupoid::{FiniteGroupoid, GGAction, GroupGroupoid, GroupoidMorphism};
pub use homotopy::Homotopy;
pub use lifting::{Lifting, LiftingMorphism};
pub use xmod::{CrossedModule, StructureReport, TransitivityClass, XModMorphism};
