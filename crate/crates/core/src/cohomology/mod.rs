//! Graded local cohomology: profiles computed by local duality, Hochster's
//! formula for Stanley-Reisner rings, and predictions for Rees algebras.

pub mod ext;
pub mod hochster;
pub mod predict;
pub mod profile;

pub use ext::*;
pub use hochster::*;
pub use predict::*;
pub use profile::*;
