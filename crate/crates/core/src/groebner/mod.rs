//! Division, Buchberger's algorithm, syzygies and elimination.

pub mod buchberger;
pub mod division;
pub mod ideal;
pub mod syzygy;
pub mod vector;

pub use buchberger::{first_failing_pair, groebner_basis, normal_form};
pub use division::divide;
pub use ideal::{GroebnerBasis, Ideal};
pub use syzygy::{apply_map, syzygies};
pub use vector::{FreeModule, Term, Vector};
