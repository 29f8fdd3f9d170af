//! Exact commutative algebra for Rees algebras of standard graded rings:
//! Groebner bases of presentation ideals, minimal free resolutions, graded
//! local cohomology via local duality, and checks of the regularity,
//! a-invariant and depth relations between a ring and its Rees algebra.

pub mod cohomology;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod rees;
pub mod resolution;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use field::{Field, Scalar};
pub use groebner::{GroebnerBasis, Ideal};
pub use hilbert::HilbertSeries;
pub use monomial::{bidegree_of, Bidegree, Monomial};
pub use order::{ModuleOrder, OrderKind, TermOrder};
pub use poly::{Polynomial, Ring};
