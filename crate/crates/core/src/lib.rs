//! Finite monoid acts, their congruence lattices, and exhaustive checks of
//! radical and torsion theory over universes of small acts.
//!
//! Build a [`Universe`] with [`build_universe`], then work with
//! [`RadicalAssignment`]s and [`ActClass`]es over it.

pub mod act;
pub mod canon;
pub mod class;
pub mod congruence;
pub mod error;
pub mod hom;
pub mod monoid;
pub mod par;
pub mod partition;
pub mod radical;
pub mod report;
pub mod torsion;
pub mod universe;

pub use act::{Act, Subact};
pub use class::{ActClass, Predicate};
pub use congruence::{CongruenceLattice, ReesSystem};
pub use error::{Error, Result};
pub use hom::Homomorphism;
pub use monoid::Monoid;
pub use partition::Partition;
pub use radical::{RadicalAssignment, RadicalFilter};
pub use report::{AxiomReport, Skip, Verdict, Witness};
pub use torsion::TorsionPair;
pub use universe::{build_universe, Bounds, Located, Universe};
