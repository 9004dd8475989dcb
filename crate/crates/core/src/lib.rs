//! Exact computations with Hopf coalgebras graded by a finite group: axiom
//! checks, comodules and their simplicity, quotients and subcoalgebras, and
//! induced and coinduced comodules with explicit isomorphism witnesses.

pub mod coinduction;
pub mod comodules;
pub mod error;
pub mod group;
pub mod induction;
pub mod linalg;
pub mod report;
pub mod structures;
pub mod subquotients;

pub use error::{Error, Result};
pub use group::GroupTable;
pub use linalg::{FieldSpec, Matrix, Scalar, Subspace};
pub use report::{Check, Report};
