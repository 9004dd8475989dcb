//! Graded coalgebras, their Hopf versions, and the mirror construction.

pub mod builtin;
mod coalgebra;
mod hopf;
mod mirror;

pub use coalgebra::{verify_pi_coalgebra, PiCoalgebra};
pub use hopf::{
    interleaved_apply, verify_hopf, verify_identity_component_relations, HopfPiCoalgebra,
};
pub use mirror::{mirror, verify_action, verify_classical, ClassicalHopfAlgebra, GroupAction};

pub(crate) use coalgebra::{expect_shape, names};
pub(crate) use hopf::holds;
