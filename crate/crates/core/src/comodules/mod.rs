//! Comodules over graded coalgebras, their sums and morphisms, and
//! simplicity via closure of seed vectors under the coaction.

mod comodule;
mod simplicity;

pub use comodule::{
    check_equivalence_witness, coaction_operators, direct_sum, find_intertwiner_space, immersion,
    projection, verify_comodule, verify_hopf_comodule, CoactionOperator, HopfPiComodule,
    PiComodule,
};
pub use simplicity::{
    is_simple, subcomodule_closure, Exactness, SimplicityVerdict, SubcomoduleFamily, Witness,
    DEFAULT_SEED_CAP,
};
