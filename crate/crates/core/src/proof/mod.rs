//! The Hilbert system: axiom recognition and proof checking, the
//! announcement reduction, and a tableau for the announcement-free part.

mod axioms;
mod reduce;
mod refute;
mod tableau;
mod verify;

pub use axioms::{
    is_axiom_instance, is_tautology, schemas_matching, Axiom, TooManyLeaves, MAX_TAUTOLOGY_LEAVES,
};
pub use reduce::{reduce, ReduceError};
pub use refute::refutation;
pub use tableau::{satisfiable, valid, SatResult, TableauError};
pub use verify::{
    proof_from_json, proof_to_json, verify_proof, Justification, Proof, ProofError, ProofFileError,
    ProofLine,
};
