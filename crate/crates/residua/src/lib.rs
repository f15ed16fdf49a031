//! Exact combinatorics of m-primary monomial ideals in the local ring of
//! holomorphic germs at the origin of C^n.
//!
//! Everything here is integer or rational arithmetic on exponent vectors;
//! there is no floating point anywhere. The library computes Newton
//! polyhedra with complete facet descriptions, Rees valuations, essential
//! generator sets, integral closures, powers, socles, irreducible
//! decompositions, and the verification predicates built on top of them
//! (Jacobian membership, Briancon-Skoda containments, annihilator bounds,
//! strictness witnesses).
//!
//! Scale target: ambient dimension n <= 6 and a couple dozen generators.
//! Facet enumeration is exponential in n by design; exactness and
//! verifiability win over asymptotics at this size.

pub mod error;
pub mod ideal;
pub mod lattice;
pub mod oracle;
pub mod polyhedron;
pub mod random;
pub mod residue;

pub use error::Error;
pub use ideal::{MonomialIdeal, StandardBasis};
pub use lattice::{exact_determinant, ExponentVector, IntegerVector, Term};
pub use polyhedron::{Facet, NewtonPolyhedron};
pub use residue::{
    annihilator_bounds, briancon_skoda_verify, essential_sets, hickel_verdict, jacobian_term,
    rees_valuations, strictness_witness, theorem_c_check, AnnihilatorBounds, EssentialSet,
    HickelVerdict, MonomialTuple, ReesValuation, StrictnessWitness,
};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
