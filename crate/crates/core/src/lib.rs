//! Exact computations on finite commutative rings: ideal lattices,
//! radicals and primes, and deciders for square-difference factor
//! absorbing (sdf-absorbing) ideals together with the structural criteria
//! that predict them.

pub mod classify;
pub mod construct;
pub mod criteria;
pub mod dsl;
pub mod error;
pub mod harness;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod limits;
pub mod queries;
pub mod report;
pub mod ring;
pub mod sdf;
pub mod verdict;

pub use construct::{
    localize, make_amalgamation, make_field, make_idealization, make_poly_quotient,
    make_poly_quotient_over, make_product, make_quotient, make_zn, ModuleSpec,
};
pub use error::{Error, Result};
pub use hom::RingHom;
pub use ideal::{hom_image_ideal, hom_preimage_ideal, Ideal};
pub use ring::{Construction, Elem, Element, FiniteRing};
pub use lattice::{
    is_maximal, is_maximal_via_quotient, is_radical, minimal_primes_over, nilradical,
    prime_decomposition, quotient_char, radical, DecompositionKind, IdealLattice, PrimeDecomposition,
};
pub use queries::{ring_queries, RingProfile, TwoKind};
pub use sdf::{
    is_prime, is_sdf_bruteforce, is_weakly_prime, is_weakly_sdf_bruteforce, sdf_via_linear_system,
};
pub use verdict::{Method, Verdict};
