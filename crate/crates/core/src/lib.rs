//! Exact S-approximation spaces and Dempster-Shafer belief structures.
//!
//! The crate covers:
//!
//! - S-approximation spaces `(U, W, T, S)` with lower/upper approximations,
//!   POS/NEG/BR regions and the qualities of approximation ([`regions`]);
//! - partial monotonicity, inflection sets and reduction ([`monotone`]);
//! - belief structures, Möbius inversion and the belief axioms
//!   ([`evidence`]);
//! - constructions between the two worlds ([`bridges`]);
//! - seeded generators and an exhaustive property checker ([`verify`]).
//!
//! All numbers are exact [`Rational`]s; nothing is compared with a tolerance.

pub mod bridges;
pub mod decider;
pub mod error;
pub mod evidence;
pub mod format;
pub mod monotone;
pub mod rational;
pub mod regions;
pub mod space;
pub mod universe;
pub mod verify;

pub use decider::{eval_decider, Decider, DeciderKind, TableDecider};
pub use error::{Error, Result};
pub use evidence::{
    build_belief_structure, check_belief_axioms, evaluate, mobius, zeta, AxiomReport,
    BeliefStructure, EvidenceReading, SetFunction,
};
pub use monotone::{
    check_partial_monotone, inflection_points, is_irreducible, reduce, trivial_elements,
    InflectionSet, MonotoneReport, MonotoneScope,
};
pub use rational::Rational;
pub use regions::{decompose, lower_approx, quality, upper_approx, QualityPair, RegionDecomposition};
pub use space::{build_space, SApproxSpace};
pub use universe::{ElementSet, Universe, MAX_ENUMERATION_WIDTH};
pub use bridges::{
    belief_from_space, induce_belief, space_from_belief, Diagnostic, InducedMassResult, Mode,
};
pub use verify::{
    exit_code, replay, verify_claims, ClaimId, ClaimReport, ClaimStatus, RandomConfig,
    VerifySource, Witness,
};
