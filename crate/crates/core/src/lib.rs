//! Morse complexes of simplicial complexes and their symmetries.
//!
//! A discrete vector field on a finite simplicial complex K is a matching
//! of codimension-one incidences (σ, τ); it is a *gradient* field when it
//! admits no closed V-path. The Morse complex M(K) records all of them:
//! its vertices are the primitive vectors of K and its faces are the
//! nonempty gradient fields, a simplicial complex because every subfield
//! of a gradient field is gradient.
//!
//! This crate builds M(K) explicitly, computes automorphism groups of K,
//! of its Hasse diagram H(K) and of M(K) by exhaustive refinement-pruned
//! search, and mechanically verifies how Aut(M(K)) is classified by the
//! shape of K — generically Aut(K) itself, with exactly two exceptional
//! families (cycles and boundaries of simplices) where extra symmetries
//! appear. See [`verify::verify_main_theorem`] for the statement-by-
//! statement verification and [`morse`] for the constructions.
//!
//! The crate works at desk scale: every group is stored by its elements
//! and every gradient field is enumerated, subject to explicit budgets
//! that turn runaway instances into errors rather than hangs.

pub mod autgroup;
pub mod complex;
pub mod fixtures;
pub mod graph;
pub mod hasse;
pub mod morse;
pub mod perm;
pub mod simplex;
pub mod verify;

pub use autgroup::{
    complex_automorphisms, graph_automorphisms, graph_isomorphism, PermutationGroup,
};
pub use complex::{Classification, ComplexError, FaceId, SimplicialComplex};
pub use hasse::{build_hasse, HasseDiagram};
pub use morse::{
    build_morse_complex, enumerate_gvfs, is_gradient, make_dvf, primitives, DiscreteVectorField,
    PrimitiveVector,
};
pub use perm::Permutation;
pub use simplex::{Simplex, Vertex};
pub use verify::{
    reflection, reflection_induced, verify_main_theorem, MorseContext, VerificationReport,
    VerifyOptions,
};
