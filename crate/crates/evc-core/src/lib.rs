//! Eternal vertex cover toolkit: core algorithms.
//!
//! The eternal vertex cover number of a graph is the minimum number of
//! guards that can defend an infinite sequence of edge attacks, where each
//! defense must move at least one guard across the attacked edge and every
//! guard may simultaneously move to an adjacent vertex or stay put.
//!
//! This crate provides:
//!
//! * [`graph`] — an immutable simple undirected graph over dense ids;
//! * [`decompose`] — cut vertices, blocks, attachment components, and
//!   local-connectivity tests;
//! * [`cover`] — exact and constrained minimum vertex cover, with a
//!   linear-time pipeline for chordal graphs;
//! * [`game`] — the exact game solver: guard configurations, defendability
//!   as a transportation-feasibility problem, and the greatest fixpoint of
//!   the defense operator;
//! * [`structural`] — the fast structural evc algorithms (lower bound,
//!   locally-connected-block and chordal pipelines, certificates) plus
//!   empirical verifiers for the identities they rest on.
//!
//! The crate is `no_std` + `alloc`; all collections are ordered so every
//! result is deterministic regardless of the caller's threading.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cover;
pub mod decompose;
pub mod game;
pub mod graph;
pub mod structural;

#[cfg(test)]
pub(crate) mod brute;

pub use cover::{chordal_mvc, chordal_mvc_forced, is_chordal, mvc_exact, mvc_forced};
pub use cover::{CoverError, CoverResult, EliminationOrder};
pub use decompose::{
    attach_extension, b_components, block_cut_structure, is_locally_connected, x_components,
};
pub use decompose::{BlockCutStructure, ComponentPiece, DecomposeError};
pub use game::{defendable, enumerate_configs, evc_class, evc_exact, evc_forced};
pub use game::{ConfigClass, EvcSolution, GameError, GuardConfig, OccupancyModel};
pub use graph::{Graph, GraphError, SubgraphMap, VertexId};
pub use structural::{
    all_min_forced_covers_connected, evc_chordal, evc_cover_maximum, evc_locally_connected,
    evc_lower_bound, verify_certificate, verify_evc_cut_property, verify_lemma1, verify_lemma2,
    verify_observation1,
};
pub use structural::{CertificateCheck, EvcMethod, EvcReport, StructuralError, VerificationReport};
