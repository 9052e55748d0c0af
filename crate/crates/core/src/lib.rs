//! Growable cyclic realizations of edge-length multisets in complete graphs.
//!
//! A Hamiltonian path `h_0, ..., h_{v-1}` of `K_v` (vertices `0..v`) realizes
//! a multiset `L` of edge lengths when the cyclic lengths
//! `min(|a-b|, v-|a-b|)` of its edges are exactly `L`. This crate stores
//! known realizations, grows them into larger ones, replays the inductive
//! constructions for several families of multisets, and searches for
//! realizations of small multisets directly.

pub mod certificate;
pub mod error;
pub mod families;
pub mod growable;
pub mod growth;
pub mod multiset;
pub mod path;
pub mod search;
pub mod seeds;
pub mod solvers;

pub use certificate::{Certificate, TraceStep, SCHEMA_VERSION};
pub use error::{Error, Result};
pub use growable::{growth_points, growth_points_for, is_growable_at, GrowPoint};
pub use multiset::{Admissibility, LengthMultiset};
pub use path::{cyclic_lengths, edge_length, linear_diffs, translate, verify_realization, HamPath, Verification};
pub use search::SearchConfig;
pub use solvers::{solve, SolveOptions, SolveOutcome};
