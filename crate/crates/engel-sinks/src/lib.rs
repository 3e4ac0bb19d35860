//! Finite-group computation engine for Engel sinks and the structure
//! theory around them, with a truncated p-adic layer for procyclic unit
//! actions.
//!
//! The crate has four parts:
//!
//! * [`group`] — Cayley-table groups: construction from permutation
//!   generators or raw tables, subgroup closure, centralizers and
//!   normalizers, lower central / derived / Fitting series, Sylow
//!   subgroups, quotients.
//! * [`engel`] — minimal Engel sinks `ε(g)` with an independent
//!   orbit-cycle oracle, iterated-commutator subgroups, coprime-action
//!   identities, towers of prime-power subgroups, and the per-group
//!   verification harness that checks the cyclic-sink theorem and its
//!   companion claims instance by instance.
//! * [`padic`] — exact arithmetic in `Z/p^k` for unit actions on a
//!   procyclic module: valuations, index growth of iterated-commutator
//!   submodules, unit-group structure, and the rank-2 obstruction via
//!   Smith normal form.
//! * [`corpus`] — deterministic constructors for the built-in group
//!   families, the pinned regression manifest, and the group-file
//!   format.
//!
//! The `examples/` directory is the guided tour: one runnable example per
//! capability. A thin `engel-sinks` binary exposes the same machinery as
//! `analyze` / `scan` / `padic` subcommands for scripting.

pub mod cli;
pub mod corpus;
pub mod engel;
pub mod error;
pub mod group;
pub mod padic;
pub mod perm;

pub use error::{CorpusError, GroupError, PadicError};
pub use group::{BuildOptions, GroupTable, Quotient, Series, SeriesKind, SubgroupHandle};
pub use perm::{Perm, PermGenSet};
