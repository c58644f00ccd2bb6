//! Exact computation of crossing numbers of graphs drawn on orientable and
//! nonorientable surfaces.
//!
//! The crate works with *special graphs*: multigraphs carrying a set of thick
//! edges (which no drawing may cross) and rigid vertices (whose cyclic order
//! of incident edge ends is prescribed up to reflection). On top of that it
//! provides:
//!
//! * combinatorial embeddings as rotation systems with edge signatures,
//!   face tracing and Euler-genus bookkeeping ([`faces`]),
//! * exact minimum genus / crosscap number by branch-and-bound over rotation
//!   systems, with a linear-time planarity fast path ([`genus`], [`planarity`]),
//! * exact crossing numbers on a fixed surface by iterative deepening over
//!   canonical crossing configurations and planarization ([`solver`],
//!   [`config`], [`planarize`]),
//! * independently checkable drawing certificates ([`verify`]),
//! * generators for the hamburger graph families and the K5-union family
//!   ([`families`]), and
//! * gadget expansions reducing special graphs to plain simple graphs with
//!   the same crossing sequence ([`gadgets`]).
//!
//! Everything is deterministic: iteration orders are fixed, and all maps are
//! ordered. The crate is `no_std` (it allocates, but performs no IO); file
//! formats and the command line live in the companion `surfcross` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod config;
pub mod faces;
pub mod families;
pub mod gadgets;
pub mod genus;
pub mod graph;
mod index;
mod planarity;
pub mod planarize;
pub mod solver;
pub mod verify;
#[cfg(test)]
mod testutil;
#[cfg(test)]
mod testutil_families;

pub use faces::{EmbeddingCertificate, FaceSet, RotationSystem};
pub use graph::{EdgeEnd, EdgeId, MultiGraph, SpecialGraph, Surface, VertexId};
pub use solver::{CrossOutcome, CrossingSequence, SolveOptions};
pub use verify::DrawingCertificate;
