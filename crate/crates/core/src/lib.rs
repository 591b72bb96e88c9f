//! Exact state counting for six-vertex lattice models whose upper boundary is
//! prescribed by an integer partition.
//!
//! The crate is split into four layers:
//!
//! - [`lattice`]: partitions, boundary specifications, grid states, the ice
//!   rule and the state to alternating-sign-matrix map.
//! - [`enumerator`]: two independent exact counting engines (a backtracking
//!   search and a row-transfer dynamic program) plus a state stream.
//! - [`formulas`]: closed-form evaluators over big integers and rationals.
//! - [`exactalg`]: dense polynomials and rational functions over the
//!   rationals, interpolation, and the hook-shape rational factors.
//!
//! Parallel evaluation goes through rayon when the `parallel` feature is on
//! (the default). Without it every entry point runs sequentially; results are
//! identical either way.

pub mod enumerator;
pub mod exactalg;
pub mod formulas;
pub mod lattice;
pub mod par;

pub use enumerator::{
    count, count_backtrack, count_partition, count_r, count_rowdp, enumerate_states, Count, Engine,
    EnumBudget, EnumConfig, EnumError,
};
pub use lattice::{Arrow, Axis, BoundarySpec, GridState, LatticeError, Partition, VertexState};
pub use par::Parallelism;
