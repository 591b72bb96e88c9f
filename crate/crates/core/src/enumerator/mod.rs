//! Exact state counting.
//!
//! Two engines that share nothing but the [`BoundarySpec`]:
//!
//! - [`count_backtrack`] walks vertices row-major and counts complete
//!   fillings one by one. [`enumerate_states`] is the same walk exposed as a
//!   stream.
//! - [`count_rowdp`] sweeps horizontal cuts, carrying a map from vertical
//!   edge bitmasks to multiplicities.
//!
//! Both accumulate in arbitrary precision and give identical answers under
//! any [`Parallelism`].

mod backtrack;
mod rowdp;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::lattice::{BoundarySpec, LatticeError, Partition};
use crate::par::Parallelism;

pub use backtrack::{count_backtrack, count_backtrack_with, enumerate_states, StateStream};
pub use rowdp::{count_rowdp, count_rowdp_with, MAX_ROWDP_COLS};

/// Number of states. Always exact.
pub type Count = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("search node budget exhausted after {visited} nodes")]
    NodeBudget { visited: u64 },
    #[error("state budget exhausted: more than {cap} states")]
    StateBudget { cap: u64 },
    #[error("row DP supports at most {max} columns, spec has {cols}")]
    Capacity { cols: usize, max: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl EnumError {
    /// Budget and capacity failures, as opposed to malformed input.
    pub fn is_resource_limit(&self) -> bool {
        !matches!(self, EnumError::Lattice(_))
    }
}

/// Optional caps on a search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_states: Option<Count>,
    pub max_nodes: Option<u64>,
}

impl EnumBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            ..Self::default()
        }
    }

    pub fn states(max_states: u64) -> Self {
        Self {
            max_states: Some(Count::from(max_states)),
            ..Self::default()
        }
    }

    pub(crate) fn state_cap(&self) -> Option<u64> {
        self.max_states
            .as_ref()
            .map(|c| c.to_u64().unwrap_or(u64::MAX))
    }
}

/// Budget plus parallelism for a counting call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumConfig {
    pub budget: EnumBudget,
    pub parallelism: Parallelism,
}

impl EnumConfig {
    pub fn with_parallelism(parallelism: Parallelism) -> Self {
        Self {
            parallelism,
            ..Self::default()
        }
    }
}

/// Which counting engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Backtrack,
    RowDp,
}

impl Engine {
    /// Row DP when the lattice fits its bitmask, backtracking otherwise.
    pub fn preferred_for(spec: &BoundarySpec) -> Self {
        if spec.cols() <= MAX_ROWDP_COLS {
            Engine::RowDp
        } else {
            Engine::Backtrack
        }
    }
}

/// Counts states of `spec` with the chosen engine. The row DP ignores the
/// budget (its cost does not depend on the number of states).
pub fn count(spec: &BoundarySpec, engine: Engine, cfg: &EnumConfig) -> Result<Count, EnumError> {
    match engine {
        Engine::Backtrack => count_backtrack_with(spec, cfg),
        Engine::RowDp => count_rowdp_with(spec, cfg.parallelism),
    }
}

/// `A_λ(n)`: states of the lattice built from `lambda`.
pub fn count_partition(lambda: &Partition, engine: Engine) -> Result<Count, EnumError> {
    count_partition_with(lambda, engine, &EnumConfig::default())
}

pub fn count_partition_with(
    lambda: &Partition,
    engine: Engine,
    cfg: &EnumConfig,
) -> Result<Count, EnumError> {
    count(&BoundarySpec::from_partition(lambda), engine, cfg)
}

/// `R(λ, j)`: states of the right block of the decomposition whose single
/// leftward crossing is in row `j`. Independent of `λ₁`.
pub fn count_r(lambda: &Partition, j: usize) -> Result<Count, EnumError> {
    let spec = BoundarySpec::right_part(lambda, j)?;
    count(&spec, Engine::preferred_for(&spec), &EnumConfig::default())
}

/// Counts for the right block of an arbitrary admissible split (see
/// [`BoundarySpec::split_right`]).
pub fn count_split_right(
    lambda: &Partition,
    left_width: usize,
    j: usize,
) -> Result<Count, EnumError> {
    let spec = BoundarySpec::split_right(lambda, left_width, j)?;
    count(&spec, Engine::preferred_for(&spec), &EnumConfig::default())
}
