use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{Count, EnumBudget, EnumConfig, EnumError};
use crate::lattice::{BoundarySpec, GridState};

/// Edge bits of a partially filled lattice.
///
/// Vertices are filled row-major. When vertex `v` is reached its top and
/// left edges are already fixed, and the ice rule `bottom + left == top +
/// right` leaves one or two choices for `(bottom, right)`.
#[derive(Clone)]
struct Fill<'a> {
    spec: &'a BoundarySpec,
    rows: usize,
    cols: usize,
    vertical: Vec<bool>,
    horizontal: Vec<bool>,
}

type Choice = (bool, bool);

impl<'a> Fill<'a> {
    fn new(spec: &'a BoundarySpec) -> Self {
        let (rows, cols) = (spec.rows(), spec.cols());
        let mut vertical = vec![false; (rows + 1) * cols];
        vertical[..cols].copy_from_slice(spec.top_bits());
        vertical[rows * cols..].copy_from_slice(spec.bottom_bits());
        let mut horizontal = vec![false; rows * (cols + 1)];
        for r in 0..rows {
            horizontal[r * (cols + 1)] = spec.left_bits()[r];
            horizontal[r * (cols + 1) + cols] = spec.right_bits()[r];
        }
        Self {
            spec,
            rows,
            cols,
            vertical,
            horizontal,
        }
    }

    fn total(&self) -> usize {
        self.rows * self.cols
    }

    /// Admissible `(bottom, right)` pairs at vertex `v`, bottom Down first.
    fn choices(&self, v: usize) -> ([Choice; 2], usize) {
        let (r, c) = (v / self.cols, v % self.cols);
        let top = self.vertical[r * self.cols + c];
        let left = self.horizontal[r * (self.cols + 1) + c];
        // bottom - right == top - left
        let candidates: &[Choice] = match (top, left) {
            (true, false) => &[(true, false)],
            (false, true) => &[(false, true)],
            _ => &[(false, false), (true, true)],
        };
        let mut out = [(false, false); 2];
        let mut k = 0;
        for &(bottom, right) in candidates {
            if c + 1 == self.cols && right != self.spec.right_bits()[r] {
                continue;
            }
            if r + 1 == self.rows && bottom != self.spec.bottom_bits()[c] {
                continue;
            }
            out[k] = (bottom, right);
            k += 1;
        }
        (out, k)
    }

    fn apply(&mut self, v: usize, (bottom, right): Choice) {
        let (r, c) = (v / self.cols, v % self.cols);
        self.vertical[(r + 1) * self.cols + c] = bottom;
        self.horizontal[r * (self.cols + 1) + c + 1] = right;
    }

    fn to_state(&self) -> GridState {
        GridState::from_bit_rows(self.spec, &self.vertical, &self.horizontal)
    }
}

/// Shared budget counters. A cap trips exactly when the full search would
/// exceed it, whatever the thread count.
struct Meter {
    nodes: AtomicU64,
    states: AtomicU64,
    max_nodes: Option<u64>,
    max_states: Option<u64>,
}

impl Meter {
    fn new(budget: &EnumBudget) -> Self {
        Self {
            nodes: AtomicU64::new(0),
            states: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            max_states: budget.state_cap(),
        }
    }

    #[inline]
    fn visit(&self) -> Result<(), EnumError> {
        if let Some(cap) = self.max_nodes {
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= cap {
                return Err(EnumError::NodeBudget { visited: cap + 1 });
            }
        }
        Ok(())
    }

    #[inline]
    fn found(&self) -> Result<(), EnumError> {
        if let Some(cap) = self.max_states {
            if self.states.fetch_add(1, Ordering::Relaxed) >= cap {
                return Err(EnumError::StateBudget { cap });
            }
        }
        Ok(())
    }
}

fn count_from(
    fill: &mut Fill<'_>,
    v: usize,
    meter: &Meter,
    acc: &mut BigUint,
) -> Result<(), EnumError> {
    if v == fill.total() {
        meter.found()?;
        *acc += 1u32;
        return Ok(());
    }
    let (choices, k) = fill.choices(v);
    for &choice in &choices[..k] {
        meter.visit()?;
        fill.apply(v, choice);
        count_from(fill, v + 1, meter, acc)?;
    }
    Ok(())
}

/// Counts states of `spec` by exhaustive search, sequentially.
pub fn count_backtrack(spec: &BoundarySpec, budget: &EnumBudget) -> Result<Count, EnumError> {
    count_backtrack_with(
        spec,
        &EnumConfig {
            budget: budget.clone(),
            ..EnumConfig::default()
        },
    )
}

/// Counts states of `spec` by exhaustive search. Under a parallel setting
/// the top of the search tree is expanded breadth-first until there are
/// enough independent subtrees, which are then counted concurrently.
pub fn count_backtrack_with(spec: &BoundarySpec, cfg: &EnumConfig) -> Result<Count, EnumError> {
    if !spec.is_balanced() {
        return Ok(Count::zero());
    }
    let meter = Meter::new(&cfg.budget);
    let mut root = Fill::new(spec);
    if !cfg.parallelism.is_parallel() {
        let mut acc = BigUint::zero();
        count_from(&mut root, 0, &meter, &mut acc)?;
        return Ok(acc);
    }

    let target = cfg.parallelism.workers() * 16;
    let mut frontier = vec![root];
    let mut depth = 0;
    while frontier.len() < target && depth < spec.rows() * spec.cols() {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for fill in frontier {
            let (choices, k) = fill.choices(depth);
            for &choice in &choices[..k] {
                meter.visit()?;
                let mut child = fill.clone();
                child.apply(depth, choice);
                next.push(child);
            }
        }
        frontier = next;
        depth += 1;
    }
    cfg.parallelism
        .install(|| count_frontier(frontier, depth, &meter))
}

#[cfg(feature = "parallel")]
fn count_frontier(
    frontier: Vec<Fill<'_>>,
    depth: usize,
    meter: &Meter,
) -> Result<Count, EnumError> {
    frontier
        .into_par_iter()
        .map(|mut fill| {
            let mut acc = BigUint::zero();
            count_from(&mut fill, depth, meter, &mut acc).map(|_| acc)
        })
        .try_reduce(BigUint::zero, |a, b| Ok(a + b))
}

#[cfg(not(feature = "parallel"))]
fn count_frontier(
    frontier: Vec<Fill<'_>>,
    depth: usize,
    meter: &Meter,
) -> Result<Count, EnumError> {
    let mut total = BigUint::zero();
    for mut fill in frontier {
        count_from(&mut fill, depth, meter, &mut total)?;
    }
    Ok(total)
}

struct Frame {
    v: usize,
    choices: [Choice; 2],
    len: usize,
    next: usize,
}

/// Every state of a spec, each exactly once.
///
/// States come out in lexicographic order of their bottom-edge bits taken
/// vertex by vertex, row-major (Down before Up), which is the order the
/// backtracking engine visits them. A budget failure is reported as a final
/// `Err` item after the states emitted so far.
pub struct StateStream<'a> {
    fill: Fill<'a>,
    stack: Vec<Frame>,
    meter: Meter,
    finished: bool,
}

impl<'a> StateStream<'a> {
    fn new(spec: &'a BoundarySpec, budget: &EnumBudget) -> Self {
        let fill = Fill::new(spec);
        let mut stream = Self {
            fill,
            stack: Vec::new(),
            meter: Meter::new(budget),
            finished: !spec.is_balanced(),
        };
        if !stream.finished {
            stream.push(0);
        }
        stream
    }

    fn push(&mut self, v: usize) {
        let (choices, len) = self.fill.choices(v);
        self.stack.push(Frame {
            v,
            choices,
            len,
            next: 0,
        });
    }
}

impl Iterator for StateStream<'_> {
    type Item = Result<GridState, EnumError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        let total = self.fill.total();
        while let Some(frame) = self.stack.last_mut() {
            if frame.next == frame.len {
                self.stack.pop();
                continue;
            }
            let (v, choice) = (frame.v, frame.choices[frame.next]);
            frame.next += 1;
            if let Err(e) = self.meter.visit() {
                self.finished = true;
                return Some(Err(e));
            }
            self.fill.apply(v, choice);
            if v + 1 == total {
                if let Err(e) = self.meter.found() {
                    self.finished = true;
                    return Some(Err(e));
                }
                return Some(Ok(self.fill.to_state()));
            }
            self.push(v + 1);
        }
        self.finished = true;
        None
    }
}

/// Streams every state of `spec` (see [`StateStream`]).
pub fn enumerate_states<'a>(spec: &'a BoundarySpec, budget: &EnumBudget) -> StateStream<'a> {
    StateStream::new(spec, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Partition;
    use crate::Parallelism;

    #[test]
    fn stream_yields_valid_states_in_order() {
        let spec = BoundarySpec::domain_wall(3).unwrap();
        let states: Vec<GridState> = enumerate_states(&spec, &EnumBudget::default())
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(states.len(), 7);
        assert!(states.iter().all(|s| s.validate() == Ok(true)));
        // strictly increasing in row-major bottom-edge bits, Down < Up
        let keys: Vec<Vec<bool>> = states
            .iter()
            .map(|s| {
                s.vertical()[1..]
                    .iter()
                    .flatten()
                    .map(|a| a.bit())
                    .collect()
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn stream_for_single_column_l_shape() {
        for j in 1..=3 {
            let spec = BoundarySpec::l_shape(3, 0, j).unwrap();
            assert_eq!(enumerate_states(&spec, &EnumBudget::default()).count(), 1);
        }
    }

    #[test]
    fn node_budget_is_reported_with_prefix() {
        let spec = BoundarySpec::domain_wall(4).unwrap();
        let err = count_backtrack(&spec, &EnumBudget::nodes(10)).unwrap_err();
        assert_eq!(err, EnumError::NodeBudget { visited: 11 });

        let items: Vec<_> = enumerate_states(&spec, &EnumBudget::nodes(40)).collect();
        let (last, prefix) = items.split_last().unwrap();
        assert!(matches!(last, Err(EnumError::NodeBudget { visited: 41 })));
        assert!(prefix.iter().all(|s| s.is_ok()));
    }

    #[test]
    fn state_budget() {
        let spec = BoundarySpec::domain_wall(3).unwrap();
        assert_eq!(
            count_backtrack(&spec, &EnumBudget::states(6)).unwrap_err(),
            EnumError::StateBudget { cap: 6 }
        );
        assert_eq!(
            count_backtrack(&spec, &EnumBudget::states(7)).unwrap(),
            Count::from(7u32)
        );
        let items: Vec<_> = enumerate_states(&spec, &EnumBudget::states(5)).collect();
        assert_eq!(items.len(), 6);
        assert!(items[5].is_err());
    }

    #[test]
    fn budget_trips_identically_in_parallel() {
        let spec = BoundarySpec::from_partition(&"2,1,0,0".parse::<Partition>().unwrap());
        for threads in [1, 2, 8] {
            let cfg = EnumConfig {
                budget: EnumBudget::nodes(100),
                parallelism: Parallelism::Threads(threads),
            };
            assert_eq!(
                count_backtrack_with(&spec, &cfg).unwrap_err(),
                EnumError::NodeBudget { visited: 101 }
            );
        }
    }

    #[test]
    fn parallel_frontier_can_complete_the_search() {
        // tiny lattice: breadth-first expansion reaches the leaves
        let spec = BoundarySpec::domain_wall(2).unwrap();
        let cfg = EnumConfig::with_parallelism(Parallelism::Threads(8));
        assert_eq!(
            count_backtrack_with(&spec, &cfg).unwrap(),
            Count::from(2u32)
        );
    }
}
