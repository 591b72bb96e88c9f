use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{Count, EnumError};
use crate::lattice::{BoundarySpec, SpecOrigin};
use crate::par::Parallelism;

/// Widest lattice the bitmask row DP accepts.
pub const MAX_ROWDP_COLS: usize = u64::BITS as usize;

type Layer = HashMap<u64, BigUint>;

fn mask(bits: &[bool]) -> u64 {
    bits.iter()
        .enumerate()
        .fold(0u64, |m, (k, &b)| if b { m | (1 << k) } else { m })
}

/// Calls `emit` with every bottom mask reachable from `top` across one row
/// whose boundary horizontal arrows are `left` and `right`. With `target`
/// set, only bottoms carrying exactly that many Up arrows are produced.
fn row_transfer(
    top: u64,
    cols: usize,
    left: bool,
    right: bool,
    target: Option<u32>,
    emit: &mut impl FnMut(u64),
) {
    fn go(
        k: usize,
        h: bool,
        bottom: u64,
        ups: u32,
        ctx: &(u64, usize, bool, Option<u32>),
        emit: &mut impl FnMut(u64),
    ) {
        let &(top, cols, right, target) = ctx;
        if let Some(t) = target {
            if ups > t || ups + ((cols - k) as u32) < t {
                return;
            }
        }
        if k == cols {
            if h == right {
                emit(bottom);
            }
            return;
        }
        let t = (top >> k) & 1 == 1;
        match (t, h) {
            (true, false) => go(k + 1, false, bottom | (1 << k), ups + 1, ctx, emit),
            (false, true) => go(k + 1, true, bottom, ups, ctx, emit),
            _ => {
                go(k + 1, false, bottom, ups, ctx, emit);
                go(k + 1, true, bottom | (1 << k), ups + 1, ctx, emit);
            }
        }
    }
    go(0, left, 0, 0, &(top, cols, right, target), emit);
}

fn step_sequential(
    layer: &Layer,
    cols: usize,
    left: bool,
    right: bool,
    target: Option<u32>,
) -> Layer {
    let mut next = Layer::new();
    for (&top, weight) in layer {
        row_transfer(top, cols, left, right, target, &mut |bottom| {
            *next.entry(bottom).or_insert_with(BigUint::zero) += weight;
        });
    }
    next
}

#[cfg(feature = "parallel")]
fn step_parallel(
    layer: &Layer,
    cols: usize,
    left: bool,
    right: bool,
    target: Option<u32>,
) -> Layer {
    layer
        .par_iter()
        .fold(Layer::new, |mut next, (&top, weight)| {
            row_transfer(top, cols, left, right, target, &mut |bottom| {
                *next.entry(bottom).or_insert_with(BigUint::zero) += weight;
            });
            next
        })
        .reduce(Layer::new, |mut a, b| {
            if a.len() < b.len() {
                return merge(b, a);
            }
            for (k, v) in b {
                *a.entry(k).or_insert_with(BigUint::zero) += v;
            }
            a
        })
}

#[cfg(feature = "parallel")]
fn merge(mut into: Layer, from: Layer) -> Layer {
    for (k, v) in from {
        *into.entry(k).or_insert_with(BigUint::zero) += v;
    }
    into
}

/// Counts states of `spec` with the row-transfer DP, sequentially.
pub fn count_rowdp(spec: &BoundarySpec) -> Result<Count, EnumError> {
    count_rowdp_with(spec, Parallelism::Sequential)
}

/// Row-transfer DP over the `2^cols` vertical-edge configurations of each
/// horizontal cut. Specs tagged as partition lattices restrict cut `r` to
/// configurations with exactly `n − r` Up arrows.
pub fn count_rowdp_with(spec: &BoundarySpec, parallelism: Parallelism) -> Result<Count, EnumError> {
    let (rows, cols) = (spec.rows(), spec.cols());
    if cols > MAX_ROWDP_COLS {
        return Err(EnumError::Capacity {
            cols,
            max: MAX_ROWDP_COLS,
        });
    }
    if !spec.is_balanced() {
        return Ok(Count::zero());
    }
    let n_parts = match spec.origin() {
        SpecOrigin::Partition(lambda) => Some(lambda.len()),
        SpecOrigin::Generic => None,
    };
    let run = || {
        let mut layer = Layer::new();
        layer.insert(mask(spec.top_bits()), BigUint::from(1u32));
        for r in 0..rows {
            let target = n_parts.map(|n| (n - (r + 1)) as u32);
            let (left, right) = (spec.left_bits()[r], spec.right_bits()[r]);
            layer = if parallelism.is_parallel() && layer.len() > 64 {
                #[cfg(feature = "parallel")]
                {
                    step_parallel(&layer, cols, left, right, target)
                }
                #[cfg(not(feature = "parallel"))]
                {
                    step_sequential(&layer, cols, left, right, target)
                }
            } else {
                step_sequential(&layer, cols, left, right, target)
            };
            if layer.is_empty() {
                break;
            }
        }
        layer
            .remove(&mask(spec.bottom_bits()))
            .unwrap_or_else(BigUint::zero)
    };
    Ok(parallelism.install(run))
}
