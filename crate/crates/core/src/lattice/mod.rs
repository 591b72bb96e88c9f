//! Rectangular six-vertex lattices and their boundary conditions.
//!
//! Rows are numbered from the top, columns are stored left to right. Several
//! constructors take column indices counted from the *right*, starting at 1;
//! [`BoundarySpec::col_from_right`] translates those.
//!
//! Every edge carries one bit: `1` means Up on a vertical edge and Right on a
//! horizontal edge. With that encoding the ice rule at a vertex reads
//! `bottom + left == top + right`.

mod partition;
mod state;

use std::fmt;

use thiserror::Error;

pub use partition::Partition;
pub use state::{GridState, StateJson, VertexState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("parts must be weakly decreasing (violated at position {index} of {parts:?})")]
    NotWeaklyDecreasing { index: usize, parts: Vec<u32> },
    #[error("part {index} is negative ({value})")]
    NegativePart { index: usize, value: i64 },
    #[error("{0}")]
    Parse(String),
    #[error("lattice dimensions must be positive (got {rows}x{cols})")]
    EmptyLattice { rows: usize, cols: usize },
    #[error("{what}: expected length {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("{what}: arrow {arrow} lies on the wrong axis")]
    WrongAxis { what: &'static str, arrow: Arrow },
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("{0}")]
    Unsupported(String),
}

/// Which way an edge runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

/// Orientation of a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    Up,
    Down,
    Left,
    Right,
}

impl Arrow {
    pub fn axis(self) -> Axis {
        match self {
            Arrow::Up | Arrow::Down => Axis::Vertical,
            Arrow::Left | Arrow::Right => Axis::Horizontal,
        }
    }

    /// Up and Right are `true`.
    pub fn bit(self) -> bool {
        matches!(self, Arrow::Up | Arrow::Right)
    }

    pub fn from_bit(axis: Axis, bit: bool) -> Self {
        match (axis, bit) {
            (Axis::Vertical, true) => Arrow::Up,
            (Axis::Vertical, false) => Arrow::Down,
            (Axis::Horizontal, true) => Arrow::Right,
            (Axis::Horizontal, false) => Arrow::Left,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Arrow::Up => 'U',
            Arrow::Down => 'D',
            Arrow::Left => 'L',
            Arrow::Right => 'R',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(Arrow::Up),
            'D' => Some(Arrow::Down),
            'L' => Some(Arrow::Left),
            'R' => Some(Arrow::Right),
            _ => None,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Arrow::Up => '↑',
            Arrow::Down => '↓',
            Arrow::Left => '←',
            Arrow::Right => '→',
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Where a spec came from. Specs built from a partition obey a known flux
/// law (cut `r` carries exactly `n − r` Up arrows), which the row DP uses
/// for pruning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecOrigin {
    Generic,
    Partition(Partition),
}

/// Fixed arrows on all four sides of an `rows × cols` lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySpec {
    rows: usize,
    cols: usize,
    // bit per edge, left to right
    top: Vec<bool>,
    bottom: Vec<bool>,
    // bit per edge, top to bottom
    left: Vec<bool>,
    right: Vec<bool>,
    balanced: bool,
    origin: SpecOrigin,
}

fn bits(what: &'static str, axis: Axis, arrows: &[Arrow]) -> Result<Vec<bool>, LatticeError> {
    arrows
        .iter()
        .map(|&a| {
            if a.axis() == axis {
                Ok(a.bit())
            } else {
                Err(LatticeError::WrongAxis { what, arrow: a })
            }
        })
        .collect()
}

impl BoundarySpec {
    /// Builds a spec from explicit arrows. Lengths must agree; the parity
    /// balance is recorded (see [`BoundarySpec::is_balanced`]) rather than
    /// rejected, since an unbalanced spec is still a well-formed question
    /// whose answer is zero.
    pub fn new(
        top: &[Arrow],
        bottom: &[Arrow],
        left: &[Arrow],
        right: &[Arrow],
    ) -> Result<Self, LatticeError> {
        let cols = top.len();
        let rows = left.len();
        if rows == 0 || cols == 0 {
            return Err(LatticeError::EmptyLattice { rows, cols });
        }
        if bottom.len() != cols {
            return Err(LatticeError::LengthMismatch {
                what: "bottom boundary",
                expected: cols,
                actual: bottom.len(),
            });
        }
        if right.len() != rows {
            return Err(LatticeError::LengthMismatch {
                what: "right boundary",
                expected: rows,
                actual: right.len(),
            });
        }
        Ok(Self::from_bits(
            bits("top boundary", Axis::Vertical, top)?,
            bits("bottom boundary", Axis::Vertical, bottom)?,
            bits("left boundary", Axis::Horizontal, left)?,
            bits("right boundary", Axis::Horizontal, right)?,
            SpecOrigin::Generic,
        ))
    }

    fn from_bits(
        top: Vec<bool>,
        bottom: Vec<bool>,
        left: Vec<bool>,
        right: Vec<bool>,
        origin: SpecOrigin,
    ) -> Self {
        let ones = |v: &[bool]| v.iter().filter(|&&b| b).count();
        // boundary in-arrows equal out-arrows  <=>  ups(bottom) + rights(left) == ups(top) + rights(right)
        let balanced = ones(&bottom) + ones(&left) == ones(&top) + ones(&right);
        Self {
            rows: left.len(),
            cols: top.len(),
            top,
            bottom,
            left,
            right,
            balanced,
            origin,
        }
    }

    /// `n × (n + λ₁)` lattice: left and right inward, bottom down, and the
    /// top arrow in column `i` (counted from the right) up iff `i ∈ λ + ρ`.
    pub fn from_partition(lambda: &Partition) -> Self {
        let n = lambda.len();
        let cols = n + lambda.largest() as usize;
        let mut top = vec![false; cols];
        for i in lambda.plus_rho() {
            top[cols - i as usize] = true;
        }
        Self::from_bits(
            top,
            vec![false; cols],
            vec![true; n],
            vec![false; n],
            SpecOrigin::Partition(lambda.clone()),
        )
    }

    /// Domain-wall boundary conditions on an `n × n` lattice.
    pub fn domain_wall(n: usize) -> Result<Self, LatticeError> {
        Ok(Self::from_partition(&Partition::zero(n)?))
    }

    /// The `S(r, c)` family: left all Right, right Left only in the bottom
    /// row, bottom all Down, top Up only in the leftmost column.
    pub fn s_model(rows: usize, cols: usize) -> Result<Self, LatticeError> {
        check_dims(rows, cols)?;
        let mut top = vec![false; cols];
        top[0] = true;
        let mut right = vec![true; rows];
        right[rows - 1] = false;
        Ok(Self::from_bits(
            top,
            vec![false; cols],
            vec![true; rows],
            right,
            SpecOrigin::Generic,
        ))
    }

    /// The `T(r, c)` family: left Left only in the top row, right Left only
    /// in the bottom row, top and bottom all Down.
    pub fn t_model(rows: usize, cols: usize) -> Result<Self, LatticeError> {
        check_dims(rows, cols)?;
        let mut left = vec![true; rows];
        left[0] = false;
        let mut right = vec![true; rows];
        right[rows - 1] = false;
        Ok(Self::from_bits(
            vec![false; cols],
            vec![false; cols],
            left,
            right,
            SpecOrigin::Generic,
        ))
    }

    /// `n × (m+1)` lattice: top Up only in the leftmost column, bottom Down,
    /// left Right, right Left only in row `j` (1-based from the top).
    pub fn l_shape(n: usize, m: usize, j: usize) -> Result<Self, LatticeError> {
        check_dims(n, m + 1)?;
        check_index("row", j, n)?;
        let cols = m + 1;
        let mut top = vec![false; cols];
        top[0] = true;
        let mut right = vec![true; n];
        right[j - 1] = false;
        Ok(Self::from_bits(
            top,
            vec![false; cols],
            vec![true; n],
            right,
            SpecOrigin::Generic,
        ))
    }

    /// The right-hand block left over when the leftmost `left_width` columns
    /// of the partition lattice are cut away, with the crossing arrow in row
    /// `j` pointing Left (out of the block) and all other crossings Right.
    ///
    /// The cut is only meaningful when the removed block's top boundary is Up
    /// in its leftmost column and Down elsewhere, so that exactly one arrow
    /// crosses leftwards; other widths are rejected.
    pub fn split_right(
        lambda: &Partition,
        left_width: usize,
        j: usize,
    ) -> Result<Self, LatticeError> {
        let n = lambda.len();
        let full = Self::from_partition(lambda);
        if left_width == 0 || left_width >= full.cols {
            return Err(LatticeError::Unsupported(format!(
                "left block width {left_width} must lie in 1..{}",
                full.cols
            )));
        }
        if full.top[1..left_width].iter().any(|&up| up) {
            return Err(LatticeError::Unsupported(format!(
                "left block of width {left_width} has an Up arrow besides its leftmost column"
            )));
        }
        check_index("row", j, n)?;
        let top = full.top[left_width..].to_vec();
        let cols = top.len();
        let mut left = vec![true; n];
        left[j - 1] = false;
        Ok(Self::from_bits(
            top,
            vec![false; cols],
            left,
            vec![false; n],
            SpecOrigin::Generic,
        ))
    }

    /// Right part of the split used for the decomposition over the crossing
    /// row: `n × (n + λ₂ − 1)` columns, the left block being `1 + λ₁ − λ₂`
    /// columns wide.
    pub fn right_part(lambda: &Partition, j: usize) -> Result<Self, LatticeError> {
        let second = lambda.second().ok_or_else(|| {
            LatticeError::Unsupported("the split needs a partition with at least two parts".into())
        })?;
        let width = 1 + (lambda.largest() - second) as usize;
        Self::split_right(lambda, width, j)
    }

    /// `(n−1) × n` lattice counting `n × n` ASMs whose first-row 1 sits in
    /// column `j`: left/right inward, bottom Down, top Up except Down in
    /// column `j` counted from the right.
    pub fn refined_asm(n: usize, j: usize) -> Result<Self, LatticeError> {
        if n < 2 {
            return Err(LatticeError::Unsupported(format!(
                "refined ASM lattice needs n >= 2 (got {n})"
            )));
        }
        check_index("column", j, n)?;
        let mut top = vec![true; n];
        top[n - j] = false;
        Ok(Self::from_bits(
            top,
            vec![false; n],
            vec![true; n - 1],
            vec![false; n - 1],
            SpecOrigin::Generic,
        ))
    }

    /// `(2n−2) × n` half-lattice counting `(2n+1) × (2n+1)` vertically
    /// symmetric ASMs whose second-row 1 sits in column `i`: left all Right,
    /// right alternating Right, Left, Right, … from the top, bottom Down,
    /// top Up except Down in column `i` counted from the left.
    pub fn refined_vsasm(n: usize, i: usize) -> Result<Self, LatticeError> {
        if n < 2 {
            return Err(LatticeError::Unsupported(format!(
                "refined VSASM lattice needs n >= 2 (got {n})"
            )));
        }
        check_index("column", i, n)?;
        let rows = 2 * n - 2;
        let mut top = vec![true; n];
        top[i - 1] = false;
        Ok(Self::from_bits(
            top,
            vec![false; n],
            vec![true; rows],
            (0..rows).map(|r| r % 2 == 0).collect(),
            SpecOrigin::Generic,
        ))
    }

    /// `(2n−1) × n` half-lattice of `(2n+1) × (2n+1)` vertically symmetric
    /// ASMs (first and last rows, which are forced, removed): top all Up,
    /// bottom Down, left Right, right alternating Left, Right, …, Left.
    pub fn vsasm(n: usize) -> Result<Self, LatticeError> {
        check_dims(n, n)?;
        let rows = 2 * n - 1;
        Ok(Self::from_bits(
            vec![true; n],
            vec![false; n],
            vec![true; rows],
            (0..rows).map(|r| r % 2 == 1).collect(),
            SpecOrigin::Generic,
        ))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether boundary in-arrows and out-arrows balance. Unbalanced specs
    /// admit no states.
    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    pub fn origin(&self) -> &SpecOrigin {
        &self.origin
    }

    /// Forgets the partition tag, so engines treat the spec generically.
    pub fn untagged(mut self) -> Self {
        self.origin = SpecOrigin::Generic;
        self
    }

    /// 0-based storage column of the column numbered `j` from the right.
    pub fn col_from_right(&self, j: usize) -> Result<usize, LatticeError> {
        check_index("column", j, self.cols)?;
        Ok(self.cols - j)
    }

    pub fn top(&self, col: usize) -> Arrow {
        Arrow::from_bit(Axis::Vertical, self.top[col])
    }

    pub fn bottom(&self, col: usize) -> Arrow {
        Arrow::from_bit(Axis::Vertical, self.bottom[col])
    }

    pub fn left(&self, row: usize) -> Arrow {
        Arrow::from_bit(Axis::Horizontal, self.left[row])
    }

    pub fn right(&self, row: usize) -> Arrow {
        Arrow::from_bit(Axis::Horizontal, self.right[row])
    }

    pub fn top_bits(&self) -> &[bool] {
        &self.top
    }

    pub fn bottom_bits(&self) -> &[bool] {
        &self.bottom
    }

    pub fn left_bits(&self) -> &[bool] {
        &self.left
    }

    pub fn right_bits(&self) -> &[bool] {
        &self.right
    }

    /// Number of Up arrows every state must carry on horizontal cut `r`
    /// (cut 0 is the top boundary, cut `rows` the bottom). `None` if the
    /// running flux leaves `0..=cols`, in which case there are no states.
    pub fn cut_flux(&self, r: usize) -> Option<usize> {
        let mut ups = self.top.iter().filter(|&&b| b).count() as i64;
        for row in 0..r {
            ups += self.right[row] as i64 - self.left[row] as i64;
            if ups < 0 || ups > self.cols as i64 {
                return None;
            }
        }
        Some(ups as usize)
    }

    /// Whether the spec is exactly `n × n` domain-wall.
    pub fn is_domain_wall(&self) -> bool {
        self.rows == self.cols
            && self.top.iter().all(|&b| b)
            && self.bottom.iter().all(|&b| !b)
            && self.left.iter().all(|&b| b)
            && self.right.iter().all(|&b| !b)
    }

    fn side_string(bits: &[bool], axis: Axis) -> String {
        bits.iter()
            .map(|&b| Arrow::from_bit(axis, b).symbol())
            .collect()
    }

    pub fn top_string(&self) -> String {
        Self::side_string(&self.top, Axis::Vertical)
    }

    pub fn bottom_string(&self) -> String {
        Self::side_string(&self.bottom, Axis::Vertical)
    }

    pub fn left_string(&self) -> String {
        Self::side_string(&self.left, Axis::Horizontal)
    }

    pub fn right_string(&self) -> String {
        Self::side_string(&self.right, Axis::Horizontal)
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<(), LatticeError> {
    if rows == 0 || cols == 0 {
        Err(LatticeError::EmptyLattice { rows, cols })
    } else {
        Ok(())
    }
}

fn check_index(what: &'static str, index: usize, max: usize) -> Result<(), LatticeError> {
    if index == 0 || index > max {
        Err(LatticeError::IndexOutOfRange { what, index, max })
    } else {
        Ok(())
    }
}
