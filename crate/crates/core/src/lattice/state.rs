use serde::{Deserialize, Serialize};

use super::{Arrow, Axis, BoundarySpec, LatticeError};

/// The six two-in/two-out configurations around a vertex.
///
/// `Plus` and `Minus` are the two vertices where the horizontal arrows turn
/// around; they carry the `+1` and `−1` entries of the associated
/// alternating sign matrix. The other four are named after the direction
/// the horizontal and vertical arrows run through the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexState {
    /// Horizontal arrows point in, vertical arrows point out.
    Plus,
    /// Vertical arrows point in, horizontal arrows point out.
    Minus,
    RightUp,
    RightDown,
    LeftUp,
    LeftDown,
}

impl VertexState {
    /// Classifies the four arrows around a vertex; `None` if the ice rule
    /// fails or an arrow lies on the wrong axis.
    pub fn from_arrows(top: Arrow, bottom: Arrow, left: Arrow, right: Arrow) -> Option<Self> {
        if top.axis() != Axis::Vertical
            || bottom.axis() != Axis::Vertical
            || left.axis() != Axis::Horizontal
            || right.axis() != Axis::Horizontal
        {
            return None;
        }
        Self::from_bits(top.bit(), bottom.bit(), left.bit(), right.bit())
    }

    pub(crate) fn from_bits(top: bool, bottom: bool, left: bool, right: bool) -> Option<Self> {
        if bottom as u8 + left as u8 != top as u8 + right as u8 {
            return None;
        }
        Some(match (left, right, top) {
            (true, false, _) => VertexState::Plus,
            (false, true, _) => VertexState::Minus,
            (true, true, true) => VertexState::RightUp,
            (true, true, false) => VertexState::RightDown,
            (false, false, true) => VertexState::LeftUp,
            (false, false, false) => VertexState::LeftDown,
        })
    }

    pub fn asm_entry(self) -> i8 {
        match self {
            VertexState::Plus => 1,
            VertexState::Minus => -1,
            _ => 0,
        }
    }
}

/// A full assignment of arrows to every edge of a lattice.
///
/// `vertical[r][c]` is the vertical edge of column `c` crossing horizontal
/// cut `r` (cut 0 is the top boundary, cut `rows` the bottom).
/// `horizontal[r][c]` is the horizontal edge of row `r` left of column `c`
/// (index `cols` is the right boundary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridState {
    spec: BoundarySpec,
    vertical: Vec<Vec<Arrow>>,
    horizontal: Vec<Vec<Arrow>>,
}

impl GridState {
    /// Wraps raw edge matrices. Nothing is checked here; use
    /// [`GridState::validate`].
    pub fn from_edges(
        spec: BoundarySpec,
        vertical: Vec<Vec<Arrow>>,
        horizontal: Vec<Vec<Arrow>>,
    ) -> Self {
        Self {
            spec,
            vertical,
            horizontal,
        }
    }

    pub(crate) fn from_bit_rows(
        spec: &BoundarySpec,
        vertical: &[bool],
        horizontal: &[bool],
    ) -> Self {
        let (rows, cols) = (spec.rows(), spec.cols());
        let vertical = vertical
            .chunks(cols)
            .map(|row| {
                row.iter()
                    .map(|&b| Arrow::from_bit(Axis::Vertical, b))
                    .collect()
            })
            .collect();
        let horizontal = horizontal
            .chunks(cols + 1)
            .take(rows)
            .map(|row| {
                row.iter()
                    .map(|&b| Arrow::from_bit(Axis::Horizontal, b))
                    .collect()
            })
            .collect();
        Self {
            spec: spec.clone(),
            vertical,
            horizontal,
        }
    }

    pub fn spec(&self) -> &BoundarySpec {
        &self.spec
    }

    pub fn vertical(&self) -> &[Vec<Arrow>] {
        &self.vertical
    }

    pub fn horizontal(&self) -> &[Vec<Arrow>] {
        &self.horizontal
    }

    /// Checks the edge matrices have the shape the spec requires and that
    /// every arrow is on the right axis.
    pub fn check_dimensions(&self) -> Result<(), LatticeError> {
        let (rows, cols) = (self.spec.rows(), self.spec.cols());
        if self.vertical.len() != rows + 1 {
            return Err(LatticeError::LengthMismatch {
                what: "vertical edge cuts",
                expected: rows + 1,
                actual: self.vertical.len(),
            });
        }
        if self.horizontal.len() != rows {
            return Err(LatticeError::LengthMismatch {
                what: "horizontal edge rows",
                expected: rows,
                actual: self.horizontal.len(),
            });
        }
        for cut in &self.vertical {
            if cut.len() != cols {
                return Err(LatticeError::LengthMismatch {
                    what: "vertical edges per cut",
                    expected: cols,
                    actual: cut.len(),
                });
            }
            if let Some(&a) = cut.iter().find(|a| a.axis() != Axis::Vertical) {
                return Err(LatticeError::WrongAxis {
                    what: "vertical edge",
                    arrow: a,
                });
            }
        }
        for row in &self.horizontal {
            if row.len() != cols + 1 {
                return Err(LatticeError::LengthMismatch {
                    what: "horizontal edges per row",
                    expected: cols + 1,
                    actual: row.len(),
                });
            }
            if let Some(&a) = row.iter().find(|a| a.axis() != Axis::Horizontal) {
                return Err(LatticeError::WrongAxis {
                    what: "horizontal edge",
                    arrow: a,
                });
            }
        }
        Ok(())
    }

    /// `Ok(true)` iff boundary edges match the spec and every vertex obeys
    /// the ice rule. Shape problems are reported as errors, not `false`.
    pub fn validate(&self) -> Result<bool, LatticeError> {
        self.check_dimensions()?;
        let (rows, cols) = (self.spec.rows(), self.spec.cols());
        let boundary_ok = (0..cols).all(|c| {
            self.vertical[0][c] == self.spec.top(c) && self.vertical[rows][c] == self.spec.bottom(c)
        }) && (0..rows).all(|r| {
            self.horizontal[r][0] == self.spec.left(r)
                && self.horizontal[r][cols] == self.spec.right(r)
        });
        if !boundary_ok {
            return Ok(false);
        }
        Ok((0..rows).all(|r| (0..cols).all(|c| self.vertex(r, c).is_some())))
    }

    /// Configuration at vertex `(row, col)`, `None` if the ice rule fails.
    pub fn vertex(&self, row: usize, col: usize) -> Option<VertexState> {
        VertexState::from_arrows(
            self.vertical[row][col],
            self.vertical[row + 1][col],
            self.horizontal[row][col],
            self.horizontal[row][col + 1],
        )
    }

    /// Number of Up arrows on horizontal cut `r`.
    pub fn ups_on_cut(&self, r: usize) -> usize {
        self.vertical[r].iter().filter(|&&a| a == Arrow::Up).count()
    }

    /// The alternating sign matrix of a domain-wall state: `+1` at
    /// [`VertexState::Plus`], `−1` at [`VertexState::Minus`], `0` elsewhere.
    pub fn to_asm(&self) -> Result<Vec<Vec<i8>>, LatticeError> {
        if !self.spec.is_domain_wall() {
            return Err(LatticeError::Unsupported(format!(
                "ASM conversion needs a square domain-wall lattice, got {}x{}",
                self.spec.rows(),
                self.spec.cols()
            )));
        }
        if !self.validate()? {
            return Err(LatticeError::Unsupported(
                "ASM conversion needs a valid state".into(),
            ));
        }
        let n = self.spec.rows();
        Ok((0..n)
            .map(|r| {
                (0..n)
                    .map(|c| self.vertex(r, c).map_or(0, VertexState::asm_entry))
                    .collect()
            })
            .collect())
    }

    /// Figure-style ASCII picture: arrows on edges, `+` at vertices.
    pub fn render_ascii(&self) -> String {
        let (rows, cols) = (self.spec.rows(), self.spec.cols());
        let mut out = String::new();
        let vline = |cut: &[Arrow]| {
            let mut s = String::from("  ");
            for a in cut {
                s.push(a.glyph());
                s.push_str("   ");
            }
            s.trim_end().to_string()
        };
        for r in 0..rows {
            out.push_str(&vline(&self.vertical[r]));
            out.push('\n');
            let mut line = String::new();
            for c in 0..=cols {
                line.push(self.horizontal[r][c].glyph());
                if c < cols {
                    line.push_str(" + ");
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&vline(&self.vertical[rows]));
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> StateJson {
        let side = |arrows: Vec<Arrow>| arrows.iter().map(|a| a.symbol()).collect::<String>();
        let spec = &self.spec;
        StateJson {
            rows: spec.rows(),
            cols: spec.cols(),
            top: spec.top_string(),
            bottom: spec.bottom_string(),
            left: spec.left_string(),
            right: spec.right_string(),
            vertical: self.vertical.iter().map(|row| side(row.clone())).collect(),
            horizontal: self
                .horizontal
                .iter()
                .map(|row| side(row.clone()))
                .collect(),
        }
    }

    /// Rebuilds a state (and its spec) from the JSON form. The result is not
    /// validated.
    pub fn from_json(json: &StateJson) -> Result<Self, LatticeError> {
        let parse = |what: &'static str, s: &str| -> Result<Vec<Arrow>, LatticeError> {
            s.chars()
                .map(|c| {
                    Arrow::from_symbol(c).ok_or_else(|| {
                        LatticeError::Parse(format!("{what}: bad arrow symbol `{c}`"))
                    })
                })
                .collect()
        };
        let spec = BoundarySpec::new(
            &parse("top", &json.top)?,
            &parse("bottom", &json.bottom)?,
            &parse("left", &json.left)?,
            &parse("right", &json.right)?,
        )?;
        if spec.rows() != json.rows || spec.cols() != json.cols {
            return Err(LatticeError::Parse(format!(
                "declared {}x{} lattice but the boundary strings describe {}x{}",
                json.rows,
                json.cols,
                spec.rows(),
                spec.cols()
            )));
        }
        let vertical = json
            .vertical
            .iter()
            .map(|s| parse("vertical", s))
            .collect::<Result<_, _>>()?;
        let horizontal = json
            .horizontal
            .iter()
            .map(|s| parse("horizontal", s))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_edges(spec, vertical, horizontal))
    }
}

/// Serialized state: boundary sides and edge rows as strings over `U/D/L/R`,
/// columns left to right, rows top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub rows: usize,
    pub cols: usize,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
    pub vertical: Vec<String>,
    pub horizontal: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Partition;

    fn arrows(s: &str) -> Vec<Arrow> {
        s.chars().map(|c| Arrow::from_symbol(c).unwrap()).collect()
    }

    /// The 3×5 state drawn in the introduction's first figure, transcribed
    /// row by row (top to bottom, columns left to right).
    fn figure_one() -> GridState {
        let spec = BoundarySpec::new(
            &arrows("UUDDU"),
            &arrows("DDDDD"),
            &arrows("RRR"),
            &arrows("LLL"),
        )
        .unwrap();
        let vertical = ["UUDDU", "DUDDU", "DDUDD", "DDDDD"].map(arrows).to_vec();
        let horizontal = ["RLLLLL", "RRLRRL", "RRRLLL"].map(arrows).to_vec();
        GridState::from_edges(spec, vertical, horizontal)
    }

    #[test]
    fn figure_one_is_valid() {
        let state = figure_one();
        assert_eq!(state.validate(), Ok(true));
        // it is a state of the (2,2,0) lattice
        assert_eq!(
            state.spec(),
            &BoundarySpec::from_partition(&"2,2,0".parse::<Partition>().unwrap()).untagged()
        );
        for r in 0..=3 {
            assert_eq!(state.ups_on_cut(r), 3 - r);
        }
    }

    #[test]
    fn flipping_an_internal_edge_breaks_the_ice_rule() {
        let base = figure_one();
        for r in 1..3 {
            for c in 0..5 {
                let mut vertical = base.vertical().to_vec();
                vertical[r][c] = if vertical[r][c] == Arrow::Up {
                    Arrow::Down
                } else {
                    Arrow::Up
                };
                let s = GridState::from_edges(
                    base.spec().clone(),
                    vertical,
                    base.horizontal().to_vec(),
                );
                assert_eq!(s.validate(), Ok(false));
            }
        }
        for r in 0..3 {
            for c in 1..5 {
                let mut horizontal = base.horizontal().to_vec();
                horizontal[r][c] = if horizontal[r][c] == Arrow::Left {
                    Arrow::Right
                } else {
                    Arrow::Left
                };
                let s = GridState::from_edges(
                    base.spec().clone(),
                    base.vertical().to_vec(),
                    horizontal,
                );
                assert_eq!(s.validate(), Ok(false));
            }
        }
    }

    #[test]
    fn boundary_mismatch_is_invalid_not_an_error() {
        let spec = BoundarySpec::domain_wall(3).unwrap();
        let state = GridState::from_edges(spec, vec![arrows("DDD"); 4], vec![arrows("RRRR"); 3]);
        assert_eq!(state.validate(), Ok(false));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let spec = BoundarySpec::domain_wall(2).unwrap();
        let state =
            GridState::from_edges(spec.clone(), vec![arrows("UU"); 2], vec![arrows("RRL"); 2]);
        assert!(matches!(
            state.validate(),
            Err(LatticeError::LengthMismatch { .. })
        ));
        let state = GridState::from_edges(
            spec,
            vec![arrows("UU"), arrows("UL"), arrows("DD")],
            vec![arrows("RRL"); 2],
        );
        assert!(matches!(
            state.validate(),
            Err(LatticeError::WrongAxis { .. })
        ));
    }

    #[test]
    fn unique_one_by_one_state_is_identity_asm() {
        let spec = BoundarySpec::domain_wall(1).unwrap();
        let state = GridState::from_edges(spec, vec![arrows("U"), arrows("D")], vec![arrows("RL")]);
        assert_eq!(state.to_asm().unwrap(), vec![vec![1]]);
    }

    #[test]
    fn asm_rejects_non_domain_wall() {
        assert!(matches!(
            figure_one().to_asm(),
            Err(LatticeError::Unsupported(_))
        ));
    }

    #[test]
    fn six_vertex_types() {
        use Arrow::*;
        let mut seen = std::collections::HashSet::new();
        for t in [Up, Down] {
            for b in [Up, Down] {
                for l in [Left, Right] {
                    for r in [Left, Right] {
                        if let Some(v) = VertexState::from_arrows(t, b, l, r) {
                            seen.insert(v);
                        }
                    }
                }
            }
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(
            VertexState::from_arrows(Up, Down, Right, Left),
            Some(VertexState::Plus)
        );
        assert_eq!(
            VertexState::from_arrows(Down, Up, Left, Right),
            Some(VertexState::Minus)
        );
        assert_eq!(VertexState::from_arrows(Left, Down, Right, Left), None);
    }

    #[test]
    fn json_round_trip() {
        let state = figure_one();
        let json = state.to_json();
        assert_eq!(json.vertical[0], "UUDDU");
        let text = serde_json::to_string(&json).unwrap();
        let back: StateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(GridState::from_json(&back).unwrap(), state);
    }

    #[test]
    fn ascii_render_has_every_row() {
        let pic = figure_one().render_ascii();
        assert_eq!(pic.lines().count(), 7);
        assert!(pic.starts_with("  ↑   ↑   ↓   ↓   ↑"));
    }
}
