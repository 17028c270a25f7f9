use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Partition, Space};

/// A box of a diagram, 1-indexed. Ordering is row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramKind {
    /// Young diagrams in the rectangle.
    Ordinary,
    /// Shifted diagrams: row `i` starts in column `i`.
    Shifted,
}

/// A set of boxes cut out of a Young diagram.
///
/// Shapes built by [`make_skew`] are honest skew diagrams `ν/λ`; the
/// recursions also build sub-shapes (corners removed, top row removed, arm
/// removed) directly from box sets with [`SkewShape::from_cells`]. All
/// statistics depend only on the box set and the kind, which fixes the
/// diagonal predicate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    kind: DiagramKind,
    cells: BTreeSet<Cell>,
}

impl SkewShape {
    pub fn empty(kind: DiagramKind) -> Self {
        Self {
            kind,
            cells: BTreeSet::new(),
        }
    }

    pub fn from_cells(kind: DiagramKind, cells: impl IntoIterator<Item = Cell>) -> Self {
        Self {
            kind,
            cells: cells.into_iter().collect(),
        }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn weight(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Diagonal boxes exist only in shifted diagrams, where they sit at `col == row`.
    pub fn is_diagonal(&self, c: Cell) -> bool {
        self.kind == DiagramKind::Shifted && c.row == c.col
    }

    pub fn is_subset(&self, other: &SkewShape) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn without(&self, remove: impl IntoIterator<Item = Cell>) -> SkewShape {
        let mut cells = self.cells.clone();
        for c in remove {
            cells.remove(&c);
        }
        SkewShape { kind: self.kind, cells }
    }

    /// Boxes of the topmost non-empty row, left to right.
    pub fn top_row(&self) -> Vec<Cell> {
        match self.cells.first() {
            Some(first) => self.iter().take_while(|c| c.row == first.row).collect(),
            None => Vec::new(),
        }
    }

    /// The rightmost box of the topmost non-empty row.
    pub fn upper_right(&self) -> Option<Cell> {
        self.top_row().last().copied()
    }

    /// South-east corners: boxes with nothing directly below or directly right.
    pub fn corners(&self) -> Vec<Cell> {
        self.iter()
            .filter(|c| !self.contains(Cell::new(c.row + 1, c.col)) && !self.contains(Cell::new(c.row, c.col + 1)))
            .collect()
    }

    /// All shapes between `θ` minus its corners and `θ` itself.
    ///
    /// Corners are taken in row-major order and subsets in binary-counter
    /// order, bit `i` meaning corner `i` is removed. The first shape yielded
    /// is `θ` and the last is `θ′`.
    pub fn corner_subsets(&self) -> Vec<SkewShape> {
        let corners = self.corners();
        (0u64..(1u64 << corners.len()))
            .map(|mask| {
                self.without(
                    corners
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, c)| *c),
                )
            })
            .collect()
    }

    /// Splits off the topmost non-empty row: returns `(θ̂, a)`.
    pub fn remove_top_row(&self) -> Result<(SkewShape, usize)> {
        let top = self.top_row();
        if top.is_empty() {
            return Err(Error::EmptyShape);
        }
        let a = top.len();
        Ok((self.without(top), a))
    }

    /// Translates an ordinary shape so that its bounding box starts at (1,1).
    /// Shifted shapes are returned unchanged since position fixes the diagonal.
    pub fn normalized(&self) -> SkewShape {
        if self.kind == DiagramKind::Shifted || self.is_empty() {
            return self.clone();
        }
        let r0 = self.iter().map(|c| c.row).min().unwrap_or(1) - 1;
        let c0 = self.iter().map(|c| c.col).min().unwrap_or(1) - 1;
        SkewShape::from_cells(self.kind, self.iter().map(|c| Cell::new(c.row - r0, c.col - c0)))
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{{", self.kind)?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Builds `ν/λ` in the coordinates of `space`.
///
/// Ordinary: `(i, j)` with `λ_i < j ≤ ν_i`. Shifted: row `i` of a strict
/// partition occupies columns `i ..= i + ν_i − 1`, so the skew boxes are
/// `i + λ_i ≤ j ≤ i + ν_i − 1`.
pub fn make_skew(lambda: &Partition, nu: &Partition, space: Space) -> Result<SkewShape> {
    space.check_fits(lambda)?;
    space.check_fits(nu)?;
    if !nu.contains(lambda) {
        return Err(Error::NotContained {
            inner: format!("{lambda:?}"),
            outer: format!("{nu:?}"),
        });
    }
    let kind = space.diagram_kind();
    let mut cells = BTreeSet::new();
    for i in 0..nu.len() {
        let row = i as u32 + 1;
        let (lo, hi) = match kind {
            DiagramKind::Ordinary => (lambda.part(i) + 1, nu.part(i)),
            DiagramKind::Shifted => (row + lambda.part(i), row + nu.part(i) - 1),
        };
        for col in lo..=hi {
            cells.insert(Cell::new(row, col));
        }
    }
    Ok(SkewShape { kind, cells })
}
