use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::shapes::{Cell, SkewShape};

/// Combinatorial statistics of a diagram consumed by the Euler
/// characteristic formulas and the recursions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub weight: usize,
    /// Number of non-empty columns.
    pub c: usize,
    /// Size of the south-east rim.
    pub d: usize,
    /// Side-connected components.
    pub n: usize,
    pub n_minus: usize,
    /// Components without a diagonal box.
    pub n_prime: usize,
    /// Number of non-empty rows.
    pub r: usize,
    pub is_rim: bool,
    pub is_horizontal_strip: bool,
    pub is_vertical_strip: bool,
    pub is_rook_strip: bool,
    pub meets_diagonal: bool,
}

impl SkewShape {
    /// Boxes with no box of the shape strictly south and strictly east.
    pub fn southeast_rim(&self) -> BTreeSet<Cell> {
        self.iter()
            .filter(|b| !self.iter().any(|o| o.row > b.row && o.col > b.col))
            .collect()
    }

    pub fn is_rim(&self) -> bool {
        self.southeast_rim().len() == self.weight()
    }

    /// Side-connected components, each as a sorted box list; components are
    /// ordered by their first box.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.iter() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(b) = stack.pop() {
                for nb in neighbours(b) {
                    if self.contains(nb) && seen.insert(nb) {
                        comp.push(nb);
                        stack.push(nb);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    fn row_counts(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for b in self.iter() {
            *m.entry(b.row).or_default() += 1;
        }
        m
    }

    fn col_counts(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for b in self.iter() {
            *m.entry(b.col).or_default() += 1;
        }
        m
    }

    /// At most one box per column.
    pub fn is_horizontal_strip(&self) -> bool {
        self.col_counts().values().all(|&n| n <= 1)
    }

    /// At most one box per row.
    pub fn is_vertical_strip(&self) -> bool {
        self.row_counts().values().all(|&n| n <= 1)
    }

    pub fn is_rook_strip(&self) -> bool {
        self.is_horizontal_strip() && self.is_vertical_strip()
    }

    pub fn is_row(&self) -> bool {
        self.row_counts().len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.col_counts().len() <= 1
    }

    pub fn meets_diagonal(&self) -> bool {
        self.iter().any(|b| self.is_diagonal(b))
    }

    pub fn stats(&self) -> DiagramStats {
        let comps = self.components();
        let n = comps.len();
        let n_prime = comps
            .iter()
            .filter(|comp| !comp.iter().any(|&b| self.is_diagonal(b)))
            .count();
        let rows = self.row_counts();
        let cols = self.col_counts();
        let hs = cols.values().all(|&k| k <= 1);
        let vs = rows.values().all(|&k| k <= 1);
        let d = self.southeast_rim().len();
        DiagramStats {
            weight: self.weight(),
            c: cols.len(),
            d,
            n,
            n_minus: n.saturating_sub(1),
            n_prime,
            r: rows.len(),
            is_rim: d == self.weight(),
            is_horizontal_strip: hs,
            is_vertical_strip: vs,
            is_rook_strip: hs && vs,
            meets_diagonal: self.meets_diagonal(),
        }
    }
}

fn neighbours(b: Cell) -> impl Iterator<Item = Cell> {
    let mut v = vec![Cell::new(b.row + 1, b.col), Cell::new(b.row, b.col + 1)];
    if b.row > 1 {
        v.push(Cell::new(b.row - 1, b.col));
    }
    if b.col > 1 {
        v.push(Cell::new(b.row, b.col - 1));
    }
    v.into_iter()
}
