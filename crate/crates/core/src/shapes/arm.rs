use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::shapes::{Cell, DiagramKind, SkewShape};

/// A rim split into its north-east arm and the remainder `θ̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArmDecomposition {
    pub arm: BTreeSet<Cell>,
    pub rest: SkewShape,
    /// `|arm|`
    pub a: usize,
    pub arm_is_row: bool,
    pub arm_is_column: bool,
    /// Some box of the arm shares a side with some box of the rest.
    pub connected: bool,
}

impl SkewShape {
    /// The largest row or column cut from the rim by a square whose
    /// upper-right box is the upper-right box of the rim.
    ///
    /// A single-box arm counts as a row.
    pub fn northeast_arm(&self) -> Result<ArmDecomposition> {
        if self.kind() != DiagramKind::Shifted {
            return Err(Error::WrongDiagramKind("north-east arm needs a shifted shape".into()));
        }
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        if !self.is_rim() {
            return Err(Error::NotARim);
        }
        self.northeast_square_cut()
    }

    /// The square intersection behind [`northeast_arm`](Self::northeast_arm)
    /// without the rim precondition. On a non-rim the result is only a
    /// geometric cut and carries no recursion meaning.
    pub fn northeast_square_cut(&self) -> Result<ArmDecomposition> {
        let corner = self.upper_right().ok_or(Error::EmptyShape)?;
        let max_row = self.iter().map(|c| c.row).max().unwrap_or(corner.row);
        let min_col = self.iter().map(|c| c.col).min().unwrap_or(corner.col);
        let max_side = (max_row - corner.row + 1).max(corner.col - min_col + 1);

        let mut best: Option<(BTreeSet<Cell>, bool)> = None;
        for side in 1..=max_side {
            let square: BTreeSet<Cell> = self
                .iter()
                .filter(|c| {
                    c.row >= corner.row && c.row < corner.row + side && c.col <= corner.col && c.col + side > corner.col
                })
                .collect();
            let one_row = square.iter().all(|c| c.row == corner.row);
            let one_col = square.iter().all(|c| c.col == corner.col);
            if !one_row && !one_col {
                // every larger square contains this one
                break;
            }
            best = Some((square, one_row));
        }
        let (arm, arm_is_row) = best.expect("the 1x1 square is always a row");
        let rest = self.without(arm.iter().copied());
        let connected = arm.iter().any(|b| {
            [
                Cell::new(b.row + 1, b.col),
                Cell::new(b.row, b.col.saturating_sub(1)),
                Cell::new(b.row.saturating_sub(1), b.col),
                Cell::new(b.row, b.col + 1),
            ]
            .into_iter()
            .any(|nb| rest.contains(nb))
        });
        Ok(ArmDecomposition {
            a: arm.len(),
            arm_is_column: !arm_is_row,
            arm,
            rest,
            arm_is_row,
            connected,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::shapes::{make_skew, Space};

    fn shifted(v: &[(u32, u32)]) -> SkewShape {
        SkewShape::from_cells(DiagramKind::Shifted, v.iter().map(|&(r, c)| Cell::new(r, c)))
    }

    /// Independent reading of the definition: try every square size and
    /// keep the largest intersection that is a row or a column.
    fn brute_force_arm(theta: &SkewShape) -> BTreeSet<Cell> {
        let corner = theta.upper_right().unwrap();
        let mut best = BTreeSet::new();
        for side in 1..=64u32 {
            let sq: BTreeSet<Cell> = theta
                .iter()
                .filter(|c| {
                    (corner.row..corner.row + side).contains(&c.row)
                        && (corner.col + 1 - side.min(corner.col)..=corner.col).contains(&c.col)
                })
                .collect();
            let rows: BTreeSet<u32> = sq.iter().map(|c| c.row).collect();
            let cols: BTreeSet<u32> = sq.iter().map(|c| c.col).collect();
            if (rows.len() == 1 || cols.len() == 1) && sq.len() > best.len() {
                best = sq;
            }
        }
        best
    }

    #[test]
    fn whole_column() {
        let t = make_skew(&part![1], &part![2, 1], Space::og(2).unwrap()).unwrap();
        let d = t.northeast_arm().unwrap();
        assert_eq!(d.a, 2);
        assert!(d.rest.is_empty());
        assert!(d.arm_is_column && !d.arm_is_row);
    }

    #[test]
    fn isolated_boxes() {
        let d = shifted(&[(1, 4), (2, 2)]).northeast_arm().unwrap();
        assert_eq!(d.arm.iter().copied().collect::<Vec<_>>(), vec![Cell::new(1, 4)]);
        assert_eq!(d.rest, shifted(&[(2, 2)]));
        assert!(!d.connected);
        assert!(d.arm_is_row);
    }

    #[test]
    fn single_box_cut_next_to_a_row() {
        // (4,3)/(2): row 1 cols 3..4, row 2 cols 2..4. Box (1,3) has (2,4)
        // strictly south-east, so this is not a rim.
        let t = make_skew(&part![2], &part![4, 3], Space::og(4).unwrap()).unwrap();
        assert_eq!(t.northeast_arm(), Err(Error::NotARim));
        // The 2x2 square holds 4 boxes, so the side-1 square wins.
        let d = t.northeast_square_cut().unwrap();
        assert_eq!(d.arm, brute_force_arm(&t));
        assert_eq!(d.arm.iter().copied().collect::<Vec<_>>(), vec![Cell::new(1, 4)]);
        assert_eq!(d.a, 1);
        assert!(d.connected);
    }

    #[test]
    fn column_arm_above_a_row() {
        let t = shifted(&[(1, 5), (2, 5), (3, 3), (3, 4), (3, 5)]);
        let d = t.northeast_arm().unwrap();
        assert_eq!(d.a, 2);
        assert!(d.arm_is_column && d.connected);
        assert_eq!(d.rest, shifted(&[(3, 3), (3, 4), (3, 5)]));
    }

    #[test]
    fn errors() {
        assert_eq!(
            SkewShape::empty(DiagramKind::Shifted).northeast_arm(),
            Err(Error::EmptyShape)
        );
        let t = SkewShape::from_cells(DiagramKind::Ordinary, [Cell::new(1, 1)]);
        assert!(matches!(t.northeast_arm(), Err(Error::WrongDiagramKind(_))));
    }

    #[test]
    fn matches_brute_force_and_partitions_every_rim() {
        for n in 1..=6 {
            let space = Space::og(n).unwrap();
            let all = space.partitions();
            for nu in &all {
                for lambda in all.iter().filter(|l| nu.contains(l)) {
                    let t = make_skew(lambda, nu, space).unwrap();
                    if t.is_empty() || !t.is_rim() {
                        continue;
                    }
                    let d = t.northeast_arm().unwrap();
                    assert_eq!(d.arm, brute_force_arm(&t), "{t:?}");
                    let mut union: BTreeSet<Cell> = d.rest.cells().clone();
                    assert!(d.arm.iter().all(|c| !union.contains(c)));
                    union.extend(d.arm.iter().copied());
                    assert_eq!(&union, t.cells());
                    assert_eq!(d.rest.is_empty(), t.is_row() || t.is_column(), "{t:?}");
                    // a row and a column of equal size > 1 can never both qualify
                    assert!(!(d.a > 1 && d.arm_is_row && d.arm_is_column));
                }
            }
        }
    }
}
