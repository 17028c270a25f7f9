//! KOG- and KLG-tableaux of rims and their signed counts.
//!
//! A KOG-tableau labels a rim with positive integers so that rows and
//! columns strictly increase and every box is either `≤` all boxes
//! south-west of it or `≥` all of them. KLG-tableaux use the alphabet
//! `1' < 1 < 2' < 2 < …`: unprimed boxes are `≥` everything south-west,
//! primed boxes are `≤` everything south-west, and diagonal boxes are never
//! primed. "South-west of `(i, j)`" means every other box in a row `≥ i`
//! and a column `≤ j`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::euler::{Coefficient, Engine};
use crate::shapes::{make_skew, Cell, DiagramKind, Partition, SkewShape, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub value: u32,
    pub primed: bool,
}

impl Label {
    pub const fn plain(value: u32) -> Self {
        Self { value, primed: false }
    }

    pub const fn primed(value: u32) -> Self {
        Self { value, primed: true }
    }

    fn rank(self) -> (u32, u8) {
        (self.value, u8::from(!self.primed))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.primed {
            format!("{}'", self.value)
        } else {
            self.value.to_string()
        };
        f.pad(&s)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(value) if value > 0 => Ok(Label { value, primed }),
            _ => Err(Error::Parse(format!("bad label {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Kog,
    Klg,
}

impl Mode {
    pub fn for_space(space: Space) -> Result<Mode> {
        match space {
            Space::OG(_) => Ok(Mode::Kog),
            Space::LG(_) => Ok(Mode::Klg),
            Space::RectA { .. } => Err(Error::WrongSpace(format!("no tableau rule for {space}"))),
        }
    }

    fn alphabet(self, p: u32) -> Vec<Label> {
        match self {
            Mode::Kog => (1..=p).map(Label::plain).collect(),
            Mode::Klg => (1..=p).flat_map(|v| [Label::primed(v), Label::plain(v)]).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    entries: BTreeMap<Cell, Label>,
    mode: Mode,
}

impl Tableau {
    /// Builds and validates a tableau.
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, Label>, mode: Mode) -> Result<Self> {
        let t = Tableau { shape, entries, mode };
        t.validate().map_err(Error::Parse)?;
        Ok(t)
    }

    /// Fills the boxes of `shape` in row-major order.
    pub fn from_labels(shape: SkewShape, labels: &[Label], mode: Mode) -> Result<Self> {
        if labels.len() != shape.weight() {
            return Err(Error::Parse(format!(
                "{} labels for {} boxes",
                labels.len(),
                shape.weight()
            )));
        }
        let entries = shape.iter().zip(labels.iter().copied()).collect();
        Tableau::new(shape, entries, mode)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn entries(&self) -> &BTreeMap<Cell, Label> {
        &self.entries
    }

    /// Labels in row-major box order.
    pub fn labels(&self) -> Vec<Label> {
        self.entries.values().copied().collect()
    }

    /// Integers `i` such that some box holds `i` or `i'`.
    pub fn content(&self) -> BTreeSet<u32> {
        self.entries.values().map(|l| l.value).collect()
    }

    /// Checks every tableau condition from scratch.
    pub fn validate(&self) -> Result<(), String> {
        if !self.shape.is_rim() {
            return Err("shape is not a rim".into());
        }
        let boxes: BTreeSet<Cell> = self.entries.keys().copied().collect();
        if &boxes != self.shape.cells() {
            return Err("labelled boxes differ from the shape".into());
        }
        for (&b, &lb) in &self.entries {
            if lb.value == 0 {
                return Err(format!("zero label at {b}"));
            }
            if lb.primed && (self.mode == Mode::Kog || self.shape.is_diagonal(b)) {
                return Err(format!("primed label not allowed at {b}"));
            }
            let mut south_west = Vec::new();
            for (&o, &lo) in &self.entries {
                if o.row == b.row && o.col > b.col && lo <= lb {
                    return Err(format!("row not increasing at {b},{o}"));
                }
                if o.col == b.col && o.row > b.row && lo <= lb {
                    return Err(format!("column not increasing at {b},{o}"));
                }
                if south_west_of(o, b) {
                    south_west.push(lo);
                }
            }
            let below_all = south_west.iter().all(|&x| lb <= x);
            let above_all = south_west.iter().all(|&x| lb >= x);
            let ok = match (self.mode, lb.primed) {
                (Mode::Kog, _) => below_all || above_all,
                (Mode::Klg, false) => above_all,
                (Mode::Klg, true) => below_all,
            };
            if !ok {
                return Err(format!("south-west condition fails at {b}"));
            }
        }
        Ok(())
    }

    /// One line per row from the top row of the shape to the bottom row.
    /// Cells are padded to the widest label and separated by one space; a
    /// column left of a row's first box renders as a blank cell.
    pub fn render(&self) -> String {
        let Some(first) = self.shape.cells().first() else {
            return String::new();
        };
        let last_row = self.shape.cells().last().map_or(first.row, |c| c.row);
        let min_col = self.shape.iter().map(|c| c.col).min().unwrap_or(1);
        let width = self.entries.values().map(|l| l.to_string().len()).max().unwrap_or(1);
        let mut lines = Vec::new();
        for row in first.row..=last_row {
            let cells: Vec<(u32, Label)> = self
                .entries
                .iter()
                .filter(|(c, _)| c.row == row)
                .map(|(c, l)| (c.col, *l))
                .collect();
            let Some(&(end, _)) = cells.last() else {
                lines.push(String::new());
                continue;
            };
            let line = (min_col..=end)
                .map(|col| match cells.iter().find(|(c, _)| *c == col) {
                    Some((_, l)) => format!("{l:<width$}"),
                    None => " ".repeat(width),
                })
                .collect::<Vec<_>>()
                .join(" ");
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}[", self.mode)?;
        for (i, l) in self.entries.values().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Whether `o` lies south-west of `b`: a different box in a row weakly
/// below and a column weakly left.
fn south_west_of(o: Cell, b: Cell) -> bool {
    o != b && o.row >= b.row && o.col <= b.col
}

struct Search<'a> {
    cells: Vec<Cell>,
    shape: &'a SkewShape,
    mode: Mode,
    alphabet: Vec<Label>,
    /// For each box, the boxes up to it whose south-west condition it
    /// takes part in, itself included.
    affected: Vec<Vec<usize>>,
    /// For each box, the earlier boxes in its row or column.
    line_before: Vec<Vec<usize>>,
    labels: Vec<Label>,
    used: Vec<usize>,
    out: Vec<Vec<Label>>,
}

impl Search<'_> {
    fn south_west_ok(&self, j: usize, upto: usize) -> bool {
        let lj = self.labels[j];
        let bj = self.cells[j];
        let mut below_all = true;
        let mut above_all = true;
        for i in 0..=upto {
            if south_west_of(self.cells[i], bj) {
                below_all &= lj <= self.labels[i];
                above_all &= lj >= self.labels[i];
            }
        }
        match (self.mode, lj.primed) {
            (Mode::Kog, _) => below_all || above_all,
            (Mode::Klg, false) => above_all,
            (Mode::Klg, true) => below_all,
        }
    }

    fn run(&mut self, i: usize) {
        if i == self.cells.len() {
            if self.used[1..].iter().all(|&n| n > 0) {
                self.out.push(self.labels.clone());
            }
            return;
        }
        for li in 0..self.alphabet.len() {
            let label = self.alphabet[li];
            if label.primed && self.shape.is_diagonal(self.cells[i]) {
                continue;
            }
            if self.line_before[i].iter().any(|&j| self.labels[j] >= label) {
                continue;
            }
            self.labels.push(label);
            self.used[label.value as usize] += 1;
            let missing = self.used[1..].iter().filter(|&&n| n == 0).count();
            let remaining = self.cells.len() - i - 1;
            let ok = missing <= remaining && self.affected[i].iter().all(|&j| self.south_west_ok(j, i));
            if ok {
                self.run(i + 1);
            }
            self.used[label.value as usize] -= 1;
            self.labels.pop();
        }
    }
}

/// All tableaux of shape `theta` with content exactly `{1, …, p}`, in
/// lexicographic order of their row-major label sequences.
pub fn enumerate(theta: &SkewShape, p: i64, mode: Mode) -> Result<Vec<Tableau>> {
    if p < 0 {
        return Err(Error::NegativeContent(p));
    }
    if mode == Mode::Klg && theta.kind() != DiagramKind::Shifted {
        return Err(Error::WrongDiagramKind("KLG-tableaux need a shifted shape".into()));
    }
    if !theta.is_rim() || p as usize > theta.weight() {
        return Ok(Vec::new());
    }
    let cells: Vec<Cell> = theta.iter().collect();
    let affected = cells
        .iter()
        .enumerate()
        .map(|(i, &bi)| (0..=i).filter(|&j| j == i || south_west_of(bi, cells[j])).collect())
        .collect();
    let line_before = cells
        .iter()
        .enumerate()
        .map(|(i, bi)| {
            (0..i)
                .filter(|&j| cells[j].row == bi.row || cells[j].col == bi.col)
                .collect()
        })
        .collect();
    let p = p as usize;
    let mut search = Search {
        shape: theta,
        mode,
        alphabet: mode.alphabet(p as u32),
        affected,
        line_before,
        labels: Vec::with_capacity(cells.len()),
        used: vec![0; p + 1],
        out: Vec::new(),
        cells,
    };
    search.run(0);
    Ok(search
        .out
        .into_iter()
        .map(|labels| Tableau {
            entries: theta.iter().zip(labels).collect(),
            shape: theta.clone(),
            mode,
        })
        .collect())
}

/// `(-1)^{|θ|-p}` times the number of tableaux.
pub fn signed_count(theta: &SkewShape, p: i64, mode: Mode) -> Result<BigInt> {
    let n = BigInt::from(enumerate(theta, p, mode)?.len());
    Ok(if (theta.weight() as i64 - p).rem_euclid(2) == 0 {
        n
    } else {
        -n
    })
}

/// The Pieri coefficient as a signed tableau count (OG and LG only).
pub fn coeff_tableau(lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
    let mode = Mode::for_space(space)?;
    let theta = make_skew(lambda, nu, space)?;
    Ok(Coefficient {
        value: signed_count(&theta, p, mode)?,
        space,
        lambda: lambda.clone(),
        p,
        nu: nu.clone(),
        engine: Engine::Tableau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn labels(s: &str) -> Vec<Label> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn label_order() {
        let mut v = labels("2 1 2' 1'");
        v.sort();
        assert_eq!(v, labels("1' 1 2' 2"));
        assert_eq!(Label::primed(3).to_string(), "3'");
        assert!("0".parse::<Label>().is_err());
        assert!("x'".parse::<Label>().is_err());
    }

    #[test]
    fn empty_shape() {
        let e = SkewShape::empty(DiagramKind::Shifted);
        for mode in [Mode::Kog, Mode::Klg] {
            assert_eq!(enumerate(&e, 0, mode).unwrap().len(), 1);
            assert!(enumerate(&e, 1, mode).unwrap().is_empty());
        }
        assert_eq!(enumerate(&e, -1, Mode::Kog), Err(Error::NegativeContent(-1)));
    }

    #[test]
    fn single_off_diagonal_box_in_klg() {
        let t = SkewShape::from_cells(DiagramKind::Shifted, [Cell::new(1, 2)]);
        let all = enumerate(&t, 1, Mode::Klg).unwrap();
        assert_eq!(
            all.iter().map(|t| t.labels()).collect::<Vec<_>>(),
            vec![labels("1'"), labels("1")]
        );
        let d = SkewShape::from_cells(DiagramKind::Shifted, [Cell::new(2, 2)]);
        assert_eq!(enumerate(&d, 1, Mode::Klg).unwrap().len(), 1);
    }

    #[test]
    fn non_rim_has_no_tableaux() {
        let t = make_skew(&part![2], &part![4, 3], Space::og(4).unwrap()).unwrap();
        assert!(enumerate(&t, 3, Mode::Kog).unwrap().is_empty());
    }

    #[test]
    fn column_needs_distinct_values() {
        let t = make_skew(&part![2, 1], &part![3, 2], Space::og(3).unwrap()).unwrap();
        assert!(t.is_column());
        assert_eq!(t.weight(), 2);
        assert_eq!(signed_count(&t, 1, Mode::Kog).unwrap(), BigInt::from(0));
        assert_eq!(signed_count(&t, 2, Mode::Kog).unwrap(), BigInt::from(1));
    }

    #[test]
    fn klg_requires_shifted_shape() {
        let t = SkewShape::from_cells(DiagramKind::Ordinary, [Cell::new(1, 1)]);
        assert!(matches!(enumerate(&t, 1, Mode::Klg), Err(Error::WrongDiagramKind(_))));
    }

    #[test]
    fn validator_rejects_bad_fillings() {
        let shape = make_skew(&part![6, 4, 1], &part![7, 6, 3, 1], Space::lg(7).unwrap()).unwrap();
        // primed diagonal box
        assert!(Tableau::from_labels(shape.clone(), &labels("1' 1' 5 2' 4 3'"), Mode::Klg).is_err());
        // column (1,7)-(2,7) not increasing
        assert!(Tableau::from_labels(shape.clone(), &labels("5 1 5 2 4 3"), Mode::Kog).is_err());
        // primes in KOG
        assert!(Tableau::from_labels(shape.clone(), &labels("1' 1 5 2 4 3"), Mode::Kog).is_err());
        assert!(Tableau::from_labels(shape, &labels("1 1 5 2 4 3"), Mode::Kog).is_ok());
    }

    #[test]
    fn rendering() {
        let shape = make_skew(&part![6, 4, 1], &part![7, 6, 3, 1], Space::og(7).unwrap()).unwrap();
        let t = Tableau::from_labels(shape.clone(), &labels("1 1 5 2 4 3"), Mode::Kog).unwrap();
        assert_eq!(t.render(), "      1\n    1 5\n2 4\n3");
        let t = Tableau::from_labels(shape, &labels("1' 1' 5 2' 4 3"), Mode::Klg).unwrap();
        assert_eq!(t.render(), "         1'\n      1' 5\n2' 4\n3");
    }
}
