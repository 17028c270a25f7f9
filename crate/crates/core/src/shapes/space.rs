use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{DiagramKind, Partition};

/// One of the three cominuscule Grassmannian families.
///
/// `RectA { m, k }` is `Gr(m, m + k)`, whose Schubert classes are indexed by
/// partitions inside the `m × k` rectangle. `OG(n)` and `LG(n)` are indexed
/// by strict partitions inside the staircase `(n, n-1, …, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Space {
    RectA { m: u32, k: u32 },
    OG(u32),
    LG(u32),
}

impl Space {
    pub fn rect(m: u32, k: u32) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::Parse(format!("rectangle {m}x{k} must have positive sides")));
        }
        Ok(Space::RectA { m, k })
    }

    pub fn og(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("og:0 is not a space".into()));
        }
        Ok(Space::OG(n))
    }

    pub fn lg(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("lg:0 is not a space".into()));
        }
        Ok(Space::LG(n))
    }

    pub fn diagram_kind(self) -> DiagramKind {
        match self {
            Space::RectA { .. } => DiagramKind::Ordinary,
            Space::OG(_) | Space::LG(_) => DiagramKind::Shifted,
        }
    }

    pub fn is_shifted(self) -> bool {
        self.diagram_kind() == DiagramKind::Shifted
    }

    /// Largest `p` for which the special class `O^p` exists.
    pub fn max_special(self) -> u32 {
        match self {
            Space::RectA { k, .. } => k,
            Space::OG(n) | Space::LG(n) => n,
        }
    }

    pub fn fits(self, p: &Partition) -> bool {
        match self {
            Space::RectA { m, k } => p.len() <= m as usize && p.part(0) <= k,
            Space::OG(n) | Space::LG(n) => p.is_strict() && p.part(0) <= n,
        }
    }

    pub fn check_fits(self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                what: format!("{p:?}"),
                space: self.to_string(),
            })
        }
    }

    /// The dual partition: rotated complement in the rectangle, or the parts
    /// of the staircase missing from `mu` in the shifted case.
    pub fn dual(self, mu: &Partition) -> Result<Partition> {
        self.check_fits(mu)?;
        let parts: Vec<u32> = match self {
            Space::RectA { m, k } => (0..m as usize).rev().map(|i| k - mu.part(i)).collect(),
            Space::OG(n) | Space::LG(n) => (1..=n).rev().filter(|x| !mu.parts().contains(x)).collect(),
        };
        Partition::new(parts)
    }

    /// Every partition indexing a Schubert class of this space, sorted.
    pub fn partitions(self) -> Vec<Partition> {
        let mut out = Vec::new();
        match self {
            Space::RectA { m, k } => {
                let mut cur = Vec::with_capacity(m as usize);
                rect_rec(m as usize, k, &mut cur, &mut out);
            }
            Space::OG(n) | Space::LG(n) => {
                for mask in 0u64..(1u64 << n) {
                    let parts: Vec<u32> = (1..=n).rev().filter(|x| mask & (1 << (x - 1)) != 0).collect();
                    out.push(Partition::new(parts).expect("strictly decreasing"));
                }
            }
        }
        out.sort();
        out
    }

    /// Weight of the largest partition in the space (the dimension).
    pub fn dimension(self) -> u32 {
        match self {
            Space::RectA { m, k } => m * k,
            Space::OG(n) | Space::LG(n) => n * (n + 1) / 2,
        }
    }
}

fn rect_rec(rows_left: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
    if rows_left == 0 {
        return;
    }
    for part in 1..=max_part {
        cur.push(part);
        rect_rec(rows_left - 1, part, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::RectA { m, k } => write!(f, "a:{m}x{k}"),
            Space::OG(n) => write!(f, "og:{n}"),
            Space::LG(n) => write!(f, "lg:{n}"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad space {s:?}; expected a:MxK, og:N or lg:N"));
        let (family, dims) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        match family.to_ascii_lowercase().as_str() {
            "a" => {
                let (m, k) = dims.split_once(['x', 'X']).ok_or_else(bad)?;
                Space::rect(num(m)?, num(k)?)
            }
            "og" => Space::og(num(dims)?),
            "lg" => Space::lg(num(dims)?),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Space {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Space> for String {
    fn from(s: Space) -> Self {
        s.to_string()
    }
}
