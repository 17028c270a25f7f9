use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are accepted by the constructors and dropped, so two
/// partitions that differ only by trailing zeros compare equal. Strict
/// partitions use the same type; [`Partition::is_strict`] tells them apart.
///
/// Ordering is by weight first, then lexicographically by parts. This is the
/// order used for sorted output everywhere in the crate.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition, rejecting increasing parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Monotonicity(join(&parts)));
        }
        Ok(Self { parts })
    }

    /// Builds a strict partition: parts must strictly decrease.
    pub fn strict(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let p = Self::new(parts)?;
        if !p.is_strict() {
            return Err(Error::Strictness(join(&p.parts)));
        }
        Ok(p)
    }

    /// Parses `"a,b,c"` or `"-"` for the empty partition.
    pub fn parse(text: &str, strict: bool) -> Result<Self> {
        let text = text.trim();
        let parts = if text == "-" || text == "∅" {
            Vec::new()
        } else {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad part {t:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if strict {
            Self::strict(parts)
        } else {
            Self::new(parts)
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Componentwise containment `other ⊂ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

fn join(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "-".into();
    }
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, false)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand for tests and examples; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::new(vec![$($x),+]).expect("valid partition") };
}
