//! Triple-intersection Euler characteristics and the alternating corner sum.
//!
//! `coeff_direct` is the reference engine: it sums `χ(O_φ · O^p)` with signs
//! over every `φ` obtained by deleting a subset of south-east corners, with
//! no memoization and no case analysis.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{make_skew, Partition, SkewShape, Space};

/// `h(a, b) = Σ_{j=0..b} (-1)^j 2^(a-j) C(a, j)`.
///
/// Zero for `b < 0`, one for `b ≥ a`.
pub fn h(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeA(a));
    }
    Ok(h_nonneg(a as u64, b))
}

pub(crate) fn h_nonneg(a: u64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let top = (b as u64).min(a);
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=top {
        let term = &binom << (a - j) as usize;
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (a - j) / (j + 1);
    }
    sum
}

/// Which algorithm produced a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Direct,
    Recursive,
    Tableau,
    Lenart,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Direct, Engine::Recursive, Engine::Tableau, Engine::Lenart];

    pub fn applies_to(self, space: Space) -> bool {
        match self {
            Engine::Direct | Engine::Recursive => true,
            Engine::Tableau => space.is_shifted(),
            Engine::Lenart => !space.is_shifted(),
        }
    }

    pub fn for_space(space: Space) -> impl Iterator<Item = Engine> {
        Self::ALL.into_iter().filter(move |e| e.applies_to(space))
    }

    pub fn name(self) -> &'static str {
        match self {
            Engine::Direct => "direct",
            Engine::Recursive => "recursive",
            Engine::Tableau => "tableau",
            Engine::Lenart => "lenart",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown engine {s:?}")))
    }
}

/// A Pieri coefficient `c^ν_{λ,p}` with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub value: BigInt,
    pub space: Space,
    pub lambda: Partition,
    pub p: i64,
    pub nu: Partition,
    pub engine: Engine,
}

impl Space {
    /// Whether every box of `theta` lies in the ambient rectangle or staircase.
    pub fn contains_shape(self, theta: &SkewShape) -> bool {
        if theta.kind() != self.diagram_kind() {
            return false;
        }
        theta.iter().all(|c| match self {
            Space::RectA { m, k } => c.row >= 1 && c.row <= m && c.col >= 1 && c.col <= k,
            Space::OG(n) | Space::LG(n) => c.row >= 1 && c.row <= c.col && c.col <= n,
        })
    }
}

/// `χ(O_θ · O^p)`, extended to all integers `p`.
pub fn chi(theta: &SkewShape, p: i64, space: Space) -> Result<BigInt> {
    if !space.contains_shape(theta) {
        return Err(Error::OutOfBounds {
            what: format!("{theta:?}"),
            space: space.to_string(),
        });
    }
    Ok(chi_unchecked(theta, p, space))
}

fn chi_unchecked(theta: &SkewShape, p: i64, space: Space) -> BigInt {
    let s = theta.stats();
    match space {
        Space::RectA { .. } => {
            if p <= s.c as i64 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Space::OG(_) => h_nonneg(s.n_minus as u64, s.d as i64 - p),
        Space::LG(_) => h_nonneg(s.n_prime as u64, s.d as i64 - p),
    }
}

/// `Σ_φ (-1)^{|θ|-|φ|} χ(O_φ · O^p)` over all `θ′ ⊂ φ ⊂ θ`.
///
/// This is `A(θ,p)`, `B(θ,p)` or `C(θ,p)` depending on the space.
pub fn corner_sum(theta: &SkewShape, p: i64, space: Space) -> Result<BigInt> {
    if !space.contains_shape(theta) {
        return Err(Error::OutOfBounds {
            what: format!("{theta:?}"),
            space: space.to_string(),
        });
    }
    let mut total = BigInt::zero();
    for phi in theta.corner_subsets() {
        let x = chi_unchecked(&phi, p, space);
        if (theta.weight() - phi.weight()) % 2 == 0 {
            total += x;
        } else {
            total -= x;
        }
    }
    Ok(total)
}

/// The Pieri coefficient by direct corner summation.
pub fn coeff_direct(lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
    let theta = make_skew(lambda, nu, space)?;
    Ok(Coefficient {
        value: corner_sum(&theta, p, space)?,
        space,
        lambda: lambda.clone(),
        p,
        nu: nu.clone(),
        engine: Engine::Direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::shapes::{Cell, DiagramKind};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn h_values() {
        assert_eq!(h(3, 5).unwrap(), int(1));
        assert_eq!(h(0, -1).unwrap(), int(0));
        // j=0,1 terms: 4 - 2*2 and 2
        assert_eq!(h(2, 1).unwrap(), int(0));
        assert_eq!(h(1, 0).unwrap(), int(2));
        assert_eq!(h(-1, 0), Err(Error::NegativeA(-1)));
    }

    #[test]
    fn h_pascal_identity_and_boundaries() {
        for a in 0..=12i64 {
            for b in -3..=15i64 {
                let lhs = h(a + 1, b).unwrap() + h(a, b - 1).unwrap();
                assert_eq!(lhs, h(a, b).unwrap() * 2, "a={a} b={b}");
                if b >= a {
                    assert_eq!(h(a, b).unwrap(), int(1));
                }
                if b < 0 {
                    assert_eq!(h(a, b).unwrap(), int(0));
                }
            }
        }
        // h(a, 0) = 2^a
        assert_eq!(h(70, 0).unwrap(), BigInt::one() << 70);
    }

    #[test]
    fn chi_type_a() {
        // two columns
        let theta = make_skew(&part![1], &part![2, 1], Space::rect(2, 2).unwrap()).unwrap();
        assert_eq!(theta.stats().c, 2);
        let s = Space::rect(2, 2).unwrap();
        assert_eq!(chi(&theta, 2, s).unwrap(), int(1));
        assert_eq!(chi(&theta, 3, s).unwrap(), int(0));
        assert_eq!(chi(&theta, -1, s).unwrap(), int(1));
    }

    #[test]
    fn chi_og12_example() {
        let space = Space::og(12).unwrap();
        let nu = space.dual(&part![10, 8, 7, 4]).unwrap();
        let theta = make_skew(&part![11, 9, 8, 5, 2], &nu, space).unwrap();
        assert_eq!(chi(&theta, 10, space).unwrap(), int(2));
        assert_eq!(chi(&theta, 11, space).unwrap(), int(0));
    }

    #[test]
    fn chi_empty_shape_at_zero() {
        for space in [Space::rect(2, 2).unwrap(), Space::og(3).unwrap(), Space::lg(3).unwrap()] {
            let e = SkewShape::empty(space.diagram_kind());
            assert_eq!(chi(&e, 0, space).unwrap(), int(1));
        }
    }

    #[test]
    fn chi_rejects_shapes_outside_the_space() {
        let t = SkewShape::from_cells(DiagramKind::Shifted, [Cell::new(1, 5)]);
        assert!(matches!(
            chi(&t, 1, Space::og(4).unwrap()),
            Err(Error::OutOfBounds { .. })
        ));
        let t = SkewShape::from_cells(DiagramKind::Shifted, [Cell::new(2, 1)]);
        assert!(chi(&t, 1, Space::og(4).unwrap()).is_err());
        let t = SkewShape::from_cells(DiagramKind::Ordinary, [Cell::new(1, 1)]);
        assert!(chi(&t, 1, Space::og(4).unwrap()).is_err());
    }

    #[test]
    fn direct_seven_box_values() {
        let (l, nu) = (part![6, 4, 1], part![7, 6, 3, 1]);
        assert_eq!(coeff_direct(&l, 5, &nu, Space::og(7).unwrap()).unwrap().value, int(-7));
        assert_eq!(coeff_direct(&l, 5, &nu, Space::lg(7).unwrap()).unwrap().value, int(-9));
    }

    #[test]
    fn direct_type_a_small() {
        // corners (1,2),(2,1): chi values 1,1,1,0 with signs +,-,-,+
        let c = coeff_direct(&part![1], 1, &part![2, 1], Space::rect(2, 2).unwrap()).unwrap();
        assert_eq!(c.value, int(-1));
        assert_eq!(c.engine, Engine::Direct);
    }

    #[test]
    fn unit_coefficient() {
        for space in [Space::rect(3, 2).unwrap(), Space::og(4).unwrap(), Space::lg(4).unwrap()] {
            for l in space.partitions() {
                assert_eq!(coeff_direct(&l, 0, &l, space).unwrap().value, int(1));
            }
        }
    }

    #[test]
    fn engine_names() {
        for e in Engine::ALL {
            assert_eq!(e.name().parse::<Engine>().unwrap(), e);
        }
        assert!("all".parse::<Engine>().is_err());
    }
}
