//! Recursive Pieri rules for the three families, and Lenart's closed form.
//!
//! Each rule peels a piece off the top of the shape (the top row in type A,
//! the north-east arm in the shifted types) and expresses the coefficient
//! through coefficients of the smaller shape at shifted values of `p`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::euler::{Coefficient, Engine};
use crate::shapes::{make_skew, Cell, Partition, SkewShape, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Family {
    A,
    B,
    C,
}

impl From<Space> for Family {
    fn from(space: Space) -> Self {
        match space {
            Space::RectA { .. } => Family::A,
            Space::OG(_) => Family::B,
            Space::LG(_) => Family::C,
        }
    }
}

/// Memo key. Type A shapes are translated to the origin; shifted shapes keep
/// their absolute position since it decides which boxes are diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct MemoKey {
    family: Family,
    cells: Vec<Cell>,
    p: i64,
}

/// Evaluator for the recursive rules with an optional shared memo table.
///
/// The table is safe to share between threads. Values are inserted after
/// they are computed, so two racing workers may both compute an entry; both
/// produce the same value.
#[derive(Debug, Default)]
pub struct RecursiveEngine {
    memo: Option<RwLock<HashMap<MemoKey, BigInt>>>,
}

fn delta(x: i64, y: i64) -> BigInt {
    if x == y {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `δ_{θ,∅}` for `p ≤ 0`; zero for the empty shape at `p > 0`.
fn base_case(theta: &SkewShape, p: i64) -> Option<BigInt> {
    match (theta.is_empty(), p <= 0) {
        (true, true) => Some(BigInt::one()),
        (true, false) | (false, true) => Some(BigInt::zero()),
        (false, false) => None,
    }
}

impl RecursiveEngine {
    pub fn new() -> Self {
        Self {
            memo: Some(RwLock::new(HashMap::new())),
        }
    }

    /// An engine that recomputes everything.
    pub fn without_memo() -> Self {
        Self { memo: None }
    }

    /// Number of memoized entries.
    pub fn cached(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.read().expect("memo lock").len())
    }

    pub fn coefficient(&self, lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
        let theta = make_skew(lambda, nu, space)?;
        Ok(Coefficient {
            value: self.evaluate(&theta, p, space)?,
            space,
            lambda: lambda.clone(),
            p,
            nu: nu.clone(),
            engine: Engine::Recursive,
        })
    }

    /// `A(θ,p)`, `B(θ,p)` or `C(θ,p)` for a raw shape.
    pub fn evaluate(&self, theta: &SkewShape, p: i64, space: Space) -> Result<BigInt> {
        if !space.contains_shape(theta) {
            return Err(Error::OutOfBounds {
                what: format!("{theta:?}"),
                space: space.to_string(),
            });
        }
        Ok(self.eval(Family::from(space), theta, p))
    }

    fn eval(&self, family: Family, theta: &SkewShape, p: i64) -> BigInt {
        let Some(memo) = &self.memo else {
            return self.step(family, theta, p);
        };
        let shape = match family {
            Family::A => theta.normalized(),
            Family::B | Family::C => theta.clone(),
        };
        let key = MemoKey {
            family,
            cells: shape.iter().collect(),
            p,
        };
        if let Some(v) = memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = self.step(family, &shape, p);
        memo.write().expect("memo lock").insert(key, v.clone());
        v
    }

    fn step(&self, family: Family, theta: &SkewShape, p: i64) -> BigInt {
        match family {
            Family::A => self.step_a(theta, p),
            Family::B => self.step_b(theta, p),
            Family::C => self.step_c(theta, p),
        }
    }

    fn step_a(&self, theta: &SkewShape, p: i64) -> BigInt {
        if !theta.is_horizontal_strip() {
            return BigInt::zero();
        }
        if let Some(v) = base_case(theta, p) {
            return v;
        }
        let (rest, a) = theta.remove_top_row().expect("non-empty");
        let a = a as i64;
        if rest.is_empty() {
            return delta(theta.weight() as i64, p);
        }
        self.eval(Family::A, &rest, p - a) - self.eval(Family::A, &rest, p - a + 1)
    }

    fn step_b(&self, theta: &SkewShape, p: i64) -> BigInt {
        if !theta.is_rim() {
            return BigInt::zero();
        }
        if let Some(v) = base_case(theta, p) {
            return v;
        }
        let arm = theta.northeast_arm().expect("non-empty rim");
        let a = arm.a as i64;
        if arm.rest.is_empty() {
            return delta(theta.weight() as i64, p);
        }
        let b = |q: i64| self.eval(Family::B, &arm.rest, q);
        if arm.connected {
            return b(p - a) - b(p - a + 1);
        }
        if p < a {
            return BigInt::zero();
        }
        let first = (BigInt::from(2) - delta(p, a)) * (b(p - a) - b(p - a + 1));
        let second = (BigInt::one() - delta(a, 1)) * (b(p - a + 2) - b(p - a + 1));
        first + second
    }

    fn step_c(&self, theta: &SkewShape, p: i64) -> BigInt {
        if !theta.is_rim() {
            return BigInt::zero();
        }
        if let Some(v) = base_case(theta, p) {
            return v;
        }
        let arm = theta.northeast_arm().expect("non-empty rim");
        let a = arm.a as i64;
        let size = theta.weight() as i64;
        if arm.rest.is_empty() {
            return if theta.meets_diagonal() {
                if arm.arm_is_column {
                    delta(p, size) - delta(p, size - 1)
                } else {
                    delta(p, size)
                }
            } else {
                BigInt::from(2) * delta(p, size) - delta(p, size - 1)
            };
        }
        let c = |q: i64| self.eval(Family::C, &arm.rest, q);
        if arm.connected {
            c(p - a) - c(p - a + 1)
        } else if a == 1 {
            BigInt::from(2) * c(p - 1) - BigInt::from(2) * c(p)
        } else {
            BigInt::from(2) * c(p - a) - BigInt::from(3) * c(p - a + 1) + c(p - a + 2)
        }
    }
}

fn shared() -> &'static RecursiveEngine {
    static ENGINE: OnceLock<RecursiveEngine> = OnceLock::new();
    ENGINE.get_or_init(RecursiveEngine::new)
}

/// The Pieri coefficient from the recursive rules, using a process-wide memo.
pub fn coeff_recursive(lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
    shared().coefficient(lambda, p, nu, space)
}

/// `(-1)^{|θ|-p} C(r(θ)-1, |θ|-p)` for horizontal strips `θ = ν/λ`, where
/// `r` counts non-empty rows; zero for every other shape.
pub fn lenart_closed_form(lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
    if space.is_shifted() {
        return Err(Error::WrongSpace(format!(
            "the closed form is for type A only, got {space}"
        )));
    }
    let theta = make_skew(lambda, nu, space)?;
    let stats = theta.stats();
    let value = if !stats.is_horizontal_strip {
        BigInt::zero()
    } else if theta.is_empty() {
        delta(p, 0)
    } else {
        let excess = stats.weight as i64 - p;
        let rows = stats.r as i64 - 1;
        if excess < 0 || excess > rows {
            BigInt::zero()
        } else {
            let b = binomial(BigInt::from(rows), BigInt::from(excess));
            if excess % 2 == 0 {
                b
            } else {
                -b
            }
        }
    };
    Ok(Coefficient {
        value,
        space,
        lambda: lambda.clone(),
        p,
        nu: nu.clone(),
        engine: Engine::Lenart,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::coeff_direct;
    use crate::part;
    use crate::shapes::DiagramKind;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn og7_seven_box_value() {
        let c = coeff_recursive(&part![6, 4, 1], 5, &part![7, 6, 3, 1], Space::og(7).unwrap()).unwrap();
        assert_eq!(c.value, int(-7));
        assert_eq!(c.engine, Engine::Recursive);
    }

    #[test]
    fn lg_known_values() {
        let c = coeff_recursive(&part![6, 4, 1], 5, &part![7, 6, 3, 1], Space::lg(7).unwrap()).unwrap();
        assert_eq!(c.value, int(-9));
        // column of two boxes meeting the diagonal
        let c = coeff_recursive(&part![1], 1, &part![2, 1], Space::lg(2).unwrap()).unwrap();
        assert_eq!(c.value, int(-1));
    }

    #[test]
    fn rook_strip_at_p_one() {
        let engine = RecursiveEngine::new();
        let space = Space::og(6).unwrap();
        let all = space.partitions();
        let mut seen = 0;
        for nu in &all {
            for lambda in all.iter().filter(|l| nu.contains(l)) {
                let t = make_skew(lambda, nu, space).unwrap();
                if t.is_empty() || !t.is_rook_strip() {
                    continue;
                }
                let sign = if t.weight() % 2 == 1 { 1 } else { -1 };
                assert_eq!(engine.evaluate(&t, 1, space).unwrap(), int(sign), "{t:?}");
                seen += 1;
            }
        }
        assert!(seen > 50);
    }

    #[test]
    fn non_positive_p() {
        let engine = RecursiveEngine::new();
        for space in [Space::rect(3, 3).unwrap(), Space::og(4).unwrap(), Space::lg(4).unwrap()] {
            for l in space.partitions() {
                for nu in space.partitions().iter().filter(|nu| nu.contains(&l)) {
                    for p in -2..=0 {
                        let v = engine.coefficient(&l, p, nu, space).unwrap().value;
                        assert_eq!(v, if *nu == l { int(1) } else { int(0) });
                    }
                }
            }
        }
    }

    #[test]
    fn single_diagonal_box_readings_agree() {
        // column reading delta(p,1) - delta(p,0) and row reading delta(p,1) for p > 0
        let engine = RecursiveEngine::new();
        let t = SkewShape::from_cells(DiagramKind::Shifted, [Cell::new(3, 3)]);
        for p in 1..=4 {
            let v = engine.evaluate(&t, p, Space::lg(4).unwrap()).unwrap();
            assert_eq!(v, delta(p, 1) - delta(p, 0));
            assert_eq!(v, delta(p, 1));
        }
    }

    #[test]
    fn memo_is_transparent() {
        let memo = RecursiveEngine::new();
        let plain = RecursiveEngine::without_memo();
        for space in [Space::rect(3, 4).unwrap(), Space::og(5).unwrap(), Space::lg(5).unwrap()] {
            let all = space.partitions();
            for nu in &all {
                for l in all.iter().filter(|l| nu.contains(l)) {
                    for p in 0..=space.max_special() as i64 {
                        assert_eq!(
                            memo.coefficient(l, p, nu, space).unwrap(),
                            plain.coefficient(l, p, nu, space).unwrap()
                        );
                    }
                }
            }
        }
        assert!(memo.cached() > 0);
        assert_eq!(plain.cached(), 0);
    }

    #[test]
    fn lenart_examples() {
        let s = Space::rect(2, 2).unwrap();
        // |θ|=2, r=2, p=1
        assert_eq!(
            lenart_closed_form(&part![1], 1, &part![2, 1], s).unwrap().value,
            int(-1)
        );
        // |θ|=3, r=2, p=3: θ = (3,1)/()... in a 2x3 rectangle
        let s3 = Space::rect(2, 3).unwrap();
        assert_eq!(lenart_closed_form(&part![], 3, &part![2, 1], s3).unwrap().value, int(0));
        let t = make_skew(&part![1], &part![3, 2], s3).unwrap();
        assert!(!t.is_horizontal_strip());
        let t = make_skew(&part![1], &part![3, 1], s3).unwrap();
        assert_eq!((t.weight(), t.stats().r), (3, 2));
        assert_eq!(
            lenart_closed_form(&part![1], 3, &part![3, 1], s3).unwrap().value,
            int(1)
        );
        // not a horizontal strip
        assert_eq!(lenart_closed_form(&part![], 1, &part![1, 1], s).unwrap().value, int(0));
        assert!(matches!(
            lenart_closed_form(&part![], 1, &part![1], Space::og(2).unwrap()),
            Err(Error::WrongSpace(_))
        ));
    }

    #[test]
    fn agrees_with_direct_on_small_spaces() {
        let engine = RecursiveEngine::new();
        for space in [Space::rect(3, 3).unwrap(), Space::og(5).unwrap(), Space::lg(5).unwrap()] {
            let all = space.partitions();
            for nu in &all {
                for l in all.iter().filter(|l| nu.contains(l)) {
                    for p in 0..=space.max_special() as i64 {
                        let r = engine.coefficient(l, p, nu, space).unwrap().value;
                        let d = coeff_direct(l, p, nu, space).unwrap().value;
                        assert_eq!(r, d, "{space} {l:?} {p} {nu:?}");
                    }
                }
            }
        }
    }
}
