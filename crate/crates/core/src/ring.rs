//! Sparse integer vectors over the Schubert basis `{O^λ}` of one space.
//!
//! Products are supported only against special classes `O^p`, so every
//! vector reachable here is a polynomial in special classes applied to a
//! basis vector.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::Engine;
use crate::shapes::{make_skew, Partition, Space};

#[derive(Clone, PartialEq, Eq)]
pub struct KVector {
    space: Space,
    terms: BTreeMap<Partition, BigInt>,
}

impl KVector {
    pub fn zero(space: Space) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `O^∅`.
    pub fn unit(space: Space) -> Self {
        Self::basis(space, &Partition::empty()).expect("empty partition fits")
    }

    /// The Schubert class `O^λ`.
    pub fn basis(space: Space, lambda: &Partition) -> Result<Self> {
        let mut v = Self::zero(space);
        v.add_term(lambda, BigInt::one())?;
        Ok(v)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: &Partition, c: BigInt) -> Result<()> {
        self.space.check_fits(lambda)?;
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(lambda);
        }
        Ok(())
    }

    fn same_space(&self, other: &KVector) -> Result<()> {
        if self.space != other.space {
            return Err(Error::WrongSpace(format!("{} vs {}", self.space, other.space)));
        }
        Ok(())
    }

    pub fn plus(&self, other: &KVector) -> Result<KVector> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l, c.clone())?;
        }
        Ok(out)
    }

    pub fn minus(&self, other: &KVector) -> Result<KVector> {
        self.plus(&other.scaled(&BigInt::from(-1)))
    }

    pub fn scaled(&self, k: &BigInt) -> KVector {
        if k.is_zero() {
            return KVector::zero(self.space);
        }
        KVector {
            space: self.space,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the special class `O^p`.
    pub fn pieri_multiply(&self, p: i64, engine: Engine) -> Result<KVector> {
        pieri_multiply(self, p, engine)
    }
}

/// `v · O^p`, summing `c^ν_{λ,p} O^ν` over every `ν ⊇ λ` in the space.
pub fn pieri_multiply(v: &KVector, p: i64, engine: Engine) -> Result<KVector> {
    let space = v.space;
    let max = space.max_special();
    if p < 0 || p > i64::from(max) {
        return Err(Error::OutOfRangeP { p, max });
    }
    if !engine.applies_to(space) {
        return Err(Error::WrongSpace(format!("engine {engine} does not apply to {space}")));
    }
    let all = space.partitions();
    let mut out = KVector::zero(space);
    for (lambda, c) in &v.terms {
        for nu in all.iter().filter(|nu| nu.contains(lambda)) {
            let theta = make_skew(lambda, nu, space)?;
            let vanishes = if space.is_shifted() {
                !theta.is_rim()
            } else {
                !theta.is_horizontal_strip()
            };
            if vanishes {
                continue;
            }
            let k = crate::coefficient(engine, lambda, p, nu, space)?.value;
            out.add_term(nu, k * c)?;
        }
    }
    Ok(out)
}

/// The dual class `O*_ν = Σ (-1)^{|ν/τ|} O_τ` over `τ ⊂ ν` with `ν/τ` a rook
/// strip, written in the Schubert basis through `O_τ = O^{τ∨}`.
pub fn dual_class(nu: &Partition, space: Space) -> Result<KVector> {
    space.check_fits(nu)?;
    let mut out = KVector::zero(space);
    for tau in space.partitions().iter().filter(|t| nu.contains(t)) {
        let strip = make_skew(tau, nu, space)?;
        if !strip.is_rook_strip() {
            continue;
        }
        let sign = if strip.weight() % 2 == 0 { 1 } else { -1 };
        out.add_term(&space.dual(tau)?, BigInt::from(sign))?;
    }
    Ok(out)
}

/// `O^{p_1} · O^{p_2} ⋯` starting from the unit.
pub fn special_chain(space: Space, ps: &[i64], engine: Engine) -> Result<KVector> {
    ps.iter()
        .try_fold(KVector::unit(space), |v, &p| pieri_multiply(&v, p, engine))
}

/// `χ(v · w)` from `χ(O^κ · O^μ) = 1` when `κ ⊂ μ∨` (a non-empty Richardson
/// variety) and `0` otherwise.
pub fn euler_pairing(v: &KVector, w: &KVector) -> Result<BigInt> {
    v.same_space(w)?;
    let mut total = BigInt::zero();
    for (mu, cw) in &w.terms {
        let dual = v.space.dual(mu)?;
        for (kappa, cv) in &v.terms {
            if dual.contains(kappa) {
                total += cv * cw;
            }
        }
    }
    Ok(total)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    nu: Partition,
    #[serde(with = "crate::json_int")]
    coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct KVectorJson {
    space: Space,
    terms: Vec<TermJson>,
}

impl Serialize for KVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KVectorJson {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(nu, c)| TermJson {
                    nu: nu.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = KVectorJson::deserialize(d)?;
        let mut v = KVector::zero(raw.space);
        for t in raw.terms {
            v.add_term(&t.nu, t.coeff).map_err(serde::de::Error::custom)?;
        }
        Ok(v)
    }
}

impl fmt::Debug for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (nu, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c < &BigInt::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "O^({nu})")?;
        }
        Ok(())
    }
}
