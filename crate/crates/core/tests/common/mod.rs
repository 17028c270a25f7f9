#![allow(dead_code)]

use pierik_core::{Partition, Space};

/// Every pair `λ ⊂ ν` of partitions fitting `space`.
pub fn pairs(space: Space) -> Vec<(Partition, Partition)> {
    let all = space.partitions();
    let mut out = Vec::new();
    for lambda in &all {
        for nu in all.iter().filter(|nu| nu.contains(lambda)) {
            out.push((lambda.clone(), nu.clone()));
        }
    }
    out
}

/// Every triple `(λ, p, ν)` with `λ ⊂ ν` and `0 ≤ p ≤ max_p`.
pub fn triples(space: Space, max_p: i64) -> Vec<(Partition, i64, Partition)> {
    pairs(space)
        .into_iter()
        .flat_map(|(l, n)| (0..=max_p).map(move |p| (l.clone(), p, n.clone())))
        .collect()
}

pub fn rect(m: u32, k: u32) -> Space {
    Space::rect(m, k).unwrap()
}

pub fn og(n: u32) -> Space {
    Space::og(n).unwrap()
}

pub fn lg(n: u32) -> Space {
    Space::lg(n).unwrap()
}
