//! Exhaustive property suites behind `pierik check`.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pierik_core::ring::{dual_class, euler_pairing, pieri_multiply, special_chain};
use pierik_core::{coefficient, make_skew, Engine, KVector, Partition, Space};
use rayon::prelude::*;

use crate::args::{CheckArgs, Suite};
use crate::error::CliError;

const SUITES: [Suite; 6] = [
    Suite::Engines,
    Suite::Signs,
    Suite::Vanishing,
    Suite::Duality,
    Suite::Symmetry,
    Suite::Associativity,
];

/// Outcome of one suite: number of cases examined and an optional remark,
/// or the first counterexample in canonical order.
type Outcome = Result<(usize, Option<String>), String>;

fn name(suite: Suite) -> &'static str {
    match suite {
        Suite::Engines => "engines",
        Suite::Signs => "signs",
        Suite::Vanishing => "vanishing",
        Suite::Duality => "duality",
        Suite::Symmetry => "symmetry",
        Suite::Associativity => "associativity",
        Suite::All => "all",
    }
}

pub fn run(args: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let space = args.space;
    let max_p = args.max_p.unwrap_or_else(|| i64::from(space.max_special()));
    crate::commands::check_p(max_p, space)?;
    let suites: Vec<Suite> = if args.suite == Suite::All {
        SUITES.to_vec()
    } else {
        vec![args.suite]
    };

    let mut failures = Vec::new();
    for suite in suites {
        let start = Instant::now();
        let outcome = run_suite(suite, space, max_p);
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok((cases, note)) => {
                write!(
                    out,
                    "PASS {} {space} max_p={max_p} cases={cases} elapsed_ms={ms}",
                    name(suite)
                )?;
                if let Some(note) = note {
                    write!(out, " note: {note}")?;
                }
                writeln!(out)?;
            }
            Err(why) => {
                writeln!(
                    out,
                    "FAIL {} {space} max_p={max_p} elapsed_ms={ms} counterexample: {why}",
                    name(suite)
                )?;
                failures.push(format!("{}: {why}", name(suite)));
            }
        }
    }
    match failures.into_iter().next() {
        Some(first) => Err(CliError::Violation(first)),
        None => Ok(()),
    }
}

fn run_suite(suite: Suite, space: Space, max_p: i64) -> Outcome {
    match suite {
        Suite::Engines => engines(space, max_p),
        Suite::Signs => signs(space, max_p),
        Suite::Vanishing => vanishing(space, max_p),
        Suite::Duality => duality(space),
        Suite::Symmetry => symmetry(space, max_p),
        Suite::Associativity => associativity(space, max_p),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// Every `(λ, p, ν)` with `λ ⊂ ν`, in `(λ, ν, p)` order.
fn triples(space: Space, max_p: i64) -> Vec<(Partition, i64, Partition)> {
    let all = space.partitions();
    let mut out = Vec::new();
    for l in &all {
        for n in all.iter().filter(|n| n.contains(l)) {
            out.extend((0..=max_p).map(|p| (l.clone(), p, n.clone())));
        }
    }
    out
}

fn describe(space: Space, l: &Partition, p: i64, n: &Partition) -> String {
    format!("{space} lambda={l} p={p} nu={n}")
}

fn value(engine: Engine, l: &Partition, p: i64, n: &Partition, space: Space) -> Result<BigInt, String> {
    coefficient(engine, l, p, n, space)
        .map(|c| c.value)
        .map_err(|e| format!("{}: {e}", describe(space, l, p, n)))
}

fn each_triple(
    space: Space,
    max_p: i64,
    f: impl Fn(&Partition, i64, &Partition) -> Result<(), String> + Sync,
) -> Outcome {
    let cases = triples(space, max_p);
    match cases.par_iter().find_map_first(|(l, p, n)| f(l, *p, n).err()) {
        Some(why) => Err(why),
        None => Ok((cases.len(), None)),
    }
}

fn engines(space: Space, max_p: i64) -> Outcome {
    let engines: Vec<Engine> = Engine::for_space(space).collect();
    each_triple(space, max_p, |l, p, n| {
        let values = engines
            .iter()
            .map(|&e| value(e, l, p, n, space))
            .collect::<Result<Vec<_>, _>>()?;
        if values.iter().all(|v| v == &values[0]) {
            return Ok(());
        }
        let shown: Vec<String> = engines.iter().zip(&values).map(|(e, v)| format!("{e}={v}")).collect();
        Err(format!("{}: {}", describe(space, l, p, n), shown.join(" ")))
    })
}

fn signs(space: Space, max_p: i64) -> Outcome {
    each_triple(space, max_p, |l, p, n| {
        let v = value(Engine::Direct, l, p, n, space)?;
        let excess = i64::from(n.weight() - l.weight()) - p;
        let signed = if excess.rem_euclid(2) == 0 {
            v.clone()
        } else {
            -v.clone()
        };
        if signed.is_negative() {
            return Err(format!("{}: {v} has the wrong sign", describe(space, l, p, n)));
        }
        Ok(())
    })
}

fn vanishing(space: Space, max_p: i64) -> Outcome {
    each_triple(space, max_p, |l, p, n| {
        let theta = make_skew(l, n, space).map_err(|e| e.to_string())?;
        let allowed = if space.is_shifted() {
            theta.is_rim()
        } else {
            theta.is_horizontal_strip()
        };
        if allowed && theta.weight() as i64 >= p {
            return Ok(());
        }
        let v = value(Engine::Direct, l, p, n, space)?;
        if !v.is_zero() {
            return Err(format!("{}: {v} should vanish", describe(space, l, p, n)));
        }
        Ok(())
    })
}

/// Dual classes pair to the Kronecker delta with the Schubert basis; in OG
/// they also equal `(1 - O^1) · O^{ν∨}`.
fn duality(space: Space) -> Outcome {
    let all = space.partitions();
    let bad = all.par_iter().find_map_first(|nu| -> Option<String> {
        let dual = match dual_class(nu, space) {
            Ok(d) => d,
            Err(e) => return Some(e.to_string()),
        };
        for mu in &all {
            let pairing = euler_pairing(&dual, &KVector::basis(space, mu).ok()?).ok()?;
            let expect = BigInt::from(i32::from(mu == nu));
            if pairing != expect {
                return Some(format!("{space} nu={nu} mu={mu}: pairing {pairing}, expected {expect}"));
            }
        }
        if let Space::OG(_) = space {
            let base = KVector::basis(space, &space.dual(nu).ok()?).ok()?;
            let rhs = base.minus(&pieri_multiply(&base, 1, Engine::Recursive).ok()?).ok()?;
            if rhs != dual {
                return Some(format!("{space} nu={nu}: dual class {dual} != (1 - O^1) O^nu* = {rhs}"));
            }
        }
        None
    });
    match bad {
        Some(why) => Err(why),
        None => Ok((all.len() * all.len(), None)),
    }
}

fn single(q: i64) -> Partition {
    Partition::new(if q == 0 { vec![] } else { vec![q as u32] }).expect("one part")
}

/// `c^ν_{(q),p} = c^{(p)∨}_{(q),ν∨}`. Holds in type A and OG; in LG(n) with
/// n ≥ 2 a counterexample must turn up.
fn symmetry(space: Space, max_p: i64) -> Outcome {
    let all = space.partitions();
    let ps: Vec<i64> = (0..=max_p).collect();
    let mut left = Vec::new();
    for &q in &ps {
        let base = KVector::basis(space, &single(q)).map_err(|e| e.to_string())?;
        for &p in &ps {
            left.push((
                q,
                p,
                pieri_multiply(&base, p, Engine::Recursive).map_err(|e| e.to_string())?,
            ));
        }
    }
    let failure = all.par_iter().find_map_first(|nu| -> Option<String> {
        let dual = KVector::basis(space, &space.dual(nu).ok()?).ok()?;
        for (q, p, product) in &left {
            let right = pieri_multiply(&dual, *q, Engine::Recursive).ok()?;
            let special_dual = space.dual(&single(*p)).ok()?;
            let (a, b) = (product.coefficient(nu), right.coefficient(&special_dual));
            if a != b {
                return Some(format!(
                    "{space} c^{nu:?}_{:?},{p} = {a} but c^{special_dual:?}_{:?},{:?} = {b}",
                    single(*q),
                    single(*q),
                    space.dual(nu).ok()?
                ));
            }
        }
        None
    });
    let cases = all.len() * left.len();
    match (space, failure) {
        (Space::LG(n), found) if n >= 2 && max_p >= 1 => match found {
            Some(ex) => Ok((cases, Some(format!("expected LG failure reproduced: {ex}")))),
            None => Err(format!("{space}: expected a symmetry counterexample, found none")),
        },
        (Space::LG(_), Some(ex)) => Ok((cases, Some(format!("symmetry fails: {ex}")))),
        (_, Some(ex)) => Err(ex),
        (_, None) => Ok((cases, None)),
    }
}

fn multisets(max: i64, size: usize) -> Vec<Vec<i64>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in multisets(max, size - 1) {
        let start = smaller.last().copied().unwrap_or(0);
        for p in start..=max {
            let mut m = smaller.clone();
            m.push(p);
            out.push(m);
        }
    }
    out
}

fn permutations(ps: &[i64]) -> Vec<Vec<i64>> {
    if ps.len() <= 1 {
        return vec![ps.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..ps.len() {
        let mut rest = ps.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Products of up to three special classes do not depend on the order of
/// the factors or on the engine.
fn associativity(space: Space, max_p: i64) -> Outcome {
    let engines: Vec<Engine> = Engine::for_space(space).collect();
    let sets: Vec<Vec<i64>> = (0..=3).flat_map(|s| multisets(max_p, s)).collect();
    let results: Vec<Result<usize, String>> = sets
        .par_iter()
        .map(|ms| {
            let reference = special_chain(space, ms, Engine::Direct).map_err(|e| e.to_string())?;
            let mut n = 0;
            for order in permutations(ms) {
                for &e in &engines {
                    let v = special_chain(space, &order, e).map_err(|e| e.to_string())?;
                    if v != reference {
                        return Err(format!("{space} {e} {order:?}: {v} != {reference} from {ms:?}"));
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    let mut cases = 0;
    for r in results {
        cases += r?;
    }
    Ok((cases, None))
}
