use std::io::Write;
use std::time::Instant;

use pierik_core::ring::pieri_multiply;
use pierik_core::{coefficient, enumerate, make_skew, Engine, Error, KVector, Mode, Partition, Space};
use rayon::prelude::*;

use crate::args::{CoeffArgs, EngineArg, ExpandArgs, Format, TableArgs, TableauxArgs};
use crate::cache::Cache;
use crate::error::CliError;
use crate::record::CoefficientRecord;

pub fn parse_partition(text: &str, space: Space) -> Result<Partition, CliError> {
    let p = Partition::parse(text, space.is_shifted())?;
    space.check_fits(&p)?;
    Ok(p)
}

pub fn check_p(p: i64, space: Space) -> Result<(), CliError> {
    let max = space.max_special();
    if p < 0 || p > i64::from(max) {
        return Err(Error::OutOfRangeP { p, max }.into());
    }
    Ok(())
}

/// The engines selected by `arg` for `space`.
pub fn engines(arg: EngineArg, space: Space) -> Result<Vec<Engine>, CliError> {
    match arg.single() {
        Some(e) if e.applies_to(space) => Ok(vec![e]),
        Some(e) => Err(Error::WrongSpace(format!("engine {e} does not apply to {space}")).into()),
        None => Ok(Engine::for_space(space).collect()),
    }
}

fn compute(
    engine: Engine,
    lambda: &Partition,
    p: i64,
    nu: &Partition,
    space: Space,
    cache: Option<&Cache>,
    timing: bool,
) -> Result<CoefficientRecord, CliError> {
    let start = Instant::now();
    let hit = cache.and_then(|c| c.get(lambda, p, nu, engine));
    let mut rec = match hit {
        Some(rec) => rec,
        None => {
            let rec = CoefficientRecord::from(coefficient(engine, lambda, p, nu, space)?);
            if let Some(c) = cache {
                c.remember(&rec);
            }
            rec
        }
    };
    if timing {
        rec.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(rec)
}

fn open_cache(dir: Option<&std::path::Path>, space: Space, engine: EngineArg) -> Result<Option<Cache>, CliError> {
    match dir {
        // verification runs always recompute
        Some(dir) if engine != EngineArg::All => Ok(Some(Cache::open(dir, space)?)),
        _ => Ok(None),
    }
}

fn disagreement(records: &[CoefficientRecord]) -> Option<String> {
    let first = &records.first()?.coefficient;
    if records.iter().all(|r| &r.coefficient == first) {
        return None;
    }
    let r = &records[0];
    let values: Vec<String> = records
        .iter()
        .map(|r| format!("{}={}", r.engine, r.coefficient))
        .collect();
    Some(format!(
        "{} lambda={} p={} nu={}: {}",
        r.space,
        r.lambda,
        r.p,
        r.nu,
        values.join(" ")
    ))
}

pub fn coeff(args: &CoeffArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let space = args.space;
    let lambda = parse_partition(&args.lambda, space)?;
    let nu = parse_partition(&args.nu, space)?;
    make_skew(&lambda, &nu, space)?;
    check_p(args.p, space)?;
    let engines = engines(args.engine, space)?;
    let cache = open_cache(args.cache.cache.as_deref(), space, args.engine)?;

    let records = engines
        .iter()
        .map(|&e| compute(e, &lambda, args.p, &nu, space, cache.as_ref(), args.timing))
        .collect::<Result<Vec<_>, _>>()?;
    for rec in &records {
        match args.format {
            Format::Json => writeln!(out, "{}", rec.to_json())?,
            Format::Text => {
                if args.engine == EngineArg::All {
                    write!(out, "{} ", rec.engine)?;
                }
                write!(out, "{}", rec.coefficient)?;
                if let Some(ms) = rec.elapsed_ms {
                    write!(out, " {ms:.3}ms")?;
                }
                writeln!(out)?;
            }
        }
    }
    if let Some(c) = &cache {
        c.flush()?;
    }
    match disagreement(&records) {
        Some(why) => Err(CliError::Disagreement(why)),
        None => Ok(()),
    }
}

pub fn expand(args: &ExpandArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let space = args.space;
    let lambda = parse_partition(&args.lambda, space)?;
    check_p(args.p, space)?;
    let base = KVector::basis(space, &lambda)?;
    let engines = engines(args.engine, space)?;
    let products = engines
        .iter()
        .map(|&e| pieri_multiply(&base, args.p, e))
        .collect::<Result<Vec<_>, _>>()?;
    let product = &products[0];
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(product).expect("vectors serialize"))?,
        Format::Text => writeln!(out, "{product}")?,
    }
    if let Some(i) = products.iter().position(|v| v != product) {
        return Err(CliError::Disagreement(format!(
            "{space} lambda={lambda} p={}: {}={} {}={}",
            args.p, engines[0], product, engines[i], products[i]
        )));
    }
    Ok(())
}

pub fn table(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let space = args.space;
    check_p(args.p, space)?;
    let engines = engines(args.engine, space)?;
    let cache = open_cache(args.cache.cache.as_deref(), space, args.engine)?;

    let all = space.partitions();
    let pairs: Vec<(&Partition, &Partition)> = all
        .iter()
        .flat_map(|l| all.iter().filter(move |n| n.contains(l)).map(move |n| (l, n)))
        .collect();
    let groups = pairs
        .par_iter()
        .map(|&(l, n)| {
            engines
                .iter()
                .map(|&e| compute(e, l, args.p, n, space, cache.as_ref(), false))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut records: Vec<&CoefficientRecord> = groups.iter().flatten().collect();
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    let mut text = String::new();
    for rec in records {
        text.push_str(&rec.to_json());
        text.push('\n');
    }
    out.write_all(text.as_bytes())?;
    if let Some(c) = &cache {
        c.flush()?;
    }
    match groups.iter().find_map(|g| disagreement(g)) {
        Some(why) => Err(CliError::Disagreement(why)),
        None => Ok(()),
    }
}

pub fn tableaux(args: &TableauxArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let space = args.space;
    let mode = Mode::for_space(space)?;
    let lambda = parse_partition(&args.lambda, space)?;
    let nu = parse_partition(&args.nu, space)?;
    let theta = make_skew(&lambda, &nu, space)?;
    check_p(args.p, space)?;
    let all = enumerate(&theta, args.p, mode)?;
    writeln!(out, "count {}", all.len())?;
    if args.list {
        for t in &all {
            writeln!(out)?;
            writeln!(out, "{}", t.render())?;
        }
    }
    Ok(())
}
