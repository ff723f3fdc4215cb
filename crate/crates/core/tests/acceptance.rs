//! Acceptance criteria, one PASS or FAIL line each. Exits nonzero if any
//! criterion fails.

mod common;

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use tamari::counting::{count_self_dual, Family};
use tamari::intervals::enumerate_intervals;
use tamari::sampler::{sample_interval, RandomSource};
use tamari::trees::enumerate_binary_trees;
use tamari::verify;

const INTERVAL_COUNTS: [usize; 8] = [1, 3, 13, 68, 399, 2530, 16965, 118668];
const ENUMERATION_LIMIT: Duration = Duration::from_secs(600);
const CHI_SQUARE_SIZE: usize = 4;
const CHI_SQUARE_DRAWS: usize = 680_000;
const CHI_SQUARE_CHUNK: usize = 10_000;
const SIGNIFICANCE: f64 = 0.001;
const SEED: u64 = 20_241_016;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn interval_counts() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (k, &expected) in INTERVAL_COUNTS.iter().enumerate() {
        let n = k + 1;
        let start = Instant::now();
        let got = enumerate_intervals(n).map_err(|e| e.to_string())?.len();
        slowest = slowest.max(start.elapsed());
        check(got == expected, || format!("n={n}: enumerated {got}, expected {expected}"))?;
    }
    check(slowest < ENUMERATION_LIMIT, || format!("n=8 took {slowest:?}"))?;
    verify::interval_counts(8)?;
    Ok(format!("1..8 match, n=8 in {:.2}s", slowest.as_secs_f64()))
}

/// Self-dual intervals are `(mir U, U)` with `mir U <= U`.
fn self_dual_by_trees(n: usize) -> usize {
    enumerate_binary_trees(n)
        .unwrap()
        .iter()
        .filter(|u| u.mirror().tamari_leq(u).unwrap())
        .count()
}

fn duality() -> Outcome {
    verify::duality(7)?;
    let mut seq = Vec::new();
    for n in 1..=7 {
        let direct = self_dual_by_trees(n);
        let formula = count_self_dual(Family::General, n).map_err(|e| e.to_string())?;
        check(BigUint::from(direct) == formula, || format!("n={n}: {direct} self-dual, formula {formula}"))?;
        seq.push(direct.to_string());
    }
    Ok(format!("all families n<=7, self-dual general {}", seq.join(", ")))
}

fn chi_square() -> Outcome {
    let all = enumerate_intervals(CHI_SQUARE_SIZE).map_err(|e| e.to_string())?;
    let index: HashMap<_, _> = all.iter().enumerate().map(|(k, i)| (i.clone(), k)).collect();
    let chunks = CHI_SQUARE_DRAWS / CHI_SQUARE_CHUNK;
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = RandomSource::new(SEED + c as u64);
            let mut counts = vec![0u64; all.len()];
            for _ in 0..CHI_SQUARE_CHUNK {
                let i = sample_interval(CHI_SQUARE_SIZE, &mut rng).expect("sampling succeeds");
                counts[index[&i]] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; all.len()],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let expected = CHI_SQUARE_DRAWS as f64 / all.len() as f64;
    let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let dist = ChiSquared::new((all.len() - 1) as f64).map_err(|e| e.to_string())?;
    let p = 1.0 - dist.cdf(stat);
    check(p > SIGNIFICANCE, || format!("chi-square {stat:.1} on {} cells, p = {p:.2e}", all.len()))?;
    Ok(format!("chi-square {stat:.1} on {} cells, p = {p:.3}", all.len()))
}

fn sampler() -> Outcome {
    verify::sampler_bijection(5)?;
    let stats = chi_square()?;
    let draw = |seed| {
        let mut rng = RandomSource::new(seed);
        (0..50).map(|_| sample_interval(9, &mut rng).unwrap().to_string()).collect::<Vec<_>>()
    };
    check(draw(SEED) == draw(SEED), || "fixed seed gave different samples".into())?;
    Ok(format!("bijection n<=5, {stats}, seeded output reproducible"))
}

fn rendering() -> Outcome {
    let dir = common::golden_dir();
    let mut files = 0;
    for text in common::FIXTURES {
        for (name, svg) in common::renderings(text) {
            let frozen = std::fs::read_to_string(dir.join(&name)).map_err(|e| format!("{name}: {e}"))?;
            check(svg == frozen, || format!("{name} differs from its golden file"))?;
            files += 1;
        }
    }
    let arcs = verify::rendering(5)?;
    Ok(format!("{files} golden files stable, arcs disjoint over {arcs}"))
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    let secs = start.elapsed().as_secs_f64();
    let (mark, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("{mark} [{id:>2}] {name}: {detail} ({secs:.1}s)");
    outcome.is_ok()
}

fn main() -> ExitCode {
    let results = [
        run(1, "interval counts", interval_counts),
        run(2, "bijection round-trips", || verify::round_trips(7)),
        run(3, "transfer lemmas", || verify::transfer_lemmas(6)),
        run(4, "duality", duality),
        run(5, "refined counts", || verify::refined_counts(7)),
        run(6, "parameter transfer", || verify::parameter_transfer(7)),
        run(7, "Dyck formulation", || {
            let a = verify::dyck_identities(7)?;
            let b = verify::recursive_count(8)?;
            Ok(format!("identities over {a}, recursive counts {b}"))
        }),
        run(8, "sampler exactness", sampler),
        run(9, "involution rho", || verify::rho_involution(6)),
        run(10, "rendering", rendering),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
