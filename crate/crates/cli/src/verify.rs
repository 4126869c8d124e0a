//! `verify`: runs the invariant checks and reports one line per check.

use std::io::Write;
use std::time::Instant;

use blockfree_core::asymptotics::{
    count_from_coefficient, egf_coefficients, eta_defect, eta_roots, lambert_w, log_of_bigcount,
    rough_count_bound_log, saddle_log_estimate,
};
use blockfree_core::exact::{
    count_avoiding_sequence, practical_counts_from, rough_table, TableCache,
};
use blockfree_core::oracle::{
    all_shapes, count_practical_bruteforce, is_practical_greedy, is_practical_subset_sum,
    ShapeCensus,
};
use blockfree_core::tables::golden;
use blockfree_core::{build_table, BlockSizeSet, GapConstants, RoughTable, TableKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

type Check = Result<(), String>;

const SEED: u64 = 0x5eed_b10c;

type CheckFn<'a> = Box<dyn Fn() -> Check + 'a>;

/// Runs every check of `level`, writing `PASS`/`FAIL` lines. True if all pass.
pub fn run(level: Level, cache: &TableCache, out: &mut impl Write) -> bool {
    let mut checks: Vec<(&str, CheckFn<'_>)> = Vec::new();
    match level {
        Level::Quick => {
            checks.push((
                "oracle equivalence, n <= 10",
                Box::new(|| oracle_equivalence(10, 20)),
            ));
            checks.push(("eta roots", Box::new(eta_check)));
            checks.push((
                "saddle identities",
                Box::new(|| saddle_identities(200, 1_000_000_000)),
            ));
            checks.push((
                "practicality criterion, n <= 10",
                Box::new(|| practicality_criterion(10)),
            ));
        }
        Level::Full => {
            checks.push((
                "table 1 reproduction",
                Box::new(|| table_matches(TableKind::NoSingletons, 10, cache)),
            ));
            checks.push((
                "table 2 reproduction",
                Box::new(|| table_matches(TableKind::NoSmallBlocks, 10, cache)),
            ));
            checks.push((
                "table 3 reproduction",
                Box::new(|| table_matches(TableKind::Impractical, 8, cache)),
            ));
            checks.push(("eta roots", Box::new(eta_check)));
            checks.push((
                "oracle equivalence, n <= 12",
                Box::new(|| oracle_equivalence(12, 50)),
            ));
            checks.push(("egf coefficients, n <= 30", Box::new(egf_check)));
            checks.push((
                "practicality criterion, n <= 12",
                Box::new(|| practicality_criterion(12)),
            ));
            checks.push((
                "practical counts, n <= 256",
                Box::new(|| practical_consistency(cache)),
            ));
            checks.push((
                "impractical mostly rough",
                Box::new(|| impractical_trend(cache)),
            ));
            checks.push(("bell estimate", Box::new(bell_estimate)));
            checks.push((
                "saddle identities",
                Box::new(|| saddle_identities(1000, 1_000_000_000)),
            ));
            checks.push(("rough upper bound, n <= 200", Box::new(rough_bound)));
        }
    }
    let mut all_ok = true;
    for (name, check) in checks {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        let _ = match &result {
            Ok(()) => writeln!(out, "PASS  {name} ({secs:.1}s)"),
            Err(detail) => writeln!(out, "FAIL  {name} ({secs:.1}s): {detail}"),
        };
        all_ok &= result.is_ok();
    }
    all_ok
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> BlockSizeSet {
    let sizes = (1..=n as u64).filter(|_| rng.random_bool(0.5));
    BlockSizeSet::from_sizes(sizes).expect("sizes in range")
}

fn oracle_equivalence(n_max: usize, sets_per_n: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 0..=n_max {
        let census = ShapeCensus::by_enumeration(n).map_err(|e| e.to_string())?;
        for _ in 0..sets_per_n {
            let s = random_subset(&mut rng, n);
            let brute = census.count_avoiding(&s);
            let rec = count_avoiding_sequence(n, &s).pop().unwrap();
            if brute != rec {
                return Err(format!(
                    "n = {n}, S = {s}: enumeration {brute} vs recurrence {rec}"
                ));
            }
        }
    }
    Ok(())
}

fn eta_check() -> Check {
    let eta = eta_roots();
    let shown = (format!("{:.7}", eta.eta1), format!("{:.7}", eta.eta2));
    if shown != ("0.1866823".to_string(), "2.1555352".to_string()) {
        return Err(format!("got {shown:?}"));
    }
    for e in [eta.eta1, eta.eta2] {
        if eta_defect(e).abs() > 1e-12 {
            return Err(format!("residual {:e} at {e}", eta_defect(e)));
        }
    }
    Ok(())
}

fn saddle_identities(samples: usize, n_max: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..samples {
        let n = rng.random_range(1..=n_max);
        let sp = lambert_w(n).map_err(|e| e.to_string())?;
        let nf = n as f64;
        let residual = sp.r * sp.r.exp() - nf;
        if residual.abs() > nf * 1e-12 {
            return Err(format!("n = {n}: r e^r - n = {residual:e}"));
        }
        let gap = ((-sp.r).exp() - sp.r / nf).abs();
        if gap > 1e-12 * sp.r / nf {
            return Err(format!("n = {n}: |e^-r - r/n| = {gap:e}"));
        }
    }
    Ok(())
}

fn practicality_criterion(n_max: usize) -> Check {
    for n in 0..=n_max {
        for shape in all_shapes(n) {
            if is_practical_greedy(&shape) != is_practical_subset_sum(&shape) {
                return Err(format!("disagreement at {:?}", shape.sizes()));
            }
        }
    }
    Ok(())
}

fn table_matches(kind: TableKind, exponent: u32, cache: &TableCache) -> Check {
    let rows = build_table(kind, exponent, Some(cache)).map_err(|e| e.to_string())?;
    let expected = golden::rows(kind);
    for (row, want) in rows.iter().zip(&expected) {
        let got = row.cells(kind);
        if got != *want {
            return Err(format!("n = {}: got {got:?}, expected {want:?}", row.n));
        }
    }
    Ok(())
}

fn egf_check() -> Check {
    for spec in ["empty", "1", "1,2", "2,5"] {
        let s: BlockSizeSet = spec
            .parse()
            .map_err(|e: blockfree_core::Error| e.to_string())?;
        let g = egf_coefficients(30, &s).map_err(|e| e.to_string())?;
        let counts = count_avoiding_sequence(30, &s);
        for n in 0..=30 {
            if count_from_coefficient(n, &g[n]).as_ref() != Some(&counts[n]) {
                return Err(format!("S = {s}, n = {n}"));
            }
        }
    }
    Ok(())
}

fn practical_consistency(cache: &TableCache) -> Check {
    let table = rough_table(256, Some(cache)).map_err(|e| e.to_string())?;
    let counts = practical_counts_from(&table, 256).map_err(|e| e.to_string())?;
    for n in 0..=256 {
        if &counts.practical[n] + &counts.impractical[n] != *table.bell(n) {
            return Err(format!("P_n + I_n != B_n at n = {n}"));
        }
    }
    for n in 0..=12 {
        let brute = count_practical_bruteforce(n).map_err(|e| e.to_string())?;
        if brute != counts.practical[n] {
            return Err(format!(
                "P_{n}: enumeration {brute} vs recurrence {}",
                counts.practical[n]
            ));
        }
    }
    Ok(())
}

fn impractical_trend(cache: &TableCache) -> Check {
    let table = rough_table(256, Some(cache)).map_err(|e| e.to_string())?;
    let counts = practical_counts_from(&table, 256).map_err(|e| e.to_string())?;
    let mut prev = f64::INFINITY;
    for n in [16usize, 64, 256] {
        let excess = (log_of_bigcount(&counts.impractical[n]).unwrap().ln()
            - log_of_bigcount(table.get(n, 1)).unwrap().ln())
        .exp_m1();
        if !(excess > 0.0 && excess < prev) {
            return Err(format!(
                "I_n/B_(n,1) - 1 = {excess:e} at n = {n} (previous {prev:e})"
            ));
        }
        prev = excess;
    }
    Ok(())
}

fn bell_estimate() -> Check {
    let bells = count_avoiding_sequence(1024, &BlockSizeSet::empty());
    for n in [64u64, 256, 1024] {
        let est = saddle_log_estimate(n, &BlockSizeSet::empty(), GapConstants::default())
            .map_err(|e| e.to_string())?;
        let exact = log_of_bigcount(&bells[n as usize]).unwrap();
        let rel = est.relative_error_to(exact).abs();
        let bound = 2.0 * lambert_w(n).unwrap().exp_neg_r();
        if rel > bound {
            return Err(format!("n = {n}: relative error {rel:e} > {bound:e}"));
        }
    }
    Ok(())
}

fn rough_bound() -> Check {
    let table = RoughTable::compute(200);
    for n in 1..=200usize {
        for m in 0..=n / 3 {
            let exact = table.get(n, m);
            if exact.bits() == 0 {
                continue;
            }
            let bound = rough_count_bound_log(n as u64, m).map_err(|e| e.to_string())?;
            if bound < log_of_bigcount(exact).unwrap() {
                return Err(format!("bound fails at n = {n}, m = {m}"));
            }
        }
    }
    Ok(())
}
