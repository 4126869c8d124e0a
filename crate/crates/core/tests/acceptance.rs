//! Acceptance suite: one line per criterion.
//!
//! Run with `cargo test -p blockfree-core --test acceptance -- --nocapture`
//! to see the report.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use blockfree_core::asymptotics::{
    count_from_coefficient, egf_coefficients, eta_defect, eta_roots, lambert_w, log_of_bigcount,
    rough_count_bound_log, saddle_log_estimate,
};
use blockfree_core::exact::{
    bell_sequence, count_avoiding_sequence, practical_counts_from, rough_table,
};
use blockfree_core::oracle::{
    all_shapes, count_practical_bruteforce, is_practical_greedy, is_practical_subset_sum,
    ShapeCensus,
};
use blockfree_core::tables::golden;
use blockfree_core::{build_table, BlockSizeSet, GapConstants, RoughTable, TableCache, TableKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_1_2_BUDGET: Duration = Duration::from_secs(60);
const TABLE_3_BUDGET: Duration = Duration::from_secs(300);
const ORACLE_BUDGET: Duration = Duration::from_secs(120);
const ETA_RESIDUAL: f64 = 1e-12;
const SADDLE_REL: f64 = 1e-12;
const SADDLE_SAMPLES: usize = 1000;
const SADDLE_N_MAX: u64 = 1_000_000_000;
const BELL_CONSTANT: f64 = 2.0;
const RANDOM_SETS: usize = 50;
const SEED: u64 = 20_240_917;

fn assert_table(
    kind: TableKind,
    exponent: u32,
    cache: Option<&TableCache>,
    budget: Duration,
) -> String {
    let start = Instant::now();
    let rows = build_table(kind, exponent, cache).unwrap();
    let elapsed = start.elapsed();
    let expected = golden::rows(kind);
    assert_eq!(rows.len(), exponent as usize / 2);
    for (row, want) in rows.iter().zip(&expected) {
        assert_eq!(row.cells(kind), *want, "n = {}", row.n);
    }
    assert!(elapsed <= budget, "took {elapsed:?}");
    format!("{} rows in {:.1}s", rows.len(), elapsed.as_secs_f64())
}

fn criterion_1() -> String {
    assert_table(TableKind::NoSingletons, 10, None, TABLE_1_2_BUDGET)
}

fn criterion_2() -> String {
    assert_table(TableKind::NoSmallBlocks, 10, None, TABLE_1_2_BUDGET)
}

fn criterion_3() -> String {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let first = assert_table(TableKind::Impractical, 8, Some(&cache), TABLE_3_BUDGET);
    // Second pass is served from the cache and must render identically.
    let again = build_table(TableKind::Impractical, 8, Some(&cache)).unwrap();
    assert_eq!(again, build_table(TableKind::Impractical, 8, None).unwrap());
    first
}

fn criterion_4() -> String {
    let eta = eta_roots();
    assert_eq!(format!("{:.7}", eta.eta1), "0.1866823");
    assert_eq!(format!("{:.7}", eta.eta2), "2.1555352");
    assert!(eta_defect(eta.eta1).abs() <= ETA_RESIDUAL);
    assert!(eta_defect(eta.eta2).abs() <= ETA_RESIDUAL);
    format!("eta1 = {:.10}, eta2 = {:.10}", eta.eta1, eta.eta2)
}

fn criterion_5() -> String {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut compared = 0;
    for n in 0..=12usize {
        let census = ShapeCensus::by_enumeration(n).unwrap();
        for _ in 0..RANDOM_SETS {
            let s =
                BlockSizeSet::from_sizes((1..=n as u64).filter(|_| rng.random_bool(0.5))).unwrap();
            let recurrence = count_avoiding_sequence(n, &s).pop().unwrap();
            assert_eq!(census.count_avoiding(&s), recurrence, "n = {n}, S = {s}");
            compared += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed <= ORACLE_BUDGET, "took {elapsed:?}");
    format!("{compared} (n, S) pairs in {:.1}s", elapsed.as_secs_f64())
}

fn criterion_6() -> String {
    for spec in ["empty", "1", "1,2", "2,5"] {
        let s: BlockSizeSet = spec.parse().unwrap();
        let g = egf_coefficients(30, &s).unwrap();
        let counts = count_avoiding_sequence(30, &s);
        for n in 0..=30 {
            assert_eq!(
                count_from_coefficient(n, &g[n]).as_ref(),
                Some(&counts[n]),
                "S = {s}, n = {n}"
            );
        }
    }
    "4 sets x 31 coefficients".into()
}

fn criterion_7() -> String {
    let mut shapes = 0;
    for n in 0..=12 {
        for shape in all_shapes(n) {
            assert_eq!(
                is_practical_greedy(&shape),
                is_practical_subset_sum(&shape),
                "{:?}",
                shape.sizes()
            );
            shapes += 1;
        }
    }
    format!("{shapes} shapes, 0 disagreements")
}

fn criterion_8() -> String {
    // practical_counts_from fails on any disagreement between the two
    // impractical-count routes.
    let table = RoughTable::compute(256);
    let counts = practical_counts_from(&table, 256).unwrap();
    for n in 0..=256 {
        assert_eq!(
            &counts.practical[n] + &counts.impractical[n],
            *table.bell(n),
            "n = {n}"
        );
    }
    for n in 0..=12 {
        assert_eq!(
            count_practical_bruteforce(n).unwrap(),
            counts.practical[n],
            "P_{n}"
        );
    }
    "n <= 256 consistent, n <= 12 matches enumeration".into()
}

fn criterion_9() -> String {
    let table = rough_table(256, None).unwrap();
    let counts = practical_counts_from(&table, 256).unwrap();
    let excess: Vec<f64> = [16usize, 64, 256]
        .iter()
        .map(|&n| {
            let ln_i = log_of_bigcount(&counts.impractical[n]).unwrap().ln();
            let ln_b1 = log_of_bigcount(table.get(n, 1)).unwrap().ln();
            (ln_i - ln_b1).exp_m1()
        })
        .collect();
    assert!(excess.iter().all(|&e| e > 0.0), "{excess:?}");
    assert!(excess.windows(2).all(|w| w[1] < w[0]), "{excess:?}");
    format!(
        "I_n/B_(n,1) - 1 = {:.3e}, {:.3e}, {:.3e}",
        excess[0], excess[1], excess[2]
    )
}

fn criterion_10() -> String {
    let bells = bell_sequence(1024);
    let mut worst: f64 = 0.0;
    for n in [64u64, 256, 1024] {
        let est = saddle_log_estimate(n, &BlockSizeSet::empty(), GapConstants::default()).unwrap();
        let exact = log_of_bigcount(&bells[n as usize]).unwrap();
        let rel = est.relative_error_to(exact).abs();
        let scale = lambert_w(n).unwrap().exp_neg_r();
        assert!(
            rel <= BELL_CONSTANT * scale,
            "n = {n}: {rel} > {}",
            BELL_CONSTANT * scale
        );
        worst = worst.max(rel / scale);
    }
    format!("largest |error| / e^-r = {worst:.3}")
}

fn criterion_11() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..SADDLE_SAMPLES {
        let n = rng.random_range(1..=SADDLE_N_MAX);
        let sp = lambert_w(n).unwrap();
        let nf = n as f64;
        assert!((sp.r * sp.r.exp() - nf).abs() <= nf * SADDLE_REL, "n = {n}");
        assert!(
            ((-sp.r).exp() - sp.r / nf).abs() <= SADDLE_REL * sp.r / nf,
            "n = {n}"
        );
    }
    format!("{SADDLE_SAMPLES} random n <= {SADDLE_N_MAX}")
}

fn criterion_12() -> String {
    let table = RoughTable::compute(200);
    let mut checked = 0;
    for n in 1..=200usize {
        for m in 0..=n / 3 {
            let exact = table.get(n, m);
            if exact.bits() == 0 {
                continue;
            }
            let bound = rough_count_bound_log(n as u64, m).unwrap();
            assert!(bound >= log_of_bigcount(exact).unwrap(), "n = {n}, m = {m}");
            checked += 1;
        }
    }
    format!("{checked} (n, m) pairs")
}

type Criterion = (&'static str, fn() -> String);

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("1  table 1 (no singletons), n <= 2^10", criterion_1),
        (
            "2  table 2 (no blocks of size 1, 2), n <= 2^10",
            criterion_2,
        ),
        ("3  table 3 (impractical), n <= 2^8", criterion_3),
        ("4  eta constants", criterion_4),
        ("5  recurrence vs enumeration, n <= 12", criterion_5),
        ("6  egf coefficients vs recurrence, n <= 30", criterion_6),
        (
            "7  practicality criterion vs subset sums, n <= 12",
            criterion_7,
        ),
        (
            "8  practical/impractical consistency, n <= 256",
            criterion_8,
        ),
        ("9  impractical partitions are mostly 1-rough", criterion_9),
        ("10 Bell estimate within 2 e^-r", criterion_10),
        ("11 saddle identities", criterion_11),
        ("12 rough-count upper bound, n <= 200", criterion_12),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  criterion {name}: {msg}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
