//! Acceptance gate: eight checks covering the full surface of the crate,
//! run sequentially with per-check wall-clock budgets. One line per check;
//! exit status 1 if any fails.

use anyhow::{ensure, Result};
use cuplen::closed_forms::zcl_closed;
use cuplen::combinatorics::{floor_log2, gap_p2n};
use cuplen::search::{max_ell, search_zcl, DEFAULT_BUDGET};
use cuplen::tc::{tc_bounds, tcgen_polynomial};
use cuplen::tensor::EvalOptions;
use cuplen::verify::{
    capacity_properties, even_window_vanishing, reduction_soundness, structural_laws,
    verify_grid, GridSpec,
};
use std::process::Command;
use std::time::{Duration, Instant};

struct Criterion {
    label: &'static str,
    limit: Duration,
    run: fn() -> Result<String>,
}

fn main() {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(8).build_global();
    let criteria = [
        Criterion { label: "criterion 1", limit: Duration::from_secs(1), run: case_table },
        Criterion { label: "criterion 2", limit: Duration::from_secs(600), run: oracle_equivalence },
        Criterion { label: "criterion 3", limit: Duration::from_secs(300), run: reduction_agreement },
        Criterion { label: "criterion 4", limit: Duration::from_secs(300), run: projective_baseline },
        Criterion { label: "criterion 5", limit: Duration::from_secs(60), run: known_anchors },
        Criterion { label: "criterion 6", limit: Duration::from_secs(10), run: structural_sweep },
        Criterion { label: "criterion 7", limit: Duration::from_secs(300), run: capacity_calculus },
        Criterion { label: "criterion 8", limit: Duration::from_secs(60), run: generating_function },
    ];
    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) if elapsed <= c.limit => {
                println!("PASS {}: {detail} [{:.2}s]", c.label, elapsed.as_secs_f64());
            }
            Ok(detail) => {
                failures += 1;
                println!(
                    "FAIL {}: exceeded the {:.0}s budget at {:.2}s ({detail})",
                    c.label,
                    c.limit.as_secs_f64(),
                    elapsed.as_secs_f64()
                );
            }
            Err(err) => {
                failures += 1;
                println!("FAIL {}: {err:#}", c.label);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}

/// The n = 51 case table from the CLI, byte-for-byte, with every one of the
/// eight windows spelled out.
fn case_table() -> Result<String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cuplen"))
        .args(["table", "--example-3-1"])
        .output()?;
    ensure!(out.status.code() == Some(0), "exit {:?}", out.status.code());
    let stdout = String::from_utf8(out.stdout)?;
    ensure!(
        stdout == include_str!("golden/example_3_1.md"),
        "output drifted from the golden file"
    );
    let expected: [(&str, &str, &str); 8] = [
        ("2", "1 <= g <= 39", "78 - g"),
        ("2", "g >= 39", "39"),
        ("3", "1 <= g <= 26", "54 - 2g"),
        ("4", "1 <= g <= 7", "30 - 3g"),
        ("4", "8 <= g <= 14", "15 - g"),
        ("5", "g = 1", "2"),
        ("6", "g = 1", "1"),
        ("any", "otherwise", "0"),
    ];
    let body: Vec<Vec<&str>> = stdout
        .lines()
        .filter(|l| l.starts_with('|') && !l.starts_with("| k") && !l.starts_with("|--"))
        .map(|l| l.trim_matches('|').split('|').map(str::trim).collect())
        .collect();
    ensure!(body.len() == 8, "expected 8 case rows, found {}", body.len());
    for (row, want) in body.iter().zip(expected) {
        ensure!(
            (row[0], row[1], row[2]) == want,
            "row {row:?} does not match {want:?}"
        );
    }
    Ok("all eight gap windows for n = 51 reproduced exactly".to_string())
}

/// Closed-form zcl equals the restricted search on three grids.
fn oracle_equivalence() -> Result<String> {
    let grids = [
        GridSpec::new((1, 5), (1, 4), (2, 2)),
        GridSpec::new((1, 3), (1, 3), (3, 3)),
        GridSpec::new((1, 2), (1, 3), (4, 4)),
    ];
    let mut agreed = 0;
    for spec in grids {
        let report = verify_grid(&spec, true, DEFAULT_BUDGET, EvalOptions::default())?;
        ensure!(
            report.mismatches.is_empty() && report.budget_exceeded == 0,
            "{} mismatches, {} budget-starved cells on {:?}",
            report.mismatches.len(),
            report.budget_exceeded,
            spec
        );
        agreed += report.agree;
    }
    Ok(format!("closed form and search agree on all {agreed} cells"))
}

/// Restricted and unrestricted searches return the same value everywhere
/// the unrestricted one is feasible.
fn reduction_agreement() -> Result<String> {
    let report = reduction_soundness(2, 2, 3, DEFAULT_BUDGET)?;
    ensure!(report.all_agree(), "restricted search missed a value");
    Ok(format!(
        "restricted and unrestricted searches agree on all {} cells",
        report.cells.len()
    ))
}

/// The projective-space gap: run-length formula against the slot-filling
/// search for k >= 3, and the k = 2 closed form against both routes.
fn projective_baseline() -> Result<String> {
    let mut checked = 0;
    for n in 1..=5u32 {
        for k in 3..=8u32 {
            let gap = gap_p2n(n as u64, k)?;
            let ell = max_ell(n, k, DEFAULT_BUDGET)?;
            ensure!(
                2 * n as u64 - ell == gap,
                "n={n} k={k}: 2n - max_ell = {} but gap = {gap}",
                2 * n as u64 - ell
            );
            checked += 1;
        }
    }
    for n in 1..=8u32 {
        let e = floor_log2(n as u64);
        let formula = 4 * n as u64 + 1 - (1 << (e + 2));
        ensure!(gap_p2n(n as u64, 2)? == formula, "gap formula broke at n={n}");
        let search = search_zcl(n, 1, 2, true, DEFAULT_BUDGET)?;
        ensure!(search.exact, "search for n={n} exhausted its budget");
        ensure!(
            4 * n as u64 - search.value == formula,
            "n={n}: search gives gap {}",
            4 * n as u64 - search.value
        );
        checked += 1;
    }
    Ok(format!("{checked} projective-space gaps match on both routes"))
}

fn anchor(n: u32, g: u32, k: u32, want: u64) -> Result<()> {
    let (closed, _) = zcl_closed(n as u64, g as u64, k)?;
    ensure!(closed == want, "closed zcl({n},{g},{k}) = {closed}, want {want}");
    let search = search_zcl(n, g, k, true, DEFAULT_BUDGET)?;
    ensure!(search.exact && search.value == want, "search zcl({n},{g},{k}) = {search:?}");
    Ok(())
}

/// Hand-checkable small values, each by formula and by search.
fn known_anchors() -> Result<String> {
    let mut cells = 0;
    for g in 2..=4 {
        anchor(1, g, 2, 3)?;
        cells += 1;
    }
    for k in [3, 4] {
        for g in 1..=3 {
            anchor(1, g, k, 2 * k as u64)?;
            cells += 1;
        }
    }
    anchor(1, 1, 2, 3)?;
    anchor(2, 1, 2, 7)?;
    cells += 2;
    Ok(format!("{cells} anchor values confirmed by formula and search"))
}

/// The seven closed-form laws over the full desk-scale box.
fn structural_sweep() -> Result<String> {
    let report = structural_laws(64, 40, 8)?;
    ensure!(report.passed(), "violations: {:?}", report.violation_samples);
    let checked: u64 = report.laws.iter().map(|l| l.checked).sum();
    Ok(format!(
        "{} laws clean over {checked} checks on n <= 64, g <= 40, k <= 8",
        report.laws.len()
    ))
}

/// Randomized capacity calculus: the three product-capacity properties and
/// the even-k vanishing window.
fn capacity_calculus() -> Result<String> {
    let mut total = 0;
    for report in capacity_properties(7, 10_000)? {
        ensure!(report.passed(), "{}: {:?}", report.property, report.first_violation);
        ensure!(report.instances >= 10_000, "{} undersampled", report.property);
        total += report.instances;
    }
    let vanishing = even_window_vanishing(7, 1_000)?;
    ensure!(vanishing.passed(), "{:?}", vanishing.first_violation);
    ensure!(vanishing.instances >= 1_000, "vanishing law undersampled");
    total += vanishing.instances;
    Ok(format!("{total} randomized instances, zero violations"))
}

/// Generating polynomials: degree <= 3 on the power-of-two column, P(1) = 2n
/// structurally, exact coefficients wherever every contributing TC value is
/// certified (n = 1 keeps the honest [3,4] span for TC_2), and the series
/// round-trip reproducing TC_{k+1} through k = 10.
fn generating_function() -> Result<String> {
    let mut cells = 0;
    for n in [1u64, 2, 4] {
        for g in 1..=3u64 {
            let poly = tcgen_polynomial(n, g)?;
            ensure!(poly.value_at_one() == 2 * n, "P(1) != 2n at n={n}, g={g}");
            ensure!(poly.coeffs.len() <= 4, "degree > 3 at n={n}, g={g}");
            ensure!(
                poly.exact == (n != 1),
                "exactness flag {} unexpected at n={n}, g={g}",
                poly.exact
            );
            let series = poly.series(12);
            for m in 1..=10usize {
                let rep = tc_bounds(n, g, m as u32 + 1)?;
                if poly.exact {
                    let want = rep.tc_exact.expect("exact polynomial needs certified TC") as i64;
                    ensure!(
                        series[m].is_exact() && series[m].lo == want,
                        "series term {m} = {:?}, want {want} (n={n}, g={g})",
                        series[m]
                    );
                } else {
                    ensure!(
                        series[m].contains(rep.tc_lower as i64)
                            && series[m].contains(rep.tc_upper as i64),
                        "series term {m} = {:?} misses [{}, {}] (n={n}, g={g})",
                        series[m],
                        rep.tc_lower,
                        rep.tc_upper
                    );
                }
            }
            cells += 1;
        }
    }
    Ok(format!(
        "{cells} polynomials: P(1) = 2n, degree <= 3, exact for n in {{2, 4}}, series round-trip to k = 10"
    ))
}
