//! The `verify` subcommand: drives the library campaigns and maps their
//! reports onto the output envelope. Exit is clean only when no mismatch or
//! violation was found; budget-starved cells stay informational.

use crate::output::{csv_string, md_table, rows_value, CommandOutput};
use crate::VerifyArgs;
use anyhow::Result;
use cuplen::tensor::EvalOptions;
use cuplen::verify::{
    bad_zero_divisor_report, capacity_properties, even_window_vanishing, reduction_soundness,
    structural_laws, verify_grid, GridSpec, PropReport,
};
use serde::Serialize;
use serde_json::json;

const STRUCTURAL_N: u64 = 64;
const STRUCTURAL_G: u64 = 40;
const STRUCTURAL_K: u32 = 8;

pub fn run(args: &VerifyArgs, budget: u64) -> Result<CommandOutput> {
    if let Some(spec) = args.grid {
        grid(args, spec, budget)
    } else if args.reduction_soundness {
        reduction(budget)
    } else if args.capacity_props {
        sampled(
            "capacity-props",
            capacity_properties(args.seed, args.instances.unwrap_or(10_000))?,
            args.seed,
        )
    } else if args.vanishing_law {
        sampled(
            "vanishing-law",
            vec![even_window_vanishing(args.seed, args.instances.unwrap_or(1_000))?],
            args.seed,
        )
    } else if args.bad_zero_divisors {
        bad_zero_divisors(args.n, args.g)
    } else {
        structural()
    }
}

fn grid(args: &VerifyArgs, spec: GridSpec, budget: u64) -> Result<CommandOutput> {
    let opts = EvalOptions {
        prune: !args.no_prune,
    };
    let report = verify_grid(&spec, !args.unrestricted, budget, opts)?;

    #[derive(Serialize)]
    struct CsvRow {
        n: u32,
        g: u32,
        k: u32,
        status: String,
        closed_value: u64,
        search_value: u64,
        exact: bool,
        expanded: u64,
    }
    let csv_rows: Vec<CsvRow> = report
        .cells
        .iter()
        .map(|c| CsvRow {
            n: c.n,
            g: c.g,
            k: c.k,
            status: c.status.to_string(),
            closed_value: c.closed_value,
            search_value: c.search.value,
            exact: c.search.exact,
            expanded: c.search.expanded,
        })
        .collect();

    let mut md = format!(
        "verify --grid n={}..{} g={}..{} k={}..{} (restricted: {}, prune: {})\n",
        spec.n.0, spec.n.1, spec.g.0, spec.g.1, spec.k.0, spec.k.1, report.restricted, report.prune
    );
    md.push_str(&format!(
        "cells: {}, agree: {}, budget-exceeded: {}, mismatches: {}\n",
        report.cells.len(),
        report.agree,
        report.budget_exceeded,
        report.mismatches.len()
    ));
    for m in &report.mismatches {
        md.push_str(&format!(
            "MISMATCH n={} g={} k={}: closed {} vs search {}\n",
            m.n, m.g, m.k, m.closed_value, m.search.value
        ));
        for line in m.trace.iter().take(8) {
            md.push_str(&format!("  {line}\n"));
        }
    }
    md.push_str(if report.all_agree() { "PASS\n" } else { "FAIL\n" });

    let clean = report.all_agree();
    Ok(CommandOutput {
        command: "verify",
        params: json!({
            "op": "grid",
            "n": [spec.n.0, spec.n.1],
            "g": [spec.g.0, spec.g.1],
            "k": [spec.k.0, spec.k.1],
            "restricted": report.restricted,
            "prune": report.prune,
            "budget": budget,
        }),
        rows: rows_value(&report.cells),
        failures: rows_value(&report.mismatches),
        csv: csv_string(&csv_rows)?,
        md,
        clean,
    })
}

fn reduction(budget: u64) -> Result<CommandOutput> {
    let report = reduction_soundness(2, 2, 3, budget)?;
    let mut md = String::from("verify --reduction-soundness on n<=2 g<=2 k<=3\n");
    md.push_str(&format!(
        "cells: {}, disagreements: {}\n{}",
        report.cells.len(),
        report.disagreements,
        if report.all_agree() { "PASS\n" } else { "FAIL\n" }
    ));
    let failures: Vec<_> = report.cells.iter().filter(|c| !c.agree).cloned().collect();
    Ok(CommandOutput {
        command: "verify",
        params: json!({ "op": "reduction-soundness", "n_max": 2, "g_max": 2, "k_max": 3, "budget": budget }),
        rows: rows_value(&report.cells),
        failures: rows_value(&failures),
        csv: csv_string(&report.cells)?,
        md,
        clean: report.all_agree(),
    })
}

fn sampled(op: &'static str, reports: Vec<PropReport>, seed: u64) -> Result<CommandOutput> {
    let mut md = String::new();
    for r in &reports {
        md.push_str(&format!(
            "{}: {} instances, {} violations\n",
            r.property, r.instances, r.violations
        ));
        if let Some(first) = &r.first_violation {
            md.push_str(&format!("  first: {first}\n"));
        }
    }
    let clean = reports.iter().all(|r| r.passed());
    md.push_str(if clean { "PASS\n" } else { "FAIL\n" });
    let failures: Vec<_> = reports.iter().filter(|r| !r.passed()).cloned().collect();
    Ok(CommandOutput {
        command: "verify",
        params: json!({ "op": op, "seed": seed }),
        rows: rows_value(&reports),
        failures: rows_value(&failures),
        csv: csv_string(&reports)?,
        md,
        clean,
    })
}

fn bad_zero_divisors(n: u32, g: u32) -> Result<CommandOutput> {
    let report = bad_zero_divisor_report(n, g)?;
    let md_rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.j.to_string(),
                (!r.product_nonzero).to_string(),
                (!r.parity_nonzero).to_string(),
            ]
        })
        .collect();
    let mut md = format!(
        "product of (x_1i + x_2i)^2 over i <= j, in SP^{n}(N_{g})\n\n"
    );
    md.push_str(&md_table(&["j", "product vanishes", "parity route vanishes"], &md_rows));
    md.push_str(&format!(
        "\nclaimed vanishing for j <= {}: {}\nroutes agree: {}\n",
        report.claimed_zero_through,
        if report.claim_confirmed { "confirmed" } else { "refuted" },
        report.routes_agree
    ));
    md.push_str(if report.routes_agree { "PASS\n" } else { "FAIL\n" });
    let failures: Vec<_> = report
        .rows
        .iter()
        .filter(|r| r.product_nonzero != r.parity_nonzero)
        .copied()
        .collect();
    Ok(CommandOutput {
        command: "verify",
        params: json!({ "op": "bad-zero-divisors", "n": n, "g": g }),
        rows: rows_value(&report.rows),
        failures: rows_value(&failures),
        csv: csv_string(&report.rows)?,
        md,
        clean: report.routes_agree,
    })
}

fn structural() -> Result<CommandOutput> {
    let report = structural_laws(STRUCTURAL_N, STRUCTURAL_G, STRUCTURAL_K)?;
    let md_rows: Vec<Vec<String>> = report
        .laws
        .iter()
        .map(|l| {
            vec![
                l.law.clone(),
                l.checked.to_string(),
                l.violations.to_string(),
            ]
        })
        .collect();
    let mut md = format!(
        "verify --structural on n<={STRUCTURAL_N} g<={STRUCTURAL_G} k<={STRUCTURAL_K}\n\n"
    );
    md.push_str(&md_table(&["law", "checked", "violations"], &md_rows));
    for s in report.violation_samples.iter().take(8) {
        md.push_str(&format!("  {s}\n"));
    }
    md.push_str(if report.passed() { "\nPASS\n" } else { "\nFAIL\n" });
    Ok(CommandOutput {
        command: "verify",
        params: json!({ "op": "structural", "n_max": STRUCTURAL_N, "g_max": STRUCTURAL_G, "k_max": STRUCTURAL_K }),
        rows: rows_value(&report.laws),
        failures: serde_json::to_value(&report.violation_samples)?,
        csv: csv_string(&report.laws)?,
        md,
        clean: report.passed(),
    })
}
