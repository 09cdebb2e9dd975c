//! The `witness` subcommand: one exhaustive search, printed as a certificate.

use crate::output::{csv_string, rows_value, CommandOutput};
use crate::WitnessArgs;
use anyhow::{bail, Result};
use cuplen::search::search_zcl;
use serde::Serialize;
use serde_json::json;

#[derive(Serialize)]
struct WitnessRow {
    n: u32,
    g: u32,
    k: u32,
    value: u64,
    degree: u64,
    tuple: String,
    survivor: String,
    expanded: u64,
}

pub fn run(args: &WitnessArgs, budget: u64) -> Result<CommandOutput> {
    let outcome = search_zcl(args.n, args.g, args.k, !args.unrestricted, budget)?;
    if !outcome.exact {
        bail!(
            "budget of {budget} expanded term pairs exhausted for n={} g={} k={}; \
             every degree above {} is ruled out, but no witness was confirmed at \
             or below it",
            args.n,
            args.g,
            args.k,
            outcome.value
        );
    }
    let witness = outcome.witness.expect("exact searches carry a witness");
    let row = WitnessRow {
        n: args.n,
        g: args.g,
        k: args.k,
        value: outcome.value,
        degree: witness.total_degree,
        tuple: witness.assignment.to_string(),
        survivor: witness.survivor.to_string(),
        expanded: outcome.expanded,
    };
    let md = format!(
        "zcl search n={} g={} k={}\nvalue: {} (exact)\ntuple: {}\nsurvivor: {}\nexpanded: {}\n",
        args.n, args.g, args.k, row.value, row.tuple, row.survivor, row.expanded
    );
    Ok(CommandOutput {
        command: "witness",
        params: json!({
            "n": args.n,
            "g": args.g,
            "k": args.k,
            "restricted": !args.unrestricted,
            "budget": budget,
        }),
        rows: rows_value(std::slice::from_ref(&row)),
        failures: json!([]),
        csv: csv_string(std::slice::from_ref(&row))?,
        md,
        clean: true,
    })
}
