//! The `tcgen` subcommand: the TC-generating polynomial of one family.

use crate::output::{csv_string, rows_value, CommandOutput};
use crate::TcgenArgs;
use anyhow::Result;
use cuplen::tc::tcgen_polynomial;
use serde::Serialize;
use serde_json::json;

#[derive(Serialize)]
struct TcgenRow {
    n: u64,
    g: u64,
    regime: String,
    exact: bool,
    stabilization_index: u32,
    degree: usize,
    p_at_one: u64,
    polynomial: String,
}

pub fn run(args: &TcgenArgs) -> Result<CommandOutput> {
    let poly = tcgen_polynomial(args.n, args.g)?;
    let row = TcgenRow {
        n: poly.n,
        g: poly.g,
        regime: poly.regime.to_string(),
        exact: poly.exact,
        stabilization_index: poly.stabilization_index,
        degree: poly.coeffs.len() - 1,
        p_at_one: poly.value_at_one(),
        polynomial: poly.render(),
    };
    let md = format!(
        "{}\nregime: {}, stabilization index D = {}\n",
        row.polynomial, row.regime, row.stabilization_index
    );
    let mut rows = rows_value(std::slice::from_ref(&row));
    rows[0]["coeffs"] = serde_json::to_value(&poly.coeffs)?;
    Ok(CommandOutput {
        command: "tcgen",
        params: json!({ "n": args.n, "g": args.g }),
        rows,
        failures: json!([]),
        csv: csv_string(std::slice::from_ref(&row))?,
        md,
        clean: true,
    })
}
