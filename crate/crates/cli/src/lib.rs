//! Command implementations for the `qcount` binary. Each command renders
//! its full standard output as a string so it can be tested without a
//! process boundary.

pub mod report;
pub mod verify;

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

use qcount_core::counting::{ng_series, ng_via_convolution};
use qcount_core::partitions::partition_p;
use qcount_core::schain::{
    delta_lower_bound, enumerate_lambda_configs, enumerate_mu_configs, MuConfig,
};
use qcount_core::QSeries;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cross-check failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lambda,
    Mu,
}

#[derive(Serialize)]
struct NgRow {
    g: usize,
    #[serde(rename = "Ng")]
    ng: String,
}

/// The table of `N_g` for `g ≤ max_genus`, after checking that the
/// binomial-product and convolution paths agree.
pub fn cmd_ng(max_genus: usize, format: Format) -> Result<String, CliError> {
    let table = ng_series(max_genus);
    let check = ng_via_convolution(max_genus);
    if let Some(g) = table.first_difference(&check) {
        return Err(CliError::Verification(format!(
            "N_{g}: product path gives {}, convolution path gives {}",
            table.coeffs()[g],
            check.coeffs()[g]
        )));
    }
    Ok(render_ng(&table, format))
}

pub fn render_ng(table: &QSeries, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("g,N_g\n");
            for (g, n) in table.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{g},{n}");
            }
            out
        }
        Format::Json => {
            let rows: Vec<NgRow> = table
                .coeffs()
                .iter()
                .enumerate()
                .map(|(g, n)| NgRow {
                    g,
                    ng: n.to_string(),
                })
                .collect();
            json_lines(&rows)
        }
    }
}

/// A JSON array with one element per line.
fn json_lines<T: Serialize>(items: &[T]) -> String {
    if items.is_empty() {
        return "[]\n".to_string();
    }
    let body: Vec<String> = items
        .iter()
        .map(|i| serde_json::to_string(i).expect("plain data serializes"))
        .collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

/// Configurations of weight `m` as a JSON array, followed by a summary line
/// with the count and the partition number `P(m)`.
///
/// Every λ-configuration is dual to an admissible μ-configuration, so
/// `admissible_only` has no effect on the λ side.
pub fn cmd_enumerate(m: u64, side: Side, admissible_only: bool) -> String {
    let (body, count) = match side {
        Side::Lambda => {
            let configs = enumerate_lambda_configs(m);
            (json_lines(&configs), configs.len())
        }
        Side::Mu => {
            let configs = enumerate_mu_configs(m, admissible_only);
            (json_lines(&configs), configs.len())
        }
    };
    format!("{body}count={count} P({m})={}\n", partition_p(m))
}

/// Parses a μ-configuration and reports its weight and δ lower bound.
pub fn cmd_delta(config_json: &str) -> Result<String, CliError> {
    let config: MuConfig = serde_json::from_str(config_json)
        .map_err(|e| CliError::Usage(format!("malformed configuration: {e}")))?;
    let bound = delta_lower_bound(&config).map_err(|e| CliError::Usage(e.to_string()))?;
    let m = config.weight();
    Ok(format!(
        "m={m} B={bound} admissible={} equality={}\n",
        config.is_admissible(),
        bound == m
    ))
}
