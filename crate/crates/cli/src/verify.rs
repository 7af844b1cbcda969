//! The identity suite behind `qcount verify`. Both sides of every
//! comparison are recomputed on each run.

use std::time::Instant;

use num_bigint::BigInt;
use qcount_core::counting::{
    closed_form_c0, dual_counting_series, expand_g, functional_equation_failure, ng_series,
    ng_via_convolution, partition_series, recursion_c0_skewed, verify_durfee_identity,
};
use qcount_core::partitions::{enumerate_partitions, partition_p};
use qcount_core::qseries::pentagonal_series;
use qcount_core::schain::{
    delta_lower_bound, enumerate_lambda_configs, enumerate_mu_configs, lambda_to_mu, mu_to_lambda,
};

use crate::report::RunReport;

/// Deliberate defects for checking that the suite notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Shift the `q^{n+d}` exponent in the C_0 recursion up by one.
    RecursionOffByOne,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub order: usize,
    pub max_m: u64,
    pub max_n: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: 40,
            max_m: 12,
            max_n: 8,
            fault: None,
        }
    }
}

type CheckResult = Result<String, String>;

pub fn run(opts: &VerifyOptions) -> RunReport {
    let start = Instant::now();
    let mut params = vec![
        ("order".to_string(), opts.order.to_string()),
        ("max_m".to_string(), opts.max_m.to_string()),
        ("max_n".to_string(), opts.max_n.to_string()),
    ];
    if let Some(fault) = opts.fault {
        params.push(("fault".to_string(), format!("{fault:?}")));
    }
    let mut report = RunReport::new("verify", params);

    report.record("partition-oracles", partition_oracles(opts.max_m));
    report.record("lambda-counts", lambda_counts(opts.max_m));
    report.record("mu-counts", mu_counts(opts.max_m));
    report.record("duality-round-trip", duality(opts.max_m));
    report.record("delta-bound-equality", delta_law(opts.max_m));
    report.record(
        "functional-equation",
        functional_equation(opts.max_n, opts.order),
    );
    report.record(
        "c0-three-routes",
        c0_routes(opts.max_n, opts.order, opts.fault),
    );
    report.record("c0-stabilization", stabilization(opts.max_n, opts.order));
    report.record("durfee-identity", durfee(opts.order));
    report.record("ng-cross-path", ng_paths(opts.order));

    report.elapsed = start.elapsed();
    report
}

fn partition_oracles(max_m: u64) -> CheckResult {
    let series = partition_series(max_m as usize);
    let inverse = pentagonal_series(max_m as usize)
        .inverse()
        .map_err(|e| e.to_string())?;
    for m in 0..=max_m {
        let listed = BigInt::from(enumerate_partitions(m).len());
        let recurrence = partition_p(m);
        let a = series.coeffs()[m as usize].clone();
        let b = inverse.coeffs()[m as usize].clone();
        if listed != recurrence || listed != a || listed != b {
            return Err(format!(
                "P({m}): enumeration {listed}, recurrence {recurrence}, product {a}, inverse {b}"
            ));
        }
    }
    Ok(format!("P(m) agrees four ways for m <= {max_m}"))
}

fn lambda_counts(max_m: u64) -> CheckResult {
    for m in 0..=max_m {
        let count = BigInt::from(enumerate_lambda_configs(m).len());
        if count != partition_p(m) {
            return Err(format!(
                "{count} lambda configurations of weight {m}, P({m}) = {}",
                partition_p(m)
            ));
        }
    }
    Ok(format!("#lambda(m) = P(m) for m <= {max_m}"))
}

fn mu_counts(max_m: u64) -> CheckResult {
    let dual = dual_counting_series(max_m as usize);
    for m in 0..=max_m {
        let count = BigInt::from(enumerate_mu_configs(m, true).len());
        let p = partition_p(m);
        let coeff = &dual.coeffs()[m as usize];
        if count != p || &count != coeff {
            return Err(format!(
                "m = {m}: {count} admissible, P(m) = {p}, dual series {coeff}"
            ));
        }
    }
    Ok(format!(
        "#admissible mu(m) = P(m) = dual series for m <= {max_m}"
    ))
}

fn duality(max_m: u64) -> CheckResult {
    let mut n = 0;
    for m in 0..=max_m {
        for c in enumerate_mu_configs(m, true) {
            let l = mu_to_lambda(&c).map_err(|e| e.to_string())?;
            if l.weight() != m || l.mu != c.mu || lambda_to_mu(&l) != c {
                return Err(format!("mu -> lambda -> mu fails on {c:?}"));
            }
            n += 1;
        }
        for l in enumerate_lambda_configs(m) {
            let c = lambda_to_mu(&l);
            if mu_to_lambda(&c).as_ref() != Ok(&l) {
                return Err(format!("lambda -> mu -> lambda fails on {l:?}"));
            }
        }
    }
    Ok(format!("{n} configurations round-trip"))
}

fn delta_law(max_m: u64) -> CheckResult {
    let mut n = 0;
    for m in 0..=max_m {
        for c in enumerate_mu_configs(m, false) {
            let b = delta_lower_bound(&c).map_err(|e| e.to_string())?;
            if b < m || (b == m) != c.is_admissible() {
                return Err(format!("{c:?}: B = {b}, m = {m}"));
            }
            n += 1;
        }
    }
    Ok(format!(
        "B >= m with equality iff admissible on {n} valid configurations"
    ))
}

fn functional_equation(max_n: usize, order: usize) -> CheckResult {
    for n in 0..=max_n {
        let g = expand_g(n, order);
        if let Some(d) = functional_equation_failure(&g) {
            return Err(format!("n = {n} fails at z^{d}"));
        }
        if !g.satisfies_valuation_bounds() {
            return Err(format!("n = {n} violates the lowest-degree bounds"));
        }
    }
    Ok(format!("holds for n <= {max_n}"))
}

fn c0_routes(max_n: usize, order: usize, fault: Option<Fault>) -> CheckResult {
    let skew = match fault {
        Some(Fault::RecursionOffByOne) => 1,
        None => 0,
    };
    for n in 0..=max_n {
        let direct = expand_g(n, order).column(0);
        let rec = recursion_c0_skewed(n, order, skew).map_err(|e| format!("n = {n}: {e}"))?;
        let closed = closed_form_c0(n, order);
        if let Some(d) = rec.first_difference(&direct) {
            return Err(format!(
                "n = {n}: recursion differs from the expansion at q^{d}"
            ));
        }
        if let Some(d) = closed.first_difference(&direct) {
            return Err(format!(
                "n = {n}: closed form differs from the expansion at q^{d}"
            ));
        }
    }
    Ok(format!(
        "recursion = closed form = expansion for n <= {max_n}"
    ))
}

fn stabilization(max_n: usize, order: usize) -> CheckResult {
    let target = partition_series(order);
    for n in 0..=max_n {
        let c0 = closed_form_c0(n, order);
        if let Some(d) = c0.first_difference(&target) {
            if d <= n {
                return Err(format!(
                    "C_0,{n} departs from the partition series at q^{d}"
                ));
            }
        }
    }
    Ok(format!(
        "C_0,n matches the partition series through q^n for n <= {max_n}"
    ))
}

fn durfee(order: usize) -> CheckResult {
    if verify_durfee_identity(order) {
        Ok(format!("holds through q^{order}"))
    } else {
        Err(format!("fails below q^{order}"))
    }
}

fn ng_paths(order: usize) -> CheckResult {
    let a = ng_series(order);
    let b = ng_via_convolution(order);
    if let Some(g) = a.first_difference(&b) {
        return Err(format!("paths differ at g = {g}"));
    }
    let expected = [1, 24];
    for (g, want) in expected.iter().enumerate().take(order + 1) {
        if a.coeffs()[g] != BigInt::from(*want) {
            return Err(format!("N_{g} = {}", a.coeffs()[g]));
        }
    }
    Ok(format!("N_g agrees on both paths for g <= {order}"))
}
