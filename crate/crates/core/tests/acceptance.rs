//! Acceptance suite: every criterion runs exactly, under its time budget,
//! and reports one PASS/FAIL line. Exits nonzero if any criterion fails.
//!
//! The oracles below share no code with the library paths they check.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcount_core::counting::{
    check_functional_equation, closed_form_c0, dual_counting_series, expand_g, ng_fast, ng_series,
    ng_via_convolution, partition_series, recursion_c0, verify_durfee_identity,
};
use qcount_core::partitions::{enumerate_partitions, partition_p};
use qcount_core::qseries::{euler_product, pentagonal_series};
use qcount_core::schain::{
    delta_lower_bound, enumerate_lambda_configs, enumerate_mu_configs, lambda_to_mu, mu_to_lambda,
};

// Budgets and ranges, fixed here once.
const C1_BUDGET: Duration = Duration::from_secs(1);
const C1_CROSS_PATH_GENUS: usize = 30;
const C2_BUDGET: Duration = Duration::from_secs(30);
const C2_MAX_M: u64 = 14;
const C3_BUDGET: Duration = Duration::from_secs(30);
const C3_MAX_M: u64 = 14;
const C4_BUDGET: Duration = Duration::from_secs(10);
const C4_MAX_M: u64 = 12;
const C5_BUDGET: Duration = Duration::from_secs(10);
const C5_MAX_M: u64 = 12;
const C6_BUDGET: Duration = Duration::from_secs(20);
const C6_MAX_N: usize = 10;
const C6_ORDER: usize = 40;
const C7_BUDGET: Duration = Duration::from_secs(5);
const C7_ORDER: usize = 60;
const C8_BUDGET: Duration = Duration::from_secs(10);
const C8_MAX_GENUS: usize = 5000;
const C8_SPOT_CHECKS: usize = 20;
const C8_SPOT_MAX_GENUS: usize = 200;
const C8_SEED: u64 = 0x4b33;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `[q^g] (1-q)^{-24} (1-q^2)^{-24} (1-q^3)^{-24}` summed term by term:
/// `Σ_{a+2b+3c=g} C(a+23,23) C(b+23,23) C(c+23,23)`. Exact for `g ≤ 3`.
fn termwise_binomial_ng(g: u128) -> u128 {
    let mut total = 0;
    for c in 0..=g / 3 {
        for b in 0..=(g - 3 * c) / 2 {
            let a = g - 3 * c - 2 * b;
            total += binomial(a + 23, 23) * binomial(b + 23, 23) * binomial(c + 23, 23);
        }
    }
    total
}

/// Coin-change table for partition numbers.
fn dp_partition_counts(max: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); max + 1];
    ways[0] = BigInt::one();
    for part in 1..=max {
        for total in part..=max {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let ng = ng_series(C1_CROSS_PATH_GENUS);
    let c = |g: usize| ng.coefficient(g).unwrap().clone();
    if c(0) != BigInt::from(1) || c(1) != BigInt::from(24) {
        return fail(format!("N_0 = {}, N_1 = {}", c(0), c(1)));
    }
    for g in [2, 3] {
        let oracle = BigInt::from(termwise_binomial_ng(g as u128));
        if c(g) != oracle {
            return fail(format!(
                "N_{g} = {} but termwise oracle gives {oracle}",
                c(g)
            ));
        }
    }
    if c(2) != BigInt::from(324) || c(3) != BigInt::from(3200) {
        return fail("N_2 or N_3 off the published values");
    }
    let conv = ng_via_convolution(C1_CROSS_PATH_GENUS);
    if let Some(g) = ng.first_difference(&conv) {
        return fail(format!("binomial and convolution paths differ at g = {g}"));
    }
    pass(format!(
        "N_0..N_3 = 1, 24, 324, 3200; paths agree for g <= {C1_CROSS_PATH_GENUS}"
    ))
}

fn criterion_2() -> Outcome {
    let max = C2_MAX_M as usize;
    let dp = dp_partition_counts(max);
    let inverse = pentagonal_series(max).inverse().unwrap();
    for m in 0..=C2_MAX_M {
        let mi = m as usize;
        let by_enum = BigInt::from(enumerate_partitions(m).len());
        let by_recurrence = partition_p(m);
        let by_inverse = inverse.coefficient(mi).unwrap().clone();
        if by_enum != by_recurrence || by_enum != by_inverse || by_enum != dp[mi] {
            return fail(format!(
                "P({m}) disagrees: {by_enum} / {by_recurrence} / {by_inverse} / {}",
                dp[mi]
            ));
        }
        let lambdas = BigInt::from(enumerate_lambda_configs(m).len());
        if lambdas != by_enum {
            return fail(format!(
                "{lambdas} lambda configurations of weight {m}, P({m}) = {by_enum}"
            ));
        }
    }
    pass(format!("#lambda(m) = P(m) for m <= {C2_MAX_M}"))
}

fn criterion_3() -> Outcome {
    let dual = dual_counting_series(C3_MAX_M as usize);
    for m in 0..=C3_MAX_M {
        let count = BigInt::from(enumerate_mu_configs(m, true).len());
        let p = partition_p(m);
        let coeff = dual.coefficient(m as usize).unwrap();
        if count != p || &count != coeff {
            return fail(format!(
                "m = {m}: {count} admissible, P = {p}, dual series {coeff}"
            ));
        }
    }
    pass(format!(
        "#admissible mu(m) = P(m) = [q^m] dual series for m <= {C3_MAX_M}"
    ))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for m in 0..=C4_MAX_M {
        let lambdas = enumerate_lambda_configs(m);
        let mus = enumerate_mu_configs(m, true);
        if lambdas.len() != mus.len() {
            return fail(format!(
                "m = {m}: {} lambda vs {} mu",
                lambdas.len(),
                mus.len()
            ));
        }
        let mut images = Vec::with_capacity(mus.len());
        for c in &mus {
            let l = match mu_to_lambda(c) {
                Ok(l) => l,
                Err(e) => return fail(format!("{c:?}: {e}")),
            };
            if l.check().is_err() || l.weight() != m || l.mu != c.mu || lambda_to_mu(&l) != *c {
                return fail(format!("mu -> lambda -> mu breaks on {c:?}"));
            }
            images.push(l);
        }
        for l in &lambdas {
            let c = lambda_to_mu(l);
            if !c.is_admissible()
                || c.weight() != m
                || c.mu != l.mu
                || mu_to_lambda(&c).as_ref() != Ok(l)
            {
                return fail(format!("lambda -> mu -> lambda breaks on {l:?}"));
            }
        }
        // images are distinct and cover every lambda configuration
        images.sort_by(|a, b| a.canonical_cmp(b));
        if images != lambdas {
            return fail(format!("m = {m}: mu -> lambda is not onto"));
        }
        checked += mus.len();
    }
    pass(format!(
        "{checked} configurations round-trip for m <= {C4_MAX_M}"
    ))
}

fn criterion_5() -> Outcome {
    let mut strict = 0;
    let mut equal = 0;
    for m in 0..=C5_MAX_M {
        for c in enumerate_mu_configs(m, false) {
            let bound = delta_lower_bound(&c).unwrap();
            if bound < m || (bound == m) != c.is_admissible() {
                return fail(format!(
                    "{c:?}: bound {bound}, m = {m}, admissible = {}",
                    c.is_admissible()
                ));
            }
            if bound == m {
                equal += 1;
            } else {
                strict += 1;
            }
        }
    }
    pass(format!(
        "{equal} equality cases, {strict} strict excess cases for m <= {C5_MAX_M}"
    ))
}

fn criterion_6() -> Outcome {
    let target = partition_series(C6_ORDER);
    for n in 0..=C6_MAX_N {
        let g = expand_g(n, C6_ORDER);
        if !check_functional_equation(&g) {
            return fail(format!("functional equation fails for n = {n}"));
        }
        let direct = g.column(0);
        let rec = match recursion_c0(n, C6_ORDER) {
            Ok(r) => r,
            Err(e) => return fail(format!("recursion for n = {n}: {e}")),
        };
        let closed = closed_form_c0(n, C6_ORDER);
        if rec != direct || closed != direct {
            return fail(format!(
                "C_0,{n}: recursion, closed form and expansion disagree"
            ));
        }
        if !direct.agrees_to(&target, n.min(C6_ORDER)) {
            return fail(format!(
                "C_0,{n} departs from the partition series below degree {}",
                n + 1
            ));
        }
    }
    pass(format!("n <= {C6_MAX_N} at order {C6_ORDER}"))
}

fn criterion_7() -> Outcome {
    if verify_durfee_identity(C7_ORDER) {
        pass(format!("identity holds through q^{C7_ORDER}"))
    } else {
        fail(format!("identity fails below q^{C7_ORDER}"))
    }
}

fn criterion_8() -> Outcome {
    let table = ng_fast(C8_MAX_GENUS);
    if table.order() != C8_MAX_GENUS {
        return fail("table has the wrong length");
    }
    let slow = euler_product(-24, C8_SPOT_MAX_GENUS);
    let mut rng = ChaCha8Rng::seed_from_u64(C8_SEED);
    for _ in 0..C8_SPOT_CHECKS {
        let g = rng.gen_range(0..=C8_SPOT_MAX_GENUS);
        if table.coefficient(g).unwrap() != slow.coefficient(g).unwrap() {
            return fail(format!("fast and Euler-product paths differ at g = {g}"));
        }
    }
    let digits = table.coefficient(C8_MAX_GENUS).unwrap().to_string().len();
    pass(format!(
        "N_g for g <= {C8_MAX_GENUS} ({digits} digits at the top), {C8_SPOT_CHECKS} spot checks"
    ))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 N_g values and cross-path", criterion_1, C1_BUDGET),
        ("2 lambda counts = P(m)", criterion_2, C2_BUDGET),
        ("3 admissible mu counts = P(m)", criterion_3, C3_BUDGET),
        ("4 duality bijection", criterion_4, C4_BUDGET),
        ("5 delta bound equality law", criterion_5, C5_BUDGET),
        ("6 functional equation and C_0,n", criterion_6, C6_BUDGET),
        ("7 Durfee identity", criterion_7, C7_BUDGET),
        ("8 fast N_g table", criterion_8, C8_BUDGET),
    ];

    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < budget;
        let ok = outcome.ok && in_time;
        if !ok {
            failures += 1;
        }
        let timing = if in_time { "" } else { " OVER BUDGET" };
        println!(
            "{} criterion {name}: {} [{:.3}s / {}s{timing}]",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
