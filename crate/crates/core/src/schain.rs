//! Configurations of a degenerate curve near one nodal fiber.
//!
//! A curve of multiplicity `m` along the fiber is described in two
//! equivalent ways:
//!
//! * a [`LambdaConfig`]: the degree `mu` of the distinguished component and
//!   the chain lengths `λ_1 > … > λ_μ ≥ 0`, `λ_{-1} > … > λ_{-μ} ≥ 0` hanging
//!   off its `2μ` preimages of the node;
//! * a [`MuConfig`]: the same `mu` together with the multiplicities
//!   `μ_{-1} ≥ … ≥ μ_{-k} ≥ 1` and `μ_0 ≥ … ≥ μ_{l-1} ≥ 1` of the chain
//!   curves on either side of the fiber.
//!
//! On admissible configurations the two are exchanged by transposing Young
//! diagrams: `(λ_1, …, λ_μ)` is conjugate to `(μ_{-1}, …, μ_{-k})` and
//! `(λ_{-1}, …, λ_{-μ})` is conjugate to `(μ_0, …, μ_{l-1})`.
//!
//! Multiplicities outside the stored range are taken to be zero.

use std::cmp::{Ordering, Reverse};

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::partitions::{conjugate, enumerate_partitions, YoungDiagram};

/// The derived `Ord` is plain field order; enumeration output uses
/// [`LambdaConfig::canonical_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaConfig {
    pub mu: u64,
    pub lambda_pos: Vec<u64>,
    pub lambda_neg: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuConfig {
    pub mu: u64,
    /// `μ_{-1}, μ_{-2}, …, μ_{-k}`
    pub mu_neg: Vec<u64>,
    /// `μ_0, μ_1, …, μ_{l-1}`
    pub mu_pos: Vec<u64>,
}

fn strictly_decreasing(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] > w[1])
}

fn weakly_decreasing_positive(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1]) && seq.iter().all(|&v| v > 0)
}

impl LambdaConfig {
    pub fn new(mu: u64, lambda_pos: Vec<u64>, lambda_neg: Vec<u64>) -> Result<Self, ConfigError> {
        let c = LambdaConfig {
            mu,
            lambda_pos,
            lambda_neg,
        };
        c.check()?;
        Ok(c)
    }

    /// `Σ λ_i + Σ λ_{-i} + μ`.
    pub fn weight(&self) -> u64 {
        self.lambda_pos.iter().sum::<u64>() + self.lambda_neg.iter().sum::<u64>() + self.mu
    }

    /// Both sequences have length `mu` and strictly decrease.
    pub fn check(&self) -> Result<(), ConfigError> {
        for (name, seq) in [
            ("lambda_pos", &self.lambda_pos),
            ("lambda_neg", &self.lambda_neg),
        ] {
            if seq.len() as u64 != self.mu {
                return Err(ConfigError::InvalidLambda(format!(
                    "{name} has length {} but mu = {}",
                    seq.len(),
                    self.mu
                )));
            }
            if !strictly_decreasing(seq) {
                return Err(ConfigError::InvalidLambda(format!(
                    "{name} {seq:?} is not strictly decreasing"
                )));
            }
        }
        Ok(())
    }

    /// Canonical order: `mu` ascending, then `lambda_pos` and `lambda_neg`
    /// each in decreasing lexicographic order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        (
            self.mu,
            Reverse(&self.lambda_pos),
            Reverse(&self.lambda_neg),
        )
            .cmp(&(
                other.mu,
                Reverse(&other.lambda_pos),
                Reverse(&other.lambda_neg),
            ))
    }
}

impl MuConfig {
    pub fn new(mu: u64, mu_neg: Vec<u64>, mu_pos: Vec<u64>) -> Self {
        MuConfig { mu, mu_neg, mu_pos }
    }

    /// `Σ μ_j + μ`.
    pub fn weight(&self) -> u64 {
        self.mu_neg.iter().sum::<u64>() + self.mu_pos.iter().sum::<u64>() + self.mu
    }

    /// `μ_0`, zero when there are no curves on the positive side.
    pub fn mu_zero(&self) -> u64 {
        self.mu_pos.first().copied().unwrap_or(0)
    }

    /// `μ_{-1}`, zero when there are no curves on the negative side.
    pub fn mu_minus_one(&self) -> u64 {
        self.mu_neg.first().copied().unwrap_or(0)
    }

    /// Monotone positive sides with `μ_0 ≤ μ ≤ μ_0 + 1` and
    /// `μ_{-1} ≤ μ ≤ μ_{-1} + 1`.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, seq) in [("mu_neg", &self.mu_neg), ("mu_pos", &self.mu_pos)] {
            if !weakly_decreasing_positive(seq) {
                return Err(ConfigError::InvalidConfig(format!(
                    "{name} {seq:?} must be weakly decreasing with positive entries"
                )));
            }
        }
        for (name, edge) in [("mu_0", self.mu_zero()), ("mu_-1", self.mu_minus_one())] {
            if !(edge..=edge + 1).contains(&self.mu) {
                return Err(ConfigError::InvalidConfig(format!(
                    "mu = {} must lie in [{name}, {name} + 1] = [{edge}, {}]",
                    self.mu,
                    edge + 1
                )));
            }
        }
        Ok(())
    }

    /// Valid, and no two neighbouring multiplicities (zero-extended on both
    /// ends) differ by more than one. In particular both outermost chain
    /// curves have multiplicity one.
    pub fn is_admissible(&self) -> bool {
        self.is_valid() && self.chain().windows(2).all(|w| w[0].abs_diff(w[1]) <= 1)
    }

    /// The full sequence `0, μ_{-k}, …, μ_{-1}, μ_0, …, μ_{l-1}, 0`.
    fn chain(&self) -> Vec<u64> {
        let mut seq = Vec::with_capacity(self.mu_neg.len() + self.mu_pos.len() + 2);
        seq.push(0);
        seq.extend(self.mu_neg.iter().rev());
        seq.extend(&self.mu_pos);
        seq.push(0);
        seq
    }
}

/// Ends of the maximal constant runs of a weakly decreasing sequence, paired
/// with the value on each run: `a_0 < a_1 < …` with
/// `μ_0 = … = μ_{a_0} > μ_{a_0+1} = … = μ_{a_1} > …`.
pub fn plateau_decomposition(seq: &[u64]) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    for (i, &v) in seq.iter().enumerate() {
        if seq.get(i + 1) != Some(&v) {
            out.push((i, v));
        }
    }
    out
}

/// Lower bound for the δ-invariants picked up at the interior points of the
/// chain curves on one side: `a_0 μ_0 + Σ_{i>0} (a_i - a_{i-1} - 1) μ_{a_i}`.
fn plateau_term(seq: &[u64]) -> u64 {
    let runs = plateau_decomposition(seq);
    let mut total = 0;
    let mut prev_end: Option<usize> = None;
    for (end, value) in runs {
        let interior = match prev_end {
            None => end,
            Some(p) => end - p - 1,
        };
        total += interior as u64 * value;
        prev_end = Some(end);
    }
    total
}

/// The lower bound on the total δ-invariant near the fiber:
///
/// `μ² + (μ_0 + 1 - μ) μ_0 + (μ_{-1} + 1 - μ) μ_{-1} + plateau(μ_pos) + plateau(μ_neg)`.
///
/// It is never below the weight, and equals it exactly on admissible
/// configurations.
pub fn delta_lower_bound(c: &MuConfig) -> Result<u64, ConfigError> {
    c.validate()?;
    let mu = c.mu;
    let m0 = c.mu_zero();
    let m1 = c.mu_minus_one();
    // validity gives μ ≤ μ_0 + 1, so these differences are 0 or 1
    let node = mu * mu;
    let s0 = (m0 + 1 - mu) * m0;
    let s_minus1 = (m1 + 1 - mu) * m1;
    Ok(node + s0 + s_minus1 + plateau_term(&c.mu_pos) + plateau_term(&c.mu_neg))
}

/// Transposes the multiplicity diagrams into chain lengths, padding with
/// zeros up to length `mu`.
pub fn mu_to_lambda(c: &MuConfig) -> Result<LambdaConfig, ConfigError> {
    if !c.is_admissible() {
        return Err(ConfigError::NotAdmissible(format!("{c:?}")));
    }
    let side = |seq: &[u64]| -> Vec<u64> {
        let diagram = YoungDiagram::new(seq.to_vec()).expect("valid side is a partition");
        let mut parts = conjugate(&diagram).into_parts();
        parts.resize(c.mu as usize, 0);
        parts
    };
    Ok(LambdaConfig {
        mu: c.mu,
        lambda_pos: side(&c.mu_neg),
        lambda_neg: side(&c.mu_pos),
    })
}

/// Inverse of [`mu_to_lambda`]: zero chain lengths are dropped before
/// transposing.
pub fn lambda_to_mu(c: &LambdaConfig) -> MuConfig {
    let side = |seq: &[u64]| conjugate(&YoungDiagram::from_rows(seq.to_vec())).into_parts();
    MuConfig {
        mu: c.mu,
        mu_neg: side(&c.lambda_pos),
        mu_pos: side(&c.lambda_neg),
    }
}

/// Strictly decreasing sequences of `len` nonnegative integers below
/// `bound` summing to `total`, in decreasing lexicographic order.
fn strict_sequences(
    len: u64,
    total: u64,
    bound: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if len == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // the tail after `x` is at least (len-2) + … + 1 + 0
    let tail_min = (len - 1) * len.saturating_sub(2) / 2;
    let top = bound.saturating_sub(1).min(total);
    for x in (len - 1..=top).rev() {
        if total - x < tail_min {
            continue;
        }
        prefix.push(x);
        strict_sequences(len - 1, total - x, x, prefix, out);
        prefix.pop();
    }
}

fn strict_sequences_of(len: u64, total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    strict_sequences(len, total, total + 1, &mut Vec::new(), &mut out);
    out
}

/// Every λ-configuration of weight `m`, in canonical order.
///
/// The search is finite: `mu ≤ m`, and each side sums to at most `m - mu`.
pub fn enumerate_lambda_configs(m: u64) -> Vec<LambdaConfig> {
    let mut out = Vec::new();
    for mu in 0..=m {
        let rest = m - mu;
        for pos_total in 0..=rest {
            let neg_total = rest - pos_total;
            let pos = strict_sequences_of(mu, pos_total);
            if pos.is_empty() {
                continue;
            }
            let neg = strict_sequences_of(mu, neg_total);
            for p in &pos {
                for n in &neg {
                    out.push(LambdaConfig {
                        mu,
                        lambda_pos: p.clone(),
                        lambda_neg: n.clone(),
                    });
                }
            }
        }
    }
    out.sort_by(LambdaConfig::canonical_cmp);
    out
}

/// Every valid (or only every admissible) μ-configuration of weight `m`,
/// ordered by `mu`, then `mu_neg`, then `mu_pos`, each ascending.
pub fn enumerate_mu_configs(m: u64, admissible_only: bool) -> Vec<MuConfig> {
    let mut out = Vec::new();
    for mu in 0..=m {
        let rest = m - mu;
        for neg_total in 0..=rest {
            let negs: Vec<YoungDiagram> = enumerate_partitions(neg_total)
                .into_iter()
                .filter(|d| (d.first()..=d.first() + 1).contains(&mu))
                .collect();
            if negs.is_empty() {
                continue;
            }
            let poss: Vec<YoungDiagram> = enumerate_partitions(rest - neg_total)
                .into_iter()
                .filter(|d| (d.first()..=d.first() + 1).contains(&mu))
                .collect();
            for neg in &negs {
                for pos in &poss {
                    let c = MuConfig::new(mu, neg.parts().to_vec(), pos.parts().to_vec());
                    if !admissible_only || c.is_admissible() {
                        out.push(c);
                    }
                }
            }
        }
    }
    out.sort();
    out
}
