//! Generating functions for configuration counts and for `N_g`.
//!
//! The chain-length configurations of weight `m` are counted by the
//! `q^m z^0` coefficient of
//!
//! ```text
//! G(q, z) = (1 + z) ∏_{k≥1} (1 + q^k z)(1 + q^k z^{-1}),
//! ```
//!
//! and that coefficient, `C_0`, is the partition generating function. Here
//! everything runs in the truncated integer-series ring: the limit over the
//! product truncation `n` becomes the statement that `C_{0,n}` already agrees
//! with `∏ (1 - q^j)^{-1}` through degree `n`.
//!
//! Identifying configuration counts with curve counts (each configuration
//! counts once towards `N_g`) is geometric input and is taken as given; what
//! is checked here is the combinatorics that follows from it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::SeriesError;
use crate::qseries::{euler_product, pentagonal_series, QSeries};

/// The z-graded coefficients `C_{d,n}(q)` of `G_n(q, z)` for
/// `-n ≤ d ≤ n + 1`; every other z-degree is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentBundle {
    n: usize,
    order: usize,
    /// `columns[i]` holds `C_{i - n, n}`.
    columns: Vec<QSeries>,
}

impl LaurentBundle {
    /// Assembles a bundle from explicit columns `C_{-n}, …, C_{n+1}`. No
    /// identity is enforced; use [`check_functional_equation`] to test one.
    pub fn from_columns(n: usize, columns: Vec<QSeries>) -> Option<Self> {
        if columns.len() != 2 * n + 2 {
            return None;
        }
        let order = columns.iter().map(QSeries::order).min()?;
        let columns = columns.iter().map(|c| c.truncate(order)).collect();
        Some(LaurentBundle { n, order, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn min_degree(&self) -> i64 {
        -(self.n as i64)
    }

    pub fn max_degree(&self) -> i64 {
        self.n as i64 + 1
    }

    /// `C_{d,n}`, or `None` outside `[-n, n + 1]` where the coefficient is zero.
    pub fn get(&self, d: i64) -> Option<&QSeries> {
        if d < self.min_degree() || d > self.max_degree() {
            return None;
        }
        self.columns.get((d + self.n as i64) as usize)
    }

    /// `C_{d,n}` with the zero series outside the support.
    pub fn column(&self, d: i64) -> QSeries {
        self.get(d)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.order))
    }

    pub fn columns(&self) -> impl Iterator<Item = (i64, &QSeries)> {
        let lo = self.min_degree();
        self.columns
            .iter()
            .enumerate()
            .map(move |(i, c)| (lo + i as i64, c))
    }

    pub fn into_columns(self) -> Vec<QSeries> {
        self.columns
    }

    /// Lowest q-degree guaranteed for `C_{d,n}`: choosing `d > 0` net
    /// factors of `z` costs at least `0 + 1 + … + (d - 1)`, and `|d|` net
    /// factors of `z^{-1}` cost at least `1 + … + |d|`.
    pub fn valuation_bound(d: i64) -> usize {
        let a = d.unsigned_abs() as usize;
        if d > 0 {
            a * (a - 1) / 2
        } else {
            a * (a + 1) / 2
        }
    }

    /// Every column vanishes below its [`valuation_bound`](Self::valuation_bound).
    pub fn satisfies_valuation_bounds(&self) -> bool {
        self.columns().all(|(d, c)| {
            let bound = Self::valuation_bound(d).min(self.order + 1);
            c.coeffs()[..bound].iter().all(Zero::is_zero)
        })
    }
}

/// Expands `G_n(q, z) = (1 + z) ∏_{k=1}^{n} (1 + q^k z)(1 + q^k z^{-1})`
/// factor by factor, in that order.
pub fn expand_g(n: usize, order: usize) -> LaurentBundle {
    let width = 2 * n + 2;
    let offset = n;
    let mut cols: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order + 1]; width];
    cols[offset][0] = BigInt::from(1);
    cols[offset + 1][0] = BigInt::from(1);

    for k in 1..=n {
        // (1 + q^k z): C_d += q^k C_{d-1}, highest d first
        for i in (1..width).rev() {
            for g in (k..=order).rev() {
                let add = cols[i - 1][g - k].clone();
                if !add.is_zero() {
                    cols[i][g] += add;
                }
            }
        }
        // (1 + q^k z^{-1}): C_d += q^k C_{d+1}, lowest d first
        for i in 0..width - 1 {
            for g in (k..=order).rev() {
                let add = cols[i + 1][g - k].clone();
                if !add.is_zero() {
                    cols[i][g] += add;
                }
            }
        }
    }

    LaurentBundle {
        n,
        order,
        columns: cols.into_iter().map(|c| QSeries::new(c, order)).collect(),
    }
}

/// Checks `(z + q^n) G_n(q, qz) = (1 + q^{n+1} z) G_n(q, z)` through the
/// bundle's order, one z-degree at a time:
///
/// `q^{d-1} C_{d-1} + q^{n+d} C_d = C_d + q^{n+1} C_{d-1}`.
///
/// For `d ≤ 0` both sides are multiplied by `q^{1-d}` so every shift is
/// nonnegative and no precision is lost.
pub fn check_functional_equation(g: &LaurentBundle) -> bool {
    functional_equation_failure(g).is_none()
}

/// The first z-degree where the functional equation fails, if any.
pub fn functional_equation_failure(g: &LaurentBundle) -> Option<i64> {
    let n = g.n as i64;
    let shift = |s: &QSeries, by: i64| s.shift(by).expect("nonnegative shift");
    for d in g.min_degree()..=g.max_degree() + 1 {
        let lift = (1 - d).max(0);
        let prev = g.column(d - 1);
        let cur = g.column(d);
        let lhs = &shift(&prev, d - 1 + lift) + &shift(&cur, n + d + lift);
        let rhs = &shift(&cur, lift) + &shift(&prev, n + 1 + lift);
        if lhs != rhs {
            return Some(d);
        }
    }
    None
}

/// `C_{0,n}` from `C_{n+1,n} = q^{n(n+1)/2}` by running
///
/// `C_{d-1,n} = (1 - q^{n+d}) / (q^{d-1} (1 - q^{n-d+2})) · C_{d,n}`
///
/// from `d = n + 1` down to `d = 1`.
///
/// The divisions by `q^{d-1}` consume `n(n+1)/2` degrees of precision in
/// total, so the recursion runs at that much extra order and truncates at
/// the end.
pub fn recursion_c0(n: usize, order: usize) -> Result<QSeries, SeriesError> {
    recursion_c0_skewed(n, order, 0)
}

/// [`recursion_c0`] with the `q^{n+d}` numerator exponent displaced by
/// `skew`. Only a nonzero skew ever differs from the true recursion; the
/// verification suite uses it to prove it notices a broken recursion.
pub fn recursion_c0_skewed(n: usize, order: usize, skew: i64) -> Result<QSeries, SeriesError> {
    let headroom = n * (n + 1) / 2;
    let work = order + headroom;
    let mut c = QSeries::monomial(1, headroom, work);
    for d in (1..=n + 1).rev() {
        let num_exp = (n as i64 + d as i64 + skew).max(0) as usize;
        let numerator = QSeries::one_minus_q_pow(num_exp, work);
        let denominator = QSeries::one_minus_q_pow(n + 2 - d, work).inverse()?;
        c = c.mul(&numerator).mul(&denominator).shift(-(d as i64 - 1))?;
    }
    Ok(c.truncate(order))
}

/// `∏_{j=n+2}^{2n+1} (1 - q^j) / ∏_{j=1}^{n} (1 - q^j)`.
pub fn closed_form_c0(n: usize, order: usize) -> QSeries {
    let numerator = (n + 2..=2 * n + 1).fold(QSeries::one(order), |acc, j| {
        acc.mul(&QSeries::one_minus_q_pow(j, order))
    });
    let denominator = (1..=n).fold(QSeries::one(order), |acc, j| {
        acc.mul(&QSeries::one_minus_q_pow(j, order))
    });
    numerator.mul(&denominator.inverse().expect("constant term is 1"))
}

/// `∏_{n≥1} (1 - q^n)^{-1} = Σ P(m) q^m`.
pub fn partition_series(order: usize) -> QSeries {
    euler_product(-1, order)
}

/// `q^{k²} / ((1-q)(1-q²)⋯(1-q^k))²`, the `k`-th term of the dual count.
pub fn dual_counting_term(k: usize, order: usize) -> QSeries {
    if k * k > order {
        return QSeries::zero(order);
    }
    let pochhammer = (1..=k).fold(QSeries::one(order), |acc, j| {
        acc.mul(&QSeries::one_minus_q_pow(j, order))
    });
    let inv = pochhammer.inverse().expect("constant term is 1");
    inv.mul(&inv)
        .shift((k * k) as i64)
        .expect("nonnegative shift")
}

/// `Σ_{k≥0} q^{k²} / ((1-q)²(1-q²)²⋯(1-q^k)²)`: the generating function of
/// admissible multiplicity configurations.
pub fn dual_counting_series(order: usize) -> QSeries {
    (0..)
        .take_while(|k| k * k <= order)
        .fold(QSeries::zero(order), |acc, k| {
            acc.add(&dual_counting_term(k, order))
        })
}

/// `Σ_k q^{k²}/((q;q)_k)² = ∏ (1 - q^n)^{-1}` through `order`.
pub fn verify_durfee_identity(order: usize) -> bool {
    durfee_matches(&dual_counting_series(order))
}

/// Compares a candidate for the dual-counting series with the partition
/// series at the candidate's order.
pub fn durfee_matches(candidate: &QSeries) -> bool {
    *candidate == partition_series(candidate.order())
}

/// `Σ N_g q^g = ∏ (1 - q^n)^{-24}` by per-factor binomial expansion.
pub fn ng_series(order: usize) -> QSeries {
    euler_product(-24, order)
}

/// `Σ_{m_1+…+m_24=g} P(m_1)⋯P(m_24)`: the 24th power of the partition series.
pub fn ng_via_convolution(order: usize) -> QSeries {
    partition_series(order).pow(24).expect("positive exponent")
}

/// `N_g` for `g ≤ order` from the pentagonal series raised to the `-24`
/// through its power recurrence; the fast path for large tables.
pub fn ng_fast(order: usize) -> QSeries {
    pentagonal_series(order)
        .pow_sparse(-24)
        .expect("constant term is 1")
}
