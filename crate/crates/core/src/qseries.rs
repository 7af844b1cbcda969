//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`QSeries`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Binary operations truncate to the smaller of the two orders, so every
//! result is exact up to its own order and nothing beyond it is claimed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeriesError;

/// A power series `Σ_{g=0}^{order} c_g q^g` over the integers.
///
/// Equality compares the two series up to the smaller of their orders:
/// a series known to order 10 equals its own truncation to order 5.
#[derive(Clone, Debug)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Builds a series of the given order, zero-filling missing coefficients
    /// and dropping anything above `order`.
    pub fn new<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        coeffs.resize(order + 1, BigInt::zero());
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^degree`, truncated at `order` (zero when `degree > order`).
    pub fn monomial(c: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c.into();
        }
        s
    }

    /// `1 - q^degree`, the building block of every Euler product.
    pub fn one_minus_q_pow(degree: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if degree <= order {
            s.coeffs[degree] -= 1;
        }
        s
    }

    /// Highest retained q-degree (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// The coefficient of `q^degree`.
    pub fn coefficient(&self, degree: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(degree).ok_or(SeriesError::OrderExceeded {
            degree,
            order: self.order(),
        })
    }

    /// Lowest degree with a nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops every coefficient above `order`. Asking for a higher order than
    /// is known would invent coefficients, so the order is clamped instead.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Coefficientwise comparison at a fixed order; both series must reach it.
    pub fn agrees_to(&self, other: &QSeries, order: usize) -> bool {
        order <= self.order()
            && order <= other.order()
            && self.coeffs[..=order] == other.coeffs[..=order]
    }

    /// The first degree at which the two series differ, compared up to the
    /// smaller order.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a + b)
            .collect();
        QSeries { coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a - b)
            .collect();
        QSeries { coeffs }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    fn unit_constant_term(&self) -> Result<BigInt, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs().is_one() {
            Ok(c0.clone())
        } else {
            Err(SeriesError::NonUnitConstantTerm {
                constant: c0.clone(),
            })
        }
    }

    /// Multiplicative inverse via the coefficient recurrence
    /// `b_g = -c0 * Σ_{k=1}^{g} a_k b_{g-k}` where `c0 = a_0 = ±1`.
    pub fn inverse(&self) -> Result<QSeries, SeriesError> {
        let c0 = self.unit_constant_term()?;
        let order = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        out.push(c0.clone());
        for g in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=g {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[g - k];
                }
            }
            out.push(-(acc * &c0));
        }
        Ok(QSeries { coeffs: out })
    }

    /// Integer power by square-and-multiply. Negative exponents go through
    /// [`QSeries::inverse`] and therefore need a unit constant term.
    pub fn pow(&self, exponent: i64) -> Result<QSeries, SeriesError> {
        let base = if exponent < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = QSeries::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Integer power through the first-order recurrence satisfied by
    /// `f = h^e`, namely `h f' = e h' f`:
    ///
    /// `g h_0 f_g = Σ_{k=1}^{g} (e k - (g - k)) h_k f_{g-k}`.
    ///
    /// Each step costs one pass over the nonzero coefficients of `h`, which
    /// makes this the fast route for sparse bases such as the pentagonal
    /// series. The division by `g h_0` is always exact.
    pub fn pow_sparse(&self, exponent: i64) -> Result<QSeries, SeriesError> {
        let h0 = self.unit_constant_term()?;
        let order = self.order();
        let support: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();

        let f0 = if exponent.rem_euclid(2) == 1 && h0.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        out.push(f0);
        let e = BigInt::from(exponent);
        for g in 1..=order {
            let mut acc = BigInt::zero();
            for &(k, hk) in support.iter().take_while(|(k, _)| *k <= g) {
                let weight = &e * k - (g - k);
                if !weight.is_zero() {
                    acc += weight * hk * &out[g - k];
                }
            }
            let (q, r) = acc.div_rem(&(BigInt::from(g) * &h0));
            debug_assert!(r.is_zero(), "inexact division in pow_sparse at degree {g}");
            out.push(q);
        }
        Ok(QSeries { coeffs: out })
    }

    /// Multiplies by `q^s`. A positive shift drops coefficients pushed past
    /// the order; a negative shift is an exact division by `q^{-s}` that
    /// zero-fills the top `-s` coefficients.
    ///
    /// The zero-filled top coefficients are placeholders, not knowledge:
    /// callers dividing by `q^s` must work at `s` extra orders of precision.
    pub fn shift(&self, s: i64) -> Result<QSeries, SeriesError> {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        if s >= 0 {
            let s = s as usize;
            if s <= order {
                out[s..].clone_from_slice(&self.coeffs[..=order - s]);
            }
        } else {
            let s = s.unsigned_abs() as usize;
            if let Some(degree) = self.coeffs.iter().take(s).position(|c| !c.is_zero()) {
                return Err(SeriesError::InexactPowerDivision { degree, power: s });
            }
            if s <= order {
                out[..=order - s].clone_from_slice(&self.coeffs[s..]);
            }
        }
        Ok(QSeries { coeffs: out })
    }
}

/// `∏_{n=1}^{order} (1 - q^n)^exponent`, truncated at `order`.
///
/// Every factor is expanded with the binomial series
/// `(1 - x)^e = Σ_j (-1)^j C(e, j) x^j` and multiplied in as a sparse
/// series, so this path never calls [`QSeries::pow`] or the pentagonal
/// fast path.
pub fn euler_product(exponent: i64, order: usize) -> QSeries {
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    if exponent == 0 {
        return QSeries { coeffs: acc };
    }
    for n in 1..=order {
        let factor = binomial_factor(exponent, n, order);
        acc = sparse_mul(&acc, &factor, order);
    }
    QSeries { coeffs: acc }
}

/// Nonzero terms `(degree, coeff)` of `(1 - q^n)^e` through `order`.
fn binomial_factor(exponent: i64, n: usize, order: usize) -> Vec<(usize, BigInt)> {
    // (-1)^j C(e, j) for j = 0, 1, ...; for negative e this is C(j - e - 1, j).
    let mut terms = vec![(0, BigInt::one())];
    let mut c = BigInt::one();
    let e = BigInt::from(exponent);
    let mut j: usize = 1;
    while j * n <= order {
        // (-1)^j C(e, j) = (-1)^{j-1} C(e, j-1) * (j - 1 - e) / j
        c = c * (BigInt::from(j - 1) - &e) / BigInt::from(j);
        if c.is_zero() {
            break;
        }
        terms.push((j * n, c.clone()));
        j += 1;
    }
    terms
}

fn sparse_mul(dense: &[BigInt], sparse: &[(usize, BigInt)], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (g, slot) in out.iter_mut().enumerate() {
        for (d, c) in sparse.iter().take_while(|(d, _)| *d <= g) {
            let a = &dense[g - d];
            if !a.is_zero() {
                *slot += c * a;
            }
        }
    }
    out
}

/// Generalized pentagonal numbers `k(3k-1)/2` for `k = 0, 1, -1, 2, -2, ...`
/// paired with the sign `(-1)^k`, in increasing order, up to `bound`.
pub fn pentagonal_terms(bound: usize) -> impl Iterator<Item = (usize, i8)> {
    let head = std::iter::once((0, 1));
    let tail = (1usize..).flat_map(|k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        [(k * (3 * k - 1) / 2, sign), (k * (3 * k + 1) / 2, sign)]
    });
    head.chain(tail).take_while(move |(d, _)| *d <= bound)
}

/// `(q; q)_∞ = Σ_{k∈ℤ} (-1)^k q^{k(3k-1)/2}` truncated at `order`.
pub fn pentagonal_series(order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    for (d, sign) in pentagonal_terms(order) {
        s.coeffs[d] = BigInt::from(sign);
    }
    s
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{sign}")?;
            if !first {
                write!(f, " ")?;
            }
            match (g, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{g}")?,
                (_, false) => write!(f, "{mag}q^{g}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Decimal strings indexed by q-degree, so that large coefficients survive
/// JSON parsers with bounded numeric types.
impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(serde::de::Error::custom(
                "a series needs at least the constant term",
            ));
        }
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QSeries { coeffs })
    }
}
