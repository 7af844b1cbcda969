//! Integer partitions and Young diagrams.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qseries::pentagonal_terms;

/// A partition stored as weakly decreasing positive parts. The empty
/// diagram is the unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    parts: Vec<u64>,
}

impl YoungDiagram {
    /// Returns `None` unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u64>) -> Option<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.last().is_none_or(|&p| p > 0);
        (decreasing && positive).then_some(YoungDiagram { parts })
    }

    /// Drops zero parts and sorts, so any multiset of row lengths is accepted.
    pub fn from_rows(mut rows: Vec<u64>) -> Self {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { parts: rows }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty diagram.
    pub fn first(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> YoungDiagram {
        conjugate(self)
    }

    /// Parts strictly decrease, i.e. the conjugate has unit steps.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Every value `1..=first()` occurs as a part.
    pub fn has_all_values(&self) -> bool {
        let mut expected = self.first();
        for &p in &self.parts {
            if p == expected {
                continue;
            }
            if p + 1 != expected {
                return false;
            }
            expected = p;
        }
        expected <= 1
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The transpose diagram: part `j` counts the rows of length at least `j + 1`.
pub fn conjugate(d: &YoungDiagram) -> YoungDiagram {
    let cols = d.first();
    let parts = (1..=cols)
        .map(|j| d.parts.iter().take_while(|&&p| p >= j).count() as u64)
        .collect();
    YoungDiagram { parts }
}

/// All partitions of `m` in decreasing lexicographic order.
pub fn enumerate_partitions(m: u64) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(m, m, &mut current, &mut out);
    out
}

fn fill(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<YoungDiagram>) {
    if remaining == 0 {
        out.push(YoungDiagram {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

fn table() -> &'static Mutex<Vec<BigInt>> {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// The partition number `P(m)` via Euler's pentagonal recurrence
/// `P(m) = Σ_{k≥1} (-1)^{k+1} [P(m - k(3k-1)/2) + P(m - k(3k+1)/2)]`.
///
/// Values are memoized in a process-wide table guarded by a mutex; the
/// table only ever grows and each entry is a pure function of `m`.
pub fn partition_p(m: u64) -> BigInt {
    let m = m as usize;
    let mut memo = table()
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner());
    while memo.len() <= m {
        let n = memo.len();
        let mut acc = BigInt::zero();
        for (d, sign) in pentagonal_terms(n).skip(1) {
            // (q;q)_∞ has sign (-1)^k at both pentagonal numbers of k, and
            // P(n) = -Σ_{d>0} sign(d) P(n - d).
            if sign < 0 {
                acc += &memo[n - d];
            } else {
                acc -= &memo[n - d];
            }
        }
        memo.push(acc);
    }
    memo[m].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(p: &[u64]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    /// Counts partitions of `m` by the classic coin-change table; shares no
    /// code with the recurrence or the enumerator.
    fn dp_count(m: usize) -> BigInt {
        let mut ways = vec![BigInt::zero(); m + 1];
        ways[0] = BigInt::one();
        for part in 1..=m {
            for total in part..=m {
                let add = ways[total - part].clone();
                ways[total] += add;
            }
        }
        ways[m].clone()
    }

    #[test]
    fn new_rejects_bad_shapes() {
        assert!(YoungDiagram::new(vec![1, 2]).is_none());
        assert!(YoungDiagram::new(vec![2, 0]).is_none());
        assert!(YoungDiagram::new(vec![]).is_some());
        assert_eq!(
            YoungDiagram::from_rows(vec![0, 1, 3, 0, 2]).parts(),
            [3, 2, 1]
        );
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![yd(&[])]);
        let four: Vec<Vec<u64>> = enumerate_partitions(4)
            .into_iter()
            .map(|d| d.into_parts())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn enumeration_is_strictly_decreasing_lex() {
        for m in 0..=12 {
            let all = enumerate_partitions(m);
            assert!(all.windows(2).all(|w| w[0] > w[1]), "m = {m}");
            assert!(all.iter().all(|d| d.weight() == m));
        }
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_p(0), BigInt::from(1));
        assert_eq!(partition_p(10), BigInt::from(42));
        assert_eq!(
            partition_p(10),
            BigInt::from(enumerate_partitions(10).len())
        );
        assert_eq!(partition_p(40), dp_count(40));
        assert_eq!(partition_p(200), dp_count(200));
    }

    #[test]
    fn partition_p_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| {
                std::thread::spawn(move || {
                    (0..=120u64)
                        .rev()
                        .map(|m| partition_p(m + t))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            for (i, v) in got.into_iter().enumerate() {
                let m = 120 - i + t;
                assert_eq!(v, dp_count(m));
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&yd(&[5, 4, 4, 3, 2, 1])), yd(&[6, 5, 4, 3, 1]));
        assert_eq!(conjugate(&yd(&[])), yd(&[]));
        assert_eq!(conjugate(&yd(&[3, 1])), yd(&[2, 1, 1]));
    }

    #[test]
    fn has_all_values_cases() {
        assert!(yd(&[]).has_all_values());
        assert!(yd(&[3, 2, 2, 1]).has_all_values());
        assert!(!yd(&[3, 1]).has_all_values());
        assert!(!yd(&[2, 2]).has_all_values());
        assert!(yd(&[1, 1, 1]).has_all_values());
    }

    #[test]
    fn conjugate_involution_and_strictness() {
        for m in 0..=16 {
            for d in enumerate_partitions(m) {
                let c = conjugate(&d);
                assert_eq!(c.weight(), m);
                assert_eq!(conjugate(&c), d);
                assert_eq!(c.is_strict(), d.has_all_values(), "{d}");
            }
        }
    }
}
