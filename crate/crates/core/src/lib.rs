//! Exact q-series arithmetic and the combinatorics behind the rational curve
//! counts `N_g = [q^g] ∏ (1 - q^n)^{-24}` on K3 surfaces.
//!
//! * [`qseries`]: truncated power series over arbitrary-precision integers.
//! * [`partitions`]: partition counting, enumeration and Young-diagram conjugation.
//! * [`schain`]: λ- and μ-configurations of a degenerate curve near a nodal
//!   fiber, their duality and the δ-invariant lower bound.
//! * [`counting`]: the generating functions tying configuration counts to
//!   partition numbers and to `N_g`.

pub mod counting;
pub mod error;
pub mod partitions;
pub mod qseries;
pub mod schain;

pub use error::{ConfigError, SeriesError};
pub use partitions::{conjugate, enumerate_partitions, partition_p, YoungDiagram};
pub use qseries::{euler_product, pentagonal_series, QSeries};
pub use schain::{LambdaConfig, MuConfig};
