//! Exact, exhaustive homomesy checking for bijective maps and statistics
//! on permutations.
//!
//! ```
//! use homomesy::{check_homomesy, MapId, Statistic};
//!
//! let inv = Statistic::parse("St000018").unwrap();
//! let verdict = check_homomesy(MapId::LehmerRotation, &inv, 5).unwrap();
//! assert_eq!(verdict.constant().unwrap().to_string(), "5");
//! ```

pub mod cli;
pub mod codes;
pub mod dynamics;
pub mod error;
pub mod formula;
pub mod maps;
pub mod patterns;
pub mod perm;
pub mod report;
pub mod stats;
pub mod table;

/// Exact rational numbers used for every average and constant.
pub type Rational = num_rational::Ratio<i128>;

pub use codes::{lehmer_decode, lehmer_encode, major_decode, major_encode, rank, unrank};
pub use codes::{LehmerCode, MajorCode};
pub use dynamics::{check_homomesy, decompose, orbit_of, HomomesyVerdict, Orbit, Outcome};
pub use error::{Error, Result};
pub use maps::MapId;
pub use patterns::{count_occurrences, parse_pattern, PatternSpec};
pub use perm::Permutation;
pub use stats::{StatId, Statistic};
