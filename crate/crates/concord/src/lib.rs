//! Concordance analysis of preference orderings.
//!
//! A set of judges' orderings is summarized by the number of subsequences
//! they all share (`kappa`), its normalization to [0, 1], the longest common
//! subsequences, and the smallest covering set: the maximal common
//! subsequences, which together contain every common subsequence. Weak
//! orderings with ties are supported; tied items never count as ordered.
//!
//! ```
//! use concord::{kernel, model::OrderingSet};
//!
//! let set = OrderingSet::from_char_strings(&["abcde", "abdce", "bdce"]).unwrap();
//! let report = kernel::kappa_set(&set);
//! assert_eq!(report.kappa, 11u32.into());
//! assert_eq!(report.llcs, 3);
//! ```

pub mod cli;
pub mod error;
pub mod index;
pub mod kernel;
pub mod lcs;
pub mod model;
pub mod oracle;
pub mod report;
pub mod scs;

pub use error::{Error, ParseError, Result};
pub use kernel::{kappa_pair, kappa_set, ConcordanceReport};
pub use lcs::{all_lcs, LcsSet, DEFAULT_CAP};
pub use model::{parse_ordering, parse_orderings, BucketOrdering, OrderingSet, Symbol};
pub use scs::{smallest_covering_set, CoveringSet, ScsReport};
