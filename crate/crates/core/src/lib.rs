//! Exact combinatorics of the bump statistic: the number of bumps performed
//! by Robinson-Schensted row insertion.
//!
//! The crate computes the statistic several independent ways (insertion,
//! tableau shape, Viennot shadows, local-rule bump diagrams, Greene
//! invariants) and builds the generating polynomials over permutations and
//! partitions with arbitrary-precision coefficients. The [`oracles`] module
//! holds slow definition-level computations used to certify the fast paths,
//! and [`verify`] packages those cross-checks as named suites.

pub mod bump_diagram;
pub mod caps;
pub mod error;
pub mod oracles;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod report;
pub mod rs;
pub mod statistics;
pub mod svg;
pub mod tableau;
pub mod verify;
pub mod viennot;

pub use caps::Caps;
pub use error::{Error, Result};
pub use partition::{partitions_of, Cell, Partition};
pub use permutation::{parse_permutation, permutations_of, Permutation};
pub use rs::{insert, inverse_rs, rs, shape_of, InsertionTrace, RsResult};
pub use statistics::{bump, bump_from_shape, bump_sequence, weakbump, WeakBallotSequence};
pub use tableau::{StandardTableau, Tableau};
