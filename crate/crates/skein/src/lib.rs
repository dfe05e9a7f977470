//! Linear algebra of tangle diagrams: the matching basis of each hom
//! space, canonical diagram lifts, a memoized rewriting engine that
//! expands arbitrary diagrams over that basis, closed-diagram evaluation,
//! the framing-corrected link invariant, and pairing matrices. A separate
//! planar-code evaluator recomputes the invariant by an unrelated route
//! for cross-checking.

pub mod engine;
pub mod lift;
pub mod matching;
pub mod pd_oracle;

pub use engine::{BasisExpansion, Skein, SkeinError};
pub use lift::canonical_lift;
pub use matching::{dim_hom, enumerate_matchings, matching_of, sources, targets, Matching};
pub use pd_oracle::{homfly_pd, OracleError};
