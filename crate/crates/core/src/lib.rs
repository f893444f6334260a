//! Combinatorics of the stalactic and taiga monoids and of their meets and
//! joins: words and their statistics, tableau and tree insertion,
//! Robinson–Schensted-like correspondences with twin-pair symbols,
//! congruence deciders backed by rewriting oracles, class-size and
//! linear-extension counting, and identity checking.

pub mod congruence;
pub mod correspond;
pub mod counting;
pub mod error;
pub mod identities;
pub mod monoid;
pub mod stalactic;
pub mod taiga;
pub mod words;

pub use error::{Error, Result};
pub use monoid::{Family, MonoidId};
pub use words::{Letter, Word};
