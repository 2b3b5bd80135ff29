//! Pattern avoidance in coloured permutations `C_k ≀ S_n`.
//!
//! * [`perm`], [`pattern`]: elements, colour words and coloured vincular
//!   patterns with their text encodings.
//! * [`matching`]: occurrences under exact and reduced colour semantics.
//! * [`enumeration`]: the exhaustive oracle.
//! * [`closed_forms`], [`series`]: counting formulas and generating
//!   functions, each checked against the oracle by [`verify`].
//! * [`bijection`]: the Catalan bijection to Dyck paths.

pub mod bijection;
pub mod closed_forms;
pub mod enumeration;
pub mod error;
pub mod matching;
pub mod pattern;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use pattern::{ColoredPattern, Gap, Mode, PatternSet};
pub use perm::{ColorWord, ColoredPermutation, Permutation, Symmetry};
