//! Executable commutator calculus.
//!
//! The crate is organised around a handful of concrete carriers:
//!
//! * [`word`]: freely reduced words in free groups, bracket arrangements, and
//!   samplers for fat and symmetric commutator generators.
//! * [`magnus`]: the truncated Magnus expansion over the integers, used as a
//!   lower central series certificate.
//! * [`finite`]: materialised permutation groups in which subgroup identities
//!   (fat vs. symmetric commutator subgroups, the three-subgroup containments,
//!   distributivity) are checked by brute force.
//! * [`braid`]: Artin braid words, the pure braid generators, strand deletion
//!   and Brunnian detection.
//! * [`homotopy`]: the punctured-sphere presentation, decidable membership in
//!   the normal closures of partition blocks, and lower-central-series
//!   certificates.
//! * [`cli`]: the seeded experiment driver behind the `commlab` binary.

pub mod braid;
pub mod cli;
mod error;
pub mod finite;
pub mod homotopy;
pub mod magnus;
mod rng;
pub mod word;

pub use error::{Error, Result};
pub use rng::derive_seed;
