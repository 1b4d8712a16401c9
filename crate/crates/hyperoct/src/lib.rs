//! Arithmetic for the hyperoctahedral group `B_n = (Z/2)^n ⋊ S_n`, its
//! central extension `G_n` by `Z/2`, the commutator pairing φ on commuting
//! pairs, and the branch-divisor parity checks for branched-cover monodromy
//! data, together with a parser for cover presentation files.
//!
//! The crate verifies two things. Per boundary torus with commuting monodromy
//! `(m, ℓ)` and `m ∈ S_n`, the integral `φ(m, ℓ)` equals the sum
//! `Σ (e−1)·α` over components of the covered branch curve. Summed over all
//! tori of a closed branched cover the pairing vanishes, which is the
//! branch-divisor-is-a-square statement; the global constraint comes from
//! the input and is reported, not assumed.

pub mod centralizer;
pub mod cli;
pub mod cover;
pub mod error;
pub mod extension;
pub mod pairing;
pub mod parse;
pub mod perm;
pub mod signed;
pub mod words;

pub use error::Error;
pub use extension::ExtElement;
pub use perm::{CycleDecomposition, Permutation};
pub use signed::SignedPerm;
