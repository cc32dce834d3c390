//! Strong Bruhat order cover statistics, Schubert and padded Schubert
//! polynomial calculus, and symbolic weighted chain enumeration over
//! exact rational arithmetic.

pub mod bruhat;
pub mod chains;
pub mod operators;
pub mod perm;
pub mod poly;
pub mod report;
pub mod schubert;
pub mod verify;

pub use bruhat::{cover_stats, covers_up, Cover, Interval, SymmetryMap};
pub use perm::Permutation;
pub use poly::{Poly, Rat, Var};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutations act on different sets: n = {0} vs n = {1}")]
    MismatchedSize(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("t_({i},{j}) applied to {lower} is not a covering relation")]
    NotACover { lower: String, i: usize, j: usize },
    #[error("{0} is not below {1} in Bruhat order")]
    NotComparable(String, String),
    #[error("monomial {0} exceeds the staircase bound")]
    NotSubStaircase(String),
    #[error("unknown weight preset: {0}")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
