//! Exact-arithmetic toolkit for root systems, parabolic subquotients, height
//! bounds and numerical canonical-reduction checks.
//!
//! Everything is computed over exact integers and rationals; no floating point
//! appears anywhere in this crate. The main layers are:
//!
//! - [`rootsys`]: simple root systems in Bourbaki numbering: Cartan matrices,
//!   positive-root enumeration by root strings, fundamental weights, pairings
//!   and the invariant inner product.
//! - [`parabolic`]: parabolic types `t(P)`, the canonical filtration of the
//!   unipotent radical, graded Levi subquotients of `g/p`, the sets `Φ_{α_i}`
//!   and their component bricks `W(P,o)`.
//! - [`height`]: the height function `n_L` / `Ht_L`, the `|ω_k|` shortcut for
//!   maximal parabolics, full height tables for the exceptional types and the
//!   low-height characteristic gates.
//! - [`slopecalc`]: rational slope data modeling reductions: degrees,
//!   numerical invariants `n(P,o)`, canonical-reduction verdicts and the
//!   χ-projection identity.
//! - [`finite`]: small finite fields `F_q` (p ∈ {2,3,5,7}, degree ≤ 4) in
//!   polynomial-basis representation, with exact matrix arithmetic.
//! - [`g2case`]: the explicit Chevalley embedding of G2 into 6×6 / 7×7
//!   matrices, torus-weight and adjoint-block verification, the one-parameter
//!   subgroup check, and the formal degree ledger that assembles the
//!   characteristic-2 counterexample chain.

pub mod finite;
pub mod g2case;
pub mod height;
pub mod linalg;
pub mod parabolic;
pub mod rootsys;
pub mod sampling;
pub mod slopecalc;

pub use linalg::Rat;
pub use parabolic::{Component, GradedPiece, ParabolicType};
pub use rootsys::{Family, IndexSet, LieType, RootSystem, RootVec, WeightVec};
pub use slopecalc::{CanonicalVerdict, SlopeDatum};

use thiserror::Error;

/// Errors shared by all modules of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("unrecognized type `{0}` (expected e.g. A3, B4, C2, D5, E6, F4, G2)")]
    UnknownType(String),
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("parabolic type must be a nonempty subset of 1..={rank}, got {got:?}")]
    BadParabolicType { rank: usize, got: Vec<usize> },
    #[error("index {index} is not in S = {s:?}")]
    NotInS { index: usize, s: Vec<usize> },
    #[error("o = {o:?} is not a nonempty connected subset of S = {s:?}")]
    BadEnlargement { o: Vec<usize>, s: Vec<usize> },
    #[error("slope datum is not dominant: delta[{index}] = {value} < 0")]
    NonDominantSlope { index: usize, value: String },
    #[error("slope datum is identically zero: semistable, no destabilizing parabolic")]
    SemistableSlope,
    #[error("graded piece has no Levi-dominant weight (internal error)")]
    NoDominantWeight,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("unsupported finite field: {0}")]
    BadField(String),
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
