//! Odd graphs `O_k`, middle-levels graphs `M_k`, and the combinatorics that
//! drives them: restricted-growth germs, labeled strings, the supplementary
//! arc factorization, uniform 2-factors, conflict-free spanning trees of
//! flippable tuples, and Hamilton cycle assembly — all with independent,
//! structure-agnostic verifiers.
//!
//! The crate is organized around small value types (`Germ`, `Bitstring`,
//! `DyckWord`, `LabeledString`) and free functions that mirror the pipeline:
//!
//! * [`germ`] — the `(k-1)`-digit restricted-growth strings that index the
//!   rotation classes of `V(O_k)`, with ranking and tree structure;
//! * [`labeled`] — the length-`n` number/`=` strings carrying arc colors;
//! * [`canon`] — canonical rotation of arbitrary weight-`k` bitstrings;
//! * [`tpp`] — tightly parenthesized permutations and the supplementation
//!   order `pi`;
//! * [`odd`] — implicit `O_k` adjacency and the arc factorization;
//! * [`two_factor`] — the vertical lists and the uniform 2-factor;
//! * [`hamilton`] — flippable tuples, the hypergraph spanning tree, and
//!   Hamilton cycle assembly in `O_k`;
//! * [`middle`] — the double-cover lift to `M_k` and its modular
//!   1-factorization;
//! * [`check`] — independent checkers used as oracles by everything else.
//!
//! Every structure the crate emits can be re-verified from raw bitmasks and
//! the adjacency rule alone; see the `verify` CLI subcommand and the
//! `examples/` directory for entry points.

pub mod bits;
pub mod canon;
pub mod check;
pub mod cli;
mod digits;
pub mod germ;
pub mod hamilton;
pub mod labeled;
pub mod middle;
pub mod odd;
pub mod tpp;
pub mod two_factor;

pub use bits::{Bitstring, DyckWord};
pub use canon::{canonical_rotation, germ_of_bitstring, CanonicalForm, GermTable};
pub use germ::{catalan, Germ};
pub use labeled::{bitstring_of_germ, label_bitstring, string_of_germ, underline_string};

/// Errors shared by the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("k={0} out of supported range 1..={1}")]
    KOutOfRange(usize, usize),
    #[error("invalid germ digits {digits:?} for k={k}")]
    InvalidGerm { k: usize, digits: Vec<u8> },
    #[error("rank {rank} out of range for k={k}: must be below {count}")]
    RankOutOfRange { k: usize, rank: u64, count: u64 },
    #[error("the all-zero germ is the tree root and has no parent")]
    NoParent,
    #[error("bitstring {0} is not canonical (leading 0-bit followed by a Dyck word)")]
    NotCanonical(String),
    #[error("bitstring has weight {got}, expected {want}")]
    WrongWeight { got: u32, want: u32 },
    #[error("not a Dyck word: {0}")]
    NotDyck(String),
    #[error("vertices {0:#x} and {1:#x} are not adjacent")]
    NotAdjacent(u64, u64),
    #[error("malformed parenthesized numbering: {0}")]
    MalformedNumbering(String),
    #[error("list generation step {step}: position {position} does not hold a number entry")]
    PositionNotNumber { step: usize, position: usize },
    #[error("supplementation mismatch at position {position}: relabeled entry is {got}, expected {want}")]
    SupplementMismatch { position: usize, got: u8, want: u8 },
    #[error("spanning tree construction failed: {0}")]
    SpanningTree(String),
    #[error("no flipping cycle exists for hyperedge {0} under the current constraints")]
    NoFlippingCycle(String),
    #[error("hamilton assembly exhausted all flipping-cycle choices")]
    AssemblyExhausted,
    #[error("k=2 is refused: the Petersen graph is hypohamiltonian")]
    PetersenRefused,
    #[error("lift inclusion violated between {0:#x} and {1:#x}")]
    LiftInclusion(u64, u64),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
