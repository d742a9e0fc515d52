//! Binary words with exactly two unbordered conjugates.
//!
//! The crate is layered bottom-up:
//!
//! * [`word`], [`border`], [`conjugate`], [`palindrome`]: binary words and
//!   their borders, periods, root decompositions, conjugates, Lyndon tests,
//!   local periodic roots and two-palindrome splits.
//! * [`fully_bordered`]: the unbordered-conjugate census, fully bordered
//!   pairs, the inductively defined family F with derivation traces, and the
//!   descent that maps a fully bordered pair to a shorter one.
//! * [`harness`]: brute-force oracles, exhaustive verification suites, census
//!   tables and golden-file regression.
//!
//! With the default `parallel` feature the harness fans out over word-space
//! shards on rayon; without it every suite runs sequentially. Both paths give
//! identical results.

pub mod border;
pub mod conjugate;
pub mod error;
pub mod fully_bordered;
pub mod harness;
pub mod palindrome;
pub mod par;
pub mod word;

pub use border::{
    borders, is_unbordered, period, periodic_root, root_decomposition, shortest_border,
    RootDecomposition,
};
pub use conjugate::{
    conjugate_at, cyclic_occurrences, is_lyndon, is_primitive, local_root, lyndon_conjugate,
    LocalRoot,
};
pub use error::{Error, Result};
pub use fully_bordered::{
    census, derive_trace, descend, f_membership, fb_pair_of, generate_f, is_fb_pair,
    is_fully_bordered, ConjugateCensus, DerivationStep, DerivationTrace, DescentCase,
    DescentResult, Family, FbPair, Pair,
};
pub use palindrome::{is_palindrome, two_palindrome_splits};
pub use par::Exec;
pub use word::{Letter, Order, Word};
