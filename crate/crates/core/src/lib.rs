//! Braid monodromy toolkit: braid words with a free-group equality oracle,
//! factorizations and Hurwitz moves, Kummer-cover lifts, generification,
//! Zariski-van Kampen presentations and local singularity bookkeeping.

pub mod braid;
pub mod error;
pub mod free;
pub mod notation;
pub mod oracle;
pub mod par;
pub mod perm;

pub use braid::{BraidWord, MarkedBraidWord};
pub use error::{Error, Result};
pub use free::FreeWord;
pub use oracle::{braids_equal, ArtinImages};
pub mod factorization;
pub mod kummer;

pub use factorization::{Factorization, HurwitzMove};
pub use kummer::{DiagramSystem, Letters, LiftSpec};
pub mod generify;
pub mod zvk;
pub mod singular;
pub mod fixtures;
