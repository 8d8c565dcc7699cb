//! Quasipositive factorizations of the full twist and the torus diagrams of
//! the bridge trisected surfaces they describe.
//!
//! The pipeline runs factorization → [`diagram::assemble`] →
//! [`diagram::mini_stabilize`] → certification ([`diagram::check_transverse`],
//! [`diagram::bridge_params`], [`diagram::pairwise_links`],
//! [`diagram::verify_trivial`]) → [`invariants`].

pub mod braid;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod io;
pub mod quasipositive;

pub use braid::{BraidWord, NormalForm, Permutation};
pub use error::{Error, Result};
