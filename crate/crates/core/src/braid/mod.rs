//! Exact computation in the braid groups `B_d`.

pub mod garside;
pub mod handle;
pub mod perm;
pub mod word;

pub use garside::{normal_form, NormalForm};
pub use perm::Permutation;
pub use word::BraidWord;

use crate::error::{Error, Result};

/// Decides whether `a` and `b` represent the same braid by comparing
/// Garside normal forms.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(garside::words_equal(a, b))
}

/// The full twist Δ² on `d` strands.
pub fn full_twist(d: usize) -> Result<BraidWord> {
    BraidWord::full_twist(d)
}
