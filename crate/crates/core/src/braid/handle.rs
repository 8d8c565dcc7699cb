//! Dehornoy handle reduction, an independent decision procedure for the
//! word problem. Shares no code with the Garside machinery.

use super::word::BraidWord;

/// Outcome of running handle reduction to completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HandleOutcome {
    /// The reduced word is empty: the input is the identity braid.
    Trivial,
    /// The reduced word is nonempty and handle-free, hence σ-positive or
    /// σ-negative and in particular nontrivial.
    Nontrivial(Vec<i32>),
    /// Gave up after the step budget.
    Exhausted,
}

/// Finds the handle that closes first: the leftmost position `j` whose
/// letter σᵢ^{∓1} is preceded, after only letters of index > i, by σᵢ^{±1}.
/// Such a handle contains no nested σᵢ₊₁-handle, so it is permitted.
fn first_handle(w: &[i32]) -> Option<(usize, usize)> {
    // last_low[i] = last position holding a letter of index i, reset whenever
    // a letter of smaller index appears.
    let max_index = w.iter().map(|l| l.unsigned_abs() as usize).max()?;
    let mut last: Vec<Option<usize>> = vec![None; max_index + 1];
    for (j, &l) in w.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        if let Some(s) = last[i] {
            if w[s] == -l {
                return Some((s, j));
            }
        }
        last[i] = Some(j);
        for slot in last.iter_mut().skip(i + 1) {
            *slot = None;
        }
    }
    None
}

/// Reduces `σᵢ^e v σᵢ^{−e}` to `v'`, where every σᵢ₊₁^{±1} in `v` becomes
/// σᵢ₊₁^{−e} σᵢ^{±1} σᵢ₊₁^{e}.
fn reduce_handle(w: &[i32], start: usize, end: usize) -> Vec<i32> {
    let e = w[start].signum();
    let i = w[start].abs();
    let mut out = Vec::with_capacity(w.len() + 2 * (end - start));
    out.extend_from_slice(&w[..start]);
    for &l in &w[start + 1..end] {
        if l.abs() == i + 1 {
            out.extend_from_slice(&[-e * (i + 1), l.signum() * i, e * (i + 1)]);
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&w[end + 1..]);
    out
}

/// Runs handle reduction on `w` for at most `max_steps` handle reductions.
pub fn reduce(w: &BraidWord, max_steps: usize) -> HandleOutcome {
    let mut letters = w.letters().to_vec();
    for _ in 0..max_steps {
        match first_handle(&letters) {
            Some((s, e)) => letters = reduce_handle(&letters, s, e),
            None if letters.is_empty() => return HandleOutcome::Trivial,
            None => return HandleOutcome::Nontrivial(letters),
        }
    }
    HandleOutcome::Exhausted
}

/// Default budget generous enough for the word lengths used in this crate.
pub const DEFAULT_STEPS: usize = 5_000_000;

/// Whether `w` is the identity braid. Panics if the step budget runs out.
pub fn is_trivial(w: &BraidWord) -> bool {
    match reduce(w, DEFAULT_STEPS) {
        HandleOutcome::Trivial => true,
        HandleOutcome::Nontrivial(_) => false,
        HandleOutcome::Exhausted => panic!("handle reduction budget exhausted on {w:?}"),
    }
}

/// Equality of two words via triviality of `a · b⁻¹`.
pub fn equal_by_handles(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && is_trivial(&a.compose(&b.invert()).expect("same strands"))
}
