//! Left-greedy Garside normal form in the Artin braid group, with Δ the
//! positive half twist.
//!
//! Simple elements (positive permutation braids) are handled internally as
//! position maps: `map[p]` is the final position of the strand that starts
//! at position `p` when the braid is read left to right.

use super::perm::Permutation;
use super::word::BraidWord;

/// Canonical form `Δ^delta_power · A₁ ⋯ A_k`.
///
/// Each `Aᵢ` is a proper simple element (neither trivial nor Δ), given by its
/// underlying permutation, and every adjacent pair is left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Serializes back into a braid word: the half-twist word raised to
    /// `delta_power`, followed by a positive word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let half = BraidWord::half_twist(self.strands).expect("strands >= 1");
        let mut word = half.pow(self.delta_power);
        for f in &self.factors {
            let map = Simple::from_permutation(f);
            word.extend(&map.to_word(self.strands));
        }
        word
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Simple(Vec<u8>);

impl Simple {
    fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    fn delta(n: usize) -> Self {
        Self((0..n as u8).rev().collect())
    }

    fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.0.swap(i - 1, i);
        s
    }

    /// Δσᵢ⁻¹, the simple complement of σᵢ in Δ.
    fn delta_over_generator(n: usize, i: usize) -> Self {
        let mut s = Self::delta(n);
        // apply σᵢ after Δ: swap the values i-1 and i
        for v in s.0.iter_mut() {
            if *v as usize == i - 1 {
                *v = i as u8;
            } else if *v as usize == i {
                *v = (i - 1) as u8;
            }
        }
        s
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == n - 1 - i)
    }

    /// Conjugation by Δ.
    fn flip(&self) -> Self {
        let n = self.0.len() as u8;
        Self(self.0.iter().rev().map(|&v| n - 1 - v).collect())
    }

    fn inverse_map(&self) -> Vec<u8> {
        let mut inv = vec![0; self.0.len()];
        for (p, &v) in self.0.iter().enumerate() {
            inv[v as usize] = p as u8;
        }
        inv
    }

    /// Generators that are left divisors: the strands at positions i-1, i cross.
    fn starting_set(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.0.len()).filter(|&i| self.0[i - 1] > self.0[i])
    }

    /// Bitmask of generators that are right divisors.
    fn finishing_mask(&self) -> u64 {
        let inv = self.inverse_map();
        (1..inv.len())
            .filter(|&i| inv[i - 1] > inv[i])
            .fold(0, |m, i| m | (1 << i))
    }

    /// `self · σᵢ`; caller guarantees the result is simple.
    fn push_generator(&mut self, i: usize) {
        for v in self.0.iter_mut() {
            if *v as usize == i - 1 {
                *v = i as u8;
            } else if *v as usize == i {
                *v = (i - 1) as u8;
            }
        }
    }

    /// `σᵢ⁻¹ · self`; caller guarantees σᵢ is a left divisor.
    fn pop_generator(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    fn to_word(&self, strands: usize) -> BraidWord {
        let mut rest = self.clone();
        let mut letters = Vec::new();
        loop {
            let Some(i) = rest.starting_set().next() else {
                break;
            };
            letters.push(i as i32);
            rest.pop_generator(i);
        }
        BraidWord::new(strands, letters).expect("indices come from the map")
    }

    /// Position map ↔ underlying permutation: the underlying permutation of a
    /// braid is the inverse of its position map.
    fn to_permutation(&self) -> Permutation {
        Permutation::from_images(self.inverse_map().into_iter().map(usize::from).collect())
            .expect("simple elements are bijections")
    }

    fn from_permutation(p: &Permutation) -> Self {
        Self(p.inverse().images().iter().map(|&v| v as u8).collect())
    }
}

/// Moves generators from the front of `b` onto the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let mut moved = false;
    loop {
        let fin = a.finishing_mask();
        let next = b.starting_set().find(|&i| fin & (1 << i) == 0);
        match next {
            Some(i) => {
                a.push_generator(i);
                b.pop_generator(i);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Left normal form of the positive product of `simples`.
///
/// Appending a simple to a normal form only needs one right-to-left pass of
/// left-weighting, and the pass stops at the first pair that is already
/// left-weighted.
fn normalize_positive(simples: impl IntoIterator<Item = Simple>) -> Vec<Simple> {
    let mut out: Vec<Simple> = Vec::new();
    for s in simples {
        if s.is_identity() {
            continue;
        }
        out.push(s);
        for j in (1..out.len()).rev() {
            let (left, right) = out.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
        }
        while out.last().is_some_and(Simple::is_identity) {
            out.pop();
        }
    }
    out
}

/// Computes the left normal form of `w`.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    if n < 2 {
        return NormalForm {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let letters = w.letters();
    let negatives = letters.iter().filter(|&&l| l < 0).count();

    // σᵢ⁻¹ = Δ⁻¹ (Δσᵢ⁻¹). Every Δ⁻¹ is pulled to the front, conjugating each
    // factor to its left by Δ on the way.
    let mut negatives_right = negatives;
    let simples = letters.iter().map(|&l| {
        let i = l.unsigned_abs() as usize;
        let s = if l > 0 {
            Simple::generator(n, i)
        } else {
            negatives_right -= 1;
            Simple::delta_over_generator(n, i)
        };
        if negatives_right % 2 == 1 {
            s.flip()
        } else {
            s
        }
    });
    let simples: Vec<Simple> = simples.collect();
    let factors = normalize_positive(simples);

    let leading_deltas = factors.iter().take_while(|f| f.is_delta()).count();
    NormalForm {
        strands: n,
        delta_power: leading_deltas as i64 - negatives as i64,
        factors: factors[leading_deltas..]
            .iter()
            .map(Simple::to_permutation)
            .collect(),
    }
}

/// Word-problem decision: both words name the same braid.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && normal_form(a) == normal_form(b)
}
