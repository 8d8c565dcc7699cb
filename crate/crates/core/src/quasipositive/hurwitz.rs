use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{BandFactor, Factorization};
use crate::braid::{normal_form, BraidWord, NormalForm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `(a, b) ↦ (a b a⁻¹, a)`
    Right,
    /// `(a, b) ↦ (b, b⁻¹ a b)`, the inverse of [`Direction::Right`].
    Left,
}

/// The shorter of the free reduction of `w` and its normal-form word, so
/// conjugators do not grow without bound along chains of moves.
fn shorten(w: BraidWord) -> BraidWord {
    let w = w.free_reduce();
    let nf = normal_form(&w).to_word();
    if nf.len() < w.len() {
        nf
    } else {
        w
    }
}

/// Applies a Hurwitz move to the factors at 1-indexed slots `i`, `i + 1`.
pub fn hurwitz_move(f: &Factorization, i: usize, dir: Direction) -> Result<Factorization> {
    let n = f.len();
    if i < 1 || i + 1 > n {
        return Err(Error::MoveIndex { index: i, len: n });
    }
    let a = &f.factors[i - 1];
    let b = &f.factors[i];
    let (first, second) = match dir {
        Direction::Right => {
            let g = shorten(a.expand().compose(&b.conjugator)?);
            (BandFactor::new(g, b.exponent, b.sign)?, a.clone())
        }
        Direction::Left => {
            let g = shorten(b.expand().invert().compose(&a.conjugator)?);
            (b.clone(), BandFactor::new(g, a.exponent, a.sign)?)
        }
    };
    let mut factors = f.factors.clone();
    factors[i - 1] = first;
    factors[i] = second;
    Factorization::new(f.strands, factors)
}

/// Canonical form of a factorization: the normal form of each expanded
/// factor, in order. Conjugators are not unique, so comparison happens on
/// group elements.
pub type OrbitKey = Vec<NormalForm>;

fn factor_key(b: &BandFactor) -> NormalForm {
    normal_form(&b.expand())
}

pub fn orbit_key(f: &Factorization) -> OrbitKey {
    f.factors.iter().map(factor_key).collect()
}

/// Bounded Hurwitz orbit, sorted by canonical key.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Canonical keys with one representative factorization each.
    pub members: Vec<(OrbitKey, Factorization)>,
    /// Exploration stopped at the node budget before the orbit closed.
    pub truncated: bool,
    /// Number of members first reached after 0, 1, 2, ... moves. The last
    /// entry is partial when the orbit is truncated.
    pub levels: Vec<usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &OrbitKey> {
        self.members.iter().map(|(k, _)| k)
    }
}

struct Node {
    fact: Factorization,
    key: OrbitKey,
}

fn neighbours(node: &Node) -> Vec<Node> {
    let n = node.fact.len();
    let mut out = Vec::with_capacity(2 * n.saturating_sub(1));
    for i in 1..n {
        for dir in [Direction::Right, Direction::Left] {
            let fact = hurwitz_move(&node.fact, i, dir).expect("index in range");
            let mut key = node.key.clone();
            key[i - 1] = factor_key(&fact.factors[i - 1]);
            key[i] = factor_key(&fact.factors[i]);
            out.push(Node { fact, key });
        }
    }
    out
}

/// Breadth-first closure of `f` under Hurwitz moves, visiting at most
/// `budget` distinct canonical factorizations.
///
/// Each level's neighbours are generated in parallel and merged in key order,
/// so the result does not depend on scheduling.
pub fn hurwitz_orbit(f: &Factorization, budget: usize) -> Orbit {
    let budget = budget.max(1);
    let start = Node {
        key: orbit_key(f),
        fact: f.clone(),
    };
    let mut seen: BTreeMap<OrbitKey, Factorization> = BTreeMap::new();
    seen.insert(start.key.clone(), start.fact.clone());
    let mut frontier = vec![start];
    let mut truncated = false;
    let mut levels = vec![1];

    'bfs: while !frontier.is_empty() {
        let expanded: Vec<Vec<Node>> = frontier.par_iter().map(neighbours).collect();
        let mut next: BTreeMap<OrbitKey, Factorization> = BTreeMap::new();
        for node in expanded.into_iter().flatten() {
            if !seen.contains_key(&node.key) {
                next.entry(node.key).or_insert(node.fact);
            }
        }
        let mut frontier_next = Vec::with_capacity(next.len());
        if !next.is_empty() {
            levels.push(0);
        }
        for (key, fact) in next {
            if seen.len() >= budget {
                truncated = true;
                break 'bfs;
            }
            seen.insert(key.clone(), fact.clone());
            frontier_next.push(Node { fact, key });
            *levels.last_mut().expect("level opened") += 1;
        }
        frontier = frontier_next;
    }

    Orbit {
        members: seen.into_iter().collect(),
        truncated,
        levels,
    }
}
