//! Shared generators for integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transbridge::quasipositive::{
    hurwitz_move, standard_factorization, BandFactor, Direction, Factorization, Sign,
};
use transbridge::BraidWord;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, d: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..d as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(d, letters).unwrap()
}

fn max_conjugator(f: &Factorization) -> usize {
    f.factors()
        .iter()
        .map(|b| b.conjugator().len())
        .max()
        .unwrap_or(0)
}

/// A valid smooth factorization of Δ²_d reached from the standard one by
/// Hurwitz moves and a global conjugation, with every conjugator of length
/// at most `max_len`.
pub fn random_valid_factorization(rng: &mut impl Rng, d: usize, max_len: usize) -> Factorization {
    loop {
        let mut f = standard_factorization(d).unwrap();
        if rng.gen_bool(0.5) {
            let len = rng.gen_range(1..=2);
            let h = random_word(rng, d, len);
            f = f.conjugate_all(&h).unwrap();
        }
        let moves = rng.gen_range(1..=6);
        for _ in 0..moves {
            let i = rng.gen_range(1..f.len());
            let dir = if rng.gen_bool(0.5) {
                Direction::Right
            } else {
                Direction::Left
            };
            let next = hurwitz_move(&f, i, dir).unwrap();
            if max_conjugator(&next) <= max_len {
                f = next;
            }
        }
        if max_conjugator(&f) <= max_len {
            return f;
        }
    }
}

/// `σ₁, (σ₁σ₂)σ₁(σ₁σ₂)⁻¹, σ₁², (σ₁σ₂)σ₁(σ₁σ₂)⁻¹, σ₁`: the full twist in B₃
/// with one cusp band.
pub fn cusp_factorization_d3() -> Factorization {
    let e = BraidWord::identity(3);
    let c = BraidWord::new(3, vec![1, 2]).unwrap();
    let band = |g: &BraidWord, k| BandFactor::new(g.clone(), k, Sign::Positive).unwrap();
    Factorization::new(
        3,
        vec![
            band(&e, 1),
            band(&c, 1),
            band(&e, 2),
            band(&c, 1),
            band(&e, 1),
        ],
    )
    .unwrap()
}

/// The full twist in B₂ as a single cusp band σ₁².
pub fn cusp_factorization_d2() -> Factorization {
    let band = BandFactor::new(BraidWord::identity(2), 2, Sign::Positive).unwrap();
    Factorization::new(2, vec![band]).unwrap()
}

/// A word equal to `w`, obtained by random braid relations, commutations
/// and inserted cancelling pairs.
pub fn equal_variant(rng: &mut impl Rng, w: &BraidWord, steps: usize) -> BraidWord {
    let d = w.strands() as i32;
    let mut l = w.letters().to_vec();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if d >= 2 => {
                let g = rng.gen_range(1..d);
                let at = rng.gen_range(0..=l.len());
                let pair = if rng.gen_bool(0.5) { [g, -g] } else { [-g, g] };
                l.splice(at..at, pair);
            }
            1 => {
                // far commutation
                let spots: Vec<usize> = (0..l.len().saturating_sub(1))
                    .filter(|&i| (l[i].abs() - l[i + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&i) = spots.get(rng.gen_range(0..spots.len().max(1))) {
                    l.swap(i, i + 1);
                }
            }
            _ => {
                // σᵢσⱼσᵢ = σⱼσᵢσⱼ for |i − j| = 1, same signs
                let spots: Vec<usize> = (0..l.len().saturating_sub(2))
                    .filter(|&i| {
                        l[i] == l[i + 2]
                            && (l[i].abs() - l[i + 1].abs()).abs() == 1
                            && l[i].signum() == l[i + 1].signum()
                    })
                    .collect();
                if let Some(&i) = spots.get(rng.gen_range(0..spots.len().max(1))) {
                    let (a, b) = (l[i], l[i + 1]);
                    l[i] = b;
                    l[i + 1] = a;
                    l[i + 2] = b;
                }
            }
        }
    }
    BraidWord::new(w.strands(), l).unwrap()
}

/// A random diagram satisfying the incidence rules, with no geometric
/// meaning: `pairs` (−, +) point pairs and, per color, a random perfect
/// matching drawn as random polylines.
pub fn random_diagram(
    rng: &mut impl Rng,
    d: usize,
    pairs: usize,
) -> transbridge::diagram::TorusDiagram {
    use transbridge::diagram::{Arc, BridgePoint, Color, Point, PointSign, TorusDiagram, UNIT};
    loop {
        let n = 2 * pairs;
        let points: Vec<BridgePoint> = (0..n)
            .map(|i| BridgePoint {
                position: Point::new(rng.gen_range(0..UNIT), rng.gen_range(0..UNIT)),
                sign: if i % 2 == 0 {
                    PointSign::Minus
                } else {
                    PointSign::Plus
                },
            })
            .collect();
        let mut arcs = Vec::new();
        for color in Color::ALL {
            let mut ids: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                ids.swap(i, rng.gen_range(0..=i));
            }
            for pair in ids.chunks(2) {
                let inner = rng.gen_range(0..4);
                let mut vertices = vec![points[pair[0]].position];
                for _ in 0..inner {
                    vertices.push(Point::new(rng.gen_range(0..UNIT), rng.gen_range(0..UNIT)));
                }
                vertices.push(points[pair[1]].position);
                let wraps = (0..vertices.len() - 1)
                    .map(|_| (rng.gen_range(-1..=1), rng.gen_range(-1..=1)))
                    .collect();
                arcs.push(Arc {
                    color,
                    endpoints: [pair[0], pair[1]],
                    vertices,
                    wraps,
                });
            }
        }
        if let Ok(d) = TorusDiagram::new(d, points, arcs, rng.gen_range(0..5)) {
            return d;
        }
    }
}

/// A random factorization document payload: arbitrary letters, exponents
/// and signs, not necessarily a factorization of the full twist.
pub fn random_factorization(rng: &mut impl Rng) -> Factorization {
    let d = rng.gen_range(2..=6);
    let n = rng.gen_range(0..8);
    let factors = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..6);
            let g = random_word(rng, d, len);
            let k = rng.gen_range(1..=3);
            let sign = if rng.gen_bool(0.8) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            BandFactor::new(g, k, sign).unwrap()
        })
        .collect();
    Factorization::new(d, factors).unwrap()
}
