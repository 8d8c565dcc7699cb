//! Acceptance criteria 1–9. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use transbridge::braid::{self, handle};
use transbridge::diagram::{
    assemble, bridge_params, check_transverse, mini_stabilize, pairwise_links, verify_trivial, Arc,
    BridgePoint, Color, Point, PointSign, TorusDiagram, ViolationKind,
};
use transbridge::invariants::{genus_expected, ledger, transverse_sl};
use transbridge::io::{
    export_svg, parse_diagram, parse_factorization, serialize_diagram, serialize_factorization,
    DiagramDocument,
};
use transbridge::quasipositive::{
    hurwitz_move, hurwitz_orbit, standard_factorization, validate, BandFactor, Direction,
    Factorization,
};
use transbridge::BraidWord;

use common::{
    cusp_factorization_d2, cusp_factorization_d3, equal_variant, random_diagram,
    random_factorization, random_valid_factorization, random_word, rng,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(f: &Factorization) -> TorusDiagram {
    mini_stabilize(assemble(f).expect("assembles"))
}

/// Standard factorizations for d ≤ 4, plus randomized smooth ones.
fn smooth_corpus() -> Vec<Factorization> {
    let mut fs: Vec<Factorization> = (2..=4)
        .map(|d| standard_factorization(d).unwrap())
        .collect();
    let mut r = rng(3);
    for _ in 0..100 {
        fs.push(random_valid_factorization(&mut r, 3, 4));
    }
    for _ in 0..10 {
        fs.push(random_valid_factorization(&mut r, 4, 4));
    }
    fs
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for d in 2..=6 {
        let f = standard_factorization(d).unwrap();
        let r = validate(&f);
        ensure(r.product_ok, || {
            format!("d={d}: product differs from the full twist")
        })?;
        ensure(r.factor_count == d * d - d, || {
            format!("d={d}: {} factors", r.factor_count)
        })?;
        ensure(r.exponent_sum == (d * (d - 1)) as i64, || {
            format!("d={d}: exponent sum {}", r.exponent_sum)
        })?;
        let twist = braid::full_twist(d).unwrap();
        ensure(handle::equal_by_handles(&f.expand(), &twist), || {
            format!("d={d}: handle reduction disagrees")
        })?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("d=2..6 valid, handle oracle agrees, {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut shown = Vec::new();
    for d in 2..=4 {
        let f = standard_factorization(d).unwrap();
        let p = bridge_params(&build(&f)).map_err(|e| e.to_string())?;
        let s = 2 * f.conjugator_length();
        ensure(p.s == s, || format!("d={d}: s={} but 2·Σ|g|={s}", p.s))?;
        let want = (2 * d * (d - 1) + s, d, d * (d - 1) + s, d);
        ensure((p.b, p.c1, p.c2, p.c3) == want, || {
            format!("d={d}: got {p} s={}, want {want:?}", p.s)
        })?;
        if d == 2 {
            ensure((p.b, p.c1, p.c2, p.c3, p.s) == (4, 2, 2, 2, 0), || {
                format!("d=2: got {p} s={}", p.s)
            })?;
        }
        shown.push(format!("d={d} {p} s={}", p.s));
    }
    Ok(shown.join(", "))
}

fn criterion_3() -> Outcome {
    let corpus = smooth_corpus();
    for (i, f) in corpus.iter().enumerate() {
        let d = f.strands() as i64;
        let p = bridge_params(&build(f)).map_err(|e| e.to_string())?;
        let chi = p.euler_characteristic();
        ensure(chi == 3 * d - d * d, || {
            format!("#{i} d={d}: χ={chi} from {p}")
        })?;
        let genus = (d - 1) * (d - 2) / 2;
        ensure(chi % 2 == 0 && 1 - chi / 2 == genus, || {
            format!("#{i} d={d}: implied genus from χ={chi}")
        })?;
        ensure(genus_expected(f.strands()).unwrap() as i64 == genus, || {
            format!("#{i}: genus_expected")
        })?;
    }
    Ok(format!("{} smooth diagrams", corpus.len()))
}

fn criterion_4() -> Outcome {
    let mut corpus = smooth_corpus();
    corpus.push(cusp_factorization_d2());
    corpus.push(cusp_factorization_d3());
    let mut counts = std::collections::BTreeSet::new();
    for (i, f) in corpus.iter().enumerate() {
        let d = f.strands() as i64;
        let diag = build(f);
        let l = ledger(&diag).map_err(|e| e.to_string())?;
        let p = l.params;
        counts.insert(p.s);
        let sl1 = transverse_sl(&BraidWord::identity(f.strands()));
        ensure(sl1 == -d && l.sl[0] == -d, || {
            format!("#{i}: sl₁={}", l.sl[0])
        })?;
        let sl = [-(p.c1 as i64), -(p.c2 as i64), -(p.c3 as i64)];
        ensure(l.sl == sl, || format!("#{i}: sl {:?} vs −c {:?}", l.sl, sl))?;
        // the sum identity is χ = 3d − d² in disguise, so smooth surfaces only
        let sum: i64 = sl.iter().sum();
        ensure(!l.smooth || sum == d * d - 3 * d - p.b as i64, || {
            format!("#{i}: Σsl={sum}, b={}", p.b)
        })?;
        ensure(l.passed(), || format!("#{i}: ledger {:?}", l.checks))?;
    }
    Ok(format!(
        "{} diagrams, stabilization counts {:?}",
        corpus.len(),
        counts
    ))
}

const M: Point = Point {
    x: 500_000,
    y: 600_000,
};
const P: Point = Point {
    x: 500_000,
    y: 400_000,
};

fn arc(color: Color, endpoints: [usize; 2], path: &[Point], wraps: &[(i64, i64)]) -> Arc {
    Arc {
        color,
        endpoints,
        vertices: path.to_vec(),
        wraps: wraps.to_vec(),
    }
}

fn pair_points() -> Vec<BridgePoint> {
    vec![
        BridgePoint {
            position: M,
            sign: PointSign::Minus,
        },
        BridgePoint {
            position: P,
            sign: PointSign::Plus,
        },
    ]
}

fn good_a() -> Arc {
    arc(Color::A, [0, 1], &[M, P], &[(0, 1)])
}

fn good_b() -> Arc {
    arc(Color::B, [0, 1], &[M, P], &[(-1, 0)])
}

fn good_c() -> Arc {
    arc(
        Color::C,
        [0, 1],
        &[M, Point::new(450_000, 500_000), P],
        &[(0, 0), (0, 0)],
    )
}

fn one_pair(a: Arc, b: Arc, c: Arc) -> TorusDiagram {
    TorusDiagram::new(1, pair_points(), vec![a, b, c], 0).unwrap()
}

type Located = Vec<(usize, Option<usize>, ViolationKind)>;

fn violating_fixtures() -> Vec<(&'static str, TorusDiagram, Located)> {
    use ViolationKind::*;
    let p = Point::new;
    let mut out = vec![
        (
            "A descends",
            one_pair(
                arc(Color::A, [0, 1], &[M, P], &[(0, 0)]),
                good_b(),
                good_c(),
            ),
            vec![(0, Some(0), NotMonotone)],
        ),
        (
            "A dips in its middle segment",
            one_pair(
                arc(
                    Color::A,
                    [0, 1],
                    &[M, p(500_000, 800_000), p(520_000, 700_000), P],
                    &[(0, 0), (0, 0), (0, 1)],
                ),
                good_b(),
                good_c(),
            ),
            vec![(0, Some(1), NotMonotone)],
        ),
        (
            "A runs horizontally",
            one_pair(
                arc(
                    Color::A,
                    [0, 1],
                    &[M, p(600_000, 600_000), P],
                    &[(0, 0), (0, 1)],
                ),
                good_b(),
                good_c(),
            ),
            vec![(0, Some(0), NotMonotone)],
        ),
        (
            "A wraps downward",
            one_pair(
                arc(Color::A, [0, 1], &[M, P], &[(0, -1)]),
                good_b(),
                good_c(),
            ),
            vec![(0, Some(0), NotMonotone)],
        ),
        (
            "B runs right",
            one_pair(
                good_a(),
                arc(Color::B, [0, 1], &[M, P], &[(1, 0)]),
                good_c(),
            ),
            vec![(1, Some(0), NotMonotone)],
        ),
        (
            "B has a vertical segment",
            one_pair(
                good_a(),
                arc(
                    Color::B,
                    [0, 1],
                    &[M, p(500_000, 500_000), P],
                    &[(0, 0), (-1, 0)],
                ),
                good_c(),
            ),
            vec![(1, Some(0), NotMonotone)],
        ),
        (
            "C climbs the foliation",
            one_pair(
                good_a(),
                good_b(),
                arc(
                    Color::C,
                    [0, 1],
                    &[M, p(300_000, 700_000), P],
                    &[(0, 0), (0, 0)],
                ),
            ),
            vec![(2, Some(0), NotMonotone)],
        ),
        (
            "C runs along a leaf",
            one_pair(
                good_a(),
                good_b(),
                arc(
                    Color::C,
                    [0, 1],
                    &[M, p(550_000, 650_000), P],
                    &[(0, 0), (0, 0)],
                ),
            ),
            vec![(2, Some(0), NotMonotone)],
        ),
        (
            "A stored from + to − runs the wrong way",
            one_pair(
                arc(Color::A, [1, 0], &[P, M], &[(0, 0)]),
                good_b(),
                good_c(),
            ),
            vec![(0, Some(0), NotMonotone)],
        ),
    ];

    // two A arcs joining equal signs
    let m2 = p(200_000, 600_000);
    let p2 = p(200_000, 400_000);
    let points = vec![
        BridgePoint {
            position: M,
            sign: PointSign::Minus,
        },
        BridgePoint {
            position: P,
            sign: PointSign::Plus,
        },
        BridgePoint {
            position: m2,
            sign: PointSign::Minus,
        },
        BridgePoint {
            position: p2,
            sign: PointSign::Plus,
        },
    ];
    let arcs = vec![
        arc(Color::A, [0, 2], &[M, m2], &[(1, 0)]),
        arc(Color::A, [1, 3], &[P, p2], &[(1, 0)]),
        good_b(),
        arc(Color::B, [2, 3], &[m2, p2], &[(-1, 0)]),
        good_c(),
        arc(
            Color::C,
            [2, 3],
            &[m2, p(150_000, 500_000), p2],
            &[(0, 0), (0, 0)],
        ),
    ];
    out.push((
        "A joins equal signs",
        TorusDiagram::new(2, points, arcs, 0).unwrap(),
        vec![(0, None, EndpointSigns), (1, None, EndpointSigns)],
    ));
    out
}

/// A constructed diagram with one A vertex pushed below its predecessor.
fn perturbed_fixture() -> (TorusDiagram, Located) {
    let diag = build(&standard_factorization(3).unwrap());
    let mut arcs = diag.arcs().to_vec();
    let (k, a) = arcs
        .iter_mut()
        .enumerate()
        .find(|(_, a)| {
            a.color == Color::A
                && a.vertices.len() >= 3
                && a.wraps[0] == (0, 0)
                && a.wraps[1] == (0, 0)
                && a.vertices[0].y >= 10
        })
        .expect("an A arc with an interior vertex");
    a.vertices[1].y = a.vertices[0].y - 5;
    let diag = TorusDiagram::new(
        diag.strands(),
        diag.bridge_points().to_vec(),
        arcs,
        diag.stabilization_count(),
    )
    .unwrap();
    (diag, vec![(k, Some(0), ViolationKind::NotMonotone)])
}

fn criterion_5() -> Outcome {
    let mut corpus = smooth_corpus();
    corpus.push(cusp_factorization_d2());
    corpus.push(cusp_factorization_d3());
    for (i, f) in corpus.iter().enumerate() {
        let r = check_transverse(&build(f));
        ensure(r.passed(), || format!("generated #{i}: {:?}", r.violations))?;
    }
    let base = one_pair(good_a(), good_b(), good_c());
    ensure(check_transverse(&base).passed(), || {
        "unperturbed fixture fails".into()
    })?;
    let mut fixtures = violating_fixtures();
    let (perturbed, where_) = perturbed_fixture();
    fixtures.push((
        "constructed diagram with a dipping A vertex",
        perturbed,
        where_,
    ));
    for (name, diag, want) in &fixtures {
        let r = check_transverse(diag);
        let got: Located = r
            .violations
            .iter()
            .map(|v| (v.arc, v.segment, v.kind))
            .collect();
        ensure(&got == want, || {
            format!("{name}: got {got:?}, want {want:?}")
        })?;
    }
    Ok(format!(
        "{} generated diagrams pass, {} violating fixtures located",
        corpus.len(),
        fixtures.len()
    ))
}

fn criterion_6() -> Outcome {
    let mut fs: Vec<Factorization> = (2..=4)
        .map(|d| standard_factorization(d).unwrap())
        .collect();
    let mut r = rng(6);
    for _ in 0..20 {
        fs.push(random_valid_factorization(&mut r, 3, 4));
    }
    for _ in 0..10 {
        fs.push(random_valid_factorization(&mut r, 4, 4));
    }
    fs.push(cusp_factorization_d2());
    fs.push(cusp_factorization_d3());
    for (i, f) in fs.iter().enumerate() {
        let links = pairwise_links(&build(f), f).map_err(|e| e.to_string())?;
        let t = verify_trivial(&links, f);
        ensure(t.passed(), || format!("#{i}: {t:?}"))?;
    }

    let mut caught = 0;
    let trials = 100;
    for _ in 0..trials {
        let d = r.gen_range(3..=4);
        let f = random_valid_factorization(&mut r, d, 4);
        let diag = build(&f);
        let i = r.gen_range(0..f.len());
        let b = &f.factors()[i];
        let tweak = if r.gen_bool(0.5) { 2 } else { -2 };
        let g = b
            .conjugator()
            .compose(&BraidWord::generator(d, tweak).unwrap())
            .unwrap();
        let mut mutated = f.clone();
        mutated
            .replace_factor(i, BandFactor::new(g, b.exponent(), b.sign()).unwrap())
            .unwrap();
        let links = pairwise_links(&diag, &mutated).map_err(|e| e.to_string())?;
        if !verify_trivial(&links, &mutated).l3_ok {
            caught += 1;
        }
    }
    ensure(caught == trials, || {
        format!("mutations caught {caught}/{trials}")
    })?;
    Ok(format!(
        "{} factorizations certified, mutations caught {caught}/{trials}",
        fs.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut moves = 0;
    while moves < 1000 {
        let d = r.gen_range(2..=4);
        let mut f = random_valid_factorization(&mut r, d, 4);
        for _ in 0..50 {
            let i = r.gen_range(1..f.len());
            let dir = if r.gen_bool(0.5) {
                Direction::Right
            } else {
                Direction::Left
            };
            let next = hurwitz_move(&f, i, dir).map_err(|e| e.to_string())?;
            ensure(braid::equal(&f.expand(), &next.expand()).unwrap(), || {
                format!("move {moves} at slot {i} changed the product")
            })?;
            moves += 1;
            f = next;
        }
    }

    let d2 = standard_factorization(2).unwrap();
    let o = hurwitz_orbit(&d2, 1000);
    ensure(o.len() == 1 && !o.truncated, || {
        format!("d=2 orbit size {}", o.len())
    })?;

    let f3 = standard_factorization(3).unwrap();
    let runs: Vec<Vec<String>> = (0..5)
        .map(|_| {
            hurwitz_orbit(&f3, 2000)
                .members
                .iter()
                .map(|(_, f)| serialize_factorization(f))
                .collect()
        })
        .collect();
    ensure(runs.iter().all(|x| x == &runs[0]), || {
        "orbit output differs between runs".into()
    })?;
    Ok(format!(
        "{moves} moves preserve the product, d=2 orbit size 1, 5 identical runs of {} members",
        runs[0].len()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut r = rng(8);
    let (mut equal_pairs, mut agree) = (0, 0);
    let total = 10_000;
    for n in 0..total {
        let d = r.gen_range(2..=6);
        let (a, b) = if n % 2 == 0 {
            let la = r.gen_range(0..=40);
            let lb = r.gen_range(0..=40);
            (random_word(&mut r, d, la), random_word(&mut r, d, lb))
        } else {
            let la = r.gen_range(0..=30);
            let a = random_word(&mut r, d, la);
            let mut b = equal_variant(&mut r, &a, 12);
            if b.len() > 40 {
                b = a.clone();
            }
            (a, b)
        };
        let garside = braid::equal(&a, &b).unwrap();
        let handles = handle::equal_by_handles(&a, &b);
        if garside == handles {
            agree += 1;
        } else {
            return Err(format!("disagreement on {a} vs {b}: garside {garside}"));
        }
        if garside {
            equal_pairs += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!(
        "{agree}/{total} agree ({equal_pairs} equal pairs), {t:.2?}"
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    for i in 0..1000 {
        let f = random_factorization(&mut r);
        let text = serialize_factorization(&f);
        let back = parse_factorization(&text).map_err(|e| format!("#{i}: {e}"))?;
        ensure(back == f, || format!("factorization #{i} changed"))?;
        ensure(serialize_factorization(&back) == text, || {
            format!("#{i}: text changed")
        })?;

        let pairs = r.gen_range(0..5);
        let diagram = random_diagram(&mut r, f.strands(), pairs);
        let factorization = r.gen_bool(0.5).then(|| f.clone());
        let doc = DiagramDocument {
            diagram,
            factorization,
        };
        let text = serialize_diagram(&doc);
        let back = parse_diagram(&text).map_err(|e| format!("diagram #{i}: {e}"))?;
        ensure(back == doc, || format!("diagram #{i} changed"))?;
        ensure(serialize_diagram(&back) == text, || {
            format!("diagram #{i}: text changed")
        })?;
    }

    let mut built = Vec::new();
    for f in [
        standard_factorization(2).unwrap(),
        standard_factorization(3).unwrap(),
        cusp_factorization_d3(),
    ] {
        let doc = DiagramDocument {
            diagram: build(&f),
            factorization: Some(f.clone()),
        };
        let back = parse_diagram(&serialize_diagram(&doc)).map_err(|e| e.to_string())?;
        ensure(back == doc, || "constructed diagram changed".into())?;
        built.push(f);
    }
    for f in &built {
        let first = export_svg(&build(f));
        for _ in 0..3 {
            ensure(export_svg(&build(f)) == first, || {
                "SVG differs between runs".into()
            })?;
        }
    }
    Ok("1000 factorization and 1000 diagram documents round-trip, SVG stable".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("factorization validation", criterion_1),
        ("bridge parameters", criterion_2),
        ("Euler characteristic and genus", criterion_3),
        ("self-linking", criterion_4),
        ("transversality", criterion_5),
        ("triviality certificates", criterion_6),
        ("Hurwitz moves", criterion_7),
        ("word problem oracle agreement", criterion_8),
        ("document I/O", criterion_9),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{t:.1?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why}) [{t:.1?}]", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
