//! Acceptance checks. Runs without the test harness so that every
//! criterion prints exactly one PASS or FAIL line; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use artin_core::dihedral::{self, delta_conjugates_generators, garside, is_central, DihedralWord};
use artin_core::graph::big_chunks;
use artin_core::invariants::{aut_acylindrically_hyperbolic, compare, profile, CompareVerdict, ReasonCode};
use artin_core::jsj::{build_jsj, collapse_jsj, dihedral_jsj, Color, GroupDescriptor, JsjError};
use artin_core::presentation::{abelianize, artin_presentation, gog_presentation, smith_normal_form, IntegerMatrix};
use artin_core::split::{is_valid_visual_split, splits_over_cyclic, SplitKind};
use artin_core::{LabelledGraph, VertexId, Word};
use common::Case;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn tri_leaves() -> LabelledGraph {
    LabelledGraph::from_edges(&[("a", "c", 3), ("c", "e", 2), ("a", "e", 4), ("a", "b", 2), ("a", "d", 6)]).unwrap()
}

fn p3() -> LabelledGraph {
    LabelledGraph::from_edges(&[("a", "b", 3), ("b", "c", 2)]).unwrap()
}

fn tri() -> LabelledGraph {
    LabelledGraph::from_edges(&[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap()
}

fn star(l1: u32, l2: u32, l3: u32) -> LabelledGraph {
    LabelledGraph::from_edges(&[("s", "x", l1), ("s", "y", l2), ("s", "z", l3)]).unwrap()
}

fn id(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

fn chunk_oracle(corpus: &[Case]) -> Outcome {
    for c in corpus {
        let d = big_chunks(&c.graph).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<usize>> = d
            .chunks
            .iter()
            .map(|ch| {
                let mut v = ch.vertices.clone();
                v.sort_unstable();
                v
            })
            .collect();
        ensure!(got.len() == d.chunks.len(), "duplicate chunk in {:?}", c.edges);
        ensure!(got == common::oracle_chunks(c), "chunks differ on {:?}", c.edges);
        ensure!(d.separating == common::oracle_separating(c), "separating vertices differ on {:?}", c.edges);
    }
    Ok(format!("{} graphs", corpus.len()))
}

/// Independent check of a visual splitting witness.
fn witness_ok(c: &Case, v: &VertexId, left: &[VertexId], right: &[VertexId]) -> bool {
    let index = |x: &VertexId| x.as_str()[1..].parse::<usize>().unwrap();
    let mask = |xs: &[VertexId]| xs.iter().fold(0u16, |m, x| m | 1 << index(x));
    let (l, r, v) = (mask(left), mask(right), 1u16 << index(v));
    let proper = l != c.all() && r != c.all();
    let (left_only, right_only) = (l & !v, r & !v);
    let no_cross = (0..c.n).all(|u| (left_only >> u) & 1 == 0 || c.adj[u] & right_only == 0);
    l & r == v
        && l | r == c.all()
        && proper
        && no_cross
        && common::connected_within(&c.adj, l)
        && common::connected_within(&c.adj, r)
}

fn splittability(corpus: &[Case]) -> Outcome {
    let mut visual = 0;
    for c in corpus {
        let verdict = splits_over_cyclic(&c.graph).map_err(|e| e.to_string())?;
        let expect_no_split = c.n >= 3 && c.is_connected() && common::oracle_separating(c).is_empty();
        ensure!(
            matches!(verdict.kind, SplitKind::NoSplit) == expect_no_split,
            "verdict {} on {:?}",
            verdict.kind.tag(),
            c.edges
        );
        if let SplitKind::VisualSplit { vertex, left, right } = &verdict.kind {
            visual += 1;
            ensure!(is_valid_visual_split(&c.graph, vertex.as_str(), left, right), "invalid witness on {:?}", c.edges);
            ensure!(witness_ok(c, vertex, left, right), "oracle rejects witness on {:?}", c.edges);
        }
    }
    Ok(format!("{} graphs, {visual} visual witnesses checked", corpus.len()))
}

fn jsj_structure() -> Outcome {
    let j = build_jsj(&tri_leaves()).map_err(|e| e.to_string())?;
    let counts = (j.count(Color::Black), j.count(Color::White), j.count(Color::Red), j.loop_count());
    ensure!(counts == (3, 1, 1, 1), "black/white/red/loops = {counts:?}");

    let lp = j.edges.iter().find(|e| e.is_loop()).unwrap();
    ensure!(lp.stable_letter.as_deref() == Some("b"), "loop stable letter {:?}", lp.stable_letter);

    let red = j.vertices.iter().position(|v| v.color == Color::Red).unwrap();
    let e = j.edges.iter().find(|e| e.target == red || e.source == red).unwrap();
    let (black_img, red_img) =
        if e.target == red { (&e.source_image, &e.target_image) } else { (&e.target_image, &e.source_image) };
    ensure!(red_img.to_string() == "r_a_d^3" && black_img.to_string() == "z_a_d", "red edge {black_img} = {red_img}");
    let GroupDescriptor::CyclicOnWord { word: r, .. } = &j.vertices[red].group else {
        return Err("red vertex group is not cyclic".into());
    };
    ensure!(r.to_string() == "a d", "r = {r}");
    let black = if e.target == red { e.source } else { e.target };
    let GroupDescriptor::FreeAbelianPair { central, .. } = &j.vertices[black].group else {
        return Err("braided black vertex is not <a, z>".into());
    };
    // z for label 6 is (ad)^3, which must equal prod(a, d, 6) in the dihedral.
    let as_ab =
        |w: &Word| DihedralWord::new(6, w.map_symbols(|s| if s == "d" { "b".into() } else { s.into() })).unwrap();
    ensure!(
        dihedral::words_equal(&as_ab(central), &as_ab(&Word::alternating("a", "d", 6))).unwrap(),
        "z_a_d = {central} is not prod(a,d,6)"
    );

    let k = collapse_jsj(&j);
    let counts = (k.count(Color::Black), k.count(Color::White), k.count(Color::Red), k.loop_count());
    ensure!(counts == (3, 1, 0, 0), "collapsed black/white/red/loops = {counts:?}");
    ensure!(k.edges.len() == 3, "collapsed edge count {}", k.edges.len());
    Ok("J: 3 black, 1 white, 1 red, 1 loop; collapse: 3 black, 1 white".into())
}

fn abelianization(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.05..0.6);
        let c = common::random_connected(n, p, rng);
        let direct = abelianize(&artin_presentation(&c.graph));
        let j = build_jsj(&c.graph).map_err(|e| e.to_string())?;
        let via_j = abelianize(&gog_presentation(&j).map_err(|e| e.to_string())?);
        let via_collapse = abelianize(&gog_presentation(&collapse_jsj(&j)).map_err(|e| e.to_string())?);
        let rank = common::oracle_odd_components(&c);
        ensure!(
            direct.free_rank == rank && direct.torsion.is_empty(),
            "A_G ab = {direct}, expected Z^{rank} on {:?}",
            c.edges
        );
        ensure!(via_j == direct, "J ab = {via_j} vs {direct} on {:?}", c.edges);
        ensure!(via_collapse == direct, "collapsed ab = {via_collapse} vs {direct} on {:?}", c.edges);
    }
    Ok("500 random graphs on 3 to 8 vertices".into())
}

fn dihedral_presentations() -> Outcome {
    // <x, y | x^2 = y^n> for odd n, <x, y | x y^m x^-1 = y^m> for n = 2m.
    for n in [3u32, 4, 5, 6, 8] {
        let (lhs, rhs) = if n % 2 == 1 {
            ("x^2".to_string(), format!("y^{n}"))
        } else {
            let m = n / 2;
            (format!("x y^{m} x^-1"), format!("y^{m}"))
        };
        let relator = Word::parse(&lhs).unwrap().concat(&Word::parse(&rhs).unwrap().inverse());
        let expected = format!("gen: x y\nrel: {relator}\n");
        let j = dihedral_jsj(n).map_err(|e| e.to_string())?;
        let got = gog_presentation(&j).map_err(|e| e.to_string())?.to_string();
        ensure!(got == expected, "n = {n}: got {got:?}, expected {expected:?}");
    }
    ensure!(dihedral_jsj(2) == Err(JsjError::NoJsjExists), "label 2 did not report NoJsjExists");
    Ok("n = 3, 4, 5, 6, 8 verbatim; n = 2 has no JSJ".into())
}

fn random_ab_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let mut w = Word::new();
    for _ in 0..rng.gen_range(0..=max_len) {
        let s = if rng.gen_bool(0.5) { "a" } else { "b" };
        let e = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2);
        w.push(s, e);
    }
    w
}

fn dihedral_engine(rng: &mut ChaCha8Rng) -> Outcome {
    for n in 3u32..=8 {
        let relator = Word::alternating("a", "b", n).concat(&Word::alternating("b", "a", n).inverse());
        for _ in 0..1000 {
            let w = random_ab_word(rng, 12);
            let cut = rng.gen_range(0..=w.len());
            let r = if rng.gen_bool(0.5) { relator.clone() } else { relator.inverse() };
            let inserted = Word(w.0[..cut].to_vec()).concat(&r).concat(&Word(w.0[cut..].to_vec()));
            let before = dihedral::normal_form(&DihedralWord::new(n, w.clone()).unwrap());
            let after = dihedral::normal_form(&DihedralWord::new(n, inserted).unwrap());
            ensure!(before == after, "n = {n}: inserting the relator into {w} changed the normal form");
        }
    }
    for n in 3u32..=10 {
        let g = garside(n).map_err(|e| e.to_string())?;
        ensure!(is_central(&g.z), "z not central for n = {n}");
        ensure!(is_central(&g.delta) == (n % 2 == 0), "centrality of Delta wrong for n = {n}");
    }
    for n in [3u32, 5, 7, 9] {
        ensure!(delta_conjugates_generators(n) == Ok(true), "Delta a Delta^-1 != b for n = {n}");
    }
    Ok("6000 relator insertions; centre and Delta-conjugation for n = 3..10".into())
}

fn root_bound() -> Outcome {
    let mut checked = Vec::new();
    for (n, l, k) in [(4u32, 6usize, 4u32), (6, 5, 5)] {
        let report = dihedral::root_bound_search(n, l, k).map_err(|e| e.to_string())?;
        ensure!(report.counterexamples.is_empty(), "n = {n}: counterexamples {:?}", report.counterexamples);
        let w = &report.witness;
        ensure!(
            w.degree == n / 2 && w.power == Some((0, 1)) && w.primitive,
            "n = {n}: witness (ab)^{} gave {:?}",
            w.degree,
            w.power
        );
        checked.push(format!("n={n}: {} elements", report.distinct_elements));
    }
    Ok(format!("no roots above degree m ({}); (ab)^m = z confirmed", checked.join(", ")))
}

fn verdicts(corpus: &[Case], rng: &mut ChaCha8Rng) -> Outcome {
    let pr = |g: &LabelledGraph| profile(g).map_err(|e| e.to_string());
    let v = compare(&pr(&star(2, 4, 5))?, &pr(&star(2, 6, 5))?);
    ensure!(v.reason_codes() == [ReasonCode::BraidedLeafLabelMismatch], "STAR(2,4,5) vs STAR(2,6,5): {v:?}");
    let v = compare(&pr(&star(2, 2, 3))?, &pr(&star(2, 3, 3))?);
    ensure!(
        v.reason_codes() == [ReasonCode::ToralLeafCountMismatch, ReasonCode::AbelianizationMismatch],
        "STAR(2,2,3) vs STAR(2,3,3): {v:?}"
    );
    let mut guarded = 0;
    for c in corpus.iter().filter(|c| c.n >= 3) {
        let p = pr(&c.graph)?;
        let q = pr(&common::relabel(&c.graph, rng))?;
        ensure!(!compare(&p, &q).is_non_isomorphic(), "relabelled copy judged non-isomorphic: {:?}", c.edges);
        ensure!(matches!(compare(&q, &p), CompareVerdict::Consistent { .. }), "asymmetric verdict on {:?}", c.edges);
        guarded += 1;
    }
    Ok(format!("both example verdicts; soundness guard on {guarded} graphs"))
}

fn snf(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=5);
        let density = rng.gen_range(0.3..1.0);
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(density) { rng.gen_range(-6..=6) } else { 0 }).collect())
            .collect();
        let got = smith_normal_form(&IntegerMatrix::from_rows(cols, &m));
        let expected = common::oracle_invariant_factors(&m, cols);
        ensure!(got == expected, "{m:?}: SNF {got:?}, minors give {expected:?}");
    }
    Ok("500 random matrices up to 4x5".into())
}

fn acylindricity() -> Outcome {
    let v = aut_acylindrically_hyperbolic(&p3()).map_err(|e| e.to_string())?;
    ensure!(v.acylindrically_hyperbolic && v.witness == Some((id("b"), id("a"))), "P3(3,2): {v:?}");
    ensure!(v.assumption == "assuming torsion-free", "missing torsion-free assumption");
    let v = aut_acylindrically_hyperbolic(&star(2, 2, 2)).map_err(|e| e.to_string())?;
    ensure!(!v.acylindrically_hyperbolic && v.witness.is_none(), "STAR(2,2,2): {v:?}");
    let v = aut_acylindrically_hyperbolic(&tri()).map_err(|e| e.to_string())?;
    ensure!(!v.acylindrically_hyperbolic && v.witness.is_none(), "TRI: {v:?}");
    Ok("P3(3,2) true with witness (b, a); STAR(2,2,2) and TRI false".into())
}

struct Criterion<'a> {
    number: u32,
    title: &'static str,
    limit: Duration,
    run: Box<dyn FnOnce() -> Outcome + 'a>,
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a271);
    let started = Instant::now();
    let corpus = common::corpus(1000, &mut rng);
    println!("corpus: {} connected graphs built in {:.2}s", corpus.len(), started.elapsed().as_secs_f64());

    let mut rng4 = ChaCha8Rng::seed_from_u64(4);
    let mut rng6 = ChaCha8Rng::seed_from_u64(6);
    let mut rng8 = ChaCha8Rng::seed_from_u64(8);
    let mut rng9 = ChaCha8Rng::seed_from_u64(9);
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        Criterion {
            number: 1,
            title: "big chunks match brute force",
            limit: secs(60),
            run: Box::new(|| chunk_oracle(&corpus)),
        },
        Criterion {
            number: 2,
            title: "splittability verdicts",
            limit: secs(10),
            run: Box::new(|| splittability(&corpus)),
        },
        Criterion {
            number: 3,
            title: "JSJ structure of the leaves fixture",
            limit: secs(1),
            run: Box::new(jsj_structure),
        },
        Criterion {
            number: 4,
            title: "abelianization agreement",
            limit: secs(120),
            run: Box::new(|| abelianization(&mut rng4)),
        },
        Criterion {
            number: 5,
            title: "dihedral JSJ presentations",
            limit: secs(1),
            run: Box::new(dihedral_presentations),
        },
        Criterion {
            number: 6,
            title: "dihedral word engine",
            limit: secs(60),
            run: Box::new(|| dihedral_engine(&mut rng6)),
        },
        Criterion { number: 7, title: "root bound search", limit: secs(300), run: Box::new(root_bound) },
        Criterion {
            number: 8,
            title: "invariant verdicts",
            limit: secs(600),
            run: Box::new(|| verdicts(&corpus, &mut rng8)),
        },
        Criterion {
            number: 9,
            title: "Smith normal form against minors",
            limit: secs(10),
            run: Box::new(|| snf(&mut rng9)),
        },
        Criterion { number: 10, title: "acylindricity predicate", limit: secs(1), run: Box::new(acylindricity) },
    ];

    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let timing = format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), c.limit.as_secs());
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("too slow: {detail}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} {}: PASS ({detail}; {timing})", c.number, c.title),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {}: FAIL ({msg}; {timing})", c.number, c.title);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
