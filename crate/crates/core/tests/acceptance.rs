//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Every criterion is exact; the time budget is the only tolerance and is
//! printed alongside the measured time.

mod common;

use std::time::{Duration, Instant};

use common::{
    all_embeddings, brute_force_bracket, figure_eight, random_embedding, random_knot_word, trefoil, twist_knot,
    width_oracle,
};
use knotwidth::diagram::kauffman_bracket;
use knotwidth::diagram::{certify_nontrivial, is_alternating, is_reduced, Certificate};
use knotwidth::family::{build_kij, case_table, enumerate_min_width, FamilyParams, PAIRS};
use knotwidth::morse::{thin_thick, width_from_tuple};
use knotwidth::plat::{jm_distance, plat_closure_of_word};
use knotwidth::tangle::{predict_bridge_number, DistanceBound, TangleCert, TangleError};
use knotwidth::{MorseEmbedding, PdDiagram, ThinThickTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Kij = ((usize, usize), PdDiagram);

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_candidate_width() -> Outcome {
    let t: ThinThickTuple = "10,8,10,4,6".parse().map_err(|e| format!("{e:?}"))?;
    let w = width_from_tuple(&t);
    ensure(w == 78, || format!("got {w}"))?;
    Ok(format!("w(10,8,10,4,6) = {w}"))
}

fn c2_case_bounds() -> Outcome {
    let expected = [
        ("case-1", 98),
        ("case-3a", 82),
        ("case-3b", 128),
        ("case-4", 78),
        ("case-5", 92),
        ("case-6", 88),
        ("case-7", 96),
    ];
    let table = case_table();
    ensure(table.len() == expected.len(), || format!("{} cases", table.len()))?;
    for (r, (id, bound)) in table.iter().zip(expected) {
        let w = width_from_tuple(&r.witness);
        ensure(r.id == id && r.bound == bound && w == bound, || {
            format!("{} witness {} gives {w}, expected {id} = {bound}", r.id, r.witness)
        })?;
    }
    Ok("98, 82, 128, 78, 92, 88, 96".into())
}

fn c3_enumeration() -> Outcome {
    let e = enumerate_min_width(3, 20).ok_or("no admissible tuple")?;
    let table_min = case_table().iter().map(|r| r.bound).min().unwrap();
    let candidate: ThinThickTuple = "10,8,10,4,6".parse().unwrap();
    ensure(e.min_width == 78, || format!("minimum {}", e.min_width))?;
    ensure(e.attaining.contains(&candidate), || {
        "candidate tuple not attaining".into()
    })?;
    ensure(e.min_width == table_min, || format!("case table minimum {table_min}"))?;
    Ok(format!(
        "min 78 over {} admitted of {} examined, {} attaining",
        e.admitted,
        e.examined,
        e.attaining.len()
    ))
}

fn c4_width_equivalence() -> Outcome {
    let mut exhaustive = 0;
    for len in (2..=16).step_by(2) {
        for e in all_embeddings(len) {
            let (direct, tuple) = (e.width(), width_from_tuple(&thin_thick(&e)));
            ensure(direct == tuple && direct == width_oracle(e.events()), || {
                format!("{e}: level sum {direct}, tuple {tuple}")
            })?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let len = 2 * rng.random_range(1..=30);
        let e = random_embedding(&mut rng, len);
        let (direct, tuple) = (e.width(), width_from_tuple(&thin_thick(&e)));
        ensure(direct == tuple && direct == width_oracle(e.events()), || {
            format!("{e}: level sum {direct}, tuple {tuple}")
        })?;
    }
    Ok(format!("{exhaustive} exhaustive + 10000 random"))
}

fn c5_bridge_position() -> Outcome {
    for b in 1..=50usize {
        let e = MorseEmbedding::bridge_position(b).map_err(|e| e.to_string())?;
        let w = e.width();
        ensure(w == 2 * (b * b) as i64, || format!("b = {b}: width {w}"))?;
    }
    Ok("w = 2b^2 for b = 1..50".into())
}

fn c6_jm_distance() -> Outcome {
    let d73 = jm_distance(5, 73).map_err(|e| e.to_string())?;
    let d72 = jm_distance(5, 72).map_err(|e| e.to_string())?;
    ensure(d73 == 13 && d72 == 12, || format!("d(5,73) = {d73}, d(5,72) = {d72}"))?;
    Ok("d(5,73) = 13 > 12, d(5,72) = 12".into())
}

fn c7_bridge_prediction() -> Outcome {
    let cert = |d| TangleCert::new(2, 3, DistanceBound::asserted(d, "acceptance")).unwrap();
    let b = predict_bridge_number(&cert(13), &cert(13)).map_err(|e| e.to_string())?;
    ensure(b == 4, || format!("predicted {b}"))?;
    let threshold = knotwidth::tangle::required_distance(&cert(13), &cert(13)).map_err(|e| e.to_string())?;
    ensure(threshold.value == 8 && !threshold.bridge_warning, || {
        format!("{threshold:?}")
    })?;
    match predict_bridge_number(&cert(8), &cert(8)) {
        Err(TangleError::Hypotheses(f))
            if !f.is_empty() && f.iter().all(|h| h.id() == "distance-exceeds-threshold") => {}
        other => return Err(format!("d = 8 gave {other:?}")),
    }
    Ok("beta = 4 at threshold 8; d = 8 fails distance-exceeds-threshold".into())
}

fn kij_diagrams() -> Result<Vec<Kij>, String> {
    let p = FamilyParams::default();
    PAIRS
        .iter()
        .map(|&(i, j)| build_kij(&p, i, j).map(|d| ((i, j), d)).map_err(|e| e.to_string()))
        .collect()
}

fn c8_kij_certificates() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut sizes = Vec::new();
    for ((i, j), d) in kij_diagrams()? {
        let name = format!("K{i}{j}");
        ensure(d.component_count() == 1, || {
            format!("{name} has {} components", d.component_count())
        })?;
        let ra = is_reduced(&d).map_err(|e| e.to_string())? && is_alternating(&d).map_err(|e| e.to_string())?;
        ensure(ra, || format!("{name} not reduced alternating"))?;
        let start = Instant::now();
        let c = certify_nontrivial(&d).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(took < Duration::from_secs(5), || {
            format!("{name} bracket took {took:?}")
        })?;
        ensure(matches!(c.certificate, Certificate::ReducedAlternating { .. }), || {
            format!("{name} certificate {:?}", c.certificate)
        })?;
        ensure(c.jones_nontrivial() && c.branches_agree(), || {
            format!("{name} Jones = 1")
        })?;
        sizes.push(format!("{name}:{}", d.crossing_count()));
    }
    Ok(format!(
        "crossings {}, slowest bracket {slowest:.2?} (budget 5s each)",
        sizes.join(" ")
    ))
}

fn span_is_4c(d: &PdDiagram) -> Result<bool, String> {
    let span = kauffman_bracket(d).map_err(|e| e.to_string())?.span();
    Ok(span == Some(4 * d.crossing_count() as i64))
}

fn c9_span_law() -> Outcome {
    for ((i, j), d) in kij_diagrams()? {
        ensure(span_is_4c(&d)?, || format!("K{i}{j} span differs from 4c"))?;
    }
    let mut twists = 0;
    for m in 1..=8 {
        let d = twist_knot(m);
        ensure(d.crossing_count() <= 10, || {
            format!("twist knot {m} has {} crossings", d.crossing_count())
        })?;
        ensure(span_is_4c(&d)?, || format!("twist knot with {m} half twists"))?;
        twists += 1;
    }
    ensure(span_is_4c(&trefoil())? && span_is_4c(&figure_eight())?, || {
        "trefoil or figure eight".into()
    })?;
    Ok(format!("6 strand-pair knots, {twists} twist knots"))
}

fn c10_weak_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut applied = 0;
    while applied < 1000 {
        let len = 2 * rng.random_range(2..=30);
        let e = random_embedding(&mut rng, len);
        let pairs = e.reducible_pairs();
        if pairs.is_empty() {
            continue;
        }
        let i = pairs[rng.random_range(0..pairs.len())];
        let r = e.weak_reduction_move(i).map_err(|err| format!("{e} at {i}: {err}"))?;
        ensure(r.width() == e.width() - 4, || {
            format!("{e} at {i}: {} -> {}", e.width(), r.width())
        })?;
        ensure(r.bridge_number() == e.bridge_number(), || {
            format!("{e} at {i}: bridge number changed")
        })?;
        applied += 1;
    }
    Ok(format!("{applied} moves, each dw = -4"))
}

fn c11_bracket_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut diagrams = vec![PdDiagram::unknot(), trefoil(), figure_eight()];
    diagrams.extend((1..=8).map(twist_knot));
    for c in 1..=12 {
        for strands in [4, 6].into_iter().filter(|&s| 2 * (c + 1) >= s) {
            for _ in 0..3 {
                diagrams
                    .push(plat_closure_of_word(&random_knot_word(&mut rng, strands, c)).map_err(|e| e.to_string())?);
            }
        }
    }
    let mut checked = 0;
    for d in diagrams.iter().filter(|d| d.crossing_count() <= 12) {
        let sweep = kauffman_bracket(d).map_err(|e| e.to_string())?;
        ensure(sweep == brute_force_bracket(d), || format!("mismatch on\n{d}"))?;
        checked += 1;
    }
    Ok(format!("{checked} diagrams with c <= 12"))
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        name: "candidate tuple width",
        budget: Some(Duration::from_millis(1)),
        run: c1_candidate_width,
    },
    Criterion {
        id: 2,
        name: "case bounds",
        budget: Some(Duration::from_millis(1)),
        run: c2_case_bounds,
    },
    Criterion {
        id: 3,
        name: "min-width enumeration",
        budget: Some(Duration::from_secs(10)),
        run: c3_enumeration,
    },
    Criterion {
        id: 4,
        name: "level sum equals tuple width",
        budget: Some(Duration::from_secs(30)),
        run: c4_width_equivalence,
    },
    Criterion {
        id: 5,
        name: "bridge position width",
        budget: None,
        run: c5_bridge_position,
    },
    Criterion {
        id: 6,
        name: "plat distance bound",
        budget: None,
        run: c6_jm_distance,
    },
    Criterion {
        id: 7,
        name: "bridge number prediction",
        budget: None,
        run: c7_bridge_prediction,
    },
    Criterion {
        id: 8,
        name: "strand-pair knot certificates",
        budget: None,
        run: c8_kij_certificates,
    },
    Criterion {
        id: 9,
        name: "bracket span law",
        budget: None,
        run: c9_span_law,
    },
    Criterion {
        id: 10,
        name: "weak reduction move",
        budget: None,
        run: c10_weak_reduction,
    },
    Criterion {
        id: 11,
        name: "bracket sweep vs state sum",
        budget: None,
        run: c11_bracket_oracle,
    },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if took >= b => Err(format!("took {took:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        let budget = c.budget.map_or("exact".to_string(), |b| format!("exact, budget {b:?}"));
        match outcome {
            Ok(detail) => println!("[{:>2}] PASS {} ({budget}; {took:.2?}): {detail}", c.id, c.name),
            Err(detail) => {
                println!("[{:>2}] FAIL {} ({budget}; {took:.2?}): {detail}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
