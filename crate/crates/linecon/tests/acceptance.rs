//! Acceptance suite: one test per exit criterion, each printing a
//! PASS/FAIL line (visible with `cargo test -- --nocapture`).
//!
//! Criterion 7 encodes the frequency-two equivalence in its strong,
//! unscoped form. That form is mathematically false — the test documents
//! the minimal counterexample and is expected to stay red; the sound
//! one-directional law and the `{0,n}`-scoped equivalence are verified
//! alongside and do pass.

use std::time::{Duration, Instant};

use linecon::congruence::{enumerate, CanonicalCongruence};
use linecon::frame::equivalence_closure;
use linecon::lattice::common_extremes;
use linecon::render::{render_folding_svg, render_trajectory_svg};
use linecon::trajectory::{build_trajectory, crossing_counts, folding, Side};
use linecon::verify;

fn check(id: usize, what: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(details) => println!("criterion {id}: PASS — {what} ({details})"),
        Err(e) => {
            println!("criterion {id}: FAIL — {what}: {e}");
            panic!("criterion {id} failed: {e}");
        }
    }
}

fn from_suite(outcome: verify::SuiteOutcome) -> Result<String, String> {
    match outcome.failure {
        None => Ok(format!("{} cases", outcome.cases)),
        Some(e) => Err(e),
    }
}

fn within(budget: Duration, start: Instant, r: Result<String, String>) -> Result<String, String> {
    let elapsed = start.elapsed();
    if elapsed > budget {
        return Err(format!("exceeded the {budget:?} runtime budget ({elapsed:?})"));
    }
    r.map(|d| format!("{d}, {elapsed:.2?}"))
}

#[test]
fn criterion_1_characterization_equivalence() {
    let start = Instant::now();
    let outcome = verify::characterization(9, 10).expect("within the enumeration cap");
    check(
        1,
        "enumeration equals brute force over all partitions, n ≤ 9",
        within(Duration::from_secs(300), start, from_suite(outcome)),
    );
}

#[test]
fn criterion_2_meet_theorem() {
    let start = Instant::now();
    let outcome = verify::meet_law(12);
    check(
        2,
        "closed-form meet equals oracle glb with gcd frequency, n ≤ 12",
        within(Duration::from_secs(120), start, from_suite(outcome)),
    );
}

#[test]
fn criterion_3_join_and_permutability() {
    check(
        3,
        "join frequency is the lcm, step formula holds, nontrivial joins compose, n ≤ 12",
        from_suite(verify::join_law(12)),
    );
}

#[test]
fn criterion_4_nontriviality_criterion() {
    check(
        4,
        "five-clause criterion agrees with the closure on every pair, n ≤ 12",
        from_suite(verify::criterion_law(12)),
    );
}

#[test]
fn criterion_5_counting_formulas() {
    check(
        5,
        "crossing, extreme, and frequency formulas hold on {0,n}-pairs, n ≤ 14",
        from_suite(verify::counting_laws(14)),
    );
}

#[test]
fn criterion_6_catalog_and_tables() {
    let outcome = from_suite(verify::catalog_laws(12))
        .and_then(|a| from_suite(verify::catalog_examples()).map(|b| format!("{a} + {b}")))
        .and_then(|a| from_suite(verify::catalog_tables(44)).map(|b| format!("{a} + {b}")));
    check(
        6,
        "every joinable {0,n}-pair classifies; example pairs, simplified relations, and \
         n(l,f) table all verify, members up to n = 44",
        outcome,
    );
}

#[test]
fn criterion_7_frequency_two_law() {
    // the sound parts: nontrivial ⟹ mirrored, mirrored pairs permute,
    // and mirrored ⟺ nontrivial once the common extremes are {0, n}
    let scoped = from_suite(verify::frequency_two_law(14));
    assert!(scoped.is_ok(), "scoped frequency-two law failed: {scoped:?}");

    // the criterion as stated: an unscoped equivalence
    let mut counterexamples = Vec::new();
    for n in 2..=14usize {
        let all: Vec<CanonicalCongruence> =
            enumerate(n).into_iter().filter(|c| !c.is_total()).collect();
        for dl in all.iter().filter(|c| c.frequency() == 2) {
            for th in &all {
                let joined = equivalence_closure(&th.to_partition(), &dl.to_partition())
                    .expect("same ground set");
                if !joined.is_total() != th.is_mirrored() {
                    counterexamples.push(format!(
                        "θ = {th}, δ = {dl} on L_{n} (mirrored = {}, join total = {})",
                        th.is_mirrored(),
                        joined.is_total()
                    ));
                }
            }
        }
    }
    let outcome = if counterexamples.is_empty() {
        Ok("equivalence holds unscoped".to_string())
    } else {
        Err(format!(
            "the unscoped equivalence `join nontrivial ⇔ θ mirrored` is false: first of \
             {} counterexamples is {}; a mirrored θ can share an interior extreme with \
             the frequency-2 congruence and collapse (the implication `nontrivial ⇒ \
             mirrored`, the permutation law, and the equivalence under common extremes \
             {{0,n}} are all verified and hold)",
            counterexamples.len(),
            counterexamples[0]
        ))
    };
    check(7, "frequency-two law: join nontrivial ⇔ θ mirrored, n ≤ 14", outcome);
}

#[test]
fn criterion_8_lattice_structure() {
    let outcome = from_suite(verify::lattice_witnesses(10)).and_then(|a| {
        from_suite(verify::embedding_law(12)).map(|b| format!("{a} + {b}"))
    });
    check(
        8,
        "pentagon in Con L_9, antichains in Con L_5/L_7, divisor embedding and \
         distributive ideals, n ≤ 12",
        outcome,
    );
}

#[test]
fn criterion_9_golden_diagrams() {
    let th = CanonicalCongruence::parse(18, "4;4,13").unwrap();
    let dl = CanonicalCongruence::parse(18, "6").unwrap();
    let d = build_trajectory(&th, &dl);

    let outcome = (|| -> Result<String, String> {
        if d.points.len() != 19 {
            return Err(format!("expected 19 labeled points, got {}", d.points.len()));
        }
        if d.points[0] != (0, 0) {
            return Err(format!("trajectory starts at {:?}, not the origin", d.points[0]));
        }
        if d.points[18] != (6, 0) {
            return Err(format!(
                "trajectory must end on the bottom edge at abscissa 6, got {:?}",
                d.points[18]
            ));
        }
        let top_rests: Vec<usize> = d
            .bounces
            .iter()
            .filter(|b| b.side == Side::Top && b.is_rest)
            .map(|b| b.element)
            .collect();
        if top_rests != vec![4, 13] {
            return Err(format!("top rests at {top_rests:?}, expected elements 4–5 and 13–14"));
        }
        let counts = crossing_counts(&d);
        if counts.total() != 3 {
            return Err(format!("expected 3 crossings, got {}", counts.total()));
        }
        if common_extremes(&th, &dl) != vec![0, 18] {
            return Err("the pair must meet only at the endpoints".to_string());
        }

        let fold = folding(&CanonicalCongruence::parse(5, "2;2").unwrap());
        if fold.heights != vec![0, 1, 2, 2, 1, 0] {
            return Err(format!("folding heights {:?}", fold.heights));
        }

        let svg = render_trajectory_svg(&d);
        let golden = include_str!("goldens/trajectory_4-4-13_vs_6_n18.svg");
        if svg != golden {
            return Err("trajectory SVG deviates from the golden bytes".to_string());
        }
        let svg = render_folding_svg(&fold);
        let golden = include_str!("goldens/folding_2-2_n5.svg");
        if svg != golden {
            return Err("folding SVG deviates from the golden bytes".to_string());
        }
        Ok("figure structure and SVG bytes match".to_string())
    })();
    check(9, "golden diagrams reproduce the published figures byte-stably", outcome);
}
