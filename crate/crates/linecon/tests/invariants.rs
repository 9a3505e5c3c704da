//! Exhaustive structural invariants over every congruence (and pair) of
//! small lines, complementing the acceptance suite.

use std::collections::BTreeSet;

use linecon::congruence::{enumerate, CanonicalCongruence};
use linecon::frame::{equivalence_closure, Frame};
use linecon::lattice::{join, leq, meet, rest_profile, RestProfile};
use linecon::trajectory::folding;

fn nontrivial(n: usize) -> Vec<CanonicalCongruence> {
    enumerate(n).into_iter().filter(|c| !c.is_total()).collect()
}

#[test]
fn canonicalize_round_trips_every_congruence() {
    for n in 0..=14 {
        for c in enumerate(n) {
            let p = c.to_partition();
            assert_eq!(CanonicalCongruence::canonicalize(&p).unwrap(), c);
        }
    }
}

#[test]
fn order_matches_partition_refinement() {
    for n in 1..=14 {
        let all = enumerate(n);
        let partitions: Vec<_> = all.iter().map(|c| c.to_partition()).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(
                    leq(a, b),
                    partitions[i].refines(&partitions[j]),
                    "order disagreement at ({a}, {b}) on L_{n}"
                );
            }
        }
    }
}

#[test]
fn quotients_of_lines_are_lines() {
    for n in 1..=14 {
        let line = Frame::line(n);
        for c in enumerate(n) {
            let p = c.to_partition();
            let q = line.quotient(&p).unwrap();
            assert_eq!(q, Frame::line(c.step()), "quotient shape for {c} on L_{n}");
            // valencies never grow in the quotient
            for x in 0..=n {
                assert!(q.neighbors(p.block_of(x)).len() <= line.neighbors(x).len());
            }
        }
    }
}

#[test]
fn congruences_are_determined_by_step_and_rests() {
    for n in 0..=14 {
        let all = enumerate(n);
        let keys: BTreeSet<(usize, Vec<usize>)> =
            all.iter().map(|c| (c.step(), c.rests())).collect();
        assert_eq!(keys.len(), all.len(), "collision of (step, rests) on L_{n}");
    }
}

#[test]
fn triviality_tests_agree() {
    for n in 2..=14 {
        for c in enumerate(n) {
            let total = c.is_total();
            assert_eq!(c.related(0, 1), total, "{c} on L_{n}");
            assert_eq!(c.related(n - 1, n), total, "{c} on L_{n}");
            let squeezed =
                (1..n).any(|x| c.related(x - 1, x) && c.related(x, x + 1));
            assert_eq!(squeezed, total, "{c} on L_{n}");
        }
    }
}

#[test]
fn both_frequency_formulas_agree() {
    for n in 1..=14 {
        for c in nontrivial(n) {
            let rests = c.rests().len();
            assert_eq!(c.frequency(), (n - rests) / c.step().max(1).min(c.step()).max(1), );
            assert_eq!(
                c.frequency(),
                c.extremes().len() - rests - 1,
                "extreme-count frequency for {c} on L_{n}"
            );
        }
    }
}

#[test]
fn heights_characterize_relatedness() {
    for n in 1..=14 {
        for c in nontrivial(n) {
            let f = folding(&c);
            for x in 0..=n {
                for y in 0..=n {
                    assert_eq!(
                        f.heights[x] == f.heights[y],
                        c.related(x, y),
                        "heights vs relation for {c} on L_{n} at ({x},{y})"
                    );
                }
            }
        }
    }
}

#[test]
fn closure_of_congruences_is_a_congruence() {
    for n in 1..=9 {
        let line = Frame::line(n);
        let all = enumerate(n);
        for a in &all {
            for b in &all {
                let joined =
                    equivalence_closure(&a.to_partition(), &b.to_partition()).unwrap();
                assert!(
                    line.is_congruence(&joined).unwrap(),
                    "closure of {a} and {b} is not a congruence of L_{n}"
                );
            }
        }
    }
}

#[test]
fn mirrored_means_symmetric_folding() {
    for n in 1..=14 {
        for c in nontrivial(n) {
            let f = folding(&c);
            let k = f.step;
            let reversed: Vec<usize> = (0..=n).map(|x| f.heights[n - x]).collect();
            // orient the reversal so it fixes the starting height
            let symmetric = if f.heights[n] == 0 {
                reversed == f.heights
            } else {
                reversed.iter().map(|&h| k - h).collect::<Vec<_>>() == f.heights
            };
            assert_eq!(symmetric, c.is_mirrored(), "mirror test for {c} on L_{n}");
        }
    }
}

#[test]
fn frequency_decomposition_along_the_first_common_extreme() {
    // f_θ = f_{θ|e₁} · f_{θ∧δ} and f_{θ∨δ} = f_{θ|e₁ ∨ δ|e₁} · f_{θ∧δ}
    for n in 1..=12 {
        let all = nontrivial(n);
        for a in &all {
            for b in &all {
                let joined = join(a, b);
                if joined.is_total() {
                    continue;
                }
                let e1 = *linecon::lattice::common_extremes(a, b)
                    .iter()
                    .find(|&&e| e > 0)
                    .unwrap();
                let met = meet(a, b);
                let (ra, rb) = (a.restrict(e1).unwrap(), b.restrict(e1).unwrap());
                assert_eq!(
                    a.frequency(),
                    ra.frequency() * met.frequency(),
                    "frequency decomposition of {a} against {b} on L_{n}"
                );
                assert_eq!(
                    joined.frequency(),
                    join(&ra, &rb).frequency() * met.frequency(),
                    "join frequency decomposition for ({a}, {b}) on L_{n}"
                );
            }
        }
    }
}

#[test]
fn catalog_profile_formulas() {
    // structural profile classification agrees with the closed formulas
    // for the rest positions
    for n in 1..=20 {
        for c in nontrivial(n) {
            if c.is_identity() || c.frequency() < 3 {
                continue;
            }
            let (k, rests) = (c.step(), c.rests());
            let m = rests.len();
            match rest_profile(&c) {
                RestProfile::TopOnly => {
                    for (i, &r) in rests.iter().enumerate() {
                        assert_eq!(r, (2 * k + 1) * (i + 1) - k - 1, "{c} on L_{n}");
                    }
                }
                RestProfile::BottomOnly => {
                    for (i, &r) in rests.iter().enumerate() {
                        assert_eq!(r, (2 * k + 1) * (i + 1) - 1, "{c} on L_{n}");
                    }
                }
                RestProfile::Everywhere => {
                    for (i, &r) in rests.iter().enumerate() {
                        assert_eq!(r, (k + 1) * (i + 1) - 1, "{c} on L_{n}");
                    }
                    assert_eq!(m, c.frequency() - 1, "{c} on L_{n}");
                }
                RestProfile::NoRests => assert!(m == 0),
                RestProfile::Irregular => {}
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    for n in 0..=14 {
        let all = enumerate(n);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted, "enumeration order broken on L_{n}");
    }
}
