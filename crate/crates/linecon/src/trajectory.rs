//! Geometric models of congruences: the folding of a line and the
//! trajectory diagram of a pair of congruences.
//!
//! The trajectory places each element `x` at `P(x) = (min x/δ, min x/θ)`
//! inside an `l × k` rectangle and joins consecutive points. Interior
//! segments have slope `±1`; rests run along the borders. Crossings are
//! isolated interior self-intersections and land on integral or
//! half-integral coordinates, so all geometry is done on doubled integer
//! coordinates and stays exact.

use std::collections::BTreeMap;

use crate::congruence::CanonicalCongruence;

/// Height profile of a congruence: `heights[x]` is the unique
/// representative `j ∈ [0, step]` with `x θ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folding {
    pub n: usize,
    pub step: usize,
    pub heights: Vec<usize>,
}

/// The folding picture of a nontrivial congruence. Panics on Total.
pub fn folding(c: &CanonicalCongruence) -> Folding {
    assert!(!c.is_total(), "the total congruence has no folding");
    Folding {
        n: c.n(),
        step: c.step(),
        heights: (0..=c.n()).map(|x| c.height(x)).collect(),
    }
}

/// A border of the trajectory rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

/// One reflection of the trajectory on a border.
///
/// A rest bounce covers the pair `(element, element + 1)` and its center
/// is the midpoint of the unit border segment between them. A bounce at a
/// rectangle corner is recorded once per incident side with `at_corner`
/// set, and is excluded from the interior-bounce uniformity laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounce {
    pub element: usize,
    pub side: Side,
    pub is_rest: bool,
    pub at_corner: bool,
    /// Doubled coordinates of the reflection point or rest midpoint.
    pub center2: (i64, i64),
}

/// An isolated interior self-intersection of the trajectory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    /// Doubled coordinates; both components even means an integral
    /// crossing, both odd a half-integral one.
    pub at2: (i64, i64),
    /// Non-adjacent segment index pairs meeting at this point.
    pub segments: Vec<(usize, usize)>,
}

/// Crossing totals split by coordinate integrality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingCounts {
    pub integral: usize,
    pub half_integral: usize,
}

impl CrossingCounts {
    pub fn total(&self) -> usize {
        self.integral + self.half_integral
    }
}

/// The full trajectory diagram of a pair of nontrivial congruences with
/// `step(th) ≤ step(dl)`: `th` folds onto the vertical axis (height `k`)
/// and `dl` onto the horizontal one (base `l`).
#[derive(Debug, Clone)]
pub struct TrajectoryDiagram {
    pub n: usize,
    /// Rectangle height `k = step(th)`.
    pub height: usize,
    /// Rectangle base `l = step(dl)`.
    pub base: usize,
    /// `P(x) = (min x/δ, min x/θ)` for `x = 0,…,n`.
    pub points: Vec<(usize, usize)>,
    pub bounces: Vec<Bounce>,
    pub crossings: Vec<Crossing>,
    /// Non-adjacent collinear segment pairs sharing more than one point.
    /// The counting lemmas guarantee these cannot occur for nontrivial
    /// joins with common extremes `{0, n}`, so a nonempty list doubles as
    /// a triviality witness.
    pub overlaps: Vec<(usize, usize)>,
}

impl TrajectoryDiagram {
    /// Segment endpoints in doubled coordinates; zero-length segments
    /// (a shared rest of both congruences) are kept to preserve indexing.
    pub fn segment2(&self, i: usize) -> ((i64, i64), (i64, i64)) {
        (doubled(self.points[i]), doubled(self.points[i + 1]))
    }

    pub fn segment_count(&self) -> usize {
        self.points.len() - 1
    }
}

fn doubled(p: (usize, usize)) -> (i64, i64) {
    (2 * p.0 as i64, 2 * p.1 as i64)
}

/// Builds the trajectory diagram of `th ∨ dl`. Both congruences must be
/// nontrivial, live on the same line, and satisfy `step(th) ≤ step(dl)`.
pub fn build_trajectory(
    th: &CanonicalCongruence,
    dl: &CanonicalCongruence,
) -> TrajectoryDiagram {
    assert_eq!(th.n(), dl.n(), "congruences live on different lines");
    assert!(!th.is_total() && !dl.is_total(), "trajectories need nontrivial congruences");
    assert!(th.step() <= dl.step(), "the height congruence must have the smaller step");
    let n = th.n();
    let (k, l) = (th.step(), dl.step());
    let points: Vec<(usize, usize)> = (0..=n).map(|x| (dl.height(x), th.height(x))).collect();

    let mut bounces = Vec::new();
    collect_bounces(th, k, &points, true, dl, &mut bounces);
    collect_bounces(dl, l, &points, false, th, &mut bounces);

    let (crossings, overlaps) = find_crossings(&points, k as i64, l as i64);
    TrajectoryDiagram { n, height: k, base: l, points, bounces, crossings, overlaps }
}

/// Walks the interior extremes of `fold_c` (bounces on horizontal borders
/// when `horizontal`, vertical otherwise), grouping rest pairs.
fn collect_bounces(
    fold_c: &CanonicalCongruence,
    step: usize,
    points: &[(usize, usize)],
    horizontal: bool,
    other: &CanonicalCongruence,
    out: &mut Vec<Bounce>,
) {
    let n = fold_c.n();
    let rests = fold_c.rests();
    let other_step = other.step();
    let is_other_extreme = |x: usize| {
        let h = other.height(x);
        h == 0 || h == other_step
    };
    let side_of = |h: usize| {
        if horizontal {
            if h == step {
                Side::Top
            } else {
                Side::Bottom
            }
        } else if h == 0 {
            Side::Left
        } else {
            Side::Right
        }
    };
    let mut e = 1;
    while e < n {
        let h = fold_c.height(e);
        if h == 0 || h == step {
            if rests.contains(&e) {
                let (a, b) = (doubled(points[e]), doubled(points[e + 1]));
                out.push(Bounce {
                    element: e,
                    side: side_of(h),
                    is_rest: true,
                    at_corner: is_other_extreme(e) || is_other_extreme(e + 1),
                    center2: ((a.0 + b.0) / 2, (a.1 + b.1) / 2),
                });
                e += 2;
            } else {
                out.push(Bounce {
                    element: e,
                    side: side_of(h),
                    is_rest: false,
                    at_corner: is_other_extreme(e),
                    center2: doubled(points[e]),
                });
                e += 1;
            }
        } else {
            e += 1;
        }
    }
}

enum Isect {
    Empty,
    /// Transversal single-point intersection, doubled coordinates.
    Point(i64, i64),
    /// Collinear with a shared sub-segment of positive length.
    Overlap,
    /// Collinear, sharing exactly one point: a retrace, not a crossing.
    CollinearTouch,
}

fn cross(ax: i64, ay: i64, bx: i64, by: i64) -> i64 {
    ax * by - ay * bx
}

fn intersect(a: ((i64, i64), (i64, i64)), b: ((i64, i64), (i64, i64))) -> Isect {
    let (p, q) = a;
    let (r, s) = b;
    let d1 = (q.0 - p.0, q.1 - p.1);
    let d2 = (s.0 - r.0, s.1 - r.1);
    let denom = cross(d1.0, d1.1, d2.0, d2.1);
    let pr = (r.0 - p.0, r.1 - p.1);
    if denom == 0 {
        if cross(pr.0, pr.1, d1.0, d1.1) != 0 {
            return Isect::Empty; // parallel, different lines
        }
        // collinear: compare parameter intervals along the dominant axis
        let key = |pt: (i64, i64)| if d1.0 != 0 { pt.0 } else { pt.1 };
        let (a0, a1) = minmax(key(p), key(q));
        let (b0, b1) = minmax(key(r), key(s));
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        return match hi.cmp(&lo) {
            std::cmp::Ordering::Less => Isect::Empty,
            std::cmp::Ordering::Equal => Isect::CollinearTouch,
            std::cmp::Ordering::Greater => Isect::Overlap,
        };
    }
    // a + t·d1 = b + u·d2 with t = tn/denom, u = un/denom, both in [0,1]
    let tn = cross(pr.0, pr.1, d2.0, d2.1);
    let un = cross(pr.0, pr.1, d1.0, d1.1);
    let inside = |num: i64| {
        if denom > 0 {
            0 <= num && num <= denom
        } else {
            denom <= num && num <= 0
        }
    };
    if !inside(tn) || !inside(un) {
        return Isect::Empty;
    }
    let x_num = p.0 * denom + d1.0 * tn;
    let y_num = p.1 * denom + d1.1 * tn;
    assert!(
        x_num % denom == 0 && y_num % denom == 0,
        "trajectory intersections must land on the half-integral grid"
    );
    Isect::Point(x_num / denom, y_num / denom)
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Pairwise intersections of non-adjacent segments, keeping only isolated
/// points strictly inside the rectangle and grouping them by location.
fn find_crossings(
    points: &[(usize, usize)],
    height: i64,
    base: i64,
) -> (Vec<Crossing>, Vec<(usize, usize)>) {
    let segs: Vec<((i64, i64), (i64, i64))> = points
        .windows(2)
        .map(|w| (doubled(w[0]), doubled(w[1])))
        .collect();
    let (kk, ll) = (2 * height, 2 * base);
    let mut by_point: BTreeMap<(i64, i64), Vec<(usize, usize)>> = BTreeMap::new();
    let mut overlaps = Vec::new();
    for i in 0..segs.len() {
        if segs[i].0 == segs[i].1 {
            continue; // zero-length (a shared rest)
        }
        for j in i + 2..segs.len() {
            if segs[j].0 == segs[j].1 {
                continue;
            }
            match intersect(segs[i], segs[j]) {
                Isect::Point(x, y) => {
                    if 0 < x && x < ll && 0 < y && y < kk {
                        by_point.entry((x, y)).or_default().push((i, j));
                    }
                }
                Isect::Overlap => overlaps.push((i, j)),
                Isect::Empty | Isect::CollinearTouch => {}
            }
        }
    }
    let crossings = by_point
        .into_iter()
        .map(|(at2, segments)| Crossing { at2, segments })
        .collect();
    (crossings, overlaps)
}

/// Counts the crossings of a diagram by coordinate integrality.
pub fn crossing_counts(d: &TrajectoryDiagram) -> CrossingCounts {
    let mut counts = CrossingCounts { integral: 0, half_integral: 0 };
    for c in &d.crossings {
        if c.at2.0 % 2 == 0 && c.at2.1 % 2 == 0 {
            counts.integral += 1;
        } else {
            counts.half_integral += 1;
        }
    }
    counts
}
