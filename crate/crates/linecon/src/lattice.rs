//! Order, meet, join, permutability, and the nontriviality criterion on
//! canonical congruences, together with the catalog of joinable shapes,
//! frequency arithmetic, and the divisor-lattice embedding.
//!
//! The closed forms here are the production path; the [`crate::oracle`]
//! lattice provides the independent search-based answers they are checked
//! against.

use crate::congruence::{validate, CanonicalCongruence, Kind};
use crate::error::Error;
use crate::frame::equivalence_closure;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Sorted intersection of the extreme sets of two nontrivial congruences.
/// Always contains `0` and `n`. Panics on a total argument.
pub fn common_extremes(a: &CanonicalCongruence, b: &CanonicalCongruence) -> Vec<usize> {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    assert!(!a.is_total() && !b.is_total(), "common extremes need nontrivial congruences");
    let eb: std::collections::BTreeSet<usize> = b.extremes().into_iter().collect();
    a.extremes().into_iter().filter(|e| eb.contains(e)).collect()
}

/// Whether the rests of `th` are compatible with `gamma`: every part of a
/// `th`-rest outside `ext(gamma)` has all of its `gamma`-class consisting
/// of parts of `th`-rests.
pub fn compatible(th: &CanonicalCongruence, gamma: &CanonicalCongruence) -> bool {
    assert_eq!(th.n(), gamma.n(), "congruences live on different lines");
    assert!(!gamma.is_total(), "compatibility is relative to a nontrivial congruence");
    let ext: std::collections::BTreeSet<usize> = gamma.extremes().into_iter().collect();
    for x in 0..=th.n() {
        if th.is_part_of_rest(x) && !ext.contains(&x) {
            for y in gamma.class_of(x) {
                if !th.is_part_of_rest(y) {
                    return false;
                }
            }
        }
    }
    true
}

/// The lattice order `a ≤ b` (refinement of the underlying partitions),
/// decided on canonical data: for folded `a = ⟨e; t̄⟩` and `b = ⟨k; r̄⟩`,
/// `a ≤ b` iff `e ∈ ext(b)`, `t̄ ⊆ r̄`, the rests of `b` are compatible
/// with `a`, and the two agree on rest parts at common extremes.
///
/// The last clause is forced by the common-extreme lemma (here `a ∨ b`
/// is `b`, which is nontrivial); without it, compatibility says nothing
/// about `b`-rests sitting at extremes of `a`, and a step-1 `a` — where
/// every element is an extreme — would make the other clauses vacuous.
pub fn leq(a: &CanonicalCongruence, b: &CanonicalCongruence) -> bool {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    if a.is_identity() || b.is_total() {
        return true;
    }
    if a.is_total() || b.is_identity() {
        return false;
    }
    let e = a.step();
    let h = b.height(e);
    if h != 0 && h != b.step() {
        return false; // e ∉ ext(b)
    }
    let rb = b.rests();
    if !a.rests().iter().all(|r| rb.contains(r)) {
        return false;
    }
    if !common_extremes(a, b).iter().all(|&x| a.rest_side(x) == b.rest_side(x)) {
        return false;
    }
    compatible(b, a)
}

/// The lattice meet. With a nontrivial join this is the closed form
/// `⟨e₁; r̄ ∩ s̄⟩` (Identity when `e₁ = n`); otherwise it falls back to the
/// greatest element of the enumeration below both arguments.
pub fn meet(a: &CanonicalCongruence, b: &CanonicalCongruence) -> CanonicalCongruence {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    let n = a.n();
    if a.is_total() {
        return b.clone();
    }
    if b.is_total() {
        return a.clone();
    }
    if a.is_identity() || b.is_identity() {
        return CanonicalCongruence::identity(n);
    }
    if join_is_nontrivial(a, b) {
        let e1 = first_positive_common_extreme(a, b);
        let inter = rest_intersection(a, b);
        if e1 == n {
            debug_assert!(inter.is_empty());
            return CanonicalCongruence::identity(n);
        }
        return CanonicalCongruence::folded(n, e1, inter)
            .expect("the meet closed form must validate when the join is nontrivial");
    }
    // no closed form without a nontrivial join; take the greatest lower
    // bound over the enumeration
    let lower: Vec<CanonicalCongruence> = crate::congruence::enumerate(n)
        .into_iter()
        .filter(|c| leq(c, a) && leq(c, b))
        .collect();
    lower
        .iter()
        .find(|cand| lower.iter().all(|o| leq(o, cand)))
        .expect("congruence lattices always have meets")
        .clone()
}

/// The lattice join: canonical form of the equivalence closure of the
/// union of the two relations.
pub fn join(a: &CanonicalCongruence, b: &CanonicalCongruence) -> CanonicalCongruence {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    if a.is_total() || b.is_total() {
        return CanonicalCongruence::total(a.n());
    }
    let closed = equivalence_closure(&a.to_partition(), &b.to_partition())
        .expect("same ground set");
    CanonicalCongruence::canonicalize(&closed)
        .expect("the closure of two congruences is a congruence")
}

/// Whether `a ∘ b = b ∘ a` as relations.
pub fn permutes(a: &CanonicalCongruence, b: &CanonicalCongruence) -> bool {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    let ra = a.to_partition().relation();
    let rb = b.to_partition().relation();
    ra.compose(&rb).expect("same n") == rb.compose(&ra).expect("same n")
}

fn first_positive_common_extreme(a: &CanonicalCongruence, b: &CanonicalCongruence) -> usize {
    *common_extremes(a, b)
        .iter()
        .find(|&&e| e > 0)
        .expect("n is always a positive common extreme")
}

fn rest_intersection(a: &CanonicalCongruence, b: &CanonicalCongruence) -> Vec<usize> {
    let rb = b.rests();
    a.rests().into_iter().filter(|r| rb.contains(r)).collect()
}

/// Outcome of one clause of the nontriviality criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseOutcome {
    Pass,
    Fail,
    /// Not evaluated because an earlier clause failed.
    Skipped,
}

/// Clause-by-clause record of the five-condition criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub clauses: Vec<(&'static str, ClauseOutcome)>,
    pub nontrivial: bool,
}

const CRITERION_CLAUSES: [&str; 5] = [
    "common extremes agree on rest parts",
    "meet candidate validates as a congruence",
    "restrictions to the first common extreme form a catalog pair",
    "rests of the first congruence are compatible with the meet candidate",
    "rests of the second congruence are compatible with the meet candidate",
];

/// Decides whether the join of two nontrivial congruences is nontrivial,
/// without computing the join: the five-condition criterion.
pub fn join_is_nontrivial(a: &CanonicalCongruence, b: &CanonicalCongruence) -> bool {
    criterion_report(a, b).nontrivial
}

/// Evaluates the criterion clause by clause, short-circuiting after the
/// first failure. Panics on a total argument.
pub fn criterion_report(a: &CanonicalCongruence, b: &CanonicalCongruence) -> CriterionReport {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    assert!(!a.is_total() && !b.is_total(), "the criterion needs nontrivial congruences");
    let n = a.n();
    let mut outcomes = Vec::with_capacity(5);
    let mut failed = false;
    let record = |ok: bool, outcomes: &mut Vec<ClauseOutcome>, failed: &mut bool| {
        if *failed {
            outcomes.push(ClauseOutcome::Skipped);
        } else if ok {
            outcomes.push(ClauseOutcome::Pass);
        } else {
            outcomes.push(ClauseOutcome::Fail);
            *failed = true;
        }
    };

    // 1. at every common extreme, a and b agree on being the left/right
    //    part of a rest
    let etas = common_extremes(a, b);
    let clause1 = etas.iter().all(|&e| a.rest_side(e) == b.rest_side(e));
    record(clause1, &mut outcomes, &mut failed);

    // 2. γ = ⟨η₁; r̄ ∩ s̄⟩ is a congruence of the line
    let e1 = first_positive_common_extreme(a, b);
    let inter = rest_intersection(a, b);
    let gamma = if failed {
        None
    } else if e1 == n {
        Some(CanonicalCongruence::identity(n))
    } else if validate(n, e1, &inter).is_valid() {
        Some(CanonicalCongruence::folded(n, e1, inter.clone()).expect("just validated"))
    } else {
        None
    };
    record(gamma.is_some(), &mut outcomes, &mut failed);

    // 3. the restrictions to [0, η₁] form a pair appearing in the catalog
    let clause3 = if failed {
        false
    } else {
        match (a.restrict(e1), b.restrict(e1)) {
            (Ok(ra), Ok(rb)) => catalog_case(&ra, &rb).is_ok(),
            _ => false,
        }
    };
    record(clause3, &mut outcomes, &mut failed);

    // 4./5. the rests of each congruence are compatible with γ
    for c in [a, b] {
        let ok = match &gamma {
            Some(g) if !failed => compatible(c, g),
            _ => false,
        };
        record(ok, &mut outcomes, &mut failed);
    }

    let nontrivial = outcomes.iter().all(|o| *o == ClauseOutcome::Pass);
    CriterionReport {
        clauses: CRITERION_CLAUSES.iter().copied().zip(outcomes).collect(),
        nontrivial,
    }
}

/// Placement of the rests of a congruence in its folding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestProfile {
    NoRests,
    /// A rest at every interior top bounce, none at the bottom.
    TopOnly,
    /// A rest at every interior bottom bounce, none at the top.
    BottomOnly,
    /// A rest at every interior bounce, top and bottom alike.
    Everywhere,
    /// Any other placement; never joins nontrivially in the catalog range.
    Irregular,
}

/// Classifies rest placement structurally from the folding. Identity has
/// no rests. Panics on Total.
pub fn rest_profile(c: &CanonicalCongruence) -> RestProfile {
    let (k, rests) = match c.kind() {
        Kind::Total => panic!("the total congruence has no rest profile"),
        Kind::Identity => return RestProfile::NoRests,
        Kind::Folded { step, rests } => (*step, rests.clone()),
    };
    if rests.is_empty() {
        return RestProfile::NoRests;
    }
    let n = c.n();
    let (mut top_rest, mut top_plain, mut bottom_rest, mut bottom_plain) = (0, 0, 0, 0);
    let mut e = 1;
    while e < n {
        let h = c.height(e);
        if h == 0 || h == k {
            let top = h == k;
            if rests.contains(&e) {
                // bounce with a rest covers the pair (e, e+1)
                if top {
                    top_rest += 1;
                } else {
                    bottom_rest += 1;
                }
                e += 2;
            } else {
                if top {
                    top_plain += 1;
                } else {
                    bottom_plain += 1;
                }
                e += 1;
            }
        } else {
            e += 1;
        }
    }
    match (top_rest > 0, top_plain > 0, bottom_rest > 0, bottom_plain > 0) {
        (true, false, false, _) => RestProfile::TopOnly,
        (false, _, true, false) => RestProfile::BottomOnly,
        (true, false, true, false) => RestProfile::Everywhere,
        _ => RestProfile::Irregular,
    }
}

/// The cases of the catalog of nontrivial joins, one per admissible pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogCase {
    /// The larger-step congruence is the identity.
    FreqOne,
    /// The larger-step congruence has frequency 2, the other is mirrored.
    FreqTwoMirrored,
    NoRests,
    /// One is even with rests on top, the other odd without rests.
    EvenTopVsOddNoRests,
    BothOddTop,
    SameParityBottom,
    /// One is even with rests on the bottom, the other odd with rests
    /// everywhere.
    EvenBottomVsOddEverywhere,
    BothEverywhere,
}

/// Classifies a pair into its catalog case, after normalizing so the
/// smaller step comes first. A pair matching no case yields
/// [`Error::CatalogMismatch`]; for a pair with a nontrivial join and
/// common extremes `{0, n}` that would falsify the catalog, so callers in
/// that position must surface it loudly.
pub fn catalog_case(
    a: &CanonicalCongruence,
    b: &CanonicalCongruence,
) -> Result<CatalogCase, Error> {
    assert_eq!(a.n(), b.n(), "congruences live on different lines");
    assert!(!a.is_total() && !b.is_total(), "the catalog covers nontrivial congruences");
    let (th, dl) = if (a.step(), a.rests()) <= (b.step(), b.rests()) { (a, b) } else { (b, a) };
    let mismatch = || Error::CatalogMismatch {
        n: a.n(),
        a: th.to_string(),
        b: dl.to_string(),
    };
    match dl.frequency() {
        1 => Ok(CatalogCase::FreqOne),
        2 => {
            if th.is_mirrored() {
                Ok(CatalogCase::FreqTwoMirrored)
            } else {
                Err(mismatch())
            }
        }
        _ => {
            let (pt, pd) = (rest_profile(th), rest_profile(dl));
            let (even_t, even_d) = (th.frequency() % 2 == 0, dl.frequency() % 2 == 0);
            if even_t && even_d {
                // two even frequencies force a common extreme below n
                return Err(mismatch());
            }
            use RestProfile::*;
            match (pt, pd) {
                (NoRests, NoRests) => Ok(CatalogCase::NoRests),
                (TopOnly, NoRests) if even_t => Ok(CatalogCase::EvenTopVsOddNoRests),
                (NoRests, TopOnly) if even_d => Ok(CatalogCase::EvenTopVsOddNoRests),
                (TopOnly, TopOnly) if !even_t && !even_d => Ok(CatalogCase::BothOddTop),
                (BottomOnly, BottomOnly) if even_t == even_d => Ok(CatalogCase::SameParityBottom),
                (BottomOnly, Everywhere) if even_t => Ok(CatalogCase::EvenBottomVsOddEverywhere),
                (Everywhere, BottomOnly) if even_d => Ok(CatalogCase::EvenBottomVsOddEverywhere),
                (Everywhere, Everywhere) => Ok(CatalogCase::BothEverywhere),
                _ => Err(mismatch()),
            }
        }
    }
}

/// The two-part union relation of the catalog's simplified-expression
/// table: `x ≡ y (mod q)` or `x + y + offset ≡ 0 (mod q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplifiedRelation {
    pub modulus: usize,
    pub offset: usize,
}

impl SimplifiedRelation {
    pub fn related(&self, x: usize, y: usize) -> bool {
        let q = self.modulus;
        (x % q == y % q) || ((x + y + self.offset) % q == 0)
    }
}

/// The table row for a profile and step, valid for catalog members with
/// frequency at least 3.
pub fn simplified_relation(profile: RestProfile, step: usize) -> Result<SimplifiedRelation, Error> {
    match profile {
        RestProfile::NoRests => Ok(SimplifiedRelation { modulus: 2 * step, offset: 0 }),
        RestProfile::TopOnly => Ok(SimplifiedRelation { modulus: 2 * step + 1, offset: 0 }),
        RestProfile::BottomOnly => Ok(SimplifiedRelation { modulus: 2 * step + 1, offset: 1 }),
        RestProfile::Everywhere => Ok(SimplifiedRelation { modulus: 2 * step + 2, offset: 1 }),
        RestProfile::Irregular => Err(Error::IrregularProfile),
    }
}

/// The line length carrying a catalog congruence of the given profile,
/// step, and frequency (frequency at least 3).
pub fn n_from_step_frequency(
    profile: RestProfile,
    step: usize,
    frequency: usize,
) -> Result<usize, Error> {
    assert!(frequency >= 3, "the table applies to frequencies of at least 3");
    let l = step;
    let f = frequency;
    match profile {
        RestProfile::NoRests => Ok(l * f),
        RestProfile::TopOnly => {
            Ok(if f % 2 == 0 { (2 * l + 1) * f / 2 } else { ((2 * l + 1) * f - 1) / 2 })
        }
        RestProfile::BottomOnly => {
            Ok(if f % 2 == 0 { (2 * l + 1) * f / 2 - 1 } else { ((2 * l + 1) * f - 1) / 2 })
        }
        RestProfile::Everywhere => Ok((l + 1) * f - 1),
        RestProfile::Irregular => Err(Error::IrregularProfile),
    }
}

/// Step of a nontrivial join: the integral division of `n` by
/// `lcm(f_a, f_b)`. Errs when the join is total.
pub fn step_of_join(a: &CanonicalCongruence, b: &CanonicalCongruence) -> Result<usize, Error> {
    assert!(!a.is_total() && !b.is_total(), "step_of_join needs nontrivial congruences");
    if join(a, b).is_total() {
        return Err(Error::TrivialJoin { n: a.n(), a: a.to_string(), b: b.to_string() });
    }
    Ok(a.n() / lcm(a.frequency(), b.frequency()))
}

/// What the frequency map does on the principal ideal below `rho`.
#[derive(Debug, Clone)]
pub struct DivisorEmbedding {
    pub rho: CanonicalCongruence,
    /// All congruences below `rho`, in enumeration order.
    pub ideal: Vec<CanonicalCongruence>,
    pub frequencies: Vec<usize>,
    pub injective: bool,
    pub image_divides: bool,
    pub meet_to_gcd: bool,
    pub join_to_lcm: bool,
    pub bottom_to_one: bool,
    pub top_to_frequency: bool,
}

impl DivisorEmbedding {
    /// Whether the map is a bounded-lattice embedding into the divisors
    /// of `f_ρ`.
    pub fn is_embedding(&self) -> bool {
        self.injective
            && self.image_divides
            && self.meet_to_gcd
            && self.join_to_lcm
            && self.bottom_to_one
            && self.top_to_frequency
    }
}

/// Computes the ideal `(ρ] = {ϑ ≤ ρ}` and reports whether `ϑ ↦ f_ϑ` embeds
/// it into the divisor lattice of `f_ρ`. Panics on a total `rho`.
pub fn divisor_embedding(rho: &CanonicalCongruence) -> DivisorEmbedding {
    assert!(!rho.is_total(), "the embedding is defined below a nontrivial congruence");
    let n = rho.n();
    let f_rho = rho.frequency();
    let ideal: Vec<CanonicalCongruence> =
        crate::congruence::enumerate(n).into_iter().filter(|c| leq(c, rho)).collect();
    let frequencies: Vec<usize> = ideal.iter().map(|c| c.frequency()).collect();
    let mut injective = true;
    let mut meet_to_gcd = true;
    let mut join_to_lcm = true;
    for (i, x) in ideal.iter().enumerate() {
        for (j, y) in ideal.iter().enumerate() {
            if i < j && frequencies[i] == frequencies[j] {
                injective = false;
            }
            if meet(x, y).frequency() != gcd(frequencies[i], frequencies[j]) {
                meet_to_gcd = false;
            }
            if join(x, y).frequency() != lcm(frequencies[i], frequencies[j]) {
                join_to_lcm = false;
            }
        }
    }
    let image_divides = frequencies.iter().all(|&f| f_rho % f == 0);
    let bottom_to_one =
        ideal.iter().zip(&frequencies).any(|(c, &f)| c.is_identity() && f == 1);
    let top_to_frequency =
        ideal.iter().zip(&frequencies).any(|(c, &f)| c == rho && f == f_rho);
    DivisorEmbedding {
        rho: rho.clone(),
        ideal,
        frequencies,
        injective,
        image_divides,
        meet_to_gcd,
        join_to_lcm,
        bottom_to_one,
        top_to_frequency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::enumerate;
    use crate::frame::BinaryRelation;

    fn c(n: usize, text: &str) -> CanonicalCongruence {
        CanonicalCongruence::parse(n, text).unwrap()
    }

    #[test]
    fn common_extremes_examples() {
        assert_eq!(common_extremes(&c(18, "4;4,13"), &c(18, "6")), vec![0, 18]);
        assert_eq!(common_extremes(&c(12, "2"), &c(12, "3")), vec![0, 6, 12]);
        assert_eq!(common_extremes(&c(4, "1"), &c(4, "2")), vec![0, 2, 4]);
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&c(9, "4;4"), &c(9, "2;4")));
        assert!(!leq(&c(12, "2"), &c(12, "3")));
        assert!(!leq(&c(12, "3"), &c(12, "2")));
        for probe in ["id", "total", "2;4", "1"] {
            assert!(leq(&c(9, "id"), &c(9, probe)));
            assert!(leq(&c(9, probe), &c(9, "total")));
        }
    }

    #[test]
    fn leq_matches_refinement_on_l10() {
        for a in enumerate(10) {
            for b in enumerate(10) {
                assert_eq!(
                    leq(&a, &b),
                    a.to_partition().refines(&b.to_partition()),
                    "order disagreement at ({a}, {b})"
                );
            }
        }
    }

    #[test]
    fn compatible_examples() {
        // no rests: vacuously compatible with anything nontrivial
        assert!(compatible(&c(12, "2"), &c(12, "6")));
        // any congruence is compatible with the meet candidate it lies above
        let th = c(18, "4;4,13");
        let dl = c(18, "6");
        let gamma = meet(&th, &dl);
        assert!(compatible(&th, &gamma));
        assert!(compatible(&dl, &gamma));
    }

    #[test]
    fn compatibility_is_the_tight_clause_somewhere_on_l12() {
        // find a pair where the first two order clauses hold and only
        // compatibility fails; derived by scan, not hardcoded
        let all = enumerate(12);
        let mut found = None;
        'outer: for a in &all {
            for b in &all {
                if a.is_total() || b.is_total() || a.is_identity() || b.is_identity() {
                    continue;
                }
                let e = a.step();
                let h = b.height(e);
                let clause1 = h == 0 || h == b.step();
                let rb = b.rests();
                let clause2 = a.rests().iter().all(|r| rb.contains(r));
                if clause1 && clause2 && !compatible(b, a) {
                    found = Some((a.clone(), b.clone()));
                    break 'outer;
                }
            }
        }
        let (a, b) = found.expect("some pair fails only by compatibility");
        assert!(!leq(&a, &b));
        assert!(!a.to_partition().refines(&b.to_partition()));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&c(4, "1"), &c(4, "2")), c(4, "2"));
        assert_eq!(meet(&c(12, "2"), &c(12, "3")), c(12, "6"));
        assert_eq!(meet(&c(6, "2"), &c(6, "3")), c(6, "id"));
        assert_eq!(meet(&c(18, "4;4,13"), &c(18, "6")), c(18, "id"));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&c(6, "2"), &c(6, "3")), c(6, "1"));
        assert_eq!(join(&c(9, "4;4"), &c(9, "1")), c(9, "total"));
        assert_eq!(join(&c(12, "2"), &c(12, "3")), c(12, "1"));
        assert_eq!(join(&c(18, "4;4,13"), &c(18, "id")), c(18, "4;4,13"));
    }

    #[test]
    fn criterion_examples() {
        assert!(join_is_nontrivial(&c(18, "4;4,13"), &c(18, "6")));
        assert!(!join_is_nontrivial(&c(9, "4;4"), &c(9, "1")));
        assert!(join_is_nontrivial(&c(39, "7;7,15,23,31"), &c(39, "9;9,19,29")));
    }

    #[test]
    fn criterion_report_shows_failed_clause() {
        let report = criterion_report(&c(9, "4;4"), &c(9, "1"));
        assert!(!report.nontrivial);
        assert_eq!(report.clauses[0].1, ClauseOutcome::Fail);
        assert!(report.clauses[1..].iter().all(|(_, o)| *o == ClauseOutcome::Skipped));
    }

    #[test]
    fn permutes_examples() {
        // nontrivial join: the permutability theorem
        assert!(permutes(&c(18, "4;4,13"), &c(18, "6")));
        // mirrored with the frequency-two partner
        assert!(permutes(&c(12, "2;4,7"), &c(12, "6")));
    }

    #[test]
    fn first_non_permuting_pair_below_l9() {
        // scan for a trivial-join pair that fails to permute; the paper's
        // theorem only covers nontrivial joins
        let mut found = None;
        'outer: for n in 2..=9 {
            let all = enumerate(n);
            for a in &all {
                for b in &all {
                    if a.is_total() || b.is_total() {
                        continue;
                    }
                    if join(a, b).is_total() && !permutes(a, b) {
                        found = Some((n, a.clone(), b.clone()));
                        break 'outer;
                    }
                }
            }
        }
        let (n, a, b) = found.expect("some trivial-join pair fails to permute");
        assert!(join(&a, &b).is_total());
        assert!(!permutes(&a, &b));
        // frozen fixture for the record
        assert_eq!((n, a.to_string(), b.to_string()), (4, "1;1".into(), "1;2".into()));
    }

    #[test]
    fn rest_profiles() {
        assert_eq!(rest_profile(&c(18, "4;4,13")), RestProfile::TopOnly);
        assert_eq!(rest_profile(&c(18, "6")), RestProfile::NoRests);
        assert_eq!(rest_profile(&c(22, "4;8,17")), RestProfile::BottomOnly);
        assert_eq!(rest_profile(&c(22, "7;14")), RestProfile::BottomOnly);
        assert_eq!(rest_profile(&c(44, "8;8,17,26,35")), RestProfile::Everywhere);
        assert_eq!(rest_profile(&c(39, "7;7,15,23,31")), RestProfile::Everywhere);
        assert_eq!(rest_profile(&c(9, "id")), RestProfile::NoRests);
    }

    #[test]
    fn catalog_cases() {
        assert_eq!(
            catalog_case(&c(22, "4;4,13"), &c(22, "7;7")).unwrap(),
            CatalogCase::BothOddTop
        );
        assert_eq!(
            catalog_case(&c(44, "7;14,29"), &c(44, "8;8,17,26,35")).unwrap(),
            CatalogCase::EvenBottomVsOddEverywhere
        );
        assert_eq!(
            catalog_case(&c(18, "4;4,13"), &c(18, "6")).unwrap(),
            CatalogCase::EvenTopVsOddNoRests
        );
        // ⟨3⟩ on L_6 has frequency 2, so the pair lands in the mirrored case
        assert_eq!(
            catalog_case(&c(6, "2"), &c(6, "3")).unwrap(),
            CatalogCase::FreqTwoMirrored
        );
        assert_eq!(
            catalog_case(&c(12, "3"), &c(12, "4")).unwrap(),
            CatalogCase::NoRests
        );
        // both frequencies even never joins with common extremes {0, n}
        assert!(catalog_case(&c(12, "2"), &c(12, "3")).is_err());
        assert_eq!(catalog_case(&c(9, "2;4"), &c(9, "id")).unwrap(), CatalogCase::FreqOne);
    }

    #[test]
    fn simplified_relation_rows() {
        // rests on top, k = 4, n = 18: ≡₉ ∪ {x + y ≡₉ 0}
        let th = c(18, "4;4,13");
        let simple = simplified_relation(RestProfile::TopOnly, 4).unwrap();
        assert_eq!(simple.modulus, 9);
        for x in 0..=18 {
            for y in 0..=18 {
                assert_eq!(simple.related(x, y), th.related(x, y), "at ({x},{y})");
            }
        }
        assert_eq!(
            simplified_relation(RestProfile::NoRests, 6).unwrap(),
            SimplifiedRelation { modulus: 12, offset: 0 }
        );
        assert_eq!(
            simplified_relation(RestProfile::Everywhere, 7).unwrap(),
            SimplifiedRelation { modulus: 16, offset: 1 }
        );
        assert!(simplified_relation(RestProfile::Irregular, 3).is_err());
    }

    #[test]
    fn n_from_step_frequency_rows() {
        assert_eq!(n_from_step_frequency(RestProfile::NoRests, 6, 3).unwrap(), 18);
        assert_eq!(n_from_step_frequency(RestProfile::TopOnly, 4, 4).unwrap(), 18);
        assert_eq!(n_from_step_frequency(RestProfile::Everywhere, 7, 5).unwrap(), 39);
        assert_eq!(n_from_step_frequency(RestProfile::BottomOnly, 7, 3).unwrap(), 22);
        assert_eq!(n_from_step_frequency(RestProfile::BottomOnly, 7, 6).unwrap(), 44);
    }

    #[test]
    fn step_of_join_examples() {
        assert_eq!(step_of_join(&c(18, "4;4,13"), &c(18, "6")).unwrap(), 1);
        // the floor form ⌊nkl/((n−|r̄|)(n−|s̄|))⌋ agrees
        assert_eq!(18 * 4 * 6 / (16 * 18), 1);
        assert_eq!(step_of_join(&c(12, "2"), &c(12, "3")).unwrap(), 1);
        let cc = c(12, "2;4,7");
        assert_eq!(step_of_join(&cc, &c(12, "id")).unwrap(), cc.step());
        assert!(matches!(
            step_of_join(&c(9, "4;4"), &c(9, "1")),
            Err(Error::TrivialJoin { .. })
        ));
    }

    #[test]
    fn divisor_embedding_examples() {
        let report = divisor_embedding(&c(12, "1"));
        assert!(report.is_embedding());
        assert!(report.frequencies.iter().all(|&f| 12 % f == 0));

        let report = divisor_embedding(&c(12, "id"));
        assert!(report.is_embedding());
        assert_eq!(report.frequencies, vec![1]);

        let report = divisor_embedding(&c(12, "2"));
        assert!(report.is_embedding());
        assert!(report.ideal.contains(&c(12, "6")));
    }

    #[test]
    fn modular_style_relation_pairs_permute() {
        // the relation shapes underlying permutability: ≡_s together with
        // x+y ≡_t 0 and x+y+1 ≡_t 0 variants, on {0,…,lcm(s,t)}
        fn eq_mod(n: usize, s: usize) -> BinaryRelation {
            BinaryRelation::new(
                n,
                (0..=n).flat_map(move |x| (0..=n).filter(move |y| x % s == y % s).map(move |y| (x, y))),
            )
        }
        fn sum_zero(n: usize, t: usize, offset: usize) -> BinaryRelation {
            BinaryRelation::new(
                n,
                (0..=n)
                    .flat_map(move |x| (0..=n).filter(move |&y| (x + y + offset) % t == 0).map(move |y| (x, y))),
            )
        }
        fn permute(r1: &BinaryRelation, r2: &BinaryRelation) -> bool {
            r1.compose(r2).unwrap() == r2.compose(r1).unwrap()
        }
        for s in 1..=8 {
            for t in 1..=8 {
                let n = lcm(s, t);
                let pairs = [
                    (eq_mod(n, s), sum_zero(n, t, 0)),
                    (sum_zero(n, s, 0), sum_zero(n, t, 0)),
                    (eq_mod(n, s), sum_zero(n, t, 1)),
                    (sum_zero(n, s, 1), sum_zero(n, t, 1)),
                ];
                for (i, (r1, r2)) in pairs.iter().enumerate() {
                    assert!(permute(r1, r2), "pair {i} fails for s={s}, t={t}");
                }
                // the mixed-offset pair x+y ≡_s 0 / x+y+1 ≡_t 0 needs the
                // crossing witness w ≡ −a−1 (mod t), w ≡ −c (mod s), which
                // is solvable precisely when gcd(s,t) divides 2; the
                // catalog only ever pairs equal offsets, so nothing else
                // relies on the remaining cases
                let mixed = (sum_zero(n, s, 0), sum_zero(n, t, 1));
                assert_eq!(permute(&mixed.0, &mixed.1), gcd(s, t) <= 2, "s={s}, t={t}");
            }
        }
    }
}
