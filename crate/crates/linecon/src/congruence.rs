//! Canonical form of line congruences.
//!
//! Every congruence of the line `L_n` is the diagonal, the total relation,
//! or a folded relation `⟨k; r̄⟩` determined by a step `k` and a strictly
//! increasing list of rest positions `r̄`:
//!
//! ```text
//! x ~ y  iff  x − Δ(x) ≡ ±(y − Δ(y))   (mod 2k)
//! ```
//!
//! where `Δ(x)` counts rest positions strictly below `x`. A folded form is
//! a congruence exactly when `k ≤ n/2`, `r̄ ⊆ [k, n−k]`, `k | r_i − i + 1`,
//! `k | n − |r̄|`, consecutive rests are more than 2 apart, and no rest
//! ends at `n`. This module builds, validates, converts, and enumerates
//! these forms, and derives their invariants (step, frequency, extremes,
//! mirroredness, restriction).

use std::fmt;

use crate::error::Error;
use crate::frame::Partition;

/// `Δ_r̄(x)`: how many entries of `rests` lie strictly below `x`.
/// Zero for the empty sequence.
pub fn delta(rests: &[usize], x: usize) -> usize {
    rests.iter().take_while(|&&r| r < x).count()
}

/// Structural shape of a congruence of `L_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// The diagonal: all singleton classes.
    Identity,
    /// One class: `L_n × L_n`.
    Total,
    /// The relation `⟨step; rests⟩`.
    Folded { step: usize, rests: Vec<usize> },
}

/// A congruence of the line `L_n` in canonical form.
///
/// Identity and Total are explicit variants rather than folded encodings:
/// the characterization's folded clauses require `k ≤ n/2`, which both
/// would violate, and the frequency of Total is undefined.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCongruence {
    n: usize,
    kind: Kind,
}

/// Which side of a rest `⟨r, r+1⟩` an element occupies: `r` is the left
/// part and `r + 1` the right part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestSide {
    Left,
    Right,
}

/// One failed clause of the folded-form characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    StepZero,
    /// `2k > n`.
    StepTooLarge { step: usize, n: usize },
    /// Rest list is not strictly increasing at `index` (0-based).
    RestsNotIncreasing { index: usize },
    /// `r_i ∉ [k, n−k]` (index 1-based).
    RestOutOfRange { index: usize, rest: usize, lo: usize, hi: usize },
    /// `k ∤ r_i − i + 1` (index 1-based).
    RestOffsetNotDivisible { index: usize, rest: usize, step: usize },
    /// `k ∤ n − |r̄|`.
    SlopesNotDivisible { n: usize, rest_count: usize, step: usize },
    /// Rests at adjacent positions, `r_{i+1} = r_i + 1` (index 1-based,
    /// names the earlier rest).
    AdjacentRests { index: usize },
    /// A rest ends at `n`, i.e. `r_m = n − 1`.
    RestEndsAtLineEnd { rest: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::StepZero => write!(f, "step must be positive"),
            Violation::StepTooLarge { step, n } => {
                write!(f, "step {step} exceeds n/2 = {n}/2")
            }
            Violation::RestsNotIncreasing { index } => {
                write!(f, "rests are not strictly increasing at position {index}")
            }
            Violation::RestOutOfRange { index, rest, lo, hi } => {
                write!(f, "rest r_{index} = {rest} lies outside [{lo}, {hi}]")
            }
            Violation::RestOffsetNotDivisible { index, rest, step } => {
                write!(f, "step {step} does not divide r_{index} − {index} + 1 = {}",
                    *rest as i64 - *index as i64 + 1)
            }
            Violation::SlopesNotDivisible { n, rest_count, step } => {
                write!(f, "step {step} does not divide n − |rests| = {n} − {rest_count}")
            }
            Violation::AdjacentRests { index } => {
                write!(f, "rests r_{index} and r_{} sit at adjacent positions", index + 1)
            }
            Violation::RestEndsAtLineEnd { rest } => {
                write!(f, "rest at {rest} ends at n")
            }
        }
    }
}

/// Outcome of validating a folded form, listing every failed clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks whether `⟨k; rests⟩` is a nontrivial congruence of `L_n`,
/// reporting each failed clause by name: `2k ≤ n`, `r̄ ⊆ [k, n−k]`,
/// `k | r_i − i + 1`, `k | n − |r̄|`, no rests at adjacent positions, and
/// no rest ending at `n`. Checked exhaustively against the brute-force
/// bisimulation filter for every line up to length 9.
pub fn validate(n: usize, step: usize, rests: &[usize]) -> ValidationReport {
    let mut violations = Vec::new();
    if step == 0 {
        violations.push(Violation::StepZero);
        return ValidationReport { violations };
    }
    if 2 * step > n {
        violations.push(Violation::StepTooLarge { step, n });
    }
    for w in rests.windows(2) {
        if w[1] <= w[0] {
            violations.push(Violation::RestsNotIncreasing {
                index: rests.iter().position(|&r| r == w[1]).unwrap_or(0),
            });
            return ValidationReport { violations };
        }
    }
    let (lo, hi) = (step, n.saturating_sub(step));
    for (i, &r) in rests.iter().enumerate() {
        let index = i + 1; // 1-based, as in the divisibility clause
        if r < lo || r > hi {
            violations.push(Violation::RestOutOfRange { index, rest: r, lo, hi });
        }
        // k | r_i − i + 1
        if (r as i64 - index as i64 + 1).rem_euclid(step as i64) != 0 {
            violations.push(Violation::RestOffsetNotDivisible { index, rest: r, step });
        }
    }
    // rests at adjacent positions relate three consecutive elements and
    // collapse everything; larger gaps are constrained by the divisibility
    // clause (gap ≡ 1 mod k)
    for (i, w) in rests.windows(2).enumerate() {
        if w[1] - w[0] < 2 {
            violations.push(Violation::AdjacentRests { index: i + 1 });
        }
    }
    if let Some(&last) = rests.last() {
        if last + 1 == n {
            violations.push(Violation::RestEndsAtLineEnd { rest: last });
        }
    }
    if rests.len() > n || (n - rests.len()) % step != 0 {
        violations.push(Violation::SlopesNotDivisible { n, rest_count: rests.len(), step });
    }
    ValidationReport { violations }
}

impl CanonicalCongruence {
    /// The total congruence on `L_n`.
    pub fn total(n: usize) -> CanonicalCongruence {
        CanonicalCongruence { n, kind: Kind::Total }
    }

    /// The identity congruence on `L_n`. On `L_0` the only partition is a
    /// single singleton class, which is trivial; it is represented as Total.
    pub fn identity(n: usize) -> CanonicalCongruence {
        if n == 0 {
            CanonicalCongruence::total(0)
        } else {
            CanonicalCongruence { n, kind: Kind::Identity }
        }
    }

    /// A validated folded congruence `⟨step; rests⟩` on `L_n`.
    pub fn folded(
        n: usize,
        step: usize,
        rests: Vec<usize>,
    ) -> Result<CanonicalCongruence, Error> {
        let report = validate(n, step, &rests);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(CanonicalCongruence { n, kind: Kind::Folded { step, rests } })
    }

    /// Parses the text form `"id"`, `"total"`, `"k"`, or `"k;r1,r2,…"`,
    /// validating the folded clauses against `n`.
    pub fn parse(n: usize, text: &str) -> Result<CanonicalCongruence, Error> {
        let t = text.trim();
        match t {
            "id" => return Ok(CanonicalCongruence::identity(n)),
            "total" => return Ok(CanonicalCongruence::total(n)),
            _ => {}
        }
        let parse_num = |s: &str| -> Result<usize, Error> {
            s.trim().parse::<usize>().map_err(|e| Error::Parse {
                text: text.to_string(),
                reason: format!("bad integer {s:?}: {e}"),
            })
        };
        let (step_part, rest_part) = match t.split_once(';') {
            Some((a, b)) => (a, Some(b)),
            None => (t, None),
        };
        let step = parse_num(step_part)?;
        let rests = match rest_part {
            None => Vec::new(),
            Some(list) => {
                if list.trim().is_empty() {
                    return Err(Error::Parse {
                        text: text.to_string(),
                        reason: "empty rest list after ';'".to_string(),
                    });
                }
                list.split(',').map(parse_num).collect::<Result<Vec<_>, _>>()?
            }
        };
        CanonicalCongruence::folded(n, step, rests)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn is_total(&self) -> bool {
        matches!(self.kind, Kind::Total)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, Kind::Identity)
    }

    /// `|L_n/θ| − 1`: the length of the quotient line. Total has step 0
    /// and Identity has step `n`.
    pub fn step(&self) -> usize {
        match &self.kind {
            Kind::Total => 0,
            Kind::Identity => self.n,
            Kind::Folded { step, .. } => *step,
        }
    }

    /// Rest positions `{r | r θ r+1}`. For Total every position is a rest.
    pub fn rests(&self) -> Vec<usize> {
        match &self.kind {
            Kind::Total => (0..self.n).collect(),
            Kind::Identity => Vec::new(),
            Kind::Folded { rests, .. } => rests.clone(),
        }
    }

    /// `(n − |r̄|) / k`: the number of monotone slopes of the folding.
    /// Identity has frequency 1.
    ///
    /// Panics on Total, whose frequency is undefined.
    pub fn frequency(&self) -> usize {
        match &self.kind {
            Kind::Total => panic!("frequency of the total congruence is undefined"),
            Kind::Identity => 1,
            Kind::Folded { step, rests } => (self.n - rests.len()) / step,
        }
    }

    /// Whether `x` and `y` are related. Panics if either is out of range.
    pub fn related(&self, x: usize, y: usize) -> bool {
        assert!(x <= self.n && y <= self.n, "element out of range for L_{}", self.n);
        match &self.kind {
            Kind::Total => true,
            Kind::Identity => x == y,
            Kind::Folded { step, rests } => {
                let q = 2 * *step as i64;
                let xv = x as i64 - delta(rests, x) as i64;
                let yv = y as i64 - delta(rests, y) as i64;
                (xv - yv).rem_euclid(q) == 0 || (xv + yv).rem_euclid(q) == 0
            }
        }
    }

    /// The unique `j ∈ [0, step]` with `x θ j`; equals both the height of
    /// `x` in the folding picture and the least element of its class.
    ///
    /// Panics on Total.
    pub fn height(&self, x: usize) -> usize {
        assert!(x <= self.n, "element out of range for L_{}", self.n);
        match &self.kind {
            Kind::Total => panic!("the total congruence has no folding"),
            Kind::Identity => x,
            Kind::Folded { step, rests } => {
                let q = 2 * *step as i64;
                let v = (x as i64 - delta(rests, x) as i64).rem_euclid(q);
                let v = v as usize;
                if v <= *step {
                    v
                } else {
                    2 * *step - v
                }
            }
        }
    }

    /// All elements related to `x`.
    pub fn class_of(&self, x: usize) -> Vec<usize> {
        (0..=self.n).filter(|&y| self.related(x, y)).collect()
    }

    /// `ext(θ) = 0/θ ∪ k/θ`: the elements whose class is an endpoint of
    /// the quotient line. For Identity this is `{0, n}`.
    ///
    /// Panics on Total.
    pub fn extremes(&self) -> Vec<usize> {
        let k = match &self.kind {
            Kind::Total => panic!("the total congruence has no extremes"),
            _ => self.step(),
        };
        (0..=self.n).filter(|&x| { let h = self.height(x); h == 0 || h == k }).collect()
    }

    /// Whether `x` is the left or right part of some rest, if either.
    pub fn rest_side(&self, x: usize) -> Option<RestSide> {
        match &self.kind {
            Kind::Total => {
                // every position is a rest; interior elements are both,
                // report Left first
                if x < self.n {
                    Some(RestSide::Left)
                } else if self.n > 0 {
                    Some(RestSide::Right)
                } else {
                    None
                }
            }
            Kind::Identity => None,
            Kind::Folded { rests, .. } => {
                if rests.contains(&x) {
                    Some(RestSide::Left)
                } else if x > 0 && rests.contains(&(x - 1)) {
                    Some(RestSide::Right)
                } else {
                    None
                }
            }
        }
    }

    /// Whether `x` is the left or right part of some rest.
    pub fn is_part_of_rest(&self, x: usize) -> bool {
        self.rest_side(x).is_some()
    }

    /// Expands the relation into an explicit block partition of `{0,…,n}`.
    pub fn to_partition(&self) -> Partition {
        match &self.kind {
            Kind::Total => Partition::total(self.n),
            Kind::Identity => Partition::identity(self.n),
            Kind::Folded { .. } => {
                let labels: Vec<usize> = (0..=self.n).map(|x| self.height(x)).collect();
                Partition::from_assignment(&labels)
            }
        }
    }

    /// Recovers the canonical form of a congruence given as a partition:
    /// the step is the number of classes minus one and the rests are the
    /// positions `{x | x θ x+1}`. Fails with [`Error::NotACongruence`]
    /// when the partition is not a congruence of the line.
    pub fn canonicalize(p: &Partition) -> Result<CanonicalCongruence, Error> {
        let n = p.n();
        if p.is_total() {
            return Ok(CanonicalCongruence::total(n));
        }
        if p.is_identity() {
            return Ok(CanonicalCongruence::identity(n));
        }
        let step = p.block_count() - 1;
        let rests: Vec<usize> = (0..n).filter(|&x| p.related(x, x + 1)).collect();
        if !validate(n, step, &rests).is_valid() {
            return Err(Error::NotACongruence);
        }
        let c = CanonicalCongruence { n, kind: Kind::Folded { step, rests } };
        if &c.to_partition() == p {
            Ok(c)
        } else {
            Err(Error::NotACongruence)
        }
    }

    /// Whether the rest set is invariant under `r ↦ n − r − 1`, i.e. the
    /// folding is symmetric about its middle point. Exactly the congruences
    /// that join nontrivially with a frequency-2 partner.
    ///
    /// Panics on Total.
    pub fn is_mirrored(&self) -> bool {
        match &self.kind {
            Kind::Total => panic!("mirroredness of the total congruence is undefined"),
            Kind::Identity => true,
            Kind::Folded { rests, .. } => {
                rests.iter().all(|&r| rests.contains(&(self.n - r - 1)))
            }
        }
    }

    /// `θ_a`: the restriction of the relation to `[0, a]`, in canonical
    /// form on `L_a`. Requires `a` to be an extreme that is not the right
    /// part of a rest; the rests of the result are the rests below `a`.
    pub fn restrict(&self, a: usize) -> Result<CanonicalCongruence, Error> {
        if a > self.n {
            return Err(Error::BadRestriction { a });
        }
        if a == 0 {
            return Ok(CanonicalCongruence::total(0));
        }
        match &self.kind {
            Kind::Total => Ok(CanonicalCongruence::total(a)),
            Kind::Identity => {
                if a == self.n {
                    Ok(self.clone())
                } else {
                    Err(Error::BadRestriction { a })
                }
            }
            Kind::Folded { step, rests } => {
                let h = self.height(a);
                if (h != 0 && h != *step) || rests.contains(&(a - 1)) {
                    return Err(Error::BadRestriction { a });
                }
                CanonicalCongruence::canonicalize(&self.to_partition().restrict(a))
            }
        }
    }
}

impl fmt::Display for CanonicalCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Identity => write!(f, "id"),
            Kind::Total => write!(f, "total"),
            Kind::Folded { step, rests } => {
                write!(f, "{step}")?;
                for (i, r) in rests.iter().enumerate() {
                    write!(f, "{}{r}", if i == 0 { ";" } else { "," })?;
                }
                Ok(())
            }
        }
    }
}

/// All congruences of `L_n`: Identity, Total, and every valid folded form,
/// in deterministic order (Identity, Total, then step ascending with rests
/// lexicographic).
pub fn enumerate(n: usize) -> Vec<CanonicalCongruence> {
    if n == 0 {
        return vec![CanonicalCongruence::total(0)];
    }
    let mut out = vec![CanonicalCongruence::identity(n), CanonicalCongruence::total(n)];
    let per_step = crate::par::ordered_flat_map((1..=n / 2).collect(), |k| folded_with_step(n, k));
    out.extend(per_step);
    out
}

/// Every valid `⟨k; r̄⟩` on `L_n` for one fixed step, rests in
/// lexicographic order.
fn folded_with_step(n: usize, k: usize) -> Vec<CanonicalCongruence> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_rests(n, k, &mut prefix, &mut out);
    out
}

/// Backtracks over rest positions: `r_i ≡ i − 1 (mod k)` inside
/// `[k, n−k]`, no adjacent rests, no rest ending at `n`, and
/// `k | n − |r̄|` at emission.
fn extend_rests(
    n: usize,
    k: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<CanonicalCongruence>,
) {
    if (n - prefix.len()) % k == 0 {
        out.push(CanonicalCongruence {
            n,
            kind: Kind::Folded { step: k, rests: prefix.clone() },
        });
    }
    // smallest admissible value for the next rest
    let lower = match prefix.last() {
        None => k,
        Some(&prev) => prev + 2,
    };
    let next_index = prefix.len() + 1; // 1-based index of the candidate
    let residue = (next_index - 1) % k;
    let hi = n - k;
    let mut r = lower + (residue + k - lower % k) % k;
    while r <= hi {
        if r + 1 != n {
            prefix.push(r);
            extend_rests(n, k, prefix, out);
            prefix.pop();
        }
        r += k;
    }
}
