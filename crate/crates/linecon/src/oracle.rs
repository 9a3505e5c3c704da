//! Independent ground truth: exhaustive partition enumeration, brute-force
//! congruence lists, explicit lattice construction with meet/join tables,
//! and structural searches (pentagon, antichains).
//!
//! Nothing here depends on the canonical `⟨k; r̄⟩` machinery, so these
//! routines can cross-validate it. Enumeration streams partitions in
//! restricted-growth lexicographic order; Bell-number growth makes blind
//! attempts at large `n` a footgun, hence the hard cap with an explicit
//! override.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::frame::{equivalence_closure, Frame, Partition};
use crate::par;

/// Default cap on `n` for exhaustive enumeration. `Bell(11) ≈ 6.8 × 10⁵`
/// partitions for `n = 10` is still comfortable; a few steps further is not.
pub const DEFAULT_MAX_N: usize = 10;

/// `Bell(m)`: the number of partitions of an `m`-element set.
pub fn bell(m: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

fn check_cap(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        Err(Error::CapExceeded { n, cap, partitions: bell(n + 1) })
    } else {
        Ok(())
    }
}

/// Streams every partition of `{0,…,n}` exactly once, lexicographic by
/// restricted-growth string. Refuses `n` above [`DEFAULT_MAX_N`].
pub fn all_partitions(n: usize) -> Result<RgsIter, Error> {
    all_partitions_capped(n, DEFAULT_MAX_N)
}

/// Same as [`all_partitions`] with an explicit cap.
pub fn all_partitions_capped(n: usize, cap: usize) -> Result<RgsIter, Error> {
    check_cap(n, cap)?;
    Ok(RgsIter::fresh(n + 1))
}

/// Iterator over restricted-growth strings of a fixed length, optionally
/// with a frozen prefix.
pub struct RgsIter {
    a: Vec<usize>,
    /// positions below this index never change
    fixed: usize,
    started: bool,
    done: bool,
}

impl RgsIter {
    fn fresh(len: usize) -> RgsIter {
        RgsIter { a: vec![0; len], fixed: 0, started: false, done: false }
    }

    /// All strings of length `len` extending `prefix` (itself a valid RGS).
    fn with_prefix(prefix: &[usize], len: usize) -> RgsIter {
        let mut a = vec![0; len];
        a[..prefix.len()].copy_from_slice(prefix);
        RgsIter { a, fixed: prefix.len(), started: false, done: false }
    }

    fn advance(&mut self) -> bool {
        // rightmost mutable position that can still grow: a[i] may rise to
        // max(a[0..i]) + 1
        let len = self.a.len();
        let mut i = len;
        while i > self.fixed.max(1) {
            i -= 1;
            let max_prefix = self.a[..i].iter().max().copied().unwrap_or(0);
            if self.a[i] <= max_prefix {
                self.a[i] += 1;
                for j in i + 1..len {
                    self.a[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RgsIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Partition::from_assignment(&self.a))
    }
}

/// All restricted-growth prefixes of the given length, in lex order.
fn rgs_prefixes(len: usize) -> Vec<Vec<usize>> {
    RgsIter::fresh(len).map(|p| p.as_slice().to_vec()).collect()
}

const PARALLEL_PREFIX_LEN: usize = 6;

/// Every congruence of `L_n`, found by filtering all `Bell(n+1)` partitions
/// through the bisimulation test. Output is in restricted-growth lex order.
pub fn congruences_bruteforce(n: usize) -> Result<Vec<Partition>, Error> {
    congruences_bruteforce_capped(n, DEFAULT_MAX_N)
}

/// Same as [`congruences_bruteforce`] with an explicit cap. The partition
/// stream is split by first-block prefix for parallel filtering; the merge
/// is order-stable.
pub fn congruences_bruteforce_capped(n: usize, cap: usize) -> Result<Vec<Partition>, Error> {
    check_cap(n, cap)?;
    let line = Frame::line(n);
    if n + 1 <= PARALLEL_PREFIX_LEN + 1 {
        return Ok(filter_congruences(&line, RgsIter::fresh(n + 1)));
    }
    let prefixes = rgs_prefixes(PARALLEL_PREFIX_LEN);
    Ok(par::ordered_flat_map(prefixes, |prefix| {
        filter_congruences(&line, RgsIter::with_prefix(&prefix, n + 1))
    }))
}

/// Sequential reference path for [`congruences_bruteforce`]; the criterion
/// bench compares the two.
pub fn congruences_bruteforce_seq(n: usize, cap: usize) -> Result<Vec<Partition>, Error> {
    check_cap(n, cap)?;
    let line = Frame::line(n);
    Ok(filter_congruences(&line, RgsIter::fresh(n + 1)))
}

fn filter_congruences(line: &Frame, iter: RgsIter) -> Vec<Partition> {
    iter.filter(|p| line.is_congruence(p).expect("sizes match by construction")).collect()
}

/// A naive greatest-fixed-point bisimulation check: repeatedly discard
/// pairs whose successors cannot be matched, and accept iff the whole
/// relation of `p` survives. An independent route to the same answer as
/// [`Frame::is_congruence`].
pub fn fixed_point_congruence_check(f: &Frame, p: &Partition) -> bool {
    if p.ground_size() != f.size() {
        return false;
    }
    let mut rel: BTreeSet<(usize, usize)> = p.relation().pairs().clone();
    loop {
        let survives = |x: usize, y: usize, rel: &BTreeSet<(usize, usize)>| {
            f.neighbors(x)
                .iter()
                .all(|&xs| f.neighbors(y).iter().any(|&ys| rel.contains(&(xs, ys))))
                && f.neighbors(y)
                    .iter()
                    .all(|&ys| f.neighbors(x).iter().any(|&xs| rel.contains(&(xs, ys))))
        };
        let next: BTreeSet<(usize, usize)> =
            rel.iter().copied().filter(|&(x, y)| survives(x, y, &rel)).collect();
        if next.len() == rel.len() {
            break;
        }
        rel = next;
    }
    rel == *p.relation().pairs()
}

/// The congruence lattice of `L_n`, fully materialized: refinement order,
/// cover relation, and meet/join tables.
///
/// Meets come from a greatest-lower-bound search and joins from
/// union-find closure, so the tables are independent of the closed-form
/// lattice operations they are used to check.
#[derive(Debug, Clone)]
pub struct CongruenceLattice {
    n: usize,
    elements: Vec<Partition>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl CongruenceLattice {
    /// Builds the lattice from brute-force enumeration (subject to the cap).
    pub fn brute(n: usize, cap: usize) -> Result<CongruenceLattice, Error> {
        Ok(CongruenceLattice::from_elements(n, congruences_bruteforce_capped(n, cap)?))
    }

    /// Builds the lattice from the canonical enumeration, which has no cap.
    /// Sound once the enumeration has been checked against brute force.
    pub fn from_enumeration(n: usize) -> CongruenceLattice {
        let elements: Vec<Partition> =
            crate::congruence::enumerate(n).iter().map(|c| c.to_partition()).collect();
        CongruenceLattice::from_elements(n, elements)
    }

    fn from_elements(n: usize, mut elements: Vec<Partition>) -> CongruenceLattice {
        elements.sort();
        elements.dedup();
        let m = elements.len();
        let leq: Vec<Vec<bool>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| a.refines(b)).collect())
            .collect();
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j && leq[i][j] {
                    let direct = !(0..m)
                        .any(|t| t != i && t != j && leq[i][t] && leq[t][j]);
                    if direct {
                        covers.push((i, j));
                    }
                }
            }
        }
        let mut meet = vec![vec![0; m]; m];
        let mut join = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                meet[i][j] = Self::glb(&leq, i, j);
                let closed = equivalence_closure(&elements[i], &elements[j])
                    .expect("same ground set");
                join[i][j] = elements
                    .binary_search(&closed)
                    .unwrap_or_else(|_| {
                        panic!(
                            "join closure of congruences left the congruence set: \
                             {} ∨ {} on L_{n}",
                            elements[i], elements[j]
                        )
                    });
            }
        }
        let bottom = elements
            .iter()
            .position(|p| p.is_identity())
            .expect("identity is always a congruence");
        let top = elements
            .iter()
            .position(|p| p.is_total())
            .expect("total is always a congruence");
        CongruenceLattice { n, elements, leq, covers, meet, join, bottom, top }
    }

    /// Greatest lower bound by search over the order matrix; panics if the
    /// lower bounds have no greatest element, which would falsify that the
    /// congruences form a lattice.
    fn glb(leq: &[Vec<bool>], i: usize, j: usize) -> usize {
        let m = leq.len();
        let lower: Vec<usize> = (0..m).filter(|&t| leq[t][i] && leq[t][j]).collect();
        let mut greatest = None;
        for &cand in &lower {
            if lower.iter().all(|&o| leq[o][cand]) {
                assert!(greatest.is_none(), "two maximal lower bounds: not a lattice");
                greatest = Some(cand);
            }
        }
        greatest.expect("congruence meets must exist")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Partition {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn meet_index(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join_index(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    /// Hasse edges, lower element first.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.leq[i][j] && !self.leq[j][i]
    }

    /// First pentagon sublattice in index order: `(z, a, b, c, t)` with
    /// `z < a < b < t`, `c` incomparable to both `a` and `b`,
    /// `a∧c = b∧c = z` and `a∨c = b∨c = t`.
    pub fn find_pentagon(&self) -> Option<[usize; 5]> {
        let m = self.len();
        for a in 0..m {
            for b in 0..m {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                for c in 0..m {
                    if !self.incomparable(c, a) || !self.incomparable(c, b) {
                        continue;
                    }
                    let z = self.meet[a][c];
                    let t = self.join[a][c];
                    if self.meet[b][c] == z && self.join[b][c] == t {
                        return Some([z, a, b, c, t]);
                    }
                }
            }
        }
        None
    }

    /// First antichain of `m` elements strictly between bottom and top,
    /// pairwise incomparable, with all pairwise meets at bottom and joins
    /// at top (an `M_m`-style configuration).
    pub fn find_m_antichain(&self, m: usize) -> Option<Vec<usize>> {
        let candidates: Vec<usize> =
            (0..self.len()).filter(|&i| i != self.bottom && i != self.top).collect();
        let mut chosen = Vec::new();
        if self.antichain_search(&candidates, 0, m, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn antichain_search(
        &self,
        candidates: &[usize],
        from: usize,
        m: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == m {
            return true;
        }
        for (pos, &cand) in candidates.iter().enumerate().skip(from) {
            let compatible = chosen.iter().all(|&c| {
                self.incomparable(c, cand)
                    && self.meet[c][cand] == self.bottom
                    && self.join[c][cand] == self.top
            });
            if compatible {
                chosen.push(cand);
                if self.antichain_search(candidates, pos + 1, m, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}
