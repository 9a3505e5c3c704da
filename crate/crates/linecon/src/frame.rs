//! Finite frames (directed graphs), equivalence partitions and binary
//! relations, with the bisimulation-based congruence test and quotients.
//!
//! A congruence of a frame is a bisimulation that is also an equivalence
//! relation. Everything here works for arbitrary frames; the rest of the
//! crate specializes to lines, and this module doubles as the independent
//! ground truth for that specialization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;

/// A finite frame `⟨F, R⟩`: nodes `0..size` and a set of directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    size: usize,
    edges: BTreeSet<(usize, usize)>,
    /// Successor lists, sorted; derived from `edges` at construction.
    adj: Vec<Vec<usize>>,
}

impl Frame {
    /// Builds a frame from an explicit edge set. Panics if an endpoint is
    /// out of range or `size` is zero.
    pub fn new(size: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Frame {
        assert!(size > 0, "a frame needs at least one node");
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        let mut adj = vec![Vec::new(); size];
        for &(x, y) in &edges {
            assert!(x < size && y < size, "edge ({x},{y}) out of range for size {size}");
            adj[x].push(y);
        }
        Frame { size, edges, adj }
    }

    /// The line `L_n`: nodes `{0,…,n}` with `x R y` iff `|x−y| ≤ 1`.
    pub fn line(n: usize) -> Frame {
        let mut edges = Vec::new();
        for x in 0..=n {
            edges.push((x, x));
            if x < n {
                edges.push((x, x + 1));
                edges.push((x + 1, x));
            }
        }
        Frame::new(n + 1, edges)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// `R[x]`, the successor set of `x`. Panics if `x` is out of range;
    /// `|R[x]|` is the valency `v(x)`.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        assert!(x < self.size, "node {x} out of range for frame of size {}", self.size);
        &self.adj[x]
    }

    /// Checks the congruence condition: for all `x' θ x` and `x R y` there
    /// is `y'` with `x' R y'` and `y' θ y`. Since partitions are symmetric
    /// this is the full bisimulation property.
    pub fn is_congruence(&self, p: &Partition) -> Result<bool, Error> {
        if p.ground_size() != self.size {
            return Err(Error::SizeMismatch { left: p.ground_size(), right: self.size });
        }
        for class in p.blocks() {
            for &x in &class {
                for &xp in &class {
                    if x == xp {
                        continue;
                    }
                    for &y in self.neighbors(x) {
                        let ok = self.neighbors(xp).iter().any(|&yp| p.block_of(yp) == p.block_of(y));
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// The quotient frame `F/θ`: nodes are block indices, with
    /// `a R_θ b` iff some `x ∈ a`, `y ∈ b` have `x R y`.
    ///
    /// Fails with [`Error::NotACongruence`] when `p` is not a congruence.
    pub fn quotient(&self, p: &Partition) -> Result<Frame, Error> {
        if !self.is_congruence(p)? {
            return Err(Error::NotACongruence);
        }
        let edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(x, y)| (p.block_of(x), p.block_of(y)))
            .collect();
        Ok(Frame::new(p.block_count(), edges))
    }
}

/// An equivalence relation on `{0,…,n}` stored as a restricted-growth
/// block assignment: block indices start at 0 and each new index is one
/// more than the maximum seen so far, so structural equality is partition
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
}

impl Partition {
    /// Canonicalizes an arbitrary labelling into restricted-growth form.
    /// Panics on an empty assignment.
    pub fn from_assignment(labels: &[usize]) -> Partition {
        assert!(!labels.is_empty(), "partition of an empty ground set");
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let next = remap.len();
            block_of.push(*remap.entry(l).or_insert(next));
        }
        Partition { block_of }
    }

    /// Builds a partition of `{0,…,n}` from explicit blocks, which must
    /// cover the ground set exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Partition {
        let mut labels = vec![usize::MAX; n + 1];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                assert!(x <= n, "element {x} outside ground set 0..={n}");
                assert!(labels[x] == usize::MAX, "element {x} appears in two blocks");
                labels[x] = i;
            }
        }
        assert!(labels.iter().all(|&l| l != usize::MAX), "blocks do not cover the ground set");
        Partition::from_assignment(&labels)
    }

    /// The identity (diagonal) partition on `{0,…,n}`: all singletons.
    pub fn identity(n: usize) -> Partition {
        Partition { block_of: (0..=n).collect() }
    }

    /// The total partition on `{0,…,n}`: one block.
    pub fn total(n: usize) -> Partition {
        Partition { block_of: vec![0; n + 1] }
    }

    /// Largest element of the ground set `{0,…,n}`.
    pub fn n(&self) -> usize {
        self.block_of.len() - 1
    }

    /// Number of elements in the ground set (`n + 1`).
    pub fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().copied().unwrap_or(0) + 1
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.block_of
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Blocks in order of their least elements.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks
    }

    pub fn is_identity(&self) -> bool {
        self.block_count() == self.ground_size()
    }

    pub fn is_total(&self) -> bool {
        self.block_count() == 1
    }

    /// True iff every block of `self` is contained in a block of `other`
    /// (i.e. `self ⊆ other` as relations).
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.ground_size(), other.ground_size(), "ground-set mismatch");
        let mut image = vec![usize::MAX; self.block_count()];
        for x in 0..self.ground_size() {
            let b = self.block_of[x];
            if image[b] == usize::MAX {
                image[b] = other.block_of[x];
            } else if image[b] != other.block_of[x] {
                return false;
            }
        }
        true
    }

    /// The partition relation as an explicit pair set.
    pub fn relation(&self) -> BinaryRelation {
        let n = self.n();
        let mut pairs = BTreeSet::new();
        for x in 0..=n {
            for y in 0..=n {
                if self.related(x, y) {
                    pairs.insert((x, y));
                }
            }
        }
        BinaryRelation { n, pairs }
    }

    /// Intersection of the relation with `[0,a] × [0,a]`, as a partition
    /// of `{0,…,a}`.
    pub fn restrict(&self, a: usize) -> Partition {
        assert!(a <= self.n());
        Partition::from_assignment(&self.block_of[..=a])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Smallest equivalence relation coarsening both arguments: the lattice
/// join of partitions, computed by union-find.
pub fn equivalence_closure(a: &Partition, b: &Partition) -> Result<Partition, Error> {
    if a.ground_size() != b.ground_size() {
        return Err(Error::SizeMismatch { left: a.ground_size(), right: b.ground_size() });
    }
    let mut uf = UnionFind::new(a.ground_size());
    for p in [a, b] {
        for block in p.blocks() {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    let labels: Vec<usize> = (0..a.ground_size()).map(|x| uf.find(x)).collect();
    Ok(Partition::from_assignment(&labels))
}

/// A set of ordered pairs over `{0,…,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl BinaryRelation {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> BinaryRelation {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(x, y) in &pairs {
            assert!(x <= n && y <= n, "pair ({x},{y}) outside [0,{n}]²");
        }
        BinaryRelation { n, pairs }
    }

    pub fn identity(n: usize) -> BinaryRelation {
        BinaryRelation { n, pairs: (0..=n).map(|x| (x, x)).collect() }
    }

    pub fn total(n: usize) -> BinaryRelation {
        let mut pairs = BTreeSet::new();
        for x in 0..=n {
            for y in 0..=n {
                pairs.insert((x, y));
            }
        }
        BinaryRelation { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// Relational composition `{(x,z) | ∃y: (x,y) ∈ self ∧ (y,z) ∈ other}`.
    pub fn compose(&self, other: &BinaryRelation) -> Result<BinaryRelation, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n + 1, right: other.n + 1 });
        }
        let mut by_first: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(y, z) in &other.pairs {
            by_first.entry(y).or_default().push(z);
        }
        let mut pairs = BTreeSet::new();
        for &(x, y) in &self.pairs {
            if let Some(zs) = by_first.get(&y) {
                for &z in zs {
                    pairs.insert((x, z));
                }
            }
        }
        Ok(BinaryRelation { n: self.n, pairs })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> UnionFind {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            // attach the larger root under the smaller so representatives
            // stay the least elements of their classes
            let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(n: usize, bs: &[&[usize]]) -> Partition {
        Partition::from_blocks(n, &bs.iter().map(|b| b.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn line_neighbors() {
        let l5 = Frame::line(5);
        assert_eq!(l5.neighbors(0), &[0, 1]);
        assert_eq!(l5.neighbors(2), &[1, 2, 3]);
        assert_eq!(l5.neighbors(0).len(), 2); // v(0) = 2
        let l1 = Frame::line(1);
        assert_eq!(l1.neighbors(0), &[0, 1]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn neighbors_out_of_range() {
        Frame::line(3).neighbors(4);
    }

    #[test]
    fn congruences_of_l5_from_figure() {
        let l5 = Frame::line(5);
        // ⟨1⟩: parity classes
        let p = blocks(5, &[&[0, 2, 4], &[1, 3, 5]]);
        assert!(l5.is_congruence(&p).unwrap());
        // ⟨2;2⟩: fold with a rest at 2
        let q = blocks(5, &[&[0, 5], &[1, 4], &[2, 3]]);
        assert!(l5.is_congruence(&q).unwrap());
    }

    #[test]
    fn common_refinement_is_not_a_congruence() {
        // intersection of two L_6 congruences as partitions:
        // {0},{1,5},{2},{3},{4},{6} — 1~5 but 0 has no partner next to 5's class
        let l6 = Frame::line(6);
        let p = blocks(6, &[&[0], &[1, 5], &[2], &[3], &[4], &[6]]);
        assert!(!l6.is_congruence(&p).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let l5 = Frame::line(5);
        assert!(matches!(
            l5.is_congruence(&Partition::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn quotient_of_line_is_line() {
        let l5 = Frame::line(5);
        let p = blocks(5, &[&[0, 2, 4], &[1, 3, 5]]);
        assert_eq!(l5.quotient(&p).unwrap(), Frame::line(1));
        let q = blocks(5, &[&[0, 5], &[1, 4], &[2, 3]]);
        assert_eq!(l5.quotient(&q).unwrap(), Frame::line(2));
        assert_eq!(l5.quotient(&Partition::identity(5)).unwrap(), Frame::line(5));
    }

    #[test]
    fn quotient_rejects_non_congruence() {
        let l6 = Frame::line(6);
        let p = blocks(6, &[&[0], &[1, 5], &[2], &[3], &[4], &[6]]);
        assert!(matches!(l6.quotient(&p), Err(Error::NotACongruence)));
    }

    #[test]
    fn quotient_preserves_neighbor_images() {
        // R_θ[x/θ] = R[x]/θ
        let l5 = Frame::line(5);
        let p = blocks(5, &[&[0, 5], &[1, 4], &[2, 3]]);
        let q = l5.quotient(&p).unwrap();
        for x in 0..=5 {
            let image: BTreeSet<usize> =
                l5.neighbors(x).iter().map(|&y| p.block_of(y)).collect();
            let direct: BTreeSet<usize> = q.neighbors(p.block_of(x)).iter().copied().collect();
            assert_eq!(image, direct);
        }
    }

    #[test]
    fn compose_examples() {
        // compose(Id, p) = relation of p
        let p = blocks(6, &[&[0, 4], &[1, 3, 5], &[2, 6]]);
        let id = BinaryRelation::identity(6);
        assert_eq!(id.compose(&p.relation()).unwrap(), p.relation());
        // compose(⟨2⟩, ⟨3⟩) on L_6 = relation of {0,2,4,6},{1,3,5}
        let two = blocks(6, &[&[0, 4], &[1, 3, 5], &[2, 6]]); // ⟨2⟩ on L_6
        let three = blocks(6, &[&[0, 6], &[1, 5], &[2, 4], &[3]]); // ⟨3⟩ on L_6
        let joined = blocks(6, &[&[0, 2, 4, 6], &[1, 3, 5]]);
        assert_eq!(
            two.relation().compose(&three.relation()).unwrap(),
            joined.relation()
        );
        // compose(p, Total) = all pairs
        assert_eq!(
            p.relation().compose(&BinaryRelation::total(6)).unwrap(),
            BinaryRelation::total(6)
        );
    }

    #[test]
    fn closure_examples() {
        let p = blocks(9, &[&[0, 9], &[1, 8], &[2, 7], &[3, 6], &[4, 5]]); // ⟨4;4⟩
        let id = Partition::identity(9);
        assert_eq!(equivalence_closure(&p, &id).unwrap(), p);
        let one = blocks(9, &[&[0, 2, 4, 6, 8], &[1, 3, 5, 7, 9]]); // ⟨1⟩
        assert!(equivalence_closure(&p, &one).unwrap().is_total());
        // closure(⟨2⟩, ⟨3⟩) on L_12 = parity partition
        let two = Partition::from_assignment(&[0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0]);
        let three = Partition::from_assignment(&[0, 1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 1, 0]);
        let parity = Partition::from_assignment(&[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]);
        assert_eq!(equivalence_closure(&two, &three).unwrap(), parity);
    }

    #[test]
    fn restricted_growth_canonical_labels() {
        let p = Partition::from_assignment(&[7, 3, 7, 1, 3]);
        assert_eq!(p.as_slice(), &[0, 1, 0, 2, 1]);
        assert_eq!(p.block_count(), 3);
        assert_eq!(p, blocks(4, &[&[0, 2], &[1, 4], &[3]]));
    }

    #[test]
    fn refinement_order() {
        let fine = blocks(5, &[&[0, 5], &[1, 4], &[2, 3]]);
        let coarse = Partition::total(5);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(Partition::identity(5).refines(&fine));
        assert!(fine.refines(&fine));
    }
}
