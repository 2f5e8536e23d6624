//! The formula graph: one vertex per ordered voter pair `(i, j)`, standing
//! for "`i` comes before `j`", and one edge per equality forced by a
//! non-betweenness constraint.
//!
//! A constraint `(a, b, c)` forces `(a, b) = (c, b)` and `(b, a) = (b, c)`.
//! Components therefore hold pairs that must be ordered the same way, and
//! the reversed image of a component is again a component. If a component
//! meets its own reversed image the constraints are unsatisfiable; otherwise
//! components pair up as `{S, S̄}`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::nb::NbInstance;
use crate::union_find::UnionFind;

/// An ordered voter pair `(i, j)` with `i != j`.
pub type Pair = (usize, usize);

/// Reversal `(i, j) ↦ (j, i)`.
pub fn complement((i, j): Pair) -> Pair {
    (j, i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaGraph {
    n: usize,
    // undirected edges between vertex indices, stored with the smaller index first
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl FormulaGraph {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// `n (n - 1)`.
    pub fn vertex_count(&self) -> usize {
        self.n * self.n.saturating_sub(1)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of `(i, j)` in `0..n(n-1)`; lexicographic order of pairs is
    /// preserved.
    pub fn index(&self, (i, j): Pair) -> usize {
        debug_assert!(i != j && i < self.n && j < self.n);
        i * (self.n - 1) + if j > i { j - 1 } else { j }
    }

    pub fn pair(&self, index: usize) -> Pair {
        let i = index / (self.n - 1);
        let r = index % (self.n - 1);
        (i, if r >= i { r + 1 } else { r })
    }

    pub fn has_edge(&self, u: Pair, v: Pair) -> bool {
        if !self.is_vertex(u) || !self.is_vertex(v) {
            return false;
        }
        let (a, b) = (self.index(u), self.index(v));
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_vertex(&self, (i, j): Pair) -> bool {
        i != j && i < self.n && j < self.n
    }

    /// Edges as pair tuples, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (Pair, Pair)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.pair(a), self.pair(b)))
    }

    pub fn neighbours(&self, u: Pair) -> impl Iterator<Item = Pair> + '_ {
        self.adjacency[self.index(u)].iter().map(|&w| self.pair(w))
    }

    pub fn degree(&self, u: Pair) -> usize {
        self.adjacency[self.index(u)].len()
    }

    /// Shortest path between two vertices, both endpoints included.
    pub fn path(&self, from: Pair, to: Pair) -> Option<Vec<Pair>> {
        let (src, dst) = (self.index(from), self.index(to));
        let mut prev = vec![usize::MAX; self.vertex_count()];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == dst {
                let mut path = vec![self.pair(u)];
                let mut cur = u;
                while cur != src {
                    cur = prev[cur];
                    path.push(self.pair(cur));
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adjacency[u] {
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// For each constraint `(a, b, c)` adds `(a, b)  --  (c, b)` and `(b, a)  --  (b, c)`.
pub fn build_formula_graph(inst: &NbInstance) -> FormulaGraph {
    let n = inst.ground_size();
    let mut g = FormulaGraph {
        n,
        edges: BTreeSet::new(),
        adjacency: Vec::new(),
    };
    let mut edges = BTreeSet::new();
    for (a, b, c) in inst.triples() {
        for (u, v) in [((a, b), (c, b)), ((b, a), (b, c))] {
            let (x, y) = (g.index(u), g.index(v));
            edges.insert((x.min(y), x.max(y)));
        }
    }
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for &(x, y) in &edges {
        adjacency[x].push(y);
        adjacency[y].push(x);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    g.edges = edges;
    g.adjacency = adjacency;
    g
}

/// One complementary pair `{S, S̄}`. `S` is the component holding the
/// lexicographically smallest pair of `S ∪ S̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPair {
    members: Vec<Pair>,
}

impl ComponentPair {
    /// Members of `S`, sorted.
    pub fn members(&self) -> &[Pair] {
        &self.members
    }

    /// Members of `S̄`, sorted.
    pub fn complement(&self) -> Vec<Pair> {
        let mut c: Vec<Pair> = self.members.iter().copied().map(complement).collect();
        c.sort_unstable();
        c
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

/// The pairing of all formula-graph components into `{S_i, S̄_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementaryPartition {
    n: usize,
    pairs: Vec<ComponentPair>,
    // per vertex index: (pair id, true if the vertex lies in S rather than S̄)
    lookup: Vec<(usize, bool)>,
}

impl ComplementaryPartition {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Pairs ordered by their smallest member.
    pub fn pairs(&self) -> &[ComponentPair] {
        &self.pairs
    }

    /// Which pair contains `(i, j)` and whether it lies on the `S` side.
    pub fn locate(&self, (i, j): Pair) -> (usize, bool) {
        let idx = i * (self.n - 1) + if j > i { j - 1 } else { j };
        self.lookup[idx]
    }

    pub fn same_component(&self, u: Pair, v: Pair) -> bool {
        self.locate(u) == self.locate(v)
    }

    /// Size of the component containing `u`.
    pub fn component_size(&self, u: Pair) -> usize {
        self.pairs[self.locate(u).0].len()
    }

    pub fn non_singleton_count(&self) -> usize {
        self.pairs.iter().filter(|p| !p.is_singleton()).count()
    }
}

/// A component that contains both `witness` and its reversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementClash {
    pub witness: Pair,
    /// Path in the formula graph from `witness` to its reversal.
    pub path: Vec<Pair>,
}

impl ComplementClash {
    /// Re-checks the witness path against `g`.
    pub fn verify(&self, g: &FormulaGraph) -> bool {
        self.path.first() == Some(&self.witness)
            && self.path.last() == Some(&complement(self.witness))
            && self.path.iter().all(|&u| g.is_vertex(u))
            && self.path.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Pairs every component with its reversed image, or reports the smallest
/// pair that is connected to its own reversal.
pub fn complementary_pairs_partition(
    g: &FormulaGraph,
) -> Result<ComplementaryPartition, ComplementClash> {
    let n = g.ground_size();
    let count = g.vertex_count();
    let mut uf = UnionFind::new(count);
    for &(x, y) in &g.edges {
        uf.union(x, y);
    }
    let roots: Vec<usize> = (0..count).map(|x| uf.find(x)).collect();
    let comp_index = |x: usize| roots[g.index(complement(g.pair(x)))];
    if let Some(x) = (0..count).find(|&x| roots[x] == comp_index(x)) {
        let witness = g.pair(x);
        let path = g
            .path(witness, complement(witness))
            .expect("same component");
        return Err(ComplementClash { witness, path });
    }
    // root -> (pair id, side)
    let mut side_of_root: Vec<Option<(usize, bool)>> = vec![None; count];
    let mut pairs: Vec<ComponentPair> = Vec::new();
    let mut lookup = Vec::with_capacity(count);
    for x in 0..count {
        let root = roots[x];
        let entry = match side_of_root[root] {
            Some(e) => e,
            None => {
                let id = pairs.len();
                pairs.push(ComponentPair {
                    members: Vec::new(),
                });
                side_of_root[root] = Some((id, true));
                side_of_root[comp_index(x)] = Some((id, false));
                (id, true)
            }
        };
        if entry.1 {
            pairs[entry.0].members.push(g.pair(x));
        }
        lookup.push(entry);
    }
    Ok(ComplementaryPartition { n, pairs, lookup })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trips() {
        let g = build_formula_graph(&NbInstance::new(4, []).unwrap());
        for idx in 0..g.vertex_count() {
            assert_eq!(g.index(g.pair(idx)), idx);
        }
        assert_eq!(g.pair(0), (0, 1));
        assert_eq!(g.pair(3), (1, 0));
    }

    #[test]
    fn single_triple_edges() {
        let g = build_formula_graph(&NbInstance::new(3, [(0, 1, 2)]).unwrap());
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge((0, 1), (2, 1)));
        assert!(g.has_edge((1, 0), (1, 2)));
    }

    #[test]
    fn empty_instance_has_isolated_vertices() {
        let g = build_formula_graph(&NbInstance::new(3, []).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 0));
        let part = complementary_pairs_partition(&g).unwrap();
        assert_eq!(part.pairs().len(), 3);
        assert!(part.pairs().iter().all(ComponentPair::is_singleton));
    }

    #[test]
    fn two_voters_single_pair() {
        let g = build_formula_graph(&NbInstance::new(2, []).unwrap());
        let part = complementary_pairs_partition(&g).unwrap();
        assert_eq!(part.pairs().len(), 1);
        assert_eq!(part.pairs()[0].members(), &[(0, 1)]);
        assert_eq!(part.pairs()[0].complement(), vec![(1, 0)]);
    }

    #[test]
    fn clash_path_is_genuine() {
        // (0,1,2) and (0,2,1) force (0,1)=(2,1), (1,0)=(1,2), (0,2)=(1,2), (2,0)=(2,1):
        // (0,1)-(2,1)-(2,0) and (1,0)-(1,2)-(0,2), no clash yet; add (1,0,2) to force
        // (1,0)=(2,0), joining (0,1) with (1,0).
        let inst = NbInstance::new(3, [(0, 1, 2), (0, 2, 1), (1, 0, 2)]).unwrap();
        let g = build_formula_graph(&inst);
        let clash = complementary_pairs_partition(&g).unwrap_err();
        assert_eq!(clash.witness, (0, 1));
        assert!(clash.verify(&g));
    }
}
