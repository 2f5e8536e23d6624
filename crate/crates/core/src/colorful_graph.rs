//! The colorful graph: a directed graph on voters with one edge color per
//! non-singleton complementary pair. Every color can be kept or flipped as
//! a whole; an orientation is usable when the resulting graph is acyclic.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::DiGraph;
use crate::formula_graph::{ComplementaryPartition, Pair};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulGraph {
    n: usize,
    colors: Vec<Vec<Pair>>,
    singleton_pairs: Vec<Pair>,
    // lookup[u * n + v] = (color, true) for a base edge u→v, (color, false) for v→u
    lookup: Vec<Option<(usize, bool)>>,
}

/// Keep or flip, per color. `true` reverses every edge of that color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    flip: Vec<bool>,
}

impl Orientation {
    pub fn new(flip: Vec<bool>) -> Self {
        Orientation { flip }
    }

    pub fn keep_all(colors: usize) -> Self {
        Orientation {
            flip: vec![false; colors],
        }
    }

    /// The `index`-th orientation in binary counting order, color 0 being
    /// the most significant bit.
    pub fn from_counter(colors: usize, index: u64) -> Self {
        let flip = (0..colors)
            .map(|c| (index >> (colors - 1 - c)) & 1 == 1)
            .collect();
        Orientation { flip }
    }

    pub fn len(&self) -> usize {
        self.flip.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flip.is_empty()
    }

    pub fn is_flipped(&self, color: usize) -> bool {
        self.flip[color]
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    /// Flips a single color.
    pub fn toggle(&mut self, color: usize) {
        self.flip[color] = !self.flip[color];
    }
}

/// A color whose edges are exactly `sources × targets` with the two sides
/// disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub color: usize,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
}

impl Biclique {
    /// One side has a single vertex.
    pub fn is_star(&self) -> bool {
        self.sources.len() == 1 || self.targets.len() == 1
    }

    pub fn flipped(&self) -> Biclique {
        Biclique {
            color: self.color,
            sources: self.targets.clone(),
            targets: self.sources.clone(),
        }
    }
}

/// Why a color is not a biclique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotBiclique {
    /// This vertex is both a source and a target of the color.
    Overlap { color: usize, vertex: usize },
    /// `source → target` is missing from the color.
    MissingEdge {
        color: usize,
        source: usize,
        target: usize,
    },
}

/// A triangle whose three edges carry three different colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangle {
    /// Sorted voters `a < b < c`.
    pub voters: [usize; 3],
    /// Colors of `a-b`, `b-c` and `a-c`.
    pub colors: [usize; 3],
}

impl ColorfulGraph {
    /// Builds a graph from explicit color classes. Used for hand-made graphs;
    /// approval profiles go through [`build_colorful_graph`].
    pub fn from_colors(n: usize, colors: Vec<Vec<Pair>>) -> Result<Self, Error> {
        let mut lookup = vec![None; n * n];
        let mut sorted = Vec::with_capacity(colors.len());
        for (c, mut edges) in colors.into_iter().enumerate() {
            edges.sort_unstable();
            edges.dedup();
            for &(u, v) in &edges {
                if u >= n || v >= n {
                    return Err(Error::IdOutOfRange {
                        id: u.max(v),
                        bound: n,
                    });
                }
                if u == v || lookup[u * n + v].is_some() {
                    return Err(Error::Internal(
                        "self-loop or parallel edge in colorful graph",
                    ));
                }
                lookup[u * n + v] = Some((c, true));
                lookup[v * n + u] = Some((c, false));
            }
            sorted.push(edges);
        }
        Ok(ColorfulGraph {
            n,
            colors: sorted,
            singleton_pairs: Vec::new(),
            lookup,
        })
    }

    pub fn voters(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    /// Base-orientation edges of `color`, sorted.
    pub fn color_edges(&self, color: usize) -> &[Pair] {
        &self.colors[color]
    }

    pub fn colors(&self) -> &[Vec<Pair>] {
        &self.colors
    }

    /// One representative per singleton component pair.
    pub fn singleton_pairs(&self) -> &[Pair] {
        &self.singleton_pairs
    }

    /// Color of the edge between `u` and `v`, in either direction.
    pub fn color_between(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup[u * self.n + v].map(|(c, _)| c)
    }

    /// `Some((color, true))` if the base edge is `u→v`, `Some((color, false))` if `v→u`.
    pub fn base_direction(&self, u: usize, v: usize) -> Option<(usize, bool)> {
        self.lookup[u * self.n + v]
    }

    /// True if `u→v` is an edge once `o` is applied.
    pub fn oriented(&self, o: &Orientation, u: usize, v: usize) -> bool {
        match self.lookup[u * self.n + v] {
            Some((c, forward)) => forward != o.is_flipped(c),
            None => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.colors.iter().map(Vec::len).sum()
    }

    pub fn base_digraph(&self) -> DiGraph {
        DiGraph::from_edges(self.n, self.colors.iter().flatten().copied())
    }

    pub fn color_digraph(&self, color: usize) -> DiGraph {
        DiGraph::from_edges(self.n, self.colors[color].iter().copied())
    }

    /// A color containing a directed cycle, with the cycle. Flipping a
    /// color reverses its cycles, so the answer does not depend on the
    /// orientation.
    pub fn has_monochromatic_cycle(&self) -> Option<(usize, Vec<usize>)> {
        (0..self.colors.len())
            .find_map(|c| self.color_digraph(c).find_cycle().map(|cycle| (c, cycle)))
    }

    /// All triangles whose three edges carry three distinct colors,
    /// regardless of direction, in lexicographic order of their voters.
    pub fn three_colored_triangles(&self) -> Vec<Triangle> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let Some(ab) = self.color_between(a, b) else {
                    continue;
                };
                for c in b + 1..n {
                    let (Some(bc), Some(ac)) = (self.color_between(b, c), self.color_between(a, c))
                    else {
                        continue;
                    };
                    if ab != bc && bc != ac && ab != ac {
                        out.push(Triangle {
                            voters: [a, b, c],
                            colors: [ab, bc, ac],
                        });
                    }
                }
            }
        }
        out
    }

    /// Colors taking part in at least one three-colored triangle, sorted.
    pub fn triangle_colors(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .three_colored_triangles()
            .iter()
            .flat_map(|t| t.colors)
            .collect();
        set.into_iter().collect()
    }

    /// Splits `color` into `sources × targets` if possible.
    ///
    /// # Panics
    /// If `color` is not a color of this graph.
    pub fn biclique_decomposition(&self, color: usize) -> Result<Biclique, NotBiclique> {
        let edges = &self.colors[color];
        let sources: BTreeSet<usize> = edges.iter().map(|&(u, _)| u).collect();
        let targets: BTreeSet<usize> = edges.iter().map(|&(_, v)| v).collect();
        if let Some(&vertex) = sources.intersection(&targets).next() {
            return Err(NotBiclique::Overlap { color, vertex });
        }
        for &source in &sources {
            for &target in &targets {
                if self.lookup[source * self.n + target] != Some((color, true)) {
                    return Err(NotBiclique::MissingEdge {
                        color,
                        source,
                        target,
                    });
                }
            }
        }
        Ok(Biclique {
            color,
            sources: sources.into_iter().collect(),
            targets: targets.into_iter().collect(),
        })
    }

    /// The directed graph on all voters after applying `o`.
    pub fn apply_orientation(&self, o: &Orientation) -> Result<DiGraph, Error> {
        if o.len() != self.colors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.colors.len(),
                found: o.len(),
            });
        }
        let edges = self.colors.iter().enumerate().flat_map(|(c, edges)| {
            let flip = o.is_flipped(c);
            edges
                .iter()
                .map(move |&(u, v)| if flip { (v, u) } else { (u, v) })
        });
        Ok(DiGraph::from_edges(self.n, edges))
    }
}

/// One color per non-singleton pair, edges taken from the `S` side; colors
/// are ordered by their smallest edge.
pub fn build_colorful_graph(part: &ComplementaryPartition) -> ColorfulGraph {
    let mut colors: Vec<Vec<Pair>> = Vec::new();
    let mut singleton_pairs = Vec::new();
    for pair in part.pairs() {
        if pair.is_singleton() {
            singleton_pairs.push(pair.members()[0]);
        } else {
            colors.push(pair.members().to_vec());
        }
    }
    colors.sort();
    let mut g = ColorfulGraph::from_colors(part.ground_size(), colors)
        .expect("complementary components are disjoint");
    g.singleton_pairs = singleton_pairs;
    g
}
