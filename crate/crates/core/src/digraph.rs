//! Plain directed graphs over `0..n`: cycle search and topological order.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

/// A directed graph with sorted, deduplicated out-neighbour lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    succ: Vec<Vec<usize>>,
}

impl DiGraph {
    /// # Panics
    /// If an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut succ = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) outside 0..{n}");
            succ[u].push(v);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        DiGraph { succ }
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, u: usize) -> &[usize] {
        &self.succ[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// A directed cycle `[v0, v1, …, vk]` with edges `v0→v1→…→vk→v0`.
    ///
    /// Depth-first search starting from the smallest vertex and visiting
    /// successors in increasing order, so the witness is deterministic.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.succ.len();
        let mut mark = vec![Mark::New; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if mark[root] != Mark::New {
                continue;
            }
            mark[root] = Mark::Active;
            stack.push((root, 0));
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&v) = self.succ[u].get(*next) {
                    *next += 1;
                    match mark[v] {
                        Mark::New => {
                            mark[v] = Mark::Active;
                            stack.push((v, 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(w, _)| w == v).unwrap();
                            return Some(stack[start..].iter().map(|&(w, _)| w).collect());
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[u] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Topological order that always emits the smallest available vertex,
    /// or a cycle if there is none.
    pub fn topological_order(&self) -> Result<Vec<usize>, Vec<usize>> {
        let n = self.succ.len();
        let mut indegree = vec![0usize; n];
        for (_, v) in self.edges() {
            indegree[v] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(u)) = ready.pop() {
            order.push(u);
            for &v in &self.succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.push(Reverse(v));
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(self
                .find_cycle()
                .expect("incomplete topological order implies a cycle"))
        }
    }
}

/// Checks that `cycle` is a closed directed walk in `g`.
pub fn is_cycle_in(g: &DiGraph, cycle: &[usize]) -> bool {
    !cycle.is_empty()
        && cycle.iter().all(|&v| v < g.vertex_count())
        && cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .all(|(&u, &v)| g.has_edge(u, v))
}
