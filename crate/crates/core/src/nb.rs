//! Non-betweenness constraints over voters and the exhaustive oracle that
//! solves them by trying every linear order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::profile::{is_permutation, WeakOrderProfile};
use crate::Error;

/// A linear order of `0..n`, listed from first to last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axis {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Axis {
    pub fn new(order: Vec<usize>) -> Result<Self, Error> {
        if !is_permutation(&order) {
            return Err(Error::NotAPermutation);
        }
        let mut position = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            position[v] = pos;
        }
        Ok(Axis { order, position })
    }

    /// `0 ◁ 1 ◁ … ◁ n-1`.
    pub fn identity(n: usize) -> Self {
        Axis {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, element: usize) -> usize {
        self.position[element]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Axis::new(order).expect("reversal keeps a permutation")
    }

    /// True if `a ◁ b`.
    pub fn before(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }
}

/// A set of non-betweenness constraints `(i, j, k)`: `j` must not lie
/// strictly between `i` and `k`.
///
/// `(i, j, k)` and `(k, j, i)` forbid the same thing, so only the
/// representative with `i < k` is stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NbInstance {
    ground_size: usize,
    triples: BTreeSet<(usize, usize, usize)>,
}

impl NbInstance {
    pub fn new<I>(ground_size: usize, triples: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut inst = NbInstance {
            ground_size,
            triples: BTreeSet::new(),
        };
        for t in triples {
            inst.insert(t)?;
        }
        Ok(inst)
    }

    pub fn insert(&mut self, (i, j, k): (usize, usize, usize)) -> Result<bool, Error> {
        let n = self.ground_size;
        if i >= n || j >= n || k >= n || i == j || j == k || i == k {
            return Err(Error::InvalidTriple {
                triple: (i, j, k),
                ground_size: n,
            });
        }
        Ok(self.triples.insert(canonical((i, j, k))))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Canonical triples (`i < k`) in lexicographic order.
    pub fn triples(&self) -> impl ExactSizeIterator<Item = (usize, usize, usize)> + '_ {
        self.triples.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Membership up to the `(i, j, k) ≅ (k, j, i)` symmetry.
    pub fn contains(&self, triple: (usize, usize, usize)) -> bool {
        self.triples.contains(&canonical(triple))
    }
}

fn canonical((i, j, k): (usize, usize, usize)) -> (usize, usize, usize) {
    if i <= k {
        (i, j, k)
    } else {
        (k, j, i)
    }
}

/// Constraints `(i, j, k)` such that some candidates `a, b` have
/// `a ≻_i b`, `b ≻_j a` and `a ≻_k b`.
pub fn extract_nb_constraints(p: &WeakOrderProfile) -> NbInstance {
    let n = p.voters();
    let m = p.candidates();
    // Distinct sign patterns per candidate pair; a pattern and its negation
    // produce the same triples, so keep one of the two.
    let mut patterns: BTreeSet<Vec<i8>> = BTreeSet::new();
    for a in 0..m {
        for b in a + 1..m {
            let pattern: Vec<i8> = (0..n)
                .map(|v| (p.score(v, a) - p.score(v, b)).signum() as i8)
                .collect();
            let negated: Vec<i8> = pattern.iter().map(|s| -s).collect();
            patterns.insert(pattern.min(negated));
        }
    }
    let mut inst = NbInstance {
        ground_size: n,
        triples: BTreeSet::new(),
    };
    for pattern in &patterns {
        let plus: Vec<usize> = (0..n).filter(|&v| pattern[v] > 0).collect();
        let minus: Vec<usize> = (0..n).filter(|&v| pattern[v] < 0).collect();
        for (outer, middle) in [(&plus, &minus), (&minus, &plus)] {
            for (x, &i) in outer.iter().enumerate() {
                for &k in &outer[x + 1..] {
                    for &j in middle.iter() {
                        inst.triples.insert((i, j, k));
                    }
                }
            }
        }
    }
    inst
}

/// True iff no constraint has its middle element strictly between the outer
/// two along `axis`.
pub fn order_satisfies(inst: &NbInstance, axis: &Axis) -> Result<bool, Error> {
    if axis.len() != inst.ground_size {
        return Err(Error::DimensionMismatch {
            expected: inst.ground_size,
            found: axis.len(),
        });
    }
    Ok(first_violated(inst, axis).is_none())
}

/// The first stored constraint violated by `axis`, if any.
pub fn first_violated(inst: &NbInstance, axis: &Axis) -> Option<(usize, usize, usize)> {
    inst.triples().find(|&(i, j, k)| {
        let (pi, pj, pk) = (axis.position(i), axis.position(j), axis.position(k));
        (pi < pj && pj < pk) || (pk < pj && pj < pi)
    })
}

/// The lexicographically smallest satisfying axis, found by trying all
/// `n!` orders. Refuses ground sets larger than `cap`.
pub fn brute_force_solve(inst: &NbInstance, cap: usize) -> Result<Option<Axis>, Error> {
    let n = inst.ground_size;
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(first_permutation(n, |axis| {
        first_violated(inst, axis).is_none()
    }))
}

/// Walks all permutations of `0..n` in lexicographic order and returns the
/// first accepted one.
pub(crate) fn first_permutation<F>(n: usize, mut accept: F) -> Option<Axis>
where
    F: FnMut(&Axis) -> bool,
{
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let axis = Axis::new(order.clone()).expect("permutation");
        if accept(&axis) {
            return Some(axis);
        }
        if !next_permutation(&mut order) {
            return None;
        }
    }
}

fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
