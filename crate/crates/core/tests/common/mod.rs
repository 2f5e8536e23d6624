#![allow(dead_code)]

use std::collections::BTreeSet;

use psc_core::nb::Axis;
use psc_core::profile::{ApprovalProfile, WeakOrderProfile};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn axes(n: usize) -> impl Iterator<Item = Axis> {
    permutations(n).into_iter().map(|p| Axis::new(p).unwrap())
}

/// Straight from the definition: no voters `i ◁ j ◁ k` and candidates `a, b`
/// with `a ≻_i b`, `b ≻_j a`, `a ≻_k b`.
pub fn naive_ssc(p: &WeakOrderProfile, order: &[usize]) -> bool {
    let n = order.len();
    let m = p.candidates();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let (i, j, k) = (order[x], order[y], order[z]);
                for a in 0..m {
                    for b in 0..m {
                        if p.score(i, a) > p.score(i, b)
                            && p.score(j, b) > p.score(j, a)
                            && p.score(k, a) > p.score(k, b)
                        {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// The constraint set as unordered-ends triples `(min(i,k), j, max(i,k))`.
pub fn naive_constraints(p: &WeakOrderProfile) -> BTreeSet<(usize, usize, usize)> {
    let (n, m) = (p.voters(), p.candidates());
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let hit = (0..m).any(|a| {
                    (0..m).any(|b| {
                        p.score(i, a) > p.score(i, b)
                            && p.score(j, b) > p.score(j, a)
                            && p.score(k, a) > p.score(k, b)
                    })
                });
                if hit {
                    out.insert((i.min(k), j, i.max(k)));
                }
            }
        }
    }
    out
}

pub fn naive_satisfies(triples: &BTreeSet<(usize, usize, usize)>, order: &[usize]) -> bool {
    let mut pos = vec![0; order.len()];
    for (x, &v) in order.iter().enumerate() {
        pos[v] = x;
    }
    triples.iter().all(|&(i, j, k)| {
        let (lo, hi) = (pos[i].min(pos[k]), pos[i].max(pos[k]));
        !(lo < pos[j] && pos[j] < hi)
    })
}

pub fn approval(rows: &[&[u8]]) -> ApprovalProfile {
    let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
    ApprovalProfile::from_rows(&rows).unwrap()
}

pub fn from_bits(m: usize, n: usize, bits: &[bool]) -> ApprovalProfile {
    let entries: Vec<u8> = bits.iter().map(|&b| b as u8).collect();
    ApprovalProfile::new(m, n, &entries).unwrap()
}

/// Voters `1..` and candidates `1..` as in hand-written fixtures.
pub fn one_based(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
}
