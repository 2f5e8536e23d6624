//! Preference profiles: approval matrices, weak orders given by scores, and
//! fully-ranked (linear) profiles, plus fixture generators.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Error;

/// An `m x n` approval matrix: rows are candidates, columns are voters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ApprovalProfile {
    m: usize,
    n: usize,
    // row-major, entries[c * n + v]
    entries: Vec<bool>,
}

impl ApprovalProfile {
    /// Builds a profile from row-major 0/1 entries.
    pub fn new(m: usize, n: usize, entries: &[u8]) -> Result<Self, Error> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyProfile);
        }
        if entries.len() != m * n {
            return Err(Error::DimensionMismatch {
                expected: m * n,
                found: entries.len(),
            });
        }
        let mut bits = Vec::with_capacity(m * n);
        for (idx, &value) in entries.iter().enumerate() {
            match value {
                0 => bits.push(false),
                1 => bits.push(true),
                _ => {
                    return Err(Error::NonBinaryEntry {
                        row: idx / n,
                        column: idx % n,
                        value,
                    })
                }
            }
        }
        Ok(ApprovalProfile {
            m,
            n,
            entries: bits,
        })
    }

    /// Builds a profile from one row per candidate.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, Error> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut flat = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::new(m, n, &flat)
    }

    pub fn candidates(&self) -> usize {
        self.m
    }

    pub fn voters(&self) -> usize {
        self.n
    }

    pub fn approves(&self, voter: usize, candidate: usize) -> bool {
        self.entries[candidate * self.n + voter]
    }

    /// The row of `candidate`, one flag per voter.
    pub fn row(&self, candidate: usize) -> &[bool] {
        &self.entries[candidate * self.n..(candidate + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[bool]> + '_ {
        self.entries.chunks(self.n)
    }

    /// The approval ballot of `voter`, as the sorted list of approved candidates.
    pub fn ballot(&self, voter: usize) -> Vec<usize> {
        (0..self.m).filter(|&c| self.approves(voter, c)).collect()
    }

    /// Approval ballots seen as 2-weak orders (score 1 for approved, 0 otherwise).
    pub fn to_weak_orders(&self) -> WeakOrderProfile {
        let scores = (0..self.n)
            .flat_map(|v| (0..self.m).map(move |c| (v, c)))
            .map(|(v, c)| i64::from(self.approves(v, c)))
            .collect();
        WeakOrderProfile {
            m: self.m,
            n: self.n,
            scores,
        }
    }

    /// Keeps the listed voters and candidates, in the order given.
    pub fn subprofile(&self, voters: &[usize], candidates: &[usize]) -> Result<Self, Error> {
        if voters.is_empty() || candidates.is_empty() {
            return Err(Error::EmptySelection);
        }
        for &v in voters {
            if v >= self.n {
                return Err(Error::IdOutOfRange {
                    id: v,
                    bound: self.n,
                });
            }
        }
        for &c in candidates {
            if c >= self.m {
                return Err(Error::IdOutOfRange {
                    id: c,
                    bound: self.m,
                });
            }
        }
        let entries = candidates
            .iter()
            .flat_map(|&c| voters.iter().map(move |&v| (c, v)))
            .map(|(c, v)| self.approves(v, c))
            .collect();
        Ok(ApprovalProfile {
            m: candidates.len(),
            n: voters.len(),
            entries,
        })
    }

    /// Removes a single voter.
    pub fn without_voter(&self, voter: usize) -> Result<Self, Error> {
        let voters: Vec<usize> = (0..self.n).filter(|&v| v != voter).collect();
        if voter >= self.n {
            return Err(Error::IdOutOfRange {
                id: voter,
                bound: self.n,
            });
        }
        self.subprofile(&voters, &(0..self.m).collect::<Vec<_>>())
    }

    /// Removes a single candidate.
    pub fn without_candidate(&self, candidate: usize) -> Result<Self, Error> {
        let candidates: Vec<usize> = (0..self.m).filter(|&c| c != candidate).collect();
        if candidate >= self.m {
            return Err(Error::IdOutOfRange {
                id: candidate,
                bound: self.m,
            });
        }
        self.subprofile(&(0..self.n).collect::<Vec<_>>(), &candidates)
    }
}

/// Weak orders induced by integer scores: `a` beats `b` for voter `i` exactly
/// when `score_i(a) > score_i(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakOrderProfile {
    m: usize,
    n: usize,
    // voter-major, scores[v * m + c]
    scores: Vec<i64>,
}

impl WeakOrderProfile {
    /// `scores[v][c]` is the score voter `v` gives candidate `c`.
    pub fn new(scores: &[Vec<i64>]) -> Result<Self, Error> {
        let n = scores.len();
        let m = scores.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::EmptyProfile);
        }
        let mut flat = Vec::with_capacity(m * n);
        for ballot in scores {
            if ballot.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: ballot.len(),
                });
            }
            flat.extend_from_slice(ballot);
        }
        Ok(WeakOrderProfile { m, n, scores: flat })
    }

    pub fn candidates(&self) -> usize {
        self.m
    }

    pub fn voters(&self) -> usize {
        self.n
    }

    pub fn score(&self, voter: usize, candidate: usize) -> i64 {
        self.scores[voter * self.m + candidate]
    }

    pub fn ballot_scores(&self, voter: usize) -> &[i64] {
        &self.scores[voter * self.m..(voter + 1) * self.m]
    }

    /// `a ≻_voter b`.
    pub fn prefers(&self, voter: usize, a: usize, b: usize) -> bool {
        self.score(voter, a) > self.score(voter, b)
    }

    pub fn indifferent(&self, voter: usize, a: usize, b: usize) -> bool {
        self.score(voter, a) == self.score(voter, b)
    }

    /// Largest number of indifference classes over all voters.
    pub fn max_classes(&self) -> usize {
        (0..self.n)
            .map(|v| {
                let mut s = self.ballot_scores(v).to_vec();
                s.sort_unstable();
                s.dedup();
                s.len()
            })
            .max()
            .unwrap_or(0)
    }

    /// Restricts to the given voters, in the order given.
    pub fn select_voters(&self, voters: &[usize]) -> Result<Self, Error> {
        if voters.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut scores = Vec::with_capacity(voters.len() * self.m);
        for &v in voters {
            if v >= self.n {
                return Err(Error::IdOutOfRange {
                    id: v,
                    bound: self.n,
                });
            }
            scores.extend_from_slice(self.ballot_scores(v));
        }
        Ok(WeakOrderProfile {
            m: self.m,
            n: voters.len(),
            scores,
        })
    }
}

impl From<&ApprovalProfile> for WeakOrderProfile {
    fn from(p: &ApprovalProfile) -> Self {
        p.to_weak_orders()
    }
}

/// Fully-ranked ballots, best candidate first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearProfile {
    m: usize,
    rankings: Vec<Vec<usize>>,
}

impl LinearProfile {
    pub fn new(rankings: Vec<Vec<usize>>) -> Result<Self, Error> {
        let m = rankings.first().map_or(0, Vec::len);
        if m == 0 {
            return Err(Error::EmptyProfile);
        }
        for ranking in &rankings {
            if ranking.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: ranking.len(),
                });
            }
            if !is_permutation(ranking) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(LinearProfile { m, rankings })
    }

    pub fn candidates(&self) -> usize {
        self.m
    }

    pub fn voters(&self) -> usize {
        self.rankings.len()
    }

    pub fn ranking(&self, voter: usize) -> &[usize] {
        &self.rankings[voter]
    }

    pub fn rankings(&self) -> &[Vec<usize>] {
        &self.rankings
    }

    /// Scores `m - 1 - position`, so the top candidate scores highest.
    pub fn to_weak_orders(&self) -> WeakOrderProfile {
        let mut scores = vec![0i64; self.m * self.rankings.len()];
        for (v, ranking) in self.rankings.iter().enumerate() {
            for (pos, &c) in ranking.iter().enumerate() {
                scores[v * self.m + c] = (self.m - 1 - pos) as i64;
            }
        }
        WeakOrderProfile {
            m: self.m,
            n: self.rankings.len(),
            scores,
        }
    }

    /// True when every ballot extends the matching weak order.
    pub fn extends(&self, p: &WeakOrderProfile) -> bool {
        if p.voters() != self.voters() || p.candidates() != self.m {
            return false;
        }
        self.rankings.iter().enumerate().all(|(v, ranking)| {
            // strict preferences must never be inverted
            ranking
                .iter()
                .enumerate()
                .all(|(i, &a)| ranking[i + 1..].iter().all(|&b| !p.prefers(v, b, a)))
        })
    }
}

pub(crate) fn is_permutation(items: &[usize]) -> bool {
    let mut seen = vec![false; items.len()];
    for &x in items {
        if x >= items.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// The cyclic family: voter `v` approves candidates `v` and `v - 1 (mod n)`.
///
/// Its preference graph is a single cycle; for `n >= 4` it is a minimal
/// profile that is not seemingly single-crossing.
pub fn generate_cycle_profile(n: usize) -> Result<ApprovalProfile, Error> {
    if n < 2 {
        return Err(Error::TooSmall {
            value: n,
            minimum: 2,
        });
    }
    let mut entries = vec![0u8; n * n];
    for v in 0..n {
        entries[v * n + v] = 1;
        entries[((v + n - 1) % n) * n + v] = 1;
    }
    ApprovalProfile::new(n, n, &entries)
}

/// A random single-crossing linear profile with `n` voters over `m`
/// candidates, voters listed along the generating axis.
pub fn generate_sc_linear<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> LinearProfile {
    let mut current: Vec<usize> = (0..m).collect();
    current.shuffle(rng);
    // rank in the first ballot; a pair may only be swapped while still in its initial order
    let mut initial = vec![0usize; m];
    for (pos, &c) in current.iter().enumerate() {
        initial[c] = pos;
    }
    let mut rankings = Vec::with_capacity(n);
    rankings.push(current.clone());
    for _ in 1..n {
        let swaps = if m > 1 { rng.gen_range(0..=m) } else { 0 };
        for _ in 0..swaps {
            let i = rng.gen_range(0..m.max(2) - 1);
            if i + 1 < m && initial[current[i]] < initial[current[i + 1]] {
                current.swap(i, i + 1);
            }
        }
        rankings.push(current.clone());
    }
    LinearProfile { m, rankings }
}

/// An approval profile that is possibly single-crossing by construction:
/// each voter of a random single-crossing linear profile approves a random
/// prefix of their ranking, and the voters are then shuffled.
pub fn generate_sc_positive(n: usize, m: usize, seed: u64) -> Result<ApprovalProfile, Error> {
    if n == 0 || m == 0 {
        return Err(Error::TooSmall {
            value: n.min(m),
            minimum: 1,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let linear = generate_sc_linear(n, m, &mut rng);
    let mut columns: Vec<usize> = (0..n).collect();
    columns.shuffle(&mut rng);
    let mut entries = vec![0u8; m * n];
    for (col, &source) in columns.iter().enumerate() {
        let cut = rng.gen_range(0..=m);
        for &c in &linear.ranking(source)[..cut] {
            entries[c * n + col] = 1;
        }
    }
    ApprovalProfile::new(m, n, &entries)
}

/// A uniformly random approval matrix.
pub fn generate_uniform<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> ApprovalProfile {
    assert!(n > 0 && m > 0, "empty profile");
    let entries = (0..n * m).map(|_| rng.gen_bool(0.5)).collect();
    ApprovalProfile { m, n, entries }
}
