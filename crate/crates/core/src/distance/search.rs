//! Iterative-deepening search for shortest sorting words at `n = 11, 12`.
//!
//! Admissible estimates: every block transposition creates at most three
//! bonds, and deleting values never increases the distance, so the tabled
//! distance of any 10-element restriction is a lower bound.

use crate::distance::table::{distance_table, DistanceTable, TABLE_MAX_N};
use crate::error::{Error, Result};
use crate::perm::{CutPoints, Permutation};

/// Largest `n` accepted by the single-permutation search.
pub const SEARCH_MAX_N: usize = 12;

/// Default node budget; exceeding it reports a capability error.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

struct Searcher<'a> {
    n: usize,
    table: &'a DistanceTable,
    gens: Vec<(usize, usize, usize)>,
    deletions: Vec<Vec<u8>>,
    nodes: u64,
    budget: u64,
}

fn bonds(images: &[u8]) -> usize {
    let n = images.len();
    let mut count = (images[0] == 0) as usize + (images[n - 1] as usize == n - 1) as usize;
    for w in images.windows(2) {
        count += (w[1] == w[0] + 1) as usize;
    }
    count
}

impl<'a> Searcher<'a> {
    fn new(n: usize, table: &'a DistanceTable, budget: u64) -> Self {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..=n {
                    gens.push((i, j, k));
                }
            }
        }
        // Value sets whose removal leaves TABLE_MAX_N values.
        let top = n as u8;
        let deletions: Vec<Vec<u8>> = match n - TABLE_MAX_N {
            1 => (0..top).map(|a| vec![a]).collect(),
            _ => (0..top).flat_map(|a| (a + 1..top).map(move |b| vec![a, b])).collect(),
        };
        Self {
            n,
            table,
            gens,
            deletions,
            nodes: 0,
            budget,
        }
    }

    fn heuristic(&self, images: &[u8]) -> u8 {
        let bond_bound = (self.n + 1 - bonds(images)).div_ceil(3) as u8;
        let mut best = bond_bound;
        let mut reduced = [0u8; TABLE_MAX_N];
        for del in &self.deletions {
            let mut len = 0;
            for &v in images {
                if del.contains(&v) {
                    continue;
                }
                let below = del.iter().filter(|&&d| d < v).count() as u8;
                reduced[len] = v - below;
                len += 1;
            }
            best = best.max(self.table.get_images(&reduced[..len]));
        }
        best
    }

    fn dfs(&mut self, images: &mut [u8], g: u8, bound: u8, path: &mut Vec<usize>) -> Result<bool> {
        if images.iter().enumerate().all(|(x, &v)| v as usize == x) {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Capability {
                n: self.n,
                reason: format!("search exceeded {} nodes", self.budget),
            });
        }
        if g + self.heuristic(images) > bound {
            return Ok(false);
        }
        let mut child = [0u8; SEARCH_MAX_N];
        let n = self.n;
        for gi in 0..self.gens.len() {
            let (i, j, k) = self.gens[gi];
            // Undoing the previous move is never useful.
            if let Some(&prev) = path.last() {
                let (pi, pj, pk) = self.gens[prev];
                if (pi, pk) == (i, k) && pk - pj + pi == j {
                    continue;
                }
            }
            child[..n].copy_from_slice(images);
            child[i..k].rotate_left(j - i);
            path.push(gi);
            if self.dfs(&mut child[..n], g + 1, bound, path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

/// Shortest sorting word for `11 ≤ n ≤ 12`, lexicographically first among
/// the shortest in depth-first order.
pub fn search_optimal_word(pi: &Permutation, budget: u64) -> Result<Vec<CutPoints>> {
    let n = pi.n();
    if !(TABLE_MAX_N < n && n <= SEARCH_MAX_N) {
        return Err(Error::Capability {
            n,
            reason: format!("search covers {}..={SEARCH_MAX_N}", TABLE_MAX_N + 1),
        });
    }
    let table = distance_table(TABLE_MAX_N)?;
    let mut searcher = Searcher::new(n, &table, budget);
    let mut images: Vec<u8> = pi.images().iter().map(|&v| v as u8).collect();
    let mut bound = searcher.heuristic(&images);
    loop {
        let mut path = Vec::new();
        if searcher.dfs(&mut images, 0, bound, &mut path)? {
            return path
                .into_iter()
                .map(|gi| {
                    let (i, j, k) = searcher.gens[gi];
                    CutPoints::new(i, j, k, n)
                })
                .collect();
        }
        bound += 1;
    }
}
