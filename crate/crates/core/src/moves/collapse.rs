//! Reducibility and bond collapsing.

use crate::error::{Error, Result};
use crate::perm::{CutPoints, Permutation};
use crate::toric::Word;

/// Smallest `k` with `0 < k < n`, `π_k = k` and `{π_1, …, π_k} = {1, …, k}`.
pub fn is_reducible(pi: &Permutation) -> Option<usize> {
    let mut max_seen = 0;
    for (x, &v) in pi.images().iter().enumerate().take(pi.n().saturating_sub(1)) {
        let k = x + 1;
        max_seen = max_seen.max(v + 1);
        if v + 1 == k && max_seen == k {
            return Some(k);
        }
    }
    None
}

/// A permutation with every maximal run of bonded values merged into one symbol.
///
/// The bordered sequence `0 π_1 ⋯ π_n n+1` splits into runs of consecutive
/// values. Runs are labelled `0, …, m+1` in value order; the run holding 0
/// gets label 0 and the run holding `n+1` gets label `m+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollapseMap {
    pub n: usize,
    /// The bondless permutation on `[m]`, or `None` when `π` is the identity.
    pub reduced: Option<Permutation>,
    /// `run_spans[label] = (lo, hi)`: the run covers original values `lo..=hi`.
    pub run_spans: Vec<(usize, usize)>,
}

impl CollapseMap {
    pub fn reduced_size(&self) -> usize {
        self.reduced.as_ref().map_or(0, Permutation::n)
    }

    /// Number of bonds merged away, `n - m`.
    pub fn collapsed(&self) -> usize {
        self.n - self.reduced_size()
    }

    fn span_len(&self, label: usize) -> usize {
        let (lo, hi) = self.run_spans[label];
        hi - lo + 1
    }

    /// Rebuilds the original permutation from the reduced one.
    pub fn expand(&self) -> Permutation {
        let Some(reduced) = &self.reduced else {
            return Permutation::identity(self.n);
        };
        let mut values: Vec<usize> = Vec::with_capacity(self.n + 2);
        let mut push_run = |label: usize| {
            let (lo, hi) = self.run_spans[label];
            values.extend(lo..=hi);
        };
        push_run(0);
        for &label in reduced.one_line().iter() {
            push_run(label);
        }
        push_run(reduced.n() + 1);
        Permutation::from_images_unchecked(values[1..=self.n].iter().map(|v| v - 1).collect())
    }
}

pub fn collapse_bonds(pi: &Permutation) -> CollapseMap {
    let n = pi.n();
    let mut bordered = Vec::with_capacity(n + 2);
    bordered.push(0);
    bordered.extend(pi.one_line());
    bordered.push(n + 1);

    // Runs in position order, as value ranges.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut start = bordered[0];
    for t in 1..bordered.len() {
        if bordered[t] != bordered[t - 1] + 1 {
            runs.push((start, bordered[t - 1]));
            start = bordered[t];
        }
    }
    runs.push((start, bordered[n + 1]));

    if runs.len() == 1 {
        return CollapseMap {
            n,
            reduced: None,
            run_spans: runs,
        };
    }

    let mut by_value: Vec<usize> = (0..runs.len()).collect();
    by_value.sort_by_key(|&r| runs[r].0);
    let mut label = vec![0; runs.len()];
    for (l, &r) in by_value.iter().enumerate() {
        label[r] = l;
    }
    let m = runs.len() - 2;
    let reduced = Permutation::from_images_unchecked((1..=m).map(|r| label[r] - 1).collect());
    let run_spans = by_value.iter().map(|&r| runs[r]).collect();
    CollapseMap {
        n,
        reduced: Some(reduced),
        run_spans,
    }
}

/// Translates a word on the reduced permutation into one on the original.
///
/// Each reduced move swaps whole runs; the simulated symbol order tracks
/// where every run currently sits.
pub fn expand_word(word: &Word, map: &CollapseMap) -> Result<Word> {
    let m = map.reduced_size();
    if word.is_empty() {
        return Ok(Word::empty(map.n));
    }
    if word.n != m || map.run_spans.len() != m + 2 {
        return Err(Error::Contract(format!(
            "word on [{}] does not fit a collapse to [{m}]",
            word.n
        )));
    }
    let reduced = map.reduced.as_ref().expect("non-empty word needs m >= 2");
    let mut order: Vec<usize> = reduced.one_line();
    let first = map.span_len(0) - 1;
    let mut moves = Vec::with_capacity(word.len());
    for cp in &word.moves {
        let mut prefix = vec![0usize; m + 1];
        for (x, &label) in order.iter().enumerate() {
            prefix[x + 1] = prefix[x] + map.span_len(label);
        }
        moves.push(CutPoints::new(
            first + prefix[cp.i],
            first + prefix[cp.j],
            first + prefix[cp.k],
            map.n,
        )?);
        order[cp.i..cp.k].rotate_left(cp.j - cp.i);
    }
    Word::new(map.n, moves)
}
