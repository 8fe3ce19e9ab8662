//! Permutations on `[n]` and `[n]^0`, block transpositions and bonds.
//!
//! Storage is 0-indexed throughout. A [`Permutation`] on `[n]` keeps the
//! images `π_x - 1` at index `x - 1`; its text form and the accessors that
//! take or return "values" are 1-based. An [`ExtendedPermutation`] lives on
//! `{0, …, n}` where 0-based storage is already the natural notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set accepted by the non-search operations.
pub const MAX_N: usize = 1_000_000;

fn check_bijection(values: &[usize], lo: usize) -> Result<()> {
    let len = values.len();
    let mut seen = vec![false; len];
    for &v in values {
        if v < lo || v >= lo + len {
            return Err(Error::InvalidPermutation(format!(
                "value {v} is outside {lo}..={}",
                lo + len - 1
            )));
        }
        if std::mem::replace(&mut seen[v - lo], true) {
            return Err(Error::InvalidPermutation(format!("value {v} appears twice")));
        }
    }
    Ok(())
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        if values.len() > MAX_N {
            return Err(Error::Capability {
                n: values.len(),
                reason: format!("ground set larger than {MAX_N}"),
            });
        }
        check_bijection(values, 1)?;
        Ok(Self {
            images: values.iter().map(|v| v - 1).collect(),
        })
    }

    /// Builds a permutation from 0-based images (`images[x] = π_{x+1} - 1`).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        check_bijection(&images, 0)?;
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(!images.is_empty() && check_bijection(&images, 0).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity on an empty ground set");
        Self {
            images: (0..n).collect(),
        }
    }

    /// The reverse permutation `w0 = [n n-1 ⋯ 1]`.
    pub fn reverse(n: usize) -> Self {
        assert!(n >= 1, "reverse on an empty ground set");
        Self {
            images: (0..n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π_x` for `1 ≤ x ≤ n`.
    pub fn get(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &v)| x == v)
    }

    pub fn is_reverse(&self) -> bool {
        let n = self.n();
        self.images.iter().enumerate().all(|(x, &v)| v == n - 1 - x)
    }

    /// `(π ∘ ν)_x = π_{ν_x}`.
    pub fn compose(&self, nu: &Permutation) -> Result<Permutation> {
        if self.n() != nu.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: nu.n(),
            });
        }
        Ok(Self {
            images: nu.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (x, &v) in self.images.iter().enumerate() {
            inv[v] = x;
        }
        Self { images: inv }
    }

    /// `π ∘ σ(i,j,k)`: the blocks at positions `i+1..=j` and `j+1..=k` trade places.
    pub fn apply_block_move(&self, cp: &CutPoints) -> Result<Permutation> {
        if cp.n != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: cp.n,
            });
        }
        let mut images = self.images.clone();
        images[cp.i..cp.k].rotate_left(cp.j - cp.i);
        Ok(Self { images })
    }

    /// Bonds of the bordered sequence `0 π_1 ⋯ π_n n+1`.
    pub fn linear_bonds(&self) -> BondCount {
        let n = self.n();
        let mut prev = 0usize;
        let mut count = 0;
        for v in self.images.iter().map(|v| v + 1).chain(std::iter::once(n + 1)) {
            if v == prev + 1 {
                count += 1;
            }
            prev = v;
        }
        BondCount {
            count,
            kind: BondKind::Linear,
        }
    }

    pub fn is_bondless(&self) -> bool {
        self.linear_bonds().count == 0
    }

    /// `[0 π]` on `[n]^0`.
    pub fn extend(&self) -> ExtendedPermutation {
        let mut values = Vec::with_capacity(self.n() + 1);
        values.push(0);
        values.extend(self.images.iter().map(|v| v + 1));
        ExtendedPermutation { values }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, v) in self.images.iter().enumerate() {
            if x > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Whitespace- or comma-separated 1-based values.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("`{t}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} appears twice")));
            }
        }
        Permutation::from_one_line(&values)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_line()
    }
}

/// A permutation of `{0, …, n}`, indexed `0..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedPermutation {
    values: Vec<usize>,
}

impl ExtendedPermutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidPermutation(
                "an extended permutation needs n >= 1".into(),
            ));
        }
        check_bijection(&values, 0)?;
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (0..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// Size of the underlying set, `n + 1`.
    pub fn modulus(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `pos[v]` is the index holding value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.values.len()];
        for (x, &v) in self.values.iter().enumerate() {
            pos[v] = x;
        }
        pos
    }

    pub fn compose(&self, other: &ExtendedPermutation) -> Result<ExtendedPermutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn inverse(&self) -> ExtendedPermutation {
        Self {
            values: self.positions(),
        }
    }

    /// `self ∘ α^s`: index `x` reads the old index `x + s (mod n+1)`.
    pub fn rotate(&self, s: usize) -> ExtendedPermutation {
        let m = self.modulus();
        let mut values = self.values.clone();
        values.rotate_left(s % m);
        Self { values }
    }

    /// `α^m ∘ self`: every value `v` becomes `v + m (mod n+1)`.
    pub fn shift_values(&self, m: usize) -> ExtendedPermutation {
        let modulus = self.modulus();
        Self {
            values: self.values.iter().map(|&v| (v + m) % modulus).collect(),
        }
    }

    /// `self ∘ σ̄(i,j,k)`.
    pub fn apply_right(&self, cp: &ExtendedCutPoints) -> Result<ExtendedPermutation> {
        self.check_cut_size(cp)?;
        let (lo, mid, hi) = cp.slice_bounds();
        let mut values = self.values.clone();
        values[lo..hi].rotate_left(mid - lo);
        Ok(Self { values })
    }

    /// `σ̄(i,j,k) ∘ self`.
    pub fn apply_left(&self, cp: &ExtendedCutPoints) -> Result<ExtendedPermutation> {
        self.check_cut_size(cp)?;
        let sigma = cp.to_extended_permutation();
        Ok(Self {
            values: self.values.iter().map(|&v| sigma.values[v]).collect(),
        })
    }

    fn check_cut_size(&self, cp: &ExtendedCutPoints) -> Result<()> {
        if cp.n != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: cp.n,
            });
        }
        Ok(())
    }

    /// Cyclically adjacent pairs `v, v+1 (mod n+1)`, wraparound included.
    pub fn circular_bonds(&self) -> BondCount {
        let m = self.modulus();
        let count = (0..m)
            .filter(|&t| self.values[(t + 1) % m] == (self.values[t] + 1) % m)
            .count();
        BondCount {
            count,
            kind: BondKind::Circular,
        }
    }

    /// Drops the leading 0 of `[0 π]`.
    pub fn restrict(&self) -> Result<Permutation> {
        if self.values[0] != 0 {
            return Err(Error::Precondition(format!(
                "restrict needs a leading 0, found {}",
                self.values[0]
            )));
        }
        Ok(Permutation::from_images_unchecked(
            self.values[1..].iter().map(|v| v - 1).collect(),
        ))
    }
}

impl fmt::Debug for ExtendedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for ExtendedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, v) in self.values.iter().enumerate() {
            if x > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Cut points `0 ≤ i < j < k ≤ n` naming the block transposition `σ(i,j,k)` on `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CutPoints {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub n: usize,
}

impl CutPoints {
    pub fn new(i: usize, j: usize, k: usize, n: usize) -> Result<Self> {
        if i < j && j < k && k <= n {
            Ok(Self { i, j, k, n })
        } else {
            Err(Error::InvalidCutPoints {
                i: i as i64,
                j: j as i64,
                k: k as i64,
                n,
            })
        }
    }

    /// Validates signed cut points, as produced by modular arithmetic.
    pub fn from_signed(i: i64, j: i64, k: i64, n: usize) -> Result<Self> {
        if 0 <= i && i < j && j < k && k <= n as i64 {
            Ok(Self {
                i: i as usize,
                j: j as usize,
                k: k as usize,
                n,
            })
        } else {
            Err(Error::InvalidCutPoints { i, j, k, n })
        }
    }

    /// `σ(i,j,k)^{-1} = σ(i, k-j+i, k)`.
    pub fn inverse(&self) -> CutPoints {
        CutPoints {
            i: self.i,
            j: self.k - self.j + self.i,
            k: self.k,
            n: self.n,
        }
    }

    /// The block transposition `σ(i,j,k)` in one-line form.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        images[self.i..self.k].rotate_left(self.j - self.i);
        Permutation::from_images_unchecked(images)
    }

    /// `σ̄(i,j,k) = [0 σ(i,j,k)]`.
    pub fn extended(&self) -> ExtendedCutPoints {
        ExtendedCutPoints {
            i: self.i as i64,
            j: self.j,
            k: self.k,
            n: self.n,
        }
    }

    pub fn triple(&self) -> [usize; 3] {
        [self.i, self.j, self.k]
    }
}

impl fmt::Display for CutPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// Cut points of a block transposition `σ̄(i,j,k)` on `[n]^0`, `-1 ≤ i < j < k ≤ n`.
///
/// With `i = -1` the first block starts at index 0, so the move does not fix 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExtendedCutPoints {
    pub i: i64,
    pub j: usize,
    pub k: usize,
    pub n: usize,
}

impl ExtendedCutPoints {
    pub fn new(i: i64, j: i64, k: i64, n: usize) -> Result<Self> {
        if -1 <= i && i < j && j < k && k <= n as i64 {
            Ok(Self {
                i,
                j: j as usize,
                k: k as usize,
                n,
            })
        } else {
            Err(Error::InvalidCutPoints { i, j, k, n })
        }
    }

    pub fn fixes_zero(&self) -> bool {
        self.i >= 0
    }

    /// The `[n]` cut points when `i ≥ 0`.
    pub fn to_cut_points(&self) -> Option<CutPoints> {
        (self.i >= 0).then_some(CutPoints {
            i: self.i as usize,
            j: self.j,
            k: self.k,
            n: self.n,
        })
    }

    /// Half-open slice bounds of the two blocks: `lo..mid` and `mid..hi`.
    fn slice_bounds(&self) -> (usize, usize, usize) {
        ((self.i + 1) as usize, self.j + 1, self.k + 1)
    }

    pub fn to_extended_permutation(&self) -> ExtendedPermutation {
        let (lo, mid, hi) = self.slice_bounds();
        let mut values: Vec<usize> = (0..=self.n).collect();
        values[lo..hi].rotate_left(mid - lo);
        ExtendedPermutation { values }
    }
}

impl fmt::Display for ExtendedCutPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BondKind {
    Linear,
    Circular,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BondCount {
    pub count: usize,
    pub kind: BondKind,
}

/// `σ(i,j,k)` as a permutation.
pub fn block_transposition(cp: &CutPoints) -> Permutation {
    cp.to_permutation()
}

/// `σ(i,j,k)^{-1}` as cut points.
pub fn invert_cut_points(cp: &CutPoints) -> CutPoints {
    cp.inverse()
}

/// All cut points on `[n]` in lexicographic order; there are `C(n+1, 3)`.
pub fn enumerate_block_transpositions(n: usize) -> Result<Vec<CutPoints>> {
    if n < 2 {
        return Err(Error::out_of_range("n", n as i64, ">= 2"));
    }
    let mut out = Vec::with_capacity((n + 1) * n * (n - 1) / 6);
    for i in 0..n - 1 {
        for j in i + 1..n {
            for k in j + 1..=n {
                out.push(CutPoints { i, j, k, n });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) use tests::all_perms;
