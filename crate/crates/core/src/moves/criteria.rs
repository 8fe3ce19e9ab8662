//! Pattern criteria for block transpositions that create two bonds at once.
//!
//! All criteria work on a permutation of `[n]^0` read linearly from index 0,
//! with bonds counted circularly (`x` followed by `x̄ = x+1 mod n+1`).
//! Patterns are scanned left to right; the first position yielding a usable
//! move wins, and cases are tried in the order R-i, R-ii, L-1, …, L-5.
//!
//! A pattern only guarantees two new adjacencies. On a permutation that
//! already has bonds the move could cut one of them, so a match is reported
//! only when none of the three cut boundaries is a bond.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{ExtendedCutPoints, ExtendedPermutation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `p ∘ σ̄`: rearranges positions.
    Right,
    /// `σ̄ ∘ p`: relabels values.
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum CriterionCase {
    #[serde(rename = "R-i")]
    RightI,
    #[serde(rename = "R-ii")]
    RightII,
    #[serde(rename = "L-1")]
    L1,
    #[serde(rename = "L-2")]
    L2,
    #[serde(rename = "L-3")]
    L3,
    #[serde(rename = "L-4")]
    L4,
    #[serde(rename = "L-5")]
    L5,
}

impl CriterionCase {
    pub const ALL: [CriterionCase; 7] = [
        CriterionCase::RightI,
        CriterionCase::RightII,
        CriterionCase::L1,
        CriterionCase::L2,
        CriterionCase::L3,
        CriterionCase::L4,
        CriterionCase::L5,
    ];

    pub fn side(self) -> Side {
        match self {
            CriterionCase::RightI | CriterionCase::RightII => Side::Right,
            _ => Side::Left,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CriterionCase::RightI => "R-i",
            CriterionCase::RightII => "R-ii",
            CriterionCase::L1 => "L-1",
            CriterionCase::L2 => "L-2",
            CriterionCase::L3 => "L-3",
            CriterionCase::L4 => "L-4",
            CriterionCase::L5 => "L-5",
        }
    }
}

impl fmt::Display for CriterionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MoveSuggestion {
    pub cut_points: ExtendedCutPoints,
    pub side: Side,
    pub criterion_case: CriterionCase,
    pub fixes_zero: bool,
}

impl MoveSuggestion {
    fn new(cut_points: ExtendedCutPoints, criterion_case: CriterionCase) -> Self {
        Self {
            cut_points,
            side: criterion_case.side(),
            criterion_case,
            fixes_zero: cut_points.fixes_zero(),
        }
    }

    pub fn apply(&self, p: &ExtendedPermutation) -> ExtendedPermutation {
        match self.side {
            Side::Right => p.apply_right(&self.cut_points),
            Side::Left => p.apply_left(&self.cut_points),
        }
        .expect("suggestion was built for this size")
    }
}

/// Read-only access to a permutation of `[n]^0` and its inverse.
///
/// Lets the toric search scan rotated and value-shifted frames without
/// materializing each one.
pub(crate) trait View {
    fn modulus(&self) -> usize;
    fn at(&self, t: usize) -> usize;
    fn pos(&self, v: usize) -> usize;

    fn succ(&self, v: usize) -> usize {
        (v + 1) % self.modulus()
    }

    fn pred(&self, v: usize) -> usize {
        (v + self.modulus() - 1) % self.modulus()
    }

    /// Whether positions `t` and `t+1 (mod n+1)` hold a bond.
    fn bond_after_position(&self, t: usize) -> bool {
        let m = self.modulus();
        self.at((t + 1) % m) == self.succ(self.at(t % m))
    }

    /// Whether value `v` is immediately followed by `v̄`.
    fn bond_after_value(&self, v: usize) -> bool {
        let m = self.modulus();
        self.pos(self.succ(v % m)) == (self.pos(v % m) + 1) % m
    }
}

/// `α^m ∘ base ∘ α^s` viewed through the positions of `base`.
pub(crate) struct Frame<'a> {
    values: &'a [usize],
    positions: &'a [usize],
    rotation: usize,
    shift: usize,
}

impl<'a> Frame<'a> {
    pub(crate) fn new(values: &'a [usize], positions: &'a [usize], rotation: usize, shift: usize) -> Self {
        Self {
            values,
            positions,
            rotation,
            shift,
        }
    }

    #[cfg(test)]
    pub(crate) fn materialize(&self) -> ExtendedPermutation {
        ExtendedPermutation::new((0..self.modulus()).map(|t| self.at(t)).collect()).expect("frame is a bijection")
    }
}

impl View for Frame<'_> {
    fn modulus(&self) -> usize {
        self.values.len()
    }

    fn at(&self, t: usize) -> usize {
        let m = self.values.len();
        (self.values[(t + self.rotation) % m] + self.shift) % m
    }

    fn pos(&self, v: usize) -> usize {
        let m = self.values.len();
        (self.positions[(v + m - self.shift) % m] + m - self.rotation) % m
    }
}

pub(crate) struct Plain<'a> {
    values: &'a [usize],
    positions: Vec<usize>,
}

impl<'a> Plain<'a> {
    pub(crate) fn new(p: &'a ExtendedPermutation) -> Self {
        Self {
            values: p.values(),
            positions: p.positions(),
        }
    }
}

impl View for Plain<'_> {
    fn modulus(&self) -> usize {
        self.values.len()
    }

    fn at(&self, t: usize) -> usize {
        self.values[t]
    }

    fn pos(&self, v: usize) -> usize {
        self.positions[v]
    }
}

fn cut_points(i: i64, j: i64, k: i64, n: usize) -> Option<ExtendedCutPoints> {
    ExtendedCutPoints::new(i, j, k, n).ok()
}

/// True when a right move with these cut points keeps every existing bond.
fn right_keeps_bonds<V: View>(v: &V, cp: &ExtendedCutPoints) -> bool {
    let m = v.modulus();
    let first = ((cp.i + m as i64) as usize) % m;
    ![first, cp.j, cp.k].iter().any(|&b| v.bond_after_position(b))
}

/// True when a left move with these cut points keeps every existing bond.
fn left_keeps_bonds<V: View>(v: &V, cp: &ExtendedCutPoints) -> bool {
    let m = v.modulus();
    let first = ((cp.i + m as i64) as usize) % m;
    ![first, cp.j, cp.k].iter().any(|&b| v.bond_after_value(b))
}

/// Case R-i, `x⋯y x̄⋯ȳ`: cut as `x|⋯y|x̄⋯|ȳ`.
pub(crate) fn scan_right_i<V: View>(v: &V) -> Option<MoveSuggestion> {
    let m = v.modulus();
    let n = m - 1;
    for q in 0..m - 1 {
        let y = v.at(q);
        let x_bar = v.at(q + 1);
        let x = v.pred(x_bar);
        let y_bar = v.succ(y);
        let (px, py_bar) = (v.pos(x), v.pos(y_bar));
        if px < q && py_bar > q + 1 {
            if let Some(cp) = cut_points(px as i64, q as i64, py_bar as i64 - 1, n) {
                if right_keeps_bonds(v, &cp) {
                    return Some(MoveSuggestion::new(cp, CriterionCase::RightI));
                }
            }
        }
    }
    None
}

/// Case R-ii, `x⋯x̲ x̄`: cut as `|x|⋯x̲|x̄`.
pub(crate) fn scan_right_ii<V: View>(v: &V) -> Option<MoveSuggestion> {
    let m = v.modulus();
    let n = m - 1;
    for q in 0..m - 1 {
        let x_low = v.at(q);
        let x_bar = v.at(q + 1);
        if x_bar != v.succ(v.succ(x_low)) {
            continue;
        }
        let px = v.pos(v.succ(x_low));
        if px < q {
            if let Some(cp) = cut_points(px as i64 - 1, px as i64, q as i64, n) {
                if right_keeps_bonds(v, &cp) {
                    return Some(MoveSuggestion::new(cp, CriterionCase::RightII));
                }
            }
        }
    }
    None
}

fn positively_oriented(x: usize, y: usize, z: usize) -> bool {
    (x < y && y < z) || (y < z && z < x) || (z < x && x < y)
}

/// Left cut points for pattern `x y⋯z x̄`, if the triple is positively oriented.
fn left_pattern_i(x: i64, y: i64, z: i64, n: usize) -> Option<(ExtendedCutPoints, CriterionCase)> {
    let (cp, case) = if x < y && y < z {
        (cut_points(x, x + z - y + 1, z, n), CriterionCase::L1)
    } else if y < z && z < x {
        (cut_points(y - 1, y - 1 + x - z, x, n), CriterionCase::L2)
    } else if z < x && x < y {
        (cut_points(z, z + y - 1 - x, y - 1, n), CriterionCase::L3)
    } else {
        return None;
    };
    cp.map(|cp| (cp, case))
}

/// Left cut points for pattern `x y x̄`.
fn left_pattern_ii(x: i64, y: i64, n: usize) -> Option<(ExtendedCutPoints, CriterionCase)> {
    if x < y {
        cut_points(x, x + 1, y, n).map(|cp| (cp, CriterionCase::L4))
    } else {
        cut_points(y - 1, x - 1, x, n).map(|cp| (cp, CriterionCase::L5))
    }
}

/// Scans for a single left case.
pub(crate) fn scan_left_case<V: View>(v: &V, case: CriterionCase) -> Option<MoveSuggestion> {
    let m = v.modulus();
    let n = m - 1;
    for q in 0..m.saturating_sub(2) {
        let x = v.at(q);
        let y = v.at(q + 1);
        let px_bar = v.pos(v.succ(x));
        let found = match case {
            CriterionCase::L4 | CriterionCase::L5 => {
                if px_bar != q + 2 {
                    continue;
                }
                left_pattern_ii(x as i64, y as i64, n)
            }
            _ => {
                if px_bar < q + 3 {
                    continue;
                }
                let z = v.at(px_bar - 1);
                if !positively_oriented(x, y, z) {
                    continue;
                }
                left_pattern_i(x as i64, y as i64, z as i64, n)
            }
        };
        if let Some((cp, c)) = found {
            if c == case && left_keeps_bonds(v, &cp) {
                return Some(MoveSuggestion::new(cp, c));
            }
        }
    }
    None
}

pub(crate) fn scan_case<V: View>(v: &V, case: CriterionCase) -> Option<MoveSuggestion> {
    match case {
        CriterionCase::RightI => scan_right_i(v),
        CriterionCase::RightII => scan_right_ii(v),
        _ => scan_left_case(v, case),
    }
}

/// First match of the right-hand criterion (cases R-i then R-ii).
pub fn find_2move_right(p: &ExtendedPermutation) -> Option<MoveSuggestion> {
    let v = Plain::new(p);
    scan_right_i(&v).or_else(|| scan_right_ii(&v))
}

/// First match of the left-hand criterion (cases L-1 through L-5).
pub fn find_2move_left(p: &ExtendedPermutation) -> Option<MoveSuggestion> {
    let v = Plain::new(p);
    CriterionCase::ALL[2..].iter().find_map(|&c| scan_left_case(&v, c))
}

/// Right criterion first, then left.
pub fn find_2move(p: &ExtendedPermutation) -> Option<MoveSuggestion> {
    find_2move_right(p).or_else(|| find_2move_left(p))
}
