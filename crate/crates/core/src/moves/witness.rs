//! Constructive three-bond witnesses.
//!
//! For a bondless permutation `π` other than the reverse there is a toric
//! representative `ρ` and two block transpositions `σ, τ` such that one of
//! `ρ∘σ∘τ`, `σ∘ρ∘τ`, `σ∘τ∘ρ` has at least three bonds. The search below
//! follows the classical argument:
//!
//! 1. a reducible `π` is split at its smallest reduction point and the
//!    witness of a non-reverse part is embedded; if both parts are reverse
//!    permutations a fixed 1-move precedes a 2-move;
//! 2. if some member of the toric class admits a 2-move, any bond-creating
//!    1-move completes it;
//! 3. otherwise the representative with the shortest `m⋯m̄` stretch is
//!    brought to the form `[0 x_1 ⋯ x_l 1 ⋯]` and the 1-move dictated by the
//!    shape of `x_1 ⋯ x_l` is applied, after which a 2-move exists.
//!
//! Moves found in a rotated or value-shifted frame are carried back to
//! moves fixing 0 with the shifting identity. Every result is recounted;
//! when a step does not deliver, a wider search (and for small `n` the
//! exhaustive oracle) takes over and the event is logged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moves::collapse::is_reducible;
use crate::moves::criteria::{scan_case, CriterionCase, Frame, Side};
use crate::moves::oracle::{witness_oracle, ORACLE_MAX_N};
use crate::perm::{enumerate_block_transpositions, CutPoints, ExtendedCutPoints, ExtendedPermutation, Permutation};
use crate::toric::{shift_block_transposition, shift_right_through, toric_map};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Placement {
    /// `ρ ∘ σ ∘ τ`
    #[serde(rename = "RIGHT_RIGHT")]
    RightRight,
    /// `σ ∘ ρ ∘ τ`
    #[serde(rename = "LEFT_RIGHT")]
    LeftRight,
    /// `σ ∘ τ ∘ ρ`
    #[serde(rename = "LEFT_LEFT")]
    LeftLeft,
}

impl Placement {
    pub const ALL: [Placement; 3] = [Placement::RightRight, Placement::LeftRight, Placement::LeftLeft];

    pub fn label(self) -> &'static str {
        match self {
            Placement::RightRight => "RIGHT_RIGHT",
            Placement::LeftRight => "LEFT_RIGHT",
            Placement::LeftLeft => "LEFT_LEFT",
        }
    }

    pub fn compose(self, rho: &Permutation, sigma: &Permutation, tau: &Permutation) -> Permutation {
        let c = |a: &Permutation, b: &Permutation| a.compose(b).expect("witness parts share n");
        match self {
            Placement::RightRight => c(&c(rho, sigma), tau),
            Placement::LeftRight => c(&c(sigma, rho), tau),
            Placement::LeftLeft => c(&c(sigma, tau), rho),
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which part of the construction produced a witness.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Route {
    Reducible,
    /// A 2-move existed somewhere in the toric class.
    Direct,
    /// A 1-move from the case analysis of the shortest-stretch representative.
    CaseTree(&'static str),
    /// Wide search over all bond-creating 1-moves.
    Fallback,
    Oracle,
}

impl Route {
    /// True for the routes that signal a gap in the case analysis.
    pub fn is_fallback(self) -> bool {
        matches!(self, Route::Fallback | Route::Oracle)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Reducible => f.write_str("reducible"),
            Route::Direct => f.write_str("direct"),
            Route::CaseTree(label) => write!(f, "case:{label}"),
            Route::Fallback => f.write_str("fallback"),
            Route::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub rho: Permutation,
    pub toric_r: usize,
    pub sigma: CutPoints,
    pub tau: CutPoints,
    pub placement: Placement,
    pub achieved_bonds: usize,
    pub route: Route,
}

impl Witness {
    pub(crate) fn build(
        rho: Permutation,
        toric_r: usize,
        sigma: CutPoints,
        tau: CutPoints,
        placement: Placement,
        route: Route,
    ) -> Self {
        let mut w = Self {
            rho,
            toric_r,
            sigma,
            tau,
            placement,
            achieved_bonds: 0,
            route,
        };
        w.achieved_bonds = w.recount();
        w
    }

    /// The composed permutation for this placement.
    pub fn product(&self) -> Permutation {
        self.placement
            .compose(&self.rho, &self.sigma.to_permutation(), &self.tau.to_permutation())
    }

    /// Linear bonds of [`Witness::product`], computed from scratch.
    pub fn recount(&self) -> usize {
        self.product().linear_bonds().count
    }

    /// Checks the witness against the permutation it was built for.
    pub fn verify(&self, original: &Permutation) -> Result<()> {
        if toric_map(original, self.toric_r)? != self.rho {
            return Err(Error::Contract(format!(
                "rho {} is not the toric image of {original} at r = {}",
                self.rho, self.toric_r
            )));
        }
        let bonds = self.recount();
        if bonds < 3 || bonds != self.achieved_bonds {
            return Err(Error::Contract(format!(
                "witness for {original} yields {bonds} bonds (claimed {})",
                self.achieved_bonds
            )));
        }
        Ok(())
    }

    /// The same witness re-expressed on `original` itself (`r = 0`).
    pub fn normalized(&self, original: &Permutation) -> Result<Witness> {
        if self.toric_r == 0 {
            return Ok(self.clone());
        }
        let modulus = original.n() + 1;
        let r = self.toric_r;
        // [0 ρ] = α^{-c} ∘ [0 π] ∘ α^r
        let c = original.extend().get(r);
        let back = (modulus - c) % modulus;
        let (sigma, tau) = match self.placement {
            Placement::RightRight => {
                let (sigma, s1) = shift_right_through(&self.sigma, r)?;
                let (tau, _) = shift_right_through(&self.tau, s1)?;
                (sigma, tau)
            }
            Placement::LeftRight => {
                let sigma = shift_block_transposition(&self.sigma, back)?.cut_points;
                let (tau, _) = shift_right_through(&self.tau, r)?;
                (sigma, tau)
            }
            Placement::LeftLeft => {
                let t = shift_block_transposition(&self.tau, back)?;
                let sigma = shift_block_transposition(&self.sigma, t.exponent)?.cut_points;
                (sigma, t.cut_points)
            }
        };
        let w = Witness::build(original.clone(), 0, sigma, tau, self.placement, self.route);
        if w.achieved_bonds < 3 {
            return Err(Error::Contract(format!("normalizing the witness for {original} lost bonds")));
        }
        Ok(w)
    }
}

fn bonds(p: &ExtendedPermutation) -> usize {
    p.circular_bonds().count
}

fn fixed(cp: &CutPoints) -> ExtendedPermutation {
    cp.extended().to_extended_permutation()
}

/// `σ̄(-1,j,k) = [0 σ(j,k,n)] ∘ α^e`; returns `(σ(j,k,n), e)`.
fn unwrap_zero_moving(cp: &ExtendedCutPoints) -> Option<(CutPoints, usize)> {
    let n = cp.n;
    let base = CutPoints::new(cp.j, cp.k, n, n).ok()?;
    Some((base, (cp.j + 1 + n - cp.k) % (n + 1)))
}

/// Rewrites `M ∘ α^m` as `α^t ∘ [0 σ]`, returning `σ`.
fn left_move_to_fixed(cp: &ExtendedCutPoints, m: usize) -> Option<CutPoints> {
    let modulus = cp.n + 1;
    let (base, r) = match cp.to_cut_points() {
        Some(c) => (c, m % modulus),
        None => {
            let (base, e) = unwrap_zero_moving(cp)?;
            (base, (e + m) % modulus)
        }
    };
    shift_block_transposition(&base, r).ok().map(|s| s.cut_points)
}

/// Rewrites `α^s ∘ M` as `[0 σ] ∘ α^{s'}`, returning `σ`.
fn right_move_to_fixed(s: usize, cp: &ExtendedCutPoints) -> Option<CutPoints> {
    let base = match cp.to_cut_points() {
        Some(c) => c,
        None => unwrap_zero_moving(cp)?.0,
    };
    shift_right_through(&base, s).ok().map(|(c, _)| c)
}

/// A verified 2-move of `y` (which fixes 0) found anywhere in its toric class,
/// carried back to a move fixing 0 on the given side of `y`.
pub(crate) fn closure_two_move(y: &ExtendedPermutation) -> Option<(Side, CutPoints, CriterionCase)> {
    let before = bonds(y);
    let modulus = y.modulus();
    let pos = y.positions();
    for case in CriterionCase::ALL {
        let shifts = if case.side() == Side::Right { 1 } else { modulus };
        for s in 0..modulus {
            for m in 0..shifts {
                let frame = Frame::new(y.values(), &pos, s, m);
                let Some(found) = scan_case(&frame, case) else {
                    continue;
                };
                let (cp, after) = match case.side() {
                    Side::Right => {
                        let Some(cp) = right_move_to_fixed(s, &found.cut_points) else {
                            continue;
                        };
                        (cp, y.compose(&fixed(&cp)).expect("same size"))
                    }
                    Side::Left => {
                        let Some(cp) = left_move_to_fixed(&found.cut_points, m) else {
                            continue;
                        };
                        (cp, fixed(&cp).compose(y).expect("same size"))
                    }
                };
                if bonds(&after) >= before + 2 {
                    return Some((case.side(), cp, case));
                }
            }
        }
    }
    None
}

/// A right move fixing 0 that joins the end of one strip to the start of
/// the strip beginning with its successor, without cutting any bond.
pub(crate) fn one_move(y: &ExtendedPermutation) -> Option<CutPoints> {
    let modulus = y.modulus();
    let n = modulus - 1;
    let v = y.values();
    let pos = y.positions();
    let is_end = |t: usize| v[(t + 1) % modulus] != (v[t] + 1) % modulus;
    let t = (0..modulus).find(|&t| is_end(t))?;
    let u = pos[(v[t] + 1) % modulus];
    let mut e = u;
    while !is_end(e) {
        e = (e + 1) % modulus;
    }
    let mut gaps = [t, (u + n) % modulus, e];
    gaps.sort_unstable();
    CutPoints::new(gaps[0], gaps[1], gaps[2], n).ok()
}

/// Best right move fixing 0 by recount; used when no strip join exists.
fn best_right_move(y: &ExtendedPermutation) -> CutPoints {
    let n = y.n();
    enumerate_block_transpositions(n)
        .expect("n >= 2")
        .into_iter()
        .max_by_key(|cp| (bonds(&y.compose(&fixed(cp)).expect("same size")), std::cmp::Reverse(*cp)))
        .expect("at least one generator")
}

fn completing_move(z: &ExtendedPermutation) -> CutPoints {
    one_move(z).unwrap_or_else(|| best_right_move(z))
}

/// Finishes a witness after a first right move `first` on `[0 ρ]`.
fn after_first_right(rho: &Permutation, r: usize, first: CutPoints, route: Route) -> Option<Witness> {
    let y = rho.extend().compose(&fixed(&first)).expect("same size");
    let (side, second, _) = closure_two_move(&y)?;
    let w = match side {
        Side::Right => Witness::build(rho.clone(), r, first, second, Placement::RightRight, route),
        Side::Left => Witness::build(rho.clone(), r, second, first, Placement::LeftRight, route),
    };
    (w.achieved_bonds >= 3).then_some(w)
}

/// Finishes a witness after a first left move `first` on `[0 ρ]`.
fn after_first_left(rho: &Permutation, r: usize, first: CutPoints, route: Route) -> Option<Witness> {
    let y = fixed(&first).compose(&rho.extend()).expect("same size");
    let (side, second, _) = closure_two_move(&y)?;
    let w = match side {
        Side::Right => Witness::build(rho.clone(), r, first, second, Placement::LeftRight, route),
        Side::Left => Witness::build(rho.clone(), r, second, first, Placement::LeftLeft, route),
    };
    (w.achieved_bonds >= 3).then_some(w)
}

fn direct(pi: &Permutation) -> Option<Witness> {
    let y = pi.extend();
    let (side, first, _) = closure_two_move(&y)?;
    let w = match side {
        Side::Right => {
            let z = y.compose(&fixed(&first)).expect("same size");
            Witness::build(pi.clone(), 0, first, completing_move(&z), Placement::RightRight, Route::Direct)
        }
        Side::Left => {
            let z = fixed(&first).compose(&y).expect("same size");
            Witness::build(pi.clone(), 0, first, completing_move(&z), Placement::LeftRight, Route::Direct)
        }
    };
    (w.achieved_bonds >= 3).then_some(w)
}

/// The representative whose shortest `m⋯m̄` stretch starts at 0, with its `r`.
pub(crate) fn shortest_stretch_representative(pi: &Permutation) -> (usize, Permutation) {
    let ext = pi.extend();
    let modulus = ext.modulus();
    let pos = ext.positions();
    let m = (0..modulus)
        .min_by_key(|&m| ((pos[(m + 1) % modulus] + modulus - pos[m]) % modulus, m))
        .expect("non-empty");
    let r = pos[m];
    (r, toric_map(pi, r).expect("r in range"))
}

/// Candidate first moves for `[0 x_1 ⋯ x_l 1 ⋯]`, as gap triples in the
/// order the case analysis tries them.
fn case_tree_moves(p: &ExtendedPermutation) -> Vec<(&'static str, [usize; 3])> {
    let n = p.n();
    let v = p.values();
    let pos = p.positions();
    let succ = |x: usize| (x + 1) % (n + 1);
    let pred = |x: usize| (x + n) % (n + 1);
    let mut out = Vec::new();
    let l = pos[1].saturating_sub(1);
    if l < 2 {
        return out;
    }
    let x = |i: usize| v[i];

    if x(1) != n {
        out.push(("basic-i", [0, l, pos[succ(x(1))].saturating_sub(1)]));
    } else if v[n] != 1 {
        out.push(("basic-ii", [0, l, n]));
    } else {
        out.push(("basic-iii", [0, l, l + 1]));
    }

    if !(x(1) > x(2) && x(2) > x(l)) {
        return out;
    }

    if x(2) + 1 == x(1) {
        if let Some(i) = (3..=l).find(|&i| pos[succ(x(i))] > l + 1) {
            out.push(("succ-right-of-1", [1, i, pos[succ(x(i))] - 1]));
        }
        let run = (2..=l).all(|i| x(i - 1) == x(i) + 1);
        if run {
            let last = v[n];
            if 1 < last && last < x(l) {
                out.push(("run-last-low", [l - 2, pos[n], n]));
            }
            if x(1) < last && last < n {
                out.push(("run-last-high", [0, l, pos[n]]));
            }
            if x(1) == n {
                let below = x(l) - 1;
                if pos[2] < pos[below] {
                    out.push(("top-run-2-left", [l - 1, pos[2] - 1, pos[below]]));
                } else {
                    out.push(("top-run-2-right", [l - 2, l + 1, pos[2].saturating_sub(1)]));
                }
            }
        }
        for p0 in 1..n.saturating_sub(4) {
            if v[p0 + 1] != pred(v[p0]) || v[p0 + 2] != n {
                continue;
            }
            let mut k = 1;
            while p0 + 2 + k <= n && v[p0 + 2 + k] + k == n {
                k += 1;
            }
            if k >= 3 && p0 + k + 2 <= n && v[p0 + k + 2] == pred(pred(v[p0])) {
                out.push(("top-inside", [p0, p0 + k - 1, p0 + k + 2]));
            }
        }
    } else {
        let chain = |k: usize| (1..k).all(|i| x(i) > x(i + 1) + 1) && x(k) > x(l);
        if let Some(k) = (2..l).rev().find(|&k| chain(k)) {
            let to_succ = pos[succ(x(k))].saturating_sub(1);
            out.push(("chain", [0, l, to_succ]));
            out.push(("chain-pair", [k - 2, k, to_succ]));
            out.push(("chain-prefix", [0, k, pos[pred(x(1))]]));
        }
    }
    out
}

fn case_tree(pi: &Permutation) -> Option<Witness> {
    let (r, rho) = shortest_stretch_representative(pi);
    let p = rho.extend();
    for (label, [i, j, k]) in case_tree_moves(&p) {
        let Ok(first) = CutPoints::new(i, j, k, pi.n()) else {
            continue;
        };
        if let Some(w) = after_first_right(&rho, r, first, Route::CaseTree(label)) {
            return Some(w);
        }
    }
    None
}

fn wide_search(pi: &Permutation) -> Option<Witness> {
    let y = pi.extend();
    let before = bonds(&y);
    let gens = enumerate_block_transpositions(pi.n()).ok()?;
    for cp in &gens {
        if bonds(&y.compose(&fixed(cp)).expect("same size")) > before {
            if let Some(w) = after_first_right(pi, 0, *cp, Route::Fallback) {
                return Some(w);
            }
        }
    }
    for cp in &gens {
        if bonds(&fixed(cp).compose(&y).expect("same size")) > before {
            if let Some(w) = after_first_left(pi, 0, *cp, Route::Fallback) {
                return Some(w);
            }
        }
    }
    None
}

fn embed(w: &Witness, original: &Permutation, offset: usize) -> Witness {
    let n = original.n();
    let lift = |cp: &CutPoints| CutPoints::new(cp.i + offset, cp.j + offset, cp.k + offset, n).expect("fits inside");
    Witness::build(
        original.clone(),
        0,
        lift(&w.sigma),
        lift(&w.tau),
        w.placement,
        Route::Reducible,
    )
}

fn reducible(pi: &Permutation, k: usize) -> Result<Option<Witness>> {
    let n = pi.n();
    let v = pi.images();
    let prefix = Permutation::from_images(v[..k - 1].to_vec())?;
    let suffix = Permutation::from_images(v[k..].iter().map(|x| x - k).collect())?;
    if !prefix.is_reverse() {
        let w = three_bond_witness(&prefix)?.normalized(&prefix)?;
        return Ok(Some(embed(&w, pi, 0)));
    }
    if !suffix.is_reverse() {
        let w = three_bond_witness(&suffix)?.normalized(&suffix)?;
        return Ok(Some(embed(&w, pi, k)));
    }
    // [0 k-1 ⋯ 1 k n ⋯ k+1]: cut as k-1|k-2 ⋯ 1 k n|n-1 ⋯ k+1|
    let Ok(first) = CutPoints::new(1, k + 1, n, n) else {
        return Ok(None);
    };
    Ok(after_first_right(pi, 0, first, Route::CaseTree("double-reverse")))
}

fn check_preconditions(pi: &Permutation) -> Result<()> {
    if !pi.is_bondless() {
        return Err(Error::Precondition(format!("{pi} has a bond")));
    }
    if pi.is_reverse() {
        return Err(Error::Precondition(format!("{pi} is the reverse permutation")));
    }
    Ok(())
}

/// A witness of at least three bonds after two block transpositions.
///
/// Requires a bondless `π` that is not the reverse permutation.
pub fn three_bond_witness(pi: &Permutation) -> Result<Witness> {
    check_preconditions(pi)?;
    let found = match is_reducible(pi) {
        Some(k) => reducible(pi, k)?,
        None => None,
    };
    let found = found
        .or_else(|| direct(pi))
        .or_else(|| case_tree(pi))
        .or_else(|| {
            log::warn!("case analysis did not produce a witness for {pi}; widening the search");
            wide_search(pi)
        });
    let w = match found {
        Some(w) => w,
        None if pi.n() <= ORACLE_MAX_N => {
            log::warn!("falling back to the exhaustive oracle for {pi}");
            let mut w = witness_oracle(pi)?;
            w.route = Route::Oracle;
            w
        }
        None => {
            return Err(Error::Contract(format!("no three-bond witness found for {pi}")));
        }
    };
    w.verify(pi)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_example() {
        let pi = p("2 4 1 3");
        let w = three_bond_witness(&pi).unwrap();
        assert!(w.achieved_bonds >= 3);
        assert_eq!(w.rho.extend().get(0), 0);
        w.verify(&pi).unwrap();
    }

    #[test]
    fn preconditions() {
        assert!(matches!(three_bond_witness(&p("4 3 2 1")), Err(Error::Precondition(_))));
        assert!(matches!(three_bond_witness(&p("1 3 2")), Err(Error::Precondition(_))));
        assert!(matches!(three_bond_witness(&p("1")), Err(Error::Precondition(_))));
    }

    #[test]
    fn shifted_moves_match_their_frames() {
        for n in 2..=6 {
            let modulus = n + 1;
            let y = p(&(1..=n).rev().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).extend();
            for i in -1..n as i64 {
                for j in (i + 1) as usize..n {
                    for k in j + 1..=n {
                        let cp = ExtendedCutPoints::new(i, j as i64, k as i64, n).unwrap();
                        let moving = cp.to_extended_permutation();
                        for s in 0..modulus {
                            // α^s ∘ M versus [0 σ] ∘ α^{s'}: equal up to rotation.
                            if let Some(fixed_cp) = right_move_to_fixed(s, &cp) {
                                let lhs = y.rotate(s).compose(&moving).unwrap();
                                let rhs = y.compose(&fixed(&fixed_cp)).unwrap();
                                assert_eq!(bonds(&lhs), bonds(&rhs));
                                let rotations: Vec<_> = (0..modulus).map(|t| rhs.rotate(t)).collect();
                                assert!(rotations.contains(&lhs));
                            }
                            if let Some(fixed_cp) = left_move_to_fixed(&cp, s) {
                                let lhs = moving.compose(&y.shift_values(s)).unwrap();
                                let rhs = fixed(&fixed_cp).compose(&y).unwrap();
                                let shifts: Vec<_> = (0..modulus).map(|t| rhs.shift_values(t)).collect();
                                assert!(shifts.contains(&lhs));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_move_gains_a_bond() {
        for n in 2..=6 {
            for pi in all_perms(n) {
                let y = pi.extend();
                match one_move(&y) {
                    Some(cp) => {
                        let after = y.compose(&fixed(&cp)).unwrap();
                        assert!(bonds(&after) > bonds(&y), "{pi}");
                    }
                    None => assert!(pi.is_identity()),
                }
            }
        }
    }

    #[test]
    fn shortest_stretch_starts_at_zero() {
        for pi in all_perms(6) {
            let (r, rho) = shortest_stretch_representative(&pi);
            assert_eq!(toric_map(&pi, r).unwrap(), rho);
            let ext = rho.extend();
            let pos = ext.positions();
            let span0 = pos[1];
            for m in 0..7 {
                assert!((pos[(m + 1) % 7] + 7 - pos[m]) % 7 >= span0);
            }
        }
    }

    #[test]
    fn normalization_keeps_bonds() {
        for pi in all_perms(6) {
            if !pi.is_bondless() || pi.is_reverse() {
                continue;
            }
            let w = crate::moves::oracle::witness_oracle(&pi).unwrap();
            let norm = w.normalized(&pi).unwrap();
            assert_eq!(norm.toric_r, 0);
            assert_eq!(norm.rho, pi);
            assert!(norm.achieved_bonds >= 3);
        }
    }

    #[test]
    fn witnesses_exist_exhaustively_up_to_seven() {
        for n in 4..=7 {
            for pi in all_perms(n) {
                if !pi.is_bondless() || pi.is_reverse() {
                    continue;
                }
                let w = three_bond_witness(&pi).unwrap_or_else(|e| panic!("{pi}: {e}"));
                w.verify(&pi).unwrap();
                assert!(!w.route.is_fallback(), "{pi} needed {}", w.route);
            }
        }
    }
}
