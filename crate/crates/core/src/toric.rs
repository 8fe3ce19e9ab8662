//! Circular and toric classes, the toric map `Ω_r`, and the shifting
//! identity that moves powers of `α = [1 2 ⋯ n 0]` across block
//! transpositions.
//!
//! The shifting identity is what makes toric equivalence useful for
//! sorting: for every `σ(i,j,k)` and `0 ≤ r ≤ n` there is `σ(i',j',k')`
//! with
//!
//! ```text
//! [0 σ(i,j,k)] ∘ α^r = α^t ∘ [0 σ(i',j',k')],   t = [0 σ(i,j,k)]_r.
//! ```
//!
//! Pushing `α^r` through a word one letter at a time turns a factorization
//! of `π` into one of `Ω_r(π)` of the same length ([`lift_word`]).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{CutPoints, ExtendedPermutation, Permutation};

/// An ordered list of block transpositions on `[n]`.
///
/// Read as a product `σ_1 ∘ ⋯ ∘ σ_k` or, for sorting, as right actions
/// applied left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    pub n: usize,
    pub moves: Vec<CutPoints>,
}

impl Word {
    pub fn empty(n: usize) -> Self {
        Self { n, moves: Vec::new() }
    }

    pub fn new(n: usize, moves: Vec<CutPoints>) -> Result<Self> {
        if let Some(bad) = moves.iter().find(|cp| cp.n != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: bad.n,
            });
        }
        Ok(Self { n, moves })
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// `σ_1 ∘ ⋯ ∘ σ_k`.
    pub fn product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.n.max(1));
        for cp in &self.moves {
            acc = acc.apply_block_move(cp).expect("word letters share n");
        }
        acc
    }
}

/// Relates a source permutation to `Ω_r(source)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ToricWitness {
    pub r: usize,
    /// `source_r`, the value subtracted by `Ω_r` (with `source_0 = 0`).
    pub value_shift: usize,
}

/// Outcome of pushing `α^r` leftwards through one block transposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShiftResult {
    pub exponent: usize,
    pub cut_points: CutPoints,
    pub case_id: u8,
}

/// `α^r` on `[n]^0`: `x ↦ x + r (mod n+1)`.
pub fn alpha_power(n: usize, r: usize) -> Result<ExtendedPermutation> {
    if r > n {
        return Err(Error::out_of_range("r", r as i64, format!("0..={n}")));
    }
    Ok(ExtendedPermutation::identity(n).rotate(r))
}

/// The `n+1` cyclic index shifts `[0 π] ∘ α^r`, `r = 0..=n`.
pub fn circular_class(pi: &Permutation) -> Vec<ExtendedPermutation> {
    let base = pi.extend();
    (0..base.modulus()).map(|r| base.rotate(r)).collect()
}

/// Rotates 0 to the front and drops it.
pub fn linearize(p: &ExtendedPermutation) -> Permutation {
    let zero = p.values().iter().position(|&v| v == 0).expect("0 is present");
    p.rotate(zero).restrict().expect("0 rotated to the front")
}

/// The `m`-step cyclic value shift `m + p`.
pub fn value_shift(p: &ExtendedPermutation, m: usize) -> Result<ExtendedPermutation> {
    if m > p.n() {
        return Err(Error::out_of_range("m", m as i64, format!("0..={}", p.n())));
    }
    Ok(p.shift_values(m))
}

/// `Ω_r(π)_x = π_{x+r} − π_r (mod n+1)`, indices mod `n+1`, `π_0 = 0`.
pub fn toric_map(pi: &Permutation, r: usize) -> Result<Permutation> {
    let n = pi.n();
    if r > n {
        return Err(Error::out_of_range("r", r as i64, format!("0..={n}")));
    }
    let ext = pi.extend();
    let m = n + 1;
    let base = ext.get(r);
    let images = (1..=n)
        .map(|x| (ext.get((x + r) % m) + m - base) % m - 1)
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `{ Ω_r(π) : 0 ≤ r ≤ n }` without repetitions.
pub fn toric_class_linearized(pi: &Permutation) -> BTreeSet<Permutation> {
    (0..=pi.n())
        .map(|r| toric_map(pi, r).expect("r in range"))
        .collect()
}

/// Members of the linearized toric class in order of first appearance of `r`.
pub fn toric_representatives(pi: &Permutation) -> Vec<(usize, Permutation)> {
    let mut seen = BTreeSet::new();
    (0..=pi.n())
        .filter_map(|r| {
            let rho = toric_map(pi, r).expect("r in range");
            seen.insert(rho.clone()).then_some((r, rho))
        })
        .collect()
}

/// Smallest `r` with `Ω_r(π) = π'`.
pub fn are_torically_equivalent(pi: &Permutation, other: &Permutation) -> Result<Option<ToricWitness>> {
    if pi.n() != other.n() {
        return Err(Error::SizeMismatch {
            left: pi.n(),
            right: other.n(),
        });
    }
    let ext = pi.extend();
    for r in 0..=pi.n() {
        if &toric_map(pi, r)? == other {
            return Ok(Some(ToricWitness {
                r,
                value_shift: ext.get(r),
            }));
        }
    }
    Ok(None)
}

/// Rewrites `[0 σ(i,j,k)] ∘ α^r` as `α^t ∘ [0 σ(i',j',k')]`.
///
/// The four cases split the range of `r` at `i`, `k-j+i` and `k`.
pub fn shift_block_transposition(cp: &CutPoints, r: usize) -> Result<ShiftResult> {
    let n = cp.n;
    if r > n {
        return Err(Error::out_of_range("r", r as i64, format!("0..={n}")));
    }
    let (i, j, k) = (cp.i as i64, cp.j as i64, cp.k as i64);
    let (r_, n_) = (r as i64, n as i64);
    let m = n_ + 1;
    let chains: [[i64; 4]; 4] = [
        [i - r_, k - j + i - r_, k - r_, 0],
        [k - j + i - r_, k - r_, m + i - r_, 0],
        [k - r_, m + i - r_, m + k - j + i - r_, 0],
        [m + i - r_, m + k - j + i - r_, m + k - r_, 0],
    ];
    let holds = |c: &[i64; 4]| 0 <= c[0] && c[0] < c[1] && c[1] < c[2] && c[2] <= n_;
    let applicable: Vec<usize> = (0..4).filter(|&c| holds(&chains[c])).collect();
    if applicable.len() != 1 {
        return Err(Error::Contract(format!(
            "shifting {cp} by {r}: cases {applicable:?} apply"
        )));
    }
    let case = applicable[0];
    let (ni, nj, nk, t) = match case {
        0 => (i - r_, j - r_, k - r_, r_),
        1 => (k - j + i - r_, m + 2 * i - j - r_, m + i - r_, (j - i + r_).rem_euclid(m)),
        2 => (k - r_, 2 * k - j - r_, m + k - j + i - r_, (j - k + r_).rem_euclid(m)),
        _ => (m + i - r_, m + j - r_, m + k - r_, r_),
    };
    let cut_points = CutPoints::from_signed(ni, nj, nk, n)?;
    let exponent = t as usize;
    debug_assert_eq!(exponent, cp.extended().to_extended_permutation().get(r));
    Ok(ShiftResult {
        exponent,
        cut_points,
        case_id: case as u8 + 1,
    })
}

/// Rewrites `α^s ∘ [0 σ]` as `[0 σ'] ∘ α^{s'}`, returning `(σ', s')`.
///
/// This is the shifting identity read backwards, obtained by inverting both
/// sides for `σ^{-1}` and `α^{-s}`.
pub fn shift_right_through(cp: &CutPoints, s: usize) -> Result<(CutPoints, usize)> {
    let m = cp.n + 1;
    let back = shift_block_transposition(&cp.inverse(), (m - s % m) % m)?;
    Ok((back.cut_points.inverse(), (m - back.exponent) % m))
}

/// Transports a factorization of `source` to one of `target = Ω_r(source)`.
///
/// `word` must satisfy `source = σ_1 ∘ ⋯ ∘ σ_k`; the result has the same
/// length and multiplies out to `target`.
pub fn lift_word(word: &Word, witness: &ToricWitness, target: &Permutation) -> Result<Word> {
    let n = word.n;
    if target.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: target.n(),
        });
    }
    if witness.r > n || witness.value_shift > n {
        return Err(Error::Contract(format!("toric witness {witness:?} out of range for n = {n}")));
    }
    let mut lifted = word.moves.clone();
    let mut r = witness.r;
    for cp in lifted.iter_mut().rev() {
        let shifted = shift_block_transposition(cp, r)?;
        *cp = shifted.cut_points;
        r = shifted.exponent;
    }
    // α^{-source_r} ∘ α^r must cancel; α^s fixes 0 only for s = 0.
    if r != witness.value_shift {
        return Err(Error::Contract(format!(
            "residual rotation {} after lifting, expected {}",
            r, witness.value_shift
        )));
    }
    let out = Word { n, moves: lifted };
    if &out.product() != target {
        return Err(Error::Contract("lifted word does not multiply out to the target".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_perms, block_transposition, enumerate_block_transpositions};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ext(v: &[usize]) -> ExtendedPermutation {
        ExtendedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn alpha_power_examples() {
        assert_eq!(alpha_power(4, 1).unwrap(), ext(&[1, 2, 3, 4, 0]));
        assert_eq!(alpha_power(5, 0).unwrap(), ExtendedPermutation::identity(5));
        assert_eq!(alpha_power(6, 3).unwrap(), ext(&[3, 4, 5, 6, 0, 1, 2]));
        assert!(alpha_power(3, 4).is_err());
    }

    #[test]
    fn circular_class_examples() {
        assert_eq!(
            circular_class(&p("2 1")),
            vec![ext(&[0, 2, 1]), ext(&[2, 1, 0]), ext(&[1, 0, 2])]
        );
        assert_eq!(circular_class(&p("1")), vec![ext(&[0, 1]), ext(&[1, 0])]);
        let pi = p("4 1 6 2 5 7 3");
        let class = circular_class(&pi);
        assert_eq!(class.len(), 8);
        for c in &class {
            assert_eq!(linearize(c), pi);
        }
    }

    #[test]
    fn linearize_examples() {
        assert_eq!(linearize(&ext(&[1, 0, 2])), p("2 1"));
        assert_eq!(linearize(&p("3 1 2").extend()), p("3 1 2"));
    }

    #[test]
    fn value_shift_examples() {
        let base = ext(&[0, 4, 1, 6, 2, 5, 7, 3]);
        assert_eq!(value_shift(&base, 1).unwrap(), ext(&[1, 5, 2, 7, 3, 6, 0, 4]));
        assert_eq!(value_shift(&base, 0).unwrap(), base);
        assert_eq!(value_shift(&base, 7).unwrap(), ext(&[7, 3, 0, 5, 1, 4, 6, 2]));
        for m in 0..=7 {
            let alpha = alpha_power(7, m).unwrap();
            assert_eq!(value_shift(&base, m).unwrap(), alpha.compose(&base).unwrap());
        }
        assert!(value_shift(&base, 8).is_err());
    }

    #[test]
    fn toric_map_examples() {
        let pi = p("4 1 6 2 5 7 3");
        assert_eq!(toric_map(&pi, 2).unwrap(), p("5 1 4 6 2 7 3"));
        assert_eq!(toric_map(&pi, 0).unwrap(), pi);
        for n in 1..=7 {
            for r in 0..=n {
                assert!(toric_map(&Permutation::identity(n), r).unwrap().is_identity());
            }
        }
        assert!(toric_map(&pi, 8).is_err());
    }

    #[test]
    fn toric_class_of_the_worked_example() {
        let pi = p("4 1 6 2 5 7 3");
        let expected: BTreeSet<_> = [
            "4 1 6 2 5 7 3",
            "4 1 5 2 7 3 6",
            "4 7 1 5 2 6 3",
            "2 6 3 7 4 1 5",
            "5 2 6 1 3 7 4",
            "5 1 6 3 7 2 4",
            "3 5 1 6 2 7 4",
            "5 1 4 6 2 7 3",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(toric_class_linearized(&pi), expected);
        assert_eq!(toric_class_linearized(&Permutation::identity(5)).len(), 1);
    }

    #[test]
    fn toric_class_of_a_transposition() {
        let class = toric_class_linearized(&p("2 1"));
        assert_eq!(class.into_iter().collect::<Vec<_>>(), vec![p("2 1")]);
    }

    #[test]
    fn equivalence_examples() {
        let pi = p("4 1 6 2 5 7 3");
        let w = are_torically_equivalent(&pi, &p("5 1 4 6 2 7 3")).unwrap().unwrap();
        assert_eq!(w.r, 2);
        assert_eq!(w.value_shift, 1);
        assert_eq!(are_torically_equivalent(&pi, &pi).unwrap().unwrap().r, 0);
        assert_eq!(
            are_torically_equivalent(&Permutation::identity(3), &p("2 1 3")).unwrap(),
            None
        );
        assert!(are_torically_equivalent(&pi, &p("1 2")).is_err());
    }

    fn shifted_sides(cp: &CutPoints, r: usize) -> (ExtendedPermutation, ExtendedPermutation, ShiftResult) {
        let n = cp.n;
        let res = shift_block_transposition(cp, r).unwrap();
        let lhs = cp
            .extended()
            .to_extended_permutation()
            .compose(&alpha_power(n, r).unwrap())
            .unwrap();
        let rhs = alpha_power(n, res.exponent)
            .unwrap()
            .compose(&res.cut_points.extended().to_extended_permutation())
            .unwrap();
        (lhs, rhs, res)
    }

    #[test]
    fn shifting_examples() {
        let cp = CutPoints::new(2, 4, 6, 6).unwrap();
        let (lhs, rhs, res) = shifted_sides(&cp, 1);
        assert_eq!((res.case_id, res.exponent), (1, 1));
        assert_eq!(res.cut_points, CutPoints::new(1, 3, 5, 6).unwrap());
        assert_eq!(lhs, rhs);

        let cp = CutPoints::new(1, 3, 5, 6).unwrap();
        let (lhs, rhs, res) = shifted_sides(&cp, 3);
        assert_eq!((res.case_id, res.exponent), (2, 5));
        assert_eq!(res.cut_points, CutPoints::new(0, 3, 5, 6).unwrap());
        assert_eq!(lhs, ext(&[5, 2, 3, 6, 0, 1, 4]));
        assert_eq!(lhs, rhs);

        let cp = CutPoints::new(1, 2, 5, 6).unwrap();
        let res = shift_block_transposition(&cp, 0).unwrap();
        assert_eq!((res.case_id, res.exponent, res.cut_points), (1, 0, cp));
    }

    #[test]
    fn shifting_identity_exhaustive() {
        let mut seen_cases = [false; 4];
        for n in 2..=8 {
            for cp in enumerate_block_transpositions(n).unwrap() {
                for r in 0..=n {
                    let (lhs, rhs, res) = shifted_sides(&cp, r);
                    assert_eq!(lhs, rhs, "{cp} r={r}");
                    assert_eq!(res.exponent, cp.extended().to_extended_permutation().get(r));
                    seen_cases[res.case_id as usize - 1] = true;
                }
            }
        }
        assert_eq!(seen_cases, [true; 4]);
    }

    #[test]
    fn shifting_right_through_alpha() {
        for n in 2..=7 {
            for cp in enumerate_block_transpositions(n).unwrap() {
                for s in 0..=n {
                    let (moved, s2) = shift_right_through(&cp, s).unwrap();
                    let lhs = alpha_power(n, s)
                        .unwrap()
                        .compose(&cp.extended().to_extended_permutation())
                        .unwrap();
                    let rhs = moved
                        .extended()
                        .to_extended_permutation()
                        .compose(&alpha_power(n, s2).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn toric_map_matches_conjugation_form() {
        for n in 1..=6 {
            for pi in all_perms(n) {
                let e = pi.extend();
                for r in 0..=n {
                    let shift = e.get(r);
                    let conj = alpha_power(n, (n + 1 - shift) % (n + 1))
                        .unwrap()
                        .compose(&e)
                        .unwrap()
                        .compose(&alpha_power(n, r).unwrap())
                        .unwrap();
                    assert_eq!(conj.restrict().unwrap(), toric_map(&pi, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn toric_map_is_a_bijection() {
        for n in 1..=6 {
            let perms = all_perms(n);
            for r in 0..=n {
                let image: BTreeSet<_> = perms.iter().map(|pi| toric_map(pi, r).unwrap()).collect();
                assert_eq!(image.len(), perms.len());
            }
        }
    }

    #[test]
    fn toric_classes_share_bond_counts_and_are_small() {
        for n in 1..=7 {
            for pi in all_perms(n) {
                let bonds = pi.linear_bonds().count;
                let class = toric_class_linearized(&pi);
                assert!(class.len() <= n + 1);
                assert!(class.iter().all(|rho| rho.linear_bonds().count == bonds));
                let mut extended = BTreeSet::new();
                for c in circular_class(&pi) {
                    for m in 0..=n {
                        extended.insert(c.shift_values(m));
                    }
                }
                assert!(extended.len() <= (n + 1) * (n + 1));
            }
        }
    }

    #[test]
    fn lift_word_identity_witness_is_a_no_op() {
        let word = Word::new(
            5,
            vec![CutPoints::new(0, 2, 5, 5).unwrap(), CutPoints::new(1, 2, 4, 5).unwrap()],
        )
        .unwrap();
        let source = word.product();
        let lifted = lift_word(&word, &ToricWitness { r: 0, value_shift: 0 }, &source).unwrap();
        assert_eq!(lifted, word);
    }

    #[test]
    fn lift_word_transports_factorizations() {
        for n in 2..=6 {
            let gens = enumerate_block_transpositions(n).unwrap();
            for (a, b) in gens.iter().zip(gens.iter().rev()).take(12) {
                let word = Word::new(n, vec![*a, *b, *a]).unwrap();
                let source = word.product();
                for r in 0..=n {
                    let target = toric_map(&source, r).unwrap();
                    let witness = ToricWitness {
                        r,
                        value_shift: source.extend().get(r),
                    };
                    let lifted = lift_word(&word, &witness, &target).unwrap();
                    assert_eq!(lifted.len(), word.len());
                    assert_eq!(lifted.product(), target);
                }
            }
        }
    }

    #[test]
    fn lift_word_rejects_inconsistent_witness() {
        let word = Word::new(4, vec![CutPoints::new(0, 1, 3, 4).unwrap()]).unwrap();
        let source = word.product();
        let target = toric_map(&source, 2).unwrap();
        let bad = ToricWitness { r: 2, value_shift: 1 };
        assert!(matches!(lift_word(&word, &bad, &target), Err(Error::Contract(_))));
        assert_eq!(block_transposition(&word.moves[0]), source);
    }
}
