//! Constructive sorting with a length certificate.
//!
//! Bonds are collapsed first. Small remainders are sorted optimally from the
//! distance table; larger ones take a three-bond witness (two moves, at
//! least three new bonds) and recurse on a permutation at least three
//! symbols shorter. Because `⌊(2n-2)/3⌋` grows by exactly 2 when `n` grows
//! by 3, the recursion stays within that bound as long as the base cases do.
//! The one base case that does not is an 8-symbol remainder at distance 5
//! reached from 11 symbols; those 11-symbol steps are re-solved exactly.

use crate::distance::bounds::{eriksson_upper_bound_permissive, ERIKSSON_MIN_N};
use crate::distance::search::{search_optimal_word, DEFAULT_NODE_BUDGET, SEARCH_MAX_N};
use crate::distance::table::{distance_table, TABLE_MAX_N};
use crate::error::{Error, Result};
use crate::moves::{collapse_bonds, expand_word, three_bond_witness, Placement};
use crate::perm::{enumerate_block_transpositions, CutPoints, Permutation};
use crate::toric::{are_torically_equivalent, lift_word, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SortingWord {
    pub word: Word,
    /// `⌊(2n-2)/3⌋` when the construction guarantees it (`n ≥ 9`).
    pub certified_bound: Option<usize>,
    /// Greedy steps taken on large reverse remainders; each voids the certificate.
    pub uncertified_steps: usize,
    /// Witness steps whose construction needed the wide search or the oracle.
    pub fallback_witnesses: usize,
}

impl SortingWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// True iff applying the moves of `word` to `pi` in order gives the identity.
pub fn verify_word(pi: &Permutation, word: &Word) -> bool {
    if word.n != pi.n() && !word.is_empty() {
        return false;
    }
    let mut cur = pi.clone();
    for cp in &word.moves {
        match cur.apply_block_move(cp) {
            Ok(next) => cur = next,
            Err(_) => return false,
        }
    }
    cur.is_identity()
}

struct Outcome {
    moves: Vec<CutPoints>,
    certified: bool,
    uncertified_steps: usize,
    fallback_witnesses: usize,
}

impl Outcome {
    fn exact(moves: Vec<CutPoints>) -> Self {
        Self {
            moves,
            certified: true,
            uncertified_steps: 0,
            fallback_witnesses: 0,
        }
    }
}

fn exact_word(pi: &Permutation) -> Result<Vec<CutPoints>> {
    let n = pi.n();
    if n <= TABLE_MAX_N {
        distance_table(n)?.optimal_word(pi)
    } else {
        search_optimal_word(pi, DEFAULT_NODE_BUDGET)
    }
}

fn check(pi: &Permutation, moves: &[CutPoints], stage: &str) -> Result<()> {
    let word = Word {
        n: pi.n(),
        moves: moves.to_vec(),
    };
    if verify_word(pi, &word) {
        Ok(())
    } else {
        Err(Error::Contract(format!("{stage} word does not sort {pi}")))
    }
}

/// Sorts a bondless permutation on at least `TABLE_MAX_N + 1` symbols.
fn sort_large(pi: &Permutation) -> Result<Outcome> {
    let m = pi.n();
    if pi.is_reverse() {
        if m <= SEARCH_MAX_N {
            return Ok(Outcome::exact(search_optimal_word(pi, DEFAULT_NODE_BUDGET)?));
        }
        // Greedy: the lexicographically first move with the most bonds.
        let step = enumerate_block_transpositions(m)?
            .into_iter()
            .max_by_key(|cp| {
                let bonds = pi.apply_block_move(cp).expect("same n").linear_bonds().count;
                (bonds, std::cmp::Reverse(*cp))
            })
            .expect("n >= 2");
        let mut rest = sort_inner(&pi.apply_block_move(&step)?)?;
        rest.moves.insert(0, step);
        rest.certified = false;
        rest.uncertified_steps += 1;
        return Ok(rest);
    }

    let witness = three_bond_witness(pi)?;
    let rho = &witness.rho;
    let rest = sort_inner(&witness.product())?;
    let (sigma, tau) = (witness.sigma, witness.tau);
    // Word for ρ from the word for the product, per placement.
    let mut on_rho = Vec::with_capacity(rest.moves.len() + 2);
    match witness.placement {
        Placement::RightRight => {
            on_rho.extend([sigma, tau]);
            on_rho.extend(&rest.moves);
        }
        Placement::LeftRight => {
            on_rho.push(tau);
            on_rho.extend(&rest.moves);
            on_rho.push(sigma);
        }
        Placement::LeftLeft => {
            on_rho.extend(&rest.moves);
            on_rho.extend([sigma, tau]);
        }
    }
    check(rho, &on_rho, "assembled")?;

    // A sorting word of ρ multiplies out to ρ^{-1}; carry it to π^{-1}.
    let source = rho.inverse();
    let target = pi.inverse();
    let toric = are_torically_equivalent(&source, &target)?
        .ok_or_else(|| Error::Contract(format!("{rho} and {pi} are not torically equivalent")))?;
    let lifted = lift_word(&Word::new(m, on_rho)?, &toric, &target)?;
    check(pi, &lifted.moves, "lifted")?;

    let mut out = Outcome {
        moves: lifted.moves,
        certified: rest.certified,
        uncertified_steps: rest.uncertified_steps,
        fallback_witnesses: rest.fallback_witnesses + witness.route.is_fallback() as usize,
    };
    if out.certified && m >= ERIKSSON_MIN_N && out.moves.len() > eriksson_upper_bound_permissive(m) {
        if m <= SEARCH_MAX_N {
            out.moves = search_optimal_word(pi, DEFAULT_NODE_BUDGET)?;
        } else {
            log::warn!("witness recursion exceeded the bound for {pi}");
            out.certified = false;
        }
    }
    Ok(out)
}

fn sort_inner(pi: &Permutation) -> Result<Outcome> {
    if pi.is_identity() {
        return Ok(Outcome::exact(Vec::new()));
    }
    let map = collapse_bonds(pi);
    let reduced = map.reduced.as_ref().expect("not the identity");
    let sub = if reduced.n() <= TABLE_MAX_N {
        Outcome::exact(exact_word(reduced)?)
    } else {
        sort_large(reduced)?
    };
    let expanded = expand_word(&Word::new(reduced.n(), sub.moves)?, &map)?;
    check(pi, &expanded.moves, "expanded")?;
    Ok(Outcome {
        moves: expanded.moves,
        ..sub
    })
}

/// A verified sorting word for `pi` (right actions applied in order).
pub fn sort_permutation(pi: &Permutation) -> Result<SortingWord> {
    let n = pi.n();
    let out = sort_inner(pi)?;
    let word = Word::new(n, out.moves)?;
    if !verify_word(pi, &word) {
        return Err(Error::Contract(format!("sorting word does not sort {pi}")));
    }
    let bound = eriksson_upper_bound_permissive(n);
    let certified_bound = (n >= ERIKSSON_MIN_N && out.certified).then_some(bound);
    if certified_bound.is_some() && word.len() > bound {
        return Err(Error::Contract(format!(
            "certified word of length {} for {pi} exceeds {bound}",
            word.len()
        )));
    }
    Ok(SortingWord {
        word,
        certified_bound,
        uncertified_steps: out.uncertified_steps,
        fallback_witnesses: out.fallback_witnesses,
    })
}
