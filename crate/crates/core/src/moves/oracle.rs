//! Exhaustive three-bond witness search for small `n`.

use crate::error::{Error, Result};
use crate::moves::witness::{Placement, Route, Witness};
use crate::perm::{enumerate_block_transpositions, Permutation};
use crate::toric::toric_representatives;

/// Largest `n` the exhaustive search accepts.
pub const ORACLE_MAX_N: usize = 9;

/// The first witness in the order (representative by smallest `r`,
/// placement, `σ`, `τ`), found by trying every combination.
pub fn witness_oracle(pi: &Permutation) -> Result<Witness> {
    let n = pi.n();
    if n > ORACLE_MAX_N {
        return Err(Error::Capability {
            n,
            reason: format!("exhaustive witness search is limited to n <= {ORACLE_MAX_N}"),
        });
    }
    if !pi.is_bondless() {
        return Err(Error::Precondition(format!("{pi} has a bond")));
    }
    if pi.is_reverse() {
        return Err(Error::Precondition(format!("{pi} is the reverse permutation")));
    }
    let gens = enumerate_block_transpositions(n)?;
    let perms: Vec<Permutation> = gens.iter().map(|cp| cp.to_permutation()).collect();
    let c = |a: &Permutation, b: &Permutation| a.compose(b).expect("same size");
    for (r, rho) in toric_representatives(pi) {
        for placement in Placement::ALL {
            for (a, sigma) in perms.iter().enumerate() {
                let partial = match placement {
                    Placement::RightRight => c(&rho, sigma),
                    Placement::LeftRight => c(sigma, &rho),
                    Placement::LeftLeft => sigma.clone(),
                };
                for (b, tau) in perms.iter().enumerate() {
                    let product = match placement {
                        Placement::LeftLeft => c(&c(&partial, tau), &rho),
                        _ => c(&partial, tau),
                    };
                    if product.linear_bonds().count >= 3 {
                        return Ok(Witness::build(rho, r, gens[a], gens[b], placement, Route::Oracle));
                    }
                }
            }
        }
    }
    Err(Error::OracleRefuted(pi.to_string()))
}
