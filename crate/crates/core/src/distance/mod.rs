//! Exact distances, diameter bounds, distance tables and the certified sorter.
//!
//! `d(π)` is the least number of block transpositions whose product is `π`;
//! since the generators are closed under inverses it is also the length of
//! a shortest sorting word. `d(π, ν) = d(ν^{-1} ∘ π)`.

pub mod bounds;
pub mod search;
pub mod sort;
pub mod table;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use bounds::{eriksson_upper_bound, eriksson_upper_bound_permissive, exact_diameter, lower_bound_diameter};
pub use search::{search_optimal_word, SEARCH_MAX_N};
pub use sort::{sort_permutation, verify_word, SortingWord};
pub use table::{distance_table, distance_table_cached, DistanceTable, TABLE_MAX_N};

/// `d(π)`: a table lookup for `n ≤ 10`, a search for `n ≤ 12`.
pub fn exact_distance(pi: &Permutation) -> Result<usize> {
    let n = pi.n();
    if n <= TABLE_MAX_N {
        return Ok(distance_table(n)?.get(pi)? as usize);
    }
    if n <= SEARCH_MAX_N {
        return Ok(search_optimal_word(pi, search::DEFAULT_NODE_BUDGET)?.len());
    }
    Err(Error::Capability {
        n,
        reason: format!("exact distances are limited to n <= {SEARCH_MAX_N}"),
    })
}

/// `d(π, ν) = d(ν^{-1} ∘ π)`.
pub fn pair_distance(pi: &Permutation, nu: &Permutation) -> Result<usize> {
    exact_distance(&nu.inverse().compose(pi)?)
}
