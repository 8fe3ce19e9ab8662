//! Block-transposition distances on the symmetric group.
//!
//! A block transposition `σ(i,j,k)` swaps the adjacent blocks at positions
//! `i+1..=j` and `j+1..=k` of a permutation. This crate provides the
//! permutation algebra, toric equivalence and the shifting identity, bond
//! creating move criteria, a constructive three-bond witness, exact
//! distances for small `n` and a sorter whose output length is certified
//! against `⌊(2n-2)/3⌋`.

pub mod distance;
pub mod error;
pub mod moves;
pub mod perm;
pub mod rank;
pub mod toric;

pub use distance::{
    distance_table, distance_table_cached, eriksson_upper_bound, exact_diameter, exact_distance, lower_bound_diameter,
    pair_distance, sort_permutation, verify_word, DistanceTable, SortingWord,
};
pub use error::{Error, Result};
pub use moves::{
    collapse_bonds, expand_word, find_2move, find_2move_left, find_2move_right, is_reducible, three_bond_witness,
    witness_oracle, CollapseMap, CriterionCase, MoveSuggestion, Placement, Route, Side, Witness,
};
pub use perm::{
    block_transposition, enumerate_block_transpositions, invert_cut_points, BondCount, BondKind, CutPoints,
    ExtendedCutPoints, ExtendedPermutation, Permutation,
};
pub use toric::{
    alpha_power, are_torically_equivalent, circular_class, lift_word, linearize, shift_block_transposition,
    toric_class_linearized, toric_map, value_shift, ShiftResult, ToricWitness, Word,
};
