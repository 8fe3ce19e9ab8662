//! Bond-creating moves: 2-move criteria, reducibility and bond collapsing,
//! and the three-bond witness with its exhaustive cross-check.

pub mod collapse;
pub mod criteria;
pub mod oracle;
pub mod witness;

pub use collapse::{collapse_bonds, expand_word, is_reducible, CollapseMap};
pub use criteria::{find_2move, find_2move_left, find_2move_right, CriterionCase, MoveSuggestion, Side};
pub use oracle::{witness_oracle, ORACLE_MAX_N};
pub use witness::{three_bond_witness, Placement, Route, Witness};
