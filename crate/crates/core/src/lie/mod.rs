//! Structural data for compact simple Lie groups.
//!
//! Simple roots and fundamental weights use Bourbaki numbering throughout
//! (0-indexed in code, so Bourbaki node `i` is index `i - 1`):
//!
//! | family | diagram                                   | notes                       |
//! |--------|-------------------------------------------|-----------------------------|
//! | A_n    | 1 - 2 - ... - n                           |                             |
//! | B_n    | 1 - 2 - ... - (n-1) => n                  | node n short                |
//! | C_n    | 1 - 2 - ... - (n-1) <= n                  | node n long                 |
//! | D_n    | 1 - ... - (n-2) - (n-1), (n-2) - n        | n-1, n are the spin nodes   |
//! | E_n    | 1 - 3 - 4 - ... - n, 2 attached to 4      | n = 6, 7, 8                 |
//! | F4     | 1 - 2 => 3 - 4                            | nodes 1, 2 long             |
//! | G2     | 1 <= 2                                    | node 1 short                |
//!
//! With these conventions the vector representations are `ϖ1` for B, C, D,
//! the spin representations are `ϖn` (B_n) and `ϖ(n-1)`, `ϖn` (D_n), and the
//! minuscule representations of E6 and E7 are `ϖ1` and `ϖ7`.

mod roots;
mod types;
mod weyl;

pub use roots::{cartan_closure, positive_roots, RootSystem};
pub use types::{Family, GroupSpec, HighestWeight, SimpleType, TypeLabel, WeightMap};
pub use weyl::{
    enumerate_weights, fs_indicator, highest_root_weight, self_dual, simple_dim, weyl_dim,
    weyl_dim_capped, Reality,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("{family}{rank} is not a valid simple type")]
    InvalidType { family: Family, rank: u32 },
    #[error("D2 = A1 x A1 is not simple; use two A1 factors")]
    NotSimple,
    #[error("weight {weight:?} has length {len}, expected {expected} for {ty}")]
    WeightLength {
        ty: SimpleType,
        weight: Vec<u32>,
        len: usize,
        expected: usize,
    },
}
