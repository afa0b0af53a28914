//! The three eight-dimensional real division composition algebras on one
//! shared coordinate space.
//!
//! Coordinates are taken in the basis `{e, i1, ..., i7}` of Hermitian traceless
//! 3×3 matrices. The Okubo product is computed from that matrix model; the
//! octonion and para-octonion products are derived from it:
//!
//! * octonion: `x·y = (e*x)*(y*e)`, with unit `e`;
//! * para-octonion: `x∙y = x̄·ȳ`.
//!
//! ```
//! use cayley_plane::algebra::{mul, norm, AlgebraKind, Vec8};
//!
//! let i1 = Vec8::basis(1);
//! let sq = mul(AlgebraKind::Okubo, &i1, &i1);
//! assert_eq!(norm(&sq), norm(&i1) * norm(&i1));
//! ```

mod identities;
mod linmap;
mod matrix;
mod ops;
pub mod random;
mod table;
mod vec8;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use identities::{
    check_identity, identity_sides, table2_crosscheck, table2_crosscheck_detail, IdentityName,
    Side, TABLE2_LABELS,
};
pub use linmap::LinMap8;
pub use matrix::{basis_matrices, decompose, okubo_matrix_mul, to_matrix, CMat3, HermMat3};
pub use ops::{
    conjugate_oct, inverse, mul, norm, norm_via_matrix, polar, solve_left, solve_right,
    trivolution, trivolution_sq, try_solve_left, try_solve_right, unit,
};
pub use random::{random_nonzero, random_scalar, random_sparse, random_vec8, trial_rng};
pub use table::{derive_structure_table, gram, structure_table, GramMatrix, StructureTable};
pub use vec8::Vec8;

/// Which of the three products is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Octonion,
    #[serde(rename = "para")]
    ParaOctonion,
    Okubo,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [
        AlgebraKind::Octonion,
        AlgebraKind::ParaOctonion,
        AlgebraKind::Okubo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Octonion => "octonion",
            AlgebraKind::ParaOctonion => "para",
            AlgebraKind::Okubo => "okubo",
        }
    }

    /// True for the two symmetric composition algebras, where
    /// `(x∘y)∘x = n(x)y` holds.
    pub fn is_symmetric(self) -> bool {
        !matches!(self, AlgebraKind::Octonion)
    }

    fn index(self) -> usize {
        match self {
            AlgebraKind::Octonion => 0,
            AlgebraKind::ParaOctonion => 1,
            AlgebraKind::Okubo => 2,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "octonion" | "oct" | "o" => Ok(AlgebraKind::Octonion),
            "para" | "paraoctonion" | "para-octonion" | "p" => Ok(AlgebraKind::ParaOctonion),
            "okubo" | "ok" => Ok(AlgebraKind::Okubo),
            other => Err(format!("unknown algebra kind {other:?}")),
        }
    }
}
