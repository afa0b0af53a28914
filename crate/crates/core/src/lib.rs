//! Exact arithmetic for the octonions, the para-octonions and the real Okubo
//! algebra over ℚ(√3), and the projective planes built over them.
//!
//! * [`scalar`]: the field ℚ(√3) and its complexification.
//! * [`algebra`]: the three products, norm, conjugation, trivolution,
//!   division and identity checkers.
//! * [`plane`]: points, lines, join and meet, Veronese coordinates.
//! * [`collineation`]: elations, triality, the maps between the planes and
//!   the triple condition for linear maps.
//! * [`theorems`]: Desargues configurations, the ternary ring and witnesses
//!   that replay from JSON.
//! * [`suites`] and [`cli`]: the verification runs behind the binary.
//!
//! Runnable walkthroughs live in `examples/`.
#![allow(clippy::large_enum_variant)]
pub mod algebra;
pub mod cli;
pub mod collineation;
pub mod error;
pub mod plane;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod theorems;

pub use algebra::{AlgebraKind, Vec8};
pub use error::{Error, Result};
pub use scalar::QSqrt3;
