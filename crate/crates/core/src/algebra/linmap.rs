use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Vec8;
use crate::scalar::QSqrt3;

/// An 8×8 matrix acting on coordinate vectors: `(Mx)ᵢ = Σⱼ m[i][j]·xⱼ`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinMap8 {
    pub m: [[QSqrt3; 8]; 8],
}

impl LinMap8 {
    pub fn identity() -> Self {
        LinMap8::from_fn(|i, j| {
            if i == j {
                QSqrt3::from_int(1)
            } else {
                QSqrt3::zero()
            }
        })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> QSqrt3) -> Self {
        LinMap8 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    /// The matrix of a linear function, read off its basis images.
    pub fn from_linear(f: impl Fn(&Vec8) -> Vec8) -> Self {
        let cols: Vec<Vec8> = (0..8).map(|j| f(&Vec8::basis(j))).collect();
        LinMap8::from_fn(|i, j| cols[j][i].clone())
    }

    pub fn apply(&self, x: &Vec8) -> Vec8 {
        Vec8::new(std::array::from_fn(|i| {
            let mut acc = QSqrt3::zero();
            for j in 0..8 {
                if self.m[i][j].is_zero() || x[j].is_zero() {
                    continue;
                }
                acc += &(&self.m[i][j] * &x[j]);
            }
            acc
        }))
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &LinMap8) -> LinMap8 {
        LinMap8::from_fn(|i, j| {
            let mut acc = QSqrt3::zero();
            for k in 0..8 {
                if self.m[i][k].is_zero() || other.m[k][j].is_zero() {
                    continue;
                }
                acc += &(&self.m[i][k] * &other.m[k][j]);
            }
            acc
        })
    }

    pub fn pow(&self, n: u32) -> LinMap8 {
        (0..n).fold(LinMap8::identity(), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == LinMap8::identity()
    }
}

impl fmt::Debug for LinMap8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
