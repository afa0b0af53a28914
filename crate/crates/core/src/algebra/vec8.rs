use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::QSqrt3;

const NAMES: [&str; 8] = ["e", "i1", "i2", "i3", "i4", "i5", "i6", "i7"];

/// An algebra element as coordinates in the basis `{e, i1, ..., i7}`.
///
/// Serialized as an array of eight exact scalar strings.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec8 {
    pub c: [QSqrt3; 8],
}

impl Vec8 {
    pub fn new(c: [QSqrt3; 8]) -> Self {
        Vec8 { c }
    }

    pub fn zero() -> Self {
        Vec8::default()
    }

    /// The `k`-th basis vector (`0` is `e`).
    pub fn basis(k: usize) -> Self {
        let mut v = Vec8::zero();
        v.c[k] = QSqrt3::from_int(1);
        v
    }

    /// The idempotent `e`.
    pub fn e() -> Self {
        Vec8::basis(0)
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Vec8::new(c.map(QSqrt3::from_int))
    }

    pub fn basis_name(k: usize) -> &'static str {
        NAMES[k]
    }

    /// Parses eight scalars in the text format of [`QSqrt3`].
    pub fn parse_coords<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 8 {
            return Err(Error::Parse {
                input: parts
                    .iter()
                    .map(|s| s.as_ref())
                    .collect::<Vec<_>>()
                    .join(","),
                reason: format!("expected 8 coordinates, got {}", parts.len()),
            });
        }
        let mut v = Vec8::zero();
        for (slot, s) in v.c.iter_mut().zip(parts) {
            *slot = s.as_ref().parse()?;
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &QSqrt3) -> Self {
        Vec8::new(std::array::from_fn(|i| &self.c[i] * k))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, QSqrt3> {
        self.c.iter()
    }
}

impl Index<usize> for Vec8 {
    type Output = QSqrt3;
    fn index(&self, i: usize) -> &QSqrt3 {
        &self.c[i]
    }
}

impl IndexMut<usize> for Vec8 {
    fn index_mut(&mut self, i: usize) -> &mut QSqrt3 {
        &mut self.c[i]
    }
}

impl Add<&Vec8> for &Vec8 {
    type Output = Vec8;
    fn add(self, rhs: &Vec8) -> Vec8 {
        Vec8::new(std::array::from_fn(|i| &self.c[i] + &rhs.c[i]))
    }
}

impl Add for Vec8 {
    type Output = Vec8;
    fn add(self, rhs: Vec8) -> Vec8 {
        &self + &rhs
    }
}

impl Sub<&Vec8> for &Vec8 {
    type Output = Vec8;
    fn sub(self, rhs: &Vec8) -> Vec8 {
        Vec8::new(std::array::from_fn(|i| &self.c[i] - &rhs.c[i]))
    }
}

impl Sub for Vec8 {
    type Output = Vec8;
    fn sub(self, rhs: Vec8) -> Vec8 {
        &self - &rhs
    }
}

impl Neg for &Vec8 {
    type Output = Vec8;
    fn neg(self) -> Vec8 {
        Vec8::new(std::array::from_fn(|i| -&self.c[i]))
    }
}

impl Neg for Vec8 {
    type Output = Vec8;
    fn neg(self) -> Vec8 {
        -&self
    }
}

/// Renders as a sum over nonzero coordinates, e.g. `(1/2)i1 + (-1/2*sqrt3)i5`.
impl fmt::Display for Vec8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *x == QSqrt3::from_int(1) {
                write!(f, "{}", NAMES[k])?;
            } else {
                write!(f, "({x}){}", NAMES[k])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vec8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
