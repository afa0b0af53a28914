//! The matrix model of the Okubo algebra: Hermitian traceless 3×3 matrices
//! over ℚ(√3)(i) with the product `μXY + μ̄YX − ⅓Tr(XY)·I`.
//!
//! This is the ground truth that the coordinate tables are derived from.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Vec8;
use crate::error::{Error, Result};
use crate::scalar::{CQSqrt3, QSqrt3};

/// A general 3×3 complex matrix.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CMat3(pub [[CQSqrt3; 3]; 3]);

impl CMat3 {
    pub fn zero() -> Self {
        CMat3::default()
    }

    pub fn identity() -> Self {
        let mut m = CMat3::zero();
        for k in 0..3 {
            m.0[k][k] = CQSqrt3::real(QSqrt3::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &CQSqrt3 {
        &self.0[r][c]
    }

    pub fn mul(&self, rhs: &CMat3) -> CMat3 {
        let mut out = CMat3::zero();
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = CQSqrt3::zero();
                for k in 0..3 {
                    if self.0[r][k].is_zero() || rhs.0[k][c].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.0[r][k] * &rhs.0[k][c]);
                }
                out.0[r][c] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMat3) -> CMat3 {
        CMat3(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][c] + &rhs.0[r][c])
        }))
    }

    pub fn sub(&self, rhs: &CMat3) -> CMat3 {
        CMat3(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][c] - &rhs.0[r][c])
        }))
    }

    pub fn scale(&self, k: &CQSqrt3) -> CMat3 {
        CMat3(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][c] * k)
        }))
    }

    pub fn trace(&self) -> CQSqrt3 {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..3).all(|r| (0..3).all(|c| self.0[r][c] == self.0[c][r].conj()))
    }
}

/// A Hermitian traceless 3×3 matrix. Construction checks both conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CMat3", into = "CMat3")]
pub struct HermMat3(CMat3);

impl HermMat3 {
    pub fn new(m: CMat3) -> Result<Self> {
        if !m.is_hermitian() {
            return Err(Error::RepresentationViolation("not Hermitian".into()));
        }
        if !m.trace().is_zero() {
            return Err(Error::RepresentationViolation(format!(
                "trace is {}",
                m.trace()
            )));
        }
        Ok(HermMat3(m))
    }

    pub fn matrix(&self) -> &CMat3 {
        &self.0
    }

    pub fn get(&self, r: usize, c: usize) -> &CQSqrt3 {
        self.0.get(r, c)
    }

    /// `Tr(X²)`, which is real for Hermitian `X`.
    pub fn trace_sq(&self) -> QSqrt3 {
        let mut acc = QSqrt3::zero();
        for r in 0..3 {
            for c in 0..3 {
                acc += self.0 .0[r][c].abs_sq();
            }
        }
        acc
    }
}

impl TryFrom<CMat3> for HermMat3 {
    type Error = Error;
    fn try_from(m: CMat3) -> Result<Self> {
        HermMat3::new(m)
    }
}

impl From<HermMat3> for CMat3 {
    fn from(h: HermMat3) -> CMat3 {
        h.0
    }
}

fn re(x: QSqrt3) -> CQSqrt3 {
    CQSqrt3::real(x)
}

fn im(x: QSqrt3) -> CQSqrt3 {
    CQSqrt3::new(QSqrt3::zero(), x)
}

fn build_basis() -> [HermMat3; 8] {
    let s3 = QSqrt3::sqrt3();
    let z = CQSqrt3::zero;
    let mut out: Vec<CMat3> = Vec::with_capacity(8);

    let mut e = CMat3::zero();
    e.0[0][0] = re(QSqrt3::from_int(2));
    e.0[1][1] = re(QSqrt3::from_int(-1));
    e.0[2][2] = re(QSqrt3::from_int(-1));
    out.push(e);

    // i1, i2, i3: real symmetric off-diagonal pairs (0,1), (0,2), (1,2)
    for (r, c) in [(0, 1), (0, 2), (1, 2)] {
        let mut m = CMat3::zero();
        m.0[r][c] = re(s3.clone());
        m.0[c][r] = re(s3.clone());
        out.push(m);
    }

    let mut i4 = CMat3::zero();
    i4.0[0][0] = re(s3.clone());
    i4.0[1][1] = re(-&s3);
    i4.0[2][2] = z();
    out.push(i4);

    // i5, i6, i7: −i above the diagonal, +i below
    for (r, c) in [(0, 1), (0, 2), (1, 2)] {
        let mut m = CMat3::zero();
        m.0[r][c] = im(-&s3);
        m.0[c][r] = im(s3.clone());
        out.push(m);
    }

    let v: Vec<HermMat3> = out
        .into_iter()
        .map(|m| HermMat3::new(m).expect("basis matrix is Hermitian traceless"))
        .collect();
    v.try_into().expect("eight basis matrices")
}

/// The eight basis matrices `e, i1, ..., i7`.
pub fn basis_matrices() -> &'static [HermMat3; 8] {
    static BASIS: OnceLock<[HermMat3; 8]> = OnceLock::new();
    BASIS.get_or_init(build_basis)
}

/// The matrix image `Σ xₖ·Bₖ` of a coordinate vector.
pub fn to_matrix(x: &Vec8) -> HermMat3 {
    let mut m = CMat3::zero();
    for (k, b) in basis_matrices().iter().enumerate() {
        if x[k].is_zero() {
            continue;
        }
        m = m.add(&b.matrix().scale(&CQSqrt3::real(x[k].clone())));
    }
    HermMat3(m)
}

/// Coordinates of a Hermitian traceless matrix in the basis.
///
/// Reads the coordinates off the entries, then rebuilds the matrix and
/// checks that it matches.
pub fn decompose(m: &HermMat3) -> Result<Vec8> {
    let s3_inv = QSqrt3::sqrt3().inv()?;
    let mut x = Vec8::zero();
    x[0] = -&m.get(2, 2).re;
    x[4] = (&m.get(0, 0).re - &(&x[0] * &QSqrt3::from_int(2))) * &s3_inv;
    for (k, (r, c)) in [(1, (0, 1)), (2, (0, 2)), (3, (1, 2))] {
        x[k] = &m.get(r, c).re * &s3_inv;
        x[k + 4] = -(&m.get(r, c).im * &s3_inv);
    }
    if to_matrix(&x) != *m {
        return Err(Error::BasisDecompositionFailure(format!("{:?}", m)));
    }
    Ok(x)
}

/// The Okubo product in the matrix model.
pub fn okubo_matrix_mul(x: &HermMat3, y: &HermMat3) -> Result<HermMat3> {
    let mu = CQSqrt3::okubo_mu();
    let xy = x.matrix().mul(y.matrix());
    let yx = y.matrix().mul(x.matrix());
    let third_tr = xy.trace().scale(&QSqrt3::from_ratio(1, 3));
    let out = xy
        .scale(&mu)
        .add(&yx.scale(&mu.conj()))
        .sub(&CMat3::identity().scale(&third_tr));
    HermMat3::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSqrt3 {
        s.parse().unwrap()
    }

    #[test]
    fn basis_entries() {
        let b = basis_matrices();
        assert_eq!(b[0].get(0, 0), &CQSqrt3::real(q("2")));
        assert_eq!(b[0].get(2, 2), &CQSqrt3::real(q("-1")));
        assert_eq!(b[1].get(0, 1), &CQSqrt3::real(q("sqrt3")));
        assert_eq!(b[1].get(1, 0), &CQSqrt3::real(q("sqrt3")));
        assert_eq!(b[5].get(0, 1), &CQSqrt3::new(q("0"), q("-sqrt3")));
        assert_eq!(b[5].get(1, 0), &CQSqrt3::new(q("0"), q("sqrt3")));
    }

    #[test]
    fn decompose_round_trip_on_basis() {
        for (k, b) in basis_matrices().iter().enumerate() {
            assert_eq!(decompose(b).unwrap(), Vec8::basis(k));
        }
    }

    #[test]
    fn e_is_idempotent() {
        let e = &basis_matrices()[0];
        assert_eq!(&okubo_matrix_mul(e, e).unwrap(), e);
    }

    #[test]
    fn i1_squared_is_diag_1_1_minus2() {
        let i1 = &basis_matrices()[1];
        let p = okubo_matrix_mul(i1, i1).unwrap();
        let mut d = CMat3::zero();
        d.0[0][0] = CQSqrt3::real(q("1"));
        d.0[1][1] = CQSqrt3::real(q("1"));
        d.0[2][2] = CQSqrt3::real(q("-2"));
        assert_eq!(p.matrix(), &d);
        let mut want = Vec8::zero();
        want[0] = q("2");
        want[4] = q("-sqrt3");
        assert_eq!(decompose(&p).unwrap(), want);
    }

    #[test]
    fn e_times_i1() {
        let b = basis_matrices();
        let p = decompose(&okubo_matrix_mul(&b[0], &b[1]).unwrap()).unwrap();
        let mut want = Vec8::zero();
        want[1] = q("1/2");
        want[5] = q("-1/2*sqrt3");
        assert_eq!(p, want);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = CMat3::zero();
        m.0[0][1] = CQSqrt3::real(q("1"));
        assert!(HermMat3::new(m).is_err());
        assert!(HermMat3::new(CMat3::identity()).is_err());
    }
}
