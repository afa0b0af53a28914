//! Structure constants and the Gram matrix, derived once from the matrix
//! model and cached.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::matrix::{basis_matrices, decompose, okubo_matrix_mul};
use super::{ops, AlgebraKind, Vec8};
use crate::error::Result;
use crate::scalar::{from_integral, integral_form, QSqrt3};

/// `basisᵢ ∘ basisⱼ = Σₖ coeff[k][i][j]·basisₖ` for one product.
#[derive(Clone, Debug, Serialize)]
pub struct StructureTable {
    pub kind: AlgebraKind,
    pub coeff: Vec<Vec<Vec<QSqrt3>>>,
    #[serde(skip)]
    sparse: Vec<Vec<(usize, QSqrt3)>>,
    /// `sparse` as integer pairs over the common denominator `denom`.
    #[serde(skip)]
    int: Vec<Vec<(usize, BigInt, BigInt)>>,
    #[serde(skip)]
    denom: BigInt,
}

impl StructureTable {
    fn from_products(
        kind: AlgebraKind,
        products: impl Fn(usize, usize) -> Result<Vec8>,
    ) -> Result<Self> {
        let mut coeff = vec![vec![vec![QSqrt3::zero(); 8]; 8]; 8];
        let mut sparse = vec![Vec::new(); 64];
        for i in 0..8 {
            for j in 0..8 {
                let p = products(i, j)?;
                for k in 0..8 {
                    if !p[k].is_zero() {
                        sparse[i * 8 + j].push((k, p[k].clone()));
                    }
                    coeff[k][i][j] = p[k].clone();
                }
            }
        }
        let flat: Vec<QSqrt3> = sparse.iter().flatten().map(|(_, c)| c.clone()).collect();
        let (parts, denom) = integral_form(&flat);
        let mut parts = parts.into_iter();
        let int = sparse
            .iter()
            .map(|cell| {
                cell.iter()
                    .map(|(k, _)| {
                        let (a, b) = parts.next().expect("one part per entry");
                        (*k, a, b)
                    })
                    .collect()
            })
            .collect();
        Ok(StructureTable {
            kind,
            coeff,
            sparse,
            int,
            denom,
        })
    }

    /// The product of two basis vectors as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec8 {
        let mut out = Vec8::zero();
        for (k, c) in &self.sparse[i * 8 + j] {
            out[*k] = c.clone();
        }
        out
    }

    /// Bilinear expansion of `x ∘ y`, in integers over a common denominator.
    pub fn mul(&self, x: &Vec8, y: &Vec8) -> Vec8 {
        let (xs, dx) = integral_form(&x.c);
        let (ys, dy) = integral_form(&y.c);
        let mut acc: [(BigInt, BigInt); 8] = Default::default();
        for (i, (xa, xb)) in xs.iter().enumerate() {
            if xa.is_zero() && xb.is_zero() {
                continue;
            }
            for (j, (ya, yb)) in ys.iter().enumerate() {
                if ya.is_zero() && yb.is_zero() {
                    continue;
                }
                let entries = &self.int[i * 8 + j];
                if entries.is_empty() {
                    continue;
                }
                let pa = xa * ya + 3 * (xb * yb);
                let pb = xa * yb + xb * ya;
                for (k, ca, cb) in entries {
                    acc[*k].0 += &pa * ca + 3 * (&pb * cb);
                    acc[*k].1 += &pa * cb + &pb * ca;
                }
            }
        }
        let d = dx * dy * &self.denom;
        Vec8::new(acc.map(|(a, b)| from_integral(a, b, &d)))
    }

    /// Number of nonzero structure constants.
    pub fn nonzero_count(&self) -> usize {
        self.sparse.iter().map(Vec::len).sum()
    }
}

/// Computes a structure table from scratch (no caching).
///
/// The Okubo table comes from the matrix product; the octonion table from
/// `(e*x)*(y*e)`; the para-octonion table from `x̄·ȳ`.
pub fn derive_structure_table(kind: AlgebraKind) -> Result<StructureTable> {
    match kind {
        AlgebraKind::Okubo => {
            let b = basis_matrices();
            StructureTable::from_products(kind, |i, j| decompose(&okubo_matrix_mul(&b[i], &b[j])?))
        }
        AlgebraKind::Octonion => {
            let ok = structure_table(AlgebraKind::Okubo);
            let e = Vec8::e();
            StructureTable::from_products(kind, |i, j| {
                let ex = ok.mul(&e, &Vec8::basis(i));
                let ye = ok.mul(&Vec8::basis(j), &e);
                Ok(ok.mul(&ex, &ye))
            })
        }
        AlgebraKind::ParaOctonion => {
            let oct = structure_table(AlgebraKind::Octonion);
            StructureTable::from_products(kind, |i, j| {
                let xb = ops::conjugate_oct(&Vec8::basis(i));
                let yb = ops::conjugate_oct(&Vec8::basis(j));
                Ok(oct.mul(&xb, &yb))
            })
        }
    }
}

/// The cached structure table for `kind`.
pub fn structure_table(kind: AlgebraKind) -> &'static StructureTable {
    static TABLES: [OnceLock<StructureTable>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    TABLES[kind.index()].get_or_init(|| {
        derive_structure_table(kind).expect("basis products decompose in the basis")
    })
}

/// `g[i][j] = ⟨basisᵢ, basisⱼ⟩ = ⅓Tr(BᵢBⱼ)`.
#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub g: [[QSqrt3; 8]; 8],
    #[serde(skip)]
    int: Vec<(usize, usize, BigInt, BigInt)>,
    #[serde(skip)]
    denom: BigInt,
}

impl GramMatrix {
    fn compute() -> GramMatrix {
        let b = basis_matrices();
        let third = QSqrt3::from_ratio(1, 3);
        let g: [[QSqrt3; 8]; 8] = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let tr = b[i].matrix().mul(b[j].matrix()).trace();
                debug_assert!(tr.is_real());
                &tr.re * &third
            })
        });
        let mut sparse = Vec::new();
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    sparse.push((i, j, v.clone()));
                }
            }
        }
        let vals: Vec<QSqrt3> = sparse.iter().map(|(_, _, v)| v.clone()).collect();
        let (parts, denom) = integral_form(&vals);
        let int = sparse
            .into_iter()
            .zip(parts)
            .map(|((i, j, _), (a, b))| (i, j, a, b))
            .collect();
        GramMatrix { g, int, denom }
    }

    /// `Σ g[i][j]·xᵢ·yⱼ`.
    pub fn bilinear(&self, x: &Vec8, y: &Vec8) -> QSqrt3 {
        let (xs, dx) = integral_form(&x.c);
        let (ys, dy) = integral_form(&y.c);
        let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
        for (i, j, ga, gb) in &self.int {
            let ((xa, xb), (ya, yb)) = (&xs[*i], &ys[*j]);
            let pa = xa * ya + 3 * (xb * yb);
            let pb = xa * yb + xb * ya;
            a += &pa * ga + 3 * (&pb * gb);
            b += &pa * gb + &pb * ga;
        }
        from_integral(a, b, &(dx * dy * &self.denom))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..8).all(|i| (0..8).all(|j| self.g[i][j] == self.g[j][i]))
    }

    /// Determinants of the eight leading principal submatrices, exactly.
    pub fn leading_minors(&self) -> Vec<QSqrt3> {
        (1..=8).map(|k| determinant(&self.g, k)).collect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && self.leading_minors().iter().all(QSqrt3::is_positive)
    }

    /// Whether the basis is orthonormal for `n`, i.e. `g = 2·I`.
    pub fn is_orthonormal(&self) -> bool {
        let two = QSqrt3::from_int(2);
        (0..8).all(|i| {
            (0..8).all(|j| {
                if i == j {
                    self.g[i][j] == two
                } else {
                    self.g[i][j].is_zero()
                }
            })
        })
    }

    /// Index pairs `i < j` with `g[i][j] ≠ 0`.
    pub fn off_diagonal(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..8 {
            for j in i + 1..8 {
                if !self.g[i][j].is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Determinant of the top-left `k×k` block by fraction-exact elimination.
#[allow(clippy::needless_range_loop)]
fn determinant(g: &[[QSqrt3; 8]; 8], k: usize) -> QSqrt3 {
    let mut a: Vec<Vec<QSqrt3>> = (0..k).map(|i| g[i][..k].to_vec()).collect();
    let mut det = QSqrt3::from_int(1);
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return QSqrt3::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..k {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..k {
                let d = &f * &a[col][c];
                a[r][c] -= &d;
            }
        }
    }
    det
}

/// The cached Gram matrix of the polar form.
pub fn gram() -> &'static GramMatrix {
    static GRAM: OnceLock<GramMatrix> = OnceLock::new();
    GRAM.get_or_init(GramMatrix::compute)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::to_matrix;

    fn q(s: &str) -> QSqrt3 {
        s.parse().unwrap()
    }

    #[test]
    fn gram_entries() {
        let g = gram();
        assert_eq!(g.g[0][0], q("2"));
        assert_eq!(g.g[0][1], q("0"));
        assert_eq!(g.g[0][4], q("sqrt3"));
        assert_eq!(g.off_diagonal(), vec![(0, 4)]);
        assert!(!g.is_orthonormal());
    }

    #[test]
    fn gram_positive_definite() {
        let g = gram();
        let minors = g.leading_minors();
        assert_eq!(minors.len(), 8);
        assert!(g.is_positive_definite());
        // 2×2 block [[2, √3], ..] first shows up at k = 5: 2⁴·... with det(2,√3;√3,2) = 1
        assert_eq!(minors[0], q("2"));
        assert_eq!(minors[4], q("8"));
        assert_eq!(minors[7], q("64"));
    }

    #[test]
    fn okubo_table_matches_matrix_oracle() {
        let t = structure_table(AlgebraKind::Okubo);
        let b = basis_matrices();
        for i in 0..8 {
            for j in 0..8 {
                let via_table = to_matrix(&t.basis_product(i, j));
                let direct = okubo_matrix_mul(&b[i], &b[j]).unwrap();
                assert_eq!(via_table, direct, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn okubo_coefficient_of_i5_in_e_i1() {
        let t = structure_table(AlgebraKind::Okubo);
        assert_eq!(t.coeff[5][0][1], q("-1/2*sqrt3"));
        assert_eq!(t.coeff[1][0][1], q("1/2"));
    }

    #[test]
    fn octonion_unit_row_and_column() {
        let t = structure_table(AlgebraKind::Octonion);
        for k in 0..8 {
            assert_eq!(t.basis_product(0, k), Vec8::basis(k));
            assert_eq!(t.basis_product(k, 0), Vec8::basis(k));
        }
    }

    #[test]
    fn para_unit_gives_conjugate() {
        let t = structure_table(AlgebraKind::ParaOctonion);
        for k in 0..8 {
            let bar = ops::conjugate_oct(&Vec8::basis(k));
            assert_eq!(t.basis_product(0, k), bar);
            assert_eq!(t.basis_product(k, 0), bar);
        }
    }

    #[test]
    fn derivation_is_reproducible() {
        for kind in AlgebraKind::ALL {
            let fresh = derive_structure_table(kind).unwrap();
            assert_eq!(fresh.coeff, structure_table(kind).coeff);
        }
    }
}
