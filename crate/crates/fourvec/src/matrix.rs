//! The 4x4 matrix representation of left multiplication.

use crate::fourvector::Fourvector;
use crate::scalar::ComplexScalar;

/// The matrix M(p) with `M(p) . q == p ** q`. Its defining property is
/// `M . transpose(M) == norm(p) * identity`, with the plain
/// (non-conjugated) transpose.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ProductMatrix {
    rows: [[ComplexScalar; 4]; 4],
}

impl ProductMatrix {
    /// Matrix of left multiplication by `p` under the defining product.
    pub fn from_left_factor(p: Fourvector) -> Self {
        let [p0, p1, p2, p3] = p.components();
        Self {
            rows: [
                [p0, p1, p2, p3],
                [-p1, p0, -p3, p2],
                [-p2, p3, p0, -p1],
                [-p3, -p2, p1, p0],
            ],
        }
    }

    pub fn identity() -> Self {
        Self::scalar(ComplexScalar::ONE)
    }

    /// c times the identity matrix.
    pub fn scalar(c: ComplexScalar) -> Self {
        let mut rows = [[ComplexScalar::ZERO; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = c;
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[[ComplexScalar; 4]; 4] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexScalar {
        self.rows[row][col]
    }

    /// Matrix-vector product; equals `p ** q` when `self` is M(p).
    pub fn apply(&self, q: Fourvector) -> Fourvector {
        let qc = q.components();
        Fourvector::from_components(std::array::from_fn(|i| {
            self.rows[i]
                .iter()
                .zip(qc.iter())
                .fold(ComplexScalar::ZERO, |acc, (m, v)| acc + *m * *v)
        }))
    }

    /// Plain transpose, without complex conjugation.
    pub fn transpose(&self) -> Self {
        Self {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i])),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        Self {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..4).fold(ComplexScalar::ZERO, |acc, k| {
                        acc + self.rows[i][k] * other.rows[k][j]
                    })
                })
            }),
        }
    }

    /// Largest entrywise relative distance to `other`.
    pub fn residual(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max(self.rows[i][j].residual(other.rows[i][j]));
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.residual(other) <= eps
    }
}
