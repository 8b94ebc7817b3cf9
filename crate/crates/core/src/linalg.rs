//! Small dense row-major matrices and the factorisations the kernels need.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.n, v.len());
        self.rows()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `Aᵀ M A`.
    pub fn congruence(&self, a: &Matrix) -> Matrix {
        a.transpose().matmul(&self.matmul(a))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.to_vec()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// `M = L D Lᵀ` with `L` unit lower triangular and `D` diagonal.
#[derive(Debug, Clone)]
pub struct Ldl {
    pub l: Matrix,
    pub d: Vec<f64>,
}

/// LDLᵀ without pivoting. Fails on the first pivot that is not strictly
/// positive, so success certifies positive definiteness.
pub fn ldl(m: &Matrix) -> Result<Ldl> {
    let n = m.dim();
    let mut l = Matrix::identity(n);
    let mut d = vec![0.0; n];
    for j in 0..n {
        let mut dj = m[(j, j)];
        for k in 0..j {
            dj -= l[(j, k)] * l[(j, k)] * d[k];
        }
        if dj.is_nan() || dj <= 0.0 {
            return Err(Error::IndefiniteKernel {
                index: j + 1,
                pivot: dj,
            });
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)] * d[k];
            }
            l[(i, j)] = s / dj;
        }
    }
    Ok(Ldl { l, d })
}

/// Solves `U x = y` for upper-triangular `U` by back-substitution.
pub fn solve_upper(u: &Matrix, y: &[f64]) -> Vec<f64> {
    let n = u.dim();
    assert_eq!(n, y.len());
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for j in i + 1..n {
            s -= u[(i, j)] * x[j];
        }
        x[i] = s / u[(i, i)];
    }
    x
}

/// Inverse of a unit lower-triangular matrix by forward substitution.
pub fn invert_unit_lower(l: &Matrix) -> Matrix {
    let n = l.dim();
    let mut inv = Matrix::identity(n);
    for col in 0..n {
        for i in col + 1..n {
            let mut s = 0.0;
            for k in col..i {
                s -= l[(i, k)] * inv[(k, col)];
            }
            inv[(i, col)] = s;
        }
    }
    inv
}
