//! Dense elements of `A⊗A` and `A⊗A⊗A` in the basis `e_i⊗e_j(⊗e_k)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::{write_terms, Matrix};
use crate::scalar::Scalar;

/// `Σ entries[i][j] e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(dim: usize) -> Self {
        Tensor2 {
            dim,
            data: vec![Scalar::zero(); dim * dim],
        }
    }

    /// `e_i⊗e_j` (0-based).
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zeros(dim);
        t.set(i, j, Scalar::one());
        t
    }

    /// The elementary bivector `e_i⊗e_j − e_j⊗e_i` (0-based).
    pub fn bivector(dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zeros(dim);
        t.add_at(i, j, &Scalar::one());
        t.add_at(j, i, &-Scalar::one());
        t
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert!(m.is_square(), "tensor coefficients must be square");
        let n = m.rows();
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, m.get(i, j).clone());
            }
        }
        t
    }

    /// Coefficient array as a matrix (row `i`, column `j`).
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, j, x) in self.support() {
            m.set(i, j, x.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.dim + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: &Scalar) {
        if !value.is_zero() {
            self.data[i * self.dim + j] += value;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Nonzero coefficients in lexicographic index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(idx, x)| (idx / n, idx % n, x))
    }

    /// `τ(x⊗y) = y⊗x`.
    pub fn twist(&self) -> Tensor2 {
        let mut t = Self::zeros(self.dim);
        for (i, j, x) in self.support() {
            t.set(j, i, x.clone());
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `(F⊗G)(t)` where `F`, `G` act on the first and second leg.
    pub fn apply(&self, first: &Matrix, second: &Matrix) -> Tensor2 {
        // (F⊗G)(e_i⊗e_j) = Σ F[a][i] G[b][j] e_a⊗e_b, i.e. F T G^T.
        let m = first.matmul(&self.to_matrix()).matmul(&second.transpose());
        Tensor2::from_matrix(&m)
    }
}

impl Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor2 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor2 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor2 {
    type Output = Tensor2;
    fn neg(self) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.support().map(|(i, j, c)| (c, [i, j])))
    }
}

/// `Σ entries[i][j][k] e_i⊗e_j⊗e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn basis(dim: usize, i: usize, j: usize, k: usize) -> Self {
        let mut t = Self::zeros(dim);
        t.set(i, j, k, Scalar::one());
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        if !value.is_zero() {
            let o = self.offset(i, j, k);
            self.data[o] += value;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(idx, x)| (idx / (n * n), (idx / n) % n, idx % n, x))
    }

    fn permuted(&self, map: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Tensor3 {
        let mut t = Self::zeros(self.dim);
        for (i, j, k, x) in self.support() {
            let (a, b, c) = map(i, j, k);
            t.set(a, b, c, x.clone());
        }
        t
    }

    /// `ξ(x⊗y⊗z) = y⊗z⊗x`.
    pub fn cycle(&self) -> Tensor3 {
        self.permuted(|i, j, k| (j, k, i))
    }

    /// `(τ⊗I)`: swaps the first two legs.
    pub fn twist12(&self) -> Tensor3 {
        self.permuted(|i, j, k| (j, i, k))
    }

    /// `(I⊗τ)`: swaps the last two legs.
    pub fn twist23(&self) -> Tensor3 {
        self.permuted(|i, j, k| (i, k, j))
    }

    /// `(F⊗G⊗H)(t)`; a `None` leg is the identity.
    pub fn apply(
        &self,
        first: Option<&Matrix>,
        second: Option<&Matrix>,
        third: Option<&Matrix>,
    ) -> Tensor3 {
        let n = self.dim;
        let mut cur = self.clone();
        for (leg, m) in [first, second, third].into_iter().enumerate() {
            let Some(m) = m else { continue };
            let mut next = Self::zeros(n);
            for (i, j, k, x) in cur.support() {
                let idx = [i, j, k];
                for a in 0..n {
                    let f = m.get(a, idx[leg]);
                    if f.is_zero() {
                        continue;
                    }
                    let mut out = idx;
                    out[leg] = a;
                    next.add_at(out[0], out[1], out[2], &(f * x));
                }
            }
            cur = next;
        }
        cur
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.support().map(|(i, j, k, c)| (c, [i, j, k])))
    }
}
