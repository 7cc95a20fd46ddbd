//! Dense exact vectors, matrices and subspaces over the rationals.
//!
//! Elimination always takes the first nonzero entry of a column as pivot and
//! reorders rows deterministically, so echelon bases are reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

/// Coordinates of an element in the basis `e_1..e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The standard basis vector `e_{index+1}` (indices are 0-based).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Scalar::one();
        v
    }

    pub fn from_entries(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| scalar::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Nonzero coordinates as `(index, value)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Renders `e_1 + (1/2)e_3 - 2e_4` style text with 1-based basis labels.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.support().map(|(i, c)| (c, [i])))
    }
}

/// Shared renderer for linear combinations of basis monomials. Each index
/// list is printed as `e_a⊗e_b⊗...`.
pub(crate) fn write_terms<'a, const K: usize>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Scalar, [usize; K])>,
) -> fmt::Result {
    let mut first = true;
    for (coef, idx) in terms {
        if coef.is_negative() {
            f.write_str(if first { "-" } else { " - " })?;
        } else if !first {
            f.write_str(" + ")?;
        }
        first = false;
        scalar::write_coefficient(f, coef)?;
        for (pos, i) in idx.iter().enumerate() {
            if pos > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "e{}", i + 1)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "matrix rows must have equal length"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), rows);
            for (i, x) in col.support() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(cols: usize, rows: &[Vector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.dim(), cols);
            for (j, x) in row.support() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: &Scalar) {
        self.data[r * self.cols + c] += value;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        let mut out = Vector::zeros(self.rows);
        for (c, x) in v.support() {
            for r in 0..self.rows {
                let m = self.get(r, c);
                if !m.is_zero() {
                    out.0[r] += m * x;
                }
            }
        }
        out
    }

    /// Row vector times matrix: `f ↦ f∘M` in dual coordinates.
    pub fn vec_mul(&self, f: &Vector) -> Vector {
        assert_eq!(self.rows, f.dim(), "vector-matrix dimension mismatch");
        let mut out = Vector::zeros(self.cols);
        for (r, x) in f.support() {
            for c in 0..self.cols {
                let m = self.get(r, c);
                if !m.is_zero() {
                    out.0[c] += x * m;
                }
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let x = m.get(row, c) * &inv;
                m.set(row, c, x);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(row, c);
                    if !p.is_zero() {
                        let x = m.get(r, c) - &factor * p;
                        m.set(r, c, x);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = Vector::zeros(self.cols);
            v.0[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v.0[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.dim());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x.0[p] = red.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", scalar::format_scalar(self.get(r, c)))?;
            }
        }
        f.write_str("]")
    }
}

/// A linear subspace of `K^n`, stored by its reduced row-echelon basis so
/// that equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| Vector::basis(ambient, i)).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let (red, pivots) = Matrix::from_row_vectors(ambient, &rows).rref();
        Subspace {
            ambient,
            basis: (0..pivots.len()).map(|r| red.row(r)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon basis; the leading entry of each vector is 1 and is the only
    /// nonzero entry in its column.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Remainder of `v` after elimination against the echelon basis.
    fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for b in &self.basis {
            let p = b.leading_index().expect("echelon basis vectors are nonzero");
            let coef = out[p].clone();
            if !coef.is_zero() {
                out.add_scaled(&-coef, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.dim(), self.ambient, "subspace dimension mismatch");
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve Σ a_i u_i = Σ b_j v_j; the kernel parametrises the meet.
        let k = self.dim();
        let cols: Vec<Vector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|v| -v))
            .collect();
        if cols.is_empty() {
            return Subspace::zero(self.ambient);
        }
        let m = Matrix::from_columns(self.ambient, &cols);
        let ker = m.kernel();
        Subspace::span(
            self.ambient,
            ker.basis.iter().map(|coeffs| {
                let mut v = Vector::zeros(self.ambient);
                for i in 0..k {
                    v.add_scaled(&coeffs[i], &self.basis[i]);
                }
                v
            }),
        )
    }

    /// Greedily appends standard basis vectors `e_1, e_2, ...` that are
    /// independent of `self + avoid` until `self` has dimension `target`.
    /// Returns the appended vectors in order.
    pub fn greedy_extension(&self, avoid: &Subspace, target: usize) -> Vec<Vector> {
        let mut acc = self.sum(avoid);
        let mut added = Vec::new();
        for i in 0..self.ambient {
            if self.dim() + added.len() >= target {
                break;
            }
            let e = Vector::basis(self.ambient, i);
            if !acc.contains(&e) {
                acc = acc.sum(&Subspace::span(self.ambient, [e.clone()]));
                added.push(e);
            }
        }
        added
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}
