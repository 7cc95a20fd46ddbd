//! Finite-dimensional algebras given by structure constants.
//!
//! Convention used everywhere: `c[i][j][k]` is the coefficient of `e_k` in
//! `e_i·e_j` (0-based indices in code, 1-based in text).

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::Witness;
use crate::scalar::{self, Scalar};
use crate::tensor::Tensor3;

#[derive(Clone, Debug)]
pub struct Algebra {
    constants: Tensor3,
    label: Option<String>,
    products: Vec<Vector>,
    lefts: Vec<Matrix>,
    rights: Vec<Matrix>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.constants == other.constants
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(constants: Tensor3) -> Self {
        let n = constants.dim();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut v = Vector::zeros(n);
                for k in 0..n {
                    v[k] = constants.get(i, j, k).clone();
                }
                products.push(v);
            }
        }
        let lefts = (0..n)
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|j| products[i * n + j].clone()).collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        let rights = (0..n)
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|j| products[j * n + i].clone()).collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        Algebra {
            constants,
            label: None,
            products,
            lefts,
            rights,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Tensor3::zeros(dim))
    }

    /// Builds from `(i, j, k, c)` entries meaning `e_i·e_j ∋ c e_k`, 0-based.
    /// Repeated entries accumulate.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut t = Tensor3::zeros(dim);
        for (i, j, k, c) in entries {
            t.add_at(i, j, k, &c);
        }
        Self::new(t)
    }

    /// Convenience for hand-written tables: 1-based `(i, j, k, c)` integers.
    pub fn from_table(dim: usize, table: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(
            dim,
            table
                .iter()
                .map(|&(i, j, k, c)| (i - 1, j - 1, k - 1, scalar::int(c))),
        )
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(String::from(label));
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.constants
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// `e_i·e_j`.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim() + j]
    }

    /// `L_{e_i}`.
    pub fn left(&self, i: usize) -> &Matrix {
        &self.lefts[i]
    }

    /// `R_{e_i}`.
    pub fn right(&self, i: usize) -> &Matrix {
        &self.rights[i]
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim(), x.dim())?;
        check_dim(self.dim(), y.dim())?;
        Ok(self.m(x, y))
    }

    pub(crate) fn m(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let p = self.product(i, j);
                if !p.is_zero() {
                    out.add_scaled(&(a * b), p);
                }
            }
        }
        out
    }

    fn combine(&self, x: &Vector, mats: &[Matrix]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, a) in x.support() {
            out = &out + &mats[i].scale(a);
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_op(&self, x: &Vector) -> Result<Matrix> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.combine(x, &self.lefts))
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_op(&self, x: &Vector) -> Result<Matrix> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.combine(x, &self.rights))
    }

    /// `ad_x = L_x − R_x`.
    pub fn ad_op(&self, x: &Vector) -> Result<Matrix> {
        Ok(&self.left_op(x)? - &self.right_op(x)?)
    }

    /// `ad_{e_i}`.
    pub fn ad(&self, i: usize) -> Matrix {
        &self.lefts[i] - &self.rights[i]
    }

    /// `(xy)z − x(yz)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        check_dim(self.dim(), z.dim())?;
        let xy = self.mul(x, y)?;
        let yz = self.mul(y, z)?;
        Ok(&self.m(&xy, z) - &self.m(x, &yz))
    }

    fn derived(&self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Algebra {
        let n = self.dim();
        let mut t = Tensor3::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = f(self.constants.get(i, j, k), self.constants.get(j, i, k));
                    if !v.is_zero() {
                        t.set(i, j, k, v);
                    }
                }
            }
        }
        Algebra::new(t)
    }

    /// `A⁻` with `[x,y] = ½(xy − yx)`.
    pub fn minus_algebra(&self) -> Algebra {
        let h = scalar::half();
        self.derived(|a, b| (a - b) * &h)
    }

    /// `A⁺` with `x•y = ½(xy + yx)`.
    pub fn plus_algebra(&self) -> Algebra {
        let h = scalar::half();
        self.derived(|a, b| (a + b) * &h)
    }

    /// Product `x·ᵒᵖy = y·x`.
    pub fn opposite(&self) -> Algebra {
        self.derived(|_, b| b.clone())
    }

    pub fn is_commutative(&self) -> bool {
        self.anticommutativity_witness_with(1).is_none()
    }

    pub fn is_anticommutative(&self) -> bool {
        self.anticommutativity_witness_with(-1).is_none()
    }

    /// First `(i, j)` with `e_ie_j ≠ sign·e_je_i`.
    fn anticommutativity_witness_with(&self, sign: i64) -> Option<Witness> {
        let n = self.dim();
        let s = scalar::int(sign);
        for i in 0..n {
            for j in i..n {
                let lhs = self.product(i, j).clone();
                let rhs = self.product(j, i).scale(&s);
                if lhs != rhs {
                    let name = if sign < 0 { "anticommutativity" } else { "commutativity" };
                    return Some(Witness::new(name, &[i, j], lhs, rhs));
                }
            }
        }
        None
    }

    fn stacked_kernel<'a>(&self, mats: impl Iterator<Item = &'a Matrix>) -> Subspace {
        let n = self.dim();
        let rows: Vec<Vector> = mats.flat_map(|m| (0..n).map(|r| m.row(r))).collect();
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Matrix::from_row_vectors(n, &rows).kernel()
    }

    /// `ann(A) = {x : xy = yx = 0 for all y}`.
    pub fn annihilator(&self) -> Subspace {
        self.stacked_kernel(self.lefts.iter().chain(&self.rights))
    }

    /// Center `{x : [x,y] = 0 for all y}` of an anticommutative algebra.
    pub fn lie_center(&self) -> Result<Subspace> {
        if let Some(w) = self.anticommutativity_witness_with(-1) {
            return Err(Error::NotAnticommutative(w));
        }
        Ok(self.stacked_kernel(self.rights.iter()))
    }

    /// Span of all products `u·v` with `u ∈ U`, `v ∈ V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), u.ambient_dim())?;
        check_dim(self.dim(), v.ambient_dim())?;
        Ok(self.span_products(u, v))
    }

    fn span_products(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                out.push(self.m(a, b));
            }
        }
        Subspace::span(self.dim(), out)
    }

    /// `A² = A·A`.
    pub fn square(&self) -> Subspace {
        Subspace::span(self.dim(), self.products.iter().cloned())
    }

    /// `A⁽¹⁾ = A², A⁽ⁱ⁺¹⁾ = (A⁽ⁱ⁾)²`, listed until the series stabilises
    /// (the last entry repeats no earlier one).
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = Vec::new();
        let mut cur = self.square();
        loop {
            let next = self.span_products(&cur, &cur);
            let done = next == cur;
            series.push(cur);
            if done {
                break;
            }
            cur = next;
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// All left-nested products `(..((x₁x₂)x₃)..)x_{k+1}` vanish.
    pub fn is_nilpotent_of_class(&self, k: usize) -> bool {
        let full = Subspace::full(self.dim());
        let mut cur = full.clone();
        for _ in 0..k {
            if cur.is_zero() {
                return true;
            }
            cur = self.span_products(&cur, &full);
        }
        cur.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i - 1)
    }

    #[test]
    fn fixture_products() {
        let na6 = fixtures::na6();
        assert_eq!(na6.mul(&e(6, 2), &e(6, 1)).unwrap(), -&e(6, 4));
        let nal4 = fixtures::nal4();
        assert_eq!(nal4.mul(&e(4, 1), &e(4, 2)).unwrap(), &e(4, 3) + &e(4, 4));
        assert!(Algebra::zero(3).mul(&e(3, 1), &e(3, 2)).unwrap().is_zero());
        assert!(na6.mul(&e(5, 1), &e(6, 1)).is_err());
    }

    #[test]
    fn operators() {
        let na6 = fixtures::na6();
        let r2 = na6.right_op(&e(6, 2)).unwrap();
        assert_eq!(r2.mul_vec(&e(6, 1)), e(6, 3));
        assert_eq!(r2.mul_vec(&e(6, 2)), e(6, 5));
        assert_eq!(r2.mul_vec(&e(6, 3)), e(6, 6).scale(&scalar::int(2)));
        assert_eq!(r2.mul_vec(&e(6, 4)), e(6, 6));

        let nal4 = fixtures::nal4();
        let l1 = nal4.left_op(&e(4, 1)).unwrap();
        assert_eq!(l1.mul_vec(&e(4, 1)), e(4, 4));
        assert_eq!(l1.mul_vec(&e(4, 2)), &e(4, 3) + &e(4, 4));
        assert!(l1.mul_vec(&e(4, 3)).is_zero());

        let nal6 = fixtures::nal6();
        let ad2 = nal6.ad_op(&e(6, 2)).unwrap();
        assert_eq!(ad2.mul_vec(&e(6, 1)), &e(6, 4) - &e(6, 3));
        assert_eq!(ad2.mul_vec(&e(6, 4)), e(6, 6));
        assert!(Algebra::zero(2).left_op(&e(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn associators() {
        let nal6 = fixtures::nal6();
        assert_eq!(
            nal6.associator(&e(6, 1), &e(6, 2), &e(6, 2)).unwrap(),
            e(6, 6)
        );
        let nal4 = fixtures::nal4();
        for i in 1..=4 {
            for j in 1..=4 {
                for k in 1..=4 {
                    assert!(nal4
                        .associator(&e(4, i), &e(4, j), &e(4, k))
                        .unwrap()
                        .is_zero());
                }
            }
        }
    }

    #[test]
    fn derived_algebras() {
        let na6 = fixtures::na6();
        let minus = na6.minus_algebra();
        let expected = &e(6, 3).scale(&scalar::half()) + &e(6, 4).scale(&scalar::half());
        assert_eq!(minus.product(0, 1), &expected);
        assert_eq!(na6.opposite().opposite(), na6);
        let plus = na6.plus_algebra();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    &(minus.product(i, j) + plus.product(i, j)),
                    na6.product(i, j)
                );
            }
        }
        let comm = na6.plus_algebra();
        assert!(comm.minus_algebra().constants().is_zero());
    }

    #[test]
    fn annihilator_and_center() {
        let z = Algebra::zero(3);
        assert_eq!(z.annihilator(), Subspace::full(3));
        assert_eq!(z.lie_center().unwrap(), Subspace::full(3));
        assert!(fixtures::nal6().annihilator().contains(&e(6, 6)));
        assert!(fixtures::na6()
            .minus_algebra()
            .lie_center()
            .unwrap()
            .contains(&e(6, 6)));
        assert!(matches!(
            fixtures::na6().lie_center(),
            Err(Error::NotAnticommutative(_))
        ));
    }

    #[test]
    fn squares_and_series() {
        assert!(Algebra::zero(2).square().is_zero());
        let nal6 = fixtures::nal6();
        assert_eq!(
            nal6.square(),
            Subspace::span(6, [e(6, 3), e(6, 4), e(6, 5), e(6, 6)])
        );
        assert_eq!(fixtures::nal4().square(), Subspace::span(4, [e(4, 3), e(4, 4)]));
        let full = Subspace::full(6);
        assert_eq!(nal6.subspace_product(&full, &full).unwrap(), nal6.square());

        let z = Algebra::zero(2);
        assert!(z.is_solvable());
        assert!(z.is_nilpotent_of_class(1));
        assert!(fixtures::na6().minus_algebra().is_solvable());
        let m = nal6.minus_algebra();
        assert!(m.is_nilpotent_of_class(3));
        assert!(!m.is_nilpotent_of_class(2));
    }
}
