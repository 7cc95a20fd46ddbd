//! Bilinear forms, quadratic algebras, and the passage between invariant
//! forms and bimodule isomorphisms `A → A*`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::bimodule::{self, Bimodule};
use crate::error::{check_dim, Error, Result};
use crate::identity::{self, scan3, IdentityKind, Outcome};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{compare, CheckReport};
use crate::scalar::{self, Scalar};

/// `B(x, y) = xᵀ·gram·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        check_dim(gram.rows(), gram.cols())?;
        Ok(BilinearForm { gram })
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        self.gram.vec_mul(x).dot(y)
    }
}

pub fn is_symmetric(b: &BilinearForm) -> bool {
    b.gram.is_symmetric()
}

pub fn is_nondegenerate(b: &BilinearForm) -> bool {
    b.gram.rank() == b.dim()
}

/// `B(xy, z) = B(x, yz)` on all basis triples.
pub fn invariance(a: &Algebra, b: &BilinearForm) -> Result<Outcome> {
    check_dim(a.dim(), b.dim())?;
    let g = &b.gram;
    Ok(scan3(a.dim(), |i, j, k| {
        let lhs = a.product(i, j).dot(&g.column(k));
        let rhs = g.row(i).dot(a.product(j, k));
        compare("B(xy, z) = B(x, yz)", &[i, j, k], lhs, rhs)
    }))
}

pub fn is_invariant(a: &Algebra, b: &BilinearForm) -> Result<bool> {
    Ok(invariance(a, b)?.is_ok())
}

pub fn is_quadratic(a: &Algebra, b: &BilinearForm) -> bool {
    a.dim() == b.dim() && is_symmetric(b) && is_nondegenerate(b) && is_invariant(a, b).unwrap_or(false)
}

fn require_quadratic(a: &Algebra, b: &BilinearForm) -> Result<()> {
    check_dim(a.dim(), b.dim())?;
    let reason = if !is_symmetric(b) {
        "form is not symmetric".to_string()
    } else if !is_nondegenerate(b) {
        format!("form has rank {} < {}", b.gram.rank(), b.dim())
    } else if let Err(w) = invariance(a, b)? {
        w.to_string()
    } else {
        return Ok(());
    };
    Err(Error::NotQuadratic { reason })
}

/// On a quadratic algebra the four predicates NA, L, R and LR are evaluated
/// independently and must coincide.
pub fn quadratic_equivalences(a: &Algebra, b: &BilinearForm) -> Result<CheckReport> {
    require_quadratic(a, b)?;
    let mut report = CheckReport::new();
    let kinds = [
        IdentityKind::NearlyAssociative,
        IdentityKind::LCommutative,
        IdentityKind::RCommutative,
        IdentityKind::LR,
    ];
    let values: Vec<bool> = kinds
        .iter()
        .map(|&k| report.info(k.name(), identity::check_identity(a, k)))
        .collect();
    report.verdict_flag("NA ⟺ L ⟺ R ⟺ LR", values.iter().all(|&v| v == values[0]));
    Ok(report)
}

/// `Φ: A → A*`; row `i` holds the coordinates of `Φ(e_i)` in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    phi: Matrix,
}

impl Intertwiner {
    pub fn new(phi: Matrix) -> Result<Self> {
        check_dim(phi.rows(), phi.cols())?;
        Ok(Intertwiner { phi })
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    /// The matrix acting on column coordinates, `Φ(x) = phiᵀ·x`.
    pub fn column_map(&self) -> Matrix {
        self.phi.transpose()
    }
}

/// `Φ(a) = B(a, −)`, verified to intertwine the adjoint and coadjoint
/// actions.
pub fn phi_from_form(a: &Algebra, b: &BilinearForm) -> Result<Intertwiner> {
    require_quadratic(a, b)?;
    let phi = Intertwiner {
        phi: b.gram.clone(),
    };
    intertwining(a, &phi).map_err(|w| Error::InternalContradiction {
        step: "phi_from_form postcondition".to_string(),
        detail: w.to_string(),
    })?;
    Ok(phi)
}

fn intertwining(a: &Algebra, phi: &Intertwiner) -> Outcome {
    let adj = Bimodule::adjoint(a);
    let coadj = bimodule::dual_bimodule(&adj);
    bimodule::morphism_equations(&adj, &coadj, &phi.column_map())
}

/// Every intermediate object of the synthesis, for inspection.
#[derive(Clone, Debug)]
pub struct FormSynthesis {
    pub form: BilinearForm,
    pub symmetric_part: Matrix,
    pub skew_part: Matrix,
    /// Radical of the skew part.
    pub n: Subspace,
    /// Radical of the symmetric part.
    pub w: Subspace,
    /// Basis of the complement `V ⊇ N` with `A = W ⊕ V`.
    pub v_basis: Vec<Vector>,
    pub report: CheckReport,
}

fn contradiction(step: &str, detail: String) -> Error {
    Error::InternalContradiction {
        step: step.to_string(),
        detail,
    }
}

/// Builds a quadratic form from an invertible intertwiner by executing the
/// constructive argument step by step. Each step is verified; a failure
/// means the input certificate or the argument is wrong.
pub fn form_from_phi(a: &Algebra, phi: &Intertwiner) -> Result<FormSynthesis> {
    let n = a.dim();
    check_dim(n, phi.phi.rows())?;
    if phi.phi.inverse().is_none() {
        return Err(Error::NotInvertible);
    }
    intertwining(a, phi).map_err(Error::NotIntertwining)?;
    let mut report = CheckReport::new();

    // (1) T(x, y) = Φ(x)(y) is invariant and satisfies T(xy, z) = T(y, zx).
    let t = phi.phi.clone();
    let inv = invariance(a, &BilinearForm { gram: t.clone() })?;
    if let Err(w) = &inv {
        return Err(contradiction("T invariant", w.to_string()));
    }
    report.verdict("T(xy, z) = T(x, yz)", inv);
    let aux = scan3(n, |i, j, k| {
        compare(
            "T(xy, z) = T(y, zx)",
            &[i, j, k],
            a.product(i, j).dot(&t.column(k)),
            t.row(j).dot(a.product(k, i)),
        )
    });
    if let Err(w) = aux.clone() {
        return Err(contradiction("T(xy, z) = T(y, zx)", w.to_string()));
    }
    report.verdict("T(xy, z) = T(y, zx)", aux);

    // (2) T = T_s + T_a.
    let tt = t.transpose();
    let h = scalar::half();
    let ts = (&t + &tt).scale(&h);
    let ta = (&t - &tt).scale(&h);

    // (3) T_a(A·A, A) = 0.
    let skew_on_square = scan3(n, |i, j, k| {
        compare(
            "T_a(xy, z) = 0",
            &[i, j, k],
            a.product(i, j).dot(&ta.column(k)),
            scalar::zero(),
        )
    });
    if let Err(w) = skew_on_square.clone() {
        return Err(contradiction("T_a(A², A) = 0", w.to_string()));
    }
    report.verdict("T_a(A², A) = 0", skew_on_square);

    // (4) N = rad T_a, W = rad T_s, N ∩ W = 0, A² ⊆ N.
    let rad_n = ta.kernel();
    let rad_w = ts.kernel();
    let meet = rad_n.intersection(&rad_w);
    if !meet.is_zero() {
        return Err(contradiction("N ∩ W = 0", format!("N ∩ W = {meet}")));
    }
    report.verdict_flag("N ∩ W = 0", true);
    let square = a.square();
    if !square.is_subspace_of(&rad_n) {
        return Err(contradiction(
            "A² ⊆ N",
            format!("A² = {square}, N = {rad_n}"),
        ));
    }
    report.verdict_flag("A² ⊆ N", true);
    report.annotate(format!("N = {rad_n}, W = {rad_w}"));

    // (5) V ⊇ N with A = W ⊕ V.
    let mut v_basis: Vec<Vector> = rad_n.basis().to_vec();
    v_basis.extend(rad_n.greedy_extension(&rad_w, n - rad_w.dim()));
    let frame: Vec<Vector> = rad_w.basis().iter().chain(&v_basis).cloned().collect();
    let f = Matrix::from_columns(n, &frame);
    let f_inv = f
        .inverse()
        .ok_or_else(|| contradiction("A = W ⊕ V", format!("W = {rad_w}, V spanned by {} vectors", v_basis.len())))?;
    report.verdict_flag("A = W ⊕ V", true);

    // (6) H = identity Gram on W's echelon basis, extended by zero on V.
    let dw = rad_w.dim();
    let p = Matrix::from_row_vectors(n, &(0..dw).map(|r| f_inv.row(r)).collect::<Vec<_>>());
    let h_tilde = if dw == 0 {
        Matrix::zeros(n, n)
    } else {
        p.transpose().matmul(&p)
    };

    // (7) B = T_s + H̃.
    let form = BilinearForm {
        gram: &ts + &h_tilde,
    };
    if let Err(e) = require_quadratic(a, &form) {
        return Err(contradiction("B quadratic", e.to_string()));
    }
    report.verdict_flag("B = T_s + H̃ quadratic", true);

    Ok(FormSynthesis {
        form,
        symmetric_part: ts,
        skew_part: ta,
        n: rad_n,
        w: rad_w,
        v_basis,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{build_double, canonical_double_form, BialgebraCandidate};
    use crate::fixtures;

    fn d8() -> Algebra {
        let bc = BialgebraCandidate::new(fixtures::nal4(), fixtures::co4()).unwrap();
        build_double(&bc).into_algebra()
    }

    #[test]
    fn form_predicates() {
        let b = BilinearForm::new(Matrix::from_int_rows(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(is_symmetric(&b) && is_nondegenerate(&b));
        assert_eq!(b.eval(&Vector::from_ints(&[1, 2]), &Vector::from_ints(&[3, 4])), scalar::int(10));
        let skew = BilinearForm::new(Matrix::from_int_rows(&[&[0, 1], &[-1, 0]])).unwrap();
        assert!(!is_symmetric(&skew));
        let degenerate = BilinearForm::new(Matrix::from_int_rows(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(!is_nondegenerate(&degenerate));
        assert!(is_quadratic(&Algebra::zero(2), &b));
        assert!(!is_quadratic(&Algebra::zero(2), &degenerate));
        assert!(BilinearForm::new(Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn identity_form_is_not_invariant_on_na6() {
        let na6 = fixtures::na6();
        assert!(!is_invariant(&na6, &BilinearForm::identity(6)).unwrap());
        assert!(matches!(
            quadratic_equivalences(&na6, &BilinearForm::identity(6)),
            Err(Error::NotQuadratic { .. })
        ));
    }

    #[test]
    fn equivalences_on_doubles() {
        let d8 = d8();
        let rep = quadratic_equivalences(&d8, &canonical_double_form(4)).unwrap();
        assert!(rep.all_verdicts_hold());
        assert!(rep.entries().iter().all(|e| e.holds));
    }

    #[test]
    fn phi_of_canonical_form_intertwines() {
        let d8 = d8();
        let phi = phi_from_form(&d8, &canonical_double_form(4)).unwrap();
        assert_eq!(phi.phi(), canonical_double_form(4).gram());
        assert!(bimodule::adjoint_coadjoint_isomorphic(&d8, &canonical_double_form(4)).unwrap());
    }

    #[test]
    fn synthesis_from_symmetric_phi() {
        let d8 = d8();
        let phi = Intertwiner::new(canonical_double_form(4).gram().clone()).unwrap();
        let s = form_from_phi(&d8, &phi).unwrap();
        assert!(s.skew_part.is_zero());
        assert!(s.w.is_zero());
        assert_eq!(&s.form, &canonical_double_form(4));
        assert!(s.report.all_verdicts_hold());
    }

    #[test]
    fn synthesis_from_skew_phi() {
        let z = Algebra::zero(2);
        let phi = Intertwiner::new(Matrix::from_int_rows(&[&[0, 1], &[-1, 0]])).unwrap();
        let s = form_from_phi(&z, &phi).unwrap();
        assert_eq!(s.w.dim(), 2);
        assert!(s.v_basis.is_empty());
        assert_eq!(s.form, BilinearForm::identity(2));

        let phi = Intertwiner::new(Matrix::from_int_rows(&[&[1, 1], &[-1, 1]])).unwrap();
        let s = form_from_phi(&z, &phi).unwrap();
        assert!(s.w.is_zero() && s.n.is_zero());
        assert_eq!(s.form, BilinearForm::identity(2));
    }

    #[test]
    fn synthesis_rejects_bad_input() {
        let d8 = d8();
        assert_eq!(
            form_from_phi(&d8, &Intertwiner::new(Matrix::zeros(8, 8)).unwrap()).unwrap_err(),
            Error::NotInvertible
        );
        assert!(matches!(
            form_from_phi(&d8, &Intertwiner::new(Matrix::identity(8)).unwrap()),
            Err(Error::NotIntertwining(_))
        ));
        assert!(matches!(
            form_from_phi(&d8, &Intertwiner::new(Matrix::identity(3)).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
