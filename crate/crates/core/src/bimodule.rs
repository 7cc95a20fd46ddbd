//! Bimodules `(V, l, r)` over an algebra and their dual bimodules.
//!
//! Dual-space bookkeeping: functionals are coordinate vectors in the dual
//! basis, and precomposition `f ↦ f∘M` is the transposed matrix.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{check_dim, Error, Result};
use crate::identity::{self, scan2, IdentityKind, Outcome};
use crate::linalg::{Matrix, Vector};
use crate::quadratic::{self, BilinearForm};
use crate::report::{compare, CheckReport};
use crate::tensor::Tensor3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    alg: Algebra,
    module_dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl Bimodule {
    /// `l[i] = l(e_i)`, `r[i] = r(e_i)`, each `m×m`.
    pub fn new(alg: Algebra, module_dim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        check_dim(alg.dim(), l.len())?;
        check_dim(alg.dim(), r.len())?;
        for m in l.iter().chain(&r) {
            check_dim(module_dim, m.rows())?;
            check_dim(module_dim, m.cols())?;
        }
        Ok(Bimodule {
            alg,
            module_dim,
            l,
            r,
        })
    }

    /// `(A, L, R)`.
    pub fn adjoint(a: &Algebra) -> Self {
        let n = a.dim();
        Bimodule {
            alg: a.clone(),
            module_dim: n,
            l: (0..n).map(|i| a.left(i).clone()).collect(),
            r: (0..n).map(|i| a.right(i).clone()).collect(),
        }
    }

    pub fn zero(a: &Algebra, module_dim: usize) -> Self {
        let z = Matrix::zeros(module_dim, module_dim);
        Bimodule {
            alg: a.clone(),
            module_dim,
            l: alloc::vec![z.clone(); a.dim()],
            r: alloc::vec![z; a.dim()],
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn l(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn r(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    fn combine(&self, mats: &[Matrix], x: &Vector) -> Matrix {
        let m = self.module_dim;
        let mut out = Matrix::zeros(m, m);
        for (i, a) in x.support() {
            out = &out + &mats[i].scale(a);
        }
        out
    }

    /// `l(x)` for an arbitrary element.
    pub fn l_of(&self, x: &Vector) -> Matrix {
        self.combine(&self.l, x)
    }

    /// `r(x)` for an arbitrary element.
    pub fn r_of(&self, x: &Vector) -> Matrix {
        self.combine(&self.r, x)
    }

    /// The same bimodule with `l` and `r` exchanged.
    pub fn swapped(&self) -> Self {
        Bimodule {
            alg: self.alg.clone(),
            module_dim: self.module_dim,
            l: self.r.clone(),
            r: self.l.clone(),
        }
    }
}

/// The three representation equations on basis pairs, pair-major.
fn representation_equations(b: &Bimodule) -> Outcome {
    let a = &b.alg;
    scan2(a.dim(), |i, j| {
        compare(
            "(1) l(x)l(y) = r(y)r(x)",
            &[i, j],
            b.l[i].matmul(&b.l[j]),
            b.r[j].matmul(&b.r[i]),
        )?;
        compare(
            "(2) l(x)r(y) = l(yx)",
            &[i, j],
            b.l[i].matmul(&b.r[j]),
            b.l_of(a.product(j, i)),
        )?;
        compare(
            "(3) r(x)l(y) = r(xy)",
            &[i, j],
            b.r[i].matmul(&b.l[j]),
            b.r_of(a.product(i, j)),
        )
    })
}

/// Whether `(V, l, r)` is a representation of a nearly associative algebra.
pub fn is_representation(b: &Bimodule) -> Result<Outcome> {
    identity::check_identity(&b.alg, IdentityKind::NearlyAssociative)
        .map_err(Error::NotNearlyAssociative)?;
    Ok(representation_equations(b))
}

/// `A ⊕ V` with `(x+u)∗(y+v) = xy + l(x)v + r(y)u`. Basis order:
/// `e_1..e_n`, then the module basis.
pub fn semidirect_algebra(b: &Bimodule) -> Algebra {
    let n = b.alg.dim();
    let m = b.module_dim;
    let mut t = Tensor3::zeros(n + m);
    for (i, j, k, c) in b.alg.constants().support() {
        t.set(i, j, k, c.clone());
    }
    for i in 0..n {
        for p in 0..m {
            for q in 0..m {
                // e_i ∗ v_q = l(e_i)v_q
                t.set(i, n + q, n + p, b.l[i].get(p, q).clone());
                // v_q ∗ e_i = r(e_i)v_q
                t.set(n + q, i, n + p, b.r[i].get(p, q).clone());
            }
        }
    }
    Algebra::new(t)
}

/// `l*(x)(f) = f∘r(x)`, `r*(x)(f) = f∘l(x)` on `V*`.
pub fn dual_bimodule(b: &Bimodule) -> Bimodule {
    Bimodule {
        alg: b.alg.clone(),
        module_dim: b.module_dim,
        l: b.r.iter().map(Matrix::transpose).collect(),
        r: b.l.iter().map(Matrix::transpose).collect(),
    }
}

/// Whether the coadjoint pair `(R*, L*)` is a representation, decided three
/// ways (`L_{xy} = R_{yx}`, L-algebra, R-algebra) that must agree.
pub fn coadjoint_exists(a: &Algebra) -> Result<(bool, CheckReport)> {
    identity::check_identity(a, IdentityKind::NearlyAssociative)
        .map_err(Error::NotNearlyAssociative)?;
    let mut report = CheckReport::new();
    let lr = report.info(
        "L_(xy) = R_(yx)",
        scan2(a.dim(), |i, j| {
            let l = a.left_op(a.product(i, j)).expect("same dimension");
            let r = a.right_op(a.product(j, i)).expect("same dimension");
            compare("L_(xy) = R_(yx)", &[i, j], l, r)
        }),
    );
    let l = report.info("l-algebra", identity::check_identity(a, IdentityKind::LCommutative));
    let r = report.info("r-algebra", identity::check_identity(a, IdentityKind::RCommutative));
    if lr != l || l != r {
        return Err(Error::CrossCheck {
            name: "coadjoint existence".to_string(),
            detail: format!("L_(xy) = R_(yx): {lr}, L-algebra: {l}, R-algebra: {r}"),
        });
    }
    report.verdict_flag("three conditions agree", true);
    Ok((lr, report))
}

/// `Φ∘l₁(x) = l₂(x)∘Φ` and `Φ∘r₁(x) = r₂(x)∘Φ` for basis `x`; `phi` is
/// `m₂×m₁`.
pub fn is_bimodule_morphism(b1: &Bimodule, b2: &Bimodule, phi: &Matrix) -> Result<Outcome> {
    check_dim(b1.alg.dim(), b2.alg.dim())?;
    check_dim(b2.module_dim, phi.rows())?;
    check_dim(b1.module_dim, phi.cols())?;
    Ok(morphism_equations(b1, b2, phi))
}

pub(crate) fn morphism_equations(b1: &Bimodule, b2: &Bimodule, phi: &Matrix) -> Outcome {
    for i in 0..b1.alg.dim() {
        compare(
            "Φ l₁(x) = l₂(x) Φ",
            &[i],
            phi.matmul(&b1.l[i]),
            b2.l[i].matmul(phi),
        )?;
        compare(
            "Φ r₁(x) = r₂(x) Φ",
            &[i],
            phi.matmul(&b1.r[i]),
            b2.r[i].matmul(phi),
        )?;
    }
    Ok(())
}

/// For a quadratic algebra, `x ↦ B(x, −)` is a bimodule isomorphism from the
/// adjoint to the coadjoint bimodule.
pub fn adjoint_coadjoint_isomorphic(a: &Algebra, form: &BilinearForm) -> Result<bool> {
    let phi = quadratic::phi_from_form(a, form)?;
    let adj = Bimodule::adjoint(a);
    let coadj = dual_bimodule(&adj);
    let m = phi.column_map();
    Ok(m.inverse().is_some() && morphism_equations(&adj, &coadj, &m).is_ok())
}
