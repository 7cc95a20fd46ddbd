//! The double `D(A) = A ⊕ A*` of an algebra with a comultiplication, and
//! the two equivalent bialgebra tests.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::coalgebra::Comultiplication;
use crate::error::{check_dim, Error, Half, Result};
use crate::identity::{self, scan2, IdentityKind, Outcome};
use crate::linalg::Matrix;
use crate::quadratic::BilinearForm;
use crate::report::{compare, CheckReport};
use crate::tensor::{Tensor2, Tensor3};
use num_traits::Zero;

/// An algebra paired with a comultiplication on the same space; whether it
/// is a bialgebra is decided by the predicates below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraCandidate {
    alg: Algebra,
    delta: Comultiplication,
}

impl BialgebraCandidate {
    pub fn new(alg: Algebra, delta: Comultiplication) -> Result<Self> {
        check_dim(alg.dim(), delta.dim())?;
        Ok(BialgebraCandidate { alg, delta })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn delta(&self) -> &Comultiplication {
        &self.delta
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// `D(A)` with basis `e_1..e_n, e*_1..e*_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleAlgebra {
    inner: Algebra,
    half_dim: usize,
}

impl DoubleAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.inner
    }

    pub fn into_algebra(self) -> Algebra {
        self.inner
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }
}

/// `(x+f)⋄(y+g) = xy + L*_f(y) + R*_g(x) + f⋆g + L*_x(g) + R*_y(f)` with
/// `L*_f(y)(h) = ⟨y, h⋆f⟩`, `R*_g(x)(h) = ⟨x, g⋆h⟩`, `L*_x(g) = g∘R_x` and
/// `R*_y(f) = f∘L_y`.
pub fn build_double(bc: &BialgebraCandidate) -> DoubleAlgebra {
    let n = bc.dim();
    let c = bc.alg.constants();
    let d = bc.delta.tensor();
    let mut t = Tensor3::zeros(2 * n);
    for (i, j, k, v) in c.support() {
        // e_i⋄e_j
        t.add_at(i, j, k, v);
        // e_j⋄e*_k picks up c[i][j][k] on e*_i; e*_k⋄e_i does too.
        t.add_at(j, n + k, n + i, v);
        t.add_at(n + k, i, n + j, v);
    }
    for (i, j, k, v) in d.support() {
        // e*_j⋄e*_k
        t.add_at(n + j, n + k, n + i, v);
        // e_i⋄e*_j has d[i][j][k] on e_k; e*_k⋄e_i has d[i][j][k] on e_j.
        t.add_at(i, n + j, k, v);
        t.add_at(n + k, i, j, v);
    }
    DoubleAlgebra {
        inner: Algebra::new(t),
        half_dim: n,
    }
}

/// The blocks of `D(A)` on `A` and on `A*` reproduce the two halves.
pub fn halves_embed(bc: &BialgebraCandidate, double: &DoubleAlgebra) -> bool {
    let n = bc.dim();
    let dual = bc.delta.dual_algebra();
    let t = double.inner.constants();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                t.get(i, j, k) == bc.alg.constants().get(i, j, k)
                    && t.get(n + i, n + j, n + k) == dual.constants().get(i, j, k)
                    && t.get(i, j, n + k).is_zero()
                    && t.get(n + i, n + j, k).is_zero()
            })
        })
    })
}

/// `B(x+f, y+g) = ⟨f, y⟩ + ⟨g, x⟩`, Gram matrix `[[0, I], [I, 0]]`.
pub fn canonical_double_form(n: usize) -> BilinearForm {
    let mut g = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        g.set(i, n + i, crate::scalar::one());
        g.set(n + i, i, crate::scalar::one());
    }
    BilinearForm::new(g).expect("square by construction")
}

fn require_nal_halves(bc: &BialgebraCandidate) -> Result<()> {
    identity::check_identity(&bc.alg, IdentityKind::NAL).map_err(|witness| Error::HalvesNotNAL {
        half: Half::Algebra,
        witness,
    })?;
    identity::check_identity(&bc.delta.dual_algebra(), IdentityKind::NAL).map_err(|witness| {
        Error::HalvesNotNAL {
            half: Half::DualAlgebra,
            witness,
        }
    })
}

/// Bialgebra by definition: the double is nearly associative. The L, R and
/// LR verdicts on the double are computed as well and must agree.
pub fn is_nal_bialgebra_direct(bc: &BialgebraCandidate) -> Result<(bool, CheckReport)> {
    require_nal_halves(bc)?;
    let double = build_double(bc);
    let mut report = CheckReport::new();
    let d = double.algebra();
    let kinds = [
        IdentityKind::NearlyAssociative,
        IdentityKind::LCommutative,
        IdentityKind::RCommutative,
        IdentityKind::LR,
    ];
    let values: Vec<bool> = kinds
        .iter()
        .map(|&k| report.info(&format!("D(A) {}", k.name()), identity::check_identity(d, k)))
        .collect();
    if values.iter().any(|&v| v != values[0]) {
        return Err(Error::CrossCheck {
            name: "NA ⟺ L ⟺ R ⟺ LR on the double".to_string(),
            detail: format!("NA {}, L {}, R {}, LR {}", values[0], values[1], values[2], values[3]),
        });
    }
    report.verdict_flag("D(A) nearly associative", values[0]);
    Ok((values[0], report))
}

fn tau(t: Tensor2) -> Tensor2 {
    t.twist()
}

/// Bialgebra via the coproduct conditions on all basis pairs `(x, y)`:
///
/// `Δ(xy) = (I⊗R_y)Δ(x) + τ(I⊗R_x)Δ(y) = τ(L_y⊗I)Δ(x) + (L_x⊗I)Δ(y)` and
/// `(R_y⊗I)Δ(x) + (I⊗L_x)Δ(y) = (I⊗L_y)Δ(x) + (R_x⊗I)Δ(y)
///  = τ(I⊗L_y)Δ(x) + τ(R_x⊗I)Δ(y)`.
pub fn is_nal_bialgebra_coproduct(bc: &BialgebraCandidate) -> Result<(bool, CheckReport)> {
    require_nal_halves(bc)?;
    let a = &bc.alg;
    let n = a.dim();
    let id = Matrix::identity(n);
    let deltas: Vec<Tensor2> = (0..n).map(|i| bc.delta.delta(i)).collect();
    let chain1 = |second: bool| -> Outcome {
        scan2(n, |i, j| {
            let (dx, dy) = (&deltas[i], &deltas[j]);
            let (li, lj, ri, rj) = (a.left(i), a.left(j), a.right(i), a.right(j));
            let lhs = bc.delta.apply_delta(a.product(i, j)).expect("same dimension");
            let mid = &dx.apply(&id, rj) + &tau(dy.apply(&id, ri));
            if !second {
                compare("Δ(xy) = (I⊗R_y)Δ(x) + τ(I⊗R_x)Δ(y)", &[i, j], lhs, mid)
            } else {
                let rhs = &tau(dx.apply(lj, &id)) + &dy.apply(li, &id);
                compare(
                    "(I⊗R_y)Δ(x) + τ(I⊗R_x)Δ(y) = τ(L_y⊗I)Δ(x) + (L_x⊗I)Δ(y)",
                    &[i, j],
                    mid,
                    rhs,
                )
            }
        })
    };
    let chain2 = |second: bool| -> Outcome {
        scan2(n, |i, j| {
            let (dx, dy) = (&deltas[i], &deltas[j]);
            let (li, lj, ri, rj) = (a.left(i), a.left(j), a.right(i), a.right(j));
            let mid = &dx.apply(&id, lj) + &dy.apply(ri, &id);
            if !second {
                let lhs = &dx.apply(rj, &id) + &dy.apply(&id, li);
                compare(
                    "(R_y⊗I)Δ(x) + (I⊗L_x)Δ(y) = (I⊗L_y)Δ(x) + (R_x⊗I)Δ(y)",
                    &[i, j],
                    lhs,
                    mid,
                )
            } else {
                let rhs = tau(mid.clone());
                compare(
                    "(I⊗L_y)Δ(x) + (R_x⊗I)Δ(y) = τ(I⊗L_y)Δ(x) + τ(R_x⊗I)Δ(y)",
                    &[i, j],
                    mid,
                    rhs,
                )
            }
        })
    };
    let mut report = CheckReport::new();
    let mut all = true;
    all &= report.verdict("chain 1, first equality", chain1(false));
    all &= report.verdict("chain 1, second equality", chain1(true));
    all &= report.verdict("chain 2, first equality", chain2(false));
    all &= report.verdict("chain 2, second equality", chain2(true));
    Ok((all, report))
}

/// Both routes, which must agree.
pub fn is_nal_bialgebra(bc: &BialgebraCandidate) -> Result<(bool, CheckReport)> {
    let (direct, direct_report) = is_nal_bialgebra_direct(bc)?;
    let (coproduct, coproduct_report) = is_nal_bialgebra_coproduct(bc)?;
    if direct != coproduct {
        return Err(Error::CrossCheck {
            name: "double vs coproduct conditions".to_string(),
            detail: format!("double nearly associative: {direct}, coproduct conditions: {coproduct}"),
        });
    }
    let mut report = CheckReport::new();
    report.extend_prefixed("double", direct_report);
    report.extend_prefixed("coproduct", coproduct_report);
    Ok((direct, report))
}
