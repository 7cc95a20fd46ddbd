//! Comultiplications `Δ: A → A⊗A` and their coassociativity variants.
//!
//! `d[i][j][k]` is the coefficient of `e_j⊗e_k` in `Δ(e_i)`. Pairings are
//! leg-wise: `⟨f⊗g, x⊗y⟩ = f(x)g(y)`.

use alloc::format;
use alloc::string::ToString;

use crate::algebra::Algebra;
use crate::error::{check_dim, Error, Result};
use crate::identity::{self, IdentityKind, Outcome};
use crate::linalg::Vector;
use crate::report::{compare, CheckReport};
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor2, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    tensor: Tensor3,
}

impl Comultiplication {
    pub fn new(tensor: Tensor3) -> Self {
        Comultiplication { tensor }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Tensor3::zeros(dim))
    }

    /// 1-based `(i, j, k, c)`: `Δ(e_i) ∋ c e_j⊗e_k`.
    pub fn from_table(dim: usize, table: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Tensor3::zeros(dim);
        for &(i, j, k, c) in table {
            t.add_at(i - 1, j - 1, k - 1, &scalar::int(c));
        }
        Self::new(t)
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    /// `Δ(e_i)`.
    pub fn delta(&self, i: usize) -> Tensor2 {
        let n = self.dim();
        let mut t = Tensor2::zeros(n);
        for j in 0..n {
            for k in 0..n {
                t.set(j, k, self.tensor.get(i, j, k).clone());
            }
        }
        t
    }

    pub fn apply_delta(&self, x: &Vector) -> Result<Tensor2> {
        check_dim(self.dim(), x.dim())?;
        let mut t = Tensor2::zeros(self.dim());
        for (i, xi) in x.support() {
            t = &t + &self.delta(i).scale(xi);
        }
        Ok(t)
    }

    /// `(Δ⊗I)(t)`: `out[p][q][k] = Σ_j t[j][k] d[j][p][q]`.
    pub fn on_first_leg(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for (j, k, x) in t.support() {
            for (_, p, q, y) in self.tensor.support().filter(|e| e.0 == j) {
                out.add_at(p, q, k, &(x * y));
            }
        }
        out
    }

    /// `(I⊗Δ)(t)`: `out[j][p][q] = Σ_k t[j][k] d[k][p][q]`.
    pub fn on_second_leg(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for (j, k, x) in t.support() {
            for (_, p, q, y) in self.tensor.support().filter(|e| e.0 == k) {
                out.add_at(j, p, q, &(x * y));
            }
        }
        out
    }

    /// `(Δ⊗I)Δ(e_i)`.
    pub fn left_composite(&self, i: usize) -> Tensor3 {
        self.on_first_leg(&self.delta(i))
    }

    /// `(I⊗Δ)Δ(e_i)`.
    pub fn right_composite(&self, i: usize) -> Tensor3 {
        self.on_second_leg(&self.delta(i))
    }

    /// Algebra on `A*` with `e*_j ⋆ e*_k = Σ_i d[i][j][k] e*_i`.
    pub fn dual_algebra(&self) -> Algebra {
        Algebra::from_entries(
            self.dim(),
            self.tensor.support().map(|(i, j, k, c)| (j, k, i, c.clone())),
        )
    }

    /// Coalgebra on `A*` with `⟨Δ(f), x⊗y⟩ = ⟨f, xy⟩`.
    pub fn dual_of_algebra(a: &Algebra) -> Comultiplication {
        let mut t = Tensor3::zeros(a.dim());
        for (i, j, k, c) in a.constants().support() {
            t.set(k, i, j, c.clone());
        }
        Comultiplication::new(t)
    }

    pub fn scale(&self, s: &Scalar) -> Comultiplication {
        Comultiplication::new(self.tensor.scale(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoalgebraKind {
    NearlyCoassociative,
    LCoalgebra,
    RCoalgebra,
    LRCoalgebra,
    NALCoalgebra,
}

impl CoalgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            CoalgebraKind::NearlyCoassociative => "nearly-coassociative",
            CoalgebraKind::LCoalgebra => "l-coalgebra",
            CoalgebraKind::RCoalgebra => "r-coalgebra",
            CoalgebraKind::LRCoalgebra => "lr-coalgebra",
            CoalgebraKind::NALCoalgebra => "nal-coalgebra",
        }
    }
}

/// `ξ(Δ⊗I)Δ = (I⊗Δ)Δ` at `e_i`, the transpose of `m(m⊗I) = m(I⊗m)ξ`.
fn nearly_coassociative_at(c: &Comultiplication, i: usize) -> Outcome {
    compare(
        "ξ(Δ⊗I)Δ = (I⊗Δ)Δ",
        &[i],
        c.left_composite(i).cycle(),
        c.right_composite(i),
    )
}

/// `(I⊗Δ)Δ = (τ⊗I)(I⊗Δ)Δ` at `e_i`.
fn l_coalgebra_at(c: &Comultiplication, i: usize) -> Outcome {
    let r = c.right_composite(i);
    let t = r.twist12();
    compare("(I⊗Δ)Δ = (τ⊗I)(I⊗Δ)Δ", &[i], r, t)
}

/// `(Δ⊗I)Δ = (I⊗τ)(Δ⊗I)Δ` at `e_i`.
fn r_coalgebra_at(c: &Comultiplication, i: usize) -> Outcome {
    let l = c.left_composite(i);
    let t = l.twist23();
    compare("(Δ⊗I)Δ = (I⊗τ)(Δ⊗I)Δ", &[i], l, t)
}

/// Checks `kind` on every basis element; the witness carries both sides.
pub fn check_coalgebra(c: &Comultiplication, kind: CoalgebraKind) -> Outcome {
    let checks: &[fn(&Comultiplication, usize) -> Outcome] = match kind {
        CoalgebraKind::NearlyCoassociative => &[nearly_coassociative_at],
        CoalgebraKind::LCoalgebra => &[l_coalgebra_at],
        CoalgebraKind::RCoalgebra => &[r_coalgebra_at],
        CoalgebraKind::LRCoalgebra => &[l_coalgebra_at, r_coalgebra_at],
        CoalgebraKind::NALCoalgebra => &[nearly_coassociative_at, l_coalgebra_at],
    };
    for i in 0..c.dim() {
        for check in checks {
            check(c, i)?;
        }
    }
    Ok(())
}

/// `(Δ⊗I)Δ = ξ(I⊗Δ)Δ` with `ξ` applied on the right-hand side.
/// Not equivalent to near-associativity of the dual algebra; kept for
/// comparison in reports.
pub fn nearly_coassociative_cycled_right(c: &Comultiplication) -> Outcome {
    for i in 0..c.dim() {
        compare(
            "(Δ⊗I)Δ = ξ(I⊗Δ)Δ",
            &[i],
            c.left_composite(i),
            c.right_composite(i).cycle(),
        )?;
    }
    Ok(())
}

/// Evaluates each coalgebra predicate directly and the matching algebra
/// predicate on the dual algebra, and requires them to agree.
pub fn duality_dictionary(c: &Comultiplication) -> Result<CheckReport> {
    let dual = c.dual_algebra();
    let mut report = CheckReport::new();
    let pairs = [
        (CoalgebraKind::NearlyCoassociative, IdentityKind::NearlyAssociative),
        (CoalgebraKind::LCoalgebra, IdentityKind::LCommutative),
        (CoalgebraKind::RCoalgebra, IdentityKind::RCommutative),
    ];
    for (ck, ak) in pairs {
        let direct = report.info(ck.name(), check_coalgebra(c, ck));
        let via_dual = report.info(
            &format!("dual algebra {}", ak.name()),
            identity::check_identity(&dual, ak),
        );
        if direct != via_dual {
            return Err(Error::CrossCheck {
                name: format!("{} duality", ck.name()),
                detail: format!("coalgebra side {direct}, dual algebra side {via_dual}"),
            });
        }
        report.verdict_flag(&format!("{} ⟺ dual {}", ck.name(), ak.name()), true);
    }
    report.info("(Δ⊗I)Δ = ξ(I⊗Δ)Δ", nearly_coassociative_cycled_right(c));
    Ok(report)
}

/// For a nearly coassociative coalgebra, L- and R-coalgebra coincide.
pub fn l_iff_r_for_nearly_coassociative(c: &Comultiplication) -> Result<bool> {
    if check_coalgebra(c, CoalgebraKind::NearlyCoassociative).is_err() {
        return Ok(true);
    }
    let l = check_coalgebra(c, CoalgebraKind::LCoalgebra).is_ok();
    let r = check_coalgebra(c, CoalgebraKind::RCoalgebra).is_ok();
    if l != r {
        return Err(Error::CrossCheck {
            name: "L-coalgebra ⟺ R-coalgebra".to_string(),
            detail: format!("L {l}, R {r}"),
        });
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use alloc::string::ToString;

    #[test]
    fn apply_examples() {
        let co4 = fixtures::co4();
        assert_eq!(co4.delta(0).to_string(), "2e4⊗e4");
        let co6 = fixtures::co6();
        assert_eq!(co6.delta(0).to_string(), "e6⊗e6");
        assert!((1..6).all(|i| co6.delta(i).is_zero()));
        let x = Vector::from_ints(&[1, 1, 0, 0]);
        assert_eq!(
            co4.apply_delta(&x).unwrap().to_string(),
            "-e3⊗e4 + e4⊗e3 + 4e4⊗e4"
        );
        assert!(Comultiplication::zero(2).apply_delta(&Vector::from_ints(&[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn fixture_coalgebras() {
        for c in [fixtures::co4(), fixtures::co6()] {
            assert!(check_coalgebra(&c, CoalgebraKind::NALCoalgebra).is_ok());
            assert!(check_coalgebra(&c, CoalgebraKind::LRCoalgebra).is_ok());
            assert!(nearly_coassociative_cycled_right(&c).is_ok());
        }
    }

    #[test]
    fn dual_algebras() {
        let d = fixtures::co4().dual_algebra();
        assert_eq!(d.product(3, 3).to_string(), "2e1 + 2e2");
        assert_eq!(d.product(3, 2).to_string(), "e2");
        assert_eq!(d.product(2, 3).to_string(), "-e2");
        let nonzero = (0..4).flat_map(|i| (0..4).map(move |j| (i, j)));
        assert_eq!(nonzero.filter(|&(i, j)| !d.product(i, j).is_zero()).count(), 3);
        let d6 = fixtures::co6().dual_algebra();
        assert_eq!(d6.product(5, 5).to_string(), "e1");
        let dual = Comultiplication::dual_of_algebra(&fixtures::nal4());
        assert_eq!(dual.delta(3).to_string(), "e1⊗e1 + e1⊗e2 + e2⊗e1 + e2⊗e2");
        let na6 = fixtures::na6();
        assert_eq!(Comultiplication::dual_of_algebra(&na6).dual_algebra(), na6);
    }

    #[test]
    fn dictionary() {
        let r = duality_dictionary(&fixtures::co4()).unwrap();
        assert!(r.entries().iter().all(|e| e.holds));
        assert!(duality_dictionary(&Comultiplication::zero(3)).unwrap().entries().iter().all(|e| e.holds));
    }
}
