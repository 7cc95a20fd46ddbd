//! Polynomial identities checked on basis tuples, with witnesses.
//!
//! Every identity here except Jordan's is multilinear, so checking it on
//! basis triples decides it over the rationals. The Jordan identity is
//! replaced by its linearization, which is equivalent in characteristic 0.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{compare, CheckReport, Witness};
use crate::scalar;
use crate::tensor::Tensor3;

pub type Outcome = core::result::Result<(), Witness>;

/// A single trilinear equation `lhs(x,y,z) = rhs(x,y,z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `(xy)z = y(zx)`
    NearlyAssociative,
    /// `(xy)z = x(yz)`
    Associative,
    /// `x(yz) = y(xz)`
    LCommutative,
    /// `(xy)z = (xz)y`
    RCommutative,
    /// `Asso(x,y,z) = −Asso(z,y,x)`
    Flexible,
    /// `(xy)z = z(yx)`
    QuasiCommutative,
}

impl Equation {
    pub fn name(self) -> &'static str {
        match self {
            Equation::NearlyAssociative => "(xy)z = y(zx)",
            Equation::Associative => "(xy)z = x(yz)",
            Equation::LCommutative => "x(yz) = y(xz)",
            Equation::RCommutative => "(xy)z = (xz)y",
            Equation::Flexible => "Asso(x,y,z) = -Asso(z,y,x)",
            Equation::QuasiCommutative => "(xy)z = z(yx)",
        }
    }

    /// Both sides at arbitrary elements.
    pub fn sides(self, a: &Algebra, x: &Vector, y: &Vector, z: &Vector) -> (Vector, Vector) {
        let m = |p: &Vector, q: &Vector| a.m(p, q);
        match self {
            Equation::NearlyAssociative => (m(&m(x, y), z), m(y, &m(z, x))),
            Equation::Associative => (m(&m(x, y), z), m(x, &m(y, z))),
            Equation::LCommutative => (m(x, &m(y, z)), m(y, &m(x, z))),
            Equation::RCommutative => (m(&m(x, y), z), m(&m(x, z), y)),
            Equation::Flexible => {
                let lhs = &m(&m(x, y), z) - &m(x, &m(y, z));
                let rhs = &m(z, &m(y, x)) - &m(&m(z, y), x);
                (lhs, rhs)
            }
            Equation::QuasiCommutative => (m(&m(x, y), z), m(z, &m(y, x))),
        }
    }

    /// Both sides at `(e_i, e_j, e_k)`, using the cached multiplication tables.
    pub fn basis_sides(self, a: &Algebra, i: usize, j: usize, k: usize) -> (Vector, Vector) {
        // (e_p e_q) e_s and e_p (e_q e_s)
        let lft = |p: usize, q: usize, s: usize| a.right(s).mul_vec(a.product(p, q));
        let rgt = |p: usize, q: usize, s: usize| a.left(p).mul_vec(a.product(q, s));
        match self {
            Equation::NearlyAssociative => (lft(i, j, k), rgt(j, k, i)),
            Equation::Associative => (lft(i, j, k), rgt(i, j, k)),
            Equation::LCommutative => (rgt(i, j, k), rgt(j, i, k)),
            Equation::RCommutative => (lft(i, j, k), lft(i, k, j)),
            Equation::Flexible => (
                &lft(i, j, k) - &rgt(i, j, k),
                &rgt(k, j, i) - &lft(k, j, i),
            ),
            Equation::QuasiCommutative => (lft(i, j, k), rgt(k, j, i)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    NearlyAssociative,
    Associative,
    LCommutative,
    RCommutative,
    LR,
    Flexible,
    QuasiCommutative,
    NAL,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::NearlyAssociative,
        IdentityKind::Associative,
        IdentityKind::LCommutative,
        IdentityKind::RCommutative,
        IdentityKind::LR,
        IdentityKind::Flexible,
        IdentityKind::QuasiCommutative,
        IdentityKind::NAL,
    ];

    /// Kebab-case name, also used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::NearlyAssociative => "nearly-associative",
            IdentityKind::Associative => "associative",
            IdentityKind::LCommutative => "l-algebra",
            IdentityKind::RCommutative => "r-algebra",
            IdentityKind::LR => "lr-algebra",
            IdentityKind::Flexible => "flexible",
            IdentityKind::QuasiCommutative => "quasi-commutative",
            IdentityKind::NAL => "nal",
        }
    }

    pub fn from_name(name: &str) -> Option<IdentityKind> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The equations whose conjunction defines this kind.
    pub fn equations(self) -> &'static [Equation] {
        match self {
            IdentityKind::NearlyAssociative => &[Equation::NearlyAssociative],
            IdentityKind::Associative => &[Equation::Associative],
            IdentityKind::LCommutative => &[Equation::LCommutative],
            IdentityKind::RCommutative => &[Equation::RCommutative],
            IdentityKind::LR => &[Equation::LCommutative, Equation::RCommutative],
            IdentityKind::Flexible => &[Equation::Flexible],
            IdentityKind::QuasiCommutative => &[Equation::QuasiCommutative],
            IdentityKind::NAL => &[Equation::NearlyAssociative, Equation::LCommutative],
        }
    }
}

pub(crate) fn scan2(n: usize, mut f: impl FnMut(usize, usize) -> Outcome) -> Outcome {
    for i in 0..n {
        for j in 0..n {
            f(i, j)?;
        }
    }
    Ok(())
}

pub(crate) fn scan3(n: usize, mut f: impl FnMut(usize, usize, usize) -> Outcome) -> Outcome {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                f(i, j, k)?;
            }
        }
    }
    Ok(())
}

/// Witness for an equation failing at a given basis triple, `None` if it
/// holds there.
pub fn evaluate_identity(a: &Algebra, eq: Equation, triple: (usize, usize, usize)) -> Option<Witness> {
    let (i, j, k) = triple;
    let (lhs, rhs) = eq.basis_sides(a, i, j, k);
    compare(eq.name(), &[i, j, k], lhs, rhs).err()
}

/// Checks `kind` on all basis triples. On failure the witness is the
/// lexicographically first failing triple; for conjunctions the equations
/// are tried in order at each triple.
pub fn check_identity(a: &Algebra, kind: IdentityKind) -> Outcome {
    scan3(a.dim(), |i, j, k| {
        for &eq in kind.equations() {
            if let Some(w) = evaluate_identity(a, eq, (i, j, k)) {
                return Err(w);
            }
        }
        Ok(())
    })
}

pub fn holds(a: &Algebra, kind: IdentityKind) -> bool {
    check_identity(a, kind).is_ok()
}

fn operator_chain(a: &Algebra, name: &str, chain: impl Fn(usize, usize) -> Vec<Matrix>) -> Outcome {
    scan2(a.dim(), |i, j| {
        let mats = chain(i, j);
        for w in mats.windows(2) {
            compare(name, &[i, j], w[0].clone(), w[1].clone())?;
        }
        Ok(())
    })
}

/// Operator forms of the defining identities on basis pairs `(x, y)`.
/// Entries implied by the algebra's class are verdicts, the rest are
/// informational.
pub fn check_operator_identities(a: &Algebra) -> CheckReport {
    let l = |i: usize| a.left(i);
    let r = |i: usize| a.right(i);
    let l_of = |v: &Vector| a.left_op(v).expect("dimension checked");
    let r_of = |v: &Vector| a.right_op(v).expect("dimension checked");
    let na = holds(a, IdentityKind::NearlyAssociative);
    let nal = na && holds(a, IdentityKind::LCommutative);
    let mut report = CheckReport::new();
    let record = |report: &mut CheckReport, required: bool, name: &str, outcome: Outcome| {
        if required {
            report.verdict(name, outcome);
        } else {
            report.info(name, outcome);
        }
    };

    let name = "L_x L_y = R_y R_x";
    let o = operator_chain(a, name, |i, j| {
        alloc::vec![l(i).matmul(l(j)), r(j).matmul(r(i))]
    });
    record(&mut report, na, name, o);
    let name = "L_x R_y = L_(yx)";
    let o = operator_chain(a, name, |i, j| {
        alloc::vec![l(i).matmul(r(j)), l_of(a.product(j, i))]
    });
    record(&mut report, na, name, o);
    let name = "R_x L_y = R_(xy)";
    let o = operator_chain(a, name, |i, j| {
        alloc::vec![r(i).matmul(l(j)), r_of(a.product(i, j))]
    });
    record(&mut report, na, name, o);
    let name = "L_x L_y = L_y L_x = R_x R_y = R_y R_x";
    let o = operator_chain(a, name, |i, j| {
        alloc::vec![
            l(i).matmul(l(j)),
            l(j).matmul(l(i)),
            r(i).matmul(r(j)),
            r(j).matmul(r(i)),
        ]
    });
    record(&mut report, nal, name, o);
    let name = "L_y R_x = L_(xy) = R_(yx) = R_y L_x";
    let o = operator_chain(a, name, |i, j| {
        alloc::vec![
            l(j).matmul(r(i)),
            l_of(a.product(i, j)),
            r_of(a.product(j, i)),
            r(j).matmul(l(i)),
        ]
    });
    record(&mut report, nal, name, o);
    report
}

/// Anticommutativity and the Jacobi identity for `A⁻`.
pub fn lie_admissible(a: &Algebra) -> Outcome {
    is_lie(&a.minus_algebra())
}

/// Anticommutativity and `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`.
pub fn is_lie(g: &Algebra) -> Outcome {
    let n = g.dim();
    scan2(n, |i, j| {
        compare("[x,y] = -[y,x]", &[i, j], g.product(i, j).clone(), -g.product(j, i))
    })?;
    scan3(n, |i, j, k| {
        let nested = |p: usize, q: usize, s: usize| g.right(s).mul_vec(g.product(p, q));
        let sum = &(&nested(i, j, k) + &nested(j, k, i)) + &nested(k, i, j);
        compare("Jacobi identity", &[i, j, k], sum, Vector::zeros(n))
    })
}

pub fn is_lie_admissible(a: &Algebra) -> bool {
    lie_admissible(a).is_ok()
}

/// `(x•y)•(x•x) − x•(y•(x•x))` at arbitrary elements of a commutative algebra.
pub fn jordan_defect(p: &Algebra, x: &Vector, y: &Vector) -> Vector {
    let xx = p.m(x, x);
    &p.m(&p.m(x, y), &xx) - &p.m(x, &p.m(y, &xx))
}

/// Linearization of the Jordan defect in `x`: the sum over the three ways
/// of singling out one of `x₁, x₂, x₃` of
/// `(x_a•y)•(x_b•x_c) − x_a•(y•(x_b•x_c))`. At `x₁ = x₂ = x₃ = x` it equals
/// three times [`jordan_defect`].
pub fn jordan_linearized(p: &Algebra, xs: [&Vector; 3], y: &Vector) -> Vector {
    let mut out = Vector::zeros(p.dim());
    for a in 0..3 {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        let bc = p.m(xs[b], xs[c]);
        let term = &p.m(&p.m(xs[a], y), &bc) - &p.m(xs[a], &p.m(y, &bc));
        out = &out + &term;
    }
    out
}

/// Commutativity and the linearized Jordan identity for `A⁺`.
pub fn jordan_admissible(a: &Algebra) -> Outcome {
    is_jordan(&a.plus_algebra())
}

pub fn is_jordan(p: &Algebra) -> Outcome {
    let n = p.dim();
    scan2(n, |i, j| {
        compare("x•y = y•x", &[i, j], p.product(i, j).clone(), p.product(j, i).clone())
    })?;
    // Symmetric in the three x-slots, so i ≤ j ≤ k suffices.
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for l in 0..n {
                    let e = |t: usize| Vector::basis(n, t);
                    let (ei, ej, ek, el) = (e(i), e(j), e(k), e(l));
                    let v = jordan_linearized(p, [&ei, &ej, &ek], &el);
                    compare("linearized Jordan identity", &[i, j, k, l], v, Vector::zeros(n))?;
                }
            }
        }
    }
    Ok(())
}

pub fn is_jordan_admissible(a: &Algebra) -> bool {
    jordan_admissible(a).is_ok()
}

/// How to read the compatibility `[x, y•z] = [x,y]•z + y•[x,?]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PoissonReading {
    /// Last bracket is `[x,z]`: the Leibniz rule.
    Leibniz,
    /// Last bracket is `[x,y]` verbatim. Not multilinear in `y`; it holds
    /// identically iff both of its homogeneous parts vanish:
    /// `[x, y•z] = [x,y]•z` and `y•[x,w] + w•[x,y] = 0`.
    Literal,
}

/// Lie- and Jordan-admissibility plus the chosen compatibility rule.
pub fn lie_poisson_jordan(a: &Algebra, reading: PoissonReading) -> Outcome {
    lie_admissible(a)?;
    jordan_admissible(a)?;
    let minus = a.minus_algebra();
    let plus = a.plus_algebra();
    let n = a.dim();
    let br = |x: &Vector, y: &Vector| minus.m(x, y);
    let dot = |x: &Vector, y: &Vector| plus.m(x, y);
    let e = |t: usize| Vector::basis(n, t);
    match reading {
        PoissonReading::Leibniz => scan3(n, |i, j, k| {
            let (x, y, z) = (e(i), e(j), e(k));
            let lhs = br(&x, &dot(&y, &z));
            let rhs = &dot(&br(&x, &y), &z) + &dot(&y, &br(&x, &z));
            compare("[x,y•z] = [x,y]•z + y•[x,z]", &[i, j, k], lhs, rhs)
        }),
        PoissonReading::Literal => {
            scan3(n, |i, j, k| {
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = br(&x, &dot(&y, &z));
                let rhs = dot(&br(&x, &y), &z);
                compare("[x,y•z] = [x,y]•z", &[i, j, k], lhs, rhs)
            })?;
            scan3(n, |i, j, k| {
                let (x, y, w) = (e(i), e(j), e(k));
                let lhs = &dot(&y, &br(&x, &w)) + &dot(&w, &br(&x, &y));
                compare("y•[x,w] + w•[x,y] = 0", &[i, j, k], lhs, Vector::zeros(n))
            })
        }
    }
}

pub fn is_lie_poisson_jordan(a: &Algebra, reading: PoissonReading) -> bool {
    lie_poisson_jordan(a, reading).is_ok()
}

/// Checks `f(e_i, e_j, e_k) = 0` on all basis triples.
fn vanishes3(n: usize, name: &str, f: impl Fn(usize, usize, usize) -> (Vector, Vector)) -> Outcome {
    scan3(n, |i, j, k| {
        let (lhs, rhs) = f(i, j, k);
        compare(name, &[i, j, k], lhs, rhs)
    })
}

/// Helper bundle for formulas mixing `·`, `[,]` and `•`.
struct Ops<'a> {
    a: &'a Algebra,
    minus: Algebra,
    plus: Algebra,
}

impl<'a> Ops<'a> {
    fn new(a: &'a Algebra) -> Self {
        Ops {
            a,
            minus: a.minus_algebra(),
            plus: a.plus_algebra(),
        }
    }
    fn e(&self, i: usize) -> Vector {
        self.a.basis_vector(i)
    }
    fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.a.m(x, y)
    }
    fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.minus.m(x, y)
    }
    fn dot(&self, x: &Vector, y: &Vector) -> Vector {
        self.plus.m(x, y)
    }
    fn asso(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
    }
    fn asso_plus(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        &self.dot(&self.dot(x, y), z) - &self.dot(x, &self.dot(y, z))
    }
    fn n(&self) -> usize {
        self.a.dim()
    }

    /// `Asso⁺(x,y,z) = [y,[z,x]]`
    fn asso_plus_nested(&self) -> Outcome {
        vanishes3(self.n(), "Asso⁺(x,y,z) = [y,[z,x]]", |i, j, k| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            (self.asso_plus(&x, &y, &z), self.br(&y, &self.br(&z, &x)))
        })
    }

    /// `[x,y]•z + [x•y,z] + [x,z]•y + [x•z,y] = 0`
    fn mixed_vanishing(&self) -> Outcome {
        vanishes3(self.n(), "[x,y]•z + [x•y,z] + [x,z]•y + [x•z,y] = 0", |i, j, k| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            let s = &(&self.dot(&self.br(&x, &y), &z) + &self.br(&self.dot(&x, &y), &z))
                + &(&self.dot(&self.br(&x, &z), &y) + &self.br(&self.dot(&x, &z), &y));
            (s, Vector::zeros(self.n()))
        })
    }

    /// `Asso⁺(x,y,z) = [y, zx]`
    fn asso_plus_bracket(&self) -> Outcome {
        vanishes3(self.n(), "Asso⁺(x,y,z) = [y,zx]", |i, j, k| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            (self.asso_plus(&x, &y, &z), self.br(&y, &self.mul(&z, &x)))
        })
    }

    /// `A•A ⊆ Z(A⁻)`, via subspaces, with a triple witness on failure.
    fn plus_square_central(&self) -> (Outcome, Subspace) {
        let s = self.plus.square();
        let center = self.minus.lie_center().expect("A⁻ is anticommutative");
        let outcome = if s.is_subspace_of(&center) {
            Ok(())
        } else {
            let w = vanishes3(self.n(), "[x•y, z] = 0", |i, j, k| {
                let (x, y, z) = (self.e(i), self.e(j), self.e(k));
                (self.br(&self.dot(&x, &y), &z), Vector::zeros(self.n()))
            });
            Err(w.expect_err("a product outside the center has a nonzero bracket"))
        };
        (outcome, s)
    }

    /// `[A,A] ⊆ ann(A⁺)`, via subspaces, with a triple witness on failure.
    fn commutators_annihilate(&self) -> (Outcome, Subspace) {
        let d = self.minus.square();
        let ann = self.plus.annihilator();
        let outcome = if d.is_subspace_of(&ann) {
            Ok(())
        } else {
            let w = vanishes3(self.n(), "[x,y]•z = 0", |i, j, k| {
                let (x, y, z) = (self.e(i), self.e(j), self.e(k));
                (self.dot(&self.br(&x, &y), &z), Vector::zeros(self.n()))
            });
            Err(w.expect_err("a commutator outside ann(A⁺) acts nontrivially"))
        };
        (outcome, d)
    }
}

fn require_na(a: &Algebra) -> Result<()> {
    check_identity(a, IdentityKind::NearlyAssociative).map_err(Error::NotNearlyAssociative)
}

fn require_nal(a: &Algebra) -> Result<()> {
    check_identity(a, IdentityKind::NAL).map_err(Error::NotNAL)
}

/// Consequences of near-associativity: the associator formula, the
/// three-condition characterization, and flexibility ⟺ `A•A ⊆ Z(A⁻)`.
pub fn check_na_consequences(a: &Algebra) -> Result<CheckReport> {
    require_na(a)?;
    let ops = Ops::new(a);
    let mut report = CheckReport::new();
    let two = scalar::int(2);
    report.verdict(
        "Asso(x,y,z) = 2[y,zx]",
        vanishes3(a.dim(), "Asso(x,y,z) = 2[y,zx]", |i, j, k| {
            let (x, y, z) = (ops.e(i), ops.e(j), ops.e(k));
            (ops.asso(&x, &y, &z), ops.br(&y, &ops.mul(&z, &x)).scale(&two))
        }),
    );
    report.verdict("A⁻ is a Lie algebra", lie_admissible(a));
    report.verdict("Asso⁺(x,y,z) = [y,[z,x]]", ops.asso_plus_nested());
    report.verdict(
        "[x,y]•z + [x•y,z] + [x,z]•y + [x•z,y] = 0",
        ops.mixed_vanishing(),
    );
    report.verdict_flag("A⁻ is solvable", ops.minus.is_solvable());
    report.verdict("A⁺ is a Jordan algebra", jordan_admissible(a));
    let flexible = report.info("flexible", check_identity(a, IdentityKind::Flexible));
    let (central, s) = ops.plus_square_central();
    let central = report.info("A•A ⊆ Z(A⁻)", central);
    report.annotate(format!("A•A = {s}"));
    report.verdict_flag("flexible ⟺ A•A ⊆ Z(A⁻)", flexible == central);
    Ok(report)
}

/// Structure of a nearly associative L-algebra: the inclusions and
/// associator identities, nilpotency of `A⁻`, and the equivalence of
/// associativity, commutative-associativity of `A⁺`, and 2-nilpotency of
/// `A⁻`.
pub fn check_nal_structure(a: &Algebra) -> Result<CheckReport> {
    require_nal(a)?;
    let ops = Ops::new(a);
    let n = a.dim();
    let mut report = CheckReport::new();
    report.verdict("flexible", check_identity(a, IdentityKind::Flexible));
    report.verdict("quasi-commutative", check_identity(a, IdentityKind::QuasiCommutative));
    let (central, s) = ops.plus_square_central();
    report.verdict("A•A ⊆ Z(A⁻)", central);
    report.annotate(format!("A•A = {s}"));
    let (ann, d) = ops.commutators_annihilate();
    report.verdict("[A,A] ⊆ ann(A⁺)", ann);
    report.annotate(format!("[A,A] = {d}"));
    let half = scalar::half();
    report.verdict(
        "Asso⁺(x,y,z) = ½Asso(x,y,z)",
        vanishes3(n, "Asso⁺(x,y,z) = ½Asso(x,y,z)", |i, j, k| {
            let (x, y, z) = (ops.e(i), ops.e(j), ops.e(k));
            (ops.asso_plus(&x, &y, &z), ops.asso(&x, &y, &z).scale(&half))
        }),
    );
    report.verdict("Asso⁺(x,y,z) = [y,zx]", ops.asso_plus_bracket());
    report.verdict("(A•A, •) is an associative subalgebra", plus_square_subalgebra(&ops, &s));
    report.verdict(
        "Lie-Poisson-Jordan (Leibniz reading)",
        lie_poisson_jordan(a, PoissonReading::Leibniz),
    );
    report.verdict(
        "Lie-Poisson-Jordan (literal reading)",
        lie_poisson_jordan(a, PoissonReading::Literal),
    );
    report.verdict_flag("A⁻ is 3-nilpotent", ops.minus.is_nilpotent_of_class(3));
    let assoc = report.info("associative", check_identity(a, IdentityKind::Associative));
    let plus_ca = report.info(
        "A⁺ is commutative associative",
        check_identity(&ops.plus, IdentityKind::Associative),
    );
    let two_nil = report.info_flag("A⁻ is 2-nilpotent", ops.minus.is_nilpotent_of_class(2));
    report.verdict_flag(
        "associative ⟺ A⁺ commutative associative ⟺ A⁻ 2-nilpotent",
        assoc == plus_ca && plus_ca == two_nil,
    );
    Ok(report)
}

/// Closure of `S` under `•` and associativity of `•` on a basis of `S`.
fn plus_square_subalgebra(ops: &Ops<'_>, s: &Subspace) -> Outcome {
    let b = s.basis();
    let n = ops.n();
    for (i, x) in b.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let p = ops.dot(x, y);
            if !s.contains(&p) {
                return Err(Witness::new("closure of A•A under •", &[i, j], p, Vector::zeros(n)));
            }
            for (k, z) in b.iter().enumerate() {
                compare(
                    "(s•t)•u = s•(t•u) on a basis of A•A",
                    &[i, j, k],
                    ops.dot(&ops.dot(x, y), z),
                    ops.dot(x, &ops.dot(y, z)),
                )?;
            }
        }
    }
    Ok(())
}

/// Evaluates the four-condition characterization of NAL-algebras
/// independently of the defining identities, and cross-checks the result
/// against them.
pub fn characterize_nal(a: &Algebra) -> Result<(bool, CheckReport)> {
    let ops = Ops::new(a);
    let mut report = CheckReport::new();
    let c1 = report.verdict("(1) A⁻ is a Lie algebra", lie_admissible(a));
    let c2 = report.verdict("(2) A•A ⊆ Z(A⁻)", ops.plus_square_central().0);
    let c3 = report.verdict("(3) [A,A] ⊆ ann(A⁺)", ops.commutators_annihilate().0);
    let c4 = report.verdict("(4) Asso⁺(x,y,z) = [y,zx]", ops.asso_plus_bracket());
    let all = c1 && c2 && c3 && c4;
    let direct = holds(a, IdentityKind::NAL);
    if all != direct {
        return Err(Error::CrossCheck {
            name: "NAL characterization".to_string(),
            detail: format!("four conditions give {all}, defining identities give {direct}"),
        });
    }
    Ok((all, report))
}

/// `A⁻ = g ⊕ S` with `S = A•A` central; `[x,y] = [x,y]_g + ω(x,y)`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    /// `S = A•A`.
    pub ideal: Subspace,
    /// Basis of the complement `g`, standard basis vectors chosen greedily.
    pub complement: Vec<Vector>,
    /// `[g_a, g_b]_g = Σ_c brackets[a][b][c] g_c`.
    pub brackets: Tensor3,
    /// `ω(g_a, g_b) ∈ S`, in ambient coordinates, row-major `a·m + b`.
    pub cocycle: Vec<Vector>,
    pub report: CheckReport,
}

impl CentralExtension {
    pub fn omega(&self, a: usize, b: usize) -> &Vector {
        &self.cocycle[a * self.complement.len() + b]
    }
}

pub fn central_extension_decompose(a: &Algebra) -> Result<CentralExtension> {
    require_nal(a)?;
    let n = a.dim();
    let minus = a.minus_algebra();
    let s = a.plus_algebra().square();
    let complement = s.greedy_extension(&Subspace::zero(n), n);
    let m = complement.len();
    let frame: Vec<Vector> = complement.iter().chain(s.basis()).cloned().collect();
    let frame_matrix = Matrix::from_columns(n, &frame);
    let split = |v: &Vector| -> Result<(Vector, Vector)> {
        let coords = frame_matrix.solve(v).ok_or_else(|| Error::InternalContradiction {
            step: "split bracket".to_string(),
            detail: format!("{v} is not in g ⊕ A•A"),
        })?;
        let g_part = Vector::from_entries(coords.entries()[..m].to_vec());
        let mut omega = Vector::zeros(n);
        for (t, c) in coords.entries()[m..].iter().enumerate() {
            omega.add_scaled(c, &s.basis()[t]);
        }
        Ok((g_part, omega))
    };
    let mut brackets = Tensor3::zeros(m);
    let mut cocycle = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let (g_part, omega) = split(&minus.m(&complement[x], &complement[y]))?;
            for (c, v) in g_part.support() {
                brackets.set(x, y, c, v.clone());
            }
            cocycle.push(omega);
        }
    }
    let g = Algebra::new(brackets.clone());
    let mut report = CheckReport::new();
    let center = minus.lie_center().expect("A⁻ is anticommutative");
    report.verdict_flag("A•A ⊆ Z(A⁻)", s.is_subspace_of(&center));
    report.verdict_flag("A⁻ = g ⊕ A•A", frame_matrix.rank() == n);
    report.verdict("g is a Lie algebra", is_lie(&g));
    let omega = |x: usize, y: usize| &cocycle[x * m + y];
    report.verdict(
        "ω(x,y) = -ω(y,x)",
        scan2(m, |x, y| compare("ω(x,y) = -ω(y,x)", &[x, y], omega(x, y).clone(), -omega(y, x))),
    );
    let omega_at = |u: &Vector, z: usize| {
        let mut out = Vector::zeros(n);
        for (c, v) in u.support() {
            out.add_scaled(v, omega(c, z));
        }
        out
    };
    report.verdict(
        "ω([x,y]_g,z) + ω([y,z]_g,x) + ω([z,x]_g,y) = 0",
        scan3(m, |x, y, z| {
            let sum = &(&omega_at(g.product(x, y), z) + &omega_at(g.product(y, z), x))
                + &omega_at(g.product(z, x), y);
            compare("2-cocycle identity", &[x, y, z], sum, Vector::zeros(n))
        }),
    );
    Ok(CentralExtension {
        ideal: s,
        complement,
        brackets,
        cocycle,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use alloc::string::ToString;

    #[test]
    fn quoted_witnesses() {
        let na6 = fixtures::na6();
        assert!(check_identity(&na6, IdentityKind::NearlyAssociative).is_ok());
        let w = evaluate_identity(&na6, Equation::RCommutative, (1, 0, 1)).unwrap();
        assert_eq!((w.lhs.to_string(), w.rhs.to_string()), ("-e6".into(), "e6".into()));
        let w = evaluate_identity(&na6, Equation::LCommutative, (1, 0, 1)).unwrap();
        assert_eq!((w.lhs.to_string(), w.rhs.to_string()), ("e6".into(), "-e6".into()));
        let lr3 = fixtures::lr3();
        assert!(check_identity(&lr3, IdentityKind::LR).is_ok());
        let w = evaluate_identity(&lr3, Equation::NearlyAssociative, (1, 0, 1)).unwrap();
        assert_eq!((w.lhs.to_string(), w.rhs.to_string()), ("-e3".into(), "0".into()));
        assert!(check_identity(&lr3, IdentityKind::NearlyAssociative).is_err());
    }

    #[test]
    fn lex_first_witness() {
        let w = check_identity(&fixtures::na6(), IdentityKind::LCommutative).unwrap_err();
        assert_eq!(w.indices, [0, 1, 1]);
        let (lhs, rhs) = Equation::LCommutative.basis_sides(&fixtures::na6(), 0, 1, 1);
        assert_eq!(w.lhs, lhs.into());
        assert_eq!(w.rhs, rhs.into());
    }

    #[test]
    fn nal_fixtures() {
        assert!(holds(&fixtures::nal6(), IdentityKind::NAL));
        assert!(holds(&fixtures::nal4(), IdentityKind::NAL));
        assert!(holds(&fixtures::nal4(), IdentityKind::Associative));
        assert!(!holds(&fixtures::nal6(), IdentityKind::Associative));
    }

    #[test]
    fn operator_identities() {
        let r = check_operator_identities(&fixtures::na6());
        assert!(r.holds("L_x L_y = R_y R_x"));
        assert!(r.all_verdicts_hold());
        let r = check_operator_identities(&fixtures::nal6());
        assert!(r.entries().iter().all(|e| e.holds));
        let r = check_operator_identities(&fixtures::lr3());
        let e = r.get("L_x L_y = R_y R_x").unwrap();
        assert!(!e.holds && e.witness.is_some());
    }

    #[test]
    fn admissibility() {
        let z = Algebra::zero(2);
        assert!(is_lie_admissible(&z) && is_jordan_admissible(&z));
        assert!(is_lie_poisson_jordan(&z, PoissonReading::Literal));
        let na6 = fixtures::na6();
        assert!(is_lie_admissible(&na6) && is_jordan_admissible(&na6));
        for reading in [PoissonReading::Leibniz, PoissonReading::Literal] {
            assert!(is_lie_poisson_jordan(&fixtures::nal6(), reading));
        }
    }

    #[test]
    fn consequences() {
        let r = check_na_consequences(&fixtures::na6()).unwrap();
        assert!(r.all_verdicts_hold(), "{r}");
        let r = check_na_consequences(&fixtures::nal6()).unwrap();
        assert!(r.holds("flexible") && r.holds("A•A ⊆ Z(A⁻)"));
        assert!(matches!(
            check_na_consequences(&fixtures::lr3()),
            Err(Error::NotNearlyAssociative(_))
        ));
        assert!(check_na_consequences(&Algebra::zero(2)).unwrap().all_verdicts_hold());
    }

    #[test]
    fn nal_structure() {
        let r = check_nal_structure(&fixtures::nal6()).unwrap();
        assert!(r.all_verdicts_hold(), "{r}");
        assert!(!r.holds("associative") && !r.holds("A⁻ is 2-nilpotent"));
        let r = check_nal_structure(&fixtures::nal4()).unwrap();
        assert!(r.entries().iter().all(|e| e.holds), "{r}");
        assert!(check_nal_structure(&Algebra::zero(3)).unwrap().entries().iter().all(|e| e.holds));
        assert!(matches!(check_nal_structure(&fixtures::na6()), Err(Error::NotNAL(_))));
    }

    #[test]
    fn characterization() {
        assert!(characterize_nal(&fixtures::nal6()).unwrap().0);
        let (ok, r) = characterize_nal(&fixtures::na6()).unwrap();
        assert!(!ok);
        assert!(!r.holds("(2) A•A ⊆ Z(A⁻)") || !r.holds("(3) [A,A] ⊆ ann(A⁺)"));
        let (ok, r) = characterize_nal(&fixtures::lr3()).unwrap();
        assert!(!ok);
        assert!(!r.holds("(1) A⁻ is a Lie algebra") || !r.holds("(4) Asso⁺(x,y,z) = [y,zx]"));
    }

    #[test]
    fn central_extensions() {
        let ce = central_extension_decompose(&fixtures::nal6()).unwrap();
        let e = |i: usize| Vector::basis(6, i - 1);
        assert_eq!(ce.ideal, Subspace::span(6, [&e(3) + &e(4), e(5), e(6)]));
        assert!(ce.report.all_verdicts_hold(), "{}", ce.report);
        let ce = central_extension_decompose(&Algebra::zero(3)).unwrap();
        assert!(ce.ideal.is_zero() && ce.complement.len() == 3);
        assert!(ce.cocycle.iter().all(Vector::is_zero));
        let ce = central_extension_decompose(&fixtures::nal4()).unwrap();
        assert_eq!(ce.ideal, Subspace::span(4, [e4(4)]));
        assert!(ce.report.all_verdicts_hold());
    }

    fn e4(i: usize) -> Vector {
        Vector::basis(4, i - 1)
    }
}
