//! Acceptance suite: one PASS/FAIL line per criterion. A criterion is a list
//! of clauses; the line names every clause that does not hold.
//!
//! Clauses listed in `KNOWN_UNATTAINABLE` are reported like any other but do
//! not fail the test, because the stated value disagrees with the exact
//! computation.

use std::io::Write;
use std::time::{Duration, Instant};

use nearbi::commands;
use nearbi::corpus;
use nearbi::format::{Document, Payload};
use nearbi::random;
use nearbi::suites::{self, Tally};
use nearbi_core::coalgebra::{self, CoalgebraKind};
use nearbi_core::coboundary;
use nearbi_core::double::{self, BialgebraCandidate};
use nearbi_core::identity::{self, Equation, IdentityKind};
use nearbi_core::quadratic;
use nearbi_core::scalar::int;
use nearbi_core::{fixtures, Algebra, Tensor2, Tensor3};

const KNOWN_UNATTAINABLE: &[&str] = &["Δ_r56 = CO6"];

struct Criterion {
    number: usize,
    title: &'static str,
    clauses: Vec<(String, bool)>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Criterion {
            number,
            title,
            clauses: Vec::new(),
        }
    }

    fn clause(&mut self, name: impl Into<String>, holds: bool) -> &mut Self {
        self.clauses.push((name.into(), holds));
        self
    }

    fn tally(&mut self, t: &Tally) -> &mut Self {
        self.clause(format!("{} ({} trials agree)", t.name, t.trials), t.agreed())
    }

    fn failing(&self) -> Vec<&str> {
        self.clauses.iter().filter(|(_, h)| !h).map(|(n, _)| n.as_str()).collect()
    }

    fn line(&self) -> String {
        let failing = self.failing();
        if failing.is_empty() {
            format!("criterion {:>2} PASS  {} ({} clauses)", self.number, self.title, self.clauses.len())
        } else {
            format!("criterion {:>2} FAIL  {}; not holding: {}", self.number, self.title, failing.join("; "))
        }
    }
}

/// `Σ c e_i⊗e_j⊗e_k` from 1-based terms.
fn t3(dim: usize, terms: &[(usize, usize, usize, i64)]) -> Tensor3 {
    let mut t = Tensor3::zeros(dim);
    for &(i, j, k, c) in terms {
        t.add_at(i - 1, j - 1, k - 1, &int(c));
    }
    t
}

fn witness_text(a: &Algebra, eq: Equation, triple: (usize, usize, usize)) -> Option<(String, String)> {
    identity::evaluate_identity(a, eq, triple).map(|w| (w.lhs.to_string(), w.rhs.to_string()))
}

fn pair(lhs: &str, rhs: &str) -> Option<(String, String)> {
    Some((lhs.to_string(), rhs.to_string()))
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "example regression for NA6 and LR3");
    let na6 = fixtures::na6();
    let lr3 = fixtures::lr3();
    c.clause("NA6 nearly associative", identity::holds(&na6, IdentityKind::NearlyAssociative));
    for kind in [IdentityKind::LCommutative, IdentityKind::RCommutative, IdentityKind::LR] {
        c.clause(format!("NA6 not {}", kind.name()), !identity::holds(&na6, kind));
    }
    // (e2e1)e2 = −e6 ≠ e6 = (e2e2)e1 and e2(e1e2) = e6 ≠ −e6 = e1(e2e2)
    c.clause(
        "NA6 (e2e1)e2 = -e6 ≠ e6",
        witness_text(&na6, Equation::RCommutative, (1, 0, 1)) == pair("-e6", "e6"),
    );
    c.clause(
        "NA6 e2(e1e2) = e6 ≠ -e6",
        witness_text(&na6, Equation::LCommutative, (1, 0, 1)) == pair("e6", "-e6"),
    );
    c.clause("LR3 lr-algebra", identity::holds(&lr3, IdentityKind::LR));
    c.clause("LR3 not nearly associative", !identity::holds(&lr3, IdentityKind::NearlyAssociative));
    c.clause(
        "LR3 (e2e1)e2 = -e3 ≠ 0",
        witness_text(&lr3, Equation::NearlyAssociative, (1, 0, 1)) == pair("-e3", "0"),
    );
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "NAL structure battery on NAL6 and NAL4");
    let nal6 = fixtures::nal6();
    c.clause("NAL6 nearly associative L-algebra", identity::holds(&nal6, IdentityKind::NAL));
    match identity::check_nal_structure(&nal6) {
        Ok(r) => {
            for name in [
                "flexible",
                "quasi-commutative",
                "A•A ⊆ Z(A⁻)",
                "[A,A] ⊆ ann(A⁺)",
                "Asso⁺(x,y,z) = ½Asso(x,y,z)",
                "A⁻ is 3-nilpotent",
            ] {
                c.clause(format!("NAL6 {name}"), r.holds(name));
            }
            c.clause("NAL6 A⁻ not 2-nilpotent", !r.holds("A⁻ is 2-nilpotent"));
            c.clause("NAL6 all structure verdicts", r.all_verdicts_hold());
        }
        Err(e) => {
            c.clause(format!("NAL6 structure: {e}"), false);
        }
    }
    match identity::check_nal_structure(&fixtures::nal4()) {
        Ok(r) => {
            for name in ["associative", "A⁻ is 2-nilpotent", "A⁺ is commutative associative"] {
                c.clause(format!("NAL4 {name}"), r.holds(name));
            }
            c.clause(
                "NAL4 equivalence chain",
                r.holds("associative ⟺ A⁺ commutative associative ⟺ A⁻ 2-nilpotent"),
            );
            c.clause("NAL4 all structure verdicts", r.all_verdicts_hold());
        }
        Err(e) => {
            c.clause(format!("NAL4 structure: {e}"), false);
        }
    }
    c
}

fn criterion_3(rng: &mut random::Gen) -> Criterion {
    let mut c = Criterion::new(3, "NAL characterization and coadjoint equivalence");
    let t = suites::nal_characterization(rng, 100);
    c.clause("fixtures and 100 random tensors", t.trials == 104);
    c.clause("both verdicts occur", t.mixed());
    c.tally(&t);
    c.tally(&suites::coadjoint_equivalence());
    c
}

fn criterion_4(rng: &mut random::Gen) -> Criterion {
    let mut c = Criterion::new(4, "representations vs semidirect sums");
    let t = suites::representations(rng, 50);
    c.clause("50 random bimodules", t.trials == 50);
    c.clause("both verdicts occur", t.mixed());
    c.tally(&t);
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "quadratic form from the intertwiner of D(NAL4)");
    let bc = BialgebraCandidate::new(fixtures::nal4(), fixtures::co4()).expect("dimensions agree");
    let d = double::build_double(&bc).into_algebra();
    let b = double::canonical_double_form(4);
    let result = quadratic::phi_from_form(&d, &b).and_then(|phi| quadratic::form_from_phi(&d, &phi));
    match result {
        Ok(syn) => {
            for step in ["T_a(A², A) = 0", "N ∩ W = 0", "A² ⊆ N"] {
                c.clause(step, syn.report.holds(step));
            }
            c.clause("every step verdict", syn.report.all_verdicts_hold());
            c.clause("result is quadratic", quadratic::is_quadratic(&d, &syn.form));
        }
        Err(e) => {
            c.clause(format!("synthesis: {e}"), false);
        }
    }
    c
}

fn criterion_6(rng: &mut random::Gen) -> Criterion {
    let mut c = Criterion::new(6, "coalgebra predicates vs dual algebra");
    let t = suites::coalgebra_duality(rng, 100);
    c.clause("CO4, CO6, Δ_r15 and 100 random tensors", t.trials == 103 * 3);
    c.tally(&t);
    for (name, co) in [("CO4", fixtures::co4()), ("CO6", fixtures::co6())] {
        let nc = coalgebra::check_coalgebra(&co, CoalgebraKind::NearlyCoassociative).is_ok();
        let l = coalgebra::check_coalgebra(&co, CoalgebraKind::LCoalgebra).is_ok();
        let r = coalgebra::check_coalgebra(&co, CoalgebraKind::RCoalgebra).is_ok();
        c.clause(format!("{name} nearly coassociative with L ⟺ R"), nc && l == r);
        c.clause(
            format!("{name} L ⟺ R cross-check"),
            coalgebra::l_iff_r_for_nearly_coassociative(&co).is_ok(),
        );
    }
    c
}

fn criterion_7(rng: &mut random::Gen) -> Criterion {
    let mut c = Criterion::new(7, "double vs coproduct conditions");
    for (name, a, d) in [
        ("(NAL4, CO4)", fixtures::nal4(), fixtures::co4()),
        ("(NAL6, CO6)", fixtures::nal6(), fixtures::co6()),
    ] {
        let bc = BialgebraCandidate::new(a, d).expect("dimensions agree");
        let direct = double::is_nal_bialgebra_direct(&bc).map(|r| r.0).ok();
        let coproduct = double::is_nal_bialgebra_coproduct(&bc).map(|r| r.0).ok();
        c.clause(format!("{name} both routes true"), direct == Some(true) && coproduct == Some(true));

        let n = bc.dim();
        let dbl = double::build_double(&bc).into_algebra();
        c.clause(format!("D{name} has dimension {}", 2 * n), dbl.dim() == 2 * n);
        let form = double::canonical_double_form(n);
        c.clause(format!("D{name} quadratic"), quadratic::is_quadratic(&dbl, &form));
        let eq = quadratic::quadratic_equivalences(&dbl, &form);
        c.clause(
            format!("D{name} NA ⟺ L ⟺ R ⟺ LR"),
            eq.is_ok_and(|r| r.holds("NA ⟺ L ⟺ R ⟺ LR")),
        );
    }
    let t = suites::bialgebra_routes(rng, 50);
    c.clause("fixtures and 50 perturbed coproducts", t.trials == 52);
    c.clause("mixed verdicts", t.mixed());
    c.tally(&t);
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "Yang-Baxter regression");
    let nal4 = fixtures::nal4();
    let nal6 = fixtures::nal6();

    let lr26 = coboundary::lr_tensor(&nal6, &fixtures::r26()).map(|t| t.lr);
    let expected = t3(6, &[(6, 5, 6, -1), (5, 6, 6, -1), (6, 6, 5, -1)]);
    c.clause("LR(r26) = -e6⊗e5⊗e6 - e5⊗e6⊗e6 - e6⊗e6⊗e5", lr26.ok() == Some(expected));

    match coboundary::coboundary_conditions(&nal6, &fixtures::r26()) {
        Ok(rep) => {
            let c4 = rep.condition(3);
            let at = c4.witness.as_ref().map(|w| (w.indices.clone(), w.lhs.to_string()));
            c.clause("r26 condition (4) fails", !c4.holds);
            c.clause("r26 condition (4) witness (e1, e2) ↦ e6⊗e6", at == Some((vec![0, 1], "e6⊗e6".to_string())));
        }
        Err(e) => {
            c.clause(format!("r26 conditions: {e}"), false);
        }
    }

    match coboundary::coboundary_conditions(&nal6, &fixtures::r56()) {
        Ok(rep) => {
            c.clause("LR(r56) = 0", rep.is_solution);
            c.clause("r56 coboundary bialgebra", rep.coboundary_bialgebra);
        }
        Err(e) => {
            c.clause(format!("r56 conditions: {e}"), false);
        }
    }
    let d56 = coboundary::delta_from_r(&nal6, &fixtures::r56());
    c.clause(KNOWN_UNATTAINABLE[0], d56.as_ref().ok() == Some(&fixtures::co6()));
    let d14 = coboundary::delta_from_r(&nal4, &fixtures::r14());
    c.clause("Δ_r14 = CO4", d14.ok() == Some(fixtures::co4()));

    match coboundary::delta_from_r(&nal6, &fixtures::r15()) {
        Ok(d) => {
            for kind in [
                CoalgebraKind::NearlyCoassociative,
                CoalgebraKind::LCoalgebra,
                CoalgebraKind::RCoalgebra,
            ] {
                c.clause(
                    format!("Δ_r15 not {}", kind.name()),
                    coalgebra::check_coalgebra(&d, kind).is_err(),
                );
            }
            // the six displayed tensors at e2
            let left = d.left_composite(1);
            let right = d.right_composite(1);
            let shown = [
                ("(Δ⊗I)Δ(e2)", left.clone(), t3(6, &[(6, 5, 3, 1), (5, 6, 3, 1)])),
                ("(I⊗Δ)Δ(e2)", right.clone(), t3(6, &[(4, 6, 5, 1), (4, 5, 6, 1)])),
                ("ξ(I⊗Δ)Δ(e2)", right.cycle(), t3(6, &[(6, 5, 4, 1), (5, 6, 4, 1)])),
                ("(τ⊗I)(I⊗Δ)Δ(e2)", right.twist12(), t3(6, &[(6, 4, 5, 1), (5, 4, 6, 1)])),
                ("(I⊗τ)(Δ⊗I)Δ(e2)", left.twist23(), t3(6, &[(6, 3, 5, 1), (5, 3, 6, 1)])),
            ];
            for (name, got, want) in shown {
                c.clause(format!("Δ_r15 {name} = {want}"), got == want);
            }
        }
        Err(e) => {
            c.clause(format!("Δ_r15: {e}"), false);
        }
    }
    c
}

fn criterion_9(rng: &mut random::Gen) -> Criterion {
    let mut c = Criterion::new(9, "skew r reformulations vs direct counterparts");
    let t = suites::skew_cross_checks(rng, 200);
    c.clause(
        "fixtures and 200 random skew tensors",
        t.coassociativity_operator.trials == 204 && t.cyclic_r.trials == 204,
    );
    for tally in t.all() {
        c.tally(tally);
    }
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "search over skew r with support 1 on NAL6");
    let alg = corpus::fixture("nal6").expect("shipped fixture");
    let a = alg.algebra().expect("algebra file").clone();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let start = Instant::now();
    let found = commands::search(&a, &[int(1)], 1, jobs);
    let elapsed = start.elapsed();
    c.clause(format!("finishes in under 5 s ({elapsed:.2?})"), elapsed < Duration::from_secs(5));
    let found = match found {
        Ok((_, found)) => found,
        Err(e) => {
            c.clause(format!("search: {e}"), false);
            return c;
        }
    };
    let has = |r: &Tensor2| found.iter().any(|(s, _)| s == r);
    c.clause("contains r56", has(&Tensor2::bivector(6, 4, 5)));
    c.clause("excludes r26", !has(&Tensor2::bivector(6, 1, 5)));
    c.clause("excludes r15", !has(&Tensor2::bivector(6, 0, 4)));
    let reverified = found.iter().all(|(r, _)| {
        let doc = Document::new(Payload::RMatrix(r.clone()));
        commands::ybe(&alg, &doc).is_ok_and(|rep| rep.passed)
    });
    c.clause(format!("all {} candidates pass ybe", found.len()), reverified);
    c
}

#[test]
fn acceptance() {
    let mut rng = random::generator(2024);
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(&mut rng),
        criterion_4(&mut rng),
        criterion_5(),
        criterion_6(&mut rng),
        criterion_7(&mut rng),
        criterion_8(),
        criterion_9(&mut rng),
        criterion_10(),
    ];
    // Written to the process handle so the lines appear in captured runs too.
    let mut out = std::io::stdout().lock();
    for c in &criteria {
        writeln!(out, "{}", c.line()).unwrap();
    }
    out.flush().unwrap();
    drop(out);

    let unexpected: Vec<String> = criteria
        .iter()
        .flat_map(|c| c.failing().into_iter().map(move |f| (c.number, f)))
        .filter(|(_, f)| !KNOWN_UNATTAINABLE.contains(f))
        .map(|(n, f)| format!("criterion {n}: {f}"))
        .collect();
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}

#[test]
fn unattainable_clause_reflects_the_exact_value() {
    let d = coboundary::delta_from_r(&fixtures::nal6(), &fixtures::r56()).unwrap();
    assert_eq!(d, fixtures::co6().scale(&int(2)));
}
