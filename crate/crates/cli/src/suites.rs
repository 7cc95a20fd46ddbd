//! Randomized cross-check suites. Each pits two independent code paths
//! against each other and tallies agreements.

use nearbi_core::bimodule;
use nearbi_core::coalgebra::{self, CoalgebraKind};
use nearbi_core::coboundary;
use nearbi_core::double::{self, BialgebraCandidate};
use nearbi_core::identity::{self, IdentityKind};
use nearbi_core::{fixtures, Algebra, Error, Tensor2};
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::random::{self, Gen};
use crate::render::Section;

/// Outcome of one suite.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub name: String,
    pub trials: usize,
    /// Trials where the shared verdict was true.
    pub held: usize,
    pub disagreements: Vec<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            ..Tally::default()
        }
    }

    fn record(&mut self, subject: impl FnOnce() -> String, first: bool, second: bool) {
        self.trials += 1;
        if first != second {
            self.disagreements.push(format!("{}: {first} vs {second}", subject()));
        } else if first {
            self.held += 1;
        }
    }

    fn error(&mut self, subject: impl FnOnce() -> String, e: &Error) {
        self.trials += 1;
        self.disagreements.push(format!("{}: {e}", subject()));
    }

    pub fn agreed(&self) -> bool {
        self.disagreements.is_empty()
    }

    /// Both verdicts occurred.
    pub fn mixed(&self) -> bool {
        self.held > 0 && self.held < self.trials
    }

    pub fn section(&self) -> Section {
        let mut s = Section::new(self.name.clone());
        s.fact("trials", self.trials).fact("true verdicts", self.held);
        s.flag("both code paths agree", true, self.agreed());
        for d in &self.disagreements {
            s.fact("disagreement", d);
        }
        s
    }
}

fn describe(a: &Algebra) -> String {
    match a.label() {
        Some(l) => l.to_string(),
        None => format!("{}-dim algebra", a.dim()),
    }
}

/// Four-condition characterization of NAL-algebras against the defining
/// identities, on the fixtures and `trials` random tensors of dimension ≤ 4.
pub fn nal_characterization(rng: &mut Gen, trials: usize) -> Tally {
    let mut t = Tally::new("NAL characterization vs defining identities");
    let pool = [fixtures::na6(), fixtures::lr3(), fixtures::nal4(), fixtures::nal6()];
    let randoms = (0..trials).map(|_| random::algebra(rng, 4));
    for a in pool.into_iter().chain(randoms) {
        let direct = identity::holds(&a, IdentityKind::NAL);
        match identity::characterize_nal(&a) {
            Ok((four, _)) => t.record(|| describe(&a), four, direct),
            Err(e) => t.error(|| describe(&a), &e),
        }
    }
    t
}

/// `L_(xy) = R_(yx)`, L-algebra and R-algebra agree on every nearly
/// associative fixture and double.
pub fn coadjoint_equivalence() -> Tally {
    let mut t = Tally::new("three-way coadjoint equivalence");
    let doubles = [
        (fixtures::nal4(), fixtures::co4()),
        (fixtures::nal6(), fixtures::co6()),
    ]
    .map(|(a, d)| {
        let bc = BialgebraCandidate::new(a, d).expect("dimensions agree");
        double::build_double(&bc).into_algebra()
    });
    for a in [fixtures::na6(), fixtures::nal4(), fixtures::nal6()].into_iter().chain(doubles) {
        match bimodule::coadjoint_exists(&a) {
            Ok((v, _)) => t.record(|| describe(&a), v, v),
            Err(e) => t.error(|| describe(&a), &e),
        }
    }
    t
}

/// Representation equations against near-associativity of the semidirect
/// sum, over the nearly associative fixtures.
pub fn representations(rng: &mut Gen, trials: usize) -> Tally {
    let mut t = Tally::new("representation vs semidirect sum");
    let pool = [fixtures::na6(), fixtures::nal4(), fixtures::nal6()];
    for _ in 0..trials {
        let a = pool.choose(rng).expect("nonempty");
        let b = random::bimodule(rng, a);
        let semi = identity::holds(&bimodule::semidirect_algebra(&b), IdentityKind::NearlyAssociative);
        match bimodule::is_representation(&b) {
            Ok(o) => t.record(|| format!("module of dim {} over {}", b.module_dim(), describe(a)), o.is_ok(), semi),
            Err(e) => t.error(|| describe(a), &e),
        }
    }
    t
}

/// Coalgebra predicates against algebra predicates of the dual, on the
/// coalgebra fixtures, `Δ_(r15)` and `trials` random tensors.
pub fn coalgebra_duality(rng: &mut Gen, trials: usize) -> Tally {
    let mut t = Tally::new("coalgebra predicates vs dual algebra");
    let d15 = coboundary::delta_from_r(&fixtures::nal6(), &fixtures::r15()).expect("skew");
    let fixed = [fixtures::co4(), fixtures::co6(), d15];
    let randoms = (0..trials).map(|_| random::comultiplication(rng, 4));
    for (n, c) in fixed.into_iter().chain(randoms).enumerate() {
        let dual = c.dual_algebra();
        for (ck, ak) in [
            (CoalgebraKind::NearlyCoassociative, IdentityKind::NearlyAssociative),
            (CoalgebraKind::LCoalgebra, IdentityKind::LCommutative),
            (CoalgebraKind::RCoalgebra, IdentityKind::RCommutative),
        ] {
            t.record(
                || format!("coproduct #{n}, {}", ck.name()),
                coalgebra::check_coalgebra(&c, ck).is_ok(),
                identity::holds(&dual, ak),
            );
        }
        if let Err(e) = coalgebra::l_iff_r_for_nearly_coassociative(&c) {
            t.error(|| format!("coproduct #{n}"), &e);
        }
    }
    t
}

/// Direct double against the coproduct conditions, on the two bialgebra
/// fixtures and `trials` admissible perturbations of them.
pub fn bialgebra_routes(rng: &mut Gen, trials: usize) -> Tally {
    let mut t = Tally::new("double vs coproduct conditions");
    let bases = [
        (fixtures::nal4(), fixtures::co4()),
        (fixtures::nal6(), fixtures::co6()),
    ];
    let compare = |t: &mut Tally, bc: &BialgebraCandidate, label: String| -> bool {
        let coproduct = double::is_nal_bialgebra_coproduct(bc);
        let direct = double::is_nal_bialgebra_direct(bc);
        match (coproduct, direct) {
            (Ok((c, _)), Ok((d, _))) => {
                t.record(|| label, c, d);
                true
            }
            (Err(Error::HalvesNotNAL { .. }), Err(Error::HalvesNotNAL { .. })) => false,
            (Err(e), _) | (_, Err(e)) => {
                t.error(|| label, &e);
                true
            }
        }
    };
    for (a, d) in &bases {
        let bc = BialgebraCandidate::new(a.clone(), d.clone()).expect("dimensions agree");
        compare(&mut t, &bc, describe(a));
    }
    let mut admitted = 0;
    let mut attempts = 0;
    while admitted < trials && attempts < trials * 100 {
        attempts += 1;
        let (a, d) = &bases[rng.random_range(0..bases.len())];
        let bc = BialgebraCandidate::new(a.clone(), random::perturbed(rng, d)).expect("dimensions agree");
        if compare(&mut t, &bc, format!("perturbed coproduct over {}", describe(a))) {
            admitted += 1;
        }
    }
    t
}

/// The four reformulations for skew `r` against their direct counterparts.
pub struct SkewTallies {
    pub coassociativity_operator: Tally,
    pub lr_clauses: Tally,
    pub cyclic_r: Tally,
    pub r_map: Tally,
}

impl SkewTallies {
    pub fn all(&self) -> [&Tally; 4] {
        [&self.coassociativity_operator, &self.lr_clauses, &self.cyclic_r, &self.r_map]
    }
}

fn skew_pool() -> Vec<(Algebra, bool)> {
    let nal4 = fixtures::nal4();
    vec![
        (fixtures::nal4(), true),
        (fixtures::nal6(), true),
        (random::pad(&nal4, 1), true),
        (random::pad(&nal4, 2), true),
        (Algebra::zero(3), true),
        (fixtures::na6(), false),
        (fixtures::lr3(), false),
    ]
}

/// Fixture r-matrices first, then `trials` random skew tensors over a pool
/// of algebras of dimension ≤ 6.
pub fn skew_cross_checks(rng: &mut Gen, trials: usize) -> SkewTallies {
    let mut out = SkewTallies {
        coassociativity_operator: Tally::new("coassociativity operator vs nearly coassociative Δ_r"),
        lr_clauses: Tally::new("L/R clauses vs L/R-coalgebra Δ_r"),
        cyclic_r: Tally::new("cyclic R-map condition vs LR(r) = 0"),
        r_map: Tally::new("R-map conditions vs tensor conditions"),
    };
    let mut cases: Vec<(Algebra, bool, Tensor2)> = vec![
        (fixtures::nal4(), true, fixtures::r14()),
        (fixtures::nal6(), true, fixtures::r56()),
        (fixtures::nal6(), true, fixtures::r26()),
        (fixtures::nal6(), true, fixtures::r15()),
    ];
    let pool = skew_pool();
    for _ in 0..trials {
        let (a, nal) = pool.choose(rng).expect("nonempty").clone();
        let r = random::skew(rng, a.dim(), 0.3);
        cases.push((a, nal, r));
    }
    for (a, nal, r) in &cases {
        skew_case(&mut out, a, *nal, r);
    }
    out
}

fn skew_case(out: &mut SkewTallies, a: &Algebra, nal: bool, r: &Tensor2) {
    let who = || format!("{} with r = {r}", describe(a));
    let delta = coboundary::delta_from_r(a, r).expect("skew");
    let na = identity::holds(a, IdentityKind::NearlyAssociative);
    let direct = if na {
        coalgebra::check_coalgebra(&delta, CoalgebraKind::NearlyCoassociative).is_ok()
    } else {
        coalgebra::nearly_coassociative_cycled_right(&delta).is_ok()
    };
    match coboundary::check_coassociativity_operator(a, r) {
        Ok(o) => out.coassociativity_operator.record(who, o.is_ok(), direct),
        Err(e) => out.coassociativity_operator.error(who, &e),
    }
    let lr = coboundary::lr_tensor(a, r).expect("skew");
    match coboundary::cyclic_r_condition(a, r) {
        Ok(o) => out.cyclic_r.record(who, o.is_ok(), lr.lr.is_zero()),
        Err(e) => out.cyclic_r.error(who, &e),
    }
    if !nal {
        return;
    }
    match coboundary::check_lr_clauses(a, r) {
        Ok(rep) => {
            for (clause, kind) in [("L-clause", CoalgebraKind::LCoalgebra), ("R-clause", CoalgebraKind::RCoalgebra)] {
                let direct = coalgebra::check_coalgebra(&delta, kind).is_ok();
                out.lr_clauses.record(|| format!("{}, {clause}", who()), rep.holds(clause), direct);
            }
        }
        Err(e) => out.lr_clauses.error(who, &e),
    }
    match (coboundary::r_map_conditions(a, r), coboundary::coboundary_conditions(a, r)) {
        (Ok(rep), Ok(tensor)) => {
            for (k, name) in coboundary::R_MAP_CONDITIONS.iter().enumerate() {
                out.r_map.record(|| format!("{}, condition {}", who(), k + 1), rep.holds(name), tensor.condition(k).holds);
            }
        }
        (Err(e), _) | (_, Err(e)) => out.r_map.error(who, &e),
    }
}
