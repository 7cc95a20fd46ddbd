//! Command implementations shared by the binary and the tests. Each returns
//! a [`Report`]; input and precondition failures are errors.

use anyhow::{anyhow, bail, Context};
use nearbi_core::bimodule;
use nearbi_core::coalgebra::{self, CoalgebraKind};
use nearbi_core::coboundary::{self, YbeReport};
use nearbi_core::double::{self, BialgebraCandidate};
use nearbi_core::identity::{self, IdentityKind};
use nearbi_core::quadratic::{self, Intertwiner};
use nearbi_core::scalar::{self, Scalar};
use nearbi_core::{Algebra, Comultiplication, Tensor2};
use rayon::prelude::*;

use crate::corpus;
use crate::format::{Document, Kind, Payload};
use crate::render::{Report, Section};
use crate::suites;

fn name(doc: &Document) -> String {
    doc.name_or("input").to_string()
}

/// Predicates accepted by `check --predicate`.
pub fn algebra_predicate_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = IdentityKind::ALL.iter().map(|k| k.name()).collect();
    names.extend(["lie-admissible", "jordan-admissible", "coadjoint"]);
    names
}

fn algebra_predicate(a: &Algebra, predicate: &str) -> anyhow::Result<Result<(), nearbi_core::Witness>> {
    if let Some(kind) = IdentityKind::from_name(predicate) {
        return Ok(identity::check_identity(a, kind));
    }
    match predicate {
        "lie-admissible" => Ok(identity::lie_admissible(a)),
        "jordan-admissible" => Ok(identity::jordan_admissible(a)),
        "coadjoint" => {
            let (v, report) = bimodule::coadjoint_exists(a)?;
            Ok(if v {
                Ok(())
            } else {
                Err(report
                    .entries()
                    .iter()
                    .find_map(|e| e.witness.clone())
                    .expect("a false check carries a witness"))
            })
        }
        other => bail!(
            "unknown predicate {other}; expected one of: {}",
            algebra_predicate_names().join(", ")
        ),
    }
}

/// The full battery of identities and structure results for one algebra.
fn battery(a: &Algebra, report: &mut Report) -> anyhow::Result<()> {
    let mut ids = Section::new("identities");
    ids.fact("dim", a.dim());
    for kind in IdentityKind::ALL {
        ids.outcome(kind.name(), false, &identity::check_identity(a, kind));
    }
    ids.outcome("lie-admissible", false, &identity::lie_admissible(a));
    ids.outcome("jordan-admissible", false, &identity::jordan_admissible(a));
    report.push(ids);

    let (_, nal) = identity::characterize_nal(a)?;
    let mut s = Section::new("NAL characterization");
    s.extend(&nal, false);
    report.push(s);

    if identity::holds(a, IdentityKind::NearlyAssociative) {
        report.push(Section::from_report(
            "nearly associative consequences",
            &identity::check_na_consequences(a)?,
        ));
        let (exists, r) = bimodule::coadjoint_exists(a)?;
        let mut s = Section::from_report("coadjoint representation", &r);
        s.fact("exists", exists);
        report.push(s);
    }
    if identity::holds(a, IdentityKind::NAL) {
        report.push(Section::from_report("NAL structure", &identity::check_nal_structure(a)?));
        let ext = identity::central_extension_decompose(a)?;
        let mut s = Section::from_report("central extension of A⁻", &ext.report);
        s.fact("A•A", &ext.ideal).fact("dim g", ext.complement.len());
        report.push(s);
    }
    Ok(())
}

/// `check`: selected predicates as required checks, or the full battery.
pub fn check(
    alg: &Document,
    predicates: &[String],
    full: bool,
    form: Option<&Document>,
    phi: Option<&Document>,
) -> anyhow::Result<Report> {
    let a = alg.algebra()?;
    let mut inputs = vec![name(alg)];
    inputs.extend(form.map(name));
    inputs.extend(phi.map(name));
    let mut report = Report::new("check", inputs);
    if !predicates.is_empty() {
        let mut s = Section::new("predicates");
        for p in predicates {
            s.outcome(p.clone(), true, &algebra_predicate(a, p)?);
        }
        report.push(s);
    }
    if predicates.is_empty() || full {
        battery(a, &mut report)?;
    }
    if let Some(doc) = form {
        report.push(form_section(a, doc)?);
    }
    if let Some(doc) = phi {
        report.push(synthesis_section(a, doc)?);
    }
    Ok(report)
}

fn form_section(a: &Algebra, doc: &Document) -> anyhow::Result<Section> {
    let b = doc.form()?;
    let mut s = Section::new("quadratic form");
    s.flag("symmetric", false, quadratic::is_symmetric(b));
    s.flag("nondegenerate", false, quadratic::is_nondegenerate(b));
    s.outcome("invariant", false, &quadratic::invariance(a, b)?);
    let is_quadratic = s.flag("quadratic", true, quadratic::is_quadratic(a, b));
    if is_quadratic {
        s.extend(&quadratic::quadratic_equivalences(a, b)?, true);
        s.flag(
            "x ↦ B(x, −) is a bimodule isomorphism A → A*",
            true,
            bimodule::adjoint_coadjoint_isomorphic(a, b)?,
        );
    }
    Ok(s)
}

fn synthesis_section(a: &Algebra, doc: &Document) -> anyhow::Result<Section> {
    let phi = Intertwiner::new(doc.form()?.gram().clone())?;
    let syn = quadratic::form_from_phi(a, &phi)?;
    let mut s = Section::from_report("form from intertwiner", &syn.report);
    s.fact("N", &syn.n).fact("W", &syn.w).fact("B", syn.form.gram());
    s.flag("synthesized form is quadratic", true, quadratic::is_quadratic(a, &syn.form));
    Ok(s)
}

/// `double`: the `2n`-dimensional algebra `A ⊕ A*` as a document.
pub fn double(alg: &Document, cop: &Document) -> anyhow::Result<Document> {
    let bc = BialgebraCandidate::new(alg.algebra()?.clone(), cop.coproduct()?.clone())?;
    let d = double::build_double(&bc);
    let doc = Document::new(Payload::Algebra(d.into_algebra()));
    Ok(doc.with_label(&format!("D({})", name(alg))))
}

fn coalgebra_section(c: &Comultiplication) -> anyhow::Result<Section> {
    let mut s = Section::new("coalgebra");
    for kind in [
        CoalgebraKind::NearlyCoassociative,
        CoalgebraKind::LCoalgebra,
        CoalgebraKind::RCoalgebra,
        CoalgebraKind::LRCoalgebra,
        CoalgebraKind::NALCoalgebra,
    ] {
        s.outcome(kind.name(), false, &coalgebra::check_coalgebra(c, kind));
    }
    s.extend(&coalgebra::duality_dictionary(c)?, true);
    Ok(s)
}

/// `bialgebra`: both decision routes, which must agree.
pub fn bialgebra(alg: &Document, cop: &Document) -> anyhow::Result<Report> {
    let c = cop.coproduct()?;
    let bc = BialgebraCandidate::new(alg.algebra()?.clone(), c.clone())?;
    let mut report = Report::new("bialgebra", vec![name(alg), name(cop)]);
    report.push(coalgebra_section(c)?);
    let (verdict, detail) = double::is_nal_bialgebra(&bc)?;
    let mut s = Section::new("bialgebra");
    s.extend(&detail, false);
    s.flag("nearly associative bialgebra", true, verdict);
    report.push(s);
    Ok(report)
}

/// All `d(i)` lines of a comultiplication, `Δ(e_i) = ...`.
fn describe_coproduct(c: &Comultiplication) -> String {
    let lines: Vec<String> = (0..c.dim())
        .filter(|&i| !c.delta(i).is_zero())
        .map(|i| format!("Δ(e{}) = {}", i + 1, c.delta(i)))
        .collect();
    if lines.is_empty() {
        "0".to_string()
    } else {
        lines.join("; ")
    }
}

/// The YBE analysis as report sections.
pub fn ybe_sections(a: &Algebra, r: &Tensor2, ybe: &YbeReport) -> anyhow::Result<Vec<Section>> {
    let mut lr = Section::new("LR-Yang-Baxter equation");
    lr.fact("r12r23", &ybe.lr.r12r23)
        .fact("r13r12", &ybe.lr.r13r12)
        .fact("r23r13", &ybe.lr.r23r13)
        .fact("LR(r)", &ybe.lr.lr);
    lr.flag("LR(r) = 0", true, ybe.is_solution);
    lr.outcome("cyclic R-map condition", false, &coboundary::cyclic_r_condition(a, r)?);

    let mut cond = Section::new("coboundary conditions");
    cond.extend(&ybe.conditions, false);
    cond.flag("coboundary bialgebra", true, ybe.coboundary_bialgebra);
    if let Some(v) = ybe.coproduct_route {
        cond.flag("coproduct conditions on (A, Δ_r)", false, v);
    }

    let delta = coboundary::delta_from_r(a, r)?;
    let mut d = Section::new("Δ_r");
    d.fact("Δ_r", describe_coproduct(&delta));
    d.extend(&ybe.coalgebra_checks, false);
    d.outcome(
        "coassociativity operator vanishes",
        false,
        &coboundary::check_coassociativity_operator(a, r)?,
    );
    d.extend(&coboundary::check_lr_clauses(a, r)?, false);

    let dual = Section::from_report("R-map form", &coboundary::r_map_conditions(a, r)?);
    Ok(vec![lr, cond, d, dual])
}

/// `ybe`: everything known about a skew `r` on a NAL-algebra.
pub fn ybe(alg: &Document, rdoc: &Document) -> anyhow::Result<Report> {
    let a = alg.algebra()?;
    let r = rdoc.r_matrix()?;
    let result = coboundary::coboundary_conditions(a, r)?;
    let mut report = Report::new("ybe", vec![name(alg), name(rdoc)]);
    for s in ybe_sections(a, r, &result)? {
        report.push(s);
    }
    Ok(report)
}

/// Parses `"1,-1,1/2"`.
pub fn parse_coeffs(text: &str) -> anyhow::Result<Vec<Scalar>> {
    text.split(',')
        .map(|t| scalar::parse_scalar(t).map_err(|e| anyhow!(e.to_string())))
        .collect()
}

/// Evaluates every candidate on a pool of `jobs` threads; results come back
/// in enumeration order.
pub fn search(
    a: &Algebra,
    coeffs: &[Scalar],
    support: usize,
    jobs: usize,
) -> anyhow::Result<(usize, Vec<(Tensor2, YbeReport)>)> {
    identity::check_identity(a, IdentityKind::NAL).map_err(nearbi_core::Error::NotNAL)?;
    let candidates = coboundary::skew_candidates(a.dim(), coeffs, support);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("building the worker pool")?;
    let evaluated: Vec<nearbi_core::Result<YbeReport>> = pool.install(|| {
        candidates
            .par_iter()
            .map(|r| coboundary::coboundary_conditions(a, r))
            .collect()
    });
    let mut found = Vec::new();
    for (r, result) in candidates.iter().zip(evaluated) {
        let rep = result?;
        if rep.coboundary_bialgebra {
            found.push((r.clone(), rep));
        }
    }
    Ok((candidates.len(), found))
}

/// `search-r`: skew candidates whose six conditions all hold.
pub fn search_r(alg: &Document, coeffs: &[Scalar], support: usize, jobs: usize) -> anyhow::Result<Report> {
    let a = alg.algebra()?;
    let (total, found) = search(a, coeffs, support, jobs)?;
    let mut report = Report::new("search-r", vec![name(alg)]);
    let mut s = Section::new("candidates");
    let shown: Vec<String> = coeffs.iter().map(scalar::format_scalar).collect();
    s.fact("coefficients", shown.join(","))
        .fact("support", support)
        .fact("enumerated", total)
        .fact("found", found.len());
    for (r, rep) in &found {
        s.fact("candidate", format!("{r}  (LR(r) = {})", rep.lr.lr));
    }
    report.push(s);
    Ok(report)
}

/// Evaluates one expectation key against a document.
pub fn evaluate_expectation(doc: &Document, key: &str) -> anyhow::Result<bool> {
    let over = || -> anyhow::Result<Algebra> {
        let label = doc.meta.over.as_deref().ok_or_else(|| anyhow!("`{key}` needs an `over` algebra"))?;
        let over = corpus::fixture(label).ok_or_else(|| anyhow!("no fixture named {label}"))?;
        Ok(over.algebra()?.clone())
    };
    let coalgebra_kind = |k: &str| {
        [
            CoalgebraKind::NearlyCoassociative,
            CoalgebraKind::LCoalgebra,
            CoalgebraKind::RCoalgebra,
            CoalgebraKind::LRCoalgebra,
            CoalgebraKind::NALCoalgebra,
        ]
        .into_iter()
        .find(|c| c.name() == k)
    };
    match &doc.payload {
        Payload::Algebra(a) => Ok(algebra_predicate(a, key)?.is_ok()),
        Payload::Coproduct(c) => {
            if let Some(kind) = coalgebra_kind(key) {
                return Ok(coalgebra::check_coalgebra(c, kind).is_ok());
            }
            match key {
                "bialgebra" => {
                    let bc = BialgebraCandidate::new(over()?, c.clone())?;
                    Ok(double::is_nal_bialgebra(&bc)?.0)
                }
                _ => bail!("unknown coproduct expectation {key}"),
            }
        }
        Payload::RMatrix(r) => {
            if key == "skew" {
                return Ok(r.is_skew());
            }
            let a = over()?;
            if let Some(kind) = key.strip_prefix("delta-").and_then(coalgebra_kind) {
                let d = coboundary::delta_from_r(&a, r)?;
                return Ok(coalgebra::check_coalgebra(&d, kind).is_ok());
            }
            if let Some(label) = key.strip_prefix("delta-equals-") {
                let target = corpus::fixture(label).ok_or_else(|| anyhow!("no fixture named {label}"))?;
                return Ok(&coboundary::delta_from_r(&a, r)? == target.coproduct()?);
            }
            match key {
                "lr-ybe" => Ok(coboundary::lr_tensor(&a, r)?.lr.is_zero()),
                "coboundary-bialgebra" => Ok(coboundary::coboundary_conditions(&a, r)?.coboundary_bialgebra),
                _ => bail!("unknown r-matrix expectation {key}"),
            }
        }
        Payload::Form(_) => bail!("form files carry no expectations"),
    }
}

/// Checks every expectation recorded in `doc`.
pub fn regression_section(stem: &str, doc: &Document) -> anyhow::Result<Section> {
    let mut s = Section::new(format!("{} ({})", doc.name_or(stem), doc.kind()));
    if let Some(over) = &doc.meta.over {
        s.fact("over", over);
    }
    for note in &doc.meta.notes {
        s.fact("note", note);
    }
    for (key, &expected) in &doc.meta.expect {
        let got = evaluate_expectation(doc, key).with_context(|| format!("{stem}: {key}"))?;
        s.flag(format!("{key} = {expected}"), true, got == expected);
    }
    Ok(s)
}

/// `report`: every fixture against its recorded profile, optionally
/// followed by the randomized cross-check suites.
pub fn report(docs: &[(String, Document)], random_trials: usize, seed: u64) -> anyhow::Result<Report> {
    let mut report = Report::new("report", docs.iter().map(|(s, _)| s.clone()).collect());
    for (stem, doc) in docs {
        report.push(regression_section(stem, doc)?);
    }
    if random_trials > 0 {
        let mut rng = crate::random::generator(seed);
        report.push(suites::nal_characterization(&mut rng, random_trials).section());
        report.push(suites::coadjoint_equivalence().section());
        report.push(suites::representations(&mut rng, random_trials).section());
        report.push(suites::coalgebra_duality(&mut rng, random_trials).section());
        report.push(suites::bialgebra_routes(&mut rng, random_trials).section());
        for t in suites::skew_cross_checks(&mut rng, random_trials).all() {
            report.push(t.section());
        }
    }
    Ok(report)
}

/// Kind check for positional arguments.
pub fn expect_kind(doc: &Document, kind: Kind, what: &str) -> anyhow::Result<()> {
    if doc.kind() != kind {
        bail!("{what} must be a {kind} file, got a {} file", doc.kind());
    }
    Ok(())
}
