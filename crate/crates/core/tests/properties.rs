use nearbi_core::bimodule::{self, Bimodule};
use nearbi_core::coalgebra::{self, CoalgebraKind};
use nearbi_core::coboundary;
use nearbi_core::double::{self, BialgebraCandidate};
use nearbi_core::identity::{self, IdentityKind};
use nearbi_core::scalar::{int, Scalar};
use nearbi_core::{fixtures, Algebra, Comultiplication, Error, Matrix, Tensor2, Tensor3, Vector};
use proptest::prelude::*;

fn sparse_tensor(dim: usize, max_entries: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec((0..dim, 0..dim, 0..dim, -2i64..=2), 0..=max_entries).prop_map(
        move |entries| {
            let mut t = Tensor3::zeros(dim);
            for (i, j, k, c) in entries {
                t.add_at(i, j, k, &int(c));
            }
            t
        },
    )
}

fn small_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=4).prop_flat_map(|n| sparse_tensor(n, 5).prop_map(Algebra::new))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|v| Vector::from_ints(&v))
}

fn skew(dim: usize) -> impl Strategy<Value = Tensor2> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], dim * (dim - 1) / 2).prop_map(
        move |coeffs| {
            let mut r = Tensor2::zeros(dim);
            let mut c = coeffs.into_iter();
            for i in 0..dim {
                for j in i + 1..dim {
                    let v = int(c.next().unwrap());
                    r.set(j, i, -v.clone());
                    r.set(i, j, v);
                }
            }
            r
        },
    )
}

fn nal_fixture() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(fixtures::nal4()), Just(fixtures::nal6())]
}

fn skew_on_nal() -> impl Strategy<Value = (Algebra, Tensor2)> {
    nal_fixture().prop_flat_map(|a| {
        let n = a.dim();
        (Just(a), skew(n))
    })
}

fn matrices(count: usize, m: usize) -> impl Strategy<Value = Vec<Matrix>> {
    prop::collection::vec(
        prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -1i64..=1], m * m),
        count,
    )
    .prop_map(move |ms| {
        ms.into_iter()
            .map(|v| {
                let rows: Vec<&[i64]> = v.chunks(m).collect();
                Matrix::from_int_rows(&rows)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear(
        (a, x, y, z, s) in small_algebra().prop_flat_map(|a| {
            let n = a.dim();
            (Just(a), vector(n), vector(n), vector(n), -3i64..=3)
        })
    ) {
        let s = int(s);
        let xz = &x.scale(&s) + &z;
        let lhs = a.mul(&xz, &y).unwrap();
        let rhs = &a.mul(&x, &y).unwrap().scale(&s) + &a.mul(&z, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = a.mul(&y, &xz).unwrap();
        let rhs = &a.mul(&y, &x).unwrap().scale(&s) + &a.mul(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_checks_decide_identities_on_elements(
        (a, x, y, z) in small_algebra().prop_flat_map(|a| {
            let n = a.dim();
            (Just(a), vector(n), vector(n), vector(n))
        })
    ) {
        for kind in IdentityKind::ALL {
            if identity::holds(&a, kind) {
                for eq in kind.equations() {
                    let (l, r) = eq.sides(&a, &x, &y, &z);
                    prop_assert_eq!(l, r, "{}", eq.name());
                }
            }
        }
    }

    #[test]
    fn nal_characterization_agrees(a in small_algebra()) {
        let (four, _) = identity::characterize_nal(&a).unwrap();
        prop_assert_eq!(four, identity::holds(&a, IdentityKind::NAL));
    }

    #[test]
    fn coalgebra_duality(t in (1usize..=4).prop_flat_map(|n| sparse_tensor(n, 5))) {
        let c = Comultiplication::new(t);
        let report = coalgebra::duality_dictionary(&c).unwrap();
        prop_assert!(report.all_verdicts_hold());
        prop_assert_eq!(
            Comultiplication::dual_of_algebra(&c.dual_algebra()),
            c.clone()
        );
        coalgebra::l_iff_r_for_nearly_coassociative(&c).unwrap();
    }

    #[test]
    fn representations_match_semidirect_sums(
        (a, l, r, m) in prop_oneof![Just(fixtures::na6()), Just(fixtures::nal4()), Just(fixtures::nal6())]
            .prop_flat_map(|a| {
                let n = a.dim();
                (1usize..=3).prop_flat_map(move |m| {
                    (Just(a.clone()), matrices(n, m), matrices(n, m), Just(m))
                })
            })
    ) {
        let b = Bimodule::new(a, m, l, r).unwrap();
        let rep = bimodule::is_representation(&b).unwrap().is_ok();
        let semi = identity::holds(&bimodule::semidirect_algebra(&b), IdentityKind::NearlyAssociative);
        prop_assert_eq!(rep, semi);
    }

    #[test]
    fn coboundary_delta_is_linear_in_r((a, r1) in skew_on_nal(), s in -2i64..=2) {
        let r2 = Tensor2::bivector(a.dim(), 0, a.dim() - 1);
        let combined = &r1.scale(&int(s)) + &r2;
        let lhs = coboundary::delta_from_r(&a, &combined).unwrap();
        let rhs = &coboundary::delta_from_r(&a, &r1).unwrap().scale(&int(s)).tensor().clone()
            + coboundary::delta_from_r(&a, &r2).unwrap().tensor();
        prop_assert_eq!(lhs.tensor(), &rhs);
    }

    #[test]
    fn skew_tensor_cross_checks((a, r) in skew_on_nal()) {
        let op = coboundary::check_coassociativity_operator(&a, &r).unwrap();
        let d = coboundary::delta_from_r(&a, &r).unwrap();
        prop_assert_eq!(
            op.is_ok(),
            coalgebra::check_coalgebra(&d, CoalgebraKind::NearlyCoassociative).is_ok()
        );
        let clauses = coboundary::check_lr_clauses(&a, &r).unwrap();
        prop_assert_eq!(
            clauses.holds("L-clause"),
            coalgebra::check_coalgebra(&d, CoalgebraKind::LCoalgebra).is_ok()
        );
        let lr = coboundary::lr_tensor(&a, &r).unwrap();
        prop_assert_eq!(
            coboundary::cyclic_r_condition(&a, &r).unwrap().is_ok(),
            lr.lr.is_zero()
        );
        let ybe = coboundary::coboundary_conditions(&a, &r).unwrap();
        prop_assert_eq!(ybe.is_solution, lr.lr.is_zero());
        if let Some(route) = ybe.coproduct_route {
            prop_assert_eq!(route, ybe.coboundary_bialgebra);
        }
    }

    #[test]
    fn r_map_conditions_match_tensor_conditions((a, r) in skew_on_nal()) {
        let report = coboundary::r_map_conditions(&a, &r).unwrap();
        let tensor = coboundary::coboundary_conditions(&a, &r).unwrap();
        for (k, name) in coboundary::R_MAP_CONDITIONS.iter().enumerate() {
            prop_assert_eq!(report.holds(name), tensor.condition(k).holds);
        }
    }

    #[test]
    fn lr_tensor_is_quadratic_in_r((a, r) in skew_on_nal(), s in -3i64..=3) {
        let s = int(s);
        let scaled = coboundary::lr_tensor(&a, &r.scale(&s)).unwrap().lr;
        let expected = coboundary::lr_tensor(&a, &r).unwrap().lr.scale(&(s.clone() * s));
        prop_assert_eq!(scaled, expected);
    }

    #[test]
    fn bialgebra_routes_agree(
        t in sparse_tensor(4, 3),
        base in prop_oneof![Just(0), Just(1)],
    ) {
        let mut t = t;
        if base == 1 {
            for (i, j, k, c) in fixtures::co4().tensor().support() {
                t.add_at(i, j, k, c);
            }
        }
        let bc = BialgebraCandidate::new(fixtures::nal4(), Comultiplication::new(t)).unwrap();
        match double::is_nal_bialgebra(&bc) {
            Ok(_) => {}
            Err(Error::HalvesNotNAL { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn doubles_are_quadratic_with_coinciding_identities() {
    for (a, d) in [
        (fixtures::nal4(), fixtures::co4()),
        (fixtures::nal6(), fixtures::co6()),
    ] {
        let n = a.dim();
        let bc = BialgebraCandidate::new(a, d).unwrap();
        let dbl = double::build_double(&bc);
        assert!(double::halves_embed(&bc, &dbl));
        let form = double::canonical_double_form(n);
        let alg = dbl.into_algebra();
        assert_eq!(alg.dim(), 2 * n);
        assert!(nearbi_core::quadratic::is_quadratic(&alg, &form));
        let report = nearbi_core::quadratic::quadratic_equivalences(&alg, &form).unwrap();
        assert!(report.all_verdicts_hold());
        for kind in [
            IdentityKind::NearlyAssociative,
            IdentityKind::LCommutative,
            IdentityKind::RCommutative,
            IdentityKind::LR,
        ] {
            assert!(identity::holds(&alg, kind), "{}", kind.name());
        }
    }
}

#[test]
fn scalar_literals_are_exact() {
    let s: Scalar = nearbi_core::scalar::parse_scalar("-6/4").unwrap();
    assert_eq!(s, nearbi_core::scalar::ratio(-3, 2));
    assert!(nearbi_core::scalar::parse_scalar("0.5").is_err());
    assert!(nearbi_core::scalar::parse_scalar("1/0").is_err());
}
