use proptest::prelude::*;
use scatter1d::dddp::{self, DddpParams};
use scatter1d::scarf::{self, ScarfParams};
use scatter1d::scatter;
use scatter1d::sweep::{sweep, Engine, Family, SweepSpec};
use scatter1d::transfer::{magnus_transfer, slab_transfer};
use scatter1d::PotentialSpec;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factors_have_unit_determinant(v1 in -50.0..50.0f64, v2 in -50.0..50.0f64, e in 0.0..20.0f64, h in 1e-4..0.2f64) {
        prop_assert!((slab_transfer(v1, e, h).det().re - 1.0).abs() < 1e-12);
        prop_assert!((magnus_transfer(v1, v2, e, h).det().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scarf_closed_form_is_unitary(s in 0.0..3.0f64, q in -4.0..5.0f64, log_e in -8.0..2.0f64) {
        let (r, t) = scarf::probabilities(&ScarfParams::new(s, q).unwrap(), 10f64.powf(log_e)).unwrap();
        prop_assert!((r + t - 1.0).abs() <= 4.0 * f64::EPSILON);
        prop_assert!((0.0..=1.0).contains(&r) && (0.0..=1.0).contains(&t));
    }

    #[test]
    fn scarf_mirror_pair_scatters_alike(s in 0.0..1.0f64, q in -0.5..2.5f64, e in 0.01..5.0f64) {
        let a = scatter::scattering(&PotentialSpec::scarf_ii(s, q).unwrap(), e, 2000).unwrap();
        let b = scatter::scattering(&PotentialSpec::scarf_ii(s, -1.0 - q).unwrap(), e, 2000).unwrap();
        prop_assert!((a.reflection - b.reflection).abs() < 1e-8);
        let exact = scarf::reflection(&ScarfParams::new(s, -1.0 - q).unwrap(), e).unwrap();
        prop_assert!((b.reflection - exact).abs() < 1e-3);
    }

    #[test]
    fn delta_pair_numeric_matches_closed_form(u1 in 0.0..5.0f64, u2 in 0.0..5.0f64, a in 0.01..3.0f64, e in 1e-3..10.0f64) {
        let p = DddpParams { u1, u2, a };
        let exact = dddp::reflection_amplitude(&p, e).unwrap();
        let s = scatter::scattering(&p.to_potential(), e, 10).unwrap();
        prop_assert!((s.r - exact).norm() < 1e-10);
        prop_assert!((s.reflection + s.transmission - 1.0).abs() < 1e-12);
    }

    #[test]
    fn manifold_limit_matches_closed_form(u1a in 0.02..0.98f64, a in 0.1..3.0f64) {
        let p = DddpParams::at_hbs(u1a / a, a).unwrap();
        let z = scatter::reflection_at_zero(&p.to_potential(), 10).unwrap();
        prop_assert!((z.reflection - dddp::r0_at_hbs(p.u1, a).unwrap()).abs() < 1e-4);
    }

    #[test]
    fn finite_width_families_are_unitary(u1 in 0.0..30.0f64, u2 in 0.0..30.0f64, w in 0.05..3.0f64, a in 0.0..3.0f64, e in 1e-4..10.0f64) {
        for p in [
            PotentialSpec::square_well_barrier(u1, u2, w, a).unwrap(),
            PotentialSpec::sin_squared_well_barrier(u1, u2, w, a).unwrap(),
        ] {
            let s = scatter::scattering(&p, e, 400).unwrap();
            prop_assert!((s.reflection + s.transmission - 1.0).abs() < 1e-6);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn analytic_sweeps_survive_numeric_spot_checks(q in -0.5..3.0f64, s in 0.0..1.0f64, u1 in 0.1..3.0f64, a in 0.1..2.0f64, u2 in 0.1..3.0f64) {
        let scarf = SweepSpec::new(Family::ScarfII, "q", (q, q + 0.1), 2).param("s", s);
        let dddp = SweepSpec::new(Family::DeltaPair, "u1", (u1, u1 + 0.1), 2).param("a", a).param("u2", u2);
        for (spec, tol) in [(scarf, 1e-3), (dddp, 1e-8)] {
            let exact = sweep(&spec.clone().engine(Engine::Analytic)).unwrap();
            let numeric = sweep(&spec).unwrap();
            for (x, y) in exact.records.iter().zip(&numeric.records) {
                prop_assert!((x.reflection - y.reflection).abs() < tol);
            }
        }
    }
}
