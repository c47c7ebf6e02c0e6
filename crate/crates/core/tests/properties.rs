use emsoliton::clifford::{self, Multivector, RelativeSplit, BLADES};
use emsoliton::differential::{self, StencilMode, StencilSpec};
use emsoliton::fields::{self, paper_params, GaugeData, PhysicalConstants, SolitonParams};
use emsoliton::observables::{self, QuadratureSpec};
use emsoliton::vec3::{self, Vec3};
use emsoliton::verify;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn multivector() -> impl Strategy<Value = Multivector> {
    proptest::array::uniform16(coeff()).prop_map(Multivector::from_coeffs)
}

fn vec3_strategy() -> impl Strategy<Value = Vec3> {
    proptest::array::uniform3(-5.0..5.0f64)
}

fn unit_vector() -> impl Strategy<Value = Vec3> {
    vec3_strategy().prop_filter_map("non-zero", vec3::normalize)
}

/// Log-uniform constants over a few decades, so β spans ~1e-8..1e8.
fn constants() -> impl Strategy<Value = PhysicalConstants> {
    (-1.0..1.0f64, -1.0..1.0f64, -2.0..2.0f64, -1.0..1.0f64).prop_map(|(e, m, h, c)| {
        PhysicalConstants::new(10f64.powf(e), 10f64.powf(m), 10f64.powf(h), 10f64.powf(c)).unwrap()
    })
}

fn point_off_shell(r0: f64) -> impl Strategy<Value = Vec3> {
    (unit_vector(), 0.05..12.0f64)
        .prop_filter("off shell", |(_, f)| (f - 1.0).abs() > 1e-6)
        .prop_map(move |(d, f)| vec3::scale(d, f * r0))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

/// Direct 3-vector Lorentz force: power `J·E`, force `cρE + J×H`.
fn lorentz_oracle(rho: f64, j: Vec3, e: Vec3, h: Vec3, c: f64) -> (f64, Vec3) {
    (vec3::dot(j, e), vec3::add(vec3::scale(e, c * rho), vec3::cross(j, h)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn associativity(a in multivector(), b in multivector(), c in multivector()) {
        let lhs = (a * b) * c;
        let rhs = a * (b * c);
        let scale = lhs.max_abs().max(1.0);
        for i in 0..BLADES {
            prop_assert!((lhs[i] - rhs[i]).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn grade_decomposition_is_complete(a in multivector()) {
        let mut sum = Multivector::ZERO;
        for k in 0..=4 {
            sum += a.grade(k).unwrap();
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn reversion_is_an_involution(a in multivector()) {
        prop_assert_eq!(a.reversion().reversion(), a);
    }

    #[test]
    fn split_round_trip(e in vec3_strategy(), h in vec3_strategy()) {
        let f = clifford::relative_join(&RelativeSplit { e, h });
        prop_assert!(f.has_only_grades(&[2]));
        let back = clifford::relative_split(&f).unwrap();
        prop_assert_eq!(clifford::relative_join(&back), f);
        prop_assert_eq!(back, RelativeSplit { e, h });
    }

    #[test]
    fn bivector_split_join(c in proptest::array::uniform6(coeff())) {
        let masks = [3usize, 5, 6, 9, 10, 12];
        let mut f = Multivector::ZERO;
        for (m, v) in masks.iter().zip(c) {
            f += Multivector::blade(*m, v);
        }
        let back = clifford::relative_join(&clifford::relative_split(&f).unwrap());
        for i in 0..BLADES {
            prop_assert!((back[i] - f[i]).abs() <= 1e-14 * f.max_abs());
        }
    }

    #[test]
    fn lorentz_split_matches_direct_formula(
        rho in -3.0..3.0f64, j in vec3_strategy(), e in vec3_strategy(), h in vec3_strategy(), c in 0.1..10.0f64,
    ) {
        let f = clifford::relative_join(&RelativeSplit { e, h });
        let k = observables::lorentz_force_density(&observables::current(rho, j, c), &f).unwrap();
        let (power, force) = observables::lorentz_split(&k).unwrap();
        let (p_ref, f_ref) = lorentz_oracle(rho, j, e, h, c);
        let scale = 1.0 + vec3::norm(f_ref).max(p_ref.abs());
        prop_assert!((power - p_ref).abs() <= 1e-12 * scale);
        for i in 0..3 {
            prop_assert!((force[i] - f_ref[i]).abs() <= 1e-12 * scale, "{:?} vs {:?}", force, f_ref);
        }
    }

    #[test]
    fn clifford_energy_momentum(x in point_off_shell(2.0)) {
        let p = paper_params(&PhysicalConstants::dimensionless(2.0).unwrap());
        let f = fields::faraday(x, &p).unwrap();
        let (u, s) = observables::energy_momentum_clifford(&f, p.c).unwrap();
        let u_ref = observables::energy_density(x, &p).unwrap();
        let s_ref = observables::poynting(x, &p).unwrap();
        prop_assert!(close(u, u_ref, 1e-12) || u_ref == 0.0 && u == 0.0);
        for i in 0..3 {
            prop_assert!((s[i] - s_ref[i]).abs() <= 1e-12 * (u_ref + 1e-300));
        }
    }

    #[test]
    fn constraint_scalar_is_a_squared(k in constants(), d in unit_vector(), f in 0.05..12.0f64) {
        prop_assume!((f - 1.0).abs() > 1e-6);
        let p = paper_params(&k);
        let x = vec3::scale(d, f * p.r0);
        let w = fields::omega(x, &p, &GaugeData::trivial()).unwrap();
        let cs = fields::constraint_check(&w).unwrap();
        prop_assert_eq!(cs.p4, 0.0);
        let a = fields::potential_a(x, &p).unwrap();
        let a2 = clifford::vector_dot(&a, &a).unwrap().scalar_part();
        prop_assert!(close(cs.s, a2, 1e-13) || cs.s == a2);
    }

    #[test]
    fn spatial_potential_orthogonal_to_r(k in constants(), d in unit_vector(), f in 0.05..12.0f64) {
        let p = paper_params(&k);
        let x = vec3::scale(d, f * p.r0);
        let a = fields::potential_a(x, &p).unwrap();
        let (_, spatial) = clifford::relative_vector_split(&a).unwrap();
        prop_assert!(vec3::dot(spatial, x).abs() <= 1e-15 * vec3::norm(spatial) * vec3::norm(x));
    }

    #[test]
    fn paper_params_homogeneity(k in constants(), kappa in 0.1..10.0f64) {
        let scaled = PhysicalConstants::new(kappa * k.e, k.m, kappa * kappa * k.hbar, k.c).unwrap();
        prop_assert!(close(scaled.beta(), k.beta(), 1e-12));
        let (p, q) = (paper_params(&k), paper_params(&scaled));
        prop_assert!(close(q.r0 / p.r0, kappa * kappa, 1e-12));
    }

    #[test]
    fn poynting_is_azimuthal(k in constants(), axis in unit_vector(), x in point_off_shell(1.0)) {
        let p = paper_params(&k).with_axis(axis).unwrap();
        let x = vec3::scale(x, p.r0);
        let s = observables::poynting(x, &p).unwrap();
        let r = vec3::norm(x);
        let rhat = vec3::scale(x, 1.0 / r);
        let theta_dir = vec3::sub(vec3::scale(rhat, vec3::dot(rhat, axis)), axis);
        let tol = 1e-14 * vec3::norm(s);
        prop_assert!(vec3::dot(s, rhat).abs() <= tol);
        prop_assert!(vec3::dot(s, theta_dir).abs() <= tol * vec3::norm(theta_dir).max(1.0));
    }

    #[test]
    fn lz_closed_form_is_half_hbar(k in constants()) {
        prop_assert!(close(observables::closed_lz(&paper_params(&k)), 0.5 * k.hbar, 1e-14));
    }

    #[test]
    fn calibration_newton_agrees(k in constants()) {
        let (r0, c2) = verify::calibrate_closed_form(&k);
        let (r0n, c2n) = verify::calibrate_newton(&k).unwrap();
        prop_assert!(close(r0, r0n, 1e-10));
        prop_assert!(close(c2, c2n, 1e-10));
        let cal = verify::calibrate(&k).unwrap();
        prop_assert!(close(observables::closed_energy(&cal), k.rest_energy(), 1e-12));
        prop_assert!(close(observables::closed_lz(&cal), 0.5 * k.hbar, 1e-12));
    }

    #[test]
    fn calibration_scale_consistency(k in constants(), kappa in 0.1..10.0f64) {
        // e² → κe² and ħc → κħc keep β, so r0 = e²(1 + 3β/8)/(2mc²) scales by κ
        let scaled = PhysicalConstants::new(k.e * kappa.sqrt(), k.m, k.hbar * kappa, k.c).unwrap();
        let (r0, _) = verify::calibrate_closed_form(&k);
        let (r0s, _) = verify::calibrate_closed_form(&scaled);
        prop_assert!(close(r0s / r0, kappa, 1e-12));
        let (r0n, _) = verify::calibrate_newton(&scaled).unwrap();
        prop_assert!(close(r0n / r0, kappa, 1e-10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn observables_match_closed_forms(
        c1 in -3.0..3.0f64, c2 in -3.0..3.0f64, r0 in 0.1..5.0f64, c in 0.2..5.0f64, axis in unit_vector(),
    ) {
        prop_assume!(c1.abs() > 1e-3 && c2.abs() > 1e-3);
        let p = SolitonParams::new(c1, c2, r0, axis, 1.0, c).unwrap();
        let q = QuadratureSpec::default();
        let rep = observables::observable_report(&p, &q).unwrap();
        prop_assert!(rep.charge_rel_dev.unwrap() < q.rel_tol);
        prop_assert!(rep.energy_rel_dev.unwrap() < q.rel_tol);
        prop_assert!(rep.lz_rel_dev.unwrap() < q.rel_tol);
        let transverse = vec3::norm(vec3::sub(rep.angular_momentum, vec3::scale(p.axis, rep.lz)));
        prop_assert!(transverse <= q.rel_tol * rep.lz.abs());
    }

    #[test]
    fn quadrature_doubling_is_stable(k in constants()) {
        let p = paper_params(&k);
        let q = QuadratureSpec::default();
        let (u, u2) = (observables::total_energy(&p, &q).unwrap(), observables::total_energy(&p, &q.doubled()).unwrap());
        prop_assert!(close(u, u2, q.rel_tol));
        let l = observables::total_angular_momentum(&p, &q).unwrap()[2];
        let l2 = observables::total_angular_momentum(&p, &q.doubled()).unwrap()[2];
        prop_assert!(close(l, l2, q.rel_tol));
    }

    #[test]
    fn angular_momentum_axis_covariance(axis in unit_vector(), angle in 0.0..6.3f64, k in constants()) {
        let p = paper_params(&k).with_axis(axis).unwrap();
        let rot_axis = vec3::orthogonal_unit(axis);
        let rot = vec3::rotation(vec3::add(rot_axis, vec3::scale(axis, 0.3)), angle);
        let rotated = p.with_axis(vec3::mat_apply(&rot, axis)).unwrap();
        let q = QuadratureSpec::default();
        let l = observables::total_angular_momentum(&p, &q).unwrap();
        let l_rot = observables::total_angular_momentum(&rotated, &q).unwrap();
        let expected = vec3::mat_apply(&rot, l);
        let scale = vec3::norm(l);
        for i in 0..3 {
            prop_assert!((l_rot[i] - expected[i]).abs() <= 1e-8 * scale, "{:?} vs {:?}", l_rot, expected);
        }
    }

    #[test]
    fn convergence_order(order in prop_oneof![Just(2u32), Just(4u32)], x in point_off_shell(1.0), k in constants()) {
        let r = vec3::norm(x);
        prop_assume!(r > 1.2 && r < 6.0);
        let p = paper_params(&k);
        let x = vec3::scale(x, p.r0);
        let s = StencilSpec::new(0.01 * p.r0, order, StencilMode::Spatial).unwrap();
        let free = differential::measured_order(
            differential::free_field_residual(&p, x, &s).unwrap(),
            differential::free_field_residual(&p, x, &s.halved()).unwrap(),
        );
        let m3 = differential::measured_order(
            differential::maxwell3_residual(&p, x, &s).unwrap().norm(),
            differential::maxwell3_residual(&p, x, &s.halved()).unwrap().norm(),
        );
        prop_assert!((free - order as f64).abs() <= 0.3, "free {}", free);
        prop_assert!((m3 - order as f64).abs() <= 0.3, "maxwell3 {}", m3);
    }

    #[test]
    fn interior_residuals_vanish(x in point_off_shell(1.0), k in constants()) {
        let r = vec3::norm(x);
        prop_assume!(r > 0.1 && r < 0.9);
        let p = paper_params(&k);
        let x = vec3::scale(x, p.r0);
        let s = StencilSpec::new(0.01 * p.r0, 2, StencilMode::Spatial).unwrap();
        prop_assert_eq!(differential::free_field_residual(&p, x, &s).unwrap(), 0.0);
        prop_assert_eq!(differential::maxwell3_residual(&p, x, &s).unwrap().norm(), 0.0);
    }
}
