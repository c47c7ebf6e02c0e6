//! End-to-end audit of the soliton's parameter choice.
//!
//! Two parameterizations are evaluated side by side. The published one,
//! [`paper_params`], uses the bracket `1 + (3/4)β` in both `r0` and `c2`;
//! it reproduces `L_z = ħ/2` for any constants (the bracket cancels) but
//! gives a field energy of `(1 + 3β/8)/(1 + 3β/4)·mc²`. [`calibrate`]
//! solves `U = mc²` and `L_z = ħ/2` simultaneously, which yields the
//! bracket `1 + (3/8)β`. The report carries both results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clifford::{self, Multivector};
use crate::differential::{self, RadialEquation, StencilSpec};
use crate::error::{Error, Result};
use crate::fields::{self, paper_params, GaugeData, PhysicalConstants, SolitonParams};
use crate::observables::{self, ObservableReport, QuadratureSpec};

/// Closed-form and Newton calibrations must agree to this relative tolerance.
pub const CALIBRATION_AGREEMENT: f64 = 1e-10;

const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 100;

/// `(r0, c2)` from `U = mc²` and `L_z = ħ/2` by elimination:
/// `c2 = 3ħc r0/(4e)` and `r0 = (e²/2mc²)(1 + (3/8)β)`.
pub fn calibrate_closed_form(k: &PhysicalConstants) -> (f64, f64) {
    let r0 = k.classical_radius() * (1.0 + 0.375 * k.beta());
    let c2 = 0.75 * k.hbar * k.c * r0 / k.e;
    (r0, c2)
}

/// Log residuals `(ln(U/mc²), ln(L_z/(ħ/2)))` at `(ln r0, ln c2)` with `c1 = -e`,
/// and their Jacobian.
fn log_residuals(k: &PhysicalConstants, x: f64, y: f64) -> ([f64; 2], [[f64; 2]; 2]) {
    let (r0, c2) = (x.exp(), y.exp());
    let coulomb = k.e * k.e / (2.0 * r0);
    let dipole = c2 * c2 / (3.0 * r0 * r0 * r0);
    let u = coulomb + dipole;
    let f1 = u.ln() - k.rest_energy().ln();
    // L_z = 2 e c2 / (3 c r0)
    let f2 = (2.0 * k.e / (3.0 * k.c)).ln() + y - x - (0.5 * k.hbar).ln();
    let d1x = (-coulomb - 3.0 * dipole) / u;
    let d1y = 2.0 * dipole / u;
    ([f1, f2], [[d1x, d1y], [-1.0, 1.0]])
}

/// Damped Newton on `(ln r0, ln c2)` starting from the classical radius and
/// the bracket-free dipole moment.
pub fn calibrate_newton(k: &PhysicalConstants) -> Result<(f64, f64)> {
    let mut x = k.classical_radius().ln();
    let mut y = (0.375 * k.e * k.hbar / (k.m * k.c)).ln();
    let norm = |f: [f64; 2]| f[0].abs().max(f[1].abs());
    let (mut f, mut jac) = log_residuals(k, x, y);
    for _ in 0..NEWTON_MAX_ITER {
        if norm(f) <= NEWTON_TOL {
            return Ok((x.exp(), y.exp()));
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if det == 0.0 || !det.is_finite() {
            return Err(Error::Internal("singular Jacobian in calibration".into()));
        }
        let dx = -(jac[1][1] * f[0] - jac[0][1] * f[1]) / det;
        let dy = -(-jac[1][0] * f[0] + jac[0][0] * f[1]) / det;
        let mut step = 1.0;
        loop {
            let (nx, ny) = (x + step * dx, y + step * dy);
            let (nf, njac) = log_residuals(k, nx, ny);
            if norm(nf) < norm(f) || step < 1e-6 {
                (x, y, f, jac) = (nx, ny, nf, njac);
                break;
            }
            step *= 0.5;
        }
    }
    if norm(f) <= NEWTON_TOL {
        Ok((x.exp(), y.exp()))
    } else {
        Err(Error::Internal(format!("calibration Newton iteration did not converge (residual {:e})", norm(f))))
    }
}

/// The unique `(r0, c2)` with `c1 = -e` giving `U = mc²` and `L_z = ħ/2`,
/// solved in closed form and cross-checked by Newton iteration.
pub fn calibrate(k: &PhysicalConstants) -> Result<SolitonParams> {
    let (r0, c2) = calibrate_closed_form(k);
    let (r0_n, c2_n) = calibrate_newton(k)?;
    let rel = |a: f64, b: f64| (a - b).abs() / a.abs();
    if rel(r0, r0_n) > CALIBRATION_AGREEMENT || rel(c2, c2_n) > CALIBRATION_AGREEMENT {
        return Err(Error::Internal(format!(
            "closed-form and Newton calibrations disagree: r0 {r0:e} vs {r0_n:e}, c2 {c2:e} vs {c2_n:e}"
        )));
    }
    SolitonParams::new(-k.e, c2, r0, [0.0, 0.0, 1.0], 1.0, k.c)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub params_paper: SolitonParams,
    pub params_calibrated: SolitonParams,
    /// `U/mc²` for the published parameters, from the closed form.
    pub energy_ratio_paper: f64,
    /// `|L_z|/(ħ/2)` for the published parameters, from the closed form.
    pub lz_ratio_paper: f64,
    pub energy_ratio_calibrated: f64,
    pub lz_ratio_calibrated: f64,
    pub bracket_paper: f64,
    /// `r0(calibrated)` over the classical radius.
    pub bracket_calibrated: f64,
    /// Relative change of `r0`, calibrated against published.
    pub r0_deviation: f64,
    /// Relative change of `c2`, calibrated against published.
    pub c2_deviation: f64,
}

pub fn calibration_result(k: &PhysicalConstants) -> Result<CalibrationResult> {
    let paper = paper_params(k);
    let cal = calibrate(k)?;
    let mc2 = k.rest_energy();
    let half_hbar = 0.5 * k.hbar;
    Ok(CalibrationResult {
        params_paper: paper,
        params_calibrated: cal,
        energy_ratio_paper: observables::closed_energy(&paper) / mc2,
        lz_ratio_paper: observables::closed_lz(&paper).abs() / half_hbar,
        energy_ratio_calibrated: observables::closed_energy(&cal) / mc2,
        lz_ratio_calibrated: observables::closed_lz(&cal).abs() / half_hbar,
        bracket_paper: paper.r0 / k.classical_radius(),
        bracket_calibrated: cal.r0 / k.classical_radius(),
        r0_deviation: cal.r0 / paper.r0 - 1.0,
        c2_deviation: cal.c2 / paper.c2 - 1.0,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub got: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    /// `|got - expected| <= tol·|expected|`.
    pub fn relative(name: &str, expected: f64, got: f64, tol: f64) -> Self {
        let pass = (got - expected).abs() <= tol * expected.abs();
        Self { name: name.into(), expected, got, tol, pass }
    }

    /// `|got - expected| <= tol`.
    pub fn absolute(name: &str, expected: f64, got: f64, tol: f64) -> Self {
        let pass = (got - expected).abs() <= tol;
        Self { name: name.into(), expected, got, tol, pass }
    }

    fn failed(name: &str, expected: f64, tol: f64) -> Self {
        Self { name: name.into(), expected, got: f64::NAN, tol, pass: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportSettings {
    pub seed: u64,
    /// Step as a fraction of `r0`.
    pub h_over_r0: f64,
    pub order: u32,
    pub constraint_points: usize,
    pub algebra_pairs: usize,
}

impl Default for ReportSettings {
    fn default() -> Self {
        Self { seed: 0, h_over_r0: 0.01, order: 2, constraint_points: 10_000, algebra_pairs: 1000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub constants: PhysicalConstants,
    pub params_paper: SolitonParams,
    pub params_calibrated: SolitonParams,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params_custom: Option<SolitonParams>,
    pub calibration: CalibrationResult,
    pub observables_paper: Option<ObservableReport>,
    pub observables_calibrated: Option<ObservableReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub observables_custom: Option<ObservableReport>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn random_multivector(rng: &mut ChaCha8Rng) -> Multivector {
    let mut c = [0.0; clifford::BLADES];
    for v in &mut c {
        *v = rng.gen_range(-1.0..1.0);
    }
    Multivector::from_coeffs(c)
}

fn algebra_checks(rng: &mut ChaCha8Rng, pairs: usize) -> Vec<Check> {
    let mut anti = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let (a, b) = (Multivector::gamma_up(mu), Multivector::gamma_up(nu));
            let sym = a * b + b * a;
            let eta = clifford::Metric::eta(mu, nu);
            anti = anti.max((sym - Multivector::scalar(2.0 * eta)).max_abs());
        }
    }
    let g5 = Multivector::pseudoscalar();
    let i_hat = Multivector::sigma(1) * Multivector::sigma(2) * Multivector::sigma(3);
    let mut rev = 0.0f64;
    for _ in 0..pairs {
        let a = random_multivector(rng);
        let b = random_multivector(rng);
        let lhs = (a * b).reversion();
        let rhs = b.reversion() * a.reversion();
        rev = rev.max((lhs - rhs).max_abs() / lhs.max_abs().max(f64::MIN_POSITIVE));
    }
    vec![
        Check::absolute("algebra.anticommutator", 0.0, anti, 0.0),
        Check::absolute("algebra.pseudoscalar_square", -1.0, (g5 * g5).scalar_part(), 0.0),
        Check::absolute("algebra.i_hat_is_gamma5", 0.0, (i_hat - g5).max_abs(), 0.0),
        Check::absolute("algebra.reversion_anti_automorphism", 0.0, rev, 1e-12),
    ]
}

/// Random point with `r/r0` drawn from `r_range`, uniform in direction.
fn random_point(rng: &mut ChaCha8Rng, r0: f64, r_range: (f64, f64)) -> [f64; 3] {
    let r = rng.gen_range(r_range.0..r_range.1) * r0;
    let mu: f64 = rng.gen_range(-1.0..1.0);
    let az: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let st = (1.0 - mu * mu).sqrt();
    [r * st * az.cos(), r * st * az.sin(), r * mu]
}

fn constraint_checks(p: &SolitonParams, rng: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let g = GaugeData::trivial();
    let (mut p4, mut ab) = (0.0f64, 0.0f64);
    let mut count = 0;
    while count < n {
        let x = random_point(rng, p.r0, (0.1, 10.0));
        if fields::on_shell(crate::vec3::norm(x), p.r0) {
            continue;
        }
        let w = fields::omega(x, p, &g)?;
        p4 = p4.max(fields::constraint_check(&w)?.p4.abs());
        let a = fields::potential_a(x, p)?;
        let b = fields::potential_b(x, &g)?;
        ab = ab.max(clifford::vector_dot(&a, &b)?.max_abs());
        count += 1;
    }
    Ok(vec![
        Check::absolute("constraint.pseudoscalar_part", 0.0, p4, 0.0),
        Check::absolute("constraint.a_dot_b", 0.0, ab, 0.0),
    ])
}

/// Sample points for the order checks: five outside the shell, two inside.
pub fn order_sample_points(rng: &mut ChaCha8Rng, p: &SolitonParams, s: &StencilSpec) -> (Vec<[f64; 3]>, Vec<[f64; 3]>) {
    let margin = 2.0 * s.reach() / p.r0;
    let outside = (0..5).map(|_| random_point(rng, p.r0, (1.0 + margin.max(0.2), 4.0))).collect();
    let inside = (0..2).map(|_| random_point(rng, p.r0, (margin.max(0.2), 1.0 - margin.max(0.2)))).collect();
    (outside, inside)
}

fn residual_checks(p: &SolitonParams, s: &StencilSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let (outside, inside) = order_sample_points(rng, p, s);
    let expected = s.order as f64;
    let mut checks = Vec::new();
    let mut interior = 0.0f64;
    for x in &inside {
        interior = interior.max(differential::free_field_residual(p, *x, s)?);
        interior = interior.max(differential::maxwell3_residual(p, *x, s)?.norm());
    }
    let mut worst_free = expected;
    let mut worst_m3 = expected;
    let worse = |cur: f64, new: f64| if (new - expected).abs() > (cur - expected).abs() { new } else { cur };
    for x in &outside {
        let free = differential::measured_order(
            differential::free_field_residual(p, *x, s)?,
            differential::free_field_residual(p, *x, &s.halved())?,
        );
        let m3 = differential::measured_order(
            differential::maxwell3_residual(p, *x, s)?.norm(),
            differential::maxwell3_residual(p, *x, &s.halved())?.norm(),
        );
        worst_free = worse(worst_free, if free.is_finite() { free } else { f64::NAN });
        worst_m3 = worse(worst_m3, if m3.is_finite() { m3 } else { f64::NAN });
    }
    checks.push(Check::absolute("residual.free_field_order", expected, worst_free, 0.3));
    checks.push(Check::absolute("residual.maxwell3_order", expected, worst_m3, 0.3));
    checks.push(Check::absolute("residual.interior", 0.0, interior, 0.0));
    Ok(checks)
}

fn radial_ode_checks(p: &SolitonParams) -> Result<Vec<Check>> {
    let mut worst = 0.0f64;
    for f in [1.5, 2.0, 5.0, 10.0] {
        let r = f * p.r0;
        for eq in [RadialEquation::A0, RadialEquation::Phi] {
            // relative to the size of the second-derivative term
            let scale = match eq {
                RadialEquation::A0 => (p.c1 / r.powi(3)).abs(),
                RadialEquation::Phi => (p.c2 / r.powi(5)).abs(),
            };
            let res = differential::radial_ode_residual(eq, r, p)?;
            worst = worst.max(if scale > 0.0 { res.abs() / scale } else { res.abs() });
        }
    }
    Ok(vec![Check::absolute("radial_ode.residual", 0.0, worst, 1e-12)])
}

fn observable_checks(tag: &str, k: &PhysicalConstants, p: &SolitonParams, obs: &ObservableReport) -> Vec<Check> {
    let mut checks = vec![
        Check::relative(&format!("{tag}.charge"), observables::closed_charge(p), obs.charge, 1e-10),
        Check::relative(&format!("{tag}.energy"), observables::closed_energy(p), obs.energy, 1e-8),
        Check::relative(&format!("{tag}.lz"), observables::closed_lz(p), obs.lz, 1e-8),
    ];
    let transverse = crate::vec3::norm(crate::vec3::sub(obs.angular_momentum, crate::vec3::scale(p.axis, obs.lz)));
    checks.push(Check::absolute(
        &format!("{tag}.l_transverse"),
        0.0,
        transverse / obs.lz.abs().max(f64::MIN_POSITIVE),
        1e-8,
    ));
    checks.push(Check::relative(&format!("{tag}.charge_equals_e"), k.e, obs.charge, 1e-10));
    checks
}

/// Runs every check for the constants `k` and quadrature `q`. Sub-check
/// failures are recorded in the report rather than returned as errors.
pub fn run_report(
    k: &PhysicalConstants,
    q: &QuadratureSpec,
    settings: &ReportSettings,
    custom: Option<SolitonParams>,
) -> Result<Report> {
    q.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut checks = algebra_checks(&mut rng, settings.algebra_pairs);

    let cal_result = calibration_result(k)?;
    let (paper, cal) = (cal_result.params_paper, cal_result.params_calibrated);
    let mc2 = k.rest_energy();
    let half_hbar = 0.5 * k.hbar;
    let beta = k.beta();

    let primary = custom.unwrap_or(paper);
    match constraint_checks(&primary, &mut rng, settings.constraint_points) {
        Ok(c) => checks.extend(c),
        Err(_) => checks.push(Check::failed("constraint.pseudoscalar_part", 0.0, 0.0)),
    }
    let stencil =
        StencilSpec::new(settings.h_over_r0 * primary.r0, settings.order, differential::StencilMode::Spatial)?;
    match residual_checks(&primary, &stencil, &mut rng) {
        Ok(c) => checks.extend(c),
        Err(_) => checks.push(Check::failed("residual.free_field_order", settings.order as f64, 0.3)),
    }
    match radial_ode_checks(&primary) {
        Ok(c) => checks.extend(c),
        Err(_) => checks.push(Check::failed("radial_ode.residual", 0.0, 1e-12)),
    }

    let mut run_obs = |tag: &str, p: &SolitonParams| match observables::observable_report(p, q) {
        Ok(o) => {
            checks.extend(observable_checks(tag, k, p, &o));
            Some(o)
        }
        Err(_) => {
            checks.push(Check::failed(&format!("{tag}.observables"), 0.0, q.rel_tol));
            None
        }
    };
    let observables_paper = run_obs("paper", &paper);
    let observables_calibrated = run_obs("calibrated", &cal);
    let observables_custom = custom.and_then(|p| run_obs("custom", &p));

    if let Some(o) = &observables_paper {
        checks.push(Check::relative("paper.lz_is_half_hbar", half_hbar, o.lz.abs(), 1e-10));
        checks.push(Check::relative(
            "paper.energy_ratio",
            (1.0 + 0.375 * beta) / (1.0 + 0.75 * beta),
            o.energy / mc2,
            1e-8,
        ));
    }
    if let Some(o) = &observables_calibrated {
        checks.push(Check::relative("calibrated.energy_is_mc2", 1.0, o.energy / mc2, 1e-10));
        checks.push(Check::relative("calibrated.lz_is_half_hbar", half_hbar, o.lz.abs(), 1e-10));
    }
    checks.push(Check::relative("calibration.bracket", 1.0 + 0.375 * beta, cal_result.bracket_calibrated, 1e-12));
    checks.push(Check::relative("calibration.lz_ratio_paper", 1.0, cal_result.lz_ratio_paper, 1e-10));

    let pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        constants: *k,
        params_paper: paper,
        params_calibrated: cal,
        params_custom: custom,
        calibration: cal_result,
        observables_paper,
        observables_calibrated,
        observables_custom,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_calibration() {
        let k = PhysicalConstants::dimensionless(2.0).unwrap();
        let p = calibrate(&k).unwrap();
        assert!((p.r0 - 1.25).abs() < 1e-14);
        assert!((p.c2 - 1.875).abs() < 1e-14);
        assert_eq!(p.c1, -1.0);
        assert!((observables::closed_energy(&p) - 1.0).abs() < 1e-14);
        assert!((observables::closed_lz(&p) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn newton_matches_closed_form() {
        for k in [
            PhysicalConstants::dimensionless(2.0).unwrap(),
            PhysicalConstants::dimensionless(1e-4).unwrap(),
            PhysicalConstants::dimensionless(300.0).unwrap(),
            PhysicalConstants::physical(),
        ] {
            let (r0, c2) = calibrate_closed_form(&k);
            let (r0n, c2n) = calibrate_newton(&k).unwrap();
            assert!((r0 - r0n).abs() <= 1e-11 * r0, "{r0} {r0n}");
            assert!((c2 - c2n).abs() <= 1e-11 * c2, "{c2} {c2n}");
        }
    }

    #[test]
    fn classical_limit() {
        let k = PhysicalConstants::dimensionless(1e-8).unwrap();
        let p = calibrate(&k).unwrap();
        assert!((p.r0 - 0.5).abs() < 1e-12);
        assert!(p.c2 < 1e-8);
    }

    #[test]
    fn calibration_ratios() {
        let k = PhysicalConstants::dimensionless(2.0).unwrap();
        let c = calibration_result(&k).unwrap();
        assert!((c.energy_ratio_paper - 0.625).abs() < 1e-15);
        assert!((c.lz_ratio_paper - 1.0).abs() < 1e-15);
        assert!((c.bracket_paper - 4.0).abs() < 1e-15);
        assert!((c.bracket_calibrated - 2.5).abs() < 1e-15);
        assert!((c.r0_deviation + 0.375).abs() < 1e-15);

        let phys = calibration_result(&PhysicalConstants::physical()).unwrap();
        assert!((phys.energy_ratio_paper - 0.5).abs() < 1e-4);
        assert!((phys.lz_ratio_paper - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scale_consistency() {
        // e² → κe², ħ → κħ with c = 1 keeps β; r0 scales by κ
        let base = PhysicalConstants::new(1.3, 0.7, 2.1, 1.0).unwrap();
        let (r0, c2) = calibrate_closed_form(&base);
        for kappa in [0.5, 2.0, 7.0] {
            let k = PhysicalConstants::new(base.e * f64::sqrt(kappa), base.m, base.hbar * kappa, 1.0).unwrap();
            assert!((k.beta() - base.beta()).abs() < 1e-12 * base.beta());
            let (r0k, c2k) = calibrate_closed_form(&k);
            assert!((r0k / r0 - kappa).abs() < 1e-12 * kappa);
            assert!((c2k / c2 - kappa.powf(1.5)).abs() < 1e-12 * kappa.powf(1.5));
        }
    }

    #[test]
    fn toy_report_passes() {
        let k = PhysicalConstants::dimensionless(2.0).unwrap();
        let settings = ReportSettings { constraint_points: 200, algebra_pairs: 50, ..Default::default() };
        let report = run_report(&k, &QuadratureSpec::default(), &settings, None).unwrap();
        for c in &report.checks {
            assert!(c.pass, "{c:?}");
        }
        assert!(report.pass);
        let json = report.to_json();
        assert!(json.contains("\"params_calibrated\""));
        assert!(!json.contains("params_custom"));
    }
}
