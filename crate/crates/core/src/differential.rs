//! Finite-difference Dirac operator `∂ = γ^µ ∂_µ` and residual checks of
//! the field equations away from the shell, plus one-sided jump data at
//! the shell itself.
//!
//! Stencils never straddle a discontinuity: a stencil of reach `order·h`
//! that would touch the origin or the shell is rejected with
//! [`Error::StencilCollision`] instead of producing a spurious O(1) residual.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::fields::{self, on_shell, SolitonParams};
use crate::vec3::{self, Vec3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StencilMode {
    /// Includes the `γ^0 ∂_0` term, identically zero for static fields.
    Spacetime,
    Spatial,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StencilSpec {
    pub h: f64,
    pub order: u32,
    pub mode: StencilMode,
}

impl StencilSpec {
    pub fn new(h: f64, order: u32, mode: StencilMode) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidParameter(format!("stencil step must be > 0, got {h}")));
        }
        if order != 2 && order != 4 {
            return Err(Error::InvalidParameter(format!("stencil order must be 2 or 4, got {order}")));
        }
        Ok(Self { h, order, mode })
    }

    /// Same stencil with step `h/2`.
    pub fn halved(&self) -> Self {
        Self { h: 0.5 * self.h, ..*self }
    }

    /// Safety margin around interfaces.
    pub fn reach(&self) -> f64 {
        self.order as f64 * self.h
    }

    fn check(&self, x: Vec3, interfaces: &[f64]) -> Result<()> {
        let r = vec3::norm(x);
        let reach = self.reach();
        if r < reach {
            return Err(Error::StencilCollision { r, reach, interface: 0.0 });
        }
        for &iface in interfaces {
            if (r - iface).abs() < reach {
                return Err(Error::StencilCollision { r, reach, interface: iface });
            }
        }
        Ok(())
    }

    /// Central difference of an array-valued function along `axis`.
    fn partial<const N: usize>(&self, f: &impl Fn(Vec3) -> Result<[f64; N]>, x: Vec3, axis: usize) -> Result<[f64; N]> {
        let at = |k: f64| {
            let mut y = x;
            y[axis] += k * self.h;
            f(y)
        };
        let mut out = [0.0; N];
        match self.order {
            2 => {
                let (p, m) = (at(1.0)?, at(-1.0)?);
                for i in 0..N {
                    out[i] = (p[i] - m[i]) / (2.0 * self.h);
                }
            }
            _ => {
                let (p1, m1, p2, m2) = (at(1.0)?, at(-1.0)?, at(2.0)?, at(-2.0)?);
                for i in 0..N {
                    out[i] = (8.0 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / (12.0 * self.h);
                }
            }
        }
        Ok(out)
    }
}

/// A time-independent multivector field on 3-space.
pub trait StaticField {
    fn eval(&self, x: Vec3) -> Result<Multivector>;

    /// Radii of spheres across which the field is not smooth.
    fn interfaces(&self) -> Vec<f64> {
        Vec::new()
    }
}

/// Adapter for closures.
pub struct FnField<F>(pub F);

impl<F: Fn(Vec3) -> Multivector> StaticField for FnField<F> {
    fn eval(&self, x: Vec3) -> Result<Multivector> {
        Ok((self.0)(x))
    }
}

/// The soliton Faraday bivector as a [`StaticField`].
pub struct FaradayField<'a>(pub &'a SolitonParams);

impl StaticField for FaradayField<'_> {
    fn eval(&self, x: Vec3) -> Result<Multivector> {
        fields::faraday(x, self.0)
    }

    fn interfaces(&self) -> Vec<f64> {
        vec![self.0.r0]
    }
}

/// Central-difference approximation of `γ^µ ∂_µ field` at `x`.
pub fn dirac_apply(field: &impl StaticField, x: Vec3, s: &StencilSpec) -> Result<Multivector> {
    s.check(x, &field.interfaces())?;
    let coeffs = |y: Vec3| field.eval(y).map(|m| *m.coeffs());
    // static fields: the γ^0 ∂_0 term of the spacetime mode is exactly zero
    let mut out = Multivector::ZERO;
    for i in 1..=3 {
        let d = Multivector::from_coeffs(s.partial(&coeffs, x, i - 1)?);
        out += Multivector::gamma_up(i).geometric(&d);
    }
    Ok(out)
}

/// `|∂F|` for the soliton field; vanishes analytically off the shell.
pub fn free_field_residual(p: &SolitonParams, x: Vec3, s: &StencilSpec) -> Result<f64> {
    Ok(dirac_apply(&FaradayField(p), x, s)?.norm())
}

/// Finite-difference divergences and curl magnitudes of `E` and `H`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Maxwell3Residual {
    pub div_e: f64,
    pub curl_e: f64,
    pub div_h: f64,
    pub curl_h: f64,
}

impl Maxwell3Residual {
    pub fn norm(&self) -> f64 {
        (self.div_e.powi(2) + self.curl_e.powi(2) + self.div_h.powi(2) + self.curl_h.powi(2)).sqrt()
    }

    pub fn components(&self) -> [f64; 4] {
        [self.div_e, self.curl_e, self.div_h, self.curl_h]
    }
}

fn div_curl(jac: &[Vec3; 3]) -> (f64, Vec3) {
    // jac[i][j] = ∂_i V_j
    let div = jac[0][0] + jac[1][1] + jac[2][2];
    let curl = [jac[1][2] - jac[2][1], jac[2][0] - jac[0][2], jac[0][1] - jac[1][0]];
    (div, curl)
}

pub fn maxwell3_residual(p: &SolitonParams, x: Vec3, s: &StencilSpec) -> Result<Maxwell3Residual> {
    s.check(x, &[p.r0])?;
    let e = |y: Vec3| fields::field_e(y, p);
    let h = |y: Vec3| fields::field_h(y, p);
    let jac_e = [s.partial(&e, x, 0)?, s.partial(&e, x, 1)?, s.partial(&e, x, 2)?];
    let jac_h = [s.partial(&h, x, 0)?, s.partial(&h, x, 1)?, s.partial(&h, x, 2)?];
    let (div_e, curl_e) = div_curl(&jac_e);
    let (div_h, curl_h) = div_curl(&jac_h);
    Ok(Maxwell3Residual { div_e, curl_e: vec3::norm(curl_e), div_h, curl_h: vec3::norm(curl_h) })
}

/// A power law `a r^n` with exact derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLaw {
    pub coeff: f64,
    pub exponent: f64,
}

impl PowerLaw {
    pub fn value(&self, r: f64) -> f64 {
        self.coeff * r.powf(self.exponent)
    }

    pub fn d1(&self, r: f64) -> f64 {
        self.coeff * self.exponent * r.powf(self.exponent - 1.0)
    }

    pub fn d2(&self, r: f64) -> f64 {
        self.coeff * self.exponent * (self.exponent - 1.0) * r.powf(self.exponent - 2.0)
    }
}

/// The two radial equations of the static solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadialEquation {
    /// `A_0'' + (2/r) A_0' = 0` off the shell.
    A0,
    /// `φ'' + (4/r) φ' = 0` off the shell.
    Phi,
}

impl RadialEquation {
    pub fn first_order_coeff(self) -> f64 {
        match self {
            Self::A0 => 2.0,
            Self::Phi => 4.0,
        }
    }
}

/// `f'' + (k/r) f'` for an arbitrary power-law trial function.
pub fn radial_operator_residual(which: RadialEquation, f: &PowerLaw, r: f64) -> f64 {
    f.d2(r) + which.first_order_coeff() / r * f.d1(r)
}

/// Residual of the radial equation for the closed-form profile at `r`.
pub fn radial_ode_residual(which: RadialEquation, r: f64, p: &SolitonParams) -> Result<f64> {
    if r <= 0.0 || r.is_nan() {
        return Err(Error::SingularPoint { r });
    }
    if on_shell(r, p.r0) {
        return Err(Error::OnShell { r, r0: p.r0 });
    }
    if r < p.r0 {
        return Ok(0.0);
    }
    let profile = match which {
        RadialEquation::A0 => PowerLaw { coeff: p.c1, exponent: -1.0 },
        RadialEquation::Phi => PowerLaw { coeff: p.c2, exponent: -3.0 },
    };
    Ok(radial_operator_residual(which, &profile, r))
}

/// Same residual by second-order central differences of the profiles.
pub fn radial_ode_residual_fd(which: RadialEquation, r: f64, p: &SolitonParams, h: f64) -> Result<f64> {
    let s = StencilSpec::new(h, 2, StencilMode::Spatial)?;
    s.check([r, 0.0, 0.0], &[p.r0])?;
    let f = |t: f64| match which {
        RadialEquation::A0 => p.a0_profile(t),
        RadialEquation::Phi => p.phi_profile(t),
    };
    let (fp, f0, fm) = (f(r + h), f(r), f(r - h));
    let d2 = (fp - 2.0 * f0 + fm) / (h * h);
    let d1 = (fp - fm) / (2.0 * h);
    Ok(d2 + which.first_order_coeff() / r * d1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jump {
    pub inner: f64,
    pub outer: f64,
    pub jump: f64,
}

impl Jump {
    fn new(inner: f64, outer: f64) -> Self {
        Self { inner, outer, jump: outer - inner }
    }
}

/// One-sided limits of the potential profiles at `r0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpReport {
    pub a0: Jump,
    pub a0_prime: Jump,
    pub phi: Jump,
    pub phi_prime: Jump,
}

/// Analytic one-sided limits.
pub fn shell_jump_report(p: &SolitonParams) -> JumpReport {
    let r0 = p.r0;
    JumpReport {
        a0: Jump::new(0.0, p.c1 / r0),
        a0_prime: Jump::new(0.0, -p.c1 / (r0 * r0)),
        phi: Jump::new(0.0, p.c2 / r0.powi(3)),
        phi_prime: Jump::new(0.0, -3.0 * p.c2 / r0.powi(4)),
    }
}

/// One-sided limits by quadratic extrapolation from `r0 ± h, ±2h, ±3h`,
/// never sampling closer than `h` to the shell.
pub fn shell_jump_report_numeric(p: &SolitonParams, h: f64) -> Result<JumpReport> {
    if !(h > 0.0 && 3.0 * h < p.r0) {
        return Err(Error::InvalidParameter(format!("need 0 < 3h < r0, got h = {h}")));
    }
    let limits = |f: &dyn Fn(f64) -> f64, side: f64| {
        let [f1, f2, f3] = [1.0, 2.0, 3.0].map(|k| f(p.r0 + side * k * h));
        let value = 3.0 * f1 - 3.0 * f2 + f3;
        let slope = side * (-5.0 * f1 + 8.0 * f2 - 3.0 * f3) / (2.0 * h);
        (value, slope)
    };
    let a0 = |r: f64| p.a0_profile(r);
    let phi = |r: f64| p.phi_profile(r);
    let (a0_in, a0p_in) = limits(&a0, -1.0);
    let (a0_out, a0p_out) = limits(&a0, 1.0);
    let (phi_in, phip_in) = limits(&phi, -1.0);
    let (phi_out, phip_out) = limits(&phi, 1.0);
    Ok(JumpReport {
        a0: Jump::new(a0_in, a0_out),
        a0_prime: Jump::new(a0p_in, a0p_out),
        phi: Jump::new(phi_in, phi_out),
        phi_prime: Jump::new(phip_in, phip_out),
    })
}

/// Point at radius `r`, polar angle `theta` from `d̂` and azimuth `azimuth`
/// about `d̂`.
pub fn point_about_axis(p: &SolitonParams, r: f64, theta: f64, azimuth: f64) -> Vec3 {
    let d = p.axis;
    let e1 = vec3::orthogonal_unit(d);
    let e2 = vec3::cross(d, e1);
    let (st, ct) = theta.sin_cos();
    let (sa, ca) = azimuth.sin_cos();
    let dir = vec3::add(vec3::scale(d, ct), vec3::add(vec3::scale(e1, st * ca), vec3::scale(e2, st * sa)));
    vec3::scale(dir, r)
}

/// `log2(res(h) / res(h/2))`.
pub fn measured_order(res_h: f64, res_half: f64) -> f64 {
    (res_h / res_half).log2()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub r: f64,
    pub theta: f64,
    pub residual: f64,
    pub h: f64,
    pub order: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub r: f64,
    pub theta: f64,
    pub residual_h: f64,
    pub residual_half: f64,
    pub measured_order: Option<f64>,
}

/// Free-field residual at each `(r, θ)` (azimuth fixed at 0.3 rad about `d̂`),
/// at step `h` and `h/2`. Rows come out in input order, `h` before `h/2`.
pub fn residual_sweep(
    p: &SolitonParams,
    points: &[(f64, f64)],
    s: &StencilSpec,
) -> Result<(Vec<ResidualRow>, Vec<ConvergenceRow>)> {
    let mut rows = Vec::with_capacity(2 * points.len());
    let mut conv = Vec::with_capacity(points.len());
    for &(r, theta) in points {
        let x = point_about_axis(p, r, theta, 0.3);
        let coarse = free_field_residual(p, x, s)?;
        let fine = free_field_residual(p, x, &s.halved())?;
        rows.push(ResidualRow { r, theta, residual: coarse, h: s.h, order: s.order });
        rows.push(ResidualRow { r, theta, residual: fine, h: 0.5 * s.h, order: s.order });
        let measured = (coarse > 0.0 && fine > 0.0).then(|| measured_order(coarse, fine));
        conv.push(ConvergenceRow { r, theta, residual_h: coarse, residual_half: fine, measured_order: measured });
    }
    Ok((rows, conv))
}

pub fn write_residuals_csv(rows: &[ResidualRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "r,theta,residual,h,order")?;
    for row in rows {
        writeln!(out, "{:e},{:e},{:e},{:e},{}", row.r, row.theta, row.residual, row.h, row.order)?;
    }
    Ok(())
}

pub fn write_convergence_csv(rows: &[ConvergenceRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "r,theta,residual_h,residual_half,measured_order")?;
    for row in rows {
        let order = row.measured_order.map_or_else(|| "nan".to_string(), |o| format!("{o:.6}"));
        writeln!(out, "{:e},{:e},{:e},{:e},{}", row.r, row.theta, row.residual_h, row.residual_half, order)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{paper_params, PhysicalConstants};

    fn toy() -> SolitonParams {
        paper_params(&PhysicalConstants::dimensionless(2.0).unwrap())
    }

    fn spec(h: f64) -> StencilSpec {
        StencilSpec::new(h, 2, StencilMode::Spacetime).unwrap()
    }

    #[test]
    fn stencil_validation() {
        assert!(StencilSpec::new(0.0, 2, StencilMode::Spatial).is_err());
        assert!(StencilSpec::new(0.1, 3, StencilMode::Spatial).is_err());
        assert_eq!(spec(0.1).reach(), 0.2);
    }

    #[test]
    fn constant_field_is_annihilated() {
        let f = FnField(|_| Multivector::scalar(3.0) + Multivector::gamma_up(2));
        assert_eq!(dirac_apply(&f, [1.0, 2.0, 3.0], &spec(0.01)).unwrap(), Multivector::ZERO);
    }

    #[test]
    fn linear_field_gradient() {
        let f = FnField(|x: Vec3| Multivector::scalar(x[0]));
        let d = dirac_apply(&f, [1.0, 0.5, -0.3], &spec(0.01)).unwrap();
        // γ^1 ∂_1 x^1 = γ^1
        let diff = d - Multivector::gamma_up(1);
        assert!(diff.max_abs() < 1e-13, "{d:?}");
        let s4 = StencilSpec::new(0.01, 4, StencilMode::Spatial).unwrap();
        let d4 = dirac_apply(&f, [1.0, 0.5, -0.3], &s4).unwrap();
        assert!((d4 - Multivector::gamma_up(1)).max_abs() < 1e-13);
    }

    #[test]
    fn stencil_collisions() {
        let p = toy();
        let s = spec(0.1);
        assert!(matches!(free_field_residual(&p, [0.0, 0.0, p.r0 + 0.1], &s), Err(Error::StencilCollision { .. })));
        assert!(matches!(
            free_field_residual(&p, [0.0, 0.1, 0.0], &s),
            Err(Error::StencilCollision { interface, .. }) if interface == 0.0
        ));
        assert!(free_field_residual(&p, [0.0, 0.0, p.r0 + 0.2], &s).is_ok());
    }

    #[test]
    fn interior_residual_is_exactly_zero() {
        let p = toy();
        assert_eq!(free_field_residual(&p, [0.3, 0.4, 0.5], &spec(0.05)).unwrap(), 0.0);
        let m = maxwell3_residual(&p, [0.3, 0.4, 0.5], &spec(0.05)).unwrap();
        assert_eq!(m.components(), [0.0; 4]);
    }

    #[test]
    fn exterior_residual_second_order() {
        let p = toy();
        let x = point_about_axis(&p, 3.0 * p.r0, 0.7, 1.1);
        let coarse = free_field_residual(&p, x, &spec(p.r0 / 100.0)).unwrap();
        let fine = free_field_residual(&p, x, &spec(p.r0 / 200.0)).unwrap();
        let ratio = coarse / fine;
        assert!((ratio - 4.0).abs() < 0.2, "ratio {ratio}");
    }

    #[test]
    fn dirac_grades_match_three_vector_residuals() {
        // <∂F>_1 carries div E and curl H; <∂F>_3 carries div H and curl E
        let p = toy();
        let s = spec(p.r0 / 50.0);
        for x in [[3.0, 1.0, 2.0], [-2.5, 0.4, -3.3], [0.1, 4.0, 0.7]] {
            let d = dirac_apply(&FaradayField(&p), x, &s).unwrap();
            let m = maxwell3_residual(&p, x, &s).unwrap();
            let g1 = d.grade(1).unwrap().norm();
            let g3 = d.grade(3).unwrap().norm();
            let tol = 10.0 * s.h.powi(2);
            assert!((g1 - m.div_e.hypot(m.curl_h)).abs() < tol, "{g1} vs {m:?}");
            assert!((g3 - m.div_h.hypot(m.curl_e)).abs() < tol, "{g3} vs {m:?}");
            assert!(d.grade(0).unwrap().max_abs() == 0.0 && d.grade(2).unwrap().max_abs() == 0.0);
        }
    }

    #[test]
    fn rotated_axis_covariance() {
        let p = toy();
        let axis = vec3::normalize([1.0, -2.0, 0.5]).unwrap();
        let q = p.with_axis(axis).unwrap();
        let s = spec(p.r0 / 64.0);
        // same (r, θ, azimuth) relative to each axis; the stencil grid is not
        // rotated, so agreement is to truncation order only
        let (r, theta) = (2.7 * p.r0, 1.1);
        let a = free_field_residual(&p, point_about_axis(&p, r, theta, 0.0), &s).unwrap();
        let b = free_field_residual(&q, point_about_axis(&q, r, theta, 0.0), &s).unwrap();
        assert!(a > 0.0 && b > 0.0);
        assert!((a / b).ln().abs() < 1.0, "{a} vs {b}");
        // exact covariance for a rotation that maps the Cartesian grid to itself
        let perm = p.with_axis([1.0, 0.0, 0.0]).unwrap();
        let x = [0.4, 1.3, 4.1];
        let xp = [x[2], x[0], x[1]];
        let a = free_field_residual(&p, x, &s).unwrap();
        let b = free_field_residual(&perm, xp, &s).unwrap();
        assert!((a - b).abs() <= 1e-12 * a, "{a} vs {b}");
    }

    #[test]
    fn radial_ode_examples() {
        let p = toy();
        assert_eq!(radial_ode_residual(RadialEquation::A0, 2.0 * p.r0, &p).unwrap(), 0.0);
        assert!(radial_ode_residual(RadialEquation::Phi, 5.0 * p.r0, &p).unwrap().abs() < 1e-15);
        let trial = PowerLaw { coeff: 1.0, exponent: -2.0 };
        let r = 1.7;
        let res = radial_operator_residual(RadialEquation::Phi, &trial, r);
        assert!((res + 2.0 / r.powi(4)).abs() < 1e-14);
        assert!(matches!(radial_ode_residual(RadialEquation::A0, p.r0, &p), Err(Error::OnShell { .. })));
        assert_eq!(radial_ode_residual(RadialEquation::Phi, 0.5 * p.r0, &p).unwrap(), 0.0);
    }

    #[test]
    fn radial_fd_agrees_with_analytic() {
        let p = toy();
        for which in [RadialEquation::A0, RadialEquation::Phi] {
            for r in [3.0, 5.0, 9.0] {
                let fd = radial_ode_residual_fd(which, r, &p, 1e-3).unwrap();
                assert!(fd.abs() < 1e-5, "{which:?} at {r}: {fd}");
            }
        }
        // the negative control is caught by the FD route too
        let mut q = p;
        q.c2 = 0.0;
        assert_eq!(radial_ode_residual_fd(RadialEquation::Phi, 3.0, &q, 1e-3).unwrap(), 0.0);
        assert!(radial_ode_residual_fd(RadialEquation::A0, p.r0 + 1e-3, &p, 1e-3).is_err());
    }

    #[test]
    fn jump_report_examples() {
        let p = toy();
        let j = shell_jump_report(&p);
        assert_eq!(j.a0.jump, -0.5);
        assert_eq!(j.a0_prime.jump, 0.25);
        assert_eq!(j.phi.jump, 3.0 / 8.0);
        assert_eq!(j.phi_prime.jump, -9.0 / 16.0);
        let q = SolitonParams { c2: 0.0, ..p };
        let jq = shell_jump_report(&q);
        assert_eq!((jq.phi.jump, jq.phi_prime.jump), (0.0, 0.0));
        let scaled = SolitonParams { c1: 3.0 * p.c1, c2: -2.0 * p.c2, ..p };
        let js = shell_jump_report(&scaled);
        assert_eq!(js.a0.jump, 3.0 * j.a0.jump);
        assert_eq!(js.phi_prime.jump, -2.0 * j.phi_prime.jump);
    }

    #[test]
    fn numeric_jumps_converge() {
        let p = toy();
        let exact = shell_jump_report(&p);
        let err = |h: f64| {
            let n = shell_jump_report_numeric(&p, h).unwrap();
            [
                (n.a0.jump - exact.a0.jump).abs(),
                (n.a0_prime.jump - exact.a0_prime.jump).abs(),
                (n.phi.jump - exact.phi.jump).abs(),
                (n.phi_prime.jump - exact.phi_prime.jump).abs(),
            ]
        };
        let (e1, e2) = (err(1e-2), err(5e-3));
        for i in 0..4 {
            assert!(e1[i] < 1e-3, "{i}: {}", e1[i]);
            assert!(e2[i] < e1[i] / 3.0, "{i}: {} vs {}", e2[i], e1[i]);
        }
        assert!(shell_jump_report_numeric(&p, 1.0).is_err());
    }

    #[test]
    fn sweep_and_csv() {
        let p = toy();
        let (rows, conv) = residual_sweep(&p, &[(4.0, 0.5), (1.0, 1.0)], &spec(0.02)).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[2].residual, 0.0);
        assert!((conv[0].measured_order.unwrap() - 2.0).abs() < 0.3);
        assert!(conv[1].measured_order.is_none());
        let mut buf = Vec::new();
        write_residuals_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("r,theta,residual,h,order\n"));
        assert_eq!(text.lines().count(), 5);
    }
}
