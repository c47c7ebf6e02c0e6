//! Two-potential field theory: constants, the static soliton family, the
//! generalized potential `ω = A + γ^5 B`, its nonlinear constraint, the
//! multiplier shell and the shell-supported effective current.
//!
//! Units are Gaussian CGS. Dimensionless mode sets `e = m = c = 1` and
//! leaves `ħ` free, so `β = (ħc/e²)²` becomes a tunable knob.
//!
//! Field conventions: outside the shell the electric field is the Coulomb
//! field of the total charge `-c1` carried by the shell current,
//! `E = -c1 r/r³` (outward for `c1 < 0`), and the magnetic field is the
//! point-dipole field `H = c2 (3(d̂·r̂)r̂ - d̂)/r³`, which in spherical
//! coordinates about `d̂` reads `c2 (2cosθ r̂ + sinθ θ̂)/r³`. Both vanish
//! for `r < r0`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clifford::{relative_join, Multivector, RelativeSplit};
use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Relative tolerance used to decide that a point sits on the shell.
pub const SHELL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Elementary charge (statcoulomb).
    pub e: f64,
    /// Mass (gram).
    pub m: f64,
    /// Reduced Planck constant (erg·s).
    pub hbar: f64,
    /// Speed of light (cm/s).
    pub c: f64,
}

impl PhysicalConstants {
    pub fn new(e: f64, m: f64, hbar: f64, c: f64) -> Result<Self> {
        for (name, v) in [("e", e), ("m", m), ("hbar", hbar), ("c", c)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        Ok(Self { e, m, hbar, c })
    }

    /// `e = m = c = 1` with free `ħ`.
    pub fn dimensionless(hbar: f64) -> Result<Self> {
        Self::new(1.0, 1.0, hbar, 1.0)
    }

    /// CODATA 2018 values in Gaussian units.
    pub fn physical() -> Self {
        Self { e: 4.803_204_712_570_263e-10, m: 9.109_383_701_5e-28, hbar: 1.054_571_817e-27, c: 2.997_924_58e10 }
    }

    /// `β = (ħc/e²)²`.
    pub fn beta(&self) -> f64 {
        (self.hbar * self.c / (self.e * self.e)).powi(2)
    }

    /// `e²/(2mc²)`.
    pub fn classical_radius(&self) -> f64 {
        self.e * self.e / (2.0 * self.m * self.c * self.c)
    }

    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }
}

/// Parameters of the static soliton family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolitonParams {
    /// Coefficient of the time-like potential `A_0 = c1/r` (statcoulomb).
    pub c1: f64,
    /// Magnetic moment (erg/gauss).
    pub c2: f64,
    /// Shell radius (cm).
    pub r0: f64,
    /// Unit dipole axis `d̂`.
    pub axis: Vec3,
    /// Value of `Θ(0)` used for `A_0` on the shell.
    pub theta0: f64,
    /// Speed of light (cm/s), needed by currents and momentum densities.
    pub c: f64,
}

impl SolitonParams {
    pub fn new(c1: f64, c2: f64, r0: f64, axis: Vec3, theta0: f64, c: f64) -> Result<Self> {
        if !(r0.is_finite() && r0 > 0.0) {
            return Err(Error::InvalidParameter(format!("r0 must be > 0, got {r0}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter(format!("c must be > 0, got {c}")));
        }
        if !(c1.is_finite() && c2.is_finite()) {
            return Err(Error::InvalidParameter("c1 and c2 must be finite".into()));
        }
        if !(0.0..=1.0).contains(&theta0) {
            return Err(Error::InvalidParameter(format!("theta0 must lie in [0, 1], got {theta0}")));
        }
        let axis =
            vec3::normalize(axis).ok_or_else(|| Error::InvalidParameter("axis must be a non-zero vector".into()))?;
        Ok(Self { c1, c2, r0, axis, theta0, c })
    }

    /// Same parameters with a different dipole axis (normalized).
    pub fn with_axis(self, axis: Vec3) -> Result<Self> {
        Self::new(self.c1, self.c2, self.r0, axis, self.theta0, self.c)
    }

    /// Step `Θ(r - r0)` with `Θ(0) = theta0`, used by `A_0`.
    fn step_a0(&self, r: f64) -> f64 {
        if on_shell(r, self.r0) {
            self.theta0
        } else if r > self.r0 {
            1.0
        } else {
            0.0
        }
    }

    /// Step used by `φ` and by `H`: closed at `r0` (`φ(r0) = 0`).
    fn step_phi(&self, r: f64) -> f64 {
        if r > self.r0 && !on_shell(r, self.r0) {
            1.0
        } else {
            0.0
        }
    }

    /// Radial profile `A_0(r) = c1 Θ(r - r0)/r`.
    pub fn a0_profile(&self, r: f64) -> f64 {
        self.c1 * self.step_a0(r) / r
    }

    /// Radial profile `φ(r) = c2 Θ(r - r0)/r³`.
    pub fn phi_profile(&self, r: f64) -> f64 {
        self.c2 * self.step_phi(r) / (r * r * r)
    }
}

pub(crate) fn on_shell(r: f64, r0: f64) -> bool {
    (r - r0).abs() <= SHELL_EPS * r0
}

fn radius(x: Vec3) -> Result<f64> {
    let r = vec3::norm(x);
    if r == 0.0 || !r.is_finite() {
        Err(Error::SingularPoint { r })
    } else {
        Ok(r)
    }
}

/// The parameter choice tying `(r0, c2)` to `(e, m, ħ, c)` with bracket
/// `k = 1 + (3/4)β`: `r0 = k e²/(2mc²)`, `c2 = (3/8) k eħ/(mc)`, `c1 = -e`.
pub fn paper_params(k: &PhysicalConstants) -> SolitonParams {
    let bracket = 1.0 + 0.75 * k.beta();
    SolitonParams {
        c1: -k.e,
        c2: 0.375 * k.e * k.hbar / (k.m * k.c) * bracket,
        r0: k.classical_radius() * bracket,
        axis: [0.0, 0.0, 1.0],
        theta0: 1.0,
        c: k.c,
    }
}

/// A radial scalar profile `f(r)`.
pub type RadialFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Gradient of a scalar field on 3-space.
pub type GradientFn = Arc<dyn Fn(Vec3) -> Vec3 + Send + Sync>;

/// The first gauge function `χ1`; only its gradient enters the checks.
#[derive(Clone, Default)]
pub enum Chi1 {
    #[default]
    Constant,
    Gradient(GradientFn),
}

/// Gauge data for the pseudo-potential `B = ∂χ2` with `χ2 = χ2(r)`:
/// `φ(r) = dχ2/dr`, so `B_i = φ(r) x_i / r`.
#[derive(Clone, Default)]
pub struct GaugeData {
    /// `φ = dχ2/dr`; `None` is the trivial gauge `B = 0`.
    pub phi: Option<RadialFn>,
    pub chi1: Chi1,
}

impl fmt::Debug for GaugeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaugeData")
            .field("phi", &self.phi.as_ref().map(|_| "<fn>"))
            .field("chi1", &matches!(self.chi1, Chi1::Gradient(_)).then_some("<fn>"))
            .finish()
    }
}

impl GaugeData {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn radial(phi: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { phi: Some(Arc::new(phi)), chi1: Chi1::Constant }
    }

    /// Radial gauge from `χ2` itself; `φ` is its central-difference derivative.
    pub fn from_chi2(chi2: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self::radial(move |r| {
            let h = 1e-6 * r.abs().max(1e-300);
            (chi2(r + h) - chi2(r - h)) / (2.0 * h)
        })
    }

    pub fn with_chi1_gradient(mut self, grad: impl Fn(Vec3) -> Vec3 + Send + Sync + 'static) -> Self {
        self.chi1 = Chi1::Gradient(Arc::new(grad));
        self
    }

    pub fn phi_at(&self, r: f64) -> f64 {
        self.phi.as_ref().map_or(0.0, |f| f(r))
    }

    /// Admissible iff `φ(r0) = 0`.
    pub fn is_admissible(&self, r0: f64) -> bool {
        self.phi_at(r0) == 0.0
    }
}

/// Lagrange multipliers of the solution: `λ1 = shell_weight · δ(r - r0)`,
/// no smooth part, and `λ2 = 0` (forced by `A ≠ 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplierShell {
    pub radius: f64,
    /// Coefficient of the surface delta, `-c/(4π r0)`.
    pub shell_weight: f64,
    pub lambda2: f64,
}

impl MultiplierShell {
    pub fn for_params(p: &SolitonParams) -> Self {
        Self { radius: p.r0, shell_weight: -p.c / (4.0 * PI * p.r0), lambda2: 0.0 }
    }

    /// Smooth (non-delta) part of `λ1`; identically zero for this solution.
    pub fn smooth_part(&self, _r: f64) -> f64 {
        0.0
    }
}

/// A quantity concentrated on a sphere: `density(x) = surface_density · δ(r - radius)`
/// plus a smooth volume part, which is zero for the solutions here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialShellDistribution<T> {
    pub radius: f64,
    pub surface_density: T,
}

/// Field evaluated at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub point: Vec3,
    pub faraday: Multivector,
    pub split: RelativeSplit,
}

/// Scalar and pseudoscalar content of `ω ω*`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstraintScalar {
    /// `<ω ω*>_0 = A² - B²`.
    pub s: f64,
    /// Coefficient of `γ^5` in `<ω ω*>_4`, i.e. `2 A·B`.
    pub p4: f64,
}

/// Vector potential `A = A_0 γ^0 + A_i γ^i` with `A_0 = c1 Θ/r` and
/// spatial components `c2 (d̂ × r)_i Θ / r³`.
pub fn potential_a(x: Vec3, p: &SolitonParams) -> Result<Multivector> {
    let r = radius(x)?;
    let spatial = vec3::scale(vec3::cross(p.axis, x), p.phi_profile(r));
    Ok(Multivector::vector(p.a0_profile(r), spatial))
}

/// Pseudo-potential `B = B_i γ^i` with `B_i = φ(r) x_i / r`, `B_0 = 0`.
pub fn potential_b(x: Vec3, g: &GaugeData) -> Result<Multivector> {
    let r = radius(x)?;
    match &g.phi {
        None => Ok(Multivector::ZERO),
        Some(phi) => Ok(Multivector::vector(0.0, vec3::scale(x, phi(r) / r))),
    }
}

/// Generalized potential `ω = A + γ^5 B`.
pub fn omega(x: Vec3, p: &SolitonParams, g: &GaugeData) -> Result<Multivector> {
    let a = potential_a(x, p)?;
    let b = potential_b(x, g)?;
    Ok(a + Multivector::pseudoscalar() * b)
}

/// Scalar and pseudoscalar parts of `ω ω*`.
pub fn constraint_check(omega: &Multivector) -> Result<ConstraintScalar> {
    if !omega.has_only_grades(&[1, 3]) {
        return Err(Error::Domain("ω must contain only grades 1 and 3".into()));
    }
    let prod = omega.geometric(&omega.reversion());
    Ok(ConstraintScalar { s: prod.scalar_part(), p4: prod.pseudoscalar_part() })
}

/// Electric field: `-c1 r/r³` for `r ≥ r0`, zero inside.
pub fn field_e(x: Vec3, p: &SolitonParams) -> Result<Vec3> {
    let r = radius(x)?;
    if r < p.r0 && !on_shell(r, p.r0) {
        return Ok(vec3::ZERO);
    }
    Ok(vec3::scale(x, -p.c1 / (r * r * r)))
}

/// Magnetic field: dipole `c2 (3(d̂·r̂)r̂ - d̂)/r³` for `r > r0`, zero otherwise.
pub fn field_h(x: Vec3, p: &SolitonParams) -> Result<Vec3> {
    let r = radius(x)?;
    if r <= p.r0 || on_shell(r, p.r0) {
        return Ok(vec3::ZERO);
    }
    let rhat = vec3::scale(x, 1.0 / r);
    let cos_t = vec3::dot(p.axis, rhat);
    let dir = vec3::sub(vec3::scale(rhat, 3.0 * cos_t), p.axis);
    Ok(vec3::scale(dir, p.c2 / (r * r * r)))
}

/// Faraday bivector `F = E + î H`.
pub fn faraday(x: Vec3, p: &SolitonParams) -> Result<Multivector> {
    Ok(field_sample(x, p)?.faraday)
}

pub fn field_sample(x: Vec3, p: &SolitonParams) -> Result<FieldSample> {
    let split = RelativeSplit { e: field_e(x, p)?, h: field_h(x, p)? };
    Ok(FieldSample { point: x, faraday: relative_join(&split), split })
}

/// Effective current `J = λ1 ω` collapsed onto the shell: surface density
/// `shell_weight · A(r0 x̂)` (1-vector per unit area), with `A_0(r0)` taken
/// at `Θ(0) = theta0`. The `λ2 γ^5` part vanishes identically. For `x = 0`
/// the direction defaults to `d̂`.
pub fn effective_current(x: Vec3, p: &SolitonParams) -> RadialShellDistribution<Multivector> {
    let shell = MultiplierShell::for_params(p);
    let dir = vec3::normalize(x).unwrap_or(p.axis);
    let on_shell_point = vec3::scale(dir, p.r0);
    let a0 = p.a0_profile(p.r0);
    // φ(r0) = 0, so the spatial part of A on the shell vanishes
    let spatial = vec3::scale(vec3::cross(p.axis, on_shell_point), p.phi_profile(p.r0));
    let a_shell = Multivector::vector(a0, spatial);
    RadialShellDistribution { radius: p.r0, surface_density: a_shell * shell.shell_weight }
}

/// Residuals `(|λ1 ∂χ1|, |λ1 ∂χ2|)` of the gauge-invariance constraints,
/// evaluated on the shell point in the direction of `x`. Off the shell `λ1`
/// vanishes, so only the shell values of `∂χ1` and `φ` matter.
pub fn gauge_constraint_residual(g: &GaugeData, shell: &MultiplierShell, x: Vec3) -> (f64, f64) {
    let w = shell.shell_weight.abs();
    let dir = vec3::normalize(x).unwrap_or([0.0, 0.0, 1.0]);
    let on_shell_point = vec3::scale(dir, shell.radius);
    let first = match &g.chi1 {
        Chi1::Constant => 0.0,
        Chi1::Gradient(grad) => w * vec3::norm(grad(on_shell_point)),
    };
    (first, w * g.phi_at(shell.radius).abs())
}

/// Off-shell Lagrangian density
/// `(1/8π)<F_e² + F_m²>_0 + (λ1/2c)(A² - B² - s) + (λ2/c) A·B`.
///
/// `F_m = -∂∧B` vanishes because `B` is the gradient of `χ2`; the multiplier
/// terms vanish off the shell because `λ1` is shell-supported and `λ2 = 0`.
pub fn lagrangian_density(
    x: Vec3,
    p: &SolitonParams,
    g: &GaugeData,
    shell: &MultiplierShell,
    k: &PhysicalConstants,
) -> Result<f64> {
    let r = radius(x)?;
    if on_shell(r, p.r0) {
        return Err(Error::OnShell { r, r0: p.r0 });
    }
    let f_e = faraday(x, p)?;
    let free = f_e.geometric(&f_e).scalar_part() / (8.0 * PI);

    let w = omega(x, p, g)?;
    let cs = constraint_check(&w)?;
    let lambda1 = shell.smooth_part(r);
    let a = potential_a(x, p)?;
    let b = potential_b(x, g)?;
    let a2 = a.geometric(&a).scalar_part();
    let b2 = b.geometric(&b).scalar_part();
    let ab = crate::clifford::vector_dot(&a, &b)?.scalar_part();
    let multipliers = lambda1 / (2.0 * k.c) * (a2 - b2 - cs.s) + shell.lambda2 / k.c * ab;
    Ok(free + multipliers)
}
