//! Energy, momentum and angular-momentum densities of the soliton field and
//! their volume integrals, with closed-form counterparts.
//!
//! Volume integrals run over `r > r0` only (both fields vanish inside)
//! with the map `u = r0/r`, which turns every radial integrand into a
//! polynomial in `u` on `(0, 1]`. Gauss–Legendre in `u` and in `cosθ` is
//! then exact and the infinite tail needs no cutoff. The azimuth uses an
//! equispaced rule, exact for the degree-2 trigonometric dependence that
//! appears when the dipole axis is not the polar axis of the grid.
//! Summation order is fixed, so results are bitwise reproducible.

use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::clifford::{self, relative_vector_split, Multivector};
use crate::error::{Error, Result};
use crate::fields::{self, SolitonParams};
use crate::quadrature::GaussLegendre;
use crate::vec3::{self, Vec3};

/// Equispaced azimuthal nodes.
pub const AZIMUTH_NODES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadialMap {
    /// `u = r0/r`, mapping `[r0, ∞)` onto `(0, 1]`.
    InverseRadius,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub n_radial: usize,
    pub n_polar: usize,
    pub radial_map: RadialMap,
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { n_radial: 16, n_polar: 16, radial_map: RadialMap::InverseRadius, rel_tol: 1e-10 }
    }
}

impl QuadratureSpec {
    pub fn new(n_radial: usize, n_polar: usize, rel_tol: f64) -> Result<Self> {
        let q = Self { n_radial, n_polar, radial_map: RadialMap::InverseRadius, rel_tol };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_radial < 8 {
            return Err(Error::InvalidParameter(format!("n_radial must be >= 8, got {}", self.n_radial)));
        }
        if self.n_polar < 4 {
            return Err(Error::InvalidParameter(format!("n_polar must be >= 4, got {}", self.n_polar)));
        }
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        Ok(())
    }

    pub fn doubled(&self) -> Self {
        Self { n_radial: 2 * self.n_radial, n_polar: 2 * self.n_polar, ..*self }
    }
}

/// `(E² + H²)/8π`.
pub fn energy_density(x: Vec3, p: &SolitonParams) -> Result<f64> {
    let e = fields::field_e(x, p)?;
    let h = fields::field_h(x, p)?;
    Ok((vec3::dot(e, e) + vec3::dot(h, h)) / (8.0 * PI))
}

/// Poynting vector `S = (c/4π) E × H`.
pub fn poynting(x: Vec3, p: &SolitonParams) -> Result<Vec3> {
    let e = fields::field_e(x, p)?;
    let h = fields::field_h(x, p)?;
    Ok(vec3::scale(vec3::cross(e, h), p.c / (4.0 * PI)))
}

/// Momentum density `S/c²`.
pub fn momentum_density(x: Vec3, p: &SolitonParams) -> Result<Vec3> {
    Ok(vec3::scale(poynting(x, p)?, 1.0 / (p.c * p.c)))
}

/// Angular momentum density `r × (S/c²)`.
pub fn angular_momentum_density(x: Vec3, p: &SolitonParams) -> Result<Vec3> {
    Ok(vec3::cross(x, momentum_density(x, p)?))
}

/// Energy density and Poynting vector from the algebra:
/// `-(c/8π) F γ^0 F γ^0 = c U + S`.
pub fn energy_momentum_clifford(f: &Multivector, c: f64) -> Result<(f64, Vec3)> {
    if !f.has_only_grades(&[2]) {
        return Err(Error::Domain("field must be a pure bivector".into()));
    }
    let g0 = Multivector::gamma_up(0);
    let t = f.geometric(&g0).geometric(f).geometric(&g0) * (-c / (8.0 * PI));
    let split = clifford::relative_split(&t.project(2))?;
    Ok((t.scalar_part() / c, split.e))
}

/// Lorentz force density `K = -J·F` for a 1-vector current and a bivector field.
pub fn lorentz_force_density(j: &Multivector, f: &Multivector) -> Result<Multivector> {
    if !j.has_only_grades(&[1]) || !f.has_only_grades(&[2]) {
        return Err(Error::Domain("lorentz force needs a 1-vector current and a bivector field".into()));
    }
    // a vector dotted into a bivector is a vector; drop rounding residue in grade 3
    Ok(-clifford::vector_dot(j, f)?.project(1))
}

/// Relative split `K γ^0 = power + force` of a force density.
pub fn lorentz_split(k: &Multivector) -> Result<(f64, Vec3)> {
    relative_vector_split(k)
}

/// Current 1-vector with `J γ^0 = cρ + J`.
pub fn current(rho: f64, j: Vec3, c: f64) -> Multivector {
    Multivector::vector(c * rho, j)
}

struct SphericalRule {
    radial: Vec<(f64, f64)>,
    polar: Vec<(f64, f64)>,
    azimuth: Vec<(f64, f64)>,
}

impl SphericalRule {
    fn new(q: &QuadratureSpec) -> Result<Self> {
        q.validate()?;
        let radial = GaussLegendre::new(q.n_radial)?.on_interval(0.0, 1.0);
        let polar = GaussLegendre::new(q.n_polar)?.on_interval(-1.0, 1.0);
        let w = 2.0 * PI / AZIMUTH_NODES as f64;
        let azimuth = (0..AZIMUTH_NODES).map(|k| (w * (k as f64 + 0.5), w)).collect();
        Ok(Self { radial, polar, azimuth })
    }

    fn directions(&self) -> impl Iterator<Item = (Vec3, f64)> + '_ {
        self.polar.iter().flat_map(move |&(mu, wm)| {
            let st = (1.0 - mu * mu).sqrt();
            self.azimuth.iter().map(move |&(phi, wp)| {
                let (s, c) = phi.sin_cos();
                ([st * c, st * s, mu], wm * wp)
            })
        })
    }

    /// `∫_{r > r0} f dv` for an array-valued integrand.
    fn exterior<const N: usize>(&self, r0: f64, f: impl Fn(Vec3) -> Result<[f64; N]>) -> Result<[f64; N]> {
        let mut acc = [0.0; N];
        for &(u, wu) in &self.radial {
            let r = r0 / u;
            // r² dr = r0³ u⁻⁴ du
            let jac = r0 * r0 * r0 / (u * u * u * u);
            for (dir, wd) in self.directions() {
                let val = f(vec3::scale(dir, r))?;
                let w = wu * wd * jac;
                for i in 0..N {
                    acc[i] += w * val[i];
                }
            }
        }
        Ok(acc)
    }

    /// `∫ f dΩ` over the unit sphere.
    fn sphere(&self, f: impl Fn(Vec3) -> f64) -> f64 {
        self.directions().map(|(dir, w)| w * f(dir)).sum()
    }
}

fn agree(a: f64, b: f64, tol: f64) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= tol * scale
}

fn check_converged(quantity: &'static str, coarse: f64, fine: f64, tol: f64) -> Result<f64> {
    if agree(coarse, fine, tol) {
        Ok(coarse)
    } else {
        let rel_change = (coarse - fine).abs() / coarse.abs().max(fine.abs());
        Err(Error::Tolerance { quantity, rel_change, tol })
    }
}

fn shell_charge(p: &SolitonParams, rule: &SphericalRule) -> f64 {
    // charge density J^0 / c collapsed on the shell
    rule.sphere(|dir| {
        let j = fields::effective_current(dir, p);
        let (j0, _) = relative_vector_split(&j.surface_density).expect("shell current is a 1-vector");
        p.r0 * p.r0 * j0 / p.c
    })
}

/// Total charge of the shell current, `(1/c) ∫ J^0 d³x`.
pub fn total_charge(p: &SolitonParams, q: &QuadratureSpec) -> Result<f64> {
    let coarse = shell_charge(p, &SphericalRule::new(q)?);
    let fine = shell_charge(p, &SphericalRule::new(&q.doubled())?);
    check_converged("charge", coarse, fine, q.rel_tol)
}

/// `-c1 Θ(0)`.
pub fn closed_charge(p: &SolitonParams) -> f64 {
    -p.c1 * p.theta0
}

fn energy_with(p: &SolitonParams, rule: &SphericalRule) -> Result<f64> {
    Ok(rule.exterior(p.r0, |x| Ok([energy_density(x, p)?]))?[0])
}

/// `∫ (E² + H²)/8π dv`.
pub fn total_energy(p: &SolitonParams, q: &QuadratureSpec) -> Result<f64> {
    let coarse = energy_with(p, &SphericalRule::new(q)?)?;
    let fine = energy_with(p, &SphericalRule::new(&q.doubled())?)?;
    check_converged("energy", coarse, fine, q.rel_tol)
}

/// `c1²/(2 r0) + c2²/(3 r0³)`.
pub fn closed_energy(p: &SolitonParams) -> f64 {
    p.c1 * p.c1 / (2.0 * p.r0) + p.c2 * p.c2 / (3.0 * p.r0.powi(3))
}

fn angular_momentum_with(p: &SolitonParams, rule: &SphericalRule) -> Result<Vec3> {
    rule.exterior(p.r0, |x| angular_momentum_density(x, p))
}

/// `∫ r × (S/c²) dv`.
pub fn total_angular_momentum(p: &SolitonParams, q: &QuadratureSpec) -> Result<Vec3> {
    let coarse = angular_momentum_with(p, &SphericalRule::new(q)?)?;
    let fine = angular_momentum_with(p, &SphericalRule::new(&q.doubled())?)?;
    let along = |v: Vec3| vec3::dot(v, p.axis);
    check_converged("angular momentum", along(coarse), along(fine), q.rel_tol)?;
    Ok(coarse)
}

/// `-2 c1 c2 / (3 c r0)`, the component along `d̂`.
pub fn closed_lz(p: &SolitonParams) -> f64 {
    -2.0 * p.c1 * p.c2 / (3.0 * p.c * p.r0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableReport {
    pub charge: f64,
    pub energy: f64,
    pub angular_momentum: Vec3,
    /// Component of the angular momentum along `d̂`.
    pub lz: f64,
    pub closed_charge: f64,
    pub closed_energy: f64,
    pub closed_lz: f64,
    pub charge_rel_dev: Option<f64>,
    pub energy_rel_dev: Option<f64>,
    pub lz_rel_dev: Option<f64>,
}

fn rel_dev(numeric: f64, closed: f64) -> Option<f64> {
    (closed != 0.0).then(|| (numeric - closed).abs() / closed.abs())
}

pub fn observable_report(p: &SolitonParams, q: &QuadratureSpec) -> Result<ObservableReport> {
    let charge = total_charge(p, q)?;
    let energy = total_energy(p, q)?;
    let angular_momentum = total_angular_momentum(p, q)?;
    let lz = vec3::dot(angular_momentum, p.axis);
    let (cc, ce, cl) = (closed_charge(p), closed_energy(p), closed_lz(p));
    Ok(ObservableReport {
        charge,
        energy,
        angular_momentum,
        lz,
        closed_charge: cc,
        closed_energy: ce,
        closed_lz: cl,
        charge_rel_dev: rel_dev(charge, cc),
        energy_rel_dev: rel_dev(energy, ce),
        lz_rel_dev: rel_dev(lz, cl),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub r: f64,
    pub theta: f64,
    pub u: f64,
    pub s_phi: f64,
    pub l_z: f64,
}

/// Densities on an `(r, θ)` grid in the meridian plane of `d̂`; `S_φ` is
/// the azimuthal Poynting component and `l_z` the angular momentum density
/// along `d̂`. Rows are ordered by `r` then `θ`.
pub fn density_profile(p: &SolitonParams, radii: &[f64], thetas: &[f64]) -> Result<Vec<DensityRow>> {
    let e1 = vec3::orthogonal_unit(p.axis);
    let phi_hat = vec3::cross(p.axis, e1);
    let mut rows = Vec::with_capacity(radii.len() * thetas.len());
    for &r in radii {
        for &theta in thetas {
            let x = crate::differential::point_about_axis(p, r, theta, 0.0);
            rows.push(DensityRow {
                r,
                theta,
                u: energy_density(x, p)?,
                s_phi: vec3::dot(poynting(x, p)?, phi_hat),
                l_z: vec3::dot(angular_momentum_density(x, p)?, p.axis),
            });
        }
    }
    Ok(rows)
}

pub fn write_density_csv(rows: &[DensityRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "r,theta,U,S_phi,l_z")?;
    for row in rows {
        writeln!(out, "{:e},{:e},{:e},{:e},{:e}", row.r, row.theta, row.u, row.s_phi, row.l_z)?;
    }
    Ok(())
}
