//! Run configuration as flat `key=value` text.
//!
//! Blank lines and lines starting with `#` are ignored. Unset keys are
//! omitted on output, so parsing the serialized form gives back the same
//! configuration.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fields::{paper_params, PhysicalConstants, SolitonParams};
use crate::observables::QuadratureSpec;
use crate::vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `e = m = c = 1`; `ħ` must be given.
    Dimensionless,
    /// CODATA values in Gaussian units.
    Physical,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimensionless" => Ok(Self::Dimensionless),
            "physical" => Ok(Self::Physical),
            other => Err(Error::Config(format!("unknown preset '{other}'"))),
        }
    }
}

impl Preset {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Dimensionless => "dimensionless",
            Self::Physical => "physical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunConfig {
    pub preset: Option<Preset>,
    pub e: Option<f64>,
    pub m: Option<f64>,
    pub hbar: Option<f64>,
    pub c: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub r0: Option<f64>,
    pub theta0: Option<f64>,
    pub axis: Option<Vec3>,
    pub n_radial: Option<usize>,
    pub n_polar: Option<usize>,
    pub rel_tol: Option<f64>,
    /// Absolute finite-difference step; defaults to `r0/100`.
    pub h: Option<f64>,
    pub order: Option<u32>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub constraint_points: Option<usize>,
    /// Sampling grid, radii in units of `r0`.
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub n_r: Option<usize>,
    pub n_theta: Option<usize>,
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Config(format!("invalid value for {key}: '{value}'")))
}

fn parse_axis(value: &str) -> Result<Vec3> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!("axis needs three comma-separated components, got '{value}'")));
    }
    let mut v = [0.0; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = parse_value("axis", part)?;
    }
    Ok(v)
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "preset" => self.preset = Some(value.parse()?),
            "e" => self.e = Some(parse_value(key, value)?),
            "m" => self.m = Some(parse_value(key, value)?),
            "hbar" => self.hbar = Some(parse_value(key, value)?),
            "c" => self.c = Some(parse_value(key, value)?),
            "c1" => self.c1 = Some(parse_value(key, value)?),
            "c2" => self.c2 = Some(parse_value(key, value)?),
            "r0" => self.r0 = Some(parse_value(key, value)?),
            "theta0" => self.theta0 = Some(parse_value(key, value)?),
            "axis" => self.axis = Some(parse_axis(value)?),
            "n_radial" => self.n_radial = Some(parse_value(key, value)?),
            "n_polar" => self.n_polar = Some(parse_value(key, value)?),
            "rel_tol" => self.rel_tol = Some(parse_value(key, value)?),
            "h" => self.h = Some(parse_value(key, value)?),
            "order" => self.order = Some(parse_value(key, value)?),
            "out" => self.out = Some(PathBuf::from(value)),
            "seed" => self.seed = Some(parse_value(key, value)?),
            "constraint_points" => self.constraint_points = Some(parse_value(key, value)?),
            "r_min" => self.r_min = Some(parse_value(key, value)?),
            "r_max" => self.r_max = Some(parse_value(key, value)?),
            "n_r" => self.n_r = Some(parse_value(key, value)?),
            "n_theta" => self.n_theta = Some(parse_value(key, value)?),
            other => return Err(Error::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                let _ = writeln!(s, "{k}={v}");
            }
        };
        put("preset", self.preset.map(|p| p.as_str().to_string()));
        put("e", self.e.map(|v| v.to_string()));
        put("m", self.m.map(|v| v.to_string()));
        put("hbar", self.hbar.map(|v| v.to_string()));
        put("c", self.c.map(|v| v.to_string()));
        put("c1", self.c1.map(|v| v.to_string()));
        put("c2", self.c2.map(|v| v.to_string()));
        put("r0", self.r0.map(|v| v.to_string()));
        put("theta0", self.theta0.map(|v| v.to_string()));
        put("axis", self.axis.map(|a| format!("{},{},{}", a[0], a[1], a[2])));
        put("n_radial", self.n_radial.map(|v| v.to_string()));
        put("n_polar", self.n_polar.map(|v| v.to_string()));
        put("rel_tol", self.rel_tol.map(|v| v.to_string()));
        put("h", self.h.map(|v| v.to_string()));
        put("order", self.order.map(|v| v.to_string()));
        put("out", self.out.as_ref().map(|p| p.display().to_string()));
        put("seed", self.seed.map(|v| v.to_string()));
        put("constraint_points", self.constraint_points.map(|v| v.to_string()));
        put("r_min", self.r_min.map(|v| v.to_string()));
        put("r_max", self.r_max.map(|v| v.to_string()));
        put("n_r", self.n_r.map(|v| v.to_string()));
        put("n_theta", self.n_theta.map(|v| v.to_string()));
        s
    }

    /// Values set in `other` replace those in `self`.
    pub fn overlay(&mut self, other: &RunConfig) {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f.clone(); } )* };
        }
        take!(
            preset,
            e,
            m,
            hbar,
            c,
            c1,
            c2,
            r0,
            theta0,
            axis,
            n_radial,
            n_polar,
            rel_tol,
            h,
            order,
            out,
            seed,
            constraint_points,
            r_min,
            r_max,
            n_r,
            n_theta
        );
    }

    /// Preset values, overridden by any explicit constant.
    pub fn constants(&self) -> Result<PhysicalConstants> {
        let (mut e, mut m, mut hbar, mut c) = (None, None, None, None);
        match self.preset {
            Some(Preset::Dimensionless) => (e, m, c) = (Some(1.0), Some(1.0), Some(1.0)),
            Some(Preset::Physical) => {
                let k = PhysicalConstants::physical();
                (e, m, hbar, c) = (Some(k.e), Some(k.m), Some(k.hbar), Some(k.c));
            }
            None => {}
        }
        let e = self.e.or(e);
        let m = self.m.or(m);
        let hbar = self.hbar.or(hbar);
        let c = self.c.or(c);
        let missing: Vec<&str> = [("e", e), ("m", m), ("hbar", hbar), ("c", c)]
            .iter()
            .filter(|(_, v)| v.is_none())
            .map(|(n, _)| *n)
            .collect();
        if !missing.is_empty() {
            return Err(Error::Config(format!("missing constants: {}", missing.join(", "))));
        }
        PhysicalConstants::new(e.unwrap(), m.unwrap(), hbar.unwrap(), c.unwrap())
    }

    /// Published parameters with any of `c1, c2, r0, theta0, axis` replaced;
    /// `None` when no override is set.
    pub fn custom_params(&self, k: &PhysicalConstants) -> Result<Option<SolitonParams>> {
        if self.c1.is_none() && self.c2.is_none() && self.r0.is_none() && self.theta0.is_none() && self.axis.is_none() {
            return Ok(None);
        }
        let p = paper_params(k);
        SolitonParams::new(
            self.c1.unwrap_or(p.c1),
            self.c2.unwrap_or(p.c2),
            self.r0.unwrap_or(p.r0),
            self.axis.unwrap_or(p.axis),
            self.theta0.unwrap_or(p.theta0),
            p.c,
        )
        .map(Some)
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec> {
        let d = QuadratureSpec::default();
        QuadratureSpec::new(
            self.n_radial.unwrap_or(d.n_radial),
            self.n_polar.unwrap_or(d.n_polar),
            self.rel_tol.unwrap_or(d.rel_tol),
        )
    }

    pub fn out_dir(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from("."))
    }
}
