use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("field is singular at the origin (r = {r:e})")]
    SingularPoint { r: f64 },

    #[error("point lies on the shell r = r0 = {r0:e} (r = {r:e}); one-sided quantity required")]
    OnShell { r: f64, r0: f64 },

    #[error("stencil of reach {reach:e} at r = {r:e} crosses the interface at r = {interface:e}")]
    StencilCollision { r: f64, reach: f64, interface: f64 },

    #[error("quadrature did not converge: {quantity} changed by {rel_change:e} (tolerance {tol:e})")]
    Tolerance { quantity: &'static str, rel_change: f64, tol: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
