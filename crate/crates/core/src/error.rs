use thiserror::Error;

use crate::profile::Axis;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IconError {
    #[error("invalid icon spec: {0}")]
    InvalidSpec(String),
    #[error("axis {axis} is inconsistent with n = {n}")]
    ParityMismatch { n: u32, axis: Axis },
    #[error("twist k = {k} is degenerate for n = {n}: the reglued halves reproduce the uncut solid")]
    DegenerateTwist { n: u32, k: u32 },
    #[error("mesh is not a closed 2-manifold: {0}")]
    NonManifold(String),
    #[error("template piece has no pair of congruent semicircular caps")]
    NoCaps,
    #[error("perimeters {a} and {b} differ beyond tolerance")]
    IsoperimetryViolation { a: f64, b: f64 },
    #[error("expected a positive value, got {0}")]
    NonPositive(f64),
    #[error("invalid stadium: {0}")]
    InvalidStadium(String),
    #[error("template boundary does not close (gap {0})")]
    OpenBoundary(f64),
}

pub type Result<T, E = IconError> = std::result::Result<T, E>;
