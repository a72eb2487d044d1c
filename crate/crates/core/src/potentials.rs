//! The radial potential family and its closed-form derivatives.
//!
//! Three families are supported:
//!
//! - `Coulomb`: Z/r, singular at the origin.
//! - `Yukawa`: α²e^{−cr}/r, screened but still singular at the origin
//!   (its radial derivative does not vanish there).
//! - `Softened`: Z·e^{−C/r}/r, smooth on all of ℝ³ once extended by 0 at
//!   the origin; every derivative vanishes as r → 0.
//!
//! Evaluation is total for the softened family (the removable
//! discontinuity at r = 0 evaluates to exactly 0); the singular families
//! return an explicit error at r = 0 instead of ±∞ so downstream grid
//! code never sees non-finite values.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exponent threshold below which e^{−C/r} is flushed to exactly 0.
///
/// exp(−746) underflows to 0 in f64; flushing at 745 before forming the
/// power-law prefactors prevents 0·∞ = NaN when C/r is huge.
const EXP_FLUSH: f64 = 745.0;

#[derive(Debug, Error, PartialEq)]
pub enum PotentialError {
    #[error("potential family is singular at r = 0")]
    SingularOrigin,
    #[error("potential is unbounded; no finite sup norm")]
    Unbounded,
    #[error("operation requires the softened family")]
    UnsupportedFamily,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Trajectory(#[from] TrajectoryError),
}

#[derive(Debug, Error, PartialEq)]
pub enum TrajectoryError {
    #[error("trajectory needs at least one knot")]
    Empty,
    #[error("knot times must be strictly increasing (knot {index})")]
    NonMonotonicKnots { index: usize },
    #[error("time {t} outside trajectory span [{start}, {end}]")]
    OutOfSpan { t: f64, start: f64, end: f64 },
    #[error("non-finite knot data (knot {index})")]
    NonFiniteKnot { index: usize },
}

/// A member of the radial potential family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PotentialSpec {
    Coulomb {
        /// Nuclear charge Z > 0.
        charge: f64,
    },
    Yukawa {
        /// Coupling α; the prefactor is α².
        amplitude: f64,
        /// Screening rate c > 0 (inverse Bohr).
        screening: f64,
    },
    Softened {
        /// Softening length C > 0 (Bohr).
        softening: f64,
        /// Nuclear charge Z > 0.
        charge: f64,
    },
}

impl PotentialSpec {
    pub fn coulomb() -> Self {
        PotentialSpec::Coulomb { charge: 1.0 }
    }

    pub fn softened(softening: f64) -> Result<Self, PotentialError> {
        Self::softened_charged(softening, 1.0)
    }

    pub fn softened_charged(softening: f64, charge: f64) -> Result<Self, PotentialError> {
        let spec = PotentialSpec::Softened { softening, charge };
        spec.validate()?;
        Ok(spec)
    }

    pub fn yukawa(amplitude: f64, screening: f64) -> Result<Self, PotentialError> {
        let spec = PotentialSpec::Yukawa {
            amplitude,
            screening,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), PotentialError> {
        let bad = |msg: &str| Err(PotentialError::InvalidParameter(msg.to_string()));
        match *self {
            PotentialSpec::Coulomb { charge } => {
                if !(charge > 0.0) || !charge.is_finite() {
                    return bad("Coulomb charge must be positive and finite");
                }
            }
            PotentialSpec::Yukawa {
                amplitude,
                screening,
            } => {
                if !(screening > 0.0) || !screening.is_finite() {
                    return bad("Yukawa screening must be positive and finite");
                }
                if !amplitude.is_finite() {
                    return bad("Yukawa amplitude must be finite");
                }
            }
            PotentialSpec::Softened { softening, charge } => {
                if !(softening > 0.0) || !softening.is_finite() {
                    return bad("softening length must be positive and finite");
                }
                if !(charge > 0.0) || !charge.is_finite() {
                    return bad("charge must be positive and finite");
                }
            }
        }
        Ok(())
    }

    /// Evaluate the potential at radius `r` ≥ 0.
    ///
    /// Softened: Z·e^{−C/r}/r, exactly 0 at r = 0 (removable
    /// discontinuity). Coulomb and Yukawa reject r = 0.
    pub fn eval(&self, r: f64) -> Result<f64, PotentialError> {
        match *self {
            PotentialSpec::Coulomb { charge } => {
                if r == 0.0 {
                    Err(PotentialError::SingularOrigin)
                } else {
                    Ok(charge / r)
                }
            }
            PotentialSpec::Yukawa {
                amplitude,
                screening,
            } => {
                if r == 0.0 {
                    Err(PotentialError::SingularOrigin)
                } else {
                    Ok(amplitude * amplitude * (-screening * r).exp() / r)
                }
            }
            PotentialSpec::Softened { softening, charge } => {
                Ok(charge * softened_shape(softening, r))
            }
        }
    }

    /// j-th Cartesian component of ∇V at `x` (j ∈ {0,1,2}).
    ///
    /// Softened: Z·e^{−C/r}·x_j(C − r)/r⁴, with value 0 at x = 0.
    /// Yukawa and Coulomb are singular at the origin.
    pub fn grad_component(&self, x: [f64; 3], j: usize) -> Result<f64, PotentialError> {
        assert!(j < 3, "axis index out of range");
        let r = norm3(x);
        match *self {
            PotentialSpec::Coulomb { charge } => {
                if r == 0.0 {
                    Err(PotentialError::SingularOrigin)
                } else {
                    Ok(-charge * x[j] / (r * r * r))
                }
            }
            PotentialSpec::Yukawa {
                amplitude,
                screening,
            } => {
                if r == 0.0 {
                    Err(PotentialError::SingularOrigin)
                } else {
                    // dV/dr = -α² e^{-cr}(1 + cr)/r²; multiply by x_j/r.
                    let dvdr =
                        -amplitude * amplitude * (-screening * r).exp() * (1.0 + screening * r)
                            / (r * r);
                    Ok(dvdr * x[j] / r)
                }
            }
            PotentialSpec::Softened { softening, charge } => {
                if r == 0.0 || softening / r > EXP_FLUSH {
                    return Ok(0.0);
                }
                let r2 = r * r;
                Ok(charge * x[j] * (softening - r) / (r2 * r2) * (-softening / r).exp())
            }
        }
    }

    /// Laplacian ΔV at radius `r` > 0 (softened family only):
    /// Z·e^{−C/r}·(C² − 2Cr)/r⁵.
    pub fn laplacian(&self, r: f64) -> Result<f64, PotentialError> {
        match *self {
            PotentialSpec::Softened { softening, charge } => {
                if !(r > 0.0) {
                    return Err(PotentialError::InvalidParameter(
                        "laplacian requires r > 0".to_string(),
                    ));
                }
                if softening / r > EXP_FLUSH {
                    return Ok(0.0);
                }
                let r5 = r * r * r * r * r;
                Ok(charge * softening * (softening - 2.0 * r) / r5 * (-softening / r).exp())
            }
            _ => Err(PotentialError::UnsupportedFamily),
        }
    }

    /// Supremum of the potential over r > 0.
    ///
    /// Only the softened family is bounded: sup = Z/(e·C), attained at
    /// r = C. Coulomb and Yukawa diverge at the origin.
    pub fn sup_norm(&self) -> Result<f64, PotentialError> {
        match *self {
            PotentialSpec::Softened { softening, charge } => {
                Ok(charge / (std::f64::consts::E * softening))
            }
            _ => Err(PotentialError::Unbounded),
        }
    }

    /// Evaluate the analytic continuation V(z) at complex radius `z`.
    ///
    /// Used by the complex-scaling machinery; the softened family decays
    /// in every sector |arg z| < π/2.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64, PotentialError> {
        if z == Complex64::ZERO {
            return match self {
                PotentialSpec::Softened { .. } => Ok(Complex64::ZERO),
                _ => Err(PotentialError::SingularOrigin),
            };
        }
        match *self {
            PotentialSpec::Coulomb { charge } => Ok(charge / z),
            PotentialSpec::Yukawa {
                amplitude,
                screening,
            } => Ok(amplitude * amplitude * (-screening * z).exp() / z),
            PotentialSpec::Softened { softening, charge } => {
                let w = -softening / z;
                if w.re < -EXP_FLUSH {
                    return Ok(Complex64::ZERO);
                }
                Ok(charge * w.exp() / z)
            }
        }
    }

    pub fn is_softened(&self) -> bool {
        matches!(self, PotentialSpec::Softened { .. })
    }
}

/// e^{−C/r}/r with the removable discontinuity closed: 0 at r = 0.
#[inline]
pub fn softened_shape(softening: f64, r: f64) -> f64 {
    if r == 0.0 || softening / r > EXP_FLUSH {
        0.0
    } else {
        (-softening / r).exp() / r
    }
}

#[inline]
fn norm3(x: [f64; 3]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

/// One sampled point of a nuclear path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryKnot {
    pub t: f64,
    pub r: [f64; 3],
}

/// Continuous nuclear path r(t), piecewise linear between knots.
///
/// Only continuity is required of the path, so linear interpolation is
/// the whole story; no smoother interpolation is offered. A single-knot
/// trajectory is constant and spans all times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TrajectoryKnot>", into = "Vec<TrajectoryKnot>")]
pub struct NucleusTrajectory {
    knots: Vec<TrajectoryKnot>,
}

impl NucleusTrajectory {
    pub fn from_knots(knots: Vec<TrajectoryKnot>) -> Result<Self, TrajectoryError> {
        if knots.is_empty() {
            return Err(TrajectoryError::Empty);
        }
        for (i, k) in knots.iter().enumerate() {
            if !k.t.is_finite() || k.r.iter().any(|c| !c.is_finite()) {
                return Err(TrajectoryError::NonFiniteKnot { index: i });
            }
            if i > 0 && k.t <= knots[i - 1].t {
                return Err(TrajectoryError::NonMonotonicKnots { index: i });
            }
        }
        Ok(NucleusTrajectory { knots })
    }

    /// Trajectory pinned at a fixed position for all times.
    pub fn stationary(position: [f64; 3]) -> Self {
        NucleusTrajectory {
            knots: vec![TrajectoryKnot {
                t: 0.0,
                r: position,
            }],
        }
    }

    pub fn knots(&self) -> &[TrajectoryKnot] {
        &self.knots
    }

    /// Time span covered by the trajectory; a single knot covers all t.
    pub fn span(&self) -> (f64, f64) {
        if self.knots.len() == 1 {
            (f64::NEG_INFINITY, f64::INFINITY)
        } else {
            (self.knots[0].t, self.knots[self.knots.len() - 1].t)
        }
    }

    /// Interpolated position at time `t`.
    pub fn position(&self, t: f64) -> Result<[f64; 3], TrajectoryError> {
        if self.knots.len() == 1 {
            return Ok(self.knots[0].r);
        }
        let (start, end) = self.span();
        if t < start || t > end {
            return Err(TrajectoryError::OutOfSpan { t, start, end });
        }
        let idx = self
            .knots
            .partition_point(|k| k.t <= t)
            .min(self.knots.len() - 1)
            .max(1);
        let a = &self.knots[idx - 1];
        let b = &self.knots[idx];
        let w = (t - a.t) / (b.t - a.t);
        Ok([
            a.r[0] + w * (b.r[0] - a.r[0]),
            a.r[1] + w * (b.r[1] - a.r[1]),
            a.r[2] + w * (b.r[2] - a.r[2]),
        ])
    }

    /// Parse the trajectory file format: a JSON array of
    /// `{"t": <time>, "r": [x, y, z]}` in atomic units.
    pub fn from_json(text: &str) -> Result<Self, PotentialError> {
        let knots: Vec<TrajectoryKnot> = serde_json::from_str(text)
            .map_err(|e| PotentialError::InvalidParameter(format!("trajectory JSON: {e}")))?;
        Ok(Self::from_knots(knots)?)
    }
}

impl TryFrom<Vec<TrajectoryKnot>> for NucleusTrajectory {
    type Error = TrajectoryError;
    fn try_from(knots: Vec<TrajectoryKnot>) -> Result<Self, Self::Error> {
        Self::from_knots(knots)
    }
}

impl From<NucleusTrajectory> for Vec<TrajectoryKnot> {
    fn from(t: NucleusTrajectory) -> Self {
        t.knots
    }
}

/// V(x, t) = V(|x − r(t)|) with the nucleus at its interpolated position.
pub fn eval_moving(
    spec: &PotentialSpec,
    x: [f64; 3],
    t: f64,
    trajectory: &NucleusTrajectory,
) -> Result<f64, PotentialError> {
    let pos = trajectory.position(t)?;
    let d = [x[0] - pos[0], x[1] - pos[1], x[2] - pos[2]];
    spec.eval(norm3(d))
}

/// Total multi-center attraction −Σ_j Σ_m V_m(|x_j − r_m(t)|) over all
/// electrons j and nuclei m.
pub fn eval_multicenter(
    centers: &[(PotentialSpec, NucleusTrajectory)],
    electrons: &[[f64; 3]],
    t: f64,
) -> Result<f64, PotentialError> {
    let mut total = 0.0;
    for (spec, traj) in centers {
        let pos = traj.position(t)?;
        for x in electrons {
            let d = [x[0] - pos[0], x[1] - pos[1], x[2] - pos[2]];
            total -= spec.eval(norm3(d))?;
        }
    }
    Ok(total)
}

/// Residual of the radial-momentum eigenrelation r·d/dr(r·V) = C·V for
/// the softened family, using the analytic derivative
/// d/dr(r·V) = Z·e^{−C/r}·C/r².
///
/// Returns the maximum residual over the sample radii.
pub fn radial_momentum_residual(
    spec: &PotentialSpec,
    r_samples: &[f64],
) -> Result<f64, PotentialError> {
    let PotentialSpec::Softened { softening, charge } = *spec else {
        return Err(PotentialError::UnsupportedFamily);
    };
    let mut worst: f64 = 0.0;
    for &r in r_samples {
        if !(r > 0.0) {
            return Err(PotentialError::InvalidParameter(
                "samples must be positive".to_string(),
            ));
        }
        let rv_prime = if softening / r > EXP_FLUSH {
            0.0
        } else {
            charge * softening / (r * r) * (-softening / r).exp()
        };
        let residual = (r * rv_prime - softening * spec.eval(r)?).abs();
        worst = worst.max(residual);
    }
    Ok(worst)
}
