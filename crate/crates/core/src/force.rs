//! Thin- and thick-wall force laws for braided pneumatic actuators.
//!
//! The sign convention is tensile-positive throughout: a contracting muscle
//! (braid angle below ~54.74 degrees) produces positive force, an extending
//! muscle (angle above) produces negative force. When one force is called
//! "higher" than another in reports, magnitudes are meant.
//!
//! Two algebraically equivalent parameterizations of the thick-wall law are
//! provided. [`force_thick`] is written against the actuation-invariant
//! theoretical diameter `D0`; [`normalized_force`] (and
//! [`force_from_normalized`]) against the instantaneous diameter `D`, which
//! itself changes with the braid angle — callers must supply geometry and
//! wall fractions taken at the *same* configuration. The elastomer's elastic
//! restoring forces are outside the model: only the volumetric effect of the
//! wall is captured.

use crate::error::{
    ensure_angle_closed_top, ensure_angle_open, ensure_non_negative, ensure_positive, ModelError,
    Result,
};
use crate::geometry::BraidSpec;
use std::f64::consts::PI;

/// Elastomer wall description: either an absolute thickness in meters or a
/// fraction of the external diameter.
///
/// The relative form is state-dependent (the diameter changes with the braid
/// angle), so conversions always take an explicit diameter — there is no
/// implicit "current" configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WallSpec {
    /// Wall thickness `t_k` in meters.
    Absolute(f64),
    /// Wall thickness as a fraction of the external diameter,
    /// `t_hat = t_k / D`, in [0, 0.5].
    Relative(f64),
}

impl WallSpec {
    /// Absolute thickness in meters; must be non-negative.
    pub fn absolute(thickness: f64) -> Result<Self> {
        ensure_non_negative("wall thickness t_k", thickness)?;
        Ok(Self::Absolute(thickness))
    }

    /// Relative thickness in [0, 0.5]: zero is no wall, one half leaves no
    /// hollow interior.
    pub fn relative(fraction: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&fraction) || !fraction.is_finite() {
            return Err(ModelError::RelativeThicknessOutOfRange { value: fraction });
        }
        Ok(Self::Relative(fraction))
    }

    /// Absolute thickness at the given external diameter.
    pub fn thickness_at(&self, diameter: f64) -> Result<f64> {
        ensure_positive("diameter D", diameter)?;
        Ok(match self {
            Self::Absolute(t) => *t,
            Self::Relative(f) => f * diameter,
        })
    }

    /// Relative thickness at the given external diameter. Fails with a
    /// "wall exceeds radius" error when the wall is more than half the
    /// diameter.
    pub fn fraction_at(&self, diameter: f64) -> Result<f64> {
        ensure_positive("diameter D", diameter)?;
        match self {
            Self::Absolute(t) => {
                let f = t / diameter;
                if f > 0.5 {
                    Err(ModelError::WallExceedsRadius {
                        thickness: *t,
                        diameter,
                    })
                } else {
                    Ok(f)
                }
            }
            Self::Relative(f) => Ok(*f),
        }
    }
}

/// Internal gauge pressure in pascals; non-negative (vacuum actuation is out
/// of scope).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GaugePressure(f64);

impl GaugePressure {
    pub fn new(pascals: f64) -> Result<Self> {
        ensure_non_negative("gauge pressure", pascals)?;
        Ok(Self(pascals))
    }

    pub fn pascals(&self) -> f64 {
        self.0
    }
}

/// Force per unit pressure in N/Pa, signed: positive is tensile.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ForcePerPressure(pub f64);

impl ForcePerPressure {
    /// Value in N/Pa.
    pub fn per_pascal(&self) -> f64 {
        self.0
    }

    /// Value in N/kPa, the customary reporting unit.
    pub fn per_kilopascal(&self) -> f64 {
        self.0 * 1e3
    }

    /// True for contracting output (positive sign).
    pub fn is_tensile(&self) -> bool {
        self.0 > 0.0
    }
}

/// Thin-walled force law:
/// `F = (pi P / 4) D0^2 (3 cos^2(theta) - 1)`.
///
/// Positive below the zero-force angle `arccos(1/sqrt(3))`, zero at it,
/// negative (extending) above.
pub fn force_thin(braid: &BraidSpec, theta: f64, pressure: GaugePressure) -> Result<f64> {
    ensure_angle_open(theta)?;
    let d0 = braid.max_diameter();
    let c = theta.cos();
    Ok(PI * pressure.pascals() / 4.0 * d0 * d0 * (3.0 * c * c - 1.0))
}

/// Thick-walled force law, adding the volumetric wall term to [`force_thin`]:
/// `F = F_thin + pi P (D0 t_k (2 sin(theta) - 1/sin(theta)) - t_k^2)`.
///
/// Fails when the wall is more than half the diameter at the evaluated
/// configuration.
pub fn force_thick(
    braid: &BraidSpec,
    theta: f64,
    wall: &WallSpec,
    pressure: GaugePressure,
) -> Result<f64> {
    ensure_angle_open(theta)?;
    let d0 = braid.max_diameter();
    let s = theta.sin();
    let diameter = d0 * s;
    let t = wall.thickness_at(diameter)?;
    // rejects walls thicker than the current radius
    wall.fraction_at(diameter)?;
    let thin = force_thin(braid, theta, pressure)?;
    Ok(thin + PI * pressure.pascals() * (d0 * t * (2.0 * s - 1.0 / s) - t * t))
}

/// Force normalized by pressure and external cross-sectional area, as a
/// function of the braid angle and the relative wall thickness:
/// `F_hat = -4 t_hat^2 + (8 - 4 csc^2(theta)) t_hat + (2 csc^2(theta) - 3)`.
///
/// Defined on (0, pi/2]; at exactly 90 degrees with no wall it evaluates to
/// -1, the piston-equivalent extension magnitude.
pub fn normalized_force(theta: f64, rel_thickness: f64) -> Result<f64> {
    ensure_angle_closed_top(theta)?;
    if !(0.0..=0.5).contains(&rel_thickness) || !rel_thickness.is_finite() {
        return Err(ModelError::RelativeThicknessOutOfRange {
            value: rel_thickness,
        });
    }
    let csc = 1.0 / theta.sin();
    let csc2 = csc * csc;
    let t = rel_thickness;
    Ok(-4.0 * t * t + (8.0 - 4.0 * csc2) * t + (2.0 * csc2 - 3.0))
}

/// Dimensional force from the normalized surface:
/// `F = F_hat(theta, t_hat) * P * A`.
///
/// When `area` and `rel_thickness` come from the same configuration as
/// `theta`, this equals [`force_thick`] identically.
pub fn force_from_normalized(
    theta: f64,
    rel_thickness: f64,
    pressure: GaugePressure,
    external_area: f64,
) -> Result<f64> {
    ensure_positive("external area A", external_area)?;
    Ok(normalized_force(theta, rel_thickness)? * pressure.pascals() * external_area)
}

/// Braid angle at which the normalized force vanishes for a given relative
/// wall thickness: `sin^2(theta*) = 2 / (3 - 2 t_hat)`.
///
/// `arccos(1/sqrt(3))` (~54.7356 degrees) at zero thickness, rising to
/// 90 degrees as the wall fills the interior. The closed form is validated
/// against a bracketing bisection in the test suite.
pub fn zero_force_angle(rel_thickness: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&rel_thickness) || !rel_thickness.is_finite() {
        return Err(ModelError::RelativeThicknessOutOfRange {
            value: rel_thickness,
        });
    }
    Ok((2.0 / (3.0 - 2.0 * rel_thickness)).sqrt().asin())
}

/// Evaluates the thick-wall force in both parameterizations — the
/// `D0`-based form of [`force_thick`] and the instantaneous-diameter form
/// `(pi/4) D^2 (2 csc^2 - 3) + pi (D t_k (2 - csc^2) - t_k^2)` — at one
/// configuration and returns their deviation relative to the magnitude of
/// the summed force terms.
///
/// The two are algebraically identical; the deviation is a rounding-level
/// self-check and stays below 1e-12 on the whole valid domain. The term
/// magnitude (not the force value) is the reference scale because the
/// terms cancel on the zero-force surface, where a forward relative error
/// would divide by an arbitrarily small number.
pub fn parameterization_deviation(
    theta: f64,
    braid: &BraidSpec,
    wall: &WallSpec,
) -> Result<f64> {
    ensure_angle_open(theta)?;
    let unit = GaugePressure::new(1.0)?;
    let via_d0 = force_thick(braid, theta, wall, unit)?;

    let s = theta.sin();
    let csc2 = 1.0 / (s * s);
    let d = braid.max_diameter() * s;
    let t = wall.thickness_at(d)?;
    let area_term = PI / 4.0 * d * d * (2.0 * csc2 - 3.0);
    let wall_term = PI * (d * t * (2.0 - csc2) - t * t);
    let via_d = area_term + wall_term;

    let scale = area_term.abs().max(wall_term.abs()).max(via_d0.abs());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((via_d0 - via_d).abs() / scale)
}

/// Zero-force angle of the thin-wall law, `arccos(1/sqrt(3))`.
pub fn thin_zero_force_angle() -> f64 {
    (1.0 / 3.0_f64.sqrt()).acos()
}
