//! Braid kinematics and parameter consistency.
//!
//! A McKibben muscle is modeled as a cylinder whose motion is governed by an
//! inextensible fiber braid. Two quantities are fixed by fabrication: the
//! unwound fiber length `b` and the number of turns `N` each fiber makes
//! around the axis. The single configuration variable is the braid angle
//! `theta`, measured from the long axis, from which the outer dimensions
//! follow:
//!
//! ```text
//! L  = b cos(theta)                 axial length
//! D  = D0 sin(theta)                diameter, with D0 = b / (N pi)
//! b^2 = L^2 + (D pi N)^2            Pythagorean closure
//! ```
//!
//! A measured parameter set (L, D, theta, N) is *self-consistent* when all
//! three relations agree on `b`. [`check_consistency`] quantifies the
//! disagreement; [`resolve`] rebuilds a consistent set from the
//! easy-to-measure triple (L, D, N), discarding any supplied angle.
//!
//! Internal units are SI throughout (meters, radians).

use crate::error::{
    ensure_angle_open, ensure_positive, ModelError, Result,
};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// The actuation-invariant description of a braid: fiber length `b` (m) and
/// turn count `N` (dimensionless, fractional turns allowed).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BraidSpec {
    fiber_length: f64,
    turns: f64,
}

impl BraidSpec {
    /// Both `fiber_length` (m) and `turns` must be strictly positive.
    pub fn new(fiber_length: f64, turns: f64) -> Result<Self> {
        ensure_positive("fiber length b", fiber_length)?;
        ensure_positive("turn count N", turns)?;
        Ok(Self { fiber_length, turns })
    }

    /// Unwound fiber length `b` in meters.
    pub fn fiber_length(&self) -> f64 {
        self.fiber_length
    }

    /// Number of times the fibers circle the axis.
    pub fn turns(&self) -> f64 {
        self.turns
    }

    /// Theoretical diameter `D0 = b / (N pi)` reached in the 90-degree limit.
    pub fn max_diameter(&self) -> f64 {
        self.fiber_length / (self.turns * PI)
    }

    /// Configuration of this braid at the given angle.
    pub fn at(&self, theta: f64) -> Result<GeometryState> {
        GeometryState::new(*self, theta)
    }
}

/// One instantaneous configuration: a braid at a given angle, with the
/// derived length, diameter, and external cross-sectional area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryState {
    braid: BraidSpec,
    theta: f64,
}

impl GeometryState {
    /// `theta` must lie strictly inside (0, pi/2); both endpoints are
    /// degenerate (zero diameter / zero length) and are rejected.
    pub fn new(braid: BraidSpec, theta: f64) -> Result<Self> {
        ensure_angle_open(theta)?;
        Ok(Self { braid, theta })
    }

    pub fn braid(&self) -> &BraidSpec {
        &self.braid
    }

    /// Braid angle in radians.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Axial length `L = b cos(theta)` in meters.
    pub fn length(&self) -> f64 {
        self.braid.fiber_length * self.theta.cos()
    }

    /// External diameter `D = D0 sin(theta)` in meters.
    pub fn diameter(&self) -> f64 {
        self.braid.max_diameter() * self.theta.sin()
    }

    /// External cross-sectional area `A = (pi/4) D^2` in square meters.
    pub fn external_area(&self) -> f64 {
        let d = self.diameter();
        FRAC_PI_4 * d * d
    }
}

/// A raw, possibly inconsistent, measured parameter set.
///
/// `theta` is optional: the consistency checker degrades gracefully when the
/// angle was not measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawParameterSet {
    pub length: f64,
    pub diameter: f64,
    pub theta: Option<f64>,
    pub turns: f64,
}

impl RawParameterSet {
    pub fn new(length: f64, diameter: f64, theta: Option<f64>, turns: f64) -> Result<Self> {
        ensure_positive("length L", length)?;
        ensure_positive("diameter D", diameter)?;
        ensure_positive("turn count N", turns)?;
        if let Some(t) = theta {
            ensure_angle_open(t)?;
        }
        Ok(Self {
            length,
            diameter,
            theta,
            turns,
        })
    }
}

/// Result of checking a [`RawParameterSet`] against the model equations.
///
/// The fiber length is estimated three ways: inverting the length relation
/// (needs `theta`), inverting the diameter relation (needs `theta`), and
/// from the Pythagorean closure (needs only L, D, N). `max_relative_spread`
/// is `(max - min) / mean` over the available estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyReport {
    /// `b = L / cos(theta)`; `None` when no angle was supplied.
    pub b_from_length: Option<f64>,
    /// `b = D N pi / sin(theta)`; `None` when no angle was supplied.
    pub b_from_diameter: Option<f64>,
    /// `b = sqrt(L^2 + (D pi N)^2)`; always available.
    pub b_from_pythagoras: f64,
    /// Spread of the estimates, `(max - min) / mean`.
    pub max_relative_spread: f64,
    /// `max_relative_spread <= tolerance`.
    pub consistent: bool,
    /// Tolerance the verdict was taken at.
    pub tolerance: f64,
    /// Angle that was supplied with the raw set, if any (radians).
    pub supplied_theta: Option<f64>,
}

impl ConsistencyReport {
    /// True when the verdict rests on the Pythagorean estimate alone.
    pub fn theta_absent(&self) -> bool {
        self.supplied_theta.is_none()
    }
}

/// Axial length `L = b cos(theta)` of a braid at `theta`.
pub fn length_of(braid: &BraidSpec, theta: f64) -> Result<f64> {
    ensure_angle_open(theta)?;
    Ok(braid.fiber_length() * theta.cos())
}

/// Diameter `D = (b / (N pi)) sin(theta)` of a braid at `theta`.
pub fn diameter_of(braid: &BraidSpec, theta: f64) -> Result<f64> {
    ensure_angle_open(theta)?;
    Ok(braid.max_diameter() * theta.sin())
}

/// Fiber length from the Pythagorean closure, `b = sqrt(L^2 + (D pi N)^2)`.
pub fn fiber_length_from(length: f64, diameter: f64, turns: f64) -> Result<f64> {
    ensure_positive("length L", length)?;
    ensure_non_negative_diameter(diameter)?;
    ensure_positive("turn count N", turns)?;
    let circumferential = diameter * PI * turns;
    Ok(length.hypot(circumferential))
}

// D = 0 is admitted here (degenerate straight fiber, b = L); everywhere else
// diameters are strictly positive.
fn ensure_non_negative_diameter(diameter: f64) -> Result<f64> {
    if diameter >= 0.0 && diameter.is_finite() {
        Ok(diameter)
    } else {
        Err(ModelError::Negative {
            name: "diameter D",
            value: diameter,
        })
    }
}

/// Inverts the length relation: `theta = arccos(L / b)`, in (0, pi/2).
pub fn theta_from_length(braid: &BraidSpec, length: f64) -> Result<f64> {
    if length <= 0.0 || length >= braid.fiber_length() || !length.is_finite() {
        return Err(ModelError::LengthExceedsFiber {
            length,
            fiber_length: braid.fiber_length(),
        });
    }
    Ok((length / braid.fiber_length()).acos())
}

/// Inverts the diameter relation: `theta = arcsin(D / D0)`, restricted to
/// the branch (0, pi/2).
pub fn theta_from_diameter(braid: &BraidSpec, diameter: f64) -> Result<f64> {
    let d0 = braid.max_diameter();
    if diameter <= 0.0 || diameter >= d0 || !diameter.is_finite() {
        return Err(ModelError::DiameterExceedsMax {
            diameter,
            max_diameter: d0,
        });
    }
    Ok((diameter / d0).asin())
}

/// Estimates the fiber length three ways and reports the spread.
///
/// When `raw.theta` is absent only the Pythagorean estimate exists, the
/// spread is zero, and the report is flagged via [`ConsistencyReport::theta_absent`].
pub fn check_consistency(raw: &RawParameterSet, tolerance: f64) -> Result<ConsistencyReport> {
    ensure_positive("tolerance", tolerance)?;
    let b_pyth = fiber_length_from(raw.length, raw.diameter, raw.turns)?;

    let (b_len, b_dia) = match raw.theta {
        Some(theta) => {
            ensure_angle_open(theta)?;
            (
                Some(raw.length / theta.cos()),
                Some(raw.diameter * raw.turns * PI / theta.sin()),
            )
        }
        None => (None, None),
    };

    let mut estimates = vec![b_pyth];
    estimates.extend(b_len);
    estimates.extend(b_dia);
    let max = estimates.iter().cloned().fold(f64::MIN, f64::max);
    let min = estimates.iter().cloned().fold(f64::MAX, f64::min);
    let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
    let spread = (max - min) / mean;

    Ok(ConsistencyReport {
        b_from_length: b_len,
        b_from_diameter: b_dia,
        b_from_pythagoras: b_pyth,
        max_relative_spread: spread,
        consistent: spread <= tolerance,
        tolerance,
        supplied_theta: raw.theta,
    })
}

/// Rebuilds a self-consistent braid from the easy-to-measure triple
/// (L, D, N): `b` from the Pythagorean closure, `theta` from the length
/// relation. Any measured angle should be discarded in favor of the result
/// (pass it to [`check_consistency`] to quantify the disagreement).
///
/// By construction the returned angle satisfies the diameter relation as
/// well; the two inversions agree to within a few ulp.
pub fn resolve(length: f64, diameter: f64, turns: f64) -> Result<(BraidSpec, f64)> {
    ensure_positive("diameter D", diameter)?;
    let b = fiber_length_from(length, diameter, turns)?;
    let braid = BraidSpec::new(b, turns)?;
    // tan(theta) = D pi N / L; atan2 stays well-conditioned at both ends of
    // the angle range, where the arccos/arcsin inversions degrade
    let theta = (diameter * PI * turns).atan2(length);
    debug_assert!(
        !(1e-4..=FRAC_PI_2 - 1e-4).contains(&theta)
            || ((theta_from_length(&braid, length).unwrap_or(theta) - theta).abs() < 1e-10
                && (theta_from_diameter(&braid, diameter).unwrap_or(theta) - theta).abs() < 1e-10),
        "angle inversions disagree away from the degenerate ends"
    );
    Ok((braid, theta))
}

/// A stroke between two braid angles.
///
/// For an extension stroke of an extending muscle the angle decreases
/// (`theta_final < theta_initial`), the length grows, and `gamma < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeSpec {
    theta_initial: f64,
    theta_final: f64,
}

impl StrokeSpec {
    pub fn new(theta_initial: f64, theta_final: f64) -> Result<Self> {
        ensure_angle_open(theta_initial)?;
        ensure_angle_open(theta_final)?;
        Ok(Self {
            theta_initial,
            theta_final,
        })
    }

    pub fn theta_initial(&self) -> f64 {
        self.theta_initial
    }

    pub fn theta_final(&self) -> f64 {
        self.theta_final
    }

    /// Diameter scaling factor `gamma = sin(theta_final) / sin(theta_initial)`.
    pub fn gamma(&self) -> f64 {
        self.theta_final.sin() / self.theta_initial.sin()
    }
}

/// Diameter scaling factor of a stroke; see [`StrokeSpec::gamma`].
pub fn gamma_of(stroke: &StrokeSpec) -> f64 {
    stroke.gamma()
}
