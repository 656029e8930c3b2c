//! Conservation-of-energy machinery.
//!
//! For an ideal actuator at constant gauge pressure, flow energy in equals
//! mechanical work out:
//!
//! ```text
//! P' dV = F_avg dL
//! ```
//!
//! The cylinder volume of a braid at angle theta is `V = (pi/4) D^2 L`; the
//! change over a stroke can be written either from the two end states or in
//! the gamma form `(pi/4) D1^2 (gamma^2 L2 - L1)` with
//! `gamma = sin(theta2)/sin(theta1)`. The thin-wall force law is exactly
//! `-P' dV/dL`, so the work integral over any stroke equals `-P' dV`; the
//! adaptive quadrature here serves as an independent oracle for that
//! identity. The thick-wall law integrates to the change of the *enclosed*
//! gas volume instead, which the audit reports for information.
//!
//! The pressure is held constant over the stroke; pressure trajectories are
//! out of scope.

use crate::error::{ModelError, Result};
use crate::force::{force_thick, force_thin, GaugePressure, WallSpec};
use crate::geometry::{theta_from_length, BraidSpec, StrokeSpec};
use std::f64::consts::PI;

/// Cylinder volume `V = (pi/4) (D0 sin(theta))^2 (b cos(theta))` of a braid
/// at the given angle. Positive on the whole open angle domain.
pub fn volume_of(braid: &BraidSpec, theta: f64) -> Result<f64> {
    let state = braid.at(theta)?;
    Ok(state.external_area() * state.length())
}

/// Volume change over a stroke in the gamma form,
/// `(pi/4) D1^2 (gamma^2 L2 - L1)`.
///
/// Agrees with `volume_of(theta2) - volume_of(theta1)` to rounding.
pub fn delta_volume(braid: &BraidSpec, stroke: &StrokeSpec) -> Result<f64> {
    let initial = braid.at(stroke.theta_initial())?;
    let l2 = braid.fiber_length() * stroke.theta_final().cos();
    let gamma = stroke.gamma();
    let d1 = initial.diameter();
    Ok(PI / 4.0 * d1 * d1 * (gamma * gamma * l2 - initial.length()))
}

/// Average force over a stroke from the energy balance:
/// `F_avg = -P' dV / dL` (signed, tensile-positive).
///
/// Negative on extension strokes of an extending muscle; equals the
/// length-weighted mean of the thin-wall force over the stroke.
pub fn average_force(pressure: GaugePressure, delta_v: f64, delta_l: f64) -> Result<f64> {
    if delta_l == 0.0 || !delta_l.is_finite() {
        return Err(ModelError::UndefinedAverage);
    }
    Ok(-pressure.pascals() * delta_v / delta_l)
}

/// Work done by the thin-wall force over a stroke, `int F_thin dL`,
/// by adaptive quadrature at relative tolerance 1e-10.
///
/// Under the thin model this equals `-P' dV` identically; the integral is
/// computed from the force law alone so the two sides stay independent.
pub fn work_integral(
    braid: &BraidSpec,
    stroke: &StrokeSpec,
    pressure: GaugePressure,
) -> Result<f64> {
    let f = |l: f64| {
        let theta = theta_from_length(braid, l)?;
        force_thin(braid, theta, pressure)
    };
    integrate_over_stroke(braid, stroke, f)
}

/// Work done by the thick-wall force over a stroke, `int F_thick dL`.
///
/// Reported for information only: it equals `-P'` times the change of the
/// *enclosed* volume `(pi/4)(D - 2 t_k)^2 L`, not of the external cylinder.
pub fn work_integral_thick(
    braid: &BraidSpec,
    stroke: &StrokeSpec,
    wall: &WallSpec,
    pressure: GaugePressure,
) -> Result<f64> {
    let f = |l: f64| {
        let theta = theta_from_length(braid, l)?;
        force_thick(braid, theta, wall, pressure)
    };
    integrate_over_stroke(braid, stroke, f)
}

fn integrate_over_stroke<F>(braid: &BraidSpec, stroke: &StrokeSpec, f: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if stroke.theta_initial() == stroke.theta_final() {
        return Ok(0.0);
    }
    let l1 = braid.fiber_length() * stroke.theta_initial().cos();
    let l2 = braid.fiber_length() * stroke.theta_final().cos();
    adaptive_simpson(&f, l1, l2, 1e-10)
}

/// Adaptive Simpson quadrature with interval-halving error control.
///
/// The local acceptance test compares the two-panel refinement against the
/// single panel; the 1/15 Richardson factor gives the standard error
/// estimate. The tolerance is applied relative to a first-pass magnitude
/// estimate of the integral so that sign-changing integrands do not stall
/// the relative test near zero.
fn adaptive_simpson<F>(f: &F, a: f64, b: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = simpson(a, b, fa, fm, fb);

    // Magnitude scale: crude |integrand| estimate times the span. Guards the
    // relative test when the integral itself is near zero.
    let scale = ((fa.abs() + 4.0 * fm.abs() + fb.abs()) / 6.0 * (b - a).abs()).max(f64::MIN_POSITIVE);
    let abs_tol = rel_tol * scale;

    let mut achieved = 0.0_f64;
    let value = simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, 52, &mut achieved)?;
    if achieved > abs_tol {
        return Err(ModelError::QuadratureDidNotConverge {
            achieved: achieved / scale,
            requested: rel_tol,
        });
    }
    Ok(value)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    achieved: &mut f64,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    let err = (refined - whole) / 15.0;
    if err.abs() <= tol {
        return Ok(refined + err);
    }
    if depth == 0 {
        *achieved += err.abs();
        return Ok(refined + err);
    }
    let l = simpson_recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, achieved)?;
    let r = simpson_recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, achieved)?;
    Ok(l + r)
}

/// Energy balance of one stroke at constant pressure.
///
/// `energy_in = P' |dV|` (flow energy) and `energy_out = |F_avg dL|`
/// (mechanical work); for the ideal actuator the two are equal by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyAudit {
    pub delta_v: f64,
    pub delta_l: f64,
    pub pressure: f64,
    pub f_avg: f64,
    pub energy_in: f64,
    pub energy_out: f64,
}

impl EnergyAudit {
    /// Audit a stroke of the given braid.
    pub fn for_stroke(
        braid: &BraidSpec,
        stroke: &StrokeSpec,
        pressure: GaugePressure,
    ) -> Result<Self> {
        let dv = delta_volume(braid, stroke)?;
        let l1 = braid.fiber_length() * stroke.theta_initial().cos();
        let l2 = braid.fiber_length() * stroke.theta_final().cos();
        let dl = l2 - l1;
        let f_avg = if dl == 0.0 {
            0.0
        } else {
            average_force(pressure, dv, dl)?
        };
        Ok(Self {
            delta_v: dv,
            delta_l: dl,
            pressure: pressure.pascals(),
            f_avg,
            energy_in: pressure.pascals() * dv.abs(),
            energy_out: (f_avg * dl).abs(),
        })
    }
}

/// Volume and average-force comparison between a pack of `n` fascicles and
/// its volumetrically equivalent single actuator over a shared stroke.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PackEnergyReport {
    pub count: u32,
    /// `n` times the per-fascicle volume change.
    pub delta_v_pack: f64,
    /// Volume change of the sqrt(n)-scaled equivalent actuator.
    pub delta_v_equivalent: f64,
    pub f_avg_pack: f64,
    pub f_avg_equivalent: f64,
    /// Relative mismatch of the volume changes (rounding-level).
    pub volume_mismatch: f64,
    /// Mismatch within 1e-12.
    pub volumes_match: bool,
}

/// Builds the equivalent braid (same length, angle, and fiber length;
/// diameter scaled by sqrt(n), turns by 1/sqrt(n)), runs the same stroke on
/// both, and compares volume changes and average forces.
///
/// Sharing the length endpoints and fiber length forces the two actuators to
/// share theta_1, theta_2, and gamma, so the volume changes agree exactly
/// and with them the average forces.
pub fn pack_vs_equivalent_energy(
    individual: &BraidSpec,
    count: u32,
    stroke: &StrokeSpec,
    pressure: GaugePressure,
) -> Result<PackEnergyReport> {
    if count < 1 {
        return Err(ModelError::EmptyPack { value: count });
    }
    let n = f64::from(count);
    let equivalent = BraidSpec::new(individual.fiber_length(), individual.turns() / n.sqrt())?;

    let dv_ind = delta_volume(individual, stroke)?;
    let dv_pack = n * dv_ind;
    let dv_eq = delta_volume(&equivalent, stroke)?;

    let l1 = individual.fiber_length() * stroke.theta_initial().cos();
    let l2 = individual.fiber_length() * stroke.theta_final().cos();
    let dl = l2 - l1;
    let (f_pack, f_eq) = if dl == 0.0 {
        (0.0, 0.0)
    } else {
        (
            average_force(pressure, dv_pack, dl)?,
            average_force(pressure, dv_eq, dl)?,
        )
    };

    let scale = dv_pack.abs().max(dv_eq.abs());
    let mismatch = if scale == 0.0 {
        0.0
    } else {
        (dv_pack - dv_eq).abs() / scale
    };
    Ok(PackEnergyReport {
        count,
        delta_v_pack: dv_pack,
        delta_v_equivalent: dv_eq,
        f_avg_pack: f_pack,
        f_avg_equivalent: f_eq,
        volume_mismatch: mismatch,
        volumes_match: mismatch <= 1e-12,
    })
}
