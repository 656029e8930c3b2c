//! Pack construction and the equivalent-actuator comparison.
//!
//! A pack is `n` identical fascicles in parallel: forces sum, geometry is
//! shared. The volumetrically equivalent single actuator keeps the length
//! and braid angle of a fascicle and scales the *external* cross-sectional
//! area by `n`, so its diameter grows by `sqrt(n)`. Because length and angle
//! are shared, the fiber length is shared too, and the diameter change
//! forces the turn count down by the same factor: `N_eq = N / sqrt(n)` —
//! wrapping an equal-length string around a fatter cylinder takes fewer
//! turns. Holding the turn count fixed while scaling the diameter produces a
//! braid no fiber can realize; [`fixed_turns_equivalent_report`] quantifies
//! that inconsistency instead of computing a force from it.
//!
//! The wall of the equivalent actuator is policy-dependent: preserving the
//! *relative* thickness keeps the elastomer volume of the pack and makes the
//! equivalent's force exactly `n` times the fascicle force at every angle
//! and pressure; preserving the *absolute* thickness makes the wall
//! relatively thinner and the equivalent strictly stronger in magnitude.

use crate::error::{ModelError, Result};
use crate::force::{force_thick, force_thin, ForcePerPressure, GaugePressure, WallSpec};
use crate::geometry::{check_consistency, BraidSpec, ConsistencyReport, GeometryState, RawParameterSet};

/// A braid plus wall, anchored at the reference angle where comparisons are
/// made.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActuatorDesign {
    braid: BraidSpec,
    wall: WallSpec,
    reference_theta: f64,
}

impl ActuatorDesign {
    /// The wall must fit the actuator at the reference configuration
    /// (relative thickness at most one half).
    pub fn new(braid: BraidSpec, wall: WallSpec, reference_theta: f64) -> Result<Self> {
        let state = braid.at(reference_theta)?;
        wall.fraction_at(state.diameter())?;
        Ok(Self {
            braid,
            wall,
            reference_theta,
        })
    }

    pub fn braid(&self) -> &BraidSpec {
        &self.braid
    }

    pub fn wall(&self) -> &WallSpec {
        &self.wall
    }

    pub fn reference_theta(&self) -> f64 {
        self.reference_theta
    }

    pub fn reference_state(&self) -> GeometryState {
        // valid by construction
        self.braid.at(self.reference_theta).expect("validated at construction")
    }

    /// Thick-wall force per unit pressure at the reference configuration.
    pub fn force_per_pressure(&self) -> Result<ForcePerPressure> {
        let unit = GaugePressure::new(1.0)?;
        Ok(ForcePerPressure(force_thick(
            &self.braid,
            self.reference_theta,
            &self.wall,
            unit,
        )?))
    }
}

/// `n` identical fascicles in parallel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PackSpec {
    unit: ActuatorDesign,
    count: u32,
}

impl PackSpec {
    pub fn new(unit: ActuatorDesign, count: u32) -> Result<Self> {
        if count < 1 {
            return Err(ModelError::EmptyPack { value: count });
        }
        Ok(Self { unit, count })
    }

    pub fn unit(&self) -> &ActuatorDesign {
        &self.unit
    }

    pub fn count(&self) -> u32 {
        self.count
    }
}

/// How the equivalent actuator's wall relates to the fascicle wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalencePolicy {
    /// Preserve `t_hat = t_k / D`: the wall scales with the diameter and the
    /// elastomer volume matches the pack's.
    RelativeThickness,
    /// Preserve the absolute thickness `t_k`.
    AbsoluteThickness,
}

/// One comparison row: pack force and both equivalent-actuator forces, per
/// unit pressure (N/Pa, tensile-positive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub count: u32,
    pub pack: ForcePerPressure,
    pub equivalent_relative: ForcePerPressure,
    pub equivalent_absolute: ForcePerPressure,
}

/// Builds the single actuator volumetrically equivalent to `n` copies of
/// `unit`: same length and reference angle (hence the same fiber length),
/// external area scaled by `n` (diameter by `sqrt(n)`, turns by
/// `1/sqrt(n)`), wall per policy.
pub fn equivalent_design(
    unit: &ActuatorDesign,
    count: u32,
    policy: EquivalencePolicy,
) -> Result<ActuatorDesign> {
    if count < 1 {
        return Err(ModelError::EmptyPack { value: count });
    }
    let scale = f64::from(count).sqrt();
    let braid = BraidSpec::new(unit.braid.fiber_length(), unit.braid.turns() / scale)?;
    let reference_diameter = unit.reference_state().diameter();
    let wall = match (policy, unit.wall) {
        // same t_hat: the relative representation carries over unchanged,
        // an absolute wall scales with the diameter
        (EquivalencePolicy::RelativeThickness, WallSpec::Relative(f)) => WallSpec::Relative(f),
        (EquivalencePolicy::RelativeThickness, WallSpec::Absolute(t)) => {
            WallSpec::absolute(scale * t)?
        }
        // same t_k at the reference configuration
        (EquivalencePolicy::AbsoluteThickness, _) => {
            WallSpec::absolute(unit.wall.thickness_at(reference_diameter)?)?
        }
    };
    ActuatorDesign::new(braid, wall, unit.reference_theta)
}

/// Total pack force per unit pressure: `n` times the fascicle force at the
/// reference configuration.
pub fn pack_force_per_pressure(pack: &PackSpec) -> Result<ForcePerPressure> {
    let unit = pack.unit.force_per_pressure()?;
    Ok(ForcePerPressure(f64::from(pack.count) * unit.0))
}

/// One row per requested count: pack force plus both equivalent-actuator
/// forces, per unit pressure. Errors name the offending count.
pub fn compare(unit: &ActuatorDesign, counts: &[u32]) -> Result<Vec<ComparisonRow>> {
    counts
        .iter()
        .map(|&n| {
            let pack = pack_force_per_pressure(&PackSpec::new(*unit, n)?)?;
            let rel = equivalent_design(unit, n, EquivalencePolicy::RelativeThickness)?
                .force_per_pressure()?;
            let abs = equivalent_design(unit, n, EquivalencePolicy::AbsoluteThickness)?
                .force_per_pressure()?;
            Ok(ComparisonRow {
                count: n,
                pack,
                equivalent_relative: rel,
                equivalent_absolute: abs,
            })
        })
        .collect()
}

/// Thin-wall equality check: the pack force (`n` times the fascicle value)
/// and the equivalent-actuator force (the thin law on the sqrt(n)-scaled
/// braid), computed independently, per unit pressure. The two agree to
/// rounding for every braid, angle, and count.
pub fn equality_theorem_thin(
    unit_braid: &BraidSpec,
    theta: f64,
    count: u32,
) -> Result<(ForcePerPressure, ForcePerPressure)> {
    if count < 1 {
        return Err(ModelError::EmptyPack { value: count });
    }
    let unit_pressure = GaugePressure::new(1.0)?;
    let pack = f64::from(count) * force_thin(unit_braid, theta, unit_pressure)?;
    let scaled = BraidSpec::new(
        unit_braid.fiber_length(),
        unit_braid.turns() / f64::from(count).sqrt(),
    )?;
    let eq = force_thin(&scaled, theta, unit_pressure)?;
    Ok((ForcePerPressure(pack), ForcePerPressure(eq)))
}

/// Diagnostic for the geometrically impossible "equivalent" built by
/// scaling the diameter while holding the turn count fixed: returns the
/// consistency report of that parameter set. Its force is deliberately
/// never computed.
pub fn fixed_turns_equivalent_report(
    unit: &ActuatorDesign,
    count: u32,
    tolerance: f64,
) -> Result<ConsistencyReport> {
    if count < 1 {
        return Err(ModelError::EmptyPack { value: count });
    }
    let state = unit.reference_state();
    let raw = RawParameterSet::new(
        state.length(),
        f64::from(count).sqrt() * state.diameter(),
        Some(unit.reference_theta),
        unit.braid.turns(),
    )?;
    check_consistency(&raw, tolerance)
}
