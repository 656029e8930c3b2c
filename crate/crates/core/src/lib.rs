//! Model of braided pneumatic (McKibben) actuators: braid kinematics,
//! thin- and thick-wall force laws, a conservation-of-energy audit, and the
//! pack-vs-equivalent-actuator comparison.
//!
//! The central facts the crate mechanizes:
//!
//! - a braid is fixed by its fiber length `b` and turn count `N`; the braid
//!   angle is the only configuration variable ([`geometry`]);
//! - measured parameter sets are often not self-consistent; consistency is
//!   checked and restored from the easy-to-measure (L, D, N) triple
//!   ([`geometry::check_consistency`], [`geometry::resolve`]);
//! - a pack of `n` fascicles and the single actuator of `n` times the
//!   external cross-section produce the *same* force at the same pressure —
//!   exactly, for the thin-wall law and for the thick-wall law under a
//!   shared relative wall thickness ([`compare`]);
//! - the same conclusion follows from conservation of energy: pack and
//!   equivalent undergo identical volume changes over any shared stroke
//!   ([`energy`]).
//!
//! All quantities are SI (meters, radians, pascals, newtons); forces are
//! tensile-positive, so extending muscles report negative values. Elastic
//! restoring forces of the elastomer wall are outside the model.
//!
//! Every type is an immutable value and every operation a pure function;
//! nothing here holds shared state, so concurrent use needs no coordination.

pub mod compare;
pub mod energy;
pub mod error;
pub mod force;
pub mod geometry;

pub use compare::{
    compare, equality_theorem_thin, equivalent_design, fixed_turns_equivalent_report,
    pack_force_per_pressure, ActuatorDesign, ComparisonRow, EquivalencePolicy, PackSpec,
};
pub use energy::{
    average_force, delta_volume, pack_vs_equivalent_energy, volume_of, work_integral,
    work_integral_thick, EnergyAudit, PackEnergyReport,
};
pub use error::{ModelError, Result};
pub use force::{
    force_from_normalized, force_thick, force_thin, normalized_force, parameterization_deviation,
    thin_zero_force_angle, zero_force_angle, ForcePerPressure, GaugePressure, WallSpec,
};
pub use geometry::{
    check_consistency, diameter_of, fiber_length_from, gamma_of, length_of, resolve,
    theta_from_diameter, theta_from_length, BraidSpec, ConsistencyReport, GeometryState,
    RawParameterSet, StrokeSpec,
};
