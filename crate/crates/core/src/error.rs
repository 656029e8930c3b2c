//! Error type shared by all model operations.

/// Domain and numerical errors raised by the actuator model.
///
/// Every variant names the offending value so callers can report it
/// without re-deriving context.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    /// Braid angle outside its admissible interval.
    #[error("braid angle {value} rad is outside the interval (0, pi/2{}", if *inclusive { "]" } else { ")" })]
    AngleOutOfDomain { value: f64, inclusive: bool },

    /// A quantity that must be strictly positive was not.
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// A quantity that must be non-negative was not.
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },

    /// Axial length incompatible with the braid's fiber length.
    #[error("length {length} m is outside (0, b) for fiber length b = {fiber_length} m")]
    LengthExceedsFiber { length: f64, fiber_length: f64 },

    /// Diameter incompatible with the braid's theoretical maximum.
    #[error("diameter {diameter} m is outside (0, D0) for theoretical diameter D0 = {max_diameter} m")]
    DiameterExceedsMax { diameter: f64, max_diameter: f64 },

    /// Relative wall thickness outside [0, 1/2].
    #[error("relative wall thickness {value} is outside [0, 0.5]")]
    RelativeThicknessOutOfRange { value: f64 },

    /// Wall thicker than the actuator radius at the given diameter.
    #[error("wall exceeds radius: thickness {thickness} m is more than half the diameter {diameter} m")]
    WallExceedsRadius { thickness: f64, diameter: f64 },

    /// Average force over a zero-length stroke is undefined.
    #[error("average force is undefined for a zero length change")]
    UndefinedAverage,

    /// A fascicle count below one.
    #[error("pack size must be at least 1, got {value}")]
    EmptyPack { value: u32 },

    /// Adaptive quadrature failed to meet the requested tolerance.
    #[error("quadrature did not converge: achieved relative error {achieved:e}, requested {requested:e}")]
    QuadratureDidNotConverge { achieved: f64, requested: f64 },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, ModelError>;

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ModelError::NonPositive { name, value })
    }
}

pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ModelError::Negative { name, value })
    }
}

/// Strict open-interval check for the braid angle, (0, pi/2).
pub(crate) fn ensure_angle_open(theta: f64) -> Result<f64> {
    if theta > 0.0 && theta < std::f64::consts::FRAC_PI_2 {
        Ok(theta)
    } else {
        Err(ModelError::AngleOutOfDomain {
            value: theta,
            inclusive: false,
        })
    }
}

/// Half-open check (0, pi/2] for quantities parameterized by the
/// instantaneous diameter, which stay finite at exactly 90 degrees.
pub(crate) fn ensure_angle_closed_top(theta: f64) -> Result<f64> {
    if theta > 0.0 && theta <= std::f64::consts::FRAC_PI_2 {
        Ok(theta)
    } else {
        Err(ModelError::AngleOutOfDomain {
            value: theta,
            inclusive: true,
        })
    }
}
