//! Python bindings for the braided pneumatic actuator model.
//!
//! Exposes the main types (`BraidSpec`, `WallSpec`, `StrokeSpec`,
//! `ActuatorDesign`) and operations (parameter resolution, thin/thick force
//! laws, the normalized-force surface, the energy audit, and the
//! pack-vs-equivalent comparison). Quantities are SI: meters, radians,
//! pascals, newtons; forces are tensile-positive.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fascicle_core as core;

fn value_err(e: core::ModelError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pressure(pascals: f64) -> PyResult<core::GaugePressure> {
    core::GaugePressure::new(pascals).map_err(value_err)
}

/// Actuation-invariant braid: unwound fiber length b (m) and turn count N.
#[pyclass(name = "BraidSpec", frozen, from_py_object)]
#[derive(Clone)]
struct PyBraidSpec {
    inner: core::BraidSpec,
}

#[pymethods]
impl PyBraidSpec {
    #[new]
    fn new(fiber_length: f64, turns: f64) -> PyResult<Self> {
        Ok(Self {
            inner: core::BraidSpec::new(fiber_length, turns).map_err(value_err)?,
        })
    }

    #[getter]
    fn fiber_length(&self) -> f64 {
        self.inner.fiber_length()
    }

    #[getter]
    fn turns(&self) -> f64 {
        self.inner.turns()
    }

    /// Theoretical diameter D0 = b / (N pi), reached in the 90-degree limit.
    #[getter]
    fn max_diameter(&self) -> f64 {
        self.inner.max_diameter()
    }

    fn __repr__(&self) -> String {
        format!(
            "BraidSpec(fiber_length={}, turns={})",
            self.inner.fiber_length(),
            self.inner.turns()
        )
    }
}

/// Elastomer wall: absolute thickness (m) or fraction of the diameter.
#[pyclass(name = "WallSpec", frozen, from_py_object)]
#[derive(Clone)]
struct PyWallSpec {
    inner: core::WallSpec,
}

#[pymethods]
impl PyWallSpec {
    #[staticmethod]
    fn absolute(thickness: f64) -> PyResult<Self> {
        Ok(Self {
            inner: core::WallSpec::absolute(thickness).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn relative(fraction: f64) -> PyResult<Self> {
        Ok(Self {
            inner: core::WallSpec::relative(fraction).map_err(value_err)?,
        })
    }

    fn thickness_at(&self, diameter: f64) -> PyResult<f64> {
        self.inner.thickness_at(diameter).map_err(value_err)
    }

    fn fraction_at(&self, diameter: f64) -> PyResult<f64> {
        self.inner.fraction_at(diameter).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        match self.inner {
            core::WallSpec::Absolute(t) => format!("WallSpec.absolute({t})"),
            core::WallSpec::Relative(f) => format!("WallSpec.relative({f})"),
        }
    }
}

/// A stroke between two braid angles (rad).
#[pyclass(name = "StrokeSpec", frozen, from_py_object)]
#[derive(Clone)]
struct PyStrokeSpec {
    inner: core::StrokeSpec,
}

#[pymethods]
impl PyStrokeSpec {
    #[new]
    fn new(theta_initial: f64, theta_final: f64) -> PyResult<Self> {
        Ok(Self {
            inner: core::StrokeSpec::new(theta_initial, theta_final).map_err(value_err)?,
        })
    }

    #[getter]
    fn theta_initial(&self) -> f64 {
        self.inner.theta_initial()
    }

    #[getter]
    fn theta_final(&self) -> f64 {
        self.inner.theta_final()
    }

    /// Diameter scaling factor sin(theta_final) / sin(theta_initial).
    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.gamma()
    }

    fn __repr__(&self) -> String {
        format!(
            "StrokeSpec(theta_initial={}, theta_final={})",
            self.inner.theta_initial(),
            self.inner.theta_final()
        )
    }
}

/// Braid + wall anchored at the reference angle where comparisons are made.
#[pyclass(name = "ActuatorDesign", frozen, from_py_object)]
#[derive(Clone)]
struct PyActuatorDesign {
    inner: core::ActuatorDesign,
}

#[pymethods]
impl PyActuatorDesign {
    #[new]
    fn new(braid: PyBraidSpec, wall: PyWallSpec, reference_theta: f64) -> PyResult<Self> {
        Ok(Self {
            inner: core::ActuatorDesign::new(braid.inner, wall.inner, reference_theta)
                .map_err(value_err)?,
        })
    }

    #[getter]
    fn braid(&self) -> PyBraidSpec {
        PyBraidSpec {
            inner: *self.inner.braid(),
        }
    }

    #[getter]
    fn wall(&self) -> PyWallSpec {
        PyWallSpec {
            inner: *self.inner.wall(),
        }
    }

    #[getter]
    fn reference_theta(&self) -> f64 {
        self.inner.reference_theta()
    }

    #[getter]
    fn reference_diameter(&self) -> f64 {
        self.inner.reference_state().diameter()
    }

    /// Thick-wall force per unit pressure (N/Pa) at the reference state.
    fn force_per_pressure(&self) -> PyResult<f64> {
        Ok(self.inner.force_per_pressure().map_err(value_err)?.0)
    }
}

/// Fiber-length estimates of a measured parameter set and the verdict.
#[pyclass(name = "ConsistencyReport", frozen)]
struct PyConsistencyReport {
    inner: core::ConsistencyReport,
}

#[pymethods]
impl PyConsistencyReport {
    #[getter]
    fn b_from_length(&self) -> Option<f64> {
        self.inner.b_from_length
    }

    #[getter]
    fn b_from_diameter(&self) -> Option<f64> {
        self.inner.b_from_diameter
    }

    #[getter]
    fn b_from_pythagoras(&self) -> f64 {
        self.inner.b_from_pythagoras
    }

    #[getter]
    fn max_relative_spread(&self) -> f64 {
        self.inner.max_relative_spread
    }

    #[getter]
    fn consistent(&self) -> bool {
        self.inner.consistent
    }

    #[getter]
    fn supplied_theta(&self) -> Option<f64> {
        self.inner.supplied_theta
    }

    fn __repr__(&self) -> String {
        format!(
            "ConsistencyReport(spread={:.3e}, consistent={})",
            self.inner.max_relative_spread, self.inner.consistent
        )
    }
}

/// One pack-vs-equivalent comparison row, forces per unit pressure (N/Pa).
#[pyclass(name = "ComparisonRow", frozen)]
struct PyComparisonRow {
    inner: core::ComparisonRow,
}

#[pymethods]
impl PyComparisonRow {
    #[getter]
    fn n(&self) -> u32 {
        self.inner.count
    }

    #[getter]
    fn pack(&self) -> f64 {
        self.inner.pack.0
    }

    #[getter]
    fn equivalent_relative(&self) -> f64 {
        self.inner.equivalent_relative.0
    }

    #[getter]
    fn equivalent_absolute(&self) -> f64 {
        self.inner.equivalent_absolute.0
    }

    fn __repr__(&self) -> String {
        format!(
            "ComparisonRow(n={}, pack={:.6e}, eq_rel={:.6e}, eq_abs={:.6e})",
            self.inner.count,
            self.inner.pack.0,
            self.inner.equivalent_relative.0,
            self.inner.equivalent_absolute.0
        )
    }
}

/// Volume/average-force comparison of a pack and its equivalent actuator.
#[pyclass(name = "PackEnergyReport", frozen)]
struct PyPackEnergyReport {
    inner: core::PackEnergyReport,
}

#[pymethods]
impl PyPackEnergyReport {
    #[getter]
    fn n(&self) -> u32 {
        self.inner.count
    }

    #[getter]
    fn delta_v_pack(&self) -> f64 {
        self.inner.delta_v_pack
    }

    #[getter]
    fn delta_v_equivalent(&self) -> f64 {
        self.inner.delta_v_equivalent
    }

    #[getter]
    fn f_avg_pack(&self) -> f64 {
        self.inner.f_avg_pack
    }

    #[getter]
    fn f_avg_equivalent(&self) -> f64 {
        self.inner.f_avg_equivalent
    }

    #[getter]
    fn volumes_match(&self) -> bool {
        self.inner.volumes_match
    }
}

// ------------------------------------------------------------- functions

/// Rebuild a self-consistent (BraidSpec, theta) from measured L, D, N.
#[pyfunction]
fn resolve(length: f64, diameter: f64, turns: f64) -> PyResult<(PyBraidSpec, f64)> {
    let (braid, theta) = core::resolve(length, diameter, turns).map_err(value_err)?;
    Ok((PyBraidSpec { inner: braid }, theta))
}

/// Axial length L = b cos(theta) (m).
#[pyfunction]
fn length_of(braid: PyBraidSpec, theta: f64) -> PyResult<f64> {
    core::length_of(&braid.inner, theta).map_err(value_err)
}

/// Diameter D = D0 sin(theta) (m).
#[pyfunction]
fn diameter_of(braid: PyBraidSpec, theta: f64) -> PyResult<f64> {
    core::diameter_of(&braid.inner, theta).map_err(value_err)
}

/// Fiber length from the Pythagorean closure sqrt(L^2 + (D pi N)^2).
#[pyfunction]
fn fiber_length_from(length: f64, diameter: f64, turns: f64) -> PyResult<f64> {
    core::fiber_length_from(length, diameter, turns).map_err(value_err)
}

/// Angle recovering the given length, arccos(L / b).
#[pyfunction]
fn theta_from_length(braid: PyBraidSpec, length: f64) -> PyResult<f64> {
    core::theta_from_length(&braid.inner, length).map_err(value_err)
}

/// Angle recovering the given diameter, arcsin(D / D0).
#[pyfunction]
fn theta_from_diameter(braid: PyBraidSpec, diameter: f64) -> PyResult<f64> {
    core::theta_from_diameter(&braid.inner, diameter).map_err(value_err)
}

/// Estimate the fiber length three ways and report the spread.
#[pyfunction]
#[pyo3(signature = (length, diameter, turns, theta=None, tolerance=1e-3))]
fn check_consistency(
    length: f64,
    diameter: f64,
    turns: f64,
    theta: Option<f64>,
    tolerance: f64,
) -> PyResult<PyConsistencyReport> {
    let raw = core::RawParameterSet::new(length, diameter, theta, turns).map_err(value_err)?;
    Ok(PyConsistencyReport {
        inner: core::check_consistency(&raw, tolerance).map_err(value_err)?,
    })
}

/// Thin-wall force (N) at the given angle and gauge pressure (Pa).
#[pyfunction]
fn force_thin(braid: PyBraidSpec, theta: f64, pressure_pa: f64) -> PyResult<f64> {
    core::force_thin(&braid.inner, theta, pressure(pressure_pa)?).map_err(value_err)
}

/// Thick-wall force (N) at the given angle and gauge pressure (Pa).
#[pyfunction]
fn force_thick(
    braid: PyBraidSpec,
    theta: f64,
    wall: PyWallSpec,
    pressure_pa: f64,
) -> PyResult<f64> {
    core::force_thick(&braid.inner, theta, &wall.inner, pressure(pressure_pa)?).map_err(value_err)
}

/// Force normalized by pressure and external area, F_hat(theta, t_hat).
#[pyfunction]
fn normalized_force(theta: f64, rel_thickness: f64) -> PyResult<f64> {
    core::normalized_force(theta, rel_thickness).map_err(value_err)
}

/// Dimensional force F_hat * P * A (N).
#[pyfunction]
fn force_from_normalized(
    theta: f64,
    rel_thickness: f64,
    pressure_pa: f64,
    external_area: f64,
) -> PyResult<f64> {
    core::force_from_normalized(theta, rel_thickness, pressure(pressure_pa)?, external_area)
        .map_err(value_err)
}

/// Braid angle (rad) where the force vanishes for the given wall fraction.
#[pyfunction]
fn zero_force_angle(rel_thickness: f64) -> PyResult<f64> {
    core::zero_force_angle(rel_thickness).map_err(value_err)
}

/// arccos(1/sqrt(3)), the thin-wall zero-force angle (rad).
#[pyfunction]
fn thin_zero_force_angle() -> f64 {
    core::thin_zero_force_angle()
}

/// Cylinder volume (m^3) of a braid at the given angle.
#[pyfunction]
fn volume_of(braid: PyBraidSpec, theta: f64) -> PyResult<f64> {
    core::volume_of(&braid.inner, theta).map_err(value_err)
}

/// Volume change (m^3) over a stroke, gamma form.
#[pyfunction]
fn delta_volume(braid: PyBraidSpec, stroke: PyStrokeSpec) -> PyResult<f64> {
    core::delta_volume(&braid.inner, &stroke.inner).map_err(value_err)
}

/// Average force -P dV/dL (N), tensile-positive.
#[pyfunction]
fn average_force(pressure_pa: f64, delta_v: f64, delta_l: f64) -> PyResult<f64> {
    core::average_force(pressure(pressure_pa)?, delta_v, delta_l).map_err(value_err)
}

/// Work done by the thin-wall force over a stroke (J), by quadrature.
#[pyfunction]
fn work_integral(braid: PyBraidSpec, stroke: PyStrokeSpec, pressure_pa: f64) -> PyResult<f64> {
    core::work_integral(&braid.inner, &stroke.inner, pressure(pressure_pa)?).map_err(value_err)
}

/// Work done by the thick-wall force over a stroke (J), informational.
#[pyfunction]
fn work_integral_thick(
    braid: PyBraidSpec,
    stroke: PyStrokeSpec,
    wall: PyWallSpec,
    pressure_pa: f64,
) -> PyResult<f64> {
    core::work_integral_thick(
        &braid.inner,
        &stroke.inner,
        &wall.inner,
        pressure(pressure_pa)?,
    )
    .map_err(value_err)
}

/// Compare pack and equivalent volume changes and average forces.
#[pyfunction]
fn pack_vs_equivalent_energy(
    braid: PyBraidSpec,
    n: u32,
    stroke: PyStrokeSpec,
    pressure_pa: f64,
) -> PyResult<PyPackEnergyReport> {
    Ok(PyPackEnergyReport {
        inner: core::pack_vs_equivalent_energy(
            &braid.inner,
            n,
            &stroke.inner,
            pressure(pressure_pa)?,
        )
        .map_err(value_err)?,
    })
}

/// The single actuator volumetrically equivalent to n fascicles.
/// `policy` is "relative" (preserve t_hat) or "absolute" (preserve t_k).
#[pyfunction]
fn equivalent_design(unit: PyActuatorDesign, n: u32, policy: &str) -> PyResult<PyActuatorDesign> {
    let policy = match policy {
        "relative" => core::EquivalencePolicy::RelativeThickness,
        "absolute" => core::EquivalencePolicy::AbsoluteThickness,
        other => {
            return Err(PyValueError::new_err(format!(
                "policy must be 'relative' or 'absolute', got '{other}'"
            )))
        }
    };
    Ok(PyActuatorDesign {
        inner: core::equivalent_design(&unit.inner, n, policy).map_err(value_err)?,
    })
}

/// Total force per unit pressure (N/Pa) of an n-fascicle pack.
#[pyfunction]
fn pack_force_per_pressure(unit: PyActuatorDesign, n: u32) -> PyResult<f64> {
    let pack = core::PackSpec::new(unit.inner, n).map_err(value_err)?;
    Ok(core::pack_force_per_pressure(&pack).map_err(value_err)?.0)
}

/// One ComparisonRow per count: pack force and both equivalent forces.
#[pyfunction]
fn compare(unit: PyActuatorDesign, counts: Vec<u32>) -> PyResult<Vec<PyComparisonRow>> {
    Ok(core::compare(&unit.inner, &counts)
        .map_err(value_err)?
        .into_iter()
        .map(|inner| PyComparisonRow { inner })
        .collect())
}

/// Thin-wall pack and equivalent forces per unit pressure, independently
/// computed; they agree to rounding for any inputs.
#[pyfunction]
fn equality_theorem_thin(braid: PyBraidSpec, theta: f64, n: u32) -> PyResult<(f64, f64)> {
    let (pack, eq) = core::equality_theorem_thin(&braid.inner, theta, n).map_err(value_err)?;
    Ok((pack.0, eq.0))
}

/// Consistency report of the impossible equivalent built by scaling the
/// diameter while holding the turn count.
#[pyfunction]
#[pyo3(signature = (unit, n, tolerance=1e-3))]
fn fixed_turns_equivalent_report(
    unit: PyActuatorDesign,
    n: u32,
    tolerance: f64,
) -> PyResult<PyConsistencyReport> {
    Ok(PyConsistencyReport {
        inner: core::fixed_turns_equivalent_report(&unit.inner, n, tolerance).map_err(value_err)?,
    })
}

#[pymodule]
fn fascicle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraidSpec>()?;
    m.add_class::<PyWallSpec>()?;
    m.add_class::<PyStrokeSpec>()?;
    m.add_class::<PyActuatorDesign>()?;
    m.add_class::<PyConsistencyReport>()?;
    m.add_class::<PyComparisonRow>()?;
    m.add_class::<PyPackEnergyReport>()?;
    m.add_function(wrap_pyfunction!(resolve, m)?)?;
    m.add_function(wrap_pyfunction!(length_of, m)?)?;
    m.add_function(wrap_pyfunction!(diameter_of, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_length_from, m)?)?;
    m.add_function(wrap_pyfunction!(theta_from_length, m)?)?;
    m.add_function(wrap_pyfunction!(theta_from_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(check_consistency, m)?)?;
    m.add_function(wrap_pyfunction!(force_thin, m)?)?;
    m.add_function(wrap_pyfunction!(force_thick, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_force, m)?)?;
    m.add_function(wrap_pyfunction!(force_from_normalized, m)?)?;
    m.add_function(wrap_pyfunction!(zero_force_angle, m)?)?;
    m.add_function(wrap_pyfunction!(thin_zero_force_angle, m)?)?;
    m.add_function(wrap_pyfunction!(volume_of, m)?)?;
    m.add_function(wrap_pyfunction!(delta_volume, m)?)?;
    m.add_function(wrap_pyfunction!(average_force, m)?)?;
    m.add_function(wrap_pyfunction!(work_integral, m)?)?;
    m.add_function(wrap_pyfunction!(work_integral_thick, m)?)?;
    m.add_function(wrap_pyfunction!(pack_vs_equivalent_energy, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent_design, m)?)?;
    m.add_function(wrap_pyfunction!(pack_force_per_pressure, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(equality_theorem_thin, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_turns_equivalent_report, m)?)?;
    Ok(())
}
