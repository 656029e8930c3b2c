//! The five subcommands, each returning a [`RunOutput`] with pretty, CSV,
//! and JSON renderings plus the verdicts that `--strict` enforces.

use crate::config::{Policy, RunConfig, WallConfig};
use crate::emit::{csv, format_sig, num};
use fascicle_core::{
    check_consistency, delta_volume, fixed_turns_equivalent_report, force_from_normalized,
    force_thick, force_thin, normalized_force, pack_vs_equivalent_energy, resolve, volume_of,
    work_integral, work_integral_thick, zero_force_angle, ActuatorDesign, ConsistencyReport,
    GaugePressure, ModelError, RawParameterSet, StrokeSpec,
};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// A command's rendered output. `verdict_failures` lists the checks that did
/// not hold; under `--strict` any entry turns into exit status 1.
pub struct RunOutput {
    pub pretty: String,
    pub csv: String,
    pub json: Value,
    pub verdict_failures: Vec<String>,
}

#[derive(Debug)]
pub enum CommandError {
    /// Domain or usage problem: exit status 2.
    Domain(String),
}

impl From<ModelError> for CommandError {
    fn from(e: ModelError) -> Self {
        CommandError::Domain(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CommandError>;

fn json_output(inputs: Value, outputs: Value, verdicts: Value) -> Value {
    json!({ "inputs": inputs, "outputs": outputs, "verdicts": verdicts })
}

fn mm(v: f64) -> f64 {
    v * 1e3
}

fn reference_design(config: &RunConfig) -> Result<(ActuatorDesign, f64)> {
    let (braid, resolved_theta) = resolve(config.length, config.diameter, config.turns)?;
    let theta = config.theta.unwrap_or(resolved_theta);
    let wall = config.wall.to_spec()?;
    Ok((ActuatorDesign::new(braid, wall, theta)?, resolved_theta))
}

// ---------------------------------------------------------------- resolve

pub fn cmd_resolve(config: &RunConfig) -> Result<RunOutput> {
    let raw = RawParameterSet::new(config.length, config.diameter, config.theta, config.turns)?;
    let report = check_consistency(&raw, config.tolerance)?;
    let (braid, theta) = resolve(config.length, config.diameter, config.turns)?;

    let mut pretty = String::new();
    let _ = writeln!(pretty, "fiber length estimates (mm)");
    match (report.b_from_length, report.b_from_diameter) {
        (Some(bl), Some(bd)) => {
            let _ = writeln!(pretty, "  from length + measured angle   : {:.3}", mm(bl));
            let _ = writeln!(pretty, "  from diameter + measured angle : {:.3}", mm(bd));
        }
        _ => {
            let _ = writeln!(pretty, "  from length + measured angle   : - (theta absent)");
            let _ = writeln!(pretty, "  from diameter + measured angle : - (theta absent)");
        }
    }
    let _ = writeln!(
        pretty,
        "  from L, D, N (Pythagorean)     : {:.3}",
        mm(report.b_from_pythagoras)
    );
    let _ = writeln!(pretty, "consistency");
    let _ = writeln!(
        pretty,
        "  max relative spread : {}",
        format_sig(report.max_relative_spread, 3)
    );
    let _ = writeln!(pretty, "  tolerance           : {}", report.tolerance);
    let _ = writeln!(
        pretty,
        "  verdict             : {}",
        if report.consistent { "consistent" } else { "inconsistent" }
    );
    let _ = writeln!(pretty, "resolved parameters (any measured angle discarded)");
    let _ = writeln!(pretty, "  b     = {:.3} mm", mm(braid.fiber_length()));
    let _ = writeln!(pretty, "  theta = {:.3} deg", theta.to_degrees());
    let _ = writeln!(pretty, "  D0    = {:.3} mm", mm(braid.max_diameter()));

    let csv_text = csv(
        &[
            "b_from_length (mm)",
            "b_from_diameter (mm)",
            "b_from_pythagoras (mm)",
            "max_relative_spread",
            "consistent",
            "resolved_b (mm)",
            "resolved_theta (deg)",
            "resolved_D0 (mm)",
        ],
        &[vec![
            report.b_from_length.map_or("".into(), |v| num(mm(v))),
            report.b_from_diameter.map_or("".into(), |v| num(mm(v))),
            num(mm(report.b_from_pythagoras)),
            num(report.max_relative_spread),
            report.consistent.to_string(),
            num(mm(braid.fiber_length())),
            num(theta.to_degrees()),
            num(mm(braid.max_diameter())),
        ]],
    );

    let json = json_output(
        json!({
            "length_m": config.length,
            "diameter_m": config.diameter,
            "turns": config.turns,
            "measured_theta_rad": config.theta,
            "tolerance": config.tolerance,
        }),
        json!({
            "b_from_length_m": report.b_from_length,
            "b_from_diameter_m": report.b_from_diameter,
            "b_from_pythagoras_m": report.b_from_pythagoras,
            "max_relative_spread": report.max_relative_spread,
            "resolved_b_m": braid.fiber_length(),
            "resolved_theta_rad": theta,
            "resolved_theta_deg": theta.to_degrees(),
            "resolved_d0_m": braid.max_diameter(),
        }),
        json!({ "consistent": report.consistent }),
    );

    let failures = if report.consistent {
        vec![]
    } else {
        vec![format!(
            "parameter set is inconsistent: spread {} exceeds tolerance {}",
            format_sig(report.max_relative_spread, 3),
            report.tolerance
        )]
    };
    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: failures,
    })
}

// ------------------------------------------------------------------ force

pub fn cmd_force(config: &RunConfig, eval_theta: Option<f64>) -> Result<RunOutput> {
    let (design, resolved_theta) = reference_design(config)?;
    let theta = eval_theta.unwrap_or(design.reference_theta());
    let braid = *design.braid();
    let pressure = GaugePressure::new(config.pressure)?;
    let state = braid.at(theta)?;
    let wall = *design.wall();

    let thin = force_thin(&braid, theta, pressure)?;
    let thick = force_thick(&braid, theta, &wall, pressure)?;
    let t_hat = wall.fraction_at(state.diameter())?;
    let f_hat = normalized_force(theta, t_hat)?;
    let via_area = force_from_normalized(theta, t_hat, pressure, state.external_area())?;

    let mut pretty = String::new();
    let _ = writeln!(pretty, "configuration");
    let _ = writeln!(pretty, "  theta          = {:.3} deg", theta.to_degrees());
    let _ = writeln!(pretty, "  length         = {:.3} mm", mm(state.length()));
    let _ = writeln!(pretty, "  diameter       = {:.3} mm", mm(state.diameter()));
    let _ = writeln!(pretty, "  wall thickness = {:.3} mm", mm(wall.thickness_at(state.diameter())?));
    let _ = writeln!(pretty, "  rel. thickness = {:.5}", t_hat);
    let _ = writeln!(
        pretty,
        "forces at {} kPa (tensile-positive: extension is negative)",
        config.pressure * 1e-3
    );
    let _ = writeln!(pretty, "  thin wall      = {:.6} N", thin);
    let _ = writeln!(pretty, "  thick wall     = {:.6} N", thick);
    let _ = writeln!(pretty, "  normalized     = {:.6} (x P x A = {:.6} N)", f_hat, via_area);
    if (theta - resolved_theta).abs() > 1e-12 {
        let _ = writeln!(
            pretty,
            "  (reference angle from L, D, N is {:.3} deg)",
            resolved_theta.to_degrees()
        );
    }

    let csv_text = csv(
        &[
            "theta (deg)",
            "pressure (kPa)",
            "F_thin (N)",
            "F_thick (N)",
            "F_hat",
            "t_hat",
        ],
        &[vec![
            num(theta.to_degrees()),
            num(config.pressure * 1e-3),
            num(thin),
            num(thick),
            num(f_hat),
            num(t_hat),
        ]],
    );

    // the two thick-wall routes agree to rounding; surfaced as a verdict
    let scale = pressure.pascals() * state.external_area();
    let routes_agree = (thick - via_area).abs() <= 1e-12 * thick.abs().max(via_area.abs()).max(1e-3 * scale);

    let json = json_output(
        json!({
            "theta_rad": theta,
            "pressure_pa": config.pressure,
            "fiber_length_m": braid.fiber_length(),
            "turns": braid.turns(),
            "wall_thickness_m": wall.thickness_at(state.diameter())?,
        }),
        json!({
            "force_thin_n": thin,
            "force_thick_n": thick,
            "normalized_force": f_hat,
            "force_from_normalized_n": via_area,
            "relative_thickness": t_hat,
            "diameter_m": state.diameter(),
            "external_area_m2": state.external_area(),
        }),
        json!({ "parameterizations_agree": routes_agree }),
    );

    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: if routes_agree {
            vec![]
        } else {
            vec!["thick-wall parameterizations disagree".into()]
        },
    })
}

// ---------------------------------------------------------------- compare

pub fn cmd_compare(config: &RunConfig, replicate_original_error: bool) -> Result<RunOutput> {
    let (design, _) = reference_design(config)?;

    if replicate_original_error {
        return compare_diagnostic(config, &design);
    }

    let rows = fascicle_core::compare(&design, &config.counts)?;

    let mut pretty = String::new();
    let _ = writeln!(pretty, "force per unit pressure (N/kPa), tensile-positive");
    let _ = writeln!(
        pretty,
        "{:>4}  {:>12}  {:>16}  {:>16}",
        "n", "pack", "eq same rel wall", "eq same abs wall"
    );
    for row in &rows {
        let _ = writeln!(
            pretty,
            "{:>4}  {:>12}  {:>16}  {:>16}",
            row.count,
            format_sig(row.pack.per_kilopascal(), 3),
            format_sig(row.equivalent_relative.per_kilopascal(), 3),
            format_sig(row.equivalent_absolute.per_kilopascal(), 3),
        );
    }

    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                row.count.to_string(),
                num(row.pack.per_kilopascal()),
                num(row.equivalent_relative.per_kilopascal()),
                num(row.equivalent_absolute.per_kilopascal()),
            ]
        })
        .collect();
    let csv_text = csv(
        &[
            "n",
            "pack (N/kPa)",
            "equivalent_relative (N/kPa)",
            "equivalent_absolute (N/kPa)",
        ],
        &csv_rows,
    );

    // verdicts: the relative-thickness equivalent matches the pack exactly;
    // the absolute-thickness one overshoots in magnitude for n > 1
    let mut failures = Vec::new();
    let mut relative_matches = true;
    let mut absolute_exceeds = true;
    for row in &rows {
        let scale = row.pack.per_pascal().abs().max(1e-30);
        if (row.pack.per_pascal() - row.equivalent_relative.per_pascal()).abs() / scale > 1e-12 {
            relative_matches = false;
        }
        if row.count > 1
            && row.equivalent_absolute.per_pascal().abs() <= row.pack.per_pascal().abs()
        {
            absolute_exceeds = false;
        }
    }
    if !relative_matches {
        failures.push("relative-thickness equivalent does not match the pack".into());
    }
    if !absolute_exceeds {
        failures.push("absolute-thickness equivalent does not exceed the pack".into());
    }

    let selected = |row: &fascicle_core::ComparisonRow| match config.policy {
        Policy::Relative => row.equivalent_relative.per_kilopascal(),
        Policy::Absolute => row.equivalent_absolute.per_kilopascal(),
    };
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "n": row.count,
                "pack_n_per_kpa": row.pack.per_kilopascal(),
                "equivalent_relative_n_per_kpa": row.equivalent_relative.per_kilopascal(),
                "equivalent_absolute_n_per_kpa": row.equivalent_absolute.per_kilopascal(),
                "selected_equivalent_n_per_kpa": selected(row),
            })
        })
        .collect();

    let json = json_output(
        inputs_json(config),
        json!({ "rows": json_rows }),
        json!({
            "relative_equivalent_matches_pack": relative_matches,
            "absolute_equivalent_exceeds_pack_for_n_gt_1": absolute_exceeds,
        }),
    );

    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: failures,
    })
}

/// `--replicate-original-error`: build the impossible equivalent (diameter
/// scaled, turn count held) for each n and print its consistency report.
/// Forces are deliberately not computed for these sets.
fn compare_diagnostic(config: &RunConfig, design: &ActuatorDesign) -> Result<RunOutput> {
    let mut pretty = String::new();
    let _ = writeln!(
        pretty,
        "diagnostic: equivalents generated with the turn count held fixed"
    );
    let _ = writeln!(
        pretty,
        "(scaling D by sqrt(n) while keeping L, theta, and N produces a braid"
    );
    let _ = writeln!(
        pretty,
        " no physical fiber can realize; no force is computed for these sets)"
    );
    let _ = writeln!(
        pretty,
        "{:>4}  {:>22}  {:>14}",
        "n", "max relative b spread", "self-consistent"
    );

    let mut reports: Vec<(u32, ConsistencyReport)> = Vec::new();
    for &n in &config.counts {
        let report = fixed_turns_equivalent_report(design, n, config.tolerance)?;
        let _ = writeln!(
            pretty,
            "{:>4}  {:>22}  {:>14}",
            n,
            format_sig(report.max_relative_spread, 3),
            report.consistent
        );
        reports.push((n, report));
    }

    let csv_rows: Vec<Vec<String>> = reports
        .iter()
        .map(|(n, r)| {
            vec![
                n.to_string(),
                num(r.max_relative_spread),
                r.consistent.to_string(),
            ]
        })
        .collect();
    let csv_text = csv(&["n", "max_relative_spread", "consistent"], &csv_rows);

    let json_rows: Vec<Value> = reports
        .iter()
        .map(|(n, r)| {
            json!({
                "n": n,
                "b_from_length_m": r.b_from_length,
                "b_from_diameter_m": r.b_from_diameter,
                "b_from_pythagoras_m": r.b_from_pythagoras,
                "max_relative_spread": r.max_relative_spread,
                "consistent": r.consistent,
            })
        })
        .collect();

    let json = json_output(
        inputs_json(config),
        json!({ "fixed_turn_equivalents": json_rows }),
        json!({
            "all_inconsistent_beyond_n_1": reports
                .iter()
                .all(|(n, r)| *n == 1 || !r.consistent),
        }),
    );

    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: vec![],
    })
}

fn inputs_json(config: &RunConfig) -> Value {
    let (wall_kind, wall_value) = match config.wall {
        WallConfig::Thickness(t) => ("thickness_m", t),
        WallConfig::Fraction(f) => ("fraction", f),
    };
    json!({
        "length_m": config.length,
        "diameter_m": config.diameter,
        "turns": config.turns,
        "wall": { wall_kind: wall_value },
        "pressure_pa": config.pressure,
        "counts": config.counts,
        "policy": config.policy.as_str(),
        "theta_override_rad": config.theta,
    })
}

// ------------------------------------------------------------------ sweep

/// Inclusive evaluation grid over braid angle (degrees) and relative
/// thickness.
pub struct SweepGrid {
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub theta_steps: usize,
    pub t_hat_min: f64,
    pub t_hat_max: f64,
    pub t_hat_steps: usize,
}

impl SweepGrid {
    fn axis(min: f64, max: f64, steps: usize) -> Vec<f64> {
        if steps <= 1 {
            return vec![min];
        }
        (0..steps)
            .map(|i| min + (max - min) * i as f64 / (steps - 1) as f64)
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if !(self.theta_min_deg > 0.0 && self.theta_max_deg <= 90.0) {
            return Err(CommandError::Domain(format!(
                "sweep angles must lie in (0, 90] deg, got [{}, {}] deg",
                self.theta_min_deg, self.theta_max_deg
            )));
        }
        if !(0.0..=0.5).contains(&self.t_hat_min) || !(0.0..=0.5).contains(&self.t_hat_max) {
            return Err(CommandError::Domain(format!(
                "sweep thickness fractions must lie in [0, 0.5], got [{}, {}]",
                self.t_hat_min, self.t_hat_max
            )));
        }
        if self.theta_min_deg > self.theta_max_deg
            || self.t_hat_min > self.t_hat_max
            || self.theta_steps == 0
            || self.t_hat_steps == 0
        {
            return Err(CommandError::Domain("sweep grid is empty".into()));
        }
        Ok(())
    }
}

pub fn cmd_sweep(grid: &SweepGrid) -> Result<RunOutput> {
    grid.validate()?;
    let thetas = SweepGrid::axis(grid.theta_min_deg, grid.theta_max_deg, grid.theta_steps);
    let t_hats = SweepGrid::axis(grid.t_hat_min, grid.t_hat_max, grid.t_hat_steps);

    let headers = ["theta (deg)", "t_hat", "F_hat", "zero_force_theta (deg)"];
    let mut csv_rows = Vec::with_capacity(thetas.len() * t_hats.len());
    let mut json_points = Vec::with_capacity(thetas.len() * t_hats.len());
    for &t_hat in &t_hats {
        let zero = zero_force_angle(t_hat)?.to_degrees();
        for &theta_deg in &thetas {
            let f_hat = normalized_force(theta_deg.to_radians(), t_hat)?;
            csv_rows.push(vec![num(theta_deg), num(t_hat), num(f_hat), num(zero)]);
            json_points.push(json!({
                "theta_deg": theta_deg,
                "t_hat": t_hat,
                "f_hat": f_hat,
                "zero_force_theta_deg": zero,
            }));
        }
    }
    let csv_text = csv(&headers, &csv_rows);

    // pretty mode carries the same data in aligned columns
    let mut pretty = String::new();
    let _ = writeln!(
        pretty,
        "{:>12}  {:>8}  {:>22}  {:>22}",
        "theta (deg)", "t_hat", "F_hat", "zero_force_theta (deg)"
    );
    for row in &csv_rows {
        let _ = writeln!(
            pretty,
            "{:>12}  {:>8}  {:>22}  {:>22}",
            row[0], row[1], row[2], row[3]
        );
    }

    let json = json_output(
        json!({
            "theta_min_deg": grid.theta_min_deg,
            "theta_max_deg": grid.theta_max_deg,
            "theta_steps": grid.theta_steps,
            "t_hat_min": grid.t_hat_min,
            "t_hat_max": grid.t_hat_max,
            "t_hat_steps": grid.t_hat_steps,
        }),
        json!({ "points": json_points }),
        json!({}),
    );

    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: vec![],
    })
}

// ----------------------------------------------------------------- energy

pub fn cmd_energy(config: &RunConfig) -> Result<RunOutput> {
    let (design, resolved_theta) = reference_design(config)?;
    let braid = *design.braid();
    let theta_initial = config.theta_initial.unwrap_or(resolved_theta);
    let stroke = StrokeSpec::new(theta_initial, config.theta_final)?;
    let pressure = GaugePressure::new(config.pressure)?;

    let dv_gamma = delta_volume(&braid, &stroke)?;
    let v1 = volume_of(&braid, stroke.theta_initial())?;
    let v2 = volume_of(&braid, stroke.theta_final())?;
    let dv_states = v2 - v1;
    let audit = fascicle_core::EnergyAudit::for_stroke(&braid, &stroke, pressure)?;
    let zero_stroke = stroke.theta_initial() == stroke.theta_final();
    let work = if zero_stroke {
        0.0
    } else {
        work_integral(&braid, &stroke, pressure)?
    };
    let work_thick = if zero_stroke {
        0.0
    } else {
        work_integral_thick(&braid, &stroke, design.wall(), pressure)?
    };
    let pack = pack_vs_equivalent_energy(&braid, config.count, &stroke, pressure)?;

    // verdicts with near-zero guards scaled by the state volumes
    let forms_agree =
        (dv_gamma - dv_states).abs() <= 1e-12 * dv_gamma.abs().max(dv_states.abs()).max(1e-3 * (v1 + v2));
    let energy_scale = pressure.pascals() * (v1 + v2);
    let residual = (work + pressure.pascals() * dv_gamma).abs();
    let identity_holds = residual
        <= 1e-9 * (pressure.pascals() * dv_gamma.abs()).max(1e-3 * energy_scale);
    let forces_match = zero_stroke
        || (pack.f_avg_pack - pack.f_avg_equivalent).abs()
            <= 1e-12 * pack.f_avg_pack.abs().max(pack.f_avg_equivalent.abs());

    let mut pretty = String::new();
    let _ = writeln!(pretty, "stroke");
    let _ = writeln!(pretty, "  theta initial = {:.3} deg", stroke.theta_initial().to_degrees());
    let _ = writeln!(pretty, "  theta final   = {:.3} deg", stroke.theta_final().to_degrees());
    let _ = writeln!(pretty, "  gamma         = {:.6}", stroke.gamma());
    let _ = writeln!(pretty, "  dL            = {:.3} mm", mm(audit.delta_l));
    let _ = writeln!(pretty, "volume change (m^3)");
    let _ = writeln!(pretty, "  gamma form    = {:.9e}", dv_gamma);
    let _ = writeln!(pretty, "  two-state     = {:.9e}", dv_states);
    let _ = writeln!(pretty, "energy at {} kPa", config.pressure * 1e-3);
    let _ = writeln!(pretty, "  work integral (thin)          = {:.9e} J", work);
    let _ = writeln!(pretty, "  -P dV                         = {:.9e} J", -pressure.pascals() * dv_gamma);
    let _ = writeln!(pretty, "  work integral (thick wall)    = {:.9e} J  (informational)", work_thick);
    let _ = writeln!(pretty, "  F_avg                         = {:.6} N", audit.f_avg);
    let _ = writeln!(pretty, "  E_in  = P |dV|                = {:.9e} J", audit.energy_in);
    let _ = writeln!(pretty, "  E_out = |F_avg dL|            = {:.9e} J", audit.energy_out);
    let _ = writeln!(pretty, "pack of {} vs equivalent actuator", pack.count);
    let _ = writeln!(pretty, "  dV pack       = {:.9e} m^3", pack.delta_v_pack);
    let _ = writeln!(pretty, "  dV equivalent = {:.9e} m^3", pack.delta_v_equivalent);
    let _ = writeln!(pretty, "  F_avg pack    = {:.6} N", pack.f_avg_pack);
    let _ = writeln!(pretty, "  F_avg equiv.  = {:.6} N", pack.f_avg_equivalent);
    let _ = writeln!(
        pretty,
        "verdicts: volume forms {}; energy identity {}; pack volumes {}; pack forces {}",
        pass(forms_agree),
        pass(identity_holds),
        pass(pack.volumes_match),
        pass(forces_match),
    );

    let csv_text = csv(
        &[
            "theta_initial (deg)",
            "theta_final (deg)",
            "gamma",
            "delta_L (mm)",
            "delta_V_gamma (m3)",
            "delta_V_two_state (m3)",
            "work_thin (J)",
            "work_thick (J)",
            "F_avg (N)",
            "E_in (J)",
            "E_out (J)",
            "n",
            "delta_V_pack (m3)",
            "delta_V_equivalent (m3)",
        ],
        &[vec![
            num(stroke.theta_initial().to_degrees()),
            num(stroke.theta_final().to_degrees()),
            num(stroke.gamma()),
            num(mm(audit.delta_l)),
            num(dv_gamma),
            num(dv_states),
            num(work),
            num(work_thick),
            num(audit.f_avg),
            num(audit.energy_in),
            num(audit.energy_out),
            pack.count.to_string(),
            num(pack.delta_v_pack),
            num(pack.delta_v_equivalent),
        ]],
    );

    let json = json_output(
        json!({
            "length_m": config.length,
            "diameter_m": config.diameter,
            "turns": config.turns,
            "pressure_pa": config.pressure,
            "theta_initial_rad": stroke.theta_initial(),
            "theta_final_rad": stroke.theta_final(),
            "count": config.count,
        }),
        json!({
            "gamma": stroke.gamma(),
            "delta_l_m": audit.delta_l,
            "delta_v_gamma_m3": dv_gamma,
            "delta_v_two_state_m3": dv_states,
            "work_thin_j": work,
            "work_thick_j": work_thick,
            "f_avg_n": audit.f_avg,
            "energy_in_j": audit.energy_in,
            "energy_out_j": audit.energy_out,
            "delta_v_pack_m3": pack.delta_v_pack,
            "delta_v_equivalent_m3": pack.delta_v_equivalent,
            "f_avg_pack_n": pack.f_avg_pack,
            "f_avg_equivalent_n": pack.f_avg_equivalent,
            "energy_identity_residual_j": residual,
        }),
        json!({
            "volume_forms_agree": forms_agree,
            "energy_identity_holds": identity_holds,
            "pack_equivalent_volumes_match": pack.volumes_match,
            "pack_equivalent_forces_match": forces_match,
        }),
    );

    let mut failures = Vec::new();
    if !forms_agree {
        failures.push("volume forms disagree".into());
    }
    if !identity_holds {
        failures.push("work integral does not match -P dV".into());
    }
    if !pack.volumes_match {
        failures.push("pack and equivalent volume changes differ".into());
    }
    if !forces_match {
        failures.push("pack and equivalent average forces differ".into());
    }

    Ok(RunOutput {
        pretty,
        csv: csv_text,
        json,
        verdict_failures: failures,
    })
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_pretty_carries_reference_values() {
        let config = RunConfig::default();
        let output = cmd_compare(&config, false).unwrap();
        assert!(output.pretty.contains("-0.165"));
        assert!(output.pretty.contains("-13.3"));
        assert!(output.verdict_failures.is_empty());
    }

    #[test]
    fn resolve_prints_reference_digits() {
        let config = RunConfig::default();
        let output = cmd_resolve(&config).unwrap();
        assert!(output.pretty.contains("b     = 866.728 mm"));
        assert!(output.pretty.contains("theta = 80.369 deg"));
        assert!(output.verdict_failures.is_empty());
    }

    #[test]
    fn resolve_flags_the_measured_angle() {
        let config = RunConfig {
            theta: Some(75.2f64.to_radians()),
            ..RunConfig::default()
        };
        let output = cmd_resolve(&config).unwrap();
        assert!(!output.verdict_failures.is_empty());
        assert!(output.pretty.contains("inconsistent"));
    }

    #[test]
    fn sweep_hits_the_anchors() {
        let grid = SweepGrid {
            theta_min_deg: 54.7356,
            theta_max_deg: 90.0,
            theta_steps: 2,
            t_hat_min: 0.0,
            t_hat_max: 0.0,
            t_hat_steps: 1,
        };
        let output = cmd_sweep(&grid).unwrap();
        assert!(output.csv.contains("\n90,0,-1,"));
        let out_of_domain = SweepGrid {
            theta_min_deg: 0.0,
            theta_max_deg: 60.0,
            theta_steps: 5,
            t_hat_min: 0.0,
            t_hat_max: 0.5,
            t_hat_steps: 2,
        };
        assert!(cmd_sweep(&out_of_domain).is_err());
    }

    #[test]
    fn energy_verdicts_pass_for_default_stroke() {
        let config = RunConfig::default();
        let output = cmd_energy(&config).unwrap();
        assert!(output.verdict_failures.is_empty(), "{:?}", output.verdict_failures);
        assert!(output.pretty.contains("PASS"));
    }

    #[test]
    fn zero_stroke_audits_to_zero() {
        let mut config = RunConfig::default();
        let (_, theta) = resolve(config.length, config.diameter, config.turns).unwrap();
        config.theta_initial = Some(theta);
        config.theta_final = theta;
        let output = cmd_energy(&config).unwrap();
        assert!(output.verdict_failures.is_empty());
        assert!(output.json["outputs"]["delta_v_gamma_m3"].as_f64().unwrap() == 0.0);
        assert!(output.json["outputs"]["work_thin_j"].as_f64().unwrap() == 0.0);
    }

    #[test]
    fn diagnostic_mode_reports_inconsistency() {
        let config = RunConfig::default();
        let output = cmd_compare(&config, true).unwrap();
        assert_eq!(
            output.json["verdicts"]["all_inconsistent_beyond_n_1"],
            serde_json::Value::Bool(true)
        );
    }
}
