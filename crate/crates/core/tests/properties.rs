//! Property tests for the model invariants: kinematic round trips,
//! Pythagorean closure, the pack/equivalent equality theorems, and the
//! energy identities.

use fascicle_core::{
    check_consistency, delta_volume, diameter_of, equality_theorem_thin, equivalent_design,
    fiber_length_from, force_from_normalized, force_thick, gamma_of, length_of,
    pack_vs_equivalent_energy, resolve, theta_from_diameter, theta_from_length, volume_of,
    work_integral, ActuatorDesign, BraidSpec, EquivalencePolicy, GaugePressure, RawParameterSet,
    StrokeSpec, WallSpec,
};
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, PI};

fn braid_strategy() -> impl Strategy<Value = BraidSpec> {
    // fiber lengths from centimeters to meters, fractional turn counts
    (0.05f64..2.0, 2.0f64..60.0).prop_map(|(b, n)| BraidSpec::new(b, n).unwrap())
}

fn angle_strategy() -> impl Strategy<Value = f64> {
    0.01f64..(FRAC_PI_2 - 0.01)
}

/// Relative difference guarded for the near-zero case: differences of
/// quantities of scale `scale` cannot be resolved below rounding of that
/// scale, so the denominator never drops under 1e-3 * scale.
fn rel_diff(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-3 * scale)
}

proptest! {
    #[test]
    fn angle_round_trips(braid in braid_strategy(), theta in angle_strategy()) {
        let l = length_of(&braid, theta).unwrap();
        let d = diameter_of(&braid, theta).unwrap();
        prop_assert!((theta_from_length(&braid, l).unwrap() - theta).abs() < 1e-12);
        prop_assert!((theta_from_diameter(&braid, d).unwrap() - theta).abs() < 1e-12);
    }

    #[test]
    fn pythagorean_closure(braid in braid_strategy(), theta in angle_strategy()) {
        let l = length_of(&braid, theta).unwrap();
        let d = diameter_of(&braid, theta).unwrap();
        let b = fiber_length_from(l, d, braid.turns()).unwrap();
        prop_assert!((b - braid.fiber_length()).abs() / braid.fiber_length() < 1e-12);
    }

    #[test]
    fn equal_length_and_angle_give_equal_fiber_length(
        length in 0.05f64..1.0,
        theta in angle_strategy(),
        turns_a in 2.0f64..60.0,
        turns_b in 2.0f64..60.0,
    ) {
        // two braids sharing L and theta: D_i follows from the circumference
        // relation, and resolving each must recover the same fiber length
        let circumferential = length * theta.tan();
        let (braid_a, theta_a) = resolve(length, circumferential / (PI * turns_a), turns_a).unwrap();
        let (braid_b, theta_b) = resolve(length, circumferential / (PI * turns_b), turns_b).unwrap();
        prop_assert!(
            (braid_a.fiber_length() - braid_b.fiber_length()).abs()
                / braid_a.fiber_length() < 1e-12
        );
        prop_assert!((theta_a - theta).abs() < 1e-9);
        prop_assert!((theta_b - theta).abs() < 1e-9);
    }

    #[test]
    fn turns_and_diameter_are_coupled(
        braid in braid_strategy(),
        theta in angle_strategy(),
        scale in 1.01f64..10.0,
    ) {
        // with b and theta fixed, scaling the diameter forces the turn
        // count to scale inversely; equal turn counts iff equal diameters
        let d = diameter_of(&braid, theta).unwrap();
        let implied_turns = |dia: f64| braid.fiber_length() * theta.sin() / (PI * dia);
        let n_same = implied_turns(d);
        let n_scaled = implied_turns(d * scale);
        prop_assert!((n_same - braid.turns()).abs() / braid.turns() < 1e-12);
        prop_assert!((n_scaled * scale - braid.turns()).abs() / braid.turns() < 1e-12);
        prop_assert!((n_scaled - braid.turns()).abs() / braid.turns() > 1e-3);
    }

    #[test]
    fn resolve_output_is_self_consistent(
        length in 0.05f64..1.0,
        diameter in 0.002f64..0.08,
        turns in 2.0f64..60.0,
    ) {
        let (braid, theta) = resolve(length, diameter, turns).unwrap();
        let raw = RawParameterSet::new(length, diameter, Some(theta), turns).unwrap();
        let report = check_consistency(&raw, 1e-9).unwrap();
        prop_assert!(report.consistent, "spread {}", report.max_relative_spread);
        prop_assert!((braid.fiber_length() - report.b_from_pythagoras).abs() == 0.0);
    }

    #[test]
    fn normalized_route_equals_d0_route(
        braid in braid_strategy(),
        theta in angle_strategy(),
        t_hat in 0.0f64..0.45,
        pressure_kpa in 0.1f64..500.0,
    ) {
        // the instantaneous-diameter parameterization reproduces force_thick
        // when fed geometry from the same configuration
        let pressure = GaugePressure::new(pressure_kpa * 1e3).unwrap();
        let state = braid.at(theta).unwrap();
        let wall = WallSpec::relative(t_hat).unwrap();
        let via_d0 = force_thick(&braid, theta, &wall, pressure).unwrap();
        let via_area =
            force_from_normalized(theta, t_hat, pressure, state.external_area()).unwrap();
        let scale = pressure.pascals() * state.external_area();
        prop_assert!(rel_diff(via_d0, via_area, scale) < 1e-12);
    }

    #[test]
    fn thin_pack_equals_equivalent(
        braid in braid_strategy(),
        theta in angle_strategy(),
        count in 1u32..128,
    ) {
        let (pack, eq) = equality_theorem_thin(&braid, theta, count).unwrap();
        prop_assert!((pack.0 - eq.0).abs() / pack.0.abs().max(eq.0.abs()) < 1e-12);
    }

    #[test]
    fn thick_pack_equals_equivalent_under_relative_policy(
        braid in braid_strategy(),
        theta in angle_strategy(),
        t_hat in 0.0f64..0.45,
        count in 1u32..128,
    ) {
        let wall = WallSpec::relative(t_hat).unwrap();
        let unit = ActuatorDesign::new(braid, wall, theta).unwrap();
        let eq = equivalent_design(&unit, count, EquivalencePolicy::RelativeThickness).unwrap();
        let pack = f64::from(count) * unit.force_per_pressure().unwrap().0;
        let single = eq.force_per_pressure().unwrap().0;
        // scale of the two summed force terms, for the near-zero guard
        let area = unit.reference_state().external_area();
        let scale = f64::from(count) * area * (1.0 + t_hat);
        prop_assert!(rel_diff(pack, single, scale) < 1e-12);
    }

    #[test]
    fn gamma_form_matches_two_state_form(
        braid in braid_strategy(),
        theta1 in angle_strategy(),
        theta2 in angle_strategy(),
    ) {
        let stroke = StrokeSpec::new(theta1, theta2).unwrap();
        let dv_gamma = delta_volume(&braid, &stroke).unwrap();
        let dv_states = volume_of(&braid, theta2).unwrap() - volume_of(&braid, theta1).unwrap();
        let scale = volume_of(&braid, theta1).unwrap() + volume_of(&braid, theta2).unwrap();
        prop_assert!(rel_diff(dv_gamma, dv_states, scale) < 1e-12);
    }

    #[test]
    fn gamma_is_shared_between_pack_and_equivalent(
        braid in braid_strategy(),
        theta1 in angle_strategy(),
        theta2 in angle_strategy(),
        count in 1u32..64,
    ) {
        // equal L1, L2, b force equal theta1, theta2, gamma on the scaled braid
        let eq = BraidSpec::new(braid.fiber_length(), braid.turns() / f64::from(count).sqrt())
            .unwrap();
        let stroke = StrokeSpec::new(theta1, theta2).unwrap();
        let l1 = length_of(&braid, theta1).unwrap();
        let l2 = length_of(&braid, theta2).unwrap();
        prop_assert!((length_of(&eq, theta1).unwrap() - l1).abs() / l1 < 1e-15);
        prop_assert!((length_of(&eq, theta2).unwrap() - l2).abs() / l2 < 1e-15);
        prop_assert_eq!(gamma_of(&stroke), stroke.gamma());
    }

    #[test]
    fn pack_volume_change_matches_equivalent(
        braid in braid_strategy(),
        theta1 in angle_strategy(),
        theta2 in angle_strategy(),
        count in 1u32..64,
    ) {
        let stroke = StrokeSpec::new(theta1, theta2).unwrap();
        let p = GaugePressure::new(1e3).unwrap();
        let report = pack_vs_equivalent_energy(&braid, count, &stroke, p).unwrap();
        prop_assert!(report.volumes_match, "mismatch {}", report.volume_mismatch);
    }
}

proptest! {
    // the quadrature is slower than the closed forms; fewer cases suffice here
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn work_integral_matches_energy_balance(
        braid in braid_strategy(),
        theta1 in angle_strategy(),
        theta2 in angle_strategy(),
        pressure_kpa in 0.5f64..200.0,
    ) {
        prop_assume!((theta1 - theta2).abs() > 1e-3);
        let stroke = StrokeSpec::new(theta1, theta2).unwrap();
        let p = GaugePressure::new(pressure_kpa * 1e3).unwrap();
        let w = work_integral(&braid, &stroke, p).unwrap();
        let dv = delta_volume(&braid, &stroke).unwrap();
        let scale = p.pascals()
            * (volume_of(&braid, theta1).unwrap() + volume_of(&braid, theta2).unwrap());
        prop_assert!(rel_diff(w, -p.pascals() * dv, scale) < 1e-9);
    }
}
