mod common;

use common::{derived_params, random_plan};
use kickplan::verify::check_plan;
use kickplan::{
    estimate_ball_launch, evaluate, plan_kick, sample_trajectory, ImpactModel, KickParams, Phase,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn planned_kicks_pass_their_own_check(seed in any::<u64>()) {
        let (params, _, plan) = random_plan(&mut seeded(seed));
        let report = check_plan(&plan, &params);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn segments_tile_the_kick(seed in any::<u64>()) {
        let (_, _, plan) = random_plan(&mut seeded(seed));
        let s = plan.summary();
        let total: f64 = plan.segments().iter().map(|x| x.duration()).sum();
        prop_assert!((total - s.kick_time).abs() < 1e-12);
        prop_assert_eq!(plan.segments()[0].t_start(), 0.0);
        for pair in plan.segments().windows(2) {
            prop_assert!((pair[1].t_start() - pair[0].t_end()).abs() < 1e-12);
            let (a, b) = (pair[0].end_state(), pair[1].start_state());
            prop_assert!((a.theta - b.theta).abs() < 1e-9);
            prop_assert!((a.omega - b.omega).abs() < 1e-9);
        }
        prop_assert!((s.step_frequency * s.kick_time - 1.0).abs() < 1e-15);
        prop_assert_eq!(
            s.kick_time,
            s.prepare_time + s.strike_time + s.extension_time + s.return_time
        );
    }

    #[test]
    fn phase_angles_chain_exactly(seed in any::<u64>()) {
        let (params, _, plan) = random_plan(&mut seeded(seed));
        let s = plan.summary();
        prop_assert_eq!(s.return_angle, s.kick_angle + params.extension_angle);
        prop_assert_eq!(s.post_angle, s.return_angle + s.swing_angle);
        prop_assert_eq!(s.pre_swing_angle, s.kick_angle - s.swing_angle);
        prop_assert_eq!(plan.has_prepare(), s.pre_swing_angle < 0.0);
    }

    #[test]
    fn impact_at_target_angle_and_velocity(seed in any::<u64>()) {
        let (_, _, plan) = random_plan(&mut seeded(seed));
        let s = plan.summary();
        let impact = evaluate(&plan, s.impact_time()).unwrap();
        prop_assert!((impact.theta - s.kick_angle).abs() < 1e-9);
        prop_assert!((impact.omega - s.kick_velocity).abs() < 1e-9);
    }

    #[test]
    fn bang_bang_peaks(seed in any::<u64>()) {
        let (_, _, plan) = random_plan(&mut seeded(seed));
        let s = plan.summary();
        let max_alpha = plan.segments().iter().map(|x| x.alpha().abs()).fold(0.0, f64::max);
        prop_assert_eq!(max_alpha, s.kick_acceleration);
        let stroke = plan
            .segments()
            .iter()
            .filter(|x| x.phase() != Phase::Return)
            .map(|x| x.peak_speed())
            .fold(0.0, f64::max);
        prop_assert!((stroke - s.kick_velocity).abs() < 1e-9);
        // the rest-to-rest return over theta_post peaks at sqrt(alpha_k * theta_post)
        let overall = plan.segments().iter().map(|x| x.peak_speed()).fold(0.0, f64::max);
        let expected = s.kick_velocity.max((s.kick_acceleration * s.post_angle).sqrt());
        prop_assert!((overall - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn torque_scaling(seed in any::<u64>(), c in 1.1f64..4.0) {
        let (mut params, leg, plan) = random_plan(&mut seeded(seed));
        let s = *plan.summary();
        // pin omega_k so only the acceleration changes
        params.kick_velocity_request = Some(s.kick_velocity);
        params.hip_torque *= c;
        params.swing_min = -100.0;
        if let Ok(scaled) = plan_kick(&params, &leg) {
            let t = scaled.summary();
            prop_assert_eq!(t.kick_velocity, s.kick_velocity);
            prop_assert!((t.kick_acceleration - c * s.kick_acceleration).abs() <= 1e-12 * t.kick_acceleration);
            prop_assert!((t.swing_time - s.swing_time / c).abs() <= 1e-12 * s.swing_time);
            prop_assert!((t.swing_angle - s.swing_angle / c).abs() <= 1e-12 * s.swing_angle);
        }
    }

    #[test]
    fn faster_kicks_overshoot_further(seed in any::<u64>(), k in 0.1f64..0.95) {
        let (mut params, leg, plan) = random_plan(&mut seeded(seed));
        let fast = *plan.summary();
        params.kick_velocity_request = Some(k * fast.kick_velocity);
        let slow = *plan_kick(&params, &leg).unwrap().summary();
        prop_assert!(slow.post_angle <= fast.post_angle);
        prop_assert!(slow.swing_time <= fast.swing_time);
        prop_assert!(slow.swing_angle <= fast.swing_angle);
    }

    #[test]
    fn deterministic(seed in any::<u64>()) {
        let (params, leg, plan) = random_plan(&mut seeded(seed));
        let again = plan_kick(&params, &leg).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&plan).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn foot_stays_on_circle(seed in any::<u64>()) {
        let (params, _, plan) = random_plan(&mut seeded(seed));
        let radius = params.foot_radius();
        for s in sample_trajectory(&plan, 5e-3).unwrap() {
            let lhs = s.x_offset * s.x_offset + (radius - s.z_offset).powi(2);
            prop_assert!((lhs - radius * radius).abs() < 1e-12);
            if s.theta.abs() <= std::f64::consts::FRAC_PI_2 {
                prop_assert!(s.z_offset >= 0.0);
            }
        }
    }

    #[test]
    fn launch_monotone_in_kick_velocity(w in 0.0f64..20.0, dw in 1e-3f64..5.0, e in 0.0f64..=1.0) {
        let model = ImpactModel { ball_mass: 0.45, effective_mass: 2.0, restitution: e, launch_angle: 0.3 };
        let a = estimate_ball_launch(w, 0.6, 0.1, &model).unwrap();
        let b = estimate_ball_launch(w + dw, 0.6, 0.1, &model).unwrap();
        prop_assert!(b.ball_speed > a.ball_speed);
        prop_assert!(b.range > a.range);
        prop_assert!(b.impulse > a.impulse);
    }
}

#[test]
fn derived_plan_scalars() {
    let (params, leg) = derived_params();
    let s = *plan_kick(&params, &leg).unwrap().summary();
    assert!((s.kick_time - 1.3987961744133595).abs() < 1e-12);
    assert!((s.step_frequency - 0.71490043960078).abs() < 1e-12);
}

#[test]
fn paper_frequency_example() {
    // a 1.4286 s kick slows a 2.4 Hz gait to about 0.7 Hz for one step
    let (params, leg) = derived_params();
    let plan = plan_kick(&params, &leg).unwrap();
    let json = serde_json::to_value(&plan).unwrap();
    let mut summary = json["summary"].clone();
    summary["kick_time"] = 1.4286.into();
    let patched = serde_json::json!({ "summary": summary, "segments": json["segments"] });
    let plan: kickplan::KickPlan = serde_json::from_value(patched).unwrap();
    let schedule = kickplan::schedule_step_frequency(&plan, 2.4);
    assert!((schedule.kick_step - 0.7).abs() < 1e-4);
    assert_eq!(schedule.following, 2.4);

    let mut unit = json["summary"].clone();
    unit["kick_time"] = 1.0.into();
    let plan: kickplan::KickPlan =
        serde_json::from_value(serde_json::json!({ "summary": unit, "segments": [] })).unwrap();
    assert_eq!(kickplan::schedule_step_frequency(&plan, 2.4).kick_step, 1.0);
}

#[test]
fn negative_duration_plan_is_rejected() {
    let (params, leg) = derived_params();
    let plan = plan_kick(&params, &leg).unwrap();
    let mut json = serde_json::to_value(&plan).unwrap();
    json["segments"][2]["duration"] = (-0.1).into();
    assert!(serde_json::from_value::<kickplan::KickPlan>(json).is_err());
    let mut json = serde_json::to_value(&plan).unwrap();
    json["summary"]["prepare_time"] = (-0.1).into();
    assert!(serde_json::from_value::<kickplan::KickPlan>(json).is_err());
}

#[test]
fn params_round_trip_through_validation() {
    let (params, _) = derived_params();
    let bad = KickParams { swing_max: -0.1, ..params };
    assert!(plan_kick(&bad, &derived_params().1).is_err());
}
