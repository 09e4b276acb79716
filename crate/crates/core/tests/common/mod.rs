#![allow(dead_code)]

use kickplan::{plan_kick, KickParams, KickPlan, LegMassModel};
use rand::rngs::StdRng;
use rand::Rng;

pub fn derived_params() -> (KickParams, LegMassModel) {
    let params = KickParams {
        ball_radius: 0.1,
        ball_distance: 0.6,
        hip_height: 0.6,
        hip_torque: 50.0,
        hip_velocity_max: 8.0,
        kick_velocity_request: Some(6.0),
        extension_angle: 0.2,
        swing_min: -1.2,
        swing_max: 2.0,
        nominal_frequency: 2.4,
    };
    (params, LegMassModel::from_pairs(&[(10.0, 0.5)]).unwrap())
}

/// Draws parameters that satisfy every input invariant. Joint limits are
/// drawn around the kick angle so most, but not all, draws are plannable.
pub fn random_inputs(rng: &mut StdRng) -> (KickParams, LegMassModel) {
    let ball_radius: f64 = rng.gen_range(0.05..0.12);
    let hip_height: f64 = ball_radius + rng.gen_range(0.2..0.6);
    let ball_distance = ball_radius + rng.gen_range(0.05..0.8);
    let kick_angle = (hip_height - ball_radius).atan2(ball_distance - ball_radius);
    let extension_angle = if rng.gen_bool(0.1) { 0.0 } else { rng.gen_range(0.0..0.35) };

    let mut pairs: Vec<(f64, f64)> = (0..5)
        .map(|_| (rng.gen_range(0.2..1.5), rng.gen_range(0.0..0.6)))
        .collect();
    pairs.sort_by(|a, b| a.1.total_cmp(&b.1));
    pairs[4].1 = pairs[4].1.max(0.1);
    let leg = LegMassModel::from_pairs(&pairs).unwrap();

    let params = KickParams {
        ball_radius,
        ball_distance,
        hip_height,
        hip_torque: rng.gen_range(2.0..40.0),
        hip_velocity_max: rng.gen_range(2.0..12.0),
        kick_velocity_request: if rng.gen_bool(0.3) {
            Some(rng.gen_range(0.5..12.0))
        } else {
            None
        },
        extension_angle,
        swing_min: rng.gen_range(-1.6..-0.05),
        swing_max: kick_angle + extension_angle + rng.gen_range(0.02..1.5),
        nominal_frequency: rng.gen_range(1.5..3.0),
    };
    (params.validate().unwrap(), leg)
}

/// Random inputs together with their plan, skipping infeasible draws.
pub fn random_plan(rng: &mut StdRng) -> (KickParams, LegMassModel, KickPlan) {
    loop {
        let (params, leg) = random_inputs(rng);
        if let Ok(plan) = plan_kick(&params, &leg) {
            return (params, leg, plan);
        }
    }
}
