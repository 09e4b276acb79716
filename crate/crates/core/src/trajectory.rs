//! Time evaluation of a [`KickPlan`] and the sagittal foot offsets.

use crate::error::TrajectoryError;
use crate::model::{KickPlan, Phase, PhaseSegment, TrajectorySample};

/// Forward and upward foot-tip offsets for a swing angle. The tip moves on a
/// circle of radius `z_h - r_b` about the hip.
pub fn foot_offsets(theta: f64, hip_height: f64, ball_radius: f64) -> (f64, f64) {
    let radius = hip_height - ball_radius;
    (radius * theta.sin(), radius * (1.0 - theta.cos()))
}

/// Segment owning time `t`: intervals are half-open, the last one closed.
fn locate(plan: &KickPlan, t: f64) -> Option<&PhaseSegment> {
    let segments = plan.segments();
    segments
        .iter()
        .rev()
        .find(|s| t >= s.t_start())
        .or_else(|| segments.first())
}

pub fn evaluate(plan: &KickPlan, t: f64) -> Result<TrajectorySample, TrajectoryError> {
    let kick_time = plan.kick_time();
    if !(t >= 0.0 && t <= kick_time) {
        return Err(TrajectoryError::OutOfRange { t, kick_time });
    }
    let summary = plan.summary();
    let (phase, theta, omega, alpha) = match locate(plan, t) {
        Some(seg) => {
            let state = seg.state_at(t - seg.t_start());
            (seg.phase(), state.theta, state.omega, seg.alpha())
        }
        None => (Phase::Swing, 0.0, 0.0, 0.0),
    };
    let (x_offset, z_offset) = foot_offsets(theta, summary.hip_height, summary.ball_radius);
    Ok(TrajectorySample {
        t,
        phase,
        theta,
        omega,
        alpha,
        x_offset,
        z_offset,
    })
}

/// Evaluates the plan and passes each sample through `modifier`, e.g. to
/// derive a knee extension from the swing angle. No modifier shape is built in.
pub fn evaluate_with<T>(
    plan: &KickPlan,
    t: f64,
    modifier: impl Fn(&TrajectorySample) -> T,
) -> Result<(TrajectorySample, T), TrajectoryError> {
    let sample = evaluate(plan, t)?;
    let extra = modifier(&sample);
    Ok((sample, extra))
}

/// Sample times: the `dt` grid, every segment start and the end time, merged
/// into a strictly increasing sequence.
pub fn sample_times(plan: &KickPlan, dt: f64) -> Result<Vec<f64>, TrajectoryError> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(TrajectoryError::InvalidStep(dt));
    }
    let kick_time = plan.kick_time();
    let mut times: Vec<f64> = Vec::new();
    let mut k = 0u64;
    loop {
        let t = k as f64 * dt;
        if t >= kick_time {
            break;
        }
        times.push(t);
        k += 1;
    }
    times.extend(
        plan.segments()
            .iter()
            .map(|s| s.t_start())
            .filter(|&t| t <= kick_time),
    );
    times.push(kick_time);
    times.sort_by(f64::total_cmp);
    times.dedup();
    Ok(times)
}

pub fn sample_trajectory(plan: &KickPlan, dt: f64) -> Result<Vec<TrajectorySample>, TrajectoryError> {
    sample_times(plan, dt)?
        .into_iter()
        .map(|t| evaluate(plan, t))
        .collect()
}
