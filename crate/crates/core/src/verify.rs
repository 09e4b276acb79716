//! Independent checks on a [`KickPlan`]: a numeric integrator used as an
//! oracle for the closed-form segments, a feasibility report, and a
//! drag-free ballistic estimate for comparing kick strength.

use std::fmt;

use serde::Serialize;

use crate::error::LaunchError;
use crate::model::{KickParams, KickPlan, Phase, PhaseSegment};

/// Continuity tolerance for angle (rad), velocity (rad/s) and time (s).
pub const CONTINUITY_TOLERANCE: f64 = 1e-9;

/// Default oracle step (s) and the angle tolerance (rad) it is held to.
pub const ORACLE_STEP: f64 = 1e-5;
pub const ORACLE_TOLERANCE: f64 = 1e-4;

pub const GRAVITY: f64 = 9.80665;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericSample {
    pub t: f64,
    pub theta: f64,
    pub omega: f64,
    /// Segment the step ended in, `None` for the initial state.
    pub segment: Option<usize>,
    /// Time since that segment's start.
    pub tau: f64,
}

/// Semi-implicit Euler integration of the plan's acceleration signal from
/// rest at zero. The last substep of each segment is shortened so segment
/// boundaries are hit exactly.
pub fn integrate_numeric(plan: &KickPlan, dt: f64) -> Vec<NumericSample> {
    assert!(dt > 0.0, "integration step must be positive");
    let mut theta = 0.0;
    let mut omega = 0.0;
    let mut out = vec![NumericSample {
        t: 0.0,
        theta,
        omega,
        segment: None,
        tau: 0.0,
    }];
    for (index, seg) in plan.segments().iter().enumerate() {
        let duration = seg.duration();
        let full = (duration / dt).floor() as u64;
        let remainder = duration - full as f64 * dt;
        let mut step = |h: f64, tau: f64, out: &mut Vec<NumericSample>| {
            omega += seg.alpha() * h;
            theta += omega * h;
            out.push(NumericSample {
                t: seg.t_start() + tau,
                theta,
                omega,
                segment: Some(index),
                tau,
            });
        };
        for i in 1..=full {
            step(dt, i as f64 * dt, &mut out);
        }
        if remainder > 0.0 {
            step(remainder, duration, &mut out);
        }
    }
    out
}

/// Largest angle and velocity gap between the integrator and the closed form.
pub fn oracle_error(plan: &KickPlan, dt: f64) -> (f64, f64) {
    let segments = plan.segments();
    integrate_numeric(plan, dt)
        .iter()
        .filter_map(|s| {
            let exact = segments[s.segment?].state_at(s.tau);
            Some(((s.theta - exact.theta).abs(), (s.omega - exact.omega).abs()))
        })
        .fold((0.0, 0.0), |(a, b), (x, y)| (f64::max(a, x), f64::max(b, y)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    SwingMin,
    SwingMax,
    HipVelocityMax,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::SwingMin => "theta_min",
            Limit::SwingMax => "theta_max",
            Limit::HipVelocityMax => "omega_h_max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitViolation {
    pub limit: Limit,
    /// Amount past the limit, always positive.
    pub excess: f64,
}

/// Mismatch between the end of one segment and the start of the next.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContinuityResidual {
    /// Index of the later segment.
    pub boundary: usize,
    pub time: f64,
    pub theta: f64,
    pub omega: f64,
}

impl ContinuityResidual {
    pub fn max_abs(&self) -> f64 {
        self.time.abs().max(self.theta.abs()).max(self.omega.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct BoundaryErrors {
    pub start_theta: f64,
    pub start_omega: f64,
    pub end_theta: f64,
    pub end_omega: f64,
}

impl BoundaryErrors {
    pub fn max_abs(&self) -> f64 {
        [self.start_theta, self.start_omega, self.end_theta, self.end_omega]
            .iter()
            .fold(0.0, |m, v| f64::max(m, v.abs()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanReport {
    pub boundary_errors: BoundaryErrors,
    /// Gap between the segment tiling and `[0, t_k]`: first start, last end.
    pub timing_residual: f64,
    /// `f_g * t_k - 1`
    pub frequency_residual: f64,
    pub max_velocity: f64,
    /// Peak |omega| outside the return phase, the velocity the hip limit applies to.
    pub stroke_velocity: f64,
    pub max_acceleration: f64,
    pub min_angle: f64,
    pub max_angle: f64,
    pub limit_violations: Vec<LimitViolation>,
    pub continuity_residuals: Vec<ContinuityResidual>,
}

impl PlanReport {
    pub fn passed(&self) -> bool {
        self.limit_violations.is_empty()
            && self.boundary_errors.max_abs() < CONTINUITY_TOLERANCE
            && self.timing_residual.abs() < CONTINUITY_TOLERANCE
            && self.frequency_residual.abs() < CONTINUITY_TOLERANCE
            && self
                .continuity_residuals
                .iter()
                .all(|r| r.max_abs() < CONTINUITY_TOLERANCE)
    }
}

impl fmt::Display for PlanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.boundary_errors;
        writeln!(f, "status = {}", if self.passed() { "pass" } else { "fail" })?;
        writeln!(f, "start_theta_error = {:e}", b.start_theta)?;
        writeln!(f, "start_omega_error = {:e}", b.start_omega)?;
        writeln!(f, "end_theta_error = {:e}", b.end_theta)?;
        writeln!(f, "end_omega_error = {:e}", b.end_omega)?;
        writeln!(f, "timing_residual = {:e}", self.timing_residual)?;
        writeln!(f, "frequency_residual = {:e}", self.frequency_residual)?;
        writeln!(f, "max_velocity = {:.6}", self.max_velocity)?;
        writeln!(f, "stroke_velocity = {:.6}", self.stroke_velocity)?;
        writeln!(f, "max_acceleration = {:.6}", self.max_acceleration)?;
        writeln!(f, "min_angle = {:.6}", self.min_angle)?;
        writeln!(f, "max_angle = {:.6}", self.max_angle)?;
        let worst = self
            .continuity_residuals
            .iter()
            .fold(0.0, |m, r| f64::max(m, r.max_abs()));
        writeln!(f, "max_continuity_residual = {worst:e}")?;
        for r in self
            .continuity_residuals
            .iter()
            .filter(|r| r.max_abs() >= CONTINUITY_TOLERANCE)
        {
            writeln!(
                f,
                "continuity_residual[{}] = time {:e}, theta {:e}, omega {:e}",
                r.boundary, r.time, r.theta, r.omega
            )?;
        }
        for v in &self.limit_violations {
            writeln!(f, "violation.{} = {:e}", v.limit, v.excess)?;
        }
        Ok(())
    }
}

struct Extremes {
    min_angle: f64,
    max_angle: f64,
    speed: f64,
}

/// Angle and speed extremes of segment `i`. The segment end is taken as the
/// next segment's start state, since mismatches there are reported as
/// continuity residuals; a turning point counts only when the velocity
/// clearly changes sign inside the segment.
fn segment_extremes(segments: &[PhaseSegment], i: usize) -> Extremes {
    let seg = &segments[i];
    let start = seg.start_state();
    let end = segments
        .get(i + 1)
        .map_or_else(|| seg.end_state(), |next| next.start_state());
    let mut min_angle = start.theta.min(end.theta);
    let mut max_angle = start.theta.max(end.theta);
    let propagated = seg.end_state().omega;
    let turns = start.omega.abs() > CONTINUITY_TOLERANCE
        && propagated.abs() > CONTINUITY_TOLERANCE
        && start.omega.signum() != propagated.signum();
    if turns && seg.alpha() != 0.0 {
        let apex = seg.state_at(-start.omega / seg.alpha()).theta;
        min_angle = min_angle.min(apex);
        max_angle = max_angle.max(apex);
    }
    Extremes {
        min_angle,
        max_angle,
        speed: start.omega.abs().max(end.omega.abs()),
    }
}

/// Reports boundary, continuity and limit residuals of a plan. Limit
/// comparisons are exact.
pub fn check_plan(plan: &KickPlan, params: &KickParams) -> PlanReport {
    let segments = plan.segments();
    let summary = plan.summary();

    let boundary_errors = match (segments.first(), segments.last()) {
        (Some(first), Some(last)) => {
            let start = first.start_state();
            let end = last.end_state();
            BoundaryErrors {
                start_theta: start.theta,
                start_omega: start.omega,
                end_theta: end.theta,
                end_omega: end.omega,
            }
        }
        _ => BoundaryErrors::default(),
    };

    let timing_residual = match (segments.first(), segments.last()) {
        (Some(first), Some(last)) => {
            let head = first.t_start();
            let tail = last.t_end() - summary.kick_time;
            if head.abs() > tail.abs() {
                head
            } else {
                tail
            }
        }
        _ => summary.kick_time,
    };
    let frequency_residual = if summary.kick_time > 0.0 {
        summary.step_frequency * summary.kick_time - 1.0
    } else {
        0.0
    };

    let continuity_residuals = segments
        .windows(2)
        .enumerate()
        .map(|(i, pair)| {
            let end = pair[0].end_state();
            let start = pair[1].start_state();
            ContinuityResidual {
                boundary: i + 1,
                time: pair[1].t_start() - pair[0].t_end(),
                theta: start.theta - end.theta,
                omega: start.omega - end.omega,
            }
        })
        .collect();

    let extremes: Vec<Extremes> = (0..segments.len())
        .map(|i| segment_extremes(segments, i))
        .collect();
    let max_velocity = extremes.iter().map(|e| e.speed).fold(0.0, f64::max);
    let stroke_velocity = extremes
        .iter()
        .zip(segments)
        .filter(|(_, s)| s.phase() != Phase::Return)
        .map(|(e, _)| e.speed)
        .fold(0.0, f64::max);
    let max_acceleration = segments.iter().map(|s| s.alpha().abs()).fold(0.0, f64::max);
    let (min_angle, max_angle) = extremes
        .iter()
        .fold((0.0, 0.0), |(lo, hi), e| (f64::min(lo, e.min_angle), f64::max(hi, e.max_angle)));

    let mut limit_violations = Vec::new();
    if min_angle < params.swing_min {
        limit_violations.push(LimitViolation {
            limit: Limit::SwingMin,
            excess: params.swing_min - min_angle,
        });
    }
    if max_angle > params.swing_max {
        limit_violations.push(LimitViolation {
            limit: Limit::SwingMax,
            excess: max_angle - params.swing_max,
        });
    }
    if stroke_velocity > params.hip_velocity_max {
        limit_violations.push(LimitViolation {
            limit: Limit::HipVelocityMax,
            excess: stroke_velocity - params.hip_velocity_max,
        });
    }

    PlanReport {
        boundary_errors,
        timing_residual,
        frequency_residual,
        max_velocity,
        stroke_velocity,
        max_acceleration,
        min_angle,
        max_angle,
        limit_violations,
        continuity_residuals,
    }
}

/// Impact and flight assumptions for [`estimate_ball_launch`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct ImpactModel {
    /// kg
    pub ball_mass: f64,
    /// Mass of the foot as seen by the ball at impact (kg).
    pub effective_mass: f64,
    /// Coefficient of restitution in `[0, 1]`.
    pub restitution: f64,
    /// Initial flight angle above the ground (rad).
    pub launch_angle: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaunchEstimate {
    /// Foot-tip speed at impact (m/s).
    pub foot_speed: f64,
    /// Momentum given to the ball (kg·m/s).
    pub impulse: f64,
    /// m/s
    pub ball_speed: f64,
    /// Drag-free carry distance (m).
    pub range: f64,
}

/// Collision of an effective foot mass with a resting ball, then drag-free
/// flight from ball-center height. Only meaningful for comparing kicks.
pub fn estimate_ball_launch(
    kick_velocity: f64,
    hip_height: f64,
    ball_radius: f64,
    model: &ImpactModel,
) -> Result<LaunchEstimate, LaunchError> {
    if !(kick_velocity >= 0.0 && kick_velocity.is_finite()) {
        return Err(LaunchError::KickVelocity(kick_velocity));
    }
    if !(model.ball_mass > 0.0 && model.ball_mass.is_finite()) {
        return Err(LaunchError::BallMass(model.ball_mass));
    }
    if !(model.effective_mass > 0.0) {
        return Err(LaunchError::EffectiveMass(model.effective_mass));
    }
    if !(0.0..=1.0).contains(&model.restitution) {
        return Err(LaunchError::Restitution(model.restitution));
    }
    if !(model.launch_angle >= 0.0 && model.launch_angle < std::f64::consts::FRAC_PI_2) {
        return Err(LaunchError::LaunchAngle(model.launch_angle));
    }
    if !(ball_radius > 0.0 && hip_height > ball_radius) {
        return Err(LaunchError::Geometry {
            height: hip_height,
            radius: ball_radius,
        });
    }

    let foot_speed = kick_velocity * (hip_height - ball_radius);
    let mass_ratio = if model.effective_mass.is_infinite() {
        1.0
    } else {
        model.effective_mass / (model.effective_mass + model.ball_mass)
    };
    let ball_speed = (1.0 + model.restitution) * mass_ratio * foot_speed;
    let impulse = model.ball_mass * ball_speed;

    let (sin, cos) = model.launch_angle.sin_cos();
    let vx = ball_speed * cos;
    let vz = ball_speed * sin;
    let flight = (vz + (vz * vz + 2.0 * GRAVITY * ball_radius).sqrt()) / GRAVITY;
    let range = if ball_speed > 0.0 { vx * flight } else { 0.0 };

    Ok(LaunchEstimate {
        foot_speed,
        impulse,
        ball_speed,
        range,
    })
}
