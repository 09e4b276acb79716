//! Four-phase kick planner.
//!
//! Every phase is built from constant-acceleration pieces using the single
//! torque-limited acceleration `alpha_k`:
//!
//! * **Prepare**: symmetric bang-bang wind-up from rest to rest at the
//!   negative pre-swing angle. Only planned when the pre-swing angle is
//!   behind the start pose.
//! * **Swing**: accelerate at `alpha_k` until `omega_k` is reached exactly at
//!   the kick angle.
//! * **Continue**: coast at `omega_k` through the extension angle.
//! * **Return**: decelerate to rest at the post angle, then bang-bang back to
//!   zero angle and velocity.

use serde::{Deserialize, Serialize};

use crate::error::PlanError;
use crate::inertia::{leg_inertia, max_kick_acceleration};
use crate::model::{KickParams, KickPlan, LegMassModel, Phase, PhaseSegment, PlanSummary};

/// How the swing is planned when the pre-swing angle is already on the way
/// to the kick angle (no wind-up needed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwingStrategy {
    /// Accelerate at full `alpha_k` to `omega_k`, then coast to the kick angle.
    #[default]
    Coast,
    /// Lower the swing acceleration so `omega_k` is reached exactly at the
    /// kick angle when starting from rest at zero.
    ReducedAcceleration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PlannerOptions {
    pub swing_strategy: SwingStrategy,
}

/// Acceleration time and angle of the swing phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwingProfile {
    pub time: f64,
    pub angle: f64,
}

/// A phase made of one or more segments, with times relative to the phase start.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePlan {
    pub time: f64,
    pub segments: Vec<PhaseSegment>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuePhase {
    pub return_angle: f64,
    pub time: f64,
    /// `None` when the extension angle is zero.
    pub segment: Option<PhaseSegment>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReturnPhase {
    pub post_angle: f64,
    pub time: f64,
    pub segments: Vec<PhaseSegment>,
}

/// Gait frequencies around the kick step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSchedule {
    /// Frequency of the step carrying the kick (Hz).
    pub kick_step: f64,
    /// Frequency restored for the following steps (Hz).
    pub following: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64, PlanError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(PlanError::NonPositive { name, value })
    }
}

fn segment(
    phase: Phase,
    t_start: f64,
    duration: f64,
    theta_start: f64,
    omega_start: f64,
    alpha: f64,
) -> Result<PhaseSegment, PlanError> {
    PhaseSegment::new(phase, t_start, duration, theta_start, omega_start, alpha)
}

fn shifted(seg: &PhaseSegment, offset: f64) -> Result<PhaseSegment, PlanError> {
    let start = seg.start_state();
    segment(
        seg.phase(),
        seg.t_start() + offset,
        seg.duration(),
        start.theta,
        start.omega,
        seg.alpha(),
    )
}

/// Swing angle at which the foot tip meets the ball center.
pub fn target_kick_angle(
    hip_height: f64,
    ball_radius: f64,
    ball_distance: f64,
) -> Result<f64, PlanError> {
    let rise = hip_height - ball_radius;
    let run = ball_distance - ball_radius;
    if !(rise > 0.0) {
        return Err(PlanError::NonPositive {
            name: "z_h - r_b",
            value: rise,
        });
    }
    if !(run > 0.0) {
        return Err(PlanError::NonPositive {
            name: "x_b - r_b",
            value: run,
        });
    }
    Ok(rise.atan2(run))
}

pub fn swing_profile(kick_velocity: f64, acceleration: f64) -> Result<SwingProfile, PlanError> {
    let omega = positive("omega_k", kick_velocity)?;
    let alpha = positive("alpha_k", acceleration)?;
    let time = omega / alpha;
    Ok(SwingProfile {
        time,
        angle: 0.5 * alpha * time * time,
    })
}

/// Rest-to-rest wind-up to `pre_swing`. Empty when `pre_swing` is zero.
pub fn prepare_phase(pre_swing: f64, acceleration: f64) -> Result<PhasePlan, PlanError> {
    let alpha = positive("alpha_k", acceleration)?;
    if pre_swing == 0.0 {
        return Ok(PhasePlan {
            time: 0.0,
            segments: Vec::new(),
        });
    }
    let time = 2.0 * (pre_swing / alpha).abs().sqrt();
    let half = 0.5 * time;
    let toward = alpha * pre_swing.signum();
    let segments = vec![
        segment(Phase::Prepare, 0.0, half, 0.0, 0.0, toward)?,
        segment(Phase::Prepare, half, half, 0.5 * pre_swing, toward * half, -toward)?,
    ];
    Ok(PhasePlan { time, segments })
}

pub fn continue_phase(
    kick_angle: f64,
    extension_angle: f64,
    kick_velocity: f64,
) -> Result<ContinuePhase, PlanError> {
    let omega = positive("omega_k", kick_velocity)?;
    if !(extension_angle >= 0.0) {
        return Err(PlanError::Params(crate::ParamError::ExtensionAngle(
            extension_angle,
        )));
    }
    let time = extension_angle / omega;
    let segment = if time > 0.0 {
        Some(segment(Phase::Continue, 0.0, time, kick_angle, omega, 0.0)?)
    } else {
        None
    };
    Ok(ContinuePhase {
        return_angle: kick_angle + extension_angle,
        time,
        segment,
    })
}

/// Deceleration to the post angle followed by a rest-to-rest return to zero.
///
/// The deceleration mirrors the swing, so it lasts `omega_k / alpha_k` and
/// covers `swing_angle`.
pub fn return_phase(
    return_angle: f64,
    swing_angle: f64,
    kick_velocity: f64,
    acceleration: f64,
) -> Result<ReturnPhase, PlanError> {
    let alpha = positive("alpha_k", acceleration)?;
    positive("theta_ret", return_angle)?;
    if !(kick_velocity >= 0.0) {
        return Err(PlanError::NonPositive {
            name: "omega_k",
            value: kick_velocity,
        });
    }
    if !(swing_angle >= 0.0) {
        return Err(PlanError::NonPositive {
            name: "theta_sw",
            value: swing_angle,
        });
    }
    let stop_time = kick_velocity / alpha;
    let post_angle = return_angle + swing_angle;
    let back_half = (post_angle / alpha).abs().sqrt();
    let time = stop_time + 2.0 * back_half;

    let mut segments = Vec::with_capacity(3);
    if stop_time > 0.0 {
        segments.push(segment(
            Phase::Return,
            0.0,
            stop_time,
            return_angle,
            kick_velocity,
            -alpha,
        )?);
    }
    segments.push(segment(Phase::Return, stop_time, back_half, post_angle, 0.0, -alpha)?);
    segments.push(segment(
        Phase::Return,
        stop_time + back_half,
        back_half,
        0.5 * post_angle,
        -alpha * back_half,
        alpha,
    )?);
    Ok(ReturnPhase {
        post_angle,
        time,
        segments,
    })
}

fn post_angle_for(kick_angle: f64, extension_angle: f64, omega: f64, alpha: f64) -> f64 {
    let t = omega / alpha;
    (kick_angle + extension_angle) + 0.5 * alpha * t * t
}

/// Largest kick velocity allowed by the request, the hip velocity limit and
/// the forward joint limit, applied in that order.
///
/// The joint-limit cap is the velocity whose deceleration overshoot lands
/// exactly on `theta_max`.
pub fn clamp_kick_velocity(
    kick_angle: f64,
    extension_angle: f64,
    acceleration: f64,
    swing_max: f64,
    hip_velocity_max: f64,
    request: Option<f64>,
) -> Result<f64, PlanError> {
    let alpha = positive("alpha_k", acceleration)?;
    let hip_max = positive("omega_h_max", hip_velocity_max)?;
    let required = kick_angle + extension_angle;
    let headroom = swing_max - required;
    if !(headroom > 0.0) {
        return Err(PlanError::JointLimitBelowKickAngle {
            limit: swing_max,
            required,
        });
    }
    let mut omega = request.unwrap_or(hip_max).min(hip_max);
    let joint_cap = (2.0 * alpha * headroom).sqrt();
    if joint_cap < omega {
        omega = joint_cap;
        // the square root may round up past the limit by an ulp
        while omega > 0.0 && post_angle_for(kick_angle, extension_angle, omega, alpha) > swing_max
        {
            omega = f64::from_bits(omega.to_bits() - 1);
        }
    }
    positive("omega_k", omega)
}

pub fn plan_kick(params: &KickParams, leg: &LegMassModel) -> Result<KickPlan, PlanError> {
    plan_kick_with(params, leg, PlannerOptions::default())
}

pub fn plan_kick_with(
    params: &KickParams,
    leg: &LegMassModel,
    options: PlannerOptions,
) -> Result<KickPlan, PlanError> {
    let params = params.validate()?;
    let alpha = max_kick_acceleration(params.hip_torque, leg_inertia(leg))?;
    let kick_angle = target_kick_angle(params.hip_height, params.ball_radius, params.ball_distance)?;
    let omega = clamp_kick_velocity(
        kick_angle,
        params.extension_angle,
        alpha,
        params.swing_max,
        params.hip_velocity_max,
        params.kick_velocity_request,
    )?;
    let swing = swing_profile(omega, alpha)?;
    let pre_swing = kick_angle - swing.angle;
    if pre_swing < params.swing_min {
        return Err(PlanError::PrepareExceedsRearLimit {
            pre_swing,
            limit: params.swing_min,
        });
    }

    let mut segments = Vec::with_capacity(8);

    // prepare + swing
    let (prepare_time, strike_time) = if pre_swing < 0.0 {
        let prepare = prepare_phase(pre_swing, alpha)?;
        segments.extend(prepare.segments);
        segments.push(segment(Phase::Swing, prepare.time, swing.time, pre_swing, 0.0, alpha)?);
        (prepare.time, swing.time)
    } else {
        match options.swing_strategy {
            SwingStrategy::ReducedAcceleration if pre_swing > 0.0 => {
                let reduced = omega * omega / (2.0 * kick_angle);
                let time = omega / reduced;
                segments.push(segment(Phase::Swing, 0.0, time, 0.0, 0.0, reduced)?);
                (0.0, time)
            }
            _ => {
                segments.push(segment(Phase::Swing, 0.0, swing.time, 0.0, 0.0, alpha)?);
                let coast = pre_swing / omega;
                if coast > 0.0 {
                    segments.push(segment(
                        Phase::Swing,
                        swing.time,
                        coast,
                        swing.angle,
                        omega,
                        0.0,
                    )?);
                }
                (0.0, swing.time + coast)
            }
        }
    };

    let impact = prepare_time + strike_time;
    let cont = continue_phase(kick_angle, params.extension_angle, omega)?;
    if let Some(seg) = &cont.segment {
        segments.push(shifted(seg, impact)?);
    }

    let ret = return_phase(cont.return_angle, swing.angle, omega, alpha)?;
    if ret.post_angle > params.swing_max {
        return Err(PlanError::PostExceedsForwardLimit {
            post: ret.post_angle,
            limit: params.swing_max,
        });
    }
    let return_start = impact + cont.time;
    for seg in &ret.segments {
        segments.push(shifted(seg, return_start)?);
    }

    let kick_time = prepare_time + strike_time + cont.time + ret.time;
    let summary = PlanSummary {
        kick_acceleration: alpha,
        kick_velocity: omega,
        kick_angle,
        swing_angle: swing.angle,
        pre_swing_angle: pre_swing,
        return_angle: cont.return_angle,
        post_angle: ret.post_angle,
        prepare_time,
        swing_time: swing.time,
        strike_time,
        extension_time: cont.time,
        return_time: ret.time,
        kick_time,
        step_frequency: 1.0 / kick_time,
        hip_height: params.hip_height,
        ball_radius: params.ball_radius,
    };
    KickPlan::new(summary, segments)
}

/// The kick step runs at `1 / t_k`; later steps return to the nominal frequency.
pub fn schedule_step_frequency(plan: &KickPlan, nominal_frequency: f64) -> StepSchedule {
    StepSchedule {
        kick_step: 1.0 / plan.kick_time(),
        following: nominal_frequency,
    }
}
