//! Domain types shared by the planner, trajectory evaluator and checker.
//!
//! Sign convention: positive swing angle is the forward (kicking) direction,
//! so the wind-up of the prepare phase dips to a negative angle. All angles
//! are radians and all times seconds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ParamError, PlanError};

/// Physical inputs of a kick.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KickParams {
    /// Ball radius `r_b` (m).
    pub ball_radius: f64,
    /// Horizontal distance from the foot tip to the ball center `x_b` (m).
    pub ball_distance: f64,
    /// Average hip-origin height over a gait cycle `z_h` (m).
    pub hip_height: f64,
    /// Available hip torque `tau_h` (N·m).
    pub hip_torque: f64,
    /// Maximum hip angular velocity `omega_h_max` (rad/s).
    pub hip_velocity_max: f64,
    /// Requested kick velocity (rad/s). `None` asks for the fastest feasible kick.
    pub kick_velocity_request: Option<f64>,
    /// Constant-velocity follow-through angle `theta_ext` (rad).
    pub extension_angle: f64,
    /// Rear hip swing limit `theta_min` (rad, negative).
    pub swing_min: f64,
    /// Forward hip swing limit `theta_max` (rad, positive).
    pub swing_max: f64,
    /// Nominal gait frequency (Hz), restored after the kick step.
    pub nominal_frequency: f64,
}

impl KickParams {
    /// Returns the parameters unchanged if every invariant holds, otherwise
    /// the first violated invariant.
    pub fn validate(self) -> Result<Self, ParamError> {
        let finite = [
            ("r_b", self.ball_radius),
            ("x_b", self.ball_distance),
            ("z_h", self.hip_height),
            ("tau_h", self.hip_torque),
            ("omega_h_max", self.hip_velocity_max),
            ("theta_ext", self.extension_angle),
            ("theta_min", self.swing_min),
            ("theta_max", self.swing_max),
            ("f_nominal", self.nominal_frequency),
        ];
        for (field, value) in finite {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { field });
            }
        }
        if self.ball_radius <= 0.0 {
            return Err(ParamError::BallRadius(self.ball_radius));
        }
        if self.ball_distance <= self.ball_radius {
            return Err(ParamError::BallDistance {
                distance: self.ball_distance,
                radius: self.ball_radius,
            });
        }
        if self.hip_height <= self.ball_radius {
            return Err(ParamError::HipHeight {
                height: self.hip_height,
                radius: self.ball_radius,
            });
        }
        if self.hip_torque <= 0.0 {
            return Err(ParamError::HipTorque(self.hip_torque));
        }
        if self.hip_velocity_max <= 0.0 {
            return Err(ParamError::HipVelocityMax(self.hip_velocity_max));
        }
        if let Some(request) = self.kick_velocity_request {
            if !request.is_finite() {
                return Err(ParamError::NonFinite {
                    field: "omega_k_req",
                });
            }
            if request <= 0.0 {
                return Err(ParamError::KickVelocityRequest(request));
            }
        }
        if self.extension_angle < 0.0 {
            return Err(ParamError::ExtensionAngle(self.extension_angle));
        }
        if self.swing_min >= 0.0 {
            return Err(ParamError::SwingMin(self.swing_min));
        }
        if self.swing_max <= 0.0 {
            return Err(ParamError::SwingMax(self.swing_max));
        }
        if self.nominal_frequency <= 0.0 {
            return Err(ParamError::NominalFrequency(self.nominal_frequency));
        }
        Ok(self)
    }

    /// Radius of the circle traced by the foot tip about the hip, `z_h - r_b`.
    pub fn foot_radius(&self) -> f64 {
        self.hip_height - self.ball_radius
    }
}

/// A point mass of the kicking leg at a distance from the hip pitch pivot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointMass {
    /// kg
    pub mass: f64,
    /// m
    pub distance: f64,
}

impl PointMass {
    pub fn new(mass: f64, distance: f64) -> Self {
        Self { mass, distance }
    }
}

/// Point-mass decomposition of the kicking leg. Conventionally five masses,
/// but any non-empty list is accepted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LegMassModel {
    masses: Vec<PointMass>,
}

impl LegMassModel {
    pub fn new(masses: Vec<PointMass>) -> Result<Self, ParamError> {
        if masses.is_empty() {
            return Err(ParamError::EmptyLeg);
        }
        for (index, point) in masses.iter().enumerate() {
            if !point.mass.is_finite() || point.mass <= 0.0 {
                return Err(ParamError::LegMass {
                    index,
                    mass: point.mass,
                });
            }
            if !point.distance.is_finite() || point.distance < 0.0 {
                return Err(ParamError::LegDistance {
                    index,
                    distance: point.distance,
                });
            }
        }
        if masses.iter().all(|p| p.distance == 0.0) {
            return Err(ParamError::ZeroInertia);
        }
        Ok(Self { masses })
    }

    /// Builds a model from `(mass, distance)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, ParamError> {
        Self::new(pairs.iter().map(|&(m, d)| PointMass::new(m, d)).collect())
    }

    pub fn masses(&self) -> &[PointMass] {
        &self.masses
    }
}

/// Kick phase label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Prepare,
    Swing,
    Continue,
    Return,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Prepare => "prepare",
            Phase::Swing => "swing",
            Phase::Continue => "continue",
            Phase::Return => "return",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Swing angle and velocity at an instant.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SwingState {
    pub theta: f64,
    pub omega: f64,
}

/// One constant-acceleration interval of a kick.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSegment")]
pub struct PhaseSegment {
    phase: Phase,
    t_start: f64,
    duration: f64,
    theta_start: f64,
    omega_start: f64,
    alpha: f64,
}

#[derive(Deserialize)]
struct RawSegment {
    phase: Phase,
    t_start: f64,
    duration: f64,
    theta_start: f64,
    omega_start: f64,
    alpha: f64,
}

impl TryFrom<RawSegment> for PhaseSegment {
    type Error = PlanError;

    fn try_from(raw: RawSegment) -> Result<Self, Self::Error> {
        PhaseSegment::new(
            raw.phase,
            raw.t_start,
            raw.duration,
            raw.theta_start,
            raw.omega_start,
            raw.alpha,
        )
    }
}

impl PhaseSegment {
    pub fn new(
        phase: Phase,
        t_start: f64,
        duration: f64,
        theta_start: f64,
        omega_start: f64,
        alpha: f64,
    ) -> Result<Self, PlanError> {
        if !(duration >= 0.0) {
            return Err(PlanError::NegativeDuration(duration));
        }
        if !(t_start >= 0.0) {
            return Err(PlanError::NegativeTime {
                name: "segment start time",
                value: t_start,
            });
        }
        Ok(Self {
            phase,
            t_start,
            duration,
            theta_start,
            omega_start,
            alpha,
        })
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    pub fn t_end(&self) -> f64 {
        self.t_start + self.duration
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn start_state(&self) -> SwingState {
        SwingState {
            theta: self.theta_start,
            omega: self.omega_start,
        }
    }

    /// State `tau` seconds after the segment start.
    pub fn state_at(&self, tau: f64) -> SwingState {
        SwingState {
            theta: self.theta_start + self.omega_start * tau + 0.5 * self.alpha * tau * tau,
            omega: self.omega_start + self.alpha * tau,
        }
    }

    pub fn end_state(&self) -> SwingState {
        self.state_at(self.duration)
    }

    /// Smallest and largest swing angle reached inside the segment.
    pub fn angle_range(&self) -> (f64, f64) {
        let start = self.theta_start;
        let end = self.end_state().theta;
        let (mut lo, mut hi) = (start.min(end), start.max(end));
        if self.alpha != 0.0 {
            // velocity crosses zero inside the segment
            let tau = -self.omega_start / self.alpha;
            if tau > 0.0 && tau < self.duration {
                let apex = self.state_at(tau).theta;
                lo = lo.min(apex);
                hi = hi.max(apex);
            }
        }
        (lo, hi)
    }

    /// Largest |omega| inside the segment (velocity is linear, so an endpoint).
    pub fn peak_speed(&self) -> f64 {
        self.omega_start.abs().max(self.end_state().omega.abs())
    }
}

/// Scalar results of a solved kick.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanSummary {
    /// Torque-limited angular acceleration `alpha_k` (rad/s²).
    pub kick_acceleration: f64,
    /// Angular velocity at impact `omega_k` (rad/s).
    pub kick_velocity: f64,
    /// Swing angle at ball contact `theta_k` (rad).
    pub kick_angle: f64,
    /// Angle covered while accelerating to `omega_k`, `theta_sw` (rad).
    pub swing_angle: f64,
    /// Angle the swing must start from, `theta_pre` (rad).
    pub pre_swing_angle: f64,
    /// Angle at the end of the follow-through, `theta_ret` (rad).
    pub return_angle: f64,
    /// Peak forward angle after deceleration, `theta_post` (rad).
    pub post_angle: f64,
    /// `t_pre` (s)
    pub prepare_time: f64,
    /// Acceleration time `t_sw = omega_k / alpha_k` (s).
    pub swing_time: f64,
    /// Time from swing start to impact (s). Equals `swing_time` when a
    /// prepare phase is planned; longer when the leg coasts to `theta_k`.
    pub strike_time: f64,
    /// `t_ext` (s)
    pub extension_time: f64,
    /// `t_ret` (s)
    pub return_time: f64,
    /// Total kick duration `t_k` (s).
    pub kick_time: f64,
    /// Gait frequency of the kick step, `1 / t_k` (Hz).
    pub step_frequency: f64,
    /// `z_h` (m), kept for foot-offset evaluation.
    pub hip_height: f64,
    /// `r_b` (m), kept for foot-offset evaluation.
    pub ball_radius: f64,
}

impl PlanSummary {
    /// Time of ball contact measured from the kick start.
    pub fn impact_time(&self) -> f64 {
        self.prepare_time + self.strike_time
    }

    pub fn foot_radius(&self) -> f64 {
        self.hip_height - self.ball_radius
    }
}

/// A fully solved kick: scalars plus the ordered constant-acceleration segments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPlan")]
pub struct KickPlan {
    summary: PlanSummary,
    segments: Vec<PhaseSegment>,
}

#[derive(Deserialize)]
struct RawPlan {
    summary: PlanSummary,
    segments: Vec<PhaseSegment>,
}

impl TryFrom<RawPlan> for KickPlan {
    type Error = PlanError;

    fn try_from(raw: RawPlan) -> Result<Self, Self::Error> {
        KickPlan::new(raw.summary, raw.segments)
    }
}

impl KickPlan {
    /// Rejects negative phase durations. Continuity and limits are not
    /// enforced here; see [`check_plan`](crate::verify::check_plan).
    pub fn new(summary: PlanSummary, segments: Vec<PhaseSegment>) -> Result<Self, PlanError> {
        let times = [
            ("t_pre", summary.prepare_time),
            ("t_sw", summary.swing_time),
            ("strike time", summary.strike_time),
            ("t_ext", summary.extension_time),
            ("t_ret", summary.return_time),
            ("t_k", summary.kick_time),
        ];
        for (name, value) in times {
            if !(value >= 0.0) {
                return Err(PlanError::NegativeTime { name, value });
            }
        }
        if let Some(bad) = segments.iter().find(|s| !(s.duration >= 0.0)) {
            return Err(PlanError::NegativeDuration(bad.duration));
        }
        Ok(Self { summary, segments })
    }

    pub fn summary(&self) -> &PlanSummary {
        &self.summary
    }

    pub fn segments(&self) -> &[PhaseSegment] {
        &self.segments
    }

    pub fn kick_time(&self) -> f64 {
        self.summary.kick_time
    }

    pub fn has_prepare(&self) -> bool {
        self.segments.iter().any(|s| s.phase == Phase::Prepare)
    }
}

/// State of the kick at a query time, including the sagittal foot offsets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub phase: Phase,
    /// Swing angle `theta_l` (rad).
    pub theta: f64,
    /// Swing velocity `omega_l` (rad/s).
    pub omega: f64,
    /// rad/s²
    pub alpha: f64,
    /// Forward foot offset `x_o` (m).
    pub x_offset: f64,
    /// Upward foot offset `z_o` (m).
    pub z_offset: f64,
}
