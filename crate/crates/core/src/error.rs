use thiserror::Error;

/// A violated invariant on [`KickParams`](crate::KickParams) or
/// [`LegMassModel`](crate::LegMassModel).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("ball radius r_b must be positive (got {0})")]
    BallRadius(f64),
    #[error("x_b must exceed r_b (ball distance {distance}, ball radius {radius})")]
    BallDistance { distance: f64, radius: f64 },
    #[error("z_h must exceed r_b (hip height {height}, ball radius {radius})")]
    HipHeight { height: f64, radius: f64 },
    #[error("hip torque tau_h must be positive (got {0})")]
    HipTorque(f64),
    #[error("maximum hip velocity omega_h_max must be positive (got {0})")]
    HipVelocityMax(f64),
    #[error("requested kick velocity omega_k_req must be positive (got {0})")]
    KickVelocityRequest(f64),
    #[error("extension angle theta_ext must be non-negative (got {0})")]
    ExtensionAngle(f64),
    #[error("rear swing limit theta_min must be negative (got {0})")]
    SwingMin(f64),
    #[error("forward swing limit theta_max must be positive (got {0})")]
    SwingMax(f64),
    #[error("nominal gait frequency f_nominal must be positive (got {0})")]
    NominalFrequency(f64),
    #[error("{field} must be finite")]
    NonFinite { field: &'static str },
    #[error("leg mass model needs at least one point mass")]
    EmptyLeg,
    #[error("leg mass #{index} must be positive (got {mass})")]
    LegMass { index: usize, mass: f64 },
    #[error("leg mass #{index} distance from hip must be non-negative (got {distance})")]
    LegDistance { index: usize, distance: f64 },
    #[error("leg mass model has no mass away from the hip pivot (zero inertia)")]
    ZeroInertia,
}

/// Failure while solving or assembling a kick plan.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },
    #[error("segment duration must be non-negative (got {0})")]
    NegativeDuration(f64),
    #[error("{name} must be non-negative (got {value})")]
    NegativeTime { name: &'static str, value: f64 },
    #[error("kick infeasible: joint limit below kick angle (theta_max {limit}, theta_k + theta_ext {required})")]
    JointLimitBelowKickAngle { limit: f64, required: f64 },
    #[error("prepare swing-up exceeds rear joint limit (theta_pre {pre_swing}, theta_min {limit})")]
    PrepareExceedsRearLimit { pre_swing: f64, limit: f64 },
    #[error("return overshoot exceeds forward joint limit (theta_post {post}, theta_max {limit})")]
    PostExceedsForwardLimit { post: f64, limit: f64 },
}

impl PlanError {
    /// True for errors caused by joint or actuator limits rather than
    /// malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            PlanError::JointLimitBelowKickAngle { .. }
                | PlanError::PrepareExceedsRearLimit { .. }
                | PlanError::PostExceedsForwardLimit { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrajectoryError {
    #[error("query time {t} outside plan interval [0, {kick_time}]")]
    OutOfRange { t: f64, kick_time: f64 },
    #[error("sample interval dt must be positive (got {0})")]
    InvalidStep(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LaunchError {
    #[error("kick velocity must be non-negative (got {0})")]
    KickVelocity(f64),
    #[error("ball mass must be positive (got {0})")]
    BallMass(f64),
    #[error("effective foot mass must be positive (got {0})")]
    EffectiveMass(f64),
    #[error("restitution coefficient must lie in [0, 1] (got {0})")]
    Restitution(f64),
    #[error("launch angle must lie in [0, pi/2) (got {0})")]
    LaunchAngle(f64),
    #[error("z_h must exceed r_b (hip height {height}, ball radius {radius})")]
    Geometry { height: f64, radius: f64 },
}
