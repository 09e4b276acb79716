//! Constraint-aware kick trajectories for humanoid robots.
//!
//! A kick is planned as a swing-angle offset on top of a walking gait, in
//! four constant-acceleration phases: Prepare (wind-up), Swing (strike),
//! Continue (follow-through) and Return (recovery to the gait pose). The
//! acceleration is limited by hip torque and leg inertia, the kick velocity
//! by the hip velocity limit and the forward joint limit, and the step
//! carrying the kick is slowed to last the whole motion.
//!
//! ```
//! use kickplan::{plan_kick, evaluate, KickParams, LegMassModel};
//!
//! let params = KickParams {
//!     ball_radius: 0.1,
//!     ball_distance: 0.6,
//!     hip_height: 0.6,
//!     hip_torque: 50.0,
//!     hip_velocity_max: 8.0,
//!     kick_velocity_request: Some(6.0),
//!     extension_angle: 0.2,
//!     swing_min: -1.2,
//!     swing_max: 2.0,
//!     nominal_frequency: 2.4,
//! };
//! let leg = LegMassModel::from_pairs(&[(10.0, 0.5)]).unwrap();
//! let plan = plan_kick(&params, &leg).unwrap();
//! let impact = evaluate(&plan, plan.summary().impact_time()).unwrap();
//! assert!((impact.omega - 6.0).abs() < 1e-9);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod inertia;
pub mod model;
pub mod planner;
pub mod trajectory;
pub mod verify;

pub use error::{LaunchError, ParamError, PlanError, TrajectoryError};
pub use inertia::{leg_inertia, max_kick_acceleration};
pub use model::{
    KickParams, KickPlan, LegMassModel, Phase, PhaseSegment, PlanSummary, PointMass, SwingState,
    TrajectorySample,
};
pub use planner::{
    clamp_kick_velocity, continue_phase, plan_kick, plan_kick_with, prepare_phase, return_phase,
    schedule_step_frequency, swing_profile, target_kick_angle, PlannerOptions, StepSchedule,
    SwingStrategy,
};
pub use trajectory::{evaluate, evaluate_with, foot_offsets, sample_trajectory};
pub use verify::{
    check_plan, estimate_ball_launch, integrate_numeric, ImpactModel, LaunchEstimate, PlanReport,
};
