//! Leg inertia about the hip pivot and the torque-limited kick acceleration.

use crate::error::PlanError;
use crate::model::LegMassModel;

/// Moment of inertia of the point-mass leg about the hip pitch pivot (kg·m²).
pub fn leg_inertia(model: &LegMassModel) -> f64 {
    model
        .masses()
        .iter()
        .map(|p| p.mass * p.distance * p.distance)
        .sum()
}

/// Angular acceleration the hip torque can impart on the leg, `tau_h / I_l`.
pub fn max_kick_acceleration(hip_torque: f64, inertia: f64) -> Result<f64, PlanError> {
    if !(hip_torque > 0.0) {
        return Err(PlanError::NonPositive {
            name: "tau_h",
            value: hip_torque,
        });
    }
    if !(inertia > 0.0) {
        return Err(PlanError::NonPositive {
            name: "I_l",
            value: inertia,
        });
    }
    Ok(hip_torque / inertia)
}
