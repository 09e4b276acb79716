//! Flat TOML configuration read by the command-line tool.
//!
//! Lengths are meters, torques newton-meters, angular velocities rad/s and
//! frequencies hertz. Angles carry a `_deg` suffix and are converted to
//! radians here, nowhere else.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::error::ParamError;
use crate::model::{KickParams, LegMassModel, PointMass};
use crate::planner::{PlannerOptions, SwingStrategy};
use crate::verify::ImpactModel;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KickConfig {
    pub schema_version: u32,
    pub ball_radius_m: f64,
    pub ball_distance_m: f64,
    pub hip_height_m: f64,
    pub hip_torque_nm: f64,
    pub hip_velocity_max_rad_s: f64,
    #[serde(default)]
    pub kick_velocity_rad_s: Option<f64>,
    pub extension_angle_deg: f64,
    pub swing_min_deg: f64,
    pub swing_max_deg: f64,
    pub nominal_frequency_hz: f64,
    #[serde(default)]
    pub swing_strategy: SwingStrategy,
    pub leg_masses_kg: Vec<f64>,
    pub leg_mass_distances_m: Vec<f64>,
    #[serde(default)]
    pub ball_mass_kg: Option<f64>,
    #[serde(default)]
    pub effective_foot_mass_kg: Option<f64>,
    #[serde(default)]
    pub restitution: Option<f64>,
    #[serde(default)]
    pub launch_angle_deg: Option<f64>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    SchemaVersion(u32),
    #[error("leg_masses_kg has {masses} entries but leg_mass_distances_m has {distances}")]
    LegLengthMismatch { masses: usize, distances: usize },
    #[error("invalid {key}: {source}")]
    Invalid {
        key: &'static str,
        source: ParamError,
    },
    #[error("{0} is required for launch estimation")]
    MissingImpactKey(&'static str),
}

/// Config key responsible for a parameter error.
fn key_for(err: &ParamError) -> &'static str {
    match err {
        ParamError::BallRadius(_) => "ball_radius_m",
        ParamError::BallDistance { .. } => "ball_distance_m",
        ParamError::HipHeight { .. } => "hip_height_m",
        ParamError::HipTorque(_) => "hip_torque_nm",
        ParamError::HipVelocityMax(_) => "hip_velocity_max_rad_s",
        ParamError::KickVelocityRequest(_) => "kick_velocity_rad_s",
        ParamError::ExtensionAngle(_) => "extension_angle_deg",
        ParamError::SwingMin(_) => "swing_min_deg",
        ParamError::SwingMax(_) => "swing_max_deg",
        ParamError::NominalFrequency(_) => "nominal_frequency_hz",
        ParamError::NonFinite { field } => match *field {
            "r_b" => "ball_radius_m",
            "x_b" => "ball_distance_m",
            "z_h" => "hip_height_m",
            "tau_h" => "hip_torque_nm",
            "omega_h_max" => "hip_velocity_max_rad_s",
            "omega_k_req" => "kick_velocity_rad_s",
            "theta_ext" => "extension_angle_deg",
            "theta_min" => "swing_min_deg",
            "theta_max" => "swing_max_deg",
            _ => "nominal_frequency_hz",
        },
        ParamError::EmptyLeg | ParamError::LegMass { .. } | ParamError::ZeroInertia => {
            "leg_masses_kg"
        }
        ParamError::LegDistance { .. } => "leg_mass_distances_m",
    }
}

fn invalid(source: ParamError) -> ConfigError {
    ConfigError::Invalid {
        key: key_for(&source),
        source,
    }
}

impl KickConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let config: KickConfig = toml::from_str(text)?;
        if config.schema_version != SCHEMA_VERSION {
            return Err(ConfigError::SchemaVersion(config.schema_version));
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn params(&self) -> Result<KickParams, ConfigError> {
        KickParams {
            ball_radius: self.ball_radius_m,
            ball_distance: self.ball_distance_m,
            hip_height: self.hip_height_m,
            hip_torque: self.hip_torque_nm,
            hip_velocity_max: self.hip_velocity_max_rad_s,
            kick_velocity_request: self.kick_velocity_rad_s,
            extension_angle: self.extension_angle_deg.to_radians(),
            swing_min: self.swing_min_deg.to_radians(),
            swing_max: self.swing_max_deg.to_radians(),
            nominal_frequency: self.nominal_frequency_hz,
        }
        .validate()
        .map_err(invalid)
    }

    pub fn leg(&self) -> Result<LegMassModel, ConfigError> {
        if self.leg_masses_kg.len() != self.leg_mass_distances_m.len() {
            return Err(ConfigError::LegLengthMismatch {
                masses: self.leg_masses_kg.len(),
                distances: self.leg_mass_distances_m.len(),
            });
        }
        let masses = self
            .leg_masses_kg
            .iter()
            .zip(&self.leg_mass_distances_m)
            .map(|(&m, &d)| PointMass::new(m, d))
            .collect();
        LegMassModel::new(masses).map_err(invalid)
    }

    pub fn options(&self) -> PlannerOptions {
        PlannerOptions {
            swing_strategy: self.swing_strategy,
        }
    }

    pub fn impact_model(&self) -> Result<ImpactModel, ConfigError> {
        Ok(ImpactModel {
            ball_mass: self
                .ball_mass_kg
                .ok_or(ConfigError::MissingImpactKey("ball_mass_kg"))?,
            effective_mass: self
                .effective_foot_mass_kg
                .ok_or(ConfigError::MissingImpactKey("effective_foot_mass_kg"))?,
            restitution: self
                .restitution
                .ok_or(ConfigError::MissingImpactKey("restitution"))?,
            launch_angle: self
                .launch_angle_deg
                .ok_or(ConfigError::MissingImpactKey("launch_angle_deg"))?
                .to_radians(),
        })
    }
}
