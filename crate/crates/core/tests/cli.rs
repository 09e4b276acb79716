use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/kick.toml")
}

fn kickplan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kickplan"))
        .args(args)
        .output()
        .expect("run kickplan")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Fixture text with one `key = value` line replaced.
fn patched_config(dir: &Path, key: &str, value: &str) -> PathBuf {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let patched: Vec<String> = text
        .lines()
        .map(|line| {
            if line.starts_with(&format!("{key} =")) {
                format!("{key} = {value}")
            } else {
                line.to_owned()
            }
        })
        .collect();
    let path = dir.join(format!("{key}.toml"));
    std::fs::write(&path, patched.join("\n")).unwrap();
    path
}

fn value_of(text: &str, name: &str) -> f64 {
    text.lines()
        .find(|l| l.split_whitespace().next() == Some(name))
        .and_then(|l| l.split_whitespace().nth(2))
        .unwrap_or_else(|| panic!("{name} missing from\n{text}"))
        .parse()
        .unwrap()
}

#[test]
fn plan_prints_all_scalars() {
    let out = kickplan(&["plan", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for name in [
        "alpha_k", "omega_k", "theta_k", "theta_pre", "theta_sw", "theta_ret", "theta_post",
        "t_pre", "t_sw", "t_ext", "t_ret", "t_k", "f_g",
    ] {
        value_of(&text, name);
    }
    assert!((value_of(&text, "t_k") - 1.3987961744).abs() < 1e-8);
    assert!((value_of(&text, "f_g") - 0.7149004396).abs() < 1e-8);
    assert!(text.contains("rad/s^2") && text.contains(" Hz"));
}

#[test]
fn plan_values_match_library() {
    let config = kickplan::config::KickConfig::load(&fixture()).unwrap();
    let plan = kickplan::plan_kick(&config.params().unwrap(), &config.leg().unwrap()).unwrap();
    let out = kickplan(&["plan", fixture().to_str().unwrap(), "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let s = plan.summary();
    assert_eq!(json["t_k"].as_f64().unwrap(), s.kick_time);
    assert_eq!(json["theta_post"].as_f64().unwrap(), s.post_angle);
    assert_eq!(json["f_g"].as_f64().unwrap(), s.step_frequency);
    assert_eq!(json["f_nominal"].as_f64().unwrap(), 2.4);
}

#[test]
fn plan_writes_plan_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plan.json");
    let out = kickplan(&["plan", fixture().to_str().unwrap(), "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let plan: kickplan::KickPlan =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(plan.segments().len(), 7);
}

#[test]
fn invalid_geometry_exits_one_naming_field() {
    let dir = tempfile::tempdir().unwrap();
    let config = patched_config(dir.path(), "ball_distance_m", "0.05");
    let out = kickplan(&["plan", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("x_b") && err.contains("ball_distance_m"), "{err}");
}

#[test]
fn unreachable_kick_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    // theta_k + theta_ext = 45 + 11.46 degrees
    let config = patched_config(dir.path(), "swing_max_deg", "50.0");
    let out = kickplan(&["plan", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("joint limit below kick angle"));
}

#[test]
fn missing_config_exits_one() {
    let out = kickplan(&["plan", "/nonexistent/kick.toml"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sample_csv_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kick.csv");
    let out = kickplan(&[
        "sample",
        fixture().to_str().unwrap(),
        "--dt",
        "0.01",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,phase,theta_l,omega_l,alpha,x_o,z_o"));
    assert!(lines.next().unwrap().starts_with("0.000000,prepare,0.000000,"));
    let last: Vec<&str> = text.lines().last().unwrap().split(',').collect();
    assert_eq!(last[1], "return");
    assert_eq!(last[2], "0.000000");
    assert_eq!(last[3], "0.000000");
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 7);
        for (i, f) in fields.iter().enumerate() {
            if i != 1 {
                assert_eq!(f.split('.').nth(1).map(str::len), Some(6), "{line}");
            }
        }
    }
}

#[test]
fn coarse_sampling_keeps_segment_boundaries() {
    let out = kickplan(&["sample", fixture().to_str().unwrap(), "--dt", "5.0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // header, 7 segment starts and the end
    assert_eq!(text.lines().count(), 1 + 7 + 1);
    let phases: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(
        phases,
        ["prepare", "prepare", "swing", "continue", "return", "return", "return", "return"]
    );
}

#[test]
fn sample_json_format() {
    let out = kickplan(&["sample", fixture().to_str().unwrap(), "--dt", "0.1", "--format", "json"]);
    let samples: Vec<kickplan::TrajectorySample> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(samples.len() > 14);
}

#[test]
fn sample_to_unwritable_path_exits_one() {
    let out = kickplan(&[
        "sample",
        fixture().to_str().unwrap(),
        "--out",
        "/nonexistent/dir/kick.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot write"));
}

#[test]
fn sample_rejects_bad_dt() {
    let out = kickplan(&["sample", fixture().to_str().unwrap(), "--dt", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_passes_on_fixture() {
    let out = kickplan(&["check", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("status = pass"));
}

#[test]
fn check_passes_when_velocity_is_clamped() {
    let dir = tempfile::tempdir().unwrap();
    let config = patched_config(dir.path(), "hip_velocity_max_rad_s", "0.5");
    let out = kickplan(&["check", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("stroke_velocity = 0.500000"));
}

#[test]
fn check_fails_on_corrupted_plan() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plan.json");
    kickplan(&["plan", fixture().to_str().unwrap(), "--out", path.to_str().unwrap()]);
    let mut json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let theta = json["segments"][3]["theta_start"].as_f64().unwrap();
    json["segments"][3]["theta_start"] = (theta + 0.01).into();
    std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();

    let out = kickplan(&["check", fixture().to_str().unwrap(), "--plan", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("status = fail"));
    assert!(text.contains("continuity_residual[3]"), "{text}");
}

#[test]
fn estimate_reports_launch() {
    let out = kickplan(&["estimate", fixture().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((json["foot_speed"].as_f64().unwrap() - 3.0).abs() < 1e-12);
    assert!((json["ball_speed"].as_f64().unwrap() - 3.9183673469387754).abs() < 1e-12);
}
