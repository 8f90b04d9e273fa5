use pantsbound::cli::RunReport;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pantsbound")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_trig_writes_a_report_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trig.json");
    let o = run(&["verify", "trig", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    let text = std::fs::read_to_string(&path).unwrap();
    let report: RunReport = serde_json::from_str(&text).unwrap();
    assert!(report.passed() && !report.checks.is_empty());
    let again: RunReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn seeded_reports_are_identical_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let path = dir.path().join(name);
        let o = run(&["verify", "lemma42", "--seed", "11", "--count", "500", "--report", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let mut r: RunReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        r.wall_time_s = 0.0;
        r
    };
    assert_eq!(read("a.json"), read("b.json"));
}

#[test]
fn unknown_suite_and_three_cusps_are_usage_errors() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["pants-diam", "--cuffs", "0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["pants-diam", "--cuffs", "1,2"]).status.code(), Some(2));
}

#[test]
fn pants_diam_reports_bound_and_estimates() {
    let o = run(&["pants-diam", "--cuffs", "0,1,2", "--resolution", "0.2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let (bound, upper) = (v["analytic_bound"].as_f64().unwrap(), v["mesh_upper"].as_f64().unwrap());
    assert!(upper <= bound);
}

#[test]
fn grid_tables() {
    let o = run(&["grid", "--b", "1", "--m", "3..7", "--scheme", "qch", "--d", "2.4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[0].ends_with("not-asserted") && rows[1].ends_with("not-asserted"));
    let bounds: Vec<f64> = rows[2..].iter().map(|r| r.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert!(bounds.windows(2).all(|w| w[1] > w[0]));

    let text = stdout(&run(&["grid", "--b", "1", "--m", "2..3", "--scheme", "reflection"]));
    assert!(text.contains("# verdict") && text.contains("bounded pants decomposition exists"));
    let text = stdout(&run(&["grid", "--b", "1", "--m", "2..3", "--scheme", "none"]));
    assert!(text.contains("curve_lower_bound"));
}

#[test]
fn scheme_config_is_canonicalised_and_drives_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(&path, r#"{"b": 1, "scheme": "qch", "window": [-3, 3, -3, 3], "twists": {"1,0->0,0": 0.25}}"#).unwrap();
    let o = run(&["scheme", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"b":1.0,"scheme":"qch","window":[-3,3,-3,3],"twists":{"0,0->1,0":0.25}}"#);
    let arg = format!("@{}", path.display());
    let o = run(&["grid", "--m", "5..5", "--scheme", &arg, "--d", "2.4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# scheme=qch b=1"));

    std::fs::write(&path, r#"{"b": 1, "scheme": "qch", "window": [-3, 3, -3, 3], "twists": {"0,0->0,1": 1}}"#).unwrap();
    assert_eq!(run(&["scheme", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn mesh_dump_lists_vertices_and_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mesh.txt");
    let o = run(&["mesh-dump", "--cuffs", "1,1,1", "--resolution", "0.3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("v ")) && text.lines().any(|l| l.starts_with("e ")));
}
