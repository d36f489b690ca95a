use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_phasespace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn phasespace")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = run(&["verify", "--seed", "42"]);
    let b = run(&["verify", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let reports: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let suites: Vec<&str> = reports
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(suites, ["space", "triproduct", "liealgebra", "representations", "em"]);
    for r in reports.as_array().unwrap() {
        assert_eq!(r["pass"], true);
        let check = &r["checks"][0];
        assert!(check["id"].is_string() && check["residual"].is_number() && check["pass"].is_boolean());
    }
}

#[test]
fn verify_fails_at_unattainable_tolerance() {
    let o = run(&["verify", "--tolerance", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_csv_has_one_row_per_check() {
    let o = run(&["verify", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("suite,id,residual,pass"));
    assert!(lines.count() > 1000);
}

#[test]
fn bad_configuration_exits_with_usage_status() {
    assert_eq!(run(&["verify", "--tolerance", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--tolerance", "-1"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--output", "/nonexistent-dir/report.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["transform", "spin1", "M44", "1", "1", "0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["transform", "spin2", "M01", "1", "1", "0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["transform", "spin1", "P0", "1", "1", "0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["np-dump", "spin1"]).status.code(), Some(2));
}

#[test]
fn transform_boosts_the_time_basis_vector() {
    let o = run(&["transform", "spin1", "M01", "0.5", "1", "0", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let out: Vec<String> = serde_json::from_value(v["output"].clone()).unwrap();
    let p0 = phasespace::format::parse_complex(&out[0]).unwrap();
    let p1 = phasespace::format::parse_complex(&out[1]).unwrap();
    assert!((p0.re - 0.5f64.cosh()).abs() < 1e-14);
    assert!((p1.re + 0.5f64.sinh()).abs() < 1e-14);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
}

#[test]
fn transform_accepts_negative_and_complex_arguments() {
    let o = run(&["transform", "spin_half_minus", "M23", "-0.7", "1-2i", "0", "-i", "3.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&[
        "transform",
        "spin1",
        "M12",
        "0",
        "1+1i",
        "2",
        "3",
        "4",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert_eq!(
        text.lines().next(),
        Some("component,input_re,input_im,output_re,output_im")
    );
    // φ = 0 leaves every component unchanged.
    for line in text.lines().skip(1) {
        let row: Vec<&str> = line.split(',').collect();
        assert_eq!((row[1], row[2]), (row[3], row[4]));
    }
}

#[test]
fn evolve_csv_has_the_fixed_header_and_round_trips() {
    let path = temp_path("evolve.csv");
    let o = run(&[
        "evolve",
        "--e",
        "1",
        "0",
        "0",
        "--b",
        "0",
        "0",
        "0",
        "--p0",
        "1",
        "0",
        "0",
        "0",
        "--tau-max",
        "2",
        "--samples",
        "5",
        "--compare",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>().join(","),
        "tau,p0,p1,p2,p3,p0_num,p1_num,p2_num,p3_num,dev,shell_residual"
    );
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    let last = rows.last().unwrap();
    assert_eq!(last[0], 2.0);
    assert!((last[1] - 2f64.cosh()).abs() < 1e-13);
    assert!((last[2] + 2f64.sinh()).abs() < 1e-13);
    assert!(rows.iter().all(|r| r[9] < 1e-8 && r[10] < 1e-10));
    for row in &rows {
        for x in row {
            assert_eq!(phasespace::format::format_f64_sci(*x).parse::<f64>().unwrap(), *x);
        }
    }
}

#[test]
fn evolve_null_field_grows_quadratically() {
    let o = run(&[
        "evolve",
        "--e",
        "1",
        "0",
        "0",
        "--b",
        "0",
        "1",
        "0",
        "--p0",
        "1",
        "0",
        "0",
        "0",
        "--tau-max",
        "4",
        "--samples",
        "5",
        "--compare",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let energy: Vec<(f64, f64, f64)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].parse().unwrap(), r[1].parse().unwrap(), r[10].parse().unwrap())
        })
        .collect();
    // Third differences of a quadratic vanish on a uniform grid.
    let e: Vec<f64> = energy.iter().map(|x| x.1).collect();
    let third = e[3] - 3.0 * e[2] + 3.0 * e[1] - e[0];
    assert!(third.abs() < 1e-12, "{e:?}");
    assert!(e[4] > e[0] + 1.0);
    assert!(energy.iter().all(|x| x.2 < 1e-10));
}

#[test]
fn evolve_zero_field_is_constant() {
    let o = run(&[
        "evolve",
        "--p0",
        "2",
        "1",
        "-1",
        "0.5",
        "--tau-max",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in rows.as_array().unwrap() {
        assert_eq!(row["p"], serde_json::json!([2.0, 1.0, -1.0, 0.5]));
        assert!(row.get("dev").is_none());
    }
}

#[test]
fn evolve_rejects_bad_input() {
    let base = ["evolve", "--e", "0", "0", "1", "--tau-max", "1"];
    let with = |extra: &[&str]| {
        let mut args: Vec<&str> = base.to_vec();
        args.extend_from_slice(extra);
        run(&args).status.code()
    };
    assert_eq!(with(&["--p0", "1", "0", "0", "0"]), Some(0));
    assert_eq!(with(&["--p0", "1", "0.5i", "0", "0"]), Some(2));
    assert_eq!(with(&["--p0", "1", "0", "0", "0", "--samples", "0"]), Some(2));
    assert_eq!(with(&["--p0", "1", "0", "0", "0", "--samples", "1"]), Some(2));
    assert_eq!(with(&["--p0", "1", "0", "0", "0", "--tau-max", "-1"]), Some(2));
    assert_eq!(
        with(&["--p0", "1", "0", "0", "0", "--compare", "--steps", "0"]),
        Some(2)
    );
}

#[test]
fn np_dump_reports_every_generator() {
    for rep in ["spin_half_plus", "spin_half_minus"] {
        let o = run(&["np-dump", rep]);
        // The lower-block pattern is not met for M03 and M12, so the dump reports a failure.
        assert_eq!(o.status.code(), Some(1));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let gens = v["generators"].as_array().unwrap();
        assert_eq!(gens.len(), 6);
        for g in gens {
            assert!(g["offdiag_residual"].as_f64().unwrap() < 1e-12);
            assert!(g["upper_residual"].as_f64().unwrap() < 1e-12);
            assert_eq!(g["matrix"].as_array().unwrap().len(), 4);
        }
    }
}
