use std::process::{Command, Output};

fn ttk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn alex_trefoil() {
    let o = ttk(&["alex", "--p", "2", "--q", "3", "--r", "0", "--form", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t^2 - t + 1\n");

    let o = ttk(&["alex", "--p", "2", "--q", "3", "--form", "symmetric"]);
    assert_eq!(stdout(&o), "t - 1 + t^-1\n");
}

#[test]
fn alex_error_codes() {
    let o = ttk(&["alex", "--p", "4", "--q", "6", "--r", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd"));

    assert_eq!(ttk(&["alex", "--p", "7", "--q", "17", "--r", "5"]).status.code(), Some(3));
    assert_eq!(ttk(&["alex", "--braid", "1 1", "--strands", "2"]).status.code(), Some(3));
    assert_eq!(ttk(&["alex", "--braid", "1 4", "--strands", "3"]).status.code(), Some(2));
    assert_eq!(ttk(&["alex", "--q", "3"]).status.code(), Some(2));
}

#[test]
fn alex_raw_braid_and_negative_twist() {
    let o = ttk(&["alex", "--braid", "1 -2 1 -2", "--strands", "3", "--form", "symmetric"]);
    assert_eq!(stdout(&o), "-t + 3 - t^-1\n");

    // σ1^3 σ1^-2 closes to the unknot
    let o = ttk(&["alex", "--p", "2", "--q", "3", "--r", "-2"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn check_lens_exit_codes() {
    let o = ttk(&["check-lens", "--p", "7", "--q", "17", "--r", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lens_witness"], serde_json::json!([37, -2]));
    assert_eq!(v["gamma_primitive_excluded"], true);

    let o = ttk(&["check-lens", "--p", "2", "--q", "3", "--r", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lens_witness"], serde_json::Value::Null);
    assert_eq!(v["gamma_primitive_excluded"], false);

    let o = ttk(&["check-lens", "--p", "7", "--q", "17", "--r", "16"]);
    assert_eq!(o.status.code(), Some(0));

    let o = ttk(&["check-lens", "--p", "7", "--q", "17", "--r", "6", "--mu-excluded", "false"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gamma_primitive_excluded"], false);

    assert_eq!(ttk(&["check-lens", "--p", "6", "--q", "9", "--r", "0"]).status.code(), Some(2));
}

#[test]
fn primitive_lines() {
    for (p, q, line) in [
        ("7", "17", "not primitive"),
        ("2", "5", "primitive (r=1, s=3)"),
        ("3", "4", "primitive (s=1, r=1)"),
    ] {
        let o = ttk(&["primitive", "--p", p, "--q", q]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(line));
        let v: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(v["p"].as_i64().unwrap().to_string(), p);
    }
}

#[test]
fn scan_csv_and_json() {
    let o = ttk(&["scan", "--p", "7", "--q", "17", "--m-start", "0", "--m-end", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m,p,q,r,n,braid_length,breadth,coeff_target_exp,coeff_value,lens_form_ok,gamma_primitive_excluded\n\
         0,7,17,-4,-2,106,92,,,false,true\n\
         1,7,17,6,3,108,102,37,-2,false,true\n"
    );

    let o = ttk(&["scan", "--m-start", "1", "--m-end", "2", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["m"], 2);
    assert_eq!(rows[1]["breadth"], 112);
}

#[test]
fn scan_bad_range_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = ttk(&["scan", "--m-start", "2", "--m-end", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!path.exists());

    let o = ttk(&["scan", "--p", "4", "--q", "6", "--m-start", "1", "--m-end", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!path.exists());
}

#[test]
fn scan_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = ttk(&["scan", "--m-start", "1", "--m-end", "2", "--jobs", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(!text.contains('\r'));
}

#[test]
fn scan_pretty() {
    let o = ttk(&["scan", "--m-start", "-1", "--m-end", "1", "--pretty"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}
