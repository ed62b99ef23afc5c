use std::process::{Command, Output};

fn dini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dini")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_one_at_the_origin() {
    let o = dini(&["eval", "--fn", "calW", "--nu", "0", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn rayleigh_rows_carry_the_closed_forms() {
    let o = dini(&["rayleigh", "--family", "zeta", "--nu", "0", "--max-order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,nu,m,method,value,tail_err"));
    let values: Vec<f64> = lines.map(|l| l.split(',').nth(4).unwrap().parse().unwrap()).collect();
    assert_eq!(values.len(), 2);
    assert!((values[0] - 1.0 / 96.0).abs() < 1e-16);
    assert!((values[1] - 17.0 / 184320.0).abs() < 1e-18);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["zeros", "--fn", "cross", "--nu", "1.5", "--count", "5"];
    assert_eq!(dini(&args).stdout, dini(&args).stdout);
}

#[test]
fn zero_table_has_a_header_and_one_row_per_zero() {
    let o = dini(&["zeros", "--fn", "J", "--nu", "0", "--count", "4"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    let first: f64 = text.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((first - 2.404825557695773).abs() < 1e-12);
}

#[test]
fn verify_passes_the_interlacing_example() {
    let o = dini(&["verify", "--claim", "thm2", "--nu", "2", "--count", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["claim"], "thm2");
    assert_eq!(r["pass"], true);
}

#[test]
fn orders_outside_a_hypothesis_window_are_refused() {
    let o = dini(&["verify", "--claim", "thm9", "--nu", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_bracket_the_first_bessel_zero() {
    let o = dini(&["bounds", "--target", "j1", "--nu", "0", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let (lo, hi): (f64, f64) = (row[4].parse().unwrap(), row[5].parse().unwrap());
    let j2 = 2.404825557695773f64.powi(2);
    assert!(lo < j2 && j2 < hi, "{lo} {j2} {hi}");
}

#[test]
fn usage_errors_exit_2_with_a_diagnostic() {
    for args in [
        &["launch"][..],
        &["eval", "--fn", "calW", "--nu", "0"],
        &["eval", "--fn", "calW", "--nu", "0", "--x", "1", "--colour", "red"],
        &["rayleigh", "--family", "omega", "--nu", "0", "--max-order", "2"],
    ] {
        let o = dini(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn domain_errors_exit_2_with_one_line() {
    let o = dini(&["eval", "--fn", "J", "--nu", "-1.5", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
    let o = dini(&["zeros", "--fn", "dini-prime", "--nu", "0", "--count", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figure1_writes_the_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.csv");
    let o = dini(&["figure1", "--nu", "2", "--xmax", "1", "--step", "0.5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines, ["x,f_nu,g_nu", "0,2,2", lines[2], lines[3]]);
    assert!(lines[3].starts_with("1,"));
}
