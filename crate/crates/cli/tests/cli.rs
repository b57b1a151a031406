use std::fs;

use ovals_cli::run;

const CUBIC: &str = "x=3*(1-t)^2*t; y=3*(1-t)*t^2; t in [0,1]";
const ARNOLD_F: &str = "y^4-2*x*y^2-x^3+x^2";

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn ovals(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ovals").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn puiseux_five_terms() {
    let r = ovals(&["puiseux", "--curve", ARNOLD_F, "--terms", "5"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(
        r.out.lines().next().unwrap(),
        "x^(1/2) + 1/2*x - 1/8*x^(3/2) + 1/16*x^2 - 5/128*x^(5/2)"
    );
    assert!(r.out.contains("O(x^3)"));
}

#[test]
fn cubic_area_is_three_twentieths() {
    let r = ovals(&["area", "--param", CUBIC]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("3/20 = 0.150000000000\n"));
    assert!(r.out.contains("orientation: counterclockwise"));
}

#[test]
fn no_verb_is_a_usage_error() {
    let r = ovals(&[]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("Usage"));
    assert!(r.out.is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(ovals(&["area", "--bogus"]).code, 2);
    assert_eq!(ovals(&["area"]).code, 2);
    assert_eq!(ovals(&["damper-table", "--param", CUBIC, "--steps", "1"]).code, 2);
}

#[test]
fn help_goes_to_stdout() {
    let r = ovals(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("damper-table"));
}

#[test]
fn domain_errors_name_the_module() {
    let r = ovals(&["area", "--param", CUBIC, "--chord", "0"]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: quadrature:"), "{}", r.err);

    let r = ovals(&["puiseux", "--curve", "x^2+y^2-1"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("puiseux:"), "{}", r.err);

    let r = ovals(&["parse", "--expr", "x^2 + 1.5"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("expr-parse:"), "{}", r.err);

    let r = ovals(&["area", "--param", "x=1/(t-1/2); y=t; t in [0,1]"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("curves:"), "{}", r.err);

    let r = ovals(&["area", "--param", CUBIC, "--free-inlet", "1/4"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("valid range"), "{}", r.err);
}

#[test]
fn parse_renders_canonically() {
    let r = ovals(&["parse", "--expr", "x^2 - x^3 - 2*x*y^2 + y^4"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "y^4 - 2*x*y^2 - x^3 + x^2\n");
}

#[test]
fn implicitize_arnold() {
    let r = ovals(&["implicitize", "--param", "x=(t^2-1)^2; y=t^3-t; t in [-1,1]"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "y^4 - 2*x*y^2 - x^3 + x^2\ndegree: 4\n");
}

#[test]
fn singular_points_of_arnold() {
    let r = ovals(&["singular", "--curve", ARNOLD_F]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "(0, 0)\n");
}

#[test]
fn damper_table_rows() {
    let r = ovals(&["damper-table", "--param", CUBIC, "--steps", "6"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "t_P,alpha_deg,S2,S2_exact");
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("0.500000000000,45.0000000000,"));
    assert_eq!(*lines.last().unwrap(), "1.00000000000,90.0000000000,0.150000000000,3/20");
}

#[test]
fn damper_table_two_steps_gives_end_points() {
    let r = ovals(&["damper-table", "--param", CUBIC, "--steps", "2"]);
    assert_eq!(r.code, 0);
    let rows: Vec<&str> = r.out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("0.500000000000,"));
    assert!(rows[1].starts_with("1.00000000000,"));
}

#[test]
fn damper_table_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let svg = dir.path().join("t.svg");
    let args = [
        "damper-table",
        "--param",
        CUBIC,
        "--steps",
        "9",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ];
    let r = ovals(&args);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.is_empty());
    let first = fs::read(&csv).unwrap();
    let plot = fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<svg") && plot.contains("<polyline"));
    assert_eq!(ovals(&args).code, 0);
    assert_eq!(fs::read(&csv).unwrap(), first);
    let stdout = ovals(&["damper-table", "--param", CUBIC, "--steps", "9"]).out;
    assert_eq!(stdout.as_bytes(), &first[..]);
}

#[test]
fn input_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("cubic.txt");
    fs::write(&p, CUBIC).unwrap();
    let r = ovals(&["area", "--in", p.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("3/20"));
    let both = ovals(&["area", "--in", p.to_str().unwrap(), "--param", CUBIC]);
    assert_eq!(both.code, 2);
    let missing = ovals(&["area", "--in", dir.path().join("nope").to_str().unwrap()]);
    assert_eq!(missing.code, 1);
}

#[test]
fn certify_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("q.txt");
    let r = ovals(&["certify", "--param", CUBIC, "--out", p.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let text = fs::read_to_string(&p).unwrap();
    assert!(text.starts_with("roles: "));
    let v = ovals(&["verify", "--in", p.to_str().unwrap(), "--param", CUBIC, "--oracle-samples", "20000"]);
    assert_eq!(v.code, 0, "{}{}", v.out, v.err);
    assert!(v.out.contains("family: origin pencil"));
    assert!(v.out.trim_end().ends_with("PASS"));
}

#[test]
fn vertical_certificate_for_cubic() {
    let r = ovals(&["certify", "--param", CUBIC, "--family", "vertical"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("abscissa"));
}

#[test]
fn verify_polygon_corner_certificate() {
    let cert = "roles: S=area m=slope q=intercept; (2*m*S - (1-q)^2)*(2*m*(1-S) - (1-q)^2)";
    let r = ovals(&[
        "verify",
        "--cert",
        cert,
        "--polygon",
        "(0,0) (1,0) (1,1) (0,1)",
        "--slope-window",
        "1,2",
        "--intercept-window",
        "0.5,1",
        "--samples",
        "20",
    ]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
}

#[test]
fn failed_verification_exits_one() {
    let cert = "roles: S=area m=slope q=intercept; S - m";
    let r = ovals(&["verify", "--cert", cert, "--square", "--samples", "10", "--oracle-samples", "2000"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("FAIL"));
    assert!(r.err.contains("certify:"));
}
