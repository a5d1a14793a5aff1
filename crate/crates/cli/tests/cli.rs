use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gmepw(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gmepw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = gmepw(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

#[test]
fn fixture_round_trip_is_byte_identical() {
    for name in ["fivefold", "threefold", "omega-fourfold", "marked-fivefold"] {
        let gm = ok(&["fixture", name], b"");
        let ld = ok(&["to-lagrangian"], &gm);
        assert_eq!(ok(&["from-lagrangian", "--a1", "0"], &ld), gm, "{name}");
    }
    let six = ok(&["fixture", "sixfold"], b"");
    let ld = ok(&["to-lagrangian", "-"], &six);
    assert_eq!(ok(&["from-lagrangian"], &ld), six);
}

#[test]
fn opposite_twice_is_identity() {
    let gm = ok(&["fixture", "fivefold"], b"");
    let op = ok(&["opposite"], &gm);
    assert_ne!(op, gm);
    assert_eq!(ok(&["opposite"], &op), gm);
}

#[test]
fn selftest_passes() {
    let out = String::from_utf8(ok(&["selftest"], b"")).unwrap();
    assert!(out.ends_with("11/11 checks passed\n"), "{out}");
}

#[test]
fn epw_line_degrees() {
    let gm = ok(&["fixture", "fivefold"], b"");
    let y: serde_json::Value = serde_json::from_slice(&ok(&["epw-line", "--kind", "y", "--seed", "3"], &gm)).unwrap();
    assert_eq!(y["kind"], "certificate");
    assert_eq!(y["payload"]["degree"], 6);
    let z: serde_json::Value = serde_json::from_slice(&ok(&["epw-line", "--kind", "z", "--seed", "3"], &gm)).unwrap();
    assert_eq!(z["payload"]["degree"], 4);
}

#[test]
fn bad_input_exits_with_two() {
    let gm = String::from_utf8(ok(&["fixture", "fivefold"], b"")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&gm).unwrap();
    doc["payload"]["mu"][0][0] = "1/0".into();
    let out = gmepw(&["validate"], doc.to_string().as_bytes());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.payload.mu[0][0]"));
    assert_eq!(gmepw(&["validate"], b"{").status.code(), Some(2));
    assert_eq!(gmepw(&["epw-point", "--point", "1,2"], gm.as_bytes()).status.code(), Some(2));
}

#[test]
fn fibration_csv() {
    let gm = ok(&["fixture", "omega-fourfold"], b"");
    let out = String::from_utf8(ok(&["fib1", "--point", "1,0,0,0,0", "--random", "2"], &gm)).unwrap();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "query,sigma_level,stratum,ambient,corank,agree");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1 0 0 0 0 0,1,"), "{}", lines[1]);
    assert!(lines.iter().skip(1).all(|l| l.ends_with(",true")));
    let out = String::from_utf8(ok(&["fib2", "--plane", "1,0,0,0,0;0,1,0,0,0;0,0,0,1,0"], &gm)).unwrap();
    assert!(out.lines().nth(1).unwrap().contains(",1,"), "{out}");
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("gmepw-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    ok(&["fixture", "l3v5", "-o", p], b"");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.contains("\"kind\": \"lagrangian_data\""));
    let report = String::from_utf8(ok(&["dim-report", "-"], text.as_bytes())).unwrap();
    assert!(report.contains("\"dim_a_cap_l3v5\": 10"), "{report}");
}
