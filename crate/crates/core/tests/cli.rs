use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coxhecke")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["reduce", "--preset", "A2", "--", "1", "0", "1", "1", "0"]).1, "1\n");
    assert_eq!(run(&["bound", "--n", "2"]).1, "f(z) = 2z - 4\n");
    let (code, out, _) = run(&["support", "--preset", "A2", "--", "x", "0 1", "y", "1 0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\te\n1\t0\n3\t0 1 0\n");
}

#[test]
fn verify_is_deterministic_apart_from_timing() {
    let args = ["verify", "--preset", "B2", "--radius", "4", "--samples", "300", "--seed", "7"];
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .map(|l| match l.rsplit_once('\t') {
                Some((head, _)) if !l.starts_with('#') => head.to_string(),
                _ => l.to_string(),
            })
            .collect()
    };
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert!(a.starts_with("# seed: 7\n"));
    assert!(a.contains("paper-f holds at n=4") || a.contains("paper-f fails at n=4"));
    assert_eq!(strip(a), strip(b));
}

#[test]
fn json_output_parses() {
    let (_, out, _) = run(&["enumerate", "--n", "3", "--radius", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert_eq!(v[0]["window"], serde_json::json!([1, 2, 3]));
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = run(&["twist", "--n", "4", "--m", "2", "--", "w:1,2,3,4"]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1);
    assert_eq!(run(&["length", "--preset", "A2", "--format", "xml", "--", "0"]).0, 2);
    assert_eq!(run(&["length", "--preset", "nope", "--", "0"]).0, 1);
    assert_eq!(run(&["twist", "--n", "2", "--m", "1", "--", "w:1,1"]).0, 1);
}
