use std::process::Command;

fn mfkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mfkit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    assert_eq!(
        mfkit(&["verify", "A3@0"]).1,
        "OK: 3/3 entries satisfy AB=BA=fI\n"
    );
    let (code, out, _) = mfkit(&["iso", "--spec", "A2@5", "--i", "1", "--j", "2"]);
    assert_eq!((code, out.as_str()), (1, "NOT ISOMORPHIC\n"));
    let (code, out, _) = mfkit(&["quiver", "--spec", "E6^1@3", "--check-dynkin"]);
    assert_eq!((code, out.as_str()), (0, "MATCH: E6 double quiver\n"));
}

#[test]
fn files_in_and_out() {
    let dir = std::env::temp_dir().join(format!("mfkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mf = dir.join("a2.json");
    let (code, json, _) = mfkit(&["emit", "--spec", "A2@0"]);
    assert_eq!(code, 0);
    std::fs::write(&mf, &json).unwrap();
    let mf = mf.to_str().unwrap();
    assert_eq!(
        mfkit(&["verify", mf]).1,
        "OK: 2/2 entries satisfy AB=BA=fI\n"
    );

    let (code, out, _) = mfkit(&[
        "iso", "--source", mf, "--i", "1", "--target", mf, "--j", "2",
    ]);
    assert_eq!((code, out.as_str()), (1, "NOT ISOMORPHIC\n"));

    let phi = dir.join("phi.json");
    std::fs::write(
        &phi,
        r#"{"X": [["z","0"],["0","z"]], "Y": [["z","0"],["0","z"]]}"#,
    )
    .unwrap();
    let phi = phi.to_str().unwrap();
    let (code, out, err) = mfkit(&[
        "nullhomotopic",
        "--spec",
        "A3@0",
        "--i",
        "2",
        "--j",
        "2",
        "--morphism",
        phi,
    ]);
    assert_eq!(code, 1, "{out}{err}");
    assert_eq!(out, "NOT NULL-HOMOTOPIC\n");

    std::fs::write(
        dir.join("bad.json"),
        r#"{"X": [["x","0"],["0","1"]], "Y": [["1","0"],["0","1"]]}"#,
    )
    .unwrap();
    let bad = dir.join("bad.json");
    let (code, _, err) = mfkit(&[
        "nullhomotopic",
        "--spec",
        "A2@0",
        "--i",
        "1",
        "--j",
        "1",
        "--morphism",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("NotAMorphism"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn knitting_report() {
    let (code, out, _) = mfkit(&["knit", "--spec", "A3@0", "--seed", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("closure: 3 objects, 2 new\n"), "{out}");
    assert!(out.ends_with("MATCH: A3 double quiver\n"));
    let (code, _, err) = mfkit(&["knit", "--spec", "A3@0", "--seed", "1", "--max-steps", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("NonClosure"));
}
