use super::*;

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("mfkit").chain(args.iter().copied()))
}

#[test]
fn verdicts_and_exit_codes() {
    let out = call(&["verify", "A3@0"]);
    assert_eq!(
        (out.code, out.stdout.as_str()),
        (0, "OK: 3/3 entries satisfy AB=BA=fI\n")
    );
    let out = call(&["iso", "--spec", "A2@5", "--i", "1", "--j", "2"]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "NOT ISOMORPHIC\n"));
    let out = call(&[
        "iso",
        "--spec",
        "A2@5",
        "--i",
        "2",
        "--j",
        "2",
        "--strict-nullstellensatz",
    ]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "ISOMORPHIC\n"));
}

#[test]
fn errors_carry_their_names() {
    let out = call(&["verify", "E6^1@5"]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("InvalidTypeCombination"),
        "{}",
        out.stderr
    );
    let out = call(&["quiver", "--spec", "A2@0", "--format", "svg"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("UnknownFormat"));
    let out = call(&["rank", "--spec", "A2@0", "--i", "3"]);
    assert!(out.stderr.contains("IndexOutOfRange"));
    let out = call(&["hom", "--spec", "A2@4", "--i", "1"]);
    assert!(out.stderr.contains("InvalidField"));
    assert_eq!(call(&["frobnicate"]).code, 2);
}

#[test]
fn mfjson_round_trip() {
    let out = call(&["emit", "--spec", "D4^1@2"]);
    assert_eq!(out.code, 0);
    let docs = parse_documents(&out.stdout).unwrap();
    assert_eq!(docs.len(), 4);
    let k = PrimeField::new(2).unwrap();
    for (d, e) in docs
        .iter()
        .zip(catalog_all(&"D4^1@2".parse().unwrap(), &k).unwrap())
    {
        assert_eq!(d.to_factorization(&k).unwrap(), e.factorization);
    }
    let keys: Vec<&str> = [
        "\"characteristic\"",
        "\"variables\"",
        "\"f\"",
        "\"A\"",
        "\"B\"",
    ]
    .to_vec();
    let pos: Vec<usize> = keys.iter().map(|k| out.stdout.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));

    let mut bad = docs[0].clone();
    bad.b[0][0] = format!("{}+x", bad.b[0][0]);
    assert!(!bad.satisfies_identity(&k).unwrap());
    assert_eq!(
        bad.to_factorization(&k).unwrap_err().name(),
        "NotAMatrixFactorization"
    );
    bad.a.pop();
    assert_eq!(
        bad.to_factorization(&k).unwrap_err().name(),
        "ShapeMismatch"
    );
}

#[test]
fn reports_are_deterministic() {
    let args = ["hom", "--spec", "A3@0", "--i", "2", "--j", "2"];
    let first = call(&args);
    assert_eq!(first.code, 0);
    assert!(first.stdout.starts_with("dim Hom(M2, M2) = 2\n"));
    assert_eq!(call(&args), first);
}

#[test]
fn quiver_and_cycle_commands() {
    let out = call(&["quiver", "--spec", "A3@0", "--format", "json"]);
    let q = crate::quiver::parse_json(&out.stdout).unwrap();
    assert_eq!(q.arrows, vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);
    let out = call(&["quiver", "--spec", "D4@0", "--check-dynkin"]);
    assert_eq!(out.stdout, "MATCH: D4 double quiver\n");
    let out = call(&["fundamental-cycle", "--type", "D4"]);
    assert_eq!(out.stdout, "Z(D4) = 1 2 1 1\n");
    let out = call(&["fundamental-cycle", "--spec", "A4@3", "--check-ranks"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out
        .stdout
        .ends_with("MATCH: fundamental cycle equals ranks\n"));
}
