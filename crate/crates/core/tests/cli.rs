use tlh::cli::run;

fn tlh(args: &[&str]) -> (i32, String) {
    run(std::iter::once("tlh").chain(args.iter().copied()))
}

#[test]
fn prints_f_of_00() {
    let (code, out) = tlh(&["f", "--seq", "00"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(1 + a)(t + a + q - q t) / (1 - q)^2\n");
}

#[test]
fn prints_tilde_and_series() {
    assert_eq!(tlh(&["tilde", "--seq", "0"]), (0, "1 + a\n".into()));
    assert_eq!(
        tlh(&["fulltwist", "--n", "1", "--qmax", "2"]),
        (0, "1 + a + q + q a + q^2 + q^2 a\n".into())
    );
    assert_eq!(
        tlh(&["hhh0", "--n", "2", "--qmax", "2"]),
        (0, "t + q + q t + 2 q^2 + q^2 t\n".into())
    );
    assert_eq!(
        tlh(&["magic", "--n", "1", "--r", "1"]),
        (0, "1 + a\n".into())
    );
}

#[test]
fn specialises_dataset_entries() {
    assert_eq!(
        tlh(&["specialize", "--link", "T(3,4)", "--to", "sl_n", "--N", "2"]),
        (0, "q^3 + q^5 - q^8\n".into())
    );
    let (code, out) = tlh(&["specialize", "--link", "T(2,3)", "--to", "decat"]);
    assert_eq!(code, 0);
    assert_eq!(out, "-q^-1 a - a^2 - q a\n");
}

#[test]
fn specialises_input_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.txt");
    std::fs::write(
        &path,
        "a q^(1/2) t^(-1/2) + a q^(-1/2) t^(1/2) + a^2 q^(-1/2) t^(-1/2)\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        tlh(&["specialize", "--input", p, "--to", "sl_n", "--N", "3"]),
        (0, "q^2 + q^4 - q^6\n".into())
    );
    let (_, json) = tlh(&["--format", "json", "dataset", "--get", "T(2,3)"]);
    let body: serde_json::Value = serde_json::from_str(&json).unwrap();
    let poly_only = serde_json::json!({
        "exponent_unit": body["exponent_unit"],
        "variables": body["variables"],
        "terms": body["terms"],
    });
    std::fs::write(&path, poly_only.to_string()).unwrap();
    assert_eq!(
        tlh(&["specialize", "--input", p, "--to", "sl_n", "--N", "3"]),
        (0, "q^2 + q^4 - q^6\n".into())
    );
}

#[test]
fn dataset_listing_and_json() {
    let (code, out) = tlh(&["dataset", "--list"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(keys, tlh::linkinv::DATASET_KEYS);
    let (code, json) = tlh(&["--format", "json", "dataset", "--get", "T(3,4)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["key"], "T(3,4)");
    assert!(v["source"].as_str().is_some_and(|s| !s.is_empty()));
}

#[test]
fn output_formats() {
    assert_eq!(
        tlh(&["--format", "latex", "f", "--seq", "0"]),
        (0, "\\frac{1 + a}{(1 - q)}\n".into())
    );
    let (_, json) = tlh(&["--format", "json", "tilde", "--seq", "0"]);
    assert_eq!(
        json,
        "{\"exponent_unit\":\"1/4\",\"variables\":[\"q\",\"a\",\"t\"],\"terms\":[{\"coeff\":\"1\",\"exp\":[0,0,0]},{\"coeff\":\"1\",\"exp\":[0,4,0]}]}\n"
    );
}

#[test]
fn verify_exit_codes() {
    let (code, out) = tlh(&["verify", "--suite", "recursions", "--max-n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("THEOREM"));
    assert!(!out.contains("FAIL"));

    let (code, out) = tlh(&["verify", "--suite", "magic", "--max-n", "2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("FINDING"));
    let (code, _) = tlh(&[
        "verify",
        "--suite",
        "magic",
        "--max-n",
        "2",
        "--conjecture-soft",
    ]);
    assert_eq!(code, 0);

    assert_eq!(tlh(&["verify", "--suite", "nonsense"]).0, 1);
    assert_eq!(tlh(&["verify"]).0, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(tlh(&[]).0, 2);
    assert_eq!(tlh(&["--threads", "0", "f", "--seq", "0"]).0, 2);
    assert_eq!(tlh(&["--format", "yaml", "f", "--seq", "0"]).0, 2);
    assert_eq!(tlh(&["specialize", "--to", "decat"]).0, 2);
    assert_eq!(tlh(&["--help"]).0, 0);
}

#[test]
fn output_is_independent_of_thread_count() {
    let cases: &[&[&str]] = &[
        &["magic", "--n", "4", "--r", "2"],
        &["hhh0", "--n", "5", "--qmax", "8"],
        &["fulltwist", "--n", "5", "--qmax", "6"],
        &[
            "--format",
            "json",
            "verify",
            "--suite",
            "closed-form",
            "--max-n",
            "4",
        ],
    ];
    for case in cases {
        let mut one = vec!["--threads", "1"];
        one.extend_from_slice(case);
        let mut four = vec!["--threads", "4"];
        four.extend_from_slice(case);
        let a = tlh(&one);
        assert_eq!(a.0, 0, "{case:?}");
        assert_eq!(a, tlh(&four), "{case:?}");
    }
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.json");
    let p = path.to_str().unwrap();
    let first = tlh(&["--cache", p, "tilde", "--seq", "0000"]);
    assert_eq!(first.0, 0);
    assert!(path.exists());
    assert_eq!(tlh(&["--cache", p, "tilde", "--seq", "0000"]), first);

    std::fs::write(&path, r#"{"0":{"exponent_unit":"1/4","variables":["q","a","t"],"terms":[{"coeff":"2","exp":[0,0,0]}]}}"#).unwrap();
    let (code, out) = tlh(&["--cache", p, "tilde", "--seq", "0"]);
    assert_eq!(code, 1);
    assert!(out.contains("cache"), "{out}");
}
