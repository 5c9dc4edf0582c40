use kmerwait::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("kmerwait").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn scan_top_four_slowest() {
    let out = ok(&["--csv", "scan", "--k", "5", "--length", "1000", "--method", "bnn", "--top", "4"]);
    let words: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(words, ["CCCCC", "GGGGG", "TTTTT", "AAAAA"]);
    assert!(out.lines().nth(1).unwrap().contains(",9104340.396,1021,1"));
}

#[test]
fn scan_with_both_methods_has_ratio() {
    let out = ok(&["--csv", "scan", "--k", "3", "--length", "1000", "--method", "bnn", "--method", "bv", "--top", "2"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "word,E_BNN_1e6,rank_BNN,E_BV_1e6,rank_BV,ratio,minimal_period");
    assert_eq!(lines.count(), 2);
}

#[test]
fn asym_reports_c1() {
    let out = ok(&["--csv", "asym", "ACAC", "--params", "binary-uniform"]);
    assert!(out.lines().any(|l| l == "hits_C1,0.2452503889"));
}

#[test]
fn every_subcommand_has_both_modes() {
    let cmds: [&[&str]; 9] = [
        &["wait", "ACGTA", "--length", "200", "--method", "all"],
        &["scan", "--k", "2", "--length", "100"],
        &["corr", "CATAT", "TATAT"],
        &["codes", "AACC"],
        &["gf", "ACC", "--coeffs", "6"],
        &["asym", "AAA"],
        &["automaton", "ACC"],
        &["oracle", "ACC", "--n", "8"],
        &["series", "AAA", "ACC", "--max", "20"],
    ];
    for c in cmds {
        let table = ok(c);
        let mut csv_args = vec!["--csv"];
        csv_args.extend_from_slice(c);
        let csv = ok(&csv_args);
        assert!(!table.is_empty() && !csv.is_empty(), "{c:?}");
        assert!(csv.lines().next().unwrap().contains(',') || c[0] == "corr", "{c:?}");
        // byte-identical reruns
        assert_eq!(ok(c), table, "{c:?}");
    }
}

#[test]
fn oracle_modes() {
    let out = ok(&["--csv", "oracle", "AAA", "--n", "3"]);
    assert!(out.contains("1,3/8,0.3750000000"));
    let out = ok(&["--csv", "oracle", "ACA", "--n", "6", "--pn"]);
    assert!(out.starts_with("word,n,p_n,value"));
    let a = ok(&["--csv", "oracle", "AAA", "--n", "40", "--params", "binary-uniform", "--mc", "10000", "--seed", "9"]);
    let b = ok(&["--csv", "oracle", "AAA", "--n", "40", "--params", "binary-uniform", "--mc", "10000", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn failures_are_single_lines() {
    for args in [
        &["wait", "ACGU", "--length", "10"][..],
        &["gf", "AAAAA", "--params", "promoter"],
        &["oracle", "AAA", "--n", "40", "--mc", "10"],
        &["wait", "AAAAA", "--length", "100", "--params", "/nonexistent/file.params"],
        &["asym", "A"],
        &["frobnicate"],
    ] {
        let (code, out, err) = call(args);
        assert_ne!(code, 0, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "));
    }
}

#[test]
fn params_file_round_trip() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/params/promoter.params");
    assert_eq!(ok(&["wait", "AAAAA", "--length", "1000", "--params", path]), ok(&["wait", "AAAAA", "--length", "1000"]));
}
