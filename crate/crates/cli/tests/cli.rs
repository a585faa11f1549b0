use std::path::PathBuf;
use std::process::{Command, Output};

fn legendre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legendre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = legendre(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn classify_f9_marks_the_exception() {
    let csv = stdout(&["classify", "--q", "9", "--format", "csv"]);
    assert!(csv.contains("9,4,0,,false,maximal/minimal exception (r+1)²\n"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["classify", "--q", "9"])).unwrap();
    let rec = json
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["N"] == 4)
        .unwrap();
    assert_eq!(rec["excluded_reason"], "maximal/minimal exception (r+1)²");
    assert_eq!(rec["legendre_isogenous"], false);
}

#[test]
fn supersingular_csv_all_ok() {
    let csv = stdout(&["supersingular", "--p-max", "100", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,s_p,h,3h,ok"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert!(rows.contains(&"23,9,3,9,true"));
}

#[test]
fn stats_formula_holds() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["stats", "--q-max", "50"])).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r["formula_ok"] == true));
}

#[test]
fn json_keys_keep_their_order() {
    let json = stdout(&["supersingular", "--p-max", "3"]);
    let compact: String = json.split_whitespace().collect();
    assert_eq!(
        compact,
        r#"[{"p":3,"p_prime":-3,"s_p":1,"h":null,"roots_fp":[2],"roots_fp2":[[2,0]],"hp":[2,2]}]"#
    );
}

#[test]
fn output_identical_across_jobs() {
    let cases: [&[&str]; 5] = [
        &["census", "--q-max", "49", "--format", "csv"],
        &["classify", "--q", "81"],
        &["stats", "--q-max", "200", "--format", "csv"],
        &["supersingular", "--p-max", "60"],
        &["char2", "--n", "5", "--all-beta", "--format", "csv"],
    ];
    for args in cases {
        let base = stdout(args);
        for jobs in ["1", "2", "3", "8"] {
            let mut a = args.to_vec();
            a.extend(["--jobs", jobs]);
            assert_eq!(stdout(&a), base, "{args:?} with --jobs {jobs}");
        }
        assert_eq!(stdout(args), base, "{args:?} rerun");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = tmp("count_7.csv");
    let p = path.to_str().unwrap();
    let out = legendre(&["count", "--q", "7", "--format", "csv", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "q,lambda,count\n7,2,8\n7,3,4\n7,4,8\n7,5,12\n7,6,8\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "--q", "10"][..],
        &["stats", "--q-max", "2"],
        &["stats", "--q-max", "50", "--max-q", "20"],
        &["census", "--q-max", "250"],
        &["count", "--q", "7", "--lambda", "1"],
        &["char2", "--n", "0"],
        &["count", "--q", "7", "--jobs", "0"],
        &["verify-all", "--only", "11"],
        &["count", "--q", "7", "--format", "xml"],
        &["frobnicate"],
    ] {
        let out = legendre(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_single_criterion() {
    let out = legendre(&["verify-all", "--only", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "id,name,passed\n5,prime-field-supersingular,true\n"
    );
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("PASS criterion  5"));
}
