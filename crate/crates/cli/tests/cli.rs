use std::path::Path;
use std::process::{Command, Output};

use altruns::enumerate::{PolyFamily, SignStat, SignedDistributionRequest};
use altruns::poly::AnyPoly;
use altruns::{BiPoly, Engine, Group, UniPoly};
use num_bigint::BigInt;

fn altruns(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(args)
        .env_remove("ALTRUNS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn dist_r4() {
    let o = altruns(&["dist", "--group", "A", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let f = UniPoly::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(f, UniPoly::from_ints(&[0, 2, 12, 10]));
}

#[test]
fn dist_signed_bivariate() {
    let o = altruns(&["dist", "--group", "A", "--n", "4", "--signed", "invA", "--biv"]);
    assert_eq!(code(&o), 0);
    let f = BiPoly::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(f, BiPoly::from_terms(&[(0, 0, 2), (1, 0, -2), (0, 1, -2), (1, 1, 2)]));
}

#[test]
fn dist_usage_errors() {
    assert_eq!(code(&altruns(&["dist", "--group", "B", "--n", "0"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "A", "--n", "4", "--signed", "invB"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "A", "--n", "4", "--first", "pos"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "B", "--n", "4", "--end", "aa"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "Q", "--n", "4"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "B", "--n", "40"])), 2);
    assert_eq!(code(&altruns(&["dist", "--group", "A", "--n", "4", "--threads", "0"])), 2);
}

#[test]
fn dist_json_round_trips() {
    let engine = Engine::new(2);
    for (group, n, stat) in [
        (Group::A, 6, SignStat::InvA),
        (Group::B, 5, SignStat::InvB),
        (Group::D, 5, SignStat::InvD),
        (Group::BminusD, 4, SignStat::None),
    ] {
        let req = SignedDistributionRequest::new(group, n).signed(stat);
        let name = group.to_string();
        let stat_flag = match stat {
            SignStat::None => "none",
            SignStat::InvA => "invA",
            SignStat::InvB => "invB",
            SignStat::InvD => "invD",
        };
        let n_arg = n.to_string();
        let uni = altruns(&["dist", "--group", &name, "--n", &n_arg, "--signed", stat_flag]);
        match AnyPoly::<BigInt>::from_json(stdout(&uni).trim()).unwrap() {
            AnyPoly::Uni(f) => assert_eq!(f, engine.dist_uni(&req).unwrap()),
            AnyPoly::Bi(_) => panic!("expected univariate"),
        }
        let bi = altruns(&["dist", "--group", &name, "--n", &n_arg, "--signed", stat_flag, "--biv"]);
        match AnyPoly::<BigInt>::from_json(stdout(&bi).trim()).unwrap() {
            AnyPoly::Bi(f) => assert_eq!(f, engine.dist_biv(&req).unwrap()),
            AnyPoly::Uni(_) => panic!("expected bivariate"),
        }
    }
}

#[test]
fn dist_csv_and_latex() {
    let o = altruns(&["dist", "--group", "A", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "t,coef\n1,2\n2,12\n3,10\n");
    let o = altruns(&["dist", "--group", "A", "--n", "4", "--format", "latex"]);
    assert_eq!(stdout(&o).trim(), "2t + 12t^{2} + 10t^{3}");
    let o = altruns(&["dist", "--group", "A", "--n", "4", "--end", "ad", "--signed", "invA", "--biv", "--format", "csv"]);
    assert_eq!(stdout(&o), "p,q,coef\n1,0,-2\n");
}

#[test]
fn thread_count_does_not_change_bytes() {
    let args = |t: &str| {
        vec!["dist", "--group", "B", "--n", "6", "--signed", "invB", "--biv", "--threads"]
            .into_iter()
            .chain([t])
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let run = |t: &str| {
        let a = args(t);
        stdout(&altruns(&a.iter().map(String::as_str).collect::<Vec<_>>()))
    };
    let one = run("1");
    assert_eq!(one, run("8"));
    assert_eq!(one, run("3"));
    let env = Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(["dist", "--group", "B", "--n", "6", "--signed", "invB", "--biv"])
        .env("ALTRUNS_THREADS", "5")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), one);
}

#[test]
fn env_thread_count_is_overridden_by_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(["dist", "--group", "A", "--n", "3", "--threads", "2"])
        .env("ALTRUNS_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(["dist", "--group", "A", "--n", "3"])
        .env("ALTRUNS_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_passes() {
    let o = altruns(&["verify", "--theorem", "thm-sgn-altrun", "--n-min", "1", "--n-max", "9"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("thm-sgn-altrun n=") && l.contains(" pass")).count(), 9);
}

#[test]
fn verify_prints_multiplicities() {
    let o = altruns(&["verify", "--theorem", "wilf", "--n-min", "4", "--n-max", "10"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("wilf n=8 pass [R: 3 (claimed 3"), "{text}");
}

#[test]
fn verify_unknown_id_is_usage_error() {
    assert_eq!(code(&altruns(&["verify", "--theorem", "nonsense"])), 2);
    assert_eq!(code(&altruns(&["verify", "--theorem", "wilf", "--n-max", "99"])), 2);
}

#[test]
fn verify_documents_bmd_mismatch() {
    let o = altruns(&["verify", "--theorem", "thm-alt-bmd-pm", "--n-max", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let entries = v["reports"][0]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    assert!(entries.iter().all(|e| e["status"] == "mismatch-documented"));
    let ns: Vec<u64> = entries.iter().map(|e| e["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn theorems_lists_registry() {
    let o = altruns(&["theorems"]);
    let text = stdout(&o);
    for id in altruns::verify::ids() {
        assert!(text.contains(id), "{id}");
    }
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn euler_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e.csv");
    let o = altruns(&["table", "--family", "E", "--n-max", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = read(&out);
    assert!(text.lines().any(|l| l == "4,5"), "{text}");
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn snake_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    altruns(&["table", "--family", "S", "--n-max", "4", "--out", out.to_str().unwrap()]);
    assert!(read(&out).lines().any(|l| l == "3,11"));
}

#[test]
fn empty_range_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let o = altruns(&["table", "--family", "Rpm", "--n-max", "0", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(&out), "n,k,R+,R-\n");
}

#[test]
fn tables_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for (family, n) in [("RBpm", "6"), ("R", "7"), ("SDpm", "6"), ("EBmDpm", "5")] {
        for format in ["csv", "json"] {
            let a = dir.path().join("a");
            let b = dir.path().join("b");
            altruns(&["table", "--family", family, "--n-max", n, "--format", format, "--threads", "1", "--out", a.to_str().unwrap()]);
            altruns(&["table", "--family", family, "--n-max", n, "--format", format, "--threads", "8", "--out", b.to_str().unwrap()]);
            assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{family} {format}");
        }
    }
}

#[test]
fn polynomial_table_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    altruns(&["table", "--family", "Rpm", "--n-max", "4", "--format", "json", "--out", out.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&read(&out)).unwrap();
    assert_eq!(v["columns"], serde_json::json!(["n", "k", "R+", "R-"]));
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.contains(&serde_json::json!([4, 2, "4", "8"])));
    let engine = Engine::new(1);
    let r4 = engine.family(PolyFamily::R, 4).unwrap();
    assert_eq!(r4.coeff(2), BigInt::from(12));
}

#[test]
fn table_errors() {
    let o = altruns(&["table", "--family", "E", "--n-max", "3", "--out", "/nonexistent-dir/x.csv"]);
    assert_ne!(code(&o), 0);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x");
    assert_eq!(code(&altruns(&["table", "--family", "nope", "--n-max", "3", "--out", out.to_str().unwrap()])), 2);
    assert_eq!(code(&altruns(&["table", "--family", "RB", "--n-max", "30", "--out", out.to_str().unwrap()])), 2);
}
