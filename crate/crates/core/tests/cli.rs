//! The command line as a black box: exit codes, outputs and atomic writes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gamecat::fixtures;
use gamecat::io::{load_game, load_morphism, to_dot};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamecat")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamecat"))
        .args(args)
        .env(key, value)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn out_path(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn data_documents_match_fixtures() {
    let pairs = [
        ("pd.json", fixtures::prisoners_dilemma()),
        ("bos.json", fixtures::bos()),
        ("bos_shifted.json", fixtures::bos_shifted()),
        ("g1_merged.json", fixtures::g1_merged()),
        ("weak_ne.json", fixtures::weak_ne_example()),
        ("counterexample_source.json", fixtures::counterexample_source()),
        ("counterexample_target.json", fixtures::counterexample_target()),
    ];
    for (file, game) in pairs {
        assert_eq!(load_game(Path::new(&data(file))).unwrap(), game, "{file}");
    }
    assert_eq!(load_morphism(Path::new(&data("pd_to_g1.json"))).unwrap(), fixtures::pd_to_g1_merged());
    assert_eq!(
        load_morphism(Path::new(&data("counterexample.json"))).unwrap(),
        fixtures::counterexample_morphism()
    );
}

#[test]
fn from_strategic_reproduces_the_stored_game() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_path(&dir, "pd.json");
    let o = run(&["from-strategic", &data("pd_strategic.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(data("pd.json")).unwrap());
}

#[test]
fn identify_builds_the_merged_game() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = out_path(&dir, "g1.json");
    let merged = out_path(&dir, "merged.json");
    assert_eq!(code(&run(&["from-strategic", &data("g1_strategic.json"), "-o", g1.to_str().unwrap()])), 0);
    let o = run(&[
        "identify",
        g1.to_str().unwrap(),
        "--merge",
        "TL,DR",
        "--label",
        "o",
        "-o",
        merged.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(load_game(&merged).unwrap(), fixtures::g1_merged());
    assert!(text(&run(&["nash", merged.to_str().unwrap()])).is_empty());
}

#[test]
fn validate_reports_violations() {
    assert_eq!(text(&run(&["validate", &data("bos.json")])), "valid\n");
    let o = run(&["validate", &data("asymmetric.json")]);
    assert_eq!(code(&o), 2);
    assert!(!text(&o).is_empty());
}

#[test]
fn weak_equilibria() {
    assert_eq!(text(&run(&["nash", &data("weak_ne.json")])), "o\n");
    assert_eq!(text(&run(&["nash", "--weak", &data("weak_ne.json")])), "o\np\n");
}

#[test]
fn morphism_commands() {
    assert_eq!(text(&run(&["check-morphism", &data("pd_to_g1.json")])), "valid\n");
    let o = run(&["preserves-ne", &data("counterexample.json")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["preserves_ne"], false);
    let o = run(&["classify", &data("counterexample.json")]);
    assert_eq!(code(&o), 0);
    assert!(serde_json::from_slice::<serde_json::Value>(&o.stdout).is_ok());
}

#[test]
fn hom_count_matches_listing() {
    for fixed in [false, true] {
        let pd = data("pd.json");
        let mut args = vec!["hom", pd.as_str(), pd.as_str()];
        if fixed {
            args.push("--fixed");
        }
        let listing: Vec<serde_json::Value> = serde_json::from_slice(&run(&args).stdout).unwrap();
        args.push("--count");
        let count: usize = text(&run(&args)).trim().parse().unwrap();
        assert_eq!(listing.len(), count);
        assert_eq!(count, if fixed { 5 } else { 18 });
    }
}

#[test]
fn dot_export_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_path(&dir, "bos.dot");
    assert_eq!(code(&run(&["export-dot", &data("bos.json"), "-o", out.to_str().unwrap()])), 0);
    let golden = std::fs::read_to_string(data("bos.golden.dot")).unwrap();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), golden);
    assert_eq!(to_dot(&fixtures::bos()), golden);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = out_path(&dir, "garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["nash", garbage.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["nash", "/nonexistent/game.json"])), 1);
    assert_eq!(code(&run(&["verify", "--law", "no_such_law"])), 1);
    assert_eq!(code(&run(&["nash", &data("asymmetric.json")])), 2);
    let o = run(&["verify", "--law", "morphisms_preserve_ne", "--trials", "5"]);
    assert_eq!(code(&o), 3);
    let o = run_env(&["hom", &data("pd.json"), &data("pd.json")], "HOM_BUDGET", "10");
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}

#[test]
fn failed_commands_leave_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_path(&dir, "never.json");
    let o = run(&["product", &data("pd.json"), &data("asymmetric.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = run_env(
        &["exp", &data("pd.json"), &data("pd.json"), "-o", out.to_str().unwrap()],
        "HOM_BUDGET",
        "3",
    );
    assert_eq!(code(&o), 4);
    assert!(!out.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0, "no stray temporary files");
}

#[test]
fn existing_output_survives_a_failed_write() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_path(&dir, "keep.json");
    std::fs::write(&out, "previous").unwrap();
    let o = run(&["pushout", &data("pd.json"), &data("asymmetric.json"), "-o", out.to_str().unwrap()]);
    assert_ne!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "previous");
}

#[test]
fn verify_report_is_canonical_json() {
    let o = run(&["verify", "--law", "product_ne", "--seed", "7", "--trials", "10"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["law"], "product_ne");
    assert_eq!(v["trials"], 10);
    assert_eq!(v["params"]["seed"], 7);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(text(&o).ends_with("}\n"));
}

#[test]
fn constructions_write_valid_games() {
    let dir = tempfile::tempdir().unwrap();
    let out = out_path(&dir, "c.json");
    let o_ = out.to_str().unwrap();
    let (pd, bos, bos2, cx) = (data("pd.json"), data("bos.json"), data("bos_shifted.json"), data("counterexample_source.json"));
    let f = data("pd_to_g1.json");
    let cases: Vec<(Vec<&str>, Option<usize>)> = vec![
        (vec!["product", &pd, &bos2, "-o", o_], Some(12)),
        (vec!["product", &pd, &bos, "--fixed", "-o", o_], Some(12)),
        (vec!["coproduct", &pd, &bos2, "-o", o_], Some(7)),
        (vec!["coproduct", &pd, &bos, "--fixed", "-o", o_], Some(7)),
        (vec!["pushout", &pd, &bos2, "-o", o_], Some(7)),
        (vec!["equalizer", &f, &f, "-o", o_], Some(4)),
        (vec!["coequalizer", &f, &f, "-o", o_], Some(3)),
        (vec!["exp", &bos, &cx, "--fixed", "-o", o_], None),
    ];
    for (args, outcomes) in cases {
        let o = run(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        if let Some(n) = outcomes {
            assert_eq!(load_game(&out).unwrap().outcomes().len(), n, "{args:?}");
        }
        assert_eq!(text(&run(&["validate", o_])), "valid\n");
    }
}
