use std::path::Path;
use std::process::Command;

use hackenbush::{Color, GroundedCounts, Position};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hackenbush"))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn fixture_round_trips_and_counts() {
    let text = std::fs::read_to_string(data("figure1.hkb")).unwrap();
    let p = Position::parse(&text).unwrap();
    assert_eq!(p.edges().len(), 15);
    assert_eq!(p.edges().iter().filter(|e| e.is_loop()).count(), 3);
    assert_eq!(p.ground().len(), 1);
    // Only the a-b edge touches the ground, and it is blue.
    assert_eq!(p.grounded_counts(), GroundedCounts { blue: 1, red: 0, green: 0 });
    let reparsed = Position::parse(&p.serialize()).unwrap();
    assert!(p.same_game(&reparsed));
}

#[test]
fn golden_random_position_is_frozen() {
    let generated = hackenbush::random_position(8, 6, &[Color::Blue, Color::Red], 42);
    let golden = std::fs::read_to_string(data("golden_random_8_6_br_42.hkb")).unwrap();
    assert_eq!(generated.serialize(), golden);
}

#[test]
fn solve_reports_outcome_and_moves() {
    let out = bin()
        .args(["solve", &data("path_blue_red.hkb"), "--play", "misere"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("outcome: R"), "{text}");
    assert!(text.contains("optimal first moves (Left): none"), "{text}");
    assert!(text.contains("optimal first moves (Right): 1"), "{text}");
}

#[test]
fn solve_json_has_schema_fields() {
    let out = bin()
        .args(["solve", &data("figure1.hkb"), "--play", "normal", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "solve");
    for field in ["inputs", "outcome", "moves", "stats"] {
        assert!(!doc[field].is_null(), "missing field {field}");
    }
}

#[test]
fn classify_rejects_green_with_exit_1() {
    let dir = std::env::temp_dir().join("hackenbush_cli_green");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("green.hkb");
    std::fs::write(&file, "ground 0\nedge 0 0 1 G\n").unwrap();
    let out = bin().args(["classify", file.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Red-Blue"), "{err}");
}

#[test]
fn malformed_file_exits_1() {
    let dir = std::env::temp_dir().join("hackenbush_cli_bad");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.hkb");
    std::fs::write(&file, "ground 0\nedge zero 0 1 B\n").unwrap();
    let out = bin().args(["solve", file.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn unknown_subcommand_exits_1() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reduce_and_merge_ground_write_files() {
    let dir = std::env::temp_dir().join("hackenbush_cli_reduce");
    std::fs::create_dir_all(&dir).unwrap();
    let gm_path = dir.join("gm.hkb");
    let merged_path = dir.join("merged.hkb");

    let out = bin()
        .args(["reduce", &data("path_blue_red.hkb"), "-o", gm_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let gm = Position::parse(&std::fs::read_to_string(&gm_path).unwrap()).unwrap();
    assert_eq!(gm.edges().len(), 3);
    let counts = gm.grounded_counts();
    assert_eq!((counts.blue, counts.red, counts.green), (0, 0, 1));

    let out = bin()
        .args(["merge-ground", &data("figure1.hkb"), "-o", merged_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let merged = Position::parse(&std::fs::read_to_string(&merged_path).unwrap()).unwrap();
    assert_eq!(merged.edges().len(), 15);
    assert_eq!(merged.ground().len(), 1);
}

#[test]
fn enumerate_emits_expected_count() {
    let out = bin()
        .args(["enumerate", "--shape", "strings", "--max-edges", "1", "--colors", "BR"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3, "{text}");
}

#[test]
fn verify_exits_zero_on_pass() {
    let out = bin()
        .args(["verify", "theorem1", "--max-edges", "1", "--random", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 mismatches"), "{text}");
}
