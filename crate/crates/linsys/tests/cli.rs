//! End-to-end tests of the command-line interface: output protocols,
//! exit codes, and file handling.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linsys"))
}

fn instance(name: &str) -> String {
    format!("{}/instances/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch_dir(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("linsys-cli-{test}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_machine_output_is_stable_byte_for_byte() {
    let out = bin()
        .args(["analyze", "--machine", &instance("fano.linsys")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "format\tlinsys\n\
         points\t7\n\
         lines\t7\n\
         uniform\t3\n\
         intersecting\ttrue\n\
         max_degree\t3\n\
         tau\t3\n\
         tau_witness\t1; 2; 3\n\
         nu2\t4\n\
         nu2_witness\t0,1,3,6\n\
         levi_vertices\t14\n\
         levi_edges\t21\n\
         levi_girth\t6\n\
         levi_planar\tfalse\n"
    );

    // Identical flags and input must give identical bytes.
    let again = bin()
        .args(["analyze", "--machine", &instance("fano.linsys")])
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn analyze_reports_segment_systems_through_their_incidence_structure() {
    let out = bin()
        .args(["analyze", "--machine", &instance("pendant-extension.segsys")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("format\tsegsys\n"));
    assert!(text.contains("points\t13\n"));
    assert!(text.contains("lines\t6\n"));
    assert!(text.contains("uniform\t4\n"));
    assert!(text.contains("tau\t3\n"));
    assert!(text.contains("nu2\t4\n"));
}

#[test]
fn analyze_dump_levi_lists_sorted_edges() {
    let out = bin()
        .args(["analyze", "--dump-levi", &instance("triangle.linsys")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    // Three 2-point lines: six incidences.
    assert_eq!(text.matches("l:").count(), 6);
}

#[test]
fn analyze_rejects_malformed_and_invalid_files_with_exit_2() {
    let dir = scratch_dir("invalid");

    let bad_grammar = dir.join("bad.linsys");
    fs::write(&bad_grammar, "linsys 1\nline a a\n").unwrap();
    let out = bin().args(["analyze"]).arg(&bad_grammar).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("repeats"));

    // Grammatically fine but structurally invalid: two lines sharing
    // two points.
    let invalid = dir.join("invalid.linsys");
    fs::write(&invalid, "linsys 1\nline a b c\nline a b d\n").unwrap();
    let out = bin().args(["analyze"]).arg(&invalid).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("share two points"));

    let missing = dir.join("missing.linsys");
    let out = bin().args(["analyze"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_passes_the_bundled_instances() {
    for name in ["fano.linsys", "pendant-extension.linsys", "pendant-extension.segsys", "pencil-cross.segsys"] {
        let out = bin().args(["verify", &instance(name)]).output().unwrap();
        assert!(out.status.success(), "{name} must verify cleanly");
        assert!(stdout(&out).contains(" 0 violated"));
    }
}

#[test]
fn verify_exit_codes_separate_violations_from_input_errors() {
    let out = bin()
        .args(["verify", "--override-tau", "5", &instance("pendant-extension.segsys")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("VIOLATED"));
    assert!(stdout(&out).contains("counterexample"));

    let out = bin()
        .args(["verify", "--theorems", "no-such-check", &instance("fano.linsys")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "--theorems", "sandwich", &instance("fano.linsys")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sandwich"));
}

#[test]
fn search_summary_counts_classes_up_to_symmetry() {
    let out = bin()
        .args(["search", "--r", "2", "--box", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "search r=2 box=1 max-lines=6 require-triangle=false\n\
         count 1 3\n\
         count 2 11\n\
         count 3 23\n\
         count 4 16\n\
         count 5 7\n\
         count 6 1\n\
         classes 61\n\
         best 6\n"
    );
}

#[test]
fn search_list_mode_streams_sorted_encodings_to_stdout() {
    let out = bin()
        .args(["search", "--r", "2", "--box", "1", "--list"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 61);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted, "stream must already be sorted");
    // Summary goes to stderr in list mode.
    assert!(stderr(&out).contains("classes 61"));
}

#[test]
fn search_writes_extremal_instances_that_parse_back() {
    let dir = scratch_dir("extremal");
    let out = bin()
        .args(["search", "--r", "2", "--box", "1", "--sample", "5", "--out"])
        .arg(&dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 1, "exactly one 6-segment class fits the box");
    let text = fs::read_to_string(&files[0]).unwrap();
    assert!(text.starts_with("segsys 1\nr 2\n"));
    let reparsed = bin().args(["analyze", "--machine"]).arg(&files[0]).output().unwrap();
    assert!(reparsed.status.success());
    assert!(stdout(&reparsed).contains("lines\t6\n"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_validates_shard_flags() {
    let out = bin()
        .args(["search", "--r", "2", "--box", "1", "--shard", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["search", "--r", "2", "--box", "1", "--shards", "2", "--shard", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_svg_draws_segments_and_rejects_abstract_systems() {
    let dir = scratch_dir("svg");
    let svg_path = dir.join("out.svg");
    let out = bin()
        .args(["export-svg", &instance("pendant-extension.segsys")])
        .arg(&svg_path)
        .args(["--show-transversal"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let svg = fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<line ").count(), 6);
    assert_eq!(svg.matches("<circle ").count(), 13);
    assert_eq!(svg.matches("class=\"transversal\"").count(), 3);

    let out = bin()
        .args(["export-svg", &instance("fano.linsys")])
        .arg(dir.join("nope.svg"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bundled_instances_are_canonical_files() {
    use linsys::formats::{parse_linsys, parse_segsys, serialize_linsys, serialize_segsys};
    for name in ["fano.linsys", "pendant-extension.linsys", "triangle.linsys"] {
        let text = fs::read_to_string(instance(name)).unwrap();
        let ls = parse_linsys(&text).unwrap();
        assert_eq!(serialize_linsys(&ls), text, "{name} must round-trip");
    }
    for name in ["pendant-extension.segsys", "pencil-cross.segsys"] {
        let text = fs::read_to_string(instance(name)).unwrap();
        let ss = parse_segsys(&text).unwrap();
        assert_eq!(serialize_segsys(&ss), text, "{name} must round-trip");
    }
}
