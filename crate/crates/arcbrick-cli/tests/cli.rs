//! End-to-end checks of the command-line surface: pinned output bytes,
//! exit codes, the sweep guard, and JSON round-trips through the library
//! parsers.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arcbrick"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn hom_output_is_pinned() {
    let out = stdout_of(&["hom", "--src", "0:ouu", "--dst", "1:", "-n", "4"]);
    assert_eq!(out, "{\"dim\":1,\"basis\":[\"1:\"]}\n");
    let none = stdout_of(&["hom", "--src", "0:ouu", "--dst", "2:", "-n", "4"]);
    assert_eq!(none, "{\"dim\":0,\"basis\":[]}\n");
}

#[test]
fn maxlen_output_is_pinned() {
    assert_eq!(stdout_of(&["weak", "maxlen", "-n", "3"]), "{\"max\":4}\n");
    let with_witness = stdout_of(&["weak", "maxlen", "-n", "2", "--witness"]);
    let mut lines = with_witness.lines();
    assert_eq!(lines.next(), Some("{\"max\":2}"));
    let diagram: arcbrick::json::DiagramJson =
        serde_json::from_str(lines.next().expect("witness line")).unwrap();
    let d = arcbrick::ArcDiagram::try_from(&diagram).unwrap();
    assert!(arcbrick::is_clockwise_ordered(&d));
}

#[test]
fn ext_depends_on_the_algebra() {
    let gentle = stdout_of(&[
        "ext", "--x", "1:uou", "--y", "0:uuoo", "-n", "5", "--algebra", "gentle",
    ]);
    assert_eq!(gentle, "{\"dim\":0}\n");
    let family = stdout_of(&[
        "ext", "--x", "1:uou", "--y", "0:uuoo", "-n", "5", "--algebra", "S=",
    ]);
    assert_eq!(family, "{\"dim\":1}\n");
}

#[test]
fn pair_and_tau_rigid() {
    assert_eq!(
        stdout_of(&["pair", "--second", "0:o", "--first", "1:", "-n", "2"]),
        "{\"weak\":true}\n"
    );
    assert_eq!(
        stdout_of(&["pair", "--second", "0:", "--first", "1:", "-n", "2"]),
        "{\"weak\":false}\n"
    );
    assert_eq!(
        stdout_of(&["tau-rigid", "--arc", "0:ou", "-n", "3"]),
        "{\"arc\":\"0:ou\",\"tau_rigid\":false}\n"
    );
}

#[test]
fn enumeration_lines() {
    let arcs = stdout_of(&["arcs", "list", "-n", "2"]);
    assert_eq!(arcs.lines().count(), 4);
    assert_eq!(arcs.lines().next(), Some("{\"n\":2,\"left\":0,\"pattern\":\"\"}"));

    let weak = stdout_of(&["weak", "enumerate", "-n", "2", "-k", "2"]);
    assert_eq!(weak.lines().count(), 4);

    assert_eq!(
        stdout_of(&["semibricks", "count", "-n", "2"]),
        "{\"n\":2,\"count\":6}\n"
    );

    let bricks = stdout_of(&["bricks", "list", "-n", "3", "--algebra", "eps=uu"]);
    assert_eq!(bricks.lines().count(), 6);
    assert!(bricks.lines().all(|l| l.contains("\"dims\"")));
}

#[test]
fn witness_lines_parse_back() {
    let out = stdout_of(&[
        "witness", "--x", "0:uoou", "--y", "1:uoou", "-n", "6", "--algebra", "preproj",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let parsed: arcbrick::json::WitnessJson = serde_json::from_str(line).unwrap();
        let w = arcbrick::witness::SesWitness::try_from(&parsed).unwrap();
        assert!(arcbrick::verify_ses(&w, &arcbrick::preprojective(6)).is_ok());
    }
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "-n", "3"]);
    assert!(ok.status.success());
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains("\"clean\":true"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["hom", "--src", "9:", "--dst", "0:", "-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["ext", "--x", "0:", "--y", "1:", "-n", "2", "--algebra", "wat"]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_guard_respects_the_environment() {
    let out = bin()
        .args(["arcs", "list", "-n", "6"])
        .env("ARCBRICK_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let ok = bin()
        .args(["arcs", "list", "-n", "6"])
        .env("ARCBRICK_MAX_N", "6")
        .output()
        .unwrap();
    assert!(ok.status.success());
}

#[test]
fn render_produces_svg() {
    let dir = std::env::temp_dir().join("arcbrick-render-test");
    std::fs::create_dir_all(&dir).unwrap();
    let diagram = dir.join("diagram.json");
    let out = dir.join("diagram.svg");
    std::fs::write(
        &diagram,
        r#"{"n":3,"arcs":[{"n":3,"left":0,"pattern":"o"},{"n":3,"left":1,"pattern":""}]}"#,
    )
    .unwrap();
    let status = run(&[
        "render",
        "--diagram",
        diagram.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 2);
}
