use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ecgraph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ecgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const K33: &str = "EFz_\n";

#[test]
fn check_line_level_two_on_k33() {
    let o = ecgraph(&["check", "--mode", "line", "--n", "2"], K33);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"level\":2,\"holds\":true,\"certificate\":null}\n"
    );
}

#[test]
fn check_line_level_three_fails() {
    let o = ecgraph(&["check", "--mode", "line", "--n", "3"], K33);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "{\"level\":3,\"holds\":false,\"certificate\":{\"A\":[],\"B\":[[0,3],[0,4],[0,5]]}}\n"
    );
}

#[test]
fn check_vertex_on_k4_gives_certificate() {
    let k4 = stdout(&ecgraph(&["construct", "family", "complete", "4"], ""));
    let o = ecgraph(&["check", "--mode", "vertex", "--n", "1"], &k4);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "{\"level\":1,\"holds\":false,\"certificate\":{\"A\":[],\"B\":[0]}}\n"
    );
}

#[test]
fn xi_values() {
    let p9 = stdout(&ecgraph(&["paley", "--q", "9"], ""));
    assert_eq!(stdout(&ecgraph(&["xi"], &p9)), "{\"value\":2}\n");
    let p5 = stdout(&ecgraph(&["paley", "--q", "5"], ""));
    assert_eq!(stdout(&ecgraph(&["xi"], &p5)), "{\"value\":1}\n");
    assert_eq!(stdout(&ecgraph(&["line-xi"], K33)), "{\"value\":2}\n");
}

#[test]
fn line_graph_of_k33_is_k3_square() {
    let l = stdout(&ecgraph(&["linegraph"], K33));
    let p9 = stdout(&ecgraph(&["paley", "--q", "9"], ""));
    assert_eq!(stdout(&ecgraph(&["xi"], &l)), "{\"value\":2}\n");
    let both = format!("{l}{p9}");
    let o = ecgraph(
        &["filter", "--format", "lines", "--filter", "two_ec"],
        &both,
    );
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn constructions_emit_graph6() {
    let cone = stdout(&ecgraph(&["construct", "cone"], K33));
    assert_eq!(stdout(&ecgraph(&["line-xi"], &cone)), "{\"value\":2}\n");
    let j = stdout(&ecgraph(&["construct", "join-indep", "--s", "2"], K33));
    assert_eq!(stdout(&ecgraph(&["line-xi"], &j)), "{\"value\":2}\n");
    assert_eq!(
        stdout(&ecgraph(&["construct", "multipartite", "3", "3"], "")),
        K33
    );
    let bad = ecgraph(&["construct", "family", "cycle", "2"], "");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_reports() {
    let o = ecgraph(&["search", "--name", "planar-2lec", "--max-order", "9"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["survivors"].as_array().unwrap().len(), 5);
    assert_eq!(v["name"], "planar_2lec");

    let o = ecgraph(
        &["search", "--name", "nine-edge-2lec", "--format", "lines"],
        "",
    );
    assert_eq!(stdout(&o), K33);
    let o = ecgraph(
        &[
            "search",
            "--name",
            "min-2ec",
            "--format",
            "lines",
            "--workers",
            "4",
        ],
        "",
    );
    assert_eq!(stdout(&o), "HBYleVS\n");
}

#[test]
fn hypergraph_commands() {
    let h = stdout(&ecgraph(
        &["hyper", "crossing", "--x", "3", "--y", "3", "--k", "2"],
        "",
    ));
    assert_eq!(h.lines().next(), Some("6 9"));
    let o = ecgraph(&["hyper", "check", "--n", "2"], &h);
    assert_eq!(o.status.code(), Some(0));
    let o = ecgraph(&["check", "--mode", "hyper", "--n", "2"], &h);
    assert_eq!(
        stdout(&o),
        "{\"level\":2,\"holds\":true,\"certificate\":null}\n"
    );
    let dual = stdout(&ecgraph(&["hyper", "star-dual"], K33));
    let back = stdout(&ecgraph(&["hyper", "line-graph"], &dual));
    let o = ecgraph(&["filter", "--format", "lines"], &format!("{back}{K33}"));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn enumerate_and_planar() {
    let o = ecgraph(
        &["enumerate", "--order", "4", "--all", "--filter", "one_ec"],
        "",
    );
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = ecgraph(&["enumerate", "--order", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 21);
    let k5 = stdout(&ecgraph(&["construct", "family", "complete", "5"], ""));
    assert_eq!(stdout(&ecgraph(&["planar"], &k5)), "{\"planar\":false}\n");
}

#[test]
fn errors_exit_with_status_two() {
    let o = ecgraph(&["nonsense"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = ecgraph(&["xi"], "C~~\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = ecgraph(&["filter"], "C~\nbad line\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = ecgraph(&["filter", "--lenient"], "C~\nbad line\n");
    assert_eq!(o.status.code(), Some(0));
    let o = ecgraph(&["search", "--name", "planar-3lec"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = ecgraph(&["check", "--mode", "vertex", "--n", "0"], K33);
    assert_eq!(o.status.code(), Some(2));
}
