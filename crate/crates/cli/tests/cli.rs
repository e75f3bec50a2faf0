use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxleaf"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("maxleaf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_approx_verify_round_trip() {
    let g = scratch("t3.txt");
    let t = scratch("t3.tree");
    let o = run(&["gen", "--family", "t_l", "--size", "3", "-o", g.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["approx", g.to_str().unwrap(), "--tree", t.to_str().unwrap()]);
    assert!(o.status.success());
    let report = stdout(&o);
    let leaves: usize = report
        .lines()
        .find_map(|l| l.strip_prefix("leaves="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(report.contains("chosen="));
    let o = run(&["verify", g.to_str().unwrap(), t.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), format!("valid leaves={leaves}"));
    let o = run(&["exact", g.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("maxleaf=4 "));
}

#[test]
fn decide_reports_witness() {
    let g = scratch("star.txt");
    let w = scratch("star.tree");
    run(&["gen", "--family", "star", "--size", "4", "-o", g.to_str().unwrap()]);
    let o = run(&["decide", g.to_str().unwrap(), "-k", "1", "--witness", w.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "TRUE leaves=4");
    let o = run(&["verify", g.to_str().unwrap(), w.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "valid leaves=4");
    let o = run(&["decide", g.to_str().unwrap(), "-k", "3"]);
    assert!(stdout(&o).starts_with("REDUCED"));
}

#[test]
fn malformed_input_exits_2() {
    let g = scratch("bad.txt");
    std::fs::write(&g, "3 2 0\n0 1\n1 q\n").unwrap();
    let o = run(&["approx", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn unreachable_vertex_exits_3() {
    let g = scratch("disc.txt");
    std::fs::write(&g, "3 1 0\n0 1\n").unwrap();
    assert_eq!(run(&["approx", g.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(stdout(&run(&["decide", g.to_str().unwrap(), "-k", "1"])).trim(), "FALSE");
}

#[test]
fn all_roots_finds_a_source() {
    let g = scratch("rev.txt");
    // only vertex 2 reaches everything
    std::fs::write(&g, "3 2 0\n2 0\n2 1\n").unwrap();
    assert_eq!(run(&["approx", g.to_str().unwrap()]).status.code(), Some(3));
    let o = run(&["approx", g.to_str().unwrap(), "--all-roots"]);
    assert!(stdout(&o).starts_with("root=2\n"));
}

#[test]
fn invalid_tree_is_rejected() {
    let g = scratch("path.txt");
    let t = scratch("path.tree");
    std::fs::write(&g, "3 2 0\n0 1\n1 2\n").unwrap();
    std::fs::write(&t, "3 0\n1 0\n2 0\n").unwrap();
    let o = run(&["verify", g.to_str().unwrap(), t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn bench_writes_csv() {
    let o = run(&["bench", "--family", "random", "--size", "8", "--count", "5", "--seed", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("instance,n,m,l,h,exact,approx,ratio"));
    assert_eq!(lines.count(), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("worst_ratio="));
}

#[test]
fn kernelize_writes_reduced_graph_and_trace() {
    let g = scratch("chain.txt");
    let r = scratch("chain.red");
    let tr = scratch("chain.trace");
    run(&["gen", "--family", "bipath_chain", "--size", "7", "-o", g.to_str().unwrap()]);
    let o = run(&[
        "kernelize",
        g.to_str().unwrap(),
        "-o",
        r.to_str().unwrap(),
        "--trace",
        tr.to_str().unwrap(),
    ]);
    assert!(stdout(&o).contains("reduced_n=9"));
    let trace = std::fs::read_to_string(&tr).unwrap();
    assert_eq!(trace.lines().filter(|l| l.starts_with("rule2")).count(), 3);
    let reduced = std::fs::read_to_string(&r).unwrap();
    assert!(reduced.contains("# label"));
    assert!(run(&["exact", r.to_str().unwrap()]).status.success());
}
