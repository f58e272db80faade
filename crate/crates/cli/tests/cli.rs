use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greedy-mis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const K5: &str = "p edge 5 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n";

#[test]
fn solve_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k5.col", K5);
    let o = bin(&["solve", "--graph", &g, "--heuristic", "a", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("size=1\n"), "{}", stdout(&o));
}

#[test]
fn solve_without_seed_sets_is_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k5.col", K5);
    let o = bin(&["solve", "--graph", &g, "--heuristic", "b", "--k", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn oracle_reports_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.col", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let o = bin(&["oracle", "--graph", &g, "--timeout", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alpha=2\n"));
}

#[test]
fn formula_line() {
    let o = bin(&["formula", "--n", "10", "--k", "1"]);
    assert_eq!(stdout(&o), "tau=2640 log=3.42\n");
    let o = bin(&["formula", "--n", "10", "--k", "10"]);
    assert_eq!(stdout(&o), "tau=0 log=-\n");
}

#[test]
fn generate_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    let p = path.to_str().unwrap();
    let o = bin(&["generate", "--n", "20", "--m", "80", "--seed", "7", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p edge 20 80\n"));
    assert_eq!(text.lines().count(), 81);
    let again = bin(&["generate", "--n", "20", "--m", "80", "--seed", "7"]);
    assert_eq!(stdout(&again), text);
    assert_eq!(bin(&["solve", "--graph", p]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["solve", "--bogus"]).status.code(), Some(1));
    assert_eq!(bin(&[]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["solve", "--graph", "/nonexistent/x.col"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.col", "p edge 3 1\ne 1 9\n");
    let o = bin(&["solve", "--graph", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(bin(&["generate", "--n", "5", "--m", "11"]).status.code(), Some(3));
    assert_eq!(bin(&["experiment", "failure", "--n", "20", "--algos", "c1"]).status.code(), Some(1));
    assert_eq!(bin(&["experiment", "failure", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn failure_experiment_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let outs: Vec<Vec<u8>> = ["1", "2"]
        .iter()
        .map(|jobs| {
            let p = dir.path().join(format!("f{jobs}.csv"));
            let o = bin(&[
                "experiment", "failure", "--n", "20", "--m", "80", "--runs", "1000", "--seed", "1",
                "--algos", "a1,b1,a2,b2", "--out", p.to_str().unwrap(), "--jobs", jobs,
            ]);
            assert_eq!(o.status.code(), Some(0));
            std::fs::read(p).unwrap()
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    let text = String::from_utf8(outs[0].clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,runs,algorithm,failures,ratio");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("20,80,1000,a1,"));
}

#[test]
fn accuracy_experiment_with_rule() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("acc.csv");
    let o = bin(&[
        "experiment", "accuracy", "--n", "16,20", "--m-rule", "4n", "--runs", "50", "--algos", "a1",
        "--timeout", "30", "--out", p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(p).unwrap();
    assert!(text.starts_with("n,m,runs,algorithm,gap,count\n16,64,50,a1,0,"));
}

#[test]
fn workload_experiment_writes_plot() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("w.csv");
    let svg = dir.path().join("w.svg");
    let o = bin(&[
        "experiment", "workload", "--n", "50", "--m-rule", "sweep", "--runs", "1",
        "--out", csv.to_str().unwrap(), "--plot", svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=50 k=1 max w_b/w_a="));
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 24);
    let plot = std::fs::read_to_string(svg).unwrap();
    assert!(plot.starts_with("<svg") && plot.contains("<polyline"));
}
