use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn mcover(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mcover"))
        .args(args)
        .env_remove("MCOVER_LIMITS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mcover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn star6() -> String {
    stdout(&mcover(&["gen", "star", "--n", "6"], ""))
}

#[test]
fn gen_writes_spec_header() {
    let text = star6();
    assert!(text.starts_with("# gen star n=6\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 10);
}

#[test]
fn solve_tau_prints_value_and_certificate() {
    let o = mcover(&["solve", "--what", "tau", "-m", "2"], &star6());
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tau^(2) = 4"));
    assert_eq!(lines.filter(|l| l.ends_with(" 1/1")).count(), 4);
}

#[test]
fn gen_piped_into_tau_star() {
    let o = mcover(&["solve", "--what", "tau-star", "-m", "2"], &star6());
    assert_eq!(stdout(&o).lines().next(), Some("tau*^(2) = 5/2"));
    let o = mcover(&["solve", "--what", "nu-star", "-m", "2"], &star6());
    assert_eq!(stdout(&o).lines().next(), Some("nu*^(2) = 5/2"));
    let o = mcover(&["solve", "--what", "nu", "-m", "2"], &star6());
    assert_eq!(stdout(&o).lines().next(), Some("nu^(2) = 2"));
}

#[test]
fn in_and_out_files() {
    let input = temp_file("star6.hg", &star6());
    let out = input.with_extension("out");
    let o = mcover(
        &["solve", "--what", "tau", "-m", "2", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("tau^(2) = 4\n"));
}

#[test]
fn derive_is_pipe_composable() {
    let d = stdout(&mcover(&["derive", "-m", "2"], &star6()));
    let o = mcover(&["solve", "--what", "tau", "-m", "1"], &d);
    assert_eq!(stdout(&o).lines().next(), Some("tau^(1) = 4"));
}

#[test]
fn construct_with_trace() {
    let g42 = stdout(&mcover(&["gen", "g42"], ""));
    let o = mcover(&["construct", "g42", "--trace"], &g42);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("# 2-cover of size 4"));
    assert!(text.lines().filter(|l| l.starts_with('#')).count() > 2);
    let plain = stdout(&mcover(&["construct", "g42"], &g42));
    assert_eq!(plain.lines().filter(|l| l.starts_with('#')).count(), 1);
}

#[test]
fn construct_on_partite_input() {
    let c7 = stdout(&mcover(&["gen", "cycle7"], ""));
    assert!(mcover(&["construct", "mimic", "--trace"], &c7).status.success());
    let two = stdout(&mcover(&["gen", "random-partite", "--classes", "2,3,3", "--edges", "8", "--seed", "4"], ""));
    assert!(mcover(&["construct", "tunu"], &two).status.success());
    let o = mcover(&["construct", "mimic"], &star6());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sunflower_output_parses() {
    let h = "1 2 3 4\n1 2 5 6\n1 2 7 8\n1 2 9 10\n1 2 11 12\n";
    let o = mcover(&["construct", "sunflower", "-m", "2"], h);
    assert!(o.status.success());
    let back = mcover(&["solve", "--what", "nu", "-m", "2"], &stdout(&o));
    assert_eq!(stdout(&back).lines().next(), Some("nu^(2) = 1"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(mcover(&["solve", "--what", "tau", "-m", "2"], "1 2 3\n1 2\n").status.code(), Some(2));
    assert_eq!(mcover(&["solve", "--what", "tau", "-m", "4"], &star6()).status.code(), Some(2));
    assert_eq!(mcover(&["nonsense"], "").status.code(), Some(2));
    assert_eq!(mcover(&["gen", "nonsense"], "").status.code(), Some(2));
    assert_eq!(mcover(&["construct", "g42"], &star6()).status.code(), Some(2));
    assert_eq!(mcover(&["verify", "--only", "nope"], "").status.code(), Some(2));
}

#[test]
fn limit_flag_and_env_var() {
    let o = mcover(&["solve", "--what", "tau-star", "-m", "2", "--limit-nonzeros", "3"], &star6());
    assert_eq!(o.status.code(), Some(2));
    let mut child = Command::new(env!("CARGO_BIN_EXE_mcover"))
        .args(["solve", "--what", "tau-star", "-m", "2"])
        .env("MCOVER_LIMITS", "nonzeros=3")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(star6().as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size limit"));
}

#[test]
fn verify_single_row() {
    let o = mcover(&["verify", "--suite", "paper", "--only", "g42"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("PASS g42"));
    assert!(text.contains("1 checks: 1 passed, 0 failed"));
}

#[test]
fn corrupted_golden_fails() {
    let goldens = temp_file("goldens.txt", "# wrong on purpose\ng42.tau = 5\n");
    let o = mcover(&["verify", "--only", "g42", "--goldens", goldens.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("1 checks: 0 passed, 1 failed"));
    let unknown = temp_file("unknown.txt", "g43.tau = 5\n");
    let o = mcover(&["verify", "--goldens", unknown.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn full_suite_passes() {
    let o = mcover(&["verify", "--suite", "paper"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("11 checks: 11 passed, 0 failed"));
}

#[test]
fn search_replays_and_stays_below_two() {
    let args = ["search", "-k", "3", "-m", "2", "-n", "6", "--iters", "1000", "--seed", "1"];
    let a = mcover(&args, "");
    let b = mcover(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().any(|l| l.starts_with("# record ratio=2/1")));
    let tail = text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    let o = mcover(&["solve", "--what", "tau", "-m", "2"], &tail);
    assert!(o.status.success());
}

#[test]
fn exhaustive_search_caps() {
    let o = mcover(&["search", "-k", "4", "-m", "3", "-n", "5", "--exhaustive"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("# best tau^(3)/nu^(3) = 3/1"));
    let o = mcover(&["search", "-k", "3", "-m", "2", "-n", "7", "--exhaustive"], "");
    assert_eq!(o.status.code(), Some(2));
}
