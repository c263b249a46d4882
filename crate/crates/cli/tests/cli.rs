use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn wig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wig"))
        .args(args)
        .output()
        .expect("failed to run wig")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const P5: &str = "wig 1 interval\n5\n1 3\n2 5\n4 7\n6 9\n8 10\n";

#[test]
fn compute_plain_and_json() {
    let p = scratch("p5.wig", P5);
    let input = p.to_str().unwrap();
    for algo in ["specialized", "oracle"] {
        let o = wig(&["compute", "--input", input, "--algo", algo]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "20\n");
    }
    let o = wig(&[
        "compute",
        "--input",
        input,
        "--format",
        "json",
        "--parallel",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["wiener"], 20);
    assert_eq!(v["class"], "interval");
    assert_eq!(v["algo"], "specialized");
    assert!(v["max_vertex_visits"].as_u64().unwrap() <= 40);
}

#[test]
fn compute_distances() {
    let p = scratch("path3.wig", "wig 1 permutation\n3\n3 1 2\n");
    let o = wig(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--emit",
        "distances",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 2 1\n2 0 1\n1 1 0\n");
}

#[test]
fn circular_arc_oracle() {
    let p = scratch("c4.wig", "wig 1 circular-arc\n4 8\n0 2\n2 4\n4 6\n6 0\n");
    let o = wig(&[
        "compute",
        "--input",
        p.to_str().unwrap(),
        "--algo",
        "oracle",
    ]);
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn exit_codes() {
    let dis = scratch("dis.wig", "wig 1 permutation\n4\n2 1 4 3\n");
    let o = wig(&["compute", "--input", dis.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("disconnected"));

    let bad = scratch("bad.wig", "wig 1 interval\n2\n5 3\n1 2\n");
    let o = wig(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"));
    assert_eq!(
        wig(&["validate", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let k4 = scratch(
        "k4.wig",
        "wig 1 cactus\n4 6\n1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n",
    );
    assert_eq!(
        wig(&["validate", "--input", k4.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let split = scratch("split.wig", "wig 1 cactus\n4 2\n1 2 1\n3 4 1\n");
    assert_eq!(
        wig(&["validate", "--input", split.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    let big = scratch(
        "big.wig",
        "wig 1 cactus\n3 2\n1 2 9223372036854775807\n2 3 9223372036854775807\n",
    );
    let o = wig(&["compute", "--input", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn gen_validate_convert() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let out = dir.join("gen.wig");
    let out_s = out.to_str().unwrap();
    let args = [
        "gen",
        "--class",
        "interval",
        "--n",
        "40",
        "--seed",
        "9",
        "--connected",
        "--out",
        out_s,
    ];
    assert_eq!(wig(&args).status.code(), Some(0));
    let first = fs::read(&out).unwrap();
    assert_eq!(wig(&args).status.code(), Some(0));
    assert_eq!(fs::read(&out).unwrap(), first);

    let o = wig(&["validate", "--input", out_s]);
    assert_eq!(stdout(&o), "ok interval n=40\n");

    let native = stdout(&wig(&["compute", "--input", out_s]));
    for to in ["trapezoid", "circular-arc"] {
        let conv = dir.join(format!("gen-{to}.wig"));
        let conv_s = conv.to_str().unwrap();
        let o = wig(&["convert", "--input", out_s, "--to", to, "--out", conv_s]);
        assert_eq!(o.status.code(), Some(0));
        assert!(fs::read_to_string(&conv)
            .unwrap()
            .starts_with(&format!("wig 1 {to}\n")));
        assert_eq!(stdout(&wig(&["compute", "--input", conv_s])), native);
    }

    let perm = scratch("perm.wig", "wig 1 permutation\n3\n3 1 2\n");
    let o = wig(&[
        "convert",
        "--input",
        perm.to_str().unwrap(),
        "--to",
        "circular-arc",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_stdout_and_params() {
    let o = wig(&[
        "gen",
        "--class",
        "cactus",
        "--n",
        "12",
        "--seed",
        "4",
        "--weight-min",
        "5",
        "--weight-max",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("wig 1 cactus\n12 "));
    assert!(text.lines().skip(2).all(|l| l.ends_with(" 5")));
    let o = wig(&["gen", "--class", "cactus", "--n", "5", "--weight-min", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wig(&["gen", "--class", "nope", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_csv() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("bench.csv");
    let o = wig(&[
        "bench",
        "--class",
        "interval",
        "--n-start",
        "256",
        "--n-end",
        "1024",
        "--oracle-cutoff",
        "512",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("class,n,algo,wiener,vertex_visits,layers,wall_ms")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for pair in rows.chunks(2) {
        let n: u64 = pair[0][1].parse().unwrap();
        assert!(pair[0][4].parse::<u64>().unwrap() <= 8 * n);
        if n <= 512 {
            assert_eq!(pair[0][3], pair[1][3]);
        } else {
            assert_eq!(pair[1][3], "skipped");
        }
    }
}
