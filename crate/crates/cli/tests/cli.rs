use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltabound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn solve_prints_header_and_row() {
    let o = run(&["solve", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,k,energy"));
    let r = rows(&text);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0][0], 1.0);
    assert!((r[0][1] - 1.29622).abs() < 1e-5);
    assert!((r[0][2] + 0.840093).abs() < 1e-5);
    // Six decimals on every field.
    let row = text.lines().nth(1).unwrap();
    assert!(row
        .split(',')
        .all(|f| f.split('.').nth(1).map(str::len) == Some(6)));
}

#[test]
fn solve_row_three() {
    let o = run(&["solve", "--x", "3"]);
    let r = rows(&stdout(&o));
    assert!((r[0][1] - 1.412450).abs() <= 1e-5);
}

#[test]
fn solve_rejects_nonpositive_x() {
    let o = run(&["solve", "--x", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["solve"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["sweep", "--x-min", "3", "--x-max", "1", "--steps", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["sweep", "--x-min", "1", "--x-max", "2", "--steps", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["oracle", "--dim", "3"]).status.code(), Some(1));
}

#[test]
fn help_lists_units() {
    for (cmd, flags) in [
        ("solve", &["--x", "--tol"][..]),
        (
            "sweep",
            &["--x-min", "--x-max", "--steps", "--tol", "--out"][..],
        ),
        (
            "oracle",
            &[
                "--dim", "--alpha", "--lambda", "--grid-n", "--box", "--tol", "--out",
            ][..],
        ),
        (
            "compare",
            &[
                "--x-min", "--x-max", "--steps", "--grid-n", "--box", "--tol",
            ][..],
        ),
        ("plot", &["--input", "--column", "--out", "--format"][..]),
    ] {
        let o = run(&[cmd, "--help"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        for flag in flags {
            assert!(text.contains(flag), "{cmd} help lacks {flag}");
        }
        if cmd != "plot" {
            assert!(
                text.contains("bohr") || text.contains("hartree"),
                "{cmd} help lacks units"
            );
        }
    }
}

#[test]
fn sweep_row_count_and_range() {
    for steps in [1usize, 2, 7, 25] {
        let o = run(&[
            "sweep",
            "--x-min",
            "0.5",
            "--x-max",
            "4",
            "--steps",
            &steps.to_string(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let r = rows(&stdout(&o));
        assert_eq!(r.len(), steps);
        assert_eq!(r[0][0], 0.5);
        if steps > 1 {
            assert_eq!(r[steps - 1][0], 4.0);
        }
    }
    let o = run(&["sweep", "--x-min", "2", "--x-max", "2", "--steps", "1"]);
    let r = rows(&stdout(&o));
    assert_eq!(r.len(), 1);
    assert_eq!(r[0][0], 2.0);
}

#[test]
fn sweep_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = run(&[
        "sweep",
        "--x-min",
        "1",
        "--x-max",
        "10",
        "--steps",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(rows(&text).len(), 10);
}

#[test]
fn oracle_json_1d() {
    let o = run(&[
        "oracle", "--dim", "1", "--alpha", "1", "--grid-n", "2001", "--box", "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["energy"].as_f64().unwrap() + 0.5).abs() < 0.01);
    assert_eq!(v["grid_n"], 2001);
    assert_eq!(v["box"], 10.0);
}

#[test]
fn oracle_json_2d_uncorrelated() {
    let o = run(&[
        "oracle", "--dim", "2", "--lambda", "0", "--grid-n", "201", "--box", "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["energy"].as_f64().unwrap() + 1.0).abs() < 0.03);
    assert_eq!(v["lambda"], 0.0);
}

#[test]
fn oracle_rejects_even_grid() {
    let o = run(&["oracle", "--dim", "2", "--grid-n", "160", "--box", "12"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_convergence_failure_exits_two() {
    let o = run(&[
        "oracle", "--dim", "1", "--grid-n", "31", "--box", "4", "--tol", "1e-30",
    ]);
    assert_eq!(
        o.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn oracle_wavefunction_dump() {
    let dir = tempfile::tempdir().unwrap();
    let wf = dir.path().join("psi.bin");
    let o = run(&[
        "oracle",
        "--dim",
        "2",
        "--grid-n",
        "41",
        "--box",
        "6",
        "--wavefunction",
        wf.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let bytes = std::fs::read(&wf).unwrap();
    assert_eq!(bytes.len(), 24 + 8 * 41 * 41);
    let word = |i: usize| u64::from_le_bytes(bytes[8 * i..8 * i + 8].try_into().unwrap());
    assert_eq!((word(0), word(1), word(2)), (2, 41, 41));
}

#[test]
fn compare_has_one_oracle_row_per_lambda() {
    let o = run(&[
        "compare", "--x-min", "1", "--x-max", "10", "--steps", "10", "--grid-n", "101", "--box",
        "10",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("kind,x,lambda,k,energy,delta"));
    let model: Vec<Vec<&str>> = text
        .lines()
        .filter(|l| l.starts_with("model"))
        .map(|l| l.split(',').collect())
        .collect();
    let oracle: Vec<Vec<&str>> = text
        .lines()
        .filter(|l| l.starts_with("oracle"))
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(model.len(), 10);
    assert_eq!(oracle.len(), 2);
    assert_eq!(oracle[0][2], "0.000000");
    assert_eq!(oracle[1][2], "1.000000");
    // Model E(x = 10) ≈ −1 and oracle E(λ = 0) share the uncorrelated limit.
    let e_model: f64 = model[9][4].parse().unwrap();
    let e_oracle: f64 = oracle[0][4].parse().unwrap();
    assert!((e_model - e_oracle).abs() < 0.03);
    assert!(!o.stderr.is_empty());
}

#[test]
fn compare_without_model_rows() {
    let o = run(&["compare", "--steps", "0", "--grid-n", "41", "--box", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
}

fn write_sweep(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("sweep.csv");
    let o = run(&[
        "sweep",
        "--x-min",
        "1",
        "--x-max",
        "10",
        "--steps",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    path
}

fn plotted_points(svg: &str) -> Vec<(f64, f64)> {
    svg.lines()
        .filter(|l| l.starts_with("<circle"))
        .map(|l| {
            let attr = |name: &str| -> f64 {
                let start = l.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
                l[start..].split('"').next().unwrap().parse().unwrap()
            };
            (attr("cx"), attr("cy"))
        })
        .collect()
}

#[test]
fn plot_k_rises_and_energy_falls() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_sweep(dir.path());
    let out = dir.path().join("k.svg");
    let o = run(&[
        "plot",
        "--input",
        input.to_str().unwrap(),
        "--column",
        "k",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let pts = plotted_points(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(pts.len(), 10);
    // SVG y grows downward: rising k means nonincreasing cy.
    assert!(pts.windows(2).all(|w| w[1].0 > w[0].0 && w[1].1 <= w[0].1));
    assert!(pts[0].1 - pts[1].1 > pts[8].1 - pts[9].1);

    let out = dir.path().join("e.svg");
    let o = run(&[
        "plot",
        "--input",
        input.to_str().unwrap(),
        "--column",
        "energy",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let pts = plotted_points(&std::fs::read_to_string(&out).unwrap());
    assert!(pts.windows(2).all(|w| w[1].1 >= w[0].1));
}

#[test]
fn plot_gnuplot_format() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_sweep(dir.path());
    let out = dir.path().join("k.gp");
    let o = run(&[
        "plot",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--format",
        "gnuplot",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("$data << EOD"));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
            .count(),
        10
    );
}

#[test]
fn plot_rejects_empty_and_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.svg");
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "x,k,energy\n").unwrap();
    let o = run(&[
        "plot",
        "--input",
        empty.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let blank = dir.path().join("blank.csv");
    std::fs::write(&blank, "").unwrap();
    let o = run(&[
        "plot",
        "--input",
        blank.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "x,k,energy\n1.0,abc,-0.5\n").unwrap();
    let o = run(&[
        "plot",
        "--input",
        bad.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let missing = dir.path().join("nope.csv");
    let o = run(&[
        "plot",
        "--input",
        missing.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}
