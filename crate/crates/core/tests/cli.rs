use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SMALL: &str = r#"
seed = 5

[shape]
nodes = 30
aspects = [{ size = 6, ordering = "ordered" }]

[dependency]
kind = "temporal"
p = 0.9

[null]
communities = 3
theta = 1.0

[edges]
k_min = 3.0
k_max = 12.0
mu = 0.2

[sweep]
mu = [0.1]
omega = [1.0]
rules = ["genlouvain"]
runs = 10
"#;

fn multinet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multinet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn generate_writes_three_files_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "c.toml", SMALL);
    let mut listings = Vec::new();
    for run in ["a", "b"] {
        let out_dir = dir.path().join(run);
        let out = multinet(&["--quiet", "generate", "--config", &config, "--out", out_dir.to_str().unwrap()]);
        assert!(out.status.success(), "{}", stderr(&out));
        let mut names: Vec<_> = fs::read_dir(&out_dir)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        assert_eq!(names, ["manifest.toml", "network.tsv", "partition.tsv"]);
        listings.push(names.iter().map(|n| fs::read(out_dir.join(n)).unwrap()).collect::<Vec<_>>());
    }
    assert_eq!(listings[0], listings[1]);

    let out_dir = dir.path().join("c");
    let out = multinet(&["generate", "--config", &config, "--out", out_dir.to_str().unwrap(), "--seed", "6"]);
    assert!(out.status.success());
    assert_ne!(fs::read(out_dir.join("network.tsv")).unwrap(), listings[0][1]);
}

#[test]
fn excessive_copy_mass_is_a_validation_error_naming_the_layer() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"
seed = 1

[shape]
nodes = 10
aspects = [{ size = 4, ordering = "unordered" }]

[dependency]
kind = "uniform_multiplex"
p_hat = 1.2

[null]
communities = 3
theta = 1.0

[edges]
k_min = 2.0
k_max = 5.0
mu = 0.1
"#;
    let config = write(dir.path(), "bad.toml", text);
    let out = multinet(&["generate", "--config", &config, "--out", dir.path().join("o").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("layer"), "{msg}");
}

#[test]
fn unknown_keys_and_missing_files_have_distinct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "typo.toml", &SMALL.replace("theta = 1.0", "theta = 1.0\nthetta = 2.0"));
    let out = multinet(&["generate", "--config", &config, "--out", dir.path().join("o").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("thetta"), "{}", stderr(&out));

    let missing = dir.path().join("nope.toml");
    let out = multinet(&["generate", "--config", missing.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn evaluate_reports_per_layer_nmi() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "c.toml", SMALL);
    let gen = dir.path().join("gen");
    assert!(multinet(&["--quiet", "generate", "--config", &config, "--out", gen.to_str().unwrap()]).status.success());
    let planted = gen.join("partition.tsv");

    let text = fs::read_to_string(&planted).unwrap();
    let permuted: String = text
        .lines()
        .map(|line| match line.rsplit_once('\t') {
            Some((head, label)) if !line.starts_with('#') => {
                format!("{head}\t{}\n", label.parse::<usize>().unwrap() + 100)
            }
            _ => format!("{line}\n"),
        })
        .collect();
    let permuted_path = write(dir.path(), "permuted.tsv", &permuted);
    let csv_path = dir.path().join("nmi.csv");
    let out = multinet(&[
        "evaluate",
        "--planted",
        planted.to_str().unwrap(),
        "--found",
        planted.to_str().unwrap(),
        &permuted_path,
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("run,layer,nmi"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 6 + 1);
    assert!(rows[..12].iter().all(|r| r.ends_with(",1")), "{csv}");
    assert_eq!(rows[12], "all,mean,1");

    let other = write(dir.path(), "short.tsv", "#multinet-partition v1\n1\t1\t1\n2\t1\t2\n");
    let out = multinet(&["evaluate", "--planted", planted.to_str().unwrap(), "--found", &other]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_emits_one_row_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "c.toml", SMALL);
    let out = multinet(&["--quiet", "sweep", "--config", &config]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "mu,omega,rule,run,mean_nmi");
    assert_eq!(lines.len(), 11);

    let out = multinet(&["--quiet", "sweep", "--config", &config, "--runs", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}

#[test]
fn change_point_config_is_accepted() {
    let text = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/change_points.toml")).unwrap();
    let config = multinet::io::parse_config(&text).unwrap();
    let tensor = config.dependency_tensor().unwrap();
    for layer in [25, 50, 75] {
        assert_eq!(tensor.get(layer - 2, layer - 1), 0.0);
    }
    assert_eq!(tensor.get(0, 1), 0.95);
}
