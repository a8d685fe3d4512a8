//! End-to-end tests of the command-line surface: determinism of generation,
//! lossless save/load, reduce/verify round trips, chain execution, exit
//! codes, and the negative control on a hand-corrupted reduction output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_strred"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "stderr: {}\nstdout: {}",
        String::from_utf8_lossy(&out.stderr),
        String::from_utf8_lossy(&out.stdout)
    );
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> TempDir {
        let dir = std::env::temp_dir().join(format!("strred-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        TempDir(dir)
    }

    fn file(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn gen_dm(dir: &TempDir, name: &str, seed: u64, extra: &[&str]) -> PathBuf {
    let path = dir.file(name);
    let mut args = vec![
        "gen", "dm", "--n", "64", "--k", "4", "--m", "5", "--seed",
    ];
    let seed = seed.to_string();
    args.push(&seed);
    args.extend(extra);
    args.push("-o");
    let path_str = path.to_str().unwrap().to_owned();
    args.push(&path_str);
    assert_ok(&run(&args));
    path
}

#[test]
fn generation_is_deterministic() {
    let dir = TempDir::new("det");
    let a = gen_dm(&dir, "a.json", 7, &[]);
    let b = gen_dm(&dir, "b.json", 7, &[]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let c = gen_dm(&dir, "c.json", 8, &[]);
    assert_ne!(std::fs::read(&a).unwrap(), std::fs::read(&c).unwrap());
}

#[test]
fn save_load_is_lossless() {
    let dir = TempDir::new("lossless");
    let a = gen_dm(&dir, "a.json", 12, &["--periodic-rich"]);
    let body = std::fs::read(&a).unwrap();
    let loaded = strred_cli::file::InstanceFile::load(&a).unwrap();
    let b = dir.file("resaved.json");
    loaded.save(&b).unwrap();
    assert_eq!(body, std::fs::read(&b).unwrap());
    let parsed: serde_json::Value =
        serde_json::from_slice(&body).unwrap();
    assert_eq!(parsed["provenance"]["generator"], "chacha12");
}

#[test]
fn periodic_rich_plants_a_long_run(){
    let dir = TempDir::new("rich");
    let a = gen_dm(&dir, "a.json", 3, &["--periodic-rich"]);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let text: Vec<u64> =
        parsed["payload"]["text"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let m = 5;
    // Some period <= 3 must cover a window of length >= 3m.
    let has_run = (1..=3usize).any(|p| {
        let mut best = p;
        let mut current = p;
        for i in p..text.len() {
            if text[i] == text[i - p] {
                current += 1;
            } else {
                current = p;
            }
            best = best.max(current);
        }
        best >= 3 * m
    });
    assert!(has_run);
}

#[test]
fn infeasible_parameters_are_rejected() {
    let dir = TempDir::new("infeasible");
    let path = dir.file("x.json");
    let out = run(&[
        "gen", "dm", "--n", "64", "--k", "40", "--m", "5", "--seed", "1", "-o",
        path.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("32 distinct patterns"), "stderr: {stderr}");
}

#[test]
fn unknown_edges_list_the_valid_ones() {
    let dir = TempDir::new("edges");
    let a = gen_dm(&dir, "a.json", 5, &[]);
    let out = run(&["reduce", "dm-bwt", a.to_str().unwrap(), "-o", dir.file("o.json").to_str().unwrap()]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("dm-rlbwt") && stderr.contains("rps-cci"), "stderr: {stderr}");
}

#[test]
fn every_edge_reduces_and_verifies() {
    let dir = TempDir::new("all-edges");
    let dm = gen_dm(&dir, "dm.json", 21, &[]);
    let dm = dm.to_str().unwrap();
    for (edge, binary) in [
        ("dm-lz", false),
        ("dm-lz", true),
        ("dm-rlbwt", false),
        ("dm-rlbwt", true),
        ("dm-isa", false),
        ("dm-isa", true),
        ("dm-lcf", false),
        ("dm-lcf", true),
        ("dm-lpf", false),
        ("dm-lpf", true),
        ("dm-sn", false),
    ] {
        let out_path = dir.file(&format!("{edge}-{binary}.json"));
        let mut args = vec!["reduce", edge, dm, "-o", out_path.to_str().unwrap()];
        if binary {
            args.push("--binary");
        }
        assert_ok(&run(&args));
        let verify = run(&["verify", out_path.to_str().unwrap()]);
        assert_ok(&verify);
        let text = String::from_utf8_lossy(&verify.stdout);
        assert!(text.contains("pass"), "{text}");
    }
    // Continue down the chain from the string-nesting output.
    let sn = dir.file("dm-sn-false.json");
    let back = dir.file("sn-dm.json");
    assert_ok(&run(&["reduce", "sn-dm", sn.to_str().unwrap(), "-o", back.to_str().unwrap()]));
    assert_ok(&run(&["verify", back.to_str().unwrap()]));
    let rps = dir.file("rps.json");
    assert_ok(&run(&["reduce", "sn-rps", sn.to_str().unwrap(), "-o", rps.to_str().unwrap()]));
    assert_ok(&run(&["verify", rps.to_str().unwrap()]));
    let cci = dir.file("cci.json");
    assert_ok(&run(&["reduce", "rps-cci", rps.to_str().unwrap(), "-o", cci.to_str().unwrap()]));
    assert_ok(&run(&["verify", cci.to_str().unwrap()]));
    let ci = dir.file("ci.json");
    assert_ok(&run(&["reduce", "cci-ci", cci.to_str().unwrap(), "-o", ci.to_str().unwrap()]));
    assert_ok(&run(&["verify", ci.to_str().unwrap()]));
}

#[test]
fn ci_round_trip_through_cci() {
    let dir = TempDir::new("ci-cci");
    let ci = dir.file("ci.json");
    assert_ok(&run(&[
        "gen", "ci", "--n", "48", "--seed", "5", "-o", ci.to_str().unwrap(),
    ]));
    let cci = dir.file("cci.json");
    assert_ok(&run(&["reduce", "ci-cci", ci.to_str().unwrap(), "-o", cci.to_str().unwrap()]));
    let verify = run(&["verify", cci.to_str().unwrap()]);
    assert_ok(&verify);
    assert!(String::from_utf8_lossy(&verify.stdout).contains("pass"));
}

#[test]
fn pipeline_exit_code_reflects_passing_hops() {
    let dir = TempDir::new("pipeline");
    for seed in [1u64, 2, 3] {
        let dm = gen_dm(&dir, &format!("p{seed}.json"), seed, &[]);
        let out = run(&[
            "pipeline", "--chain", "dm,sn,rps,cci,ci", dm.to_str().unwrap(), "--report", "json",
        ]);
        assert_ok(&out);
        let reports: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("json report");
        let hops = reports.as_array().unwrap();
        assert_eq!(hops.len(), 4);
        assert!(hops.iter().all(|h| h["pass"] == true));
    }
    // A chain that does not start at the instance kind is rejected.
    let dm = gen_dm(&dir, "bad.json", 4, &[]);
    let out = run(&["pipeline", "--chain", "sn,rps", dm.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn corrupted_reduction_outputs_fail_verification() {
    let dir = TempDir::new("corrupt");
    let dm = gen_dm(&dir, "dm.json", 33, &[]);
    let lz = dir.file("lz.json");
    assert_ok(&run(&["reduce", "dm-lz", dm.to_str().unwrap(), "-o", lz.to_str().unwrap()]));

    // Corrupt the gadget past the measured prefix (its last symbol); the
    // difference leaves the {2k, 2k+1} dichotomy or decodes wrongly.
    let mut parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&lz).unwrap()).unwrap();
    let texts = parsed["payload"]["texts"].as_array_mut().unwrap();
    let symbols = texts[0].as_array_mut().unwrap();
    let last = symbols.len() - 1;
    let old = symbols[last].as_u64().unwrap();
    symbols[last] = serde_json::Value::from(if old == 5 { 6 } else { 5 });
    std::fs::write(&lz, serde_json::to_string_pretty(&parsed).unwrap()).unwrap();

    let out = run(&["verify", lz.to_str().unwrap()]);
    assert!(!out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL") || text.is_empty(), "{text}");
}

#[test]
fn oracle_subcommand_reports_answers() {
    let dir = TempDir::new("oracle");
    let dm = gen_dm(&dir, "dm.json", 9, &[]);
    let out = run(&["oracle", "dm", dm.to_str().unwrap()]);
    assert_ok(&out);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("answer: YES") || text.contains("answer: NO"));
    // Kind mismatch is rejected.
    let out = run(&["oracle", "sn", dm.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn verify_reports_are_deterministic_modulo_timing() {
    let dir = TempDir::new("repdet");
    let dm = gen_dm(&dir, "dm.json", 77, &[]);
    let lz = dir.file("lz.json");
    assert_ok(&run(&["reduce", "dm-lz", dm.to_str().unwrap(), "-o", lz.to_str().unwrap()]));
    let strip_timing = |raw: &[u8]| -> String {
        String::from_utf8_lossy(raw)
            .lines()
            .map(|l| {
                match l.find("  (") {
                    Some(at) => l[..at].to_owned(),
                    None => l.to_owned(),
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run(&["verify", lz.to_str().unwrap()]);
    let b = run(&["verify", lz.to_str().unwrap()]);
    assert_ok(&a);
    assert_eq!(strip_timing(&a.stdout), strip_timing(&b.stdout));
}

fn corrupt_and_expect_failure(path: &Path, mutate: impl FnOnce(&mut serde_json::Value)) {
    let mut parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    mutate(&mut parsed);
    std::fs::write(path, serde_json::to_string_pretty(&parsed).unwrap()).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn corrupted_cci_difference_fails() {
    let dir = TempDir::new("corrupt-cci");
    let dm = gen_dm(&dir, "dm.json", 55, &[]);
    let sn = dir.file("sn.json");
    assert_ok(&run(&["reduce", "dm-sn", dm.to_str().unwrap(), "-o", sn.to_str().unwrap()]));
    let rps = dir.file("rps.json");
    assert_ok(&run(&["reduce", "sn-rps", sn.to_str().unwrap(), "-o", rps.to_str().unwrap()]));
    let cci = dir.file("cci.json");
    assert_ok(&run(&["reduce", "rps-cci", rps.to_str().unwrap(), "-o", cci.to_str().unwrap()]));
    corrupt_and_expect_failure(&cci, |v| {
        let values = v["payload"]["values"].as_array_mut().unwrap();
        let last = values.len() - 1;
        values.swap(0, last);
    });
}

#[test]
fn every_kind_generates_and_reports() {
    let dir = TempDir::new("kinds");
    for kind in ["dm", "sn", "rps", "cci", "ci", "text"] {
        let path = dir.file(&format!("{kind}.json"));
        assert_ok(&run(&[
            "gen", kind, "--n", "24", "--k", "3", "--m", "4", "--seed", "11", "-o",
            path.to_str().unwrap(),
        ]));
        assert_ok(&run(&["verify", path.to_str().unwrap()]));
        assert_ok(&run(&["oracle", kind, path.to_str().unwrap()]));
    }
}

#[test]
fn kind_payload_mismatch_is_rejected_on_load() {
    let dir = TempDir::new("mismatch");
    let dm = gen_dm(&dir, "dm.json", 13, &[]);
    let mut parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&dm).unwrap()).unwrap();
    parsed["kind"] = serde_json::Value::from("sn");
    std::fs::write(&dm, serde_json::to_string_pretty(&parsed).unwrap()).unwrap();
    let out = run(&["verify", dm.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("kind"));
}

#[test]
fn corrupted_probe_parameters_fail_gracefully() {
    let dir = TempDir::new("corrupt-probe");
    let dm = gen_dm(&dir, "dm.json", 64, &[]);
    let isa = dir.file("isa.json");
    assert_ok(&run(&["reduce", "dm-isa", dm.to_str().unwrap(), "-o", isa.to_str().unwrap()]));
    let mut parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&isa).unwrap()).unwrap();
    parsed["reduction"]["decode"]["alpha"] = serde_json::Value::from(1_000_000u64);
    std::fs::write(&isa, serde_json::to_string_pretty(&parsed).unwrap()).unwrap();
    let out = run(&["verify", isa.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("probe"));
}

#[test]
fn pipeline_sweep_over_one_hundred_seeds() {
    let dir = TempDir::new("sweep");
    for seed in 1u64..=100 {
        let path = dir.file("i.json");
        assert_ok(&run(&[
            "gen", "dm", "--n", "48", "--k", "3", "--m", "4", "--seed",
            &seed.to_string(), "-o", path.to_str().unwrap(),
        ]));
        let out = run(&["pipeline", "--chain", "dm,sn,rps,cci,ci", path.to_str().unwrap()]);
        assert!(out.status.success(), "seed {seed} failed");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("4/4 checks passed"), "seed {seed}: {text}");
    }
}
