//! End-to-end runs of the binary: caching, canonical reports and exit codes.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpora() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora")
}

fn torsidl(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torsidl"))
        .args(args)
        .env("TORSIDL_CACHE", cache)
        .env_remove("TORSIDL_CORPORA")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn corpus(name: &str) -> String {
    corpora().join(name).display().to_string()
}

#[test]
fn window_build_caches_by_content_hash() {
    let cache = tempfile::tempdir().unwrap();
    let built = json(&torsidl(&["window", "build", "--corpus", &corpus("a2")], cache.path()));
    let key = built["payload"]["key"].as_str().unwrap().to_string();
    let hom = &built["payload"]["summary"]["hom_dims"];
    let nonzero: Vec<(usize, usize)> =
        (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).filter(|&(x, y)| hom[x][y].as_u64().unwrap() > 0).collect();
    // S1, S2, P1: identities, S2 -> P1 and P1 -> S1.
    assert_eq!(nonzero, vec![(0, 0), (1, 1), (1, 2), (2, 0), (2, 2)]);
    assert!(cache.path().join(format!("window-{key}.json")).exists());

    let from_cache = json(&torsidl(&["pair", "--window", &key[..12], "--subfunctor", "zero"], cache.path()));
    assert_eq!(from_cache["inputs"]["window"], Value::String(key));
    let dims = from_cache["payload"]["t_dims"].as_object().unwrap();
    assert!(dims.values().all(|d| d == 0));
}

#[test]
fn cache_dir_flag_overrides_environment() {
    let env_cache = tempfile::tempdir().unwrap();
    let flag_cache = tempfile::tempdir().unwrap();
    let flag = flag_cache.path().display().to_string();
    json(&torsidl(&["--cache-dir", &flag, "window", "build", "--corpus", &corpus("dualnumbers")], env_cache.path()));
    assert_eq!(std::fs::read_dir(flag_cache.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(env_cache.path()).unwrap().count(), 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["lattice", "--corpus", &corpus("a2"), "--enumerate"];
    let a = torsidl(&args, cache.path());
    let b = torsidl(&args, cache.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["payload"]["count"], 8);
    assert_eq!(v["exact"], true);
}

#[test]
fn out_flag_writes_the_report() {
    let cache = tempfile::tempdir().unwrap();
    let out = cache.path().join("rank.json");
    let o = torsidl(
        &["rank", "--corpus", &corpus("a2"), "--module", "S1", "--out", &out.display().to_string()],
        cache.path(),
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["payload"]["tag"], "Finite(1)");
    assert_eq!(v["payload"]["chain_dims"], serde_json::json!([1, 1, 0]));
}

#[test]
fn pair_reports() {
    let cache = tempfile::tempdir().unwrap();
    let v = json(&torsidl(&["pair", "--corpus", &corpus("a2"), "--closure", "gen", "--objects", "S2"], cache.path()));
    assert_eq!(v["payload"]["t_dims"], serde_json::json!({"P1": 1, "S1": 0, "S2": 1}));
    assert_eq!(v["exact"], true);

    let v = json(&torsidl(
        &["pair", "--corpus", &corpus("kronecker"), "--closure", "gen", "--objects", "R1_0"],
        cache.path(),
    ));
    assert_eq!(v["exact"], false);
    for j in 1..=4 {
        assert_eq!(v["payload"]["t_dims"][format!("R{j}_0")], 2);
        assert_eq!(v["payload"]["t_dims"][format!("R{j}_1")], 0);
    }
}

#[test]
fn lattice_queries() {
    let cache = tempfile::tempdir().unwrap();
    let v = json(&torsidl(&["lattice", "--corpus", &corpus("dualnumbers"), "--mdim"], cache.path()));
    assert_eq!(v["payload"], serde_json::json!({"count": 4, "mdim": 0}));
    let v = json(&torsidl(&["lattice", "--corpus", &corpus("a3"), "--td"], cache.path()));
    assert_eq!((v["payload"]["value"].clone(), v["exact"].clone()), (serde_json::json!(0), Value::Bool(true)));
    let k = corpus("kronecker");
    let args =
        ["lattice", "--corpus", &k, "--extend", "5", "--certify", "--from", "P2", "--to", "R1_0", "--depth", "4"];
    let v = json(&torsidl(&args, cache.path()));
    assert_eq!(v["payload"]["strict"], true);
    assert_eq!(v["payload"]["witnesses"].as_array().unwrap().len(), 4);
    assert_eq!(v["exact"], false);
}

#[test]
fn exit_codes() {
    let cache = tempfile::tempdir().unwrap();
    let unknown = torsidl(&["pair", "--corpus", &corpus("a2"), "--closure", "gen", "--objects", "Q7"], cache.path());
    assert_eq!(unknown.status.code(), Some(3));
    assert_eq!(torsidl(&["frobnicate"], cache.path()).status.code(), Some(3));
    assert_eq!(torsidl(&["verify", "--suite", "nope"], cache.path()).status.code(), Some(3));

    let dir = corpora().join("a2");
    let alg = dir.join("algebra.json").display().to_string();
    let s1 = dir.join("modules/00_S1.json").display().to_string();
    let p1 = dir.join("modules/02_P1.json").display().to_string();
    let dup = torsidl(&["window", "build", "--algebra", &alg, "--modules", &s1, &s1, &p1], cache.path());
    assert_eq!(dup.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&dup.stderr).contains("duplicate isomorphism class"));
}

#[test]
fn verify_passes_and_fails_with_the_right_codes() {
    let cache = tempfile::tempdir().unwrap();
    let ok = torsidl(&["verify", "--suite", "a2-census", "--corpora", &corpora().display().to_string()], cache.path());
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["payload"]["passed"], true);

    // A corpora directory whose "a2" is really the dual numbers fails the A2 census.
    let fake = tempfile::tempdir().unwrap();
    let src = corpora().join("dualnumbers");
    let dst = fake.path().join("a2");
    std::fs::create_dir_all(dst.join("modules")).unwrap();
    for entry in ["corpus.json", "algebra.json", "modules/00_k.json", "modules/01_A.json"] {
        std::fs::copy(src.join(entry), dst.join(entry)).unwrap();
    }
    let bad =
        torsidl(&["verify", "--suite", "a2-census", "--corpora", &fake.path().display().to_string()], cache.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("enumerated ideal torsion pairs"));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cache = tempfile::tempdir().unwrap();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_torsidl"))
            .args(["pair", "--corpus", &corpus("a3"), "--closure", "cogen", "--objects", "S2"])
            .env("TORSIDL_CACHE", cache.path())
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, many) = (run("1"), run("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}
