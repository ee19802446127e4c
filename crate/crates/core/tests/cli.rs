use std::process::{Command, Output};

fn qtfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtfock"))
        .args(args)
        .env_remove("QTFOCK_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_outputs() {
    let o = qtfock(&["macdonald", "--mu", "1", "--basis", "H"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "macdonald: pass [mu=(1), basis=H]\n  H(1): p[1]\n");

    let o = qtfock(&["zfun", "--r", "0", "--order", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "zfun: pass [r=0, order=0, redefine_mass=false] (1 instances checked)\n  trace.0: 1\n  closed.0: 1\n"
    );

    let o = qtfock(&["verify", "thm2", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("thm2: pass [max_degree=3]"));

    let o = qtfock(&["ext", "--lam", "1", "--mu", "0"]);
    assert!(stdout(&o).contains("rank: 1"));
}

#[test]
fn exit_codes() {
    for bad in [
        vec!["macdonald", "--mu", "1,2"],
        vec!["macdonald", "--mu", "x"],
        vec!["verify", "thm5"],
        vec!["mmc", "--N", "1", "--k", "1", "--mu", "1,1", "--nu", "1"],
        vec!["zfun", "--r", "1", "--masses", "m"],
        vec!["--no-such-flag"],
    ] {
        let o = qtfock(&bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(!o.stderr.is_empty());
    }
    // The closed form at m ↦ mqt does not match: a verification failure.
    let o = qtfock(&["zfun", "--order", "1", "--redefine-mass"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first discrepancy: coefficient of q0^1"));
}

#[test]
fn structured_output_is_stable() {
    let args = ["--format", "structured", "mmc", "--N", "2", "--k", "1", "--qprec", "6", "--mu", "1", "--nu", "1"];
    let a = stdout(&qtfock(&args));
    let b = stdout(&qtfock(&args));
    assert_eq!(a, b);
    let kv = qtfock::report::parse_kv(&a).unwrap();
    assert!(kv.contains(&("identity".into(), "cherednik".into())));
    assert!(kv.contains(&("status".into(), "pass".into())));
    assert!(a.starts_with(qtfock::report::REPORT_HEADER));
}

#[test]
fn config_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cfg = dir.path().join("run.conf");
    std::fs::write(
        &cfg,
        format!("max_degree = 2\noutput_format = structured\ncache_dir = {}\n", cache.display()),
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = qtfock(&["--config", cfg, "verify", "hm2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("param.max_degree = 2"), "{out}");
    assert!(cache.join("macdonald-deg2.json").exists());
    // Flags win over the file; a warm cache gives identical output.
    let o = qtfock(&["--config", cfg, "--format", "text", "verify", "hm2", "--max-degree", "2"]);
    assert!(stdout(&o).starts_with("hm2: pass [max_degree=2]"));

    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "max_degree = -1\n").unwrap();
    assert_eq!(qtfock(&["--config", bad.to_str().unwrap(), "verify", "hm2"]).status.code(), Some(2));
}
