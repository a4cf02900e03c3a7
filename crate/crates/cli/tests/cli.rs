use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use serde_json::Value;

use stabilitylab_cli::report::validate;

fn bin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stabilitylab"))
        .args(args)
        .env("STABILITYLAB_JOBS", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Last stdout line as a validated report.
fn report(o: &Output) -> Value {
    let text = stdout(o);
    let v: Value = serde_json::from_str(text.lines().last().expect("some output")).unwrap();
    validate(&v).unwrap_or_else(|e| panic!("{e}: {v}"));
    v
}

fn g6_of(family_args: &[&str]) -> String {
    let mut args = vec!["construct", "--family"];
    args.extend_from_slice(family_args);
    let o = bin(&args, None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    report(&o)["result"]["g6"].as_str().unwrap().to_string()
}

#[test]
fn alpha_examples() {
    let c7 = g6_of(&["cycle", "--n", "7"]);
    let o = bin(&["alpha", "--g6", &c7], None);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["result"]["alpha"], 3);
    assert_eq!(r["result"]["witness"].as_array().unwrap().len(), 3);

    assert_eq!(report(&bin(&["alpha", "--g6", "A_"], None))["result"]["alpha"], 1);

    let o = bin(&["alpha", "--file", "missing.g6"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn check_examples() {
    let c9 = g6_of(&["cycle", "--n", "9"]);
    let r = report(&bin(&["check", "--g6", &c9, "--k", "2", "--l", "0", "--tight"], None));
    assert_eq!(r["result"]["stable"], true);
    assert_eq!(r["result"]["tight"], true);

    let o = bin(&["check", "--g6", &c9, "--k", "3", "--l", "0"], None);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["result"]["stable"], false);
    assert_eq!(r["result"]["witness"].as_array().unwrap().len(), 3);

    assert_eq!(bin(&["check", "--g6", &c9, "--k", "3", "--l", "0", "--tight"], None).status.code(), Some(2));
    assert_eq!(bin(&["check", "--g6", &c9, "--k", "0", "--l", "0"], None).status.code(), Some(1));
}

#[test]
fn verify_t2_lists_the_five_graphs() {
    let o = bin(&["verify", "--theorem", "T2", "--n-max", "9", "--no-records"], None);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["result"]["verdict"], "verified");
    let matches: Vec<String> =
        r["result"]["matches"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()).collect();
    // K4 and K5 by their canonical graph6; H7, H9, T9 checked by name
    assert!(matches.contains(&"C~".to_string()) && matches.contains(&"D~{".to_string()));
    let mut names = Vec::new();
    for g6 in &matches {
        let c = bin(&["classify", "--g6", g6, "--k", "3"], None);
        assert_eq!(c.status.code(), Some(0), "{g6}");
        if let Some(name) = report(&c)["result"]["decomposition"]["name"].as_str() {
            names.push(name.to_string());
        }
    }
    for want in ["H7", "H9", "T9"] {
        assert!(names.iter().any(|n| n == want), "{want} missing from {names:?}");
    }
}

#[test]
fn verify_streams_records_then_report() {
    let o = bin(&["verify", "--theorem", "t1c", "--n-min", "3", "--n-max", "7"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    // C3, C5, C7
    assert_eq!(lines.len(), 4);
    for line in &lines[..3] {
        stabilitylab_core::enumeration::parse_record(line, 1).unwrap();
    }
    assert_eq!(report(&o)["result"]["matches"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(bin(&["verify", "--theorem", "T9", "--n-max", "5"], None).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--theorem", "T2", "--n-max", "10"], None).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--theorem", "T2", "--n-max", "5", "--k", "4"], None).status.code(), Some(1));
}

#[test]
fn partial_verdict_under_a_cap() {
    let o = bin(&["verify", "--theorem", "L21", "--n-max", "7", "--max-graphs", "100", "--no-records"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["result"]["verdict"], "partial");
}

#[test]
fn construct_evensub_k4() {
    let r = report(&bin(&["construct", "--family", "evensub-k4", "--counts", "2,0,0,0,0,0"], None));
    assert_eq!(r["result"]["n"], 6);
    assert_eq!(r["result"]["edges"], 8);
    let g = stabilitylab_core::parse_graph6(r["result"]["g6"].as_str().unwrap()).unwrap();
    assert!(stabilitylab_core::structure::is_even_subdivision_k4(&g).is_some());

    assert_eq!(bin(&["construct", "--family", "evensub-k4", "--counts", "1,0,0,0,0,0"], None).status.code(), Some(1));
    assert_eq!(bin(&["construct", "--family", "evensub-k4", "--counts", "2,0"], None).status.code(), Some(1));
    assert_eq!(bin(&["construct", "--family", "cycle"], None).status.code(), Some(1));
    assert_eq!(bin(&["construct", "--family", "cone"], None).status.code(), Some(1));
}

#[test]
fn classify_two_odd_cycles() {
    let union = g6_of(&["union", "--parts", "Bw,Dhc"]);
    let r = report(&bin(&["classify", "--g6", &union, "--k", "2"], None));
    assert_eq!(r["result"]["decomposition"]["kind"], "TwoOddCycles");
    let cycles = r["result"]["decomposition"]["cycleVertices"].as_array().unwrap();
    let mut sizes: Vec<usize> = cycles.iter().map(|c| c.as_array().unwrap().len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 5]);

    // P3 is neither tight nor critical
    assert_eq!(bin(&["classify", "--g6", "Bg", "--k", "2"], None).status.code(), Some(2));
    assert_eq!(bin(&["classify", "--g6", "Bg"], None).status.code(), Some(2));
}

#[test]
fn classify_defect_without_k() {
    let k4 = g6_of(&["clique", "--n", "4"]);
    let r = report(&bin(&["classify", "--g6", &k4], None));
    assert_eq!(r["result"]["defectClass"]["defect"], 2);
}

#[test]
fn reduce_returns_a_critical_kernel() {
    let k4 = g6_of(&["clique", "--n", "4"]);
    let cone = g6_of(&["cone", "--g6", &k4]);
    let r = report(&bin(&["reduce", "--g6", &cone], None));
    let kernel = stabilitylab_core::parse_graph6(r["result"]["kernel"].as_str().unwrap()).unwrap();
    assert!(stabilitylab_core::is_alpha_critical(&kernel).critical);
    assert_eq!(r["result"]["alpha"], 1);
    assert!(r["result"]["removed"].as_array().unwrap().is_empty());

    let p4 = "Ch";
    let r = report(&bin(&["reduce", "--g6", p4], None));
    assert_eq!(r["result"]["alpha"], 2);
}

#[test]
fn pretty_changes_layout_only() {
    let c5 = g6_of(&["cycle", "--n", "5"]);
    for args in [
        vec!["alpha", "--g6", c5.as_str()],
        vec!["check", "--g6", c5.as_str(), "--k", "2", "--l", "0"],
        vec!["classify", "--g6", c5.as_str(), "--k", "2"],
        vec!["verify", "--theorem", "SUR", "--n-max", "7", "--no-records"],
    ] {
        let plain: Value = serde_json::from_slice(&bin(&args, None).stdout).unwrap();
        let mut with = args.clone();
        with.insert(0, "--pretty");
        let o = bin(&with, None);
        assert!(stdout(&o).lines().count() > 1);
        let pretty: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(plain, pretty);
        validate(&pretty).unwrap();
    }
}

#[test]
fn seeds_are_deterministic() {
    let run = |seed: &str| g6_of(&["bipartite-pm", "--m", "6", "--seed", seed]);
    assert_eq!(run("11"), run("11"));
    let distinct: std::collections::HashSet<String> = (0..8).map(|s| run(&s.to_string())).collect();
    assert!(distinct.len() > 1);
    // the default seed is fixed
    assert_eq!(g6_of(&["bipartite-pm", "--m", "6"]), run("0"));
    assert_eq!(g6_of(&["bipartite-pm", "--m", "3", "--p", "0"]), g6_of(&["bipartite-pm", "--m", "3", "--p", "0", "--seed", "9"]));
}

#[test]
fn construct_output_pipes_into_every_analysis_command() {
    let families: [&[&str]; 7] = [
        &["cycle", "--n", "7"],
        &["clique", "--n", "5"],
        &["cone", "--g6", "Dhc"],
        &["union", "--parts", "Bw,Bw"],
        &["isolift", "--g6", "Bw", "--t", "2"],
        &["bipartite-pm", "--m", "4", "--seed", "3"],
        &["evensub-k4", "--counts", "0,2,0,2,0,0"],
    ];
    for fam in families {
        let mut args = vec!["construct", "--family"];
        args.extend_from_slice(fam);
        let built = bin(&args, None);
        let piped = stdout(&built);
        for analysis in [
            vec!["alpha", "--file", "-"],
            vec!["check", "--file", "-", "--k", "1", "--l", "0"],
            vec!["reduce", "--file", "-"],
            vec!["classify", "--file", "-", "--k", "1"],
            vec!["classify", "--file", "-"],
        ] {
            let o = bin(&analysis, Some(&piped));
            let code = o.status.code().unwrap();
            assert!(code == 0 || code == 2, "{fam:?} | {analysis:?}: {}", String::from_utf8_lossy(&o.stderr));
            if code == 0 {
                report(&o);
            }
        }
        // pretty output pipes as well
        args.insert(0, "--pretty");
        let o = bin(&["alpha", "--file", "-"], Some(&stdout(&bin(&args, None))));
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn enumerate_to_stdout_and_file() {
    let o = bin(&["enumerate", "--n", "5", "--filter", "tight=2,0"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let rec = stabilitylab_core::enumeration::parse_record(lines[0], 1).unwrap();
    assert!(stabilitylab_core::structure::is_odd_cycle(&rec.graph().unwrap()));
    let r = report(&o);
    assert_eq!(r["result"]["graphsScanned"], 34);
    assert_eq!(r["result"]["records"], 1);

    // a record line is valid graph input too
    assert_eq!(report(&bin(&["alpha", "--file", "-"], Some(&text)))["result"]["alpha"], 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.jsonl");
    let o = bin(&["enumerate", "--n", "6", "--out", path.to_str().unwrap(), "--jobs", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(report(&o)["result"]["records"], 156);
    assert_eq!(stabilitylab_core::enumeration::atlas_read(&path).unwrap().len(), 156);

    assert_eq!(bin(&["enumerate", "--n", "6", "--filter", "bogus"], None).status.code(), Some(1));
    assert_eq!(bin(&["enumerate", "--n", "6", "--prune"], None).status.code(), Some(1));
    assert_eq!(bin(&["enumerate", "--n", "11"], None).status.code(), Some(1));
}

#[test]
fn jobs_do_not_change_output() {
    let args = |jobs: &'static str| vec!["enumerate", "--n", "7", "--filter", "connected", "--jobs", jobs];
    assert_eq!(bin(&args("1"), None).stdout, bin(&args("3"), None).stdout);
}

#[test]
fn input_digest_tracks_the_graph_not_its_spelling() {
    let a = report(&bin(&["alpha", "--g6", "A_"], None));
    let b = report(&bin(&["alpha", "--file", "-"], Some("A_\n")));
    assert_eq!(a["inputDigest"], b["inputDigest"]);
    let c = report(&bin(&["alpha", "--g6", "A?"], None));
    assert_ne!(a["inputDigest"], c["inputDigest"]);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bin(&["--help"], None).status.code(), Some(0));
    assert_eq!(bin(&["--version"], None).status.code(), Some(0));
    assert_eq!(bin(&[], None).status.code(), Some(1));
    assert_eq!(bin(&["alpha"], None).status.code(), Some(1));
    assert_eq!(bin(&["alpha", "--g6", "A_", "--file", "x"], None).status.code(), Some(1));
}

fn run_in_process(args: &[String], stdin: &str) -> i32 {
    let mut argv = vec!["stabilitylab".to_string()];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    stabilitylab_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn malformed_graph_input_never_panics(text in ".{0,24}", cmd in 0usize..4) {
        let sub = ["alpha", "reduce", "classify", "check"][cmd];
        let mut args = vec![sub.to_string(), "--g6".into(), text.clone()];
        if sub == "check" {
            args.extend(["--k".into(), "1".into(), "--l".into(), "0".into()]);
        }
        let code = run_in_process(&args, "");
        prop_assert!((0..=2).contains(&code));
        let code = run_in_process(&[sub.to_string(), "--file".into(), "-".into()], &text);
        prop_assert!((0..=2).contains(&code));
    }

    #[test]
    fn malformed_arguments_never_panic(args in proptest::collection::vec("[-a-z0-9=,]{0,10}", 0..6)) {
        let code = run_in_process(&args, "");
        prop_assert!((0..=2).contains(&code));
    }
}
