use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_partite"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("partite-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const K4: &str = r#"{"directed":false,"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

#[test]
fn kpartite_ec_on_k4() {
    let s = Scratch::new("k4");
    let k4 = s.file("k4.json", K4);
    let out = run(&["kpartite-ec", &k4, "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["status"], "ok");
    assert!(r["result"]["lambda_h"].as_u64().unwrap() >= 2);
    assert_eq!(r["config"]["command"]["kpartite-ec"]["k"], 2);
    assert_eq!(r["seed"], 0);
    assert!(r["result"].get("trace").is_none());
    let traced = report(&run(&["kpartite-ec", &k4, "--k", "2", "--trace"]));
    assert!(traced["result"]["trace"].is_array());
}

#[test]
fn t5_is_exceptional() {
    let s = Scratch::new("t5");
    let t5 = s.path("t5.json");
    assert_eq!(
        run(&["generate", "exceptional", "--name", "T5", "--out", &t5])
            .status
            .code(),
        Some(0)
    );
    let out = run(&["strong-bipartite", &t5]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["error"]["kind"], "Exceptional");
    assert_eq!(r["error"]["message"], "exceptional digraph T5");
}

#[test]
fn identical_configs_give_identical_bytes() {
    let s = Scratch::new("det");
    let g = s.path("d.json");
    run(&["generate", "dkr", "--k", "2", "--r", "3", "--out", &g]);
    let args = [
        "kac-partite",
        g.as_str(),
        "--k",
        "2",
        "--trace",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(report(&a)["seed"], 7);
}

#[test]
fn refuter_certifies_a_violation() {
    let s = Scratch::new("refute");
    let g = s.path("d.json");
    run(&["generate", "dkr", "--k", "1", "--r", "2", "--out", &g]);
    let p = s.file("p.json", r#"{"part_count":2,"part_of":[0,1,0,1,0,1]}"#);
    let out = run(&["refute", "dkr", &g, &p, "--k", "1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &report(&out)["result"];
    assert!(v["out_across"].as_u64().unwrap() < 1 || v["in_across"].as_u64().unwrap() < 1);
    // Wrong parameters for the graph.
    assert_eq!(
        run(&["refute", "dkr", &g, &p, "--k", "1", "--r", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn exhausted_budget_exits_two() {
    let s = Scratch::new("budget");
    let r5 = s.path("r5.json");
    run(&["generate", "r-tournament", "--k", "2", "--out", &r5]);
    let cycle = report(&run(&["ham-cycle", &r5]))["result"]["cycle"].clone();
    let arc = format!("{}-{}", cycle[0], cycle[1]);
    let out = run(&["ham-cycle", &r5, "--avoid", &arc, "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["error"]["kind"], "BudgetExhausted");
    let ok = run(&["ham-cycle", &r5, "--avoid", &arc]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn dot_and_out_files() {
    let s = Scratch::new("dot");
    let k4 = s.file("k4.json", K4);
    let h = s.path("h.json");
    let out = run(&[
        "kpartite-ec",
        &k4,
        "--k",
        "2",
        "--format",
        "dot",
        "--out",
        &h,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("graph G {"));
    let written: Value =
        serde_json::from_str(&std::fs::read_to_string(Path::new(&h)).unwrap()).unwrap();
    assert_eq!(written["directed"], false);
}

#[test]
fn oracle_and_degree_commands() {
    let s = Scratch::new("oracle");
    let r5 = s.path("r5.json");
    run(&["generate", "r-tournament", "--k", "2", "--out", &r5]);
    let none = report(&run(&[
        "oracle",
        "partition-exists",
        &r5,
        "--t",
        "4",
        "--pred",
        "min-out",
        "--c",
        "2",
    ]));
    assert_eq!(none["result"]["verdict"], "exhausted-none");
    let d = report(&run(&["decide-2kpartite", &r5, "--k", "2"]));
    assert_eq!(d["result"]["exists"], false);
    let m = s.file(
        "m.json",
        r#"{"n":3,"entries":[[0,1,"1/2"],[1,2,"1/2"],[2,0,"1/2"]]}"#,
    );
    let a = run(&["alon-partition", &m, "--t", "2"]);
    assert_eq!(a.status.code(), Some(0));
    let k4 = s.file("k4.json", K4);
    assert_eq!(
        report(&run(&["oracle", "chi", &k4]))["result"]["chromatic_number"],
        4
    );
}

#[test]
fn bad_input_exits_one() {
    let s = Scratch::new("bad");
    let junk = s.file("junk.json", "{not json");
    let out = run(&["lambda", &junk]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["error"]["kind"], "Parse");
    assert_eq!(
        run(&["verify-suite", "--level", "nope"]).status.code(),
        Some(1)
    );
}

#[test]
fn smoke_suite_passes() {
    let out = run(&["verify-suite", "--level", "smoke"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["passed"], true);
    assert_eq!(r["result"]["criteria"].as_array().unwrap().len(), 3);
}
