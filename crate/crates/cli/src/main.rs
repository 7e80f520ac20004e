//! `partite`: one subcommand per library operation. A JSON report goes to
//! stdout, a short human summary to stderr.
//!
//! Exit codes: 0 success or verdict computed, 1 precondition failure or
//! exceptional input, 2 budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use partite::connectivity::{essential_lambda, global_lambda, is_k_strong, local_lambda};
use partite::cut_improver::spanning_kpartite_ec;
use partite::degree::{
    alon_partition, decide_2k_partite_mindeg, kpartite_semidegree, majority_4_colouring,
    AlonBudget, MatrixFile,
};
use partite::ear::{ear_decomposition, strong_3partite};
use partite::gallery::{
    class_d, class_d_refuter, dkr, dkr_refuter, essentially_6ec_bipartite, exceptional,
    kt_chromatic_2k, no_bip2t_example, odd_wheel, rotative_tournament, walecki_paths,
};
use partite::mader::spanning_kac_partite;
use partite::oracle::{
    chromatic_number, exact_max_kcut, exists_partition_with, exists_strong_bipartite,
    exists_three_strong_bipartition, DegreePredicate, CHI_CAP, MAX_KCUT_CAP, PARTITION_CAP,
    STRONG_BIP_CAP, THREE_STRONG_CAP,
};
use partite::suite::{verify_suite, Level};
use partite::tournament::{
    hamiltonian_cycle, hamiltonian_cycle_avoiding, strong_bipartite_semicomplete,
    DEFAULT_AVOID_BUDGET,
};
use partite::tree_packing::{bipartite_2t, kpartite_kt, tree_pack};
use partite::{AnyGraph, Digraph, Error, Graph, Partition};

#[derive(Parser, Serialize)]
#[command(
    name = "partite",
    version,
    about = "Spanning low-chromatic subgraphs with connectivity and degree guarantees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomised step; 0 keeps identity orders.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the produced graph (generator output or subgraph H) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Json,
    Dot,
    Summary,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Edge- or arc-connectivity with a cut witness.
    Lambda {
        file: PathBuf,
        #[arg(long)]
        essential: bool,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        k_strong: Option<usize>,
    },
    /// Spanning k-partite subgraph keeping ceil((k-1)/k lambda).
    KpartiteEc {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trace: bool,
    },
    /// k edge-disjoint spanning trees or a partition showing there are none.
    TreePack {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Spanning bipartite subgraph with two edge-disjoint spanning trees.
    #[command(name = "bip-2t")]
    Bip2t {
        file: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Spanning (k+1)-partite subgraph with k edge-disjoint spanning trees.
    KpartiteKt {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        force: bool,
    },
    /// Spanning strong subdigraph with at most three independent parts.
    #[command(name = "strong-3partite")]
    Strong3partite { file: PathBuf },
    /// Ear decomposition, optionally from a given starting cycle.
    EarDecomp {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        start: Option<Vec<usize>>,
    },
    /// Good bipartition of a strong semicomplete digraph.
    StrongBipartite { file: PathBuf },
    /// Hamiltonian cycle of a semicomplete digraph, optionally avoiding arcs `u-v`.
    HamCycle {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Spanning k-arc-connected subdigraph with at most 2k+1 parts.
    KacPartite {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        trace: bool,
        /// Collapse parallel arcs of H after it has been verified.
        #[arg(long)]
        simplify: bool,
    },
    /// Two-pass majority 4-colouring.
    Majority4 { file: PathBuf },
    /// Partition for a weight matrix with row sums at most 1.
    AlonPartition {
        matrix: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// k-partite subdigraph keeping a (k-4)/k share of every semi-degree.
    Semidegree {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Does a spanning 2k-partite subdigraph with minimum out-degree k exist?
    #[command(name = "decide-2kpartite")]
    Decide2kpartite {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Build a gallery graph.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Certify that a partition fails for a lower-bound construction.
    Refute {
        #[command(subcommand)]
        what: Refute,
    },
    /// Exhaustive ground-truth searches for small inputs.
    Oracle {
        #[command(subcommand)]
        what: Oracle,
    },
    /// Run the acceptance battery.
    VerifySuite {
        #[arg(long, default_value = "desk")]
        level: String,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Generate {
    /// Rotative tournament R_{2k+1}.
    RTournament {
        #[arg(long)]
        k: usize,
    },
    Dkr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    Exceptional {
        #[arg(long)]
        name: String,
    },
    ClassD {
        #[arg(long)]
        k: usize,
    },
    /// Essentially 6-edge-connected (3,5)-regular bipartite graph.
    Es6ec {
        #[arg(long)]
        n: usize,
    },
    /// Its line graph, which has no spanning bipartite 2T-subgraph.
    #[command(name = "no-bip2t")]
    NoBip2t {
        #[arg(long)]
        n: usize,
    },
    OddWheel {
        #[arg(long)]
        m: usize,
    },
    /// Hamiltonian path decomposition of K_{2r}.
    Walecki {
        #[arg(long)]
        r: usize,
    },
    /// kT-graph of chromatic number at least 2k built on a host kT-graph.
    Kt2k {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        host: PathBuf,
    },
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Refute {
    Dkr {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    ClassD {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Pred {
    MinSemi,
    MinOut,
    Majority,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Oracle {
    StrongBip {
        file: PathBuf,
    },
    ThreeStrong {
        file: PathBuf,
    },
    Chi {
        file: PathBuf,
    },
    MaxKcut {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    PartitionExists {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum)]
        pred: Pred,
        #[arg(long, default_value_t = 1)]
        c: usize,
    },
}

/// What a subcommand produced.
struct Outcome {
    result: Value,
    summary: String,
    artifact: Option<AnyGraph>,
    /// Exit code for a computed result; the suite reports 1 when a criterion fails.
    exit: u8,
}

impl Outcome {
    fn new(result: Value, summary: String) -> Self {
        Outcome {
            result,
            summary,
            artifact: None,
            exit: 0,
        }
    }

    fn with_graph(mut self, g: impl Into<AnyGraph>) -> Self {
        self.artifact = Some(g.into());
        self
    }
}

type Run = Result<Outcome, Error>;

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AnyGraph, Error> {
    AnyGraph::from_json(&read(path)?)
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    load(path)?.into_graph()
}

fn load_digraph(path: &Path) -> Result<Digraph, Error> {
    load(path)?.into_digraph()
}

fn load_partition(path: &Path) -> Result<Partition, Error> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn budget_from(moves: Option<u64>, seed: u64) -> AlonBudget {
    AlonBudget {
        moves: moves.or(AlonBudget::default().moves),
        seed,
        ..AlonBudget::default()
    }
}

fn parse_arc(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("arc {s:?} is not of the form u-v"));
    let (u, v) = s.split_once('-').ok_or_else(bad)?;
    Ok((
        u.trim().parse().map_err(|_| bad())?,
        v.trim().parse().map_err(|_| bad())?,
    ))
}

fn lambda_cmd(
    file: &Path,
    essential: bool,
    pair: Option<&[usize]>,
    k_strong: Option<usize>,
) -> Run {
    let g = load(file)?;
    if let Some(k) = k_strong {
        let d = g.into_digraph()?;
        let yes = is_k_strong(&d, k);
        return Ok(Outcome::new(
            json!({ "k": k, "k_strong": yes }),
            format!("{k}-strong: {yes}"),
        ));
    }
    let (value, witness, what) = match (&g, pair, essential) {
        (AnyGraph::Undirected(g), _, true) => {
            let (l, w) = essential_lambda(g)?;
            (l, w, "essential lambda")
        }
        (_, _, true) => {
            return Err(Error::InvalidGraph(
                "essential lambda needs an undirected graph".into(),
            ))
        }
        (AnyGraph::Undirected(g), Some(p), _) => {
            let (l, w) = local_lambda(g, p[0], p[1])?;
            (l, w, "local lambda")
        }
        (AnyGraph::Directed(d), Some(p), _) => {
            let (l, w) = local_lambda(d, p[0], p[1])?;
            (l, w, "local lambda")
        }
        (AnyGraph::Undirected(g), None, _) => {
            let (l, w) = global_lambda(g)?;
            (l, w, "lambda")
        }
        (AnyGraph::Directed(d), None, _) => {
            let (l, w) = global_lambda(d)?;
            (l, w, "lambda")
        }
    };
    Ok(Outcome::new(
        json!({ "value": value, "witness": witness }),
        format!("{what} = {value}"),
    ))
}

fn generate(what: &Generate) -> Run {
    let graph_outcome = |g: AnyGraph, label: String| {
        let n = g.vertex_count();
        Outcome::new(
            json!({ "graph": serde_json::from_str::<Value>(&g.to_json()).expect("json") }),
            format!("{label}: {n} vertices"),
        )
        .with_graph(g)
    };
    Ok(match what {
        Generate::RTournament { k } => {
            graph_outcome(rotative_tournament(*k)?.into(), format!("R_{}", 2 * k + 1))
        }
        Generate::Dkr { k, r } => graph_outcome(dkr(*k, *r)?.into(), format!("D_{{{k},{r}}}")),
        Generate::Exceptional { name } => graph_outcome(exceptional(name)?.into(), name.clone()),
        Generate::ClassD { k } => {
            let (d, layout) = class_d(*k)?;
            let mut o = graph_outcome(d.into(), format!("class D, k = {k}"));
            o.result["layout"] = to_value(&layout);
            o
        }
        Generate::Es6ec { n } => graph_outcome(
            essentially_6ec_bipartite(*n)?.into(),
            format!("essentially 6-ec bipartite, n = {n}"),
        ),
        Generate::NoBip2t { n } => {
            let ex = no_bip2t_example(*n)?;
            let mut o = graph_outcome(
                ex.graph.clone().into(),
                format!("cut bound {} < {}", ex.cut_bound, ex.needed),
            );
            o.result["certificate"] = json!({
                "triangles": ex.triangles,
                "k5s": ex.k5s,
                "cut_bound": ex.cut_bound,
                "needed": ex.needed,
            });
            o
        }
        Generate::OddWheel { m } => {
            graph_outcome(odd_wheel(*m)?.into(), format!("odd wheel, rim {m}"))
        }
        Generate::Walecki { r } => {
            let paths = walecki_paths(*r)?;
            Outcome::new(
                json!({ "paths": paths }),
                format!("{r} hamiltonian paths of K_{}", 2 * r),
            )
        }
        Generate::Kt2k { k, host } => {
            let g = kt_chromatic_2k(*k, &load_graph(host)?)?;
            graph_outcome(
                g.into(),
                format!("kT-graph with chromatic number >= {}", 2 * k),
            )
        }
    })
}

fn refute(what: &Refute) -> Run {
    match what {
        Refute::Dkr {
            graph,
            partition,
            k,
            r,
        } => {
            let d = load_digraph(graph)?;
            if d != dkr(*k, *r)? {
                return Err(Error::PreconditionFailed(format!(
                    "graph is not D_{{{k},{r}}}"
                )));
            }
            let p = load_partition(partition)?;
            let v = dkr_refuter(*k, *r, &p)?;
            let s = format!(
                "vertex {} has {} out / {} in across",
                v.vertex, v.out_across, v.in_across
            );
            Ok(Outcome::new(to_value(&v), s))
        }
        Refute::ClassD {
            graph,
            partition,
            k,
        } => {
            let d = load_digraph(graph)?;
            let (expected, layout) = class_d(*k)?;
            if d != expected {
                return Err(Error::PreconditionFailed(format!(
                    "graph is not class D for k = {k}"
                )));
            }
            let p = load_partition(partition)?;
            let v = class_d_refuter(&d, &layout, &p)?;
            let s = format!(
                "vertex {} ({}) has {} out / {} in across",
                v.vertex, v.stage, v.out_across, v.in_across
            );
            Ok(Outcome::new(to_value(&v), s))
        }
    }
}

fn oracle(what: &Oracle) -> Run {
    let report = |r: partite::oracle::SearchReport| {
        let s = format!("{:?} after {} candidates", r.verdict, r.examined);
        Outcome::new(to_value(&r), s)
    };
    Ok(match what {
        Oracle::StrongBip { file } => report(exists_strong_bipartite(
            &load_digraph(file)?,
            STRONG_BIP_CAP,
        )?),
        Oracle::ThreeStrong { file } => report(exists_three_strong_bipartition(
            &load_digraph(file)?,
            THREE_STRONG_CAP,
        )?),
        Oracle::Chi { file } => {
            let chi = chromatic_number(&load_graph(file)?, CHI_CAP)?;
            Outcome::new(json!({ "chromatic_number": chi }), format!("chi = {chi}"))
        }
        Oracle::MaxKcut { file, k } => {
            let (p, value) = exact_max_kcut(&load_graph(file)?, *k, MAX_KCUT_CAP)?;
            Outcome::new(
                json!({ "partition": p, "value": value }),
                format!("max {k}-cut = {value}"),
            )
        }
        Oracle::PartitionExists { file, t, pred, c } => {
            let pred = match pred {
                Pred::MinSemi => DegreePredicate::MinSemiDegree(*c),
                Pred::MinOut => DegreePredicate::MinOutDegree(*c),
                Pred::Majority => DegreePredicate::Majority,
            };
            report(exists_partition_with(
                &load_digraph(file)?,
                *t,
                pred,
                PARTITION_CAP,
            )?)
        }
    })
}

fn run(cli: &Cli) -> Run {
    let seed = cli.seed;
    match &cli.command {
        Command::Lambda {
            file,
            essential,
            pair,
            k_strong,
        } => lambda_cmd(file, *essential, pair.as_deref(), *k_strong),
        Command::KpartiteEc { file, k, trace } => {
            let g = load_graph(file)?;
            let out = spanning_kpartite_ec(&g, *k, seed)?;
            let mut v = to_value(&out);
            if !trace {
                v.as_object_mut().expect("object").remove("trace");
            }
            let s = format!(
                "lambda(G) = {}, lambda(H) = {} >= {} after {} shifts",
                out.lambda_g, out.lambda_h, out.target, out.iterations
            );
            Ok(Outcome::new(v, s).with_graph(out.subgraph))
        }
        Command::TreePack { file, k } => {
            let g = load_graph(file)?;
            match tree_pack(&g, *k) {
                Ok(p) => Ok(Outcome::new(
                    json!({ "packed": true, "trees": p.trees }),
                    format!("{k} disjoint spanning trees"),
                )),
                Err(Error::NoPacking {
                    k,
                    witness,
                    crossing,
                }) => Ok(Outcome::new(
                    json!({ "packed": false, "witness": witness, "crossing": crossing }),
                    format!(
                        "no {k} disjoint spanning trees: {crossing} edges cross {} parts",
                        witness.part_count()
                    ),
                )),
                Err(e) => Err(e),
            }
        }
        Command::Bip2t { file, force } => {
            let g = load_graph(file)?;
            let out = bipartite_2t(&g, *force, seed)?;
            let h = g.partite_subgraph(&out.partition)?;
            Ok(Outcome::new(
                to_value(&out),
                format!("bipartite 2T-subgraph, lambda(H) = {}", out.lambda_h),
            )
            .with_graph(h))
        }
        Command::KpartiteKt { file, k, force } => {
            let g = load_graph(file)?;
            let out = kpartite_kt(&g, *k, *force, seed)?;
            let h = g.partite_subgraph(&out.partition)?;
            let s = format!(
                "{}-partite {k}T-subgraph, lambda(H) = {}",
                k + 1,
                out.lambda_h
            );
            Ok(Outcome::new(to_value(&out), s).with_graph(h))
        }
        Command::Strong3partite { file } => {
            let d = load_digraph(file)?;
            let out = strong_3partite(&d)?;
            let s = format!(
                "{} parts, {} arcs",
                out.partition.part_count(),
                out.arc_ids.len()
            );
            let h = out.subgraph.clone();
            Ok(Outcome::new(to_value(&out), s).with_graph(h))
        }
        Command::EarDecomp { file, start } => {
            let d = load_digraph(file)?;
            let ed = ear_decomposition(&d, start.as_deref())?;
            let s = format!(
                "{} ears, {} non-trivial",
                ed.ears.len(),
                ed.nontrivial().count()
            );
            Ok(Outcome::new(to_value(&ed), s))
        }
        Command::StrongBipartite { file } => {
            let d = load_digraph(file)?;
            let p = strong_bipartite_semicomplete(&d)?;
            let h = d.partite_subgraph(&p)?;
            Ok(Outcome::new(
                json!({ "partition": p }),
                format!("good bipartition {:?}", p.parts()),
            )
            .with_graph(h))
        }
        Command::HamCycle {
            file,
            avoid,
            budget,
        } => {
            let d = load_digraph(file)?;
            let forbidden = avoid
                .iter()
                .map(|s| parse_arc(s))
                .collect::<Result<Vec<_>, _>>()?;
            let cycle = if forbidden.is_empty() {
                hamiltonian_cycle(&d)?
            } else {
                hamiltonian_cycle_avoiding(&d, &forbidden, budget.unwrap_or(DEFAULT_AVOID_BUDGET))?
            };
            Ok(Outcome::new(
                json!({ "cycle": cycle }),
                format!("hamiltonian cycle of length {}", cycle.len()),
            ))
        }
        Command::KacPartite {
            file,
            k,
            fast,
            trace,
            simplify,
        } => {
            let d = load_digraph(file)?;
            let out = spanning_kac_partite(&d, *k, *fast)?;
            let mut v = to_value(&out);
            let obj = v.as_object_mut().expect("object");
            if !trace {
                obj.remove("trace");
            }
            let mut h = out.subgraph.clone();
            if *simplify {
                let mut arcs = h.arcs().to_vec();
                arcs.sort_unstable();
                arcs.dedup();
                h = Digraph::new(h.vertex_count(), arcs)?;
                obj.insert("simplified_arcs".into(), json!(h.arcs()));
            }
            let s = format!(
                "{} parts, lambda(H) = {} over {} arcs",
                out.partition.nonempty_part_count(),
                out.lambda_h,
                h.arc_count()
            );
            Ok(Outcome::new(v, s).with_graph(h))
        }
        Command::Majority4 { file } => {
            let d = load_digraph(file)?;
            let c = majority_4_colouring(&d)?;
            let used = {
                let mut u = c.colours.clone();
                u.sort_unstable();
                u.dedup();
                u.len()
            };
            Ok(Outcome::new(
                to_value(&c),
                format!("majority colouring with {used} colours"),
            ))
        }
        Command::AlonPartition { matrix, t, budget } => {
            let file: MatrixFile = serde_json::from_str(&read(matrix)?)
                .map_err(|e| Error::Parse(format!("{}: {e}", matrix.display())))?;
            let m = file.into_matrix(*t)?;
            let p = alon_partition(&m, &budget_from(*budget, seed))?;
            Ok(Outcome::new(
                json!({ "partition": p }),
                format!("valid {}-partition", m.parts()),
            ))
        }
        Command::Semidegree { file, k, budget } => {
            let d = load_digraph(file)?;
            let out = kpartite_semidegree(&d, *k, &budget_from(*budget, seed))?;
            let s = format!(
                "{k}-partite, delta^0: {} -> {}",
                d.min_semi_degree(),
                out.subgraph.min_semi_degree()
            );
            let v = json!({ "partition": out.partition, "min_semi_degree": out.subgraph.min_semi_degree() });
            Ok(Outcome::new(v, s).with_graph(out.subgraph))
        }
        Command::Decide2kpartite { file, k } => {
            let d = load_digraph(file)?;
            let out = decide_2k_partite_mindeg(&d, *k)?;
            let s = match (&out.certificate, out.exists) {
                (Some(c), _) => format!("impossible: terminal {k}-regular tournament on {c:?}"),
                (None, true) => "exists".to_string(),
                (None, false) => "impossible: exhaustive search found no partition".to_string(),
            };
            Ok(Outcome::new(to_value(&out), s))
        }
        Command::Generate { what } => generate(what),
        Command::Refute { what } => refute(what),
        Command::Oracle { what } => oracle(what),
        Command::VerifySuite { level } => {
            let level: Level = level.parse()?;
            let report = verify_suite(level, seed);
            for c in &report.criteria {
                eprintln!("{}", c.line());
            }
            let passed = report.criteria.iter().filter(|c| c.passed).count();
            let mut o = Outcome::new(
                to_value(&report),
                format!("{passed}/{} criteria passed", report.criteria.len()),
            );
            o.exit = if report.passed { 0 } else { 1 };
            Ok(o)
        }
    }
}

fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or("Error")
        .to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = to_value(&cli);
    let outcome = run(&cli);
    let (report, code, summary, artifact) = match outcome {
        Ok(o) => (
            json!({ "status": "ok", "config": config, "seed": cli.seed, "result": o.result }),
            o.exit,
            o.summary,
            o.artifact,
        ),
        Err(e) => {
            let code = if matches!(e, Error::BudgetExhausted { .. }) {
                2
            } else {
                1
            };
            let report = json!({
                "status": "error",
                "config": config,
                "seed": cli.seed,
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            (report, code, format!("error: {e}"), None)
        }
    };
    if let (Some(path), Some(g)) = (&cli.out, &artifact) {
        if let Err(e) = fs::write(path, g.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Summary => format!("{summary}\n"),
        Format::Dot => match &artifact {
            Some(g) => g.to_dot(),
            None => {
                eprintln!("this command produces no graph to draw");
                return ExitCode::from(1);
            }
        },
    };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    eprintln!("{summary} (seed {})", cli.seed);
    ExitCode::from(code)
}
