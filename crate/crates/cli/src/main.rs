//! `forcing` — compute minimum forcing and anti-forcing sets for shortest
//! s-t paths and minimum-weight bases, generate the vertex-cover hardness
//! gadget, and verify claimed sets against brute-force enumeration.
//!
//! Every subcommand prints a JSON run report on stdout. Exit codes: 0 on
//! success, 2 on input errors, 3 on resource-limit aborts.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use forcing_core::basis_forcing::{
    antiforcing_for_basis, forcing_for_basis, min_antiforcing_min_bases, min_forcing_min_bases,
    BasisForcingResult, ElementWeights,
};
use forcing_core::error::Error as CoreError;
use forcing_core::format::{parse_graph, parse_matroid, parse_weights, write_multigraph, ParsedGraph};
use forcing_core::graph::{WeightedDigraph, WeightedMultigraph};
use forcing_core::matroid::{explicit_matroid, graphic_matroid, MatroidRef};
use forcing_core::mst::{mst_antiforcing, mst_antiforcing_for_tree, mst_forcing, mst_forcing_for_tree};
use forcing_core::oracle::{enumerate_bases, enumerate_st_paths, EnumerationBudget};
use forcing_core::sp_antiforcing::{
    min_antiforcing_set_exact, min_antiforcing_set_for_path, ExactLimits, ExactOutcome,
};
use forcing_core::sp_forcing::{min_forcing_set, min_forcing_set_for_path, ForcingResult};
use forcing_core::spdag::{build_sp_dag, build_sp_dag_undirected, SpDag};
use forcing_core::vc_reduction::{to_simple_unweighted, vc_to_antiforcing_instance};

#[derive(Parser)]
#[command(name = "forcing", version, about = "Forcing and anti-forcing sets for shortest paths and minimum-weight bases")]
struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    json_only: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and print the pruned shortest-path DAG of a path instance.
    SpDag {
        file: PathBuf,
        /// Also write the DAG as a digraph file (edge ids renumbered; the
        /// report carries the id map).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum forcing set for shortest s-t paths.
    SpForce {
        file: PathBuf,
        /// Force this specific path (comma-separated edge ids).
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<usize>>,
    },
    /// Minimum anti-forcing set for shortest s-t paths.
    SpAntiforce {
        file: PathBuf,
        /// Anti-force this specific path (comma-separated edge ids).
        #[arg(long, value_delimiter = ',', conflicts_with = "exact")]
        path: Option<Vec<usize>>,
        /// Solve the NP-hard general problem exactly.
        #[arg(long)]
        exact: bool,
        /// Stop early if no set of this size exists (exact mode).
        #[arg(long)]
        budget: Option<usize>,
        /// Witness-path enumeration threshold for the exact solver.
        #[arg(long, default_value_t = 10_000)]
        path_limit: usize,
        /// Branch-and-bound node cap for the exact solver.
        #[arg(long, default_value_t = 1_000_000)]
        node_limit: u64,
    },
    /// Minimum forcing set for minimum spanning trees.
    MstForce(MstArgs),
    /// Minimum anti-forcing set for minimum spanning trees.
    MstAntiforce(MstArgs),
    /// Minimum forcing set for minimum-weight bases of an explicit matroid.
    MatroidForce(MatroidArgs),
    /// Minimum anti-forcing set for minimum-weight bases of an explicit matroid.
    MatroidAntiforce(MatroidArgs),
    /// Emit the vertex-cover-to-anti-forcing hardness gadget.
    ReduceVc {
        file: PathBuf,
        k: usize,
        /// Rewrite the gadget as a simple unit-weight graph.
        #[arg(long)]
        simple: bool,
        /// Output prefix (writes PREFIX.gr and PREFIX.roles.json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a claimed set against brute-force enumeration.
    Verify {
        kind: VerifyKind,
        file: PathBuf,
        /// The claimed set (comma-separated ids; omit for the empty set).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        /// Weight file for matroid problems.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
}

#[derive(Args)]
struct MstArgs {
    file: PathBuf,
    /// Pin the variant to this minimum spanning tree (edge ids).
    #[arg(long, value_delimiter = ',')]
    basis: Option<Vec<usize>>,
    /// Override edge weights from a weight file.
    #[arg(long, value_parser = clap::value_parser!(PathBuf))]
    weights: Option<PathBuf>,
}

#[derive(Args)]
struct MatroidArgs {
    file: PathBuf,
    /// Weight file (`w <element> <integer>` lines), one entry per element.
    #[arg(long)]
    weights: PathBuf,
    /// Pin the variant to this minimum-weight basis (element ids).
    #[arg(long, value_delimiter = ',')]
    basis: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    SpForce,
    SpAntiforce,
    MstForce,
    MstAntiforce,
    MatroidForce,
    MatroidAntiforce,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    input: InputInfo,
    result: Value,
    elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_calls: Option<u64>,
}

#[derive(Serialize)]
struct InputInfo {
    path: String,
    sha256: String,
}

enum CliError {
    Input(String),
    Resource(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &Path) -> Result<(String, InputInfo), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let digest = Sha256::digest(text.as_bytes());
    let info = InputInfo {
        path: path.display().to_string(),
        sha256: format!("{digest:x}"),
    };
    Ok((text, info))
}

fn load_dag(text: &str) -> Result<SpDag, CliError> {
    match parse_graph(text)? {
        ParsedGraph::Digraph(g) => Ok(build_sp_dag(&g)?),
        ParsedGraph::Multigraph(g) => Ok(build_sp_dag_undirected(&g)?),
    }
}

fn load_multigraph(text: &str, weights: &Option<PathBuf>) -> Result<WeightedMultigraph, CliError> {
    let mut g = match parse_graph(text)? {
        ParsedGraph::Multigraph(g) => g,
        ParsedGraph::Digraph(_) => {
            return Err(CliError::Input("spanning-tree problems need `p graph` input".into()))
        }
    };
    if let Some(wpath) = weights {
        let (wtext, _) = read_input(wpath)?;
        let table = parse_weights(&wtext, g.m())?;
        for (i, e) in g.edges.iter_mut().enumerate() {
            e.weight = table[i + 1];
        }
    }
    Ok(g)
}

fn load_matroid(text: &str, wpath: &Path) -> Result<(MatroidRef, ElementWeights), CliError> {
    let (ground, bases) = parse_matroid(text)?;
    let m = explicit_matroid(ground, bases)?;
    let (wtext, _) = read_input(wpath)?;
    let table = parse_weights(&wtext, ground)?;
    Ok((m, ElementWeights::from_table(table)))
}

fn sorted(mut ids: Vec<usize>) -> Vec<usize> {
    ids.sort_unstable();
    ids
}

fn forcing_result_json(r: &ForcingResult) -> Value {
    json!({
        "size": r.size,
        "set": sorted(r.set.clone()),
        "witness": sorted(r.witness.clone()),
    })
}

fn basis_result_json(r: &BasisForcingResult) -> Value {
    json!({
        "size": r.set.len(),
        "set": sorted(r.set.clone()),
        "witness": sorted(r.basis.clone()),
        "trace": r.trace.rounds,
    })
}

fn emit(cli: &Cli, command: &str, input: InputInfo, result: Value, started: Instant, oracle_calls: Option<u64>) {
    let report = RunReport {
        command: command.to_string(),
        input,
        result,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        oracle_calls,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if !cli.json_only {
        if let Some(size) = report.result.get("size") {
            eprintln!(
                "{command}: size {size}, set {} ({:.2} ms)",
                report.result["set"], report.elapsed_ms
            );
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::SpDag { file, out } => {
            let started = Instant::now();
            let (text, input) = read_input(file)?;
            let dag = load_dag(&text)?;
            let vertices: Vec<usize> = (1..=dag.n()).filter(|&v| dag.is_alive(v)).collect();
            let edges: Vec<Value> = dag
                .edges()
                .iter()
                .map(|e| json!({"id": e.id, "tail": e.tail, "head": e.head, "weight": e.weight}))
                .collect();
            let mut result = json!({
                "s": dag.s(),
                "t": dag.t(),
                "vertex_count": vertices.len(),
                "vertices": vertices,
                "edge_count": dag.edges().len(),
                "edges": edges,
                "shortest_distance": dag.st_distance(),
            });
            if let Some(out) = out {
                // Renumber edges 1..m' in surviving-id order; vertices keep
                // their original numbers.
                let filtered: Vec<(usize, usize, i64)> =
                    dag.edges().iter().map(|e| (e.tail, e.head, e.weight)).collect();
                let g = WeightedDigraph::new(dag.n(), filtered)?
                    .with_terminals(dag.s(), dag.t())?;
                std::fs::write(out, forcing_core::format::write_digraph(&g))?;
                let id_map: Vec<usize> = dag.edges().iter().map(|e| e.id).collect();
                result["out_file"] = json!(out.display().to_string());
                result["edge_id_map"] = json!(id_map);
            }
            emit(cli, "sp-dag", input, result, started, None);
        }

        Command::SpForce { file, path } => {
            let started = Instant::now();
            let (text, input) = read_input(file)?;
            let dag = load_dag(&text)?;
            let r = match path {
                Some(p) => min_forcing_set_for_path(&dag, p)?,
                None => min_forcing_set(&dag),
            };
            emit(cli, "sp-force", input, forcing_result_json(&r), started, None);
        }

        Command::SpAntiforce { file, path, exact, budget, path_limit, node_limit } => {
            let started = Instant::now();
            let (text, input) = read_input(file)?;
            let dag = load_dag(&text)?;
            let result = match (path, exact) {
                (Some(p), _) => forcing_result_json(&min_antiforcing_set_for_path(&dag, p)?),
                (None, true) => {
                    let limits = ExactLimits { path_limit: *path_limit, node_limit: *node_limit };
                    match min_antiforcing_set_exact(&dag, *budget, &limits)? {
                        ExactOutcome::Found(r) => forcing_result_json(&r),
                        ExactOutcome::ExceedsBudget { budget } => {
                            json!({"exceeds_budget": budget})
                        }
                    }
                }
                (None, false) => {
                    return Err(CliError::Input(
                        "sp-antiforce needs --path <ids> or --exact".into(),
                    ))
                }
            };
            emit(cli, "sp-antiforce", input, result, started, None);
        }

        Command::MstForce(args) => {
            let started = Instant::now();
            let (text, input) = read_input(&args.file)?;
            let g = load_multigraph(&text, &args.weights)?;
            let r = match &args.basis {
                Some(tree) => mst_forcing_for_tree(&g, tree)?,
                None => mst_forcing(&g)?,
            };
            emit(cli, "mst-force", input, basis_result_json(&r), started, None);
        }

        Command::MstAntiforce(args) => {
            let started = Instant::now();
            let (text, input) = read_input(&args.file)?;
            let g = load_multigraph(&text, &args.weights)?;
            let r = match &args.basis {
                Some(tree) => mst_antiforcing_for_tree(&g, tree)?,
                None => mst_antiforcing(&g)?,
            };
            emit(cli, "mst-antiforce", input, basis_result_json(&r), started, None);
        }

        Command::MatroidForce(args) => {
            let started = Instant::now();
            let (text, input) = read_input(&args.file)?;
            let (m, w) = load_matroid(&text, &args.weights)?;
            let r = match &args.basis {
                Some(basis) => forcing_for_basis(m.clone(), &w, basis)?,
                None => min_forcing_min_bases(m.clone(), &w)?,
            };
            emit(cli, "matroid-force", input, basis_result_json(&r), started, Some(m.calls()));
        }

        Command::MatroidAntiforce(args) => {
            let started = Instant::now();
            let (text, input) = read_input(&args.file)?;
            let (m, w) = load_matroid(&text, &args.weights)?;
            let r = match &args.basis {
                Some(basis) => antiforcing_for_basis(m.clone(), &w, basis)?,
                None => min_antiforcing_min_bases(m.clone(), &w)?,
            };
            emit(cli, "matroid-antiforce", input, basis_result_json(&r), started, Some(m.calls()));
        }

        Command::ReduceVc { file, k, simple, out } => {
            let started = Instant::now();
            let (text, input) = read_input(file)?;
            let g = match parse_graph(&text)? {
                ParsedGraph::Multigraph(g) => g,
                ParsedGraph::Digraph(_) => {
                    return Err(CliError::Input("reduce-vc needs `p graph` input".into()))
                }
            };
            let inst = vc_to_antiforcing_instance(&g, *k)?;

            let prefix = out.clone().unwrap_or_else(|| {
                let mut p = file.clone();
                p.set_extension("gadget");
                p
            });
            let graph_file = prefix.with_extension("gr");
            let roles_file = prefix.with_extension("roles.json");

            let mut sidecar = json!({
                "n": inst.n,
                "k": inst.k,
                "N": inst.big_n,
                "shortest_path_length": 5 * inst.n + 1,
                "vertex_roles": (1..=inst.graph.n).map(|v| {
                    let (gadget, role) = inst.vertex_role(v);
                    (v.to_string(), json!(format!("{role}({gadget})")))
                }).collect::<serde_json::Map<String, Value>>(),
                "edge_roles": inst.edge_roles().into_iter().map(|(id, role)| {
                    (id.to_string(), json!(role))
                }).collect::<serde_json::Map<String, Value>>(),
                "thick_groups": inst.thick_groups,
            });
            let emitted = if *simple {
                let converted = to_simple_unweighted(&inst.graph)?;
                sidecar["expansion"] = json!(converted
                    .expansion
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(id, chain)| (id.to_string(), json!(chain)))
                    .collect::<serde_json::Map<String, Value>>());
                converted.graph
            } else {
                inst.graph.clone()
            };
            std::fs::write(&graph_file, write_multigraph(&emitted))?;
            std::fs::write(&roles_file, serde_json::to_string_pretty(&sidecar).expect("serializes"))?;

            let result = json!({
                "n": inst.n,
                "k": inst.k,
                "N": inst.big_n,
                "shortest_path_length": 5 * inst.n + 1,
                "vertex_count": emitted.n,
                "edge_count": emitted.m(),
                "simple": simple,
                "graph_file": graph_file.display().to_string(),
                "roles_file": roles_file.display().to_string(),
            });
            emit(cli, "reduce-vc", input, result, started, None);
        }

        Command::Verify { kind, file, set, weights } => {
            let started = Instant::now();
            let (text, input) = read_input(file)?;
            let result = verify(kind, &text, set.as_deref().unwrap_or(&[]), weights)?;
            emit(cli, "verify", input, result, started, None);
        }
    }
    Ok(())
}

/// Checks a claimed set against exhaustive enumeration: is it (anti-)forcing
/// at all, and does its size match the brute-force minimum?
fn verify(
    kind: &VerifyKind,
    text: &str,
    set: &[usize],
    weights: &Option<PathBuf>,
) -> Result<Value, CliError> {
    let budget = EnumerationBudget::default();
    let set = sorted(set.to_vec());

    let (solutions, universe): (Vec<Vec<usize>>, Vec<usize>) = match kind {
        VerifyKind::SpForce | VerifyKind::SpAntiforce => {
            let dag = load_dag(text)?;
            let paths = enumerate_st_paths(&dag, &budget)?;
            let universe = dag.edges().iter().map(|e| e.id).collect();
            (paths, universe)
        }
        VerifyKind::MstForce | VerifyKind::MstAntiforce => {
            let g = load_multigraph(text, weights)?;
            if !g.is_connected() {
                return Err(CoreError::Disconnected.into());
            }
            let m = graphic_matroid(&g);
            let trees = enumerate_bases(m.as_ref(), &budget)?;
            let weight =
                |t: &Vec<usize>| -> i64 { t.iter().map(|&id| g.edges[id - 1].weight).sum() };
            let best = trees.iter().map(&weight).min().ok_or(CoreError::NoSolutions)?;
            let optima = trees.into_iter().filter(|t| weight(t) == best).collect();
            (optima, (1..=g.m()).collect())
        }
        VerifyKind::MatroidForce | VerifyKind::MatroidAntiforce => {
            let wpath = weights
                .as_ref()
                .ok_or_else(|| CliError::Input("matroid verification needs --weights".into()))?;
            let (m, w) = load_matroid(text, wpath)?;
            let bases = enumerate_bases(m.as_ref(), &budget)?;
            let best = bases.iter().map(|b| w.total(b)).min().ok_or(CoreError::NoSolutions)?;
            let optima = bases.into_iter().filter(|b| w.total(b) == best).collect();
            (optima, m.ground().to_vec())
        }
    };

    let forcing = matches!(kind, VerifyKind::SpForce | VerifyKind::MstForce | VerifyKind::MatroidForce);
    let holders: Vec<&Vec<usize>> = if forcing {
        solutions.iter().filter(|x| set.iter().all(|e| x.contains(e))).collect()
    } else {
        solutions.iter().filter(|x| set.iter().all(|e| !x.contains(e))).collect()
    };
    let valid = holders.len() == 1;
    let minimum = if forcing {
        forcing_core::oracle::brute_min_forcing(&solutions, &budget)?
    } else {
        forcing_core::oracle::brute_min_antiforcing(&solutions, &universe, &budget)?
    };

    let mut result = json!({
        "valid": valid,
        "claimed_size": set.len(),
        "minimum_size": minimum.size,
        "is_minimum": valid && set.len() == minimum.size,
        "solution_count": solutions.len(),
    });
    if let Some(w) = holders.first() {
        result["witness"] = json!(sorted((*w).clone()));
    }
    Ok(result)
}
