use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dimkit::graphs::{
    find_claw, find_threshold_obstruction, perfect_elimination_order, recognize_interval,
    recognize_split, recognize_threshold, recognize_unit_interval, Graph, SplitObstructionKind,
    SplitPartition, SplitVerdict, ThresholdObstructionKind,
};
use dimkit::io;
use dimkit::posets::{characteristic_poset, poset_dimension};
use dimkit::reductions;
use dimkit::solvers::{boxicity, cubicity, threshold_dimension, threshold_intersection_number};
use dimkit::verify::{verify_theorem, THEOREM_IDS};
use dimkit::{Error, IntersectionRep, SearchConfig};

/// Boxicity, cubicity, threshold dimension and poset dimension at desk scale.
#[derive(Parser, Debug)]
#[command(name = "dimkit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test membership of a graph in a class.
    Recognize {
        #[arg(long, value_enum)]
        class: Class,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute a dimension parameter exactly.
    Dim {
        #[arg(long, value_enum)]
        param: Param,
        file: PathBuf,
        /// Solver timeout in milliseconds (overrides DIMKIT_TIMEOUT_MS).
        #[arg(long)]
        timeout: Option<u64>,
        /// Largest instance the solver accepts.
        #[arg(long)]
        max_n: Option<usize>,
        /// Write the witness here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one of the constructions on input files.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        inputs: Vec<PathBuf>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run a theorem suite.
    Verify {
        id: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Class {
    Split,
    Threshold,
    Interval,
    UnitInterval,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Param {
    Boxicity,
    Cubicity,
    Tdim,
    Tint,
    Posetdim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReduceKind {
    PosetToSplit,
    SplitToGprime,
    TwoThreshold,
    RealizerFromCover,
    ThresholdFromRealizer,
    SandwichThreshold,
    SandwichInterval,
    HiIntervals,
}

/// A failed command: message and exit code.
struct Failure(String, u8);

const NEGATIVE: u8 = 1;
const INPUT: u8 = 2;
const LIMIT: u8 = 3;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } | Error::Timeout { .. } => LIMIT,
            Error::Internal(_) => NEGATIVE,
            _ => INPUT,
        };
        Failure(e.to_string(), code)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recognize { class, file, format } => recognize(class, &file, format),
        Command::Dim { param, file, timeout, max_n, witness, format } => {
            dim(param, &file, timeout, max_n, witness.as_deref(), format)
        }
        Command::Reduce { kind, inputs, out } => reduce(kind, &inputs, &out),
        Command::Verify { id, n_max, samples, seed, format } => verify(&id, n_max, samples, seed, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display()), INPUT))
}

fn with_path<T>(path: &Path, r: dimkit::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let Failure(msg, code) = Failure::from(e);
        Failure(format!("{}: {msg}", path.display()), code)
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    with_path(path, io::parse_graph(&read(path)?))
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display()), INPUT))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Failure(format!("{}: {e}", path.display()), INPUT))?;
    Ok(path)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
    }
}

fn recognize(class: Class, file: &Path, format: Format) -> Outcome {
    let g = load_graph(file)?;
    if g.n() == 0 {
        return Err(Failure("graph has no vertices".into(), INPUT));
    }
    let (member, text, value) = match class {
        Class::Split => match recognize_split(&g)? {
            SplitVerdict::Split(p) => (
                true,
                format!("split: yes\nclique: {}\nindependent: {}\n", join(&p.clique), join(&p.independent)),
                json!({"class": "split", "member": true, "clique": p.clique, "independent": p.independent}),
            ),
            SplitVerdict::NotSplit(obs) => {
                let kind = match obs.kind {
                    SplitObstructionKind::TwoK2 => "2K2",
                    SplitObstructionKind::C4 => "C4",
                    SplitObstructionKind::C5 => "C5",
                };
                let reason = format!("induced {kind}: {}", join(&obs.vertices));
                (false, format!("split: no\n{reason}\n"), json!({"class": "split", "member": false, "reason": reason}))
            }
        },
        Class::Threshold => match recognize_threshold(&g)? {
            Some(order) => (
                true,
                format!("threshold: yes\nelimination order: {}\n", join(&order)),
                json!({"class": "threshold", "member": true, "elimination_order": order}),
            ),
            None => {
                let obs = find_threshold_obstruction(&g).ok_or_else(|| Failure("no obstruction found".into(), NEGATIVE))?;
                let kind = match obs.kind {
                    ThresholdObstructionKind::TwoK2 => "2K2",
                    ThresholdObstructionKind::C4 => "C4",
                    ThresholdObstructionKind::P4 => "P4",
                };
                let reason = format!("induced {kind}: {}", join(&obs.vertices));
                (false, format!("threshold: no\n{reason}\n"), json!({"class": "threshold", "member": false, "reason": reason}))
            }
        },
        Class::Interval => match recognize_interval(&g)? {
            Some(rep) => (
                true,
                format!("interval: yes\n{}", io::write_interval_rep(&rep)),
                json!({"class": "interval", "member": true, "intervals": rep.intervals}),
            ),
            None => {
                let reason = if perfect_elimination_order(&g).is_none() {
                    "not chordal"
                } else {
                    "no consecutive ordering of maximal cliques"
                };
                (false, format!("interval: no\n{reason}\n"), json!({"class": "interval", "member": false, "reason": reason}))
            }
        },
        Class::UnitInterval => match recognize_unit_interval(&g)? {
            Some(rep) => {
                let lefts: Vec<String> = rep.left.iter().map(|a| a.to_string()).collect();
                (
                    true,
                    format!("unit-interval: yes\nleft endpoints: {}\n", lefts.join(" ")),
                    json!({"class": "unit-interval", "member": true, "left": lefts}),
                )
            }
            None => {
                let reason = match find_claw(&g) {
                    Some(c) => format!("induced claw: {}", join(&c)),
                    None => "not interval".to_string(),
                };
                (false, format!("unit-interval: no\n{reason}\n"), json!({"class": "unit-interval", "member": false, "reason": reason}))
            }
        },
    };
    emit(format, text, value);
    Ok(if member { 0 } else { NEGATIVE })
}

fn dim(param: Param, file: &Path, timeout: Option<u64>, max_n: Option<usize>, witness: Option<&Path>, format: Format) -> Outcome {
    let base = match param {
        Param::Posetdim => SearchConfig::posets(),
        _ => SearchConfig::graphs(),
    };
    let mut cfg = base.with_env_timeout();
    if let Some(ms) = timeout {
        cfg = cfg.with_timeout(Duration::from_millis(ms));
    }
    if let Some(m) = max_n {
        cfg = cfg.with_max_n(m);
    }
    let name = match param {
        Param::Boxicity => "boxicity",
        Param::Cubicity => "cubicity",
        Param::Tdim => "tdim",
        Param::Tint => "tint",
        Param::Posetdim => "posetdim",
    };
    let text = read(file)?;
    let solved = match param {
        Param::Posetdim => {
            let p = with_path(file, io::parse_poset(&text))?;
            poset_dimension(&p, &cfg).map(|(k, r)| (k, io::write_realizer(p.n(), &r)))
        }
        _ => {
            let g = with_path(file, io::parse_graph(&text))?;
            let factors = |r: dimkit::Result<(usize, IntersectionRep)>| r.map(|(k, rep)| (k, io::write_witness(&rep.factors)));
            match param {
                Param::Boxicity => factors(boxicity(&g, &cfg)),
                Param::Cubicity => factors(cubicity(&g, &cfg)),
                Param::Tint => factors(threshold_intersection_number(&g, &cfg)),
                _ => threshold_dimension(&g, &cfg).map(|(k, c)| (k, io::write_witness(&c.0))),
            }
        }
    };
    let (k, wit) = match solved {
        Ok(x) => x,
        Err(Error::Timeout { best_upper_bound }) => {
            let bound = best_upper_bound.map_or("none".to_string(), |b| b.to_string());
            emit(
                format,
                format!("{name} timed out; best upper bound {bound}\n"),
                json!({"param": name, "timeout": true, "best_upper_bound": best_upper_bound}),
            );
            return Ok(LIMIT);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = witness {
        fs::write(path, &wit).map_err(|e| Failure(format!("{}: {e}", path.display()), INPUT))?;
    }
    emit(format, format!("{name} = {k}\n"), json!({"param": name, "value": k}));
    Ok(0)
}

fn partition_of(g: &Graph, path: &Path) -> Result<SplitPartition, Failure> {
    with_path(path, recognize_split(g))?
        .partition()
        .ok_or_else(|| Failure(format!("{}: graph is not split", path.display()), INPUT))
}

fn inputs<'a>(kind: &str, paths: &'a [PathBuf], min: usize, max: usize) -> Result<&'a [PathBuf], Failure> {
    if paths.len() < min || paths.len() > max {
        let want = if min == max { min.to_string() } else { format!("{min} to {max}") };
        return Err(Failure(format!("{kind} takes {want} input files, got {}", paths.len()), INPUT));
    }
    Ok(paths)
}

fn reduce(kind: ReduceKind, paths: &[PathBuf], out: &Path) -> Outcome {
    match kind {
        ReduceKind::PosetToSplit => {
            let [pf] = inputs("poset-to-split", paths, 1, 1)? else { unreachable!() };
            let p = with_path(pf, io::parse_poset(&read(pf)?))?;
            let gp = reductions::poset_to_split_graph(&p)?;
            let n = p.n();
            let clique: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
            let indep: Vec<(usize, usize)> = (0..n).map(|x| (x, gp.independent_vertex(x))).collect();
            let g = write(out, "split.graph", &io::write_graph(&gp.graph))?;
            write(out, "clique.map", &io::write_vertex_map(&clique))?;
            write(out, "independent.map", &io::write_vertex_map(&indep))?;
            println!(
                "poset-to-split: {} vertices -> {}; clique {}; independent {}",
                gp.graph.n(),
                g.display(),
                join(&gp.partition.clique),
                join(&gp.partition.independent)
            );
            print!("element -> clique vertex\n{}", io::write_vertex_map(&clique));
            print!("element -> independent vertex\n{}", io::write_vertex_map(&indep));
        }
        ReduceKind::SplitToGprime => {
            let [hf] = inputs("split-to-gprime", paths, 1, 1)? else { unreachable!() };
            let h = load_graph(hf)?;
            let gp = with_path(hf, reductions::split_to_gprime(&h))?;
            let (m1, m2) = gp.vertex_map();
            let g = write(out, "gprime.graph", &io::write_graph(&gp.graph))?;
            write(out, "copy1.map", &io::write_vertex_map(&m1))?;
            write(out, "copy2.map", &io::write_vertex_map(&m2))?;
            println!(
                "split-to-gprime: {} vertices -> {}; trivial_case={}; clique {}",
                gp.graph.n(),
                g.display(),
                gp.trivial_case,
                join(&gp.partition.clique)
            );
            print!("copy 1\n{}", io::write_vertex_map(&m1));
            if !m2.is_empty() {
                print!("copy 2\n{}", io::write_vertex_map(&m2));
            }
        }
        ReduceKind::TwoThreshold => {
            let files = inputs("two-threshold", paths, 1, 2)?;
            let g = load_graph(&files[0])?;
            let part = partition_of(&g, &files[0])?;
            let rep = match files.get(1) {
                Some(rf) => with_path(rf, io::parse_interval_rep(&read(rf)?))?,
                None => recognize_interval(&g)?
                    .ok_or_else(|| Failure(format!("{}: graph is not interval", files[0].display()), INPUT))?,
            };
            let (g1, g2) = reductions::two_threshold_cover(&g, &part, &rep)?;
            let w = write(out, "two_threshold.witness", &io::write_witness(&[g1, g2]))?;
            println!("two-threshold: 2 threshold graphs -> {}", w.display());
        }
        ReduceKind::RealizerFromCover => {
            let [gf, wf] = inputs("realizer-from-cover", paths, 2, 2)? else { unreachable!() };
            let g = load_graph(gf)?;
            let part = partition_of(&g, gf)?;
            let factors = with_path(wf, io::parse_witness(&read(wf)?))?;
            let rep = IntersectionRep { kind: dimkit::FactorKind::Threshold, factors };
            let r = reductions::realizer_from_threshold_cover(&g, &part, &rep)?;
            let cp = characteristic_poset(&g, &part)?;
            write(out, "charposet.poset", &io::write_poset(&cp.poset))?;
            let rf = write(out, "realizer.txt", &io::write_realizer(cp.poset.n(), &r))?;
            println!("realizer-from-cover: {} extensions of a {}-element poset -> {}", r.len(), cp.poset.n(), rf.display());
            for x in 0..cp.poset.n() {
                println!("element {x}: independent {}", join(&cp.reps[x]));
            }
        }
        ReduceKind::ThresholdFromRealizer => {
            let [pf, rf] = inputs("threshold-from-realizer", paths, 2, 2)? else { unreachable!() };
            let p = with_path(pf, io::parse_poset(&read(pf)?))?;
            let r = with_path(rf, io::parse_realizer(&read(rf)?))?;
            let rep = reductions::threshold_graphs_from_realizer(&p, &r)?;
            let w = write(out, "threshold.witness", &io::write_witness(&rep.factors))?;
            println!("threshold-from-realizer: {} threshold graphs -> {}", rep.factors.len(), w.display());
        }
        ReduceKind::SandwichThreshold => {
            let [gf, sf] = inputs("sandwich-threshold", paths, 2, 2)? else { unreachable!() };
            let g = load_graph(gf)?;
            let part = partition_of(&g, gf)?;
            let sup = load_graph(sf)?;
            let h = reductions::threshold_sandwich(&g, &part, &sup)?;
            let w = write(out, "sandwich.graph", &io::write_graph(&h))?;
            println!("sandwich-threshold: {} edges -> {}", h.edge_count(), w.display());
        }
        ReduceKind::SandwichInterval => {
            let [gf, rf] = inputs("sandwich-interval", paths, 2, 2)? else { unreachable!() };
            let g = load_graph(gf)?;
            let part = partition_of(&g, gf)?;
            let rep = with_path(rf, io::parse_interval_rep(&read(rf)?))?;
            let (h, hrep) = reductions::split_interval_sandwich(&g, &part, &rep)?;
            let w = write(out, "sandwich.graph", &io::write_graph(&h))?;
            write(out, "sandwich.intervals", &io::write_interval_rep(&hrep))?;
            println!("sandwich-interval: {} edges -> {}", h.edge_count(), w.display());
        }
        ReduceKind::HiIntervals => {
            let files = inputs("hi-intervals", paths, 1, 2)?;
            let h = load_graph(&files[0])?;
            let cover = match files.get(1) {
                Some(cf) => dimkit::ThresholdCover(with_path(cf, io::parse_witness(&read(cf)?))?),
                None => {
                    let cfg = SearchConfig::graphs().with_env_timeout();
                    threshold_dimension(&h, &cfg)?.1
                }
            };
            let reps = with_path(&files[0], reductions::interval_reps_from_cover(&h, &cover))?;
            let graphs: Vec<Graph> = reps.iter().map(|(g, _)| g.clone()).collect();
            let w = write(out, "hi.witness", &io::write_witness(&graphs))?;
            for (i, (_, rep)) in reps.iter().enumerate() {
                write(out, &format!("hi_{}.intervals", i + 1), &io::write_interval_rep(rep))?;
            }
            println!("hi-intervals: {} interval graphs on {} vertices -> {}", reps.len(), 2 * h.n(), w.display());
        }
    }
    Ok(0)
}

fn verify(id: &str, n_max: usize, samples: usize, seed: u64, format: Format) -> Outcome {
    if !THEOREM_IDS.contains(&id) {
        return Err(Failure(format!("unknown theorem `{id}`; valid ids: {}", THEOREM_IDS.join(", ")), INPUT));
    }
    let report = verify_theorem(id, n_max, samples, seed)?;
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(if report.passed() { 0 } else { NEGATIVE })
}
