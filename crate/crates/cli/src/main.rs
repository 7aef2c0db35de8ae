//! `nourish`: command-line front end for graph families, powers, cliques,
//! strong set-labelings and nourishing-number reconciliation.
//!
//! Exit codes: 0 success, 1 verification failure or golden mismatch,
//! 2 usage or parse error.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iasi_core::families::{self, FamilyKind, FamilySpec};
use iasi_core::graph::Graph;
use iasi_core::labeling::{self, Labeling};
use iasi_core::nourish::{self, Status};

#[derive(Parser)]
#[command(name = "nourish", version, about = "Strong IASIs and nourishing numbers of graph powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family graph.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the r-th power of a family graph or a graph file.
    Power {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Maximum clique of a family graph power or a graph file.
    Omega {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Nourishing number of a family graph power.
    Kappa {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Emit a strong IASI labeling of a family graph power as JSON.
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Cardinality of every vertex label.
        #[arg(long = "set-size", default_value_t = 2)]
        set_size: usize,
        /// Also write the labelled graph as JSON.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the labeling here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling against a graph; exit 0 iff it is a strong IASI.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare closed-form nourishing numbers with the clique oracle.
    ///
    /// Without --family the full default grid is used. Ranges are inclusive,
    /// written `3..8` or as a single value. Omitting --r uses 1..=diameter+1
    /// for each graph.
    Reconcile {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Exit 1 unless the output matches this file byte-for-byte.
        #[arg(long)]
        expect_golden: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Family selection. Paths are indexed by length: `--m 3` has 4 vertices.
/// Split graphs take `--c` and `--adj "0,1;2"` (clique neighbours of each
/// independent vertex, separated by `;`).
#[derive(Args)]
struct FamilyArgs {
    /// path, cycle, complete, kmn, wheel, helm, friendship, fan, split, ksplit, sun, csun, sunlet
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    adj: Option<String>,
}

#[derive(Args)]
struct GraphSource {
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    adj: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Oracle,
    Both,
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn need(value: Option<usize>, family: &str, param: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("{family} requires --{param}")))
}

fn build_spec(
    family: &str,
    m: Option<usize>,
    n: Option<usize>,
    c: Option<usize>,
    s: Option<usize>,
    adj: Option<&str>,
) -> CliResult<FamilySpec> {
    let kind: FamilyKind = family.parse().map_err(CliError::usage)?;
    let spec = match kind {
        FamilyKind::Path => FamilySpec::Path { m: need(m, family, "m")? },
        FamilyKind::Cycle => FamilySpec::Cycle { n: need(n, family, "n")? },
        FamilyKind::Complete => FamilySpec::Complete { n: need(n, family, "n")? },
        FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite {
            m: need(m, family, "m")?,
            n: need(n, family, "n")?,
        },
        FamilyKind::Wheel => FamilySpec::Wheel { n: need(n, family, "n")? },
        FamilyKind::Helm => FamilySpec::Helm { n: need(n, family, "n")? },
        FamilyKind::Friendship => FamilySpec::Friendship { n: need(n, family, "n")? },
        FamilyKind::Fan => FamilySpec::Fan {
            m: need(m, family, "m")?,
            n: need(n, family, "n")?,
        },
        FamilyKind::Split => FamilySpec::Split {
            c: need(c, family, "c")?,
            adj: families::parse_adjacency(adj.unwrap_or(""))
                .map_err(|e| CliError::Usage(format!("bad --adj: {e}")))?,
        },
        FamilyKind::CompleteSplit => FamilySpec::CompleteSplit {
            c: need(c, family, "c")?,
            s: need(s, family, "s")?,
        },
        FamilyKind::Sun => FamilySpec::Sun { n: need(n, family, "n")? },
        FamilyKind::CompleteSun => FamilySpec::CompleteSun { n: need(n, family, "n")? },
        FamilyKind::Sunlet => FamilySpec::Sunlet { n: need(n, family, "n")? },
    };
    spec.validate().map_err(CliError::usage)?;
    Ok(spec)
}

impl FamilyArgs {
    fn spec(&self) -> CliResult<FamilySpec> {
        build_spec(&self.family, self.m, self.n, self.c, self.s, self.adj.as_deref())
    }
}

impl GraphSource {
    fn load(&self) -> CliResult<Graph> {
        match (&self.graph, &self.family) {
            (Some(path), _) => read_json(path),
            (None, Some(family)) => {
                let spec = build_spec(family, self.m, self.n, self.c, self.s, self.adj.as_deref())?;
                families::generate(&spec).map_err(CliError::usage)
            }
            (None, None) => Err(CliError::Usage("give --graph FILE or --family NAME".into())),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => json_line(g),
        Format::Dot => g.to_dot(),
        Format::Csv => {
            let mut out = String::from("u,v\n");
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u},{v}");
            }
            out
        }
        Format::Table => {
            let mut out = format!("vertices {}\nedges {}\n", g.n(), g.edge_count());
            for v in 0..g.n() {
                let nbrs: Vec<String> = g.neighbors(v).map(|u| u.to_string()).collect();
                let _ = writeln!(out, "{v}: {}", nbrs.join(" "));
            }
            out
        }
    }
}

fn no_dot(format: Format) -> CliResult<()> {
    if format == Format::Dot {
        return Err(CliError::Usage("--format dot is only available for gen and power".into()));
    }
    Ok(())
}

fn join(ws: &[usize]) -> String {
    ws.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_range(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || CliError::Usage(format!("bad range `{text}` (expected A..B or A)"));
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let v = parse(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn thread_cap() -> Option<usize> {
    std::env::var("NOURISH_THREADS").ok()?.trim().parse().ok()
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen { family, format } => {
            let g = families::generate(&family.spec()?).map_err(CliError::usage)?;
            print!("{}", render_graph(&g, format));
        }
        Command::Power { source, r, format } => {
            let g = source.load()?.power(r).map_err(CliError::usage)?;
            print!("{}", render_graph(&g, format));
        }
        Command::Omega { source, r, format } => {
            no_dot(format)?;
            let clique = source.load()?.power(r).map_err(CliError::usage)?.clique_number();
            match format {
                Format::Json => print!("{}", json_line(&clique)),
                Format::Csv => print!("size,witness\n{},{}\n", clique.size, join(&clique.witness)),
                _ => print!("omega: {}\nwitness: {}\n", clique.size, join(&clique.witness)),
            }
        }
        Command::Kappa { family, r, mode, format } => {
            no_dot(format)?;
            if r == 0 {
                return Err(CliError::Usage("--r must be >= 1".into()));
            }
            let spec = family.spec()?;
            let formula = nourish::formula_kappa(&spec, r);
            let formula_text = formula.map_or_else(|| "undefined".to_owned(), |f| f.to_string());
            match mode {
                Mode::Formula => match format {
                    Format::Json => print!("{}", json_line(&serde_json::json!({ "formula": formula }))),
                    _ => println!("{formula_text}"),
                },
                Mode::Oracle => {
                    let (value, witness) = nourish::oracle_kappa(&spec, r).map_err(CliError::usage)?;
                    match format {
                        Format::Json => print!(
                            "{}",
                            json_line(&serde_json::json!({ "oracle": value, "witness": witness }))
                        ),
                        _ => println!("{value}"),
                    }
                }
                Mode::Both => {
                    let record = nourish::reconcile_cell(&spec, r);
                    match format {
                        Format::Json => print!("{}", json_line(&record)),
                        Format::Csv => print!("{}", nourish::to_csv(&[record])),
                        _ => print!(
                            "formula: {formula_text}\noracle: {}\nstatus: {}\nwitness: {}\n",
                            record.oracle.unwrap_or(0),
                            record.status.as_str(),
                            join(&record.witness)
                        ),
                    }
                }
            }
        }
        Command::Label { family, r, set_size, graph_out, out } => {
            let g = families::generate(&family.spec()?)
                .map_err(CliError::usage)?
                .power(r)
                .map_err(CliError::usage)?;
            let labeling = labeling::construct_strong_iasi(&g, set_size).map_err(CliError::usage)?;
            if let Some(path) = graph_out {
                write_out(Some(&path), &json_line(&g))?;
            }
            write_out(out.as_deref(), &json_line(&labeling))?;
        }
        Command::Verify { graph, labeling: labeling_path, format } => {
            no_dot(format)?;
            let g: Graph = read_json(&graph)?;
            let l: Labeling = read_json(&labeling_path)?;
            let report = labeling::verify_strong_iasi(&g, &l).map_err(CliError::usage)?;
            match format {
                Format::Json => print!("{}", json_line(&report)),
                _ => {
                    println!("is_iasi: {}\nis_strong: {}", report.is_iasi, report.is_strong);
                    for f in &report.failures {
                        println!("{}", json_line(f).trim_end());
                    }
                }
            }
            if !report.is_strong {
                return Err(CliError::Failed(format!(
                    "not a strong IASI ({} failure(s))",
                    report.failures.len()
                )));
            }
        }
        Command::Reconcile { family, m, n, c, s, r, format, expect_golden, out } => {
            no_dot(format)?;
            let cells = match family {
                None => {
                    if [&m, &n, &c, &s, &r].iter().any(|o| o.is_some()) {
                        return Err(CliError::Usage("parameter ranges need --family".into()));
                    }
                    families::default_grid()
                }
                Some(name) => {
                    let kind: FamilyKind = name.parse().map_err(CliError::usage)?;
                    let given = [("m", &m), ("n", &n), ("c", &c), ("s", &s)];
                    let defaults = kind.default_ranges();
                    let mut ranges = Vec::new();
                    for (i, &(axis, _)) in kind.axes().iter().enumerate() {
                        let text = given.iter().find(|(k, _)| *k == axis).and_then(|(_, v)| v.as_deref());
                        ranges.push(match text {
                            Some(t) => parse_range(t)?,
                            None => defaults[i].clone(),
                        });
                    }
                    for (k, v) in given {
                        if v.is_some() && !kind.axes().iter().any(|(a, _)| *a == k) {
                            return Err(CliError::Usage(format!("{name} takes no --{k}")));
                        }
                    }
                    match r {
                        Some(t) => families::family_grid(kind, &ranges, parse_range(&t)?),
                        None => families::family_grid_to_diameter(kind, &ranges),
                    }
                    .map_err(CliError::usage)?
                }
            };
            let records = nourish::reconcile_parallel(&cells, thread_cap());
            let text = match format {
                Format::Json => nourish::to_json(&records),
                Format::Table => nourish::to_table(&records),
                _ => nourish::to_csv(&records),
            };
            write_out(out.as_deref(), &text)?;
            if let Some(path) = expect_golden {
                let golden = fs::read(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                if golden != text.as_bytes() {
                    let golden = String::from_utf8_lossy(&golden);
                    let line = golden
                        .lines()
                        .zip(text.lines())
                        .position(|(a, b)| a != b)
                        .unwrap_or_else(|| golden.lines().count().min(text.lines().count()));
                    return Err(CliError::Failed(format!(
                        "output differs from {} at line {}",
                        path.display(),
                        line + 1
                    )));
                }
                let disagreements = records.iter().filter(|r| r.status != Status::Agree).count();
                eprintln!("matches golden table ({} records, {disagreements} not agreeing)", records.len());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("nourish: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("nourish: {msg}");
            ExitCode::from(2)
        }
    }
}
