use std::io::{Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kpoly::canon::{find_isomorphism, MAX_N_ENV};
use kpoly::formats::{emit_dot, emit_graph6, emit_json, parse_graph6, parse_graph6_stream, parse_json};
use kpoly::generators::basic::{basic, Family};
use kpoly::generators::{
    dou_h, dou_j, odd_prism_factor, quad_factor, stacked_cube_factor, t3333_build, DouHSpec, T3333Final, T3333Move,
    T3333Script,
};
use kpoly::graph::{is_bipartite, vertex_connectivity};
use kpoly::harness::{catalog, run_experiment, Bounds, Verdict, EXPERIMENTS};
use kpoly::planar::{is_outerplanar, is_planar, is_polyhedron, is_quadrangulation, planar_embed};
use kpoly::products::{cartesian, cover, kronecker, prism, ProductLabeling};
use kpoly::recognition::{cartesian_forms_with, classify_odd_faces_with, find_factor_witness_with, kronecker_roots_with};
use kpoly::{Error, Graph, Limits};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "kpoly", version, about = "Polyhedral Kronecker and Cartesian products")]
struct Cli {
    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::G6)]
    format: Format,
    /// Vertex cap for automorphism searches (overrides KPOLY_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Json,
    Dot,
}

/// Graph arguments are a file path, `-` for stdin, or inline graph6/JSON.
#[derive(Subcommand)]
enum Command {
    /// Build a graph from a named family.
    Gen {
        /// cycle, path, complete, ladder, stacked_prism, petersen, desargues,
        /// stacked_cube_factor, odd_prism_factor, quad_factor, t3333, dou_h, dou_j
        family: String,
        /// Integer parameters; for t3333 a script such as `T1,T2m,F2`.
        params: Vec<String>,
        /// Chords for dou_h / dou_j, e.g. `1-6,2-5`.
        #[arg(long, default_value = "")]
        chords: String,
    },
    /// Kronecker or Cartesian product of two graphs.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        a: String,
        b: String,
    },
    /// The Kronecker cover `G ∧ K2`.
    Cover { graph: String },
    /// Structural predicates of a graph and of its cover.
    Check { graph: String },
    /// Odd-face condition of a planar graph.
    Classify { graph: String },
    /// Every `J` with `J ∧ K2 ≅ G`.
    Roots { graph: String },
    /// Every Cartesian expression of a polyhedron.
    CartesianForms { graph: String },
    /// Isomorphism test; exits 1 when the graphs differ.
    Iso { a: String, b: String },
    /// Faces of a planar embedding.
    Faces { graph: String },
    /// Run a registered experiment.
    Experiment {
        name: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        script_len: Option<usize>,
        /// graph6 stream for ingest_classify.
        #[arg(long)]
        input: Option<String>,
    },
    /// List the catalog, or print one entry's graph.
    Catalog { name: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Kronecker,
    Cartesian,
    Prism,
}

fn read_text(arg: &str) -> anyhow::Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    let text = read_text(arg)?;
    let g = if text.trim_start().starts_with('{') { parse_json(&text)? } else { parse_graph6(text.trim())? };
    Ok(g)
}

fn ints(params: &[String], want: usize, family: &str) -> anyhow::Result<Vec<usize>> {
    if params.len() != want {
        bail!(Error::BadParams(format!("{family} takes {want} parameter(s), got {}", params.len())));
    }
    params.iter().map(|p| p.parse().with_context(|| format!("parameter {p:?} is not a count"))).collect()
}

fn parse_script(s: &str) -> anyhow::Result<T3333Script> {
    let tokens: Vec<&str> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let (last, moves) = tokens.split_last().ok_or_else(|| anyhow!("empty t3333 script"))?;
    let last = match *last {
        "F1" => T3333Final::F1,
        "F2" => T3333Final::F2,
        t => bail!("script must end with F1 or F2, found {t:?}"),
    };
    let moves = moves
        .iter()
        .map(|t| match *t {
            "T1" => Ok(T3333Move::T1),
            "T2" => Ok(T3333Move::T2),
            "T2m" => Ok(T3333Move::T2m),
            t => Err(anyhow!("unknown move {t:?}")),
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(T3333Script::new(moves, last))
}

fn parse_chords(s: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t.trim().split_once('-').ok_or_else(|| anyhow!("chord {t:?} is not of the form u-v"))?;
            Ok((a.parse()?, b.parse()?))
        })
        .collect()
}

fn generate(family: &str, params: &[String], chords: &str) -> anyhow::Result<Graph> {
    if let Some(f) = Family::from_name(family) {
        let p = params.iter().map(|p| p.parse()).collect::<Result<Vec<usize>, _>>().context("parameters must be counts")?;
        return Ok(basic(f, &p)?);
    }
    let g = match family {
        "stacked_cube_factor" => {
            let p = ints(params, 2, family)?;
            stacked_cube_factor(p[0], p[1])?.0
        }
        "odd_prism_factor" => {
            let p = ints(params, 2, family)?;
            odd_prism_factor(p[0], p[1])?
        }
        "quad_factor" => {
            let p = ints(params, 2, family)?;
            quad_factor(p[0], p[1])?.0
        }
        "t3333" => {
            let [script] = params else { bail!(Error::BadParams("t3333 takes one script".into())) };
            t3333_build(&parse_script(script)?)?
        }
        "dou_h" | "dou_j" => {
            let half = ints(params, 1, family)?[0];
            let h = dou_h(&DouHSpec { half, diagonals: parse_chords(chords)? })?;
            if family == "dou_h" {
                h
            } else {
                dou_j(&h)?
            }
        }
        _ => bail!(Error::BadParams(format!("unknown family {family:?}"))),
    };
    Ok(g)
}

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn render(g: &Graph, labels: Option<&ProductLabeling>, format: Format) -> String {
    match format {
        Format::G6 => emit_graph6(g),
        Format::Json => emit_json(g),
        Format::Dot => emit_dot(g, labels).trim_end().to_string(),
    }
}

struct Ctx {
    format: Format,
    limits: Limits,
    report: Option<PathBuf>,
}

impl Ctx {
    /// Prints `value` and mirrors it into the report file.
    fn emit(&self, value: &serde_json::Value) -> anyhow::Result<()> {
        let text = serde_json::to_string_pretty(value)?;
        out(&text);
        self.write_report(&text)
    }

    fn write_report(&self, text: &str) -> anyhow::Result<()> {
        if let Some(path) = &self.report {
            std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    fn graph(&self, g: &Graph, labels: Option<&ProductLabeling>) -> anyhow::Result<()> {
        let text = render(g, labels, self.format);
        out(&text);
        self.write_report(&text)
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let limits = match cli.max_n {
        Some(n) => Limits::default().with_max_n(n),
        None => Limits::from_env(),
    };
    let ctx = Ctx { format: cli.format, limits, report: cli.report };
    let lim = &ctx.limits;
    match cli.command {
        Command::Gen { family, params, chords } => {
            ctx.graph(&generate(&family, &params, &chords)?, None)?;
        }
        Command::Product { kind, a, b } => {
            let (a, b) = (read_graph(&a)?, read_graph(&b)?);
            let (g, l) = match kind {
                ProductKind::Kronecker => kronecker(&a, &b),
                ProductKind::Cartesian => cartesian(&a, &b),
                ProductKind::Prism => cartesian(&a, &basic(Family::Complete, &[2])?),
            };
            ctx.graph(&g, Some(&l))?;
        }
        Command::Cover { graph } => {
            let (c, l) = cover(&read_graph(&graph)?);
            ctx.graph(&c, Some(&l))?;
        }
        Command::Check { graph } => {
            let g = read_graph(&graph)?;
            let c = cover(&g).0;
            let witness = if g.is_connected() && g.n() >= 4 { find_factor_witness_with(&g, lim)?.is_some() } else { false };
            ctx.emit(&json!({
                "n": g.n(),
                "m": g.edge_count(),
                "connected": g.is_connected(),
                "connectivity": vertex_connectivity(&g).ok(),
                "bipartite": is_bipartite(&g),
                "planar": is_planar(&g),
                "outerplanar": is_outerplanar(&g),
                "polyhedral": is_polyhedron(&g),
                "quadrangulation": is_quadrangulation(&g),
                "prism_polyhedral": is_polyhedron(&prism(&g)),
                "cover_polyhedral": is_polyhedron(&c),
                "factor_witness": witness,
            }))?;
        }
        Command::Classify { graph } => {
            let c = classify_odd_faces_with(&read_graph(&graph)?, lim)?;
            ctx.emit(&serde_json::to_value(&c)?)?;
        }
        Command::Roots { graph } => {
            let roots = kronecker_roots_with(&read_graph(&graph)?, lim)?;
            let rendered: Vec<String> = roots.roots.iter().map(|r| render(&r.j, None, ctx.format)).collect();
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::to_value(&roots)?)?;
            } else {
                let text = rendered.join("\n");
                out(&text);
                ctx.write_report(&text)?;
            }
            eprintln!("{} root(s)", roots.len());
        }
        Command::CartesianForms { graph } => {
            let forms = cartesian_forms_with(&read_graph(&graph)?, lim)?;
            ctx.emit(&serde_json::to_value(&forms)?)?;
        }
        Command::Iso { a, b } => {
            let map = find_isomorphism(&read_graph(&a)?, &read_graph(&b)?)?;
            let iso = map.is_some();
            ctx.emit(&json!({ "isomorphic": iso, "map": map }))?;
            return Ok(if iso { 0 } else { EXIT_FAIL });
        }
        Command::Faces { graph } => {
            let g = read_graph(&graph)?;
            let fs = planar_embed(&g).ok_or(Error::NonPlanarInput)?.faces()?;
            let faces: Vec<&Vec<usize>> = fs.faces.iter().map(|f| &f.vertices).collect();
            ctx.emit(&json!({ "faces": faces, "stats": fs.stats() }))?;
        }
        Command::Experiment { name, n_max, m_max, script_len, input } => {
            let stream = input.map(|i| read_text(&i).map(|t| parse_graph6_stream(&t))).transpose()?.transpose()?;
            let limits = (cli.max_n.is_some() || std::env::var_os(MAX_N_ENV).is_some()).then_some(ctx.limits);
            let bounds = Bounds { n_max, m_max, script_len, stream, limits };
            let report = run_experiment(&name, &bounds)?;
            let text = report.to_json();
            out(&text);
            ctx.write_report(&text)?;
            eprintln!("{}: {:?} ({} instances, {} violations) in {:.2?}", name, report.verdict, report.instances.len(), report.violations, report.elapsed);
            return Ok(match report.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => EXIT_FAIL,
                Verdict::Incomplete => EXIT_BUDGET,
            });
        }
        Command::Catalog { name: None } => ctx.emit(&serde_json::to_value(catalog())?)?,
        Command::Catalog { name: Some(name) } => {
            let entry = catalog().into_iter().find(|e| e.name == name).ok_or_else(|| {
                let names: Vec<_> = catalog().iter().map(|e| e.name).collect();
                anyhow!(Error::BadParams(format!("no catalog entry {name:?}; known: {}", names.join(", "))))
            })?;
            ctx.graph(&entry.graph()?, None)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = matches!(e.downcast_ref::<Error>(), Some(Error::SearchBudgetExceeded(_)));
            if matches!(e.downcast_ref::<Error>(), Some(Error::UnknownExperiment(_))) {
                eprintln!("known experiments: {}", EXPERIMENTS.join(", "));
            }
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}
