use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsc::complex::{link_to_dot, skeleton_to_dot};
use gsc::corpus::random_presentation;
use gsc::metrics::{realize_sides, verify_link_condition, MetricSpec};
use gsc::pieces::{build_fiber_product, MaxPiece, PieceLength, PieceWalk, DEFAULT_MAX_CYCLE_LEN};
use gsc::report::{self, exit_code, run_check, CheckError, CheckOptions, Mode};
use gsc::{build_complex, link_girth_report, parse, serialize, subdivide, ParseOptions, Presentation, Sides64};

#[derive(Parser)]
#[command(name = "gsc", version, about = "Small cancellation and link-condition checks for graphical presentations")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    /// Prune components to their cycle core (default).
    #[arg(long, global = true, overrides_with = "no_prune")]
    prune: bool,
    /// Reject components with degree-1 vertices instead of pruning them.
    #[arg(long = "no-prune", global = true, overrides_with = "prune")]
    no_prune: bool,
    /// Seed for `export --random`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run girth or C(p), then T(q), then the link condition for the matching preset.
    Check {
        file: PathBuf,
        /// Check C(P) and certify the subdivided complex.
        #[arg(long = "c", value_name = "P", conflicts_with = "girth", required_unless_present = "girth")]
        c: Option<usize>,
        /// Check that every component has girth at least P.
        #[arg(long, value_name = "P")]
        girth: Option<usize>,
        #[arg(long = "t", value_name = "Q")]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLE_LEN)]
        max_cycle_len: usize,
        #[arg(long)]
        preset: Option<String>,
        /// Include stage timings in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Longest piece and the maximal pieces.
    Pieces {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Girths of vertex links, or one link as DOT.
    Links {
        file: PathBuf,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Metrize with a preset and verify the link condition.
    Metrize {
        file: PathBuf,
        #[arg(long, default_value = "3,6-euclidean")]
        preset: String,
    },
    /// Subdivide every edge with a single preimage into K segments.
    Subdivide {
        file: PathBuf,
        #[arg(long = "p", value_name = "K")]
        p: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write the presentation as canonical JSON or the complex as DOT.
    Export {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        vertex: Option<String>,
        /// Export a seeded random presentation instead of a file.
        #[arg(long)]
        random: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn usage(message: impl Into<String>) -> Failure {
    fail(report::EXIT_USAGE, message)
}

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn emit(&self, text: &str, value: Value) {
        if self.quiet {
            return;
        }
        if self.json {
            let mut pretty = serde_json::to_string_pretty(&value).expect("json values serialize");
            pretty.push('\n');
            write_stdout(&pretty);
        } else {
            write_stdout(text);
        }
    }
}

/// Writes to stdout, ignoring a closed pipe (e.g. output piped into `head`).
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| fail(report::EXIT_INPUT, format!("stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| fail(report::EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load(path: &Path, prune: bool) -> Result<(Vec<u8>, Presentation), Failure> {
    let bytes = read_input(path)?;
    let parsed = parse(&bytes, ParseOptions { prune }).map_err(|e| fail(report::EXIT_INPUT, format!("{}: {e}", path.display())))?;
    for r in &parsed.pruned {
        eprintln!("note: pruned {} vertices from component {}", r.removed.len(), r.component);
    }
    Ok((bytes, parsed.presentation))
}

fn dart_list(p: &Presentation, darts: &[gsc::Dart]) -> Vec<String> {
    darts
        .iter()
        .map(|&d| format!("{}/{}", p.components()[p.component_of_dart(d)].name, p.gamma_dart_name(d)))
        .collect()
}

fn piece_json(p: &Presentation, w: &PieceWalk) -> Value {
    json!({
        "theta": w.theta.iter().map(|&d| p.theta().dart_name(d)).collect::<Vec<_>>(),
        "first": dart_list(p, &w.first),
        "second": dart_list(p, &w.second),
    })
}

fn cmd_check(out: &Out, prune: bool, file: &Path, mode: Mode, p_param: usize, options: CheckOptions) -> Result<i32, Failure> {
    let (bytes, p) = load(file, prune)?;
    if mode == Mode::Cp && p_param < 2 {
        return Err(usage("--c needs P >= 2"));
    }
    let report = run_check(&p, &bytes, &options).map_err(|e| match e {
        CheckError::Inconsistent(m) => fail(report::EXIT_INTERNAL, m),
        other => usage(other.to_string()),
    })?;
    let mut text = String::new();
    for s in &report.stages {
        let _ = writeln!(text, "{}: {} ({})", s.name, serde_json::to_value(s.status).unwrap().as_str().unwrap(), s.detail);
    }
    if let Some(c) = &report.witnesses.cycle {
        let _ = writeln!(text, "cycle witness in {}: {}", c.component, c.darts.join(" "));
    }
    if let Some(j) = &report.witnesses.jasmine {
        let corners: Vec<String> =
            j.corners.iter().map(|c| format!("{}/{}: {} {}", c.component, c.tip_vertex_lift, c.dart_in, c.dart_out)).collect();
        let _ = writeln!(text, "jasmine at {} with {} petals: {}", j.vertex, j.h, corners.join(", "));
    }
    if let Some(l) = &report.witnesses.link_cycle {
        let _ = writeln!(text, "short link cycle at {}: {}", l.vertex, l.cycle.clone().unwrap_or_default().join(" "));
    }
    let _ = writeln!(text, "verdict: {}", serde_json::to_value(report.verdict).unwrap().as_str().unwrap());
    out.emit(&text, serde_json::to_value(&report).expect("report serializes"));
    Ok(exit_code(&report))
}

fn cmd_pieces(out: &Out, prune: bool, file: &Path, limit: usize) -> Result<i32, Failure> {
    let (_, p) = load(file, prune)?;
    let fp = build_fiber_product(&p);
    let max = fp.max_piece();
    let mut text = format!("max piece length: {}\n", max.length());
    let mut value = json!({ "max_piece_length": match max.length() {
        PieceLength::Finite(n) => json!(n),
        PieceLength::Unbounded => json!("unbounded"),
    }});
    match &max {
        MaxPiece::Unbounded(cycle) => {
            let theta: Vec<String> = cycle.theta.iter().map(|&d| p.theta().dart_name(d)).collect();
            let _ = writeln!(text, "closed pair of lifts over {}", theta.join(" "));
            value["cycle"] = piece_json(&p, cycle);
        }
        _ => {
            let pieces = fp.maximal_pieces(limit);
            for w in &pieces {
                let theta: Vec<String> = w.theta.iter().map(|&d| p.theta().dart_name(d)).collect();
                let _ = writeln!(
                    text,
                    "piece {}  lifts [{}] [{}]",
                    theta.join(" "),
                    dart_list(&p, &w.first).join(" "),
                    dart_list(&p, &w.second).join(" ")
                );
            }
            value["pieces"] = Value::Array(pieces.iter().map(|w| piece_json(&p, w)).collect());
        }
    }
    out.emit(&text, value);
    Ok(report::EXIT_PASS)
}

fn cmd_links(out: &Out, prune: bool, file: &Path, vertex: Option<&str>, dot: bool) -> Result<i32, Failure> {
    let (_, p) = load(file, prune)?;
    let c = build_complex(&p);
    if dot {
        let text = match vertex {
            Some(v) => link_to_dot(&c, c.link_named(v).map_err(|e| usage(e.to_string()))?),
            None => skeleton_to_dot(&c),
        };
        if !out.quiet {
            write_stdout(&text);
        }
        return Ok(report::EXIT_PASS);
    }
    let mut rows = link_girth_report(&c);
    if let Some(v) = vertex {
        c.vertex(v).map_err(|e| usage(e.to_string()))?;
        rows.retain(|r| r.vertex == v);
    }
    let mut text = String::new();
    for r in &rows {
        let g = r.girth.map_or("inf".to_string(), |g| g.to_string());
        let _ = writeln!(text, "{}: {g}", r.vertex);
    }
    let value = Value::Array(rows.iter().map(|r| json!({"vertex": r.vertex, "girth": r.girth})).collect());
    out.emit(&text, value);
    Ok(report::EXIT_PASS)
}

fn cmd_metrize(out: &Out, prune: bool, file: &Path, preset: &str) -> Result<i32, Failure> {
    let spec = MetricSpec::preset(preset).map_err(|e| usage(e.to_string()))?;
    let (_, p) = load(file, prune)?;
    let c = build_complex(&p);
    let r = verify_link_condition(&c, &spec);
    let sides: Sides64 = realize_sides(&spec);
    let mut text = format!(
        "model: {}\ntip angle: {}\nbase angle: {}\nsides: leg {:.12}, base {:.12}\n",
        serde_json::to_value(spec.model()).unwrap().as_str().unwrap(),
        spec.tip_angle(),
        spec.base_angle(),
        sides.leg,
        sides.base
    );
    for v in &r.per_vertex {
        let total = v.min_cycle_total.map_or("inf".to_string(), |t| t.to_string());
        let status = serde_json::to_value(v.status).unwrap();
        let _ = write!(text, "{}: min cycle {total} {}", v.vertex, status.as_str().unwrap());
        if let Some(cycle) = &v.cycle {
            let _ = write!(text, " ({})", cycle.join(" "));
        }
        text.push('\n');
    }
    let _ = writeln!(text, "overall: {}", if r.passed() { "pass" } else { "fail" });
    out.emit(&text, serde_json::to_value(&r).expect("report serializes"));
    Ok(if r.passed() { report::EXIT_PASS } else { report::EXIT_VIOLATED })
}

fn write_output(path: Option<&Path>, text: &str, quiet: bool) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| fail(report::EXIT_INPUT, format!("{}: {e}", path.display()))),
        None => {
            if !quiet {
                write_stdout(text);
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let out = Out { json: cli.json, quiet: cli.quiet };
    let prune = !cli.no_prune;
    match cli.command {
        Command::Check { file, c, girth, t, max_cycle_len, preset, timing } => {
            let (mode, p_param) = match (c, girth) {
                (Some(p), None) => (Mode::Cp, p),
                (None, Some(p)) => (Mode::Girth, p),
                _ => return Err(usage("give exactly one of --c and --girth")),
            };
            let options = CheckOptions { mode, p: p_param, q: t, max_cycle_len, preset, timing };
            cmd_check(&out, prune, &file, mode, p_param, options)
        }
        Command::Pieces { file, limit } => cmd_pieces(&out, prune, &file, limit),
        Command::Links { file, vertex, dot } => cmd_links(&out, prune, &file, vertex.as_deref(), dot),
        Command::Metrize { file, preset } => cmd_metrize(&out, prune, &file, &preset),
        Command::Subdivide { file, p, output } => {
            if p == 0 {
                return Err(usage("--p needs K >= 1"));
            }
            let (_, pres) = load(&file, prune)?;
            write_output(output.as_deref(), &serialize(&subdivide(&pres, p)), out.quiet)?;
            Ok(report::EXIT_PASS)
        }
        Command::Export { file, format, vertex, random } => {
            let p = match (random, file) {
                (true, None) => random_presentation(cli.seed.ok_or_else(|| usage("--random needs --seed"))?),
                (false, Some(file)) => load(&file, prune)?.1,
                _ => return Err(usage("give either a file or --random")),
            };
            let text = match format {
                Format::Json => serialize(&p),
                Format::Dot => {
                    let c = build_complex(&p);
                    match vertex {
                        Some(v) => link_to_dot(&c, c.link_named(&v).map_err(|e| usage(e.to_string()))?),
                        None => skeleton_to_dot(&c),
                    }
                }
            };
            write_output(None, &text, out.quiet)?;
            Ok(report::EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { report::EXIT_USAGE as u8 } else { 0 });
        }
    };
    let quiet = cli.quiet;
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            if !quiet || f.code == report::EXIT_INTERNAL {
                eprintln!("gsc: {}", f.message);
            }
            ExitCode::from(f.code as u8)
        }
    }
}
