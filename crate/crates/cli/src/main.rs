//! `spex`: command-line front end for spex-core.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod campaign;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spex_core::families::build_family;
use spex_core::minors::{has_minor, has_st_property_with, st_property_violation, StMethod};
use spex_core::search::{
    candidate_showdown, search_extremal, verify_theorem, Connectivity, Constraint, Pruning, SearchSpec, ShowdownReport,
    TheoremTag, VerifyParams, VerifyReport,
};
use spex_core::spectral::{rho_enclosure, rho_exact};
use spex_core::{graph6, BranchModel, FamilySpec, Graph, MinorMode, MinorPattern};

#[derive(Parser, Debug)]
#[command(name = "spex", version, about = "Spectral extremal tooling for minor-free graphs")]
struct Cli {
    /// Append a footer line with the generation time.
    #[arg(long, global = true)]
    footer: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction and print its graph6 code.
    Construct {
        /// Family text form, e.g. `tait:n=13,s=2,t=3`.
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        json: bool,
    },
    /// Certified enclosure of the spectral radius.
    Rho {
        #[arg(long)]
        g6: String,
        #[arg(long, default_value_t = 1e-9)]
        width: f64,
        /// Bisect the characteristic polynomial instead of power iteration.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Test for a minor and print a branch-set witness.
    MinorCheck {
        #[arg(long)]
        g6: String,
        /// `star:t`, `biclique:a,b` or `graph:<graph6>`.
        #[arg(long)]
        pattern: MinorPattern,
        /// Use the exhaustive oracle (order at most 8).
        #[arg(long)]
        bruteforce: bool,
        #[arg(long)]
        json: bool,
    },
    /// Test the (s,t)-property.
    PropertyCheck {
        #[arg(long)]
        g6: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Exhaustive extremal search; prints a JSON certificate.
    Search {
        #[arg(long)]
        n: usize,
        /// `k1t-minor-free:t=3`, `kst-minor-free:s=2,t=4`, `st-property:s=2,t=5` or `pattern-free:<pattern>`.
        #[arg(long)]
        constraint: Constraint,
        /// Range over all graphs instead of connected ones.
        #[arg(long)]
        any: bool,
        #[arg(long, value_enum, default_value_t = PruningArg::None)]
        pruning: PruningArg,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank the candidate constructions at (n,s,t).
    Showdown {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification target; exit 1 when it fails.
    Verify {
        /// One of thm1.1, thm1.3, thm1.4, thm1.5, lemma2.2, lemma3.0, lemma3.1, lemma3.3, thm3.1.
        #[arg(long)]
        theorem: TheoremTag,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification campaigns declared in a key=value file.
    Campaign {
        #[arg(long)]
        config: PathBuf,
    },
    /// Tabulate a directory of search certificates.
    Report {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Markdown)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Direct,
    Complement,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PruningArg {
    None,
    EdgeBound,
    MajorizationHeuristic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

/// Output plus the exit code it deserves.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let config = match &cli.command {
        Command::Campaign { config } => Some(campaign::Config::load(config)?),
        _ => None,
    };
    init_threads(config.as_ref().and_then(|c| c.threads))?;
    let mut out = match cli.command {
        Command::Construct { family, json } => construct(&family, json)?,
        Command::Rho { g6, width, exact, json } => rho_cmd(&g6, width, exact, json)?,
        Command::MinorCheck { g6, pattern, bruteforce, json } => minor_check(&g6, &pattern, bruteforce, json)?,
        Command::PropertyCheck { g6, s, t, method } => property_check(&g6, s, t, method)?,
        Command::Search { n, constraint, any, pruning, out } => search(n, constraint, any, pruning, out)?,
        Command::Showdown { n, s, t, json } => showdown(n, s, t, json)?,
        Command::Verify { theorem, s, t, n, n_min, n_max, json } => {
            let report = verify_theorem(theorem, &VerifyParams { s, t, n, n_min, n_max })?;
            let text = if json { to_json(&report) } else { render_verify(&report) };
            Outcome { text, code: if report.passed { 0 } else { 1 } }
        }
        Command::Campaign { .. } => campaign::run(config.as_ref().unwrap())?,
        Command::Report { dir, format } => Outcome::ok(report::render(&dir, format)?),
    };
    if cli.footer {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        writeln!(out.text, "# generated at unix time {secs}")?;
    }
    Ok(out)
}

/// SPEX_THREADS wins over the config file; otherwise rayon picks.
fn init_threads(from_config: Option<usize>) -> Result<()> {
    let threads = match std::env::var("SPEX_THREADS") {
        Ok(v) => Some(v.trim().parse::<usize>().ok().filter(|&k| k > 0).with_context(|| format!("SPEX_THREADS must be a positive integer, got `{v}`"))?),
        Err(_) => from_config,
    };
    if let Some(k) = threads {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("configuring the worker pool")?;
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn decode(g6: &str) -> Result<Graph> {
    graph6::decode(g6.trim()).with_context(|| format!("reading graph6 `{g6}`"))
}

fn construct(family: &FamilySpec, json: bool) -> Result<Outcome> {
    let g = build_family(family)?;
    let code = graph6::encode(&g);
    if json {
        let v = serde_json::json!({
            "family": family.to_string(),
            "graph6": code,
            "order": g.order(),
            "size": g.edge_count(),
            "degrees": g.degree_sequence().as_slice(),
        });
        return Ok(Outcome::ok(to_json(&v)));
    }
    Ok(Outcome::ok(format!("{code}\n")))
}

fn rho_cmd(g6: &str, width: f64, exact: bool, json: bool) -> Result<Outcome> {
    let g = decode(g6)?;
    let iv = if exact { rho_exact(&g, width)? } else { rho_enclosure(&g, width)?.0 };
    if json {
        return Ok(Outcome::ok(to_json(&iv)));
    }
    let digits = (-width.log10()).ceil().clamp(0.0, 15.0) as usize;
    Ok(Outcome::ok(format!("{:.*} ± {:e}\n", digits, iv.mid(), width)))
}

fn render_model(model: &BranchModel) -> String {
    let mut s = String::new();
    for (i, set) in model.sets().iter().enumerate() {
        let vs: Vec<String> = set.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "  {i}: {}", vs.join(" "));
    }
    s
}

fn minor_check(g6: &str, pattern: &MinorPattern, bruteforce: bool, json: bool) -> Result<Outcome> {
    let g = decode(g6)?;
    let mode = if bruteforce { MinorMode::Bruteforce } else { MinorMode::Fast };
    let model = has_minor(&g, pattern, mode)?;
    if json {
        let v = serde_json::json!({
            "pattern": pattern.to_string(),
            "minor": model.is_some(),
            "model": model.as_ref().map(BranchModel::to_json),
        });
        return Ok(Outcome::ok(to_json(&v)));
    }
    Ok(Outcome::ok(match model {
        Some(m) => format!("minor found: {pattern}\n{}", render_model(&m)),
        None => "no minor\n".into(),
    }))
}

fn property_check(g6: &str, s: usize, t: usize, method: MethodArg) -> Result<Outcome> {
    let g = decode(g6)?;
    let method = match method {
        MethodArg::Auto => StMethod::Auto,
        MethodArg::Direct => StMethod::Direct,
        MethodArg::Complement => StMethod::ComplementComponents,
    };
    if has_st_property_with(&g, s, t, method)? {
        return Ok(Outcome::ok(format!("({s},{t})-property holds\n")));
    }
    let mut text = format!("({s},{t})-property fails\n");
    if let Some((a, m)) = st_property_violation(&g, s, t)? {
        let _ = write!(text, "witness: K_{{{a},{}}} minor\n{}", t + 1 - a, render_model(&m));
    }
    Ok(Outcome::ok(text))
}

fn search(n: usize, constraint: Constraint, any: bool, pruning: PruningArg, out: Option<PathBuf>) -> Result<Outcome> {
    let connectivity = if any { Connectivity::Any } else { Connectivity::Connected };
    let pruning = match pruning {
        PruningArg::None => Pruning::None,
        PruningArg::EdgeBound => Pruning::EdgeBound,
        PruningArg::MajorizationHeuristic => Pruning::MajorizationHeuristic,
    };
    let cert = search_extremal(&SearchSpec::new(n, connectivity, constraint).with_pruning(pruning))?;
    let mut json = cert.to_json();
    json.push('\n');
    match out {
        Some(path) => {
            std::fs::write(&path, &json).with_context(|| format!("writing {}", path.display()))?;
            Ok(Outcome::ok(format!("certificate written to {}\n", path.display())))
        }
        None => Ok(Outcome::ok(json)),
    }
}

fn showdown(n: usize, s: usize, t: usize, json: bool) -> Result<Outcome> {
    let r = candidate_showdown(n, s, t)?;
    Ok(Outcome::ok(if json { to_json(&r) } else { render_showdown(&r) }))
}

fn render_showdown(r: &ShowdownReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "showdown n={} s={} t={} (p={}, q={}, beta={}), designated case {:?}",
        r.n, r.s, r.t, r.p, r.q, r.beta, r.designated_case
    );
    let _ = writeln!(s, "{:<4}  {:<16}  {:<16}  {:>5}  {:>5}  candidate", "rank", "rho lower", "rho upper", "order", "size");
    for (i, e) in r.ranked.iter().enumerate() {
        let _ = writeln!(
            s,
            "{:<4}  {:<16.12}  {:<16.12}  {:>5}  {:>5}  {}{}",
            i + 1,
            e.rho.lo,
            e.rho.hi,
            e.order,
            e.size,
            e.label,
            if e.designated { "  [designated]" } else { "" }
        );
    }
    for e in &r.rejected {
        let _ = writeln!(s, "rejected (K_{{{},{}}} minor): {}", r.s, r.t, e.label);
    }
    let verdict = if r.uncontested {
        "designated construction is the only minor-free candidate".to_string()
    } else if r.designated_first && r.strict {
        format!("designated construction is first, gap >= {:.3e}", r.gap_lower_bound.unwrap_or(0.0))
    } else if r.designated_first {
        "designated construction is first but not strictly separated".to_string()
    } else {
        match r.deficit_lower_bound {
            Some(d) => format!("designated construction trails the leader by >= {d:.3e}"),
            None => "designated construction is not first".to_string(),
        }
    };
    let _ = writeln!(s, "verdict: {verdict}");
    s
}

pub(crate) fn render_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    let p = &r.params;
    let params: Vec<String> = [("s", p.s), ("t", p.t), ("n", p.n), ("n-min", p.n_min), ("n-max", p.n_max)]
        .iter()
        .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
        .collect();
    let _ = writeln!(s, "{} ({}): {}", r.tag, params.join(", "), if r.passed { "PASS" } else { "FAIL" });
    for c in &r.checks {
        let _ = writeln!(s, "  [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.label, c.detail);
        if !c.counterexamples.is_empty() {
            let _ = writeln!(s, "        counterexamples: {}", c.counterexamples.join(" "));
        }
    }
    for l in &r.limitations {
        let _ = writeln!(s, "  note: {l}");
    }
    s
}

/// Parses `key=value` verification parameters.
pub(crate) fn verify_params(pairs: &[(String, String)]) -> Result<VerifyParams> {
    let mut p = VerifyParams::default();
    for (k, v) in pairs {
        let x: usize = v.parse().with_context(|| format!("`{k}` needs a non-negative integer, got `{v}`"))?;
        match k.replace('-', "_").as_str() {
            "s" => p.s = Some(x),
            "t" => p.t = Some(x),
            "n" => p.n = Some(x),
            "n_min" => p.n_min = Some(x),
            "n_max" => p.n_max = Some(x),
            _ => bail!("unknown verification parameter `{k}`"),
        }
    }
    Ok(p)
}
