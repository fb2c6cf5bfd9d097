//! Argument parsing and command dispatch for the `hvlab` binary.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hvlab_core::algebra::verify_algebra_axioms;
use hvlab_core::bialgebra::{
    bialgebra_axiom_check, cobracket_decompose, cybe_defect, drinfeld_identity_check, mybe_check,
    CobracketTable, DecomposeOutcome,
};
use hvlab_core::derivation::{
    derivation_check, h1_probe, solve_inner, DerivationTable, InnerOutcome,
};
use hvlab_core::expr::{parse_elem, parse_tensor2, OutputFormat, RunConfig, TableFile};
use hvlab_core::tensor::wedge;
use hvlab_core::{Algebra, CheckReport, Error, Rational, SuiteReport};
use serde::Serialize;
use serde_json::{json, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "hvlab",
    version,
    about = "Exact checks for the generalized Heisenberg-Virasoro algebra"
)]
pub struct Cli {
    /// Flat key = value configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// full or centerless.
    #[arg(long, global = true)]
    pub variant: Option<String>,
    /// paper, standard or cubic.
    #[arg(long, global = true)]
    pub mixed_cocycle: Option<String>,
    /// Comma-separated rational generators of the index group.
    #[arg(long, global = true)]
    pub generators: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// text or json.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Worker threads for window scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Anti-symmetry and Jacobi on every basis triple of the window.
    VerifyAxioms {
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Bracket of two elements.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Classical Yang-Baxter defect c(r).
    Cybe {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// x.c(r) = 0 for every probe x.
    Mybe {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        probes: u32,
    },
    /// The three Lie bialgebra axioms for a cobracket.
    Bialgebra {
        #[command(flatten)]
        source: CobracketSource,
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Both sides of (1 + xi + xi^2)(1 (x) D)D(x) = x.c(r).
    Drinfeld {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// r = a ^ b and its Yang-Baxter defect.
    Triangular {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Writes a cobracket table as x.r + sigma(x).
    Decompose {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        support: u32,
    },
    /// D[x,y] = x.D(y) - y.D(x) on the window.
    DerivationCheck {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Finds u with x.u = D(x), or a certificate that none exists.
    SolveInner {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        support: u32,
        #[arg(long)]
        probes: Option<u32>,
    },
    /// Derivations modulo inner derivations of one degree.
    H1 {
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[arg(long)]
        radius: Option<u32>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CobracketSource {
    /// Coboundary x -> x.r.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// `lambda,C` or `lambda,C,eta` for lambda (x) C - C (x) eta.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// JSON table file.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

/// What a command produced: whether every check passed, the JSON result and
/// its text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub text: String,
}

impl Outcome {
    fn new(passed: bool, result: impl Serialize, text: String) -> Self {
        Outcome {
            passed,
            result: serde_json::to_value(result).expect("results serialize"),
            text,
        }
    }

    fn check(r: CheckReport) -> Self {
        let text = check_text(&r);
        Outcome::new(r.passed(), r, text)
    }

    fn suite(s: SuiteReport) -> Self {
        let text = s
            .checks
            .iter()
            .map(check_text)
            .collect::<Vec<_>>()
            .join("\n");
        Outcome::new(s.passed(), s, text)
    }
}

fn check_text(r: &CheckReport) -> String {
    let mut out = format!(
        "{}: {} ({}, radius {})",
        r.check,
        status(r.passed()),
        r.variant,
        r.window
    );
    if let Some(w) = &r.witness {
        out.push_str(&format!("\n  witness {w}"));
    }
    if let (Some(l), Some(rhs)) = (&r.lhs, &r.rhs) {
        out.push_str(&format!("\n  lhs = {l}\n  rhs = {rhs}"));
    }
    out
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// A usage or input error, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Configuration after applying the file and then the command line flags.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig, UsageError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let flags = [
        ("variant", cli.variant.clone()),
        ("mixed_cocycle", cli.mixed_cocycle.clone()),
        ("generators", cli.generators.clone()),
        ("seed", cli.seed.map(|s| s.to_string())),
        ("format", cli.format.clone()),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, &v)?;
        }
    }
    Ok(cfg)
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::VerifyAxioms { .. } => "verify-axioms",
        Command::Bracket { .. } => "bracket",
        Command::Cybe { .. } => "cybe",
        Command::Mybe { .. } => "mybe",
        Command::Bialgebra { .. } => "bialgebra",
        Command::Drinfeld { .. } => "drinfeld",
        Command::Triangular { .. } => "triangular",
        Command::Decompose { .. } => "decompose",
        Command::DerivationCheck { .. } => "derivation-check",
        Command::SolveInner { .. } => "solve-inner",
        Command::H1 { .. } => "h1",
    }
}

/// Runs one command against a resolved configuration.
pub fn execute(cfg: &RunConfig, command: &Command) -> Result<Outcome, UsageError> {
    let alg = cfg.algebra();
    let radius = |r: &Option<u32>| r.unwrap_or(cfg.radius);
    Ok(match command {
        Command::VerifyAxioms { radius: r } => {
            Outcome::suite(verify_algebra_axioms(&cfg.algebra_config(), radius(r)))
        }
        Command::Bracket { a, b } => {
            let v = alg.bracket(&parse_elem(a, &alg)?, &parse_elem(b, &alg)?)?;
            Outcome::new(true, json!({ "value": v.to_string() }), v.to_string())
        }
        Command::Cybe { r } => {
            let c = cybe_defect(&alg, &parse_tensor2(r, &alg)?)?;
            let zero = c.is_zero();
            Outcome::new(
                zero,
                json!({ "defect": c.to_string(), "zero": zero }),
                format!("c(r) = {c}"),
            )
        }
        Command::Mybe { r, probes } => {
            Outcome::check(mybe_check(&alg, &parse_tensor2(r, &alg)?, *probes)?)
        }
        Command::Bialgebra { source, radius: r } => {
            let win = radius(r);
            let table = cobracket(&alg, source, win)?;
            Outcome::suite(bialgebra_axiom_check(&table, win)?)
        }
        Command::Drinfeld { r, x } => {
            let rep =
                drinfeld_identity_check(&alg, &parse_tensor2(r, &alg)?, &parse_elem(x, &alg)?)?;
            let text = format!(
                "drinfeld: {}\n  lhs = {}\n  rhs = {}",
                status(rep.holds),
                rep.lhs,
                rep.rhs
            );
            Outcome::new(rep.holds, rep, text)
        }
        Command::Triangular { a, b } => {
            let (a, b) = (parse_elem(a, &alg)?, parse_elem(b, &alg)?);
            let ab = alg.bracket(&a, &b)?;
            let r = wedge(&a, &b);
            let c = cybe_defect(&alg, &r)?;
            let zero = c.is_zero();
            let text = format!(
                "[a, b] = {ab}\nr = {r}\nc(r) = {c}\ntriangular: {}",
                status(zero)
            );
            let result = json!({
                "bracket": ab.to_string(),
                "r": r.to_string(),
                "defect": c.to_string(),
                "triangular": zero,
            });
            Outcome::new(zero, result, text)
        }
        Command::Decompose { table, support } => {
            let file = TableFile::read(table)?;
            let table = CobracketTable::from_file(&file, &alg)?;
            match cobracket_decompose(&table, *support)? {
                DecomposeOutcome::Solved(d) => {
                    let mut text = format!("r = {}", d.r);
                    for t in &d.sigma {
                        text.push_str(&format!(
                            "\nsigma {}: lambda = {}, eta = {}",
                            t.central, t.lambda, t.eta
                        ));
                    }
                    let result =
                        json!({ "status": "solved", "r": d.r.to_string(), "sigma": d.sigma });
                    Outcome::new(true, result, text)
                }
                DecomposeOutcome::Infeasible(row) => {
                    let text = row.to_string();
                    Outcome::new(
                        false,
                        json!({ "status": "infeasible", "certificate": row }),
                        text,
                    )
                }
            }
        }
        Command::DerivationCheck { table, radius: r } => {
            let d = derivation_table(table, &alg)?;
            let win = r.unwrap_or(d.window());
            Outcome::check(derivation_check(&d, win)?)
        }
        Command::SolveInner {
            table,
            support,
            probes,
        } => {
            let d = derivation_table(table, &alg)?;
            match solve_inner(&d, *support, *probes)? {
                InnerOutcome::Inner(u) => Outcome::new(
                    true,
                    json!({ "status": "inner", "u": u.to_string() }),
                    format!("inner: u = {u}"),
                ),
                InnerOutcome::Infeasible(cert) => {
                    let text = cert.to_string();
                    Outcome::new(
                        false,
                        json!({ "status": "infeasible", "certificate": cert }),
                        text,
                    )
                }
            }
        }
        Command::H1 { degree, radius: r } => {
            let deg: Rational = degree.parse()?;
            let rep = h1_probe(&cfg.algebra_config(), radius(r), &deg)?;
            let mut text = format!(
                "h1 degree {} ({}, radius {}, inner support radius {}): derivations {}, inner {}, quotient {}",
                rep.degree,
                rep.variant,
                rep.radius,
                rep.inner_support_radius,
                rep.dim_derivations,
                rep.dim_inner,
                rep.quotient_dim
            );
            for r in &rep.representatives {
                text.push_str(&format!(
                    "\n  {}",
                    r.label.as_deref().unwrap_or("(unlabeled)")
                ));
            }
            Outcome::new(true, rep, text)
        }
    })
}

fn derivation_table(path: &Path, alg: &Algebra) -> Result<DerivationTable, UsageError> {
    Ok(DerivationTable::from_file(&TableFile::read(path)?, alg)?)
}

fn cobracket(
    alg: &Algebra,
    source: &CobracketSource,
    win: u32,
) -> Result<CobracketTable, UsageError> {
    if let Some(r) = &source.r {
        return Ok(CobracketTable::from_r(alg, &parse_tensor2(r, alg)?, win)?);
    }
    if let Some(s) = &source.sigma {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let (lambda, c, eta) = match parts.as_slice() {
            [l, c] => (l.parse::<Rational>()?, *c, l.parse::<Rational>()?),
            [l, c, e] => (l.parse::<Rational>()?, *c, e.parse::<Rational>()?),
            _ => {
                return Err(UsageError(format!(
                    "--sigma expects `lambda,C` or `lambda,C,eta`, got `{s}`"
                )))
            }
        };
        return Ok(CobracketTable::from_sigma(
            alg,
            &lambda,
            &parse_elem(c, alg)?,
            &eta,
            win,
        )?);
    }
    let path = source.table.as_ref().expect("clap requires one source");
    Ok(CobracketTable::from_file(&TableFile::read(path)?, alg)?)
}

/// The JSON envelope written for `--format json`.
pub fn envelope(cfg: &RunConfig, command: &str, outcome: &Outcome) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "command": command,
        "config": cfg,
        "result": outcome.result,
    })
}

/// Renders an outcome in the configured format.
pub fn render(cfg: &RunConfig, command: &str, outcome: &Outcome) -> String {
    match cfg.format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&envelope(cfg, command, outcome)).expect("json")
        }
        OutputFormat::Text => outcome.text.clone(),
    }
}
