use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pmas::input::{self, Format, Loaded};
use pmas::output::{self, strings, vector};
use pmas::{report, suites, CliError};
use pmas_core::assignment::{core_contains, side_optimal_vertices, CoreMembership};
use pmas_core::pmas::{
    build_pmas, classify_blocks, pmas_exists_lp, pmas_extend_lp, verify_pmas, OracleResult,
    PmasCheck, Scheme,
};
use pmas_core::solutions::{kohlberg_check, nucleolus, shapley_value, tau_value};
use pmas_core::{Error, Rational};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pmas",
    version,
    about = "Exact analysis of assignment games and population monotonic allocation schemes"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Input format; by default taken from the extension (.matrix or .game).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: blocks, core vertices, tau-value, nucleolus, Shapley value, certificates.
    Analyze {
        path: PathBuf,
    },
    /// Scheme existence, construction and verification.
    #[command(subcommand)]
    Pmas(PmasCommand),
    /// Upper and lower vectors and the tau-value.
    Tau {
        path: PathBuf,
    },
    /// The nucleolus with its Kohlberg certificate.
    Nucleolus {
        path: PathBuf,
    },
    Shapley {
        path: PathBuf,
    },
    #[command(subcommand)]
    Core(CoreCommand),
    /// Golden examples and randomized cross-checks.
    VerifyPaper(VerifyArgs),
}

#[derive(Subcommand)]
enum PmasCommand {
    /// Block classification of the surplus matrix.
    Check { path: PathBuf },
    /// Constructs a scheme extending a core point.
    Build {
        path: PathBuf,
        #[arg(long)]
        point: String,
        /// Write the scheme here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Checks a scheme file against the game.
    Verify {
        path: PathBuf,
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Decides existence (or extendability of --point) by linear programming.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        point: Option<String>,
    },
}

#[derive(Subcommand)]
enum CoreCommand {
    /// Row-optimal and column-optimal core vertices.
    Vertices { path: PathBuf },
    /// Core membership of --point.
    Contains {
        path: PathBuf,
        #[arg(long)]
        point: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances per suite; 0 runs the golden examples only.
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, hide = true)]
    inject_mutant: bool,
}

struct Ctx {
    json: bool,
    format: Option<Format>,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Loaded, CliError> {
        input::load(path, self.format)
    }

    fn emit(&self, text: String, value: serde_json::Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            print!("{text}");
        }
    }
}

fn matrix_only<'a>(
    loaded: &'a Loaded,
    what: &str,
) -> Result<&'a pmas_core::AssignmentGame, CliError> {
    loaded
        .assignment()
        .ok_or_else(|| CliError::Usage(format!("{what} needs a matrix input")))
}

fn point(loaded: &Loaded, text: &str) -> Result<Vec<Rational>, CliError> {
    let x = input::parse_point(text)?;
    input::check_point(loaded.game(), &x)?;
    Ok(x)
}

fn scheme_json(s: &Scheme) -> serde_json::Value {
    let rows: Vec<_> = s
        .ordered()
        .into_iter()
        .map(|(c, x)| json!({ "coalition": output::members(c), "payoff": strings(x) }))
        .collect();
    json!(rows)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let ctx = Ctx {
        json: cli.json,
        format: cli.format,
    };
    match cli.command {
        Command::Analyze { path } => {
            let loaded = ctx.load(&path)?;
            let r = report::analyze(&path.display().to_string(), &loaded)?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            ctx.emit(r.to_string(), serde_json::to_value(&r).unwrap());
            Ok(0)
        }
        Command::Pmas(cmd) => run_pmas(&ctx, cmd),
        Command::Tau { path } => {
            let loaded = ctx.load(&path)?;
            pmas::check_sweep(loaded.players())?;
            let b = tau_value(loaded.game())?;
            let text = format!(
                "upper M  {}\nlower m  {}\nkappa    {}\ntau      {}\n",
                vector(&b.upper),
                vector(&b.lower),
                b.kappa,
                vector(&b.tau)
            );
            ctx.emit(
                text,
                json!({
                    "upper": strings(&b.upper),
                    "lower": strings(&b.lower),
                    "kappa": b.kappa.to_string(),
                    "tau": strings(&b.tau),
                }),
            );
            Ok(0)
        }
        Command::Nucleolus { path } => {
            let loaded = ctx.load(&path)?;
            pmas::check_sweep(loaded.players())?;
            let eta = nucleolus(loaded.game())?;
            let cert = kohlberg_check(loaded.game(), &eta)?;
            let text = format!("nucleolus {}\n{}", vector(&eta), output::certificate(&cert));
            let levels: Vec<String> = cert.levels.iter().map(output::level).collect();
            ctx.emit(
                text,
                json!({ "nucleolus": strings(&eta), "certificate": levels }),
            );
            Ok(0)
        }
        Command::Shapley { path } => {
            let loaded = ctx.load(&path)?;
            pmas::check_sweep(loaded.players())?;
            let phi = shapley_value(loaded.game())?;
            ctx.emit(
                format!("shapley {}\n", vector(&phi)),
                json!({ "shapley": strings(&phi) }),
            );
            Ok(0)
        }
        Command::Core(CoreCommand::Vertices { path }) => {
            let loaded = ctx.load(&path)?;
            let g = matrix_only(&loaded, "core vertices")?;
            let side = side_optimal_vertices(g)?;
            let text = format!(
                "row-optimal  {}\ncol-optimal  {}\nmidpoint     {}\n",
                vector(&side.row_optimal),
                vector(&side.column_optimal),
                vector(&side.midpoint())
            );
            ctx.emit(
                text,
                json!({
                    "row_optimal": strings(&side.row_optimal),
                    "column_optimal": strings(&side.column_optimal),
                    "midpoint": strings(&side.midpoint()),
                }),
            );
            Ok(0)
        }
        Command::Core(CoreCommand::Contains { path, point: p }) => {
            let loaded = ctx.load(&path)?;
            let x = point(&loaded, &p)?;
            match core_contains(loaded.game(), &x)? {
                CoreMembership::Yes => {
                    ctx.emit("in core\n".into(), json!({ "in_core": true }));
                    Ok(0)
                }
                CoreMembership::No(s) => {
                    ctx.emit(
                        format!("not in core: coalition {s} can improve\n"),
                        json!({ "in_core": false, "violated": s.to_string() }),
                    );
                    Ok(1)
                }
            }
        }
        Command::VerifyPaper(args) => {
            let outcomes = suites::run(suites::Options {
                seed: args.seed,
                instances: args.instances,
                mutant: args.inject_mutant,
            });
            let all = outcomes.iter().all(suites::Outcome::passed);
            let rows: Vec<_> = outcomes
                .iter()
                .map(|o| json!({ "suite": o.name, "checked": o.checked, "failure": o.failure }))
                .collect();
            ctx.emit(
                suites::render(&outcomes),
                json!({ "passed": all, "suites": rows }),
            );
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn run_pmas(ctx: &Ctx, cmd: PmasCommand) -> Result<u8, CliError> {
    match cmd {
        PmasCommand::Check { path } => {
            let loaded = ctx.load(&path)?;
            let g = matrix_only(&loaded, "pmas check")?;
            let d = classify_blocks(g.matrix());
            let r = report::BlockReport::new(&d);
            let mut text = format!("{}\n", r.verdict);
            for b in &r.blocks {
                text.push_str(&format!("  {b}\n"));
            }
            if let Some(w) = &r.witness {
                text.push_str(&format!("witness: {w}\n"));
            }
            ctx.emit(text, serde_json::to_value(&r).unwrap());
            Ok(if d.is_admissible() { 0 } else { 1 })
        }
        PmasCommand::Build {
            path,
            point: p,
            output: out,
        } => {
            let loaded = ctx.load(&path)?;
            let g = matrix_only(&loaded, "pmas build")?;
            let x = point(&loaded, &p)?;
            let scheme = match build_pmas(g, &x) {
                Ok(s) => s,
                Err(Error::NotAdmissible(w)) => {
                    ctx.emit(
                        format!("not-admissible\nwitness: {w}\n"),
                        json!({ "verdict": "not-admissible", "witness": w.to_string() }),
                    );
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            let text = output::scheme(&scheme);
            match out {
                Some(file) => std::fs::write(&file, &text).map_err(|source| CliError::Io {
                    path: file.display().to_string(),
                    source,
                })?,
                None => ctx.emit(text, scheme_json(&scheme)),
            }
            Ok(0)
        }
        PmasCommand::Verify { path, scheme } => {
            let loaded = ctx.load(&path)?;
            pmas::check_sweep(loaded.players())?;
            let name = scheme.display().to_string();
            let text = std::fs::read_to_string(&scheme).map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?;
            let s = output::parse_scheme(&name, &text, loaded.players())?;
            match verify_pmas(loaded.game(), &s)? {
                PmasCheck::Valid => {
                    ctx.emit("valid\n".into(), json!({ "verdict": "valid" }));
                    Ok(0)
                }
                PmasCheck::Invalid(v) => {
                    ctx.emit(
                        format!("invalid: {v}\n"),
                        json!({ "verdict": "invalid", "violation": v.to_string() }),
                    );
                    Ok(1)
                }
            }
        }
        PmasCommand::Oracle { path, point: p } => {
            let loaded = ctx.load(&path)?;
            let result = match &p {
                Some(p) => pmas_extend_lp(loaded.game(), &point(&loaded, p)?)?,
                None => pmas_exists_lp(loaded.game())?,
            };
            match result {
                OracleResult::Feasible(s) => {
                    ctx.emit(
                        format!("feasible\n{}", output::scheme(&s)),
                        json!({ "verdict": "feasible", "scheme": scheme_json(&s) }),
                    );
                    Ok(0)
                }
                OracleResult::Infeasible => {
                    ctx.emit("infeasible\n".into(), json!({ "verdict": "infeasible" }));
                    Ok(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
