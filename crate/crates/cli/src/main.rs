//! `tvsat`: Turaev–Viro modules of satellite knots from the command line.

mod render;
mod roots;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tvsat::engine::{cache, Engine, KnotExpr};
use tvsat::recoupling::{delta, hopf, lambda_coef, mu, tet, theta, verlinde_dim};
use tvsat::{make_context, FieldContext, Scalar};

#[derive(Parser, Debug)]
#[command(name = "tvsat", version, about = "Exact Turaev–Viro modules of satellite knots")]
struct Cli {
    /// Level of the theory (p >= 3).
    #[arg(long, global = true, allow_negative_numbers = true)]
    p: Option<i64>,

    /// Order N of the root of unity A; defaults to 2p.
    #[arg(long = "root-order", global = true)]
    root_order: Option<i64>,

    /// Meridian color.
    #[arg(long, global = true, default_value_t = 0)]
    color: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Decimal digits for approximate eigenvalues.
    #[arg(long, global = true)]
    digits: Option<usize>,

    /// Persistent cache directory.
    #[arg(long = "cache-dir", global = true, env = cache::CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the matrix of Z(K, c).
    Module { knot: String },
    /// Print the characteristic polynomial of Z(K, c).
    Charpoly { knot: String },
    /// Invariants of the d-fold cyclic covers for d in FROM..=TO.
    Cover {
        knot: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Invariants of the d-fold branched cyclic covers for d in FROM..=TO.
    Branched {
        knot: String,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Recoupling scalars.
    #[command(subcommand)]
    Recoupling(Recoupling),
    /// Compare rank Z(K, c) with the genus-g dimension count.
    GenusCheck {
        knot: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
    /// Manage the persistent cache.
    #[command(subcommand)]
    Cache(CacheAction),
}

#[derive(Subcommand, Debug)]
enum Recoupling {
    Delta {
        c: u32,
    },
    Theta {
        a: u32,
        b: u32,
        c: u32,
    },
    Tet {
        t: u32,
        i1: u32,
        i2: u32,
        c: u32,
        j1: u32,
        j2: u32,
    },
    Mu {
        i: u32,
    },
    Lambda {
        a: u32,
        b: u32,
        c: u32,
    },
    Hopf {
        a: u32,
        t: u32,
    },
    /// Dimension for a genus-g surface with one point colored c (defaults to --color).
    Dim {
        g: u32,
        c: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    Clear,
    Stat,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(tvsat::Error),
}

impl From<tvsat::Error> for Failure {
    fn from(e: tvsat::Error) -> Self {
        Failure::Domain(e)
    }
}

fn context(cli: &Cli) -> Result<FieldContext, Failure> {
    let p = cli.p.ok_or_else(|| Failure::Usage("--p is required for this command".into()))?;
    Ok(make_context(p, cli.root_order)?)
}

fn parse_knot(text: &str) -> Result<KnotExpr, Failure> {
    KnotExpr::parse(text).map_err(|e| Failure::Usage(format!("cannot parse knot `{text}`: {e}")))
}

fn check_range(from: usize, to: usize) -> Result<(), Failure> {
    if from == 0 || from > to {
        return Err(Failure::Usage(format!("invalid range {from}..={to}: need 1 <= from <= to")));
    }
    Ok(())
}

fn engine<'a>(cli: &Cli, ctx: &'a FieldContext) -> Engine<'a> {
    Engine::new(ctx).with_cache_dir(cli.cache_dir.clone().unwrap_or_else(cache::default_dir))
}

/// Text output, or pretty-printed JSON.
enum Output {
    Text(String),
    Json(String),
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let json = cli.format == Format::Json;
    let out = |text: String, value: String| if json { Output::Json(value) } else { Output::Text(text) };
    match &cli.command {
        Command::Module { knot } => {
            let ctx = context(cli)?;
            let k = parse_knot(knot)?;
            let m = engine(cli, &ctx).module(&k, cli.color)?;
            Ok(out(render::module(&ctx, &k, &m), pretty(&m.to_repr())))
        }
        Command::Charpoly { knot } => {
            let ctx = context(cli)?;
            let k = parse_knot(knot)?;
            let cp = engine(cli, &ctx).module(&k, cli.color)?.charpoly()?;
            let approx = cli.digits.map(|d| (d, roots::approximate_roots(&ctx, &cp)));
            let text = render::charpoly(&cp, approx.as_ref());
            let repr = cp.to_repr();
            let value = match &approx {
                None => pretty(&repr),
                Some((d, rs)) => pretty(&json!({
                    "charpoly": repr,
                    "approximate_roots": {
                        "digits": d,
                        "roots": rs.iter().map(|z| roots::format_complex(*z, *d)).collect::<Vec<_>>(),
                    },
                })),
            };
            Ok(out(text, value))
        }
        Command::Cover { knot, from, to } | Command::Branched { knot, from, to } => {
            check_range(*from, *to)?;
            let ctx = context(cli)?;
            let k = parse_knot(knot)?;
            let eng = engine(cli, &ctx);
            let branched = matches!(cli.command, Command::Branched { .. });
            let mut values = Vec::new();
            for d in *from..=*to {
                let v = if branched { eng.branched_invariant(&k, d)? } else { eng.cover_invariant(&k, d)? };
                values.push((d, v));
            }
            let text = values.iter().map(|(d, v)| format!("d={d}: {v}")).collect::<Vec<_>>().join("\n");
            let value =
                pretty(&values.iter().map(|(d, v)| json!({ "d": d, "value": v.to_repr() })).collect::<Vec<_>>());
            Ok(out(text, value))
        }
        Command::Recoupling(q) => {
            let ctx = context(cli)?;
            if let Recoupling::Dim { g, c } = q {
                let c = c.unwrap_or(cli.color);
                if !ctx.colors().is_color(c) {
                    return Err(tvsat::Error::NotAColor(i64::from(c), ctx.p()).into());
                }
                let n = verlinde_dim(&ctx, *g, c);
                return Ok(out(n.to_string(), pretty(&n.to_string())));
            }
            let s = recoupling_scalar(&ctx, q)?;
            Ok(out(s.to_string(), pretty(&s.to_repr())))
        }
        Command::GenusCheck { knot, genus } => {
            let ctx = context(cli)?;
            let k = parse_knot(knot)?;
            let r = engine(cli, &ctx).genus_bound_check(&k, cli.color, *genus)?;
            let verdict = if r.satisfied { "satisfied" } else { "violated" };
            let text = format!("rank {} <= {}: {verdict}", r.rank, r.bound);
            Ok(out(text, pretty(&r)))
        }
        Command::Cache(action) => {
            let dir = cli.cache_dir.clone().unwrap_or_else(cache::default_dir);
            match action {
                CacheAction::Clear => {
                    let n = cache::clear(&dir)?;
                    Ok(out(format!("removed {n} entries from {}", dir.display()), pretty(&json!({ "removed": n }))))
                }
                CacheAction::Stat => {
                    let s = cache::stat(&dir)?;
                    let text = format!("{}: {} entries, {} bytes", dir.display(), s.entries, s.bytes);
                    Ok(out(text, pretty(&s)))
                }
            }
        }
    }
}

fn color(ctx: &FieldContext, c: u32) -> Result<u32, tvsat::Error> {
    if ctx.colors().is_color(c) {
        Ok(c)
    } else {
        Err(tvsat::Error::NotAColor(i64::from(c), ctx.p()))
    }
}

fn recoupling_scalar(ctx: &FieldContext, q: &Recoupling) -> Result<Scalar, tvsat::Error> {
    let col = |c| color(ctx, c);
    Ok(match *q {
        Recoupling::Delta { c } => delta(ctx, col(c)?),
        Recoupling::Theta { a, b, c } => theta(ctx, a, b, c)?,
        Recoupling::Tet { t, i1, i2, c, j1, j2 } => tet(ctx, t, i1, i2, c, j1, j2)?,
        Recoupling::Mu { i } => mu(ctx, col(i)?),
        Recoupling::Lambda { a, b, c } => lambda_coef(ctx, a, b, c)?,
        Recoupling::Hopf { a, t } => hopf(ctx, col(a)?, col(t)?),
        Recoupling::Dim { .. } => unreachable!("handled by the caller"),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Output::Text(t) | Output::Json(t)) => {
            println!("{t}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
