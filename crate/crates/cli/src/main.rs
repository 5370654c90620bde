use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lsi_core::format::{self as fmt};
use lsi_core::indices::{enumerate_admissible, Index};
use lsi_core::lsi::{canonicalize, reduce_at, shuffle, LsiExpr, LsiMonomial};
use lsi_core::numeric::{eval_expr, eval_mzv, eval_relation, NumericConfig};
use lsi_core::polylog::PolylogExpander;
use lsi_core::relations::{build_basis, CrInjection, EngineConfig, Parity, RelationEngine};
use lsi_core::{Error, GaussianRational};

const CACHE_FILE: &str = "li_cache.json";
/// Weights from which long computations report progress on stderr.
const PROGRESS_WEIGHT: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "lsi", version, about = "Multiple zeta values through iterated log-sine integrals at pi/3")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest weight any command may work at (2..=12).
    #[arg(long, default_value_t = 8, global = true)]
    max_weight: u32,

    /// Absolute tolerance for numeric verification (1e-12..=1e-4).
    #[arg(long, default_value_t = 1e-8, global = true)]
    precision: f64,

    /// Add the Re Li_{2k+1}(e^{i pi/3}) identities to the monomial relations.
    #[arg(long, global = true)]
    use_cr: bool,

    /// Expand matrix rows in parallel.
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dual of an admissible index, e.g. `dual 3,2`.
    Dual { index: String },
    /// Lower the last part `steps` times, dropping parts that reach zero.
    Trunc {
        index: String,
        #[arg(long, default_value_t = 1)]
        steps: u32,
    },
    /// Shuffle product of two monomials given as `k1,..:l1,..`.
    Shuffle {
        a: String,
        b: String,
        #[arg(long, default_value_t = 0)]
        pi_a: u32,
        #[arg(long, default_value_t = 0)]
        pi_b: u32,
    },
    /// One reduction step at position `--at` (1-based), or the full canonical form.
    Reduce {
        monomial: String,
        #[arg(long, default_value_t = 0)]
        pi: u32,
        #[arg(long)]
        at: Option<usize>,
    },
    /// Li_k(e^{i pi/3}) as log-sine integrals.
    Li { index: String },
    /// zeta(k) as log-sine integrals.
    Zeta { index: String },
    /// Canonical monomials of one weight and parity (`odd` or `even`).
    Basis { weight: u32, parity: String },
    /// Rational relations among the MZVs of one weight.
    Relations { weight: u32 },
    /// The table of l_k for k = 2..=max.
    Lk { max: u32 },
    /// Check zeta expressions and relations of one weight numerically.
    Verify { weight: u32 },
}

/// Failure modes that map to distinct exit codes.
enum Failure {
    Input(Error),
    Verification(serde_json::Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

struct Context {
    format: Format,
    max_weight: u32,
    precision: f64,
    use_cr: bool,
    parallel: bool,
    cache_dir: Option<PathBuf>,
}

impl Context {
    fn check_weight(&self, w: u32) -> Result<(), Error> {
        if w < 2 {
            return Err(Error::WeightTooSmall(w));
        }
        if w > self.max_weight {
            return Err(Error::InvalidArgument(format!(
                "weight {w} exceeds --max-weight {}",
                self.max_weight
            )));
        }
        Ok(())
    }

    fn expander(&self) -> PolylogExpander {
        let ex = PolylogExpander::new();
        if let Some(path) = self.cache_path() {
            // a missing or unreadable cache only costs recomputation
            if let Ok(text) = std::fs::read_to_string(&path) {
                match fmt::cache_from_json_str(&text) {
                    Ok(entries) => ex.preload(entries),
                    Err(e) => eprintln!("[lsi] ignoring cache {}: {e}", path.display()),
                }
            }
        }
        ex
    }

    fn save(&self, ex: &PolylogExpander, loaded: usize) {
        let Some(path) = self.cache_path() else { return };
        if ex.cached_len() == loaded {
            return;
        }
        let write = std::fs::create_dir_all(path.parent().expect("file inside a directory"))
            .and_then(|_| std::fs::write(&path, fmt::cache_to_json(&ex.snapshot())));
        if let Err(e) = write {
            eprintln!("[lsi] could not write cache {}: {e}", path.display());
        }
    }

    fn cache_path(&self) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(CACHE_FILE))
    }

    fn engine(&self, ex: PolylogExpander, weight: u32) -> RelationEngine {
        let config = EngineConfig {
            parallel_rows: self.parallel,
            cr: if self.use_cr { CrInjection::All } else { CrInjection::None },
            extra_im_steps: 0,
            progress: weight >= PROGRESS_WEIGHT,
        };
        RelationEngine::with_expander(config, ex)
    }
}

fn parse_index(s: &str) -> Result<Index, Error> {
    s.parse()
}

fn parse_monomial(body: &str, pi: u32) -> Result<LsiMonomial, Error> {
    let m: LsiMonomial = body.parse()?;
    Ok(m.times_pi(pi))
}

fn render_index(ctx: &Context, k: &Index) -> String {
    match ctx.format {
        Format::Text => k.to_string(),
        Format::Json => fmt::index_to_json(k),
        Format::Latex => format!("({})", k),
    }
}

fn render_expr(ctx: &Context, e: &LsiExpr) -> String {
    match ctx.format {
        Format::Text => e.to_string(),
        Format::Json => fmt::expr_to_json(e),
        Format::Latex => fmt::expr_latex(e),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    if !(2..=12).contains(&cli.max_weight) {
        return Err(Error::InvalidArgument(format!("--max-weight must be in 2..=12, got {}", cli.max_weight)).into());
    }
    if !(1e-12..=1e-4).contains(&cli.precision) {
        return Err(Error::InvalidArgument(format!("--precision must be in [1e-12, 1e-4], got {}", cli.precision)).into());
    }
    let ctx = Context {
        format: cli.format,
        max_weight: cli.max_weight,
        precision: cli.precision,
        use_cr: cli.use_cr,
        parallel: cli.parallel,
        cache_dir: std::env::var_os("LSI_CACHE_DIR").map(PathBuf::from),
    };

    match cli.command {
        Command::Dual { index } => Ok(render_index(&ctx, &parse_index(&index)?.dual()?)),
        Command::Trunc { index, steps } => Ok(render_index(&ctx, &parse_index(&index)?.truncate(steps)?)),
        Command::Shuffle { a, b, pi_a, pi_b } => {
            let a = parse_monomial(&a, pi_a)?;
            let b = parse_monomial(&b, pi_b)?;
            Ok(render_expr(&ctx, &shuffle(&a, &b)))
        }
        Command::Reduce { monomial, pi, at } => {
            let m = parse_monomial(&monomial, pi)?;
            let e = match at {
                Some(j) => reduce_at(&m, j)?,
                None => canonicalize(&LsiExpr::monomial(m, GaussianRational::i_pow(0))),
            };
            Ok(render_expr(&ctx, &e))
        }
        Command::Li { index } => {
            let k = parse_index(&index)?;
            ctx.check_weight(k.weight().max(2))?;
            let ex = ctx.expander();
            let loaded = ex.cached_len();
            let e = ex.li_expand(&k);
            ctx.save(&ex, loaded);
            Ok(render_expr(&ctx, &e))
        }
        Command::Zeta { index } => {
            let k = parse_index(&index)?;
            ctx.check_weight(k.weight())?;
            let ex = ctx.expander();
            let loaded = ex.cached_len();
            let e = ex.zeta_expr(&k)?;
            ctx.save(&ex, loaded);
            Ok(render_expr(&ctx, &e))
        }
        Command::Basis { weight, parity } => {
            ctx.check_weight(weight)?;
            let b = build_basis(weight, parity.parse::<Parity>()?)?;
            Ok(match ctx.format {
                Format::Text => b.monomials().iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
                Format::Json => fmt::basis_to_json(&b),
                Format::Latex => fmt::basis_latex(&b),
            })
        }
        Command::Relations { weight } => {
            ctx.check_weight(weight)?;
            let ex = ctx.expander();
            let loaded = ex.cached_len();
            let engine = ctx.engine(ex, weight);
            let rs = engine.mzv_relations(weight)?;
            ctx.save(engine.expander(), loaded);
            Ok(match ctx.format {
                Format::Text => rs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
                Format::Json => fmt::relations_to_json(&rs),
                Format::Latex => rs.iter().map(fmt::relation_latex).collect::<Vec<_>>().join(" \\\\\n"),
            })
        }
        Command::Lk { max } => {
            ctx.check_weight(max)?;
            let ex = ctx.expander();
            let loaded = ex.cached_len();
            let engine = ctx.engine(ex, max);
            let mut rows = Vec::new();
            for w in 2..=max {
                rows.push((w, engine.compute_lk(w)?));
            }
            ctx.save(engine.expander(), loaded);
            Ok(match ctx.format {
                Format::Text => {
                    let mut lines = vec!["k\tl_k".to_string()];
                    lines.extend(rows.iter().map(|(w, l)| format!("{w}\t{l}")));
                    lines.join("\n")
                }
                Format::Json => fmt::lk_to_json(&rows),
                Format::Latex => fmt::lk_latex(&rows),
            })
        }
        Command::Verify { weight } => verify(&ctx, weight),
    }
}

/// Compares each zeta expression of the given weight with the series
/// value, and evaluates every discovered relation.
fn verify(ctx: &Context, weight: u32) -> Result<String, Failure> {
    ctx.check_weight(weight)?;
    let cfg = NumericConfig::new(ctx.precision, 3, 200)?;
    let ex = ctx.expander();
    let loaded = ex.cached_len();
    let engine = ctx.engine(ex, weight);

    let mut checks = Vec::new();
    for k in enumerate_admissible(weight)? {
        let e = engine.zeta_expr(&k)?;
        if e.max_depth() > cfg.max_depth {
            checks.push(json!({"kind": "zeta", "index": k, "skipped": "depth above quadrature cap"}));
            continue;
        }
        let v = eval_expr(&e, &cfg)?;
        let target = eval_mzv(&k, &cfg)?;
        let residual = (v.re - target).abs().max(v.im.abs());
        checks.push(json!({"kind": "zeta", "index": k, "residual": residual, "pass": residual < ctx.precision}));
    }
    for r in engine.mzv_relations(weight)? {
        let residual = eval_relation(&r, &cfg)?.abs();
        checks.push(json!({"kind": "relation", "relation": r.to_string(), "residual": residual, "pass": residual < ctx.precision}));
    }
    ctx.save(engine.expander(), loaded);

    let failed = checks.iter().any(|c| c["pass"] == json!(false));
    let report = json!({"weight": weight, "precision": ctx.precision, "checks": checks, "pass": !failed});
    if failed {
        return Err(Failure::Verification(report));
    }
    Ok(render_report(ctx.format, &report))
}

fn render_report(format: Format, report: &serde_json::Value) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(report).expect("json value serializes");
    }
    let mut lines = Vec::new();
    for c in report["checks"].as_array().into_iter().flatten() {
        let what = match c["kind"].as_str() {
            Some("zeta") => format!("zeta({})", index_text(&c["index"])),
            _ => c["relation"].as_str().unwrap_or_default().to_string(),
        };
        let status = match (&c["skipped"], &c["pass"]) {
            (serde_json::Value::String(why), _) => format!("skip ({why})"),
            (_, serde_json::Value::Bool(true)) => "ok".to_string(),
            _ => "FAIL".to_string(),
        };
        let residual = c["residual"].as_f64().map(|r| format!("{r:.3e}")).unwrap_or_else(|| "-".into());
        lines.push(format!("{status}\t{residual}\t{what}"));
    }
    let verdict = if report["pass"] == json!(true) { "pass" } else { "fail" };
    lines.push(format!("weight {}: {verdict}", report["weight"]));
    lines.join("\n")
}

fn index_text(v: &serde_json::Value) -> String {
    serde_json::from_value::<Index>(v.clone()).map(|k| k.to_string()).unwrap_or_else(|_| v.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            if format == Format::Json {
                eprintln!("{}", json!({"error": {"kind": e.kind(), "message": e.to_string()}}));
            } else {
                eprintln!("error[{}]: {e}", e.kind());
            }
            ExitCode::from(2)
        }
        Err(Failure::Verification(report)) => {
            let text = render_report(format, &report);
            let _ = writeln!(std::io::stdout(), "{text}");
            eprintln!("error[verification]: numeric residuals above tolerance");
            ExitCode::from(1)
        }
    }
}
