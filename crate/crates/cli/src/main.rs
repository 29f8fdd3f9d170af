use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reesalg::cohomology::{
    hochster_profile, ideal_profile_via_ses, predict_rees_profile, profile_from_resolution, profile_invariants,
    safe_window,
};
use reesalg::io::{parse_complex, parse_ideal, Cache, ParseOptions};
use reesalg::rees::{
    minimality_check, reducedness_check, rees_generators, rees_ideal_elimination, verify_groebner_theorem,
};
use reesalg::resolution::{betti_invariants, Presentation, Resolution};
use reesalg::verify::{
    any_fails, check_gin, check_ini, check_maximal_ideal_theorems, check_section3, MaxIdealOptions, TheoremReport,
};
use reesalg::{Field, Ideal, TermOrder};

#[derive(Parser)]
#[command(name = "reesalg", version, about = "Rees algebras, Betti numbers and local cohomology")]
struct Cli {
    /// Coefficient field: `q` or `fp:P`. Overrides the input header.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Term order: `revlex`, `lex` or `elim:K`. Overrides the input header.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Seed for randomized computations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Directory for cached Groebner bases and resolutions.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Degree window `lo:hi` for local cohomology.
    #[arg(long, global = true, allow_hyphen_values = true)]
    window: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal file.
    Groebner { input: PathBuf },
    /// Presentation ideal of the Rees algebra. Without `--forms`, of the
    /// maximal ideal, built from the reduced revlex basis.
    Rees {
        input: PathBuf,
        /// Ideal file whose generators (of one degree) generate `I`.
        #[arg(long)]
        forms: Option<PathBuf>,
        /// Run the Groebner and count checks up to this degree.
        #[arg(long)]
        check: Option<u32>,
    },
    /// Graded Betti numbers of `B/J`.
    Betti { input: PathBuf },
    /// Local cohomology of `B/J`, optionally with the predicted profile
    /// of `A[mt]`.
    Cohomology {
        input: PathBuf,
        #[arg(long)]
        rees: bool,
    },
    /// Local cohomology of a Stanley-Reisner ring from a complex file.
    Hochster {
        input: PathBuf,
        /// Also the profile of the Stanley-Reisner ideal.
        #[arg(long)]
        ideal: bool,
    },
    /// Theorem reports as a JSON array. Exits with status 1 if any fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        input: PathBuf,
        /// Forms generating `I` (section3 suite).
        #[arg(long)]
        forms: Option<PathBuf>,
        /// Random coordinate changes (gin suite).
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Resolve `A[mt]` directly as well (maxideal suite); defaults to
        /// `n <= 3`.
        #[arg(long)]
        direct: Option<bool>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Section3,
    Maxideal,
    Ini,
    Gin,
}

struct Ctx {
    field: Option<Field>,
    order: Option<String>,
    cache: Option<Cache>,
    window: Option<(i64, i64)>,
    seed: u64,
}

fn parse_window(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s.split_once(':').context("window must be lo:hi")?;
    let w = (lo.trim().parse()?, hi.trim().parse()?);
    if w.0 > w.1 {
        bail!("empty window {s}");
    }
    Ok(w)
}

impl Ctx {
    fn ideal(&self, path: &Path) -> Result<Ideal> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let f = parse_ideal(
            &text,
            ParseOptions {
                require_homogeneous: false,
                field: self.field,
            },
        )
        .with_context(|| path.display().to_string())?;
        let ideal = f.ideal()?;
        Ok(match &self.order {
            Some(o) => ideal.with_order(&TermOrder::parse(o, ideal.nvars())?),
            None => ideal,
        })
    }

    fn resolution(&self, ideal: &Ideal) -> Result<Resolution> {
        Ok(match &self.cache {
            Some(c) => c.resolution(ideal)?,
            None => Presentation::quotient(ideal)?.resolve()?,
        })
    }

    fn window_for(&self, res: &Resolution) -> (i64, i64) {
        self.window.unwrap_or_else(|| safe_window(res, 6))
    }
}

fn strings(ideal: &Ideal, polys: &[reesalg::Polynomial]) -> Vec<String> {
    polys.iter().map(|g| g.to_string_with(ideal.names())).collect()
}

fn groebner(ctx: &Ctx, input: &Path) -> Result<Value> {
    let j = ctx.ideal(input)?;
    let gb = match &ctx.cache {
        Some(c) => c.groebner(&j)?,
        None => j.groebner(),
    };
    Ok(json!({
        "field": j.field().to_string(),
        "order": j.order().descriptor(),
        "vars": j.names(),
        "basis": strings(&j, gb.elements()),
        "leading_monomials": gb.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "hilbert_series": gb.hilbert_series(),
    }))
}

fn rees(ctx: &Ctx, input: &Path, forms: Option<&Path>, check: Option<u32>) -> Result<Value> {
    let j = ctx.ideal(input)?;
    j.require_homogeneous()?;
    match forms {
        Some(f) => {
            let forms = ctx.ideal(f)?;
            let p = rees_ideal_elimination(&j, forms.generators())?;
            let names = p.ideal().names().to_vec();
            Ok(json!({
                "origin": "elimination",
                "n": p.n(),
                "s": p.s(),
                "generators": p.generators().iter().map(|g| g.to_string_with(&names)).collect::<Vec<_>>(),
            }))
        }
        None => {
            let revlex = TermOrder::revlex(j.nvars());
            let gb = j.with_order(&revlex).groebner();
            let p = rees_generators(j.field(), gb.elements(), j.nvars())?;
            let names = p.ideal().names().to_vec();
            let red = reducedness_check(p.generators()).map(|w| {
                json!({
                    "leader": p.generators()[w.leader].to_string_with(&names),
                    "container": p.generators()[w.container].to_string_with(&names),
                })
            });
            let mut out = json!({
                "origin": "maximal-ideal",
                "n": p.n(),
                "generators": p.generators().iter().map(|g| g.to_string_with(&names)).collect::<Vec<_>>(),
                "minimality": minimality_check(&p),
                "reduced": red.is_none(),
                "reducedness_witness": red,
            });
            if let Some(bound) = check {
                out["groebner_theorem"] = serde_json::to_value(verify_groebner_theorem(
                    j.field(),
                    gb.elements(),
                    j.nvars(),
                    bound,
                )?)?;
            }
            Ok(out)
        }
    }
}

fn betti(ctx: &Ctx, input: &Path) -> Result<Value> {
    let j = ctx.ideal(input)?;
    let res = ctx.resolution(&j)?;
    let t = res.betti_table();
    Ok(json!({
        "table": t,
        "display": t.to_string(),
        "invariants": betti_invariants(&t),
    }))
}

fn cohomology(ctx: &Ctx, input: &Path, with_rees: bool) -> Result<Value> {
    let j = ctx.ideal(input)?;
    let res = ctx.resolution(&j)?;
    let p = profile_from_resolution(&res, ctx.window_for(&res))?;
    let mut out = json!({
        "profile": p,
        "invariants": profile_invariants(&p),
    });
    if with_rees {
        out["rees"] = serde_json::to_value(predict_rees_profile(&p)?)?;
    }
    Ok(out)
}

fn hochster(ctx: &Ctx, input: &Path, with_ideal: bool) -> Result<Value> {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let delta = parse_complex(&text)?;
    let field = ctx.field.unwrap_or(Field::Rational);
    let window = ctx.window.unwrap_or((-(delta.vertices() as i64) - 2, 2));
    let p = hochster_profile(field, &delta, window);
    let mut out = json!({
        "profile": p,
        "invariants": profile_invariants(&p),
    });
    if with_ideal {
        out["ideal"] = serde_json::to_value(ideal_profile_via_ses(field, &delta, window)?)?;
    }
    Ok(out)
}

fn verify(
    ctx: &Ctx,
    suite: Suite,
    input: &Path,
    forms: Option<&Path>,
    trials: usize,
    direct: Option<bool>,
) -> Result<Vec<TheoremReport>> {
    let j = ctx.ideal(input)?;
    Ok(match suite {
        Suite::Section3 => {
            let forms = ctx.ideal(forms.context("--forms is required for section3")?)?;
            check_section3(&j, forms.generators())?
        }
        Suite::Maxideal => check_maximal_ideal_theorems(&j, MaxIdealOptions { direct })?,
        Suite::Ini => check_ini(&j, &j.order().clone())?,
        Suite::Gin => check_gin(&j, trials, ctx.seed)?,
    })
}

fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx {
        field: cli.field.as_deref().map(Field::parse).transpose()?,
        order: cli.order,
        cache: cli.cache_dir.as_ref().map(Cache::open).transpose()?,
        window: cli.window.as_deref().map(parse_window).transpose()?,
        seed: cli.seed,
    };
    let (out, failed) = match &cli.command {
        Command::Groebner { input } => (groebner(&ctx, input)?, false),
        Command::Rees { input, forms, check } => (rees(&ctx, input, forms.as_deref(), *check)?, false),
        Command::Betti { input } => (betti(&ctx, input)?, false),
        Command::Cohomology { input, rees } => (cohomology(&ctx, input, *rees)?, false),
        Command::Hochster { input, ideal } => (hochster(&ctx, input, *ideal)?, false),
        Command::Verify {
            suite,
            input,
            forms,
            trials,
            direct,
        } => {
            let reps = verify(&ctx, *suite, input, forms.as_deref(), *trials, *direct)?;
            for r in &reps {
                log::info!("{}", r.line());
            }
            (serde_json::to_value(&reps)?, any_fails(&reps))
        }
    };
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{}", serde_json::to_string_pretty(&out)?) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        r => r?,
    }
    Ok(failed)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
