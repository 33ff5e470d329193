use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hitprob::{verify_paper, Cache, Engine, FixtureSet, Scope};
use hitprob_core::solver::split_zero_plus;
use hitprob_core::text::{format_monomial, format_polynomial, max_variable, parse_polynomial};
use hitprob_core::{invariants, sq, stability_report, Group, KamekoMap, QuotientBasis, WeightVector};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hitprob",
    version,
    about = "Admissible monomials and the hit problem over F2"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Directory holding the `<id>.txt` reference lists.
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    /// Neither read nor write the on-disk cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of (QP_k)_n.
    Dim { k: usize, n: u32 },
    /// Admissible monomials of (QP_k)_n, or of QP_k(w) with --weight.
    Basis {
        k: usize,
        n: u32,
        /// Weight vector such as "(3,2,2,1)".
        #[arg(long)]
        weight: Option<WeightVector>,
        /// Only monomials with every exponent positive.
        #[arg(long, conflicts_with = "zero")]
        plus: bool,
        /// Only monomials with some exponent zero.
        #[arg(long)]
        zero: bool,
    },
    /// Apply Sq^i to a polynomial.
    Sq {
        i: u32,
        poly: String,
        /// Number of variables (default: the largest index used).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decide whether a polynomial is hit and give its admissible normal form.
    HitTest {
        k: usize,
        n: u32,
        #[arg(long)]
        poly: String,
    },
    /// Kameko's map (QP_k)_{2d+k} -> (QP_k)_d.
    Kameko {
        k: usize,
        d: u32,
        /// Print a basis of the kernel.
        #[arg(long)]
        kernel_basis: bool,
    },
    /// Classes fixed by Sigma_k or GL_k.
    Invariants {
        k: usize,
        n: u32,
        #[arg(long, default_value = "sigma")]
        group: Group,
        #[arg(long)]
        weight: Option<WeightVector>,
        /// Print a basis of the invariants.
        #[arg(long)]
        basis: bool,
    },
    /// Recompute the published results and compare with the reference lists.
    VerifyPaper {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
    },
    /// Inspect or clear the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache directory.
    Path,
    /// List cached files.
    List,
    /// Delete cached files.
    Clear,
}

fn parse_scope(s: &str) -> std::result::Result<Scope, String> {
    s.parse()
}

fn emit(json_mode: bool, value: &Value, text: impl FnOnce() -> String) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("JSON values serialize")
        );
    } else {
        println!("{}", text());
    }
}

fn quotient(engine: &Engine, k: usize, n: u32, weight: Option<&WeightVector>) -> Result<std::sync::Arc<QuotientBasis>> {
    Ok(match weight {
        Some(w) => {
            if w.degree() != n as u64 {
                bail!("weight {w} has degree {}, not {n}", w.degree());
            }
            engine.block(k, w)?
        }
        None => engine.basis(k, n)?,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = cli.global;
    if let Some(jobs) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    let cache = if g.no_cache { None } else { Cache::from_env() };
    let engine = Engine::new(cache);
    let fixtures = g.fixtures.map_or_else(FixtureSet::bundled, FixtureSet::new);

    match cli.command {
        Command::Dim { k, n } => {
            let q = engine.basis(k, n)?;
            let (zero, plus) = split_zero_plus(&q);
            let v = json!({
                "k": k, "n": n, "dim": q.dim(), "hit_rank": q.hit_rank(),
                "monomials": q.columns().len(), "zero": zero.len(), "plus": plus.len(),
            });
            emit(g.json, &v, || {
                format!(
                    "dim (QP_{k})_{n} = {}  (zero {}, plus {}; hit rank {} of {} monomials)",
                    q.dim(),
                    zero.len(),
                    plus.len(),
                    q.hit_rank(),
                    q.columns().len()
                )
            });
        }
        Command::Basis {
            k,
            n,
            weight,
            plus,
            zero,
        } => {
            let q = quotient(&engine, k, n, weight.as_ref())?;
            let list: Vec<String> = q
                .admissible()
                .iter()
                .filter(|m| (!plus || !m.has_zero_exponent()) && (!zero || m.has_zero_exponent()))
                .map(format_monomial)
                .collect();
            let v = json!({
                "k": k, "n": n, "weight": weight, "count": list.len(), "monomials": list,
            });
            emit(g.json, &v, || list.join("\n"));
        }
        Command::Sq { i, poly, k } => {
            let k = match k {
                Some(k) => k,
                None => max_variable(&poly)?,
            };
            let f = parse_polynomial(k, &poly)?;
            let out = format_polynomial(&sq(i, &f)?);
            emit(
                g.json,
                &json!({ "k": k, "i": i, "input": format_polynomial(&f), "result": out }),
                || out.clone(),
            );
        }
        Command::HitTest { k, n, poly } => {
            let f = parse_polynomial(k, &poly)?;
            let q = engine.basis(k, n)?;
            let normal = q.normal_form(&f)?;
            let v = json!({ "k": k, "n": n, "hit": normal.is_zero(), "normal_form": format_polynomial(&normal) });
            emit(g.json, &v, || {
                if normal.is_zero() {
                    "hit".to_string()
                } else {
                    format!("not hit; equivalent to {}", format_polynomial(&normal))
                }
            });
        }
        Command::Kameko { k, d, kernel_basis } => {
            let upper = engine.basis(k, 2 * d + k as u32)?;
            let lower = engine.basis(k, d)?;
            let map = KamekoMap::new(&upper, &lower)?;
            let report = stability_report(k, d)?;
            let kernel: Vec<String> = if kernel_basis {
                map.kernel()?
                    .canonical_rows()
                    .iter()
                    .map(|r| upper.polynomial_of(r).map(|p| format_polynomial(&p)))
                    .collect::<hitprob_core::Result<_>>()?
            } else {
                Vec::new()
            };
            let mut v = json!({
                "k": k, "d": d, "upper_dim": upper.dim(), "lower_dim": lower.dim(),
                "rank": map.rank(), "kernel_dim": map.kernel_dim(), "surjective": map.is_surjective(),
                "stability": report,
            });
            if kernel_basis {
                v["kernel_basis"] = json!(kernel);
            }
            emit(g.json, &v, || {
                let mut s = format!(
                    "(QP_{k})_{} -> (QP_{k})_{d}: {} -> {}, rank {}, kernel {}{}\nmu({}) = {}, forced isomorphism: {}, t({k},{d}) = {}",
                    upper.n(),
                    upper.dim(),
                    lower.dim(),
                    map.rank(),
                    map.kernel_dim(),
                    if map.is_surjective() { ", onto" } else { "" },
                    upper.n(),
                    report.mu,
                    report.iso_forced,
                    report.t
                );
                for p in &kernel {
                    s.push('\n');
                    s.push_str(p);
                }
                s
            });
        }
        Command::Invariants {
            k,
            n,
            group,
            weight,
            basis,
        } => {
            let q = quotient(&engine, k, n, weight.as_ref())?;
            let inv = invariants(&q, group)?;
            let list: Vec<String> = if basis {
                inv.canonical_rows()
                    .iter()
                    .map(|r| q.polynomial_of(r).map(|p| format_polynomial(&p)))
                    .collect::<hitprob_core::Result<_>>()?
            } else {
                Vec::new()
            };
            let mut v =
                json!({ "k": k, "n": n, "group": group, "weight": weight, "module_dim": q.dim(), "dim": inv.rank() });
            if basis {
                v["basis"] = json!(list);
            }
            emit(g.json, &v, || {
                let mut s = format!(
                    "{} invariants: dim {} of {}",
                    v["group"].as_str().unwrap_or(""),
                    inv.rank(),
                    q.dim()
                );
                for p in &list {
                    s.push('\n');
                    s.push_str(p);
                }
                s
            });
        }
        Command::VerifyPaper { scope } => {
            let report = match verify_paper(scope, &fixtures, &engine) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let v = serde_json::to_value(&report)?;
            emit(g.json, &v, || {
                let mut lines: Vec<String> = report
                    .claims
                    .iter()
                    .map(|c| {
                        let mut line = format!(
                            "{} {} ({:.0} ms)",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.id,
                            c.wall_ms
                        );
                        if !c.pass {
                            line += &format!("\n     expected {}\n     computed {}", c.expected, c.computed);
                        }
                        line
                    })
                    .collect();
                lines.push(format!(
                    "{} passed, {} failed in {:.1} s",
                    report.passed,
                    report.failed,
                    report.wall_ms / 1e3
                ));
                lines.join("\n")
            });
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Cache { action } => {
            let cache = Cache::from_env().context("no cache directory: set HITPROB_CACHE")?;
            match action {
                CacheAction::Path => emit(g.json, &json!({ "path": cache.dir() }), || {
                    cache.dir().display().to_string()
                }),
                CacheAction::List => {
                    let entries = cache.entries()?;
                    let v = json!(entries
                        .iter()
                        .map(|(n, s)| json!({ "file": n, "bytes": s }))
                        .collect::<Vec<_>>());
                    emit(g.json, &v, || {
                        entries
                            .iter()
                            .map(|(n, s)| format!("{n}\t{s}"))
                            .collect::<Vec<_>>()
                            .join("\n")
                    });
                }
                CacheAction::Clear => {
                    let removed = cache.clear()?;
                    emit(g.json, &json!({ "removed": removed }), || {
                        format!("removed {removed} files")
                    });
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
