//! `specht`: JSON front end for the KL, cell, Specht-model and Gram computations.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use specht_core::form;
use specht_core::specht::{self, BasisKind};
use specht_core::{
    cells::CellsJson, Composition, Error, KlTable, ParabolicKlTable, Partition, Permutation, PolyMatrix, Tables,
    DEFAULT_MAX_N,
};

#[derive(Parser)]
#[command(name = "specht", version, about = "Kazhdan-Lusztig data and categorified Specht modules of S_n")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Directory holding cached tables (default: $SPECHT_CACHE or a temp directory).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Build tables from scratch without reading or writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Output format; only JSON is supported.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpechtBasis {
    Projective,
    Simple,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegularBasis {
    Standard,
    Kl,
}

#[derive(Subcommand)]
enum Command {
    /// KL polynomial h(x, y), or the KL element C_w in the standard basis.
    Kl {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long, conflicts_with_all = ["x", "y"])]
        w: Option<String>,
    },
    /// The W-graph coefficient mu(x, y).
    Mu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Right cells of S_n.
    Cells {
        #[arg(long)]
        n: usize,
    },
    /// Parabolic KL polynomial n(x, y) for coset representatives of mu.
    Pkl {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Matrix of a translation functor on the cell module of mu.
    Specht {
        #[arg(long)]
        mu: Composition,
        #[arg(long, value_enum, default_value_t = SpechtBasis::Projective)]
        basis: SpechtBasis,
        /// Generator index; all generators when omitted.
        #[arg(long)]
        gen: Option<usize>,
        #[arg(long)]
        at_one: bool,
    },
    /// Hecke relations and Specht identification for every composition of n.
    SpechtVerify {
        #[arg(long)]
        n: usize,
    },
    /// Gram matrix of the bilinear form on projectives.
    Gram {
        #[arg(long)]
        mu: Composition,
        /// Emit the inverse expanded as power series instead.
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value_t = 10, requires = "inverse")]
        order: i32,
        #[arg(long, conflicts_with = "inverse")]
        at_one: bool,
    },
    /// Character of the cell module at v = 1.
    Character {
        #[arg(long)]
        mu: Composition,
        /// Cycle type such as 2,1; every class when omitted.
        #[arg(long)]
        cycle_type: Option<Partition>,
    },
    /// Matrix of H_s + v on the regular representation.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gen: usize,
        #[arg(long, value_enum, default_value_t = RegularBasis::Standard)]
        basis: RegularBasis,
    },
    /// Timings of the full pipeline.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable output")
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > DEFAULT_MAX_N {
        return Err(Error::BoundExceeded { n, bound: DEFAULT_MAX_N }.into());
    }
    Ok(())
}

fn tables(common: &Common, n: usize) -> Result<Tables, Failure> {
    check_n(n)?;
    let dir = (!common.no_cache).then(|| common.cache.clone().unwrap_or_else(cache::default_dir));
    Ok(cache::load_or_build(dir.as_deref(), n)?)
}

fn perm(s: &str, n: usize) -> Result<Permutation, Failure> {
    Ok(Permutation::parse(s, n)?)
}

fn matrix_json(m: &PolyMatrix, at_one: bool) -> Value {
    if at_one {
        let rows: Vec<Vec<Value>> = m
            .eval_at_one()
            .into_iter()
            .map(|row| row.into_iter().map(|x| serde_json::from_str(&x.to_string()).expect("integer")).collect())
            .collect();
        json!(rows)
    } else {
        json!(m.to_strings())
    }
}

fn run(cli: &Cli) -> Outcome {
    let common = &cli.common;
    match &cli.command {
        Command::Kl { n, x, y, w } => {
            let t = tables(common, *n)?;
            match (x, y, w) {
                (Some(x), Some(y), None) => {
                    let h = t.kl.h(&perm(x, *n)?, &perm(y, *n)?)?;
                    Ok(json!({ "h": h.to_string() }))
                }
                (None, None, Some(w)) => Ok(to_value(&t.kl.kl_element(&perm(w, *n)?)?)),
                _ => Err(Failure::Usage("kl needs either --x and --y, or --w".into())),
            }
        }
        Command::Mu { n, x, y } => {
            let t = tables(common, *n)?;
            Ok(json!({ "mu": t.kl.mu(&perm(x, *n)?, &perm(y, *n)?)? }))
        }
        Command::Cells { n } => {
            let t = tables(common, *n)?;
            Ok(to_value(&CellsJson::from(&t.cells)))
        }
        Command::Pkl { mu, x, y } => {
            let n = mu.n();
            check_n(n)?;
            let table = if common.no_cache {
                ParabolicKlTable::build(mu)
            } else {
                (*tables(common, n)?.parabolic(mu)?).clone()
            };
            Ok(json!({ "n": table.n_poly(&perm(x, n)?, &perm(y, n)?)?.to_string() }))
        }
        Command::Specht { mu, basis, gen, at_one } => {
            let t = tables(common, mu.n())?;
            let model = t.specht(mu)?;
            let kind = match basis {
                SpechtBasis::Projective => BasisKind::Projective,
                SpechtBasis::Simple => BasisKind::Simple,
            };
            match gen {
                Some(i) => Ok(matrix_json(model.matrix(kind, *i)?, *at_one)),
                None => {
                    let all = (1..mu.n()).map(|i| model.matrix(kind, i).map(|m| matrix_json(m, *at_one)));
                    Ok(json!({
                        "basis": model.basis,
                        "matrices": all.collect::<Result<Vec<_>, _>>()?,
                    }))
                }
            }
        }
        Command::SpechtVerify { n } => specht_verify(common, *n),
        Command::Gram { mu, inverse, order, at_one } => {
            let t = tables(common, mu.n())?;
            let (_, g) = t.gram(mu)?;
            if *inverse {
                Ok(matrix_json(&form::simple_form(&g, *order)?, false))
            } else {
                Ok(matrix_json(&g.entries, *at_one))
            }
        }
        Command::Character { mu, cycle_type } => {
            let t = tables(common, mu.n())?;
            let model = t.specht(mu)?;
            match cycle_type {
                Some(tau) => Ok(json!({ "character": model.character_at_one(tau)? })),
                None => {
                    let values = Partition::all(mu.n())
                        .into_iter()
                        .map(|tau| Ok(json!({ "cycle_type": tau, "character": model.character_at_one(&tau)? })))
                        .collect::<Result<Vec<_>, Error>>()?;
                    Ok(json!({ "lambda_prime": model.lambda_prime, "characters": values }))
                }
            }
        }
        Command::Regular { n, gen, basis } => {
            let t = tables(common, *n)?;
            let m = match basis {
                RegularBasis::Standard => t.kl.regular_model(*gen)?,
                RegularBasis::Kl => t.kl.kl_model(*gen)?,
            };
            Ok(matrix_json(&m, false))
        }
        Command::Bench { n, repeat } => bench(*n, *repeat),
    }
}

#[derive(Serialize)]
struct MuVerdict {
    mu: Composition,
    dimension: usize,
    relations: bool,
    identified: bool,
    error: Option<String>,
}

fn verify_all(t: &Tables) -> Vec<MuVerdict> {
    Composition::all(t.n())
        .into_iter()
        .map(|mu| match t.specht(&mu) {
            Ok(model) => {
                let relations = specht::verify_relations(&model).all_hold;
                let ident = specht::identify_specht(&model);
                MuVerdict {
                    dimension: model.dim(),
                    relations,
                    identified: ident.is_ok(),
                    error: ident.err().map(|e| e.to_string()),
                    mu,
                }
            }
            Err(e) => MuVerdict { mu, dimension: 0, relations: false, identified: false, error: Some(e.to_string()) },
        })
        .collect()
}

fn specht_verify(common: &Common, n: usize) -> Outcome {
    let t = tables(common, n)?;
    let verdicts = verify_all(&t);
    let pass = verdicts.iter().all(|v| v.relations && v.identified);
    let out = json!({ "n": n, "pass": pass, "compositions": verdicts });
    if pass {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn bench(n: usize, repeat: usize) -> Outcome {
    check_n(n)?;
    let repeat = repeat.max(1);
    let ms = |t: Instant| t.elapsed().as_secs_f64() * 1e3;
    let mut runs = Vec::with_capacity(repeat);
    let mut all_pass = true;
    for _ in 0..repeat {
        let t0 = Instant::now();
        let kl = KlTable::build(n)?;
        let kl_ms = ms(t0);
        let t1 = Instant::now();
        let tables = Tables::from_kl(kl);
        let cells_ms = ms(t1);
        let t2 = Instant::now();
        all_pass &= verify_all(&tables).iter().all(|v| v.relations && v.identified);
        let verify_ms = ms(t2);
        runs.push(json!({
            "kl_table_ms": kl_ms,
            "cells_ms": cells_ms,
            "verification_ms": verify_ms,
            "total_ms": kl_ms + cells_ms + verify_ms,
        }));
    }
    let totals: Vec<f64> = runs.iter().map(|r| r["total_ms"].as_f64().expect("number")).collect();
    let min = totals.iter().copied().fold(f64::INFINITY, f64::min);
    let max = totals.iter().copied().fold(0.0, f64::max);
    let ratio = if min > 0.0 { max / min } else { 1.0 };
    let out = json!({
        "n": n,
        "repeat": repeat,
        "runs": runs,
        "sanity": { "min_total_ms": min, "max_total_ms": max, "max_over_min": ratio, "verification_pass": all_pass },
    });
    if all_pass {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
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
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            println!("{v}");
            eprintln!("verification failed");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
