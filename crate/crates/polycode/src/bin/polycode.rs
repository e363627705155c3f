use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polycode::search::{run_search, verify_table, write_csv, write_json, SearchJob, TableId};
use polycode::text::{format_elem, format_elems, format_field, format_poly, parse_elem, parse_elems, parse_field, parse_indices, parse_poly};
use polycode_core::codes::{DEFAULT_BUDGET, Matrix};
use polycode_core::equiv::{class_representatives, witnesses};
use polycode_core::factor::factor;
use polycode_core::trinomial::{ccor4_factorization, factor_tower_trinomial, factor_xq_x_a, AsFactorization};
use polycode_core::{AmbientSpace, CodeParams, FieldRef, PolycyclicCode, Strategy};
use serde_json::json;

#[derive(Parser)]
#[command(name = "polycode", version, about = "Polycyclic code classification over small finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count equivalence classes and list one representative per class.
    Classes {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        support: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two ambient spaces are equivalent.
    Equiv {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        /// Support indices; when given, --a/--b hold the values on it,
        /// otherwise they are full associated vectors of length n.
        #[arg(long)]
        support: Option<String>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Parameters of the code generated by --gen in GF(q)[x]/<modulus>.
    Code {
        #[arg(long)]
        field: String,
        #[arg(long)]
        modulus: String,
        #[arg(long)]
        gen: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Maximum weight for the low-weight strategy.
        #[arg(long, default_value_t = 8)]
        w_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write G and H as plain-text rows to this file.
        #[arg(long)]
        emit_matrix: Option<PathBuf>,
    },
    /// Closed-form Artin–Schreier factorizations.
    FactorSpecial {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        /// Constant for `xq-x-a`.
        #[arg(long)]
        a: Option<String>,
        /// Subfield degree for `xq-x-a`.
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Complete factorization of an arbitrary polynomial.
    Factor {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
    },
    /// Enumerate codes over every class representative.
    Search {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        support: String,
        /// Restrict to these support values, `;`-separated (e.g. `1,1,1;2,1,1`).
        #[arg(long)]
        reps: Option<String>,
        #[arg(long)]
        max_generators: Option<usize>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 8)]
        w_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Recompute a bundled table of published codes.
    Verify {
        #[arg(long, default_value = "table1")]
        table: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Exhaustive,
    LowWeight,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tower,
    Ccor4,
    XqXA,
}

fn strategy(s: StrategyArg, w_max: usize, budget: u64) -> Strategy {
    match s {
        StrategyArg::Auto => Strategy::Auto { budget },
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::LowWeight => Strategy::LowWeight { w_max },
    }
}

fn space_from(f: &FieldRef, n: usize, support: Option<&[usize]>, text: &str) -> Result<AmbientSpace> {
    let v = parse_elems(f, text)?;
    Ok(match support {
        Some(s) => AmbientSpace::from_support(f, n, s, &v)?,
        None => AmbientSpace::new(f, n, v)?,
    })
}

fn print_as(f: &FieldRef, fac: &AsFactorization) {
    println!("target: {}", format_poly(&fac.target));
    for (g, e) in &fac.factors {
        println!("  ({})^{}", format_poly(g), e);
    }
    if !fac.betas.is_empty() {
        println!("betas: {}", format_elems(f, &fac.betas));
    }
}

fn write_matrix(out: &mut impl Write, name: &str, m: &Matrix) -> io::Result<()> {
    writeln!(out, "{name} {}x{}", m.rows(), m.cols())?;
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&e| format_elem(m.field(), e)).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Classes { field, n, support, json } => {
            let f = parse_field(&field)?;
            let support = parse_indices(&support)?;
            let idx = class_representatives(&f, n, &support)?;
            let reps: Vec<String> = idx.reps.iter().map(|r| format_poly(&r.modulus())).collect();
            if json {
                let out = json!({
                    "field": format_field(&f),
                    "n": n,
                    "support": support,
                    "count": idx.count.to_string(),
                    "representatives": reps,
                    "witnesses": [],
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("classes: {}", idx.count);
                for r in reps {
                    println!("{r}");
                }
            }
        }
        Cmd::Equiv { field, n, support, a, b, json } => {
            let f = parse_field(&field)?;
            let support = support.map(|s| parse_indices(&s)).transpose()?;
            let sa = space_from(&f, n, support.as_deref(), &a)?;
            let sb = space_from(&f, n, support.as_deref(), &b)?;
            let ws = witnesses(&sa, &sb)?;
            let alphas: Vec<String> = ws.iter().map(|w| format_elem(&f, w.alpha)).collect();
            if json {
                let out = json!({
                    "field": format_field(&f),
                    "n": n,
                    "support": sa.support(),
                    "count": null,
                    "representatives": [],
                    "witnesses": alphas,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else if alphas.is_empty() {
                println!("not equivalent");
            } else {
                println!("equivalent; f(x) -> f(alpha x) maps <{}> onto <{}>", format_poly(&sb.modulus()), format_poly(&sa.modulus()));
                println!("alpha: {}", alphas.join(" "));
            }
        }
        Cmd::Code { field, modulus, gen, strategy: s, w_max, budget, emit_matrix } => {
            let f = parse_field(&field)?;
            let space = AmbientSpace::from_modulus(&parse_poly(&f, &modulus)?)?;
            let code = PolycyclicCode::new(&space, &parse_poly(&f, &gen)?)?;
            let r = code.min_distance(strategy(s, w_max, budget))?;
            let (n, k, q) = (code.len(), code.dimension(), f.order());
            let params = r.exact().map(|d| CodeParams { n, k, d, q });
            let out = json!({
                "n": n,
                "k": k,
                "d": r.exact(),
                "d_lower": r.lower,
                "d_upper": r.upper,
                "method": r.method.as_str(),
                "griesmer": params.map(|p| p.griesmer()),
                "attains_griesmer": params.map(|p| p.attains_griesmer()),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            if let Some(path) = emit_matrix {
                let mut w = BufWriter::new(File::create(&path).with_context(|| format!("creating {}", path.display()))?);
                write_matrix(&mut w, "G", &code.generator_matrix()?)?;
                write_matrix(&mut w, "H", &code.parity_check_matrix())?;
                w.flush()?;
            }
        }
        Cmd::FactorSpecial { field, kind, ell, a, r } => {
            let f = parse_field(&field)?;
            let fac = match kind {
                Kind::Tower => factor_tower_trinomial(&f, ell)?,
                Kind::Ccor4 => ccor4_factorization(&f, ell)?,
                Kind::XqXA => {
                    let Some(a) = a else { bail!("--a is required for xq-x-a") };
                    factor_xq_x_a(&f, parse_elem(&f, &a)?, r)?
                }
            };
            print_as(&f, &fac);
        }
        Cmd::Factor { field, poly } => {
            let f = parse_field(&field)?;
            let fac = factor(&parse_poly(&f, &poly)?)?;
            println!("unit: {}", format_elem(&f, fac.unit));
            for (g, e) in &fac.factors {
                println!("  ({})^{}", format_poly(g), e);
            }
        }
        Cmd::Search { field, n, support, reps, max_generators, strategy: s, w_max, budget, out, csv } => {
            let f = parse_field(&field)?;
            let mut job = SearchJob::new(&f, n, &parse_indices(&support)?)?;
            job.strategy = strategy(s, w_max, budget);
            job.max_generators = max_generators;
            if let Some(reps) = reps {
                job.representatives = Some(reps.split(';').map(|v| parse_elems(&f, v)).collect::<Result<_, _>>()?);
            }
            let records = run_search(&job)?;
            let sink: Box<dyn Write> = match &out {
                Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
                None => Box::new(io::stdout().lock()),
            };
            let sink = BufWriter::new(sink);
            if csv {
                write_csv(&records, sink)?;
            } else {
                write_json(&records, sink)?;
            }
        }
        Cmd::Verify { table, budget, json } => {
            let id: TableId = table.parse()?;
            let report = verify_table(id, Strategy::Auto { budget })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for r in &report.rows {
                    let got = r.computed.clone().unwrap_or_else(|| "-".into());
                    let status = if r.pass { "pass" } else { "FAIL" };
                    print!("{status} {:<10} {} expected {} got {} ({})", r.label, r.generator, r.expected, got, r.method);
                    if let Some(b) = &r.banded {
                        print!("; g does not divide the modulus, span of shifts {b}");
                    }
                    println!();
                }
            }
        }
    }
    Ok(())
}
