//! Command line front end: exact category and orbifold-datum pipelines
//! with deterministic JSON output.
//!
//! Exit codes: 0 all requested checks pass, 1 a verification or
//! consistency check fails, 2 input, parse or usage errors.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use orbikit::bimodule::{
    bimodule_system, cell_string, grid_from_row, peel, qdim_grid, select_by_rank, unit_row,
    x_submatrix, BimLabel,
};
use orbikit::cyclotomic::Cyclo;
use orbikit::fib::{build_fib, solve_fib, Candidate, IOTA, PHI};
use orbikit::fusion::{CheckReport, FusionCategoryData};
use orbikit::invariants::{dim_hom_aa, is_simple, orbifold_global_dimension, rank};
use orbikit::ising::build_ising;
use orbikit::jsonio::{category_from_json, category_to_json, datum_from_json, datum_to_json};
use orbikit::orbifold::{Condition, OrbifoldDatum};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "orbikit",
    version,
    about = "Exact orbifold data in Ising-type modular fusion categories"
)]
struct Cli {
    /// Decimal digits used for numeric approximations in output.
    #[arg(long, global = true, env = "ORBIKIT_PRECISION", default_value_t = 10)]
    precision: usize,
    /// Worker thread count, kept for interface stability. All checks are
    /// deterministic and independent of this value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one of the 16 Ising-type categories.
    Ising {
        /// Root-of-unity selector, 0..7.
        #[arg(long)]
        m: u8,
        /// Sign of dim(sigma): +1 or -1.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i8,
        /// Emit the full JSON document instead of the summary table.
        #[arg(long)]
        json: bool,
    },
    /// Check the eight polynomial conditions on a datum.
    Verify {
        #[arg(long)]
        datum: PathBuf,
        /// Category file path or inline spec like "ising:m=7,eps=-1".
        #[arg(long)]
        category: String,
        /// Comma-separated subset such as "O1,O4"; default all eight.
        #[arg(long)]
        conditions: Option<String>,
    },
    /// Sweep the two-label candidate grid and list verified data.
    SolveFib {
        /// Exponent of h as a power of the canonical primitive 48th root;
        /// odd and coprime to 48.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<i8>,
        /// Sweep every category (the default when no filter is given).
        #[arg(long)]
        all: bool,
        /// Write each verified datum to a JSON file in this directory
        /// instead of embedding it in the record.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Simplicity scalar, global dimension and rank of a datum.
    Invariants {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        category: String,
    },
    /// Factor the induced-bimodule Gram matrix of a datum.
    Peel {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        category: String,
        /// Compute the rank and keep only row-count-compatible
        /// factorization combinations.
        #[arg(long)]
        rank_from_invariants: bool,
    },
    /// Full pipeline for one parameter point: conditions, invariants,
    /// Gram factorization, quantum dimensions, sum rule.
    Report {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: i8,
    },
}

fn main() {
    // die quietly when a pipe reader such as `head` closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let code = match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{}", json!({ "error": format!("{err:#}") }));
            2
        }
    };
    std::process::exit(code);
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let prec = cli.precision.min(17);
    match cli.cmd {
        Cmd::Ising { m, epsilon, json } => cmd_ising(m, epsilon, json, prec),
        Cmd::Verify { datum, category, conditions } => cmd_verify(&datum, &category, conditions.as_deref()),
        Cmd::SolveFib { n, epsilon, all, out_dir } => cmd_solve_fib(n, epsilon, all, out_dir.as_deref(), prec),
        Cmd::Invariants { datum, category } => cmd_invariants(&datum, &category, prec),
        Cmd::Peel { datum, category, rank_from_invariants } => {
            cmd_peel(&datum, &category, rank_from_invariants, prec)
        }
        Cmd::Report { n, epsilon } => cmd_report(n, epsilon, prec),
    }
}

fn check_sign(epsilon: i8) -> Result<i8> {
    if epsilon == 1 || epsilon == -1 {
        Ok(epsilon)
    } else {
        bail!("epsilon must be +1 or -1, got {epsilon}");
    }
}

/// Category reference: a JSON file path, or "ising:m=<0..7>,eps=<+1|-1>".
fn load_category(spec: &str) -> Result<FusionCategoryData> {
    if let Some(rest) = spec.strip_prefix("ising:") {
        let mut m: Option<u8> = None;
        let mut eps: Option<i8> = None;
        for part in rest.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| anyhow!("bad ising spec part {part:?}, expected key=value"))?;
            match key.trim() {
                "m" => m = Some(value.trim().parse().context("parse m")?),
                "eps" | "epsilon" => eps = Some(value.trim().parse().context("parse epsilon")?),
                other => bail!("unknown ising spec key {other:?}"),
            }
        }
        let m = m.ok_or_else(|| anyhow!("ising spec needs m="))?;
        let eps = check_sign(eps.ok_or_else(|| anyhow!("ising spec needs eps="))?)?;
        Ok(build_ising(m, eps)?)
    } else {
        let text = std::fs::read_to_string(spec).with_context(|| format!("read {spec}"))?;
        Ok(category_from_json(&text)?)
    }
}

fn load_datum(path: &PathBuf, cat: &FusionCategoryData) -> Result<OrbifoldDatum> {
    let text = std::fs::read_to_string(path).with_context(|| format!("read {}", path.display()))?;
    Ok(datum_from_json(&text, cat)?)
}

fn approx_str(c: &Cyclo, prec: usize) -> String {
    let z = c.embed();
    let scale = 1.0 + z.re.abs() + z.im.abs();
    if z.im.abs() < 1e-9 * scale {
        format!("{:.*}", prec, z.re)
    } else {
        format!("{:.*}{:+.*}i", prec, z.re, prec, z.im)
    }
}

fn cyclo_json(c: &Cyclo, prec: usize) -> Value {
    let mut v = serde_json::to_value(c).expect("cyclo serialization");
    v["approx"] = Value::String(approx_str(c, prec));
    v
}

fn report_json(rep: &CheckReport) -> Value {
    json!({
        "condition": rep.label,
        "checked": rep.checked,
        "passed": rep.passed(),
        "truncated": rep.truncated,
        "violations": rep.violations.iter().map(|v| json!({
            "indices": v.indices,
            "lhs": v.lhs.to_string(),
            "rhs": v.rhs.to_string(),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_ising(m: u8, epsilon: i8, as_json: bool, prec: usize) -> Result<i32> {
    let epsilon = check_sign(epsilon)?;
    let cat = build_ising(m, epsilon)?;
    if as_json {
        println!("{}", category_to_json(&cat));
        return Ok(0);
    }
    println!("Ising-type category (m={m}, epsilon={epsilon:+})");
    println!("objects: {}", cat.objects().map(|i| cat.name(i)).collect::<Vec<_>>().join(", "));
    for i in cat.objects() {
        for j in cat.objects() {
            let parts: Vec<&str> = cat.fuse(i, j).into_iter().map(|k| cat.name(k)).collect();
            println!("  {} x {} = {}", cat.name(i), cat.name(j), parts.join(" + "));
        }
    }
    println!("object  dual    qdim    twist");
    for i in cat.objects() {
        println!(
            "{:<7} {:<7} {:<28} {}",
            cat.name(i),
            cat.name(cat.dual(i)),
            format!("{} ~ {}", cat.qdim(i), approx_str(cat.qdim(i), 6)),
            format!("{} ~ {}", cat.twist(i), approx_str(cat.twist(i), 6)),
        );
    }
    let mut f: Vec<_> = cat.f_entries().collect();
    f.sort_by_key(|(k, _)| **k);
    println!("F entries ({}):", f.len());
    for (&(i, j, k, l, p, q), v) in f {
        println!(
            "  F[{} {} {}; {}]({} -> {}) = {}",
            cat.name(i), cat.name(j), cat.name(k), cat.name(l), cat.name(p), cat.name(q), v
        );
    }
    let mut r: Vec<_> = cat.r_entries().collect();
    r.sort_by_key(|(k, _)| **k);
    println!("R entries ({}):", r.len());
    for (&(i, j, k), v) in r {
        println!("  R[{} {} -> {}] = {}", cat.name(i), cat.name(j), cat.name(k), v);
    }
    let dim = cat.global_dimension();
    let anomaly = cat.anomaly()?;
    println!("Dim = {} ~ {}", dim, approx_str(&dim, 6));
    println!("anomaly = {} ~ {}", anomaly, approx_str(&anomaly, prec));
    Ok(0)
}

fn cmd_verify(datum_path: &PathBuf, category: &str, conditions: Option<&str>) -> Result<i32> {
    let cat = load_category(category)?;
    let datum = load_datum(datum_path, &cat)?;
    let conds: Vec<Condition> = match conditions {
        None => Condition::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(|s| Condition::parse(s.trim()).ok_or_else(|| anyhow!("unknown condition {s:?}")))
            .collect::<Result<_>>()?,
    };
    let reports = datum.check_all(&cat, &conds);
    let passed = reports.iter().all(|r| r.passed());
    let out = json!({
        "datum": datum_path.display().to_string(),
        "category": category,
        "results": reports.iter().map(report_json).collect::<Vec<_>>(),
        "passed": passed,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if passed { 0 } else { 1 })
}

fn m_of_n(n: u64) -> u8 {
    (((15 + 16 - (n % 16)) % 16) / 2) as u8
}

fn cmd_solve_fib(
    n: Option<u64>,
    epsilon: Option<i8>,
    _all: bool,
    out_dir: Option<&std::path::Path>,
    prec: usize,
) -> Result<i32> {
    if let Some(n) = n {
        if n % 2 == 0 || n % 3 == 0 || n >= 48 {
            bail!("n must be odd, coprime to 48 and below 48, got {n}");
        }
    }
    let eps_list: Vec<i8> = match epsilon {
        Some(e) => vec![check_sign(e)?],
        None => vec![1, -1],
    };
    let m_list: Vec<u8> = match n {
        Some(n) => vec![m_of_n(n)],
        None => (0..8).collect(),
    };
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("create {}", dir.display()))?;
    }
    let mut records = Vec::new();
    let mut tested_total = 0usize;
    for &eps in &eps_list {
        for &m in &m_list {
            let outcome = solve_fib(m, eps)?;
            tested_total += outcome.tested;
            for hit in outcome.hits {
                if let Some(want) = n {
                    if hit.h_exp != want {
                        continue;
                    }
                }
                records.push(hit_record(hit, m, eps, out_dir, prec)?);
            }
        }
    }
    records.sort_by_key(|r| (r["epsilon"].as_i64().unwrap_or(0), r["n"].as_u64().unwrap_or(0)));
    let out = json!({
        "candidates_tested": tested_total,
        "records": records,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

fn hit_record(
    hit: Candidate,
    m: u8,
    eps: i8,
    out_dir: Option<&std::path::Path>,
    prec: usize,
) -> Result<Value> {
    let r = build_fib(hit.h_exp, eps)?;
    let dim = orbifold_global_dimension(&r.datum, &r.cat);
    let anomaly = r.cat.anomaly()?;
    let psi_dim = r.datum.psi2(PHI) / r.datum.psi2(IOTA);
    let datum_json = datum_to_json(&r.datum, &r.cat);
    let mut rec = json!({
        "n": hit.h_exp,
        "m": m,
        "epsilon": eps,
        "delta": hit.delta,
        "nu": hit.nu,
        "verified": true,
        "invariants": {
            "global_dimension": cyclo_json(&dim, prec),
            "anomaly": cyclo_json(&anomaly, prec),
            "psi_module_dimension": cyclo_json(&psi_dim, prec),
        },
    });
    if let Some(dir) = out_dir {
        let name = format!("fib_n{}_eps{}.json", hit.h_exp, if eps > 0 { "p" } else { "m" });
        let path = dir.join(&name);
        std::fs::write(&path, datum_json).with_context(|| format!("write {}", path.display()))?;
        rec["datum_file"] = Value::String(path.display().to_string());
    } else {
        rec["datum"] = serde_json::from_str(&datum_json)?;
    }
    Ok(rec)
}

fn cmd_invariants(datum_path: &PathBuf, category: &str, prec: usize) -> Result<i32> {
    let cat = load_category(category)?;
    let datum = load_datum(datum_path, &cat)?;
    let hom = dim_hom_aa(&datum, &cat);
    let simple = is_simple(&datum, &cat);
    let dim = orbifold_global_dimension(&datum, &cat);
    let rk = rank(&datum, &cat).map_err(|e| anyhow!("rank: {e}"))?;
    let out = json!({
        "dim_hom_AA": cyclo_json(&hom, prec),
        "simple": simple,
        "global_dimension": cyclo_json(&dim, prec),
        "rank": rk,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

struct PeelOutput {
    value: Value,
    all_factored: bool,
    accepted_unique: bool,
    sum_rule: Option<bool>,
}

/// Shared peel pipeline: Gram matrix, components, factorizations, and
/// (with a rank) the accepted combination with quantum dimensions.
fn peel_pipeline(
    datum: &OrbifoldDatum,
    cat: &FusionCategoryData,
    rank_bound: Option<u64>,
    prec: usize,
) -> Result<PeelOutput> {
    let sys = bimodule_system(datum, cat);
    let label_names = |l: &BimLabel| -> Vec<String> {
        vec![datum.labels()[l.0].clone(), cat.name(l.1).to_string(), datum.labels()[l.2].clone()]
    };
    let mut comp_values = Vec::new();
    let mut all_factored = true;
    let mut per_comp_facts: Vec<Vec<Vec<Vec<u64>>>> = Vec::new();
    for comp in &sys.components {
        let labels: Vec<BimLabel> = comp.iter().map(|&i| sys.labels[i]).collect();
        let x = x_submatrix(&sys.x, comp);
        let pin = unit_row(&labels, cat);
        let pins: Vec<Vec<u64>> = pin.clone().into_iter().collect();
        let facts = peel(&x, &pins, rank_bound.map(|r| r as usize))?;
        if facts.is_empty() {
            all_factored = false;
        }
        comp_values.push(json!({
            "member_indices": comp,
            "labels": labels.iter().map(label_names).collect::<Vec<_>>(),
            "x": x,
            "unit_row": pin,
            "factorizations": facts.iter().map(|f| json!({
                "row_count": f.len(),
                "rows": f,
            })).collect::<Vec<_>>(),
        }));
        per_comp_facts.push(facts);
    }
    let mut accepted = Value::Null;
    let mut accepted_unique = false;
    let mut sum_rule = None;
    if let Some(rk) = rank_bound {
        let counts: Vec<Vec<usize>> =
            per_comp_facts.iter().map(|fs| fs.iter().map(|f| f.len()).collect()).collect();
        let choices = select_by_rank(&counts, rk as usize);
        if choices.len() == 1 {
            accepted_unique = true;
            let choice = &choices[0];
            let mut simples = Vec::new();
            let mut sum_sq = Cyclo::zero();
            for (ci, &fi) in choice.iter().enumerate() {
                let comp = &sys.components[ci];
                let labels: Vec<BimLabel> = comp.iter().map(|&i| sys.labels[i]).collect();
                for row in &per_comp_facts[ci][fi] {
                    let grid = grid_from_row(row, &labels, datum.label_count(), cat);
                    let q = qdim_grid(&grid, datum, cat).map_err(|e| anyhow!("qdim: {e}"))?;
                    sum_sq = sum_sq + &q.value * &q.value;
                    let grid_names: Vec<Vec<String>> = grid
                        .iter()
                        .map(|row_a| row_a.iter().map(|cell| cell_string(cell, cat)).collect())
                        .collect();
                    simples.push(json!({
                        "component": ci,
                        "row": row,
                        "grid": grid_names,
                        "qdim": cyclo_json(&q.value, prec),
                        "skipped_labels": q.skipped.iter().map(|&a| datum.labels()[a].clone()).collect::<Vec<_>>(),
                    }));
                }
            }
            let dim = orbifold_global_dimension(datum, cat);
            let matches = sum_sq == dim;
            sum_rule = Some(matches);
            accepted = json!({
                "choice": choice,
                "simples": simples,
                "sum_qdim_sq": cyclo_json(&sum_sq, prec),
                "sum_matches_global_dimension": matches,
            });
        }
    }
    let value = json!({
        "labels": sys.labels.iter().map(|l| label_names(l)).collect::<Vec<_>>(),
        "components": comp_values,
        "rank": rank_bound,
        "accepted": accepted,
    });
    Ok(PeelOutput { value, all_factored, accepted_unique, sum_rule })
}

fn cmd_peel(datum_path: &PathBuf, category: &str, use_rank: bool, prec: usize) -> Result<i32> {
    let cat = load_category(category)?;
    let datum = load_datum(datum_path, &cat)?;
    let rank_bound = if use_rank {
        Some(rank(&datum, &cat).map_err(|e| anyhow!("rank: {e}"))?)
    } else {
        None
    };
    let out = peel_pipeline(&datum, &cat, rank_bound, prec)?;
    println!("{}", serde_json::to_string_pretty(&out.value)?);
    let ok = out.all_factored && (!use_rank || out.accepted_unique);
    Ok(if ok { 0 } else { 1 })
}

fn cmd_report(n: u64, epsilon: i8, prec: usize) -> Result<i32> {
    let epsilon = check_sign(epsilon)?;
    let r = build_fib(n, epsilon)?;
    let reports = r.datum.check_all(&r.cat, &Condition::ALL);
    let conditions_passed = reports.iter().all(|rep| rep.passed());
    let hom = dim_hom_aa(&r.datum, &r.cat);
    let simple = is_simple(&r.datum, &r.cat);
    let dim = orbifold_global_dimension(&r.datum, &r.cat);
    let anomaly = r.cat.anomaly()?;
    let rk = rank(&r.datum, &r.cat).map_err(|e| anyhow!("rank: {e}"))?;
    let peel_out = peel_pipeline(&r.datum, &r.cat, Some(rk), prec)?;
    let mut qdims: Vec<f64> = Vec::new();
    if let Some(simples) = peel_out.value["accepted"]["simples"].as_array() {
        for s in simples {
            let approx = s["qdim"]["approx"].as_str().unwrap_or("0");
            qdims.push(approx.parse::<f64>().unwrap_or(f64::NAN));
        }
    }
    qdims.sort_by(|a, b| a.partial_cmp(b).expect("real dimensions"));
    let out = json!({
        "n": n,
        "m": m_of_n(n),
        "epsilon": epsilon,
        "delta": r.delta,
        "nu": r.nu,
        "conditions": reports.iter().map(report_json).collect::<Vec<_>>(),
        "conditions_passed": conditions_passed,
        "dim_hom_AA": cyclo_json(&hom, prec),
        "simple": simple,
        "global_dimension": cyclo_json(&dim, prec),
        "global_dimension_approx": approx_str(&dim, prec),
        "anomaly": cyclo_json(&anomaly, prec),
        "rank": rk,
        "peel": peel_out.value,
        "qdim_multiset_approx": qdims.iter().map(|q| format!("{q:.2}")).collect::<Vec<_>>(),
        "sum_qdim_sq_equals_global_dimension": peel_out.sum_rule,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    let ok = conditions_passed
        && simple
        && peel_out.all_factored
        && peel_out.accepted_unique
        && peel_out.sum_rule == Some(true);
    Ok(if ok { 0 } else { 1 })
}
