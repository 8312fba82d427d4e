mod source;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aalpha_core::enumeration::{connected_graphs, encode_graph6, trees};
use aalpha_core::extremal::{
    alpha_sweep, class_members, sweep_csv, verify_theorem, ClassCache, ClassKey, Scope, Status, TheoremId,
    VerifyParams,
};
use aalpha_core::families::FamilySpec;
use aalpha_core::graph::independence_number;
use aalpha_core::spectra::{bound_lower_star, bound_sandwich, spectral_radius, AlphaValue};
use aalpha_core::Graph;
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "aalpha", version, about = "A_alpha spectral radius toolkit")]
struct Cli {
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral radius, Perron vector and bounds of one graph.
    Spectrum {
        /// Family such as fst:3,3 or g12:2,1,1,2.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        graph6: Option<String>,
        /// Edge-list file: vertex count, then one `u v` pair per line.
        #[arg(long)]
        edges: Option<PathBuf>,
        /// Comma-separated α values; fractions like 7/9 are accepted.
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs one verification driver and writes its JSON report.
    Verify {
        /// One of max, small-n, main, classify, delta-gap, evec, quotient.
        id: String,
        /// Orders to cover (k values for quotient), comma-separated.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long)]
        alpha: Option<String>,
        /// graph6 file of connected graphs beyond the native cap.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        corpus_limit: Option<usize>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// λ_α over an α grid as CSV.
    Sweep {
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long, default_value = "0")]
        from: f64,
        #[arg(long, default_value = "0.9")]
        to: f64,
        #[arg(long, default_value = "0.1")]
        step: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Trees or connected graphs of one order as graph6 lines.
    Enumerate {
        #[arg(long, conflicts_with = "connected", required_unless_present = "connected")]
        trees: Option<usize>,
        #[arg(long)]
        connected: Option<usize>,
        /// Keep only graphs with this independence number.
        #[arg(long)]
        indep: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct RunConfig<'a> {
    command: &'a str,
    workers: u64,
    seed: u64,
    #[serde(flatten)]
    extra: Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers as usize)
        .build_global()
        .context("configuring the worker pool")?;
    match &cli.command {
        Command::Spectrum { family, graph6, edges, alpha, json, output } => {
            let src = source::resolve(family.as_deref(), graph6.as_deref(), edges.as_deref())?;
            let alphas = AlphaValue::parse_list(alpha)?;
            let text = spectrum(&cli, &src, &alphas, *json)?;
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { id, n, alpha, corpus, corpus_limit, instances, output } => {
            let id: TheoremId = id.parse()?;
            let mut params = VerifyParams { seed: cli.seed, ..VerifyParams::default() };
            params.orders = n.clone();
            params.alphas = alpha.as_deref().map(AlphaValue::parse_list).transpose()?;
            params.corpus = corpus.clone();
            if let Some(l) = corpus_limit {
                params.corpus_limit = *l;
            }
            if let Some(k) = instances {
                params.instances = *k;
            }
            let report = verify_theorem(id, &params, &ClassCache::new())?;
            let mut value = serde_json::to_value(&report)?;
            value["config"] = config(&cli, "verify", json!({ "theorem": id.as_str(), "params": params }))?;
            emit(output.as_deref(), &(serde_json::to_string_pretty(&value)? + "\n"))?;
            eprintln!("{}: {} ({} findings)", id, report.status.as_str(), report.findings.len());
            Ok(match report.status {
                Status::Pass => ExitCode::SUCCESS,
                Status::Findings | Status::Fail => ExitCode::from(2),
            })
        }
        Command::Sweep { family, from, to, step, output } => {
            let alphas = alpha_grid(*from, *to, *step)?;
            let graphs = family
                .iter()
                .map(|f| {
                    let spec: FamilySpec = f.parse()?;
                    Ok((spec.to_string(), spec.make()?))
                })
                .collect::<Result<Vec<_>>>()?;
            let rows = alpha_sweep(&graphs, &alphas)?;
            emit(output.as_deref(), &sweep_csv(&rows)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { trees: t, connected: c, indep, output } => {
            let graphs = enumerate(*t, *c, *indep)?;
            let mut text = String::new();
            for g in &graphs {
                text.push_str(&encode_graph6(g)?);
                text.push('\n');
            }
            emit(output.as_deref(), &text)?;
            eprintln!("{} graphs", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn config(cli: &Cli, command: &str, extra: Value) -> Result<Value> {
    Ok(serde_json::to_value(RunConfig { command, workers: cli.workers, seed: cli.seed, extra })?)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

/// `from, from + step, …` up to and including `to`.
fn alpha_grid(from: f64, to: f64, step: f64) -> Result<Vec<AlphaValue>> {
    if !(step > 0.0) || !step.is_finite() {
        bail!("step must be positive, got {step}");
    }
    if !(from <= to) {
        bail!("empty range {from}..{to}");
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    (0..count)
        .map(|k| {
            // round away the accumulated float noise so 0.1 + 2·0.05 prints as 0.2
            let v: f64 = format!("{:.12}", from + k as f64 * step).parse()?;
            Ok(AlphaValue::new(v)?)
        })
        .collect()
}

fn enumerate(t: Option<usize>, c: Option<usize>, indep: Option<usize>) -> Result<Vec<Graph>> {
    let (n, scope) = match (t, c) {
        (Some(n), None) => (n, Scope::TreesOnly),
        (None, Some(n)) => (n, Scope::ConnectedGraphs),
        _ => bail!("give exactly one of --trees, --connected"),
    };
    if let Some(i) = indep {
        return Ok(class_members(&ClassKey::new(n, i, scope)?)?);
    }
    Ok(match scope {
        Scope::TreesOnly => trees(n)?.collect(),
        _ => connected_graphs(n)?,
    })
}

fn spectrum(cli: &Cli, src: &source::Source, alphas: &[AlphaValue], as_json: bool) -> Result<String> {
    let g = &src.graph;
    let mut entries = Vec::new();
    for a in alphas {
        let r = spectral_radius(g, a)?;
        let (lower, upper) = bound_sandwich(g, a);
        entries.push(json!({
            "alpha": a,
            "lambda": r.lambda,
            "perron": r.perron,
            "residual": r.residual,
            "eigenvalues": r.eigenvalues,
            "bounds": {
                "star_lower": bound_lower_star(g.max_degree(), a),
                "average_degree_lower": lower,
                "edge_upper": upper,
            },
        }));
    }
    if as_json {
        let value = json!({
            "graph": src.name,
            "graph6": encode_graph6(g)?,
            "order": g.order(),
            "size": g.edge_count(),
            "independence_number": independence_number(g).size,
            "results": entries,
            "config": config(cli, "spectrum", json!({ "alphas": alphas }))?,
        });
        return Ok(serde_json::to_string_pretty(&value)? + "\n");
    }
    let mut out = format!(
        "graph {}  n = {}  m = {}  independence = {}  seed = {}\n",
        src.name,
        g.order(),
        g.edge_count(),
        independence_number(g).size,
        cli.seed
    );
    for e in &entries {
        let perron: Vec<String> =
            e["perron"].as_array().into_iter().flatten().map(|x| format!("{:.6}", x.as_f64().unwrap_or(f64::NAN))).collect();
        out.push_str(&format!(
            "alpha {}  lambda {:.12}  residual {:.2e}\n  bounds  star {:.6} <= lambda, {:.6} <= lambda <= {:.6}\n  perron  [{}]\n",
            e["alpha"].as_str().map(str::to_string).unwrap_or_else(|| e["alpha"].to_string()),
            e["lambda"].as_f64().unwrap_or(f64::NAN),
            e["residual"].as_f64().unwrap_or(f64::NAN),
            e["bounds"]["star_lower"].as_f64().unwrap_or(f64::NAN),
            e["bounds"]["average_degree_lower"].as_f64().unwrap_or(f64::NAN),
            e["bounds"]["edge_upper"].as_f64().unwrap_or(f64::NAN),
            perron.join(", "),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = alpha_grid(0.5, 0.95, 0.05).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g[3].value(), 0.65);
        assert_eq!(alpha_grid(0.0, 0.9, 0.3).unwrap().len(), 4);
        assert!(alpha_grid(0.0, 0.9, 0.0).is_err());
        assert!(alpha_grid(0.5, 0.4, 0.1).is_err());
        assert!(alpha_grid(0.5, 1.0, 0.25).is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
