//! Command-line front end for the `kpath` binary.
//!
//! Exit status: 0 on success, 1 when verification finds violations, 2 for
//! usage and input errors, 3 when an exact solver's size cap is exceeded.

use crate::bounds::{bounds_json, evaluate_bounds, pair_chain, parse_pair, render_table, table_chordal, GraphFlags};
use crate::construct::{cover_auto, Method, MethodParams, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::exact::{psi_exact_with_cap, PSI_CAP};
use crate::graph::{generate_family, parse_auto, write_graph, write_graph6, FamilySpec};
use crate::paths::is_cover;
use crate::verify::{
    conjecture_scan, cubic_girth_check, standard_cubic_corpus, tightness_scan, verify_all_jobs, ConjectureCorpus,
    CorpusSpec, FamilySample,
};
use crate::Graph;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "kpath", version, about = "k-path vertex covers: exact values, constructions and bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact ψ_k with an optimal cover.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, value_parser = parse_k)]
        k: usize,
        /// Largest order accepted by the exact solver.
        #[arg(long, default_value_t = PSI_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one constructive algorithm, or the best certified one with `auto`.
    Cover {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, value_parser = parse_k)]
        k: usize,
        #[arg(short, long, default_value = "auto")]
        method: String,
        /// Seed for the random-order cover.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Pair base for `pair_peel`, e.g. `4nm9` or `nm4:3`.
        #[arg(long)]
        base: Option<String>,
        /// Pair `a,b` the base must realise.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        x: Option<usize>,
        /// Include the construction trace in JSON output.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate every catalogued bound.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, value_parser = parse_k)]
        k: usize,
        /// Vouch that the graph is planar.
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Iterate the feasible-pair recursion.
    Pairs {
        #[arg(short, long, value_parser = parse_k, default_value_t = 3)]
        k: usize,
        /// Starting pair `a,b`.
        #[arg(long, default_value = "4/9,1/9")]
        base: String,
        #[arg(long, value_delimiter = ',', default_value = "5,6,7,8,9,10,11,12,13,14")]
        xs: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a named or random graph.
    Generate {
        #[arg(short, long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check bounds and algorithms against exact values on a corpus.
    Verify(VerifyArgs),
    /// Colour-class bound versus clique bound for chordal graphs.
    Table {
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6")]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        omega: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list or graph6 file.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Family such as `petersen` or `gnm(10,20)`.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 0, requires = "family")]
    pub graph_seed: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// All labelled graphs up to this order.
    #[arg(long, default_value_t = 0)]
    pub exhaustive: usize,
    /// Orders of random G(n, m) samples.
    #[arg(long, value_delimiter = ',')]
    pub random: Vec<usize>,
    #[arg(long, default_value_t = 500)]
    pub per_n: usize,
    /// `spec:count`, repeatable, e.g. `ktree(12,2):20`.
    #[arg(long = "family")]
    pub families: Vec<String>,
    /// Labelled graphs up to 6 vertices plus 500 random graphs per order 7 to 10.
    #[arg(long)]
    pub master: bool,
    #[arg(short, long, value_delimiter = ',', default_value = "3")]
    pub k: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Keep per-graph rows.
    #[arg(long)]
    pub detail: bool,
    /// List tight instances of one bound instead of a full sweep.
    #[arg(long)]
    pub tight: Option<String>,
    /// Also run the conjecture and cubic-girth scans.
    #[arg(long)]
    pub scans: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

fn parse_k(s: &str) -> std::result::Result<usize, String> {
    let k: usize = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    Ok(k)
}

fn load(input: &Input) -> Result<Graph> {
    match (&input.input, &input.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
            parse_auto(&text)
        }
        (None, Some(f)) => generate_family(&f.parse::<FamilySpec>()?, input.graph_seed),
        (None, None) => Err(Error::Precondition("no input graph".into())),
    }
}

fn json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn execute(cmd: Command) -> Result<(String, i32)> {
    let text = match cmd {
        Command::Solve { input, k, cap, format } => {
            let g = load(&input)?;
            let c = psi_exact_with_cap(&g, k, cap)?;
            match format {
                Format::Json => json(&c),
                _ => format!("psi={}\ncover={}\n", c.size(), join(&c.cover)),
            }
        }
        Command::Cover { input, k, method, seed, samples, base, pair, x, trace, format } => {
            let g = load(&input)?;
            let mut res = if method == "auto" {
                cover_auto(&g, k)?
            } else {
                Method::with_params(&method, &MethodParams { seed, samples, base, pair, x })?.run(&g, k)?
            };
            if !is_cover(&g, k, &res.cover)?.is_valid() {
                return Err(Error::Internal(format!("{} returned an invalid cover", res.algorithm)));
            }
            if !trace {
                res.trace.clear();
            }
            match format {
                Format::Json => json(&res),
                _ => format!(
                    "algorithm={}\nsize={}\nguarantee={} = {}\ncertified={}\ncover={}\n",
                    res.algorithm,
                    res.size(),
                    res.guarantee_name,
                    res.guarantee_value,
                    res.guarantee_certified,
                    join(&res.cover)
                ),
            }
        }
        Command::Bounds { input, k, planar, triangle_free, format } => {
            let g = load(&input)?;
            let records = evaluate_bounds(&g, k, GraphFlags { planar, triangle_free });
            match format {
                Format::Json => bounds_json(&records) + "\n",
                _ => {
                    let mut s = String::new();
                    for r in &records {
                        let kind = match r.kind {
                            crate::bounds::BoundKind::Upper => "upper",
                            crate::bounds::BoundKind::Lower => "lower",
                        };
                        let value = r.value.as_ref().map_or("-".to_string(), |v| v.to_string());
                        s += &format!("{} {kind} {value} {}\n", r.name, r.reason);
                    }
                    s
                }
            }
        }
        Command::Pairs { k, base, xs, format } => {
            let chain = pair_chain(&parse_pair(k, &base)?, &xs)?;
            match format {
                Format::Json => json(&chain[1..]),
                _ => chain[1..].iter().map(|p| format!("x={} {p}\n", p.provenance.last().map_or(0, |s| s.x))).collect(),
            }
        }
        Command::Generate { family, seed, format, output } => {
            let g = generate_family(&family.parse::<FamilySpec>()?, seed)?;
            let text = match format {
                GraphFormat::EdgeList => write_graph(&g),
                GraphFormat::Graph6 => write_graph6(&g) + "\n",
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
                    String::new()
                }
                None => text,
            }
        }
        Command::Verify(args) => return verify(args),
        Command::Table { k, omega, format } => {
            if k.iter().chain(&omega).any(|&v| v < 2) {
                return Err(Error::Precondition("k and ω must be at least 2".into()));
            }
            let rows = table_chordal(&k, &omega);
            match format {
                Format::Json => json(&rows),
                _ => render_table(&rows),
            }
        }
    };
    Ok((text, 0))
}

fn verify(args: VerifyArgs) -> Result<(String, i32)> {
    if args.k.iter().any(|&k| k < 2) {
        return Err(Error::InvalidK { k: 1, reason: "path order must be at least 2" });
    }
    let mut spec = if args.master { CorpusSpec::master() } else { CorpusSpec::exhaustive(args.exhaustive, &args.k) };
    if !args.master {
        spec.random_ns = args.random;
        spec.random_per_n = args.per_n;
    }
    spec.ks = args.k;
    spec.seed = args.seed;
    spec.detail = args.detail;
    for f in &args.families {
        let (family, count) = match f.rsplit_once(':') {
            Some((fam, c)) => (fam, c.parse().map_err(|_| Error::UnknownName(format!("count in `{f}`")))?),
            None => (f.as_str(), 1),
        };
        spec.families.push(FamilySample { family: family.to_string(), count, flags: GraphFlags::default() });
    }
    let jobs = args.jobs.unwrap_or_else(rayon::current_num_threads);
    if let Some(name) = &args.tight {
        let found = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(|| tightness_scan(&spec, name))?;
        let text = match args.format {
            Format::Json => json(&found),
            _ => found
                .iter()
                .map(|t| format!("{} k={} n={} m={} psi={} value={}\n", t.id, t.k, t.n, t.m, t.psi, t.value))
                .collect(),
        };
        return Ok((text, 0));
    }
    let report = verify_all_jobs(&spec, jobs)?;
    let mut failed = !report.passed();
    let mut text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => {
            let t = &report.totals;
            let mut s = format!(
                "graphs={} rows={} bound_checks={} algorithm_runs={} uncertified_misses={} violations={}\n",
                t.graphs,
                t.rows,
                t.bound_checks,
                t.algorithm_runs,
                t.uncertified_misses,
                report.violations.len()
            );
            for v in &report.violations {
                s += &format!("violation {} k={} {}: {}\n", v.id, v.k, v.check, v.detail);
            }
            s
        }
    };
    if args.scans {
        let conj = conjecture_scan(&ConjectureCorpus::standard()?)?;
        let cubic = cubic_girth_check(&standard_cubic_corpus()?, &[3, 4, 5])?;
        let cubic_fail: Vec<_> = cubic.iter().filter(|r| r.holds == Some(false)).collect();
        failed |= !conj.counterexamples.is_empty() || !cubic_fail.is_empty();
        text += &format!(
            "conjectures checked={} counterexamples={} exact={}\ncubic_girth checked={} failures={}\n",
            conj.checked,
            conj.counterexamples.len(),
            conj.exact.iter().map(|h| h.id.as_str()).collect::<Vec<_>>().join(","),
            cubic.iter().filter(|r| r.applicable).count(),
            cubic_fail.len()
        );
    }
    Ok((text, i32::from(failed)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("kpath").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["solve", "-k", "3"]).0, 2);
        assert_eq!(run_str(&["solve", "-k", "1", "--family", "path(3)"]).0, 2);
        assert_eq!(run_str(&["solve", "-k", "3", "--family", "path(30)"]).0, 3);
        assert_eq!(run_str(&["solve", "-k", "3", "--family", "path(6)", "--cap", "5"]).0, 3);
        assert_eq!(run_str(&["cover", "-k", "3", "--family", "cycle(4)", "--method", "nope"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn cover_output() {
        let (code, out, _) = run_str(&["cover", "-k", "3", "--family", "cycle(4)", "--method", "nm4"]);
        assert_eq!(code, 0);
        assert!(out.contains("size=2\n") && out.contains("certified=true"));
        let (_, out, _) = run_str(&[
            "cover",
            "-k",
            "3",
            "--family",
            "complete(8)",
            "-m",
            "pair_peel",
            "--x",
            "5",
            "--format",
            "json",
            "--trace",
        ]);
        assert!(out.contains("\"event\": \"peel\""));
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_str(&["verify", "--exhaustive", "3", "-k", "3,4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("violations=0"));
        let (_, out, _) = run_str(&["verify", "--family", "cycle(4):1", "--tight", "nm4"]);
        assert!(out.starts_with("cycle(4)@0 k=3"));
    }
}
