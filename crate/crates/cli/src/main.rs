//! `qstrata`: command-line access to root systems, classification,
//! stratifications, Namikawa Weyl groups and resolution counts of quiver
//! varieties.

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use quiver_strata::arrangement::{
    check_conjectures, conjecture_grid, count_chambers_deletion_restriction, count_chambers_oracle,
    count_chambers_with_limit, resolutions_from, two_part_decompositions_with_limit, arrangement_from_parts,
    ConjectureStatus,
};
use quiver_strata::classification::enumerate_p2_fundamental_with_limit;
use quiver_strata::format::{read_quiver, QuiverFile};
use quiver_strata::namikawa::namikawa_group;
use quiver_strata::roots::classify_root;
use quiver_strata::sigma::{canonical_decomposition, in_sigma_with_limit, Decomposition};
use quiver_strata::stratification::{hasse_diagram, isotropic_decompositions, sym2_hasse, HasseDiagram};
use quiver_strata::tables::{check_isotropic_table, check_namikawa_table, golden_grid};
use quiver_strata::{build_family, AdeType, DimVector, Error, FamilyName, WeightedGraph};

const FAMILY_GRAMMAR: &str = "\
Family names:
  name   ::= 'I(' int ',' int ',' int ')' | 'I(D' int ',' int ')' [\"'\"]
           | 'I(E6,' int ')' | 'I(E7,' int ')' | 'I(' int ')'
           | 'Ia' | 'Ib' | 'Ic' | 'II(' ade ',' ade ')' | 'II(' ade ')'
           | 'II(' int ')' | 'IIa' | 'IIb' | 'III(D' int ',' int ')'
           | 'III(E7)' | 'III(E8)' | 'III(' int ',' ('6'|'7'|'8') ')'
           | 'IIIa' | 'IIIb' | 'X-I(' ade ',' ade ',' int ')' | 'X-III(2' ade ')'
  ade    ::= ('A'|'D'|'E') int

Quiver files are JSON documents
  {\"vertices\":n,\"edges\":[[i,j,mult],...],\"loops\":[...],\"dim\":[...]}
with 0-based vertices and i < j. A FILE argument of '-' reads standard input.

Exit codes: 0 success, 1 domain error, 2 budget exceeded.";

#[derive(Parser)]
#[command(name = "qstrata", version, about = "Quiver varieties: roots, leaves, Namikawa Weyl groups and resolutions", after_help = FAMILY_GRAMMAR)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Work limit passed to bounded searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate p = 2 dimension vectors in the fundamental set.
    Classify {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long, default_value_t = 6)]
        max_weight: i64,
        /// Keep only vectors in Σ.
        #[arg(long)]
        sigma_only: bool,
    },
    /// Print the quiver file of a named family.
    Family { name: String },
    /// p(a) = 1 - (a,a)/2.
    P { file: String },
    /// Vertex balances (a, e_i).
    Balance { file: String },
    /// Root classification of the dimension vector.
    IsRoot { file: String },
    /// Membership in Σ.
    InSigma { file: String },
    /// Canonical decomposition into elements of Σ.
    Canonical { file: String },
    /// Isotropic decompositions with their (δ, θ) types.
    Decompose { file: String },
    /// Hasse diagram of the symplectic leaves.
    Hasse { file: String },
    /// Hasse diagram of the symmetric square of a Kleinian singularity.
    Sym2Hasse { ade: String },
    /// Namikawa Weyl group.
    Namikawa { file: String },
    /// Secondary hyperplane arrangement.
    Arrangement {
        file: String,
        /// Emit normals as integer rows.
        #[arg(long)]
        dump: bool,
    },
    /// Number of projective symplectic resolutions.
    Resolutions {
        file: String,
        /// Also count with the sign-vector oracle.
        #[arg(long)]
        oracle: bool,
        /// Count chambers by deletion-restriction.
        #[arg(long)]
        deletion_restriction: bool,
        /// Refuse arrangements with more hyperplanes.
        #[arg(long)]
        max_hyperplanes: Option<usize>,
    },
    /// Compare computed invariants with the golden tables.
    CheckTables {
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
    /// Compare computed resolution counts with the conjectured formulas.
    CheckConjectures {
        #[arg(long, default_value_t = 7)]
        max_rank: u32,
    },
}

enum Failure {
    Domain(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &str) -> Result<(WeightedGraph, DimVector), Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Domain(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{path}: {e}")))?
    };
    Ok(read_quiver(text.trim())?)
}

fn emit_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serialisable output"));
}

fn decomposition_string(d: &Decomposition) -> String {
    d.parts().iter().map(|(n, b)| format!("{n}*{b}")).collect::<Vec<_>>().join(" + ")
}

fn hasse_out(h: &HasseDiagram, format: Format) {
    match format {
        Format::Json => emit_json(h),
        Format::Dot => print!("{}", h.to_dot()),
        Format::Text => print!("{}", h.to_text()),
    }
}

fn run(cli: &Cli) -> Outcome {
    let limit = cli.budget;
    let fmt = cli.format;
    match &cli.command {
        Command::Classify { max_rank, max_weight, sigma_only } => classify(*max_rank, *max_weight, *sigma_only, limit, fmt),
        Command::Family { name } => {
            let f: FamilyName = name.parse()?;
            let (g, a) = build_family(f)?;
            println!("{}", QuiverFile::from_graph(&g, &a).to_canonical_string());
            Ok(())
        }
        Command::P { file } => {
            let (g, a) = load(file)?;
            let p = g.p(&a)?;
            match fmt {
                Format::Json => emit_json(&json!({ "p": p })),
                _ => println!("{p}"),
            }
            Ok(())
        }
        Command::Balance { file } => {
            let (g, a) = load(file)?;
            let b = g.balances(&a)?;
            match fmt {
                Format::Json => emit_json(&json!({ "balances": b })),
                _ => println!("{}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
            }
            Ok(())
        }
        Command::IsRoot { file } => {
            let (g, a) = load(file)?;
            let class = classify_root(&g, &a);
            match fmt {
                Format::Json => emit_json(&json!({ "class": class })),
                _ => println!("{class:?}"),
            }
            if class.is_root() {
                Ok(())
            } else {
                Err(Failure::Domain(format!("{a} is not a root")))
            }
        }
        Command::InSigma { file } => {
            let (g, a) = load(file)?;
            let s = match limit {
                Some(l) => in_sigma_with_limit(&g, &a, l)?,
                None => quiver_strata::sigma::in_sigma(&g, &a)?,
            };
            match fmt {
                Format::Json => emit_json(&json!({ "in_sigma": s })),
                _ => println!("{s}"),
            }
            Ok(())
        }
        Command::Canonical { file } => {
            let (g, a) = load(file)?;
            let d = canonical_decomposition(&g, &a)?;
            match fmt {
                Format::Json => emit_json(&d),
                _ => println!("{}", decomposition_string(&d)),
            }
            Ok(())
        }
        Command::Decompose { file } => {
            let (g, a) = load(file)?;
            let decs = isotropic_decompositions(&g, &a)?;
            let rows: Vec<_> = decs
                .iter()
                .map(|d| {
                    json!({
                        "delta": d.delta.to_string(),
                        "theta": d.theta.to_string(),
                        "decomposition": d.representation_type(&g).to_string(),
                    })
                })
                .collect();
            match fmt {
                Format::Json => emit_json(&rows),
                _ => {
                    for d in &decs {
                        println!("{}\t{}\t{}", d.delta, d.theta, d.representation_type(&g));
                    }
                }
            }
            Ok(())
        }
        Command::Hasse { file } => {
            let (g, a) = load(file)?;
            hasse_out(&hasse_diagram(&g, &a)?, fmt);
            Ok(())
        }
        Command::Sym2Hasse { ade } => {
            let t: AdeType = ade.parse()?;
            hasse_out(&sym2_hasse(t)?, fmt);
            Ok(())
        }
        Command::Namikawa { file } => {
            let (g, a) = load(file)?;
            let w = namikawa_group(&g, &a)?;
            match fmt {
                Format::Json => emit_json(&w),
                _ => println!("{w}"),
            }
            Ok(())
        }
        Command::Arrangement { file, dump } => {
            let (g, a) = load(file)?;
            let betas = two_part_decompositions_with_limit(&g, &a, limit.unwrap_or(quiver_strata::roots::DEFAULT_ENUMERATION_LIMIT))?;
            let arr = arrangement_from_parts(&a, &betas)?;
            match (fmt, dump) {
                (Format::Json, _) => emit_json(&arr),
                (_, true) => {
                    for h in &arr.hyperplanes {
                        println!("{}", h.normal.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
                    }
                }
                _ => println!("ambient_dim={} hyperplanes={}", arr.ambient_dim, arr.len()),
            }
            Ok(())
        }
        Command::Resolutions { file, oracle, deletion_restriction, max_hyperplanes } => {
            let (g, a) = load(file)?;
            let betas = two_part_decompositions_with_limit(&g, &a, limit.unwrap_or(quiver_strata::roots::DEFAULT_ENUMERATION_LIMIT))?;
            let arr = arrangement_from_parts(&a, &betas)?;
            if let Some(k) = max_hyperplanes {
                if arr.len() > *k {
                    return Err(Failure::Budget(format!("{} hyperplanes exceed --max-hyperplanes {k}", arr.len())));
                }
            }
            let chambers = if *deletion_restriction {
                count_chambers_deletion_restriction(&arr)?
            } else {
                let flats = limit.map(|l| l as usize).unwrap_or(quiver_strata::arrangement::DEFAULT_FLAT_LIMIT);
                count_chambers_with_limit(&arr, flats)?
            };
            if *oracle {
                let o = count_chambers_oracle(&arr)?;
                if o != chambers {
                    return Err(Failure::Domain(format!("oracle counts {o} chambers, poset counts {chambers}")));
                }
            }
            let r = resolutions_from(&g, &a, &arr, chambers)?;
            match fmt {
                Format::Json => emit_json(&r),
                _ => println!("hyperplanes={} chambers={} |W|={} N={}", r.hyperplanes, r.chambers, r.weyl_order, r.n_resolutions),
            }
            Ok(())
        }
        Command::CheckTables { max } => check_tables(*max, fmt),
        Command::CheckConjectures { max_rank } => {
            let names = conjecture_grid(*max_rank);
            let flats = limit.map(|l| l as usize).unwrap_or(quiver_strata::arrangement::DEFAULT_FLAT_LIMIT);
            let rows = check_conjectures(&names, flats)?;
            match fmt {
                Format::Json => emit_json(&rows),
                _ => {
                    for r in &rows {
                        let computed = r.computed.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
                        let status = match &r.status {
                            ConjectureStatus::Match => "match".to_string(),
                            ConjectureStatus::Mismatch => "MISMATCH".to_string(),
                            ConjectureStatus::Skipped(why) => format!("skipped ({why})"),
                        };
                        println!("{:<12} {:<48} predicted={:<8} computed={:<8} {status}", r.family, r.rule, r.predicted, computed);
                    }
                }
            }
            if rows.iter().any(|r| r.status == ConjectureStatus::Mismatch) {
                return Err(Failure::Domain("conjecture mismatch".into()));
            }
            Ok(())
        }
    }
}

fn classify(max_rank: usize, max_weight: i64, sigma_only: bool, limit: Option<u64>, fmt: Format) -> Outcome {
    let limit = limit.unwrap_or(quiver_strata::classification::DEFAULT_SEARCH_LIMIT);
    let found = enumerate_p2_fundamental_with_limit(max_rank, max_weight, limit)?;
    let mut summary: std::collections::BTreeMap<String, (usize, usize)> = Default::default();
    for c in &found {
        let in_sigma = quiver_strata::sigma::in_sigma(&c.graph, &c.dim)?;
        let key = match c.family {
            Some(f) if f.is_excluded() => "excluded".to_string(),
            Some(f) => f.type_tag().to_string(),
            None => "unmatched".to_string(),
        };
        let entry = summary.entry(key).or_default();
        entry.0 += 1;
        entry.1 += usize::from(in_sigma);
        if sigma_only && !in_sigma {
            continue;
        }
        let doc = QuiverFile::from_graph(&c.graph, &c.dim);
        match fmt {
            Format::Json => emit_json(&json!({
                "family": c.family.map(|f| f.to_string()),
                "in_sigma": in_sigma,
                "quiver": doc,
            })),
            _ => println!("{}", doc.to_canonical_string()),
        }
    }
    eprintln!("{:<10} {:>6} {:>9}", "type", "count", "in sigma");
    for (k, (n, s)) in &summary {
        eprintln!("{k:<10} {n:>6} {s:>9}");
    }
    eprintln!("{:<10} {:>6}", "total", found.len());
    if summary.contains_key("unmatched") {
        return Err(Failure::Domain("unmatched dimension vectors found".into()));
    }
    Ok(())
}

fn check_tables(max: u32, fmt: Format) -> Outcome {
    let names = golden_grid(max);
    let iso = check_isotropic_table(&names)?;
    let nam = check_namikawa_table(&names)?;
    let mut failures = 0;
    let mut rows = Vec::new();
    for f in &names {
        let (g, a) = build_family(*f)?;
        let p2 = g.p(&a)? == 2 && g.balances(&a)?.iter().all(|&b| b <= 0);
        let sigma = quiver_strata::sigma::in_sigma(&g, &a)?;
        let name = f.to_string();
        let dt = iso.iter().find(|r| r.family == name).map(|r| r.passed());
        let nw = nam.iter().find(|r| r.family == name).map(|r| r.passed());
        let ok = p2 && sigma && dt != Some(false) && nw != Some(false);
        failures += usize::from(!ok);
        rows.push((name, p2, sigma, dt, nw));
    }
    let cell = |b: Option<bool>| match b {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "-",
    };
    match fmt {
        Format::Json => emit_json(
            &rows
                .iter()
                .map(|(n, p, s, d, w)| json!({ "family": n, "p2_balanced": p, "in_sigma": s, "delta_theta": d, "namikawa": w }))
                .collect::<Vec<_>>(),
        ),
        _ => {
            println!("{:<16} {:>6} {:>6} {:>6} {:>6}", "family", "p=2", "sigma", "(δ,θ)", "W");
            for (n, p, s, d, w) in &rows {
                println!("{n:<16} {:>6} {:>6} {:>6} {:>6}", cell(Some(*p)), cell(Some(*s)), cell(*d), cell(*w));
            }
            println!("{} families, {} failing", rows.len(), failures);
        }
    }
    if failures > 0 {
        return Err(Failure::Domain(format!("{failures} families deviate from the tables")));
    }
    Ok(())
}
