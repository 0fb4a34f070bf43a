use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use perfcode::cayley::connection_set_from_transversal;
use perfcode::transversal::{TransversalSearch, DEFAULT_BUDGET};
use perfcode::{
    build_cayley, enumerate_subgroups, run_catalog, BuiltGroup, CatalogConfig, Decider, Error,
    GroupSpec, PropertyId, Subgroup, Witness,
};

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Decide which subgroups of a finite group are perfect codes.
///
/// Groups are named by strings such as `c12`, `a(2,4)`, `d6`,
/// `gd(2,4)`, `q16`, `dic(12)`, `dp(d3,c2)`, `sd(c7,3,2)` or
/// `table(path)`. Subgroups are given by generators: element ids or labels
/// (`r`, `b`, `x`, `y`, `e1`, ...), optionally with powers like `r^2`,
/// separated by commas or spaces. An empty list is the trivial subgroup.
#[derive(Parser)]
#[command(name = "perfcode", version)]
struct Cli {
    /// Node budget for each transversal search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Skip the transversal search that backs every "yes".
    #[arg(long, global = true)]
    no_confirm: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one subgroup; exits 0 for a perfect code, 1 otherwise.
    Decide {
        group: String,
        gens: String,
        /// Print the decision record as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Decide every subgroup of a group.
    Enumerate {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a catalog described by a TOML config and write a JSON-lines
    /// report; exits 1 when a property fails.
    Catalog {
        config: PathBuf,
        /// Report destination; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Comma-separated subset of P1..P10.
        #[arg(long, value_delimiter = ',')]
        properties: Option<Vec<String>>,
    },
    /// Print the edge list of a Cayley graph in which the subgroup is a
    /// perfect code.
    Graph { group: String, gens: String },
    /// Look for a transversal making the subgroup a total perfect code;
    /// exits 0 when one exists, 1 otherwise.
    Total { group: String, gens: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded(_) => EXIT_BUDGET,
                Error::Inconsistent(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn load(spec: &str) -> perfcode::Result<BuiltGroup> {
    spec.parse::<GroupSpec>()?.build()
}

fn load_pair(spec: &str, gens: &str) -> perfcode::Result<(BuiltGroup, Subgroup)> {
    let b = load(spec)?;
    let h = b.subgroup(gens)?;
    Ok((b, h))
}

fn run(cli: Cli) -> perfcode::Result<u8> {
    let decider = Decider::new().confirm(!cli.no_confirm).budget(cli.budget);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Decide { group, gens, json } => {
            let (b, h) = load_pair(&group, &gens)?;
            let g = &b.group;
            let d = decider.decide(g, &h)?;
            if json {
                let rec = d.record(g, &h);
                writeln!(out, "{}", serde_json::to_string_pretty(&rec).unwrap()).ok();
            } else {
                writeln!(out, "group:    {} (order {}, hash {})", b.spec, g.order(), g.hash()).ok();
                writeln!(out, "subgroup: {:?} (order {}, mask {})", h.mask(), h.order(), h.to_hex()).ok();
                writeln!(out, "verdict:  {}", d.verdict).ok();
                match &d.witness {
                    Some(Witness::Transversal(t)) => writeln!(out, "witness:  transversal {:?}", t.to_vec()),
                    Some(Witness::Element(x)) => writeln!(out, "witness:  element {x}"),
                    None => writeln!(out, "witness:  (not confirmed)"),
                }
                .ok();
                writeln!(out, "trace:").ok();
                for s in &d.trace {
                    writeln!(out, "  {s}").ok();
                }
            }
            Ok(if d.is_yes() { 0 } else { EXIT_NO })
        }
        Command::Enumerate { group, json } => {
            let b = load(&group)?;
            let g = &b.group;
            let lattice = enumerate_subgroups(g)?;
            if !json {
                writeln!(out, "order\tmask\tnormal\tverdict\telements").ok();
            }
            for h in lattice.iter() {
                let d = decider.decide(g, h)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string(&d.record(g, h)).unwrap()).ok();
                } else {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{:?}",
                        h.order(),
                        h.to_hex(),
                        if h.is_normal(g) { "normal" } else { "-" },
                        d.verdict,
                        h.mask()
                    )
                    .ok();
                }
            }
            Ok(0)
        }
        Command::Catalog {
            config,
            out: dest,
            max_order,
            jobs,
            properties,
        } => {
            let mut c = CatalogConfig::load(&config)?;
            if let Some(m) = max_order {
                c.max_order = m;
            }
            if let Some(j) = jobs {
                c.jobs = j;
            }
            if let Some(ps) = properties {
                c.properties = ps
                    .iter()
                    .map(|p| p.parse::<PropertyId>())
                    .collect::<perfcode::Result<_>>()?;
            }
            if cli.no_confirm {
                c.confirm_witnesses = false;
            }
            if cli.budget != DEFAULT_BUDGET {
                c.budget = cli.budget;
            }
            c.validate()?;
            let report = run_catalog(&c)?;
            let io_err = |path: PathBuf| move |source| Error::Io { path, source };
            match &dest {
                Some(path) => {
                    let f = File::create(path).map_err(io_err(path.clone()))?;
                    let mut w = BufWriter::new(f);
                    report.write_jsonl(&mut w).map_err(io_err(path.clone()))?;
                    w.flush().map_err(io_err(path.clone()))?;
                }
                None => report
                    .write_jsonl(&mut out)
                    .map_err(io_err(PathBuf::from("<stdout>")))?,
            }
            let s = &report.summary;
            eprintln!(
                "{} groups, {} subgroups: {} agree, {} disagree, {} over budget, {} errors ({} ms)",
                s.groups, s.rows, s.agreements, s.disagreements, s.budget_exceeded, s.errors, s.elapsed_ms
            );
            for p in &report.properties {
                eprintln!(
                    "{:<4} {}  {} checks  {}",
                    p.id.to_string(),
                    if p.passed { "pass" } else { "FAIL" },
                    p.checked,
                    p.description
                );
                if let Some(c) = &p.counterexample {
                    eprintln!("     counterexample: {} mask {}: {}", c.group, c.subgroup_mask_hex, c.detail);
                }
            }
            let clean = s.properties_failed == 0 && s.disagreements == 0 && s.errors == 0;
            Ok(if clean { 0 } else { EXIT_NO })
        }
        Command::Graph { group, gens } => {
            let (b, h) = load_pair(&group, &gens)?;
            let g = &b.group;
            let found = TransversalSearch::new(g, &h).budget(cli.budget).cayley()?;
            match found {
                Some(t) => {
                    let s = connection_set_from_transversal(&t)?;
                    let cay = build_cayley(g, s)?;
                    write!(out, "{}", cay.edge_list()).ok();
                    Ok(0)
                }
                None => {
                    eprintln!("not a perfect code: no Cayley graph exists");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Total { group, gens } => {
            let (b, h) = load_pair(&group, &gens)?;
            let found = TransversalSearch::new(&b.group, &h).budget(cli.budget).total()?;
            match found {
                Some(t) => {
                    writeln!(out, "total perfect code: connection set {:?}", t.to_vec()).ok();
                    Ok(0)
                }
                None => {
                    writeln!(out, "not a total perfect code").ok();
                    Ok(EXIT_NO)
                }
            }
        }
    }
}
