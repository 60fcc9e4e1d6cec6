mod input;

use std::fmt::Write as _;
use std::io::{ErrorKind, Write as _};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qtriangle::cycle::to_cycle_data;
use qtriangle::double::check_double_cycle_data;
use qtriangle::qt::plus_minus_homomorphisms;
use qtriangle::*;
use serde_json::{json, Value};

use input::{labels, resolve_group, FactorizationArgs, PairArgs};

#[derive(Debug, Parser)]
#[command(name = "qtriangle", version, about = "Quasi-triangular structures on factorizable group Hopf algebras")]
struct Cli {
    /// Worker threads for classification and oracle loops.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect catalog groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// List homomorphisms G+ -> G- in enumeration order.
    Homs {
        #[command(flatten)]
        factorization: FactorizationArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List all exact factorizations G = G+ G-.
    Factorize {
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify the quasi-triangular structures of a factorization.
    Classify {
        #[command(flatten)]
        factorization: FactorizationArgs,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        /// Report only triangular structures.
        #[arg(long)]
        triangular_only: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Carry a structure to its normal form by twisting.
    Normalize {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the Drinfeld double of a factorization.
    Double {
        #[command(flatten)]
        factorization: FactorizationArgs,
        /// Classify the double as well.
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Export the set-theoretical Yang-Baxter solution of a structure.
    YbeExport {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
    },
    /// Check the Hopf axioms for one factorization, or for all of a group.
    VerifyHopf {
        group: String,
        #[arg(long, value_delimiter = ',', requires = "minus")]
        plus: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "plus")]
        minus: Option<Vec<usize>>,
    },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// List catalog groups up to an order.
    List {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Show the element labeling and Cayley table of a group.
    Show {
        group: String,
        /// Emit exactly the loadable group file format.
        #[arg(long)]
        group_file: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn print_json(out: &mut String, value: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn hom_json(index: usize, h: &Homomorphism) -> Value {
    json!({ "index": index, "domain": h.domain, "image": h.image })
}

fn factorization_json(uf: &UniqueFactorization) -> Value {
    json!({
        "group": uf.group().name(),
        "order": uf.order(),
        "plus": uf.plus().elements(),
        "minus": uf.minus().elements(),
    })
}

fn emit_report(out: &mut String, report: &ClassifyReport, format: Format) -> Result<()> {
    match format {
        Format::Json => print_json(out, report)?,
        Format::Csv => write!(out, "{}", report.to_csv())?,
        Format::Text => write!(out, "{}", report.to_text())?,
    }
    Ok(())
}

fn group_command(cmd: GroupCommand, out: &mut String) -> Result<()> {
    match cmd {
        GroupCommand::List { max_order, format } => {
            let rows: Vec<(String, usize)> = standard_catalog(max_order)
                .into_iter()
                .map(|name| {
                    let order = catalog_group(&name).map(|g| g.order());
                    order.map(|o| (name, o))
                })
                .collect::<Result<_, _>>()?;
            match format {
                Format::Json => print_json(out, &rows.iter().map(|(n, o)| json!({"name": n, "order": o})).collect::<Vec<_>>())?,
                Format::Csv => {
                    writeln!(out, "name,order")?;
                    for (n, o) in &rows {
                        writeln!(out, "{n},{o}")?;
                    }
                }
                Format::Text => {
                    for (n, o) in &rows {
                        writeln!(out, "{n:<14} {o}")?;
                    }
                }
            }
        }
        GroupCommand::Show { group, group_file, format } => {
            let g = resolve_group(&group)?;
            if group_file {
                return print_json(out, &g.to_file());
            }
            let labels = labels(&group, &g);
            match format {
                Format::Json => print_json(out, &json!({
                    "name": g.name(),
                    "order": g.order(),
                    "identity": g.identity(),
                    "abelian": g.is_abelian(),
                    "labels": labels,
                    "generators": g.generators(),
                    "table": g.rows(),
                }))?,
                Format::Csv => {
                    writeln!(out, "index,label,order,inverse")?;
                    for i in g.elements() {
                        writeln!(out, "{i},\"{}\",{},{}", labels[i], g.element_order(i), g.inv(i))?;
                    }
                }
                Format::Text => {
                    writeln!(out, "{} (order {}, {})", g.name(), g.order(), if g.is_abelian() { "abelian" } else { "non-abelian" })?;
                    for i in g.elements() {
                        writeln!(out, "{i:>4}  {:<16} order {}", labels[i], g.element_order(i))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut String) -> Result<()> {
    match cli.command {
        Command::Group(cmd) => group_command(cmd, out)?,
        Command::Homs { factorization, format } => {
            let uf = factorization.resolve()?;
            let homs = plus_minus_homomorphisms(&uf);
            match format {
                Format::Json => print_json(out, &homs.iter().enumerate().map(|(i, h)| hom_json(i, h)).collect::<Vec<_>>())?,
                Format::Csv => {
                    writeln!(out, "index,domain,image")?;
                    for (i, h) in homs.iter().enumerate() {
                        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                        writeln!(out, "{i},{},{}", join(&h.domain), join(&h.image))?;
                    }
                }
                Format::Text => {
                    let names = labels(&factorization.group, uf.group());
                    for (i, h) in homs.iter().enumerate() {
                        let maps: Vec<String> =
                            h.domain.iter().zip(&h.image).map(|(&u, &x)| format!("{} -> {}", names[u], names[x])).collect();
                        writeln!(out, "#{i}: {}", maps.join(", "))?;
                    }
                }
            }
        }
        Command::Factorize { group, format } => {
            let g = resolve_group(&group)?;
            let ufs = find_factorizations(&g)?;
            match format {
                Format::Json => print_json(out, 
                    &ufs.iter()
                        .enumerate()
                        .map(|(i, f)| json!({"index": i, "plus": f.plus().elements(), "minus": f.minus().elements()}))
                        .collect::<Vec<_>>(),
                )?,
                Format::Csv => {
                    writeln!(out, "index,plus,minus")?;
                    for (i, f) in ufs.iter().enumerate() {
                        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                        writeln!(out, "{i},{},{}", join(f.plus().elements()), join(f.minus().elements()))?;
                    }
                }
                Format::Text => {
                    writeln!(out, "{} factorization(s) of {}", ufs.len(), g.name())?;
                    for (i, f) in ufs.iter().enumerate() {
                        writeln!(out, "#{i}: G+ = {:?}, G- = {:?}", f.plus().elements(), f.minus().elements())?;
                    }
                }
            }
        }
        Command::Classify { factorization, oracle, triangular_only, format } => {
            let uf = factorization.resolve()?;
            let report = classify_report(&uf, ReportOptions { run_oracle: oracle, triangular_only })?;
            emit_report(out, &report, format)?;
            if report.oracle_agreement == Some(false) {
                bail!("oracle disagrees with the classification");
            }
        }
        Command::Normalize { pair, format } => {
            let (uf, xi, eta) = pair.resolve()?;
            let nf = normalize_qt(&uf, &xi, &eta)?;
            let value = json!({
                "source": factorization_json(&uf),
                "target": factorization_json(&nf.uf),
                "xi": hom_json(nf.xi_index, &nf.xi),
                "eta": hom_json(nf.eta_index, &nf.eta),
                "r": nf.r.to_records(),
            });
            match format {
                Format::Json => print_json(out, &value)?,
                Format::Csv => {
                    writeln!(out, "u,x,num,den")?;
                    for rec in nf.r.to_records() {
                        writeln!(out, "{},{},{},{}", rec.tuple[0], rec.tuple[1], rec.num, rec.den)?;
                    }
                }
                Format::Text => {
                    writeln!(out, "normal form on G+' = {:?}, G- = {:?}", nf.uf.plus().elements(), nf.uf.minus().elements())?;
                    writeln!(out, "xi' = #{} (trivial), eta' = #{}: {:?} -> {:?}", nf.xi_index, nf.eta_index, nf.eta.domain, nf.eta.image)?;
                    writeln!(out, "R' has {} term(s)", nf.r.len())?;
                }
            }
        }
        Command::Double { factorization, classify, format } => {
            let base = factorization.resolve()?;
            let double = build_double(&base)?;
            let (xi, eta) = standard_double_qt(&double)?;
            let homs = plus_minus_homomorphisms(&double);
            let index = |h: &Homomorphism| homs.iter().position(|k| k == h).context("standard pair not enumerated");
            let (xi_index, eta_index) = (index(&xi)?, index(&eta)?);
            let cycle = check_double_cycle_data(&base, &double)?;
            if !cycle.all() {
                bail!("cycle data of the standard pair does not match: {cycle:?}");
            }
            let zeta = to_cycle_data(&double, &xi, &eta)?.zeta;
            if classify {
                let report = classify_report(&double, ReportOptions::default())?;
                if !report.structures.iter().any(|s| (s.xi_index, s.eta_index) == (xi_index, eta_index)) {
                    bail!("classification of the double misses the standard pair");
                }
                if format == Format::Json {
                    print_json(out, &json!({
                        "standard_pair": {"xi_index": xi_index, "eta_index": eta_index},
                        "report": report,
                    }))?;
                } else {
                    emit_report(out, &report, format)?;
                    if format == Format::Text {
                        writeln!(out, "standard pair: xi #{xi_index} eta #{eta_index}")?;
                    }
                }
            } else {
                match format {
                    Format::Json | Format::Csv => print_json(out, &json!({
                        "double": factorization_json(&double),
                        "standard_pair": {"xi_index": xi_index, "eta_index": eta_index},
                        "zeta": zeta,
                    }))?,
                    Format::Text => {
                        writeln!(out, "{} (order {})", double.group().name(), double.order())?;
                        writeln!(out, "G+ = {:?}", double.plus().elements())?;
                        writeln!(out, "G- = {:?}", double.minus().elements())?;
                        writeln!(out, "standard pair: xi #{xi_index} eta #{eta_index}")?;
                    }
                }
            }
        }
        Command::YbeExport { pair, format } => {
            let (uf, xi, eta) = pair.resolve()?;
            let sol = set_solution(&uf, &xi, &eta)?;
            match format {
                ExportFormat::Json => writeln!(out, "{}", serde_json::to_string(&sol.to_json())?)?,
                ExportFormat::Csv => write!(out, "{}", sol.to_csv())?,
            }
        }
        Command::VerifyHopf { group, plus, minus } => {
            let g = resolve_group(&group)?;
            let ufs = match (plus, minus) {
                (Some(plus), Some(minus)) => {
                    let args = FactorizationArgs { group, plus, minus, generators: false };
                    vec![args.resolve()?]
                }
                _ => find_factorizations(&g)?,
            };
            let mut failed = Vec::new();
            let mut rows = Vec::new();
            for uf in &ufs {
                let report = build_hopf(uf).verify_hopf_axioms();
                let failures: Vec<Value> =
                    report.failures().iter().map(|(name, w)| json!({"axiom": name, "witness": w})).collect();
                if !failures.is_empty() {
                    failed.push(format!("{:?}/{:?}: {}", uf.plus().elements(), uf.minus().elements(), failures[0]));
                }
                rows.push(json!({"plus": uf.plus().elements(), "minus": uf.minus().elements(), "failures": failures}));
            }
            print_json(out, &json!({"group": g.name(), "checked": ufs.len(), "results": rows}))?;
            if !failed.is_empty() {
                bail!("Hopf axioms fail for {}", failed.join("; "));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let outcome = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .context("building thread pool")
            .and_then(|pool| pool.install(|| run(cli, &mut out))),
        None => run(cli, &mut out),
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(1);
        }
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
