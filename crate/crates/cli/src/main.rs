use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cdlab_core::{
    default_catalog, emit_report, io, named, run_harness, Analysis, Catalog, CatalogSpec,
    CdLattice, Error, Group, HarnessOptions, Limits, ReportFormat, TheoremId,
    DEFAULT_SUBGROUP_BUDGET, DEFAULT_VERIFY_MAX_ORDER, HARD_MAX_ORDER,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "cdlab", version, about = "Chermak-Delgado measures and lattices of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print mu(G), the CD-subgroups and the lattice extremes of one group.
    Analyze {
        /// A group file or a catalog descriptor such as `dihedral:4`.
        group: String,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_BUDGET)]
        budget: usize,
    },
    /// Run the theorem checks over a catalog.
    Verify {
        /// Comma-separated subset of t1,c2,c3,t4,t5,t5cor,t6,pconv.
        #[arg(long, value_parser = parse_theorems)]
        theorems: Option<TheoremList>,
        /// Largest group order to include (at most 512).
        #[arg(long, env = "CDLAB_MAX_ORDER", default_value_t = DEFAULT_VERIFY_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
        /// Catalog file, one descriptor per line; defaults to the built-in list.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_BUDGET)]
        budget: usize,
    },
    /// Write the CD lattice of one group as Graphviz DOT.
    Lattice {
        group: String,
        /// Output path, or `-` for stdout.
        #[arg(long)]
        dot: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_BUDGET)]
        budget: usize,
    },
    /// Catalog utilities.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in catalog (or a catalog file) with group orders.
    List {
        #[arg(long, env = "CDLAB_MAX_ORDER", default_value_t = DEFAULT_VERIFY_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Clone)]
struct TheoremList(Vec<TheoremId>);

fn parse_theorems(s: &str) -> Result<TheoremList, String> {
    TheoremId::parse_list(s).map(TheoremList).map_err(|e| e.to_string())
}

/// Writes to stdout; a closed pipe (`cdlab ... | head`) is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Runtime(format!("writing output: {e}")))
        }
        _ => Ok(()),
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::SpecSyntax { .. }
            | Error::UnknownFamily(_)
            | Error::BadParameter { .. }
            | Error::DuplicateEntry(_)
            | Error::Io { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn load(arg: &str) -> Result<Group, Error> {
    let limits = Limits::default();
    let path = Path::new(arg);
    if path.is_file() {
        io::load_group(path, limits)
    } else {
        named(&CatalogSpec::parse(arg)?, limits)
    }
}

fn check_cap(max_order: usize) -> Result<(), Failure> {
    if max_order == 0 || max_order > HARD_MAX_ORDER {
        Err(Failure::Usage(format!(
            "--max-order must be between 1 and {HARD_MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

fn load_catalog(path: Option<&Path>, max_order: usize) -> Result<Catalog, Failure> {
    Ok(match path {
        Some(p) => Catalog::load(p)?,
        None => default_catalog(max_order),
    })
}

fn analyze(arg: &str, budget: usize) -> Result<u8, Failure> {
    let group = load(arg)?;
    let analysis = Analysis::new(&group, budget)?;
    let lattice = CdLattice::build(&analysis)?;
    let center = analysis.center();
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", group.display_label());
    let _ = writeln!(out, "order: {}", group.order());
    let _ = writeln!(out, "center order: {}", center.order());
    let _ = writeln!(out, "subgroups: {}", analysis.len());
    let _ = writeln!(out, "mu: {}", lattice.mu);
    let _ = writeln!(out, "cd-subgroups: {}", lattice.len());
    for (i, h) in lattice.members.iter().enumerate() {
        let mut tags = Vec::new();
        if i == lattice.top {
            tags.push("top");
        }
        if i == lattice.bottom {
            tags.push("bottom");
        }
        let tags = if tags.is_empty() {
            String::new()
        } else {
            format!(" [{}]", tags.join(","))
        };
        let _ = writeln!(
            out,
            "  order={} index={} centralizer=#{}{} {:?}",
            h.order(),
            group.order() / h.order(),
            lattice.duality[i],
            tags,
            h.elements()
        );
    }
    emit(&out)?;
    Ok(0)
}

fn run() -> Result<u8, Failure> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { group, budget } => analyze(&group, budget),
        Command::Verify {
            theorems,
            max_order,
            jobs,
            format,
            catalog,
            budget,
        } => {
            check_cap(max_order)?;
            let catalog = load_catalog(catalog.as_deref(), max_order)?;
            let options = HarnessOptions {
                theorems: theorems.map_or_else(|| TheoremId::ALL.to_vec(), |t| t.0),
                jobs,
                limits: Limits::with_max_order(max_order),
                subgroup_budget: budget,
            };
            let run = run_harness(&catalog, &options);
            emit(&emit_report(&run, format))?;
            eprintln!(
                "{} groups, {} reports in {:.2?}",
                catalog.len(),
                run.reports.len(),
                run.wall_time
            );
            Ok(if run.any_failed() { EXIT_FAIL } else { 0 })
        }
        Command::Lattice { group, dot, budget } => {
            let g = load(&group)?;
            let text = cdlab_core::emit_lattice_dot(&g, budget)?;
            if dot.as_os_str() == "-" {
                emit(&text)?;
            } else {
                std::fs::write(&dot, text)
                    .map_err(|e| Failure::Runtime(format!("writing {}: {e}", dot.display())))?;
            }
            Ok(0)
        }
        Command::Catalog {
            action: CatalogAction::List { max_order, catalog },
        } => {
            check_cap(max_order)?;
            let catalog = load_catalog(catalog.as_deref(), max_order)?;
            let mut out = String::new();
            for spec in catalog.specs() {
                let order = spec.expected_order().map_or("?".into(), |n| n.to_string());
                let _ = writeln!(out, "{spec}\t{order}");
            }
            emit(&out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
