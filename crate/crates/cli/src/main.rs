use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopf_forge::format::{read_hopf_file, to_canonical_string};
use hopf_forge::report::{build_report, ReportOptions, CHECK_KEYS};
use hopf_forge::zoo::{self, ZooSpec};
use hopf_forge::{Error, HopfPresentation, IntegralPair};

#[derive(Parser)]
#[command(name = "hopf-forge", version, about = "Exact invariants of finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms, integrals and antipode of a structure-constants file.
    Verify { path: PathBuf },
    /// Compute the invariant report.
    Report {
        path: PathBuf,
        /// omega = zeta_N^(k*N/n) for the index n.
        #[arg(long = "omega", default_value_t = 1, allow_hyphen_values = true)]
        omega: i64,
        #[arg(long)]
        json: bool,
        /// Only keep checks whose key starts with one of these (comma separated).
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        /// Random endomorphisms for the trace-formula check.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit an example algebra.
    Zoo {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Write the dual Hopf algebra.
    Dual {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the tensor product of two algebras.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Group algebra of a product of cyclic groups or of a Cayley table.
    Group {
        #[arg(long, value_delimiter = ',', conflicts_with = "table")]
        cyclic: Vec<u32>,
        /// JSON file holding a Cayley table (array of rows, identity at 0).
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        order: Option<u32>,
    },
    /// Taft algebra T_n with omega = zeta_n^root_power.
    Taft {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        root_power: i64,
        #[arg(long)]
        order: Option<u32>,
    },
    Sweedler,
    Trivial,
    Tensor {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        order: Option<u32>,
    },
    Dual {
        #[arg(long)]
        a: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.needs_field_extension() {
        return 3;
    }
    match e {
        Error::Malformed(_)
        | Error::MalformedTensor(_)
        | Error::Json(_)
        | Error::Io(_)
        | Error::BadParameters(_)
        | Error::BadOmega { .. }
        | Error::NotAGroup(_)
        | Error::OrderMismatch { .. }
        | Error::BoundExceeded { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { path } => verify(&path),
        Command::Report { path, omega, json, check, samples, seed, out } => {
            let opts = ReportOptions { omega_power: omega, trace_samples: samples, seed };
            report(&path, &opts, json, &check, out.as_deref())
        }
        Command::Zoo { family, out } => build_family(family).and_then(|h| emit(&h, out.as_deref())),
        Command::Dual { path, out } => {
            read_hopf_file(&path).map_err(Failure::from).and_then(|h| emit(&h.dual(), out.as_deref()))
        }
        Command::Tensor { a, b, order, out } => (|| {
            let (a, b) = (read_hopf_file(&a)?, read_hopf_file(&b)?);
            Ok(zoo::tensor_lifted(&a, &b, order)?)
        })()
        .and_then(|h| emit(&h, out.as_deref())),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::from(Error::Io(e))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(h: &HopfPresentation, out: Option<&Path>) -> Result<u8, Failure> {
    write_or_print(&to_canonical_string(h), out)?;
    Ok(0)
}

fn build_family(family: Family) -> Result<HopfPresentation, Failure> {
    let h = match family {
        Family::Group { table: Some(path), order, .. } => {
            let text = std::fs::read_to_string(&path).map_err(Error::Io)?;
            let table = hopf_forge::format::parse_table(&text)?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            ZooSpec::Cayley { name: format!("k[{name}]"), table, order }.build()?
        }
        Family::Group { cyclic, table: None, order } => {
            if cyclic.is_empty() {
                return Err(Failure { code: 2, message: "group needs --cyclic or --table".into() });
            }
            ZooSpec::Cyclic { orders: cyclic, order }.build()?
        }
        Family::Taft { n, root_power, order } => ZooSpec::Taft { n, root_power, order }.build()?,
        Family::Sweedler => zoo::sweedler()?,
        Family::Trivial => zoo::trivial()?,
        Family::Tensor { a, b, order } => zoo::tensor_lifted(&read_hopf_file(&a)?, &read_hopf_file(&b)?, order)?,
        Family::Dual { a } => read_hopf_file(&a)?.dual(),
    };
    Ok(h)
}

fn verify(path: &Path) -> Result<u8, Failure> {
    let h = read_hopf_file(path)?;
    let mut rows: Vec<(String, Option<bool>, String)> = Vec::new();
    let axioms = h.check_axioms();
    for c in &axioms.checks {
        rows.push((c.name.clone(), Some(c.passed), c.detail.clone()));
    }
    if axioms.all_passed() {
        match IntegralPair::normalized(&h) {
            Ok(_) => rows.push(("integrals".into(), Some(true), String::new())),
            Err(e) => rows.push(("integrals".into(), Some(false), e.to_string())),
        }
        rows.push(antipode_cross_check(&h));
    } else {
        rows.push(("integrals".into(), None, "axioms failed".into()));
        rows.push(("antipode-cross-check".into(), None, "axioms failed".into()));
    }
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    println!("{} (dim {}, Q(zeta_{}))", h.name(), h.dim(), h.cyclotomic_order());
    for (name, passed, detail) in &rows {
        let status = match passed {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "skipped",
        };
        let line = format!("{name:width$}  {status}  {detail}");
        println!("{}", line.trim_end());
    }
    Ok(if rows.iter().any(|r| r.1 == Some(false)) { 1 } else { 0 })
}

fn antipode_cross_check(h: &HopfPresentation) -> (String, Option<bool>, String) {
    let name = "antipode-cross-check".to_string();
    let frobenius = match h.compute_antipode() {
        Ok(s) => s,
        Err(e) => return (name, Some(false), e.to_string()),
    };
    let linear = match h.antipode_by_linear_system() {
        Ok(s) => s,
        Err(e) => return (name, Some(false), e.to_string()),
    };
    if frobenius != linear {
        return (name, Some(false), "integral route and linear solve disagree".into());
    }
    match h.antipode() {
        Some(s) if *s != frobenius => (name, Some(false), "file antipode differs from the computed one".into()),
        Some(_) => (name, Some(true), "file, integral route and linear solve agree".into()),
        None => (name, Some(true), "integral route and linear solve agree".into()),
    }
}

fn report(
    path: &Path,
    opts: &ReportOptions,
    json: bool,
    filters: &[String],
    out: Option<&Path>,
) -> Result<u8, Failure> {
    for f in filters {
        if !CHECK_KEYS.iter().any(|k| k.starts_with(f.as_str())) {
            return Err(Failure { code: 2, message: format!("unknown check key '{f}'") });
        }
    }
    let h = read_hopf_file(path)?;
    let mut r = build_report(&h, opts)?;
    if !filters.is_empty() {
        r.retain_checks(filters);
    }
    let text = if json { r.to_json() } else { r.to_text() };
    write_or_print(&text, out)?;
    Ok(if r.any_failed() { 1 } else { 0 })
}
