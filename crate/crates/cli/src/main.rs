use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use algint::{cyclotomic, UniPoly};
use clap::{Args, Parser, Subcommand};

mod dispatch;
mod explain;
mod failure;
mod instance;

use dispatch::Overrides;
use failure::Failure;
use instance::ProblemInstance;

/// Directory holding `cyclotomic.json`, a map from index to coefficients.
const CACHE_ENV: &str = "ALGINT_CYCLOTOMIC_CACHE";

#[derive(Parser)]
#[command(name = "algint", version, about = "Certify integrality of algebraic numbers from finitely many observations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Problem instance (JSON).
    instance: PathBuf,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the scan window or trace bound.
    #[arg(long)]
    window: Option<u64>,
    /// Override the Fatou search limit.
    #[arg(long)]
    nmax: Option<u64>,
    /// Emit canonical JSON (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a readable summary.
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum CertifyKind {
    /// Trace window certificate.
    Trace(Common),
    /// Two-term power sum certificate.
    K2(Common),
}

#[derive(Subcommand)]
enum ScanKind {
    /// Power-sum scan with class analysis.
    Powersum(Common),
}

#[derive(Subcommand)]
enum Command {
    /// Validate the field and profile the listed elements.
    CheckField(Common),
    #[command(subcommand)]
    Certify(CertifyKind),
    #[command(subcommand)]
    Scan(ScanKind),
    /// Root-of-unity classes of the roots.
    Classes(Common),
    /// Vanishing traces of proper subsums.
    Subsum(Common),
    /// Group-ring values along powers.
    Groupring(Common),
    /// Finite search for a target trace value.
    Dio(Common),
    /// Fatou certificate or witness.
    Fatou(Common),
    /// Combination of powers of rational functions.
    Ratfunc(Common),
    /// Run any instance, dispatching on its kind.
    Run(Common),
    /// Describe a certificate in plain text.
    Explain {
        certificate: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solve(c: &Common, expected: Option<&str>) -> Result<i32, Failure> {
    let inst = ProblemInstance::parse(&read(&c.instance)?)?;
    if let Some(kind) = expected {
        if inst.body.kind() != kind {
            return Err(Failure::schema(format!("expected an instance of kind \"{kind}\", found \"{}\"", inst.body.kind())));
        }
    }
    let cert = dispatch::run(&inst, Overrides { window: c.window, nmax: c.nmax })?;
    let text = if c.text {
        explain::explain(&serde_json::to_value(&cert).expect("plain data"))?
    } else {
        format!("{}\n", cert.to_canonical_json())
    };
    emit(&text, c.out.as_deref())?;
    Ok(dispatch::exit_code(&cert))
}

fn execute(cmd: &Command) -> Result<i32, Failure> {
    match cmd {
        Command::CheckField(c) => solve(c, Some("field-check")),
        Command::Certify(CertifyKind::Trace(c)) => solve(c, Some("trace-window")),
        Command::Certify(CertifyKind::K2(c)) => solve(c, Some("k2")),
        Command::Scan(ScanKind::Powersum(c)) => solve(c, Some("powersum")),
        Command::Classes(c) => solve(c, Some("classes")),
        Command::Subsum(c) => solve(c, Some("subsum")),
        Command::Groupring(c) => solve(c, Some("groupring")),
        Command::Dio(c) => solve(c, Some("dio")),
        Command::Fatou(c) => solve(c, Some("fatou")),
        Command::Ratfunc(c) => solve(c, Some("ratfunc")),
        Command::Run(c) => solve(c, None),
        Command::Explain { certificate } => {
            let v: serde_json::Value =
                serde_json::from_str(&read(certificate)?).map_err(|e| Failure::parse(e.to_string()))?;
            emit(&explain::explain(&v)?, None)?;
            Ok(0)
        }
    }
}

fn cache_file() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join("cyclotomic.json"))
}

fn load_cache(path: &Path) {
    let Ok(text) = fs::read_to_string(path) else { return };
    match serde_json::from_str::<BTreeMap<u64, UniPoly>>(&text) {
        Ok(map) => {
            for (n, p) in map {
                if plausible_cyclotomic(n, &p) {
                    cyclotomic::preload(n, p);
                }
            }
        }
        Err(e) => eprintln!("warning: ignoring cyclotomic cache {}: {e}", path.display()),
    }
}

/// Cheap shape check on cached entries: monic of degree `phi(n)` with
/// palindromic coefficients for `n > 1`.
fn plausible_cyclotomic(n: u64, p: &UniPoly) -> bool {
    if n == 0 || !p.is_monic() || p.deg() as u64 != cyclotomic::euler_phi(n) {
        return false;
    }
    let c = p.coeffs();
    n == 1 || c.iter().eq(c.iter().rev())
}

fn save_cache(path: &Path) {
    let map: BTreeMap<u64, UniPoly> = cyclotomic::cached_entries().into_iter().collect();
    if let Some(dir) = path.parent() {
        let _ = fs::create_dir_all(dir);
    }
    if let Err(e) = fs::write(path, serde_json::to_string(&map).expect("plain data")) {
        eprintln!("warning: could not write cyclotomic cache {}: {e}", path.display());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache_file();
    if let Some(p) = &cache {
        load_cache(p);
    }
    let code = match execute(&cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            1
        }
    };
    if let Some(p) = &cache {
        save_cache(p);
    }
    ExitCode::from(code as u8)
}
