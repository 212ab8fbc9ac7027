//! Command-line front end: runs the verification suites and slice
//! decompositions and emits deterministic machine-readable reports.
//!
//! Exit codes: 0 when every verdict passes, 1 when any verdict fails,
//! 2 on invalid parameters or a slice-dimension guard violation.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

use shca_core::catalog;
use shca_core::fischer;
use shca_core::linalg::{gram, VectorBasis};
use shca_core::spinor::{slice_basis, slice_dim, SliceIndex, SpinorPolynomial};

mod render;

use render::Rendered;

#[derive(Parser)]
#[command(
    name = "shca",
    version,
    about = "Exact operator calculus and Fischer decompositions for symplectic Hermitian Clifford analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout; relative paths resolve
    /// against $SHCA_OUTPUT_DIR when it is set
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Refuse slices with more basis states than this
    #[arg(long, global = true, default_value_t = 5000)]
    max_slice_dim: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the core commutator relations and the Lie closure of all
    /// cataloged realisations
    VerifyAlgebra {
        #[arg(long)]
        n: usize,
    },
    /// Check that the Dirac pair commutes with the u(n) generators and the
    /// matching sp(2n) realisations
    VerifyInvariance {
        #[arg(long)]
        n: usize,
    },
    /// Check all 28 su(1,2) bracket pairs of the operator images
    VerifySu12 {
        #[arg(long)]
        n: usize,
    },
    /// Dimension formulas for a slice, with the summand-sum identity
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        r: u32,
    },
    /// Exact basis of the joint kernel of Ds and Dt on a slice
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        r: u32,
    },
    /// The model highest-weight vector of a slice and its verification
    Hwv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        r: u32,
    },
    /// Full decomposition of a harmonic slice into embedded monogenics
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        r: u32,
    },
    /// Fischer Gram matrix of a slice basis (diagonal, nondegenerate)
    PairGram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        r: u32,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let body = match cli.format {
        Format::Json => &rendered.json,
        Format::Csv => &rendered.csv,
        Format::Text => &rendered.text,
    };
    if let Err(e) = write_output(cli.output.as_deref(), body) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if rendered.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_output(path: Option<&std::path::Path>, body: &str) -> std::io::Result<()> {
    match path {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(p) => {
            let resolved = match std::env::var_os("SHCA_OUTPUT_DIR") {
                Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
                _ => p.to_path_buf(),
            };
            std::fs::write(resolved, body)
        }
    }
}

fn require_n(n: usize, least: usize, why: &str) -> Result<(), CliError> {
    if n < least {
        return Err(CliError::invalid(format!(
            "--n must be at least {least}: {why}"
        )));
    }
    Ok(())
}

fn guard_slice(s: SliceIndex, max: u64) -> Result<(), CliError> {
    let dim = slice_dim(s);
    if dim > max {
        return Err(CliError::invalid(format!(
            "slice {s} has dimension {dim}, above the guard {max} (raise --max-slice-dim to proceed)"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    match cli.command {
        Command::VerifyAlgebra { n } => {
            require_n(n, 1, "operators need at least one variable pair")?;
            let mut report = catalog::core_relations_report(n);
            let closure = catalog::closure_report(n);
            report.title = format!("operator algebra checks, n = {n}");
            report.checks.extend(closure.checks);
            Ok(render::check_report(&report))
        }
        Command::VerifyInvariance { n } => {
            require_n(n, 1, "operators need at least one variable pair")?;
            Ok(render::check_report(&catalog::invariance_report(n)))
        }
        Command::VerifySu12 { n } => {
            require_n(n, 1, "operators need at least one variable pair")?;
            Ok(render::check_report(&catalog::verify_su12_table(n)))
        }
        Command::Dims { n, a, b, r } => {
            require_n(n, 3, "the monogenic dimension formula is stated for n >= 3")?;
            Ok(render::dims_report(&dims(n, a, b, r)))
        }
        Command::Kernel { n, a, b, r } => {
            require_n(n, 1, "operators need at least one variable pair")?;
            let s = SliceIndex::new(n, a, b, r);
            guard_slice(s, cli.max_slice_dim)?;
            Ok(render::kernel_report(&kernel(s)))
        }
        Command::Hwv { n, a, b, r } => {
            require_n(n, 3, "the highest-weight model is stated for n >= 3")?;
            if b > r {
                return Err(CliError::invalid(format!(
                    "no highest-weight vector for b > r (b = {b}, r = {r})"
                )));
            }
            let report =
                fischer::verify_hwv(n, a, b, r).map_err(|e| CliError::invalid(e.to_string()))?;
            Ok(render::hwv_report(&report))
        }
        Command::Decompose { n, a, b, r } => {
            require_n(n, 3, "the decomposition is stated for n >= 3")?;
            let s = SliceIndex::new(n, a, b, r);
            guard_slice(s, cli.max_slice_dim)?;
            for sd in fischer::predicted_summands(n, a, b, r)
                .map_err(|e| CliError::invalid(e.to_string()))?
            {
                guard_slice(sd.source, cli.max_slice_dim)?;
            }
            let report = fischer::decompose(s).map_err(|e| CliError::invalid(e.to_string()))?;
            Ok(render::decomposition_report(&report))
        }
        Command::PairGram { n, a, b, r } => {
            require_n(n, 1, "operators need at least one variable pair")?;
            let s = SliceIndex::new(n, a, b, r);
            guard_slice(s, cli.max_slice_dim)?;
            Ok(render::gram_report(&pair_gram(s)))
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DimsReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub r: u32,
    pub dim_h: u64,
    pub dim_s: u64,
    /// Zero when b > r: the slice then carries no monogenics.
    pub dim_m: u64,
    pub m_defined: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_identity: Option<fischer::SumIdentityReport>,
}

fn dims(n: usize, a: u32, b: u32, r: u32) -> DimsReport {
    let dim_h = fischer::dim_harmonics(n, a, b).expect("n >= 3");
    let dim_s = fischer::dim_spinor(n, r);
    let m_defined = b <= r;
    let dim_m = if m_defined {
        fischer::dim_monogenics(n, a, b, r).expect("validated")
    } else {
        0
    };
    let sum_identity =
        m_defined.then(|| fischer::sum_dims_identity(n, a, b, r).expect("validated"));
    DimsReport {
        n,
        a,
        b,
        r,
        dim_h,
        dim_s,
        dim_m,
        m_defined,
        sum_identity,
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KernelReport {
    pub slice: SliceIndex,
    pub dim: u64,
    /// Formula value when it applies (n >= 3): the closed form for b <= r,
    /// zero for b > r.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    pub basis: Vec<SpinorPolynomial>,
}

fn kernel(s: SliceIndex) -> KernelReport {
    let basis = fischer::monogenic_basis(s);
    let dim = basis.dim() as u64;
    let expected_dim = if s.n >= 3 {
        Some(if s.b <= s.r {
            fischer::dim_monogenics(s.n, s.a, s.b, s.r).expect("validated")
        } else {
            0
        })
    } else {
        None
    };
    let matches_expected = expected_dim.map(|e| e == dim);
    KernelReport {
        slice: s,
        dim,
        expected_dim,
        matches_expected,
        basis: basis.polynomials(),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GramReport {
    pub slice: SliceIndex,
    pub dim: u64,
    pub diagonal: bool,
    pub nonzero_diagonal: bool,
    pub matrix: shca_core::linalg::ExactMatrix,
}

fn pair_gram(s: SliceIndex) -> GramReport {
    let states = slice_basis(s);
    let mut basis = VectorBasis::empty(s.n, states.clone());
    for k in 0..states.len() {
        let mut v = vec![shca_core::GaussianRational::zero(); states.len()];
        v[k] = shca_core::GaussianRational::one();
        basis.vectors.push(v);
    }
    let matrix = gram(&basis, &basis).expect("same n");
    let diagonal = matrix.entries().keys().all(|&(r, c)| r == c);
    let nonzero_diagonal = matrix.entries().len() == states.len();
    GramReport {
        slice: s,
        dim: states.len() as u64,
        diagonal,
        nonzero_diagonal,
        matrix,
    }
}
