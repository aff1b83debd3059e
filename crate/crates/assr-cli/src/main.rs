//! `assr` — staircase and sign-regularity analysis of matrix files.
//!
//! Exit codes: 0 success, 1 domain failure (not staircase / not ASSR /
//! rank deficient), 2 input or usage error, 3 minor budget exceeded,
//! 4 numerical rank deficiency in the QR factorization.

mod render;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use assr::classify::{classification_report, AssrMode};
use assr::error::Error;
use assr::io::{format_matrix, parse_matrix};
use assr::minors::{enumerate_minors, MinorQuery, DEFAULT_BUDGET};
use assr::qr::{
    check_boundary_transfer, mgs_qr, orthonormality_residual, reconstruction_residual,
    verify_r_tp,
};
use assr::staircase::{staircase_type, zero_pattern, StaircaseType};
use assr::testgen::{fixture, generate, GenKind, GenSpec};
use assr::RationalMatrix;

#[derive(Parser)]
#[command(name = "assr", version, about = "Staircase / sign-regularity matrix analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArg {
    /// Cap on the number of minors a single scan may evaluate
    /// (overrides the ASSR_BUDGET environment variable).
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn resolve(&self) -> Result<u64, Error> {
        if let Some(v) = self.budget {
            return Ok(v);
        }
        match std::env::var("ASSR_BUDGET") {
            Ok(text) => text.parse().map_err(|_| {
                Error::InvalidArgument(format!("ASSR_BUDGET `{text}` is not a number"))
            }),
            Err(_) => Ok(DEFAULT_BUDGET),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the staircase type and zero-pattern index sets.
    Pattern {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify the matrix as SR / TP / ASSR with its signature.
    Classify {
        file: String,
        /// Exhaustive minor enumeration instead of the reduced
        /// consecutive-minor scan.
        #[arg(long, conflicts_with = "reduced")]
        full: bool,
        /// Reduced consecutive-minor scan (the default).
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Modified Gram-Schmidt QR factorization with optional structure checks.
    Qr {
        file: String,
        /// Verification tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Check that R is totally positive.
        #[arg(long)]
        check_tp: bool,
        /// Check the transfer of column boundary minors to Q.
        #[arg(long)]
        check_boundary: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Stream minors of one order with nontriviality and boundary flags.
    Minors {
        file: String,
        #[arg(long)]
        order: usize,
        /// Restrict both index sequences to consecutive runs.
        #[arg(long)]
        consecutive: bool,
        /// Keep only nontrivial minors.
        #[arg(long)]
        nontrivial_only: bool,
        /// Keep only column/row boundary minors.
        #[arg(long)]
        boundary_only: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Generate a fixture or a seeded random matrix in the file format.
    Gen {
        /// One of: fixture, tp, staircase.
        #[arg(long)]
        kind: String,
        /// Fixture name (for --kind fixture).
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<String>,
    },
    /// Residual of the Cauchy-Binet identity for one minor of A = QR.
    CauchyBinet {
        file: String,
        /// Comma-separated row indices.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        /// Comma-separated column indices.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::InvalidArgument(_) | Error::UnknownFixture(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::NumericalRankDeficient { .. } => 4,
        Error::NotStaircase | Error::NotAssr(_) | Error::RankDeficient { .. } => 1,
    }
}

fn load(path: &str) -> Result<RationalMatrix, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read `{path}`: {e}")))?;
    parse_matrix(&text)
}

fn cmd_pattern(file: &str, json: bool) -> Result<(), Error> {
    let a = load(file)?;
    let kind = staircase_type(&a);
    let (pattern, reversed) = match kind {
        StaircaseType::TypeI | StaircaseType::Both => (zero_pattern(&a)?, false),
        StaircaseType::TypeII => (zero_pattern(&a.reverse_rows())?, true),
        StaircaseType::Neither => return Err(Error::NotStaircase),
    };
    if json {
        println!("{}", render::pattern_json(kind, &pattern, reversed));
    } else {
        print!("{}", render::pattern_text(kind, &pattern, reversed));
    }
    Ok(())
}

fn cmd_classify(file: &str, full: bool, json: bool, budget: u64) -> Result<(), Error> {
    let a = load(file)?;
    let mode = if full { AssrMode::Full } else { AssrMode::Reduced };
    let report = classification_report(&a, mode, budget)?;
    if json {
        println!("{}", render::classify_json(&report, a.min_dim()));
    } else {
        print!("{}", render::classify_text(&report, a.min_dim()));
    }
    Ok(())
}

fn cmd_qr(
    file: &str,
    tol: f64,
    check_tp: bool,
    check_boundary: bool,
    json: bool,
    budget: u64,
) -> Result<(), Error> {
    let a = load(file)?;
    let real = a.to_real();
    let mut qr = mgs_qr(&real)?;
    qr.tol = tol;
    let ortho = orthonormality_residual(&qr.q);
    let reconstruction = reconstruction_residual(&real, &qr);
    let tp = if check_tp {
        Some(verify_r_tp(&qr.r, tol, budget)?)
    } else {
        None
    };
    let boundary = if check_boundary {
        Some(check_boundary_transfer(&a, &qr, budget)?)
    } else {
        None
    };
    if json {
        println!(
            "{}",
            json!({
                "boundary": boundary.as_ref().map(render::boundary_json),
                "m": real.rows(),
                "n": real.cols(),
                "ortho_residual": ortho,
                "q": render::real_matrix_json(&qr.q),
                "r": render::real_matrix_json(&qr.r),
                "reconstruction_residual": reconstruction,
                "tol": tol,
                "tp": tp.as_ref().map(render::tp_json),
            })
        );
    } else {
        print!(
            "{}",
            render::qr_text(&qr, ortho, reconstruction, tp.as_ref(), boundary.as_ref())
        );
    }
    Ok(())
}

fn cmd_minors(
    file: &str,
    order: usize,
    consecutive: bool,
    nontrivial_only: bool,
    boundary_only: bool,
    json: bool,
    budget: u64,
) -> Result<(), Error> {
    let a = load(file)?;
    let items = enumerate_minors(&a, order, consecutive, budget)?;
    let kept = items.filter(|item| {
        (!nontrivial_only || item.nontrivial)
            && (!boundary_only || item.boundary.as_ref().is_some_and(|b| b.any_boundary()))
    });
    if json {
        let rendered: Vec<_> = kept.map(|item| render::minor_item_json(&item)).collect();
        println!(
            "{}",
            json!({
                "items": rendered,
                "order": order,
            })
        );
    } else {
        for item in kept {
            print!("{}", render::minor_item_text(&item));
        }
    }
    Ok(())
}

fn cmd_gen(
    kind: &str,
    name: Option<&str>,
    rows: usize,
    cols: usize,
    seed: u64,
    out: Option<&str>,
) -> Result<(), Error> {
    let matrix = match kind {
        "fixture" => {
            let name = name.ok_or_else(|| {
                Error::InvalidArgument("--kind fixture requires --name".into())
            })?;
            fixture(name)?
        }
        "tp" => generate(&GenSpec {
            rows,
            cols,
            seed,
            kind: GenKind::TpBidiagonal,
        })?,
        "staircase" => generate(&GenSpec {
            rows,
            cols,
            seed,
            kind: GenKind::StaircaseRandom,
        })?,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown generation kind `{other}` (expected fixture, tp or staircase)"
            )))
        }
    };
    let text = format_matrix(&matrix);
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write `{path}`: {e}")))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_cauchy_binet(
    file: &str,
    alpha: &[usize],
    beta: &[usize],
    json: bool,
    budget: u64,
) -> Result<(), Error> {
    let a = load(file)?;
    let real = a.to_real();
    let qr = mgs_qr(&real)?;
    let query = MinorQuery::from_indices(alpha, beta, real.rows(), real.cols())?;
    let residual = assr::qr::cauchy_binet_residual(&real, &qr, &query, budget)?;
    if json {
        println!(
            "{}",
            json!({
                "alpha": alpha,
                "beta": beta,
                "residual": residual,
            })
        );
    } else {
        println!("residual = {residual:.3e}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Pattern { file, json } => cmd_pattern(&file, json),
        Command::Classify {
            file,
            full,
            reduced: _,
            json,
            budget,
        } => cmd_classify(&file, full, json, budget.resolve()?),
        Command::Qr {
            file,
            tol,
            check_tp,
            check_boundary,
            json,
            budget,
        } => cmd_qr(&file, tol, check_tp, check_boundary, json, budget.resolve()?),
        Command::Minors {
            file,
            order,
            consecutive,
            nontrivial_only,
            boundary_only,
            json,
            budget,
        } => cmd_minors(
            &file,
            order,
            consecutive,
            nontrivial_only,
            boundary_only,
            json,
            budget.resolve()?,
        ),
        Command::Gen {
            kind,
            name,
            rows,
            cols,
            seed,
            out,
        } => cmd_gen(&kind, name.as_deref(), rows, cols, seed, out.as_deref()),
        Command::CauchyBinet {
            file,
            alpha,
            beta,
            json,
            budget,
        } => cmd_cauchy_binet(&file, &alpha, &beta, json, budget.resolve()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
