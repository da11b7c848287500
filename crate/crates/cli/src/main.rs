use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use algebroid::arith::fmt_rational;
use algebroid::derivations::{monomialize, tangent_derivations};
use algebroid::error::Error;
use algebroid::hilbert::hilbert_series_quotient;
use algebroid::liealg::fibre_lie_algebra_permissive;
use algebroid::pipeline::{
    analyze_singularity, analyze_toral, covariants_report, parse_denominator, parse_problem, AnalyzeOptions, Mode, Problem,
};
use algebroid::repmod::sl2_algebroid_filtration;
use algebroid::series::{dimension_multiplicity, expand_series, quasi_polynomial_of, RationalSeries};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "algebroid", version, about = "Symmetry Lie algebras and graded series of singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Tangent,
    TjurinaAlgebroid,
}

#[derive(Subcommand)]
enum Command {
    /// Full singularity report. Several files are analysed in parallel.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "tangent")]
        mode: ModeArg,
        #[arg(long, default_value_t = 10)]
        series_depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report for a monomial ideal.
    Toral {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        series_depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the module of derivations preserving the ideal.
    Tangent { file: PathBuf },
    /// Fibre Lie algebra as JSON.
    Fibre { file: PathBuf },
    /// Monomial generators of the ideal, if it is monomial.
    Monomial { file: PathBuf },
    /// Hilbert series of the quotient ring.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Covariant series of binary forms.
    Covariant {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 20)]
        depth: usize,
        /// Denominator as `n:mult,...`, meaning the product of (1 - t^n)^mult.
        #[arg(long)]
        denominator: Option<String>,
    },
    /// Quasi-polynomials of a rational series given as JSON.
    Quasipoly {
        #[arg(long)]
        series: String,
    },
    /// Filtration certificate for the sl2 local system of degree d.
    Sl2Check {
        #[arg(long)]
        d: usize,
    },
}

enum Failure {
    Input(String),
    Lib(Error),
    Contradiction(String),
    /// Already printed; carries the exit code.
    Reported(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) | Failure::Lib(Error::Parse(_)) => 2,
            Failure::Lib(Error::Inconsistent(_)) | Failure::Contradiction(_) => 4,
            Failure::Lib(_) => 3,
            Failure::Reported(c) => *c,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) | Failure::Contradiction(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Reported(_) => String::new(),
        }
    }
}

fn load(path: &PathBuf) -> Result<Problem, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("serializable"));
}

fn analyze_one(path: &PathBuf, opts: &AnalyzeOptions, as_json: bool) -> Result<(String, bool), Failure> {
    let problem = load(path)?;
    let report = analyze_singularity(&problem, opts).map_err(|e| Failure::Lib(e.context(&path.display().to_string())))?;
    let out = if as_json { serde_json::to_string_pretty(&report.to_json()).expect("serializable") } else { report.to_text() };
    Ok((out, report.contradicts_known_result))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { files, mode, series_depth, json } => {
            let mode = match mode {
                ModeArg::Tangent => Mode::Tangent,
                ModeArg::TjurinaAlgebroid => Mode::TjurinaAlgebroid,
            };
            let opts = AnalyzeOptions { mode, series_depth, ..Default::default() };
            let results: Vec<Result<(String, bool), Failure>> = std::thread::scope(|s| {
                let handles: Vec<_> = files.iter().map(|f| s.spawn(|| analyze_one(f, &opts, json))).collect();
                handles.into_iter().map(|h| h.join().expect("analysis thread panicked")).collect()
            });
            let mut first_err = None;
            let mut contradiction = false;
            for (path, r) in files.iter().zip(results) {
                match r {
                    Ok((out, c)) => {
                        if files.len() > 1 && !json {
                            emit(&format!("== {}", path.display()));
                        }
                        emit(&out);
                        contradiction |= c;
                    }
                    Err(e) => {
                        eprintln!("error: {}", e.message());
                        first_err.get_or_insert(e);
                    }
                }
            }
            if let Some(e) = first_err {
                return Err(Failure::Reported(e.code()));
            }
            if contradiction {
                return Err(Failure::Contradiction("CONTRADICTS-KNOWN-RESULT: a solvability verdict disagrees with a known result".into()));
            }
        }
        Command::Toral { file, series_depth, json } => {
            let report = analyze_toral(&load(&file)?, series_depth)?;
            if json {
                print_json(&report.to_json());
            } else {
                emit(&report.to_text());
            }
        }
        Command::Tangent { file } => {
            let problem = load(&file)?;
            let dm = tangent_derivations(&problem.graded_ideal())?;
            for (k, g) in dm.format_generators().iter().enumerate() {
                emit(&format!("d{} = {g}", k + 1));
            }
        }
        Command::Fibre { file } => {
            let problem = load(&file)?;
            let dm = tangent_derivations(&problem.graded_ideal())?;
            let fibre = fibre_lie_algebra_permissive(&dm)?;
            let basis: Vec<String> = fibre.basis.iter().map(|d| d.format(&dm.ring)).collect();
            print_json(&json!({
                "basis": basis,
                "algebra": fibre.algebra.to_json(),
                "brackets": fibre.algebra.bracket_table(),
                "fingerprint": fibre.algebra.fingerprint(),
            }));
        }
        Command::Monomial { file } => {
            let problem = load(&file)?;
            match monomialize(&problem.ideal) {
                Some(ms) => {
                    let names: Vec<String> = ms.iter().map(|m| problem.ideal.ring.fmt_monomial(m)).collect();
                    emit(&names.join(", "));
                }
                None => emit("none"),
            }
        }
        Command::Hilbert { file, terms } => {
            let problem = load(&file)?;
            let rs = hilbert_series_quotient(&problem.graded_ideal())?.reduced();
            let coeffs = expand_series(&rs, terms).to_i64();
            let (d, e) = dimension_multiplicity(&rs)?;
            print_json(&json!({
                "series": rs.to_json(),
                "series_text": rs.display(),
                "coefficients": coeffs,
                "dimension": d,
                "multiplicity": fmt_rational(&e),
            }));
        }
        Command::Covariant { degree, depth, denominator } => {
            let denom = denominator.as_deref().map(parse_denominator).transpose()?;
            print_json(&covariants_report(degree, depth, denom)?.to_json());
        }
        Command::Quasipoly { series } => {
            let v: Value = serde_json::from_str(&series).map_err(|e| Failure::Input(format!("series JSON: {e}")))?;
            let rs = RationalSeries::from_json(&v)?;
            let qps = quasi_polynomial_of(&rs);
            let (d, e) = dimension_multiplicity(&rs)?;
            print_json(&json!({
                "series_text": rs.display(),
                "coefficient": qps.coefficient.to_json(),
                "coefficient_text": qps.coefficient.display(),
                "cumulative": qps.cumulative.to_json(),
                "cumulative_text": qps.cumulative.display(),
                "dimension": d,
                "multiplicity": fmt_rational(&e),
            }));
        }
        Command::Sl2Check { d } => {
            let f = sl2_algebroid_filtration(d)?;
            print_json(&serde_json::to_value(&f).expect("serializable"));
            if !f.certified {
                return Err(Failure::Contradiction(format!("filtration for d = {d} not certified")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, Failure::Reported(_)) {
                eprintln!("error: {}", e.message());
            }
            ExitCode::from(e.code())
        }
    }
}
