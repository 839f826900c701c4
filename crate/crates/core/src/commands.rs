//! The command-line surface as plain functions.
//!
//! Each command returns an [`Outcome`] holding its exit code and the text for
//! stdout and stderr, so the binary only parses flags and prints.
//!
//! Exit codes: 0 ok, 2 parse error, 3 shape or dimension error, 4 I/O error,
//! 5 Schur mismatch, 1 anything else.

use std::fs::File;
use std::path::PathBuf;

use crate::census::{run_census, write_records, CensusConfig, CensusFormat};
use crate::compositions::{Composition, WeakComposition};
use crate::error::Error;
use crate::ndet::{self, DEFAULT_DIM_CAP};
use crate::par::Execution;
use crate::predicates::classify_with_cap;
use crate::skew_matrix::{build_matrix, immaculate_matrix};
use crate::sym_bridge::{schur_via_jacobi_trudi, schur_via_tableaux};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SHAPE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// Environment variable overriding the dimension cap.
pub const DIM_CAP_ENV: &str = "IMMACULATE_DIM_CAP";
/// Cap used by `expand` and `classify` when the environment does not override it.
pub const DEFAULT_EXPAND_CAP: usize = DEFAULT_DIM_CAP;
pub const DEFAULT_ENUMERATE_CAP: usize = 7;
pub const DEFAULT_MAX_N: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }

    fn from_error(e: &Error) -> Self {
        Outcome::fail(exit_code(e), e)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::EmptyComposition
        | Error::NonPositivePart { .. }
        | Error::NotAPartition(_)
        | Error::NotContained { .. } => EXIT_PARSE,
        Error::LengthMismatch { .. } | Error::PadTooShort { .. } | Error::DimensionCap { .. } => {
            EXIT_SHAPE
        }
        _ => EXIT_FAILURE,
    }
}

/// Read the cap override from the environment, falling back to `default`.
pub fn dim_cap_from_env(default: usize) -> Result<usize, Error> {
    match std::env::var(DIM_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{DIM_CAP_ENV}=`{v}` is not a non-negative integer"))),
        Err(_) => Ok(default),
    }
}

fn parse_pair(alpha: &str, beta: &str, pad: bool) -> Result<(Composition, WeakComposition), Error> {
    let alpha: Composition = alpha.parse()?;
    let mut beta: WeakComposition = beta.parse()?;
    if pad && beta.len() < alpha.len() {
        let mut parts = beta.parts().to_vec();
        parts.resize(alpha.len(), 0);
        beta = WeakComposition::new(parts);
    }
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch { alpha: alpha.len(), beta: beta.len() });
    }
    Ok((alpha, beta))
}

/// `expand ALPHA [--skew BETA] [--pad] [--show-matrix]`
pub fn expand(alpha: &str, beta: Option<&str>, pad: bool, show_matrix: bool, cap: usize) -> Outcome {
    let run = || -> Result<String, Error> {
        let m = match beta {
            Some(b) => {
                let (a, b) = parse_pair(alpha, b, pad)?;
                build_matrix(&a, &b)?
            }
            None => immaculate_matrix(&alpha.parse()?),
        };
        let e = ndet::ndet_laplace_with_cap(&m, cap)?;
        let mut out = String::new();
        if show_matrix {
            out.push_str(&m.render());
            out.push('\n');
        }
        out.push_str(&e.canonical_render());
        out.push('\n');
        Ok(out)
    };
    run().map_or_else(|e| Outcome::from_error(&e), Outcome::ok)
}

/// `classify ALPHA BETA [--pad]`
pub fn classify(alpha: &str, beta: &str, pad: bool, cap: usize) -> Outcome {
    let run = || -> Result<Outcome, Error> {
        let (a, b) = parse_pair(alpha, beta, pad)?;
        let c = classify_with_cap(&a, &b, cap)?;
        let mut out = Outcome::ok(format!("{}\n", c.render()));
        if c.cancellation_undecided {
            out.stderr = format!(
                "note: cancellation undecided; dimension {} exceeds cap {cap}\n",
                a.len()
            );
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| Outcome::from_error(&e))
}

#[derive(Debug, Clone)]
pub struct EnumerateArgs {
    pub n: u32,
    pub length: usize,
    pub partitions_only: bool,
    pub format: CensusFormat,
    pub out: Option<PathBuf>,
    pub timing: bool,
    pub max_n: u32,
    pub exec: Execution,
    pub dim_cap: usize,
}

impl EnumerateArgs {
    pub fn new(n: u32, length: usize) -> Self {
        EnumerateArgs {
            n,
            length,
            partitions_only: false,
            format: CensusFormat::JsonLines,
            out: None,
            timing: false,
            max_n: DEFAULT_MAX_N,
            exec: Execution::default(),
            dim_cap: DEFAULT_ENUMERATE_CAP,
        }
    }
}

/// `enumerate --n N --len L [--partitions-only] [--format F] [--out PATH]`
///
/// With `--out`, records go to the file and the summary to stdout; without
/// it, records go to stdout and the summary to stderr.
pub fn enumerate(args: &EnumerateArgs) -> Outcome {
    if args.n > args.max_n {
        return Outcome::fail(EXIT_SHAPE, format!("n = {} exceeds the cap of {}", args.n, args.max_n));
    }
    let cfg = CensusConfig {
        n: args.n,
        length: args.length,
        partitions_only: args.partitions_only,
        exec: args.exec,
        timing: args.timing,
        dim_cap: args.dim_cap,
    };
    let census = match run_census(&cfg) {
        Ok(c) => c,
        Err(e) => return Outcome::from_error(&e),
    };
    let summary = format!("{}\n", census.summary());
    match &args.out {
        Some(path) => {
            let written = File::create(path)
                .and_then(|f| write_records(&census.records, args.format, f));
            match written {
                Ok(()) => Outcome::ok(summary),
                Err(e) => Outcome::fail(EXIT_IO, format!("{}: {e}", path.display())),
            }
        }
        None => {
            let mut buf = Vec::new();
            if let Err(e) = write_records(&census.records, args.format, &mut buf) {
                return Outcome::fail(EXIT_IO, e);
            }
            Outcome {
                code: EXIT_OK,
                stdout: String::from_utf8(buf).expect("records are UTF-8"),
                stderr: summary,
            }
        }
    }
}

/// `schur-check OUTER [--inner INNER] --vars N`
pub fn schur_check(outer: &str, inner: Option<&str>, vars: usize) -> Outcome {
    let run = || -> Result<Outcome, Error> {
        let outer: WeakComposition = outer.parse()?;
        let inner: WeakComposition = match inner {
            Some(s) => s.parse()?,
            None => WeakComposition::new(Vec::new()),
        };
        if vars == 0 {
            return Err(Error::Parse("--vars must be at least 1".into()));
        }
        let tab = schur_via_tableaux(outer.parts(), inner.parts(), vars)?;
        let jt = schur_via_jacobi_trudi(outer.parts(), inner.parts(), vars)?;
        Ok(schur_report(&tab, &jt))
    };
    run().unwrap_or_else(|e| Outcome::from_error(&e))
}

/// `MATCH` plus the polynomial, or `MISMATCH` with both sides and their difference.
pub fn schur_report(
    tableaux: &crate::sym_bridge::SparsePolynomial,
    jacobi_trudi: &crate::sym_bridge::SparsePolynomial,
) -> Outcome {
    if tableaux == jacobi_trudi {
        Outcome::ok(format!("MATCH\n{tableaux}\n"))
    } else {
        Outcome {
            code: EXIT_MISMATCH,
            stdout: format!(
                "MISMATCH\ntableaux: {tableaux}\njacobi-trudi: {jacobi_trudi}\ndifference: {}\n",
                tableaux - jacobi_trudi
            ),
            stderr: String::new(),
        }
    }
}
