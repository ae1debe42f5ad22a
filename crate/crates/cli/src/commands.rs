use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qsymq::combinat::enumerate_dyck;
use qsymq::oracle::{
    generating_function_check, hilbert_series, GeneratorBasis, HilbertMethod, IdealSlice,
    Numerator,
};
use qsymq::qsym::{f_product, fundamental_qsym, monomial_qsym};
use qsymq::{GFamily, Polynomial};

use crate::error::{CliError, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use crate::output::OutputRecord;
use crate::parse::{parse_composition, parse_polynomial, parse_vector};
use crate::render::{render_path, render_polynomial, render_series};
use crate::verify::{passed, run_checks, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "qsymq",
    version,
    about = "Exact computations in the quotient of Q[x1..xn] by the quasi-symmetric ideal"
)]
pub struct Cli {
    /// Print a JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Enum,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded dimensions of the quotient.
    Hilbert {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Enum)]
        method: Method,
        /// Write the oracle matrices to this file (oracle method only).
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Dyck monomials spanning the quotient.
    Basis {
        #[arg(short = 'n')]
        n: usize,
        /// Only this degree.
        #[arg(short = 'k')]
        k: Option<u32>,
        /// Draw each lattice path.
        #[arg(long)]
        paths: bool,
    },
    /// Expansion of one G element.
    Gbasis {
        #[arg(short = 'n')]
        n: usize,
        /// Comma-separated exponents, padded with zeros to n.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Normal form on the Dyck monomials.
    #[command(group(ArgGroup::new("input").required(true).args(["expr", "file"])))]
    Reduce {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also print the G combination removed.
        #[arg(long)]
        certificate: bool,
    },
    /// Ideal membership; exits 3 when the polynomial is not in the ideal.
    Member {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Monomial or fundamental quasi-symmetric polynomial.
    #[command(group(ArgGroup::new("basis").required(true).args(["monomial", "fundamental"])))]
    Qsym {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        monomial: Option<String>,
        #[arg(long)]
        fundamental: Option<String>,
    },
    /// Product of two fundamental quasi-symmetric polynomials.
    QsymMul {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Cross-checks; exits 3 on any mismatch.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        /// Largest degree sampled (defaults to n).
        #[arg(long)]
        max_degree: Option<u32>,
        /// Larger samples and the oracle at n = 6.
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Closed form of the graded dimensions as a power series in x.
    GfCheck {
        #[arg(long)]
        order: usize,
        /// Use the numerator with -2t instead of -2x.
        #[arg(long)]
        as_printed: bool,
    },
}

/// Text and record produced by one subcommand.
struct Report {
    text: String,
    record: OutputRecord,
    status: u8,
}

impl Report {
    fn ok(text: String, record: OutputRecord) -> Self {
        Report {
            text,
            record,
            status: EXIT_OK,
        }
    }
}

fn hilbert(n: usize, method: Method, dump: Option<&PathBuf>) -> Result<Report, CliError> {
    if dump.is_some() && method != Method::Oracle {
        return Err(CliError::Usage("--dump requires --method oracle".into()));
    }
    let series = hilbert_series(
        n,
        match method {
            Method::Formula => HilbertMethod::Formula,
            Method::Enum => HilbertMethod::Enumeration,
            Method::Oracle => HilbertMethod::Oracle,
        },
    )?;
    if let Some(path) = dump {
        let mut text = String::new();
        for d in 0..=n as u32 + 1 {
            text.push_str(&IdealSlice::build(n, d, GeneratorBasis::Monomial)?.dump());
        }
        std::fs::write(path, text).map_err(CliError::io(path.display().to_string()))?;
    }
    let c = &series.coefficients;
    let row = c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let text = format!("{row}\n{}\n", render_series(c));
    let record = OutputRecord::new(n, "hilbert")
        .with_series(c)
        .with("method", format!("{method:?}").to_lowercase())
        .with("total", series.total().to_string());
    Ok(Report::ok(text, record))
}

fn basis(n: usize, k: Option<u32>, paths: bool) -> Result<Report, CliError> {
    let vectors = enumerate_dyck(n, k)?;
    let mut text = String::new();
    for eta in &vectors {
        writeln!(text, "{eta}").unwrap();
        if paths {
            writeln!(text, "{}\n", render_path(eta)).unwrap();
        }
    }
    writeln!(text, "count {}", vectors.len()).unwrap();
    let mut sum = Polynomial::zero(n);
    for eta in &vectors {
        sum.add_term(eta.clone(), qsymq::poly::integer(1));
    }
    let mut record = OutputRecord::new(n, "basis")
        .with_polynomial(&sum)
        .with("count", vectors.len());
    if let Some(k) = k {
        record = record.with("degree", k);
    }
    Ok(Report::ok(text, record))
}

fn gbasis(n: usize, vector: &str) -> Result<Report, CliError> {
    let eps = parse_vector(vector, n)?;
    let g = GFamily::new(n).g_element(&eps)?;
    let (lm, _) = g.expansion.leading_term()?;
    let text = format!(
        "{}\nleading monomial {lm}\n",
        render_polynomial(&g.expansion)
    );
    let record = OutputRecord::new(n, "gbasis")
        .with_polynomial(&g.expansion)
        .with("index", eps.entries().to_vec())
        .with("leading", lm.entries().to_vec());
    Ok(Report::ok(text, record))
}

fn read_expr(expr: Option<&String>, file: Option<&PathBuf>) -> Result<String, CliError> {
    match (expr, file) {
        (Some(e), _) => Ok(e.clone()),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(CliError::io(path.display().to_string()))
        }
        (None, None) => Err(CliError::Usage("one of --expr or --file is required".into())),
    }
}

fn reduce(n: usize, text: &str, certificate: bool) -> Result<Report, CliError> {
    let p = parse_polynomial(text, n)?;
    let result = GFamily::new(n).normal_form(&p)?;
    let mut out = format!("{}\n", render_polynomial(&result.remainder));
    let mut record = OutputRecord::new(n, "reduce").with_polynomial(&result.remainder);
    if certificate {
        out.push_str("certificate\n");
        for (c, eps) in &result.certificate {
            writeln!(out, "  {c} G{eps}").unwrap();
        }
        record = record.with_certificate(&result);
    }
    Ok(Report::ok(out, record))
}

fn member(n: usize, text: &str) -> Result<Report, CliError> {
    let p = parse_polynomial(text, n)?;
    let result = GFamily::new(n).normal_form(&p)?;
    let inside = result.remainder.is_zero();
    let mut out = if inside {
        "in the ideal\n".to_string()
    } else {
        "not in the ideal\n".to_string()
    };
    if !inside {
        writeln!(out, "normal form {}", render_polynomial(&result.remainder)).unwrap();
    }
    let record = OutputRecord::new(n, "member")
        .with_polynomial(&result.remainder)
        .with("member", inside);
    Ok(Report {
        text: out,
        record,
        status: if inside { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn qsym(n: usize, monomial: Option<&String>, fundamental: Option<&String>) -> Result<Report, CliError> {
    let (kind, alpha, p) = match (monomial, fundamental) {
        (Some(a), _) => {
            let alpha = parse_composition(a)?;
            let p = monomial_qsym(&alpha, n);
            ("monomial", alpha, p)
        }
        (None, Some(a)) => {
            let alpha = parse_composition(a)?;
            let p = fundamental_qsym(&alpha, n);
            ("fundamental", alpha, p)
        }
        (None, None) => {
            return Err(CliError::Usage("one of --monomial or --fundamental is required".into()))
        }
    };
    let record = OutputRecord::new(n, "qsym")
        .with_polynomial(&p)
        .with("basis", kind)
        .with("alpha", alpha.parts().to_vec());
    Ok(Report::ok(format!("{}\n", render_polynomial(&p)), record))
}

fn qsym_mul(n: usize, left: &str, right: &str) -> Result<Report, CliError> {
    let alpha = parse_composition(left)?;
    let beta = parse_composition(right)?;
    let product = f_product(&alpha, &beta, n);
    let expansion = product.expand();
    let mut text = String::new();
    let mut listing = Vec::new();
    for (gamma, m) in &product.terms {
        writeln!(text, "{m} F{gamma}").unwrap();
        listing.push(json!({"alpha": gamma.parts(), "multiplicity": m}));
    }
    writeln!(text, "expansion {}", render_polynomial(&expansion)).unwrap();
    let record = OutputRecord::new(n, "qsym-mul")
        .with_polynomial(&expansion)
        .with("compositions", Value::Array(listing));
    Ok(Report::ok(text, record))
}

fn verify(n: usize, max_degree: Option<u32>, long: bool, seed: u64) -> Result<Report, CliError> {
    let opts = VerifyOptions {
        n,
        max_degree: max_degree.unwrap_or(n as u32),
        long,
        seed,
    };
    let checks = run_checks(&opts)?;
    let ok = passed(&checks);
    let mut text = String::new();
    let mut listing = Vec::new();
    for c in &checks {
        writeln!(text, "{:<5}{:<18}{}", c.status.to_string(), c.name, c.detail).unwrap();
        listing.push(json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}));
    }
    writeln!(text, "{}", if ok { "all checks passed" } else { "mismatches found" }).unwrap();
    let record = OutputRecord::new(n, "verify")
        .with("passed", ok)
        .with("checks", Value::Array(listing));
    Ok(Report {
        text,
        record,
        status: if ok { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn gf_check(order: usize, as_printed: bool) -> Result<Report, CliError> {
    let numerator = if as_printed {
        Numerator::AsPrinted
    } else {
        Numerator::Corrected
    };
    let holds = generating_function_check(order, numerator)?;
    let form = if as_printed { "-2t" } else { "-2x" };
    let verdict = if holds { "holds" } else { "fails" };
    let text = format!("numerator with {form}: identity {verdict} mod x^{order}\n");
    let record = OutputRecord::new(order, "gf-check")
        .with("order", order)
        .with("numerator", form)
        .with("holds", holds);
    Ok(Report {
        text,
        record,
        status: if holds { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn execute(command: &Command) -> Result<Report, CliError> {
    if let Command::Hilbert { n: 0, .. }
    | Command::Basis { n: 0, .. }
    | Command::Gbasis { n: 0, .. }
    | Command::Reduce { n: 0, .. }
    | Command::Member { n: 0, .. }
    | Command::Qsym { n: 0, .. }
    | Command::QsymMul { n: 0, .. }
    | Command::Verify { n: 0, .. } = command
    {
        return Err(CliError::Usage("-n must be at least 1".into()));
    }
    match command {
        Command::Hilbert { n, method, dump } => hilbert(*n, *method, dump.as_ref()),
        Command::Basis { n, k, paths } => basis(*n, *k, *paths),
        Command::Gbasis { n, vector } => gbasis(*n, vector),
        Command::Reduce {
            n,
            expr,
            file,
            certificate,
        } => reduce(*n, &read_expr(expr.as_ref(), file.as_ref())?, *certificate),
        Command::Member { n, expr } => member(*n, expr),
        Command::Qsym {
            n,
            monomial,
            fundamental,
        } => qsym(*n, monomial.as_ref(), fundamental.as_ref()),
        Command::QsymMul { n, left, right } => qsym_mul(*n, left, right),
        Command::Verify {
            n,
            max_degree,
            long,
            seed,
        } => verify(*n, *max_degree, *long, *seed),
        Command::GfCheck { order, as_printed } => gf_check(*order, *as_printed),
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let body = if cli.json {
                format!("{}\n", report.record.to_json())
            } else {
                report.text
            };
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
