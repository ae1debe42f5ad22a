//! Cross-checks run by `qsymq verify`.

use std::fmt;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsymq::combinat::{catalan, vectors_of_degree};
use qsymq::limits::Limits;
use qsymq::oracle::{hilbert_series, row_space_member, HilbertMethod};
use qsymq::qsym::fundamental_qsym;
use qsymq::quotient::enumerate_transdiagonal;
use qsymq::{Composition, GFamily, Polynomial, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Passed => "ok",
            CheckStatus::Failed => "FAIL",
            CheckStatus::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Check {
                name,
                status: CheckStatus::Passed,
                detail: summary,
            }
        } else {
            Check {
                name,
                status: CheckStatus::Failed,
                detail: failures.join("; "),
            }
        }
    }

    fn skipped(name: &'static str, detail: String) -> Self {
        Check {
            name,
            status: CheckStatus::Skipped,
            detail,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub n: usize,
    pub max_degree: u32,
    pub long: bool,
    pub seed: u64,
}

pub fn passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != CheckStatus::Failed)
}

fn show<T: fmt::Display>(row: &[T]) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn hilbert_check(opts: &VerifyOptions) -> Result<Check> {
    let n = opts.n;
    let formula = hilbert_series(n, HilbertMethod::Formula)?;
    let enumerated = hilbert_series(n, HilbertMethod::Enumeration)?;
    let oracle_cap = if opts.long { 6 } else { 5 };
    let oracle = if n <= oracle_cap.min(Limits::current().oracle_max_n) {
        Some(hilbert_series(n, HilbertMethod::Oracle)?)
    } else {
        None
    };
    let mut failures = Vec::new();
    if enumerated != formula {
        failures.push(format!(
            "formula [{}] enumeration [{}]",
            show(&formula.coefficients),
            show(&enumerated.coefficients)
        ));
    }
    if let Some(o) = &oracle {
        if *o != formula {
            failures.push(format!(
                "formula [{}] oracle [{}]",
                show(&formula.coefficients),
                show(&o.coefficients)
            ));
        }
    }
    let total = catalan(n)?;
    if formula.total() != total {
        failures.push(format!("total {} but C_{n} = {total}", formula.total()));
    }
    let routes = if oracle.is_some() { "three routes" } else { "formula and enumeration" };
    Ok(Check::new(
        "hilbert",
        failures,
        format!("[{}] by {routes}", show(&formula.coefficients)),
    ))
}

fn leading_monomial_check(family: &GFamily, opts: &VerifyOptions) -> Result<Check> {
    let mut failures = Vec::new();
    let indices = enumerate_transdiagonal(opts.n, opts.max_degree);
    for eps in &indices {
        let g = family.g_element(eps)?;
        let (lm, c) = g.expansion.leading_term()?;
        if lm != *eps || !c.is_one() {
            failures.push(format!("LM(G_{eps}) = {c} X^{lm}"));
        }
    }
    Ok(Check::new(
        "leading-monomials",
        failures,
        format!("{} transdiagonal indices", indices.len()),
    ))
}

fn random_polynomial(rng: &mut impl Rng, n: usize, max_degree: u32) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=6) {
        let d = rng.gen_range(0..=max_degree);
        let monomials = vectors_of_degree(n, d);
        let nu = monomials[rng.gen_range(0..monomials.len())].clone();
        let c = Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
        p.add_term(nu, c);
    }
    p
}

fn certificate_check(family: &GFamily, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Check> {
    let cases = if opts.long { 200 } else { 50 };
    let mut failures = Vec::new();
    for case in 0..cases {
        let p = random_polynomial(rng, opts.n, opts.max_degree);
        let r = family.normal_form(&p)?;
        if !r.verify(family, &p)? {
            failures.push(format!("case {case}: certificate does not reconstruct the input"));
        }
        let again = family.normal_form(&r.remainder)?;
        if again.remainder != r.remainder || !again.certificate.is_empty() {
            failures.push(format!("case {case}: reduction is not idempotent"));
        }
    }
    Ok(Check::new("certificates", failures, format!("{cases} random polynomials")))
}

fn annihilation_check(family: &GFamily, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Check> {
    let n = opts.n;
    let top = (n as u32).min(opts.max_degree.max(1));
    let cases = if opts.long { 100 } else { 25 };
    let mut failures = Vec::new();
    let mut oracle_checked = 0;
    for case in 0..cases {
        let sizes: Vec<Composition> = (1..=top).flat_map(Composition::all_of_size).collect();
        let alpha = &sizes[rng.gen_range(0..sizes.len())];
        let q = random_polynomial(rng, n, 2);
        let p = &q * &fundamental_qsym(alpha, n);
        let r = family.normal_form(&p)?;
        if !r.remainder.is_zero() {
            failures.push(format!("case {case}: Q*F{alpha} leaves a remainder"));
        }
        if n <= 4 {
            // the oracle covers degrees up to n + 1
            for (_, component) in p.homogeneous_components().range(..=n as u32 + 1) {
                oracle_checked += 1;
                if !row_space_member(component)? {
                    failures.push(format!("case {case}: oracle rejects a component of Q*F{alpha}"));
                }
            }
        }
    }
    Ok(Check::new(
        "annihilation",
        failures,
        format!("{cases} products, {oracle_checked} oracle checks"),
    ))
}

/// Runs every check in a fixed order.
pub fn run_checks(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let family = GFamily::new(opts.n);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = vec![hilbert_check(opts)?];
    if opts.max_degree == 0 {
        checks.push(Check::skipped("leading-monomials", "max degree 0".to_string()));
    } else {
        checks.push(leading_monomial_check(&family, opts)?);
    }
    checks.push(certificate_check(&family, opts, &mut rng)?);
    checks.push(annihilation_check(&family, opts, &mut rng)?);
    Ok(checks)
}
