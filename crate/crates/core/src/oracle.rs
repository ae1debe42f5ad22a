//! Brute-force verification by linear algebra on degree slices.
//!
//! In degree `d` the ideal `J_n` is spanned by the products `X^μ M_α` with
//! `α` nonempty and `|μ| + |α| = d`. Writing those products as integer rows
//! over the degree-`d` monomials and computing the rank exactly gives the
//! graded dimensions of the quotient without using the `G` family at all.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{ballot, enumerate_dyck, vectors_of_degree, Composition, ExponentVector};
use crate::error::{domain, Result};
use crate::limits::{self, Limits};
use crate::matrix::{Echelon, IntegerMatrix, SparseRow};
use crate::poly::Polynomial;
use crate::qsym::{fundamental_qsym, monomial_qsym};

/// Which quasi-symmetric basis multiplies the monomials in a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorBasis {
    Monomial,
    Fundamental,
}

/// Row `X^μ · M_α` (or `X^μ · F_α`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLabel {
    pub alpha: Composition,
    pub mu: ExponentVector,
}

/// The degree-`d` slice of `J_n` as an integer matrix. Columns are the
/// degree-`d` monomials in descending graded lex order; rows are sorted by
/// `(|α|, α)` and then by `μ`.
#[derive(Debug, Clone)]
pub struct IdealSlice {
    pub n: usize,
    pub degree: u32,
    pub columns: Vec<ExponentVector>,
    pub labels: Vec<RowLabel>,
    pub matrix: IntegerMatrix,
}

fn check_oracle_size(n: usize, d: u32) -> Result<()> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    limits::check("n", n, Limits::current().oracle_max_n)?;
    limits::check("degree", d as usize, n + 1)
}

impl IdealSlice {
    pub fn build(n: usize, d: u32, basis: GeneratorBasis) -> Result<IdealSlice> {
        check_oracle_size(n, d)?;
        let mut columns = vectors_of_degree(n, d);
        columns.reverse();
        let index: HashMap<&ExponentVector, usize> =
            columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut labels = Vec::new();
        let mut matrix = IntegerMatrix::new(columns.len());
        for size in 1..=d {
            for alpha in Composition::all_of_size(size) {
                if alpha.len() > n {
                    continue;
                }
                let generator = match basis {
                    GeneratorBasis::Monomial => monomial_qsym(&alpha, n),
                    GeneratorBasis::Fundamental => fundamental_qsym(&alpha, n),
                };
                for mu in vectors_of_degree(n, d - size) {
                    let row = generator
                        .mul_monomial(&mu)
                        .terms()
                        .map(|(nu, c)| (index[nu], c.to_integer()))
                        .collect();
                    matrix.push_row(row);
                    labels.push(RowLabel {
                        alpha: alpha.clone(),
                        mu,
                    });
                }
            }
        }
        Ok(IdealSlice {
            n,
            degree: d,
            columns,
            labels,
            matrix,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn echelon(&self) -> Echelon {
        self.matrix.echelon()
    }

    /// `P` as an integer row over this slice's columns (denominators
    /// cleared). `P` must be homogeneous of the slice's degree.
    pub fn row_of(&self, p: &Polynomial) -> Result<SparseRow> {
        let index: HashMap<&ExponentVector, usize> =
            self.columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let lcm = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row: SparseRow = Vec::with_capacity(p.len());
        for (nu, c) in p.terms() {
            let Some(&j) = index.get(nu) else {
                return domain(format!("monomial {nu} is not in degree {}", self.degree));
            };
            row.push((j, (c * &lcm).to_integer()));
        }
        row.sort_by_key(|(j, _)| *j);
        Ok(row)
    }

    /// Plain-text dump of the slice and its rank.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let rank = self.rank();
        let _ = writeln!(out, "# ideal slice");
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "degree {}", self.degree);
        let _ = writeln!(out, "columns {}", self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            let _ = writeln!(out, "col {j} {c}");
        }
        let _ = writeln!(out, "rows {}", self.labels.len());
        for (i, (label, row)) in self.labels.iter().zip(self.matrix.rows()).enumerate() {
            let _ = write!(out, "row {i} alpha={} mu={}:", label.alpha, label.mu);
            for (j, v) in row {
                let _ = write!(out, " {j}:{v}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "rank {rank}");
        let _ = writeln!(out, "quotient_dim {}", self.columns.len() - rank);
        out
    }
}

/// Rank of the degree-`d` slice of `J_n`.
pub fn ideal_degree_rank(n: usize, d: u32) -> Result<usize> {
    Ok(IdealSlice::build(n, d, GeneratorBasis::Monomial)?.rank())
}

/// `dim R_n^{(d)}` for `d = 0..=dmax`.
pub fn quotient_dims(n: usize, dmax: u32) -> Result<Vec<usize>> {
    check_oracle_size(n, dmax)?;
    (0..=dmax)
        .map(|d| {
            let slice = IdealSlice::build(n, d, GeneratorBasis::Monomial)?;
            Ok(slice.columns.len() - slice.rank())
        })
        .collect()
}

/// Membership of a homogeneous polynomial in the span of its degree slice.
pub fn row_space_member(p: &Polynomial) -> Result<bool> {
    let Some(d) = p.homogeneous_degree() else {
        return domain("row-space membership needs a homogeneous polynomial");
    };
    if p.is_zero() {
        return Ok(true);
    }
    let slice = IdealSlice::build(p.n(), d, GeneratorBasis::Monomial)?;
    let row = slice.row_of(p)?;
    Ok(slice.echelon().contains(row))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HilbertMethod {
    /// Ballot numbers.
    Formula,
    /// Counting Dyck vectors per degree.
    Enumeration,
    /// Ranks of the ideal slices.
    Oracle,
}

/// Graded dimensions in degrees `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub n: usize,
    pub coefficients: Vec<BigUint>,
}

impl HilbertSeries {
    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }
}

pub fn hilbert_series(n: usize, method: HilbertMethod) -> Result<HilbertSeries> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    let coefficients = match method {
        HilbertMethod::Formula => {
            limits::check("n", n, Limits::current().enumeration_max_n)?;
            (0..n).map(|k| ballot(n, k)).collect::<Result<_>>()?
        }
        HilbertMethod::Enumeration => {
            let mut counts = vec![BigUint::zero(); n];
            for eta in enumerate_dyck(n, None)? {
                counts[eta.size() as usize] += 1u32;
            }
            counts
        }
        HilbertMethod::Oracle => quotient_dims(n, n as u32 - 1)?
            .into_iter()
            .map(BigUint::from)
            .collect(),
    };
    Ok(HilbertSeries { n, coefficients })
}

/// Numerator variant of the closed form for `Σ F_n(t) x^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Numerator {
    /// `1 - √(1-4tx) - 2x`, which matches the graded dimensions.
    Corrected,
    /// `1 - √(1-4tx) - 2t`.
    AsPrinted,
}

/// Polynomial in `t`, ascending powers.
type TPoly = Vec<BigInt>;

fn tpoly_add_scaled(acc: &mut TPoly, c: i64, shift: usize, p: &TPoly) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, v) in p.iter().enumerate() {
        acc[i + shift] += v * c;
    }
}

fn tpoly_mul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn tpoly_trim(mut p: TPoly) -> TPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Checks `(N(x,t) - 2(t+x-1)Φ)² ≡ 1 - 4tx (mod x^order)` where
/// `Φ = Σ_{n≥1} F_n(t) x^n` comes from enumerated graded dimensions and
/// `N` is `1 - 2x` or `1 - 2t` according to `numerator`.
pub fn generating_function_check(order: usize, numerator: Numerator) -> Result<bool> {
    limits::check("order", order, Limits::current().enumeration_max_n)?;
    if order == 0 {
        return Ok(true);
    }
    // phi[m] = F_m(t), m < order
    let mut phi: Vec<TPoly> = vec![Vec::new(); order];
    for (m, slot) in phi.iter_mut().enumerate().skip(1) {
        *slot = hilbert_series(m, HilbertMethod::Enumeration)?
            .coefficients
            .into_iter()
            .map(BigInt::from)
            .collect();
    }
    let mut inner: Vec<TPoly> = vec![Vec::new(); order];
    inner[0] = vec![BigInt::one()];
    match numerator {
        Numerator::Corrected if order > 1 => inner[1] = vec![BigInt::from(-2)],
        Numerator::Corrected => {}
        Numerator::AsPrinted => inner[0] = vec![BigInt::one(), BigInt::from(-2)],
    }
    // -2(t + x - 1)Φ = -2tΦ - 2xΦ + 2Φ
    let (t, one) = (vec![BigInt::zero(), BigInt::one()], vec![BigInt::one()]);
    for m in 0..order {
        let term = &phi[m];
        tpoly_add_scaled(&mut inner[m], -2, 0, &tpoly_mul(&t, term));
        tpoly_add_scaled(&mut inner[m], 2, 0, &tpoly_mul(&one, term));
        if m + 1 < order {
            tpoly_add_scaled(&mut inner[m + 1], -2, 0, term);
        }
    }
    let mut square: Vec<TPoly> = vec![Vec::new(); order];
    for i in 0..order {
        for j in 0..order - i {
            let prod = tpoly_mul(&inner[i], &inner[j]);
            tpoly_add_scaled(&mut square[i + j], 1, 0, &prod);
        }
    }
    let mut target: Vec<TPoly> = vec![Vec::new(); order];
    target[0] = vec![BigInt::one()];
    if order > 1 {
        target[1] = vec![BigInt::zero(), BigInt::from(-4)];
    }
    Ok(square
        .into_iter()
        .map(tpoly_trim)
        .eq(target.into_iter().map(tpoly_trim)))
}
