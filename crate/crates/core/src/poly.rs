//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::ExponentVector;
use crate::error::{domain, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Graded lex comparison, rejecting vectors of different lengths.
pub fn graded_lex_compare(mu: &ExponentVector, nu: &ExponentVector) -> Result<Ordering> {
    if mu.n() != nu.n() {
        return domain(format!("cannot compare {mu} with {nu}: lengths differ"));
    }
    Ok(mu.cmp(nu))
}

/// A polynomial in `x_1, ..., x_n`.
///
/// Terms are kept sorted by the graded lex order and no stored coefficient
/// is zero, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "polynomials need at least one variable");
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Polynomial::monomial(ExponentVector::zero(n), c)
    }

    pub fn monomial(nu: ExponentVector, c: Rational) -> Self {
        let mut p = Polynomial::zero(nu.n());
        p.add_term(nu, c);
        p
    }

    /// `x_i` with `i` counted from 1.
    pub fn variable(n: usize, i: usize) -> Self {
        Polynomial::monomial(ExponentVector::variable(n, i), Rational::one())
    }

    /// Collects terms, combining like monomials.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        if n == 0 {
            return domain("polynomials need at least one variable");
        }
        let mut p = Polynomial::zero(n);
        for (nu, c) in terms {
            if nu.n() != n {
                return domain(format!("monomial {nu} does not have {n} entries"));
            }
            p.add_term(nu, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, nu: &ExponentVector) -> Rational {
        self.terms.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Graded-lex-greatest monomial with its coefficient.
    pub fn leading_term(&self) -> Result<(ExponentVector, Rational)> {
        match self.terms.last_key_value() {
            Some((nu, c)) => Ok((nu.clone(), c.clone())),
            None => domain("the zero polynomial has no leading monomial"),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last_key_value().map(|(nu, _)| nu.size())
    }

    /// The common degree of all terms, if there is one (`Some(0)` for zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(ExponentVector::size);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (nu, c) in &self.terms {
            out.entry(nu.size())
                .or_insert_with(|| Polynomial::zero(self.n))
                .terms
                .insert(nu.clone(), c.clone());
        }
        out
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(ExponentVector, Rational)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, nu: ExponentVector, c: Rational) {
        assert_eq!(nu.n(), self.n, "monomial {nu} has the wrong number of entries");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(nu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        if c.is_zero() {
            return;
        }
        for (nu, d) in &other.terms {
            self.add_term(nu.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(nu, d)| (nu.clone(), c * d)).collect(),
        }
    }

    pub fn mul_monomial(&self, mu: &ExponentVector) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(nu, c)| (nu.add(mu), c.clone())).collect(),
        }
    }

    /// Multiplication by `x_i`, `i` counted from 1.
    pub fn mul_variable(&self, i: usize) -> Polynomial {
        self.mul_monomial(&ExponentVector::variable(self.n, i))
    }

    fn check_same_n(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return domain(format!(
                "polynomials in {} and {} variables cannot be combined",
                self.n, other.n
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_n(other)?;
        let mut out = Polynomial::zero(self.n);
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                out.add_term(mu.add(nu), a * b);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every exponent vector, landing in `n` variables.
    /// Coefficients of colliding images are summed.
    pub fn map_vectors<F>(&self, n: usize, mut f: F) -> Polynomial
    where
        F: FnMut(&ExponentVector) -> ExponentVector,
    {
        let mut out = Polynomial::zero(n);
        for (nu, c) in &self.terms {
            out.add_term(f(nu), c.clone());
        }
        out
    }

    /// Re-reads a polynomial in `x_1..x_m` as one in `x_{s+1}..x_{s+m}` of a
    /// ring with `n ≥ s + m` variables.
    pub fn shift_variables(&self, n: usize, s: usize) -> Result<Polynomial> {
        if s + self.n > n {
            return domain(format!(
                "cannot shift {} variables by {s} inside {n} variables",
                self.n
            ));
        }
        Ok(self.map_vectors(n, |nu| {
            let mut e = vec![0; n];
            e[s..s + nu.n()].copy_from_slice(nu.entries());
            ExponentVector::new(e).expect("n >= 1")
        }))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics when the variable counts differ; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).unwrap()
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).unwrap()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

fn vector_factorial(nu: &ExponentVector) -> BigInt {
    nu.entries()
        .iter()
        .flat_map(|&e| 1..=e)
        .fold(BigInt::one(), |acc, i| acc * i)
}

/// `⟨P, Q⟩ = P(∂) Q |_{X=0} = Σ_ν [X^ν]P [X^ν]Q ν!`.
pub fn diff_pairing(p: &Polynomial, q: &Polynomial) -> Result<Rational> {
    p.check_same_n(q)?;
    let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    let mut acc = Rational::zero();
    for (nu, a) in &small.terms {
        if let Some(b) = large.terms.get(nu) {
            acc += a * b * Rational::from_integer(vector_factorial(nu));
        }
    }
    Ok(acc)
}
