//! Text input: polynomials, exponent vectors and compositions.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := coeff? ('*'? factor)*
//! factor := 'x' index ('^' exponent)?
//! coeff  := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors are 1-based
//! character columns of the original text.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use qsymq::{Composition, ExponentVector, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 0-based character offset.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub index: usize,
    pub exponent: u32,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermExpr {
    pub negative: bool,
    pub coeff: Option<Rational>,
    pub factors: Vec<Factor>,
}

/// Syntax tree of a polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<TermExpr>,
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            at: 0,
            end: text.chars().count(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            return fail(self.position(), "expected a number");
        }
        Ok(s)
    }

    fn small_number<T: FromStr>(&mut self) -> Result<T, ParseError> {
        let pos = self.position();
        let s = self.digits()?;
        s.parse().or_else(|_| fail(pos, format!("number {s} is too large")))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let mut text = self.digits()?;
        if self.peek() == Some('/') {
            self.bump();
            let pos = self.position();
            let denom = self.digits()?;
            if denom.bytes().all(|b| b == b'0') {
                return fail(pos, "denominator must be positive");
            }
            text.push('/');
            text.push_str(&denom);
        }
        Ok(Rational::from_str(&text).expect("digits form a valid rational"))
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let position = self.position();
        if self.peek() != Some('x') {
            return fail(position, "expected a variable such as x1");
        }
        self.bump();
        let index_pos = self.position();
        let index: usize = self.small_number()?;
        if index == 0 {
            return fail(index_pos, "variable indices start at 1");
        }
        let exponent = if self.peek() == Some('^') {
            self.bump();
            self.small_number()?
        } else {
            1
        };
        Ok(Factor {
            index,
            exponent,
            position,
        })
    }

    fn term(&mut self, negative: bool) -> Result<TermExpr, ParseError> {
        let start = self.position();
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.coefficient()?),
            _ => None,
        };
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some('*') => {
                    if coeff.is_none() && factors.is_empty() {
                        return fail(self.position(), "unexpected '*'");
                    }
                    self.bump();
                    factors.push(self.factor()?);
                }
                Some('x') => factors.push(self.factor()?),
                _ => break,
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return fail(start, "expected a term");
        }
        Ok(TermExpr {
            negative,
            coeff,
            factors,
        })
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let negative = self.sign().unwrap_or(false);
        let mut terms = vec![self.term(negative)?];
        while self.peek().is_some() {
            let Some(negative) = self.sign() else {
                return fail(self.position(), "expected '+' or '-'");
            };
            terms.push(self.term(negative)?);
        }
        Ok(PolyExpr { terms })
    }
}

impl PolyExpr {
    pub fn parse(text: &str) -> Result<PolyExpr, ParseError> {
        Parser::new(text).expr()
    }

    /// Combines like terms in `n` variables.
    pub fn evaluate(&self, n: usize) -> Result<Polynomial, ParseError> {
        let mut p = Polynomial::zero(n);
        for term in &self.terms {
            let mut exps = vec![0u32; n];
            for f in &term.factors {
                if f.index > n {
                    return fail(
                        f.position,
                        format!("variable x{} out of range for n = {n}", f.index),
                    );
                }
                let e = &mut exps[f.index - 1];
                *e = e
                    .checked_add(f.exponent)
                    .map_or_else(|| fail(f.position, "exponent too large"), Ok)?;
            }
            let mut c = term.coeff.clone().unwrap_or_else(|| Rational::from_integer(1.into()));
            if term.negative {
                c = -c;
            }
            if !c.is_zero() {
                p.add_term(ExponentVector::new(exps).expect("n is positive"), c);
            }
        }
        Ok(p)
    }
}

pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial, ParseError> {
    PolyExpr::parse(text)?.evaluate(n)
}

fn comma_list(text: &str) -> Result<Vec<u32>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        match trimmed.parse() {
            Ok(v) => out.push(v),
            Err(_) => {
                return fail(offset + lead, format!("expected a nonnegative integer, found {trimmed:?}"))
            }
        }
        offset += piece.chars().count() + 1;
    }
    Ok(out)
}

/// Comma-separated entries, padded with zeros to length `n`.
pub fn parse_vector(text: &str, n: usize) -> Result<ExponentVector, ParseError> {
    let entries = comma_list(text)?;
    if entries.len() > n {
        return fail(0, format!("{} entries given for n = {n}", entries.len()));
    }
    ExponentVector::padded(&entries, n).or_else(|e| fail(0, e.to_string()))
}

/// Comma-separated positive parts; an empty string or `0` is the empty
/// composition.
pub fn parse_composition(text: &str) -> Result<Composition, ParseError> {
    let t = text.trim();
    if t.is_empty() || t == "0" {
        return Ok(Composition::empty());
    }
    let parts = comma_list(text)?;
    if let Some(i) = parts.iter().position(|&p| p == 0) {
        return fail(0, format!("part {} of the composition is zero", i + 1));
    }
    Ok(Composition::new(parts).expect("parts are positive"))
}
