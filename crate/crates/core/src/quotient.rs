//! The `G` family spanning the quasi-symmetric ideal `J_n`, the rules for
//! multiplying its members by a variable, and reduction of polynomials onto
//! the Dyck monomials.
//!
//! Every transdiagonal vector `ε` indexes one `G_ε ∈ J_n` whose leading
//! monomial is `X^ε` with coefficient 1. Writing `ε = w 0 a β 0^*` with the
//! zero at position `k` (the last zero before the last nonzero entry), the
//! family satisfies
//!
//! ```text
//! G_{α 0^*}      = F_α
//! G_{w 0 a β 0^*} = G_{w a β 0^*} - x_k G_{w (a-1) β 0^*}
//! ```

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::combinat::{vectors_of_degree, Composition, ExponentVector, PathClass};
use crate::error::{domain, Result};
use crate::poly::{Polynomial, Rational};
use crate::qsym::fundamental_qsym;

/// `ε = w 0 a β 0^*` with the pivotal zero at 1-based position `pivot`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsFactorization {
    pub prefix: Vec<u32>,
    pub pivot: usize,
    pub a: u32,
    pub tail: Composition,
    pub n: usize,
}

impl EpsFactorization {
    pub fn reassemble(&self) -> ExponentVector {
        let mut e = self.prefix.clone();
        e.push(0);
        e.push(self.a);
        e.extend_from_slice(self.tail.parts());
        ExponentVector::padded(&e, self.n).expect("factorization fits in n entries")
    }

    /// `(w a β 0^*, w (a-1) β 0^*)`.
    pub fn children(&self) -> (ExponentVector, ExponentVector) {
        let build = |a: u32| {
            let mut e = self.prefix.clone();
            e.push(a);
            e.extend_from_slice(self.tail.parts());
            ExponentVector::padded(&e, self.n).expect("children are shorter than the parent")
        };
        (build(self.a), build(self.a - 1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factorization {
    /// `ε = α 0^*`: no zero before the last nonzero entry.
    Base(Composition),
    Split(EpsFactorization),
}

pub fn factorize(eps: &ExponentVector) -> Result<Factorization> {
    if eps.is_zero() {
        return domain("the zero vector has no factorization");
    }
    let len = eps.last_nonzero();
    let e = eps.entries();
    match e[..len].iter().rposition(|&x| x == 0) {
        None => Ok(Factorization::Base(eps.compose())),
        Some(zero) => Ok(Factorization::Split(EpsFactorization {
            prefix: e[..zero].to_vec(),
            pivot: zero + 1,
            a: e[zero + 1],
            tail: Composition::new(e[zero + 2..len].to_vec())?,
            n: eps.n(),
        })),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GElement {
    pub index: ExponentVector,
    pub expansion: Arc<Polynomial>,
}

/// The `G` family in a fixed number of variables, memoized.
///
/// The memo is shared behind a lock: lookups take a read lock, and a freshly
/// computed expansion is published with a single insert, so readers only
/// ever see complete entries.
#[derive(Debug)]
pub struct GFamily {
    n: usize,
    cap: Option<usize>,
    memo: RwLock<HashMap<ExponentVector, Arc<Polynomial>>>,
}

impl GFamily {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the G family needs at least one variable");
        GFamily {
            n,
            cap: None,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Stops memoizing once `cap` entries are stored (0 disables the memo).
    pub fn with_memo_cap(n: usize, cap: usize) -> Self {
        GFamily {
            cap: Some(cap),
            ..GFamily::new(n)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    fn check_n(&self, what: &str, n: usize) -> Result<()> {
        if n != self.n {
            return domain(format!("{what} has {n} variables, expected {}", self.n));
        }
        Ok(())
    }

    pub fn g_element(&self, eps: &ExponentVector) -> Result<GElement> {
        self.check_n("index", eps.n())?;
        if eps.classify() == PathClass::Dyck {
            return domain(format!("{eps} is a Dyck vector, G is indexed by transdiagonal ones"));
        }
        Ok(GElement {
            index: eps.clone(),
            expansion: self.expansion(eps),
        })
    }

    fn expansion(&self, eps: &ExponentVector) -> Arc<Polynomial> {
        if let Some(p) = self.memo.read().unwrap().get(eps) {
            return Arc::clone(p);
        }
        let p = match factorize(eps).expect("transdiagonal vectors are nonzero") {
            Factorization::Base(alpha) => fundamental_qsym(&alpha, self.n),
            Factorization::Split(f) => {
                let (upper, lower) = f.children();
                assert!(
                    upper.classify() == PathClass::Transdiagonal
                        && lower.classify() == PathClass::Transdiagonal,
                    "children of {eps} left the transdiagonal set"
                );
                let mut g = (*self.expansion(&upper)).clone();
                g.add_scaled(
                    &-Rational::one(),
                    &self.expansion(&lower).mul_variable(f.pivot),
                );
                g
            }
        };
        assert_eq!(
            p.homogeneous_degree(),
            Some(eps.size()),
            "G_{eps} is not homogeneous of degree |ε|"
        );
        let p = Arc::new(p);
        let mut memo = self.memo.write().unwrap();
        if self.cap.is_some_and(|cap| memo.len() >= cap) && !memo.contains_key(eps) {
            return p;
        }
        match memo.entry(eps.clone()) {
            Entry::Occupied(o) => Arc::clone(o.get()),
            Entry::Vacant(v) => Arc::clone(v.insert(p)),
        }
    }

    /// Division by the `G` family: always cancels the graded-lex-greatest
    /// transdiagonal monomial. Homogeneous components never interact, so
    /// this is the same as reducing each component on its own.
    pub fn normal_form(&self, p: &Polynomial) -> Result<ReductionResult> {
        self.check_n("polynomial", p.n())?;
        let mut work = p.clone();
        let mut remainder = Polynomial::zero(self.n);
        let mut certificate = Vec::new();
        while let Ok((eps, c)) = work.leading_term() {
            if eps.is_dyck() {
                let (eps, c) = work.pop_leading().expect("nonzero");
                remainder.add_term(eps, c);
                continue;
            }
            let g = self.expansion(&eps);
            work.add_scaled(&-c.clone(), &g);
            debug_assert!(work.coefficient(&eps).is_zero());
            certificate.push((c, eps));
        }
        Ok(ReductionResult {
            remainder,
            certificate,
        })
    }

    pub fn is_member(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.remainder.is_zero())
    }

    /// Coordinates on the Dyck monomial basis of the quotient.
    pub fn coordinates(&self, p: &Polynomial) -> Result<BTreeMap<ExponentVector, Rational>> {
        Ok(self
            .normal_form(p)?
            .remainder
            .terms()
            .map(|(nu, c)| (nu.clone(), c.clone()))
            .collect())
    }
}

/// Remainder supported on Dyck monomials plus the multipliers of the `G`
/// elements that were subtracted, in elimination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub remainder: Polynomial,
    pub certificate: Vec<(Rational, ExponentVector)>,
}

impl ReductionResult {
    /// `remainder + Σ c_i G_{ε_i}`.
    pub fn reconstruct(&self, family: &GFamily) -> Result<Polynomial> {
        let mut p = self.remainder.clone();
        for (c, eps) in &self.certificate {
            p.add_scaled(c, &family.g_element(eps)?.expansion);
        }
        Ok(p)
    }

    /// Checks the certificate identity and the Dyck support of the remainder.
    pub fn verify(&self, family: &GFamily, input: &Polynomial) -> Result<bool> {
        Ok(self.remainder.support().all(ExponentVector::is_dyck)
            && self.reconstruct(family)? == *input)
    }
}

/// `x_k G_φ = G_{φ⁺} - G_{φ⁻}` where `φ⁺ = φ + e_k` and `φ⁻` inserts a zero
/// at position `k` and raises the next entry by one.
///
/// Requires the entries of `φ` strictly after `k` up to its last nonzero one
/// to be positive, and `φ⁻` to fit in `n` entries.
pub fn rewrite_times_variable(
    k: usize,
    phi: &ExponentVector,
) -> Result<(ExponentVector, ExponentVector)> {
    let n = phi.n();
    if !(1..=n).contains(&k) {
        return domain(format!("variable index {k} outside 1..={n}"));
    }
    if phi.classify() != PathClass::Transdiagonal {
        return domain(format!("{phi} is not transdiagonal"));
    }
    let len = phi.last_nonzero();
    let e = phi.entries();
    if len > k && e[k..len].contains(&0) {
        return domain(format!(
            "{phi} has a zero between position {k} and its last nonzero entry"
        ));
    }
    if len.max(k) + 1 > n {
        return domain(format!("x_{k} G_{phi} needs more than {n} variables"));
    }
    let mut plus = e.to_vec();
    plus[k - 1] += 1;
    let mut minus = Vec::with_capacity(n);
    minus.extend_from_slice(&e[..k - 1]);
    minus.push(0);
    minus.push(e[k - 1] + 1);
    minus.extend_from_slice(&e[k..n - 1]);
    Ok((ExponentVector::new(plus)?, ExponentVector::new(minus)?))
}

/// Transdiagonal vectors of length `n` and size `1..=dmax`, ascending graded
/// lex.
pub fn enumerate_transdiagonal(n: usize, dmax: u32) -> Vec<ExponentVector> {
    (1..=dmax)
        .flat_map(|d| vectors_of_degree(n, d))
        .filter(|v| !v.is_dyck())
        .collect()
}
