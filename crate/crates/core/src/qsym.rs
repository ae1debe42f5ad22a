//! Monomial and fundamental quasi-symmetric polynomials.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::One;

use crate::combinat::{
    canonical_descent_word, composition_from_subset, refinements, shuffles, word_descent_set,
    Composition, ExponentVector,
};
use crate::error::{domain, Result};
use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QsymKind {
    Monomial,
    Fundamental,
}

/// `M_α` or `F_α` in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QsymElement {
    pub kind: QsymKind,
    pub index: Composition,
    pub n: usize,
}

impl QsymElement {
    pub fn expand(&self) -> Polynomial {
        match self.kind {
            QsymKind::Monomial => monomial_qsym(&self.index, self.n),
            QsymKind::Fundamental => fundamental_qsym(&self.index, self.n),
        }
    }
}

/// `M_α = Σ_{c(ν) = α} X^ν`; zero when `α` has more than `n` parts.
pub fn monomial_qsym(alpha: &Composition, n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for positions in (0..n).combinations(alpha.len()) {
        let mut e = vec![0; n];
        for (&pos, &part) in positions.iter().zip(alpha.parts()) {
            e[pos] = part;
        }
        p.add_term(ExponentVector::new(e).expect("n >= 1"), Rational::one());
    }
    p
}

/// `F_α = Σ_{β ⪰ α} M_β`.
pub fn fundamental_qsym(alpha: &Composition, n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for beta in refinements(alpha) {
        if beta.len() <= n {
            p.add_scaled(&Rational::one(), &monomial_qsym(&beta, n));
        }
    }
    p
}

/// `F_α F_β` written in the fundamental basis, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleProduct {
    pub n: usize,
    pub terms: BTreeMap<Composition, u64>,
}

impl ShuffleProduct {
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Σ mult · F_γ` in `n` variables.
    pub fn expand(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (gamma, &m) in &self.terms {
            p.add_scaled(&Rational::from_integer(m.into()), &fundamental_qsym(gamma, self.n));
        }
        p
    }
}

/// Product of fundamentals from any pair of words whose descent sets encode
/// the two factors: `u` a permutation of `1..=|u|` and `v` one of the next
/// `|v|` integers.
pub fn shuffle_compositions(u: &[u32], v: &[u32]) -> Result<BTreeMap<Composition, u64>> {
    let d = (u.len() + v.len()) as u32;
    let mut terms = BTreeMap::new();
    for w in shuffles(u, v)? {
        let gamma = composition_from_subset(&word_descent_set(&w), d)?;
        *terms.entry(gamma).or_insert(0) += 1;
    }
    Ok(terms)
}

/// `F_α F_β = Σ_{w ∈ u ⧢ v} F_{α(D(w))}` with the canonical descent words.
pub fn f_product(alpha: &Composition, beta: &Composition, n: usize) -> ShuffleProduct {
    let u = canonical_descent_word(alpha, 0);
    let v = canonical_descent_word(beta, alpha.size());
    let terms = shuffle_compositions(&u, &v).expect("canonical words use disjoint letters");
    ShuffleProduct { n, terms }
}

/// Coefficients depend only on the zero erasure of the exponent vector.
pub fn is_quasisymmetric(p: &Polynomial) -> bool {
    let mut classes: HashMap<Composition, (&Rational, usize)> = HashMap::new();
    for (nu, c) in p.terms() {
        let entry = classes.entry(nu.compose()).or_insert((c, 0));
        if entry.0 != c {
            return false;
        }
        entry.1 += 1;
    }
    // every vector of a touched class must be present
    classes.iter().all(|(alpha, &(_, count))| {
        count as u64 == binomial_u64(p.n() as u64, alpha.len() as u64)
    })
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The substitution `x_i ↦ x_{n-i+1}`.
pub fn reverse_variables(p: &Polynomial) -> Polynomial {
    p.map_vectors(p.n(), ExponentVector::reversed)
}

/// Splits `F_α = x_1 A + B` following the first-part recursion:
/// `B = F_α(x_2..x_n)`, and `A = F_{(α_1-1, α_2, ...)}(x_1..x_n)` when
/// `α_1 > 1`, `A = F_{(α_2, ...)}(x_2..x_n)` when `α_1 = 1`.
pub fn frel_decompose(alpha: &Composition, n: usize) -> Result<(Polynomial, Polynomial)> {
    let Some((&first, rest)) = alpha.parts().split_first() else {
        return domain("the recursion needs a nonempty composition");
    };
    if n < 2 {
        return domain("the recursion needs at least two variables");
    }
    let tail_vars = |c: &Composition| fundamental_qsym(c, n - 1).shift_variables(n, 1);
    let a = if first > 1 {
        let mut parts = alpha.parts().to_vec();
        parts[0] -= 1;
        fundamental_qsym(&Composition::new(parts)?, n)
    } else {
        tail_vars(&Composition::new(rest.to_vec())?)?
    };
    let b = tail_vars(alpha)?;
    Ok((a, b))
}
