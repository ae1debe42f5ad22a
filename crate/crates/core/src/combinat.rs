//! Compositions, exponent vectors and the lattice-path combinatorics around
//! them: Dyck/transdiagonal classification, Catalan and ballot counting,
//! Dyck words, descent words and shuffles.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::limits::{self, Limits};

/// An ordered list of positive parts. The empty composition indexes `M_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("composition parts must be positive, got {parts:?}"));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// All compositions of `d`, ordered by length and then lexicographically.
    pub fn all_of_size(d: u32) -> Vec<Composition> {
        if d == 0 {
            return vec![Composition::empty()];
        }
        let free: Vec<u32> = (1..d).collect();
        let mut out: Vec<Composition> = (0u64..1 << free.len())
            .map(|mask| {
                let subset: BTreeSet<u32> = free
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                from_subset_unchecked(&subset, d)
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A vector of `n` non-negative integers: a monomial key `X^ν` and a
/// north/east lattice path at the same time.
///
/// The `Ord` instance is the graded lex order: total degree first, then the
/// first nonzero entry of the difference decides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return domain("exponent vectors need at least one entry");
        }
        Ok(ExponentVector(entries))
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "exponent vectors need at least one entry");
        ExponentVector(vec![0; n])
    }

    /// The vector of `x_i`, with `i` counted from 1.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable index {i} outside 1..={n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        ExponentVector(e)
    }

    /// Pads `word` with zeros up to length `n` (the `w0^*` notation).
    pub fn padded(word: &[u32], n: usize) -> Result<Self> {
        if word.len() > n {
            return domain(format!("word of length {} does not fit in {n} entries", word.len()));
        }
        let mut e = word.to_vec();
        e.resize(n, 0);
        ExponentVector::new(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 1-based position of the last nonzero entry, 0 for the zero vector.
    pub fn last_nonzero(&self) -> usize {
        self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    /// Zero erasure `c(ν)`.
    pub fn compose(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&e| e != 0).collect())
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.n(), other.n(), "exponent vectors of different lengths");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn reversed(&self) -> ExponentVector {
        ExponentVector(self.0.iter().rev().copied().collect())
    }

    /// `[ν_1, ν_1+ν_2, ..., |ν|]`.
    pub fn partial_sums(&self) -> Vec<u32> {
        self.0
            .iter()
            .scan(0, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }

    pub fn classify(&self) -> PathClass {
        classify(self)
    }

    pub fn is_dyck(&self) -> bool {
        classify(self) == PathClass::Dyck
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    Dyck,
    Transdiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck word of length `2n`: `n` rising and `n` falling steps, never
/// dipping below the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord(Vec<Step>);

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return domain(format!("Dyck word dips below the axis at step {}", i + 1));
            }
        }
        if height != 0 {
            return domain("Dyck word must have as many falls as rises");
        }
        Ok(DyckWord(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Semi-length `n`.
    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn trailing_falls(&self) -> usize {
        self.0.iter().rev().take_while(|&&s| s == Step::Down).count()
    }

    /// Number of factors, i.e. returns to the axis after the start.
    pub fn factors(&self) -> usize {
        let mut height = 0i64;
        let mut returns = 0;
        for s in &self.0 {
            height += if *s == Step::Up { 1 } else { -1 };
            if height == 0 {
                returns += 1;
            }
        }
        returns
    }

    /// Every Dyck word of semi-length `n`.
    pub fn all(n: usize) -> Result<Vec<DyckWord>> {
        limits::check("n", n, Limits::current().enumeration_max_n)?;
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(2 * n);
        fn go(n: usize, ups: usize, downs: usize, buf: &mut Vec<Step>, out: &mut Vec<DyckWord>) {
            if downs == n {
                out.push(DyckWord(buf.clone()));
                return;
            }
            if ups < n {
                buf.push(Step::Up);
                go(n, ups + 1, downs, buf, out);
                buf.pop();
            }
            if downs < ups {
                buf.push(Step::Down);
                go(n, ups, downs + 1, buf, out);
                buf.pop();
            }
        }
        go(n, 0, 0, &mut buf, &mut out);
        Ok(out)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

fn from_subset_unchecked(s: &BTreeSet<u32>, d: u32) -> Composition {
    if d == 0 {
        return Composition::empty();
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &a in s.iter().chain(std::iter::once(&d)) {
        parts.push(a - prev);
        prev = a;
    }
    Composition(parts)
}

/// `α_d(S)`: consecutive differences of `0 < s_1 < ... < s_k < d`.
pub fn composition_from_subset(s: &BTreeSet<u32>, d: u32) -> Result<Composition> {
    if let Some(bad) = s.iter().find(|&&a| a == 0 || a >= d) {
        return domain(format!("subset element {bad} outside [1, {}]", d.saturating_sub(1)));
    }
    Ok(from_subset_unchecked(s, d))
}

/// Partial sums of `α`, excluding the total.
pub fn descent_set(alpha: &Composition) -> BTreeSet<u32> {
    let mut acc = 0;
    let mut out = BTreeSet::new();
    if let Some((_, init)) = alpha.0.split_last() {
        for p in init {
            acc += p;
            out.insert(acc);
        }
    }
    out
}

/// `β ⪰ α`: same size and `D(α) ⊆ D(β)`.
pub fn refines(beta: &Composition, alpha: &Composition) -> bool {
    beta.size() == alpha.size() && descent_set(alpha).is_subset(&descent_set(beta))
}

/// All refinements of `α` (including `α` itself), coarsest first.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let d = alpha.size();
    let base = descent_set(alpha);
    let free: Vec<u32> = (1..d).filter(|i| !base.contains(i)).collect();
    let mut out: Vec<Composition> = (0u64..1 << free.len())
        .map(|mask| {
            let mut s = base.clone();
            s.extend(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &f)| f),
            );
            from_subset_unchecked(&s, d)
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    out
}

/// Dyck iff `ν_1 + ... + ν_ℓ ≤ ℓ - 1` for every `ℓ`.
pub fn classify(nu: &ExponentVector) -> PathClass {
    let crosses = nu
        .partial_sums()
        .iter()
        .enumerate()
        .any(|(i, &s)| s as usize > i);
    if crosses {
        PathClass::Transdiagonal
    } else {
        PathClass::Dyck
    }
}

/// Every vector of length `n` and size `d`, in ascending lex order.
pub fn vectors_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut buf = vec![0u32; n];
    fn go(pos: usize, rem: u32, buf: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if pos + 1 == buf.len() {
            buf[pos] = rem;
            out.push(ExponentVector(buf.clone()));
            return;
        }
        // Ascending lex: smaller leading entries first.
        for e in 0..=rem {
            buf[pos] = e;
            go(pos + 1, rem - e, buf, out);
        }
    }
    if n > 0 {
        go(0, d, &mut buf, &mut out);
    }
    out
}

fn dyck_of_degree(n: usize, k: u32, out: &mut Vec<ExponentVector>) {
    let mut buf = vec![0u32; n];
    fn go(pos: usize, sum: u32, k: u32, buf: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        let n = buf.len();
        if pos == n {
            if sum == k {
                out.push(ExponentVector(buf.clone()));
            }
            return;
        }
        // prefix through 1-based position pos+1 may reach at most pos
        let cap = (pos as u32).min(k) - sum;
        for e in 0..=cap {
            buf[pos] = e;
            go(pos + 1, sum + e, k, buf, out);
        }
        buf[pos] = 0;
    }
    if (k as usize) < n {
        go(0, 0, k, &mut buf, out);
    }
}

/// All Dyck vectors of length `n`, optionally only those of size `k`, in
/// ascending graded lex order.
pub fn enumerate_dyck(n: usize, k: Option<u32>) -> Result<Vec<ExponentVector>> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    limits::check("n", n, Limits::current().enumeration_max_n)?;
    let mut out = Vec::new();
    match k {
        Some(k) => dyck_of_degree(n, k, &mut out),
        None => {
            for k in 0..n as u32 {
                dyck_of_degree(n, k, &mut out);
            }
        }
    }
    Ok(out)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Result<BigUint> {
    limits::check("n", n, Limits::current().counting_max_n)?;
    let n = n as u64;
    Ok(binomial(2 * n, n) / (n + 1))
}

/// Dimension of the degree-`k` piece: `(n-k)/(n+k) binom(n+k, k)` below `n`,
/// zero from degree `n` on.
pub fn ballot(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    limits::check("n", n, Limits::current().counting_max_n)?;
    if k >= n {
        return Ok(BigUint::zero());
    }
    let (n, k) = (n as u64, k as u64);
    Ok(binomial(n + k, k) * (n - k) / (n + k))
}

/// `k (2n-k-1)! / (n! (n-k)!)`: Dyck paths of length `2n` ending with exactly
/// `k` falls.
pub fn dn_k(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return domain(format!("k = {k} outside [1, {n}]"));
    }
    limits::check("n", n, Limits::current().counting_max_n)?;
    let (n, k) = (n as u64, k as u64);
    Ok(factorial(2 * n - k - 1) * k / (factorial(n) * factorial(n - k)))
}

/// `D^{η_1} U D^{η_2} U ... D^{η_n} U D^{n-|η|}`.
pub fn vector_to_dyck_word(eta: &ExponentVector) -> Result<DyckWord> {
    if !eta.is_dyck() {
        return domain(format!("{eta} is not a Dyck vector"));
    }
    let n = eta.n();
    let mut steps = Vec::with_capacity(2 * n);
    for &e in eta.entries() {
        steps.extend(std::iter::repeat_n(Step::Down, e as usize));
        steps.push(Step::Up);
    }
    steps.extend(std::iter::repeat_n(Step::Down, n - eta.size() as usize));
    DyckWord::new(steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStatRow {
    pub k: usize,
    /// Words ending with exactly `k` falling steps.
    pub trailing_falls: u64,
    /// Words with exactly `k` factors.
    pub factors: u64,
}

/// Tabulates both statistics over every Dyck word of semi-length `n`.
pub fn path_statistics(n: usize) -> Result<Vec<PathStatRow>> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    let words = DyckWord::all(n)?;
    let mut rows: Vec<PathStatRow> = (1..=n)
        .map(|k| PathStatRow {
            k,
            trailing_falls: 0,
            factors: 0,
        })
        .collect();
    for w in &words {
        rows[w.trailing_falls() - 1].trailing_falls += 1;
        rows[w.factors() - 1].factors += 1;
    }
    Ok(rows)
}

/// A permutation word of `{offset+1, ..., offset+|α|}` whose descent set is
/// exactly `D(α)`: later runs take the smaller values, each run increasing.
pub fn canonical_descent_word(alpha: &Composition, offset: u32) -> Vec<u32> {
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(alpha.len());
    let mut next = offset + 1;
    for &p in alpha.parts().iter().rev() {
        blocks.push((next..next + p).collect());
        next += p;
    }
    blocks.into_iter().rev().flatten().collect()
}

/// 1-based positions `i` with `w_i > w_{i+1}`.
pub fn word_descent_set(w: &[u32]) -> BTreeSet<u32> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// All interleavings of `u` and `v` keeping each word's internal order.
pub fn shuffles(u: &[u32], v: &[u32]) -> Result<Vec<Vec<u32>>> {
    let left: BTreeSet<u32> = u.iter().copied().collect();
    if let Some(x) = v.iter().find(|x| left.contains(x)) {
        return domain(format!("shuffled words share the letter {x}"));
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn go(u: &[u32], v: &[u32], buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if u.is_empty() && v.is_empty() {
            out.push(buf.clone());
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            buf.push(a);
            go(rest, v, buf, out);
            buf.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            buf.push(b);
            go(u, rest, buf, out);
            buf.pop();
        }
    }
    go(u, v, &mut buf, &mut out);
    Ok(out)
}
