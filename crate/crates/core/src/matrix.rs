//! Exact rank computations over the integers.
//!
//! [`Echelon`] keeps an integer row-echelon basis built by fraction-free
//! elimination: a new row is cleared against an existing pivot by
//! cross-multiplication and then divided by its content, so entries stay
//! integral and small. [`IntegerMatrix::rank_bareiss`] is the classic dense
//! Bareiss elimination and serves as an independent second route.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row stored as `(column, value)` pairs, sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl IntegerMatrix {
    pub fn new(cols: usize) -> Self {
        IntegerMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(cols: usize, dense: &[Vec<BigInt>]) -> Self {
        let mut m = IntegerMatrix::new(cols);
        for row in dense {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            m.push_row(
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect(),
            );
        }
        m
    }

    /// Appends a row given as `(column, value)` pairs in any order; repeated
    /// columns are summed.
    pub fn push_row(&mut self, entries: Vec<(usize, BigInt)>) {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (j, v) in entries {
            assert!(j < self.cols, "column {j} out of range");
            *acc.entry(j).or_default() += v;
        }
        self.rows
            .push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.cols];
                for (j, v) in r {
                    d[*j] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn rank_bareiss(&self) -> usize {
        let mut a = self.to_dense();
        let m = a.len();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for i in rank + 1..m {
                let factor = a[i][col].clone();
                for j in col + 1..self.cols {
                    let v = (&pivot * &a[i][j] - &factor * &a[rank][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// An integer row-echelon basis keyed by pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn make_primitive(row: &mut SparseRow) {
    let content = row
        .iter()
        .fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    let negate = row.first().is_some_and(|(_, v)| v.is_negative());
    if content.is_zero() {
        return;
    }
    let content = if negate { -content } else { content };
    if !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &content;
        }
    }
}

/// `a·x - b·y` on sparse rows.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                j += 1;
                (*cy, -(b * vy))
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (*cx, a * vx - b * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, -(b * vy))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Clears leading entries of `row` against pivots until its leading
    /// column has no pivot (or the row vanishes).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        make_primitive(&mut row);
        while let Some((lead, b)) = row.first().cloned() {
            let Some(p) = self.pivots.get(&lead) else {
                break;
            };
            let a = &p[0].1;
            let g = a.gcd(&b);
            row = combine(&(a / &g), &row, &(&b / &g), p);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds `row` to the basis; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}
