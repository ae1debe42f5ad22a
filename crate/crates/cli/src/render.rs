//! Text output in the same grammar the parser reads.

use std::fmt::Write as _;

use num_traits::{One, Signed};
use qsymq::{ExponentVector, Polynomial};

/// `x1*x3^2`, or `1` for the constant monomial.
pub fn render_monomial(nu: &ExponentVector) -> String {
    let mut out = String::new();
    for (i, &e) in nu.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        write!(out, "x{}", i + 1).unwrap();
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Terms in descending graded lex order; unit coefficients are omitted.
pub fn render_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (nu, c)) in p.terms().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (i, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            _ => write!(out, " {sign} ").unwrap(),
        }
        let abs = c.abs();
        if nu.is_zero() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&render_monomial(nu));
        } else {
            write!(out, "{abs}*{}", render_monomial(nu)).unwrap();
        }
    }
    out
}

/// Comma form accepted by `--vector`.
pub fn render_vector(nu: &ExponentVector) -> String {
    nu.entries()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `1+5t+14t^2`.
pub fn render_series<T: ToString>(coefficients: &[T]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coefficients.iter().enumerate() {
        let c = c.to_string();
        if c == "0" {
            continue;
        }
        let unit = c == "1";
        parts.push(match k {
            0 => c,
            1 if unit => "t".to_string(),
            1 => format!("{c}t"),
            _ if unit => format!("t^{k}"),
            _ => format!("{c}t^{k}"),
        });
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    parts.join("+")
}

/// The lattice path of `ν`: from the origin, `ν_i` east steps and then one
/// north step for each `i`. Rows run from `y = n` down to `0` and columns
/// from `x = 0` to `max(|ν|, n)`. Path points are `o`, the remaining
/// diagonal points `.`.
pub fn render_path(nu: &ExponentVector) -> String {
    let n = nu.n();
    let width = (nu.size() as usize).max(n);
    let mut grid = vec![vec![' '; width + 1]; n + 1];
    for (i, row) in grid.iter_mut().enumerate() {
        if i <= width {
            row[i] = '.';
        }
    }
    let (mut x, mut y) = (0usize, 0usize);
    grid[0][0] = 'o';
    for &e in nu.entries() {
        for _ in 0..e {
            x += 1;
            grid[y][x] = 'o';
        }
        y += 1;
        grid[y][x] = 'o';
    }
    let rows: Vec<String> = grid
        .iter()
        .rev()
        .map(|r| r.iter().collect::<String>().trim_end().to_string())
        .collect();
    rows.join("\n")
}
