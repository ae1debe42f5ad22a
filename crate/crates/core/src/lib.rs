//! Exact computations in `R_n = Q[x_1..x_n] / J_n`, where `J_n` is the ideal
//! generated by quasi-symmetric polynomials without constant term.
//!
//! * [`combinat`]: compositions, exponent vectors, Dyck paths and counting.
//! * [`poly`]: sparse polynomials over the rationals in graded lex order.
//! * [`qsym`]: monomial and fundamental quasi-symmetric polynomials.
//! * [`quotient`]: the `G` family and normal forms on the Dyck monomials.
//! * [`oracle`]: independent rank computations and Hilbert series.

pub mod combinat;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod qsym;
pub mod quotient;

pub use combinat::{Composition, DyckWord, ExponentVector, PathClass};
pub use error::{Error, Result};
pub use poly::{Polynomial, Rational};
pub use quotient::{GFamily, ReductionResult};
