use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use qsymq::combinat::{descent_set, refinements, word_descent_set, Composition};
use qsymq::qsym::{
    f_product, frel_decompose, fundamental_qsym, is_quasisymmetric, monomial_qsym,
    reverse_variables, shuffle_compositions,
};
use qsymq::{Polynomial, Rational};

fn compositions_up_to(d: u32) -> Vec<Composition> {
    (0..=d).flat_map(Composition::all_of_size).collect()
}

#[test]
fn moebius_inversion_round_trip() {
    let n = 8;
    for alpha in compositions_up_to(6) {
        let mut p = Polynomial::zero(n);
        for beta in refinements(&alpha) {
            let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
            p.add_scaled(
                &Rational::from_integer(BigInt::from(sign)),
                &fundamental_qsym(&beta, n),
            );
        }
        assert_eq!(p, monomial_qsym(&alpha, n), "{alpha}");
    }
}

#[test]
fn quasisymmetric_bases_are_quasisymmetric() {
    for n in 1..=5 {
        for alpha in compositions_up_to(5) {
            let m = monomial_qsym(&alpha, n);
            assert_eq!(m.is_zero(), alpha.len() > n);
            assert!(is_quasisymmetric(&m));
            let f = fundamental_qsym(&alpha, n);
            assert_eq!(f.is_zero(), alpha.len() > n);
            assert!(is_quasisymmetric(&f));
        }
    }
}

#[test]
fn monomial_term_counts() {
    for n in 1..=6usize {
        for alpha in compositions_up_to(4) {
            let expected = (0..n).combinations(alpha.len()).count();
            assert_eq!(monomial_qsym(&alpha, n).len(), expected);
        }
    }
}

#[test]
fn shuffle_product_matches_polynomial_product() {
    for total in 0..=6u32 {
        for left in 0..=total {
            for alpha in Composition::all_of_size(left) {
                for beta in Composition::all_of_size(total - left) {
                    let n = (total as usize).max(1);
                    let prod = f_product(&alpha, &beta, n);
                    let direct = &fundamental_qsym(&alpha, n) * &fundamental_qsym(&beta, n);
                    assert_eq!(prod.expand(), direct, "{alpha} * {beta}");
                    let expected = qsymq::combinat::binomial(total as u64, left as u64);
                    assert_eq!(BigInt::from(prod.total_multiplicity()), BigInt::from(expected));
                }
            }
        }
    }
}

/// Every permutation of `offset+1..=offset+d` with descent set `D(α)`.
fn all_descent_words(alpha: &Composition, offset: u32) -> Vec<Vec<u32>> {
    let d = alpha.size();
    let target = descent_set(alpha);
    (offset + 1..=offset + d)
        .permutations(d as usize)
        .filter(|w| word_descent_set(w) == target)
        .collect()
}

#[test]
fn shuffle_product_ignores_the_choice_of_words() {
    for total in 1..=6u32 {
        for left in 1..total {
            for alpha in Composition::all_of_size(left) {
                for beta in Composition::all_of_size(total - left) {
                    let canonical = f_product(&alpha, &beta, total as usize).terms;
                    let us = all_descent_words(&alpha, 0);
                    let vs = all_descent_words(&beta, left);
                    // every choice when small, the extreme ones otherwise
                    let pick = |ws: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
                        if ws.len() <= 4 {
                            ws.clone()
                        } else {
                            vec![ws[0].clone(), ws[ws.len() - 1].clone()]
                        }
                    };
                    for u in pick(&us) {
                        for v in pick(&vs) {
                            let terms: BTreeMap<Composition, u64> =
                                shuffle_compositions(&u, &v).unwrap();
                            assert_eq!(terms, canonical, "{alpha} * {beta} via {u:?}, {v:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn first_part_recursion_holds() {
    for n in 2..=6 {
        for alpha in compositions_up_to(5).into_iter().filter(|a| !a.is_empty()) {
            let (a, b) = frel_decompose(&alpha, n).unwrap();
            let lhs = fundamental_qsym(&alpha, n);
            assert_eq!(&(&Polynomial::variable(n, 1) * &a) + &b, lhs, "{alpha}, n={n}");
            assert!(b.support().all(|nu| nu.entries()[0] == 0));
        }
    }
}

#[test]
fn reversal_maps_fundamentals_to_reversed_index() {
    for n in 1..=5 {
        for alpha in compositions_up_to(5) {
            let f = fundamental_qsym(&alpha, n);
            assert_eq!(reverse_variables(&f), fundamental_qsym(&alpha.reversed(), n));
        }
    }
}

#[test]
fn reversal_is_an_algebra_map() {
    let n = 4;
    let a = fundamental_qsym(&Composition::new(vec![1, 2]).unwrap(), n);
    let p = &Polynomial::variable(n, 1) * &Polynomial::variable(n, 2);
    let q = &a + &Polynomial::variable(n, 3);
    assert_eq!(
        reverse_variables(&(&p * &q)),
        &reverse_variables(&p) * &reverse_variables(&q)
    );
}

#[test]
fn quasisymmetric_span_detected() {
    let n = 4;
    let mut p = Polynomial::zero(n);
    for (i, alpha) in compositions_up_to(3).iter().enumerate() {
        p.add_scaled(
            &Rational::from_integer(BigInt::from(i as i64 - 3)),
            &fundamental_qsym(alpha, n),
        );
    }
    assert!(is_quasisymmetric(&p));
    let bumped = &p + &Polynomial::variable(n, 2);
    assert!(!is_quasisymmetric(&bumped));
}
