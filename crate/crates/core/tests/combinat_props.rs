use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use qsymq::combinat::{
    ballot, canonical_descent_word, catalan, composition_from_subset, descent_set, dn_k,
    enumerate_dyck, path_statistics, shuffles, vector_to_dyck_word, vectors_of_degree,
    word_descent_set, Composition, DyckWord, PathClass,
};
use qsymq::ExponentVector;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

// Stated directly on partial sums, independent of `classify`.
fn dyck_predicate(v: &ExponentVector) -> bool {
    let mut s = 0;
    v.entries().iter().enumerate().all(|(i, &e)| {
        s += e;
        s as usize <= i
    })
}

fn transdiagonal_predicate(v: &ExponentVector) -> bool {
    let mut s = 0;
    v.entries().iter().enumerate().any(|(i, &e)| {
        s += e;
        s as usize > i
    })
}

#[test]
fn subsets_and_compositions_are_in_bijection() {
    for d in 0..=12u32 {
        let free: Vec<u32> = (1..d).collect();
        let mut seen = HashSet::new();
        for mask in 0u32..1 << free.len() {
            let s: BTreeSet<u32> = free
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let alpha = composition_from_subset(&s, d).unwrap();
            assert_eq!(alpha.size(), d);
            assert_eq!(descent_set(&alpha), s);
            seen.insert(alpha);
        }
        let all = Composition::all_of_size(d);
        assert_eq!(seen.len(), all.len());
        assert!(all.iter().all(|a| seen.contains(a)));
    }
}

#[test]
fn dyck_and_transdiagonal_partition_vectors() {
    for n in 1..=8 {
        for d in 0..=(n as u32 + 1) {
            for v in vectors_of_degree(n, d) {
                let dyck = dyck_predicate(&v);
                let trans = transdiagonal_predicate(&v);
                assert!(dyck ^ trans, "{v} is in both or neither class");
                let expected = if dyck {
                    PathClass::Dyck
                } else {
                    PathClass::Transdiagonal
                };
                assert_eq!(v.classify(), expected);
            }
        }
    }
}

#[test]
fn dyck_counts_match_catalan_and_ballot() {
    for n in 1..=12 {
        let all = enumerate_dyck(n, None).unwrap();
        assert_eq!(big(all.len() as u64), catalan(n).unwrap(), "n = {n}");
        assert!(all.iter().all(|v| (v.size() as usize) < n));
        for k in 0..=n {
            let count = enumerate_dyck(n, Some(k as u32)).unwrap().len();
            assert_eq!(big(count as u64), ballot(n, k).unwrap(), "n = {n}, k = {k}");
        }
    }
    assert_eq!(catalan(12).unwrap(), big(208012));
}

#[test]
fn dyck_enumeration_agrees_with_brute_force_filter() {
    for n in 1..=7 {
        for k in 0..n as u32 {
            let brute: Vec<ExponentVector> = vectors_of_degree(n, k)
                .into_iter()
                .filter(dyck_predicate)
                .collect();
            assert_eq!(enumerate_dyck(n, Some(k)).unwrap(), brute);
        }
    }
}

#[test]
fn path_statistics_match_closed_form() {
    for n in 1..=10 {
        let rows = path_statistics(n).unwrap();
        let total: u64 = rows.iter().map(|r| r.trailing_falls).sum();
        assert_eq!(big(total), catalan(n).unwrap());
        let total: u64 = rows.iter().map(|r| r.factors).sum();
        assert_eq!(big(total), catalan(n).unwrap());
        for r in rows {
            let expected = dn_k(n, r.k).unwrap();
            assert_eq!(big(r.trailing_falls), expected, "falls n={n} k={}", r.k);
            assert_eq!(big(r.factors), expected, "factors n={n} k={}", r.k);
            assert_eq!(expected, ballot(n, n - r.k).unwrap());
        }
    }
    for n in 11..=12 {
        let rows = path_statistics(n).unwrap();
        let total: u64 = rows.iter().map(|r| r.factors).sum();
        assert_eq!(big(total), catalan(n).unwrap());
    }
}

#[test]
fn dyck_vectors_encode_all_dyck_words() {
    for n in 1..=8 {
        let words: HashSet<DyckWord> = DyckWord::all(n).unwrap().into_iter().collect();
        let encoded: HashSet<DyckWord> = enumerate_dyck(n, None)
            .unwrap()
            .iter()
            .map(|eta| {
                let w = vector_to_dyck_word(eta).unwrap();
                assert_eq!(w.semilength(), n);
                assert_eq!(w.trailing_falls(), n - eta.size() as usize);
                w
            })
            .collect();
        assert_eq!(encoded, words);
    }
}

#[test]
fn canonical_descent_words_have_the_right_descents() {
    for d in 0..=8 {
        for alpha in Composition::all_of_size(d) {
            for offset in [0, 3] {
                let w = canonical_descent_word(&alpha, offset);
                let mut sorted = w.clone();
                sorted.sort();
                assert_eq!(sorted, (offset + 1..=offset + d).collect::<Vec<_>>());
                assert_eq!(word_descent_set(&w), descent_set(&alpha), "{alpha}");
            }
        }
    }
}

fn is_subword(sub: &[u32], word: &[u32]) -> bool {
    let mut it = word.iter();
    sub.iter().all(|x| it.any(|y| y == x))
}

#[test]
fn shuffles_are_distinct_interleavings() {
    for (l, m) in [(0, 3), (2, 1), (3, 3), (4, 2), (1, 5)] {
        let u: Vec<u32> = (1..=l).rev().collect();
        let v: Vec<u32> = (l + 1..=l + m).collect();
        let all = shuffles(&u, &v).unwrap();
        let distinct: HashSet<&Vec<u32>> = all.iter().collect();
        assert_eq!(
            big(distinct.len() as u64),
            qsymq::combinat::binomial((l + m) as u64, m as u64)
        );
        assert!(all.iter().all(|w| is_subword(&u, w) && is_subword(&v, w)));
    }
}
