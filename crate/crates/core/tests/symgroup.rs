mod common;

use common::*;
use parahess::{string_decompose, Error, ParabolicData, Permutation, Polynomial, Root, RootSet, StringDecomposition};

#[test]
fn length_is_inversion_count_and_inverse_invariant() {
    for n in 1..=6 {
        for w in all_perms(n) {
            assert_eq!(w.length(), w.inversion_set().len());
            assert_eq!(w.length(), w.inverse().length());
            assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(n));
        }
    }
}

#[test]
fn word_convention() {
    // s1 s2 applies s2 first.
    assert_eq!(word(&[1, 2], 3), perm(&[2, 3, 1]));
    assert_eq!(word(&[2, 1], 3), perm(&[3, 1, 2]));
    assert_eq!(word(&[1, 2, 3, 1], 4), perm(&[3, 2, 4, 1]));
    let w = word(&[2, 1, 3, 2], 4);
    assert_eq!(w, perm(&[3, 4, 1, 2]));
    assert_eq!(w.to_string(), "3,4,1,2");
    assert_eq!("3,4,1,2".parse::<Permutation>().unwrap(), w);
}

#[test]
fn bad_inputs() {
    assert!(matches!(Permutation::from_one_line(&[1, 1, 2]), Err(Error::InvalidPermutation(_))));
    assert!(matches!(Permutation::from_one_line(&[0, 1]), Err(Error::InvalidPermutation(_))));
    assert!(matches!(Permutation::simple(3, 3), Err(Error::GeneratorOutOfRange { .. })));
    assert!(matches!(Permutation::from_word(&[0], 3), Err(Error::GeneratorOutOfRange { .. })));
    let (a, b) = (Permutation::identity(2), Permutation::identity(3));
    assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch { .. })));
    assert!(matches!(a.bruhat_leq(&b), Err(Error::DegreeMismatch { .. })));
    assert!(ParabolicData::new(4, &[4]).is_err());
    assert!("1,2,x".parse::<Permutation>().is_err());
}

#[test]
fn bruhat_matches_lifting_oracle() {
    for n in 1..=5 {
        let perms = all_perms(n);
        for u in &perms {
            for w in &perms {
                assert_eq!(u.bruhat_leq(w).unwrap(), bruhat_oracle(u, w), "u={u} w={w}");
            }
        }
    }
}

#[test]
fn inversion_set_of_reduced_product() {
    // N(w) = N(y) ⊔ y⁻¹N(v) for w = v y with lengths adding.
    for n in 1..=6 {
        for p in ParabolicData::all(n) {
            for w in all_perms(n) {
                let (v, y) = p.coset_factor(&w).unwrap();
                assert_eq!(v.length() + y.length(), w.length());
                let n_y = y.inversion_set();
                let pulled = v.inversion_set().image_under(&y.inverse()).unwrap();
                assert!(n_y.is_disjoint(&pulled));
                assert_eq!(n_y.union(&pulled), w.inversion_set(), "w={w} J={p}");
            }
        }
    }
}

#[test]
fn coset_factor_round_trip() {
    for n in 1..=6 {
        for p in ParabolicData::all(n) {
            for w in all_perms(n) {
                let (v, y) = p.coset_factor(&w).unwrap();
                assert_eq!(v.compose(&y).unwrap(), w);
                assert!(p.is_min_coset_rep(&v).unwrap());
                assert!(p.is_in_parabolic_subgroup(&y));
                assert_eq!(p.is_min_coset_rep(&w).unwrap(), y.is_identity());
            }
        }
    }
}

#[test]
fn min_coset_rep_by_strings() {
    for n in 1..=6 {
        for p in ParabolicData::all(n) {
            for w in all_perms(n) {
                assert_eq!(p.is_min_coset_rep(&w).unwrap(), p.is_min_coset_rep_by_strings(&w).unwrap());
            }
        }
    }
}

#[test]
fn parabolic_subgroup_normalizes_cross_block_roots() {
    for n in 1..=5 {
        for p in ParabolicData::all(n) {
            let mut cross = RootSet::empty(n);
            for i in 1..=n {
                for j in i + 1..=n {
                    if !p.same_block(i, j) {
                        cross.insert(Root::new(i, j).unwrap()).unwrap();
                    }
                }
            }
            for y in p.parabolic_subgroup() {
                assert_eq!(cross.image_under(&y).unwrap(), cross, "y={y} J={p}");
            }
        }
    }
}

#[test]
fn strings_reproduce_the_permutation() {
    for n in 1..=6 {
        for w in all_perms(n) {
            let s = string_decompose(&w);
            assert_eq!(s.product(), w);
            assert_eq!(s.lengths().iter().sum::<usize>(), w.length());
            assert_eq!(Permutation::from_word(&s.word(), n).unwrap(), w);
            assert_eq!(s.word().len(), w.length());
            assert_eq!(StringDecomposition::from_lengths(&s.lengths()).unwrap(), s);
        }
    }
}

#[test]
fn string_examples() {
    assert_eq!(string_decompose(&word(&[2, 1, 3, 2], 4)).to_string(), "s2 s3 s1 s2");
    assert_eq!(string_decompose(&word(&[3, 2], 4)).to_string(), "s3 s2");
    assert_eq!(string_decompose(&Permutation::identity(4)).to_string(), "e");
}

#[test]
fn parabolic_poincare_is_product_of_factorials() {
    for n in 1..=7 {
        for p in ParabolicData::all(n) {
            assert_eq!(p.poincare(), p.poincare_by_enumeration(), "J={p}");
            assert_eq!(p.parabolic_subgroup().len() as u64, p.poincare().eval_one());
        }
        let full = ParabolicData::new(n, &(1..n).collect::<Vec<_>>()).unwrap();
        assert_eq!(full.poincare(), Polynomial::t_factorial(n));
    }
    let full4 = ParabolicData::new(4, &[1, 2, 3]).unwrap();
    assert_eq!(full4.poincare().coeffs(), &[1, 3, 5, 6, 5, 3, 1]);
}

#[test]
fn longest_element_of_w_j() {
    for n in 1..=6 {
        for p in ParabolicData::all(n) {
            let w_j = p.longest_element();
            let max = p.parabolic_subgroup().into_iter().map(|y| y.length()).max().unwrap();
            assert_eq!(w_j.length(), max);
            assert!(p.is_in_parabolic_subgroup(&w_j));
        }
    }
}
