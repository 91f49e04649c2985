mod common;

use common::*;
use parahess::{
    base_filling, highest_form_rootset, is_highest_form, phi_v_closure, phi_v_filling, Nilpotent, Partition, Polynomial,
    RootSet, Tableau,
};

#[test]
fn partition_counts_and_order() {
    let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
    let four: Vec<String> = Partition::all(4).iter().map(ToString::to_string).collect();
    assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
}

#[test]
fn base_filling_examples() {
    assert_eq!(base_filling(&part("3,2")).as_tableau().to_string(), "245/13");
    assert_eq!(base_filling(&part("2,2")).as_tableau().to_string(), "24/13");
    assert_eq!(base_filling(&part("2,1,1")).as_tableau().to_string(), "34/2/1");
}

#[test]
fn worked_root_sets() {
    let x = Nilpotent::new(&part("2,1,1"));
    assert_eq!(x.phi_x, RootSet::from_pairs(4, &[(3, 4)]).unwrap());
    assert_eq!(x.phi_v, RootSet::from_pairs(4, &[(2, 4), (1, 4)]).unwrap());
    let y = Nilpotent::new(&part("2,2"));
    assert_eq!(y.phi_x, RootSet::from_pairs(4, &[(1, 3), (2, 4)]).unwrap());
}

#[test]
fn highest_form_predicate() {
    assert!(!is_highest_form(&RootSet::from_pairs(4, &[(1, 2), (3, 4)]).unwrap()).unwrap());
    assert!(is_highest_form(&RootSet::from_pairs(4, &[(1, 3), (2, 4)]).unwrap()).unwrap());
    assert!(is_highest_form(&RootSet::empty(3)).unwrap());
}

#[test]
fn filling_description_matches_closure() {
    for n in 1..=8 {
        for lambda in Partition::all(n) {
            let phi_x = highest_form_rootset(&lambda);
            assert!(is_highest_form(&phi_x).unwrap());
            let phi_v = phi_v_filling(&lambda);
            assert_eq!(phi_v, phi_v_closure(&phi_x), "λ={lambda}");
            assert!(phi_x.is_disjoint(&phi_v), "λ={lambda}");
        }
    }
}

#[test]
fn springer_membership_tests_agree() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let x = Nilpotent::new(&lambda);
            for w in all_perms(n) {
                assert_eq!(
                    x.springer_contains(&w).unwrap(),
                    x.springer_contains_by_roots(&w).unwrap(),
                    "λ={lambda} w={w}"
                );
            }
        }
    }
}

#[test]
fn springer_dimension_formulas_agree() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let x = Nilpotent::new(&lambda);
            for w in all_perms(n).iter().filter(|w| x.springer_contains(w).unwrap()) {
                assert_eq!(x.springer_cell_dim_by_rows(w).unwrap(), x.springer_cell_dim_by_roots(w).unwrap());
            }
        }
    }
}

fn springer_poincare(x: &Nilpotent) -> Polynomial {
    let mut p = Polynomial::zero();
    for w in all_perms(x.degree()).iter().filter(|w| x.springer_contains(w).unwrap()) {
        p.bump(x.springer_cell_dim(w).unwrap());
    }
    p
}

#[test]
fn zero_nilpotent_gives_full_flag_variety() {
    for n in 1..=6 {
        let x = Nilpotent::new(&Partition::column(n));
        assert_eq!(springer_poincare(&x), Polynomial::t_factorial(n));
    }
}

#[test]
fn regular_nilpotent_fixes_one_point() {
    for n in 1..=6 {
        let x = Nilpotent::new(&Partition::new(vec![n]).unwrap());
        assert_eq!(springer_poincare(&x), Polynomial::one());
    }
}

#[test]
fn springer_euler_characteristic_counts_row_strict_tableaux() {
    // Row-strict fillings of λ number n! / ∏ λ_i!.
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let expected = fact(n) / lambda.parts().iter().map(|&p| fact(p)).product::<u64>();
            assert_eq!(springer_poincare(&Nilpotent::new(&lambda)).eval_one(), expected);
        }
    }
}

#[test]
fn two_two_springer_cells() {
    let x = Nilpotent::new(&part("2,2"));
    let dims: Vec<usize> = [word(&[], 4), word(&[2], 4), word(&[1, 3, 2], 4)]
        .iter()
        .map(|w| x.springer_cell_dim(w).unwrap())
        .collect();
    assert_eq!(dims, [0, 1, 2]);
}

#[test]
fn tableau_parsing_and_row_inversions() {
    let t: Tableau = "34/12".parse().unwrap();
    assert!(t.is_row_strict());
    assert_eq!(t.row_inversion_counts().unwrap().len(), 3);
    assert!("31/2".parse::<Tableau>().map(|t| !t.is_row_strict()).unwrap());
    assert!("12/2".parse::<Tableau>().is_err());
    assert!(t.row_inversions(1).is_err());
    let json = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
}

#[test]
fn springer_not_member_errors() {
    let x = Nilpotent::new(&part("2"));
    let w = perm(&[2, 1]);
    assert!(!x.springer_contains(&w).unwrap());
    assert!(x.springer_cell_dim(&w).is_err());
    assert!(x.springer_contains(&perm(&[1, 2, 3])).is_err());
}
