mod common;

use common::*;
use parahess::{component_candidates, ParabolicData, ParabolicHessenbergVariety, Partition};

#[test]
fn closure_cells_dominate() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            for p in ParabolicData::all(n) {
                let var = ParabolicHessenbergVariety::new(&lambda, &p).unwrap();
                let w_j = p.longest_element();
                let subgroup = p.parabolic_subgroup();
                for v in var.w_x_j() {
                    let top = var.variety().cell_dim(&v.compose(&w_j).unwrap()).unwrap();
                    for y in &subgroup {
                        let w = v.compose(y).unwrap();
                        assert!(var.variety().contains(&w).unwrap());
                        assert!(var.variety().cell_dim(&w).unwrap() <= top);
                    }
                }
                let cands = var.component_candidates();
                assert_eq!(cands.len(), var.w_x_j().len());
                assert!(cands.iter().any(|c| c.heuristic_maximal));
                for c in &cands {
                    assert_eq!(c.cell_dim, var.variety().cell_dim(&c.top_cell).unwrap());
                }
            }
        }
    }
}

#[test]
fn irreducible_example() {
    let c = component_candidates(&part("2,1,1"), &parabolic(4, &[1, 3])).unwrap();
    let mut vs: Vec<_> = c.iter().map(|c| c.v.clone()).collect();
    vs.sort();
    let mut expected = vec![word(&[], 4), word(&[2], 4), word(&[1, 2], 4), word(&[2, 1, 3, 2], 4)];
    expected.sort();
    assert_eq!(vs, expected);
    let maximal: Vec<_> = c.iter().filter(|c| c.heuristic_maximal).map(|c| c.schubert_top.clone()).collect();
    assert_eq!(maximal.len(), 2);
    assert!(maximal.contains(&word(&[1, 2, 1, 3], 4)));
    assert!(maximal.contains(&word(&[3, 2, 1, 3], 4)));
    let v1 = c.iter().find(|c| c.v == word(&[1, 2], 4)).unwrap();
    assert_eq!(v1.cell_dim, v1.top_cell.length());
}

#[test]
fn equidimensionality_can_fail() {
    // Reported, not asserted: count the (λ, J) whose maximal candidates differ in dimension.
    let mut mixed = 0;
    for lambda in Partition::all(5) {
        for p in ParabolicData::all(5) {
            let cands = ParabolicHessenbergVariety::new(&lambda, &p).unwrap().component_candidates();
            let dims: std::collections::BTreeSet<_> =
                cands.iter().filter(|c| c.heuristic_maximal).map(|c| c.cell_dim).collect();
            if dims.len() > 1 {
                mixed += 1;
            }
        }
    }
    println!("degree 5 pairs with maximal candidates of mixed dimension: {mixed}");
}
