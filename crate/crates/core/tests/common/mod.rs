#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use parahess::{ParabolicData, Partition, Permutation};

pub fn perm(one_line: &[usize]) -> Permutation {
    Permutation::from_one_line(one_line).unwrap()
}

pub fn word(w: &[usize], n: usize) -> Permutation {
    Permutation::from_word(w, n).unwrap()
}

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn parabolic(n: usize, j: &[usize]) -> ParabolicData {
    ParabolicData::new(n, j).unwrap()
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    parahess::enumerate_sn(n).collect()
}

fn times_simple(w: &Permutation, i: usize) -> Permutation {
    w.compose(&Permutation::simple(i, w.degree()).unwrap()).unwrap()
}

/// Bruhat comparison by the lifting property: for a right descent `s` of
/// `w`, `u ≤ w` iff `min(u, us) ≤ ws`.
pub fn bruhat_oracle(u: &Permutation, w: &Permutation) -> bool {
    let n = w.degree();
    let Some(i) = (1..n).find(|&i| w.apply(i) > w.apply(i + 1)) else {
        return u.is_identity();
    };
    let ws = times_simple(w, i);
    let u_min = if u.apply(i) > u.apply(i + 1) { times_simple(u, i) } else { u.clone() };
    bruhat_oracle(&u_min, &ws)
}

/// Lower ideal generated by `tops`, found by walking Bruhat covers
/// `w ↦ w·t_ij` that drop the length by exactly one.
pub fn lower_ideal_oracle(tops: &[Permutation]) -> BTreeSet<Permutation> {
    let mut seen: BTreeSet<Permutation> = tops.iter().cloned().collect();
    let mut queue: VecDeque<Permutation> = tops.iter().cloned().collect();
    while let Some(w) = queue.pop_front() {
        let n = w.degree();
        let len = w.length();
        let mut images = w.one_line();
        for i in 0..n {
            for j in i + 1..n {
                if images[i] > images[j] {
                    images.swap(i, j);
                    let u = perm(&images);
                    images.swap(i, j);
                    if u.length() + 1 == len && seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    seen
}
