//! Independent oracles: plain lists of matrices, no hashing, no tables.
#![allow(dead_code)]

use refltk::algebra::Matrix;
use refltk::group::{close_group, named_weyl, CoxeterType, ReflectionGroup, SUPPORTED_DIHEDRAL};

/// Every named type of rank at most 4.
pub fn named_types_up_to_rank_4() -> Vec<CoxeterType> {
    use CoxeterType::*;
    let mut v = vec![A(1), A(2), A(3), A(4)];
    for n in 2..=4 {
        v.extend([B(n), C(n), D(n)]);
    }
    v.extend([F4, G2, H3, H4]);
    v.extend(SUPPORTED_DIHEDRAL.iter().map(|&m| I2(m)));
    v
}

pub fn group(ty: CoxeterType) -> ReflectionGroup {
    let (space, gens) = named_weyl(ty).unwrap();
    close_group(&space, &gens, 1_000_000).unwrap()
}

fn position(list: &[Matrix], m: &Matrix) -> Option<usize> {
    list.iter().position(|x| x == m)
}

/// Closure of `gens` by repeated right multiplication, with a linear scan
/// for membership.
pub fn naive_closure(gens: &[Matrix]) -> Vec<Matrix> {
    let n = gens[0].rows();
    let mut list = vec![Matrix::identity(n)];
    let mut i = 0;
    while i < list.len() {
        for g in gens {
            let p = list[i].mul(g);
            if position(&list, &p).is_none() {
                list.push(p);
            }
        }
        i += 1;
    }
    list
}

pub fn is_involution(m: &Matrix) -> bool {
    !m.is_identity() && m.mul(m).is_identity()
}

/// Elements `g ≠ 1` with `g² = 1` whose fixed space is a hyperplane, found
/// by rank computation rather than from the generating roots.
pub fn naive_reflections(elements: &[Matrix]) -> Vec<Matrix> {
    elements
        .iter()
        .filter(|m| {
            is_involution(m) && {
                let d = m.sub(&Matrix::identity(m.rows()));
                d.rref().1.len() == 1
            }
        })
        .cloned()
        .collect()
}

fn inverse_in(elements: &[Matrix], m: &Matrix) -> Matrix {
    elements
        .iter()
        .find(|x| x.mul(m).is_identity())
        .unwrap()
        .clone()
}

fn sorted(mut v: Vec<Matrix>) -> Vec<Matrix> {
    v.sort();
    v
}

/// Maximal elementary abelian 2-subgroups generated by reflections, by
/// enumerating all sets of pairwise commuting reflections of size at most
/// `dim`. Each subgroup is a sorted list of matrices.
pub fn brute_force_maximal(elements: &[Matrix], dim: usize) -> Vec<Vec<Matrix>> {
    let refl = naive_reflections(elements);
    let commute = |a: &Matrix, b: &Matrix| a.mul(b) == b.mul(a);
    let mut found: Vec<Vec<Matrix>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..refl.len()).map(|i| vec![i]).collect();
    while let Some(set) = stack.pop() {
        let gens: Vec<Matrix> = set.iter().map(|&i| refl[i].clone()).collect();
        let h = sorted(naive_closure(&gens));
        if !found.contains(&h) {
            found.push(h);
        }
        if set.len() < dim {
            for j in set.last().unwrap() + 1..refl.len() {
                if set.iter().all(|&i| commute(&refl[i], &refl[j])) {
                    let mut next = set.clone();
                    next.push(j);
                    stack.push(next);
                }
            }
        }
    }
    let contained =
        |a: &Vec<Matrix>, b: &Vec<Matrix>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    let mut maximal: Vec<Vec<Matrix>> = found
        .iter()
        .filter(|h| !found.iter().any(|k| contained(h, k)))
        .cloned()
        .collect();
    maximal.sort();
    maximal
}

/// Number of orbits of `subgroups` under conjugation by every element.
pub fn brute_force_class_count(elements: &[Matrix], subgroups: &[Vec<Matrix>]) -> usize {
    let mut assigned = vec![false; subgroups.len()];
    let mut r = 0;
    for i in 0..subgroups.len() {
        if assigned[i] {
            continue;
        }
        r += 1;
        for g in elements {
            let gi = inverse_in(elements, g);
            let conj = sorted(subgroups[i].iter().map(|h| g.mul(h).mul(&gi)).collect());
            if let Some(j) = subgroups.iter().position(|s| *s == conj) {
                assigned[j] = true;
            }
        }
    }
    r
}
