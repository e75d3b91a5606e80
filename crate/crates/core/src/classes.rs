//! Conjugacy classes and the class algebra.
//!
//! Classes are ordered by (size, representative order, smallest member index),
//! so class 0 is always `{1}`. Class multiplication coefficients
//! `a_ijk = #{(x, y) ∈ Cᵢ × Cⱼ : xy = z_k}` for a fixed `z_k ∈ C_k` are found by
//! scanning every product of the two classes and are memoized per pair.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::group::Group;

/// The product `Cᵢ·Cⱼ` expanded over classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProduct {
    pub left: usize,
    pub right: usize,
    /// `coefficients[k] = a_ijk`.
    pub coefficients: Vec<u64>,
}

impl ClassProduct {
    /// Classes with positive multiplicity, with that multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
    }

    pub fn support_classes(&self) -> Vec<usize> {
        self.support().map(|(k, _)| k).collect()
    }
}

pub struct ClassData {
    group: Arc<Group>,
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    /// `powers[i][k]` = class of `rep_i^k` for `k < o(rep_i)`.
    powers: Vec<Vec<usize>>,
    products: Vec<OnceLock<ClassProduct>>,
}

impl std::fmt::Debug for ClassData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassData")
            .field("group", &self.group.name())
            .field("sizes", &self.sizes())
            .finish()
    }
}

impl ClassData {
    pub fn new(group: Arc<Group>) -> ClassData {
        let n = group.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit = group.conjugacy_orbit(x);
            orbit.sort_unstable();
            for &y in &orbit {
                seen[y] = true;
            }
            classes.push(orbit);
        }
        classes.sort_by_key(|c| (c.len(), group.element_order(c[0]), c[0]));
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut class_of = vec![0; n];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();
        let powers = reps
            .iter()
            .map(|&r| {
                let mut acc = 0;
                (0..group.element_order(r))
                    .map(|_| {
                        let c = class_of[acc];
                        acc = group.mul(acc, r);
                        c
                    })
                    .collect()
            })
            .collect();
        let r = classes.len();
        ClassData {
            group,
            classes,
            reps,
            class_of,
            inverse_class,
            powers,
            products: (0..r * r).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn rep(&self, i: usize) -> usize {
        self.reps[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    /// Order of the elements in class `i`.
    pub fn element_order(&self, i: usize) -> usize {
        self.group.element_order(self.reps[i])
    }

    /// Class of `rep(i)^k`.
    pub fn power_class(&self, i: usize, k: usize) -> usize {
        let row = &self.powers[i];
        row[k % row.len()]
    }

    /// `|C_G(x)|` for `x` in class `i`.
    pub fn centralizer_order(&self, i: usize) -> usize {
        self.group.order() / self.size(i)
    }

    /// Union of classes as a sorted element list.
    pub fn union(&self, class_set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = class_set
            .iter()
            .flat_map(|&c| self.class(c).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// `a_ijk` for all `k`, by scanning all `|Cᵢ|·|Cⱼ|` products.
    pub fn class_coefficients(&self, i: usize, j: usize) -> &ClassProduct {
        self.products[i * self.len() + j].get_or_init(|| {
            let mut hits = vec![0u64; self.len()];
            for &x in self.class(i) {
                for &y in self.class(j) {
                    hits[self.class_of[self.group.mul(x, y)]] += 1;
                }
            }
            // each z in C_k is hit equally often
            let coefficients = hits
                .iter()
                .enumerate()
                .map(|(k, &h)| h / self.size(k) as u64)
                .collect();
            ClassProduct {
                left: i,
                right: j,
                coefficients,
            }
        })
    }

    /// `Some(k)` when the set product `CᵢCⱼ` is exactly the class `C_k`.
    pub fn product_is_single_class(&self, i: usize, j: usize) -> Option<usize> {
        let mut support = self.class_coefficients(i, j).support();
        match (support.next(), support.next()) {
            (Some((k, _)), None) => Some(k),
            _ => None,
        }
    }

    /// Classes met by `{xy : x ∈ Cᵢ, y ∈ Cⱼ}`, computed without the coefficient
    /// cache.
    pub fn set_product(&self, i: usize, j: usize) -> BTreeSet<usize> {
        let x = self.rep(i);
        self.class(j)
            .iter()
            .map(|&y| self.class_of[self.group.mul(x, y)])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    fn classes_of(name: &str, params: &[usize]) -> ClassData {
        ClassData::new(Arc::new(builtin(name, params).unwrap().realize().unwrap()))
    }

    fn class_with(cd: &ClassData, order: usize, size: usize) -> usize {
        (0..cd.len())
            .find(|&i| cd.element_order(i) == order && cd.size(i) == size)
            .unwrap()
    }

    #[test]
    fn class_sizes() {
        let c6 = classes_of("cyclic", &[6]);
        assert_eq!(c6.sizes(), vec![1; 6]);
        let s3 = classes_of("symmetric", &[3]);
        assert_eq!(s3.sizes(), vec![1, 2, 3]);
        // brute force over 6 elements
        let g = s3.group();
        for x in 0..6 {
            let orbit: BTreeSet<usize> = (0..6).map(|h| g.conjugate(x, h)).collect();
            assert_eq!(orbit.len(), s3.size(s3.class_of(x)));
        }
        let q8 = classes_of("quaternion", &[8]);
        assert_eq!(q8.sizes(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_invariants() {
        let s4 = classes_of("symmetric", &[4]);
        let g = s4.group();
        assert_eq!(s4.class(0), &[0]);
        assert_eq!(s4.sizes().iter().sum::<usize>(), 24);
        for i in 0..s4.len() {
            assert_eq!(g.order() % s4.size(i), 0);
            assert_eq!(s4.class_of(s4.rep(i)), i);
            assert_eq!(s4.inverse_class(s4.inverse_class(i)), i);
            assert_eq!(s4.power_class(i, 1), i);
            assert_eq!(s4.power_class(i, 0), 0);
            assert_eq!(s4.centralizer_order(i), g.centralizer(s4.rep(i)).order());
        }
    }

    #[test]
    fn power_classes() {
        let s3 = classes_of("symmetric", &[3]);
        let three = class_with(&s3, 3, 2);
        assert_eq!(s3.power_class(three, 2), three);
        assert_eq!(s3.power_class(three, 3), 0);
    }

    #[test]
    fn coefficients_s3() {
        let s3 = classes_of("symmetric", &[3]);
        let t = class_with(&s3, 2, 3);
        let c = class_with(&s3, 3, 2);
        let prod = s3.class_coefficients(t, c);
        assert_eq!(prod.support_classes(), vec![t]);
        // 3·2 = 6 products spread over the 3 transpositions
        assert_eq!(prod.coefficients[t], 2);
        assert_eq!(s3.product_is_single_class(t, c), Some(t));
        assert_eq!(s3.product_is_single_class(t, t), None);
        assert_eq!(s3.class_coefficients(t, t).support_classes(), vec![0, c]);
        for j in 0..s3.len() {
            assert_eq!(s3.product_is_single_class(0, j), Some(j));
            assert_eq!(s3.class_coefficients(0, j).coefficients[j], 1);
        }
    }

    #[test]
    fn a4_involutions_times_three_cycles() {
        let a4 = classes_of("alternating", &[4]);
        let inv = class_with(&a4, 2, 3);
        for c in (0..a4.len()).filter(|&c| a4.element_order(c) == 3) {
            assert!(a4.product_is_single_class(inv, c).is_some());
        }
    }

    #[test]
    fn counting_identity_and_set_products() {
        for (name, params) in [
            ("symmetric", &[4][..]),
            ("alternating", &[5][..]),
            ("order54", &[][..]),
            ("quaternion", &[16][..]),
        ] {
            let cd = classes_of(name, params);
            for i in 0..cd.len() {
                for j in 0..cd.len() {
                    let prod = cd.class_coefficients(i, j);
                    let total: u64 = prod.support().map(|(k, a)| a * cd.size(k) as u64).sum();
                    assert_eq!(total, (cd.size(i) * cd.size(j)) as u64);
                    let support: BTreeSet<usize> = prod.support_classes().into_iter().collect();
                    assert_eq!(support, cd.set_product(i, j));
                }
                assert_eq!(cd.size(cd.inverse_class(i)), cd.size(i));
            }
        }
    }
}
