//! Conditions on irreducible character values.

use std::collections::HashSet;

use serde::Serialize;

use super::{
    class_pairs, coprime_pairs, factor_in_class, Evaluation, PairMode, PredicateError,
    PredicateResult, Witness,
};
use crate::chartab::{CharacterTable, CycValue};
use crate::group::Subgroup;

/// Products `χ(xᵢ)·χ(xⱼ)` for every row.
fn value_products(table: &CharacterTable, i: usize, j: usize) -> Vec<CycValue> {
    (0..table.len())
        .map(|r| table.value(r, i) * table.value(r, j))
        .collect()
}

/// First `(row, class k)` with `k` in `CᵢCⱼ` and `χ(k) ≠ χ(i)χ(j)`.
fn first_nonmultiplicative(table: &CharacterTable, i: usize, j: usize) -> Option<(usize, usize)> {
    let products = value_products(table, i, j);
    let support = table.classes().class_coefficients(i, j).support_classes();
    support.into_iter().find_map(|k| {
        (0..table.len())
            .find(|&r| *table.value(r, k) != products[r])
            .map(|r| (r, k))
    })
}

/// `χ(xy) = χ(x)·χ(y)` for every row and every nonidentity prime-power pair,
/// or every nonidentity p-element against p′-elements of prime power order
/// when `p` is given.
pub fn char_mult_condition(
    table: &CharacterTable,
    p: Option<usize>,
    eval: Evaluation,
) -> Result<PredicateResult, PredicateError> {
    let mode = match p {
        Some(p) => PairMode::PVsPPrime(p),
        None => PairMode::PrimePower,
    };
    let cd = table.classes();
    match eval {
        Evaluation::ClassPairs => {
            for (i, j) in class_pairs(cd, &mode)? {
                if let Some((row, k)) = first_nonmultiplicative(table, i, j) {
                    let y = factor_in_class(cd, i, j, k).expect("class lies in the product");
                    return Ok(PredicateResult::fail(Witness::Character {
                        row,
                        x: cd.rep(i),
                        y,
                    }));
                }
            }
        }
        Evaluation::Elements => {
            let g = cd.group();
            let mut seen = HashSet::new();
            for pair in coprime_pairs(g, &mode)? {
                let xy = g.mul(pair.x, pair.y);
                let key = (cd.class_of(pair.x), cd.class_of(pair.y), cd.class_of(xy));
                if !seen.insert(key) {
                    continue;
                }
                for row in 0..table.len() {
                    let lhs = table.evaluate(row, xy);
                    let rhs = table.evaluate(row, pair.x) * table.evaluate(row, pair.y);
                    if *lhs != rhs {
                        return Ok(PredicateResult::fail(Witness::Character {
                            row,
                            x: pair.x,
                            y: pair.y,
                        }));
                    }
                }
            }
        }
    }
    Ok(PredicateResult::pass())
}

/// Both sides of the equivalence between `(xy)^G = x^G·y^G` and
/// `χ(1)χ(z) = χ(x)χ(y)` for every row and every `z ∈ x^G·y^G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCharacterOutcome {
    pub left: usize,
    pub right: usize,
    pub set_side: bool,
    pub character_side: bool,
}

impl ClassCharacterOutcome {
    pub fn holds(&self) -> bool {
        self.set_side == self.character_side
    }
}

pub fn class_character_agreement(
    table: &CharacterTable,
    i: usize,
    j: usize,
) -> ClassCharacterOutcome {
    let cd = table.classes();
    let products = value_products(table, i, j);
    let support = cd.class_coefficients(i, j).support_classes();
    let character_side = support.iter().all(|&k| {
        (0..table.len()).all(|r| (table.value(r, k) * table.row(r).degree as i64) == products[r])
    });
    ClassCharacterOutcome {
        left: i,
        right: j,
        set_side: support.len() == 1,
        character_side,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KeyConclusions {
    /// `x^G·y^G` is the single class of `xy`.
    pub single_class: bool,
    /// Every nonlinear row vanishes at `xy`.
    pub nonlinear_vanish: bool,
    /// `(xy)^G = xy·G′` as sets.
    pub coset_is_class: bool,
    /// `|C_G(xy)| = |G : G′|`.
    pub centralizer_index: bool,
}

impl KeyConclusions {
    pub fn all(&self) -> bool {
        self.single_class && self.nonlinear_vanish && self.coset_is_class && self.centralizer_index
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CosetClassOutcome {
    pub left: usize,
    pub right: usize,
    /// `χ(xy) = χ(x)χ(y)` for every `x ∈ Cᵢ`, `y ∈ Cⱼ` and every row.
    pub hypothesis: bool,
    /// Evaluated only when the hypothesis holds.
    pub conclusions: Option<KeyConclusions>,
}

impl CosetClassOutcome {
    pub fn holds(&self) -> bool {
        self.conclusions.is_none_or(|c| c.all())
    }
}

/// Checks what multiplicativity on a pair of nontrivial classes forces.
/// `derived` must be the derived subgroup of the table's group.
pub fn coset_class_implications(
    table: &CharacterTable,
    derived: &Subgroup,
    i: usize,
    j: usize,
) -> Result<CosetClassOutcome, PredicateError> {
    for c in [i, j] {
        if c == 0 {
            return Err(PredicateError::IdentityClass(c));
        }
    }
    let hypothesis = first_nonmultiplicative(table, i, j).is_none();
    let conclusions = hypothesis.then(|| {
        let cd = table.classes();
        let g = cd.group();
        let xy = g.mul(cd.rep(i), cd.rep(j));
        let k = cd.class_of(xy);
        let mut coset: Vec<usize> = derived.members().iter().map(|&d| g.mul(xy, d)).collect();
        coset.sort_unstable();
        KeyConclusions {
            single_class: cd.product_is_single_class(i, j) == Some(k),
            nonlinear_vanish: table
                .rows()
                .iter()
                .all(|row| row.is_linear() || row.values[k].is_zero()),
            coset_is_class: coset == cd.class(k),
            centralizer_index: cd.centralizer_order(k) == g.order() / derived.order(),
        }
    });
    Ok(CosetClassOutcome {
        left: i,
        right: j,
        hypothesis,
        conclusions,
    })
}

#[derive(Debug, Clone)]
pub struct MultiplicativeCharacter {
    pub row: usize,
    pub degree: u64,
    pub is_faithful: bool,
    /// A normal subgroup of prime power order off which the row vanishes,
    /// with its prime (`None` for the trivial subgroup).
    pub vanishing_normal_p_subgroup: Option<(Option<usize>, Subgroup)>,
}

/// Rows with `χ(xy) = χ(x)χ(y)` for all nonidentity `x, y` of coprime order.
///
/// A normal subgroup contains the support of a row exactly when it contains
/// the normal closure of that support, so the row vanishes off some normal
/// p-subgroup iff that closure has prime power order.
pub fn multiplicative_characters(table: &CharacterTable) -> Vec<MultiplicativeCharacter> {
    let cd = table.classes();
    let g = cd.group();
    let mut multiplicative = vec![true; table.len()];
    let pairs = class_pairs(cd, &PairMode::AllCoprime).expect("mode needs no validation");
    for (i, j) in pairs {
        let products = value_products(table, i, j);
        for k in cd.class_coefficients(i, j).support_classes() {
            for (r, ok) in multiplicative.iter_mut().enumerate() {
                if *ok && *table.value(r, k) != products[r] {
                    *ok = false;
                }
            }
        }
    }
    multiplicative
        .iter()
        .enumerate()
        .filter(|(_, &ok)| ok)
        .map(|(row, _)| {
            let closure = g.normal_closure(&cd.union(&table.row(row).support()));
            let vanishing_normal_p_subgroup = if closure.is_trivial() {
                Some((None, closure))
            } else {
                g.subgroup_prime(&closure).map(|p| (Some(p), closure))
            };
            MultiplicativeCharacter {
                row,
                degree: table.row(row).degree,
                is_faithful: table.kernel_elements(row).len() == 1,
                vanishing_normal_p_subgroup,
            }
        })
        .collect()
}

/// Rows that are nonzero on exactly two classes.
pub fn two_class_rows(table: &CharacterTable) -> Vec<usize> {
    (0..table.len())
        .filter(|&r| table.row(r).support().len() == 2)
        .collect()
}

/// First `(row, class)` where a nonlinear row is nonzero outside the normal
/// subgroup `h`.
pub fn nonvanishing_off(table: &CharacterTable, h: &Subgroup) -> Option<(usize, usize)> {
    let cd = table.classes();
    (0..table.len())
        .filter(|&r| !table.row(r).is_linear())
        .find_map(|r| {
            (0..cd.len())
                .find(|&k| !h.contains(cd.rep(k)) && !table.value(r, k).is_zero())
                .map(|k| (r, k))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::tests::table;

    #[test]
    fn char_mult_examples() {
        let c7c3 = table("frobenius", &[7, 3]);
        for eval in [Evaluation::ClassPairs, Evaluation::Elements] {
            assert!(char_mult_condition(&c7c3, Some(7), eval).unwrap().holds);
            assert!(char_mult_condition(&c7c3, None, eval).unwrap().holds);
        }
        let s4 = table("symmetric", &[4]);
        let res = char_mult_condition(&s4, None, Evaluation::ClassPairs).unwrap();
        assert!(!res.holds);
        let Some(Witness::Character { row, x, y }) = res.witness else {
            panic!("expected a character witness")
        };
        assert!(s4.row(row).degree > 1);
        let g = s4.group();
        assert_ne!(
            *s4.evaluate(row, g.mul(x, y)),
            s4.evaluate(row, x) * s4.evaluate(row, y)
        );
        let c6 = table("cyclic", &[6]);
        assert!(
            char_mult_condition(&c6, None, Evaluation::ClassPairs)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn class_character_sides_on_s3() {
        let s3 = table("symmetric", &[3]);
        let cd = s3.classes();
        for j in 0..cd.len() {
            let out = class_character_agreement(&s3, 0, j);
            assert!(out.set_side && out.character_side);
        }
        let t = (0..3).find(|&c| cd.element_order(c) == 2).unwrap();
        let c = (0..3).find(|&c| cd.element_order(c) == 3).unwrap();
        let out = class_character_agreement(&s3, t, c);
        assert!(out.set_side && out.character_side);
        let out = class_character_agreement(&s3, t, t);
        assert!(!out.set_side && !out.character_side && out.holds());
    }

    #[test]
    fn coset_class_in_frobenius_group() {
        let t = table("frobenius", &[7, 3]);
        let g = t.group();
        let derived = g.derived_subgroup();
        let cd = t.classes();
        let mut verified = 0;
        for i in 1..cd.len() {
            for j in 1..cd.len() {
                let out = coset_class_implications(&t, &derived, i, j).unwrap();
                assert!(out.holds(), "classes {i}, {j}");
                verified += usize::from(out.hypothesis);
            }
        }
        assert!(verified > 0);
        assert!(coset_class_implications(&t, &derived, 0, 1).is_err());
    }

    #[test]
    fn two_class_row_examples() {
        let q8 = table("quaternion", &[8]);
        let rows = two_class_rows(&q8);
        assert_eq!(rows, vec![4]);
        assert_eq!(q8.row(4).support(), vec![0, 1]);
        let s3 = table("symmetric", &[3]);
        assert_eq!(two_class_rows(&s3), vec![2]);
        assert_eq!(s3.row(2).support(), vec![0, 1]);
        assert_eq!(s3.classes().element_order(1), 3);
        let c2 = table("cyclic", &[2]);
        assert_eq!(two_class_rows(&c2), vec![0, 1]);
    }

    #[test]
    fn multiplicative_rows() {
        let s3 = table("symmetric", &[3]);
        let found = multiplicative_characters(&s3);
        assert!(found.iter().any(|m| m.row == 0 && !m.is_faithful));
        // the degree-2 row vanishes off A3
        let two = found
            .iter()
            .find(|m| m.degree == 2)
            .expect("degree-2 row is multiplicative");
        assert!(two.is_faithful);
        let (p, n) = two.vanishing_normal_p_subgroup.as_ref().unwrap();
        assert_eq!((*p, n.order()), (Some(3), 3));
        let ex = table("cyclic", &[9]);
        assert_eq!(multiplicative_characters(&ex).len(), 9);
        let s4 = table("symmetric", &[4]);
        assert!(multiplicative_characters(&s4).iter().all(|m| m.degree == 1));
        assert!(nonvanishing_off(&s3, &s3.group().derived_subgroup()).is_none());
        assert!(nonvanishing_off(&s4, &s4.group().derived_subgroup()).is_some());
    }
}
