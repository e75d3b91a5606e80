//! Conditions on element orders, class sizes and class products.

use serde::Serialize;

use super::{
    class_pairs, coprime_pairs, factor_in_class, split_witness, Evaluation, PairMode,
    PredicateError, PredicateResult, Witness,
};
use crate::classes::ClassData;
use crate::group::{ChiefSeries, Group};
use crate::primes::{is_power_of, is_prime, prime_power_info};

fn mode_for(p: Option<usize>) -> PairMode {
    match p {
        Some(p) => PairMode::PVsPPrime(p),
        None => PairMode::PrimePower,
    }
}

/// Checks `ok(x, y, xy)` for every admitted pair, returning the first failure.
fn scan(
    cd: &ClassData,
    mode: &PairMode,
    eval: Evaluation,
    mut ok: impl FnMut(usize, usize, usize) -> bool,
) -> Result<PredicateResult, PredicateError> {
    let g = cd.group();
    match eval {
        Evaluation::ClassPairs => {
            for (i, j) in class_pairs(cd, mode)? {
                let x = cd.rep(i);
                for &y in cd.class(j) {
                    if !ok(x, y, g.mul(x, y)) {
                        return Ok(PredicateResult::fail(Witness::Pair { x, y }));
                    }
                }
            }
        }
        Evaluation::Elements => {
            for pair in coprime_pairs(g, mode)? {
                if !ok(pair.x, pair.y, g.mul(pair.x, pair.y)) {
                    return Ok(PredicateResult::fail(Witness::Pair {
                        x: pair.x,
                        y: pair.y,
                    }));
                }
            }
        }
    }
    Ok(PredicateResult::pass())
}

/// Conjugacy class sizes per element, by direct centralizer counts.
fn brute_class_sizes(g: &Group) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .map(|x| n / (0..n).filter(|&h| g.commute(x, h)).count())
        .collect()
}

/// A label per element that is equal exactly on conjugate elements.
fn brute_class_labels(g: &Group) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.order()];
    let mut next = 0;
    for x in 0..g.order() {
        if label[x] == usize::MAX {
            for y in g.conjugacy_orbit(x) {
                label[y] = next;
            }
            next += 1;
        }
    }
    label
}

/// `o(xy) = o(x)·o(y)` for every pair in `mode`.
pub fn order_product_condition(
    cd: &ClassData,
    mode: &PairMode,
    eval: Evaluation,
) -> Result<PredicateResult, PredicateError> {
    let g = cd.group();
    scan(cd, mode, eval, |x, y, xy| {
        g.element_order(xy) == g.element_order(x) * g.element_order(y)
    })
}

/// `xy = yx` for every pair in `mode`.
pub fn commuting_condition(
    cd: &ClassData,
    mode: &PairMode,
    eval: Evaluation,
) -> Result<PredicateResult, PredicateError> {
    let g = cd.group();
    scan(cd, mode, eval, |x, y, _| g.commute(x, y))
}

/// `|(xy)^G| = |x^G|·|y^G|` over prime-power pairs, or over p-elements
/// against p′-elements of prime power order when `p` is given.
pub fn class_size_condition(
    cd: &ClassData,
    p: Option<usize>,
    eval: Evaluation,
) -> Result<PredicateResult, PredicateError> {
    let mode = mode_for(p);
    match eval {
        Evaluation::ClassPairs => scan(cd, &mode, eval, |x, y, xy| {
            let size = |e| cd.size(cd.class_of(e));
            size(xy) == size(x) * size(y)
        }),
        Evaluation::Elements => {
            let sizes = brute_class_sizes(cd.group());
            scan(cd, &mode, eval, |x, y, xy| sizes[xy] == sizes[x] * sizes[y])
        }
    }
}

/// `x^G·y^G = (xy)^G` over prime-power pairs, or over p-elements against
/// p′-elements of prime power order when `p` is given.
pub fn class_product_condition(
    cd: &ClassData,
    p: Option<usize>,
    eval: Evaluation,
) -> Result<PredicateResult, PredicateError> {
    let mode = mode_for(p);
    let g = cd.group();
    match eval {
        Evaluation::ClassPairs => {
            for (i, j) in class_pairs(cd, &mode)? {
                if cd.product_is_single_class(i, j).is_none() {
                    return Ok(PredicateResult::fail(
                        split_witness(cd, i, j).expect("product meets two classes"),
                    ));
                }
            }
        }
        Evaluation::Elements => {
            // x^a·y^b is conjugate to x·y^(b a⁻¹), so it suffices to move y
            let label = brute_class_labels(g);
            for pair in coprime_pairs(g, &mode)? {
                let target = label[g.mul(pair.x, pair.y)];
                for b in 0..g.order() {
                    let y_conj = g.conjugate(pair.y, b);
                    if label[g.mul(pair.x, y_conj)] != target {
                        return Ok(PredicateResult::fail(Witness::SplitProduct {
                            x: pair.x,
                            y: pair.y,
                            y_conj,
                        }));
                    }
                }
            }
        }
    }
    Ok(PredicateResult::pass())
}

/// `x^G·y^G = (xy)^G` whenever `x^G ≠ (y⁻¹)^G`.
pub fn inverse_class_product_condition(cd: &ClassData) -> PredicateResult {
    for i in 0..cd.len() {
        for j in 0..cd.len() {
            if i != cd.inverse_class(j) && cd.product_is_single_class(i, j).is_none() {
                return PredicateResult::fail(
                    split_witness(cd, i, j).expect("product meets two classes"),
                );
            }
        }
    }
    PredicateResult::pass()
}

/// Holds when there is no nontrivial p-element `x`, q-element `y` and
/// r-element `z` with `xyz = 1`, for primes `q ≠ r` both different from `p`.
/// A found triple is returned as the failure witness.
pub fn triple_condition(cd: &ClassData, p: usize) -> Result<PredicateResult, PredicateError> {
    if !is_prime(p) {
        return Err(PredicateError::NotPrime(p));
    }
    let prime_of = |c: usize| prime_power_info(cd.element_order(c)).map(|(q, _)| q);
    let p_classes: Vec<usize> = (1..cd.len())
        .filter(|&c| is_power_of(cd.element_order(c), p))
        .collect();
    let other: Vec<(usize, usize)> = (1..cd.len())
        .filter_map(|c| prime_of(c).filter(|&q| q != p).map(|q| (c, q)))
        .collect();
    let g = cd.group();
    for &i in &p_classes {
        for &(j, q) in &other {
            let coefficients = &cd.class_coefficients(i, j).coefficients;
            for &(k, r) in &other {
                // 1 ∈ CᵢCⱼC_k exactly when CᵢCⱼ meets the inverse class of C_k
                let k_inv = cd.inverse_class(k);
                if q != r && coefficients[k_inv] > 0 {
                    let x = cd.rep(i);
                    let y = factor_in_class(cd, i, j, k_inv).expect("positive coefficient");
                    let z = g.inv(g.mul(x, y));
                    return Ok(PredicateResult::fail(Witness::Triple { x, y, z }));
                }
            }
        }
    }
    Ok(PredicateResult::pass())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiOutcome {
    pub primes: [usize; 3],
    /// Class products of coprime π-elements of prime power order are classes.
    pub hypothesis: PredicateResult,
    /// No chief factor has order divisible by `pq`.
    pub conclusion: bool,
    /// The hypothesis implies the conclusion.
    pub holds: bool,
}

/// Evaluates the implication "products of coprime prime-power π-classes are
/// single classes ⇒ no chief factor has order divisible by `pq`" for
/// `π = {2, p, q}`.
pub fn pi_condition(
    cd: &ClassData,
    chief: &ChiefSeries,
    p: usize,
    q: usize,
) -> Result<PiOutcome, PredicateError> {
    if p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q) {
        return Err(PredicateError::InvalidPrimePair { p, q });
    }
    let mode = PairMode::PiRestricted(vec![2, p, q]);
    let mut hypothesis = PredicateResult::pass();
    for (i, j) in class_pairs(cd, &mode)? {
        if cd.product_is_single_class(i, j).is_none() {
            hypothesis =
                PredicateResult::fail(split_witness(cd, i, j).expect("product meets two classes"));
            break;
        }
    }
    let conclusion = !chief.has_factor_divisible_by(&[p, q]);
    Ok(PiOutcome {
        primes: [2, p, q],
        holds: !hypothesis.holds || conclusion,
        hypothesis,
        conclusion,
    })
}
