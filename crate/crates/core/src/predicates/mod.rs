//! Coprime-multiplicativity predicates over a group, its class algebra and its
//! character table.
//!
//! Every universally quantified condition is conjugation invariant, so the
//! default evaluation fixes `x` as a class representative and lets `y` run
//! over a whole class. [`Evaluation::Elements`] walks every element pair
//! instead and serves as the oracle for the class-level path.

mod characters;
mod classwise;
mod structure;

use serde::Serialize;
use thiserror::Error;

use crate::classes::ClassData;
use crate::group::Group;
use crate::primes::{gcd, is_power_of, is_prime, prime_power_info};

pub use characters::{
    char_mult_condition, class_character_agreement, coset_class_implications,
    multiplicative_characters, nonvanishing_off, two_class_rows, ClassCharacterOutcome,
    CosetClassOutcome, MultiplicativeCharacter,
};
pub use classwise::{
    class_product_condition, class_size_condition, commuting_condition,
    inverse_class_product_condition, order_product_condition, pi_condition, triple_condition,
    PiOutcome,
};
pub use structure::{
    multiplicative_structure, structure_for, Complement, NormalPart, PrimeVerdict, StructureFlags,
    StructureVerdict, StructureWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PredicateError {
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("invalid prime pair ({p}, {q}): both must be odd, distinct primes")]
    InvalidPrimePair { p: usize, q: usize },
    #[error("class {0} is the identity class")]
    IdentityClass(usize),
}

/// Which coprime pairs a predicate quantifies over. The identity never
/// takes part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairMode {
    /// All `x, y ≠ 1` with `gcd(o(x), o(y)) = 1`.
    AllCoprime,
    /// Coprime pairs in which both orders are prime powers.
    PrimePower,
    /// `x` a p-element, `y` a p′-element of prime power order.
    PVsPPrime(usize),
    /// Coprime prime-power pairs whose primes both lie in the given set.
    PiRestricted(Vec<usize>),
}

impl PairMode {
    pub fn validate(&self) -> Result<(), PredicateError> {
        match self {
            PairMode::PVsPPrime(p) if !is_prime(*p) => Err(PredicateError::NotPrime(*p)),
            PairMode::PiRestricted(pi) => match pi.iter().find(|&&p| !is_prime(p)) {
                Some(&p) => Err(PredicateError::NotPrime(p)),
                None => Ok(()),
            },
            _ => Ok(()),
        }
    }

    /// Whether an ordered pair with these element orders belongs to the mode.
    pub fn admits(&self, order_x: usize, order_y: usize) -> bool {
        if order_x == 1 || order_y == 1 || gcd(order_x, order_y) != 1 {
            return false;
        }
        let px = prime_power_info(order_x).map(|(p, _)| p);
        let py = prime_power_info(order_y).map(|(p, _)| p);
        match self {
            PairMode::AllCoprime => true,
            PairMode::PrimePower => px.is_some() && py.is_some(),
            PairMode::PVsPPrime(p) => is_power_of(order_x, *p) && py.is_some(),
            PairMode::PiRestricted(pi) => match (px, py) {
                (Some(p), Some(q)) => pi.contains(&p) && pi.contains(&q),
                _ => false,
            },
        }
    }
}

/// How a universally quantified predicate walks its pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Evaluation {
    #[default]
    ClassPairs,
    Elements,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimePair {
    pub x: usize,
    pub y: usize,
    pub order_x: usize,
    pub order_y: usize,
    /// The primes of `o(x)` and `o(y)` when both are prime powers.
    pub primes: Option<(usize, usize)>,
}

/// Every ordered element pair admitted by `mode`.
pub fn coprime_pairs<'a>(
    g: &'a Group,
    mode: &'a PairMode,
) -> Result<impl Iterator<Item = CoprimePair> + 'a, PredicateError> {
    mode.validate()?;
    let n = g.order();
    Ok((1..n).flat_map(move |x| {
        (1..n).filter_map(move |y| {
            let (order_x, order_y) = (g.element_order(x), g.element_order(y));
            mode.admits(order_x, order_y).then(|| CoprimePair {
                x,
                y,
                order_x,
                order_y,
                primes: prime_power_info(order_x)
                    .zip(prime_power_info(order_y))
                    .map(|((p, _), (q, _))| (p, q)),
            })
        })
    }))
}

/// Ordered class pairs `(i, j)` whose element orders are admitted by `mode`.
pub fn class_pairs(cd: &ClassData, mode: &PairMode) -> Result<Vec<(usize, usize)>, PredicateError> {
    mode.validate()?;
    let r = cd.len();
    Ok((0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .filter(|&(i, j)| mode.admits(cd.element_order(i), cd.element_order(j)))
        .collect())
}

/// Evidence attached to a verdict. Indices refer to group elements unless
/// named as classes or rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Pair {
        x: usize,
        y: usize,
    },
    /// `xy` and `x·y_conj` are not conjugate although `y_conj` is a conjugate of `y`.
    SplitProduct {
        x: usize,
        y: usize,
        y_conj: usize,
    },
    Triple {
        x: usize,
        y: usize,
        z: usize,
    },
    /// `χ_row(xy) ≠ χ_row(x)·χ_row(y)`.
    Character {
        row: usize,
        x: usize,
        y: usize,
    },
    ClassPair {
        left: usize,
        right: usize,
    },
    Row {
        row: usize,
    },
}

impl Witness {
    /// Element indices carried by the witness, in field order.
    pub fn elements(&self) -> Vec<usize> {
        match *self {
            Witness::Pair { x, y } | Witness::Character { x, y, .. } => vec![x, y],
            Witness::SplitProduct { x, y, y_conj } => vec![x, y, y_conj],
            Witness::Triple { x, y, z } => vec![x, y, z],
            Witness::ClassPair { .. } | Witness::Row { .. } => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PredicateResult {
    pub fn pass() -> PredicateResult {
        PredicateResult {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> PredicateResult {
        PredicateResult {
            holds: false,
            witness: Some(witness),
        }
    }

    /// A satisfied existential predicate with its evidence.
    pub fn found(witness: Witness) -> PredicateResult {
        PredicateResult {
            holds: true,
            witness: Some(witness),
        }
    }
}

/// First `y ∈ C_j` with `rep_i·y ∈ C_k`.
pub(crate) fn factor_in_class(cd: &ClassData, i: usize, j: usize, k: usize) -> Option<usize> {
    let g = cd.group();
    let x = cd.rep(i);
    cd.class(j)
        .iter()
        .copied()
        .find(|&y| cd.class_of(g.mul(x, y)) == k)
}

/// A witness that `C_i·C_j` is not a single class.
pub(crate) fn split_witness(cd: &ClassData, i: usize, j: usize) -> Option<Witness> {
    let g = cd.group();
    let (x, y) = (cd.rep(i), cd.rep(j));
    let k = cd.class_of(g.mul(x, y));
    cd.class(j)
        .iter()
        .copied()
        .find(|&y2| cd.class_of(g.mul(x, y2)) != k)
        .map(|y_conj| Witness::SplitProduct { x, y, y_conj })
}
