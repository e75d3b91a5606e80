//! Enumerated finite permutation groups and their subgroup machinery.

mod quotient;
mod series;
mod subgroup;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::perm::Permutation;
use crate::primes::{divisors, is_power_of};

pub use quotient::Quotient;
pub use series::{ChiefSeries, StructurePredicates};
pub use subgroup::{NormalHallParts, Subgroup};

/// Default ceiling on enumerated group order.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Largest order for which the multiplication table is materialized.
pub const TABLE_CACHE_LIMIT: usize = 5_000;

pub const ORDER_CAP_ENV: &str = "COPRIME_KIT_ORDER_CAP";

/// The order cap, honoring `COPRIME_KIT_ORDER_CAP` when it parses.
pub fn default_order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cycle list is not a bijection")]
    NotBijective,
    #[error("no generators given")]
    NoGenerators,
    #[error("group order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// A finite permutation group with every element enumerated.
///
/// Element 0 is the identity; the remaining elements appear in breadth-first
/// discovery order from the sorted generator list.
pub struct Group {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    generators: Vec<usize>,
}

impl Group {
    pub fn generate(gens: &[Permutation], name: &str) -> Result<Group, GroupError> {
        Self::generate_with_cap(gens, name, default_order_cap())
    }

    pub fn generate_with_cap(
        gens: &[Permutation],
        name: &str,
        cap: usize,
    ) -> Result<Group, GroupError> {
        let first = gens.first().ok_or(GroupError::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        let mut sorted: Vec<Permutation> = gens.to_vec();
        sorted.sort();
        sorted.dedup();

        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &sorted {
                let next = &elements[i] * g;
                if !lookup.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    lookup.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }

        let generators = sorted.iter().map(|g| lookup[g]).collect();
        let n = elements.len();
        let table = (n <= TABLE_CACHE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(lookup[&(a * b)] as u32);
                }
            }
            t
        });
        let inverses = elements.iter().map(|e| lookup[&e.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        Ok(Group {
            name: name.to_string(),
            degree,
            elements,
            lookup,
            table,
            inverses,
            orders,
            generators,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn has_cached_table(&self) -> bool {
        self.table.is_some()
    }

    /// Index of `elements[i] · elements[j]`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.elements.len() + j] as usize,
            None => self.lookup[&(&self.elements[i] * &self.elements[j])],
        }
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Least `k > 0` with `g^k = 1`.
    #[inline]
    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn pow(&self, i: usize, k: usize) -> usize {
        let k = k % self.orders[i];
        (0..k).fold(0, |acc, _| self.mul(acc, i))
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Orbit of `x` under conjugation by the whole group.
    pub fn conjugacy_orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            for &s in &self.generators {
                let z = self.conjugate(y, s);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit
    }

    /// True when the order of element `i` is a power of `p` (identity included).
    pub fn is_p_element(&self, i: usize, p: usize) -> bool {
        is_power_of(self.orders[i], p)
    }

    pub fn exponent(&self) -> usize {
        self.orders
            .iter()
            .fold(1, |acc, &o| crate::primes::lcm(acc, o))
    }

    /// Element orders that actually occur, ascending.
    pub fn order_spectrum(&self) -> Vec<usize> {
        divisors(self.exponent())
            .into_iter()
            .filter(|d| self.orders.contains(d))
            .collect()
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}
