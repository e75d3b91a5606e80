use std::collections::BTreeSet;

use serde::Serialize;

use super::{Group, Subgroup};
use crate::primes::{is_power_of, prime_divisors};

/// A chief series `G = N₀ ▷ N₁ ▷ … ▷ N_r = 1`, every term normal in `G`.
///
/// Chief factors are direct powers of a simple group, so the primes dividing a
/// chief factor are exactly the primes dividing the composition factors it
/// contains; the prime supports recorded here therefore answer questions about
/// composition factor orders.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub subgroups: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
    pub factor_prime_supports: Vec<BTreeSet<usize>>,
}

impl ChiefSeries {
    pub fn len(&self) -> usize {
        self.factor_orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factor_orders.is_empty()
    }

    /// True when some chief factor has order divisible by every prime in `primes`.
    pub fn has_factor_divisible_by(&self, primes: &[usize]) -> bool {
        self.factor_prime_supports
            .iter()
            .any(|s| primes.iter().all(|p| s.contains(p)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructurePredicates {
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_metabelian: bool,
}

impl Group {
    /// `G ⊇ G′ ⊇ G″ ⊇ …` until the terms stabilize.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_subgroup_of(last);
            if next.order() == last.order() {
                return series;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_subgroup_of(&self.whole())
    }

    /// Builds the series from the bottom: each step takes, above the current
    /// term `K`, a normal subgroup `ncl(K ∪ {x})` of minimal order. Minimal
    /// candidates are exactly the lifts of minimal normal subgroups of `G/K`.
    pub fn chief_series(&self) -> ChiefSeries {
        let mut ascending = vec![self.trivial_subgroup()];
        while ascending.last().unwrap().order() < self.order() {
            let k = ascending.last().unwrap();
            let next = self.minimal_normal_above(k);
            ascending.push(next);
        }
        ascending.reverse();
        let factor_orders: Vec<usize> = ascending
            .windows(2)
            .map(|w| w[0].order() / w[1].order())
            .collect();
        let factor_prime_supports = factor_orders
            .iter()
            .map(|&n| prime_divisors(n).into_iter().collect())
            .collect();
        ChiefSeries {
            subgroups: ascending,
            factor_orders,
            factor_prime_supports,
        }
    }

    fn closure_over(&self, k: &Subgroup, x: usize, limit: usize) -> Subgroup {
        let mut seed = k.generators().to_vec();
        seed.push(x);
        self.normal_closure_under(&seed, &self.generators, limit)
    }

    fn minimal_normal_above(&self, k: &Subgroup) -> Subgroup {
        let x0 = (0..self.order()).find(|&x| !k.contains(x)).unwrap();
        let mut best = self.closure_over(k, x0, usize::MAX);
        // Descend: look for an element of `best \ K` whose closure is smaller.
        'outer: loop {
            let mut done = vec![false; self.order()];
            for &y in best.members() {
                if k.contains(y) || done[y] {
                    continue;
                }
                let cand = self.closure_over(k, y, best.order() - 1);
                if cand.order() < best.order() {
                    best = cand;
                    continue 'outer;
                }
                for z in self.conjugacy_orbit(y) {
                    done[z] = true;
                }
            }
            return best;
        }
    }

    /// Every chief factor is a p-group or a p′-group.
    pub fn is_p_solvable(&self, p: usize) -> bool {
        self.chief_series()
            .factor_orders
            .iter()
            .all(|&n| is_power_of(n, p) || n % p != 0)
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subgroup(&self.whole())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.fitting_subgroup().order() == self.order()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn structure_predicates(&self) -> StructurePredicates {
        let series = self.derived_series();
        let solvable = series.last().unwrap().is_trivial();
        StructurePredicates {
            is_abelian: self.is_abelian(),
            is_nilpotent: self.is_nilpotent(),
            is_solvable: solvable,
            is_metabelian: series.len() <= 3 && solvable,
        }
    }
}
