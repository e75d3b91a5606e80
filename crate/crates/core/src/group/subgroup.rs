use super::{Group, GroupError, TABLE_CACHE_LIMIT};
use crate::primes::{is_power_of, p_part, prime_divisors, prime_power_info};

/// A subgroup of a [`Group`], stored as a sorted index set plus a membership mask.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {}, gens {:?})",
            self.order(),
            self.generators
        )
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Elements whose closure is this subgroup.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.members.iter().filter(|&&x| other.contains(x)).count()
    }
}

/// Normal Sylow p-subgroup and normal Hall p′-subgroup, when they exist.
#[derive(Debug, Clone)]
pub struct NormalHallParts {
    pub normal_sylow_p: Option<Subgroup>,
    pub normal_hall_p_prime: Option<Subgroup>,
}

impl Group {
    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_generated(std::iter::empty())
    }

    pub fn whole(&self) -> Subgroup {
        let mut members: Vec<usize> = (0..self.order()).collect();
        members.sort_unstable();
        Subgroup {
            members,
            mask: vec![true; self.order()],
            generators: self.generators.clone(),
        }
    }

    /// Closure of a generating set. Generators already in the running closure
    /// are dropped from the witness list.
    pub fn subgroup_generated(&self, gens: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut witnesses: Vec<usize> = Vec::new();
        for g in gens {
            if mask[g] {
                continue;
            }
            witnesses.push(g);
            // old·old is closed, so only old·g and new·(all witnesses) are needed
            let mut fresh = Vec::new();
            for &h in &members {
                let x = self.mul(h, g);
                if !mask[x] {
                    mask[x] = true;
                    fresh.push(x);
                }
            }
            let mut k = 0;
            while k < fresh.len() {
                let y = fresh[k];
                for &w in &witnesses {
                    let x = self.mul(y, w);
                    if !mask[x] {
                        mask[x] = true;
                        fresh.push(x);
                    }
                }
                k += 1;
            }
            members.extend(fresh);
        }
        members.sort_unstable();
        Subgroup {
            members,
            mask,
            generators: witnesses,
        }
    }

    /// Subgroup from a set already known to be closed (for instance a union of
    /// classes that forms a kernel). Returns `None` if the set is not a subgroup.
    pub fn subgroup_from_set(&self, set: &[usize]) -> Option<Subgroup> {
        let h = self.subgroup_generated(set.iter().copied());
        (h.order() == {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        })
        .then_some(h)
    }

    pub fn centralizer(&self, i: usize) -> Subgroup {
        self.subgroup_generated((0..self.order()).filter(|&j| self.commute(i, j)))
    }

    /// Elements of `h` commuting with every generator of `a`.
    pub fn centralizer_in(&self, h: &Subgroup, a: &Subgroup) -> Subgroup {
        self.subgroup_generated(
            h.members()
                .iter()
                .copied()
                .filter(|&x| a.generators().iter().all(|&g| self.commute(x, g))),
        )
    }

    pub fn center(&self) -> Subgroup {
        self.subgroup_generated(
            (0..self.order()).filter(|&x| self.generators.iter().all(|&g| self.commute(x, g))),
        )
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        self.normal_closure_under(seed, &self.generators, usize::MAX)
    }

    /// Smallest subgroup containing `seed` and normalized by `conjugators`.
    /// Stops early (returning the partial closure) once the order exceeds `limit`.
    pub(crate) fn normal_closure_under(
        &self,
        seed: &[usize],
        conjugators: &[usize],
        limit: usize,
    ) -> Subgroup {
        let mut gens: Vec<usize> = seed.to_vec();
        let mut sub = self.subgroup_generated(gens.iter().copied());
        loop {
            if sub.order() > limit {
                return sub;
            }
            let missing = sub.generators().iter().find_map(|&x| {
                conjugators
                    .iter()
                    .map(|&s| self.conjugate(x, s))
                    .find(|&y| !sub.contains(y))
            });
            match missing {
                Some(y) => {
                    gens = sub.generators().to_vec();
                    gens.push(y);
                    sub = self.subgroup_generated(gens.iter().copied());
                }
                None => return sub,
            }
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| {
            self.generators
                .iter()
                .all(|&s| h.contains(self.conjugate(x, s)))
        })
    }

    /// True when every element of `h` normalizes `d`.
    pub fn normalizes(&self, h: &Subgroup, d: &Subgroup) -> bool {
        d.generators().iter().all(|&x| {
            h.generators()
                .iter()
                .all(|&s| d.contains(self.conjugate(x, s)))
        })
    }

    /// `[A, B]`: the subgroup generated by all `a⁻¹b⁻¹ab`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut hit = vec![false; self.order()];
        let mut comms = Vec::new();
        for &x in a.members() {
            for &y in b.members() {
                let c = self.commutator(x, y);
                if !hit[c] {
                    hit[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_generated(comms)
    }

    /// `[H, H]` for a subgroup `h`: pairwise commutators at desk scale, the
    /// normal closure (inside `h`) of generator commutators above it.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        if self.order() <= TABLE_CACHE_LIMIT {
            self.commutator_subgroup(h, h)
        } else {
            self.derived_subgroup_by_generators(h)
        }
    }

    pub(crate) fn derived_subgroup_by_generators(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let mut seed = Vec::new();
        for (k, &a) in gens.iter().enumerate() {
            for &b in &gens[k + 1..] {
                seed.push(self.commutator(a, b));
            }
        }
        self.normal_closure_under(&seed, gens, usize::MAX)
    }

    /// `O_p(G)`: generated by the elements whose normal closure is a p-group.
    pub fn p_core(&self, p: usize) -> Subgroup {
        let limit = p_part(self.order(), p);
        let mut accepted = vec![false; self.order()];
        let mut rejected = vec![false; self.order()];
        let mut gens = Vec::new();
        for x in 1..self.order() {
            if accepted[x] || rejected[x] || !self.is_p_element(x, p) {
                continue;
            }
            let n = self.normal_closure_under(&[x], &self.generators, limit);
            if n.order() <= limit && is_power_of(n.order(), p) {
                gens.extend_from_slice(n.generators());
                for &y in n.members() {
                    accepted[y] = true;
                }
            } else {
                for y in self.conjugacy_orbit(x) {
                    rejected[y] = true;
                }
            }
        }
        self.subgroup_generated(gens)
    }

    /// `F(G)`, the product of the p-cores.
    pub fn fitting_subgroup(&self) -> Subgroup {
        let gens: Vec<usize> = prime_divisors(self.order())
            .into_iter()
            .flat_map(|p| self.p_core(p).generators().to_vec())
            .collect();
        self.subgroup_generated(gens)
    }

    pub fn normal_hall_parts(&self, p: usize) -> NormalHallParts {
        let sylow_order = p_part(self.order(), p);
        let core = self.p_core(p);
        let normal_sylow_p = (core.order() == sylow_order).then_some(core);
        let hall = self.subgroup_generated(
            (0..self.order()).filter(|&x| !self.element_order(x).is_multiple_of(p)),
        );
        let normal_hall_p_prime = (hall.order() == self.order() / sylow_order).then_some(hall);
        NormalHallParts {
            normal_sylow_p,
            normal_hall_p_prime,
        }
    }

    /// Whether every nonidentity element of `a` fixes only the identity of `d`
    /// under conjugation.
    pub fn is_frobenius_action(&self, a: &Subgroup, d: &Subgroup) -> Result<bool, GroupError> {
        if !self.normalizes(a, d) {
            return Err(GroupError::Precondition("D is not normalized by A"));
        }
        if a.intersection_order(d) != 1 {
            return Err(GroupError::Precondition("A and D intersect nontrivially"));
        }
        Ok(a.members()
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| d.members().iter().all(|&y| y == 0 || !self.commute(x, y))))
    }

    /// Whether a subgroup is abelian (checked on its generators).
    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let g = h.generators();
        g.iter()
            .enumerate()
            .all(|(k, &a)| g[k + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.members()
            .iter()
            .any(|&x| self.element_order(x) == h.order())
    }

    /// The prime `p` when `h` is a nontrivial p-group.
    pub fn subgroup_prime(&self, h: &Subgroup) -> Option<usize> {
        prime_power_info(h.order()).map(|(p, _)| p)
    }
}
