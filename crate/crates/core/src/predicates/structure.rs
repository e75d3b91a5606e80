//! Recognizer for groups `G = AH` with `A` cyclic, `H` a normal Sylow or
//! normal Hall subgroup, `H = C_H(A)·[H, A]` and `A` acting fixed-point-freely
//! on `[H, A]`.

use serde::Serialize;

use crate::group::{Group, Subgroup};
use crate::primes::{is_power_of, prime_divisors, prime_power_info};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalPart {
    /// `H` is a normal Sylow p-subgroup.
    Sylow,
    /// `H` is a normal Hall p′-subgroup.
    HallPPrime,
}

#[derive(Debug, Clone)]
pub struct Complement {
    /// Cyclic complement to `H`.
    pub a: Subgroup,
    /// `C_H(A)`.
    pub c: Subgroup,
    /// `[H, A]`.
    pub d: Subgroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct StructureFlags {
    /// `G = AH` with `A > 1` cyclic and `A ∩ H = 1`.
    pub cyclic_complement: bool,
    /// `H = CD` with `C` abelian, `D ⊴ G` and `C ∩ D = 1`.
    pub decomposition: bool,
    /// Every nonidentity element of `A` fixes only `1` in `D`.
    pub frobenius: bool,
}

impl StructureFlags {
    pub fn all(&self) -> bool {
        self.cyclic_complement && self.decomposition && self.frobenius
    }
}

#[derive(Debug, Clone)]
pub struct StructureWitness {
    pub p: usize,
    pub part: NormalPart,
    pub h: Subgroup,
    pub complement: Option<Complement>,
    pub flags: StructureFlags,
    /// Whether `C` is normal in `G`.
    pub c_normal: bool,
}

impl StructureWitness {
    pub fn holds(&self) -> bool {
        self.flags.all()
    }
}

/// Evaluates the structure for one prime and one choice of normal part.
/// `None` when that normal part does not exist or is the whole group.
pub fn structure_for(g: &Group, p: usize, part: NormalPart) -> Option<StructureWitness> {
    let parts = g.normal_hall_parts(p);
    let h = match part {
        NormalPart::Sylow => parts.normal_sylow_p,
        NormalPart::HallPPrime => parts.normal_hall_p_prime,
    }?;
    if h.order() == g.order() {
        return None;
    }
    let index = g.order() / h.order();
    // complements of a normal Hall subgroup are conjugate, so any generator will do
    let Some(gen) = (0..g.order()).find(|&x| g.element_order(x) == index) else {
        return Some(StructureWitness {
            p,
            part,
            h,
            complement: None,
            flags: StructureFlags::default(),
            c_normal: false,
        });
    };
    let a = g.subgroup_generated([gen]);
    let c = g.centralizer_in(&h, &a);
    let d = g.commutator_subgroup(&h, &a);
    let flags = StructureFlags {
        cyclic_complement: a.intersection_order(&h) == 1,
        decomposition: g.is_abelian_subgroup(&c)
            && g.is_normal(&d)
            && c.intersection_order(&d) == 1
            && c.order() * d.order() == h.order(),
        frobenius: g.is_frobenius_action(&a, &d).unwrap_or(false),
    };
    let c_normal = g.is_normal(&c);
    Some(StructureWitness {
        p,
        part,
        h,
        complement: Some(Complement { a, c, d }),
        flags,
        c_normal,
    })
}

#[derive(Debug, Clone)]
pub struct PrimeVerdict {
    pub p: usize,
    pub is_p_group: bool,
    pub is_p_prime_group: bool,
    pub sylow_form: Option<StructureWitness>,
    pub hall_form: Option<StructureWitness>,
    /// p-group, p′-group, abelian, or the structure in either form.
    pub holds: bool,
}

impl PrimeVerdict {
    /// The first form whose flags all hold.
    pub fn passing(&self) -> Option<&StructureWitness> {
        [&self.sylow_form, &self.hall_form]
            .into_iter()
            .flatten()
            .find(|w| w.holds())
    }
}

#[derive(Debug, Clone)]
pub struct StructureVerdict {
    pub is_prime_power: bool,
    pub is_abelian: bool,
    /// One entry per prime divisor of `|G|`.
    pub per_prime: Vec<PrimeVerdict>,
    /// Prime power order, abelian, or the structure with a normal Sylow `H`
    /// for some prime.
    pub holds: bool,
}

impl StructureVerdict {
    pub fn prime(&self, p: usize) -> Option<&PrimeVerdict> {
        self.per_prime.iter().find(|v| v.p == p)
    }

    /// The first passing structure with a normal Sylow `H`.
    pub fn sylow_witness(&self) -> Option<&StructureWitness> {
        self.per_prime
            .iter()
            .filter_map(|v| v.sylow_form.as_ref())
            .find(|w| w.holds())
    }
}

fn prime_verdict(g: &Group, p: usize, is_abelian: bool) -> PrimeVerdict {
    let is_p_group = is_power_of(g.order(), p);
    let is_p_prime_group = !g.order().is_multiple_of(p);
    let sylow_form = structure_for(g, p, NormalPart::Sylow);
    let hall_form = structure_for(g, p, NormalPart::HallPPrime);
    let structured = [&sylow_form, &hall_form]
        .into_iter()
        .flatten()
        .any(|w| w.holds());
    PrimeVerdict {
        p,
        is_p_group,
        is_p_prime_group,
        sylow_form,
        hall_form,
        holds: is_p_group || is_p_prime_group || is_abelian || structured,
    }
}

pub fn multiplicative_structure(g: &Group) -> StructureVerdict {
    let is_prime_power = g.order() == 1 || prime_power_info(g.order()).is_some();
    let is_abelian = g.is_abelian();
    let per_prime: Vec<PrimeVerdict> = prime_divisors(g.order())
        .into_iter()
        .map(|p| prime_verdict(g, p, is_abelian))
        .collect();
    let sylow_structure = per_prime
        .iter()
        .any(|v| v.sylow_form.as_ref().is_some_and(|w| w.holds()));
    StructureVerdict {
        is_prime_power,
        is_abelian,
        holds: is_prime_power || is_abelian || sylow_structure,
        per_prime,
    }
}
