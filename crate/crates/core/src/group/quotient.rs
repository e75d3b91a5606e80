use super::{Group, GroupError, Subgroup};
use crate::perm::Permutation;

/// `G/N` realized on the cosets of `N`, with the projection `G → G/N`.
#[derive(Debug)]
pub struct Quotient {
    pub group: Group,
    /// `projection[i]` is the index in `group` of the image of element `i`.
    pub projection: Vec<usize>,
}

impl Group {
    /// Quotient by a normal subgroup, acting on cosets `Ng ↦ Ngs`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &x in n.members() {
                coset_of[self.mul(x, g)] = reps.len();
            }
            reps.push(g);
        }
        let index = reps.len();
        let action = |g: usize| -> Permutation {
            let images = reps.iter().map(|&r| coset_of[self.mul(r, g)]).collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };
        let mut gens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|&s| action(s))
            .filter(|p| !p.is_identity())
            .collect();
        if gens.is_empty() {
            gens.push(Permutation::identity(index));
        }
        let name = format!("{}/N{}", self.name(), n.order());
        let group = Group::generate(&gens, &name)?;
        let projection = (0..self.order())
            .map(|g| {
                group
                    .index_of(&action(g))
                    .expect("image lies in the quotient")
            })
            .collect();
        Ok(Quotient { group, projection })
    }
}
