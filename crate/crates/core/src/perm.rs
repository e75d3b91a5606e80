//! Permutations of `{0, .., n-1}`.
//!
//! Products are read left to right: `a.compose(&b)` sends `x` to `b(a(x))`,
//! i.e. `a` is applied first.

use std::fmt;
use std::ops::Mul;

use crate::group::GroupError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint cycles. A point may appear at most
    /// once across all cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (pos, &point) in cycle.iter().enumerate() {
                if point >= degree {
                    return Err(GroupError::PointOutOfRange { point, degree });
                }
                if seen[point] {
                    return Err(GroupError::NotBijective);
                }
                seen[point] = true;
                images[point] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::primes::lcm(acc, c.len()))
    }

    /// Copy acting on `offset..offset+self.degree()` inside a larger point set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
            .expect("degree mismatch in permutation product")
    }
}

/// Disjoint-cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let v: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &v).unwrap()
    }

    #[test]
    fn involution_squared_is_identity() {
        let t = cyc(3, &[&[0, 1]]);
        assert!((&t * &t).is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let p = cyc(4, &[&[0, 2, 3]]);
        assert_eq!(&Permutation::identity(4) * &p, p);
        assert_eq!(&p * &Permutation::identity(4), p);
    }

    // Regression for the product convention: apply the left factor first.
    #[test]
    fn left_factor_applies_first() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[0, 1, 2]]);
        let ab = a.compose(&b).unwrap();
        for x in 0..3 {
            // hand-applied: a: 0->1, 1->0, 2->2 ; b: 0->1, 1->2, 2->0
            let by_hand = [1usize, 0, 2].map(|y| [1usize, 2, 0][y])[x];
            assert_eq!(ab.apply(x), by_hand);
        }
        assert_eq!(ab, cyc(3, &[&[0, 2]]));
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = Permutation::identity(2);
        let b = Permutation::identity(3);
        assert!(matches!(
            a.compose(&b),
            Err(GroupError::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn bad_cycles_rejected() {
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![0, 3]]),
            Err(GroupError::PointOutOfRange {
                point: 3,
                degree: 3
            })
        ));
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]),
            Err(GroupError::NotBijective)
        ));
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn order_and_display() {
        let p = cyc(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn composition_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_cancels(a in arb_perm(9)) {
            prop_assert!((&a * &a.inverse()).is_identity());
        }

        #[test]
        fn cycles_round_trip(a in arb_perm(8)) {
            prop_assert_eq!(Permutation::from_cycles(8, &a.cycles()).unwrap(), a);
        }
    }
}
