//! Exact irreducible character tables by Dixon's modular method.
//!
//! The class matrices `(Mᵢ)_jk = a_ijk` are reduced modulo a prime
//! `p ≡ 1 (mod e)` with `p > 2⌈√|G|⌉`, their common eigenvectors give the
//! central characters `ωᵢ = |Cᵢ|χ(gᵢ)/χ(1)` mod p, and each character value is
//! lifted to `Z[ζ_e]` by recovering the multiplicity of every root of unity
//! from the values on powers of the class.

pub mod cyclotomic;
pub mod modular;

use std::cmp::Ordering;
use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::classes::ClassData;
use crate::group::Group;
use crate::primes::{inv_mod, is_prime, mul_mod, pow_mod, primitive_root};

pub use cyclotomic::{CycRing, CycValue};
pub use modular::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharTableError {
    #[error("common eigenspace splitting stalled at {found} of {expected} lines")]
    SplitStalled { found: usize, expected: usize },
    #[error("class matrix is not diagonalizable modulo p")]
    NotDiagonalizable,
    #[error("no admissible degree for a central character")]
    NoDegree,
    #[error("root-of-unity multiplicity out of range")]
    MultiplicityOutOfRange,
    #[error("degenerate modular data: {0}")]
    Degenerate(&'static str),
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌈√order⌉`.
pub fn dixon_prime(order: usize, e: usize) -> u64 {
    let mut root = (order as f64).sqrt().ceil() as usize;
    while root * root < order {
        root += 1;
    }
    while root > 0 && (root - 1) * (root - 1) >= order {
        root -= 1;
    }
    let bound = 2 * root;
    let mut p = e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
    }
    p as u64
}

/// `Mᵢ` with `(Mᵢ)_jk = a_ijk mod p`, for every class `i`.
pub fn class_matrices(cd: &ClassData, p: u64) -> Vec<Matrix> {
    let r = cd.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    cd.class_coefficients(i, j)
                        .coefficients
                        .iter()
                        .map(|&a| a % p)
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub use modular::eigensplit;

/// Render a value as a complex number rounded to `precision` decimal places.
pub fn render_complex(v: &CycValue, precision: u32) -> Complex64 {
    let scale = 10f64.powi(precision as i32);
    let z = v.to_complex();
    let round = |x: f64| {
        let r = (x * scale).round() / scale;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    Complex64::new(round(z.re), round(z.im))
}

#[derive(Debug, Clone)]
pub struct CharacterRow {
    pub degree: u64,
    /// One value per class.
    pub values: Vec<CycValue>,
    /// Classes on which the value equals the degree.
    pub kernel: Vec<usize>,
}

impl CharacterRow {
    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    /// Classes with a nonzero value.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&k| !self.values[k].is_zero())
            .collect()
    }
}

pub struct CharacterTable {
    classes: Arc<ClassData>,
    ring: Arc<CycRing>,
    prime: u64,
    root_mod_p: u64,
    rows: Vec<CharacterRow>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("group", &self.group().name())
            .field("exponent", &self.exponent())
            .field("prime", &self.prime)
            .field("degrees", &self.degrees())
            .finish()
    }
}

/// Lifts central characters `ω` (as produced by [`eigensplit`]) to exact
/// characters.
pub fn lift_characters(
    central: &[Vec<u64>],
    classes: Arc<ClassData>,
    p: u64,
) -> Result<CharacterTable, CharTableError> {
    let group = classes.group().clone();
    let order = group.order();
    let e = group.exponent();
    let ring = CycRing::new(e);
    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let n_mod = order as u64 % p;

    let mut rows = Vec::with_capacity(central.len());
    for omega in central {
        let sizes_inv: Vec<u64> = (0..classes.len())
            .map(|i| inv_mod(classes.size(i) as u64 % p, p))
            .collect();
        let norm = (0..classes.len()).fold(0u64, |acc, i| {
            let t = mul_mod(omega[i], omega[classes.inverse_class(i)], p);
            (acc + mul_mod(t, sizes_inv[i], p)) % p
        });
        if norm == 0 {
            return Err(CharTableError::NoDegree);
        }
        let target = mul_mod(n_mod, inv_mod(norm, p), p);
        let degree = (1..=order as u64)
            .take_while(|d| d * d <= order as u64)
            .find(|&d| (order as u64).is_multiple_of(d) && mul_mod(d, d, p) == target)
            .ok_or(CharTableError::NoDegree)?;
        let modular: Vec<u64> = (0..classes.len())
            .map(|i| mul_mod(mul_mod(degree, omega[i], p), sizes_inv[i], p))
            .collect();

        let mut values = Vec::with_capacity(classes.len());
        for i in 0..classes.len() {
            let m = classes.element_order(i);
            let t = pow_mod(z, (e / m) as u64, p);
            let t_inv = inv_mod(t, p);
            let m_inv = inv_mod(m as u64 % p, p);
            let mut mults = vec![0i64; e];
            let mut total = 0u64;
            for k in 0..m {
                let step = pow_mod(t_inv, k as u64, p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for j in 0..m {
                    acc = (acc + mul_mod(modular[classes.power_class(i, j)], w, p)) % p;
                    w = mul_mod(w, step, p);
                }
                let mk = mul_mod(acc, m_inv, p);
                if mk > degree {
                    return Err(CharTableError::MultiplicityOutOfRange);
                }
                total += mk;
                mults[k * (e / m)] = mk as i64;
            }
            if total != degree {
                return Err(CharTableError::MultiplicityOutOfRange);
            }
            values.push(CycValue::from_root_multiplicities(&ring, &mults));
        }
        let deg_value = CycValue::from_int(&ring, degree as i64);
        let kernel = (0..values.len())
            .filter(|&k| values[k] == deg_value)
            .collect();
        rows.push(CharacterRow {
            degree,
            values,
            kernel,
        });
    }
    rows.sort_by(compare_rows);
    Ok(CharacterTable {
        classes,
        ring,
        prime: p,
        root_mod_p: z,
        rows,
    })
}

/// Degree ascending, then rendered values in decreasing (re, im) order so
/// that the trivial character leads.
fn compare_rows(a: &CharacterRow, b: &CharacterRow) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.values.iter().zip(&b.values) {
            let (x, y) = (render_complex(x, 9), render_complex(y, 9));
            let ord = y.re.total_cmp(&x.re).then_with(|| y.im.total_cmp(&x.im));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| x.coeffs().cmp(y.coeffs()))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    })
}

impl CharacterTable {
    /// Full pipeline: exponent, Dixon prime, class matrices, splitting, lifting.
    pub fn compute(classes: Arc<ClassData>) -> Result<CharacterTable, CharTableError> {
        let group = classes.group();
        let p = dixon_prime(group.order(), group.exponent());
        let matrices = class_matrices(&classes, p);
        // the identity class matrix is the identity; skip it
        let central = eigensplit(&matrices[1.min(matrices.len() - 1)..], p)?;
        lift_characters(&central, classes, p)
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn group(&self) -> &Arc<Group> {
        self.classes.group()
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn exponent(&self) -> usize {
        self.ring.exponent()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The primitive e-th root of unity in GF(p) identified with `ζ_e`.
    pub fn root_mod_p(&self) -> u64 {
        self.root_mod_p
    }

    pub fn rows(&self) -> &[CharacterRow] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> &CharacterRow {
        &self.rows[k]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    pub fn value(&self, row: usize, class: usize) -> &CycValue {
        &self.rows[row].values[class]
    }

    /// `χ_row(g)` for an element index `g`.
    pub fn evaluate(&self, row: usize, element: usize) -> &CycValue {
        self.value(row, self.classes.class_of(element))
    }

    pub fn int(&self, n: i64) -> CycValue {
        CycValue::from_int(&self.ring, n)
    }

    /// Kernel of a row as a sorted element list.
    pub fn kernel_elements(&self, row: usize) -> Vec<usize> {
        self.classes.union(&self.rows[row].kernel)
    }

    pub fn linear_count(&self) -> usize {
        self.rows.iter().filter(|r| r.is_linear()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    fn table(name: &str, params: &[usize]) -> CharacterTable {
        let g = Arc::new(builtin(name, params).unwrap().realize().unwrap());
        CharacterTable::compute(Arc::new(ClassData::new(g))).unwrap()
    }

    #[test]
    fn exponents_and_primes() {
        let s3 = builtin("symmetric", &[3]).unwrap().realize().unwrap();
        assert_eq!(s3.exponent(), 6);
        assert_eq!(dixon_prime(6, 6), 7);
        let q8 = builtin("quaternion", &[8]).unwrap().realize().unwrap();
        assert_eq!(q8.exponent(), 4);
        assert_eq!(dixon_prime(8, 4), 13);
        assert_eq!(dixon_prime(2, 2), 5);
        let c1 = builtin("cyclic", &[1]).unwrap().realize().unwrap();
        assert_eq!(c1.exponent(), 1);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn class_matrices_s3() {
        let g = Arc::new(builtin("symmetric", &[3]).unwrap().realize().unwrap());
        let cd = ClassData::new(g);
        let ms = class_matrices(&cd, 7);
        let r = cd.len();
        for (j, row) in ms[0].iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                assert_eq!(x, u64::from(j == k));
            }
        }
        // fixing z in C_k, each x in C_i determines y = x⁻¹z: Σ_j a_ijk = |C_i|
        for (i, m) in ms.iter().enumerate() {
            for k in 0..r {
                let col: u64 = (0..r).map(|j| m[j][k]).sum();
                assert_eq!(col % 7, cd.size(i) as u64 % 7);
            }
        }
        // commutativity of the class algebra
        for a in &ms {
            for b in &ms {
                for i in 0..r {
                    for k in 0..r {
                        let ab: u64 = (0..r).map(|j| a[i][j] * b[j][k]).sum::<u64>() % 7;
                        let ba: u64 = (0..r).map(|j| b[i][j] * a[j][k]).sum::<u64>() % 7;
                        assert_eq!(ab, ba);
                    }
                }
            }
        }
    }

    #[test]
    fn s3_table() {
        let t = table("symmetric", &[3]);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let cd = t.classes();
        let id = 0;
        let trans = (0..3).find(|&i| cd.element_order(i) == 2).unwrap();
        let three = (0..3).find(|&i| cd.element_order(i) == 3).unwrap();
        let row = t.row(2);
        assert_eq!(row.values[id].as_int(), Some(2));
        assert_eq!(row.values[trans].as_int(), Some(0));
        assert_eq!(row.values[three].as_int(), Some(-1));
        // trivial row leads and is all ones
        assert!(t.row(0).values.iter().all(|v| v.as_int() == Some(1)));
        let g = t.group();
        let x = g
            .index_of(&crate::Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        let z = render_complex(t.evaluate(2, x), 9);
        assert!((z.re + 1.0).abs() < 1e-9 && z.im.abs() < 1e-9);
    }

    #[test]
    fn q8_table() {
        let t = table("quaternion", &[8]);
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        let central = (1..5).find(|&i| t.classes().size(i) == 1).unwrap();
        assert_eq!(t.value(4, central).as_int(), Some(-2));
    }

    #[test]
    fn trivial_group_table() {
        let t = table("cyclic", &[1]);
        assert_eq!(t.len(), 1);
        assert_eq!(t.value(0, 0).as_int(), Some(1));
    }

    #[test]
    fn abelian_tables_are_linear() {
        let t = table("cyclic", &[8]);
        assert_eq!(t.degrees(), vec![1; 8]);
        for k in 0..8 {
            for g in 0..8 {
                let z = t.evaluate(k, g).to_complex();
                assert!((z.norm() - 1.0).abs() < 1e-9);
            }
        }
    }
}
