//! Dense linear algebra over GF(p) and the common-eigenspace splitting of
//! commuting matrices.

use super::CharTableError;
use crate::primes::{inv_mod, mul_mod};

pub type Matrix = Vec<Vec<u64>>;

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Matrix, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for a square or rectangular `A`.
pub fn nullspace(a: &Matrix, p: u64) -> Matrix {
    let ncols = a.first().map_or(0, Vec::len);
    let mut rows = a.clone();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

pub fn mat_vec(m: &Matrix, v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p)
        })
        .collect()
}

/// A subspace of GF(p)^r kept in reduced row echelon form.
#[derive(Debug, Clone)]
struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(mut basis: Matrix, p: u64) -> Subspace {
        let pivots = rref(&mut basis, p);
        Subspace { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits into eigenspaces of `m` restricted to this (invariant) subspace.
    fn split(&self, m: &Matrix, p: u64) -> Result<Vec<Subspace>, CharTableError> {
        let d = self.dim();
        // column t holds the coordinates of m·b_t; RREF coordinates sit at the pivots
        let images: Vec<Vec<u64>> = self.basis.iter().map(|b| mat_vec(m, b, p)).collect();
        let restricted: Matrix = (0..d)
            .map(|s| (0..d).map(|t| images[t][self.pivots[s]]).collect())
            .collect();
        let mut parts = Vec::new();
        let mut found = 0;
        for lambda in 0..p {
            let shifted: Matrix = restricted
                .iter()
                .enumerate()
                .map(|(s, row)| {
                    let mut row = row.clone();
                    row[s] = (row[s] + p - lambda) % p;
                    row
                })
                .collect();
            let kernel = nullspace(&shifted, p);
            if kernel.is_empty() {
                continue;
            }
            found += kernel.len();
            let vectors = kernel
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; self.basis[0].len()];
                    for (coef, b) in c.iter().zip(&self.basis) {
                        for (x, &y) in v.iter_mut().zip(b) {
                            *x = (*x + mul_mod(*coef, y, p)) % p;
                        }
                    }
                    v
                })
                .collect();
            parts.push(Subspace::new(vectors, p));
            if found == d {
                return Ok(parts);
            }
        }
        Err(CharTableError::NotDiagonalizable)
    }
}

/// Splits GF(p)^r into common eigenspaces of commuting matrices until `r`
/// lines remain. Each returned vector is scaled so its first coordinate is 1.
pub fn eigensplit(matrices: &[Matrix], p: u64) -> Result<Vec<Vec<u64>>, CharTableError> {
    let r = matrices.first().map_or(0, Vec::len);
    if r == 0 {
        return Ok(Vec::new());
    }
    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![Subspace::new(identity, p)];
    for m in matrices {
        if spaces.len() == r {
            break;
        }
        let mut next = Vec::with_capacity(r);
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
            } else {
                next.extend(space.split(m, p)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(CharTableError::SplitStalled {
            found: spaces.len(),
            expected: r,
        });
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s.basis[0];
            if v[0] == 0 {
                return Err(CharTableError::Degenerate(
                    "eigenvector vanishes at the identity class",
                ));
            }
            let inv = inv_mod(v[0], p);
            Ok(v.iter().map(|&x| mul_mod(x, inv, p)).collect())
        })
        .collect()
}
