use thiserror::Error;

use super::{GroupSpec, TAG_C_NOT_NORMAL, TAG_INVERSE_FREE};
use crate::perm::Permutation;
use crate::primes::{gcd, prime_power_info};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuiltinError {
    #[error("unknown built-in group `{0}`")]
    UnknownName(String),
    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParams { name: String, reason: String },
}

fn invalid(name: &str, reason: impl Into<String>) -> BuiltinError {
    BuiltinError::InvalidParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructed bijection")
}

fn cycle(n: usize, pts: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[pts.to_vec()]).expect("constructed cycle")
}

fn expect_params<const N: usize>(name: &str, params: &[usize]) -> Result<[usize; N], BuiltinError> {
    params.try_into().map_err(|_| {
        invalid(
            name,
            format!("expected {N} parameter(s), got {}", params.len()),
        )
    })
}

/// Constructs a named group family member.
///
/// Families: `cyclic n`, `dihedral n` (order 2n), `symmetric n`,
/// `alternating n`, `quaternion 2^k` (generalized quaternion, order ≥ 8),
/// `sl23`, `sl23_semidirect` (SL(2,3) acting on F₃²), `q8_semidirect`,
/// `order54`, `frobenius_field q` (affine group of GF(q), q ≤ 16) and
/// `frobenius n m` (Cₙ ⋊ Cₘ with a faithful action).
pub fn builtin(name: &str, params: &[usize]) -> Result<GroupSpec, BuiltinError> {
    match name {
        "cyclic" => {
            let [n] = expect_params(name, params)?;
            if n == 0 {
                return Err(invalid(name, "n must be positive"));
            }
            let all: Vec<usize> = (0..n).collect();
            let gen = if n == 1 {
                Permutation::identity(1)
            } else {
                cycle(n, &all)
            };
            Ok(GroupSpec::new(format!("C{n}"), vec![gen]))
        }
        "dihedral" => {
            let [n] = expect_params(name, params)?;
            match n {
                0 => Err(invalid(name, "n must be positive")),
                1 => Ok(GroupSpec::new("D2", vec![cycle(2, &[0, 1])])),
                2 => {
                    let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
                    let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
                    Ok(GroupSpec::new("D4", vec![a, b]))
                }
                _ => {
                    let all: Vec<usize> = (0..n).collect();
                    let reflect = perm((0..n).map(|i| (n - i) % n).collect());
                    Ok(GroupSpec::new(
                        format!("D{}", 2 * n),
                        vec![cycle(n, &all), reflect],
                    ))
                }
            }
        }
        "symmetric" => {
            let [n] = expect_params(name, params)?;
            let gens = match n {
                0 => return Err(invalid(name, "n must be positive")),
                1 => vec![Permutation::identity(1)],
                2 => vec![cycle(2, &[0, 1])],
                _ => {
                    let all: Vec<usize> = (0..n).collect();
                    vec![cycle(n, &[0, 1]), cycle(n, &all)]
                }
            };
            Ok(GroupSpec::new(format!("S{n}"), gens))
        }
        "alternating" => {
            let [n] = expect_params(name, params)?;
            let gens = match n {
                0 => return Err(invalid(name, "n must be positive")),
                1 | 2 => vec![Permutation::identity(n)],
                _ => (2..n).map(|k| cycle(n, &[0, 1, k])).collect(),
            };
            Ok(GroupSpec::new(format!("A{n}"), gens))
        }
        "quaternion" => {
            let [order] = expect_params(name, params)?;
            match prime_power_info(order) {
                Some((2, k)) if k >= 3 => Ok(quaternion(order)),
                _ => Err(invalid(name, "order must be 2^k with k >= 3")),
            }
        }
        "sl23" => {
            expect_params::<0>(name, params)?;
            let gens = sl23_generators()
                .iter()
                .map(|m| affine_f3(m, [0, 0]))
                .collect();
            Ok(GroupSpec::new("SL23", gens))
        }
        "sl23_semidirect" => {
            expect_params::<0>(name, params)?;
            let mut gens: Vec<Permutation> = sl23_generators()
                .iter()
                .map(|m| affine_f3(m, [0, 0]))
                .collect();
            gens.push(affine_f3(&IDENTITY, [1, 0]));
            Ok(GroupSpec::new("SL23:3^2", gens))
        }
        "q8_semidirect" => {
            expect_params::<0>(name, params)?;
            let mut gens: Vec<Permutation> = sl23_elements()
                .into_iter()
                .filter(|m| 4 % mat_order(m) == 0)
                .map(|m| affine_f3(&m, [0, 0]))
                .collect();
            gens.push(affine_f3(&IDENTITY, [1, 0]));
            Ok(GroupSpec::new("Q8:3^2", gens).with_tag(TAG_INVERSE_FREE))
        }
        "order54" => {
            expect_params::<0>(name, params)?;
            // z generates Z(Q8) = Z(SL(2,3)); g is an element of order 3
            let elements = sl23_elements();
            let z = elements
                .iter()
                .find(|m| mat_order(m) == 2)
                .copied()
                .expect("SL(2,3) has a central involution");
            let g = elements
                .iter()
                .find(|m| mat_order(m) == 3)
                .copied()
                .expect("SL(2,3) has elements of order 3");
            let gz = mat_mul(&g, &z);
            let gens = vec![
                affine_f3(&gz, [0, 0]),
                affine_f3(&IDENTITY, [1, 0]),
                affine_f3(&IDENTITY, [0, 1]),
            ];
            Ok(GroupSpec::new("order54", gens).with_tag(TAG_C_NOT_NORMAL))
        }
        "frobenius_field" => {
            let [q] = expect_params(name, params)?;
            if q > 16 {
                return Err(invalid(name, "q must be at most 16"));
            }
            let field =
                SmallField::new(q).ok_or_else(|| invalid(name, "q must be a prime power"))?;
            let mut spec = GroupSpec::new(format!("AGL1_{q}"), field.affine_generators());
            if q > 2 {
                spec = spec.with_tag(TAG_INVERSE_FREE);
            }
            Ok(spec)
        }
        "frobenius" => {
            let [n, m] = expect_params(name, params)?;
            if n < 2 || m < 1 {
                return Err(invalid(name, "need n >= 2 and m >= 1"));
            }
            let r = (1..n)
                .filter(|&r| gcd(r, n) == 1)
                .find(|&r| mult_order(r, n) == m)
                .ok_or_else(|| invalid(name, format!("no unit of order {m} modulo {n}")))?;
            let all: Vec<usize> = (0..n).collect();
            let mut gens = vec![cycle(n, &all)];
            if m > 1 {
                gens.push(perm((0..n).map(|x| x * r % n).collect()));
            }
            Ok(GroupSpec::new(format!("C{n}:C{m}"), gens))
        }
        "direct_product" => Err(invalid(name, "use direct_product(a, b)")),
        other => Err(BuiltinError::UnknownName(other.to_string())),
    }
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &GroupSpec, b: &GroupSpec) -> GroupSpec {
    let degree = a.degree + b.degree;
    let gens = a
        .generators
        .iter()
        .map(|g| g.shifted(0, degree))
        .chain(b.generators.iter().map(|g| g.shifted(a.degree, degree)))
        .filter(|g| !g.is_identity())
        .collect::<Vec<_>>();
    let gens = if gens.is_empty() {
        vec![Permutation::identity(degree)]
    } else {
        gens
    };
    GroupSpec::new(format!("{}x{}", a.name, b.name), gens)
}

/// Parses expressions such as `symmetric 4`, `frobenius 7 3`, `sl23` or
/// `direct_product(cyclic 2, alternating 5)`.
pub fn parse_builtin_expr(text: &str) -> Result<GroupSpec, BuiltinError> {
    let text = text.trim();
    if let Some(inner) = text
        .strip_prefix("direct_product(")
        .and_then(|r| r.strip_suffix(')'))
    {
        // split at the top-level comma
        let mut depth = 0;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    let a = parse_builtin_expr(&inner[..i])?;
                    let b = parse_builtin_expr(&inner[i + 1..])?;
                    return Ok(direct_product(&a, &b));
                }
                _ => {}
            }
        }
        return Err(invalid(
            "direct_product",
            "expected two comma-separated factors",
        ));
    }
    let mut words = text.split_whitespace();
    let name = words
        .next()
        .ok_or_else(|| BuiltinError::UnknownName(String::new()))?;
    let params = words
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| invalid(name, format!("`{w}` is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    builtin(name, &params)
}

fn quaternion(order: usize) -> GroupSpec {
    // right regular representation on a^i b^j, point i + n·j
    let n = order / 2;
    let idx = |i: usize, j: usize| i % n + n * j;
    let mut by_a = vec![0; order];
    let mut by_b = vec![0; order];
    for j in 0..2 {
        for i in 0..n {
            // a^i b^j · a = a^(i ± 1) b^j
            by_a[idx(i, j)] = if j == 0 {
                idx(i + 1, 0)
            } else {
                idx(i + n - 1, 1)
            };
            // a^i b · b = a^(i + n/2)
            by_b[idx(i, j)] = if j == 0 { idx(i, 1) } else { idx(i + n / 2, 0) };
        }
    }
    GroupSpec::new(format!("Q{order}"), vec![perm(by_a), perm(by_b)])
}

type Mat = [[usize; 2]; 2];

const IDENTITY: Mat = [[1, 0], [0, 1]];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 3;
        }
    }
    c
}

fn mat_order(m: &Mat) -> usize {
    let mut x = *m;
    let mut k = 1;
    while x != IDENTITY {
        x = mat_mul(&x, m);
        k += 1;
    }
    k
}

fn sl23_generators() -> [Mat; 2] {
    [[[0, 2], [1, 0]], [[1, 1], [0, 1]]]
}

/// All 24 matrices of determinant 1 over GF(3), lexicographic by entries.
fn sl23_elements() -> Vec<Mat> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    if (a * d + 2 * b * c) % 3 == 1 {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// `v ↦ v·M + t` on row vectors of GF(3)², point `x + 3y`.
fn affine_f3(m: &Mat, t: [usize; 2]) -> Permutation {
    perm(
        (0..9)
            .map(|p| {
                let (x, y) = (p % 3, p / 3);
                let u = (x * m[0][0] + y * m[1][0] + t[0]) % 3;
                let v = (x * m[0][1] + y * m[1][1] + t[1]) % 3;
                u + 3 * v
            })
            .collect(),
    )
}

fn mult_order(r: usize, n: usize) -> usize {
    let mut x = r % n;
    let mut k = 1;
    while x != 1 % n {
        x = x * r % n;
        k += 1;
        if k > n {
            return 0;
        }
    }
    k
}

/// GF(q) for q ≤ 16, elements encoded as base-p digit vectors of polynomials.
struct SmallField {
    q: usize,
    p: usize,
    mul: Vec<usize>,
}

impl SmallField {
    fn new(q: usize) -> Option<SmallField> {
        let (p, k) = prime_power_info(q)?;
        let k = k as usize;
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        // search monic modulus x^k + (low part) giving a field
        for low in 0..q {
            let modulus = digits(low);
            let mut table = vec![0; q * q];
            for a in 0..q {
                for b in 0..q {
                    let (da, db) = (digits(a), digits(b));
                    let mut prod = vec![0; 2 * k];
                    for i in 0..k {
                        for j in 0..k {
                            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                        }
                    }
                    for deg in (k..2 * k).rev() {
                        let c = prod[deg];
                        if c != 0 {
                            prod[deg] = 0;
                            for (i, &m) in modulus.iter().enumerate() {
                                prod[deg - k + i] = (prod[deg - k + i] + (p - m) * c) % p;
                            }
                        }
                    }
                    table[a * q + b] = encode(&prod[..k]);
                }
            }
            let no_zero_divisors = (1..q).all(|a| (1..q).all(|b| table[a * q + b] != 0));
            if no_zero_divisors {
                return Some(SmallField { q, p, mul: table });
            }
        }
        None
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&w| {
                let mut x = w;
                let mut k = 1;
                while x != 1 {
                    x = self.mul[x * self.q + w];
                    k += 1;
                }
                k == self.q - 1
            })
            .expect("finite field multiplicative group is cyclic")
    }

    /// `x ↦ ωx` and `x ↦ x + 1`.
    fn affine_generators(&self) -> Vec<Permutation> {
        let w = self.primitive_element();
        let scale = perm((0..self.q).map(|x| self.mul[x * self.q + w]).collect());
        let shift = perm((0..self.q).map(|x| self.add(x, 1)).collect());
        [shift, scale]
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect()
    }
}
