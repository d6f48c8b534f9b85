//! GF(p^k) arithmetic tables, the quadratic character and the Paley core.
//!
//! Fields are represented by full addition/multiplication tables over a fixed
//! element enumeration: element `e` stands for the polynomial whose
//! coefficients are the base-p digits of `e` (constant term first), reduced
//! modulo the lexicographically smallest monic irreducible polynomial of
//! degree `k`. This makes every table deterministic across runs.

use thiserror::Error;

use crate::matrix::SignMatrix;

/// Largest supported field size; keeps the q×q tables cheap.
pub const MAX_FIELD_SIZE: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field size {0} exceeds the {MAX_FIELD_SIZE} cap")]
    TooLarge(u64),
    #[error("element index {index} out of range for a field of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("Paley core requires odd field size, got {0}")]
    EvenFieldSize(usize),
}

/// Multiplication/addition tables and the quadratic character for GF(p^k).
#[derive(Clone)]
pub struct FieldTable {
    p: u64,
    k: u32,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    chi: Vec<i8>,
    modulus: Vec<u64>, // monic irreducible, constant term first; empty for k = 1
}

impl std::fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish_non_exhaustive()
    }
}

impl FieldTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size q = p^k.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Coefficients of the reduction polynomial (constant term first),
    /// including the leading 1; empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        // -a = (p-1)·a; index p-1 encodes the constant polynomial -1.
        self.mul(a, (self.p - 1) as usize)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// χ(x): 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, x: usize) -> Result<i8, FieldError> {
        if x >= self.q {
            return Err(FieldError::IndexOutOfRange {
                index: x,
                size: self.q,
            });
        }
        Ok(self.chi[x])
    }
}

/// Trial-division primality test; adequate for the supported sizes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Decomposes `n` as p^k with p prime and k ≥ 1.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = n;
    // The smallest prime factor must be the base.
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// Builds GF(p^k). Deterministic: for k ≥ 2 the reduction polynomial is the
/// lexicographically smallest monic irreducible of degree k over GF(p),
/// found by trial division against all smaller-degree monic polynomials.
pub fn build_field(p: u64, k: u32) -> Result<FieldTable, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k < 1 {
        return Err(FieldError::BadDegree);
    }
    let mut q: u64 = 1;
    for _ in 0..k {
        q = q.checked_mul(p).ok_or(FieldError::TooLarge(u64::MAX))?;
        if q > MAX_FIELD_SIZE as u64 {
            return Err(FieldError::TooLarge(q));
        }
    }
    let q = q as usize;

    let (add, mul, modulus) = if k == 1 {
        let p_us = p as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = ((a + b) % p_us) as u16;
                mul[a * q + b] = ((a * b) % p_us) as u16;
            }
        }
        (add, mul, Vec::new())
    } else {
        let modulus = smallest_irreducible(p, k);
        let tables = extension_tables(p, k, q, &modulus);
        (tables.0, tables.1, modulus)
    };

    // Quadratic character from the set of nonzero squares.
    let mut chi = vec![-1i8; q];
    chi[0] = 0;
    for y in 1..q {
        chi[mul[y * q + y] as usize] = 1;
    }

    Ok(FieldTable {
        p,
        k,
        q,
        add,
        mul,
        chi,
        modulus,
    })
}

/// Polynomials over GF(p) as coefficient vectors, constant term first,
/// with no trailing zeros.
fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1, "divisors are monic");
    while a.len() >= b.len() {
        let lead = a[a.len() - 1];
        if lead != 0 {
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p - lead * bc % p) % p;
            }
        }
        a.pop();
        a = poly_trim(a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Digits of `m` base p, constant term first, padded to `len`.
fn digits(mut m: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(m % p);
        m /= p;
    }
    out
}

fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let deg = k as usize;
    let q_low = p.pow(k); // number of candidate lower-coefficient vectors
    'candidate: for m in 0..q_low {
        let mut cand = digits(m, p, deg);
        cand.push(1); // monic of degree k
        // Trial division by every monic polynomial of degree 1..=k/2.
        for d in 1..=deg / 2 {
            for lower in 0..p.pow(d as u32) {
                let mut div = digits(lower, p, d);
                div.push(1);
                if poly_rem(cand.clone(), &div, p).is_empty() {
                    continue 'candidate;
                }
            }
        }
        return cand;
    }
    unreachable!("an irreducible polynomial of each degree exists over GF(p)")
}

fn extension_tables(p: u64, k: u32, q: usize, modulus: &[u64]) -> (Vec<u16>, Vec<u16>) {
    let deg = k as usize;
    let p_us = p as usize;
    let encode = |coeffs: &[u64]| -> usize {
        let mut e = 0usize;
        for &c in coeffs.iter().rev() {
            e = e * p_us + c as usize;
        }
        e
    };

    let elems: Vec<Vec<u64>> = (0..q).map(|e| digits(e as u64, p, deg)).collect();

    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for a in 0..q {
        for b in 0..=a {
            let mut sum = vec![0u64; deg];
            for i in 0..deg {
                sum[i] = (elems[a][i] + elems[b][i]) % p;
            }
            let s = encode(&sum) as u16;
            add[a * q + b] = s;
            add[b * q + a] = s;

            let mut prod = vec![0u64; 2 * deg - 1];
            for (i, &ai) in elems[a].iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in elems[b].iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ai * bj) % p;
                }
            }
            let mut rem = poly_rem(poly_trim(prod), modulus, p);
            rem.resize(deg, 0);
            let m = encode(&rem) as u16;
            mul[a * q + b] = m;
            mul[b * q + a] = m;
        }
    }
    (add, mul)
}

/// The Paley core: Q of order q with Q[i][j] = χ(g_j - g_i), zero diagonal,
/// Q·Qᵀ = q·I - J and zero row sums. Symmetric when q ≡ 1 (mod 4), skew when
/// q ≡ 3 (mod 4). For prime fields the natural element ordering makes Q a
/// type-1 circulant with first row (0, χ(1), ..., χ(q-1)).
pub fn paley_core(field: &FieldTable) -> Result<SignMatrix, FieldError> {
    let q = field.q();
    if q % 2 == 0 {
        return Err(FieldError::EvenFieldSize(q));
    }
    Ok(SignMatrix::from_fn(q, |i, j| {
        i32::from(field.chi[field.sub(j, i)])
    }))
}
