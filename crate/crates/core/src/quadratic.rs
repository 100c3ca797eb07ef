//! Exact solvers for the quadratic forms behind the construction:
//!
//! * side factors `k` whose primes are all `1 mod 3`,
//! * primitive solutions of `k^2 = m^2 - mn + n^2`,
//! * primitive face normals `a^2 + b^2 + c^2 = 3d^2`,
//! * `p = x^2 + 3y^2` and factorization in `Z[sqrt(-3)]`,
//! * the `(r, s)` pair that makes the triangle parameterization integral.
//!
//! Everything is bounded integer scanning and trial division; inputs stay
//! well under 10^12 at the supported scales.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Integer square root of a nonnegative value.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative {n}");
    n.isqrt()
}

/// `Some(r)` when `n = r^2` exactly.
pub fn isqrt_exact(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

pub(crate) fn div_exact(num: i64, den: i64) -> Result<i64> {
    if den == 0 || num % den != 0 {
        Err(Error::Inexact { num, den })
    } else {
        Ok(num / den)
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize expects a positive integer, got {n}");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Number of distinct prime factors congruent to 1 mod 3.
pub fn split_prime_count(k: i64) -> usize {
    factorize(k).iter().filter(|(p, _)| p % 3 == 1).count()
}

/// 1 and every odd `k <= limit` whose prime factors are all `1 mod 3`.
pub fn k_values(limit: i64) -> Vec<i64> {
    assert!(limit >= 1, "k_values limit must be positive");
    let mut out = vec![1];
    out.extend(
        (3..=limit)
            .step_by(2)
            .filter(|&k| factorize(k).iter().all(|(p, _)| p % 3 == 1)),
    );
    out
}

/// Primitive pairs `(m, n)` with `k^2 = m^2 - mn + n^2`, `gcd(m, n) = 1`,
/// `m >= 0`, `n > 0` and `2m < n`, sorted.
///
/// For fixed `m` the form is a quadratic in `n` with discriminant
/// `4k^2 - 3m^2`, so scanning `m` over `[0, k]` finds every solution.
pub fn primitive_mn_solutions(k: i64) -> Vec<(i64, i64)> {
    assert!(k >= 1, "k must be positive");
    let mut out = BTreeSet::new();
    for m in 0..=k {
        let disc = 4 * k * k - 3 * m * m;
        if disc < 0 {
            break;
        }
        let Some(root) = isqrt_exact(disc) else {
            continue;
        };
        for num in [m + root, m - root] {
            if num % 2 != 0 {
                continue;
            }
            let n = num / 2;
            if n > 0 && 2 * m < n && gcd(m, n) == 1 {
                out.insert((m, n));
            }
        }
    }
    out.into_iter().collect()
}

/// Every way to write `n = x^2 + y^2` with `0 <= x <= y`.
fn two_squares(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut x = 0;
    while 2 * x * x <= n {
        if let Some(y) = isqrt_exact(n - x * x) {
            out.push((x, y));
        }
        x += 1;
    }
    out
}

/// Primitive triples `0 < a <= b <= c` with `a^2 + b^2 + c^2 = 3d^2`, sorted.
pub fn abc_solutions(d: i64) -> Vec<[i64; 3]> {
    assert!(d >= 1, "d must be positive");
    let target = 3 * d * d;
    let mut out = BTreeSet::new();
    for a in 1..=d {
        for (b, c) in two_squares(target - a * a) {
            if b >= a && gcd(gcd(a, b), c) == 1 {
                out.insert([a, b, c]);
            }
        }
    }
    out.into_iter().collect()
}

/// The unique `(x, y)` with `x, y > 0` and `p = x^2 + 3y^2` for a prime
/// `p = 1 mod 3`; `(1, 1)` for `p = 2`.
pub fn unique_decomposition(p: i64) -> Result<(i64, i64)> {
    if p == 2 {
        return Ok((1, 1));
    }
    if !is_prime(p) {
        return Err(Error::NoDecomposition(p));
    }
    let mut y = 1;
    while 3 * y * y < p {
        if let Some(x) = isqrt_exact(p - 3 * y * y) {
            return Ok((x, y));
        }
        y += 1;
    }
    Err(Error::NoDecomposition(p))
}

/// Element of norm `p` used as the prime factor above a rational prime:
/// `1 + sqrt(-3)` for 2, `sqrt(-3)` for 3, `x + y*sqrt(-3)` otherwise.
fn prime_element(p: i64) -> Result<Eisenstein> {
    match p {
        3 => Ok(Eisenstein::new(0, 1)),
        _ => unique_decomposition(p).map(|(x, y)| Eisenstein::new(x, y)),
    }
}

/// `re + im * sqrt(-3)`, an element of `Z[sqrt(-3)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Eisenstein {
    pub re: i64,
    pub im: i64,
}

impl Eisenstein {
    pub const ONE: Eisenstein = Eisenstein { re: 1, im: 0 };

    pub const fn new(re: i64, im: i64) -> Self {
        Eisenstein { re, im }
    }

    pub fn norm(self) -> i64 {
        self.re * self.re + 3 * self.im * self.im
    }

    pub fn conj(self) -> Self {
        Eisenstein::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(Eisenstein::ONE, |acc, _| acc * self)
    }

    /// `self / other` when the quotient lies in `Z[sqrt(-3)]`.
    pub fn div_exact(self, other: Eisenstein) -> Option<Eisenstein> {
        let n = other.norm();
        if n == 0 {
            return None;
        }
        let t = self * other.conj();
        (t.re % n == 0 && t.im % n == 0).then(|| Eisenstein::new(t.re / n, t.im / n))
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(
            self.re * o.re - 3 * self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "({}-{}*sqrt(-3))", self.re, -self.im)
        } else {
            write!(f, "({}+{}*sqrt(-3))", self.re, self.im)
        }
    }
}

/// `unit * content * prod(factor^exp)` equals the factored input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    /// Positive gcd of the two input coordinates.
    pub content: i64,
    /// `+1` or `-1`; the only units that can appear.
    pub unit: i64,
    pub factors: Vec<(Eisenstein, u32)>,
}

impl FactorizationResult {
    pub fn product(&self) -> Eisenstein {
        self.factors.iter().fold(
            Eisenstein::new(self.unit * self.content, 0),
            |acc, &(f, e)| acc * f.pow(e),
        )
    }
}

/// Factors `u + v*sqrt(-3)`.
///
/// The content `gcd(u, v)` is pulled out first. For each rational prime
/// `p` of the reduced norm, the conjugate of the norm-`p` element that
/// divides the reduced value is kept with the exponent of `p`; the prime 2
/// always enters once as `1 +- sqrt(-3)` (norm 4). A reduced value is never
/// divisible by both conjugates, so one division test per prime decides.
pub fn eisenstein_factorization(u: i64, v: i64) -> Result<FactorizationResult> {
    if u == 0 && v == 0 {
        return Err(Error::ZeroInput);
    }
    let content = gcd(u, v);
    let x = Eisenstein::new(u / content, v / content);
    let mut factors = Vec::new();
    for (p, e) in factorize(x.norm()) {
        let (g, e) = match p {
            2 => (Eisenstein::new(1, 1), 1),
            _ => {
                let g = prime_element(p).map_err(|_| Error::NotRepresentable { u, v, prime: p })?;
                (g, e)
            }
        };
        let chosen = if x.div_exact(g).is_some() {
            g
        } else {
            g.conj()
        };
        factors.push((chosen, e));
    }
    let mut out = FactorizationResult {
        content,
        unit: 1,
        factors,
    };
    let prod = out.product();
    if prod == Eisenstein::new(-u, -v) {
        out.unit = -1;
    } else if prod != Eisenstein::new(u, v) {
        return Err(Error::Reconstruction { u, v });
    }
    Ok(out)
}

/// An `(r, s)` pair with both integrality congruences checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RsPair {
    pub r: i64,
    pub s: i64,
    /// `(A*s + 3*B*r) mod 2q`
    pub residue1: i64,
    /// `(A*r - B*s) mod 2q`
    pub residue2: i64,
}

/// Common divisor `P = s + r*sqrt(-3)` of `A + B*sqrt(-3)` and `2q`.
///
/// The rational part is `c = gcd(content, 2q)`; for each prime of
/// `2q / c^2` the matching conjugate factor of `A + B*sqrt(-3)` is taken
/// with exponent `min(its exponent, the prime's exponent)`, the prime 2
/// again counting once. Both `A*s + 3*B*r` and `A*r - B*s` must vanish
/// mod `2q`; otherwise the pair is reported as an error.
pub fn find_rs(a_part: i64, b_part: i64, q: i64) -> Result<RsPair> {
    if q <= 0 {
        return Err(Error::InvalidArgument(format!(
            "q must be positive, got {q}"
        )));
    }
    let f = eisenstein_factorization(a_part, b_part)?;
    let two_q = 2 * q;
    let common = gcd(f.content, two_q);
    if two_q % (common * common) != 0 {
        return Err(Error::ContentTooLarge { common, two_q });
    }
    let mut p = Eisenstein::new(common, 0);
    for (prime, e) in factorize(two_q / (common * common)) {
        let e = if prime == 2 { 1 } else { e };
        let g = prime_element(prime)?;
        for &(factor, fe) in &f.factors {
            if factor == g || factor == g.conj() {
                p = p * factor.pow(fe.min(e));
            }
        }
    }
    let (s, r) = (p.re, p.im);
    let residue1 = (a_part * s + 3 * b_part * r).rem_euclid(two_q);
    let residue2 = (a_part * r - b_part * s).rem_euclid(two_q);
    if residue1 != 0 || residue2 != 0 {
        return Err(Error::NonzeroResidue {
            r,
            s,
            residue1,
            residue2,
            modulus: two_q,
        });
    }
    Ok(RsPair {
        r,
        s,
        residue1,
        residue2,
    })
}
