//! Integer primitives: gcd, modular inverses, Euler's totient and its image.

use crate::error::{Error, Result};

/// Greatest common divisor on signed inputs. `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo `c`, in `0..c`.
pub fn mod_inverse(a: u64, c: u64) -> Result<u64> {
    if c == 0 {
        return Err(Error::PreconditionViolated("modulus must be positive".into()));
    }
    // extended Euclid on (a mod c, c), coefficients kept signed
    let (mut r0, mut r1) = (i128::from(c), i128::from(a % c));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { a, c });
    }
    Ok(s0.rem_euclid(i128::from(c)) as u64)
}

/// Euler's totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for n >= 1");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors are defined for n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Additive order of `f` in `Z_c`, i.e. `c / gcd(c, f)`.
pub fn additive_order(f: u64, c: u64) -> u64 {
    c / gcd_u64(c, f)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

/// Smallest search bound that provably contains every `n` with `Φ(n) = m`.
///
/// If `Φ(n) = m` then every prime `p | n` has `(p - 1) | m`, and
/// `n = m · Π_{p | n} p / (p - 1)`, so `n` is at most `m` times the product
/// of `p / (p - 1)` over all primes `p` with `(p - 1) | m`.
pub fn totient_preimage_bound(m: u64) -> u64 {
    assert!(m >= 1);
    let mut num = u128::from(m);
    let mut den = 1u128;
    for d in divisors(m) {
        let p = d + 1;
        if is_prime(p) {
            num *= u128::from(p);
            den *= u128::from(d);
            let g = {
                let (mut a, mut b) = (num, den);
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a
            };
            num /= g;
            den /= g;
        }
    }
    (num / den) as u64
}

/// Whether `m` is a value of Euler's Φ, searching `n <= search_bound`.
///
/// The bound must be at least [`totient_preimage_bound`] so that a negative
/// answer is a proof rather than a truncation artefact.
pub fn is_totient_number(m: u64, search_bound: u64) -> Result<bool> {
    if m == 0 {
        return Ok(false);
    }
    let required = totient_preimage_bound(m);
    if search_bound < required {
        return Err(Error::BoundTooSmall {
            m,
            bound: search_bound,
            required,
        });
    }
    Ok((1..=search_bound).any(|n| totient(n) == m))
}

/// [`is_totient_number`] with the certified bound.
pub fn is_totient(m: u64) -> bool {
    m >= 1 && totient_witness(m).is_some()
}

/// Smallest `n` with `Φ(n) = m`, if any.
pub fn totient_witness(m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    (1..=totient_preimage_bound(m)).find(|&n| totient(n) == m)
}

/// Sieved values of Φ on `1..=bound`.
#[derive(Debug, Clone)]
pub struct TotientTable {
    phi: Vec<u64>,
}

impl TotientTable {
    pub fn new(bound: u64) -> Self {
        assert!(bound >= 1);
        let mut phi: Vec<u64> = (0..=bound).collect();
        for p in 2..=bound as usize {
            if phi[p] == p as u64 {
                for k in (p..=bound as usize).step_by(p) {
                    phi[k] -= phi[k] / p as u64;
                }
            }
        }
        TotientTable { phi }
    }

    pub fn bound(&self) -> u64 {
        (self.phi.len() - 1) as u64
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.phi.get(n as usize).copied()
    }

    /// Every value the table takes, ascending.
    pub fn image(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.phi[1..].to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }
}
