//! Integer-side number theory: residues, Gauss-lemma sets, Legendre symbols
//! (two independent routes), Fermat and Euler quotients, floor sums, and the
//! parity identity used to normalize signs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// The argument is divisible by the prime, so the quantity is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{p} divides {m}")]
pub struct DividesError {
    pub p: u64,
    pub m: i64,
}

/// Trial-division primality check; guards the CLI boundary.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The least non-negative residue of x modulo p.
pub fn least_residue(x: i64, p: u64) -> u64 {
    (x as i128).rem_euclid(p as i128) as u64
}

fn check_coprime(p: u64, m: i64) -> Result<(), DividesError> {
    if least_residue(m, p) == 0 {
        Err(DividesError { p, m })
    } else {
        Ok(())
    }
}

/// The set `R_p(m) = { 1 <= j < p/2 : <jm>_p > p/2 }` with its statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSet {
    pub p: u64,
    pub m: i64,
    /// Strictly increasing members j of R_p(m).
    pub members: Vec<u64>,
    /// `sum over members of (p - <jm>_p)`.
    pub sigma: u64,
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{}({}) = {{", self.p, self.m)?;
        for (i, j) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}, sigma = {}", self.sigma)
    }
}

pub fn residue_set(p: u64, m: i64) -> Result<ResidueSet, DividesError> {
    check_coprime(p, m)?;
    let mut members = Vec::new();
    let mut sigma = 0;
    for j in 1..=(p - 1) / 2 {
        let r = least_residue(j as i64 * m, p);
        if 2 * r > p {
            members.push(j);
            sigma += p - r;
        }
    }
    Ok(ResidueSet {
        p,
        m,
        members,
        sigma,
    })
}

/// Legendre symbol via Gauss's lemma: `(m/p) = (-1)^{|R_p(m)|}`.
pub fn legendre_gauss(p: u64, m: i64) -> Result<i32, DividesError> {
    let set = residue_set(p, m)?;
    Ok(if set.members.len() % 2 == 0 { 1 } else { -1 })
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol via Euler's criterion: `m^{(p-1)/2} mod p`.
///
/// Independent of [`legendre_gauss`]; the two must always agree.
pub fn legendre_euler(p: u64, m: i64) -> Result<i32, DividesError> {
    check_coprime(p, m)?;
    let r = mod_pow(least_residue(m, p), (p - 1) / 2, p);
    Ok(if r == 1 { 1 } else { -1 })
}

/// Least positive m' with `m' * m = 1 (mod p)`.
pub fn mod_inverse(m: i64, p: u64) -> Result<u64, DividesError> {
    check_coprime(p, m)?;
    Ok(mod_pow(least_residue(m, p), p - 2, p))
}

/// `sum_{j=1}^{(p-1)/2} floor(j*m/p)`.
pub fn floor_sum_half(p: u64, m: u64) -> u64 {
    (1..=(p - 1) / 2).map(|j| j * m / p).sum()
}

/// The Fermat quotient `(m^{p-1} - 1) / p`, exact.
pub fn fermat_quotient_int(p: u64, m: i64) -> Result<BigInt, DividesError> {
    check_coprime(p, m)?;
    let num = BigInt::from(m).pow(p as u32 - 1) - 1;
    let (quot, rem) = num_integer::Integer::div_rem(&num, &BigInt::from(p));
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// The Euler quotient `(m^{(p-1)/2} - (m/p)) / p`, exact.
pub fn euler_quotient_int(p: u64, m: i64) -> Result<BigInt, DividesError> {
    let eps = legendre_euler(p, m)?;
    let num = BigInt::from(m).pow((p as u32 - 1) / 2) - eps;
    let (quot, rem) = num_integer::Integer::div_rem(&num, &BigInt::from(p));
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// Parity identity linking the floor sum to the sign data:
///
/// ```text
/// sum_{k=1}^{floor(m/2)} floor(kp/m)
///   = (p-1)/2 * floor(m/2) + (p^2-1)(m-1)/8 - |R_p(m)|   (mod 2)
/// ```
pub fn parity_identity_check(p: u64, m: u64) -> Result<bool, DividesError> {
    assert!(m >= 2, "parity identity stated for m >= 2");
    let set = residue_set(p, m as i64)?;
    let half = m / 2;
    let lhs: u64 = (1..=half).map(|k| k * p / m).sum();
    let rhs = ((p - 1) / 2) * half + (p * p - 1) / 8 * (m - 1) + set.members.len() as u64;
    Ok(lhs % 2 == rhs % 2)
}

/// Integer binomial coefficient as a `BigInt`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 1..=k.min(n - k) {
        acc = acc * BigInt::from(n - i + 1) / BigInt::from(i);
    }
    acc
}

/// Canonical residue of x modulo a positive BigInt modulus, in [0, modulus).
pub fn big_mod(x: &BigInt, modulus: &BigInt) -> BigInt {
    let r = x % modulus;
    if r.is_negative() {
        r + modulus
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRIMES_TO_97: &[u64] = &[
        5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    ];

    #[test]
    fn least_residue_examples() {
        assert_eq!(least_residue(7, 5), 2);
        assert_eq!(least_residue(-3, 7), 4);
        assert_eq!(least_residue(0, 11), 0);
    }

    #[test]
    fn residue_set_examples() {
        let s = residue_set(5, 1).unwrap();
        assert!(s.members.is_empty());
        assert_eq!(s.sigma, 0);
        // enumerate j in {1,2}: <4>_5 = 4 > 5/2
        let s = residue_set(5, 2).unwrap();
        assert_eq!(s.members, vec![2]);
        assert_eq!(s.sigma, 1);
        // <6>_7 = 6 > 7/2, the others below
        let s = residue_set(7, 3).unwrap();
        assert_eq!(s.members, vec![2]);
        assert_eq!(s.sigma, 1);
        assert_eq!(residue_set(5, 10), Err(DividesError { p: 5, m: 10 }));
    }

    #[test]
    fn residue_set_invariants() {
        for &p in &[5u64, 7, 11, 13] {
            for m in 1..3 * p as i64 {
                if m % p as i64 == 0 {
                    continue;
                }
                let s = residue_set(p, m).unwrap();
                let recomputed: u64 = s
                    .members
                    .iter()
                    .map(|&j| p - least_residue(j as i64 * m, p))
                    .sum();
                assert_eq!(s.sigma, recomputed);
                for j in 1..=(p - 1) / 2 {
                    let inside = 2 * least_residue(j as i64 * m, p) > p;
                    assert_eq!(inside, s.members.contains(&j));
                }
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_gauss(5, 1).unwrap(), 1);
        assert_eq!(legendre_gauss(5, 2).unwrap(), -1);
        assert_eq!(legendre_gauss(7, 3).unwrap(), -1);
        assert_eq!(legendre_euler(5, 2).unwrap(), -1); // 2^2 = 4 = -1
        assert_eq!(legendre_euler(7, 2).unwrap(), 1); // 2^3 = 8 = 1
        assert_eq!(legendre_euler(13, 1).unwrap(), 1);
    }

    #[test]
    fn legendre_routes_agree_up_to_97() {
        for &p in PRIMES_TO_97 {
            for m in 1..p as i64 {
                assert_eq!(
                    legendre_gauss(p, m).unwrap(),
                    legendre_euler(p, m).unwrap(),
                    "p={p} m={m}"
                );
            }
        }
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(2, 5).unwrap(), 3);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert!(mod_inverse(10, 5).is_err());
        // negative and large m reduce first
        assert_eq!(mod_inverse(-2, 5).unwrap(), 2);
        assert_eq!(mod_inverse(9, 7).unwrap(), 4);
    }

    #[test]
    fn floor_sum_examples() {
        assert_eq!(floor_sum_half(5, 1), 0);
        assert_eq!(floor_sum_half(5, 3), 1); // 0 + 1
        // direct enumeration: floor(2/7) + floor(4/7) + floor(6/7) = 0
        assert_eq!(floor_sum_half(7, 2), 0);
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(fermat_quotient_int(5, 2).unwrap(), BigInt::from(3));
        assert_eq!(fermat_quotient_int(7, 1).unwrap(), BigInt::zero());
        assert_eq!(fermat_quotient_int(7, 2).unwrap(), BigInt::from(9));
        assert_eq!(euler_quotient_int(5, 2).unwrap(), BigInt::from(1));
        assert_eq!(euler_quotient_int(11, 1).unwrap(), BigInt::zero());
        assert_eq!(euler_quotient_int(7, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn fermat_euler_relation_mod_p() {
        // q_p(2) = 2 (2/p) eq_p(2)  (mod p)
        for &p in PRIMES_TO_97 {
            let lhs = fermat_quotient_int(p, 2).unwrap();
            let rhs = BigInt::from(2 * legendre_euler(p, 2).unwrap())
                * euler_quotient_int(p, 2).unwrap();
            assert!(
                big_mod(&(lhs - rhs), &BigInt::from(p)).is_zero(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn complement_law() {
        // members(R_p(-m)) is the complement of members(R_p(m)) in {1..(p-1)/2}
        for &p in &[5u64, 7, 11, 13] {
            for m in 1..2 * p as i64 {
                if m % p as i64 == 0 {
                    continue;
                }
                let pos = residue_set(p, m).unwrap();
                let neg = residue_set(p, -m).unwrap();
                let mut union: Vec<u64> = pos.members.iter().chain(&neg.members).copied().collect();
                union.sort_unstable();
                let full: Vec<u64> = (1..=(p - 1) / 2).collect();
                assert_eq!(union, full, "p={p} m={m}");
            }
        }
        assert_eq!(residue_set(5, -2).unwrap().members, vec![1]);
        assert_eq!(residue_set(11, 7).unwrap().members, vec![1, 3, 4]);
    }

    #[test]
    fn image_partition() {
        // {<-jm>_p : j in R_p(m)} and {<jm>_p : j in R_p(-m)} partition {1..(p-1)/2}
        for &p in &[5u64, 7, 11, 13] {
            for m in 1..p as i64 {
                if m % p as i64 == 0 {
                    continue;
                }
                let pos = residue_set(p, m).unwrap();
                let neg = residue_set(p, -m).unwrap();
                let mut image: Vec<u64> = pos
                    .members
                    .iter()
                    .map(|&j| least_residue(-(j as i64) * m, p))
                    .chain(neg.members.iter().map(|&j| least_residue(j as i64 * m, p)))
                    .collect();
                image.sort_unstable();
                let full: Vec<u64> = (1..=(p - 1) / 2).collect();
                assert_eq!(image, full, "p={p} m={m}");
            }
        }
    }

    #[test]
    fn parity_examples() {
        assert!(parity_identity_check(5, 3).unwrap());
        assert!(parity_identity_check(7, 2).unwrap());
        assert!(parity_identity_check(5, 4).unwrap());
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn primality_basics() {
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
