//! Congruence testing for rational functions modulo powers of `[p]_q`.
//!
//! For prime p the q-integer `[p]_q = 1 + q + ... + q^{p-1}` is the p-th
//! cyclotomic polynomial, irreducible over the rationals. The kernel relies
//! on that irreducibility: a congruence `a = b (mod [p]_q^k)` between
//! rational functions means that a - b, written with a denominator coprime
//! to `[p]_q`, has numerator divisible by `[p]_q^k`.
//!
//! Denominators are allowed to carry `[p]_q` factors (the q-Fermat and
//! q-Euler quotients do by construction). Writing v for the `[p]_q`-adic
//! valuation and X for the cross-difference `a.num * b.den - b.num * a.den`,
//! the congruence holds if and only if
//!
//! ```text
//! v(X) >= k + v(a.den) + v(b.den)
//! ```
//!
//! which is decided by one monic division of each operand modulo
//! `[p]_q^{k + v(a.den) + v(b.den)}` followed by a remainder check. When both
//! denominators are coprime to `[p]_q` this is exactly divisibility of the
//! cross-difference by the modulus. Adding any multiple of the modulus to
//! either side never changes the verdict; adding 1 to one side always breaks
//! a holding congruence.

use num_traits::One;

use crate::numtheory::is_prime;

use super::{IntPoly, RatFunc};

/// A congruence modulus `[p]_q^power` together with its irreducible radical.
#[derive(Debug, Clone)]
pub struct Modulus {
    radical: IntPoly,
    power: u32,
    poly: IntPoly,
}

impl Modulus {
    /// `[p]_q` for prime p.
    pub fn cyclotomic(p: u64) -> Self {
        Modulus::cyclotomic_power(p, 1)
    }

    /// `[p]_q^2` for prime p.
    pub fn cyclotomic_squared(p: u64) -> Self {
        Modulus::cyclotomic_power(p, 2)
    }

    /// `[p]_q^power` for prime p.
    pub fn cyclotomic_power(p: u64, power: u32) -> Self {
        assert!(is_prime(p), "modulus requires a prime, got {p}");
        assert!(power >= 1);
        let radical = q_int_poly(p);
        let poly = radical.pow(power);
        Modulus {
            radical,
            power,
            poly,
        }
    }

    pub fn radical(&self) -> &IntPoly {
        &self.radical
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// The modulus as a polynomial.
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// `[p]_q`-adic valuation of a nonzero polynomial.
    fn valuation(&self, x: &IntPoly) -> u32 {
        debug_assert!(!x.is_zero());
        let mut v = 0;
        let mut cur = x.clone();
        loop {
            let (quot, rem) = cur.divrem_monic(&self.radical).expect("radical is monic");
            if !rem.is_zero() {
                return v;
            }
            v += 1;
            cur = quot;
        }
    }
}

/// `[n]_q` as a polynomial, private to the kernel.
fn q_int_poly(n: u64) -> IntPoly {
    IntPoly::new(vec![One::one(); n as usize])
}

/// True iff `[p]_q` does not divide `den`.
///
/// Because `[p]_q` is irreducible for prime p, this suffices for coprimality
/// of `den` to both `[p]_q` and `[p]_q^2`.
pub fn coprimality_check(den: &IntPoly, p: u64) -> bool {
    debug_assert!(is_prime(p));
    !den.rem_monic(&q_int_poly(p)).expect("monic").is_zero()
}

/// Canonical remainder witnessing `a = b (mod modulus)`; zero iff congruent.
///
/// Computes the remainder of the cross-difference modulo
/// `radical^{power + v(a.den) + v(b.den)}`, reducing all four operands first;
/// the extra radical powers absorb the denominators' own radical content, so
/// the result is zero exactly when the congruence holds in the localization
/// at the radical.
pub fn congruence_remainder(a: &RatFunc, b: &RatFunc, modulus: &Modulus) -> IntPoly {
    let dv = modulus.valuation(a.den()) + modulus.valuation(b.den());
    let ext = if dv == 0 {
        modulus.poly().clone()
    } else {
        modulus.radical().pow(modulus.power + dv)
    };
    let ra = a.num().rem_monic(&ext).expect("monic");
    let da = a.den().rem_monic(&ext).expect("monic");
    let rb = b.num().rem_monic(&ext).expect("monic");
    let db = b.den().rem_monic(&ext).expect("monic");
    let cross = &(&ra * &db) - &(&rb * &da);
    cross.rem_monic(&ext).expect("monic")
}

/// True iff `a = b (mod modulus)` as rational functions.
pub fn is_congruent(a: &RatFunc, b: &RatFunc, modulus: &Modulus) -> bool {
    congruence_remainder(a, b, modulus).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    #[test]
    fn congruence_examples() {
        let m5 = Modulus::cyclotomic(5);
        // q^5 = 1 (mod [5]_q)
        assert!(is_congruent(
            &RatFunc::from_poly(IntPoly::q_pow(5)),
            &RatFunc::one(),
            &m5
        ));
        // (1 - q^15)/(1 - q^5) = 3 (mod [5]_q), denominator not coprime
        let mut num = vec![0i64; 16];
        num[0] = 1;
        num[15] = -1;
        let a = RatFunc::new(p(&num), p(&[1, 0, 0, 0, 0, -1])).unwrap();
        assert!(is_congruent(&a, &RatFunc::from_int(3), &m5));
        // q != 1 (mod [5]_q); remainder is q - 1
        let q = RatFunc::from_poly(IntPoly::q_pow(1));
        assert!(!is_congruent(&q, &RatFunc::one(), &m5));
        assert_eq!(congruence_remainder(&q, &RatFunc::one(), &m5), p(&[-1, 1]));
    }

    #[test]
    fn coprimality_examples() {
        assert!(coprimality_check(&p(&[1, 1]), 5));
        let with_factor = &q_int_poly(5) * &p(&[1, 1]);
        assert!(!coprimality_check(&with_factor, 5));
        assert!(coprimality_check(&IntPoly::q_pow(1), 7));
    }

    #[test]
    fn perturbation_flips_only_for_plus_one() {
        // [3]_{q^5} = 3 (mod [5]_q), with a [5]_q-divisible denominator form.
        let m5 = Modulus::cyclotomic(5);
        let mut num = vec![0i64; 16];
        num[0] = 1;
        num[15] = -1;
        let den = p(&[1, 0, 0, 0, 0, -1]);
        let a = RatFunc::new(p(&num), den).unwrap();
        let b = RatFunc::from_int(3);
        let plus_m = RatFunc::new(
            &a.num().clone() + &(m5.poly() * a.den()),
            a.den().clone(),
        )
        .unwrap();
        let plus_one = RatFunc::new(&a.num().clone() + a.den(), a.den().clone()).unwrap();
        assert!(is_congruent(&plus_m, &b, &m5));
        assert!(!is_congruent(&plus_one, &b, &m5));
    }

    /// Denominators coprime to [5]_q: small polynomials with nonzero
    /// remainder, filtered by the check itself.
    fn coprime_ratfunc() -> impl Strategy<Value = RatFunc> {
        (
            prop::collection::vec(-5i64..=5, 0..=6),
            prop::collection::vec(-5i64..=5, 1..=6),
        )
            .prop_filter_map("nonzero coprime denominator", |(n, d)| {
                let den = IntPoly::from_ints(&d);
                if den.is_zero() || !coprimality_check(&den, 5) {
                    return None;
                }
                Some(RatFunc::new(IntPoly::from_ints(&n), den).unwrap())
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn equivalence_relation(
            a in coprime_ratfunc(),
            b in coprime_ratfunc(),
            c in coprime_ratfunc(),
        ) {
            let m = Modulus::cyclotomic(5);
            prop_assert!(is_congruent(&a, &a, &m));
            prop_assert_eq!(is_congruent(&a, &b, &m), is_congruent(&b, &a, &m));
            if is_congruent(&a, &b, &m) && is_congruent(&b, &c, &m) {
                prop_assert!(is_congruent(&a, &c, &m));
            }
        }

        #[test]
        fn preserved_by_arithmetic(
            a in coprime_ratfunc(),
            b in coprime_ratfunc(),
            c in coprime_ratfunc(),
        ) {
            let m = Modulus::cyclotomic(5);
            // a' = a + [5]_q * c is congruent to a; ops preserve congruence
            let shift = &RatFunc::from_poly(m.poly().clone()) * &c;
            let a2 = &a + &shift;
            prop_assert!(is_congruent(&a2, &a, &m));
            prop_assert!(is_congruent(&(&a2 + &b), &(&a + &b), &m));
            prop_assert!(is_congruent(&(&a2 - &b), &(&a - &b), &m));
            prop_assert!(is_congruent(&(&a2 * &b), &(&a * &b), &m));
        }
    }
}
