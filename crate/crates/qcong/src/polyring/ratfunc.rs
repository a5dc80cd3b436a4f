use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

/// Formal quotient of two integer polynomials.
///
/// Never reduced to lowest terms; equality is cross-multiplication. The
/// denominator is nonzero and its leading coefficient is positive.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZeroFunction);
        }
        if den.leading_coeff().unwrap().is_negative() {
            Ok(RatFunc {
                num: -&num,
                den: -&den,
            })
        } else {
            Ok(RatFunc { num, den })
        }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RatFunc {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFunc::from_poly(IntPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, PolyError> {
        if rhs.num.is_zero() {
            return Err(PolyError::DivisionByZeroFunction);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Base change `q -> q^t` applied to numerator and denominator.
    pub fn inflate(&self, t: usize) -> RatFunc {
        RatFunc {
            num: self.num.inflate(t),
            den: self.den.inflate(t),
        }
    }

    /// Value at q = 1 after cancelling every common power of `(q - 1)`.
    pub fn eval_at_one(&self) -> Result<Rational, PolyError> {
        if self.num.is_zero() {
            return Ok(Rational::zero());
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let nv = num.eval_one();
            let dv = den.eval_one();
            match (nv.is_zero(), dv.is_zero()) {
                (true, true) => {
                    num = num.div_q_minus_one();
                    den = den.div_q_minus_one();
                }
                (false, true) => return Err(PolyError::PoleAtOne),
                (_, false) => return Ok(Rational::new(nv, dv)),
            }
        }
    }
}

/// Equality by cross-multiplication: a/b = c/d iff a*d = c*b.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() || self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Reduced rational number with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn zero() -> Self {
        Rational {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Rational {
            num: c.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
