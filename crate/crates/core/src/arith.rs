//! Exact big-integer and rational arithmetic.
//!
//! Every count in this crate is an [`ExactCount`]. Quantities that are only
//! integral after a final division (negative powers, division by `k!`) go
//! through [`ExactRational`] and are converted back with
//! [`ExactRational::to_count`], which refuses to round.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self(Pow::pow(&self.0, exp))
    }

    /// Divides exactly, or reports the remainder as an error.
    pub fn div_exact(&self, divisor: &ExactCount) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::NonIntegralResult(format!("{self} / 0")));
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if r.is_zero() {
            Ok(Self(q))
        } else {
            Err(Error::NonIntegralResult(format!(
                "{self} / {divisor} leaves remainder {r}"
            )))
        }
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<usize> for ExactCount {
    fn from(v: usize) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u32> for ExactCount {
    fn from(v: u32) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Serialized as a decimal string so no consumer truncates large values.
impl serde::Serialize for ExactCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl std::str::FromStr for ExactCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(Self)
            .map_err(|e| Error::OutOfRange(format!("{s:?}: {e}")))
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactCount> for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: &'a ExactCount) -> Self {
        Self(self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactCount> for ExactCount {
    fn add_assign(&mut self, rhs: &ExactCount) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactCount {
    fn add_assign(&mut self, rhs: ExactCount) {
        self.0 += rhs.0;
    }
}

impl Mul for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactCount> for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: &'a ExactCount) -> Self {
        Self(self.0 * &rhs.0)
    }
}

impl<'a> Mul<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: &'a ExactCount) -> ExactCount {
        ExactCount(&self.0 * &rhs.0)
    }
}

impl MulAssign<&ExactCount> for ExactCount {
    fn mul_assign(&mut self, rhs: &ExactCount) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign for ExactCount {
    fn mul_assign(&mut self, rhs: ExactCount) {
        self.0 *= rhs.0;
    }
}

impl Sum for ExactCount {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactCount> for ExactCount {
    fn sum<I: Iterator<Item = &'a ExactCount>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactCount {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Reduced rational with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        // BigRational::new reduces and normalizes the sign onto the numerator.
        Ok(Self(BigRational::new(numerator, denominator)))
    }

    pub fn from_count(c: &ExactCount) -> Self {
        Self(BigRational::from_integer(BigInt::from(c.0.clone())))
    }

    /// `base^exp` for a possibly negative exponent. `base` must be nonzero
    /// when `exp < 0`.
    pub fn pow_signed(base: u64, exp: i64) -> Result<Self> {
        let b = BigRational::from_integer(BigInt::from(base));
        if exp < 0 && base == 0 {
            return Err(Error::OutOfRange("0 raised to a negative power".into()));
        }
        let magnitude = u32::try_from(exp.unsigned_abs())
            .map_err(|_| Error::OutOfRange(format!("exponent {exp}")))?;
        let p = Pow::pow(&b, magnitude);
        Ok(Self(if exp < 0 { p.recip() } else { p }))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Converts to an [`ExactCount`], failing unless the value is a
    /// nonnegative integer.
    pub fn to_count(&self) -> Result<ExactCount> {
        if !self.0.is_integer() {
            return Err(Error::NonIntegralResult(format!("{self}")));
        }
        if self.0.is_negative() {
            return Err(Error::OutOfRange(format!("negative value {self}")));
        }
        let n = self.0.to_integer();
        Ok(ExactCount(n.to_biguint().expect("checked nonnegative")))
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl std::ops::Div for ExactRational {
    type Output = ExactRational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: Self) -> Self {
        Self(self.0 / rhs.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// `n!`
pub fn factorial(n: usize) -> ExactCount {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    ExactCount(acc)
}

/// `C(n, k)`; `k > n` is an error rather than zero.
pub fn binomial(n: usize, k: usize) -> Result<ExactCount> {
    if k > n {
        return Err(Error::OutOfRange(format!("binomial({n}, {k}) with k > n")));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(ExactCount(acc))
}

/// `(Σ parts)! / Π parts_i!`. Empty input yields 1.
pub fn multinomial(parts: &[usize]) -> ExactCount {
    // Product of binomials keeps intermediates small and every step exact.
    let mut acc = ExactCount::one();
    let mut running = 0usize;
    for &p in parts {
        running += p;
        acc *= binomial(running, p).expect("p <= running");
    }
    acc
}

/// `base^exp` as an exact count.
pub fn power(base: usize, exp: usize) -> ExactCount {
    let exp = u32::try_from(exp).expect("exponent fits in u32");
    ExactCount(Pow::pow(BigUint::from(base), exp))
}
