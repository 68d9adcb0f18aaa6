//! Exact base fields.
//!
//! Two fields are provided: arbitrary-precision rationals and prime fields
//! `F_p` with `p < 2^31`. A prime field's modulus is only known at run time,
//! so every element carries a field descriptor and constructors take one
//! explicitly instead of relying on context-free `zero()` / `one()`.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// An exact field.
///
/// Binary operations between elements whose descriptors differ panic; the
/// polynomial layer checks ring compatibility before it gets that far.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Identifies the field an element lives in.
    type Desc: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static;

    fn desc(&self) -> Self::Desc;
    fn zero(desc: &Self::Desc) -> Self;
    fn one(desc: &Self::Desc) -> Self;
    fn from_i64(desc: &Self::Desc, n: i64) -> Self;
    /// Image of a rational number, or `None` when the denominator vanishes.
    fn from_rational(desc: &Self::Desc, q: &Rational) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn characteristic(desc: &Self::Desc) -> u64;
    /// Number of elements, `None` for infinite fields.
    fn size(desc: &Self::Desc) -> Option<u64>;
    /// All elements in a fixed order (`0, 1, ..., p-1` for prime fields).
    fn elements(desc: &Self::Desc) -> Option<Vec<Self>>;
    /// A random element; for infinite fields an integer of magnitude at most `bound`.
    fn random<R: Rng + ?Sized>(desc: &Self::Desc, rng: &mut R, bound: u64) -> Self;

    fn is_finite(desc: &Self::Desc) -> bool {
        Self::size(desc).is_some()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.desc());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Descriptor of the rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Display for RationalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")
    }
}

impl Field for Rational {
    type Desc = RationalField;

    fn desc(&self) -> RationalField {
        RationalField
    }
    fn zero(_: &RationalField) -> Self {
        <Rational as Zero>::zero()
    }
    fn one(_: &RationalField) -> Self {
        <Rational as One>::one()
    }
    fn from_i64(_: &RationalField, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_rational(_: &RationalField, q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(_: &RationalField) -> u64 {
        0
    }
    fn size(_: &RationalField) -> Option<u64> {
        None
    }
    fn elements(_: &RationalField) -> Option<Vec<Self>> {
        None
    }
    fn random<R: Rng + ?Sized>(_: &RationalField, rng: &mut R, bound: u64) -> Self {
        let b = bound.max(1).min(i64::MAX as u64) as i64;
        Rational::from_integer(BigInt::from(rng.gen_range(-b..=b)))
    }
}

/// Descriptor of the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField(u32);

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if p >= Self::MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField(p as u32))
    }

    pub fn modulus(&self) -> u32 {
        self.0
    }

    pub fn element(&self, v: u64) -> Fp {
        Fp {
            value: (v % self.0 as u64) as u32,
            field: *self,
        }
    }
}

impl Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of `F_p`, stored as its canonical representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u32,
    field: PrimeField,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.value
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.field, other.field,
            "operands from different prime fields"
        );
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.field.0 as u64;
        Fp {
            value: ((self.value as u64 + rhs.value as u64) % p) as u32,
            field: self.field,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.field.0 as u64;
        Fp {
            value: ((self.value as u64 + p - rhs.value as u64) % p) as u32,
            field: self.field,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = self.field.0 as u64;
        Fp {
            value: ((self.value as u64 * rhs.value as u64) % p) as u32,
            field: self.field,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let p = self.field.0;
        Fp {
            value: if self.value == 0 { 0 } else { p - self.value },
            field: self.field,
        }
    }
}

impl Field for Fp {
    type Desc = PrimeField;

    fn desc(&self) -> PrimeField {
        self.field
    }
    fn zero(desc: &PrimeField) -> Self {
        desc.element(0)
    }
    fn one(desc: &PrimeField) -> Self {
        desc.element(1)
    }
    fn from_i64(desc: &PrimeField, n: i64) -> Self {
        let p = desc.0 as i64;
        desc.element(n.rem_euclid(p) as u64)
    }
    fn from_rational(desc: &PrimeField, q: &Rational) -> Option<Self> {
        let p = BigInt::from(desc.0);
        let reduce = |x: &BigInt| -> u64 { x.mod_floor(&p).to_u64().expect("residue fits u64") };
        let num = desc.element(reduce(q.numer()));
        let den = desc.element(reduce(q.denom()));
        den.inv().map(|d| num * d)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut a, mut b) = (self.value as i64, self.field.0 as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(Self::from_i64(&self.field, x0))
    }
    fn characteristic(desc: &PrimeField) -> u64 {
        desc.0 as u64
    }
    fn size(desc: &PrimeField) -> Option<u64> {
        Some(desc.0 as u64)
    }
    fn elements(desc: &PrimeField) -> Option<Vec<Self>> {
        Some((0..desc.0 as u64).map(|v| desc.element(v)).collect())
    }
    fn random<R: Rng + ?Sized>(desc: &PrimeField, rng: &mut R, _bound: u64) -> Self {
        desc.element(rng.gen_range(0..desc.0 as u64))
    }
}

/// Integer value of a rational, when it is one and fits in `i64`.
pub fn rational_to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}
