use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{usage, Error, Result};

/// The coefficient ring of a [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl Ring {
    /// The prime field `F_p`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::Prime(p))
        } else {
            Err(usage(format!("{p} is not prime")))
        }
    }

    /// `Q` for characteristic 0, `F_p` otherwise.
    pub fn field_of_characteristic(c: u64) -> Result<Ring> {
        if c == 0 {
            Ok(Ring::Rationals)
        } else {
            Ring::prime(c)
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Ring::Prime(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of `Z`, `Q` or `F_p`.
///
/// The arithmetic operators panic when the two operands live in different
/// rings; the `try_*` methods return [`Error::RingMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in `[0, p)` and the modulus `p`.
    Mod(u64, u64),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: Ring) -> Scalar {
        Scalar::from_i64(ring, 1)
    }

    pub fn from_i64(ring: Ring, n: i64) -> Scalar {
        Scalar::from_bigint(ring, &BigInt::from(n))
    }

    pub fn from_bigint(ring: Ring, n: &BigInt) -> Scalar {
        match ring {
            Ring::Integers => Scalar::Int(n.clone()),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Ring::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Mod(r.to_u64().expect("residue fits in u64"), p)
            }
        }
    }

    /// A rational scalar; the ring must be `Q` or, when the denominator is
    /// invertible, `F_p`. Over `Z` the fraction must be integral.
    pub fn from_rational(ring: Ring, q: &BigRational) -> Result<Scalar> {
        match ring {
            Ring::Rationals => Ok(Scalar::Rat(q.clone())),
            Ring::Integers if q.is_integer() => Ok(Scalar::Int(q.to_integer())),
            Ring::Integers => Err(Error::NotAUnit(format!("denominator of {q} in Z"))),
            Ring::Prime(_) => {
                let num = Scalar::from_bigint(ring, q.numer());
                let den = Scalar::from_bigint(ring, q.denom());
                num.try_div(&den)
            }
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Integers,
            Scalar::Rat(_) => Ring::Rationals,
            Scalar::Mod(_, p) => Ring::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod(v, _) => *v == 1,
        }
    }

    /// The value as an integer, when it is one (`Z`, or `Q` with denominator 1).
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            Scalar::Rat(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// The value as a rational number (`Z` or `Q` only).
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(n) => Some(BigRational::from_integer(n.clone())),
            Scalar::Rat(q) => Some(q.clone()),
            Scalar::Mod(..) => None,
        }
    }

    /// Maps the scalar into `target`: `Z -> Q`, `Z -> F_p`, `Q -> F_p`
    /// (denominator must be invertible) or the identity.
    pub fn specialize(&self, target: Ring) -> Result<Scalar> {
        if self.ring() == target {
            return Ok(self.clone());
        }
        match (self, target) {
            (Scalar::Int(n), _) => Ok(Scalar::from_bigint(target, n)),
            (Scalar::Rat(q), Ring::Prime(_)) => Scalar::from_rational(target, q),
            (Scalar::Rat(q), Ring::Integers) => Scalar::from_rational(target, q),
            _ => Err(Error::RingMismatch(self.ring(), target)),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring(), other.ring()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                Scalar::Mod(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                Scalar::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => unreachable!(),
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a, p) => Scalar::Mod((p - a) % p, *p),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(n) => n.abs().is_one(),
            _ => !self.is_zero(),
        }
    }

    /// Multiplicative inverse; over `Z` only `±1` are invertible.
    pub fn try_inv(&self) -> Result<Scalar> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(match self {
            Scalar::Int(n) => Scalar::Int(n.clone()),
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod(a, p) => {
                let e = BigInt::from(*a).modpow(&BigInt::from(p - 2), &BigInt::from(*p));
                Scalar::Mod(e.to_u64().expect("residue fits in u64"), *p)
            }
        })
    }

    /// Exact division. Over `Z` the quotient must be an integer.
    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                if b.is_zero() {
                    return Err(Error::NotAUnit("0".into()));
                }
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Scalar::Int(q))
                } else {
                    Err(Error::NotAUnit(format!("{b} does not divide {a}")))
                }
            }
            _ => self.try_mul(&other.try_inv()?),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.ring());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
