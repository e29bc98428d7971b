//! Coefficient fields: arbitrary-precision rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds `F_p`, rejecting even or composite moduli.
    pub fn prime(p: u32) -> Result<Field> {
        if !(3..=(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q`, `qq`, `rational`, `fp:P` or a bare prime.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rational" | "rationals" => Ok(Field::Rational),
            _ => {
                let digits = t.strip_prefix("fp:").or_else(|| t.strip_prefix("fp")).unwrap_or(&t);
                let p: u32 = digits
                    .parse()
                    .map_err(|_| Error::Field(format!("unknown field `{text}`")))?;
                Field::prime(p)
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::Mod(v.rem_euclid(*p as i64) as u32, *p),
        }
    }

    /// Maps an exact rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Rat(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u32().unwrap();
                let den = q.denom().mod_floor(&pb).to_u32().unwrap();
                if den == 0 {
                    return Err(Error::Parse(format!(
                        "denominator {} vanishes in characteristic {p}",
                        q.denom()
                    )));
                }
                Ok(Coeff::Mod(num, *p).mul(&Coeff::Mod(den, *p).inv()))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Elements of `F_p` carry their modulus so arithmetic is self-contained;
/// mixing elements of different fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u32, u32),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rat(_) => Field::Rational,
            Coeff::Mod(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_zero(),
            Coeff::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_one(),
            Coeff::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod(a, p), Coeff::Mod(b, q)) if p == q => {
                Coeff::Mod(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(self, other),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod(a, p), Coeff::Mod(b, q)) if p == q => {
                Coeff::Mod(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(self, other),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(0, p) => Coeff::Mod(0, *p),
            Coeff::Mod(a, p) => Coeff::Mod(p - a, *p),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Rat(a) => Coeff::Rat(a.recip()),
            Coeff::Mod(a, p) => {
                let (mut t, mut new_t) = (0i64, 1i64);
                let (mut r, mut new_r) = (*p as i64, *a as i64);
                while new_r != 0 {
                    let q = r / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (r, new_r) = (new_r, r - q * new_r);
                }
                Coeff::Mod(t.rem_euclid(*p as i64) as u32, *p)
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Sign used by the printer: true for coefficients printed with a leading minus.
    /// Prime-field elements use the balanced representative in `(-p/2, p/2]`.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_negative(),
            Coeff::Mod(v, p) => *v > p / 2,
        }
    }

    /// Balanced representative as a rational number (for printing and comparison).
    pub fn to_rational(&self) -> BigRational {
        match self {
            Coeff::Rat(q) => q.clone(),
            Coeff::Mod(v, p) => {
                let signed = if *v > p / 2 { *v as i64 - *p as i64 } else { *v as i64 };
                BigRational::from_integer(BigInt::from(signed))
            }
        }
    }
}

fn mismatch(a: &Coeff, b: &Coeff) -> ! {
    panic!("coefficients from different fields: {} vs {}", a.field(), b.field())
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}
