//! Exact arithmetic in the cyclotomic field `Q(w)`, `w = exp(i*pi/3)`.
//!
//! Elements are stored in the basis `{1, w}` subject to `w^2 = w - 1`. This
//! is the coefficient field of every relation computed by the crate, and the
//! basis is the one in which the relation tables are usually printed
//! (`-2-24*w`, `6-6*w`, ...).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element `a + b*w` of `Q(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycNum {
    a: BigRational,
    b: BigRational,
}

impl CycNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycNum { a, b }
    }

    /// `a + b*w` with integer coordinates.
    pub fn from_ints(a: i64, b: i64) -> Self {
        CycNum {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        CycNum {
            a,
            b: BigRational::zero(),
        }
    }

    /// `num/den` embedded as a rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// Coefficient of `1`.
    pub fn re_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of `w`.
    pub fn w_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `a^2 + ab + b^2`; zero only at `0`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse, `(a + b - b*w) / (a^2 + ab + b^2)`.
    pub fn inv(&self) -> Result<CycNum, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(CycNum {
            a: (&self.a + &self.b) / &n,
            b: -&self.b / n,
        })
    }

    pub fn checked_div(&self, rhs: &CycNum) -> Result<CycNum, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

/// `w^n` for any integer `n`, read off the period-6 table.
pub fn omega_pow(n: i64) -> CycNum {
    match n.rem_euclid(6) {
        0 => CycNum::from_ints(1, 0),
        1 => CycNum::from_ints(0, 1),
        2 => CycNum::from_ints(-1, 1),
        3 => CycNum::from_ints(-1, 0),
        4 => CycNum::from_ints(0, -1),
        _ => CycNum::from_ints(1, -1),
    }
}

/// `w^d - w^(-d)`: zero for `d = 0, 3 (mod 6)`, `2w - 1` (that is `sqrt(3) i`)
/// for `d = 1, 2`, and `1 - 2w` for `d = 4, 5`.
pub fn omega_antisym(d: i64) -> CycNum {
    match d.rem_euclid(6) {
        0 | 3 => CycNum::zero(),
        1 | 2 => CycNum::from_ints(-1, 2),
        _ => CycNum::from_ints(1, -2),
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl From<BigInt> for CycNum {
    fn from(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }
}

impl From<BigRational> for CycNum {
    fn from(v: BigRational) -> Self {
        Self::from_rational(v)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let bb = &self.b * &rhs.b;
        CycNum {
            a: &self.a * &rhs.a - &bb,
            b: &self.a * &rhs.b + &rhs.a * &self.b + bb,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl AddAssign for CycNum {
    fn add_assign(&mut self, rhs: CycNum) {
        *self += &rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> Self {
        iter.fold(CycNum::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for CycNum {
    /// `a`, `b*w`, `a+b*w` or `a-b*w`; a unit `w` coefficient prints as `w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let w_term = |b: &BigRational| {
            if b.is_one() {
                "w".to_string()
            } else {
                format!("{b}*w")
            }
        };
        if self.a.is_zero() {
            if self.b == -BigRational::one() {
                return write!(f, "-w");
            }
            return write!(f, "{}", w_term(&self.b));
        }
        if self.b.is_negative() {
            write!(f, "{}-{}", self.a, w_term(&-&self.b))
        } else {
            write!(f, "{}+{}", self.a, w_term(&self.b))
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for CycNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        let Some(body) = s.strip_suffix('w') else {
            return Ok(CycNum::from_rational(parse_rational(&s)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // the w-coefficient starts at the last sign that is not leading
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (a_str, b_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let b = match b_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
        };
        let a = if a_str.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(a_str)?
        };
        Ok(CycNum { a, b })
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
