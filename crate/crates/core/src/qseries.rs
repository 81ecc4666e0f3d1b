//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! Every series carries an explicit order `N`: coefficients of `q^0..=q^N`
//! are stored, everything above is unknown. Binary operations return the
//! smaller of the two orders.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

/// Whether the factors `(1 - q^n)` of a product appear to the power `+1`
/// or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorPower {
    Direct,
    Inverse,
}

impl TruncatedSeries {
    /// Series of order `order` from leading coefficients; missing ones are
    /// zero, extra ones are discarded.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64(&[1], order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * &rhs.coeffs[n - i])
                    .sum()
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Inverse modulo `q^(N+1)`; the constant term must be `1` or `-1`.
    pub fn inv(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonInvertibleSeries(c0.to_string()));
        }
        let order = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        out.push(c0.clone());
        for n in 1..=order {
            let s: BigInt = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            // c0 = ±1 is its own inverse
            out.push(-s * c0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplies in place by `(1 - q^n)^(±1)`.
    pub fn apply_factor(&mut self, n: usize, power: FactorPower) {
        assert!(n >= 1);
        let order = self.order();
        if n > order {
            return;
        }
        match power {
            FactorPower::Inverse => {
                for m in n..=order {
                    let prev = self.coeffs[m - n].clone();
                    self.coeffs[m] += prev;
                }
            }
            FactorPower::Direct => {
                for m in (n..=order).rev() {
                    let prev = self.coeffs[m - n].clone();
                    self.coeffs[m] -= prev;
                }
            }
        }
    }

    fn render_json_value(c: &BigInt) -> serde_json::Value {
        match c.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::String(c.to_string()),
        }
    }

    /// Coefficients as a JSON array (numbers, or decimal strings beyond `i64`).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(Self::render_json_value).collect())
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&Self::render_json_value(c))?;
        }
        seq.end()
    }
}

impl fmt::Display for TruncatedSeries {
    /// `c0 + c1*q + ... + cN*q^N`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `prod_{1 <= n <= N, n mod modulus in residues} (1 - q^n)^(±1)`.
pub fn progression_product(
    modulus: u32,
    residues: &[u32],
    power: FactorPower,
    order: usize,
) -> TruncatedSeries {
    assert!(modulus >= 1, "modulus must be positive");
    let mut s = TruncatedSeries::one(order);
    for n in 1..=order {
        if residues.contains(&((n as u32) % modulus)) {
            s.apply_factor(n, power);
        }
    }
    s
}

/// Quotient of two polynomials with rational coefficients, expanded to
/// order `order`. The denominator's constant term must be nonzero.
pub fn rational_expansion(
    num: &[BigRational],
    den: &[BigRational],
    order: usize,
) -> Result<Vec<BigRational>, Error> {
    let d0 = den.first().filter(|d| !d.is_zero()).ok_or(Error::DivisionByZero)?;
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut s = num.get(n).cloned().unwrap_or_else(BigRational::zero);
        for (k, dk) in den.iter().enumerate().skip(1).take_while(|(k, _)| *k <= n) {
            s -= dk * &out[n - k];
        }
        out.push(s / d0);
    }
    Ok(out)
}

const PSI_NUMERATOR: [i64; 5] = [1, -3, 4, -3, 1];
const PSI_DENOMINATOR: [i64; 5] = [1, 3, 4, 3, 1];

/// Coefficients `a_0..=a_N` of
/// `(1 - 3x + 4x^2 - 3x^3 + x^4) / (1 + 3x + 4x^2 + 3x^3 + x^4)`,
/// the exchange factor between `X(α; w1)` and `E^-(-α; w2)`.
pub fn psi_coefficients(order: usize) -> Vec<BigRational> {
    let rat = |v: &[i64]| -> Vec<BigRational> {
        v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    };
    rational_expansion(&rat(&PSI_NUMERATOR), &rat(&PSI_DENOMINATOR), order)
        .expect("constant term of the denominator is 1")
}

/// [`psi_coefficients`] checked to be integral.
pub fn psi_integers(order: usize) -> Vec<BigInt> {
    psi_coefficients(order)
        .into_iter()
        .map(|a| {
            assert!(a.denom().is_one(), "non-integral psi coefficient {a}");
            a.to_integer()
        })
        .collect()
}

/// `true` iff `sum a_i x^i * den == num` modulo `x^(N+1)`.
pub fn psi_identity_holds(order: usize) -> bool {
    let a = psi_integers(order);
    (0..=order).all(|n| {
        let lhs: BigInt = (0..=n.min(4))
            .map(|k| BigInt::from(PSI_DENOMINATOR[k]) * &a[n - k])
            .sum();
        let rhs = PSI_NUMERATOR.get(n).copied().unwrap_or(0);
        lhs == BigInt::from(rhs)
    })
}
