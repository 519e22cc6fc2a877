use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// `x + y·ω` with rational coordinates. Multiplication depends on the order
/// and lives on [`CoefficientDomain`](crate::coeff::CoefficientDomain).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadElement {
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadElement {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        QuadElement { x, y }
    }

    pub fn from_int(v: i64) -> Self {
        QuadElement::new(BigRational::from_integer(v.into()), BigRational::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        QuadElement::new(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
        )
    }

    pub fn from_rational(x: BigRational) -> Self {
        QuadElement::new(x, BigRational::zero())
    }

    pub fn zero() -> Self {
        QuadElement::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QuadElement::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QuadElement::new(&self.x * q, &self.y * q)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }
}

impl Add for &QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: &QuadElement) -> QuadElement {
        QuadElement::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: &QuadElement) -> QuadElement {
        QuadElement::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement::new(-self.x.clone(), -self.y.clone())
    }
}

impl fmt::Display for QuadElement {
    /// Text form understood by the element parser: `3/2-2*w`, `w`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let mut out = String::new();
        if !self.x.is_zero() {
            out.push_str(&self.x.to_string());
        }
        let mag = self.y.abs();
        let sign = if self.y.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        out.push_str(sign);
        if mag.is_one() {
            out.push('w');
        } else {
            out.push_str(&format!("{mag}*w"));
        }
        f.write_str(&out)
    }
}

impl Serialize for QuadElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(QuadElement::from_ints(1, 1).to_string(), "1+w");
        assert_eq!(QuadElement::from_ints(0, -2).to_string(), "-2*w");
        assert_eq!(QuadElement::from_ints(3, 0).to_string(), "3");
        assert_eq!(QuadElement::zero().to_string(), "0");
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            QuadElement::new(half.clone(), -half).to_string(),
            "1/2-1/2*w"
        );
    }
}
