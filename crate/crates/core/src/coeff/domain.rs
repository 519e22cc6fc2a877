use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::element::QuadElement;
use crate::error::{Error, Result};

/// An imaginary quadratic order `ℤ[ω]` inside `ℚ(√d)`, `d < 0` squarefree.
///
/// `ω = (1+√d)/2` for the maximal order when `d ≡ 1 (mod 4)`, otherwise
/// `ω = √d`. In both cases `ω² = t·ω − n` with `t` the trace and `n` the norm
/// of `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticOrder {
    d: i64,
    maximal: bool,
}

impl QuadraticOrder {
    pub fn new(d: i64, maximal: bool) -> Result<Self> {
        if d >= 0 {
            return Err(Error::InvalidDomain(format!(
                "only imaginary orders are supported, got d = {d}"
            )));
        }
        if d < -(1 << 40) {
            return Err(Error::TooLarge(format!("|d| = {}", -d)));
        }
        if !is_squarefree(-d) {
            return Err(Error::InvalidDomain(format!("{d} is not squarefree")));
        }
        if !maximal && d.rem_euclid(4) != 1 {
            return Err(Error::InvalidDomain(format!(
                "Z[sqrt({d})] is already maximal; only conductor-2 suborders are supported"
            )));
        }
        Ok(QuadraticOrder { d, maximal })
    }

    /// `ℤ[√d]`, maximal exactly when `d ≢ 1 (mod 4)`.
    pub fn z_sqrt(d: i64) -> Result<Self> {
        Self::new(d, d.rem_euclid(4) != 1)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    fn half_omega(&self) -> bool {
        self.maximal && self.d.rem_euclid(4) == 1
    }

    /// Trace of ω.
    pub fn trace(&self) -> i64 {
        if self.half_omega() {
            1
        } else {
            0
        }
    }

    /// Norm of ω.
    pub fn omega_norm(&self) -> i64 {
        if self.half_omega() {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }

    /// Discriminant `t² − 4n`.
    pub fn discriminant(&self) -> i64 {
        let t = self.trace();
        t * t - 4 * self.omega_norm()
    }

    pub fn to_text(&self) -> String {
        if self.half_omega() {
            format!("Z[(1+sqrt({}))/2]", self.d)
        } else {
            format!("Z[sqrt({})]", self.d)
        }
    }
}

/// The coefficient ring `A` of a semigroup ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientDomain {
    RationalField,
    IntegerRing,
    QuadraticOrder(QuadraticOrder),
}

impl CoefficientDomain {
    pub fn quadratic(d: i64) -> Result<Self> {
        Ok(CoefficientDomain::QuadraticOrder(QuadraticOrder::z_sqrt(
            d,
        )?))
    }

    pub fn order(&self) -> Option<&QuadraticOrder> {
        match self {
            CoefficientDomain::QuadraticOrder(o) => Some(o),
            _ => None,
        }
    }

    fn trace_norm(&self) -> (BigRational, BigRational) {
        match self {
            CoefficientDomain::QuadraticOrder(o) => (
                BigRational::from_integer(o.trace().into()),
                BigRational::from_integer(o.omega_norm().into()),
            ),
            _ => (BigRational::zero(), BigRational::zero()),
        }
    }

    pub fn mul(&self, u: &QuadElement, v: &QuadElement) -> QuadElement {
        let (t, n) = self.trace_norm();
        let yy = &u.y * &v.y;
        QuadElement {
            x: &u.x * &v.x - &n * &yy,
            y: &u.x * &v.y + &v.x * &u.y + &t * &yy,
        }
    }

    pub fn conj(&self, u: &QuadElement) -> QuadElement {
        let (t, _) = self.trace_norm();
        QuadElement {
            x: &u.x + &t * &u.y,
            y: -u.y.clone(),
        }
    }

    /// `u · conj(u)`, a non-negative rational.
    pub fn norm(&self, u: &QuadElement) -> BigRational {
        let (t, n) = self.trace_norm();
        &u.x * &u.x + t * &u.x * &u.y + n * &u.y * &u.y
    }

    pub fn inv(&self, u: &QuadElement) -> Result<QuadElement> {
        if u.is_zero() {
            return Err(Error::Zero("inverse of zero"));
        }
        let n = self.norm(u);
        let c = self.conj(u);
        Ok(QuadElement {
            x: c.x / &n,
            y: c.y / n,
        })
    }

    pub fn pow(&self, u: &QuadElement, e: u32) -> QuadElement {
        (0..e).fold(QuadElement::one(), |acc, _| self.mul(&acc, u))
    }

    /// True iff `u` lies in `A` itself.
    pub fn is_integral(&self, u: &QuadElement) -> bool {
        match self {
            CoefficientDomain::RationalField => u.y.is_zero(),
            CoefficientDomain::IntegerRing => u.y.is_zero() && u.x.is_integer(),
            CoefficientDomain::QuadraticOrder(_) => u.x.is_integer() && u.y.is_integer(),
        }
    }

    /// Elements of this domain's quotient field must have `y = 0` over ℚ and ℤ.
    pub fn check_element(&self, u: &QuadElement) -> Result<()> {
        match self {
            CoefficientDomain::QuadraticOrder(_) => Ok(()),
            _ if u.y.is_zero() => Ok(()),
            _ => Err(Error::Mismatch("coefficient domains (ω used over ℚ or ℤ)")),
        }
    }

    /// Integrally closed in its quotient field.
    pub fn is_integrally_closed(&self) -> bool {
        match self {
            CoefficientDomain::RationalField | CoefficientDomain::IntegerRing => true,
            CoefficientDomain::QuadraticOrder(o) => o.is_maximal(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            CoefficientDomain::RationalField => "Q".into(),
            CoefficientDomain::IntegerRing => "Z".into(),
            CoefficientDomain::QuadraticOrder(o) => o.to_text(),
        }
    }

    pub fn omega(&self) -> QuadElement {
        QuadElement::new(BigRational::zero(), BigRational::one())
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for CoefficientDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "Q" => return Ok(CoefficientDomain::RationalField),
            "Z" => return Ok(CoefficientDomain::IntegerRing),
            _ => {}
        }
        let parse_d = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))
        };
        if let Some(inner) = compact
            .strip_prefix("Z[(1+sqrt(")
            .and_then(|r| r.strip_suffix("))/2]"))
        {
            let d = parse_d(inner)?;
            if d.rem_euclid(4) != 1 {
                return Err(Error::InvalidDomain(format!(
                    "(1+sqrt({d}))/2 is not integral"
                )));
            }
            return Ok(CoefficientDomain::QuadraticOrder(QuadraticOrder::new(
                d, true,
            )?));
        }
        if let Some(inner) = compact
            .strip_prefix("Z[sqrt(")
            .and_then(|r| r.strip_suffix(")]"))
        {
            return Self::quadratic(parse_d(inner)?);
        }
        Err(Error::Parse(format!(
            "unknown domain {s:?} (expected Q, Z, Z[sqrt(d)] or Z[(1+sqrt(d))/2])"
        )))
    }
}

fn is_squarefree(n: i64) -> bool {
    let mut n = n;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn parse_domains() {
        assert_eq!(
            "Q".parse::<CoefficientDomain>().unwrap(),
            CoefficientDomain::RationalField
        );
        assert_eq!(
            "Z".parse::<CoefficientDomain>().unwrap(),
            CoefficientDomain::IntegerRing
        );
        let z5: CoefficientDomain = "Z[sqrt(-5)]".parse().unwrap();
        let o = z5.order().unwrap();
        assert!(o.is_maximal());
        assert_eq!(o.discriminant(), -20);
        let z3: CoefficientDomain = "Z[sqrt(-3)]".parse().unwrap();
        assert!(!z3.order().unwrap().is_maximal());
        assert_eq!(z3.order().unwrap().discriminant(), -12);
        let e: CoefficientDomain = "Z[(1+sqrt(-3))/2]".parse().unwrap();
        assert_eq!(e.order().unwrap().discriminant(), -3);
        assert_eq!(e.to_text(), "Z[(1+sqrt(-3))/2]");
        assert!("Z[sqrt(-4)]".parse::<CoefficientDomain>().is_err());
        assert!("Z[sqrt(5)]".parse::<CoefficientDomain>().is_err());
        assert!("Z[(1+sqrt(-5))/2]".parse::<CoefficientDomain>().is_err());
        assert!("R".parse::<CoefficientDomain>().is_err());
    }

    #[test]
    fn integral_closure() {
        assert!("Z[sqrt(-5)]"
            .parse::<CoefficientDomain>()
            .unwrap()
            .is_integrally_closed());
        assert!(!"Z[sqrt(-3)]"
            .parse::<CoefficientDomain>()
            .unwrap()
            .is_integrally_closed());
        assert!(CoefficientDomain::RationalField.is_integrally_closed());
        assert!(CoefficientDomain::IntegerRing.is_integrally_closed());
    }

    #[test]
    fn omega_squares() {
        for text in ["Z[sqrt(-5)]", "Z[(1+sqrt(-7))/2]", "Z[sqrt(-3)]"] {
            let dom: CoefficientDomain = text.parse().unwrap();
            let o = dom.order().unwrap();
            let w = dom.omega();
            let w2 = dom.mul(&w, &w);
            let expect = QuadElement::new(rat(-o.omega_norm()), rat(o.trace()));
            assert_eq!(w2, expect, "{text}");
            assert_eq!(dom.norm(&w), rat(o.omega_norm()));
        }
    }

    #[test]
    fn norm_is_multiplicative_and_positive() {
        let dom = CoefficientDomain::quadratic(-5).unwrap();
        let u = QuadElement::new(rat(1), rat(1));
        let v = QuadElement::new(rat(2), rat(-3));
        assert_eq!(dom.norm(&dom.mul(&u, &v)), dom.norm(&u) * dom.norm(&v));
        assert_eq!(dom.norm(&u), rat(6));
        let inv = dom.inv(&u).unwrap();
        assert_eq!(dom.mul(&u, &inv), QuadElement::one());
        assert!(dom.inv(&QuadElement::zero()).is_err());
    }
}
