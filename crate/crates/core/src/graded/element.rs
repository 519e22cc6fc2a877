use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::{CoefficientDomain, QuadElement};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A finite sum `Σ a_α X^α` with `a_α ∈ K` and `α ∈ G = ℤ`; an element of
/// `K[G]`, and of `A[Γ]` when [`GradedElement::in_ring`] holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    domain: CoefficientDomain,
    monoid: Arc<NumericalSemigroup>,
    terms: BTreeMap<i64, QuadElement>,
}

impl GradedElement {
    pub fn new(
        domain: CoefficientDomain,
        monoid: Arc<NumericalSemigroup>,
        terms: impl IntoIterator<Item = (i64, QuadElement)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<i64, QuadElement> = BTreeMap::new();
        for (alpha, c) in terms {
            domain.check_element(&c)?;
            let entry = map.entry(alpha).or_insert_with(QuadElement::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(GradedElement {
            domain,
            monoid,
            terms: map,
        })
    }

    pub fn zero(domain: CoefficientDomain, monoid: Arc<NumericalSemigroup>) -> Self {
        GradedElement {
            domain,
            monoid,
            terms: BTreeMap::new(),
        }
    }

    /// `c·X^α`.
    pub fn monomial(
        domain: CoefficientDomain,
        monoid: Arc<NumericalSemigroup>,
        c: QuadElement,
        alpha: i64,
    ) -> Result<Self> {
        Self::new(domain, monoid, [(alpha, c)])
    }

    pub fn parse(
        domain: CoefficientDomain,
        monoid: Arc<NumericalSemigroup>,
        text: &str,
    ) -> Result<Self> {
        let terms = Parser::new(&domain, text).parse_all()?;
        Self::new(domain, monoid, terms)
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn monoid(&self) -> &Arc<NumericalSemigroup> {
        &self.monoid
    }

    pub fn terms(&self) -> &BTreeMap<i64, QuadElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficients(&self) -> Vec<QuadElement> {
        self.terms.values().cloned().collect()
    }

    /// Lies in `A[Γ]`: integral coefficients and exponents in Γ.
    pub fn in_ring(&self) -> bool {
        self.terms
            .iter()
            .all(|(&alpha, c)| self.monoid.contains(alpha) && self.domain.is_integral(c))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::Mismatch("coefficient domains"));
        }
        if *self.monoid != *other.monoid {
            return Err(Error::Mismatch("semigroups"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::new(
            self.domain,
            Arc::clone(&self.monoid),
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(&a, c)| (a, c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (&a, u) in &self.terms {
            for (&b, v) in &other.terms {
                let e = a.checked_add(b).ok_or(Error::Overflow("graded product"))?;
                out.push((e, self.domain.mul(u, v)));
            }
        }
        Self::new(self.domain, Arc::clone(&self.monoid), out)
    }

    pub fn scale(&self, c: &QuadElement) -> Self {
        let terms = self.terms.iter().map(|(&a, u)| (a, self.domain.mul(u, c)));
        Self::new(self.domain, Arc::clone(&self.monoid), terms).expect("same domain")
    }

    pub fn shift(&self, alpha: i64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(&a, u)| {
                a.checked_add(alpha)
                    .map(|e| (e, u.clone()))
                    .ok_or(Error::Overflow("graded shift"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.domain, Arc::clone(&self.monoid), terms)
    }
}

fn coefficient_text(c: &QuadElement) -> String {
    let s = c.to_string();
    if !c.x.is_zero() && !c.y.is_zero() {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for GradedElement {
    /// `2+3*X^2`, `(1+w)*X^3`, `-X^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (&alpha, c)) in self.terms.iter().enumerate() {
            let power = if alpha == 1 {
                "X".to_string()
            } else {
                format!("X^{alpha}")
            };
            let mut term = if alpha == 0 {
                coefficient_text(c)
            } else if *c == QuadElement::one() {
                power
            } else if *c == QuadElement::from_int(-1) {
                format!("-{power}")
            } else {
                format!("{}*{power}", coefficient_text(c))
            };
            if i > 0 && !term.starts_with('-') {
                term.insert(0, '+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

type Poly = BTreeMap<i64, QuadElement>;

/// Recursive-descent parser for `2+3*X^2`, `(1+w)*X^3`, `3/2*w*X^-1`.
struct Parser<'a> {
    domain: &'a CoefficientDomain,
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(domain: &'a CoefficientDomain, text: &'a str) -> Self {
        Parser {
            domain,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            text,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at position {} in {:?}",
            self.pos, self.text
        ))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly> {
        let p = self.sum()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = Poly::new();
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let mut t = self.product()?;
            if negate {
                for c in t.values_mut() {
                    *c = -&*c;
                }
            }
            for (e, c) in t {
                let entry = acc.entry(e).or_insert_with(QuadElement::zero);
                *entry = &*entry + &c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.factor()?;
            let mut out = Poly::new();
            for (&a, u) in &acc {
                for (&b, v) in &rhs {
                    let e = a.checked_add(b).ok_or(Error::Overflow("parse"))?;
                    let entry = out.entry(e).or_insert_with(QuadElement::zero);
                    *entry = &*entry + &self.domain.mul(u, v);
                }
            }
            acc = out;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('w') => {
                self.pos += 1;
                let w = self.domain.omega();
                self.domain.check_element(&w)?;
                Ok(Poly::from([(0, w)]))
            }
            Some('X') => {
                self.pos += 1;
                let mut e = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    e = self.signed_int()?;
                }
                Ok(Poly::from([(e, QuadElement::one())]))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let value = if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(Poly::from([(0, QuadElement::from_rational(value))]))
            }
            _ => Err(self.err("expected a number, 'w', 'X' or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.digits()?;
        let v = if negative { -v } else { v };
        i64::try_from(v).map_err(|_| self.err("exponent out of range"))
    }
}

/// Parses a coefficient such as `1+w`, `3/2` or `-2*w`.
pub fn parse_scalar(domain: &CoefficientDomain, text: &str) -> Result<QuadElement> {
    let p = Parser::new(domain, text).parse_all()?;
    if p.keys().any(|&e| e != 0) {
        return Err(Error::Parse(format!("{text:?} is not a constant")));
    }
    let c = p.get(&0).cloned().unwrap_or_else(QuadElement::zero);
    domain.check_element(&c)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap())
    }

    #[test]
    fn parse_and_print() {
        let z = CoefficientDomain::IntegerRing;
        let x = GradedElement::parse(z, sgp(), "2+3*X^2").unwrap();
        assert_eq!(x.num_terms(), 2);
        assert_eq!(x.to_string(), "2+3*X^2");
        let y = GradedElement::parse(z, sgp(), "-X^-1 + 4/6*X^3 - 2").unwrap();
        assert_eq!(y.to_string(), "-X^-1-2+2/3*X^3");
        let q = CoefficientDomain::quadratic(-5).unwrap();
        let w = GradedElement::parse(q, sgp(), "(1+w)*X^3 + 2").unwrap();
        assert_eq!(w.to_string(), "2+(1+w)*X^3");
        assert_eq!(GradedElement::parse(q, sgp(), &w.to_string()).unwrap(), w);
        assert!(GradedElement::parse(z, sgp(), "w*X").is_err());
        assert!(GradedElement::parse(z, sgp(), "2+").is_err());
        assert!(GradedElement::parse(z, sgp(), "1/0").is_err());
        assert!(GradedElement::parse(z, sgp(), "X^2)").is_err());
    }

    #[test]
    fn arithmetic() {
        let z = CoefficientDomain::IntegerRing;
        let x = GradedElement::parse(z, sgp(), "1+X").unwrap();
        let y = GradedElement::parse(z, sgp(), "1-X").unwrap();
        assert_eq!(x.mul(&y).unwrap().to_string(), "1-X^2");
        assert!(
            x.add(&y.scale(&QuadElement::from_int(-1)))
                .unwrap()
                .to_string()
                == "2*X"
        );
        assert!(GradedElement::parse(z, sgp(), "2*X^2+X^3")
            .unwrap()
            .in_ring());
        assert!(!GradedElement::parse(z, sgp(), "X").unwrap().in_ring());
        assert!(!GradedElement::parse(z, sgp(), "1/2*X^2").unwrap().in_ring());
    }

    #[test]
    fn scalars() {
        let q = CoefficientDomain::quadratic(-5).unwrap();
        assert_eq!(
            parse_scalar(&q, "1+w").unwrap(),
            QuadElement::from_ints(1, 1)
        );
        assert_eq!(
            parse_scalar(&q, "-2*w").unwrap(),
            QuadElement::from_ints(0, -2)
        );
        assert!(parse_scalar(&q, "X").is_err());
        // ω² = −5 in ℤ[√−5].
        assert_eq!(parse_scalar(&q, "w*w").unwrap(), QuadElement::from_int(-5));
    }
}
