//! Fractional ideals of the coefficient domain.
//!
//! Over a quadratic order an ideal is `q·[a, b + ω]` with `q > 0` rational,
//! `a ≥ 1`, `0 ≤ b < a` and `a | N(b + ω)`. The upper-right entry of the
//! integer basis (the `c` of `[a, b + c·ω]`) is always folded into `q`, so
//! the triple `(q, a, b)` is unique and equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::coeff::domain::{CoefficientDomain, QuadraticOrder};
use crate::coeff::element::QuadElement;
use crate::coeff::forms::{ClassGroup, QuadForm};
use crate::coeff::lattice::Lattice2;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffIdeal {
    /// The only nonzero fractional ideal of ℚ.
    Unit,
    /// `rℤ` with `r > 0`.
    Integer(BigRational),
    Quadratic {
        order: QuadraticOrder,
        scale: BigRational,
        a: BigInt,
        b: BigInt,
    },
}

/// JSON form `{scale, a, b, c}`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoeffIdealJson {
    pub domain: String,
    pub scale: String,
    pub a: String,
    pub b: String,
    pub c: String,
}

impl CoeffIdeal {
    pub fn unit(domain: &CoefficientDomain) -> Self {
        match domain {
            CoefficientDomain::RationalField => CoeffIdeal::Unit,
            CoefficientDomain::IntegerRing => CoeffIdeal::Integer(BigRational::one()),
            CoefficientDomain::QuadraticOrder(o) => CoeffIdeal::Quadratic {
                order: *o,
                scale: BigRational::one(),
                a: BigInt::one(),
                b: BigInt::zero(),
            },
        }
    }

    /// The A-submodule of K generated by `gens`.
    pub fn from_generators(domain: &CoefficientDomain, gens: &[QuadElement]) -> Result<Self> {
        for g in gens {
            domain.check_element(g)?;
        }
        let nonzero: Vec<&QuadElement> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::Zero("all generators are zero"));
        }
        match domain {
            CoefficientDomain::RationalField => Ok(CoeffIdeal::Unit),
            CoefficientDomain::IntegerRing => Ok(CoeffIdeal::Integer(rational_gcd(
                nonzero.iter().map(|g| &g.x),
            ))),
            CoefficientDomain::QuadraticOrder(o) => {
                let w = domain.omega();
                let mut span = Vec::with_capacity(2 * nonzero.len());
                for g in nonzero {
                    span.push(g.clone());
                    span.push(domain.mul(g, &w));
                }
                let lattice = Lattice2::from_generators(&span)
                    .expect("an O-span of a nonzero element has rank 2");
                Self::from_lattice(*o, &lattice)
            }
        }
    }

    pub fn principal(domain: &CoefficientDomain, g: &QuadElement) -> Result<Self> {
        Self::from_generators(domain, std::slice::from_ref(g))
    }

    /// Normalizes an O-stable lattice, rejecting modules that are not ideals.
    pub fn from_lattice(order: QuadraticOrder, lattice: &Lattice2) -> Result<Self> {
        let q = lattice.c.clone();
        let a = &lattice.a / &q;
        let b = &lattice.b / &q;
        if !a.is_integer() || !b.is_integer() {
            return Err(Error::NotAnIdeal(format!(
                "HNF ({}, {}, {}) is not closed under ω",
                lattice.a, lattice.b, lattice.c
            )));
        }
        let a = a.to_integer();
        let b = b.to_integer().mod_floor(&a);
        let t = BigInt::from(order.trace());
        let n = BigInt::from(order.omega_norm());
        let norm_b_omega = &b * &b + &t * &b + n;
        if !(&norm_b_omega % &a).is_zero() {
            return Err(Error::NotAnIdeal(format!("{a} does not divide N({b}+ω)")));
        }
        Ok(CoeffIdeal::Quadratic {
            order,
            scale: q,
            a,
            b,
        })
    }

    pub fn domain(&self) -> CoefficientDomain {
        match self {
            CoeffIdeal::Unit => CoefficientDomain::RationalField,
            CoeffIdeal::Integer(_) => CoefficientDomain::IntegerRing,
            CoeffIdeal::Quadratic { order, .. } => CoefficientDomain::QuadraticOrder(*order),
        }
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::Mismatch("coefficient domains"))
        }
    }

    /// A-module generators; a ℤ-basis over quadratic orders.
    pub fn generators(&self) -> Vec<QuadElement> {
        match self {
            CoeffIdeal::Unit => vec![QuadElement::one()],
            CoeffIdeal::Integer(r) => vec![QuadElement::from_rational(r.clone())],
            CoeffIdeal::Quadratic { .. } => self.lattice().expect("quadratic").basis().to_vec(),
        }
    }

    pub fn lattice(&self) -> Option<Lattice2> {
        match self {
            CoeffIdeal::Quadratic { scale, a, b, .. } => Some(Lattice2 {
                a: scale * BigRational::from_integer(a.clone()),
                b: scale * BigRational::from_integer(b.clone()),
                c: scale.clone(),
            }),
            _ => None,
        }
    }

    pub fn contains(&self, e: &QuadElement) -> bool {
        match self {
            CoeffIdeal::Unit => e.y.is_zero(),
            CoeffIdeal::Integer(r) => e.y.is_zero() && (&e.x / r).is_integer(),
            CoeffIdeal::Quadratic { .. } => self.lattice().expect("quadratic").contains(e),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.domain() == other.domain() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let domain = self.domain();
        match (self, other) {
            (CoeffIdeal::Unit, _) => Ok(CoeffIdeal::Unit),
            (CoeffIdeal::Integer(r), CoeffIdeal::Integer(s)) => Ok(CoeffIdeal::Integer(r * s)),
            _ => {
                let mut products = Vec::with_capacity(4);
                for u in self.generators() {
                    for v in other.generators() {
                        products.push(domain.mul(&u, &v));
                    }
                }
                Self::from_generators(&domain, &products)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        Self::from_generators(&self.domain(), &gens)
    }

    pub fn scale_by(&self, g: &QuadElement) -> Result<Self> {
        let domain = self.domain();
        let gens: Vec<QuadElement> = self.generators().iter().map(|u| domain.mul(u, g)).collect();
        Self::from_generators(&domain, &gens)
    }

    /// `(I : J) = {x ∈ K : xJ ⊆ I}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        match (self, other) {
            (CoeffIdeal::Unit, _) => Ok(CoeffIdeal::Unit),
            (CoeffIdeal::Integer(r), CoeffIdeal::Integer(s)) => Ok(CoeffIdeal::Integer(r / s)),
            (CoeffIdeal::Quadratic { order, .. }, _) => {
                let domain = self.domain();
                let target = self.lattice().expect("quadratic");
                // xβ ∈ I for each ℤ-basis element β of J ⇔ x ∈ ⋂ β⁻¹·I.
                let mut meet: Option<Lattice2> = None;
                for beta in other.generators() {
                    let inv = domain.inv(&beta)?;
                    let moved: Vec<QuadElement> =
                        target.basis().iter().map(|v| domain.mul(v, &inv)).collect();
                    let l = Lattice2::from_generators(&moved).expect("full rank");
                    meet = Some(match meet {
                        None => l,
                        Some(m) => m.intersection(&l),
                    });
                }
                Self::from_lattice(*order, &meet.expect("two basis elements"))
            }
            _ => unreachable!("domains checked"),
        }
    }

    pub fn inverse(&self) -> Self {
        Self::unit(&self.domain())
            .colon(self)
            .expect("same domain, nonzero ideal")
    }

    pub fn v_closure(&self) -> Self {
        self.inverse().inverse()
    }

    /// Coefficient domains here are Noetherian, so t = v.
    pub fn t_closure(&self) -> Self {
        self.v_closure()
    }

    pub fn is_divisorial(&self) -> bool {
        self.v_closure() == *self
    }

    pub fn is_invertible(&self) -> bool {
        self.mul(&self.inverse()).expect("same domain") == Self::unit(&self.domain())
    }

    /// `(I·I⁻¹)_v = A`.
    pub fn is_t_invertible(&self) -> bool {
        self.mul(&self.inverse()).expect("same domain").v_closure() == Self::unit(&self.domain())
    }

    /// Norm as a fractional ideal: `q²·a` over quadratic orders, `|r|` over ℤ.
    pub fn norm(&self) -> BigRational {
        match self {
            CoeffIdeal::Unit => BigRational::one(),
            CoeffIdeal::Integer(r) => r.clone(),
            CoeffIdeal::Quadratic { scale, a, .. } => {
                scale * scale * BigRational::from_integer(a.clone())
            }
        }
    }

    /// A generator when the ideal is principal. Over an imaginary quadratic
    /// order this is a finite search for elements of norm `a` in
    /// `[a, b + ω]`, the norm form being positive definite.
    pub fn is_principal(&self) -> Option<QuadElement> {
        match self {
            CoeffIdeal::Unit => Some(QuadElement::one()),
            CoeffIdeal::Integer(r) => Some(QuadElement::from_rational(r.clone())),
            CoeffIdeal::Quadratic { order, scale, a, b } => {
                let domain = CoefficientDomain::QuadraticOrder(*order);
                let primitive = CoeffIdeal::Quadratic {
                    order: *order,
                    scale: BigRational::one(),
                    a: a.clone(),
                    b: b.clone(),
                };
                for gamma in elements_of_norm(order, a, b) {
                    if Self::principal(&domain, &gamma).ok().as_ref() == Some(&primitive) {
                        return Some(gamma.scale(scale));
                    }
                }
                None
            }
        }
    }

    /// `I = q·[a, b + ω]` ↦ the reduced form of `[a, b + ω]`.
    pub fn to_form(&self) -> Result<QuadForm> {
        match self {
            CoeffIdeal::Quadratic { order, a, b, .. } => {
                let disc = order.discriminant();
                let a_small = a.to_i64().ok_or(Error::Overflow("ideal_to_form"))?;
                let b_small = b.to_i64().ok_or(Error::Overflow("ideal_to_form"))?;
                // b + ω = (−B + √D)/2 with B = −(2b + t).
                let big_b = -(2 * b_small + order.trace());
                let num = (big_b as i128).pow(2) - disc as i128;
                let c = num / (4 * a_small as i128);
                let c = i64::try_from(c).map_err(|_| Error::Overflow("ideal_to_form"))?;
                Ok(QuadForm::new(a_small, big_b, c)?.reduce())
            }
            _ => Err(Error::Unsupported(format!(
                "forms for ideals of {}",
                self.domain()
            ))),
        }
    }

    /// Inverse of [`CoeffIdeal::to_form`] on classes: `(a, B, c)` ↦
    /// `[a, (−B + √D)/2]`.
    pub fn from_form(order: &QuadraticOrder, f: &QuadForm) -> Result<Self> {
        if f.discriminant() != order.discriminant() {
            return Err(Error::Mismatch("discriminants"));
        }
        let t = order.trace();
        if (-f.b - t).rem_euclid(2) != 0 {
            return Err(Error::InvalidDomain(format!("{f} has the wrong parity")));
        }
        let b = (-f.b - t) / 2;
        let lattice = Lattice2 {
            a: BigRational::from_integer(f.a.into()),
            b: BigRational::from_integer(b.rem_euclid(f.a).into()),
            c: BigRational::one(),
        };
        Self::from_lattice(*order, &lattice)
    }

    pub fn to_json(&self) -> CoeffIdealJson {
        let domain = self.domain().to_text();
        match self {
            CoeffIdeal::Unit => CoeffIdealJson {
                domain,
                scale: "1".into(),
                a: "1".into(),
                b: "0".into(),
                c: "1".into(),
            },
            CoeffIdeal::Integer(r) => CoeffIdealJson {
                domain,
                scale: r.to_string(),
                a: "1".into(),
                b: "0".into(),
                c: "1".into(),
            },
            CoeffIdeal::Quadratic { scale, a, b, .. } => CoeffIdealJson {
                domain,
                scale: scale.to_string(),
                a: a.to_string(),
                b: b.to_string(),
                c: "1".into(),
            },
        }
    }
}

impl fmt::Display for CoeffIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffIdeal::Unit => write!(f, "(1)"),
            CoeffIdeal::Integer(r) => write!(f, "({r})"),
            CoeffIdeal::Quadratic { scale, a, b, .. } => {
                if scale.is_one() {
                    write!(f, "[{a}, {b}+w]")
                } else {
                    write!(f, "{scale}·[{a}, {b}+w]")
                }
            }
        }
    }
}

fn rational_gcd<'a>(xs: impl Iterator<Item = &'a BigRational>) -> BigRational {
    // gcd(n_i/d_i) = gcd(n_i·L/d_i)/L with L the lcm of the denominators.
    let xs: Vec<&BigRational> = xs.collect();
    let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = xs.iter().fold(BigInt::zero(), |acc, x| {
        acc.gcd(&(*x * BigRational::from_integer(den.clone())).to_integer())
    });
    BigRational::new(num.abs(), den)
}

/// Elements `u·a + v·(b + ω)` of norm exactly `a`.
fn elements_of_norm(order: &QuadraticOrder, a: &BigInt, b: &BigInt) -> Vec<QuadElement> {
    let domain = CoefficientDomain::QuadraticOrder(*order);
    let disc_abs = BigInt::from(-order.discriminant());
    let t = BigInt::from(order.trace());
    // N(x + yω) = (x + ty/2)² + (|D|/4)·y², so |y| ≤ √(4a/|D|).
    let y_max: BigInt = Roots::sqrt(&(BigInt::from(4) * a / &disc_abs)) + 1;
    let root: BigInt = Roots::sqrt(a) + 1;
    let target = BigRational::from_integer(a.clone());
    let mut out = Vec::new();
    let mut v = -y_max.clone();
    while v <= y_max {
        // x = u·a + v·b with |x + t·v/2| ≤ √a.
        let shift = &v * b;
        let centre = -(&t * &v) / 2;
        let lo: BigInt = Integer::div_floor(&(&centre - &root - &shift - 1), a);
        let hi: BigInt = Integer::div_ceil(&(&centre + &root - &shift + 1), a);
        let mut u = lo;
        while u <= hi {
            let x = &u * a + &shift;
            let e = QuadElement::new(
                BigRational::from_integer(x),
                BigRational::from_integer(v.clone()),
            );
            if domain.norm(&e) == target {
                out.push(e);
            }
            u += 1;
        }
        v += 1;
    }
    out
}

/// Class of `I` in `Cl(A)` as a reduced form, for maximal quadratic orders.
pub fn ideal_class_form(i: &CoeffIdeal) -> Result<QuadForm> {
    match i.domain() {
        CoefficientDomain::QuadraticOrder(o) if o.is_maximal() => i.to_form(),
        d => Err(Error::Unsupported(format!("class group of {d}"))),
    }
}

/// Reduced forms and group table of `Cl(A)` for a maximal imaginary order.
pub fn class_group(domain: &CoefficientDomain) -> Result<ClassGroup> {
    match domain {
        CoefficientDomain::QuadraticOrder(o) if o.is_maximal() => {
            ClassGroup::for_discriminant(o.discriminant())
        }
        d => Err(Error::Unsupported(format!(
            "class group computation for {d} (maximal imaginary quadratic orders only)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5() -> CoefficientDomain {
        CoefficientDomain::quadratic(-5).unwrap()
    }

    fn p2(dom: &CoefficientDomain) -> CoeffIdeal {
        CoeffIdeal::from_generators(
            dom,
            &[QuadElement::from_int(2), QuadElement::from_ints(1, 1)],
        )
        .unwrap()
    }

    #[test]
    fn integers_gcd() {
        let i = CoeffIdeal::from_generators(
            &CoefficientDomain::IntegerRing,
            &[QuadElement::from_int(4), QuadElement::from_int(6)],
        )
        .unwrap();
        assert_eq!(i, CoeffIdeal::Integer(BigRational::from_integer(2.into())));
        let half = QuadElement::from_rational(BigRational::new(3.into(), 4.into()));
        let j = CoeffIdeal::from_generators(
            &CoefficientDomain::IntegerRing,
            &[half, QuadElement::from_int(-2)],
        )
        .unwrap();
        assert_eq!(j, CoeffIdeal::Integer(BigRational::new(1.into(), 4.into())));
    }

    #[test]
    fn field_is_unit() {
        let i = CoeffIdeal::from_generators(
            &CoefficientDomain::RationalField,
            &[QuadElement::from_int(17)],
        )
        .unwrap();
        assert_eq!(i, CoeffIdeal::Unit);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            CoeffIdeal::from_generators(&z5(), &[QuadElement::zero()]),
            Err(Error::Zero("all generators are zero"))
        );
        assert!(CoeffIdeal::from_generators(
            &CoefficientDomain::IntegerRing,
            &[QuadElement::from_ints(0, 1)]
        )
        .is_err());
    }

    #[test]
    fn prime_above_two_in_z_sqrt_minus_five() {
        let dom = z5();
        let p = p2(&dom);
        match &p {
            CoeffIdeal::Quadratic { scale, a, b, .. } => {
                assert!(scale.is_one());
                assert_eq!(a, &BigInt::from(2));
                assert_eq!(b, &BigInt::from(1));
            }
            _ => panic!(),
        }
        assert_eq!(p.norm(), BigRational::from_integer(2.into()));
        assert!(p.is_principal().is_none());
        let sq = p.mul(&p).unwrap();
        assert_eq!(
            sq,
            CoeffIdeal::principal(&dom, &QuadElement::from_int(2)).unwrap()
        );
        let g = sq.is_principal().unwrap();
        assert_eq!(dom.norm(&g), BigRational::from_integer(4.into()));
        assert!(p.is_invertible());
        assert_eq!(p.mul(&p.inverse()).unwrap(), CoeffIdeal::unit(&dom));
        assert_eq!(p.v_closure(), p);
    }

    #[test]
    fn non_invertible_in_z_sqrt_minus_three() {
        let dom: CoefficientDomain = "Z[sqrt(-3)]".parse().unwrap();
        let p = p2(&dom);
        assert_ne!(p.mul(&p.inverse()).unwrap(), CoeffIdeal::unit(&dom));
        assert_eq!(
            p.mul(&p).unwrap(),
            p.scale_by(&QuadElement::from_int(2)).unwrap()
        );
        assert!(!p.is_t_invertible());
        assert!(p.is_principal().is_none());
    }

    #[test]
    fn mul_by_unit_ideal() {
        let dom = z5();
        let p = p2(&dom);
        assert_eq!(p.mul(&CoeffIdeal::unit(&dom)).unwrap(), p);
    }

    #[test]
    fn forms_round_trip() {
        let dom = z5();
        let p = p2(&dom);
        let f = p.to_form().unwrap();
        assert_eq!(f, QuadForm { a: 2, b: 2, c: 3 });
        let back = CoeffIdeal::from_form(dom.order().unwrap(), &f).unwrap();
        assert_eq!(back.to_form().unwrap(), f);
        assert_eq!(
            CoeffIdeal::unit(&dom).to_form().unwrap(),
            QuadForm::identity(-20)
        );
    }

    #[test]
    fn class_group_capability() {
        assert_eq!(class_group(&z5()).unwrap().order(), 2);
        assert!(matches!(
            class_group(&"Z[sqrt(-3)]".parse().unwrap()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            class_group(&CoefficientDomain::IntegerRing),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(
            class_group(&"Z[sqrt(-1)]".parse().unwrap())
                .unwrap()
                .order(),
            1
        );
    }

    #[test]
    fn domain_mismatch() {
        let a = CoeffIdeal::unit(&z5());
        let b = CoeffIdeal::unit(&CoefficientDomain::IntegerRing);
        assert_eq!(a.mul(&b), Err(Error::Mismatch("coefficient domains")));
    }
}
