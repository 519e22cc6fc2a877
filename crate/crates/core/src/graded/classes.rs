use std::fmt;
use std::sync::Arc;

use crate::coeff::{CoeffIdeal, QuadForm};
use crate::error::{Error, Result};
use crate::graded::jy::IdealPairJY;
use crate::ideals::{class_mul, class_reduce, MonoidClass};
use crate::semigroup::NumericalSemigroup;

/// A class of `Cl(A)`: trivial, or the reduced form of a non-principal
/// invertible ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffClass {
    Trivial,
    Form(QuadForm),
}

impl CoeffClass {
    pub fn of(j: &CoeffIdeal) -> Result<Self> {
        if !j.is_t_invertible() {
            return Err(Error::NotInvertible(j.to_string()));
        }
        if j.is_principal().is_some() {
            return Ok(CoeffClass::Trivial);
        }
        Ok(CoeffClass::Form(j.to_form()?))
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, CoeffClass::Trivial)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (CoeffClass::Trivial, c) | (c, CoeffClass::Trivial) => Ok(*c),
            (CoeffClass::Form(f), CoeffClass::Form(g)) => {
                let h = f.compose(g)?;
                Ok(if h == QuadForm::identity(h.discriminant()) {
                    CoeffClass::Trivial
                } else {
                    CoeffClass::Form(h)
                })
            }
        }
    }
}

impl fmt::Display for CoeffClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffClass::Trivial => f.write_str("trivial"),
            CoeffClass::Form(q) => write!(f, "{q}"),
        }
    }
}

/// An element of `HCl(A[Γ]) ≅ Cl(A) ⊕ Cl(Γ)` in decomposed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousClass {
    pub coeff_class: CoeffClass,
    pub monoid_class: MonoidClass,
}

impl HomogeneousClass {
    pub fn is_trivial(&self) -> bool {
        self.coeff_class.is_trivial() && self.monoid_class.is_trivial()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(HomogeneousClass {
            coeff_class: self.coeff_class.mul(&other.coeff_class)?,
            monoid_class: class_mul(&self.monoid_class, &other.monoid_class)?,
        })
    }
}

impl fmt::Display for HomogeneousClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.coeff_class,
            self.monoid_class.representative()
        )
    }
}

/// `[J] ↦ [J[Γ]]`.
pub fn phi_map(j: &CoeffIdeal, monoid: &Arc<NumericalSemigroup>) -> Result<HomogeneousClass> {
    Ok(HomogeneousClass {
        coeff_class: CoeffClass::of(j)?,
        monoid_class: MonoidClass::trivial(monoid),
    })
}

/// Projection onto the monoid component.
pub fn psi_map(c: &HomogeneousClass) -> MonoidClass {
    c.monoid_class.clone()
}

/// The section `[Y] ↦ [K[Y]]` of [`psi_map`].
pub fn psi_prime(m: &MonoidClass) -> Result<HomogeneousClass> {
    if !m.invertible() {
        return Err(Error::NotInvertible(m.representative().to_text()));
    }
    Ok(HomogeneousClass {
        coeff_class: CoeffClass::Trivial,
        monoid_class: m.clone(),
    })
}

pub fn decompose_class(i: &IdealPairJY) -> Result<HomogeneousClass> {
    let monoid_class = class_reduce(&i.y);
    if !monoid_class.invertible() {
        return Err(Error::NotInvertible(i.y.to_text()));
    }
    Ok(HomogeneousClass {
        coeff_class: CoeffClass::of(&i.j)?,
        monoid_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CoefficientDomain, QuadElement};
    use crate::ideals::FractionalIdeal;

    #[test]
    fn prime_above_two() {
        let dom = CoefficientDomain::quadratic(-5).unwrap();
        let gamma = Arc::new(NumericalSemigroup::naturals());
        let p = CoeffIdeal::from_generators(
            &dom,
            &[QuadElement::from_int(2), QuadElement::from_ints(1, 1)],
        )
        .unwrap();
        let pair = IdealPairJY::new(p.clone(), FractionalIdeal::whole(&gamma));
        let c = decompose_class(&pair).unwrap();
        assert_eq!(
            c.coeff_class,
            CoeffClass::Form(QuadForm { a: 2, b: 2, c: 3 })
        );
        assert!(c.monoid_class.is_trivial());
        assert!(c.mul(&c).unwrap().is_trivial());
        assert_eq!(phi_map(&p, &gamma).unwrap(), c);
        assert!(psi_map(&c).is_trivial());
    }

    #[test]
    fn non_invertible_inputs() {
        let dom = CoefficientDomain::quadratic(-3).unwrap();
        let gamma = Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap());
        let p = CoeffIdeal::from_generators(
            &dom,
            &[QuadElement::from_int(2), QuadElement::from_ints(1, 1)],
        )
        .unwrap();
        assert!(phi_map(&p, &gamma).is_err());
        let y0 = FractionalIdeal::from_generators(&gamma, &[2, 3]).unwrap();
        let pair = IdealPairJY::new(CoeffIdeal::unit(&dom), y0);
        assert!(decompose_class(&pair).is_err());
        let m = MonoidClass::trivial(&gamma);
        assert_eq!(psi_map(&psi_prime(&m).unwrap()), m);
    }
}
