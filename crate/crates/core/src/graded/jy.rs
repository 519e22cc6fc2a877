use std::fmt;
use std::sync::Arc;

use crate::coeff::{CoeffIdeal, CoefficientDomain, QuadElement};
use crate::error::{Error, Result};
use crate::graded::element::GradedElement;
use crate::graded::homogeneous::HomogeneousIdeal;
use crate::ideals::FractionalIdeal;
use crate::semigroup::NumericalSemigroup;

/// `J[Y] = {Σ aᵢX^αᵢ : aᵢ ∈ J, αᵢ ∈ Y}` for a fractional ideal `J` of `A`
/// and a fractional ideal `Y` of Γ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPairJY {
    pub j: CoeffIdeal,
    pub y: FractionalIdeal,
}

impl IdealPairJY {
    pub fn new(j: CoeffIdeal, y: FractionalIdeal) -> Self {
        IdealPairJY { j, y }
    }

    /// `A[Γ]` itself.
    pub fn unit(domain: &CoefficientDomain, monoid: &Arc<NumericalSemigroup>) -> Self {
        IdealPairJY {
            j: CoeffIdeal::unit(domain),
            y: FractionalIdeal::whole(monoid),
        }
    }

    pub fn domain(&self) -> CoefficientDomain {
        self.j.domain()
    }

    pub fn monoid(&self) -> &Arc<NumericalSemigroup> {
        self.y.monoid()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.domain() != other.domain() {
            return Err(Error::Mismatch("coefficient domains"));
        }
        if **self.monoid() != **other.monoid() {
            return Err(Error::Mismatch("semigroups"));
        }
        Ok(())
    }

    pub fn contains(&self, f: &GradedElement) -> bool {
        f.terms()
            .iter()
            .all(|(&alpha, a)| self.y.contains(alpha) && self.j.contains(a))
    }

    pub fn contains_monomial(&self, b: &QuadElement, beta: i64) -> bool {
        b.is_zero() || (self.y.contains(beta) && self.j.contains(b))
    }

    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(IdealPairJY {
            j: self.j.colon(&other.j)?,
            y: self.y.colon(&other.y)?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(IdealPairJY {
            j: self.j.mul(&other.j)?,
            y: self.y.sum(&other.y)?,
        })
    }

    pub fn v_closure(&self) -> Self {
        IdealPairJY {
            j: self.j.v_closure(),
            y: self.y.v_closure(),
        }
    }

    pub fn t_closure(&self) -> Self {
        IdealPairJY {
            j: self.j.t_closure(),
            y: self.y.t_closure(),
        }
    }

    pub fn is_t_invertible(&self) -> bool {
        self.j.is_t_invertible() && self.y.is_t_invertible()
    }

    /// Principal as an ideal of `A[Γ]`: `J = uA` and `Y = α + Γ`, so that
    /// `J[Y] = uX^α·A[Γ]`.
    pub fn is_principal(&self) -> bool {
        self.y.is_principal() && self.j.is_principal().is_some()
    }

    /// Homogeneous generators `g·X^α`, `g` over the generators of `J` and
    /// `α` over the minimal generators of `Y`.
    pub fn to_homogeneous(&self) -> HomogeneousIdeal {
        let gens = self.j.generators();
        let pairs = gens
            .iter()
            .flat_map(|g| self.y.min_generators().iter().map(move |&a| (g.clone(), a)));
        HomogeneousIdeal::new(self.domain(), Arc::clone(self.monoid()), pairs)
            .expect("J is nonzero")
    }
}

impl fmt::Display for IdealPairJY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.j, self.y)
    }
}

/// Reads off `J` (generated by the coefficients) and `Y` (generated by the
/// exponents) from a homogeneous ideal. With `assume_divisorial` set, also
/// checks `J[Y] ⊆ I` and reports the first monomial of `J[Y]` outside `I`.
///
/// The check is exact: above `max αᵢ + conductor` every component of `I`
/// equals `J`, so only finitely many degrees need testing.
pub fn extract_jy(i: &HomogeneousIdeal, assume_divisorial: bool) -> Result<IdealPairJY> {
    let coeffs: Vec<QuadElement> = i.generators().iter().map(|(a, _)| a.clone()).collect();
    let exps: Vec<i64> = i.generators().iter().map(|&(_, e)| e).collect();
    let j = CoeffIdeal::from_generators(i.domain(), &coeffs)?;
    let y = FractionalIdeal::from_generators(i.monoid(), &exps)?;
    let pair = IdealPairJY { j, y };
    if assume_divisorial {
        let top = exps.iter().max().expect("nonempty") + i.monoid().conductor();
        let j_gens = pair.j.generators();
        for beta in pair.y.min()..=top {
            if !pair.y.contains(beta) {
                continue;
            }
            for b in &j_gens {
                if !i.contains_monomial(b, beta) {
                    let witness = GradedElement::monomial(
                        *i.domain(),
                        Arc::clone(i.monoid()),
                        b.clone(),
                        beta,
                    )
                    .expect("domain checked");
                    return Err(Error::NotJyForm(format!(
                        "{witness} lies in {pair} but not in {i}"
                    )));
                }
            }
        }
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap())
    }

    fn z_ideal(v: i64) -> CoeffIdeal {
        CoeffIdeal::principal(&CoefficientDomain::IntegerRing, &QuadElement::from_int(v)).unwrap()
    }

    fn elt(text: &str) -> GradedElement {
        GradedElement::parse(CoefficientDomain::IntegerRing, sgp(), text).unwrap()
    }

    fn y0() -> FractionalIdeal {
        FractionalIdeal::from_generators(&sgp(), &[2, 3]).unwrap()
    }

    #[test]
    fn membership() {
        let p = IdealPairJY::new(z_ideal(2), y0());
        assert!(p.contains(&elt("2*X^2")));
        assert!(!p.contains(&elt("2*X")));
        assert!(!p.contains(&elt("X^2")));
        assert!(p.contains(&elt("0")));
        let unit = IdealPairJY::unit(&CoefficientDomain::IntegerRing, &sgp());
        assert!(unit.contains(&elt("X^3")));
    }

    #[test]
    fn colon_example() {
        let unit = IdealPairJY::unit(&CoefficientDomain::IntegerRing, &sgp());
        let p = IdealPairJY::new(z_ideal(2), y0());
        let c = unit.colon(&p).unwrap();
        assert_eq!(
            c.j,
            CoeffIdeal::Integer(num_rational::BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(c.y.min_generators(), &[0, 1]);
        assert_eq!(p.mul(&unit).unwrap(), p);
        assert_eq!(p.v_closure(), p);
        assert!(!p.is_t_invertible());
    }

    #[test]
    fn extraction() {
        let p = IdealPairJY::new(z_ideal(2), y0());
        assert_eq!(extract_jy(&p.to_homogeneous(), true).unwrap(), p);

        let i = HomogeneousIdeal::new(
            CoefficientDomain::IntegerRing,
            sgp(),
            [(QuadElement::from_int(2), 2), (QuadElement::from_int(3), 3)],
        )
        .unwrap();
        let loose = extract_jy(&i, false).unwrap();
        assert_eq!(loose.j, z_ideal(1));
        assert_eq!(loose.y, y0());
        let err = extract_jy(&i, true).unwrap_err();
        assert!(matches!(err, Error::NotJyForm(_)));

        let single = HomogeneousIdeal::new(
            CoefficientDomain::IntegerRing,
            sgp(),
            [(QuadElement::from_int(6), 5)],
        )
        .unwrap();
        let e = extract_jy(&single, true).unwrap();
        assert_eq!(e.j, z_ideal(6));
        assert_eq!(e.y, FractionalIdeal::principal(&sgp(), 5).unwrap());
        assert!(e.is_principal() && e.is_t_invertible());
    }

    #[test]
    fn quadratic_prime_pair() {
        let dom = CoefficientDomain::quadratic(-5).unwrap();
        let p = CoeffIdeal::from_generators(
            &dom,
            &[QuadElement::from_int(2), QuadElement::from_ints(1, 1)],
        )
        .unwrap();
        let pair = IdealPairJY::new(p, FractionalIdeal::whole(&sgp()));
        assert!(pair.is_t_invertible());
        assert!(!pair.is_principal());
    }
}
