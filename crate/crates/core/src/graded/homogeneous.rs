use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::coeff::{CoeffIdeal, CoefficientDomain, QuadElement};
use crate::error::{Error, Result};
use crate::graded::element::GradedElement;
use crate::semigroup::NumericalSemigroup;

/// The `A[Γ]`-submodule of `K[G]` generated by finitely many homogeneous
/// elements `aᵢ·X^αᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    domain: CoefficientDomain,
    monoid: Arc<NumericalSemigroup>,
    gens: Vec<(QuadElement, i64)>,
}

impl HomogeneousIdeal {
    pub fn new(
        domain: CoefficientDomain,
        monoid: Arc<NumericalSemigroup>,
        gens: impl IntoIterator<Item = (QuadElement, i64)>,
    ) -> Result<Self> {
        let mut out: Vec<(QuadElement, i64)> = Vec::new();
        for (a, alpha) in gens {
            domain.check_element(&a)?;
            if !a.is_zero() && !out.contains(&(a.clone(), alpha)) {
                out.push((a, alpha));
            }
        }
        if out.is_empty() {
            return Err(Error::Zero("homogeneous ideal without nonzero generators"));
        }
        Ok(HomogeneousIdeal {
            domain,
            monoid,
            gens: out,
        })
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn monoid(&self) -> &Arc<NumericalSemigroup> {
        &self.monoid
    }

    pub fn generators(&self) -> &[(QuadElement, i64)] {
        &self.gens
    }

    pub fn generator_elements(&self) -> Vec<GradedElement> {
        self.gens
            .iter()
            .map(|(a, alpha)| {
                GradedElement::monomial(self.domain, Arc::clone(&self.monoid), a.clone(), *alpha)
                    .expect("checked on construction")
            })
            .collect()
    }

    /// The degree-`β` component `Σ {aᵢ·A : β − αᵢ ∈ Γ}`, `None` when empty.
    pub fn component(&self, beta: i64) -> Option<CoeffIdeal> {
        let coeffs: Vec<QuadElement> = self
            .gens
            .iter()
            .filter(|(_, alpha)| self.monoid.contains(beta - alpha))
            .map(|(a, _)| a.clone())
            .collect();
        if coeffs.is_empty() {
            None
        } else {
            Some(CoeffIdeal::from_generators(&self.domain, &coeffs).expect("nonzero generators"))
        }
    }

    pub fn contains_monomial(&self, b: &QuadElement, beta: i64) -> bool {
        b.is_zero() || self.component(beta).is_some_and(|c| c.contains(b))
    }

    /// Decided one homogeneous component at a time.
    pub fn contains(&self, f: &GradedElement) -> bool {
        f.terms()
            .iter()
            .all(|(&beta, b)| self.contains_monomial(b, beta))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::Mismatch("coefficient domains"));
        }
        if *self.monoid != *other.monoid {
            return Err(Error::Mismatch("semigroups"));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for (a, alpha) in &self.gens {
            for (b, beta) in &other.gens {
                let e = alpha
                    .checked_add(*beta)
                    .ok_or(Error::Overflow("ideal product"))?;
                gens.push((self.domain.mul(a, b), e));
            }
        }
        Self::new(self.domain, Arc::clone(&self.monoid), gens)
    }

    /// A random `A[Γ]`-combination of the generators with small integer
    /// coefficients (and small multiples of `ω`) and shifts from `[0, 2c]`,
    /// `c` the conductor.
    pub fn sample_element(&self, rng: &mut impl Rng) -> GradedElement {
        let members: Vec<i64> = (0..=2 * self.monoid.conductor())
            .filter(|&g| self.monoid.contains(g))
            .collect();
        let quadratic = self.domain.order().is_some();
        let mut terms = Vec::new();
        for (a, alpha) in &self.gens {
            for _ in 0..rng.gen_range(0..=2) {
                let c = QuadElement::from_ints(
                    rng.gen_range(-3..=3),
                    if quadratic { rng.gen_range(-3..=3) } else { 0 },
                );
                let shift = members[rng.gen_range(0..members.len())];
                terms.push((alpha + shift, self.domain.mul(a, &c)));
            }
        }
        GradedElement::new(self.domain, Arc::clone(&self.monoid), terms).expect("checked domain")
    }
}

impl fmt::Display for HomogeneousIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .generator_elements()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `C(I)` for the ideal generated by `gens`: the homogeneous ideal generated
/// by every homogeneous component of every generator.
pub fn content_of_ideal(gens: &[GradedElement]) -> Result<HomogeneousIdeal> {
    let first = gens
        .iter()
        .find(|g| !g.is_zero())
        .ok_or(Error::Zero("content of the zero ideal"))?;
    let mut comps = Vec::new();
    for g in gens {
        if g.domain() != first.domain() {
            return Err(Error::Mismatch("coefficient domains"));
        }
        if **g.monoid() != **first.monoid() {
            return Err(Error::Mismatch("semigroups"));
        }
        comps.extend(g.terms().iter().map(|(&alpha, a)| (a.clone(), alpha)));
    }
    HomogeneousIdeal::new(*first.domain(), Arc::clone(first.monoid()), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sgp() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap())
    }

    fn elt(text: &str) -> GradedElement {
        GradedElement::parse(CoefficientDomain::IntegerRing, sgp(), text).unwrap()
    }

    #[test]
    fn content_components() {
        let c = content_of_ideal(&[elt("2+3*X^2")]).unwrap();
        assert_eq!(
            c.generators(),
            &[(QuadElement::from_int(2), 0), (QuadElement::from_int(3), 2)]
        );
        let h = content_of_ideal(&[elt("5*X^3")]).unwrap();
        assert_eq!(h.generators(), &[(QuadElement::from_int(5), 3)]);
        assert!(content_of_ideal(&[elt("0")]).is_err());
    }

    #[test]
    fn membership() {
        let i = content_of_ideal(&[elt("2*X^2"), elt("3*X^3")]).unwrap();
        assert!(i.contains(&elt("2*X^2")));
        assert!(i.contains(&elt("3*X^3+4*X^2")));
        assert!(!i.contains(&elt("2*X^3")));
        assert!(!i.contains(&elt("X^4")));
        assert!(i.contains(&elt("X^5")));
        assert!(!i.contains(&elt("2*X")));
        assert!(i.contains(&elt("0")));
    }

    #[test]
    fn samples_are_members() {
        let i = content_of_ideal(&[elt("2+3*X^2"), elt("7*X^3")]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let s = i.sample_element(&mut rng);
            assert!(s.in_ring());
            assert!(i.contains(&s), "{s}");
        }
    }
}
