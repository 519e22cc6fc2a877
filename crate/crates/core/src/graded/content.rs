use std::sync::Arc;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::{CoeffIdeal, CoefficientDomain, QuadElement};
use crate::error::{Error, Result};
use crate::graded::element::GradedElement;
use crate::ideals::FractionalIdeal;
use crate::semigroup::NumericalSemigroup;

/// `C(x)`: the ideal of `A` generated by the coefficients of `x`.
pub fn content(x: &GradedElement) -> Result<CoeffIdeal> {
    if x.is_zero() {
        return Err(Error::Zero("content of zero"));
    }
    CoeffIdeal::from_generators(x.domain(), &x.coefficients())
}

/// The least `n ≥ 0` with `C(x)ⁿ·C(xy) = C(x)ⁿ⁺¹·C(y)`. The search stops
/// at `terms(y) − 1`, where a solution is guaranteed.
pub fn northcott_exponent(x: &GradedElement, y: &GradedElement) -> Result<usize> {
    let cx = content(x)?;
    let cy = content(y)?;
    let cxy = content(&x.mul(y)?)?;
    let cap = y.num_terms() - 1;
    let mut power = CoeffIdeal::unit(x.domain());
    for n in 0..=cap {
        let lhs = power.mul(&cxy)?;
        power = power.mul(&cx)?;
        let rhs = power.mul(&cy)?;
        if lhs == rhs {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { cap })
}

/// `C(xy) = C(x)·C(y)`.
pub fn gauss_check(x: &GradedElement, y: &GradedElement) -> Result<bool> {
    Ok(content(&x.mul(y)?)? == content(x)?.mul(&content(y)?)?)
}

/// A pair with a positive Northcott exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorthcottFixture {
    pub x: GradedElement,
    pub y: GradedElement,
    pub exponent: usize,
    /// Pairs examined before this one was found, this one included.
    pub examined: usize,
}

/// Exhaustive search over pairs `x, y` with at most `max_terms` terms (at
/// exponents `0, 1, …`) and coefficients `u + vω`, `|u|, |v| ≤ max_coord`.
/// Pairs are visited by increasing coefficient size, then total term count,
/// and the first pair with exponent ≥ 1 is returned. Every examined pair is
/// checked against the `terms(y) − 1` cap.
pub fn search_northcott_fixture(
    domain: &CoefficientDomain,
    monoid: &Arc<NumericalSemigroup>,
    max_terms: usize,
    max_coord: i64,
) -> Result<Option<NorthcottFixture>> {
    let quadratic = domain.order().is_some();
    let mut examined = 0usize;
    for size in 1..=max_coord {
        let coeffs: Vec<QuadElement> = coefficient_box(size, quadratic);
        for total in 2..=2 * max_terms {
            for tx in 1..total {
                let ty = total - tx;
                if tx > max_terms || ty > max_terms {
                    continue;
                }
                let xs = tuples(&coeffs, tx);
                let ys = tuples(&coeffs, ty);
                for xc in &xs {
                    for yc in &ys {
                        // Only pairs whose largest coefficient has exactly
                        // this size are new at this level.
                        if xc.iter().chain(yc.iter()).all(|c| sup_norm(c) < size) {
                            continue;
                        }
                        examined += 1;
                        let x = polynomial(domain, monoid, xc)?;
                        let y = polynomial(domain, monoid, yc)?;
                        let exponent = northcott_exponent(&x, &y)?;
                        if exponent >= 1 {
                            return Ok(Some(NorthcottFixture {
                                x,
                                y,
                                exponent,
                                examined,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn sup_norm(c: &QuadElement) -> i64 {
    let m = c.x.abs().max(c.y.abs());
    i64::try_from(m.to_integer()).expect("small coordinates")
}

/// Nonzero `u + vω` with `|u|, |v| ≤ size`, ordered by sup norm.
fn coefficient_box(size: i64, quadratic: bool) -> Vec<QuadElement> {
    let vr = if quadratic { size } else { 0 };
    let mut out: Vec<QuadElement> = (-size..=size)
        .flat_map(|u| (-vr..=vr).map(move |v| QuadElement::from_ints(u, v)))
        .filter(|c| !c.is_zero())
        .collect();
    out.sort_by_key(|c| (sup_norm(c), c.clone()));
    out
}

fn tuples(coeffs: &[QuadElement], k: usize) -> Vec<Vec<QuadElement>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coeffs.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out
}

fn polynomial(
    domain: &CoefficientDomain,
    monoid: &Arc<NumericalSemigroup>,
    coeffs: &[QuadElement],
) -> Result<GradedElement> {
    GradedElement::new(
        *domain,
        Arc::clone(monoid),
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64, c.clone())),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaReport {
    pub element: String,
    pub inverse_content: String,
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
    pub first_failure: Option<String>,
}

/// Samples `g ∈ K[G]` with coefficients in `C(a)⁻¹` and exponents `e`
/// satisfying `e + supp(a) ⊆ Γ`, and checks `a·g ∈ A[Γ]`.
pub fn pa_inclusion_check(a: &GradedElement, samples: usize, seed: u64) -> Result<PaReport> {
    let domain = *a.domain();
    let monoid = a.monoid();
    let inv = content(a)?.inverse();
    let support: Vec<i64> = a.terms().keys().copied().collect();
    let shifts = FractionalIdeal::whole(monoid)
        .colon(&FractionalIdeal::from_generators(monoid, &support)?)?;
    let exps: Vec<i64> = (shifts.min()..shifts.stable_bound() + monoid.conductor())
        .filter(|&e| shifts.contains(e))
        .collect();
    let basis = inv.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0;
    let mut first_failure = None;
    for _ in 0..samples {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut c = QuadElement::zero();
            for b in &basis {
                c = &c + &b.scale_int(rng.gen_range(-3..=3));
            }
            terms.push((exps[rng.gen_range(0..exps.len())], c));
        }
        let g = GradedElement::new(domain, Arc::clone(monoid), terms)?;
        let prod = a.mul(&g)?;
        if prod.in_ring() {
            passed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(format!("a·({g}) = {prod}"));
        }
    }
    Ok(PaReport {
        element: a.to_string(),
        inverse_content: inv.to_string(),
        samples,
        passed,
        failed: samples - passed,
        seed,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap())
    }

    #[test]
    fn contents() {
        let z = CoefficientDomain::IntegerRing;
        let x = GradedElement::parse(z, sgp(), "4+6*X^3").unwrap();
        assert_eq!(
            content(&x).unwrap(),
            CoeffIdeal::principal(&z, &QuadElement::from_int(2)).unwrap()
        );
        let q = CoefficientDomain::RationalField;
        let x = GradedElement::parse(q, sgp(), "4/3+6*X^3").unwrap();
        assert_eq!(content(&x).unwrap(), CoeffIdeal::unit(&q));
        let d = CoefficientDomain::quadratic(-5).unwrap();
        let x = GradedElement::parse(d, sgp(), "2+(1+w)*X^2").unwrap();
        let p = CoeffIdeal::from_generators(
            &d,
            &[QuadElement::from_int(2), QuadElement::from_ints(1, 1)],
        )
        .unwrap();
        assert_eq!(content(&x).unwrap(), p);
        assert!(content(&GradedElement::zero(z, sgp())).is_err());
    }

    #[test]
    fn northcott_fixture_sqrt_minus_three() {
        let d = CoefficientDomain::quadratic(-3).unwrap();
        let x = GradedElement::parse(d, sgp(), "2+(1+w)*X").unwrap();
        let y = GradedElement::parse(d, sgp(), "2+(1-w)*X").unwrap();
        assert_eq!(x.mul(&y).unwrap().to_string(), "4+4*X+4*X^2");
        assert_eq!(northcott_exponent(&x, &y).unwrap(), 1);
        assert!(!gauss_check(&x, &y).unwrap());
    }

    #[test]
    fn search_finds_fixture_quickly() {
        let d = CoefficientDomain::quadratic(-3).unwrap();
        let f = search_northcott_fixture(&d, &sgp(), 3, 3).unwrap().unwrap();
        assert_eq!(f.exponent, 1);
        assert!(f.exponent < f.y.num_terms());
        assert!(!gauss_check(&f.x, &f.y).unwrap());
        assert!(f.examined <= 5329, "{}", f.examined);
    }

    #[test]
    fn no_fixture_over_pid() {
        let z = CoefficientDomain::IntegerRing;
        assert_eq!(search_northcott_fixture(&z, &sgp(), 2, 2).unwrap(), None);
    }

    #[test]
    fn pa_inclusion() {
        let z = CoefficientDomain::IntegerRing;
        let a = GradedElement::parse(z, sgp(), "2+3*X^2").unwrap();
        let r = pa_inclusion_check(&a, 100, 11).unwrap();
        assert_eq!((r.passed, r.failed), (100, 0));
        let h = GradedElement::parse(z, sgp(), "6*X^3").unwrap();
        let r = pa_inclusion_check(&h, 50, 1).unwrap();
        assert_eq!(r.failed, 0);
        assert_eq!(r.inverse_content, "(1/6)");
    }
}
