//! Full-rank lattices in ℚ² in Hermite normal form.
//!
//! A lattice is stored through the basis rows `(A, 0)` and `(B, C)` with
//! `A, C > 0` and `0 ≤ B < A`, which is unique for the lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::element::QuadElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice2 {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

/// `(g, s, t)` with `s·x + t·y = g = gcd(x, y) ≥ 0`.
pub(crate) fn ext_gcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = x.extended_gcd(y);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn floor_mod(x: &BigRational, m: &BigRational) -> BigRational {
    x - m * (x / m).floor()
}

impl Lattice2 {
    /// HNF of the ℤ-span of `gens`; `None` when the span has rank < 2.
    pub fn from_generators(gens: &[QuadElement]) -> Option<Self> {
        let den = gens.iter().fold(BigInt::one(), |acc, g| {
            acc.lcm(g.x.denom()).lcm(g.y.denom())
        });
        let scale = BigRational::from_integer(den.clone());
        let ints: Vec<(BigInt, BigInt)> = gens
            .iter()
            .map(|g| ((&g.x * &scale).to_integer(), (&g.y * &scale).to_integer()))
            .collect();

        // Euclid on the second coordinate; every elimination step is unimodular.
        let mut pivot: Option<(BigInt, BigInt)> = None;
        let mut first_axis = BigInt::zero();
        for (x, y) in ints {
            if y.is_zero() {
                first_axis = first_axis.gcd(&x);
                continue;
            }
            match pivot.take() {
                None => pivot = Some((x, y)),
                Some((px, py)) => {
                    let (g, s, t) = ext_gcd(&py, &y);
                    let combined = (&s * &px + &t * &x, g.clone());
                    let killed = &(&y / &g) * &px - &(&py / &g) * &x;
                    first_axis = first_axis.gcd(&killed);
                    pivot = Some(combined);
                }
            }
        }
        let (mut bx, mut cy) = pivot?;
        if first_axis.is_zero() {
            return None;
        }
        if cy.is_negative() {
            bx = -bx;
            cy = -cy;
        }
        let a = BigRational::new(first_axis, den.clone());
        let b = floor_mod(&BigRational::new(bx, den.clone()), &a);
        let c = BigRational::new(cy, den);
        Some(Lattice2 { a, b, c })
    }

    pub fn basis(&self) -> [QuadElement; 2] {
        [
            QuadElement::new(self.a.clone(), BigRational::zero()),
            QuadElement::new(self.b.clone(), self.c.clone()),
        ]
    }

    pub fn contains(&self, v: &QuadElement) -> bool {
        let k = &v.y / &self.c;
        if !k.is_integer() {
            return false;
        }
        ((&v.x - &k * &self.b) / &self.a).is_integer()
    }

    /// Covolume `A·C`.
    pub fn covolume(&self) -> BigRational {
        &self.a * &self.c
    }

    /// `{w : ⟨w, v⟩ ∈ ℤ for all v}`.
    pub fn dual(&self) -> Self {
        let ac = &self.a * &self.c;
        let rows = [
            QuadElement::new(self.a.recip(), -(&self.b / &ac)),
            QuadElement::new(BigRational::zero(), self.c.recip()),
        ];
        Self::from_generators(&rows).expect("dual of a full-rank lattice is full rank")
    }

    pub fn sum(&self, other: &Self) -> Self {
        let [p, q] = self.basis();
        let [r, s] = other.basis();
        Self::from_generators(&[p, q, r, s]).expect("sum contains a full-rank lattice")
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.dual().sum(&other.dual()).dual()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64, y: i64) -> QuadElement {
        QuadElement::from_ints(x, y)
    }

    #[test]
    fn hnf_of_prime_above_two() {
        let l = Lattice2::from_generators(&[q(2, 0), q(0, 2), q(1, 1), q(-5, 1)]).unwrap();
        assert_eq!(l.a, BigRational::from_integer(2.into()));
        assert_eq!(l.b, BigRational::one());
        assert_eq!(l.c, BigRational::one());
    }

    #[test]
    fn rank_deficient() {
        assert!(Lattice2::from_generators(&[q(2, 4), q(1, 2)]).is_none());
        assert!(Lattice2::from_generators(&[q(2, 0), q(3, 0)]).is_none());
        assert!(Lattice2::from_generators(&[]).is_none());
    }

    #[test]
    fn intersection_matches_brute_force() {
        let l1 = Lattice2::from_generators(&[q(2, 0), q(1, 3)]).unwrap();
        let l2 = Lattice2::from_generators(&[q(3, 0), q(0, 2)]).unwrap();
        let meet = l1.intersection(&l2);
        for x in -12..=12 {
            for y in -12..=12 {
                let v = q(x, y);
                assert_eq!(
                    meet.contains(&v),
                    l1.contains(&v) && l2.contains(&v),
                    "{x},{y}"
                );
            }
        }
    }

    #[test]
    fn dual_is_involutive() {
        let half = BigRational::new(1.into(), 2.into());
        let l = Lattice2::from_generators(&[
            QuadElement::new(half.clone(), half.clone()),
            q(3, 0),
            q(1, 4),
        ])
        .unwrap();
        assert_eq!(l.dual().dual(), l);
    }
}
