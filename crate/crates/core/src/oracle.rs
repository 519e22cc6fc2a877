//! Brute-force reference implementations used to cross-check the fast paths.
//! Nothing here shares code with [`crate::semigroup`] or [`crate::ideals`]
//! beyond reading generator lists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ideals::FractionalIdeal;
use crate::lab::TElement;

/// `member[g]` for `0 ≤ g ≤ limit` by reachability over sums of `gens`.
pub fn dp_membership(gens: &[i64], limit: i64) -> Vec<bool> {
    let limit = limit.max(0) as usize;
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for g in 1..=limit {
        member[g] = gens
            .iter()
            .any(|&s| s > 0 && (s as usize) <= g && member[g - s as usize]);
    }
    member
}

/// A subset of ℤ known exactly on `[lo, hi)`, containing everything from
/// `hi` on and nothing below `lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSet {
    pub lo: i64,
    pub hi: i64,
    bits: Vec<bool>,
}

/// A numerical semigroup held as a DP table.
#[derive(Debug, Clone)]
pub struct NaiveMonoid {
    member: Vec<bool>,
}

impl NaiveMonoid {
    /// `gens` in normalized coordinates; the table covers `[0, limit]` and
    /// `limit` must reach the conductor.
    pub fn new(gens: &[i64], limit: i64) -> Self {
        NaiveMonoid {
            member: dp_membership(gens, limit),
        }
    }

    pub fn contains(&self, g: i64) -> bool {
        g >= 0 && (g as usize >= self.member.len() || self.member[g as usize])
    }

    /// One past the last non-member in the table.
    pub fn conductor(&self) -> i64 {
        self.member
            .iter()
            .rposition(|&m| !m)
            .map_or(0, |i| i as i64 + 1)
    }
}

impl WindowSet {
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> Self {
        WindowSet {
            lo,
            hi,
            bits: (lo..hi).map(f).collect(),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.hi || (x >= self.lo && self.bits[(x - self.lo) as usize])
    }

    /// `F + Γ` on `[lo, hi)`.
    pub fn generated(gamma: &NaiveMonoid, gens: &[i64], lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, |x| gens.iter().any(|&f| gamma.contains(x - f)))
    }

    /// `{y + z}`, evaluated by scanning every decomposition of each `x`.
    pub fn sum(&self, other: &Self, lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, |x| {
            (self.lo..=x - other.lo).any(|y| self.contains(y) && other.contains(x - y))
        })
    }

    /// `{g : g + other ⊆ self}`. Elements of `other` at or above `other.hi`
    /// are checked up to the point where `self` is full.
    pub fn colon(&self, other: &Self, lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, |g| {
            let top = other.hi.max(self.hi - g) + 1;
            (other.lo..=top).all(|z| !other.contains(z) || self.contains(g + z))
        })
    }

    /// Intersection of every principal shift `α + Γ` containing `self`,
    /// `α` ranging over `[lo_alpha, min]`.
    pub fn v_closure_by_shifts(
        &self,
        gamma: &NaiveMonoid,
        lo_alpha: i64,
        lo: i64,
        hi: i64,
    ) -> Self {
        let min = (self.lo..self.hi.max(self.lo + 1))
            .find(|&x| self.contains(x))
            .unwrap_or(self.hi);
        let scan_top = self.hi + gamma.conductor();
        let shifts: Vec<i64> = (lo_alpha..=min)
            .filter(|&a| (min..=scan_top).all(|x| !self.contains(x) || gamma.contains(x - a)))
            .collect();
        Self::from_fn(lo, hi, |x| shifts.iter().all(|&a| gamma.contains(x - a)))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        let lo = self.lo.min(other.lo);
        let hi = self.hi.max(other.hi);
        (lo..hi).all(|x| !self.contains(x) || other.contains(x))
    }

    pub fn agrees_with(&self, y: &FractionalIdeal) -> Option<i64> {
        (self.lo..self.hi).find(|&x| self.contains(x) != y.contains(x))
    }
}

/// Binary and unary semigroup-ideal operations with a set-arithmetic oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Colon,
    Inverse,
    V,
}

impl IdealOp {
    pub fn name(self) -> &'static str {
        match self {
            IdealOp::Sum => "sum",
            IdealOp::Colon => "colon",
            IdealOp::Inverse => "inverse",
            IdealOp::V => "v",
        }
    }
}

/// Recomputes `op(y, z)` by window set arithmetic and returns the first
/// point where `result` disagrees, with the window used. `z` is ignored by
/// the unary operations.
pub fn ideal_op_disagreement(
    op: IdealOp,
    y: &FractionalIdeal,
    z: &FractionalIdeal,
    result: &FractionalIdeal,
) -> (Option<i64>, i64, i64) {
    let gamma = y.monoid();
    let table = NaiveMonoid::new(
        gamma.generators(),
        gamma.conductor() + gamma.max_generator(),
    );
    let whole = FractionalIdeal::whole(gamma);
    let involved: Vec<&FractionalIdeal> = match op {
        IdealOp::Sum | IdealOp::Colon => vec![y, z, result],
        IdealOp::Inverse => vec![y, &whole, result],
        IdealOp::V => vec![y, result],
    };
    let c = gamma.conductor().max(1);
    let lo = involved.iter().map(|i| i.min()).min().expect("nonempty") - 2 * c;
    let hi = involved
        .iter()
        .map(|i| i.stable_bound())
        .max()
        .expect("nonempty")
        + 2 * c;
    let naive = |i: &FractionalIdeal| WindowSet::generated(&table, i.min_generators(), lo, hi);
    let expect = match op {
        IdealOp::Sum => naive(y).sum(&naive(z), lo, hi),
        IdealOp::Colon => naive(y).colon(&naive(z), lo, hi),
        IdealOp::Inverse => naive(&whole).colon(&naive(y), lo, hi),
        IdealOp::V => naive(y).v_closure_by_shifts(&table, lo, lo, hi),
    };
    (expect.agrees_with(result), lo, hi)
}

/// `gcd` of integer coefficients, the content of a polynomial over ℤ.
pub fn integer_content(coeffs: &[BigInt]) -> BigInt {
    coeffs
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
        .abs()
}

/// `gcd` of rationals as `gcd(numerators·L/denominators)/L`.
pub fn rational_content(coeffs: &[BigRational]) -> BigRational {
    let den = coeffs
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let nums: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    BigRational::new(integer_content(&nums), den)
}

/// Value of `u` at the point `(x, y, x(x−1)/y)` of the surface
/// `yz = x(x − 1)`; `x, y` must be nonzero and `x ≠ 1`.
pub fn evaluate_on_surface(u: &TElement, x: &BigRational, y: &BigRational) -> BigRational {
    let z = x * (x - BigRational::one()) / y;
    u.terms()
        .iter()
        .map(|(m, q)| {
            q * pow_signed(x, m.a) * pow_signed(y, i64::from(m.b)) * pow_signed(&z, i64::from(m.c))
        })
        .fold(BigRational::zero(), |acc, v| acc + v)
}

fn pow_signed(v: &BigRational, e: i64) -> BigRational {
    let p = (0..e.unsigned_abs()).fold(BigRational::one(), |acc, _| acc * v);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dp() {
        let m = dp_membership(&[3, 5], 8);
        let members: Vec<usize> = (0..=8).filter(|&g| m[g]).collect();
        assert_eq!(members, vec![0, 3, 5, 6, 8]);
    }

    #[test]
    fn window_arithmetic() {
        let gamma = NaiveMonoid::new(&[2, 3], 40);
        let y0 = WindowSet::generated(&gamma, &[2, 3], -10, 20);
        let whole = WindowSet::generated(&gamma, &[0], -10, 20);
        let inv = whole.colon(&y0, -10, 20);
        let members: Vec<i64> = (-10..4).filter(|&x| inv.contains(x)).collect();
        assert_eq!(members, vec![0, 1, 2, 3]);
        assert_eq!(y0.sum(&whole, -10, 20), y0);
        let v = y0.v_closure_by_shifts(&gamma, -10, -10, 20);
        assert_eq!(v, y0);
    }

    #[test]
    fn contents() {
        let c = integer_content(&[BigInt::from(4), BigInt::from(-6)]);
        assert_eq!(c, BigInt::from(2));
        let r = rational_content(&[
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        ]);
        assert_eq!(r, BigRational::new(1.into(), 6.into()));
    }
}
