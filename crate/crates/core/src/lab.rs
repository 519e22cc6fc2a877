//! Arithmetic in `T_x = K[x, x⁻¹, y, z]/(yz − x² + x)` over `K = ℚ`, and the
//! subring `R` with `R_d = T_d` for `d ≠ 0` and `R_0 = K + x(x−1)K[x]`.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// `x^a·y^b·z^c` with `b·c = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: i64,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub fn degree(&self) -> i64 {
        i64::from(self.b) - i64::from(self.c)
    }
}

/// By power of `x`, then `|degree|`, then `y` before `z`. The degree
/// determines `b` and `c` once `b·c = 0`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |m: &Monomial| (m.a, m.degree().abs(), Reverse(m.degree()), m.b, m.c);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `T_x` in normal form: no stored monomial contains `yz`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl TElement {
    pub fn zero() -> Self {
        TElement::default()
    }

    pub fn constant(q: BigRational) -> Self {
        let mut t = TElement::zero();
        t.add_term(Monomial { a: 0, b: 0, c: 0 }, q);
        t
    }

    pub fn int(v: i64) -> Self {
        Self::constant(BigRational::from_integer(v.into()))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `x^a`, `a` possibly negative.
    pub fn x_pow(a: i64) -> Self {
        Self::monomial(BigRational::one(), a, 0, 0)
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn y() -> Self {
        Self::monomial(BigRational::one(), 0, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(BigRational::one(), 0, 0, 1)
    }

    /// `q·x^a·y^b·z^c`, rewritten into normal form.
    pub fn monomial(q: BigRational, a: i64, b: u32, c: u32) -> Self {
        let mut t = TElement::zero();
        t.add_rewritten(&q, a, b, c);
        t
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Adds `q·x^a·y^b·z^c` after replacing `(yz)^k` by
    /// `(x² − x)^k = Σ_i C(k,i)·(−1)^(k−i)·x^(k+i)`, `k = min(b, c)`.
    fn add_rewritten(&mut self, q: &BigRational, a: i64, b: u32, c: u32) {
        let k = b.min(c);
        let (b, c) = (b - k, c - k);
        for i in 0..=k {
            let mut coef = BigRational::from_integer(binomial(BigInt::from(k), BigInt::from(i)));
            if (k - i) % 2 == 1 {
                coef = -coef;
            }
            let m = Monomial {
                a: a + i64::from(k) + i64::from(i),
                b,
                c,
            };
            self.add_term(m, q * coef);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(*m, q.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TElement {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = TElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * q);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TElement::zero();
        for (m, p) in &self.terms {
            for (n, q) in &other.terms {
                out.add_rewritten(&(p * q), m.a + n.a, m.b + n.b, m.c + n.c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(TElement::one(), |acc, _| acc.mul(self))
    }

    /// Graded components keyed by degree `b − c`.
    pub fn components(&self) -> BTreeMap<i64, TElement> {
        let mut out: BTreeMap<i64, TElement> = BTreeMap::new();
        for (m, q) in &self.terms {
            out.entry(m.degree()).or_default().add_term(*m, q.clone());
        }
        out
    }

    /// Membership in `R`: no negative powers of `x`, and the degree-0 part
    /// `p(x)` satisfies `p(0) = p(1)`, i.e. `p ∈ K + x(x−1)K[x]`.
    pub fn in_r(&self) -> bool {
        if self.terms.keys().any(|m| m.a < 0) {
            return false;
        }
        let degree_zero = self.terms.iter().filter(|(m, _)| m.degree() == 0);
        let mut at_zero = BigRational::zero();
        let mut at_one = BigRational::zero();
        for (m, q) in degree_zero {
            if m.a == 0 {
                at_zero += q;
            }
            at_one += q;
        }
        at_zero == at_one
    }
}

impl fmt::Display for TElement {
    /// `1-y+z`, `x^2*y-1/2*x^-1*z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            let var = |name: &str, e: i64| match e {
                0 => None,
                1 => Some(name.to_string()),
                _ => Some(format!("{name}^{e}")),
            };
            factors.extend(var("x", m.a));
            factors.extend(var("y", i64::from(m.b)));
            factors.extend(var("z", i64::from(m.c)));
            let mag = q.abs();
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, mag.to_string());
            }
            if q.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push_str(&factors.join("*"));
        }
        f.write_str(&out)
    }
}

/// The six generators `a, b, c` of `I` and `d, e, f` of `J`.
pub fn example_generators() -> [(&'static str, TElement); 6] {
    let x = TElement::x();
    let y = TElement::y();
    let z = TElement::z();
    let one = TElement::one();
    let xm1 = x.sub(&one);
    [
        ("a", x.mul(&x).mul(&xm1)),
        ("b", x.sub(&y)),
        ("c", x.mul(&xm1).sub(&x.mul(&y))),
        ("d", one.add(&z.mul(&TElement::x_pow(-1)))),
        ("e", z.add(&xm1)),
        ("f", xm1),
    ]
}

/// `16af − (4x(x−1) − 1)·[(be − cd)² − (bd)² + 2bd]`.
pub fn unit_identity() -> TElement {
    let [(_, a), (_, b), (_, c), (_, d), (_, e), (_, f)] = example_generators();
    let x = TElement::x();
    let bd = b.mul(&d);
    let bracket = b
        .mul(&e)
        .sub(&c.mul(&d))
        .pow(2)
        .sub(&bd.pow(2))
        .add(&bd.scale(&BigRational::from_integer(2.into())));
    let factor = x
        .mul(&x.sub(&TElement::one()))
        .scale(&BigRational::from_integer(4.into()))
        .sub(&TElement::one());
    a.mul(&f)
        .scale(&BigRational::from_integer(16.into()))
        .sub(&factor.mul(&bracket))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabReport {
    pub identity: String,
    pub checks: Vec<LabCheck>,
}

impl LabReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies that the identity is exactly 1, that every product of a
/// generator of `I` with a generator of `J` lies in `R`, that `x ∉ R`, and
/// that `bd = 1 − y + z`.
pub fn verify_invertible_counterexample() -> LabReport {
    let identity = unit_identity();
    let mut checks = vec![LabCheck {
        name: "identity equals 1".into(),
        passed: identity == TElement::one(),
        detail: format!("normal form {identity}"),
    }];
    let gens = example_generators();
    for (p, u) in &gens[..3] {
        for (q, v) in &gens[3..] {
            let prod = u.mul(v);
            checks.push(LabCheck {
                name: format!("{p}{q} in R"),
                passed: prod.in_r(),
                detail: prod.to_string(),
            });
        }
    }
    let x = TElement::x();
    checks.push(LabCheck {
        name: "x not in R".into(),
        passed: !x.in_r(),
        detail: x.to_string(),
    });
    let bd = gens[1].1.mul(&gens[3].1);
    let expected = TElement::one().sub(&TElement::y()).add(&TElement::z());
    checks.push(LabCheck {
        name: "bd = 1-y+z".into(),
        passed: bd == expected,
        detail: bd.to_string(),
    });
    LabReport {
        identity: identity.to_string(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation() {
        let yz = TElement::y().mul(&TElement::z());
        assert_eq!(yz.to_string(), "-x+x^2");
        let u = TElement::monomial(BigRational::one(), -1, 3, 2);
        // x⁻¹·y·(yz)² = x⁻¹·y·(x² − x)².
        assert_eq!(u.to_string(), "x*y-2*x^2*y+x^3*y");
    }

    #[test]
    fn bd_product() {
        let [_, (_, b), _, (_, d), _, _] = example_generators();
        assert_eq!(b.mul(&d).to_string(), "1-y+z");
    }

    #[test]
    fn membership() {
        let x = TElement::x();
        let xm1 = x.sub(&TElement::one());
        assert!(!x.in_r());
        assert!(x.mul(&xm1).in_r());
        assert!(x.mul(&x).mul(&xm1).in_r());
        assert!(TElement::y().in_r());
        assert!(TElement::z().in_r());
        assert!(!TElement::x_pow(-1).mul(&TElement::y()).in_r());
        assert!(TElement::one().in_r());
    }

    #[test]
    fn example_verifies() {
        let r = verify_invertible_counterexample();
        assert_eq!(r.identity, "1");
        assert_eq!(r.checks.len(), 12);
        assert!(r.all_passed(), "{r:?}");
    }
}
