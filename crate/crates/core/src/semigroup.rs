//! Grading monoids: finitely generated numerical semigroups and the
//! p-power-divisible cone `⋃ (1/pⁿ)ℤ₊`.
//!
//! A numerical semigroup is stored normalized (gcd of the generators divided
//! out) so that its quotient group is always ℤ. The divided-out factor is kept
//! in [`NumericalSemigroup::scale`] for display and for translating user
//! coordinates.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest multiplicity (smallest generator) accepted. The Apéry table has
/// one slot per residue class.
const MAX_MULTIPLICITY: i64 = 1 << 20;
/// Largest Frobenius number accepted; the gap list is materialized.
const MAX_FROBENIUS: i64 = 1 << 24;

#[derive(Debug, Clone, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    scale: i64,
    gaps: Vec<i64>,
    frobenius: i64,
    conductor: i64,
    /// `apery[r]` is the smallest member congruent to `r` modulo the
    /// multiplicity.
    #[serde(skip)]
    apery: Vec<i64>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.scale == other.scale
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, dividing out their gcd and
    /// extracting the minimal generating set.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let scale = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        let mut normalized: Vec<i64> = gens.iter().map(|g| g / scale).collect();
        normalized.sort_unstable();
        normalized.dedup();

        let multiplicity = normalized[0];
        if multiplicity > MAX_MULTIPLICITY {
            return Err(Error::TooLarge(format!(
                "multiplicity {multiplicity} exceeds {MAX_MULTIPLICITY}"
            )));
        }
        let apery = apery_table(multiplicity, &normalized)?;
        let max_apery = *apery.iter().max().expect("multiplicity >= 1");
        let frobenius = max_apery - multiplicity;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::TooLarge(format!(
                "Frobenius number {frobenius} exceeds {MAX_FROBENIUS}"
            )));
        }
        let m = multiplicity as usize;
        let mut gaps = Vec::new();
        for g in 1..=frobenius.max(0) {
            if apery[(g as usize) % m] > g {
                gaps.push(g);
            }
        }

        let member = |g: i64| g >= 0 && apery[(g as usize) % m] <= g;
        // Sieve the Apéry set: w is a minimal generator iff it is not
        // w' + (nonzero member) for another nonzero Apéry element w'.
        let mut generators = vec![multiplicity];
        for &w in apery.iter().filter(|&&w| w != 0) {
            let decomposable = apery.iter().any(|&w2| w2 != 0 && w2 < w && member(w - w2));
            if !decomposable {
                generators.push(w);
            }
        }
        generators.sort_unstable();

        Ok(NumericalSemigroup {
            generators,
            scale,
            gaps,
            frobenius,
            conductor: frobenius + 1,
            apery,
        })
    }

    /// The trivial-gap semigroup ℤ₊ = ⟨1⟩.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("⟨1⟩ is valid")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Largest gap, or −1 when there are none.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty")
    }

    /// Membership in normalized coordinates.
    #[inline]
    pub fn contains(&self, g: i64) -> bool {
        if g < 0 {
            return false;
        }
        if g >= self.conductor {
            return true;
        }
        self.apery[(g as usize) % self.apery.len()] <= g
    }

    /// True iff the semigroup is integrally closed in ℤ, i.e. equals ℤ₊.
    pub fn is_integrally_closed(&self) -> bool {
        self.gaps.is_empty()
    }

    /// For each residue class modulo the nonzero member `n`, the smallest
    /// member in that class, sorted ascending.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n > MAX_MULTIPLICITY {
            return Err(Error::TooLarge(format!("Apéry modulus {n}")));
        }
        let mut out = Vec::with_capacity(n as usize);
        for r in 0..n {
            let mut g = r;
            while !self.contains(g) {
                g = g.checked_add(n).ok_or(Error::Overflow("apery_set"))?;
            }
            out.push(g);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Text form: comma-separated generators in user coordinates.
    pub fn to_text(&self) -> String {
        self.generators
            .iter()
            .map(|g| (g * self.scale).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.to_text())
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = parse_int_list(s)?;
        Self::from_generators(&gens)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect()
}

/// Round-robin shortest paths over residues modulo `m`.
fn apery_table(m: i64, gens: &[i64]) -> Result<Vec<i64>> {
    let mu = m as usize;
    let mut dist = vec![i64::MAX; mu];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d.checked_add(g).ok_or(Error::Overflow("Apéry table"))?;
            let nr = (r + (g % m) as usize) % mu;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    if dist.contains(&i64::MAX) {
        // gcd is 1 after normalization, so every residue is reachable.
        return Err(Error::Overflow("Apéry table: unreachable residue"));
    }
    Ok(dist)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub supports_ideal_arithmetic: bool,
}

/// The grading monoids this crate can reason about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidDescriptor {
    Numerical(Arc<NumericalSemigroup>),
    /// `⋃ₙ (1/pⁿ)ℤ₊` for a prime `p`.
    PPowerCone(u64),
}

impl MonoidDescriptor {
    pub fn numerical(s: NumericalSemigroup) -> Self {
        MonoidDescriptor::Numerical(Arc::new(s))
    }

    pub fn p_power_cone(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(MonoidDescriptor::PPowerCone(p))
    }

    pub fn capabilities(&self) -> Capabilities {
        Capabilities {
            supports_ideal_arithmetic: matches!(self, MonoidDescriptor::Numerical(_)),
        }
    }

    /// Numerical semigroup behind this descriptor, or a capability error.
    pub fn as_numerical(&self) -> Result<&Arc<NumericalSemigroup>> {
        match self {
            MonoidDescriptor::Numerical(s) => Ok(s),
            MonoidDescriptor::PPowerCone(p) => Err(Error::Unsupported(format!(
                "ideal arithmetic on the p-power cone (p = {p})"
            ))),
        }
    }

    /// Exact membership of a rational, in user coordinates.
    pub fn contains(&self, g: &BigRational) -> Result<bool> {
        match self {
            MonoidDescriptor::Numerical(s) => {
                if !g.is_integer() {
                    return Err(Error::NonIntegerQuery(g.to_string()));
                }
                let n = g.to_integer();
                let scale = num_bigint::BigInt::from(s.scale());
                if !(&n % &scale).is_zero() {
                    return Ok(false);
                }
                match (n / scale).to_i64() {
                    Some(v) => Ok(s.contains(v)),
                    // Out of i64 range: huge positives are members, huge negatives are not.
                    None => Ok(g.is_positive()),
                }
            }
            MonoidDescriptor::PPowerCone(p) => {
                if g.is_negative() {
                    return Ok(false);
                }
                let mut den = g.denom().clone();
                let p = num_bigint::BigInt::from(*p);
                while !den.is_one() {
                    if !(&den % &p).is_zero() {
                        return Ok(false);
                    }
                    den /= &p;
                }
                Ok(true)
            }
        }
    }

    pub fn is_integrally_closed(&self) -> bool {
        match self {
            MonoidDescriptor::Numerical(s) => s.is_integrally_closed(),
            MonoidDescriptor::PPowerCone(_) => true,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            MonoidDescriptor::Numerical(s) => s.to_text(),
            MonoidDescriptor::PPowerCone(p) => format!("p^inf:{p}"),
        }
    }
}

impl FromStr for MonoidDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(p) = t.strip_prefix("p^inf:") {
            let p = p
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
            return Self::p_power_cone(p);
        }
        Ok(Self::numerical(t.parse()?))
    }
}

impl fmt::Display for MonoidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidDescriptor::Numerical(s) => s.fmt(f),
            MonoidDescriptor::PPowerCone(p) => write!(f, "⋃ (1/{p}ⁿ)ℤ₊"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.conductor(), 2);
        assert!(!s.is_integrally_closed());
        assert!(!s.contains(1));
        assert!(s.contains(0));
    }

    #[test]
    fn naturals_have_no_gaps() {
        let s = NumericalSemigroup::naturals();
        assert!(s.gaps().is_empty());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert!(s.is_integrally_closed());
        assert_eq!(s.apery_set(1).unwrap(), vec![0]);
    }

    #[test]
    fn scale_is_divided_out() {
        let s = NumericalSemigroup::from_generators(&[4, 6]).unwrap();
        assert_eq!(s.scale(), 2);
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.to_text(), "4,6");
    }

    #[test]
    fn minimal_generators_are_extracted() {
        let s = NumericalSemigroup::from_generators(&[3, 5, 6, 8, 9, 10, 7]).unwrap();
        assert_eq!(s.generators(), &[3, 5, 7]);
        let s = NumericalSemigroup::from_generators(&[5, 3, 3]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
    }

    #[test]
    fn apery_sets() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 5, 10]);
        assert_eq!(s.apery_set(0), Err(Error::NotAMember(0)));
        assert_eq!(s.apery_set(4), Err(Error::NotAMember(4)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[i64::MAX - 1, i64::MAX]),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn descriptor_membership() {
        let g: MonoidDescriptor = "2,3".parse().unwrap();
        assert!(!g.contains(&rat(1, 1)).unwrap());
        assert!(g.contains(&rat(0, 1)).unwrap());
        assert!(matches!(
            g.contains(&rat(1, 2)),
            Err(Error::NonIntegerQuery(_))
        ));
        let scaled: MonoidDescriptor = "4,6".parse().unwrap();
        assert!(scaled.contains(&rat(6, 1)).unwrap());
        assert!(!scaled.contains(&rat(3, 1)).unwrap());
        assert!(!scaled.contains(&rat(2, 1)).unwrap());
        let cone: MonoidDescriptor = "p^inf:2".parse().unwrap();
        assert!(cone.contains(&rat(3, 4)).unwrap());
        assert!(!cone.contains(&rat(1, 3)).unwrap());
        assert!(!cone.contains(&rat(-1, 2)).unwrap());
        assert!(cone.is_integrally_closed());
        assert!(!cone.capabilities().supports_ideal_arithmetic);
        assert!(matches!(cone.as_numerical(), Err(Error::Unsupported(_))));
        assert!("p^inf:4".parse::<MonoidDescriptor>().is_err());
    }
}
