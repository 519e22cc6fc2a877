//! Fractional ideals of a numerical semigroup Γ.
//!
//! Every ideal handled here is finitely generated, `Y = F + Γ`, and is kept in
//! a canonical windowed form: below `min` nothing is a member, from
//! `stable_bound = max(F) + conductor(Γ)` on everything is, and the window in
//! between is a bitmap. Equality is comparison of minimal generators.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::Arc;

use bitvec::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{parse_int_list, NumericalSemigroup};

const MAX_WINDOW: i64 = 1 << 24;
const MAX_SUBSET_GENERATORS: usize = 20;

#[derive(Clone)]
pub struct FractionalIdeal {
    monoid: Arc<NumericalSemigroup>,
    min: i64,
    stable_bound: i64,
    window: BitVec<u64, Lsb0>,
    min_generators: Vec<i64>,
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_monoid(other) && self.min_generators == other.min_generators
    }
}

impl Eq for FractionalIdeal {}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FractionalIdeal({})", self.to_text())
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.min_generators.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}+{}", gens.join(","), self.monoid)
    }
}

/// JSON-facing summary of an ideal.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealSummary {
    pub min: i64,
    pub generators: Vec<i64>,
    pub stable_bound: i64,
    pub divisorial: bool,
    pub principal: bool,
    pub t_invertible: bool,
}

impl FractionalIdeal {
    /// Canonical form of `F + Γ`.
    pub fn from_generators(monoid: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = gens
            .iter()
            .max()
            .expect("nonempty")
            .checked_add(monoid.conductor())
            .ok_or(Error::Overflow("ideal_from_generators"))?;
        Self::from_predicate(monoid, lo, hi, |x| {
            gens.iter().any(|&f| monoid.contains(x - f))
        })
    }

    /// `α + Γ`.
    pub fn principal(monoid: &Arc<NumericalSemigroup>, alpha: i64) -> Result<Self> {
        Self::from_generators(monoid, &[alpha])
    }

    /// Γ itself, the identity of ideal addition.
    pub fn whole(monoid: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(monoid, 0).expect("Γ is representable")
    }

    /// Builds the ideal whose members are `pred(x)` on `[lo, hi)`, nothing
    /// below `lo` and everything from `hi` on. The caller guarantees the set
    /// is Γ-closed.
    fn from_predicate(
        monoid: &Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Result<Self> {
        check_window(lo, hi)?;
        let member = |x: i64| x >= hi || (x >= lo && pred(x));
        let scan_end = hi
            .checked_add(monoid.multiplicity())
            .ok_or(Error::Overflow("ideal window"))?;
        let gens = monoid.generators();
        let min_generators: Vec<i64> = (lo..scan_end)
            .filter(|&x| member(x) && gens.iter().all(|&s| !member(x - s)))
            .collect();
        Self::from_min_generators(monoid, min_generators)
    }

    fn from_min_generators(
        monoid: &Arc<NumericalSemigroup>,
        min_generators: Vec<i64>,
    ) -> Result<Self> {
        let min = *min_generators.first().ok_or(Error::EmptyGenerators)?;
        let max = *min_generators.last().expect("nonempty");
        let stable_bound = max
            .checked_add(monoid.conductor())
            .ok_or(Error::Overflow("stable bound"))?;
        check_window(min, stable_bound)?;
        let len = (stable_bound - min) as usize;
        let mut window = bitvec![u64, Lsb0; 0; len];
        for (i, x) in (min..stable_bound).enumerate() {
            if min_generators.iter().any(|&f| monoid.contains(x - f)) {
                window.set(i, true);
            }
        }
        Ok(FractionalIdeal {
            monoid: Arc::clone(monoid),
            min,
            stable_bound,
            window,
            min_generators,
        })
    }

    pub fn monoid(&self) -> &Arc<NumericalSemigroup> {
        &self.monoid
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn stable_bound(&self) -> i64 {
        self.stable_bound
    }

    pub fn min_generators(&self) -> &[i64] {
        &self.min_generators
    }

    /// Members inside `[min, stable_bound)`.
    pub fn window_members(&self) -> Vec<i64> {
        self.window
            .iter_ones()
            .map(|i| self.min + i as i64)
            .collect()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x < self.min {
            false
        } else if x >= self.stable_bound {
            true
        } else {
            self.window[(x - self.min) as usize]
        }
    }

    fn same_monoid(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || self.monoid == other.monoid
    }

    fn check_monoid(&self, other: &Self) -> Result<()> {
        if self.same_monoid(other) {
            Ok(())
        } else {
            Err(Error::Mismatch("semigroups"))
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        let top = self.stable_bound.max(other.stable_bound);
        (self.min..top).all(|x| !self.contains(x) || other.contains(x))
    }

    /// True iff `Y ⊆ Γ`.
    pub fn is_integral(&self) -> bool {
        self.min_generators.iter().all(|&g| self.monoid.contains(g))
    }

    /// `α + Y`.
    pub fn shift(&self, alpha: i64) -> Result<Self> {
        let gens = self
            .min_generators
            .iter()
            .map(|g| g.checked_add(alpha).ok_or(Error::Overflow("shift")))
            .collect::<Result<Vec<_>>>()?;
        Self::from_min_generators(&self.monoid, gens)
    }

    /// Minkowski sum `Y + Z`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_monoid(other)?;
        let mut gens = Vec::with_capacity(self.min_generators.len() * other.min_generators.len());
        for &a in &self.min_generators {
            for &b in &other.min_generators {
                gens.push(a.checked_add(b).ok_or(Error::Overflow("minkowski_sum"))?);
            }
        }
        Self::from_generators(&self.monoid, &gens)
    }

    /// `(Y : Z) = {g : g + Z ⊆ Y}`, the intersection of the shifts `Y − e`
    /// over the generators `e` of `Z`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_monoid(other)?;
        let shifts = &other.min_generators;
        let lo = shifts.iter().map(|e| self.min - e).max().expect("nonempty");
        let hi = shifts
            .iter()
            .map(|e| self.stable_bound - e)
            .max()
            .expect("nonempty");
        Self::from_predicate(&self.monoid, lo, hi, |x| {
            shifts.iter().all(|&e| self.contains(x + e))
        })
    }

    /// `Y⁻¹ = (Γ : Y)`.
    pub fn inverse(&self) -> Self {
        Self::whole(&self.monoid)
            .colon(self)
            .expect("same monoid; window bounded by operands")
    }

    /// `Y_v = (Y⁻¹)⁻¹`.
    pub fn v_closure(&self) -> Self {
        self.inverse().inverse()
    }

    /// t-closure. Every ideal represented here is finitely generated, so this
    /// is the v-closure.
    pub fn t_closure(&self) -> Self {
        self.v_closure()
    }

    /// t-closure by definition: the union of `(F′ + Γ)_v` over the nonempty
    /// subsets `F′` of the minimal generators.
    pub fn t_closure_definitional(&self) -> Result<Self> {
        let gens = &self.min_generators;
        if gens.len() > MAX_SUBSET_GENERATORS {
            return Err(Error::TooLarge(format!(
                "{} generators for subset enumeration",
                gens.len()
            )));
        }
        let mut parts = Vec::new();
        for mask in 1u32..(1u32 << gens.len()) {
            let subset: Vec<i64> = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &g)| g)
                .collect();
            parts.push(Self::from_generators(&self.monoid, &subset)?.v_closure());
        }
        let lo = parts.iter().map(|p| p.min).min().expect("nonempty");
        let hi = parts
            .iter()
            .map(|p| p.stable_bound)
            .min()
            .expect("nonempty");
        Self::from_predicate(&self.monoid, lo, hi, |x| {
            parts.iter().any(|p| p.contains(x))
        })
    }

    pub fn is_divisorial(&self) -> bool {
        self.v_closure() == *self
    }

    pub fn is_principal(&self) -> bool {
        self.min_generators.len() == 1
    }

    /// `(Y + Y⁻¹)_v = Γ`.
    pub fn is_t_invertible(&self) -> bool {
        let product = self.sum(&self.inverse()).expect("same monoid");
        product.v_closure() == Self::whole(&self.monoid)
    }

    pub fn summary(&self) -> IdealSummary {
        IdealSummary {
            min: self.min,
            generators: self.min_generators.clone(),
            stable_bound: self.stable_bound,
            divisorial: self.is_divisorial(),
            principal: self.is_principal(),
            t_invertible: self.is_t_invertible(),
        }
    }

    /// Text form `gens=2,3@sgp=2,3`, in user coordinates.
    pub fn to_text(&self) -> String {
        let scale = self.monoid.scale();
        let gens: Vec<String> = self
            .min_generators
            .iter()
            .map(|g| (g * scale).to_string())
            .collect();
        format!("gens={}@sgp={}", gens.join(","), self.monoid.to_text())
    }

    /// Parses generators given in user coordinates (multiples of the scale).
    pub fn parse_generators(monoid: &Arc<NumericalSemigroup>, text: &str) -> Result<Self> {
        let scale = monoid.scale();
        let gens = parse_int_list(text)?
            .into_iter()
            .map(|g| {
                if g % scale == 0 {
                    Ok(g / scale)
                } else {
                    Err(Error::Parse(format!(
                        "generator {g} is not in the group generated by the semigroup (scale {scale})"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(monoid, &gens)
    }
}

impl FromStr for FractionalIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (gens, sgp) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("expected gens=...@sgp=..., got {s:?}")))?;
        let gens = gens
            .strip_prefix("gens=")
            .ok_or_else(|| Error::Parse(format!("missing gens= in {s:?}")))?;
        let sgp = sgp
            .strip_prefix("sgp=")
            .ok_or_else(|| Error::Parse(format!("missing sgp= in {s:?}")))?;
        let monoid = Arc::new(sgp.parse::<NumericalSemigroup>()?);
        Self::parse_generators(&monoid, gens)
    }
}

fn check_window(lo: i64, hi: i64) -> Result<()> {
    match hi.checked_sub(lo) {
        Some(len) if len <= MAX_WINDOW => Ok(()),
        Some(len) => Err(Error::TooLarge(format!("ideal window of length {len}"))),
        None => Err(Error::Overflow("ideal window")),
    }
}

/// An element of the t-class group of Γ, represented by the divisorial
/// ideal of the class shifted to minimum 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidClass {
    representative: FractionalIdeal,
    invertible: bool,
}

impl MonoidClass {
    pub fn representative(&self) -> &FractionalIdeal {
        &self.representative
    }

    pub fn invertible(&self) -> bool {
        self.invertible
    }

    pub fn trivial(monoid: &Arc<NumericalSemigroup>) -> Self {
        MonoidClass {
            representative: FractionalIdeal::whole(monoid),
            invertible: true,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.representative == FractionalIdeal::whole(self.representative.monoid())
    }

    fn require_invertible(&self) -> Result<()> {
        if self.invertible {
            Ok(())
        } else {
            Err(Error::NotInvertible(self.representative.to_text()))
        }
    }
}

pub fn class_reduce(y: &FractionalIdeal) -> MonoidClass {
    let closed = y.v_closure();
    let representative = closed
        .shift(-closed.min())
        .expect("shift to 0 stays in range");
    let invertible = representative.is_t_invertible();
    MonoidClass {
        representative,
        invertible,
    }
}

pub fn class_mul(c1: &MonoidClass, c2: &MonoidClass) -> Result<MonoidClass> {
    c1.require_invertible()?;
    c2.require_invertible()?;
    Ok(class_reduce(&c1.representative.sum(&c2.representative)?))
}

pub fn class_inverse(c: &MonoidClass) -> Result<MonoidClass> {
    c.require_invertible()?;
    Ok(class_reduce(&c.representative.inverse()))
}

pub fn class_is_trivial(c: &MonoidClass) -> bool {
    c.is_trivial()
}

/// Walks every canonical generator set `F ⊆ [0, bound]` (an antichain for
/// the order `x ≤ y ⇔ y − x ∈ Γ`), smallest maximum first and
/// lexicographically within a maximum.
pub fn for_each_canonical_generator_set<B>(
    monoid: &NumericalSemigroup,
    bound: i64,
    mut visit: impl FnMut(&[i64]) -> ControlFlow<B>,
) -> Option<B> {
    fn extend<B>(
        candidates: &[i64],
        gaps: &[i64],
        top: i64,
        prefix: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        for (i, &c) in candidates.iter().enumerate() {
            let compatible = prefix.iter().all(|&p| gaps.binary_search(&(c - p)).is_ok());
            if compatible {
                prefix.push(c);
                extend(&candidates[i + 1..], gaps, top, prefix, visit)?;
                prefix.pop();
            }
        }
        prefix.push(top);
        let flow = visit(prefix);
        prefix.pop();
        flow
    }

    let gaps = monoid.gaps();
    let mut prefix = Vec::new();
    for top in 0..=bound {
        // Every other element must sit a gap below the maximum.
        let mut candidates: Vec<i64> = gaps.iter().map(|g| top - g).filter(|&c| c >= 0).collect();
        candidates.sort_unstable();
        if let ControlFlow::Break(b) = extend(&candidates, gaps, top, &mut prefix, &mut visit) {
            return Some(b);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchProgress {
    pub examined: usize,
    pub current_max: i64,
}

pub fn search_nonprincipal_t_invertible(
    monoid: &Arc<NumericalSemigroup>,
    bound: i64,
) -> Result<Option<FractionalIdeal>> {
    search_nonprincipal_t_invertible_with_progress(monoid, bound, |p| {
        log::debug!(
            "search: {} generator sets examined, max {}",
            p.examined,
            p.current_max
        );
    })
}

/// Exhaustive probe for a non-principal t-invertible ideal with generators
/// in `[0, bound]`. `progress` fires each time the enumeration moves to a
/// larger maximum generator.
pub fn search_nonprincipal_t_invertible_with_progress(
    monoid: &Arc<NumericalSemigroup>,
    bound: i64,
    mut progress: impl FnMut(SearchProgress),
) -> Result<Option<FractionalIdeal>> {
    if bound < 1 {
        return Err(Error::Parse(format!(
            "search bound must be >= 1, got {bound}"
        )));
    }
    let mut examined = 0usize;
    let mut current_max = -1;
    let mut failure = None;
    let found = for_each_canonical_generator_set(monoid, bound, |gens| {
        let top = *gens.last().expect("nonempty");
        if top != current_max {
            current_max = top;
            progress(SearchProgress {
                examined,
                current_max,
            });
        }
        examined += 1;
        if gens.len() == 1 {
            return ControlFlow::Continue(());
        }
        match FractionalIdeal::from_generators(monoid, gens) {
            Ok(y) if y.is_t_invertible() => ControlFlow::Break(y),
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(FractionalIdeal::whole(monoid))
            }
        }
    });
    progress(SearchProgress {
        examined,
        current_max,
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn ideal(s: &Arc<NumericalSemigroup>, gens: &[i64]) -> FractionalIdeal {
        FractionalIdeal::from_generators(s, gens).unwrap()
    }

    #[test]
    fn y0_over_two_three() {
        let s = sgp(&[2, 3]);
        let y0 = ideal(&s, &[2, 3]);
        assert_eq!(y0.min_generators(), &[2, 3]);
        assert_eq!(y0.min(), 2);
        assert!(!y0.contains(1));
        assert!((2..30).all(|x| y0.contains(x)));
        assert!(y0.is_divisorial());
        assert!(!y0.is_principal());
        assert!(!y0.is_t_invertible());
        assert_eq!(y0.v_closure(), y0);
    }

    #[test]
    fn canonical_form_fields() {
        let s = sgp(&[3, 5]);
        let y = ideal(&s, &[5, 3, 8, 6]);
        assert_eq!(y.min_generators(), &[3, 5]);
        assert_eq!(y.stable_bound(), 5 + s.conductor());
        assert!(y.contains(y.min()));
    }

    #[test]
    fn identity_and_naturals() {
        let s = sgp(&[2, 3]);
        assert_eq!(ideal(&s, &[0]), FractionalIdeal::whole(&s));
        let z_plus = ideal(&s, &[0, 1]);
        assert!((0..20).all(|x| z_plus.contains(x)));
        assert!(!z_plus.contains(-1));
    }

    #[test]
    fn colon_examples() {
        let s = sgp(&[2, 3]);
        let y0 = ideal(&s, &[2, 3]);
        let gamma = FractionalIdeal::whole(&s);
        assert_eq!(gamma.colon(&y0).unwrap().min_generators(), &[0, 1]);
        let p = ideal(&s, &[7]);
        assert_eq!(gamma.colon(&p).unwrap(), ideal(&s, &[-7]));
    }

    #[test]
    fn empty_generators_rejected() {
        let s = sgp(&[2, 3]);
        assert_eq!(
            FractionalIdeal::from_generators(&s, &[]),
            Err(Error::EmptyGenerators)
        );
    }

    #[test]
    fn monoid_mismatch() {
        let a = ideal(&sgp(&[2, 3]), &[0]);
        let b = ideal(&sgp(&[3, 5]), &[0]);
        assert_eq!(a.sum(&b), Err(Error::Mismatch("semigroups")));
        assert_eq!(a.colon(&b), Err(Error::Mismatch("semigroups")));
    }

    #[test]
    fn definitional_t_closure_agrees() {
        let s = sgp(&[3, 5, 7]);
        let y = ideal(&s, &[0, 1, 2]);
        assert_eq!(y.t_closure_definitional().unwrap(), y.t_closure());
    }

    #[test]
    fn class_operations() {
        let s = sgp(&[2, 3]);
        let c = class_reduce(&ideal(&s, &[5]));
        assert!(c.invertible());
        assert!(class_is_trivial(&c));
        let inv = class_inverse(&c).unwrap();
        assert!(class_is_trivial(&class_mul(&c, &inv).unwrap()));
        let y0 = class_reduce(&ideal(&s, &[4, 5]));
        assert!(!y0.invertible());
        assert!(!class_is_trivial(&y0));
        assert_eq!(y0.representative(), &ideal(&s, &[0, 1]));
        assert!(matches!(class_inverse(&y0), Err(Error::NotInvertible(_))));
        assert!(matches!(class_mul(&c, &y0), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn enumeration_order_is_by_max_then_lex() {
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        let mut seen = Vec::new();
        for_each_canonical_generator_set::<()>(&s, 6, |g| {
            seen.push(g.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen[0], vec![0]);
        assert!(seen.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            a.last() < b.last() || (a.last() == b.last() && a < b)
        }));
        assert!(seen.contains(&vec![0, 1, 2]));
        assert!(!seen.contains(&vec![0, 3]));
    }

    #[test]
    fn search_two_three_finds_nothing() {
        let s = sgp(&[2, 3]);
        let mut calls = 0;
        let r = search_nonprincipal_t_invertible_with_progress(&s, 20, |_| calls += 1).unwrap();
        assert!(r.is_none());
        assert!(calls > 0);
        assert!(search_nonprincipal_t_invertible(&sgp(&[1]), 10)
            .unwrap()
            .is_none());
        assert!(search_nonprincipal_t_invertible(&s, 0).is_err());
    }

    #[test]
    fn text_round_trip() {
        let y: FractionalIdeal = "gens=2,3@sgp=2,3".parse().unwrap();
        assert_eq!(y.to_text(), "gens=2,3@sgp=2,3");
        let scaled: FractionalIdeal = "gens=4,6@sgp=4,6".parse().unwrap();
        assert_eq!(scaled.min_generators(), &[2, 3]);
        assert!("gens=3@sgp=4,6".parse::<FractionalIdeal>().is_err());
        assert!("2,3".parse::<FractionalIdeal>().is_err());
    }
}
