//! Positive definite binary quadratic forms and the form class group of a
//! negative discriminant.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// `a·x² + b·xy + c·y²` with `b² − 4ac < 0` and `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

fn ext_gcd(x: i128, y: i128) -> (i128, i128, i128) {
    let e = x.extended_gcd(&y);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let f = QuadForm { a, b, c };
        if a <= 0 || f.discriminant_wide() >= 0 {
            return Err(Error::InvalidDomain(format!(
                "({a},{b},{c}) is not positive definite"
            )));
        }
        Ok(f)
    }

    fn discriminant_wide(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant_wide() as i64
    }

    /// The principal form `(1, t, (t² − D)/4)`, `t ≡ D (mod 2)`.
    pub fn identity(discriminant: i64) -> Self {
        let t = discriminant.rem_euclid(2);
        QuadForm {
            a: 1,
            b: t,
            c: (t * t - discriminant) / 4,
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && ((b.abs() != a && a != c) || b >= 0)
    }

    /// The unique reduced form properly equivalent to `self`.
    pub fn reduce(&self) -> Self {
        let (mut a, mut b, mut c) = (self.a as i128, self.b as i128, self.c as i128);
        loop {
            if !(-a < b && b <= a) {
                // x ↦ x + r·y moves b into (−a, a].
                let r = Integer::div_floor(&(a - b), &(2 * a));
                c += a * r * r + b * r;
                b += 2 * a * r;
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            break;
        }
        QuadForm {
            a: a as i64,
            b: b as i64,
            c: c as i64,
        }
    }

    /// Dirichlet composition followed by reduction.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let disc = self.discriminant_wide();
        if disc != other.discriminant_wide() {
            return Err(Error::Mismatch("discriminants"));
        }
        let (f1, f2) = if self.a > other.a {
            (other, self)
        } else {
            (self, other)
        };
        let (a1, b1) = (f1.a as i128, f1.b as i128);
        let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (d, y1) = if a2 % a1 == 0 {
            (a1, 0)
        } else {
            let (d, u, _) = ext_gcd(a2, a1);
            (d, u)
        };
        let (d1, x2, y2) = if s % d == 0 {
            (d, 0, -1)
        } else {
            let (d1, x2, y2) = ext_gcd(s, d);
            (d1, x2, -y2)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let num = b3 * b3 - disc;
        if num % (4 * a3) != 0 {
            return Err(Error::Overflow("form composition lost integrality"));
        }
        let c3 = num / (4 * a3);
        let composed = QuadForm {
            a: narrow(a3, "form composition")?,
            b: narrow(b3, "form composition")?,
            c: narrow(c3, "form composition")?,
        };
        Ok(composed.reduce())
    }

    /// `(a, −b, c)`, reduced.
    pub fn inverse(&self) -> Self {
        QuadForm {
            a: self.a,
            b: -self.b,
            c: self.c,
        }
        .reduce()
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Every primitive reduced form of discriminant `disc`, ordered by `(a, b)`.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadForm>> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDomain(format!(
            "{disc} is not a negative discriminant"
        )));
    }
    let d = disc as i128;
    let mut out = Vec::new();
    let mut a: i128 = 1;
    while 3 * a * a <= -d {
        for b in (-a + 1)..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (a == c && b < 0) {
                continue;
            }
            let f = QuadForm {
                a: a as i64,
                b: b as i64,
                c: narrow(c, "reduced_forms")?,
            };
            if f.is_primitive() {
                out.push(f);
            }
        }
        a += 1;
    }
    Ok(out)
}

/// The form class group: reduced forms with the composition table.
#[derive(Debug, Clone, Serialize)]
pub struct ClassGroup {
    pub discriminant: i64,
    pub forms: Vec<QuadForm>,
    /// `table[i][j]` is the index of `forms[i] ∘ forms[j]`.
    pub table: Vec<Vec<usize>>,
}

impl ClassGroup {
    pub fn for_discriminant(disc: i64) -> Result<Self> {
        let forms = reduced_forms(disc)?;
        let index: HashMap<QuadForm, usize> =
            forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut table = Vec::with_capacity(forms.len());
        for f in &forms {
            let mut row = Vec::with_capacity(forms.len());
            for g in &forms {
                let h = f.compose(g)?;
                let k = *index
                    .get(&h)
                    .ok_or(Error::Overflow("composition left the reduced-form set"))?;
                row.push(k);
            }
            table.push(row);
        }
        Ok(ClassGroup {
            discriminant: disc,
            forms,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.forms.len()
    }

    pub fn identity_index(&self) -> usize {
        // The principal form has a = 1 and sorts first.
        0
    }

    pub fn index_of(&self, f: &QuadForm) -> Option<usize> {
        self.forms.iter().position(|g| g == f)
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != self.identity_index() {
            cur = self.table[cur][i];
            k += 1;
        }
        k
    }

    fn power(&self, i: usize, e: usize) -> usize {
        (0..e).fold(self.identity_index(), |acc, _| self.table[acc][i])
    }

    /// Invariant factors `d₁ | d₂ | …`, all > 1; empty for the trivial group.
    pub fn invariant_factors(&self) -> Vec<usize> {
        let h = self.order();
        let mut per_prime: Vec<Vec<usize>> = Vec::new();
        let mut rest = h;
        let mut p = 2;
        while rest > 1 {
            if !rest.is_multiple_of(p) {
                p += 1;
                continue;
            }
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            // |G[pⁱ]| = p^(Σ_j min(i, e_j)); successive ratios count the
            // cyclic factors of exponent ≥ i.
            let mut counts = vec![1usize];
            let mut k = p;
            loop {
                let c = (0..h)
                    .filter(|&g| self.power(g, k) == self.identity_index())
                    .count();
                if c == *counts.last().unwrap() {
                    break;
                }
                counts.push(c);
                k *= p;
            }
            let ranks: Vec<usize> = counts.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
            let factors = ranks.first().copied().unwrap_or(0);
            let mut powers = vec![1usize; factors];
            for r in &ranks {
                for pw in powers.iter_mut().take(*r) {
                    *pw *= p;
                }
            }
            per_prime.push(powers);
        }
        let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![1usize; width];
        for powers in per_prime {
            for (slot, pw) in out.iter_mut().zip(powers) {
                *slot *= pw;
            }
        }
        out.sort_unstable();
        out
    }

    /// `0`, `Z/2Z`, `Z/2Z ⊕ Z/4Z`, …
    pub fn structure(&self) -> String {
        let inv = self.invariant_factors();
        if inv.is_empty() {
            "0".into()
        } else {
            inv.iter()
                .map(|d| format!("Z/{d}Z"))
                .collect::<Vec<_>>()
                .join(" ⊕ ")
        }
    }
}

fn ilog(mut v: usize, p: usize) -> usize {
    let mut k = 0;
    while v > 1 {
        v /= p;
        k += 1;
    }
    k
}
