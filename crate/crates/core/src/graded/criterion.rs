use serde::Serialize;

use crate::coeff::{class_group, CoefficientDomain};
use crate::error::Result;
use crate::ideals::search_nonprincipal_t_invertible;
use crate::semigroup::MonoidDescriptor;

/// How the condition `Cl(Γ) = 0` was settled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassGroupCondition {
    /// `Γ = ℕ`: every fractional ideal is principal.
    Forced,
    /// `K[Γ]` is a Bezout domain, so every t-invertible ideal is principal.
    Cited,
    SearchedNoneFound {
        bound: i64,
    },
    Found {
        ideal: String,
    },
}

impl ClassGroupCondition {
    pub fn holds(&self) -> bool {
        !matches!(self, ClassGroupCondition::Found { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub domain: String,
    pub monoid: String,
    pub domain_integrally_closed: bool,
    pub monoid_integrally_closed: bool,
    pub monoid_class_group: ClassGroupCondition,
    pub holds: bool,
    /// `Cl(A)` as a product of cyclic groups, when computable.
    pub coefficient_class_group: Option<String>,
    pub conclusion: String,
}

/// `Cl(A[Γ]) = Cl(A)` holds exactly when `A` and `Γ` are integrally closed
/// and `Cl(Γ) = 0`; evaluates the three conditions.
pub fn class_group_criterion(
    domain: &CoefficientDomain,
    monoid: &MonoidDescriptor,
    search_bound: i64,
) -> Result<CriterionReport> {
    let domain_closed = domain.is_integrally_closed();
    let monoid_closed = monoid.is_integrally_closed();
    let condition = match monoid {
        MonoidDescriptor::PPowerCone(_) => ClassGroupCondition::Cited,
        MonoidDescriptor::Numerical(s) if s.is_integrally_closed() => ClassGroupCondition::Forced,
        MonoidDescriptor::Numerical(s) => {
            match search_nonprincipal_t_invertible(s, search_bound)? {
                None => ClassGroupCondition::SearchedNoneFound {
                    bound: search_bound,
                },
                Some(y) => ClassGroupCondition::Found { ideal: y.to_text() },
            }
        }
    };
    let coefficient_class_group = match domain {
        CoefficientDomain::RationalField | CoefficientDomain::IntegerRing => Some("0".to_string()),
        CoefficientDomain::QuadraticOrder(o) if o.is_maximal() => {
            Some(class_group(domain)?.structure())
        }
        CoefficientDomain::QuadraticOrder(_) => None,
    };
    let holds = domain_closed && monoid_closed && condition.holds();
    let conclusion = if holds {
        format!(
            "Cl({domain}[{monoid}]) = Cl({domain}) = {}",
            coefficient_class_group.as_deref().unwrap_or("?")
        )
    } else {
        let mut failed = Vec::new();
        if !domain_closed {
            failed.push(format!("{domain} is not integrally closed"));
        }
        if !monoid_closed {
            failed.push(format!("{monoid} is not integrally closed"));
        }
        if !condition.holds() {
            failed.push(format!("Cl({monoid}) is nontrivial"));
        }
        format!("criterion fails: {}", failed.join("; "))
    };
    Ok(CriterionReport {
        domain: domain.to_text(),
        monoid: monoid.to_text(),
        domain_integrally_closed: domain_closed,
        monoid_integrally_closed: monoid_closed,
        monoid_class_group: condition,
        holds,
        coefficient_class_group,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_over_sqrt_minus_five() {
        let d = CoefficientDomain::quadratic(-5).unwrap();
        let m = MonoidDescriptor::p_power_cone(2).unwrap();
        let r = class_group_criterion(&d, &m, 20).unwrap();
        assert!(r.holds);
        assert_eq!(r.monoid_class_group, ClassGroupCondition::Cited);
        assert_eq!(r.coefficient_class_group.as_deref(), Some("Z/2Z"));
        assert!(r.conclusion.ends_with("= Z/2Z"), "{}", r.conclusion);
    }

    #[test]
    fn naturals_forced() {
        let m: MonoidDescriptor = "1".parse().unwrap();
        let r = class_group_criterion(&CoefficientDomain::IntegerRing, &m, 20).unwrap();
        assert!(r.holds);
        assert_eq!(r.monoid_class_group, ClassGroupCondition::Forced);
    }

    #[test]
    fn two_three_fails() {
        let m: MonoidDescriptor = "2,3".parse().unwrap();
        let r = class_group_criterion(&CoefficientDomain::RationalField, &m, 20).unwrap();
        assert!(!r.holds);
        assert!(!r.monoid_integrally_closed);
        assert_eq!(
            r.monoid_class_group,
            ClassGroupCondition::SearchedNoneFound { bound: 20 }
        );
        assert!(r.conclusion.contains("not integrally closed"));
    }

    #[test]
    fn non_maximal_order() {
        let d = CoefficientDomain::quadratic(-3).unwrap();
        let m: MonoidDescriptor = "1".parse().unwrap();
        let r = class_group_criterion(&d, &m, 5).unwrap();
        assert!(!r.holds);
        assert_eq!(r.coefficient_class_group, None);
    }
}
