//! Cross-check of the three equivalent characterizations of Coxeter type:
//! (1) every level-zero element is a twisted Coxeter element and condition 3
//! holds, (2) `dim X(μ, τ)_K = rank_ss(J_τ)`, (3) no admissible triple
//! violates the orbit-count bound.

use serde::{Deserialize, Serialize};

use coxtype_core::admissible::{admissible_set, direct_equality, k_adm_0};
use coxtype_core::classifier::{check_condition_3, Condition3};
use coxtype_core::dl_reduction::{dim_x_mu_tau_k, DimBound};
use coxtype_core::{CoxeterDatum, Error};

use crate::grammar::{render_datum, render_element_contracted};
use crate::records::Condition3Record;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub datum: String,
    /// `None` when a condition was not computed; `note` says why.
    pub condition_1: Option<bool>,
    pub condition_2: Option<bool>,
    pub condition_3: bool,
    pub witness: Condition3Record,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_exact: Option<bool>,
    pub rank_ss_j_tau: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_adm_0: Option<Vec<String>>,
    /// Every computed condition agrees with condition 3.
    pub consistent: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Evaluates all three conditions. Conditions (1) and (2) need `Adm(μ)`:
/// they are skipped when a necessary inequality already fails (condition (1)
/// is then false by definition) or when `<μ, 2ρ>` exceeds `budget`.
pub fn check(datum: &CoxeterDatum, budget: i32) -> Result<CheckReport, Error> {
    let cond3 = check_condition_3(datum);
    let rank = datum.rank_ss_j_tau();
    let mut report = CheckReport {
        datum: render_datum(datum, None),
        condition_1: None,
        condition_2: None,
        condition_3: cond3.holds(),
        witness: Condition3Record::from(&cond3),
        dim: None,
        dim_exact: None,
        rank_ss_j_tau: rank,
        k_adm_0: None,
        consistent: true,
        notes: Vec::new(),
    };
    if matches!(cond3, Condition3::InequalityB { .. } | Condition3::InequalityC { .. }) {
        report.condition_1 = Some(false);
        report.notes.push("a necessary inequality fails; the admissible set is not computed".into());
    } else {
        match admissible_set(datum.group(), datum.mu(), budget) {
            Ok(adm) => {
                let g = datum.group();
                report.k_adm_0 = Some(k_adm_0(datum, &adm).iter().map(|w| render_element_contracted(g, w)).collect());
                report.condition_1 = Some(direct_equality(datum, &adm) && cond3.holds());
                let bound = dim_x_mu_tau_k(datum, &adm)?;
                report.dim = Some(bound.value());
                report.dim_exact = Some(matches!(bound, DimBound::Exact(_)));
                report.condition_2 = match bound {
                    DimBound::Exact(d) => Some(d as usize == rank),
                    DimBound::LowerBound(d) if d as usize > rank => Some(false),
                    DimBound::LowerBound(_) => {
                        report.notes.push("only a lower bound for the dimension is available".into());
                        None
                    }
                };
            }
            Err(e @ Error::BudgetExceeded { .. }) => report.notes.push(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    report.consistent = [report.condition_1, report.condition_2].iter().flatten().all(|&c| c == report.condition_3);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_datum;
    use coxtype_core::admissible::DEFAULT_BUDGET;

    fn run(text: &str) -> CheckReport {
        check(&parse_datum(text).unwrap().datum, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn quadratic_a1() {
        let r = run("A1:id:mu=[2]:K={}");
        assert_eq!((r.condition_1, r.condition_2, r.condition_3), (Some(true), Some(true), true));
        assert_eq!(r.k_adm_0.unwrap(), vec!["1", "s0", "s1"]);
        assert!(r.consistent);
    }

    #[test]
    fn b3_chain() {
        let r = run("B3:Ad(tau1):mu=[1,0,0]:K={0,1,2}");
        assert!(r.condition_3 && r.consistent);
        assert_eq!(r.k_adm_0.unwrap().len(), 5);
    }

    #[test]
    fn failing_level() {
        let r = run("C2:Ad(tau2):mu=[0,1]:K={1}");
        assert!(!r.condition_3);
        assert_eq!(r.condition_1, Some(false));
        assert!(r.consistent);
    }

    #[test]
    fn exceptional_is_rejected_by_c() {
        let r = run("G2:id:mu=[0,1]:K={}");
        assert!(matches!(r.witness, Condition3Record::InequalityC { pairing: 6, bound: 4 }));
        assert_eq!(r.condition_1, Some(false));
        assert_eq!(r.condition_2, None);
        assert!(r.consistent);
    }
}
