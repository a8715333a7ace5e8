//! Serializable reports. Field order is fixed by the struct definitions and
//! every list is built in a canonical order, so output is byte-stable.

use serde::{Deserialize, Serialize};

use coxtype_core::classifier::Condition3;
use coxtype_core::dl_reduction::{Dim, DimBound, Step};
use coxtype_core::smoothness::{FactorVerdict, Rule, StratumSmoothness, Trace};
use coxtype_core::strata::{StrataPoset, StratumDescriptor};
use coxtype_core::{AffineWeylGroup, Element, NodeSet};

use crate::grammar::{render_element_contracted, render_omega};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub word: Vec<u8>,
    pub omega: String,
}

impl ElementRecord {
    pub fn new(group: &AffineWeylGroup, x: &Element) -> Self {
        let (word, omega) = group.reduced_word(x);
        ElementRecord { word: word.iter().map(|s| s.0).collect(), omega: render_omega(group, omega) }
    }
}

pub fn elements(group: &AffineWeylGroup, xs: &[Element]) -> Vec<ElementRecord> {
    xs.iter().map(|x| ElementRecord::new(group, x)).collect()
}

pub fn nodes(set: NodeSet) -> Vec<u8> {
    set.iter().map(|s| s.0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualRecord {
    pub nodes: Vec<u8>,
    #[serde(rename = "type")]
    pub cartan_type: String,
}

/// A stratum descriptor with the same fields as the library type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub w: ElementRecord,
    pub text: String,
    pub support: Vec<u8>,
    pub i_set: Vec<u8>,
    pub parahoric_type: Vec<u8>,
    pub residual: Vec<ResidualRecord>,
    pub frobenius: Vec<[u8; 2]>,
    pub dl_element: ElementRecord,
    pub dimension: u32,
}

impl StratumRecord {
    pub fn new(group: &AffineWeylGroup, s: &StratumDescriptor) -> Self {
        StratumRecord {
            w: ElementRecord::new(group, &s.w),
            text: render_element_contracted(group, &s.w),
            support: nodes(s.support),
            i_set: nodes(s.i_set),
            parahoric_type: nodes(s.parahoric_type),
            residual: s
                .residual
                .iter()
                .map(|(set, t)| ResidualRecord { nodes: nodes(*set), cartan_type: t.to_string() })
                .collect(),
            frobenius: s.frobenius.iter().map(|(a, b)| [a.0, b.0]).collect(),
            dl_element: ElementRecord::new(group, &s.dl_element),
            dimension: s.dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataRecord {
    pub datum: String,
    pub coxeter_type: bool,
    pub injective: bool,
    pub strata: Vec<StratumRecord>,
    /// `(lower, upper)` covering relations as indices into `strata`.
    pub edges: Vec<[usize; 2]>,
}

impl StrataRecord {
    pub fn new(group: &AffineWeylGroup, datum: String, poset: &StrataPoset) -> Self {
        StrataRecord {
            datum,
            coxeter_type: poset.coxeter_type,
            injective: poset.injective,
            strata: poset.strata.iter().map(|s| StratumRecord::new(group, s)).collect(),
            edges: poset.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Hasse diagram of the closure order, lower strata at the bottom.
pub fn strata_dot(group: &AffineWeylGroup, poset: &StrataPoset) -> String {
    let mut out = String::from("digraph strata {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in poset.strata.iter().enumerate() {
        let label = format!("{}\\nP = {}\\ndim {}", render_element_contracted(group, &s.w), s.parahoric_type, s.dimension);
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for &(a, b) in &poset.edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub s: u8,
    pub kind: String,
}

pub fn steps(chain: &[Step]) -> Vec<StepRecord> {
    chain.iter().map(|st| StepRecord { s: st.s.0, kind: st.kind.as_str().to_string() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDimRecord {
    pub w: ElementRecord,
    /// `None` when `X_w(τ)` is empty.
    pub dim: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<StepRecord>>,
}

impl ElementDimRecord {
    pub fn new(group: &AffineWeylGroup, w: &Element, dim: Dim, witness: Option<&[Step]>) -> Self {
        ElementDimRecord { w: ElementRecord::new(group, w), dim: dim.value(), witness: witness.map(steps) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub datum: String,
    pub dim: u32,
    /// `false` when the value is only a lower bound.
    pub exact: bool,
    pub rank_ss_j_tau: usize,
    pub equals_rank: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_element: Option<Vec<ElementDimRecord>>,
}

impl DimRecord {
    pub fn new(datum: String, bound: DimBound, rank: usize) -> Self {
        DimRecord {
            datum,
            dim: bound.value(),
            exact: matches!(bound, DimBound::Exact(_)),
            rank_ss_j_tau: rank,
            equals_rank: bound.value() as usize == rank,
            per_element: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub nodes: Vec<u8>,
    pub frobenius: Vec<[u8; 2]>,
    pub q_set: Vec<u8>,
    pub w_prime: Vec<u8>,
    pub length: u32,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern_below: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    pub smooth: bool,
}

impl FactorRecord {
    pub fn new(f: &FactorVerdict) -> Self {
        let (node, pattern_below, partition) = match &f.rule {
            Rule::GrassmannianPattern { node, pattern_below } => (Some(node.0), Some(*pattern_below), None),
            Rule::MinusculeEndNode { node, partition } => (Some(node.0), None, Some(partition.0.clone())),
            Rule::CominusculeEndNode { node } => (Some(node.0), None, None),
            _ => (None, None, None),
        };
        FactorRecord {
            nodes: nodes(f.case.nodes),
            frobenius: f.case.frobenius.iter().map(|(a, b)| [a.0, b.0]).collect(),
            q_set: nodes(f.case.q_set),
            w_prime: f.case.w_prime.iter().map(|s| s.0).collect(),
            length: f.case.length,
            rule: f.rule.as_str().to_string(),
            node,
            pattern_below,
            partition,
            smooth: f.smooth,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSmoothnessRecord {
    pub w: ElementRecord,
    pub text: String,
    pub smooth: bool,
    pub length_identity: bool,
    /// `dim<=1` or `factors`.
    pub rule: String,
    pub factors: Vec<FactorRecord>,
}

impl StratumSmoothnessRecord {
    pub fn new(group: &AffineWeylGroup, s: &StratumSmoothness) -> Self {
        let (rule, factors) = match &s.trace {
            Trace::DimensionAtMostOne => (Rule::DimensionAtMostOne.as_str().to_string(), Vec::new()),
            Trace::Factors(fs) => ("factors".to_string(), fs.iter().map(FactorRecord::new).collect()),
        };
        StratumSmoothnessRecord {
            w: ElementRecord::new(group, &s.w),
            text: render_element_contracted(group, &s.w),
            smooth: s.smooth,
            length_identity: s.length_identity,
            rule,
            factors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessRecord {
    pub datum: String,
    pub orientation: String,
    pub all_smooth: bool,
    /// The prediction of the closed-form criterion.
    pub closed_form_singular: bool,
    pub agrees: bool,
    pub length_identity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumSmoothnessRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Condition3Record {
    Holds,
    InequalityC { pairing: i32, bound: usize },
    InequalityB { pairing: i32, bound: usize },
    Triple { xi: Vec<i32>, j: Vec<u8>, k: Vec<u8>, k_xi: Vec<u8>, pairing: i32, bound: usize },
}

impl From<&Condition3> for Condition3Record {
    fn from(c: &Condition3) -> Self {
        match c {
            Condition3::Holds => Condition3Record::Holds,
            Condition3::InequalityC { pairing, bound } => Condition3Record::InequalityC { pairing: *pairing, bound: *bound },
            Condition3::InequalityB { pairing, bound } => Condition3Record::InequalityB { pairing: *pairing, bound: *bound },
            Condition3::Triple { triple, k_xi, pairing, bound } => Condition3Record::Triple {
                xi: triple.xi.clone(),
                j: nodes(triple.j),
                k: nodes(triple.k),
                k_xi: nodes(*k_xi),
                pairing: *pairing,
                bound: *bound,
            },
        }
    }
}

/// One row of the classification table: a `(σ, μ)` class of Coxeter type
/// with its minimal parahoric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub rank: usize,
    pub datum: String,
    pub pairing_2rho: i32,
    /// Number of σ-stable spherical level sets of Coxeter type.
    pub coxeter_levels: usize,
    pub k_adm_0: Vec<String>,
    pub dim: u32,
    pub rank_ss_j_tau: usize,
}

/// One row of the orbit table: a `(σ, μ)` class passing the necessary
/// inequalities, written as a datum without its level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub rank: usize,
    pub datum: String,
    pub sigma_orbits: Vec<Vec<u8>>,
    pub twisted_orbits: Vec<Vec<u8>>,
    pub rank_ss_j_tau: usize,
    /// Whether the class also appears in the classification table.
    pub coxeter_type: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse_datum, parse_element};
    use coxtype_core::admissible::{admissible_set, DEFAULT_BUDGET};
    use coxtype_core::strata::strata_poset;

    #[test]
    fn element_json_shape() {
        let d = parse_datum("C2:Ad(tau2):mu=[0,1]:K={0,2}").unwrap().datum;
        let x = parse_element(d.group(), "s1 s2 . tau2").unwrap();
        let json = serde_json::to_string(&ElementRecord::new(d.group(), &x)).unwrap();
        assert_eq!(json, r#"{"word":[1,2],"omega":"tau2"}"#);
    }

    #[test]
    fn strata_json_is_stable_and_round_trips() {
        let d = parse_datum("B3:Ad(tau1):mu=[1,0,0]:K={0,1,2}").unwrap().datum;
        let adm = admissible_set(d.group(), d.mu(), DEFAULT_BUDGET).unwrap();
        let poset = strata_poset(&d, &adm, true).unwrap();
        let a = serde_json::to_string(&StrataRecord::new(d.group(), "x".into(), &poset)).unwrap();
        let b = serde_json::to_string(&StrataRecord::new(d.group(), "x".into(), &poset)).unwrap();
        assert_eq!(a, b);
        let back: StrataRecord = serde_json::from_str(&a).unwrap();
        assert_eq!(back.strata.len(), 5);
        assert_eq!(back.edges.len(), 4);
        let dot = strata_dot(d.group(), &poset);
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn condition_3_tags() {
        let json = serde_json::to_string(&Condition3Record::InequalityC { pairing: 16, bound: 12 }).unwrap();
        assert_eq!(json, r#"{"verdict":"inequality-c","pairing":16,"bound":12}"#);
    }
}
