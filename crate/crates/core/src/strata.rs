//! Bruhat-Tits strata: parahoric types attached to `w ∈ ^K Adm(μ)_0`,
//! the closure order and the stratum poset.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::admissible::{is_twisted_coxeter, k_adm_0, sigma_support, twisted_for};
use crate::datum::CoxeterDatum;
use crate::error::Error;
use crate::root_data::{residual_type, CartanType, Node, NodeSet};
use crate::weyl::{AffineWeylGroup, Bruhat, DiagramAut, Element};

/// Bound on `|W_K|` for closure tests.
pub const PARABOLIC_CAP: usize = 1_000_000;

/// `I(K, w, σ)`: the largest subset of `K` stable under `s ↦ w s_{σ(s)} w⁻¹`.
pub fn i_set_general(group: &AffineWeylGroup, w: &Element, k: NodeSet, sigma: &DiagramAut) -> NodeSet {
    let mut current = k;
    loop {
        let next: NodeSet = current
            .iter()
            .filter(|&s| group.conjugate_node(w, sigma.image(s)).is_some_and(|t| current.contains(t)))
            .collect();
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `I(K, w, σ)` for σ-Coxeter `w`: the `Ad(τ')∘σ`-orbits inside `K` that are
/// disjoint from and not adjacent to `supp_σ(w)`.
pub fn i_set_coxeter(group: &AffineWeylGroup, w: &Element, k: NodeSet, sigma: &DiagramAut) -> NodeSet {
    let d = group.datum();
    let supp = sigma_support(group, sigma, w);
    let tw = twisted_for(group, sigma, w);
    d.all_nodes()
        .difference(supp)
        .iter()
        .filter(|&s| supp.iter().all(|t| !d.adjacent(s, t)) && tw.orbit(s).is_subset(k))
        .collect()
}

/// Closure relation: some `u ∈ W_K` has `u⁻¹ w1 σ(u) ≤ w2`.
pub struct ClosureOrder<'g> {
    group: &'g AffineWeylGroup,
    sigma: DiagramAut,
    parabolic: Vec<Element>,
    bruhat: Bruhat<'g>,
}

impl<'g> ClosureOrder<'g> {
    pub fn new(group: &'g AffineWeylGroup, k: NodeSet, sigma: &DiagramAut) -> Result<Self, Error> {
        let parabolic = group.parabolic_elements(k, PARABOLIC_CAP).ok_or(Error::SearchCap(PARABOLIC_CAP))?;
        Ok(ClosureOrder { group, sigma: sigma.clone(), parabolic, bruhat: Bruhat::new(group) })
    }

    pub fn le(&mut self, w1: &Element, w2: &Element) -> bool {
        let g = self.group;
        for u in &self.parabolic {
            let x = g.mul(&g.mul(&g.inverse(u), w1), &g.apply_aut(&self.sigma, u));
            if self.bruhat.le(&x, w2) {
                return true;
            }
        }
        false
    }
}

/// `closure_leq` as a one-off query.
pub fn closure_leq(
    group: &AffineWeylGroup,
    w1: &Element,
    w2: &Element,
    k: NodeSet,
    sigma: &DiagramAut,
) -> Result<bool, Error> {
    Ok(ClosureOrder::new(group, k, sigma)?.le(w1, w2))
}

/// Connected components of `set` in the diagram with each `twisted`-orbit
/// joined up: `{0, 1}` under an automorphism swapping `0` and `1` is one
/// piece even when `0` and `1` are not adjacent.
pub fn twisted_components(group: &AffineWeylGroup, set: NodeSet, twisted: &DiagramAut) -> Vec<NodeSet> {
    let comps = group.datum().connected_components(set);
    let mut out = Vec::new();
    let mut rest = set;
    while let Some(start) = rest.iter().next() {
        let mut piece = NodeSet::singleton(start);
        loop {
            let grown = comps
                .iter()
                .filter(|c| !c.intersection(twisted.closure(piece)).is_empty())
                .fold(piece, |acc, c| acc.union(*c));
            if grown == piece {
                break;
            }
            piece = grown;
        }
        out.push(piece);
        rest = rest.difference(piece);
    }
    out
}

/// Union of the twisted components of `union_set` meeting `S̃ − K`, where
/// `twisted` is the `Ad(τ')∘σ` of the stratum.
pub fn recover_support(group: &AffineWeylGroup, union_set: NodeSet, k: NodeSet, twisted: &DiagramAut) -> NodeSet {
    let outside = group.datum().all_nodes().difference(k);
    twisted_components(group, union_set, twisted)
        .into_iter()
        .filter(|piece| !piece.intersection(outside).is_empty())
        .fold(NodeSet::EMPTY, NodeSet::union)
}

/// One Bruhat-Tits stratum type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDescriptor {
    pub w: Element,
    pub support: NodeSet,
    pub i_set: NodeSet,
    pub parahoric_type: NodeSet,
    /// Finite types of the connected components of the support.
    pub residual: Vec<(NodeSet, CartanType)>,
    /// `Ad(τ')∘σ` restricted to the support, as `(s, image)` pairs.
    pub frobenius: Vec<(Node, Node)>,
    /// `w τ'⁻¹`.
    pub dl_element: Element,
    pub dimension: u32,
}

pub fn describe(datum: &CoxeterDatum, w: &Element) -> StratumDescriptor {
    let g = datum.group();
    let d = g.datum();
    let sigma = datum.sigma();
    let support = sigma_support(g, sigma, w);
    let i_set = if is_twisted_coxeter(g, sigma, w) {
        i_set_coxeter(g, w, datum.parahoric(), sigma)
    } else {
        i_set_general(g, w, datum.parahoric(), sigma)
    };
    let tw = twisted_for(g, sigma, w);
    let residual = d
        .connected_components(support)
        .into_iter()
        .map(|c| (c, residual_type(d, c).expect("supports of ^K Adm(μ)_0 are spherical")))
        .collect();
    let omega = g.omega_part(w);
    let dl_element = g.mul(w, g.omega_element(g.omega_inverse(omega)));
    StratumDescriptor {
        w: w.clone(),
        support,
        i_set,
        parahoric_type: support.union(i_set),
        residual,
        frobenius: support.iter().map(|s| (s, tw.image(s))).collect(),
        dl_element,
        dimension: g.length(w),
    }
}

/// Strata with the covering relations of the closure order.
#[derive(Clone, Debug)]
pub struct StrataPoset {
    pub strata: Vec<StratumDescriptor>,
    /// `(lower, upper)` index pairs of covering relations.
    pub edges: Vec<(usize, usize)>,
    /// Whether the datum is of Coxeter type; only then is the parahoric
    /// type expected to determine the stratum.
    pub coxeter_type: bool,
    /// Whether distinct strata have distinct parahoric types.
    pub injective: bool,
}

/// The poset of strata on `^K Adm(μ)_0`.
pub fn strata_poset(datum: &CoxeterDatum, adm: &[Element], coxeter_type: bool) -> Result<StrataPoset, Error> {
    let g = datum.group();
    let elements = k_adm_0(datum, adm);
    let strata: Vec<StratumDescriptor> = elements.iter().map(|w| describe(datum, w)).collect();
    let mut order = ClosureOrder::new(g, datum.parahoric(), datum.sigma())?;
    let n = elements.len();
    let mut le = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            le[i][j] = i == j || order.le(&elements[i], &elements[j]);
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && !(0..n).any(|m| m != i && m != j && le[i][m] && le[m][j]) {
                edges.push((i, j));
            }
        }
    }
    let distinct: HashSet<NodeSet> = strata.iter().map(|s| s.parahoric_type).collect();
    let injective = distinct.len() == strata.len();
    Ok(StrataPoset { strata, edges, coxeter_type, injective })
}

/// The four relations compared on `^K Adm(μ)_0`: Bruhat order, the closure
/// order, inclusion of supports of `wτ'⁻¹`, inclusion of σ-supports.
/// Entry `[r][i][j]` is relation `r` between elements `i` and `j`.
pub fn order_relations(datum: &CoxeterDatum, elements: &[Element]) -> Result<[Vec<Vec<bool>>; 4], Error> {
    let g = datum.group();
    let sigma = datum.sigma();
    let n = elements.len();
    let mut bruhat = Bruhat::new(g);
    let mut closure = ClosureOrder::new(g, datum.parahoric(), sigma)?;
    let plain: Vec<NodeSet> = elements.iter().map(|w| g.support(w)).collect();
    let twisted: Vec<NodeSet> = elements.iter().map(|w| sigma_support(g, sigma, w)).collect();
    let mut out: [Vec<Vec<bool>>; 4] = core::array::from_fn(|_| alloc::vec![alloc::vec![false; n]; n]);
    for i in 0..n {
        for j in 0..n {
            out[0][i][j] = bruhat.le(&elements[i], &elements[j]);
            out[1][i][j] = closure.le(&elements[i], &elements[j]);
            out[2][i][j] = plain[i].is_subset(plain[j]);
            out[3][i][j] = twisted[i].is_subset(twisted[j]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::tests::{datum, element};
    use crate::admissible::{admissible_set, DEFAULT_BUDGET};
    use crate::root_data::Family;

    fn nodes(ns: &[u8]) -> NodeSet {
        ns.iter().map(|&i| Node(i)).collect()
    }

    #[test]
    fn identity_keeps_k() {
        let d = datum(&[(Family::A, 3)], &[], &[0, 1, 0], &[1, 2]);
        let g = d.group();
        assert_eq!(i_set_general(g, &g.identity(), nodes(&[1, 2]), d.sigma()), nodes(&[1, 2]));
    }

    #[test]
    fn c2_strata() {
        let d = datum(&[(Family::C, 2)], &[], &[0, 1], &[0]);
        let g = d.group();
        let adm = admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap();
        for w in k_adm_0(&d, &adm) {
            assert_eq!(i_set_general(g, &w, d.parahoric(), d.sigma()), NodeSet::EMPTY);
        }
        let tau = element(&d, &[], d.tau());
        let s1 = element(&d, &[1], d.tau());
        let s2 = element(&d, &[2], d.tau());
        let k = d.parahoric();
        assert!(closure_leq(g, &tau, &s1, k, d.sigma()).unwrap());
        assert!(closure_leq(g, &tau, &s2, k, d.sigma()).unwrap());
        assert!(!closure_leq(g, &s1, &s2, k, d.sigma()).unwrap());
        assert!(!closure_leq(g, &s2, &s1, k, d.sigma()).unwrap());
        let desc = describe(&d, &s2);
        assert_eq!(desc.support, nodes(&[0, 2]));
        // Two A1 factors swapped by the Frobenius.
        assert_eq!(desc.residual.len(), 2);
        assert_eq!(desc.frobenius, [(Node(0), Node(2)), (Node(2), Node(0))]);
    }

    #[test]
    fn recover_support_drops_inner_components() {
        let d = datum(&[(Family::A, 3)], &[], &[0, 1, 0], &[]);
        let g = d.group();
        let id = d.sigma();
        assert_eq!(recover_support(g, nodes(&[0, 2]), nodes(&[2]), id), nodes(&[0]));
        assert_eq!(recover_support(g, nodes(&[0, 1]), NodeSet::EMPTY, id), nodes(&[0, 1]));
        let rho2 = g.automorphism(&[Node(2), Node(3), Node(0), Node(1)]).unwrap();
        assert_eq!(recover_support(g, nodes(&[0, 2]), nodes(&[2]), &rho2), nodes(&[0, 2]));
    }

    #[test]
    fn b3_grid_orders_agree() {
        let d = datum(&[(Family::B, 3)], &[], &[1, 0, 0], &[1, 2]);
        let g = d.group();
        let adm = admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap();
        let elements = k_adm_0(&d, &adm);
        assert_eq!(elements.len(), 6);
        let rel = order_relations(&d, &elements).unwrap();
        for r in 1..4 {
            assert_eq!(rel[0], rel[r]);
        }
        let poset = strata_poset(&d, &adm, true).unwrap();
        assert!(poset.injective);
        for s in &poset.strata {
            let tw = twisted_for(g, d.sigma(), &s.w);
            assert_eq!(recover_support(g, s.parahoric_type, d.parahoric(), &tw), s.support);
        }
    }

    #[test]
    fn harris_taylor_is_a_point() {
        let d = datum(&[(Family::A, 3)], &[], &[1, 0, 0], &[]);
        let adm = admissible_set(d.group(), d.mu(), DEFAULT_BUDGET).unwrap();
        let poset = strata_poset(&d, &adm, true).unwrap();
        assert_eq!(poset.strata.len(), 1);
        assert!(poset.edges.is_empty());
    }
}
