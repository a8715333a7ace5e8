//! Group-theoretic test for Coxeter type: admissible triples and the
//! orbit-count inequality, plus the two cheap necessary inequalities.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::datum::CoxeterDatum;
use crate::error::Error;
use crate::linalg::{mat_vec_q, solve, Q};
use crate::root_data::{dot, Node, NodeSet};
use crate::weyl::{AffineWeylGroup, DiagramAut, Element};

pub mod sweep;

/// A triple `(ξ, J, K')` with `ξ ∈ W₀μ`, `J` a maximal proper σ-stable node
/// set and `K' ⊆ J` σ-stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub xi: Vec<i32>,
    pub j: NodeSet,
    pub k: NodeSet,
}

/// Outcome of the condition-3 test, with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition3 {
    Holds,
    /// `<μ, 2ρ> > 2 · rank`.
    InequalityC { pairing: i32, bound: usize },
    /// `<μ, 2ρ> > rank_ss(G) + rank_ss(J_τ)`.
    InequalityB { pairing: i32, bound: usize },
    /// An admissible triple with `K' ⊇ K` violating the orbit-count bound.
    Triple { triple: Triple, k_xi: NodeSet, pairing: i32, bound: usize },
}

impl Condition3 {
    pub fn holds(&self) -> bool {
        matches!(self, Condition3::Holds)
    }
}

/// `<v, α_t>` for a rational coweight.
fn pair_q(root: &[i32], v: &[Q]) -> Q {
    root.iter().zip(v).fold(Q::zero(), |acc, (&a, &x)| acc + x * i64::from(a))
}

/// `Σ y_s α_s^∨` over the nodes of `j`.
fn combine(group: &AffineWeylGroup, j: &[Node], y: &[Q]) -> Vec<Q> {
    let d = group.datum();
    let mut out = alloc::vec![Q::zero(); d.rank()];
    for (&s, &c) in j.iter().zip(y) {
        for (o, &x) in out.iter_mut().zip(d.node_coroot(s)) {
            *o += c * i64::from(x);
        }
    }
    out
}

/// Coefficients `y` with `Σ y_s <α_s^∨, α_t> = <v, α_t>` for all `t ∈ j`.
fn coroot_solve(group: &AffineWeylGroup, j: &[Node], rhs: impl Fn(Node) -> Q) -> Vec<Q> {
    let d = group.datum();
    let a: Vec<Vec<Q>> = j
        .iter()
        .map(|&t| j.iter().map(|&s| Q::from_integer(i64::from(d.affine_cartan(s, t)))).collect())
        .collect();
    let b: Vec<Q> = j.iter().map(|&t| rhs(t)).collect();
    solve(a, b).expect("the Cartan matrix of a spherical set is nonsingular")
}

/// `ξ_J`: the element of `RΦ_J^∨` pairing like `ξ` with every root of `Φ_J`.
pub fn xi_projection(group: &AffineWeylGroup, xi: &[i32], j: NodeSet) -> Vec<Q> {
    let d = group.datum();
    let nodes: Vec<Node> = j.iter().collect();
    let y = coroot_solve(group, &nodes, |t| Q::from_integer(i64::from(dot(d.node_root(t), xi))));
    combine(group, &nodes, &y)
}

/// The `p(σ)`-average `(1/d) Σ_{i<d} p(σ)^i v`.
pub fn sigma_average(group: &AffineWeylGroup, sigma: &DiagramAut, v: &[Q]) -> Vec<Q> {
    let r = group.rank();
    let order = sigma.order();
    let mut acc = v.to_vec();
    let mut cur = v.to_vec();
    for _ in 1..order {
        cur = mat_vec_q(r, sigma.linear(), &cur);
        for (a, &c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
    }
    acc.into_iter().map(|x| x / i64::try_from(order).expect("small order")).collect()
}

/// Coordinates of `v ∈ RΦ_J^∨` in the basis `{α_s^∨ : s ∈ J}`.
pub fn coroot_coordinates(group: &AffineWeylGroup, v: &[Q], j: NodeSet) -> Vec<(Node, Q)> {
    let d = group.datum();
    let nodes: Vec<Node> = j.iter().collect();
    let y = coroot_solve(group, &nodes, |t| pair_q(d.node_root(t), v));
    debug_assert_eq!(combine(group, &nodes, &y), v);
    nodes.into_iter().zip(y).collect()
}

/// `ξ_J^⋄`, as coordinates in the coroot basis of `J`.
fn diamond(group: &AffineWeylGroup, sigma: &DiagramAut, xi: &[i32], j: NodeSet) -> Vec<(Node, Q)> {
    let avg = sigma_average(group, sigma, &xi_projection(group, xi, j));
    coroot_coordinates(group, &avg, j)
}

/// Nodes where `ξ_J^⋄` has nonzero coroot coordinate.
fn diamond_support(group: &AffineWeylGroup, sigma: &DiagramAut, xi: &[i32], j: NodeSet) -> NodeSet {
    diamond(group, sigma, xi, j).into_iter().filter(|(_, y)| !y.is_zero()).map(|(s, _)| s).collect()
}

/// `K'_ξ`: σ-closure of the components of `K'` meeting the support of `ξ_J^⋄`.
fn k_xi_from_support(group: &AffineWeylGroup, sigma: &DiagramAut, k: NodeSet, support: NodeSet) -> NodeSet {
    let comps = group.datum().connected_components(k);
    let hit = comps
        .into_iter()
        .filter(|c| !c.intersection(support).is_empty())
        .fold(NodeSet::EMPTY, NodeSet::union);
    sigma.closure(hit)
}

/// Whether `(ξ, J, K')` is admissible: `t^ξ ∈ ^{K'}W̃` and `ξ_J^⋄ ∈ RΦ_{K'}^∨`.
pub fn is_admissible_triple(group: &AffineWeylGroup, sigma: &DiagramAut, triple: &Triple) -> bool {
    let Triple { xi, j, k } = triple;
    k.is_subset(*j)
        && sigma.is_stable(*k)
        && group.is_min_left_coset(*k, &group.translation(xi))
        && diamond_support(group, sigma, xi, *j).is_subset(*k)
}

/// `K'_ξ` of an admissible triple.
pub fn k_xi(group: &AffineWeylGroup, sigma: &DiagramAut, triple: &Triple) -> NodeSet {
    let support = diamond_support(group, sigma, &triple.xi, triple.j);
    k_xi_from_support(group, sigma, triple.k, support)
}

/// A σ-Coxeter element `c ∈ W_{K_ξ}` with `ℓ(t^ξ c) = ℓ(t^ξ) − ℓ(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterWitness {
    pub c: Element,
    /// `t^ξ c`.
    pub product: Element,
}

/// Search for `c` such that `t^ξ c` is reduced, lies in `^{K'}W̃` and has
/// central Newton point.
pub fn find_coxeter_witness(group: &AffineWeylGroup, sigma: &DiagramAut, triple: &Triple) -> Result<CoxeterWitness, Error> {
    if !is_admissible_triple(group, sigma, triple) {
        return Err(Error::Invalid(format!("{triple:?} is not admissible")));
    }
    let kx = k_xi(group, sigma, triple);
    let orbits = sigma.orbits(kx);
    let top = group.translation(&triple.xi);
    fn go(
        group: &AffineWeylGroup,
        sigma: &DiagramAut,
        orbits: &[NodeSet],
        k: NodeSet,
        used: NodeSet,
        x: Element,
        c: Element,
    ) -> Option<CoxeterWitness> {
        let open: NodeSet = orbits.iter().filter(|o| o.intersection(used).is_empty()).fold(NodeSet::EMPTY, |a, o| a.union(*o));
        if open.is_empty() {
            let central = group.newton_point(&x, sigma).map(|nu| nu.is_central()).unwrap_or(false);
            return (central && group.is_min_left_coset(k, &x)).then_some(CoxeterWitness { c, product: x });
        }
        for s in open.iter() {
            if group.is_right_descent(&x, s) {
                let found = go(group, sigma, orbits, k, used.union(sigma.orbit(s)), group.right_mul(&x, s), group.right_mul(&c, s));
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
    go(group, sigma, &orbits, triple.k, NodeSet::EMPTY, top, group.identity())
        .ok_or_else(|| Error::Invalid(format!("no Coxeter witness for {triple:?}")))
}

/// σ-stable subsets of `set`.
pub(crate) fn stable_subsets(sigma: &DiagramAut, set: NodeSet) -> Vec<NodeSet> {
    let orbits = sigma.orbits(set);
    (0u64..1 << orbits.len())
        .map(|mask| {
            orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(NodeSet::EMPTY, |acc, (_, o)| acc.union(*o))
        })
        .collect()
}

/// Every admissible triple of `(σ, μ)` violating the orbit-count bound,
/// precomputed so that condition 3 can be read off for any `K`.
#[derive(Clone, Debug)]
pub struct Condition3Table {
    pairing: i32,
    rank: usize,
    bound_b: usize,
    rank_ss_j: usize,
    failing: Vec<(Triple, NodeSet, usize)>,
}

impl Condition3Table {
    /// `twisted` is `Ad(τ) ∘ σ`.
    pub fn new(group: &AffineWeylGroup, sigma: &DiagramAut, twisted: &DiagramAut, mu: &[i32]) -> Self {
        let d = group.datum();
        let all = d.all_nodes();
        let pairing = d.pairing_2rho(mu);
        let rank_ss_g = sigma.orbits(all).len() - 1;
        let rank_ss_j = twisted.orbits(all).len() - 1;
        let mut table = Condition3Table {
            pairing,
            rank: d.rank(),
            bound_b: rank_ss_g + rank_ss_j,
            rank_ss_j,
            failing: Vec::new(),
        };
        if pairing as usize > 2 * table.rank || pairing as usize > table.bound_b {
            // Every datum already fails a necessary inequality.
            return table;
        }
        let mut orbit = d.weyl_orbit(mu);
        orbit.sort();
        for removed in sigma.orbits(all) {
            let j = all.difference(removed);
            let subsets = stable_subsets(sigma, j);
            for xi in &orbit {
                let descents = group.left_descents(&group.translation(xi));
                let support = diamond_support(group, sigma, xi, j);
                for &k in &subsets {
                    if !descents.intersection(k).is_empty() || !support.is_subset(k) {
                        continue;
                    }
                    let kx = k_xi_from_support(group, sigma, k, support);
                    let bound = sigma.orbits(kx).len() + rank_ss_j;
                    if pairing as usize > bound {
                        table.failing.push((Triple { xi: xi.clone(), j, k }, kx, bound));
                    }
                }
            }
        }
        table
    }

    pub fn for_datum(datum: &CoxeterDatum) -> Self {
        Self::new(datum.group(), datum.sigma(), datum.twisted(), datum.mu())
    }

    /// Condition 3 for parahoric `k`.
    pub fn check(&self, k: NodeSet) -> Condition3 {
        let pairing = self.pairing;
        if pairing as usize > 2 * self.rank {
            return Condition3::InequalityC { pairing, bound: 2 * self.rank };
        }
        if pairing as usize > self.bound_b {
            return Condition3::InequalityB { pairing, bound: self.bound_b };
        }
        match self.failing.iter().find(|(t, _, _)| k.is_subset(t.k)) {
            None => Condition3::Holds,
            Some((triple, kx, bound)) => {
                Condition3::Triple { triple: triple.clone(), k_xi: *kx, pairing, bound: *bound }
            }
        }
    }

    /// `rank_ss(J_τ)`.
    pub fn rank_ss_j(&self) -> usize {
        self.rank_ss_j
    }

    /// Failing triples, in enumeration order.
    pub fn failing(&self) -> impl Iterator<Item = &Triple> {
        self.failing.iter().map(|(t, _, _)| t)
    }
}

/// Condition 3 for a datum, with the first witness found.
pub fn check_condition_3(datum: &CoxeterDatum) -> Condition3 {
    Condition3Table::for_datum(datum).check(datum.parahoric())
}
