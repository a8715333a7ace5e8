//! Exhaustive classification of irreducible data of Coxeter type with
//! minimal parahoric, up to diagram isomorphism.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::{stable_subsets, Condition3Table};
use crate::admissible::{admissible_set, is_twisted_coxeter, sigma_support};
use crate::datum::CoxeterDatum;
use crate::error::Error;
use crate::root_data::{CartanType, Family, Node, NodeSet, RootDatum};
use crate::weyl::{AffineWeylGroup, DiagramAut, Element};

/// One `(W̃, σ, μ)` class of Coxeter type.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub group: Arc<AffineWeylGroup>,
    pub sigma: DiagramAut,
    pub mu: Vec<i32>,
    /// One representative (the least node set) per isomorphism class of
    /// minimal parahorics.
    pub minimal: Vec<NodeSet>,
    /// Every σ-stable spherical `K` of Coxeter type.
    pub passing: Vec<NodeSet>,
}

impl SweepRow {
    /// The datum with the first minimal parahoric.
    pub fn datum(&self) -> CoxeterDatum {
        CoxeterDatum::new(self.group.clone(), self.sigma.clone(), self.mu.clone(), self.minimal[0])
            .expect("sweep rows are valid data")
    }

    pub fn has_unique_minimal(&self) -> bool {
        self.minimal.len() == 1
    }
}

/// Irreducible root data of total rank at most `max_rank`: simple types and
/// products of two isomorphic simple types.
///
/// Products of three or more copies are left out: a transitive σ then has at
/// most `rank/r + 1` orbits on the affine nodes, so the necessary inequality
/// `<μ, 2ρ> ≤ rank_ss(G) + rank_ss(J_τ)` fails once `μ` is nonzero on every
/// copy.
pub fn root_data_up_to(max_rank: usize) -> Vec<Vec<CartanType>> {
    let mut simple = Vec::new();
    for (family, min) in [(Family::A, 1), (Family::B, 3), (Family::C, 2), (Family::D, 4)] {
        for n in min..=max_rank {
            simple.push(CartanType::new(family, n).expect("classical ranks in range"));
        }
    }
    for (family, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        if n <= max_rank {
            simple.push(CartanType::new(family, n).expect("exceptional ranks"));
        }
    }
    let mut out: Vec<Vec<CartanType>> = simple.iter().map(|&t| vec![t]).collect();
    for &t in &simple {
        if 2 * t.rank() <= max_rank {
            out.push(vec![t, t]);
        }
    }
    out
}

/// Dominant coweights nonzero on every component with `<μ, 2ρ> ≤ bound`,
/// ordered by pairing and then lexicographically.
pub fn coweights_up_to(datum: &RootDatum, bound: i32) -> Vec<Vec<i32>> {
    let r = datum.rank();
    let weight: Vec<i32> = (0..r)
        .map(|j| {
            let mut e = vec![0; r];
            e[j] = 1;
            datum.pairing_2rho(&e)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0; r];
    fn go(j: usize, left: i32, weight: &[i32], cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if j == cur.len() {
            out.push(cur.clone());
            return;
        }
        let mut c = 0;
        while c * weight[j] <= left {
            cur[j] = c;
            go(j + 1, left - c * weight[j], weight, cur, out);
            c += 1;
        }
        cur[j] = 0;
    }
    go(0, bound, &weight, &mut cur, &mut out);
    out.retain(|mu| (0..datum.components().len()).all(|c| mu[datum.coord_range(c)].iter().any(|&x| x != 0)));
    out.sort_by_key(|mu| (datum.pairing_2rho(mu), mu.clone()));
    out
}

/// `φ σ φ⁻¹` as a node permutation.
fn conjugate_perm(phi: &DiagramAut, sigma: &DiagramAut) -> Vec<Node> {
    let n = phi.perm().len();
    let mut out = vec![Node(0); n];
    for s in 0..n {
        let s = Node(s as u8);
        out[phi.image(s).index()] = phi.image(sigma.image(s));
    }
    out
}

/// Canonical form of `(σ, μ, K)` under all diagram automorphisms.
pub fn canonical_key(autos: &[DiagramAut], sigma: &DiagramAut, mu: &[i32], k: NodeSet) -> (Vec<Node>, Vec<i32>, u64) {
    autos
        .iter()
        .map(|phi| (conjugate_perm(phi, sigma), phi.act_on_coweight(mu), phi.image_set(k).bits()))
        .min()
        .expect("the identity is an automorphism")
}

/// Per-element data of `Adm(μ)` relative to one σ.
struct AdmProfile {
    descents: NodeSet,
    finite_support: bool,
    coxeter: bool,
}

fn profile(group: &AffineWeylGroup, sigma: &DiagramAut, adm: &[Element]) -> Vec<AdmProfile> {
    let d = group.datum();
    adm.iter()
        .map(|w| AdmProfile {
            descents: group.left_descents(w),
            finite_support: d.is_spherical(sigma_support(group, sigma, w)),
            coxeter: is_twisted_coxeter(group, sigma, w),
        })
        .collect()
}

/// Minimal elements of a family of sets under inclusion.
fn minimal_sets(sets: &[NodeSet]) -> Vec<NodeSet> {
    sets.iter()
        .copied()
        .filter(|&k| !sets.iter().any(|&o| o != k && o.is_subset(k)))
        .collect()
}

/// A `(σ, μ)` class together with the σ-centralizer used to reduce `μ`.
struct Candidate<'a> {
    sigma: &'a DiagramAut,
    mu: Vec<i32>,
    centralizer: Vec<&'a DiagramAut>,
}

/// One representative per isomorphism class of `(σ, μ)` with σ permuting
/// the components transitively and `<μ, 2ρ> ≤ 2 · rank`.
fn candidates<'a>(group: &AffineWeylGroup, autos: &'a [DiagramAut]) -> Vec<Candidate<'a>> {
    let d = group.datum();
    let comps = d.components().len();
    let transitive = |sigma: &DiagramAut| {
        let mut c = d.component_of(sigma.image(d.node_base(0)));
        let mut len = 1;
        while c != 0 {
            c = d.component_of(sigma.image(d.node_base(c)));
            len += 1;
        }
        len == comps
    };
    let mut sigma_classes: HashSet<Vec<Node>> = HashSet::new();
    let coweights = coweights_up_to(d, 2 * d.rank() as i32);
    let mut out = Vec::new();
    for sigma in autos {
        if !transitive(sigma) {
            continue;
        }
        let class_key = autos.iter().map(|phi| conjugate_perm(phi, sigma)).min().expect("nonempty");
        if !sigma_classes.insert(class_key) {
            continue;
        }
        let centralizer: Vec<&DiagramAut> =
            autos.iter().filter(|phi| conjugate_perm(phi, sigma) == sigma.perm()).collect();
        let mut mu_classes: HashSet<Vec<i32>> = HashSet::new();
        for mu in &coweights {
            let mu_key = centralizer.iter().map(|phi| phi.act_on_coweight(mu)).min().expect("nonempty");
            if mu_classes.insert(mu_key) {
                out.push(Candidate { sigma, mu: mu.clone(), centralizer: centralizer.clone() });
            }
        }
    }
    out
}

/// A `(σ, μ)` class passing the necessary inequalities
/// `<μ, 2ρ> ≤ 2 · rank` and `<μ, 2ρ> ≤ rank_ss(G) + rank_ss(J_τ)`.
#[derive(Clone, Debug)]
pub struct InequalityRow {
    pub group: Arc<AffineWeylGroup>,
    pub sigma: DiagramAut,
    pub mu: Vec<i32>,
    /// Whether some parahoric makes the datum of Coxeter type.
    pub coxeter_type: bool,
}

impl InequalityRow {
    /// `Ad(τ_μ) ∘ σ`.
    pub fn twisted(&self) -> DiagramAut {
        self.group.compose(&self.group.inner_aut(self.group.tau(&self.mu)), &self.sigma)
    }
}

/// Every `(σ, μ)` class of total rank at most `max_rank` passing both
/// inequalities, flagged by whether it yields a classification row.
pub fn inequality_sweep(max_rank: usize, budget: i32) -> Result<Vec<InequalityRow>, Error> {
    let mut rows = Vec::new();
    for types in root_data_up_to(max_rank) {
        let group = Arc::new(AffineWeylGroup::new(RootDatum::new(&types)?));
        let d = group.datum();
        if coweights_up_to(d, 2 * group.rank() as i32).is_empty() {
            continue;
        }
        let coxeter: Vec<(Vec<Node>, Vec<i32>)> =
            sweep_group(group.clone(), budget)?.into_iter().map(|r| (r.sigma.perm().to_vec(), r.mu)).collect();
        let autos = group.all_automorphisms();
        let all = d.all_nodes();
        for c in candidates(&group, &autos) {
            let twisted = group.compose(&group.inner_aut(group.tau(&c.mu)), c.sigma);
            let bound_b = c.sigma.orbits(all).len() - 1 + twisted.orbits(all).len() - 1;
            if d.pairing_2rho(&c.mu) as usize > bound_b {
                continue;
            }
            let coxeter_type = coxeter.iter().any(|(s, m)| s.as_slice() == c.sigma.perm() && *m == c.mu);
            rows.push(InequalityRow { group: group.clone(), sigma: c.sigma.clone(), mu: c.mu, coxeter_type });
        }
    }
    Ok(rows)
}

/// Classify every `(σ, μ)` class of one root datum.
pub fn sweep_group(group: Arc<AffineWeylGroup>, budget: i32) -> Result<Vec<SweepRow>, Error> {
    let d = group.datum();
    let all = d.all_nodes();
    let autos = group.all_automorphisms();
    let mut adm_cache: HashMap<Vec<i32>, Vec<Element>> = HashMap::new();
    let mut rows = Vec::new();
    let mut last_sigma: Option<&DiagramAut> = None;
    let mut stable: Vec<NodeSet> = Vec::new();
    for Candidate { sigma, mu, centralizer } in candidates(&group, &autos) {
        if last_sigma.is_none_or(|s| s.perm() != sigma.perm()) {
            stable = stable_subsets(sigma, all).into_iter().filter(|&k| d.is_spherical(k)).collect();
            last_sigma = Some(sigma);
        }
        let tau = group.tau(&mu);
        let twisted = group.compose(&group.inner_aut(tau), sigma);
        let table = Condition3Table::new(&group, sigma, &twisted, &mu);
        let cond3: Vec<NodeSet> = stable.iter().copied().filter(|&k| table.check(k).holds()).collect();
        if cond3.is_empty() {
            continue;
        }
        if !adm_cache.contains_key(&mu) {
            adm_cache.insert(mu.clone(), admissible_set(&group, &mu, budget)?);
        }
        let profiles = profile(&group, sigma, &adm_cache[&mu]);
        let passing: Vec<NodeSet> = cond3
            .into_iter()
            .filter(|&k| {
                profiles
                    .iter()
                    .filter(|p| p.descents.intersection(k).is_empty() && p.finite_support)
                    .all(|p| p.coxeter)
            })
            .collect();
        if passing.is_empty() {
            continue;
        }
        let stabilizer: Vec<&DiagramAut> =
            centralizer.iter().copied().filter(|phi| phi.act_on_coweight(&mu) == mu).collect();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut minimal = Vec::new();
        for k in minimal_sets(&passing) {
            let key = stabilizer.iter().map(|phi| phi.image_set(k).bits()).min().expect("nonempty");
            if seen.insert(key) {
                minimal.push(NodeSet::from_bits(key));
            }
        }
        minimal.sort_by_key(|k| (k.len(), k.bits()));
        rows.push(SweepRow { group: group.clone(), sigma: sigma.clone(), mu, minimal, passing });
    }
    Ok(rows)
}

/// Classify all irreducible data of total rank at most `max_rank`.
pub fn classify_sweep(max_rank: usize, budget: i32) -> Result<Vec<SweepRow>, Error> {
    let mut rows = Vec::new();
    for types in root_data_up_to(max_rank) {
        let group = Arc::new(AffineWeylGroup::new(RootDatum::new(&types)?));
        if group.datum().components().iter().all(|t| t.family().is_exceptional()) {
            // No dominant coweight passes `<μ, 2ρ> ≤ 2 · rank`; skip the
            // automorphism search.
            if coweights_up_to(group.datum(), 2 * group.rank() as i32).is_empty() {
                continue;
            }
        }
        rows.extend(sweep_group(group, budget)?);
    }
    Ok(rows)
}
