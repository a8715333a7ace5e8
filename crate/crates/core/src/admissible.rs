//! Admissible sets, σ-supports and σ-Coxeter elements.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::classifier;
use crate::datum::CoxeterDatum;
use crate::error::Error;
use crate::root_data::{Node, NodeSet};
use crate::weyl::{AffineWeylGroup, DiagramAut, Element};

/// Default bound on `<μ, 2ρ>` for admissible set enumeration.
pub const DEFAULT_BUDGET: i32 = 40;

/// Sort key: length, then reduced word, then length-zero part.
pub fn sort_canonical(group: &AffineWeylGroup, elements: &mut [Element]) {
    elements.sort_by_cached_key(|x| {
        let (word, omega) = group.reduced_word(x);
        (word.len(), word, omega)
    });
}

/// `Adm(μ) = {w : w ≤ t^{x(μ)} for some x ∈ W₀}`.
pub fn admissible_set(group: &AffineWeylGroup, mu: &[i32], budget: i32) -> Result<Vec<Element>, Error> {
    let value = group.datum().pairing_2rho(&group.datum().dominant(mu));
    if value > budget {
        return Err(Error::BudgetExceeded { value, budget });
    }
    let mut all: HashSet<Element> = HashSet::new();
    for lambda in group.datum().weyl_orbit(mu) {
        let top = group.translation(&lambda);
        if all.contains(&top) {
            continue;
        }
        all.extend(group.lower_ideal(&top));
    }
    let mut out: Vec<Element> = all.into_iter().collect();
    sort_canonical(group, &mut out);
    Ok(out)
}

/// `^K Adm(μ)`: admissible elements that are minimal in their `W_K`-coset.
pub fn k_adm(datum: &CoxeterDatum, adm: &[Element]) -> Vec<Element> {
    let k = datum.parahoric();
    adm.iter().filter(|w| datum.group().is_min_left_coset(k, w)).cloned().collect()
}

/// `^K Adm(μ)_0`: the members of `^K Adm(μ)` with finite σ-support.
pub fn k_adm_0(datum: &CoxeterDatum, adm: &[Element]) -> Vec<Element> {
    let d = datum.group().datum();
    k_adm(datum, adm).into_iter().filter(|w| d.is_spherical(sigma_support(datum.group(), datum.sigma(), w))).collect()
}

/// `^K Cox(μ)`: the σ-Coxeter members of `^K Adm(μ)_0`.
pub fn k_cox(datum: &CoxeterDatum, adm: &[Element]) -> Vec<Element> {
    k_adm_0(datum, adm).into_iter().filter(|w| is_twisted_coxeter(datum.group(), datum.sigma(), w)).collect()
}

/// `Ad(ω) ∘ σ` for the length-zero part `ω` of `w`.
pub fn twisted_for(group: &AffineWeylGroup, sigma: &DiagramAut, w: &Element) -> DiagramAut {
    group.compose(&group.inner_aut(group.omega_part(w)), sigma)
}

/// `supp_σ(w)`: the `Ad(τ')∘σ`-closure of the letters of `w τ'⁻¹`.
pub fn sigma_support(group: &AffineWeylGroup, sigma: &DiagramAut, w: &Element) -> NodeSet {
    let (word, omega) = group.reduced_word(w);
    let tw = group.compose(&group.inner_aut(omega), sigma);
    tw.closure(word.into_iter().collect())
}

/// Whether a reduced word of `w τ'⁻¹` uses at most one letter from each
/// `Ad(τ')∘σ`-orbit.
pub fn is_twisted_coxeter(group: &AffineWeylGroup, sigma: &DiagramAut, w: &Element) -> bool {
    let (word, omega) = group.reduced_word(w);
    let tw = group.compose(&group.inner_aut(omega), sigma);
    let mut used = NodeSet::EMPTY;
    for s in word {
        let o = tw.orbit(s);
        if !used.intersection(o).is_empty() {
            return false;
        }
        used = used.union(o);
    }
    true
}

/// Reduced word of `w` built by letting `choose` pick among the left descents.
pub fn reduced_word_by(
    group: &AffineWeylGroup,
    w: &Element,
    mut choose: impl FnMut(NodeSet) -> Node,
) -> Vec<Node> {
    let mut word = Vec::new();
    let mut y = w.clone();
    loop {
        let descents = group.left_descents(&y);
        if descents.is_empty() {
            return word;
        }
        let s = choose(descents);
        debug_assert!(descents.contains(s));
        word.push(s);
        y = group.left_mul(s, &y);
    }
}

/// `^K Cox(μ) = ^K Adm(μ)_0` together with condition (3).
pub fn is_coxeter_type_direct(datum: &CoxeterDatum, budget: i32) -> Result<bool, Error> {
    let adm = admissible_set(datum.group(), datum.mu(), budget)?;
    Ok(direct_equality(datum, &adm) && classifier::check_condition_3(datum).holds())
}

/// Whether every element of `^K Adm(μ)_0` is σ-Coxeter.
pub fn direct_equality(datum: &CoxeterDatum, adm: &[Element]) -> bool {
    k_adm_0(datum, adm).iter().all(|w| is_twisted_coxeter(datum.group(), datum.sigma(), w))
}
