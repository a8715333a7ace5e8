//! Enhanced Coxeter data `(W̃, σ, μ, K)`.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::root_data::NodeSet;
use crate::weyl::{AffineWeylGroup, DiagramAut, OmegaId};

/// A validated enhanced Coxeter datum.
///
/// The Frobenius permutes the components transitively, `μ` is dominant and
/// nonzero on every component, and `K` is a σ-stable spherical node set.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    group: Arc<AffineWeylGroup>,
    sigma: DiagramAut,
    mu: Vec<i32>,
    parahoric: NodeSet,
    tau: OmegaId,
    twisted: DiagramAut,
}

impl CoxeterDatum {
    pub fn new(group: Arc<AffineWeylGroup>, sigma: DiagramAut, mu: Vec<i32>, parahoric: NodeSet) -> Result<Self, Error> {
        let d = group.datum();
        if mu.len() != d.rank() {
            return Err(Error::CoweightShape { expected: d.rank(), got: mu.len() });
        }
        if !d.is_dominant(&mu) {
            return Err(Error::NotDominant);
        }
        if (0..d.components().len()).any(|c| mu[d.coord_range(c)].iter().all(|&x| x == 0)) {
            return Err(Error::CentralComponent);
        }
        let comps = d.components().len();
        let cycle_len = {
            let mut len = 1;
            let mut c = d.component_of(sigma.image(d.node_base(0)));
            while c != 0 {
                c = d.component_of(sigma.image(d.node_base(c)));
                len += 1;
            }
            len
        };
        if cycle_len != comps {
            return Err(Error::NotQuasiSimple);
        }
        if !parahoric.is_subset(d.all_nodes()) {
            return Err(Error::NodeOutOfRange(parahoric.iter().last().map_or(0, |n| n.index())));
        }
        if !sigma.is_stable(parahoric) {
            return Err(Error::UnstableParahoric(parahoric.to_string()));
        }
        if !d.is_spherical(parahoric) {
            return Err(Error::NotSpherical(parahoric.to_string()));
        }
        let tau = group.tau(&mu);
        let twisted = group.compose(&group.inner_aut(tau), &sigma);
        Ok(CoxeterDatum { group, sigma, mu, parahoric, tau, twisted })
    }

    /// The same `(W̃, σ, μ)` with another parahoric.
    pub fn with_parahoric(&self, parahoric: NodeSet) -> Result<Self, Error> {
        let d = self.group.datum();
        if !parahoric.is_subset(d.all_nodes()) {
            return Err(Error::Invalid(format!("{parahoric} out of range")));
        }
        if !self.sigma.is_stable(parahoric) {
            return Err(Error::UnstableParahoric(parahoric.to_string()));
        }
        if !d.is_spherical(parahoric) {
            return Err(Error::NotSpherical(parahoric.to_string()));
        }
        Ok(CoxeterDatum { parahoric, ..self.clone() })
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<AffineWeylGroup> {
        &self.group
    }

    pub fn sigma(&self) -> &DiagramAut {
        &self.sigma
    }

    pub fn mu(&self) -> &[i32] {
        &self.mu
    }

    pub fn parahoric(&self) -> NodeSet {
        self.parahoric
    }

    /// `τ = τ(t^μ)`, the basic element of the Kottwitz class of `μ`.
    pub fn tau(&self) -> OmegaId {
        self.tau
    }

    /// `Ad(τ) ∘ σ` on the affine diagram.
    pub fn twisted(&self) -> &DiagramAut {
        &self.twisted
    }

    pub fn pairing_2rho(&self) -> i32 {
        self.group.datum().pairing_2rho(&self.mu)
    }

    /// Rank over the separable closure: the total number of finite nodes.
    pub fn rank(&self) -> usize {
        self.group.datum().rank()
    }

    /// `#σ-orbits on S̃ − 1`.
    pub fn rank_ss_group(&self) -> usize {
        self.sigma.orbits(self.group.datum().all_nodes()).len() - 1
    }

    /// `#(Ad(τ)∘σ)-orbits on S̃ − 1`.
    pub fn rank_ss_j_tau(&self) -> usize {
        self.twisted.orbits(self.group.datum().all_nodes()).len() - 1
    }

    /// σ-stable spherical node sets containing `K`, excluding `K` itself.
    pub fn larger_parahorics(&self) -> Vec<NodeSet> {
        let d = self.group.datum();
        let orbits = self.sigma.orbits(d.all_nodes().difference(self.parahoric));
        let mut out = Vec::new();
        for mask in 1u64..1 << orbits.len() {
            let k = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(self.parahoric, |acc, (_, o)| acc.union(*o));
            if d.is_spherical(k) {
                out.push(k);
            }
        }
        out
    }
}
