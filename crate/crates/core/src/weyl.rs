//! Extended affine Weyl groups `W̃ = X_* ⋊ W₀` of adjoint type.
//!
//! An element `t^λ u` is stored as the translation `λ` together with the
//! matrix of `u` acting on fundamental-coweight coordinates. Lengths use the
//! Iwahori-Matsumoto formula and left descents are read off the alcove
//! `x(A)` directly.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::error::Error;
use crate::linalg::{self, Q};
use crate::root_data::{dot, Node, NodeSet, RootDatum};

/// Iteration cap for Newton point computation.
pub const NEWTON_CAP: usize = 1_000_000;

/// An element `t^λ u` of the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    rank: u8,
    data: Box<[i32]>,
}

impl Element {
    fn from_parts(rank: usize, lambda: &[i32], linear: &[i32]) -> Self {
        let mut data = Vec::with_capacity(rank + rank * rank);
        data.extend_from_slice(lambda);
        data.extend_from_slice(linear);
        Element { rank: rank as u8, data: data.into_boxed_slice() }
    }

    fn r(&self) -> usize {
        self.rank as usize
    }

    /// The translation part `λ`, in fundamental-coweight coordinates.
    pub fn translation(&self) -> &[i32] {
        &self.data[..self.r()]
    }

    /// The finite part `u` as a row-major matrix on coweight coordinates.
    pub fn linear(&self) -> &[i32] {
        &self.data[self.r()..]
    }

    pub fn is_translation(&self) -> bool {
        let r = self.r();
        self.linear().iter().enumerate().all(|(k, &m)| m == i32::from(k / r == k % r))
    }

    /// `u ρ^∨`, whose pairing with a root `β` has the sign of `u⁻¹β`.
    fn rho_image(&self) -> Vec<i32> {
        let r = self.r();
        self.linear().chunks(r).map(|row| row.iter().sum()).collect()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?} {:?}", self.translation(), self.linear())
    }
}

/// Index of a length-zero element in [`AffineWeylGroup::omega_ids`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaId(u16);

impl OmegaId {
    pub const IDENTITY: OmegaId = OmegaId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct OmegaEntry {
    label: Vec<u8>,
    element: Element,
    perm: Vec<Node>,
}

/// The dominant Newton point `Λ / denom` of a σ-twisted element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPoint {
    numer: Vec<i64>,
    denom: i64,
}

impl NewtonPoint {
    pub fn is_central(&self) -> bool {
        self.numer.iter().all(|&x| x == 0)
    }

    pub fn coords(&self) -> Vec<Q> {
        self.numer.iter().map(|&x| Q::new(x, self.denom)).collect()
    }
}

/// An automorphism of the affine Dynkin diagram, realized on `W̃` as
/// `Ad(ω) ∘ σ₀` with `σ₀` fixing every affine node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAut {
    perm: Vec<Node>,
    omega: OmegaId,
    finite: Vec<Node>,
    coord_perm: Vec<usize>,
    linear: Vec<i32>,
    order: usize,
}

impl DiagramAut {
    pub fn perm(&self) -> &[Node] {
        &self.perm
    }

    pub fn image(&self, s: Node) -> Node {
        self.perm[s.index()]
    }

    pub fn image_set(&self, set: NodeSet) -> NodeSet {
        set.map(|s| self.image(s))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, s)| s.index() == i)
    }

    /// The length-zero part `ω` of the decomposition `Ad(ω) ∘ σ₀`.
    pub fn omega(&self) -> OmegaId {
        self.omega
    }

    /// `σ₀` on nodes.
    pub fn finite_part(&self) -> &[Node] {
        &self.finite
    }

    /// Linear part `p(σ)` on coweight coordinates.
    pub fn linear(&self) -> &[i32] {
        &self.linear
    }

    /// `σ₀` acting on a coweight; this is the induced action on `W₀`-orbits.
    pub fn act_on_coweight(&self, lambda: &[i32]) -> Vec<i32> {
        let mut out = vec![0; lambda.len()];
        for (j, &x) in lambda.iter().enumerate() {
            out[self.coord_perm[j]] = x;
        }
        out
    }

    pub fn is_stable(&self, set: NodeSet) -> bool {
        self.image_set(set) == set
    }

    pub fn orbit(&self, s: Node) -> NodeSet {
        let mut out = NodeSet::singleton(s);
        let mut t = self.image(s);
        while t != s {
            out.insert(t);
            t = self.image(t);
        }
        out
    }

    /// Orbits meeting `set`, in order of their smallest node.
    pub fn orbits(&self, set: NodeSet) -> Vec<NodeSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(s) = rest.iter().next() {
            let o = self.orbit(s);
            rest = rest.difference(o);
            out.push(o);
        }
        out
    }

    pub fn closure(&self, set: NodeSet) -> NodeSet {
        set.iter().fold(NodeSet::EMPTY, |acc, s| acc.union(self.orbit(s)))
    }
}

/// Extended affine Weyl group of an adjoint root datum.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    datum: RootDatum,
    simple: Vec<Element>,
    simple_lookup: HashMap<Element, Node>,
    omega: Vec<OmegaEntry>,
    omega_lookup: HashMap<Element, OmegaId>,
    omega_mul: Vec<OmegaId>,
    positive_flat: Vec<i32>,
}

impl AffineWeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        let r = datum.rank();
        let id = linalg::identity(r);
        let simple: Vec<Element> = (0..datum.node_count())
            .map(|s| {
                let s = Node(s as u8);
                let (a, c, k) = (datum.node_root(s), datum.node_coroot(s), datum.node_shift(s));
                let lambda: Vec<i32> = c.iter().map(|&x| -k * x).collect();
                let mut m = id.clone();
                for i in 0..r {
                    for j in 0..r {
                        m[i * r + j] -= c[i] * a[j];
                    }
                }
                Element::from_parts(r, &lambda, &m)
            })
            .collect();
        let simple_lookup = simple.iter().enumerate().map(|(i, e)| (e.clone(), Node(i as u8))).collect();
        let positive_flat = datum.positive_roots().iter().flatten().copied().collect();
        let mut g = AffineWeylGroup {
            datum,
            simple,
            simple_lookup,
            omega: Vec::new(),
            omega_lookup: HashMap::new(),
            omega_mul: Vec::new(),
            positive_flat,
        };
        g.build_omega();
        g
    }

    fn build_omega(&mut self) {
        let d = &self.datum;
        let r = d.rank();
        let mut per_component: Vec<Vec<(u8, Element)>> = Vec::new();
        for c in 0..d.components().len() {
            let mut list = vec![(0u8, self.identity())];
            for s in d.minuscule_nodes(c) {
                let mut lambda = vec![0; r];
                lambda[d.coordinate(s).expect("finite node")] = 1;
                let label = d.local_label(s) as u8;
                list.push((label, self.strip(self.translation(&lambda))));
            }
            per_component.push(list);
        }
        let mut entries: Vec<(Vec<u8>, Element)> = vec![(Vec::new(), self.identity())];
        for list in &per_component {
            let mut next = Vec::new();
            for (label, e) in &entries {
                for (l, f) in list {
                    let mut lab = label.clone();
                    lab.push(*l);
                    next.push((lab, self.mul(e, f)));
                }
            }
            entries = next;
        }
        self.omega = entries
            .into_iter()
            .map(|(label, element)| {
                let perm = (0..d.node_count())
                    .map(|s| {
                        let conj = self.conjugate(&element, &self.simple[s]);
                        self.simple_lookup[&conj]
                    })
                    .collect();
                OmegaEntry { label, element, perm }
            })
            .collect();
        self.omega_lookup =
            self.omega.iter().enumerate().map(|(i, e)| (e.element.clone(), OmegaId(i as u16))).collect();
        let n = self.omega.len();
        self.omega_mul = (0..n * n)
            .map(|k| {
                let p = self.mul(&self.omega[k / n].element, &self.omega[k % n].element);
                self.omega_lookup[&p]
            })
            .collect();
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn identity(&self) -> Element {
        let r = self.rank();
        Element::from_parts(r, &vec![0; r], &linalg::identity(r))
    }

    pub fn translation(&self, lambda: &[i32]) -> Element {
        let r = self.rank();
        Element::from_parts(r, lambda, &linalg::identity(r))
    }

    pub fn simple(&self, s: Node) -> &Element {
        &self.simple[s.index()]
    }

    /// The node `s` with `x = s`, if `x` is a simple reflection.
    pub fn as_simple(&self, x: &Element) -> Option<Node> {
        self.simple_lookup.get(x).copied()
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let r = self.rank();
        let mx = x.linear();
        let shifted = linalg::mat_vec(r, mx, y.translation());
        let lambda: Vec<i32> = x.translation().iter().zip(&shifted).map(|(a, b)| a + b).collect();
        Element::from_parts(r, &lambda, &linalg::mat_mul(r, mx, y.linear()))
    }

    pub fn inverse(&self, x: &Element) -> Element {
        let r = self.rank();
        let inv = linalg::inverse_unimodular(r, x.linear());
        let lambda: Vec<i32> = linalg::mat_vec(r, &inv, x.translation()).iter().map(|&v| -v).collect();
        Element::from_parts(r, &lambda, &inv)
    }

    /// `x y x⁻¹`.
    pub fn conjugate(&self, x: &Element, y: &Element) -> Element {
        self.mul(&self.mul(x, y), &self.inverse(x))
    }

    /// `s x`.
    pub fn left_mul(&self, s: Node, x: &Element) -> Element {
        let r = self.rank();
        let (a, c, k) = (self.datum.node_root(s), self.datum.node_coroot(s), self.datum.node_shift(s));
        let mut data = x.data.clone();
        let (lambda, m) = data.split_at_mut(r);
        let p = dot(a, lambda) + k;
        if p != 0 {
            for (l, ci) in lambda.iter_mut().zip(c) {
                *l -= p * ci;
            }
        }
        for col in 0..r {
            let p: i32 = (0..r).map(|i| a[i] * m[i * r + col]).sum();
            if p != 0 {
                for (i, ci) in c.iter().enumerate() {
                    m[i * r + col] -= p * ci;
                }
            }
        }
        Element { rank: x.rank, data }
    }

    /// `x s`.
    pub fn right_mul(&self, x: &Element, s: Node) -> Element {
        let r = self.rank();
        let (a, c, k) = (self.datum.node_root(s), self.datum.node_coroot(s), self.datum.node_shift(s));
        let mc = linalg::mat_vec(r, x.linear(), c);
        let mut data = x.data.clone();
        let (lambda, m) = data.split_at_mut(r);
        if k != 0 {
            for (l, v) in lambda.iter_mut().zip(&mc) {
                *l -= k * v;
            }
        }
        for i in 0..r {
            if mc[i] != 0 {
                for j in 0..r {
                    m[i * r + j] -= mc[i] * a[j];
                }
            }
        }
        Element { rank: x.rank, data }
    }

    /// Iwahori-Matsumoto length.
    pub fn length(&self, x: &Element) -> u32 {
        let r = self.rank();
        let v = x.rho_image();
        let lambda = x.translation();
        let mut total = 0u32;
        for beta in self.positive_flat.chunks(r) {
            let a = dot(beta, lambda);
            let sign = dot(beta, &v);
            total += if sign > 0 { a.unsigned_abs() } else { (a - 1).unsigned_abs() };
        }
        total
    }

    /// Whether `ℓ(s x) < ℓ(x)`.
    pub fn is_left_descent(&self, s: Node, x: &Element) -> bool {
        let a = self.datum.node_root(s);
        let m = dot(a, x.translation()) + self.datum.node_shift(s);
        match m.cmp(&0) {
            core::cmp::Ordering::Less => true,
            core::cmp::Ordering::Greater => false,
            core::cmp::Ordering::Equal => dot(a, &x.rho_image()) < 0,
        }
    }

    /// Whether `ℓ(x s) < ℓ(x)`.
    pub fn is_right_descent(&self, x: &Element, s: Node) -> bool {
        self.length(&self.right_mul(x, s)) < self.length(x)
    }

    pub fn first_left_descent(&self, x: &Element) -> Option<Node> {
        (0..self.datum.node_count()).map(|i| Node(i as u8)).find(|&s| self.is_left_descent(s, x))
    }

    pub fn left_descents(&self, x: &Element) -> NodeSet {
        (0..self.datum.node_count()).map(|i| Node(i as u8)).filter(|&s| self.is_left_descent(s, x)).collect()
    }

    fn strip(&self, mut x: Element) -> Element {
        while let Some(s) = self.first_left_descent(&x) {
            x = self.left_mul(s, &x);
        }
        x
    }

    /// Reduced word `x = s_{i₁} ⋯ s_{iₗ} ω`, always removing the smallest left descent.
    pub fn reduced_word(&self, x: &Element) -> (Vec<Node>, OmegaId) {
        let mut word = Vec::new();
        let mut y = x.clone();
        while let Some(s) = self.first_left_descent(&y) {
            word.push(s);
            y = self.left_mul(s, &y);
        }
        (word, self.omega_lookup[&y])
    }

    pub fn from_word(&self, word: &[Node], omega: OmegaId) -> Element {
        word.iter().rev().fold(self.omega[omega.index()].element.clone(), |acc, &s| self.left_mul(s, &acc))
    }

    /// The length-zero element `ω` with `x ∈ W_a ω` (Kottwitz invariant).
    pub fn omega_part(&self, x: &Element) -> OmegaId {
        self.omega_lookup[&self.strip(x.clone())]
    }

    /// `τ(t^λ)`.
    pub fn tau(&self, lambda: &[i32]) -> OmegaId {
        self.omega_part(&self.translation(lambda))
    }

    pub fn omega_ids(&self) -> impl Iterator<Item = OmegaId> {
        (0..self.omega.len() as u16).map(OmegaId)
    }

    pub fn omega_element(&self, w: OmegaId) -> &Element {
        &self.omega[w.index()].element
    }

    /// Per component: 0 for the identity, `i` for `τ_i = τ(t^{ω_i^∨})`.
    pub fn omega_label(&self, w: OmegaId) -> &[u8] {
        &self.omega[w.index()].label
    }

    pub fn omega_by_label(&self, label: &[u8]) -> Option<OmegaId> {
        self.omega.iter().position(|e| e.label == label).map(|i| OmegaId(i as u16))
    }

    /// `Ad(ω)` on nodes.
    pub fn omega_perm(&self, w: OmegaId) -> &[Node] {
        &self.omega[w.index()].perm
    }

    pub fn omega_mul(&self, a: OmegaId, b: OmegaId) -> OmegaId {
        self.omega_mul[a.index() * self.omega.len() + b.index()]
    }

    pub fn omega_inverse(&self, a: OmegaId) -> OmegaId {
        self.omega_ids().find(|&b| self.omega_mul(a, b) == OmegaId::IDENTITY).expect("finite group")
    }

    /// `w s w⁻¹` when it is a simple reflection.
    pub fn conjugate_node(&self, w: &Element, s: Node) -> Option<Node> {
        self.as_simple(&self.conjugate(w, self.simple(s)))
    }

    /// Build the automorphism with the given node permutation.
    pub fn automorphism(&self, perm: &[Node]) -> Result<DiagramAut, Error> {
        let d = &self.datum;
        let n = d.node_count();
        if perm.len() != n {
            return Err(Error::NotAutomorphism(format!("expected {n} images, got {}", perm.len())));
        }
        let mut seen = NodeSet::EMPTY;
        for &t in perm {
            if t.index() >= n || seen.contains(t) {
                return Err(Error::NotAutomorphism(format!("{perm:?} is not a permutation")));
            }
            seen.insert(t);
        }
        for s in 0..n {
            for t in 0..n {
                let (s, t) = (Node(s as u8), Node(t as u8));
                if d.affine_cartan(s, t) != d.affine_cartan(perm[s.index()], perm[t.index()]) {
                    return Err(Error::NotAutomorphism(format!("{perm:?} does not preserve the Cartan matrix")));
                }
            }
        }
        let comps = d.components().len();
        let target: Vec<usize> = (0..comps).map(|c| d.component_of(perm[d.node_base(c).index()])).collect();
        let omega = self
            .omega_ids()
            .find(|&w| {
                let p = self.omega_perm(w);
                (0..comps).all(|c| p[d.node_base(target[c]).index()] == perm[d.node_base(c).index()])
            })
            .ok_or_else(|| Error::NotAutomorphism(format!("{perm:?} has no length-zero part")))?;
        let inv = self.omega_perm(self.omega_inverse(omega));
        let finite: Vec<Node> = perm.iter().map(|&t| inv[t.index()]).collect();
        let r = d.rank();
        let mut coord_perm = vec![0; r];
        for (s, &t) in finite.iter().enumerate() {
            if let Some(j) = d.coordinate(Node(s as u8)) {
                coord_perm[j] = d.coordinate(t).expect("finite part fixes affine nodes");
            }
        }
        let v = self.omega_element(omega).linear();
        let mut linear = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                linear[i * r + j] = v[i * r + coord_perm[j]];
            }
        }
        let mut order = 1;
        let mut cur: Vec<Node> = perm.to_vec();
        while cur.iter().enumerate().any(|(i, s)| s.index() != i) {
            cur = cur.iter().map(|&s| perm[s.index()]).collect();
            order += 1;
        }
        Ok(DiagramAut { perm: perm.to_vec(), omega, finite, coord_perm, linear, order })
    }

    pub fn identity_aut(&self) -> DiagramAut {
        let perm: Vec<Node> = (0..self.datum.node_count()).map(|i| Node(i as u8)).collect();
        self.automorphism(&perm).expect("identity is an automorphism")
    }

    /// `Ad(ω)`.
    pub fn inner_aut(&self, w: OmegaId) -> DiagramAut {
        self.automorphism(self.omega_perm(w)).expect("conjugation by Ω preserves the diagram")
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: &DiagramAut, b: &DiagramAut) -> DiagramAut {
        let perm: Vec<Node> = b.perm.iter().map(|&s| a.image(s)).collect();
        self.automorphism(&perm).expect("composition of automorphisms")
    }

    pub fn inverse_aut(&self, a: &DiagramAut) -> DiagramAut {
        let mut perm = vec![Node(0); a.perm.len()];
        for (i, &s) in a.perm.iter().enumerate() {
            perm[s.index()] = Node(i as u8);
        }
        self.automorphism(&perm).expect("inverse of an automorphism")
    }

    /// Every automorphism of the affine diagram, identity first.
    pub fn all_automorphisms(&self) -> Vec<DiagramAut> {
        let d = &self.datum;
        let n = d.node_count();
        let mut out = Vec::new();
        let mut perm: Vec<Node> = Vec::with_capacity(n);
        fn go(d: &RootDatum, n: usize, perm: &mut Vec<Node>, used: NodeSet, out: &mut Vec<Vec<Node>>) {
            let k = perm.len();
            if k == n {
                out.push(perm.clone());
                return;
            }
            let s = Node(k as u8);
            for t in 0..n {
                let t = Node(t as u8);
                if used.contains(t) || d.affine_cartan(s, s) != d.affine_cartan(t, t) {
                    continue;
                }
                let ok = (0..k).all(|j| {
                    let (u, v) = (Node(j as u8), perm[j]);
                    d.affine_cartan(s, u) == d.affine_cartan(t, v) && d.affine_cartan(u, s) == d.affine_cartan(v, t)
                });
                if ok {
                    perm.push(t);
                    let mut next = used;
                    next.insert(t);
                    go(d, n, perm, next, out);
                    perm.pop();
                }
            }
        }
        let mut perms = Vec::new();
        go(d, n, &mut perm, NodeSet::EMPTY, &mut perms);
        for p in perms {
            out.push(self.automorphism(&p).expect("search only yields automorphisms"));
        }
        out
    }

    /// `σ(x)`.
    pub fn apply_aut(&self, sigma: &DiagramAut, x: &Element) -> Element {
        if sigma.is_identity() {
            return x.clone();
        }
        let r = self.rank();
        let mut lambda = vec![0; r];
        let mut m = vec![0; r * r];
        let q = &sigma.coord_perm;
        let (xl, xm) = (x.translation(), x.linear());
        for a in 0..r {
            lambda[q[a]] = xl[a];
            for b in 0..r {
                m[q[a] * r + q[b]] = xm[a * r + b];
            }
        }
        let y = Element::from_parts(r, &lambda, &m);
        if sigma.omega == OmegaId::IDENTITY {
            return y;
        }
        let w = self.omega_element(sigma.omega);
        let w_inv = self.omega_element(self.omega_inverse(sigma.omega));
        self.mul(&self.mul(w, &y), w_inv)
    }

    /// `s x σ(s)`.
    pub fn twisted_conjugate(&self, s: Node, x: &Element, sigma: &DiagramAut) -> Element {
        self.right_mul(&self.left_mul(s, x), sigma.image(s))
    }

    /// Dominant Newton point of `x σ`.
    pub fn newton_point(&self, x: &Element, sigma: &DiagramAut) -> Result<NewtonPoint, Error> {
        let r = self.rank();
        let mut y = x.clone();
        let mut cur = x.clone();
        for _ in 1..sigma.order() {
            cur = self.apply_aut(sigma, &cur);
            y = self.mul(&y, &cur);
        }
        let id = linalg::identity(r);
        let mut power = y.linear().to_vec();
        let mut sum: Vec<i64> = y.translation().iter().map(|&v| i64::from(v)).collect();
        let mut term = y.translation().to_vec();
        let mut m = 1usize;
        while power != id {
            if m >= NEWTON_CAP {
                return Err(Error::NewtonCap(NEWTON_CAP));
            }
            term = linalg::mat_vec(r, y.linear(), &term);
            for (acc, v) in sum.iter_mut().zip(&term) {
                *acc += i64::from(*v);
            }
            power = linalg::mat_mul(r, &power, y.linear());
            m += 1;
        }
        let dominant = self.datum.dominant(&sum.iter().map(|&v| v as i32).collect::<Vec<_>>());
        let denom = (m * sigma.order()) as i64;
        let g = dominant.iter().fold(denom, |g, &v| gcd(g, i64::from(v).abs()));
        Ok(NewtonPoint { numer: dominant.iter().map(|&v| i64::from(v) / g).collect(), denom: denom / g })
    }

    /// All elements of the parabolic subgroup `W_J`, or `None` if there are more than `cap`.
    pub fn parabolic_elements(&self, set: NodeSet, cap: usize) -> Option<Vec<Element>> {
        let mut seen: HashSet<Element> = HashSet::new();
        let start = self.identity();
        seen.insert(start.clone());
        let mut out = vec![start];
        let mut k = 0;
        while k < out.len() {
            for s in set.iter() {
                let y = self.right_mul(&out[k], s);
                if seen.insert(y.clone()) {
                    if out.len() >= cap {
                        return None;
                    }
                    out.push(y);
                }
            }
            k += 1;
        }
        Some(out)
    }

    /// The Bruhat interval `[ω, y]` below `y`.
    pub fn lower_ideal(&self, y: &Element) -> HashSet<Element> {
        let (word, omega) = self.reduced_word(y);
        let mut ideal: HashSet<Element> = HashSet::new();
        ideal.insert(self.omega_element(omega).clone());
        for &s in word.iter().rev() {
            let lifted: Vec<Element> = ideal.iter().map(|x| self.left_mul(s, x)).collect();
            ideal.extend(lifted);
        }
        ideal
    }

    /// Letters of `x ω⁻¹` where `ω` is the length-zero part of `x`.
    pub fn support(&self, x: &Element) -> NodeSet {
        self.reduced_word(x).0.into_iter().collect()
    }

    /// Whether `x` is the minimal length element of `W_K x`.
    pub fn is_min_left_coset(&self, k: NodeSet, x: &Element) -> bool {
        k.iter().all(|s| !self.is_left_descent(s, x))
    }

    /// Minimal representative of `W_K x`.
    pub fn min_left_coset(&self, k: NodeSet, x: &Element) -> Element {
        let mut y = x.clone();
        while let Some(s) = k.iter().find(|&s| self.is_left_descent(s, &y)) {
            y = self.left_mul(s, &y);
        }
        y
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Bruhat order with memoized descent recursion.
pub struct Bruhat<'g> {
    group: &'g AffineWeylGroup,
    memo: HashMap<(Element, Element), bool>,
}

impl<'g> Bruhat<'g> {
    pub fn new(group: &'g AffineWeylGroup) -> Self {
        Bruhat { group, memo: HashMap::new() }
    }

    /// `x ≤ y`; elements in different `W_a`-cosets are incomparable.
    pub fn le(&mut self, x: &Element, y: &Element) -> bool {
        if self.group.omega_part(x) != self.group.omega_part(y) {
            return false;
        }
        self.le_same_coset(x, y)
    }

    fn le_same_coset(&mut self, x: &Element, y: &Element) -> bool {
        let g = self.group;
        let (lx, ly) = (g.length(x), g.length(y));
        if lx >= ly {
            return x == y;
        }
        if lx == 0 {
            return true;
        }
        let key = (x.clone(), y.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let s = g.first_left_descent(y).expect("positive length has a descent");
        let sy = g.left_mul(s, y);
        let v = if g.is_left_descent(s, x) {
            self.le_same_coset(&g.left_mul(s, x), &sy)
        } else {
            self.le_same_coset(x, &sy)
        };
        self.memo.insert(key, v);
        v
    }
}
