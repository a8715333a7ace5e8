//! Deligne-Lusztig reduction: nonemptiness and dimension of `X_x(τ)` for the
//! basic class, and the dimension of `X(μ, τ)_K`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;

use crate::admissible::{k_adm, k_adm_0};
use crate::classifier::check_condition_3;
use crate::datum::CoxeterDatum;
use crate::error::Error;
use crate::root_data::Node;
use crate::weyl::{AffineWeylGroup, DiagramAut, Element, OmegaId};

/// Default bound on the size of one cyclic-shift class.
pub const CLASS_CAP: usize = 200_000;

/// Dimension of `X_x(τ)`, with the empty variety kept distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Empty,
    Dim(u32),
}

impl Dim {
    pub fn is_empty(self) -> bool {
        self == Dim::Empty
    }

    pub fn value(self) -> Option<u32> {
        match self {
            Dim::Empty => None,
            Dim::Dim(d) => Some(d),
        }
    }

    fn succ(self) -> Dim {
        match self {
            Dim::Empty => Dim::Empty,
            Dim::Dim(d) => Dim::Dim(d + 1),
        }
    }
}

impl PartialOrd for Dim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dim {
    /// `Empty` sorts below every dimension.
    fn cmp(&self, other: &Self) -> Ordering {
        self.value().map(i64::from).unwrap_or(-1).cmp(&other.value().map(i64::from).unwrap_or(-1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// `x → s x σ(s)` of equal length.
    Cyclic,
    /// `x → s x` after a length drop by two.
    DropLeft,
    /// `x → s x σ(s)` dropping length by two.
    DropConj,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Cyclic => "cyclic",
            MoveKind::DropLeft => "drop-left",
            MoveKind::DropConj => "drop-conj",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub s: Node,
    pub kind: MoveKind,
}

/// Memoized reduction for one `(σ, τ)`.
pub struct Reduction<'g> {
    group: &'g AffineWeylGroup,
    sigma: DiagramAut,
    tau: OmegaId,
    order: Vec<Node>,
    cap: usize,
    memo: HashMap<Element, Dim>,
    sigma_omega: Vec<OmegaId>,
}

impl<'g> Reduction<'g> {
    pub fn new(group: &'g AffineWeylGroup, sigma: &DiagramAut, tau: OmegaId) -> Self {
        let order = group.datum().all_nodes().iter().collect();
        let sigma_omega = group
            .omega_ids()
            .map(|w| group.omega_part(&group.apply_aut(sigma, group.omega_element(w))))
            .collect();
        Reduction { group, sigma: sigma.clone(), tau, order, cap: CLASS_CAP, memo: HashMap::new(), sigma_omega }
    }

    pub fn for_datum(datum: &'g CoxeterDatum) -> Self {
        Self::new(datum.group(), datum.sigma(), datum.tau())
    }

    /// Order in which simple reflections are tried as moves.
    pub fn with_move_order(mut self, order: Vec<Node>) -> Self {
        self.order = order;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Whether `ω` and `τ` have the same image in the σ-coinvariants of `Ω`.
    fn same_kottwitz(&self, omega: OmegaId) -> bool {
        let g = self.group;
        g.omega_ids().any(|u| {
            let twisted = g.omega_mul(g.omega_mul(self.tau, u), g.omega_inverse(self.sigma_omega[u.index()]));
            twisted == omega
        })
    }

    /// Base case for an element of minimal length in its σ-conjugacy class.
    pub fn base_case(&self, x: &Element) -> Result<Dim, Error> {
        if !self.same_kottwitz(self.group.omega_part(x)) {
            return Ok(Dim::Empty);
        }
        let nu = self.group.newton_point(x, &self.sigma)?;
        Ok(if nu.is_central() { Dim::Dim(self.group.length(x)) } else { Dim::Empty })
    }

    /// Breadth-first search through equal-length moves for an element with
    /// a length-dropping move. Returns the path, the element and the drop
    /// reflection, or the explored class when none exists.
    fn explore(&self, x: &Element) -> Result<Result<(Vec<Step>, Element, Node), Vec<Element>>, Error> {
        let g = self.group;
        let len = g.length(x);
        let mut parent: HashMap<Element, Option<(Element, Node)>> = HashMap::new();
        parent.insert(x.clone(), None);
        let mut queue = VecDeque::from([x.clone()]);
        let mut class = Vec::new();
        while let Some(y) = queue.pop_front() {
            for &s in &self.order {
                let z = g.twisted_conjugate(s, &y, &self.sigma);
                let lz = g.length(&z);
                if lz < len {
                    let mut path = Vec::new();
                    let mut cur = y.clone();
                    while let Some(Some((prev, t))) = parent.get(&cur) {
                        path.push(Step { s: *t, kind: MoveKind::Cyclic });
                        cur = prev.clone();
                    }
                    path.reverse();
                    return Ok(Ok((path, y, s)));
                }
                if lz == len && !parent.contains_key(&z) {
                    if parent.len() >= self.cap {
                        return Err(Error::SearchCap(self.cap));
                    }
                    parent.insert(z.clone(), Some((y.clone(), s)));
                    queue.push_back(z);
                }
            }
            class.push(y);
        }
        Ok(Err(class))
    }

    /// Some element of minimal length in the σ-conjugacy class of `x`,
    /// reached by moves that never increase length.
    pub fn reach_minimal(&self, x: &Element) -> Result<(Element, Vec<Step>), Error> {
        let mut chain = Vec::new();
        let mut cur = x.clone();
        loop {
            match self.explore(&cur)? {
                Err(_) => return Ok((cur, chain)),
                Ok((path, y, s)) => {
                    chain.extend(path);
                    chain.push(Step { s, kind: MoveKind::DropConj });
                    cur = self.group.twisted_conjugate(s, &y, &self.sigma);
                }
            }
        }
    }

    /// `dim X_x(τ)`.
    pub fn dim(&mut self, x: &Element) -> Result<Dim, Error> {
        if let Some(&d) = self.memo.get(x) {
            return Ok(d);
        }
        if !self.same_kottwitz(self.group.omega_part(x)) {
            self.memo.insert(x.clone(), Dim::Empty);
            return Ok(Dim::Empty);
        }
        let result = match self.explore(x)? {
            Err(class) => {
                let d = self.base_case(x)?;
                for y in class {
                    self.memo.insert(y, d);
                }
                d
            }
            Ok((_, y, s)) => {
                let (conj, left) = self.branches(&y, s);
                let d = self.dim(&conj)?.max(self.dim(&left)?).succ();
                self.memo.insert(y, d);
                d
            }
        };
        self.memo.insert(x.clone(), result);
        Ok(result)
    }

    fn branches(&self, y: &Element, s: Node) -> (Element, Element) {
        let g = self.group;
        (g.twisted_conjugate(s, y, &self.sigma), g.left_mul(s, y))
    }

    /// A replayable chain of moves from `x` down to a minimal-length element
    /// realizing `dim X_x(τ)`.
    pub fn witness(&mut self, x: &Element) -> Result<(Dim, Vec<Step>), Error> {
        let d = self.dim(x)?;
        let mut chain = Vec::new();
        let mut cur = x.clone();
        loop {
            match self.explore(&cur)? {
                Err(_) => return Ok((d, chain)),
                Ok((path, y, s)) => {
                    chain.extend(path);
                    let (conj, left) = self.branches(&y, s);
                    if self.dim(&conj)? >= self.dim(&left)? {
                        chain.push(Step { s, kind: MoveKind::DropConj });
                        cur = conj;
                    } else {
                        chain.push(Step { s, kind: MoveKind::DropLeft });
                        cur = left;
                    }
                }
            }
        }
    }

    /// Apply a chain produced by [`Reduction::witness`] or
    /// [`Reduction::reach_minimal`].
    pub fn replay(&self, x: &Element, chain: &[Step]) -> Element {
        chain.iter().fold(x.clone(), |y, step| match step.kind {
            MoveKind::Cyclic | MoveKind::DropConj => self.group.twisted_conjugate(step.s, &y, &self.sigma),
            MoveKind::DropLeft => self.group.left_mul(step.s, &y),
        })
    }
}

/// `dim X(μ, τ)_K`, exact when condition 3 holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimBound {
    Exact(u32),
    /// Maximum of `dim X_w(τ)` over all of `^K Adm(μ)`; a lower bound.
    LowerBound(u32),
}

impl DimBound {
    pub fn value(self) -> u32 {
        match self {
            DimBound::Exact(d) | DimBound::LowerBound(d) => d,
        }
    }
}

/// Largest nonempty `dim X_w(τ)` over `elements`.
fn max_dim(red: &mut Reduction<'_>, elements: &[Element]) -> Result<Dim, Error> {
    let mut best = Dim::Empty;
    for w in elements {
        best = best.max(red.dim(w)?);
    }
    Ok(best)
}

/// `dim X(μ, τ)_K` from a precomputed `Adm(μ)`.
///
/// When condition 3 holds the maximum runs over `^K Adm(μ)_0`; otherwise over
/// all of `^K Adm(μ)`, reported as a lower bound.
pub fn dim_x_mu_tau_k(datum: &CoxeterDatum, adm: &[Element]) -> Result<DimBound, Error> {
    let mut red = Reduction::for_datum(datum);
    let exact = check_condition_3(datum).holds();
    let elements = if exact { k_adm_0(datum, adm) } else { k_adm(datum, adm) };
    let d = max_dim(&mut red, &elements)?.value().ok_or_else(|| Error::Invalid("X(μ, τ)_K is empty".into()))?;
    Ok(if exact { DimBound::Exact(d) } else { DimBound::LowerBound(d) })
}

/// Whether `dim X(μ, τ)_K = rank_ss(J_τ)`.
pub fn dim_equals_rank(datum: &CoxeterDatum, adm: &[Element]) -> Result<bool, Error> {
    Ok(dim_x_mu_tau_k(datum, adm)?.value() as usize == datum.rank_ss_j_tau())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::tests::{datum, element};
    use crate::admissible::{admissible_set, is_twisted_coxeter, sigma_support, DEFAULT_BUDGET};
    use crate::root_data::Family;
    use alloc::vec;
    use hashbrown::HashSet;
    use proptest::prelude::*;

    #[test]
    fn base_cases() {
        let d = datum(&[(Family::C, 2)], &[2, 1, 0], &[0, 1], &[]);
        let red = Reduction::for_datum(&d);
        let g = d.group();
        assert_eq!(red.base_case(g.omega_element(d.tau())).unwrap(), Dim::Dim(0));
        assert_eq!(red.base_case(&element(&d, &[1], d.tau())).unwrap(), Dim::Dim(1));
        let d = datum(&[(Family::C, 2)], &[], &[0, 1], &[]);
        let red = Reduction::for_datum(&d);
        assert_eq!(red.base_case(&d.group().translation(&[0, 1])).unwrap(), Dim::Empty);
    }

    #[test]
    fn drinfeld_and_harris_taylor() {
        let d = datum(&[(Family::A, 3)], &[1, 2, 3, 0], &[0, 0, 1], &[]);
        let adm = admissible_set(d.group(), d.mu(), DEFAULT_BUDGET).unwrap();
        assert_eq!(dim_x_mu_tau_k(&d, &adm).unwrap(), DimBound::Exact(3));
        let d = datum(&[(Family::A, 3)], &[], &[1, 0, 0], &[]);
        let adm = admissible_set(d.group(), d.mu(), DEFAULT_BUDGET).unwrap();
        assert_eq!(dim_x_mu_tau_k(&d, &adm).unwrap(), DimBound::Exact(0));
    }

    /// All elements reachable from `x` by σ-conjugation with simple
    /// reflections, staying within length `bound`.
    fn class_ball(g: &AffineWeylGroup, sigma: &DiagramAut, x: &Element, bound: u32) -> HashSet<Element> {
        let mut seen: HashSet<Element> = [x.clone()].into_iter().collect();
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            for s in g.datum().all_nodes().iter() {
                let z = g.twisted_conjugate(s, &y, sigma);
                if g.length(&z) <= bound && seen.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
        seen
    }

    #[test]
    fn reach_minimal_matches_class_ball() {
        let d = datum(&[(Family::C, 2)], &[], &[0, 1], &[]);
        let g = d.group();
        let red = Reduction::for_datum(&d);
        for x in admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap() {
            let (y, chain) = red.reach_minimal(&x).unwrap();
            assert_eq!(red.replay(&x, &chain), y);
            let ball = class_ball(g, d.sigma(), &x, g.length(&x));
            let min = ball.iter().map(|z| g.length(z)).min().unwrap();
            assert_eq!(g.length(&y), min, "{x:?}");
        }
    }

    #[test]
    fn witness_replays_to_base_case() {
        let d = datum(&[(Family::B, 3)], &[], &[1, 0, 0], &[]);
        let g = d.group();
        let mut red = Reduction::for_datum(&d);
        for x in admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap() {
            let (dim, chain) = red.witness(&x).unwrap();
            let end = red.replay(&x, &chain);
            let drops = chain.iter().filter(|s| s.kind != MoveKind::Cyclic).count() as u32;
            match dim {
                Dim::Empty => assert!(red.base_case(&end).unwrap().is_empty()),
                Dim::Dim(v) => assert_eq!(red.base_case(&end).unwrap(), Dim::Dim(v - drops)),
            }
        }
    }

    #[test]
    fn coxeter_elements_have_dimension_length() {
        let d = datum(&[(Family::B, 3)], &[1, 0, 2, 3], &[1, 0, 0], &[0, 1, 2]);
        let g = d.group();
        let adm = admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap();
        let mut red = Reduction::for_datum(&d);
        for w in k_adm_0(&d, &adm) {
            assert!(is_twisted_coxeter(g, d.sigma(), &w));
            assert_eq!(red.dim(&w).unwrap(), Dim::Dim(g.length(&w)));
        }
    }

    #[test]
    fn support_orbit_lower_bound() {
        let d = datum(&[(Family::A, 2)], &[], &[1, 1], &[]);
        let g = d.group();
        let mut red = Reduction::for_datum(&d);
        for w in admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap() {
            if let Dim::Dim(v) = red.dim(&w).unwrap() {
                let tw = crate::admissible::twisted_for(g, d.sigma(), &w);
                let orbits = tw.orbits(sigma_support(g, d.sigma(), &w)).len() as u32;
                assert!(v >= orbits);
            }
        }
    }

    #[test]
    fn empty_below_everything() {
        assert!(Dim::Empty < Dim::Dim(0));
        assert_eq!(Dim::Empty.max(Dim::Dim(2)), Dim::Dim(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn move_order_does_not_matter(order in Just((0..4u8).map(Node).collect::<Vec<_>>()).prop_shuffle()) {
            let d = datum(&[(Family::B, 3)], &[], &[1, 0, 0], &[]);
            let g = d.group();
            let mut a = Reduction::for_datum(&d);
            let mut b = Reduction::for_datum(&d).with_move_order(order);
            for w in admissible_set(g, d.mu(), DEFAULT_BUDGET).unwrap() {
                prop_assert_eq!(a.dim(&w).unwrap(), b.dim(&w).unwrap());
            }
        }
    }
}
