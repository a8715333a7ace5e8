//! Finite and affine root data.
//!
//! Roots are written in the simple-root basis and coweights in the
//! fundamental-coweight basis, so `<λ, α>` is a dot product and every
//! coordinate stays integral.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Cartan-Killing family of an irreducible finite root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::E | Family::F | Family::G)
    }
}

/// An irreducible finite Cartan type in Bourbaki labeling, except that `F4`
/// has its long simple roots at nodes 3 and 4.
///
/// `B2` is not a valid value; callers relabel it to `C2` (see
/// [`CartanType::b2_to_c2_label`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: u8,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 3,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > 24 {
            return Err(Error::UnsupportedType { family: family.letter(), rank });
        }
        Ok(CartanType { family, rank: rank as u8 })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    /// Label map taking `B2` node labels to the matching `C2` labels.
    pub fn b2_to_c2_label(node: usize) -> usize {
        match node {
            1 => 2,
            2 => 1,
            other => other,
        }
    }

    /// `a[i][j] = <α_i^∨, α_j>`, 0-based.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[1][2] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Half squared lengths of the simple roots, short roots normalized to 1.
    pub fn symmetrizer(self) -> Vec<i32> {
        let n = self.rank();
        match self.family {
            Family::B => (0..n).map(|i| if i == n - 1 { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i == n - 1 { 2 } else { 1 }).collect(),
            Family::F => vec![1, 1, 2, 2],
            Family::G => vec![1, 3],
            _ => vec![1; n],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A node of the affine Dynkin diagram, numbered globally across components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node(pub u8);

impl Node {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of nodes, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(n: Node) -> Self {
        NodeSet(1 << n.0)
    }

    pub fn full(count: usize) -> Self {
        NodeSet(if count >= 64 { u64::MAX } else { (1u64 << count) - 1 })
    }

    pub fn contains(self, n: Node) -> bool {
        self.0 >> n.0 & 1 == 1
    }

    pub fn insert(&mut self, n: Node) {
        self.0 |= 1 << n.0;
    }

    pub fn remove(&mut self, n: Node) {
        self.0 &= !(1 << n.0);
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Node> {
        let bits = self.0;
        (0..64u8).filter(move |i| bits >> i & 1 == 1).map(Node)
    }

    pub fn map(self, f: impl Fn(Node) -> Node) -> NodeSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Node> for NodeSet {
    fn from_iter<I: IntoIterator<Item = Node>>(iter: I) -> Self {
        let mut s = NodeSet::EMPTY;
        for n in iter {
            s.insert(n);
        }
        s
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, n) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", n.0)?;
        }
        f.write_str("}")
    }
}

/// Positive roots of an irreducible system, ordered by height, simple roots first.
pub fn positive_roots(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut seen: hashbrown::HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..n {
            let is_simple_i = beta.iter().enumerate().all(|(j, &b)| b == i32::from(j == i));
            if is_simple_i {
                continue;
            }
            let mut p = 0;
            loop {
                let mut down = beta.clone();
                down[i] -= p + 1;
                if down.iter().all(|&c| c >= 0) && seen.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
        k += 1;
    }
    roots
}

/// A finite root datum of adjoint type, possibly a product of irreducible
/// components, together with its affine node structure.
///
/// Component `c` owns nodes `node_base(c) ..= node_base(c) + rank_c`; the
/// first of these is the affine node `0`, the rest are the finite nodes in
/// Bourbaki order.
#[derive(Clone, Debug)]
pub struct RootDatum {
    components: Vec<CartanType>,
    rank: usize,
    cartan: Vec<i32>,
    sym: Vec<i32>,
    positive: Vec<Vec<i32>>,
    component_of_root: Vec<usize>,
    node_base: Vec<usize>,
    coord_base: Vec<usize>,
    node_root: Vec<Vec<i32>>,
    node_coroot: Vec<Vec<i32>>,
    node_shift: Vec<i32>,
    affine_cartan: Vec<i32>,
}

impl RootDatum {
    pub fn new(components: &[CartanType]) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::EmptyDatum);
        }
        let rank: usize = components.iter().map(|c| c.rank()).sum();
        let nodes = rank + components.len();
        if nodes > 64 {
            return Err(Error::TooLarge(nodes));
        }
        let mut cartan = vec![0; rank * rank];
        let mut sym = vec![0; rank];
        let mut positive = Vec::new();
        let mut component_of_root = Vec::new();
        let mut node_base = Vec::new();
        let mut coord_base = Vec::new();
        let mut highest = Vec::new();
        let (mut nb, mut cb) = (0, 0);
        for (ci, ty) in components.iter().enumerate() {
            let n = ty.rank();
            let a = ty.cartan_matrix();
            let d = ty.symmetrizer();
            for i in 0..n {
                sym[cb + i] = d[i];
                for j in 0..n {
                    cartan[(cb + i) * rank + cb + j] = a[i][j];
                }
            }
            let local = positive_roots(&a);
            highest.push({
                let mut h = vec![0; rank];
                h[cb..cb + n].copy_from_slice(local.last().expect("nonempty root system"));
                h
            });
            for r in local {
                let mut g = vec![0; rank];
                g[cb..cb + n].copy_from_slice(&r);
                positive.push(g);
                component_of_root.push(ci);
            }
            node_base.push(nb);
            coord_base.push(cb);
            nb += n + 1;
            cb += n;
        }
        let mut datum = RootDatum {
            components: components.to_vec(),
            rank,
            cartan,
            sym,
            positive,
            component_of_root,
            node_base,
            coord_base,
            node_root: Vec::new(),
            node_coroot: Vec::new(),
            node_shift: Vec::new(),
            affine_cartan: Vec::new(),
        };
        for (ci, ty) in components.iter().enumerate() {
            let theta = &highest[ci];
            datum.node_root.push(theta.iter().map(|&x| -x).collect());
            datum.node_coroot.push(datum.coroot(theta).iter().map(|&x| -x).collect());
            datum.node_shift.push(1);
            for i in 0..ty.rank() {
                let mut e = vec![0; rank];
                e[datum.coord_base[ci] + i] = 1;
                datum.node_coroot.push(datum.coroot(&e));
                datum.node_root.push(e);
                datum.node_shift.push(0);
            }
        }
        datum.affine_cartan = (0..nodes)
            .flat_map(|s| (0..nodes).map(move |t| (s, t)))
            .map(|(s, t)| dot(&datum.node_coroot[s], &datum.node_root[t]))
            .collect();
        Ok(datum)
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    /// Total rank over all components.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn node_count(&self) -> usize {
        self.rank + self.components.len()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.node_count())
    }

    pub fn node_base(&self, component: usize) -> Node {
        Node(self.node_base[component] as u8)
    }

    pub fn component_nodes(&self, component: usize) -> NodeSet {
        let b = self.node_base[component];
        (b..=b + self.components[component].rank()).map(|i| Node(i as u8)).collect()
    }

    pub fn component_of(&self, node: Node) -> usize {
        self.node_base.iter().rposition(|&b| b <= node.index()).expect("node in range")
    }

    /// Node id within its own component (0 for the affine node).
    pub fn local_label(&self, node: Node) -> usize {
        node.index() - self.node_base[self.component_of(node)]
    }

    pub fn node(&self, component: usize, local: usize) -> Node {
        Node((self.node_base[component] + local) as u8)
    }

    pub fn is_affine_node(&self, node: Node) -> bool {
        self.node_base.contains(&node.index())
    }

    /// Coordinate index of a finite node.
    pub fn coordinate(&self, node: Node) -> Option<usize> {
        let c = self.component_of(node);
        let local = node.index() - self.node_base[c];
        (local > 0).then(|| self.coord_base[c] + local - 1)
    }

    pub fn node_of_coordinate(&self, coord: usize) -> Node {
        let c = self.coord_base.iter().rposition(|&b| b <= coord).expect("coordinate in range");
        Node((self.node_base[c] + coord - self.coord_base[c] + 1) as u8)
    }

    pub fn coord_range(&self, component: usize) -> core::ops::Range<usize> {
        let b = self.coord_base[component];
        b..b + self.components[component].rank()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i * self.rank + j]
    }

    /// `<α_s^∨, α_t>` for affine nodes, with `α_0 = -θ`.
    pub fn affine_cartan(&self, s: Node, t: Node) -> i32 {
        self.affine_cartan[s.index() * self.node_count() + t.index()]
    }

    pub fn adjacent(&self, s: Node, t: Node) -> bool {
        s != t && self.affine_cartan(s, t) != 0
    }

    /// `α_s` in simple-root coordinates.
    pub fn node_root(&self, s: Node) -> &[i32] {
        &self.node_root[s.index()]
    }

    /// `α_s^∨` in fundamental-coweight coordinates.
    pub fn node_coroot(&self, s: Node) -> &[i32] {
        &self.node_coroot[s.index()]
    }

    /// Constant term of the affine simple root: 1 on affine nodes, else 0.
    pub fn node_shift(&self, s: Node) -> i32 {
        self.node_shift[s.index()]
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    pub fn component_of_root(&self, k: usize) -> usize {
        self.component_of_root[k]
    }

    /// `(α, β)` for the W-invariant form with short roots of squared length 2.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let mut acc = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += a[i] * b[j] * self.sym[i] * self.cartan(i, j);
            }
        }
        acc
    }

    /// Coroot `β^∨` in fundamental-coweight coordinates.
    pub fn coroot(&self, beta: &[i32]) -> Vec<i32> {
        let bb = self.inner(beta, beta);
        (0..self.rank)
            .map(|j| {
                let mut e = vec![0; self.rank];
                e[j] = 1;
                2 * self.inner(beta, &e) / bb
            })
            .collect()
    }

    /// Squared length of `α_s`, short roots normalized to 2.
    pub fn node_length(&self, s: Node) -> i32 {
        self.inner(self.node_root(s), self.node_root(s))
    }

    /// `<λ, 2ρ>`.
    pub fn pairing_2rho(&self, lambda: &[i32]) -> i32 {
        self.positive.iter().map(|b| dot(b, lambda)).sum()
    }

    pub fn is_dominant(&self, lambda: &[i32]) -> bool {
        lambda.iter().all(|&c| c >= 0)
    }

    /// Finite nodes `i` of component `c` with `ω_i^∨` minuscule.
    pub fn minuscule_nodes(&self, component: usize) -> Vec<Node> {
        let theta: Vec<i32> = self.node_root(self.node_base(component)).iter().map(|&x| -x).collect();
        self.coord_range(component)
            .filter(|&j| theta[j] == 1)
            .map(|j| self.node_of_coordinate(j))
            .collect()
    }

    /// Apply the reflection `s_β` to a coweight (in place).
    pub fn reflect_coweight(&self, beta: &[i32], beta_coroot: &[i32], x: &mut [i32]) {
        let p = dot(beta, x);
        if p != 0 {
            for (xi, c) in x.iter_mut().zip(beta_coroot) {
                *xi -= p * c;
            }
        }
    }

    /// The W₀-orbit of a coweight, dominant representative first.
    pub fn weyl_orbit(&self, lambda: &[i32]) -> Vec<Vec<i32>> {
        let start = self.dominant(lambda);
        let mut seen: hashbrown::HashSet<Vec<i32>> = hashbrown::HashSet::new();
        seen.insert(start.clone());
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            for i in 0..self.rank {
                if orbit[k][i] == 0 {
                    continue;
                }
                let mut y = orbit[k].clone();
                let s = self.node_of_coordinate(i);
                self.reflect_coweight(self.node_root(s), self.node_coroot(s), &mut y);
                if seen.insert(y.clone()) {
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    /// Dominant W₀-conjugate of an integral coweight.
    pub fn dominant(&self, lambda: &[i32]) -> Vec<i32> {
        let mut x = lambda.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| x[i] < 0) {
            let s = self.node_of_coordinate(i);
            self.reflect_coweight(self.node_root(s), self.node_coroot(s), &mut x);
        }
        x
    }

    /// Connected components of a node set in the affine diagram.
    pub fn connected_components(&self, set: NodeSet) -> Vec<NodeSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(start) = rest.iter().next() {
            let mut comp = NodeSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(s) = frontier.pop() {
                for t in rest.difference(comp).iter() {
                    if self.adjacent(s, t) {
                        comp.insert(t);
                        frontier.push(t);
                    }
                }
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Whether `W_set` is finite: the set omits a node from every component.
    pub fn is_spherical(&self, set: NodeSet) -> bool {
        (0..self.components.len()).all(|c| !self.component_nodes(c).is_subset(set))
    }
}

pub(crate) fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Finite Cartan type of a connected spherical node set, using the intrinsic
/// root lengths. `B2` is reported as `C2`.
pub fn residual_type(datum: &RootDatum, set: NodeSet) -> Option<CartanType> {
    let nodes: Vec<Node> = set.iter().collect();
    let n = nodes.len();
    if n == 0 {
        return None;
    }
    let degree = |s: Node| nodes.iter().filter(|&&t| datum.adjacent(s, t)).count();
    let edges: usize = nodes.iter().map(|&s| degree(s)).sum::<usize>() / 2;
    if edges != n - 1 {
        return None;
    }
    let mut multi = None;
    for &s in &nodes {
        for &t in &nodes {
            if datum.adjacent(s, t) {
                let w = datum.affine_cartan(s, t) * datum.affine_cartan(t, s);
                if w > 1 {
                    multi = Some((s, t, w));
                }
            }
        }
    }
    let branch = nodes.iter().filter(|&&s| degree(s) == 3).count();
    let family = match multi {
        Some((_, _, 3)) => Family::G,
        Some((s, t, 2)) => {
            if n == 2 {
                Family::C
            } else {
                let ends: Vec<Node> = nodes.iter().copied().filter(|&x| degree(x) == 1).collect();
                let (short, _) = if datum.node_length(s) < datum.node_length(t) { (s, t) } else { (t, s) };
                let long = if short == s { t } else { s };
                if ends.contains(&s) || ends.contains(&t) {
                    if ends.contains(&short) && !ends.contains(&long) {
                        Family::B
                    } else if ends.contains(&long) && !ends.contains(&short) {
                        Family::C
                    } else {
                        return None;
                    }
                } else {
                    Family::F
                }
            }
        }
        Some(_) => return None,
        None => match branch {
            0 => Family::A,
            1 => {
                let centre = *nodes.iter().find(|&&s| degree(s) == 3)?;
                let arm = |start: Node| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    loop {
                        let next = nodes.iter().copied().find(|&x| x != prev && datum.adjacent(cur, x));
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => return len,
                        }
                    }
                };
                let mut arms: Vec<usize> = nodes
                    .iter()
                    .copied()
                    .filter(|&x| datum.adjacent(centre, x))
                    .map(arm)
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Family::D,
                    [1, 2, 2..=4] => Family::E,
                    _ => return None,
                }
            }
            _ => return None,
        },
    };
    CartanType::new(family, n).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ct(f: Family, n: usize) -> CartanType {
        CartanType::new(f, n).unwrap()
    }

    fn fundamental(d: &RootDatum, i: usize) -> Vec<i32> {
        let mut v = vec![0; d.rank()];
        v[i - 1] = 1;
        v
    }

    #[test]
    fn root_counts() {
        let cases = [
            (Family::A, 4, 10),
            (Family::B, 3, 9),
            (Family::C, 4, 16),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (f, n, count) in cases {
            assert_eq!(positive_roots(&ct(f, n).cartan_matrix()).len(), count, "{f:?}{n}");
        }
    }

    #[test]
    fn exceptional_pairings() {
        for (f, n, i, v) in [
            (Family::E, 6, 1, 16),
            (Family::E, 7, 7, 27),
            (Family::E, 8, 8, 58),
            (Family::F, 4, 4, 16),
            (Family::G, 2, 2, 6),
        ] {
            let d = RootDatum::new(&[ct(f, n)]).unwrap();
            assert_eq!(d.pairing_2rho(&fundamental(&d, i)), v);
        }
    }

    #[test]
    fn classical_pairings_match_closed_forms() {
        for n in 1..=8i32 {
            let d = RootDatum::new(&[ct(Family::A, n as usize)]).unwrap();
            for i in 1..=n {
                assert_eq!(d.pairing_2rho(&fundamental(&d, i as usize)), i * (n + 1 - i));
            }
        }
        for n in 3..=8i32 {
            let d = RootDatum::new(&[ct(Family::B, n as usize)]).unwrap();
            for i in 1..=n {
                assert_eq!(d.pairing_2rho(&fundamental(&d, i as usize)), i * (2 * n - i));
            }
        }
        for n in 2..=8i32 {
            let d = RootDatum::new(&[ct(Family::C, n as usize)]).unwrap();
            for i in 1..=n {
                let want = if i < n { i * (2 * n - i + 1) } else { n * (n + 1) / 2 };
                assert_eq!(d.pairing_2rho(&fundamental(&d, i as usize)), want);
            }
        }
        for n in 4..=8i32 {
            let d = RootDatum::new(&[ct(Family::D, n as usize)]).unwrap();
            for i in 1..=n {
                let want = if i <= n - 2 { i * (2 * n - i - 1) } else { n * (n - 1) / 2 };
                assert_eq!(d.pairing_2rho(&fundamental(&d, i as usize)), want);
            }
        }
    }

    #[test]
    fn affine_diagrams() {
        let d = RootDatum::new(&[ct(Family::C, 2)]).unwrap();
        assert_eq!(d.node_root(Node(0)), &[-2, -1]);
        assert_eq!(d.affine_cartan(Node(0), Node(1)), -1);
        assert_eq!(d.affine_cartan(Node(1), Node(0)), -2);
        assert!(!d.adjacent(Node(0), Node(2)));

        let d = RootDatum::new(&[ct(Family::B, 4)]).unwrap();
        let zero = Node(0);
        let neighbours: Vec<_> = (1..=4).map(Node).filter(|&t| d.adjacent(zero, t)).collect();
        assert_eq!(neighbours, [Node(2)]);

        let d = RootDatum::new(&[ct(Family::A, 1)]).unwrap();
        assert_eq!(d.affine_cartan(Node(0), Node(1)), -2);
        assert_eq!(d.affine_cartan(Node(1), Node(0)), -2);
    }

    #[test]
    fn minuscule() {
        let d = RootDatum::new(&[ct(Family::D, 5)]).unwrap();
        assert_eq!(d.minuscule_nodes(0), [Node(1), Node(4), Node(5)]);
        let d = RootDatum::new(&[ct(Family::C, 3)]).unwrap();
        assert_eq!(d.minuscule_nodes(0), [Node(3)]);
        let d = RootDatum::new(&[ct(Family::E, 8)]).unwrap();
        assert!(d.minuscule_nodes(0).is_empty());
    }

    #[test]
    fn orbit_sizes() {
        let d = RootDatum::new(&[ct(Family::A, 3)]).unwrap();
        assert_eq!(d.weyl_orbit(&[0, 1, 0]).len(), 6);
        assert_eq!(d.weyl_orbit(&[1, 0, 1]).len(), 12);
        let d = RootDatum::new(&[ct(Family::B, 3)]).unwrap();
        assert_eq!(d.weyl_orbit(&[1, 0, 0]).len(), 6);
    }

    #[test]
    fn product_layout() {
        let d = RootDatum::new(&[ct(Family::A, 2), ct(Family::A, 2)]).unwrap();
        assert_eq!(d.node_count(), 6);
        assert_eq!(d.node_base(1), Node(3));
        assert_eq!(d.coordinate(Node(4)), Some(2));
        assert_eq!(d.coordinate(Node(3)), None);
        assert_eq!(d.local_label(Node(5)), 2);
        assert_eq!(d.connected_components(d.all_nodes()).len(), 2);
    }

    #[test]
    fn residual_types() {
        let d = RootDatum::new(&[ct(Family::C, 2)]).unwrap();
        let s = |v: &[u8]| v.iter().map(|&i| Node(i)).collect::<NodeSet>();
        assert_eq!(residual_type(&d, s(&[0, 1])).unwrap().to_string(), "C2");
        let d = RootDatum::new(&[ct(Family::B, 4)]).unwrap();
        assert_eq!(residual_type(&d, s(&[2, 3, 4])).unwrap().to_string(), "B3");
        assert_eq!(residual_type(&d, s(&[0, 1, 2, 3])).unwrap().to_string(), "D4");
        let d = RootDatum::new(&[ct(Family::C, 4)]).unwrap();
        assert_eq!(residual_type(&d, s(&[0, 1, 2])).unwrap().to_string(), "C3");
        assert_eq!(residual_type(&d, s(&[2, 3, 4])).unwrap().to_string(), "C3");
    }
}
