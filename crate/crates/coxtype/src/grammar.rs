//! Text forms of data, automorphisms and elements.
//!
//! Datum: `TYPES:SIGMA:mu=[..]:K={..}[:orient=..]`, for example
//! `A3:id:mu=[0,1,0]:K={1,2}` or
//! `A3xA3:swap:mu=[1,0,0];[0,0,1]:K={1,2,3};{1,2,3}`. Coweights and level
//! sets may be given once per component in local labels, or once for the
//! whole datum in global labels. `B2` is accepted and stored as `C2`.
//!
//! Automorphisms are products `a*b` (meaning `a ∘ b`) of `id`, `sigma0`,
//! `rho<i>`, `Ad(<omega>)`, `swap` and `perm[..]`. Length-zero elements are
//! `1`, `tau<i>`, or `(tau1,1)` per component.

use std::sync::Arc;

use coxtype_core::smoothness::Orientation;
use coxtype_core::weyl::OmegaId;
use coxtype_core::{AffineWeylGroup, CartanType, CoxeterDatum, DiagramAut, Element, Family, Node, NodeSet, RootDatum};

#[derive(Debug, thiserror::Error)]
pub enum GrammarError {
    #[error("parse error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid datum: {0}")]
    Semantic(#[from] coxtype_core::Error),
}

fn syntax<T>(column: usize, message: impl Into<String>) -> Result<T, GrammarError> {
    Err(GrammarError::Syntax { column: column + 1, message: message.into() })
}

/// A parsed datum and its optional orientation.
#[derive(Clone, Debug)]
pub struct ParsedDatum {
    pub datum: CoxeterDatum,
    pub orientation: Option<Orientation>,
}

/// Component layout used to translate local labels.
struct Layout {
    types: Vec<CartanType>,
    /// Components written as `B2`, whose labels 1 and 2 are swapped.
    from_b2: Vec<bool>,
}

impl Layout {
    fn local_label(&self, c: usize, label: usize) -> usize {
        if self.from_b2[c] {
            CartanType::b2_to_c2_label(label)
        } else {
            label
        }
    }
}

fn parse_types(text: &str, start: usize) -> Result<Layout, GrammarError> {
    let mut types = Vec::new();
    let mut from_b2 = Vec::new();
    let mut offset = start;
    for part in text.split('x') {
        let mut chars = part.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return syntax(offset, format!("expected a Cartan type, found {part:?}")),
        };
        let Ok(rank) = chars.as_str().parse::<usize>() else {
            return syntax(offset + 1, format!("expected a rank after {}", family.letter()));
        };
        let b2 = family == Family::B && rank == 2;
        types.push(CartanType::new(if b2 { Family::C } else { family }, rank)?);
        from_b2.push(b2);
        offset += part.len() + 1;
    }
    Ok(Layout { types, from_b2 })
}

fn parse_list<T: std::str::FromStr>(text: &str, open: char, close: char, start: usize) -> Result<Vec<T>, GrammarError> {
    let Some(inner) = text.strip_prefix(open).and_then(|t| t.strip_suffix(close)) else {
        return syntax(start, format!("expected {open}...{close}, found {text:?}"));
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = start + 1;
    for item in inner.split(',') {
        match item.trim().parse() {
            Ok(v) => out.push(v),
            Err(_) => return syntax(offset, format!("expected an integer, found {item:?}")),
        }
        offset += item.len() + 1;
    }
    Ok(out)
}

/// Splits `a;b;c` into blocks with their column offsets.
fn blocks(text: &str, start: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut offset = start;
    for b in text.split(';') {
        out.push((b, offset));
        offset += b.len() + 1;
    }
    out
}

fn parse_mu(layout: &Layout, d: &RootDatum, text: &str, start: usize) -> Result<Vec<i32>, GrammarError> {
    let parts = blocks(text, start);
    let comps = layout.types.len();
    let mut mu = vec![0; d.rank()];
    if parts.len() == comps {
        for (c, &(b, at)) in parts.iter().enumerate() {
            let values: Vec<i32> = parse_list(b, '[', ']', at)?;
            let range = d.coord_range(c);
            if values.len() != range.len() {
                return syntax(at, format!("component {} needs {} coefficients", c + 1, range.len()));
            }
            for (k, v) in values.into_iter().enumerate() {
                mu[range.start + layout.local_label(c, k + 1) - 1] = v;
            }
        }
    } else if parts.len() == 1 {
        let values: Vec<i32> = parse_list(parts[0].0, '[', ']', start)?;
        if values.len() != d.rank() {
            return syntax(start, format!("expected {} coefficients", d.rank()));
        }
        mu = values;
    } else {
        return syntax(start, format!("expected 1 or {comps} coweight blocks"));
    }
    Ok(mu)
}

fn parse_nodes(layout: &Layout, d: &RootDatum, text: &str, start: usize) -> Result<NodeSet, GrammarError> {
    let parts = blocks(text, start);
    let comps = layout.types.len();
    let mut set = NodeSet::EMPTY;
    if parts.len() == comps {
        for (c, &(b, at)) in parts.iter().enumerate() {
            let labels: Vec<usize> = parse_list(b, '{', '}', at)?;
            for l in labels {
                if l > layout.types[c].rank() {
                    return syntax(at, format!("node {l} out of range for {}", layout.types[c]));
                }
                set.insert(d.node(c, layout.local_label(c, l)));
            }
        }
    } else if parts.len() == 1 {
        for l in parse_list::<usize>(parts[0].0, '{', '}', start)? {
            if l >= d.node_count() {
                return syntax(start, format!("node {l} out of range"));
            }
            set.insert(Node(l as u8));
        }
    } else {
        return syntax(start, format!("expected 1 or {comps} node blocks"));
    }
    Ok(set)
}

fn parse_orientation(text: &str, start: usize) -> Result<Orientation, GrammarError> {
    match text {
        "echelon" => Ok(Orientation::Echelon),
        "dual" => Ok(Orientation::Dual),
        _ => match text.strip_prefix("long=") {
            Some(rest) => {
                let labels: Vec<u8> = parse_list(rest, '{', '}', start + 5)?;
                Ok(Orientation::LongNodes(labels.into_iter().map(Node).collect()))
            }
            None => syntax(start, format!("unknown orientation {text:?}")),
        },
    }
}

/// Parses an orientation given on its own: `echelon`, `dual` or `long={..}`.
pub fn parse_orientation_spec(text: &str) -> Result<Orientation, GrammarError> {
    parse_orientation(text.trim(), 0)
}

/// Parses a length-zero element: `1`, `tau<i>` or `(x,y,..)` per component.
pub fn parse_omega(group: &AffineWeylGroup, text: &str) -> Result<OmegaId, GrammarError> {
    parse_omega_at(group, None, text, 0)
}

fn parse_omega_at(group: &AffineWeylGroup, layout: Option<&Layout>, text: &str, start: usize) -> Result<OmegaId, GrammarError> {
    let comps = group.datum().components().len();
    let items: Vec<&str> = match text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(inner) => inner.split(',').map(str::trim).collect(),
        None => vec![text],
    };
    if items.len() != comps {
        return syntax(start, format!("expected {comps} length-zero labels, found {text:?}"));
    }
    let mut label = Vec::with_capacity(comps);
    for (c, item) in items.iter().enumerate() {
        let i = match *item {
            "1" => 0,
            _ => match item.strip_prefix("tau").and_then(|i| i.parse::<usize>().ok()) {
                Some(i) => layout.map_or(i, |l| l.local_label(c, i)),
                None => return syntax(start, format!("expected 1 or tau<i>, found {item:?}")),
            },
        };
        label.push(i as u8);
    }
    group
        .omega_by_label(&label)
        .map_or_else(|| syntax(start, format!("no length-zero element {text}")), Ok)
}

pub fn render_omega(group: &AffineWeylGroup, omega: OmegaId) -> String {
    let items: Vec<String> = group
        .omega_label(omega)
        .iter()
        .map(|&i| if i == 0 { "1".to_string() } else { format!("tau{i}") })
        .collect();
    if items.len() == 1 {
        items.into_iter().next().expect("one component")
    } else {
        format!("({})", items.join(","))
    }
}

/// The finite diagram flip fixing the affine node, on one component.
fn varsigma0_local(t: CartanType) -> Option<Vec<usize>> {
    let n = t.rank();
    let mut p: Vec<usize> = (0..=n).collect();
    match t.family() {
        Family::A if n >= 2 => (1..=n).for_each(|i| p[i] = n + 1 - i),
        Family::D => p.swap(n - 1, n),
        Family::E if n == 6 => {
            p.swap(1, 6);
            p.swap(3, 5);
        }
        _ => return None,
    }
    Some(p)
}

fn parse_sigma_term(group: &AffineWeylGroup, layout: &Layout, term: &str, start: usize) -> Result<DiagramAut, GrammarError> {
    let d = group.datum();
    let comps = d.components().len();
    match term {
        "id" => return Ok(group.identity_aut()),
        "sigma0" | "varsigma0" => {
            let mut perm: Vec<Node> = Vec::with_capacity(d.node_count());
            for (c, &t) in layout.types.iter().enumerate() {
                let Some(local) = varsigma0_local(t) else {
                    return syntax(start, format!("sigma0 is not defined for {t}"));
                };
                perm.extend(local.into_iter().map(|l| d.node(c, l)));
            }
            return Ok(group.automorphism(&perm)?);
        }
        "swap" | "1sigma0" => {
            if comps < 2 || layout.types.iter().any(|&t| t != layout.types[0]) {
                return syntax(start, "swap needs at least two isomorphic components");
            }
            let perm: Vec<Node> = d.all_nodes().iter().map(|s| d.node((d.component_of(s) + 1) % comps, d.local_label(s))).collect();
            return Ok(group.automorphism(&perm)?);
        }
        _ => {}
    }
    if let Some(i) = term.strip_prefix("rho") {
        let Ok(i) = i.parse::<usize>() else { return syntax(start + 3, "expected rho<i>") };
        if comps != 1 || layout.types[0].family() != Family::A {
            return syntax(start, "rho<i> is only defined for a single type A component");
        }
        let Some(omega) = group.omega_by_label(&[i as u8]) else {
            return syntax(start, format!("no rotation by {i}"));
        };
        return Ok(group.inner_aut(omega));
    }
    if let Some(inner) = term.strip_prefix("Ad(").and_then(|t| t.strip_suffix(')')) {
        return Ok(group.inner_aut(parse_omega_at(group, Some(layout), inner, start + 3)?));
    }
    if let Some(rest) = term.strip_prefix("perm") {
        let images: Vec<u8> = parse_list(rest, '[', ']', start + 4)?;
        return Ok(group.automorphism(&images.into_iter().map(Node).collect::<Vec<_>>())?);
    }
    syntax(start, format!("unknown automorphism {term:?}"))
}

fn parse_sigma_with(group: &AffineWeylGroup, layout: &Layout, text: &str, start: usize) -> Result<DiagramAut, GrammarError> {
    let mut result = group.identity_aut();
    let mut offset = start;
    for term in text.split('*') {
        let a = parse_sigma_term(group, layout, term.trim(), offset)?;
        result = group.compose(&result, &a);
        offset += term.len() + 1;
    }
    Ok(result)
}

/// Parses an automorphism of the diagram of `group`.
pub fn parse_sigma(group: &AffineWeylGroup, text: &str) -> Result<DiagramAut, GrammarError> {
    let types = group.datum().components().to_vec();
    let layout = Layout { from_b2: vec![false; types.len()], types };
    parse_sigma_with(group, &layout, text, 0)
}

/// Short name of `sigma`, falling back to `perm[..]`.
pub fn render_sigma(group: &AffineWeylGroup, sigma: &DiagramAut) -> String {
    let d = group.datum();
    let comps = d.components();
    let mut names = vec!["id".to_string()];
    let inner: Vec<String> = group
        .omega_ids()
        .filter(|&w| w != OmegaId::IDENTITY)
        .map(|w| {
            let label = group.omega_label(w);
            if comps.len() == 1 && comps[0].family() == Family::A {
                format!("rho{}", label[0])
            } else {
                format!("Ad({})", render_omega(group, w))
            }
        })
        .collect();
    names.extend(inner.iter().cloned());
    if comps.len() == 1 && varsigma0_local(comps[0]).is_some() {
        names.push("sigma0".into());
        names.extend(inner.iter().map(|a| format!("{a}*sigma0")));
    }
    if comps.len() >= 2 && comps.iter().all(|&t| t == comps[0]) {
        names.push("swap".into());
        names.extend(inner.iter().map(|a| format!("{a}*swap")));
        if varsigma0_local(comps[0]).is_some() {
            names.push("sigma0*swap".into());
            names.extend(inner.iter().map(|a| format!("{a}*sigma0*swap")));
        }
    }
    for name in names {
        if parse_sigma(group, &name).is_ok_and(|a| a.perm() == sigma.perm()) {
            return name;
        }
    }
    let images: Vec<String> = sigma.perm().iter().map(|s| s.0.to_string()).collect();
    format!("perm[{}]", images.join(","))
}

/// Parses the datum grammar.
pub fn parse_datum(text: &str) -> Result<ParsedDatum, GrammarError> {
    let mut fields = Vec::new();
    let mut offset = 0;
    for f in text.trim().split(':') {
        fields.push((f, offset));
        offset += f.len() + 1;
    }
    if fields.len() < 4 || fields.len() > 5 {
        return syntax(0, "expected TYPES:SIGMA:mu=[..]:K={..}[:orient=..]");
    }
    let layout = parse_types(fields[0].0, fields[0].1)?;
    let group = Arc::new(AffineWeylGroup::new(RootDatum::new(&layout.types)?));
    let sigma = parse_sigma_with(&group, &layout, fields[1].0, fields[1].1)?;
    let (mu_text, mu_at) = fields[2];
    let Some(mu_text) = mu_text.strip_prefix("mu=") else { return syntax(mu_at, "expected mu=") };
    let mu = parse_mu(&layout, group.datum(), mu_text, mu_at + 3)?;
    let (k_text, k_at) = fields[3];
    let Some(k_text) = k_text.strip_prefix("K=") else { return syntax(k_at, "expected K=") };
    let k = parse_nodes(&layout, group.datum(), k_text, k_at + 2)?;
    let orientation = match fields.get(4) {
        Some(&(f, at)) => match f.strip_prefix("orient=") {
            Some(spec) => Some(parse_orientation(spec, at + 7)?),
            None => return syntax(at, "expected orient="),
        },
        None => None,
    };
    Ok(ParsedDatum { datum: CoxeterDatum::new(group, sigma, mu, k)?, orientation })
}

pub fn render_types(group: &AffineWeylGroup) -> String {
    group.datum().components().iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
}

pub fn render_mu(group: &AffineWeylGroup, mu: &[i32]) -> String {
    let d = group.datum();
    (0..d.components().len())
        .map(|c| {
            let v: Vec<String> = mu[d.coord_range(c)].iter().map(|x| x.to_string()).collect();
            format!("[{}]", v.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_nodes(group: &AffineWeylGroup, set: NodeSet) -> String {
    let d = group.datum();
    (0..d.components().len())
        .map(|c| {
            let v: Vec<String> =
                set.intersection(d.component_nodes(c)).iter().map(|s| d.local_label(s).to_string()).collect();
            format!("{{{}}}", v.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_orientation(o: &Orientation) -> String {
    o.label()
}

pub fn render_datum(datum: &CoxeterDatum, orientation: Option<&Orientation>) -> String {
    let g = datum.group();
    let mut out = format!(
        "{}:{}:mu={}:K={}",
        render_types(g),
        render_sigma(g, datum.sigma()),
        render_mu(g, datum.mu()),
        render_nodes(g, datum.parahoric())
    );
    if let Some(o) = orientation {
        out.push_str(":orient=");
        out.push_str(&render_orientation(o));
    }
    out
}

/// `s0 s1 s2 . tau1`; the identity is `1`.
pub fn render_element(group: &AffineWeylGroup, x: &Element) -> String {
    let (word, omega) = group.reduced_word(x);
    let mut out = if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|s| format!("s{}", s.0)).collect::<Vec<_>>().join(" ")
    };
    if omega != OmegaId::IDENTITY {
        out.push_str(" . ");
        out.push_str(&render_omega(group, omega));
    }
    out
}

/// Like [`render_element`] with descending runs of three or more letters
/// written as `s[a,b] = s_a s_{a−1} ⋯ s_b`. In a single type A component
/// `s_n` may stand for `s_0`.
pub fn render_element_contracted(group: &AffineWeylGroup, x: &Element) -> String {
    let (word, omega) = group.reduced_word(x);
    let d = group.datum();
    let wrap = (d.components().len() == 1 && d.components()[0].family() == Family::A).then(|| d.node_count() as i32);
    let value = |s: Node, next: Option<Node>| -> i32 {
        match (wrap, next) {
            (Some(n), Some(t)) if s.0 == 0 && t.0 as i32 == n - 1 => n,
            _ => s.0 as i32,
        }
    };
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i + 1;
        while j < word.len() && word[j].0 as i32 == value(word[j - 1], word.get(j).copied()) - 1 {
            j += 1;
        }
        if j - i >= 3 {
            parts.push(format!("s[{},{}]", value(word[i], word.get(i + 1).copied()), word[j - 1].0));
        } else {
            parts.extend(word[i..j].iter().map(|s| format!("s{}", s.0)));
        }
        i = j;
    }
    let mut out = if parts.is_empty() { "1".to_string() } else { parts.join(" ") };
    if omega != OmegaId::IDENTITY {
        out.push_str(" . ");
        out.push_str(&render_omega(group, omega));
    }
    out
}

/// Parses `s0 s1 . tau1`, `1`, `1 . tau1` or `tau1`.
pub fn parse_element(group: &AffineWeylGroup, text: &str) -> Result<Element, GrammarError> {
    let (word_text, omega_text) = match text.split_once('.') {
        Some((w, o)) => (w.trim(), Some(o.trim())),
        None if text.trim().starts_with("tau") || text.trim().starts_with('(') => ("1", Some(text.trim())),
        None => (text.trim(), None),
    };
    let omega = match omega_text {
        Some(o) => parse_omega_at(group, None, o, text.find('.').map_or(0, |p| p + 1))?,
        None => OmegaId::IDENTITY,
    };
    let mut word = Vec::new();
    if word_text != "1" {
        for tok in word_text.split_whitespace() {
            match tok.strip_prefix('s').and_then(|i| i.parse::<u8>().ok()) {
                Some(i) if (i as usize) < group.datum().node_count() => word.push(Node(i)),
                _ => return syntax(text.find(tok).unwrap_or(0), format!("expected s<i>, found {tok:?}")),
            }
        }
    }
    Ok(group.from_word(&word, omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxtype_core::classifier::sweep::classify_sweep;

    fn nodes(ns: &[u8]) -> NodeSet {
        ns.iter().map(|&i| Node(i)).collect()
    }

    #[test]
    fn parses_documented_examples() {
        let p = parse_datum("A3:id:mu=[0,1,0]:K={1,2}").unwrap();
        assert_eq!(p.datum.mu(), &[0, 1, 0]);
        assert_eq!(p.datum.parahoric(), nodes(&[1, 2]));
        assert!(p.datum.sigma().is_identity());

        let p = parse_datum("C2:Ad(tau2):mu=[0,1]:K={1}").unwrap();
        assert_eq!(p.datum.sigma().perm(), &[Node(2), Node(1), Node(0)]);

        let p = parse_datum("A3xA3:swap:mu=[1,0,0];[0,0,1]:K={1,2,3};{1,2,3}").unwrap();
        assert_eq!(p.datum.mu(), &[1, 0, 0, 0, 0, 1]);
        assert_eq!(p.datum.parahoric(), nodes(&[1, 2, 3, 5, 6, 7]));
    }

    #[test]
    fn rejects_central_coweight() {
        assert!(matches!(
            parse_datum("A3:id:mu=[0,0,0]:K={}"),
            Err(GrammarError::Semantic(coxtype_core::Error::CentralComponent))
        ));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let Err(GrammarError::Syntax { column, .. }) = parse_datum("A3:id:mu=[0,x,0]:K={}") else { panic!() };
        assert_eq!(column, 13);
        assert!(matches!(parse_datum("A3:id:mu=[0,1,0]"), Err(GrammarError::Syntax { column: 1, .. })));
        assert!(matches!(parse_datum("Q3:id:mu=[1]:K={}"), Err(GrammarError::Syntax { column: 1, .. })));
        assert!(matches!(parse_datum("A3:wobble:mu=[1,0,0]:K={}"), Err(GrammarError::Syntax { column: 4, .. })));
    }

    #[test]
    fn b2_is_relabelled_as_c2() {
        let b = parse_datum("B2:Ad(tau1):mu=[1,0]:K={0,1}").unwrap().datum;
        let c = parse_datum("C2:Ad(tau2):mu=[0,1]:K={0,2}").unwrap().datum;
        assert_eq!(render_datum(&b, None), render_datum(&c, None));
        assert_eq!(b.sigma().perm(), c.sigma().perm());
    }

    #[test]
    fn rotation_moves_zero_forward() {
        let g = AffineWeylGroup::new(RootDatum::new(&[CartanType::new(Family::A, 3).unwrap()]).unwrap());
        let rho1 = parse_sigma(&g, "rho1").unwrap();
        assert_eq!(rho1.image(Node(0)), Node(1));
        assert_eq!(render_sigma(&g, &rho1), "rho1");
        let s = parse_sigma(&g, "sigma0").unwrap();
        assert_eq!(s.perm(), &[Node(0), Node(3), Node(2), Node(1)]);
    }

    #[test]
    fn orientation_field() {
        let p = parse_datum("C3:id:mu=[1,0,0]:K={1,2}:orient=long={0,2}").unwrap();
        assert_eq!(p.orientation, Some(Orientation::LongNodes(nodes(&[0, 2]))));
        let text = render_datum(&p.datum, p.orientation.as_ref());
        assert_eq!(text, "C3:id:mu=[1,0,0]:K={1,2}:orient=long={0,2}");
    }

    #[test]
    fn round_trip_on_sweep_cells() {
        for row in classify_sweep(5, 40).unwrap() {
            for &k in &row.passing {
                let d = row.datum().with_parahoric(k).unwrap();
                let text = render_datum(&d, None);
                let back = parse_datum(&text).unwrap().datum;
                assert_eq!(back.group().datum().components(), d.group().datum().components(), "{text}");
                assert_eq!(back.sigma().perm(), d.sigma().perm(), "{text}");
                assert_eq!(back.mu(), d.mu(), "{text}");
                assert_eq!(back.parahoric(), d.parahoric(), "{text}");
                assert_eq!(render_datum(&back, None), text);
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let d = parse_datum("C2:Ad(tau2):mu=[0,1]:K={0,2}").unwrap().datum;
        let g = d.group();
        for text in ["1", "s1 . tau2", "s1 s2 . tau2", "tau2", "s0 s1 s2 s1"] {
            let x = parse_element(g, text).unwrap();
            let back = parse_element(g, &render_element(g, &x)).unwrap();
            assert_eq!(back, x, "{text}");
        }
        assert_eq!(render_element(g, &parse_element(g, "tau2").unwrap()), "1 . tau2");
    }

    #[test]
    fn contracted_words() {
        let g = AffineWeylGroup::new(RootDatum::new(&[CartanType::new(Family::A, 4).unwrap()]).unwrap());
        let x = parse_element(&g, "s3 s2 s1 s4").unwrap();
        assert_eq!(render_element(&g, &x), "s3 s2 s1 s4");
        assert_eq!(render_element_contracted(&g, &x), "s[3,1] s4");
        let y = parse_element(&g, "s0 s4 s3").unwrap();
        assert_eq!(render_element_contracted(&g, &y), "s[5,3]");
    }
}
