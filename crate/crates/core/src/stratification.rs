//! Representation types, isotropic decompositions and their ext-quivers,
//! and Hasse diagrams of the symplectic leaves.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ade::{mir, AdeType};
use crate::error::{Error, Result};
use crate::graph::{DimVector, WeightedGraph};
use crate::iso::weighted_graph_isomorphic;
use crate::roots::classify_root;
use crate::sigma::{in_sigma, sigma_decompositions, Decomposition};

/// A decomposition `a = Σ n_t β_t` into elements of Σ. Imaginary parts are
/// listed once per occurrence, so `(1,β),(1,β)` and `(2,β)` differ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct RepresentationType {
    pub parts: Vec<(u32, DimVector)>,
    pub leaf_dim: u32,
}

impl fmt::Display for RepresentationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|(n, b)| format!("{n}*{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn part_order(x: &(u32, DimVector), y: &(u32, DimVector)) -> std::cmp::Ordering {
    (Reverse(x.1.height()), Reverse(&x.1), Reverse(x.0)).cmp(&(Reverse(y.1.height()), Reverse(&y.1), Reverse(y.0)))
}

/// Integer partitions of `n`, parts non-increasing.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn expand(g: &WeightedGraph, d: &Decomposition) -> Vec<RepresentationType> {
    let mut acc: Vec<Vec<(u32, DimVector)>> = vec![Vec::new()];
    for (n, b) in d.parts() {
        let p = g.p_unchecked(b.as_slice());
        let options: Vec<Vec<u32>> = if p == 0 { vec![vec![*n]] } else { partitions(*n) };
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |opt| {
                    let mut v = prefix.clone();
                    v.extend(opt.iter().map(|&k| (k, b.clone())));
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|mut parts| {
            parts.sort_by(part_order);
            let leaf_dim = parts.iter().map(|(_, b)| 2 * g.p_unchecked(b.as_slice())).sum::<i64>() as u32;
            RepresentationType { parts, leaf_dim }
        })
        .collect()
}

/// All representation types of `a`, sorted by leaf dimension (largest
/// first), then by parts.
pub fn representation_types(g: &WeightedGraph, a: &DimVector) -> Result<Vec<RepresentationType>> {
    let mut out: Vec<RepresentationType> = sigma_decompositions(g, a)?.iter().flat_map(|d| expand(g, d)).collect();
    out.sort_by(|x, y| (Reverse(x.leaf_dim), &x.parts.len(), &x.parts).cmp(&(Reverse(y.leaf_dim), &y.parts.len(), &y.parts)));
    out.dedup();
    Ok(out)
}

/// The ext-quiver of a list of roots with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtQuiver {
    pub graph: WeightedGraph,
    pub dim: DimVector,
    /// Affine type of the loop-free ext-quiver carrying its minimal root.
    pub recognized_type: Option<AdeType>,
}

/// One vertex per part, `-(β_i, β_j)` edges between distinct parts and
/// `p(β_i)` loops at vertex `i`.
pub fn ext_quiver(g: &WeightedGraph, parts: &[(u32, DimVector)]) -> Result<ExtQuiver> {
    let k = parts.len();
    let mut edges = Vec::new();
    let mut loops = Vec::with_capacity(k);
    for (i, (_, bi)) in parts.iter().enumerate() {
        loops.push(g.p(bi)?.max(0) as u32);
        for (j, (_, bj)) in parts.iter().enumerate().skip(i + 1) {
            let e = -g.euler_form(bi, bj)?;
            if e < 0 {
                return Err(Error::Precondition(format!("parts {bi} and {bj} have positive pairing {}", -e)));
            }
            if e > 0 {
                edges.push((i, j, e as u32));
            }
        }
    }
    let graph = WeightedGraph::new_unconnected(k, &edges, loops)?;
    let dim = DimVector::new(parts.iter().map(|(n, _)| *n as i64).collect());
    let stripped = graph.without_loops();
    let recognized_type = if k > 0 && stripped.is_connected() { recognize_affine_dynkin(&stripped, &dim)? } else { None };
    Ok(ExtQuiver { graph, dim, recognized_type })
}

/// The ADE type `t` with `(g, d)` isomorphic to `mir(t)`, if any.
pub fn recognize_affine_dynkin(g: &WeightedGraph, d: &DimVector) -> Result<Option<AdeType>> {
    let n = g.n_vertices() as u32;
    if n == 0 || d.len() != g.n_vertices() {
        return Ok(None);
    }
    let r = n - 1;
    for t in [AdeType::A(r), AdeType::D(r), AdeType::E(r)] {
        if t.validate().is_err() {
            continue;
        }
        let (mg, md) = mir(t)?;
        if weighted_graph_isomorphic(g, d, &mg, &md)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// A codimension-2 leaf: one isotropic part plus distinct simple roots,
/// whose ext-quiver is affine Dynkin carrying its minimal root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicDecomposition {
    pub isotropic_parts: Vec<DimVector>,
    pub real_parts: Vec<(u32, DimVector)>,
    /// Type of the isotropic part.
    pub delta: AdeType,
    /// Finite type of the ext-quiver.
    pub theta: AdeType,
    pub ext: ExtQuiver,
}

impl IsotropicDecomposition {
    pub fn representation_type(&self, g: &WeightedGraph) -> RepresentationType {
        let mut parts: Vec<(u32, DimVector)> = self.isotropic_parts.iter().map(|b| (1, b.clone())).collect();
        parts.extend(self.real_parts.iter().cloned());
        parts.sort_by(part_order);
        let leaf_dim = self.isotropic_parts.iter().map(|b| 2 * g.p_unchecked(b.as_slice())).sum::<i64>() as u32;
        RepresentationType { parts, leaf_dim }
    }
}

fn support_type(g: &WeightedGraph, b: &DimVector) -> Result<Option<AdeType>> {
    let s = b.support();
    recognize_affine_dynkin(&g.induced(&s), &b.restrict(&s))
}

fn require_p2_sigma(g: &WeightedGraph, a: &DimVector) -> Result<()> {
    if g.p(a)? != 2 || !in_sigma(g, a)? {
        return Err(Error::Precondition(format!("{a} must lie in Σ with p = 2")));
    }
    Ok(())
}

fn isotropic_from_types(g: &WeightedGraph, types: &[RepresentationType]) -> Result<Vec<IsotropicDecomposition>> {
    let mut out = Vec::new();
    for t in types.iter().filter(|t| t.leaf_dim == 2) {
        let (iso, real): (Vec<_>, Vec<_>) = t.parts.iter().cloned().partition(|(_, b)| g.p_unchecked(b.as_slice()) == 1);
        if iso.len() != 1 || iso[0].0 != 1 || real.iter().any(|(_, b)| b.height() != 1) {
            continue;
        }
        let beta = iso[0].1.clone();
        let Some(delta) = support_type(g, &beta)? else { continue };
        let mut parts = vec![(1, beta.clone())];
        parts.extend(real.iter().cloned());
        let ext = ext_quiver(g, &parts)?;
        let Some(theta) = ext.recognized_type else { continue };
        out.push(IsotropicDecomposition { isotropic_parts: vec![beta], real_parts: real, delta, theta, ext });
    }
    out.sort_by(|x, y| (x.delta, x.theta, &x.isotropic_parts).cmp(&(y.delta, y.theta, &y.isotropic_parts)));
    Ok(out)
}

/// All isotropic decompositions of a `p = 2` element of Σ, sorted by
/// `(δ, θ)`.
pub fn isotropic_decompositions(g: &WeightedGraph, a: &DimVector) -> Result<Vec<IsotropicDecomposition>> {
    require_p2_sigma(g, a)?;
    isotropic_from_types(g, &representation_types(g, a)?)
}

/// The `(δ, θ)` pairs of the isotropic decompositions.
pub fn delta_theta_pairs(g: &WeightedGraph, a: &DimVector) -> Result<Vec<(AdeType, AdeType)>> {
    Ok(isotropic_decompositions(g, a)?.into_iter().map(|d| (d.delta, d.theta)).collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum EdgeLabel {
    Type(AdeType),
    /// The `A_1` slice along the diagonal of a symmetric square.
    Diagonal,
    Unlabeled,
}

impl EdgeLabel {
    /// The Kleinian type of the slice, if any.
    pub fn kleinian(self) -> Option<AdeType> {
        match self {
            EdgeLabel::Type(t) => Some(t),
            EdgeLabel::Diagonal => Some(AdeType::A(1)),
            EdgeLabel::Unlabeled => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Type(t) => write!(f, "{t}"),
            EdgeLabel::Diagonal => f.write_str("A1"),
            EdgeLabel::Unlabeled => Ok(()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub nodes: Vec<RepresentationType>,
    /// `(upper, lower, label)` as indices into `nodes`.
    pub edges: Vec<(usize, usize, EdgeLabel)>,
}

/// Hasse diagram of the leaves of a four-dimensional quiver variety.
pub fn hasse_diagram(g: &WeightedGraph, a: &DimVector) -> Result<HasseDiagram> {
    require_p2_sigma(g, a)?;
    let types = representation_types(g, a)?;
    let isos = isotropic_from_types(g, &types)?;
    let top = types
        .iter()
        .find(|t| t.parts.len() == 1 && t.parts[0].0 == 1)
        .cloned()
        .unwrap_or(RepresentationType { parts: vec![(1, a.clone())], leaf_dim: 4 });
    let bottom = types.iter().find(|t| t.leaf_dim == 0).cloned();
    let mut nodes = vec![top];
    let mut edges = Vec::new();
    for d in &isos {
        nodes.push(d.representation_type(g));
        edges.push((0, nodes.len() - 1, EdgeLabel::Type(d.theta)));
    }
    if let Some(bottom) = bottom {
        nodes.push(bottom);
        let b = nodes.len() - 1;
        if isos.is_empty() {
            edges.push((0, b, EdgeLabel::Unlabeled));
        }
        for (k, d) in isos.iter().enumerate() {
            edges.push((k + 1, b, EdgeLabel::Type(d.delta)));
        }
    }
    Ok(HasseDiagram { nodes, edges })
}

/// The diamond of leaves of `Sym^2` of the Kleinian singularity of type `t`.
pub fn sym2_hasse(t: AdeType) -> Result<HasseDiagram> {
    let t = t.validate()?;
    if t.is_trivial() {
        return Err(Error::Precondition("the symmetric square needs a nontrivial Kleinian type".into()));
    }
    let (g, beta) = mir(t)?;
    let alpha = beta.scaled(2);
    let types = representation_types(&g, &alpha)?;
    let find = |pred: &dyn Fn(&RepresentationType) -> bool| {
        types.iter().find(|r| pred(r)).cloned().ok_or_else(|| Error::Precondition("missing representation type".into()))
    };
    let top = find(&|r| r.parts == vec![(1, beta.clone()), (1, beta.clone())])?;
    let left = find(&|r| r.leaf_dim == 2 && r.parts.iter().any(|p| *p == (1, beta.clone())))?;
    let right = find(&|r| r.parts == vec![(2, beta.clone())])?;
    let bottom = find(&|r| r.leaf_dim == 0)?;
    let gamma = EdgeLabel::Type(t);
    Ok(HasseDiagram {
        nodes: vec![top, left, right, bottom],
        edges: vec![(0, 1, gamma), (0, 2, EdgeLabel::Diagonal), (1, 3, gamma), (2, 3, gamma)],
    })
}

impl HasseDiagram {
    pub fn dims(&self) -> Vec<u32> {
        self.nodes.iter().map(|n| n.leaf_dim).collect()
    }

    /// Labelled shape up to relabelling nodes: sorted `(dim, dim, label)`
    /// triples.
    pub fn shape(&self) -> Vec<(u32, u32, Option<AdeType>)> {
        let mut s: Vec<_> =
            self.edges.iter().map(|&(u, l, lab)| (self.nodes[u].leaf_dim, self.nodes[l].leaf_dim, lab.kleinian())).collect();
        s.sort();
        s
    }

    /// Same shape and the same multiset of node dimensions.
    pub fn equivalent(&self, other: &HasseDiagram) -> bool {
        let mut d1 = self.dims();
        let mut d2 = other.dims();
        d1.sort();
        d2.sort();
        d1 == d2 && self.shape() == other.shape()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=TB;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"L{} {}\"];\n", n.leaf_dim, n));
        }
        for (u, l, lab) in &self.edges {
            match lab {
                EdgeLabel::Unlabeled => s.push_str(&format!("  n{u} -> n{l};\n")),
                _ => s.push_str(&format!("  n{u} -> n{l} [label=\"{lab}\"];\n")),
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("node {i}: dim {} : {}\n", n.leaf_dim, n));
        }
        for (u, l, lab) in &self.edges {
            match lab {
                EdgeLabel::Unlabeled => s.push_str(&format!("edge {u} -> {l}\n")),
                _ => s.push_str(&format!("edge {u} -> {l} : {lab}\n")),
            }
        }
        s
    }
}

/// Groups instances by their multiset of `(δ, θ)` pairs together with the
/// dimensions of their leaves. Blocks are lists of indices, sorted.
pub fn distinct_by_invariants(instances: &[(WeightedGraph, DimVector)]) -> Result<Vec<Vec<usize>>> {
    type Key = (Vec<(AdeType, AdeType)>, Vec<u32>);
    let mut blocks: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    for (k, (g, a)) in instances.iter().enumerate() {
        let mut pairs = delta_theta_pairs(g, a)?;
        pairs.sort();
        let mut dims: Vec<u32> = representation_types(g, a)?.iter().map(|t| t.leaf_dim).collect();
        dims.sort();
        blocks.entry((pairs, dims)).or_default().push(k);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    Ok(out)
}

/// Whether `b` is a positive root whose support is an affine Dynkin diagram
/// carrying `b` as its minimal root.
pub fn is_minimal_imaginary(g: &WeightedGraph, b: &DimVector) -> Result<bool> {
    Ok(classify_root(g, b).is_imaginary() && support_type(g, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyName};

    fn pairs(f: &str) -> Vec<(AdeType, AdeType)> {
        let (g, a) = build_family(f.parse().unwrap()).unwrap();
        delta_theta_pairs(&g, &a).unwrap()
    }

    #[test]
    fn rtypes_of_double_affine_a1() {
        let (g, d) = mir(AdeType::A(1)).unwrap();
        let types = representation_types(&g, &d.scaled(2)).unwrap();
        let dims: Vec<u32> = types.iter().map(|t| t.leaf_dim).collect();
        assert_eq!(dims, [4, 2, 2, 0]);
        let types = representation_types(&g, &d).unwrap();
        assert_eq!(types.iter().map(|t| t.leaf_dim).collect::<Vec<_>>(), [2, 0]);
    }

    #[test]
    fn recognition_examples() {
        let (g, d) = mir(AdeType::A(1)).unwrap();
        assert_eq!(recognize_affine_dynkin(&g, &d).unwrap(), Some(AdeType::A(1)));
        let (g, d) = mir(AdeType::D(4)).unwrap();
        assert_eq!(recognize_affine_dynkin(&g, &d).unwrap(), Some(AdeType::D(4)));
        let path = WeightedGraph::new(2, &[(0, 1, 1)], vec![0, 0]).unwrap();
        assert_eq!(recognize_affine_dynkin(&path, &DimVector::new(vec![1, 1])).unwrap(), None);
        let (g, d) = mir(AdeType::A(0)).unwrap();
        assert_eq!(recognize_affine_dynkin(&g, &d).unwrap(), Some(AdeType::A(0)));
    }

    #[test]
    fn ext_quiver_examples() {
        let (g, b) = mir(AdeType::D(4)).unwrap();
        let e = ext_quiver(&g, &[(2, b.clone())]).unwrap();
        assert_eq!((e.graph.loops(0), e.dim.as_slice()), (1, &[2][..]));
        let e = ext_quiver(&g, &[(1, b.clone()), (1, b)]).unwrap();
        assert_eq!(e.graph.edge_mult(0, 1), 0);
        assert_eq!(e.graph.loop_vector(), &[1, 1]);
    }

    #[test]
    fn table_rows() {
        use AdeType::*;
        assert_eq!(pairs("I(E7,2)"), [(A(7), E(6)), (E(7), A(1))]);
        assert_eq!(pairs("III(D4,1)"), vec![(D(4), A(1)); 5]);
        assert!(pairs("I(1,1,1)").is_empty());
        assert_eq!(pairs("I(D4,0)"), [(A(1), A(3))]);
    }

    #[test]
    fn hasse_examples() {
        let (g, a) = build_family(FamilyName::ILmn(1, 1, 1)).unwrap();
        let h = hasse_diagram(&g, &a).unwrap();
        assert_eq!((h.nodes.len(), h.edges.len()), (2, 1));
        let (g, a) = build_family(FamilyName::IIIb).unwrap();
        let h = hasse_diagram(&g, &a).unwrap();
        assert_eq!(h.dims(), [4, 2, 0]);
        assert_eq!(h.edges, [(0, 1, EdgeLabel::Type(AdeType::D(10))), (1, 2, EdgeLabel::Type(AdeType::E(8)))]);
        let s = sym2_hasse(AdeType::E(8)).unwrap();
        assert_eq!(s.dims(), [4, 2, 2, 0]);
    }
}
