//! Brute-force classification of `p = 2` vectors in the fundamental set,
//! matching against the named families, and the balancing lemmas as
//! predicates.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ade::{mir, AdeType};
use crate::error::{Error, Result};
use crate::family::{build_family, FamilyName, TypeTag};
use crate::graph::{DimVector, GraphBuilder, WeightedGraph};
use crate::iso::{canonical_form, CanonicalForm, DEFAULT_ISO_LIMIT};

/// Default cap on edge-assignment search nodes for the enumeration.
pub const DEFAULT_SEARCH_LIMIT: u64 = 2_000_000_000;

/// The unbalanced vertices of a `p = 2` vector in the fundamental set, as
/// `(vertex, weight, balance)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct UnbalancedSignature {
    pub type_tag: TypeTag,
    pub unbalanced: Vec<(usize, i64, i64)>,
}

/// Reads off the signature; `None` unless `a` has one of the three patterns
/// and every other vertex is balanced.
pub fn unbalanced_signature(g: &WeightedGraph, a: &DimVector) -> Result<Option<UnbalancedSignature>> {
    let b = g.balances(a)?;
    let unbalanced: Vec<(usize, i64, i64)> =
        (0..g.n_vertices()).filter(|&i| b[i] != 0).map(|i| (i, a[i], b[i])).collect();
    let tag = match unbalanced.as_slice() {
        [(_, 1, -1), (_, 1, -1)] => TypeTag::I,
        [(_, 1, -2)] => TypeTag::II,
        [(_, 2, -1)] => TypeTag::III,
        _ => return Ok(None),
    };
    Ok(Some(UnbalancedSignature { type_tag: tag, unbalanced }))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassifiedVector {
    pub graph: WeightedGraph,
    pub dim: DimVector,
    /// `None` when no named family matches.
    pub family: Option<FamilyName>,
    pub signature: UnbalancedSignature,
}

// ---------------------------------------------------------------------------
// Balancing lemmas

fn check_vertex(g: &WeightedGraph, i: usize) -> Result<()> {
    if i >= g.n_vertices() {
        return Err(Error::VertexOutOfRange(i));
    }
    Ok(())
}

fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// The pruning check `a_j <= ceil(a_i / 2)  =>  (a, e_j) <= 0` for adjacent
/// `i, j`.
pub fn half_lemma_ok(g: &WeightedGraph, a: &DimVector, i: usize, j: usize) -> Result<bool> {
    check_vertex(g, i)?;
    check_vertex(g, j)?;
    if g.edge_mult(i, j) == 0 {
        return Err(Error::Precondition(format!("vertices {i} and {j} are not adjacent")));
    }
    let bj = g.vertex_balance(a, j)?;
    Ok(a[j] > ceil_half(a[i]) || bj <= 0)
}

/// The strict form: `a_j < ceil(a_i / 2)` forces `(a, e_j) < 0` at a loopfree
/// `j`. Holds for every nonnegative vector.
pub fn half_lemma_strict(g: &WeightedGraph, a: &DimVector, i: usize, j: usize) -> Result<bool> {
    check_vertex(g, i)?;
    check_vertex(g, j)?;
    if g.edge_mult(i, j) == 0 {
        return Err(Error::Precondition(format!("vertices {i} and {j} are not adjacent")));
    }
    let bj = g.vertex_balance(a, j)?;
    Ok(!g.is_loopfree(j) || a[j] >= ceil_half(a[i]) || bj < 0)
}

/// Branching bound at a balanced `j` next to `i`: with `n` further simple
/// neighbours, all balanced, `a_i <= 2 a_j - n ceil(a_j / 2)` and `n <= 3`.
/// `None` when the hypotheses fail.
pub fn branch_bound(g: &WeightedGraph, a: &DimVector, i: usize, j: usize) -> Result<Option<bool>> {
    check_vertex(g, i)?;
    check_vertex(g, j)?;
    let b = g.balances(a)?;
    if g.edge_mult(i, j) != 1 || b[j] != 0 || !g.is_loopfree(j) {
        return Ok(None);
    }
    let others: Vec<(usize, u32)> = g.neighbors(j).filter(|&(k, _)| k != i).collect();
    if others.iter().any(|&(k, m)| m != 1 || b[k] != 0 || !g.is_loopfree(k)) {
        return Ok(None);
    }
    let n = others.len() as i64;
    Ok(Some(n <= 3 && a[i] <= 2 * a[j] - n * ceil_half(a[j])))
}

/// A chain `i, v_1, v_2, ...` of balanced vertices whose weights drop by a
/// constant `step` from an unbalanced start.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecreasingChain {
    pub start: usize,
    pub step: i64,
    pub vertices: Vec<usize>,
    /// The chain ends at a vertex with no further neighbour.
    pub terminated: bool,
}

/// All maximal constant-step decreasing balanced chains leaving an
/// unbalanced vertex along a simple edge.
pub fn decreasing_chains(g: &WeightedGraph, a: &DimVector) -> Result<Vec<DecreasingChain>> {
    let b = g.balances(a)?;
    let mut out = Vec::new();
    for i in (0..g.n_vertices()).filter(|&i| b[i] != 0) {
        for (j, m) in g.neighbors(i) {
            let step = a[i] - a[j];
            if m != 1 || b[j] != 0 || step <= 0 || !g.is_loopfree(j) {
                continue;
            }
            let mut vertices = vec![j];
            let (mut prev, mut cur) = (i, j);
            let terminated = loop {
                let rest: Vec<(usize, u32)> = g.neighbors(cur).filter(|&(k, _)| k != prev).collect();
                match rest.as_slice() {
                    [] => break true,
                    [(k, 1)] if b[*k] == 0 && a[*k] == a[cur] - step && g.is_loopfree(*k) => {
                        vertices.push(*k);
                        prev = cur;
                        cur = *k;
                    }
                    _ => break false,
                }
            };
            out.push(DecreasingChain { start: i, step, vertices, terminated });
        }
    }
    Ok(out)
}

/// Every terminated decreasing chain has a step dividing its start weight,
/// and every continued one satisfies the length bound.
pub fn stepdown_holds(g: &WeightedGraph, a: &DimVector) -> Result<bool> {
    Ok(decreasing_chains(g, a)?.iter().all(|c| {
        let ai = a[c.start];
        let divides = !c.terminated || ai % c.step == 0;
        let long_enough = c.vertices.len() < 2 || ai >= 3 * c.step + (c.step % 2);
        divides && long_enough
    }))
}

/// Whether a balanced vertex of weight `a_i + d` next to an unbalanced `a_i`
/// may branch. `None` for `d > 3`.
pub fn stepup_branching_allowed(ai: i64, d: i64) -> Option<bool> {
    let odd = ai % 2 == 1;
    Some(match d {
        0 => !odd,
        1 => if odd { ai <= 5 } else { ai <= 2 },
        2 => ai == 1 || (!odd && ai <= 10),
        3 => if odd { ai <= 15 } else { ai <= 6 },
        _ => return None,
    })
}

/// Checks the step-up conditions at every branching balanced neighbour of a
/// vertex that is the only unbalanced one.
pub fn stepup_holds(g: &WeightedGraph, a: &DimVector) -> Result<bool> {
    let b = g.balances(a)?;
    let unbalanced: Vec<usize> = (0..g.n_vertices()).filter(|&i| b[i] != 0).collect();
    let [i] = unbalanced.as_slice() else { return Ok(true) };
    for (j, m) in g.neighbors(*i) {
        let branching = g.neighbors(j).filter(|&(k, _)| k != *i).count() >= 2;
        if m != 1 || !branching || !g.is_loopfree(j) {
            continue;
        }
        if stepup_branching_allowed(a[*i], a[j] - a[*i]) == Some(false) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn component(g: &WeightedGraph, start: usize, allowed: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; g.n_vertices()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        out.push(v);
        for (w, _) in g.neighbors(v) {
            if !seen[w] && allowed(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out.sort();
    out
}

/// Balanced weight-1 chains either fill the whole graph or end at
/// unbalanced vertices.
pub fn one_chain_ok(g: &WeightedGraph, a: &DimVector) -> Result<bool> {
    let b = g.balances(a)?;
    let ones = |v: usize| a[v] == 1 && b[v] == 0;
    for v in (0..g.n_vertices()).filter(|&v| ones(v)) {
        if !g.neighbors(v).any(|(w, _)| ones(w)) {
            continue;
        }
        let c = component(g, v, ones);
        if c.len() == g.n_vertices() {
            continue;
        }
        let exits_ok = c.iter().all(|&u| g.neighbors(u).all(|(w, _)| c.contains(&w) || b[w] != 0));
        if !exits_ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For an unbalanced weight-1 vertex hanging off a balanced weight-2 vertex
/// whose side of the graph is otherwise balanced, that side together with
/// the weight-1 vertex is an affine D or E diagram with its minimal root.
pub fn twelve_chain_ok(g: &WeightedGraph, a: &DimVector) -> Result<bool> {
    let b = g.balances(a)?;
    for i in (0..g.n_vertices()).filter(|&i| b[i] != 0 && a[i] == 1) {
        for (j, m) in g.neighbors(i) {
            if m != 1 || a[j] != 2 || b[j] != 0 {
                continue;
            }
            let side = component(g, j, |v| v != i);
            let attached_once = side.iter().filter(|&&v| g.edge_mult(i, v) > 0).count() == 1;
            if !attached_once || side.iter().any(|&v| b[v] != 0) {
                continue;
            }
            let mut verts = side.clone();
            verts.push(i);
            verts.sort();
            let h = g.induced(&verts).without_loops();
            let d = a.restrict(&verts);
            let rank = side.len() as u32;
            let candidates = [AdeType::D(rank), AdeType::E(rank)];
            let mut found = false;
            for t in candidates.into_iter().filter(|t| t.validate().is_ok()) {
                let (mg, md) = mir(t)?;
                if crate::iso::weighted_graph_isomorphic(&h, &d, &mg, &md)? {
                    found = true;
                }
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Local structures

/// The closed neighbourhood of a vertex: the vertex (index 0) with its loops
/// and its neighbours joined by their multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalStructure {
    pub graph: WeightedGraph,
    pub dim: DimVector,
}

impl LocalStructure {
    fn new(weight: i64, loops: u32, nbrs: &[(i64, u32)]) -> Self {
        let mut b = GraphBuilder::new();
        let c = b.vertex(weight);
        b.add_loops(c, loops);
        for &(w, m) in nbrs {
            let v = b.vertex(w);
            b.edge(c, v, m);
        }
        let (graph, dim) = b.build();
        LocalStructure { graph, dim }
    }
}

/// The local structures an unbalanced vertex can have, in tabulated order.
pub fn local_structures(tag: TypeTag) -> Vec<LocalStructure> {
    let s = LocalStructure::new;
    match tag {
        TypeTag::I => vec![
            s(1, 0, &[(3, 1)]),
            s(1, 0, &[(1, 2), (1, 1)]),
            s(1, 0, &[(2, 1), (1, 1)]),
            s(1, 0, &[(1, 1), (1, 1), (1, 1)]),
            s(1, 1, &[(1, 1)]),
        ],
        TypeTag::II => vec![
            s(1, 0, &[(2, 2)]),
            s(1, 0, &[(4, 1)]),
            s(1, 0, &[(1, 2), (1, 2)]),
            s(1, 0, &[(1, 2), (2, 1)]),
            s(1, 0, &[(2, 1), (2, 1)]),
            s(1, 0, &[(1, 1), (3, 1)]),
            s(1, 0, &[(1, 2), (1, 1), (1, 1)]),
            s(1, 0, &[(2, 1), (1, 1), (1, 1)]),
            s(1, 0, &[(1, 1), (1, 1), (1, 1), (1, 1)]),
            s(1, 1, &[(1, 2)]),
            s(1, 1, &[(2, 1)]),
            s(1, 1, &[(1, 1), (1, 1)]),
            s(1, 2, &[]),
        ],
        TypeTag::III => vec![
            s(2, 0, &[(5, 1)]),
            s(2, 0, &[(1, 1), (2, 2)]),
            s(2, 0, &[(2, 1), (3, 1)]),
            s(2, 0, &[(1, 1), (4, 1)]),
            s(2, 0, &[(1, 1), (2, 1), (2, 1)]),
            s(2, 0, &[(3, 1), (1, 1), (1, 1)]),
            s(2, 0, &[(2, 1), (1, 1), (1, 1), (1, 1)]),
            s(2, 0, &[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)]),
            s(2, 1, &[(1, 1)]),
        ],
    }
}

/// The local structure of vertex `i` in `(g, a)`.
pub fn local_structure_of(g: &WeightedGraph, a: &DimVector, i: usize) -> Result<LocalStructure> {
    check_vertex(g, i)?;
    let nbrs: Vec<(i64, u32)> = g.neighbors(i).map(|(j, m)| (a[j], m)).collect();
    Ok(LocalStructure::new(a[i], g.loops(i), &nbrs))
}

/// Position of the local structure of `i` in the table for `tag`, if any.
pub fn match_local_structure(g: &WeightedGraph, a: &DimVector, i: usize, tag: TypeTag) -> Result<Option<usize>> {
    let own = local_structure_of(g, a, i)?;
    let key = |s: &LocalStructure| {
        let mut nb: Vec<(i64, u32)> = s.graph.neighbors(0).map(|(j, m)| (s.dim[j], m)).collect();
        nb.sort();
        (s.dim[0], s.graph.loops(0), nb)
    };
    let k = key(&own);
    Ok(local_structures(tag).iter().position(|s| key(s) == k))
}

// ---------------------------------------------------------------------------
// Family catalogue and matching

/// Every named family (including the two excluded ones) with at most
/// `max_rank` vertices and weights at most `max_weight`, one name per
/// isomorphism class.
pub fn family_instances(max_rank: usize, max_weight: i64) -> Result<Vec<(FamilyName, WeightedGraph, DimVector)>> {
    let r = max_rank as u32;
    let mut names = FamilyName::grid(r + 1);
    names.extend(FamilyName::excluded_grid(r, r));
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for name in names {
        let Ok(name) = name.normalized() else { continue };
        let (g, a) = build_family(name)?;
        if g.n_vertices() > max_rank || a.max_entry() > max_weight {
            continue;
        }
        let (form, _) = canonical_form(&g, &a, DEFAULT_ISO_LIMIT)?;
        if seen.insert(form) {
            out.push((name, g, a));
        }
    }
    Ok(out)
}

fn catalogue(max_rank: usize, max_weight: i64) -> Result<HashMap<CanonicalForm, FamilyName>> {
    let mut map = HashMap::new();
    for (name, g, a) in family_instances(max_rank, max_weight)? {
        let (form, _) = canonical_form(&g, &a, DEFAULT_ISO_LIMIT)?;
        map.entry(form).or_insert(name);
    }
    Ok(map)
}

/// The named family isomorphic to `(g, a)`, if any.
pub fn match_family(g: &WeightedGraph, a: &DimVector) -> Result<Option<FamilyName>> {
    if a.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch { expected: g.n_vertices(), got: a.len() });
    }
    let map = catalogue(g.n_vertices(), a.max_entry())?;
    let (form, _) = canonical_form(g, a, DEFAULT_ISO_LIMIT)?;
    Ok(map.get(&form).copied())
}

// ---------------------------------------------------------------------------
// Enumeration

/// One vertex slot of a candidate: weight, loops and required
/// neighbour-weight sum.
#[derive(Clone, Copy, Debug)]
struct Slot {
    weight: i64,
    loops: u32,
    target: i64,
}

fn special_slots(tag: TypeTag) -> Vec<Vec<Slot>> {
    let s = |weight, loops, target| Slot { weight, loops, target };
    match tag {
        TypeTag::I => vec![
            vec![s(1, 0, 3), s(1, 0, 3)],
            vec![s(1, 0, 3), s(1, 1, 1)],
            vec![s(1, 1, 1), s(1, 1, 1)],
        ],
        TypeTag::II => vec![vec![s(1, 0, 4)], vec![s(1, 1, 2)], vec![s(1, 2, 0)]],
        TypeTag::III => vec![vec![s(2, 0, 5)], vec![s(2, 1, 1)]],
    }
}

/// Non-increasing weight sequences of length `len` in `1..=max`.
fn weight_sequences(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for w in (1..=cap).rev() {
            cur.push(w);
            go(len, w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, &mut Vec::new(), &mut out);
    out
}

struct EdgeSearch<'a> {
    slots: &'a [Slot],
    rem: Vec<i64>,
    mult: Vec<u32>,
    found: Vec<(WeightedGraph, DimVector)>,
    nodes: &'a AtomicU64,
    limit: u64,
}

impl EdgeSearch<'_> {
    fn cap(&self, i: usize, j: usize) -> i64 {
        let (wi, wj) = (self.slots[i].weight, self.slots[j].weight);
        (self.rem[i] / wj).min(self.rem[j] / wi).min(3)
    }

    fn go(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.slots.len();
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::BudgetExceeded(format!("enumeration exceeded {} search nodes", self.limit)));
        }
        if i + 1 >= n {
            if self.rem.iter().all(|&r| r == 0) {
                self.emit();
            }
            return Ok(());
        }
        if j == n {
            if self.rem[i] == 0 {
                self.go(i + 1, i + 2)?;
            }
            return Ok(());
        }
        let reachable: i64 = (j..n).map(|k| self.slots[k].weight * self.cap(i, k)).sum();
        if reachable < self.rem[i] {
            return Ok(());
        }
        let (wi, wj) = (self.slots[i].weight, self.slots[j].weight);
        for m in 0..=self.cap(i, j) {
            self.rem[i] -= m * wj;
            self.rem[j] -= m * wi;
            self.mult[i * n + j] = m as u32;
            let r = self.go(i, j + 1);
            self.rem[i] += m * wj;
            self.rem[j] += m * wi;
            self.mult[i * n + j] = 0;
            r?;
        }
        Ok(())
    }

    fn emit(&mut self) {
        let n = self.slots.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.mult[i * n + j];
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
        }
        let loops = self.slots.iter().map(|s| s.loops).collect();
        if let Ok(g) = WeightedGraph::new(n, &edges, loops) {
            let a = DimVector::new(self.slots.iter().map(|s| s.weight).collect());
            self.found.push((g, a));
        }
    }
}

/// Every connected weighted graph with at most `max_rank` vertices and
/// weights at most `max_weight` carrying a vector with `p = 2` and all
/// balances nonpositive, up to isomorphism, matched against the named
/// families.
pub fn enumerate_p2_fundamental(max_rank: usize, max_weight: i64) -> Result<Vec<ClassifiedVector>> {
    enumerate_p2_fundamental_with_limit(max_rank, max_weight, DEFAULT_SEARCH_LIMIT)
}

pub fn enumerate_p2_fundamental_with_limit(max_rank: usize, max_weight: i64, limit: u64) -> Result<Vec<ClassifiedVector>> {
    if max_rank > 64 {
        return Err(Error::Precondition("max_rank must be at most 64".into()));
    }
    let mut configs: Vec<Vec<Slot>> = Vec::new();
    for tag in [TypeTag::I, TypeTag::II, TypeTag::III] {
        for special in special_slots(tag) {
            if special.iter().any(|s| s.weight > max_weight) {
                continue;
            }
            for k in special.len()..=max_rank {
                for ws in weight_sequences(k - special.len(), max_weight) {
                    let mut slots = special.clone();
                    slots.extend(ws.iter().map(|&w| Slot { weight: w, loops: 0, target: 2 * w }));
                    let total: i64 = slots.iter().map(|s| s.weight * s.target).sum();
                    if total % 2 == 0 {
                        configs.push(slots);
                    }
                }
            }
        }
    }
    let nodes = AtomicU64::new(0);
    let found: Vec<Vec<(WeightedGraph, DimVector)>> = configs
        .par_iter()
        .map(|slots| {
            let n = slots.len();
            let mut search = EdgeSearch {
                slots,
                rem: slots.iter().map(|s| s.target).collect(),
                mult: vec![0; n * n],
                found: Vec::new(),
                nodes: &nodes,
                limit,
            };
            search.go(0, 1)?;
            Ok(search.found)
        })
        .collect::<Result<_>>()?;

    let forms: Vec<(CanonicalForm, WeightedGraph, DimVector)> = found
        .into_par_iter()
        .flatten()
        .map(|(g, a)| {
            let (form, perm) = canonical_form(&g, &a, DEFAULT_ISO_LIMIT)?;
            let h = g.permuted(&perm);
            let mut b = DimVector::zeros(a.len());
            for (old, &new) in perm.iter().enumerate() {
                b[new] = a[old];
            }
            Ok((form, h, b))
        })
        .collect::<Result<_>>()?;
    let mut unique: HashMap<CanonicalForm, (WeightedGraph, DimVector)> = HashMap::new();
    for (form, g, a) in forms {
        unique.entry(form).or_insert((g, a));
    }

    let names = catalogue(max_rank, max_weight)?;
    let mut out: Vec<(CanonicalForm, ClassifiedVector)> = Vec::with_capacity(unique.len());
    for (form, (g, a)) in unique {
        let signature = unbalanced_signature(&g, &a)?
            .ok_or_else(|| Error::Precondition("enumerated vector has an unexpected signature".into()))?;
        let family = names.get(&form).copied();
        out.push((form, ClassifiedVector { graph: g, dim: a, family, signature }));
    }
    out.sort_by(|(f1, c1), (f2, c2)| {
        (c1.graph.n_vertices(), c1.family.is_none(), c1.family, f1).cmp(&(c2.graph.n_vertices(), c2.family.is_none(), c2.family, f2))
    });
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_lemma_examples() {
        let g = WeightedGraph::new(2, &[(0, 1, 1)], vec![0, 0]).unwrap();
        assert!(half_lemma_ok(&g, &DimVector::new(vec![4, 2]), 0, 1).unwrap());
        assert!(half_lemma_ok(&g, &DimVector::new(vec![2, 1]), 0, 1).unwrap());
        let g3 = WeightedGraph::new(3, &[(0, 1, 1), (1, 2, 1)], vec![0, 0, 0]).unwrap();
        assert!(half_lemma_ok(&g3, &DimVector::new(vec![5, 3, 3]), 0, 1).unwrap());
        assert!(!half_lemma_ok(&g, &DimVector::new(vec![3, 2]), 0, 1).unwrap());
        assert!(half_lemma_ok(&g3, &DimVector::new(vec![1, 1, 1]), 0, 2).is_err());
    }

    #[test]
    fn local_structure_counts() {
        assert_eq!(local_structures(TypeTag::I).len(), 5);
        assert_eq!(local_structures(TypeTag::II).len(), 13);
        assert_eq!(local_structures(TypeTag::III).len(), 9);
        for tag in [TypeTag::I, TypeTag::II, TypeTag::III] {
            for s in local_structures(tag) {
                let target = match tag {
                    TypeTag::I => -1,
                    TypeTag::II => -2,
                    TypeTag::III => -1,
                };
                assert_eq!(s.graph.vertex_balance(&s.dim, 0).unwrap(), target);
            }
        }
    }

    #[test]
    fn stepup_table() {
        assert_eq!(stepup_branching_allowed(4, 0), Some(true));
        assert_eq!(stepup_branching_allowed(3, 0), Some(false));
        assert_eq!(stepup_branching_allowed(5, 1), Some(true));
        assert_eq!(stepup_branching_allowed(4, 1), Some(false));
        assert_eq!(stepup_branching_allowed(1, 2), Some(true));
        assert_eq!(stepup_branching_allowed(12, 2), Some(false));
        assert_eq!(stepup_branching_allowed(15, 3), Some(true));
        assert_eq!(stepup_branching_allowed(8, 3), Some(false));
        assert_eq!(stepup_branching_allowed(1, 4), None);
    }

    #[test]
    fn smallest_enumeration() {
        let out = enumerate_p2_fundamental(2, 1).unwrap();
        let names: Vec<Option<FamilyName>> = out.iter().map(|c| c.family).collect();
        assert!(names.iter().all(|n| n.is_some()), "{names:?}");
        let names: Vec<String> = names.into_iter().map(|n| n.unwrap().to_string()).collect();
        assert_eq!(names, ["II(A0,A0)", "I(1,1,1)", "II(A0,A1)", "X-I(A0,A0,1)"]);
    }

    #[test]
    fn same_family_for_aliases() {
        let (g, a) = build_family(FamilyName::ID { m: 4, n: 0, prime: false }).unwrap();
        let (h, b) = build_family("II(D4)".parse().unwrap()).unwrap();
        assert_eq!(match_family(&g, &a).unwrap(), match_family(&h, &b).unwrap());
        let star = WeightedGraph::new(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)], vec![0; 4]).unwrap();
        assert_eq!(match_family(&star, &DimVector::new(vec![3, 1, 1, 1])).unwrap(), None);
    }
}
