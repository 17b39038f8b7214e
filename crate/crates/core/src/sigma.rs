//! The set Σ of dimension vectors of simple representations, and
//! decompositions of vectors into elements of Σ.
//!
//! Membership is strict: `a ∈ Σ` iff `a` is a positive root and
//! `p(a) > Σ p(β_t)` for every decomposition of `a` into at least two positive
//! roots.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DimVector, WeightedGraph};
use crate::roots::{box_size, classify_slice, for_each_below, in_fundamental_set, SupportCheck, DEFAULT_ENUMERATION_LIMIT};

/// A multiset decomposition `a = Σ m_k σ_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    parts: Vec<(u32, DimVector)>,
}

impl Decomposition {
    /// Merges equal parts and sorts canonically (larger height first, then
    /// lexicographically larger first).
    pub fn new(parts: Vec<(u32, DimVector)>) -> Self {
        let mut parts: Vec<(u32, DimVector)> = parts.into_iter().filter(|(m, _)| *m > 0).collect();
        parts.sort_by(|x, y| part_key(&x.1).cmp(&part_key(&y.1)));
        let mut merged: Vec<(u32, DimVector)> = Vec::with_capacity(parts.len());
        for (m, v) in parts {
            match merged.last_mut() {
                Some((mm, vv)) if *vv == v => *mm += m,
                _ => merged.push((m, v)),
            }
        }
        Decomposition { parts: merged }
    }

    pub fn parts(&self) -> &[(u32, DimVector)] {
        &self.parts
    }

    /// Total number of parts counted with multiplicity.
    pub fn len(&self) -> u32 {
        self.parts.iter().map(|(m, _)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> Option<DimVector> {
        let (_, first) = self.parts.first()?;
        let mut t = DimVector::zeros(first.len());
        for (m, v) in &self.parts {
            t = t.add(&v.scaled(*m as i64));
        }
        Some(t)
    }

    fn expanded(&self) -> Vec<&DimVector> {
        self.parts.iter().flat_map(|(m, v)| std::iter::repeat(v).take(*m as usize)).collect()
    }

    /// Whether every part of `coarse` can be written as a sum of a sub-multiset
    /// of the parts of `self`, using each part of `self` exactly once.
    pub fn refines(&self, coarse: &Decomposition) -> bool {
        if self.total() != coarse.total() {
            return false;
        }
        let fine: Vec<&DimVector> = self.expanded().into_iter().filter(|v| v.height() > 1).collect();
        let mut slots: Vec<DimVector> = coarse.expanded().into_iter().cloned().collect();
        // Parts of height one are unit vectors: once the larger parts fit,
        // the totals agree and the units fill the remainders exactly.
        assign_parts(&fine, 0, &mut slots)
    }
}

fn part_key(v: &DimVector) -> (Reverse<i64>, Reverse<DimVector>) {
    (Reverse(v.height()), Reverse(v.clone()))
}

fn assign_parts(fine: &[&DimVector], k: usize, slots: &mut [DimVector]) -> bool {
    if k == fine.len() {
        return true;
    }
    let part = fine[k];
    for s in 0..slots.len() {
        if slots[..s].contains(&slots[s]) {
            continue;
        }
        if part.le(&slots[s]) {
            slots[s] = slots[s].sub(part);
            let ok = assign_parts(fine, k + 1, slots);
            slots[s] = slots[s].add(part);
            if ok {
                return true;
            }
        }
    }
    false
}

/// Σ membership for a positive root. Elements of the fundamental set use the
/// structural criterion; other vectors are simple roots or decided by the
/// exhaustive oracle.
pub fn in_sigma(g: &WeightedGraph, a: &DimVector) -> Result<bool> {
    in_sigma_with_limit(g, a, DEFAULT_ENUMERATION_LIMIT)
}

pub fn in_sigma_with_limit(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<bool> {
    check_input(g, a)?;
    if in_fundamental_set(g, a) {
        return Ok(in_sigma_fundamental(g, a));
    }
    if is_loopfree_simple(g, a) {
        return Ok(true);
    }
    in_sigma_oracle(g, a, limit)
}

fn check_input(g: &WeightedGraph, a: &DimVector) -> Result<()> {
    if a.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch { expected: g.n_vertices(), got: a.len() });
    }
    if !a.is_positive() {
        return Err(Error::Precondition("vector must be nonnegative and nonzero".into()));
    }
    Ok(())
}

fn is_loopfree_simple(g: &WeightedGraph, a: &DimVector) -> bool {
    a.height() == 1 && a.is_nonnegative() && g.is_loopfree(a.support()[0])
}

/// Structural test for `a` in the fundamental set: `a ∉ Σ` exactly when
/// `a = nδ` with `n >= 2`, or its support splits along a single edge whose
/// endpoints both have weight 1, or along a single edge from a weight-1
/// vertex to an extending vertex of a multiple `nδ`, `n >= 2`.
pub fn in_sigma_fundamental(g: &WeightedGraph, a: &DimVector) -> bool {
    let supp = a.support();
    let h = g.induced(&supp);
    let b = a.restrict(&supp);
    if h.p_unchecked(b.as_slice()) == 1 {
        return b.content() == 1;
    }
    for (i, j, m) in h.edges() {
        if m != 1 {
            continue;
        }
        let Some((side_i, side_j)) = split_at_edge(&h, i, j) else {
            continue;
        };
        if b[i] == 1 && b[j] == 1 {
            return false;
        }
        for (x, y, far) in [(i, j, &side_j), (j, i, &side_i)] {
            if b[x] != 1 {
                continue;
            }
            let k = h.induced(far);
            let c = b.restrict(far);
            let totally_balanced = (0..k.n_vertices()).all(|v| k.balance_unchecked(c.as_slice(), v) == 0);
            let mult = c.content();
            let pos = far.iter().position(|&v| v == y).unwrap();
            if totally_balanced && mult >= 2 && c[pos] == mult {
                return false;
            }
        }
    }
    true
}

/// If removing the (single) edge `ij` disconnects `h`, returns the vertex sets
/// of the two sides.
fn split_at_edge(h: &WeightedGraph, i: usize, j: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = h.n_vertices();
    let mut seen = vec![false; n];
    let mut stack = vec![i];
    seen[i] = true;
    while let Some(v) = stack.pop() {
        for (w, _) in h.neighbors(v) {
            if (v == i && w == j) || seen[w] {
                continue;
            }
            seen[w] = true;
            stack.push(w);
        }
    }
    if seen[j] {
        return None;
    }
    let side_i = (0..n).filter(|&v| seen[v]).collect();
    let side_j = (0..n).filter(|&v| !seen[v]).collect();
    Some((side_i, side_j))
}

/// Exhaustive Σ test. Every vector decomposes into simple roots, so the best
/// value of `Σ p` over decompositions only depends on the imaginary parts;
/// a dynamic program over all sub-vectors of `a` maximises it.
pub fn in_sigma_oracle(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<bool> {
    check_input(g, a)?;
    let support = SupportCheck::new(g);
    if !classify_slice(g, a.as_slice(), &support).is_root() {
        return Ok(false);
    }
    if a.height() == 1 {
        return Ok(true);
    }
    let size = box_size(a);
    if size > limit {
        return Err(Error::BudgetExceeded(format!("Σ oracle needs {size} sub-vectors (limit {limit})")));
    }
    let mut imaginary: Vec<(Vec<i64>, i64)> = Vec::new();
    for_each_below(a.as_slice(), |b| {
        if support.connected(b) && classify_slice(g, b, &support).is_imaginary() {
            imaginary.push((b.to_vec(), g.p_unchecked(b)));
        }
    });
    let n = a.len();
    let mut radix = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        radix[i] = radix[i + 1] * (a[i + 1] as usize + 1);
    }
    let index = |x: &[i64]| x.iter().zip(&radix).map(|(&v, &r)| v as usize * r).sum::<usize>();
    // best[x] = max Σ p over decompositions of x; filled in increasing index
    // order, which is compatible with the componentwise order.
    let mut best = vec![0i64; size as usize];
    for_each_below(a.as_slice(), |x| {
        let mut m = 0;
        for (beta, pb) in &imaginary {
            if beta.iter().zip(x).all(|(b, y)| b <= y) {
                let rest: Vec<i64> = x.iter().zip(beta).map(|(y, b)| y - b).collect();
                m = m.max(pb + best[index(&rest)]);
            }
        }
        best[index(x)] = m;
    });
    let mut two_plus = 0;
    for (beta, pb) in &imaginary {
        if beta.as_slice() != a.as_slice() {
            let rest: Vec<i64> = a.iter().zip(beta).map(|(y, b)| y - b).collect();
            two_plus = two_plus.max(pb + best[index(&rest)]);
        }
    }
    Ok(g.p_unchecked(a.as_slice()) > two_plus)
}

/// All vectors `0 < b <= a` in the fundamental set, found by backtracking with
/// balance pruning.
pub fn fundamental_below(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<Vec<DimVector>> {
    let n = g.n_vertices();
    // Breadth-first vertex order keeps neighbourhoods closing early.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for (w, _) in g.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let support = SupportCheck::new(g);
    let mut state = FundSearch { g, a: a.as_slice(), order, vals: vec![-1; n], out: Vec::new(), visited: 0, limit, support };
    state.go(0)?;
    let mut out = state.out;
    out.sort();
    Ok(out)
}

struct FundSearch<'a> {
    g: &'a WeightedGraph,
    a: &'a [i64],
    order: Vec<usize>,
    vals: Vec<i64>,
    out: Vec<DimVector>,
    visited: u64,
    limit: u64,
    support: SupportCheck,
}

impl FundSearch<'_> {
    fn min_balance(&self, u: usize) -> i64 {
        let mut s = 2 * (1 - self.g.loops(u) as i64) * self.vals[u];
        for (w, m) in self.g.neighbors(u) {
            let x = if self.vals[w] >= 0 { self.vals[w] } else { self.a[w] };
            s -= m as i64 * x;
        }
        s
    }

    fn go(&mut self, k: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::BudgetExceeded(format!("fundamental-set search exceeded {} nodes", self.limit)));
        }
        if k == self.order.len() {
            if self.vals.iter().any(|&x| x > 0) && self.support.connected(&self.vals) {
                self.out.push(DimVector::new(self.vals.clone()));
            }
            return Ok(());
        }
        let v = self.order[k];
        for x in 0..=self.a[v] {
            self.vals[v] = x;
            let feasible = std::iter::once(v)
                .chain(self.g.neighbors(v).map(|(w, _)| w))
                .filter(|&u| self.vals[u] >= 0)
                .all(|u| self.min_balance(u) <= 0);
            if feasible {
                self.go(k + 1)?;
            }
        }
        self.vals[v] = -1;
        Ok(())
    }
}

/// Elements of Σ below `a`: the loop-free simple roots in its support together
/// with the members of Σ in the fundamental set.
pub fn sigma_elements_below(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<Vec<DimVector>> {
    check_input(g, a)?;
    let mut out: BTreeSet<DimVector> = BTreeSet::new();
    for i in a.support() {
        if g.is_loopfree(i) {
            out.insert(DimVector::unit(a.len(), i));
        }
    }
    for b in fundamental_below(g, a, limit)? {
        if in_sigma_fundamental(g, &b) {
            out.insert(b);
        }
    }
    Ok(out.into_iter().collect())
}

/// All decompositions of `a` into elements of Σ.
pub fn sigma_decompositions(g: &WeightedGraph, a: &DimVector) -> Result<Vec<Decomposition>> {
    sigma_decompositions_with_limit(g, a, DEFAULT_ENUMERATION_LIMIT)
}

pub fn sigma_decompositions_with_limit(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<Vec<Decomposition>> {
    let elems = sigma_elements_below(g, a, limit)?;
    let mut big: Vec<DimVector> = elems.iter().filter(|v| !is_loopfree_simple(g, v)).cloned().collect();
    big.sort_by_key(part_key);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut visited = 0u64;
    decompose_rec(g, &big, 0, a.clone(), &mut chosen, &mut out, &mut visited, limit)?;
    out.sort_by(|x: &Decomposition, y| (x.len(), x).cmp(&(y.len(), y)));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn decompose_rec(
    g: &WeightedGraph,
    big: &[DimVector],
    k: usize,
    rest: DimVector,
    chosen: &mut Vec<(u32, DimVector)>,
    out: &mut Vec<Decomposition>,
    visited: &mut u64,
    limit: u64,
) -> Result<()> {
    *visited += 1;
    if *visited > limit {
        return Err(Error::BudgetExceeded("Σ-decomposition search".into()));
    }
    if k == big.len() {
        if rest.iter().enumerate().all(|(i, &x)| x == 0 || g.is_loopfree(i)) {
            let mut parts = chosen.clone();
            for i in rest.support() {
                parts.push((rest[i] as u32, DimVector::unit(rest.len(), i)));
            }
            out.push(Decomposition::new(parts));
        }
        return Ok(());
    }
    let s = &big[k];
    let max = s.support().iter().map(|&i| rest[i] / s[i]).min().unwrap_or(0);
    for m in (0..=max).rev() {
        let r = rest.sub(&s.scaled(m));
        if m > 0 {
            chosen.push((m as u32, s.clone()));
        }
        decompose_rec(g, big, k + 1, r, chosen, out, visited, limit)?;
        if m > 0 {
            chosen.pop();
        }
    }
    Ok(())
}

/// The unique coarsest Σ-decomposition, which every other one refines.
pub fn canonical_decomposition(g: &WeightedGraph, a: &DimVector) -> Result<Decomposition> {
    let all = sigma_decompositions(g, a)?;
    let coarsest: Vec<&Decomposition> = all.iter().filter(|c| all.iter().all(|d| d.refines(c))).collect();
    assert_eq!(coarsest.len(), 1, "no unique coarsest Σ-decomposition of {a}");
    Ok(coarsest[0].clone())
}
