//! Weighted graphs, dimension vectors and the quadratic form they carry.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected multigraph with loops. Edge multiplicities are stored in a
/// dense symmetric matrix, loops in a separate vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightedGraph {
    n: usize,
    mult: Vec<u32>,
    loops: Vec<u32>,
}

impl WeightedGraph {
    /// Builds a connected graph from an edge list `(i, j, multiplicity)`.
    /// Repeated pairs accumulate.
    pub fn new(n: usize, edges: &[(usize, usize, u32)], loops: Vec<u32>) -> Result<Self> {
        let g = Self::new_unconnected(n, edges, loops)?;
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    /// Same as [`WeightedGraph::new`] without the connectivity requirement.
    /// Used for ext-quivers and intermediate constructions.
    pub fn new_unconnected(n: usize, edges: &[(usize, usize, u32)], loops: Vec<u32>) -> Result<Self> {
        if loops.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: loops.len() });
        }
        let mut mult = vec![0u32; n * n];
        for &(i, j, m) in edges {
            if i >= n {
                return Err(Error::VertexOutOfRange(i));
            }
            if j >= n {
                return Err(Error::VertexOutOfRange(j));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("edge ({i},{i}) must be given as a loop")));
            }
            mult[i * n + j] += m;
            mult[j * n + i] += m;
        }
        Ok(WeightedGraph { n, mult, loops })
    }

    /// The graph with no vertices, carrier of the empty highest root of A_0.
    pub fn empty() -> Self {
        WeightedGraph { n: 0, mult: Vec::new(), loops: Vec::new() }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn loops(&self, i: usize) -> u32 {
        self.loops[i]
    }

    pub fn loop_vector(&self) -> &[u32] {
        &self.loops
    }

    /// Edge list with `i < j`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let m = self.edge_mult(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.n).filter_map(move |j| {
            let m = self.mult[i * self.n + j];
            (m > 0).then_some((j, m))
        })
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.neighbors(i).map(|(_, m)| m).sum()
    }

    pub fn is_loopfree(&self, i: usize) -> bool {
        self.loops[i] == 0
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&vec![true; self.n])
    }

    /// Whether the vertices flagged in `mask` induce a connected subgraph.
    /// The empty subset is not connected.
    pub fn is_connected_subset(&self, mask: &[bool]) -> bool {
        let Some(start) = mask.iter().position(|&b| b) else {
            return false;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for (w, _) in self.neighbors(v) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n).all(|v| !mask[v] || seen[v])
    }

    /// Bitmask adjacency rows, valid for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.neighbors(i).fold(0u64, |acc, (j, _)| acc | (1 << j)))
            .collect()
    }

    /// The full subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> WeightedGraph {
        let k = vertices.len();
        let mut mult = vec![0u32; k * k];
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                if a != b {
                    mult[a * k + b] = self.edge_mult(i, j);
                }
            }
        }
        let loops = vertices.iter().map(|&i| self.loops[i]).collect();
        WeightedGraph { n: k, mult, loops }
    }

    /// Graph with vertices renamed by `perm` (old vertex `i` becomes `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> WeightedGraph {
        let n = self.n;
        let mut mult = vec![0u32; n * n];
        let mut loops = vec![0u32; n];
        for i in 0..n {
            loops[perm[i]] = self.loops[i];
            for j in 0..n {
                mult[perm[i] * n + perm[j]] = self.mult[i * n + j];
            }
        }
        WeightedGraph { n, mult, loops }
    }

    /// The same graph with every loop removed.
    pub fn without_loops(&self) -> WeightedGraph {
        WeightedGraph { n: self.n, mult: self.mult.clone(), loops: vec![0; self.n] }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            2 * (1 - self.loops[i] as i64)
                        } else {
                            -(self.edge_mult(i, j) as i64)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn check_len(&self, a: &DimVector) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: a.len() });
        }
        Ok(())
    }

    /// The Euler form `aᵀ C b`.
    pub fn euler_form(&self, a: &DimVector, b: &DimVector) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.euler_unchecked(a.as_slice(), b.as_slice()))
    }

    pub(crate) fn euler_unchecked(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.n {
            if a[i] != 0 {
                s += a[i] * self.balance_unchecked(b, i);
            }
        }
        s
    }

    /// `(a, e_i)`: twice the weight corrected for loops, minus the weighted
    /// neighbour sum.
    pub fn vertex_balance(&self, a: &DimVector, i: usize) -> Result<i64> {
        self.check_len(a)?;
        if i >= self.n {
            return Err(Error::VertexOutOfRange(i));
        }
        Ok(self.balance_unchecked(a.as_slice(), i))
    }

    pub(crate) fn balance_unchecked(&self, a: &[i64], i: usize) -> i64 {
        let row = &self.mult[i * self.n..(i + 1) * self.n];
        let mut s = 2 * (1 - self.loops[i] as i64) * a[i];
        for (j, &m) in row.iter().enumerate() {
            if m != 0 {
                s -= m as i64 * a[j];
            }
        }
        s
    }

    pub fn balances(&self, a: &DimVector) -> Result<Vec<i64>> {
        self.check_len(a)?;
        Ok((0..self.n).map(|i| self.balance_unchecked(a.as_slice(), i)).collect())
    }

    /// `p(a) = 1 - (a,a)/2`.
    pub fn p(&self, a: &DimVector) -> Result<i64> {
        self.check_len(a)?;
        Ok(self.p_unchecked(a.as_slice()))
    }

    pub(crate) fn p_unchecked(&self, a: &[i64]) -> i64 {
        let q = self.euler_unchecked(a, a);
        assert!(q % 2 == 0, "odd Euler form value {q}: Cartan matrix corrupted");
        1 - q / 2
    }

    /// Whether the support of `a` induces a connected subgraph.
    pub fn support_connected(&self, a: &DimVector) -> bool {
        let mask: Vec<bool> = a.iter().map(|&x| x != 0).collect();
        self.is_connected_subset(&mask)
    }
}

/// An integer vector indexed by vertices. Entries are signed so that
/// reflections can be expressed, but most operations expect nonnegative input.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Self {
        DimVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    /// The indicator vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Nonnegative and not identically zero.
    pub fn is_positive(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> DimVector {
        DimVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &x| num_integer::gcd(g, x))
    }

    pub fn max_entry(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Restriction to the listed coordinates.
    pub fn restrict(&self, vertices: &[usize]) -> DimVector {
        DimVector(vertices.iter().map(|&i| self.0[i]).collect())
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for DimVector {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl From<Vec<i64>> for DimVector {
    fn from(v: Vec<i64>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Incremental builder used by the diagram constructors.
#[derive(Default, Clone, Debug)]
pub struct GraphBuilder {
    weights: Vec<i64>,
    loops: Vec<u32>,
    edges: Vec<(usize, usize, u32)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, weight: i64) -> usize {
        self.weights.push(weight);
        self.loops.push(0);
        self.weights.len() - 1
    }

    /// Adds a path of vertices with the given weights, returning their ids.
    pub fn chain(&mut self, weights: &[i64]) -> Vec<usize> {
        let ids: Vec<usize> = weights.iter().map(|&w| self.vertex(w)).collect();
        for w in ids.windows(2) {
            self.edge(w[0], w[1], 1);
        }
        ids
    }

    pub fn edge(&mut self, i: usize, j: usize, m: u32) {
        self.edges.push((i, j, m));
    }

    pub fn add_loops(&mut self, i: usize, k: u32) {
        self.loops[i] += k;
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn set_weight(&mut self, i: usize, w: i64) {
        self.weights[i] = w;
    }

    /// Copies another graph and vector into this builder; returns the offset of
    /// its vertices.
    pub fn append(&mut self, g: &WeightedGraph, a: &DimVector) -> usize {
        let off = self.len();
        for i in 0..g.n_vertices() {
            self.vertex(a[i]);
            self.loops[off + i] = g.loops(i);
        }
        for (i, j, m) in g.edges() {
            self.edge(off + i, off + j, m);
        }
        off
    }

    /// Identifies vertex `q` with vertex `p` (keeping `p`'s weight). Edges
    /// between them become loops; later vertex ids shift down by one.
    pub fn merge(&mut self, p: usize, q: usize) {
        assert!(p != q);
        let shift = |v: usize| if v > q { v - 1 } else { v };
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut extra_loops = self.loops[q];
        for &(i, j, m) in &self.edges {
            let i = if i == q { p } else { i };
            let j = if j == q { p } else { j };
            if i == j {
                extra_loops += m;
            } else {
                edges.push((shift(i), shift(j), m));
            }
        }
        self.loops[p] += extra_loops;
        self.weights.remove(q);
        self.loops.remove(q);
        self.edges = edges;
    }

    pub fn build(self) -> (WeightedGraph, DimVector) {
        let n = self.weights.len();
        let g = WeightedGraph::new_unconnected(n, &self.edges, self.loops)
            .expect("builder produced an invalid graph");
        (g, DimVector(self.weights))
    }
}
