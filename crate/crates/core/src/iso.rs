//! Isomorphism of weighted graphs by canonical labelling: colour refinement
//! followed by individualisation of the smallest ambiguous class.

use crate::error::{Error, Result};
use crate::graph::{DimVector, WeightedGraph};

/// Default cap on the number of search-tree nodes per canonical form.
pub const DEFAULT_ISO_LIMIT: u64 = 1_000_000;

/// A labelling-independent encoding of a weighted graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<i64>);

/// Canonical form of `(g, a)`, with the permutation realising it
/// (`perm[old] = new`).
pub fn canonical_form(g: &WeightedGraph, a: &DimVector, limit: u64) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n_vertices();
    if a.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.len() });
    }
    let initial: Vec<(i64, i64)> = (0..n).map(|v| (a[v], g.loops(v) as i64)).collect();
    let colors = refine(g, rank(&initial));
    let mut search = Search { g, a, best: None, visited: 0, limit };
    search.go(colors)?;
    let (code, perm) = search.best.expect("search visits at least one leaf");
    Ok((CanonicalForm(code), perm))
}

pub fn weighted_graph_isomorphic(g1: &WeightedGraph, a1: &DimVector, g2: &WeightedGraph, a2: &DimVector) -> Result<bool> {
    if g1.n_vertices() != g2.n_vertices() {
        return Ok(false);
    }
    let mut w1 = a1.clone().into_vec();
    let mut w2 = a2.clone().into_vec();
    w1.sort();
    w2.sort();
    if w1 != w2 {
        return Ok(false);
    }
    let (c1, _) = canonical_form(g1, a1, DEFAULT_ISO_LIMIT)?;
    let (c2, _) = canonical_form(g2, a2, DEFAULT_ISO_LIMIT)?;
    Ok(c1 == c2)
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

fn refine(g: &WeightedGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n_vertices();
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u32)> = g.neighbors(v).map(|(w, m)| (colors[w], m)).collect();
                nb.sort();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[u32]| c.iter().copied().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

struct Search<'a> {
    g: &'a WeightedGraph,
    a: &'a DimVector,
    best: Option<(Vec<i64>, Vec<usize>)>,
    visited: u64,
    limit: u64,
}

impl Search<'_> {
    fn go(&mut self, colors: Vec<u32>) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::BudgetExceeded(format!("isomorphism search exceeded {} nodes", self.limit)));
        }
        let n = colors.len();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        // Smallest colour among the smallest non-singleton classes.
        let target = (0..n).filter(|&c| counts[c] > 1).min_by_key(|&c| (counts[c], c));
        match target {
            None => {
                let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
                let code = self.encode(&perm);
                if self.best.as_ref().map_or(true, |(b, _)| code < *b) {
                    self.best = Some((code, perm));
                }
                Ok(())
            }
            Some(c) => {
                for v in (0..n).filter(|&v| colors[v] as usize == c) {
                    let keys: Vec<(u32, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
                    let next = refine(self.g, rank(&keys));
                    self.go(next)?;
                }
                Ok(())
            }
        }
    }

    fn encode(&self, perm: &[usize]) -> Vec<i64> {
        let n = perm.len();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut code = Vec::with_capacity(n * (n + 2) + 1);
        code.push(n as i64);
        for &v in &inv {
            code.push(self.a[v]);
            code.push(self.g.loops(v) as i64);
        }
        for &v in &inv {
            for &w in &inv {
                code.push(self.g.edge_mult(v, w) as i64);
            }
        }
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyName};

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let (g, a) = build_family(FamilyName::IIIMn { m: 5, n: 7 }).unwrap();
        let n = g.n_vertices();
        let perm: Vec<usize> = (0..n).map(|i| (n - 1 - i + 3) % n).collect();
        let h = g.permuted(&perm);
        let mut b = DimVector::zeros(n);
        for i in 0..n {
            b[perm[i]] = a[i];
        }
        assert!(weighted_graph_isomorphic(&g, &a, &h, &b).unwrap());
        assert!(weighted_graph_isomorphic(&g, &a, &g, &a).unwrap());
    }

    #[test]
    fn cycle_lengths_distinguish_d_variants() {
        let (g1, a1) = build_family(FamilyName::ID { m: 5, n: 2, prime: false }).unwrap();
        let (g2, a2) = build_family(FamilyName::ID { m: 5, n: 2, prime: true }).unwrap();
        assert!(!weighted_graph_isomorphic(&g1, &a1, &g2, &a2).unwrap());
        let (g1, a1) = build_family(FamilyName::ID { m: 4, n: 3, prime: false }).unwrap();
        let (g2, a2) = build_family(FamilyName::ID { m: 4, n: 3, prime: true }).unwrap();
        assert!(weighted_graph_isomorphic(&g1, &a1, &g2, &a2).unwrap());
    }
}
