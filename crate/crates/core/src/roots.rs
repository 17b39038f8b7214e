//! Roots of a weighted graph: reflections, the fundamental set, and root
//! classification by descent.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DimVector, WeightedGraph};

/// Default cap on the number of candidate vectors an enumeration may visit.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RootClass {
    NotRoot,
    Real,
    ImaginaryIsotropic,
    ImaginaryAnisotropic,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        self != RootClass::NotRoot
    }

    pub fn is_imaginary(self) -> bool {
        matches!(self, RootClass::ImaginaryIsotropic | RootClass::ImaginaryAnisotropic)
    }
}

/// `s_i(a) = a - (a, e_i) e_i`.
pub fn reflect(g: &WeightedGraph, a: &DimVector, i: usize) -> Result<DimVector> {
    let b = g.vertex_balance(a, i)?;
    if !g.is_loopfree(i) {
        return Err(Error::LoopReflection(i));
    }
    let mut out = a.clone();
    out[i] -= b;
    Ok(out)
}

/// Connected support and every balance nonpositive.
pub fn in_fundamental_set(g: &WeightedGraph, a: &DimVector) -> bool {
    a.len() == g.n_vertices()
        && a.is_positive()
        && g.support_connected(a)
        && (0..g.n_vertices()).all(|i| g.balance_unchecked(a.as_slice(), i) <= 0)
}

/// Classifies a nonnegative vector by descending through simple reflections
/// at the lowest-index vertex with positive balance.
pub fn classify_root(g: &WeightedGraph, a: &DimVector) -> RootClass {
    if a.len() != g.n_vertices() || !a.is_positive() {
        return RootClass::NotRoot;
    }
    classify_slice(g, a.as_slice(), &SupportCheck::new(g))
}

/// Support connectivity test, tabulated for small graphs.
pub(crate) struct SupportCheck {
    table: Option<Vec<bool>>,
    adj: Vec<u64>,
}

impl SupportCheck {
    pub(crate) fn new(g: &WeightedGraph) -> Self {
        let n = g.n_vertices();
        let adj = if n <= 64 { g.adjacency_masks() } else { Vec::new() };
        let table = (n <= 16).then(|| {
            let mut t = vec![false; 1 << n];
            for (mask, slot) in t.iter_mut().enumerate().skip(1) {
                *slot = mask_connected(&adj, mask as u64);
            }
            t
        });
        SupportCheck { table, adj }
    }

    pub(crate) fn connected_mask(&self, mask: u64) -> bool {
        match &self.table {
            Some(t) => t[mask as usize],
            None => mask_connected(&self.adj, mask),
        }
    }

    pub(crate) fn connected(&self, a: &[i64]) -> bool {
        let mask = a.iter().enumerate().fold(0u64, |m, (i, &x)| if x != 0 { m | 1 << i } else { m });
        self.connected_mask(mask)
    }
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut seen = mask & mask.wrapping_neg();
    loop {
        let mut next = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & mask;
        }
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}

pub(crate) fn classify_slice(g: &WeightedGraph, a: &[i64], support: &SupportCheck) -> RootClass {
    let n = g.n_vertices();
    let mut a = a.to_vec();
    loop {
        if a.iter().any(|&x| x < 0) {
            return RootClass::NotRoot;
        }
        let height: i64 = a.iter().sum();
        if height == 0 {
            return RootClass::NotRoot;
        }
        if height == 1 {
            let i = a.iter().position(|&x| x == 1).unwrap();
            if g.is_loopfree(i) {
                return RootClass::Real;
            }
        }
        if !support.connected(&a) {
            return RootClass::NotRoot;
        }
        let pos = (0..n).find(|&i| g.balance_unchecked(&a, i) > 0);
        match pos {
            Some(i) => {
                // Loop vertices never have positive balance on nonnegative input.
                a[i] -= g.balance_unchecked(&a, i);
            }
            None => {
                return if g.p_unchecked(&a) == 1 {
                    RootClass::ImaginaryIsotropic
                } else {
                    RootClass::ImaginaryAnisotropic
                };
            }
        }
    }
}

/// Number of vectors `0 <= b <= bound`, saturating.
pub fn box_size(bound: &DimVector) -> u64 {
    bound
        .iter()
        .fold(1u64, |acc, &x| acc.saturating_mul((x.max(0) as u64).saturating_add(1)))
}

/// Calls `f` on every nonzero `b <= bound` in lexicographic order.
pub(crate) fn for_each_below(bound: &[i64], mut f: impl FnMut(&[i64])) {
    let n = bound.len();
    let mut b = vec![0i64; n];
    loop {
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if b[k] < bound[k] {
                b[k] += 1;
                for x in b.iter_mut().skip(k + 1) {
                    *x = 0;
                }
                break;
            }
        }
        f(&b);
    }
}

/// All positive roots `b <= bound`, in lexicographic order.
pub fn positive_roots_below(g: &WeightedGraph, bound: &DimVector, limit: u64) -> Result<Vec<DimVector>> {
    if bound.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch { expected: g.n_vertices(), got: bound.len() });
    }
    if !bound.is_nonnegative() {
        return Err(Error::Precondition("bound must be nonnegative".into()));
    }
    let size = box_size(bound);
    if size > limit {
        return Err(Error::BudgetExceeded(format!("{size} candidate vectors exceed the limit {limit}")));
    }
    let support = SupportCheck::new(g);
    let mut out = Vec::new();
    for_each_below(bound.as_slice(), |b| {
        if support.connected(b) && classify_slice(g, b, &support).is_root() {
            out.push(DimVector::new(b.to_vec()));
        }
    });
    Ok(out)
}
