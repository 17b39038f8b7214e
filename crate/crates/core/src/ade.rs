//! Simply-laced Dynkin types, their affine extensions and highest roots.
//!
//! Vertex labelling: `hrr(t)` occupies vertices `0..rank`, listed chain-major
//! (main chain first, then branch vertices). `mir(t)` is the same diagram with
//! the extending vertex appended as vertex `rank`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DimVector, GraphBuilder, WeightedGraph};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum AdeType {
    A(u32),
    D(u32),
    E(u32),
}

impl AdeType {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            AdeType::A(_) => true,
            AdeType::D(m) => m >= 4,
            AdeType::E(m) => (6..=8).contains(&m),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidParameters(format!("no Dynkin type {self}")))
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            AdeType::A(m) | AdeType::D(m) | AdeType::E(m) => m,
        }
    }

    /// Whether this is the empty diagram `A_0`.
    pub fn is_trivial(self) -> bool {
        self == AdeType::A(0)
    }

    pub fn weyl_order(self) -> BigUint {
        match self {
            AdeType::A(m) => factorial(m as u64 + 1),
            AdeType::D(m) => (BigUint::one() << (m as usize - 1)) * factorial(m as u64),
            AdeType::E(6) => BigUint::from(51840u32),
            AdeType::E(7) => BigUint::from(2903040u32),
            AdeType::E(8) => BigUint::from(696729600u32),
            AdeType::E(_) => unreachable!("validated E type"),
        }
    }

    /// Number of positive roots, i.e. reflecting hyperplanes of the Coxeter
    /// arrangement.
    pub fn positive_root_count(self) -> u64 {
        match self {
            AdeType::A(m) => m as u64 * (m as u64 + 1) / 2,
            AdeType::D(m) => m as u64 * (m as u64 - 1),
            AdeType::E(6) => 36,
            AdeType::E(7) => 63,
            AdeType::E(8) => 120,
            AdeType::E(_) => unreachable!("validated E type"),
        }
    }

    /// All valid types of the given rank, in a fixed order.
    pub fn of_rank(r: u32) -> Vec<AdeType> {
        let mut out = vec![AdeType::A(r)];
        if r >= 4 {
            out.push(AdeType::D(r));
        }
        if (6..=8).contains(&r) {
            out.push(AdeType::E(r));
        }
        out
    }
}

/// `D_m` for any `m >= 2`, written as a product of valid types:
/// `D_3 = A_3` and `D_2 = A_1 × A_1`.
pub fn d_series(m: u32) -> Vec<AdeType> {
    match m {
        0 | 1 => Vec::new(),
        2 => vec![AdeType::A(1), AdeType::A(1)],
        3 => vec![AdeType::A(3)],
        _ => vec![AdeType::D(m)],
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(m) => write!(f, "A{m}"),
            AdeType::D(m) => write!(f, "D{m}"),
            AdeType::E(m) => write!(f, "E{m}"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| Error::Parse("empty Dynkin type".into()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let m: u32 = rest.parse().map_err(|_| Error::Parse(format!("bad Dynkin type '{s}'")))?;
        let t = match family {
            'A' => AdeType::A(m),
            'D' => AdeType::D(m),
            'E' => AdeType::E(m),
            _ => return Err(Error::Parse(format!("bad Dynkin type '{s}'"))),
        };
        t.validate().map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Builder-level description of a finite diagram: its highest root laid out in
/// the builder, plus the vertices the extending vertex attaches to.
fn hrr_into(b: &mut GraphBuilder, t: AdeType) -> Vec<usize> {
    match t {
        AdeType::A(0) => Vec::new(),
        AdeType::A(1) => {
            let v = b.vertex(1);
            vec![v, v]
        }
        AdeType::A(m) => {
            let c = b.chain(&vec![1; m as usize]);
            vec![c[0], c[m as usize - 1]]
        }
        AdeType::D(m) => {
            let mut w = vec![1];
            w.extend(std::iter::repeat(2).take(m as usize - 3));
            let c = b.chain(&w);
            let end = *c.last().unwrap();
            let u1 = b.vertex(1);
            let u2 = b.vertex(1);
            b.edge(end, u1, 1);
            b.edge(end, u2, 1);
            vec![c[1]]
        }
        AdeType::E(6) => {
            let c = b.chain(&[1, 2, 3, 2, 1]);
            let top = b.vertex(2);
            b.edge(c[2], top, 1);
            vec![top]
        }
        AdeType::E(7) => {
            let c = b.chain(&[2, 3, 4, 3, 2, 1]);
            let top = b.vertex(2);
            b.edge(c[2], top, 1);
            vec![c[0]]
        }
        AdeType::E(8) => {
            let c = b.chain(&[2, 4, 6, 5, 4, 3, 2]);
            let top = b.vertex(3);
            b.edge(c[2], top, 1);
            vec![c[6]]
        }
        AdeType::E(_) => unreachable!("validated E type"),
    }
}

/// Appends the highest root of `t` to `b` and returns the builder ids of the
/// vertices the extending vertex must be joined to (with repetition for
/// double edges).
pub fn append_hrr(b: &mut GraphBuilder, t: AdeType) -> Vec<usize> {
    hrr_into(b, t)
}

/// Appends the highest root of `t` and joins it to the existing vertex `ext`
/// as the extending vertex; for `A_0` a loop is placed at `ext`.
pub fn attach_as_extension(b: &mut GraphBuilder, t: AdeType, ext: usize) {
    let targets = hrr_into(b, t);
    if t.is_trivial() {
        b.add_loops(ext, 1);
    }
    for v in targets {
        b.edge(ext, v, 1);
    }
}

/// Finite Dynkin diagram with its highest root.
pub fn hrr(t: AdeType) -> Result<(WeightedGraph, DimVector)> {
    let t = t.validate()?;
    if t.is_trivial() {
        return Ok((WeightedGraph::empty(), DimVector::new(Vec::new())));
    }
    let mut b = GraphBuilder::new();
    hrr_into(&mut b, t);
    Ok(b.build())
}

/// Affine Dynkin diagram with its minimal imaginary root; the extending vertex
/// is the last one.
pub fn mir(t: AdeType) -> Result<(WeightedGraph, DimVector)> {
    let t = t.validate()?;
    let mut b = GraphBuilder::new();
    let targets = hrr_into(&mut b, t);
    let ext = b.vertex(1);
    if t.is_trivial() {
        b.add_loops(ext, 1);
    }
    for v in targets {
        b.edge(ext, v, 1);
    }
    Ok(b.build())
}

/// The vertex of `mir(t)` added by the affine extension.
pub fn extending_vertex(t: AdeType) -> usize {
    t.rank() as usize
}
