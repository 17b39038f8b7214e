//! Namikawa Weyl groups of four-dimensional quiver varieties.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ade::AdeType;
use crate::error::Result;
use crate::graph::{DimVector, WeightedGraph};
use crate::stratification::isotropic_decompositions;

/// A product of finite Weyl groups.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NamikawaGroup {
    /// Nontrivial factors, sorted.
    pub factors: Vec<AdeType>,
    pub order: BigUint,
}

impl NamikawaGroup {
    pub fn from_factors(factors: impl IntoIterator<Item = AdeType>) -> Self {
        let mut factors: Vec<AdeType> = factors.into_iter().filter(|t| !t.is_trivial()).collect();
        factors.sort();
        let order = factors.iter().fold(BigUint::one(), |acc, t| acc * t.weyl_order());
        NamikawaGroup { factors, order }
    }
}

impl fmt::Display for NamikawaGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial, order 1");
        }
        let names: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}, order {}", names.join(" x "), self.order)
    }
}

/// The product of the Weyl groups of the slice types `θ` over all isotropic
/// decompositions. Defined for `p = 2` elements of Σ only.
pub fn namikawa_group(g: &WeightedGraph, a: &DimVector) -> Result<NamikawaGroup> {
    let decs = isotropic_decompositions(g, a)?;
    Ok(NamikawaGroup::from_factors(decs.into_iter().map(|d| d.theta)))
}

/// Number of reflecting hyperplanes of the group.
pub fn coxeter_hyperplane_count(ng: &NamikawaGroup) -> u64 {
    ng.factors.iter().map(|t| t.positive_root_count()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;

    #[test]
    fn examples() {
        let (g, a) = build_family("II(D4)".parse().unwrap()).unwrap();
        let ng = namikawa_group(&g, &a).unwrap();
        assert_eq!(ng.factors, [AdeType::A(3)]);
        assert_eq!(ng.order, BigUint::from(24u32));
        assert_eq!(coxeter_hyperplane_count(&ng), 6);
        let (g, a) = build_family("IIIb".parse().unwrap()).unwrap();
        assert_eq!(namikawa_group(&g, &a).unwrap().to_string(), "D10, order 1857945600");
        let two = NamikawaGroup::from_factors([AdeType::A(2), AdeType::A(2)]);
        assert_eq!(coxeter_hyperplane_count(&two), 6);
        let (g, a) = build_family("I(1,1,1)".parse().unwrap()).unwrap();
        assert!(namikawa_group(&g, &a).unwrap().factors.is_empty());
    }

    #[test]
    fn refuses_wrong_dimension() {
        let (g, d) = crate::ade::mir(AdeType::D(4)).unwrap();
        assert!(namikawa_group(&g, &d).is_err());
    }
}
