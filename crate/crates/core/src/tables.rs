//! Expected isotropic decompositions and Namikawa Weyl group orders for the
//! named families, and checks of the computed values against them.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::ade::{d_series, factorial, AdeType};
use crate::error::Result;
use crate::family::{build_family, FamilyName};
use crate::namikawa::{namikawa_group, NamikawaGroup};
use crate::stratification::delta_theta_pairs;

use AdeType::{A, D, E};

fn a(m: i64) -> Vec<AdeType> {
    if m >= 1 {
        vec![A(m as u32)]
    } else {
        Vec::new()
    }
}

fn d(m: u32) -> Vec<AdeType> {
    d_series(m)
}

/// Pairs `(δ, θ)` for each `θ` factor; trivial `θ` contributes nothing.
fn pairs(rows: &[(AdeType, Vec<AdeType>)]) -> Vec<(AdeType, AdeType)> {
    rows.iter().flat_map(|(delta, thetas)| thetas.iter().map(move |t| (*delta, *t))).collect()
}

fn single(delta: Vec<AdeType>, theta: Vec<AdeType>) -> (AdeType, Vec<AdeType>) {
    assert_eq!(delta.len(), 1, "δ is a single affine type");
    (delta[0], theta)
}

/// The `(δ, θ)` pairs of the isotropic decompositions, sorted. `None` for
/// the excluded families.
pub fn expected_delta_theta(f: FamilyName) -> Option<Vec<(AdeType, AdeType)>> {
    use FamilyName::*;
    let (l, m_, n_) = match f {
        ILmn(l, m, n) => (l as i64, m as i64, n as i64),
        _ => (0, 0, 0),
    };
    let rows: Vec<(AdeType, Vec<AdeType>)> = match f {
        ILmn(..) => vec![
            single(a(m_ + n_ - 1), a(l - 1)),
            single(a(l + n_ - 1), a(m_ - 1)),
            single(a(l + m_ - 1), a(n_ - 1)),
        ],
        ID { m, n, prime: false } => {
            vec![(D(m), a(n as i64 - 1)), single(a((m + n) as i64 - 3), a(m as i64 - 1))]
        }
        ID { m, n, prime: true } => vec![(D(m), a(n as i64 - 1)), single(a(n as i64 + 1), d(m - 1))],
        IE { e: 6, n } => vec![(E(6), a(n as i64 - 1)), single(a(n as i64 + 3), d(5))],
        IE { e: _, n } => vec![(E(7), a(n as i64 - 1)), single(a(n as i64 + 5), vec![E(6)])],
        IM(m) => vec![(D(m), a(m as i64 + 1))],
        Ia => vec![(D(5), d(6))],
        Ib => vec![(E(6), d(7))],
        Ic => vec![(D(7), vec![E(7)])],
        II(x, y) if x.is_trivial() && y.is_trivial() => Vec::new(),
        II(x, y) if x.is_trivial() => vec![(x, vec![y])],
        II(x, y) => vec![(x, vec![y]), (y, vec![x])],
        IIM(m) => vec![(D(m), d(m + 2))],
        IIa => vec![(D(6), vec![E(7)])],
        IIb => vec![(E(7), vec![E(8)])],
        IIID { m, i } => vec![
            (D(m), vec![A(1)]),
            single(d(m - i + 1), d(i + 1)),
            single(d(i + 3), d(m - i - 1)),
        ],
        IIIE7 => vec![(E(6), vec![A(7)]), (E(7), vec![A(1)])],
        IIIE8 => vec![(E(7), d(8)), (E(8), vec![A(1)])],
        IIIMn { m, n: 6 } => vec![single(d(m + 1), vec![A(5)]), (E(6), d(m - 2))],
        IIIMn { m, n: 7 } => vec![single(d(m + 2), d(6)), (E(7), d(m - 2))],
        IIIMn { m, n: _ } => vec![single(d(m + 4), vec![E(7)]), (E(8), d(m - 2))],
        IIIa => vec![(E(7), vec![A(9)])],
        IIIb => vec![(E(8), d(10))],
        XI(..) | XIII(_) => return None,
    };
    let mut out = pairs(&rows);
    out.sort();
    Some(out)
}

fn pow2(k: u32) -> BigUint {
    BigUint::one() << k as usize
}

fn fact(n: u32) -> BigUint {
    factorial(n as u64)
}

fn binom(n: u32, k: u32) -> BigUint {
    fact(n) / (fact(k) * fact(n - k))
}

fn weyl(ts: &[AdeType]) -> BigUint {
    NamikawaGroup::from_factors(ts.iter().copied()).order
}

/// The Namikawa Weyl group order in closed form. `None` for the excluded
/// families.
pub fn expected_namikawa_order(f: FamilyName) -> Option<BigUint> {
    use FamilyName::*;
    let n = |x: u32| BigUint::from(x);
    Some(match f {
        ILmn(l, m, k) => fact(l) * fact(m) * fact(k),
        ID { m, n: k, prime: false } => fact(m) * fact(k),
        ID { m, n: k, prime: true } => pow2(m - 2) * fact(m - 1) * fact(k),
        IE { e: 6, n: k } => n(1920) * fact(k),
        IE { e: _, n: k } => n(51840) * fact(k),
        IM(m) => fact(m + 2),
        Ia => n(23040),
        Ib => n(322560),
        Ic => n(2903040),
        II(x, y) => weyl(&[x]) * weyl(&[y]),
        IIM(m) => pow2(m + 1) * fact(m + 2),
        IIa => n(2903040),
        IIb => n(696729600),
        IIID { m, i } => pow2(m - 1) * fact(m) / binom(m, i + 1),
        IIIE7 => n(80640),
        IIIE8 => n(10321920),
        IIIMn { m, n: 6 } => pow2(m) * n(90) * fact(m - 2),
        IIIMn { m, n: 7 } => pow2(m) * n(2880) * fact(m - 2),
        IIIMn { m, n: _ } => pow2(m) * n(362880) * fact(m - 2),
        IIIa => n(3628800),
        IIIb => n(1857945600),
        XI(..) | XIII(_) => return None,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RowCheck<T> {
    pub family: String,
    pub expected: T,
    pub computed: T,
}

impl<T: PartialEq> RowCheck<T> {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Families of the golden grid with parameters at most `max`, skipping the
/// excluded families and collapsing aliases.
pub fn golden_grid(max: u32) -> Vec<FamilyName> {
    let mut out: Vec<FamilyName> = FamilyName::grid(max).into_iter().filter_map(|f| f.normalized().ok()).collect();
    out.dedup();
    out
}

/// Computed against expected `(δ, θ)` pairs for every family in `names`.
pub fn check_isotropic_table(names: &[FamilyName]) -> Result<Vec<RowCheck<Vec<(AdeType, AdeType)>>>> {
    use rayon::prelude::*;
    names
        .par_iter()
        .filter_map(|&f| expected_delta_theta(f).map(|e| (f, e)))
        .map(|(f, expected)| {
            let (g, a) = build_family(f)?;
            let mut computed = delta_theta_pairs(&g, &a)?;
            computed.sort();
            Ok(RowCheck { family: f.to_string(), expected, computed })
        })
        .collect()
}

/// Computed against closed-form Namikawa Weyl group orders.
pub fn check_namikawa_table(names: &[FamilyName]) -> Result<Vec<RowCheck<BigUint>>> {
    use rayon::prelude::*;
    names
        .par_iter()
        .filter_map(|&f| expected_namikawa_order(f).map(|e| (f, e)))
        .map(|(f, expected)| {
            let (g, a) = build_family(f)?;
            let computed = namikawa_group(&g, &a)?.order;
            Ok(RowCheck { family: f.to_string(), expected, computed })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(expected_namikawa_order(FamilyName::Ia), Some(BigUint::from(23040u32)));
        assert_eq!(expected_namikawa_order(FamilyName::IIID { m: 4, i: 1 }), Some(BigUint::from(32u32)));
        assert_eq!(expected_delta_theta(FamilyName::IIID { m: 4, i: 1 }).unwrap(), vec![(D(4), A(1)); 5]);
        assert_eq!(expected_delta_theta(FamilyName::ILmn(1, 1, 1)).unwrap(), vec![]);
        assert_eq!(expected_delta_theta(FamilyName::II(A(0), D(4))).unwrap(), vec![(A(0), D(4))]);
    }
}
