use std::collections::BTreeSet;

use proptest::prelude::*;

use quiver_strata::family::build_family;
use quiver_strata::format::{read_quiver, write_quiver};
use quiver_strata::iso::{canonical_form, DEFAULT_ISO_LIMIT};
use quiver_strata::roots::{classify_root, reflect};
use quiver_strata::sigma::{canonical_decomposition, in_sigma, in_sigma_oracle, sigma_decompositions};
use quiver_strata::tables::golden_grid;
use quiver_strata::{DimVector, WeightedGraph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(0u32..=2, pairs), prop::collection::vec(0u32..=1, n))
        })
        .prop_filter_map("connected", |(n, mults, loops)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if mults[k] > 0 {
                        edges.push((i, j, mults[k]));
                    }
                    k += 1;
                }
            }
            WeightedGraph::new(n, &edges, loops).ok()
        })
}

fn graph_and_dim(max_n: usize, max_entry: i64) -> impl Strategy<Value = (WeightedGraph, DimVector)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let n = g.n_vertices();
        (Just(g), prop::collection::vec(0..=max_entry, n).prop_map(DimVector::new))
    })
}

/// Positive roots with entries at most `bound`: simple and fundamental
/// vectors closed under reflections that stay in the box.
fn roots_in_box(g: &WeightedGraph, bound: i64) -> BTreeSet<Vec<i64>> {
    let n = g.n_vertices();
    let c = g.cartan_matrix();
    let bal = |v: &[i64], i: usize| (0..n).map(|j| c[i][j] * v[j]).sum::<i64>();
    let mut seeds = Vec::new();
    let total = (bound + 1).pow(n as u32);
    for code in 1..total {
        let v: Vec<i64> = (0..n).map(|i| code / (bound + 1).pow(i as u32) % (bound + 1)).collect();
        let mask: Vec<bool> = v.iter().map(|&x| x > 0).collect();
        let fundamental = g.is_connected_subset(&mask) && (0..n).all(|i| bal(&v, i) <= 0);
        if fundamental || v.iter().sum::<i64>() == 1 {
            seeds.push(v);
        }
    }
    let mut seen: BTreeSet<Vec<i64>> = seeds.iter().cloned().collect();
    while let Some(x) = seeds.pop() {
        for i in (0..n).filter(|&i| g.is_loopfree(i)) {
            let mut y = x.clone();
            y[i] -= bal(&x, i);
            if y.iter().all(|&t| (0..=bound).contains(&t)) && y.iter().any(|&t| t > 0) && seen.insert(y.clone()) {
                seeds.push(y);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn p_of_multiples((g, a) in graph_and_dim(5, 4)) {
        let p = g.p(&a).unwrap();
        for k in 1..=3 {
            prop_assert_eq!(g.p(&a.scaled(k)).unwrap(), k * k * (p - 1) + 1);
        }
    }

    #[test]
    fn euler_form_is_symmetric((g, a) in graph_and_dim(5, 4), seed in prop::collection::vec(0i64..=4, 5)) {
        let b = DimVector::new(seed[..g.n_vertices()].to_vec());
        prop_assert_eq!(g.euler_form(&a, &b).unwrap(), g.euler_form(&b, &a).unwrap());
        prop_assert_eq!(g.p(&a).unwrap(), 1 - g.euler_form(&a, &a).unwrap() / 2);
    }

    #[test]
    fn reflection_is_an_involution((g, a) in graph_and_dim(5, 4)) {
        for i in (0..g.n_vertices()).filter(|&i| g.is_loopfree(i)) {
            let r = reflect(&g, &a, i).unwrap();
            prop_assert_eq!(g.p(&r).unwrap(), g.p(&a).unwrap());
            prop_assert_eq!(reflect(&g, &r, i).unwrap(), a.clone());
        }
    }

    #[test]
    fn classify_root_matches_orbit_search(g in graph_strategy(4)) {
        let bound = 3;
        let oracle = roots_in_box(&g, bound);
        let n = g.n_vertices();
        for code in 1..(bound + 1).pow(n as u32) {
            let v: Vec<i64> = (0..n).map(|i| code / (bound + 1).pow(i as u32) % (bound + 1)).collect();
            let class = classify_root(&g, &DimVector::new(v.clone()));
            prop_assert_eq!(class.is_root(), oracle.contains(&v), "{:?}", v);
        }
    }

    #[test]
    fn sigma_fast_path_matches_oracle((g, a) in graph_and_dim(4, 3)) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(in_sigma(&g, &a).unwrap(), in_sigma_oracle(&g, &a, 1_000_000).unwrap());
    }

    #[test]
    fn decompositions_refine_the_canonical_one((g, a) in graph_and_dim(4, 3)) {
        prop_assume!(!a.is_zero());
        let canon = canonical_decomposition(&g, &a).unwrap();
        prop_assert_eq!(canon.total(), Some(a.clone()));
        for d in sigma_decompositions(&g, &a).unwrap() {
            prop_assert!(d.refines(&canon));
        }
    }

    #[test]
    fn quiver_files_round_trip((g, a) in graph_and_dim(6, 5)) {
        let text = write_quiver(&g, &a);
        let (g2, a2) = read_quiver(&text).unwrap();
        prop_assert_eq!(write_quiver(&g2, &a2), text);
    }

    #[test]
    fn canonical_form_ignores_vertex_order((g, a) in graph_and_dim(6, 3), perm_seed in any::<u64>()) {
        let n = g.n_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let h = g.permuted(&perm);
        let mut b = vec![0; n];
        for i in 0..n {
            b[perm[i]] = a[i];
        }
        let (c1, _) = canonical_form(&g, &a, DEFAULT_ISO_LIMIT).unwrap();
        let (c2, _) = canonical_form(&h, &DimVector::new(b), DEFAULT_ISO_LIMIT).unwrap();
        prop_assert_eq!(c1, c2);
    }
}

#[test]
fn p_of_multiples_on_family_corpus() {
    for f in golden_grid(8) {
        let (g, a) = build_family(f).unwrap();
        for k in 1..=3 {
            assert_eq!(g.p(&a.scaled(k)).unwrap(), k * k + 1, "{f}");
        }
    }
}
