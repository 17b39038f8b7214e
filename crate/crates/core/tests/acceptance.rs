//! Acceptance suite: one pass/fail line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_strata::ade::{hrr, mir, AdeType};
use quiver_strata::arrangement::*;
use quiver_strata::classification::{enumerate_p2_fundamental, family_instances};
use quiver_strata::family::{build_family, FamilyName};
use quiver_strata::graph::{DimVector, WeightedGraph};
use quiver_strata::iso::weighted_graph_isomorphic;
use quiver_strata::namikawa::{coxeter_hyperplane_count, namikawa_group};
use quiver_strata::roots::{classify_root, reflect};
use quiver_strata::sigma::{canonical_decomposition, in_sigma, sigma_decompositions};
use quiver_strata::stratification::{hasse_diagram, sym2_hasse, EdgeLabel};
use quiver_strata::tables::{check_isotropic_table, check_namikawa_table, golden_grid};

use AdeType::{A, D, E};

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fam(s: &str) -> (WeightedGraph, DimVector) {
    build_family(s.parse().unwrap()).unwrap()
}

fn ade_types(max: u32) -> Vec<AdeType> {
    let mut v: Vec<AdeType> = (1..=max).map(A).collect();
    v.extend((4..=max).map(D));
    v.extend((6..=max.min(8)).map(E));
    v
}

fn sorted(a: &DimVector) -> Vec<i64> {
    let mut v = a.as_slice().to_vec();
    v.sort();
    v
}

fn expected_weights(t: AdeType) -> (Vec<i64>, Vec<i64>) {
    let (mut m, mut h) = match t {
        A(r) => (vec![1; r as usize + 1], vec![1; r as usize]),
        D(r) => {
            let twos = vec![2; r as usize - 3];
            ([vec![1; 4], twos.clone()].concat(), [vec![1; 3], twos].concat())
        }
        E(6) => (vec![1, 1, 1, 2, 2, 2, 3], vec![1, 1, 2, 2, 2, 3]),
        E(7) => (vec![1, 1, 2, 2, 2, 3, 3, 4], vec![1, 2, 2, 2, 3, 3, 4]),
        E(_) => (vec![1, 2, 2, 3, 3, 4, 4, 5, 6], vec![2, 2, 3, 3, 4, 4, 5, 6]),
    };
    m.sort();
    h.sort();
    (m, h)
}

fn c1_affine_and_highest_roots() -> Result<(), String> {
    for t in ade_types(10).into_iter().filter(|t| !matches!(t, A(9..) | D(11..))) {
        let (mg, md) = mir(t).unwrap();
        let (hg, hd) = hrr(t).unwrap();
        let (em, eh) = expected_weights(t);
        ensure(mg.p(&md).unwrap() == 1 && mg.balances(&md).unwrap().iter().all(|&b| b == 0), || format!("mir({t})"))?;
        ensure(hg.p(&hd).unwrap() == 0, || format!("p(hrr({t}))"))?;
        ensure(sorted(&md) == em && sorted(&hd) == eh, || format!("weights of {t}"))?;
        let positive: Vec<i64> = hg.balances(&hd).unwrap().into_iter().filter(|&b| b > 0).collect();
        let expect_pos = match t {
            A(1) => vec![2],
            A(_) => vec![1, 1],
            _ => vec![1],
        };
        ensure(positive == expect_pos, || format!("positive balances of hrr({t}): {positive:?}"))?;
    }
    ensure(hrr(E(8)).unwrap().1.height() == 29, || "height of hrr(E8)".into())
}

fn c2_family_grid() -> Result<(), String> {
    for f in golden_grid(8) {
        let (g, a) = build_family(f).unwrap();
        ensure(g.p(&a).unwrap() == 2, || format!("p({f})"))?;
        ensure(g.balances(&a).unwrap().iter().all(|&b| b <= 0), || format!("balances of {f}"))?;
        ensure(in_sigma(&g, &a).unwrap(), || format!("{f} not in sigma"))?;
    }
    for f in FamilyName::excluded_grid(8, 8) {
        let (g, a) = build_family(f).unwrap();
        ensure(g.p(&a).unwrap() == 2, || format!("p({f})"))?;
        ensure(!in_sigma(&g, &a).unwrap(), || format!("{f} in sigma"))?;
    }
    Ok(())
}

fn c3_completeness() -> Result<(), String> {
    let found = enumerate_p2_fundamental(5, 6).unwrap();
    let unmatched = found.iter().filter(|c| c.family.is_none()).count();
    ensure(unmatched == 0, || format!("{unmatched} unmatched vectors"))?;
    let catalogue = family_instances(5, 6).unwrap();
    ensure(found.len() == catalogue.len(), || format!("{} found, {} expected", found.len(), catalogue.len()))?;
    for (name, g, a) in &catalogue {
        let hit = found.iter().any(|c| weighted_graph_isomorphic(&c.graph, &c.dim, g, a).unwrap());
        ensure(hit, || format!("{name} not enumerated"))?;
    }
    Ok(())
}

fn c4_isotropic_table() -> Result<(), String> {
    let rows = check_isotropic_table(&golden_grid(8)).unwrap();
    if let Some(r) = rows.iter().find(|r| !r.passed()) {
        return Err(format!("{}: expected {:?}, computed {:?}", r.family, r.expected, r.computed));
    }
    let get = |s: &str| rows.iter().find(|r| r.family == s).map(|r| r.computed.clone()).unwrap();
    ensure(get("III(D4,1)") == vec![(D(4), A(1)); 5], || "III(D4,1)".into())?;
    ensure(get("I(E7,0)") == vec![(A(5), E(6))], || "I(E7,0)".into())?;
    ensure(get("I(E7,1)") == vec![(A(6), E(6))], || "I(E7,1)".into())?;
    ensure(get("I(E7,2)") == vec![(A(7), E(6)), (E(7), A(1))], || "I(E7,2)".into())
}

fn c5_namikawa_table() -> Result<(), String> {
    let rows = check_namikawa_table(&golden_grid(8)).unwrap();
    if let Some(r) = rows.iter().find(|r| !r.passed()) {
        return Err(format!("{}: expected {}, computed {}", r.family, r.expected, r.computed));
    }
    for (s, n) in [("Ia", 23040u64), ("IIb", 696729600), ("IIIb", 1857945600)] {
        let (g, a) = fam(s);
        let order = namikawa_group(&g, &a).unwrap().order;
        ensure(order == BigUint::from(n), || format!("{s}: {order}"))?;
    }
    Ok(())
}

fn c6_first_secondary_arrangement() -> Result<(), String> {
    let (g, a) = fam("I(1,1,3)");
    let r = num_resolutions(&g, &a).unwrap();
    ensure(
        r.hyperplanes == 6 && r.chambers == BigUint::from(24u32) && r.n_resolutions == BigUint::from(4u32),
        || format!("{r:?}"),
    )
}

fn c7_coxeter_coincidence() -> Result<(), String> {
    let (g, a) = fam("II(D4)");
    let arr = secondary_arrangement(&g, &a).unwrap();
    let cox = coxeter_hyperplane_count(&namikawa_group(&g, &a).unwrap());
    let r = num_resolutions(&g, &a).unwrap();
    ensure(arr.len() == 6 && cox == 6 && r.n_resolutions == BigUint::from(1u32), || format!("II(D4): {r:?}"))?;
    let (g, a) = fam("I(1,1,4)");
    let r = num_resolutions(&g, &a).unwrap();
    ensure(r.hyperplanes >= 7 && r.n_resolutions >= BigUint::from(2u32), || format!("I(1,1,4): {r:?}"))?;
    ensure(r.hyperplanes == 10 && r.n_resolutions == BigUint::from(5u32), || format!("I(1,1,4) pinned: {r:?}"))
}

fn agree(arr: &Arrangement) -> Result<BigUint, String> {
    let z = count_chambers(arr).map_err(|e| e.to_string())?;
    let d = count_chambers_deletion_restriction(arr).map_err(|e| e.to_string())?;
    let o = count_chambers_oracle(arr).map_err(|e| e.to_string())?;
    ensure(z == d && d == o, || format!("{arr:?}: {z} {d} {o}"))?;
    Ok(z)
}

fn c8_counter_cross_validation() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=10);
        let normals = (0..k).map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect::<Vec<i64>>());
        agree(&Arrangement::new(dim, normals).unwrap())?;
    }
    // Positive roots of A_{n-1} in simple-root coordinates.
    let type_a = |n: usize| {
        let mut out = Vec::new();
        for i in 0..n - 1 {
            for j in i..n - 1 {
                let mut v = vec![0i64; n - 1];
                for x in &mut v[i..=j] {
                    *x = 1;
                }
                out.push(v);
            }
        }
        Arrangement::new(n - 1, out).unwrap()
    };
    for (n, expect) in [(3usize, 6u32), (4, 24), (5, 120)] {
        let c = agree(&type_a(n))?;
        ensure(c == BigUint::from(expect), || format!("A{}: {c}", n - 1))?;
    }
    let d4 = (0..4)
        .flat_map(|i| (i + 1..4).flat_map(move |j| [1i64, -1].map(|s| (i, j, s))))
        .map(|(i, j, s)| {
            let mut v = vec![0i64; 4];
            v[i] = 1;
            v[j] = s;
            v
        });
    let c = agree(&Arrangement::new(4, d4).unwrap())?;
    ensure(c == BigUint::from(192u32), || format!("D4: {c}"))
}

fn box_roots_oracle(g: &WeightedGraph, bound: i64) -> BTreeSet<Vec<i64>> {
    // Seeds: loopfree simple roots and the fundamental set in the box, by
    // direct Cartan-matrix evaluation; then close upward under reflections.
    let n = g.n_vertices();
    let c = g.cartan_matrix();
    let mut seeds = Vec::new();
    let mut v = vec![0i64; n];
    loop {
        let mut k = 0;
        while k < n && v[k] == bound {
            v[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        v[k] += 1;
        let mask: Vec<bool> = (0..n).map(|i| v[i] > 0).collect();
        let fundamental =
            g.is_connected_subset(&mask) && (0..n).all(|i| (0..n).map(|j| c[i][j] * v[j]).sum::<i64>() <= 0);
        let simple = v.iter().sum::<i64>() == 1;
        if fundamental || simple {
            seeds.push(v.clone());
        }
    }
    let mut seen: BTreeSet<Vec<i64>> = seeds.iter().cloned().collect();
    let mut stack = seeds;
    while let Some(x) = stack.pop() {
        for i in (0..n).filter(|&i| g.is_loopfree(i)) {
            let b: i64 = (0..n).map(|j| c[i][j] * x[j]).sum();
            let mut y = x.clone();
            y[i] -= b;
            if y.iter().all(|&t| (0..=bound).contains(&t)) && y.iter().any(|&t| t > 0) && seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = rng.gen_range(0..=2);
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
        }
        let loops = (0..n).map(|_| u32::from(rng.gen_bool(0.2))).collect();
        if let Ok(g) = WeightedGraph::new(n, &edges, loops) {
            return g;
        }
    }
}

fn c9_property_suite() -> Result<(), String> {
    let corpus: Vec<(FamilyName, WeightedGraph, DimVector)> =
        golden_grid(6).into_iter().map(|f| (f, build_family(f).unwrap())).map(|(f, (g, a))| (f, g, a)).collect();
    for (f, g, a) in &corpus {
        let p = g.p(a).unwrap();
        for k in 1..=3 {
            ensure(g.p(&a.scaled(k)).unwrap() == k * k * (p - 1) + 1, || format!("p({k}*{f})"))?;
        }
        for i in (0..g.n_vertices()).filter(|&i| g.is_loopfree(i)) {
            let back = reflect(g, &reflect(g, a, i).unwrap(), i).unwrap();
            ensure(&back == a, || format!("reflection at {i} on {f}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=4);
        let g = random_graph(&mut rng, n);
        let bound = 3;
        let oracle = box_roots_oracle(&g, bound);
        let mut v = vec![0i64; n];
        loop {
            let mut k = 0;
            while k < n && v[k] == bound {
                v[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            v[k] += 1;
            let class = classify_root(&g, &DimVector::new(v.clone()));
            ensure(class.is_root() == oracle.contains(&v), || format!("{v:?} on {:?}: {class:?}", g.edges()))?;
        }
    }
    for (f, g, a) in corpus.iter().filter(|(_, g, a)| g.n_vertices() <= 5 && a.height() <= 8) {
        let canon = canonical_decomposition(g, a).unwrap();
        for d in sigma_decompositions(g, a).unwrap() {
            ensure(d.refines(&canon), || format!("decomposition of {f} does not refine the canonical one"))?;
        }
    }
    for (f, g, a) in corpus.iter().filter(|(_, g, _)| g.n_vertices() <= 6) {
        match num_resolutions(g, a) {
            Ok(_) => {}
            Err(e) if e.is_budget() => {}
            Err(e) => return Err(format!("{f}: {e}")),
        }
    }
    Ok(())
}

fn c10_symmetric_squares() -> Result<(), String> {
    for t in [A(1), A(2), D(4), E(8)] {
        let h = sym2_hasse(t).unwrap();
        ensure(h.dims() == [4, 2, 2, 0], || format!("dims of Sym2({t})"))?;
        let labels: Vec<Option<AdeType>> = h.edges.iter().map(|e| e.2.kleinian()).collect();
        ensure(labels == [Some(t), Some(A(1)), Some(t), Some(t)], || format!("labels of Sym2({t})"))?;
        ensure(h.edges[1].2 == EdgeLabel::Diagonal, || "diagonal edge".into())?;
    }
    let squares: Vec<(AdeType, _)> = ade_types(8).into_iter().map(|t| (t, sym2_hasse(t).unwrap())).collect();
    let mut coincidences = Vec::new();
    for f in golden_grid(8) {
        let (g, a) = build_family(f).unwrap();
        let h = hasse_diagram(&g, &a).unwrap();
        for (t, s) in &squares {
            if s.equivalent(&h) {
                coincidences.push(format!("{t}~{f}"));
            }
        }
    }
    ensure(coincidences == ["A1~II(A1,A1)"], || format!("coincidences {coincidences:?}"))
}

fn c11_conjectures() -> Result<(), String> {
    let names = [
        "I(D4,0)", "I(D4,1)", "I(D4,2)", "I(D5,1)", "I(D5,0)", "I(D6,0)", "I(E6,0)",
    ]
    .map(|s| s.parse::<FamilyName>().unwrap());
    let rows = check_conjectures(&names, DEFAULT_FLAT_LIMIT).unwrap();
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.status == ConjectureStatus::Mismatch)
        .map(|r| format!("{} [{}]: {} vs {:?}", r.family, r.rule, r.predicted, r.computed))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    for r in rows.iter().filter(|r| matches!(r.status, ConjectureStatus::Skipped(_))) {
        println!("    skipped {} [{}]", r.family, r.rule);
    }
    Ok(())
}

fn main() {
    let checks: [(&str, Check); 11] = [
        ("affine and highest root builders", c1_affine_and_highest_roots),
        ("family grid: p = 2, balanced, sigma membership", c2_family_grid),
        ("enumeration completeness at rank 5, weight 6", c3_completeness),
        ("isotropic decompositions match the golden table", c4_isotropic_table),
        ("Namikawa Weyl groups match the golden table", c5_namikawa_table),
        ("I(1,1,3): 6 hyperplanes, 24 chambers, N = 4", c6_first_secondary_arrangement),
        ("II(D4) Coxeter arrangement, I(1,1,4) bounds", c7_coxeter_coincidence),
        ("chamber counters agree", c8_counter_cross_validation),
        ("property suite", c9_property_suite),
        ("symmetric square diamonds", c10_symmetric_squares),
        ("resolution count conjectures at desk scale", c11_conjectures),
    ];
    let mut failed = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
