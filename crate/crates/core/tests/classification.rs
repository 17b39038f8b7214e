use quiver_strata::classification::*;
use quiver_strata::family::{build_family, FamilyName, TypeTag};
use quiver_strata::sigma::in_sigma;

#[test]
fn enumeration_is_complete_at_rank_six() {
    let found = enumerate_p2_fundamental(6, 6).unwrap();
    assert_eq!(found.len(), 66);
    assert!(found.iter().all(|c| c.family.is_some()));
    assert_eq!(found.len(), family_instances(6, 6).unwrap().len());
}

#[test]
fn sigma_separates_excluded_families() {
    for c in enumerate_p2_fundamental(6, 6).unwrap() {
        let f = c.family.unwrap();
        assert_eq!(in_sigma(&c.graph, &c.dim).unwrap(), !f.is_excluded(), "{f}");
    }
}

#[test]
fn lemma_predicates_hold_on_enumerated_vectors() {
    for c in enumerate_p2_fundamental(6, 6).unwrap() {
        let f = c.family.unwrap();
        assert!(stepdown_holds(&c.graph, &c.dim).unwrap(), "{f}");
        assert!(stepup_holds(&c.graph, &c.dim).unwrap(), "{f}");
        assert!(one_chain_ok(&c.graph, &c.dim).unwrap(), "{f}");
        assert!(twelve_chain_ok(&c.graph, &c.dim).unwrap(), "{f}");
        for i in 0..c.graph.n_vertices() {
            for (j, _) in c.graph.neighbors(i) {
                assert!(half_lemma_strict(&c.graph, &c.dim, i, j).unwrap(), "{f} at {i}-{j}");
            }
        }
    }
}

#[test]
fn unbalanced_vertices_have_listed_local_structure() {
    for c in enumerate_p2_fundamental(6, 6).unwrap() {
        let f = c.family.unwrap();
        if f == FamilyName::ILmn(1, 1, 1) {
            continue;
        }
        let tag = c.signature.type_tag;
        for &(i, _, _) in &c.signature.unbalanced {
            let m = match_local_structure(&c.graph, &c.dim, i, tag).unwrap();
            assert!(m.is_some(), "{f} at vertex {i}");
        }
    }
}

#[test]
fn signatures_agree_with_family_tags() {
    for f in FamilyName::grid(6) {
        let Ok(f) = f.normalized() else { continue };
        let (g, a) = build_family(f).unwrap();
        let sig = unbalanced_signature(&g, &a).unwrap().unwrap();
        let tag = match f {
            FamilyName::ID { n: 0, .. } | FamilyName::IE { n: 0, .. } => TypeTag::II,
            _ => f.type_tag(),
        };
        assert_eq!(sig.type_tag, tag, "{f}");
        let expected = match tag {
            TypeTag::I => 2,
            _ => 1,
        };
        assert_eq!(sig.unbalanced.len(), expected);
    }
}

#[test]
fn family_lookup_round_trips() {
    for (name, g, a) in family_instances(5, 6).unwrap() {
        assert_eq!(match_family(&g, &a).unwrap(), Some(name));
    }
}
