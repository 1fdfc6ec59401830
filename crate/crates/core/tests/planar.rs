use discarr::arrangement::random_generic;
use discarr::discriminantal::codim_of_sets;
use discarr::planar::{codim_combinatorial, verify_independence, verify_on_traces, IndexFamily};
use discarr::subset::IndexSet;
use discarr::GenericArrangement;
use proptest::prelude::*;

/// Six lines joining four points of the plane; line `(i, j)` has normal
/// perpendicular to `P_j - P_i`.
fn quadrilateral_trace() -> GenericArrangement {
    let p = [(0i64, 0i64), (1, 0), (0, 1), (3, 5)];
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let rows: Vec<Vec<i64>> = pairs
        .iter()
        .map(|&(i, j)| vec![-(p[j].1 - p[i].1), p[j].0 - p[i].0])
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    GenericArrangement::from_i64(&refs).unwrap()
}

fn quadrilateral_family() -> IndexFamily {
    IndexFamily::from_labels(6, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]]).unwrap()
}

#[test]
fn random_traces_agree_with_formula_on_quadrilateral() {
    let f = quadrilateral_family();
    assert_eq!(codim_combinatorial(&f), 4);
    for seed in 0..5 {
        let a = random_generic(6, 2, seed, 50).unwrap();
        assert_eq!(codim_of_sets(&a, f.sets()).unwrap(), 4, "seed {seed}");
    }
}

#[test]
fn special_quadrilateral_trace_lowers_codimension() {
    // The four triples of lines meeting at the four vertices are
    // simultaneously concurrent for every homothety of the configuration,
    // so their strata share one extra dimension on this trace only.
    let a = quadrilateral_trace();
    assert!(a.is_trace_generic().unwrap());
    let f = quadrilateral_family();
    assert_eq!(codim_of_sets(&a, f.sets()).unwrap(), 3);
    let report = verify_on_traces(6, 4, &[a]).unwrap();
    let quad: Vec<Vec<usize>> = f.sets().iter().map(|s| s.labels()).collect();
    let hit = report
        .discrepancies
        .iter()
        .find(|d| d.collection == quad)
        .expect("the quadrilateral collection is reported");
    assert_eq!((hit.formula, hit.oracle_dims.clone()), (2, vec![3]));
}

#[test]
fn larger_n_has_no_discrepancy() {
    let r = verify_independence(8, 3, 3, 5).unwrap();
    assert!(r.discrepancies.is_empty(), "{:?}", r.discrepancies.first());
    assert!(r.collections_checked > 0);
}

#[test]
fn reports_are_deterministic() {
    let a = verify_independence(5, 3, 2, 9).unwrap();
    let b = verify_independence(5, 3, 2, 9).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn formula_matches_rank_on_random_families(
        seed in 0u64..10_000,
        n in 5usize..10,
        picks in proptest::collection::vec(proptest::collection::btree_set(0usize..9, 3), 1..6),
    ) {
        let sets: Vec<IndexSet> = picks
            .iter()
            .filter(|s| s.iter().all(|&i| i < n))
            .map(|s| IndexSet::from_indices(s.iter().copied()))
            .collect();
        prop_assume!(!sets.is_empty());
        let mut sets = sets;
        sets.sort();
        sets.dedup();
        let f = IndexFamily::new(n, sets).unwrap();
        let a = random_generic(n, 2, seed, 60).unwrap();
        prop_assert_eq!(codim_of_sets(&a, f.sets()).unwrap(), codim_combinatorial(&f));
    }
}
