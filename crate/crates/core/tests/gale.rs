use discarr::arrangement::random_generic;
use discarr::discriminantal::construct_dependent;
use discarr::exact::proportional;
use discarr::gale::{
    dependent_partition_exists, essential_normals_via_gale, gale_transform, is_associated,
    pencil_partition_exists, unit_weights, PointConfig,
};
use discarr::subset::binomial;
use discarr::GenericArrangement;
use proptest::prelude::*;

fn normals_as_config(a: &GenericArrangement) -> PointConfig {
    PointConfig::new(a.normals().transpose()).unwrap()
}

/// A dependent partition of `3s` hyperplanes of `P^(2s-2)` is a pencil
/// partition of their Gale dual, with the same groups.
fn duality_holds(a: &GenericArrangement, s: usize) -> (bool, bool) {
    let p = normals_as_config(a);
    let q = gale_transform(&p).unwrap();
    assert_eq!(q.d(), s + 1);
    let dep = dependent_partition_exists(&p, s).unwrap();
    let pen = pencil_partition_exists(&q, s).unwrap();
    (dep.is_some(), dep == pen)
}

#[test]
fn dependency_dualizes_to_pencil_s2() {
    for seed in 0..4 {
        let (found, same) = duality_holds(&construct_dependent(2, 0, seed).unwrap(), 2);
        assert!(found && same, "seed {seed}");
        let (found, same) = duality_holds(&random_generic(6, 3, seed, 12).unwrap(), 2);
        assert!(same, "seed {seed}, random has dependency {found}");
    }
}

#[test]
fn dependency_dualizes_to_pencil_s3() {
    for seed in 0..2 {
        let (found, same) = duality_holds(&construct_dependent(3, 0, seed).unwrap(), 3);
        assert!(found && same, "seed {seed}");
        let (found, same) = duality_holds(&random_generic(9, 5, seed, 18).unwrap(), 3);
        assert!(!found && same, "seed {seed}");
    }
}

#[test]
fn essential_normals_across_sizes() {
    for (n, k) in [(4, 1), (5, 2), (6, 2), (7, 4), (8, 3)] {
        let a = random_generic(n, k, 7, 2 * n as i64).unwrap();
        let e = essential_normals_via_gale(&a).unwrap();
        assert_eq!(e.len(), binomial(n, k + 1));
        assert!(e.iter().all(|x| proportional(&x.normal, &x.quotient_image)));
        assert!(e.iter().all(|x| x.normal.len() == n - k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gale_dual_is_associated(seed in 0u64..1000, n in 5usize..9, d in 2usize..4) {
        prop_assume!(d < n - 1);
        let a = random_generic(n, d, seed, 20).unwrap();
        let p = normals_as_config(&a);
        let q = gale_transform(&p).unwrap();
        prop_assert_eq!(q.d(), n - d);
        prop_assert!(is_associated(&p, &unit_weights(n), &q).unwrap());
        let back = gale_transform(&q).unwrap();
        prop_assert!(is_associated(&q, &unit_weights(n), &back).unwrap());
    }
}
