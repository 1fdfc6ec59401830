use discarr::arrangement::random_generic;
use discarr::discriminantal::{codim2_census, construct_dependent};
use discarr::exact::rat;
use discarr::monodromy::{
    braid_monodromy, nilpotent_relations, presentation, random_section, section_report,
    singular_points, Automorphism, BraidWord, FreeWord, SectionLine,
};
use discarr::subset::{binomial, IndexSet};

fn cyclic_reduce(w: &FreeWord) -> Vec<i32> {
    let mut v = w.letters().to_vec();
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.remove(0);
        v.pop();
    }
    v
}

fn same_cycle(a: &[i32], b: &[i32]) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|r| a.iter().cycle().skip(r).take(a.len()).eq(b.iter()))
}

#[test]
fn two_lines_give_the_commutator() {
    let lines = vec![
        SectionLine { set: IndexSet::singleton(0), slope: rat(1), intercept: rat(0) },
        SectionLine { set: IndexSet::singleton(1), slope: rat(-1), intercept: rat(0) },
    ];
    let points = singular_points(&lines).unwrap();
    let braids = braid_monodromy(&lines, &points, &rat(-1)).unwrap();
    assert_eq!(braids[0].gamma.letters, vec![1, 1]);
    let commutator = FreeWord::new(vec![1, 2, -1, -2]);
    for reduce in [false, true] {
        let p = presentation(&braids, 2, reduce);
        assert!(!p.relators.is_empty());
        for r in &p.relators {
            let c = cyclic_reduce(r);
            assert!(
                same_cycle(&c, commutator.letters()) || same_cycle(&c, commutator.inverse().letters()),
                "{}",
                r.to_text()
            );
        }
        assert!(p.abelianization().is_free_of_rank(2));
    }
}

#[test]
fn sections_satisfy_all_invariants() {
    let cases = vec![
        ("B(4,2)", random_generic(4, 2, 3, 10).unwrap()),
        ("B(5,2)", random_generic(5, 2, 4, 10).unwrap()),
        ("B(5,3)", random_generic(5, 3, 5, 10).unwrap()),
        ("B(6,3) dependent", construct_dependent(2, 0, 6).unwrap()),
    ];
    for (name, a) in &cases {
        let census = codim2_census(a).unwrap();
        for seed in 0..2 {
            let sec = random_section(a, seed).unwrap();
            let rep = section_report(&sec, &census).unwrap();
            assert!(rep.passed(), "{name} seed {seed}: {rep:?}");
            assert!(rep.singular_points >= binomial(a.n(), a.k() + 2));
        }
    }
}

#[test]
fn dependent_section_has_one_triple_point() {
    let a = construct_dependent(2, 0, 1).unwrap();
    let sec = random_section(&a, 7).unwrap();
    assert_eq!(sec.strand_count(), 15);
    let sizes = sec.block_sizes();
    assert_eq!(sizes.iter().filter(|&&m| m == 5).count(), 6);
    assert_eq!(sizes.iter().filter(|&&m| m == 3).count(), 1);
    assert_eq!(sec.pair_count(), binomial(15, 2));
}

/// Each `Γ_i` acts on the transported generators `ψ(δ_r)` as the full twist
/// on its block acts on `δ_r`; this is what licenses the reduced relators.
#[test]
fn gamma_is_a_transported_full_twist() {
    let a = random_generic(5, 2, 8, 10).unwrap();
    let sec = random_section(&a, 2).unwrap();
    let braids = sec.braids().unwrap();
    let n = sec.strand_count();
    for (i, mb) in braids.iter().enumerate() {
        let alpha: Vec<i32> = braids[..i].iter().rev().flat_map(|b| b.half_twist.letters.clone()).collect();
        let psi = Automorphism::of_braid(n, &alpha);
        let gamma = Automorphism::of_braid(n, &mb.gamma.letters);
        let h = &mb.half_twist;
        let twist = Automorphism::of_braid(n, &h.then(h).letters);
        for r in 1..=n {
            let y = FreeWord::generator(r as i32);
            assert_eq!(gamma.apply(&psi.apply(&y)), psi.apply(&twist.apply(&y)), "point {i}, r {r}");
        }
    }
}

#[test]
fn reduced_presentation_counts() {
    let a = random_generic(5, 2, 1, 10).unwrap();
    let sec = random_section(&a, 1).unwrap();
    let braids = sec.braids().unwrap();
    let reduced = presentation(&braids, sec.strand_count(), true);
    let expected: usize = sec.block_sizes().iter().map(|m| m - 1).sum();
    assert_eq!(reduced.relators.len(), expected);
    let full = presentation(&braids, sec.strand_count(), false);
    assert!(full.relators.len() >= reduced.relators.len());
    assert_eq!(full.abelianization(), reduced.abelianization());
}

#[test]
fn product_of_half_twists_is_delta() {
    let a = random_generic(5, 2, 2, 10).unwrap();
    let sec = random_section(&a, 4).unwrap();
    let n = sec.strand_count();
    let braids = sec.braids().unwrap();
    let mut word = BraidWord::identity(n);
    for b in braids.iter().rev() {
        word = word.then(&b.half_twist);
    }
    let nf = word.normal_form();
    assert_eq!((nf.power, nf.factors.len()), (1, 0));
}

#[test]
fn nilpotent_counts_match_section_blocks() {
    // Without dependent triples, the singular points of a section are the
    // good strata and the simple pairs.
    let a = random_generic(6, 3, 11, 12).unwrap();
    let rel = nilpotent_relations(&a).unwrap();
    assert!(rel.dependent.is_empty());
    let sec = random_section(&a, 3).unwrap();
    let multiplicities: usize = sec.block_sizes().iter().sum();
    assert_eq!(rel.good.len() + rel.simple.len(), multiplicities);
}
