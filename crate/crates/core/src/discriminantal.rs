//! The discriminantal arrangement B(n,k) of a trace at infinity.
//!
//! Each hyperplane `D_K` (`|K| = k+1`) is the locus of translate tuples
//! `x` for which the hyperplanes indexed by `K` pass through a common
//! point. Its equation is the determinant of the `(k+1) x (k+1)` matrix
//! `[normals_K | x_K]`, linear in `x`.
//!
//! Codimension-2 flats are enumerated by grouping pairs of forms by their
//! common 2-dimensional span. Every flat is one of
//!
//! * `GOOD`: `D_J` for a `(k+2)`-set `J`, multiplicity `k+2`;
//! * `DEPENDENT`: three forms whose index sets share `t` elements and
//!   overlap pairwise in `s` more, spanning only a plane because the three
//!   groups of `s` hyperplanes at infinity are dependent;
//! * `SIMPLE`: a transversal pair.
//!
//! Anything else is tagged `OTHER` and reported, never dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng as _;
use rayon::prelude::*;

use crate::arrangement::{random_int_matrix, GenericArrangement, RESAMPLE_BUDGET};
use crate::error::{precondition, Error, Result};
use crate::exact::{int_rank, primitive, rat, scale_to_integers, Matrix, Rational};
use crate::rng::{self, streams};
use crate::subset::{binomial, subsets, IndexSet};

/// One hyperplane `D_K` of B(n,k): primitive integer coefficients on the
/// translate coordinates `x_1..x_n`, zero outside `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscForm {
    pub set: IndexSet,
    pub coeffs: Vec<BigInt>,
}

impl DiscForm {
    pub fn rational_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }

    /// Value of the form at a translate tuple.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::zero(), |acc, (c, v)| acc + v * Rational::from_integer(c.clone()))
    }
}

/// Laplace expansion of `det[normals_K | x_K]` along the last column.
pub fn build_form(a: &GenericArrangement, set: IndexSet) -> Result<DiscForm> {
    let k = a.k();
    if set.len() != k + 1 {
        return Err(Error::DimensionMismatch {
            what: "discriminantal subset",
            expected: k + 1,
            found: set.len(),
        });
    }
    if let Some(bad) = set.iter().find(|&i| i >= a.n()) {
        return precondition(format!("index {} out of range for n = {}", bad + 1, a.n()));
    }
    let idx = set.to_vec();
    let mut coeffs = vec![Rational::zero(); a.n()];
    for (pos, &j) in idx.iter().enumerate() {
        let rest: Vec<usize> = idx.iter().copied().filter(|&i| i != j).collect();
        let minor = a.normals().select_rows(&rest).determinant()?;
        if minor.is_zero() {
            return Err(Error::NotGeneric(format!(
                "minor on rows {} vanishes",
                IndexSet::from_indices(rest)
            )));
        }
        coeffs[j] = if pos % 2 == 0 { minor } else { -minor };
    }
    let (ints, _) = scale_to_integers(&coeffs);
    Ok(DiscForm {
        set,
        coeffs: primitive(ints),
    })
}

/// All `C(n, k+1)` forms, lexicographic in `K`.
pub fn build_all(a: &GenericArrangement) -> Result<Vec<DiscForm>> {
    a.ensure_trace_generic()?;
    subsets(a.n(), a.k() + 1)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|s| build_form(a, s))
        .collect()
}

/// Codimension of `⋂ D_K`: the rank of the stacked coefficient vectors.
pub fn codim_intersection(a: &GenericArrangement, sets: &[IndexSet]) -> Result<usize> {
    let rows = sets
        .iter()
        .map(|&s| build_form(a, s).map(|f| f.coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(int_rank(rows, a.n()))
}

/// Codimension of `⋂ D_J` for index sets of any size `>= k+1`, where `D_J`
/// is the intersection of the `D_K` over the `(k+1)`-subsets `K` of `J`.
pub fn codim_of_sets(a: &GenericArrangement, sets: &[IndexSet]) -> Result<usize> {
    let k = a.k();
    if let Some(s) = sets.iter().find(|s| s.len() < k + 1) {
        return precondition(format!("set {s} has fewer than k+1 = {} elements", k + 1));
    }
    let mut ks: Vec<IndexSet> = sets.iter().flat_map(|s| s.subsets_of_size(k + 1)).collect();
    ks.sort();
    ks.dedup();
    codim_intersection(a, &ks)
}

/// Intersections with `xi` of size at least `k+1`, deduplicated and sorted.
pub fn project(sets: &[IndexSet], xi: IndexSet, k: usize) -> Vec<IndexSet> {
    let mut out: Vec<IndexSet> = sets
        .iter()
        .map(|s| s.intersection(xi))
        .filter(|s| s.len() > k)
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StratumKind {
    Good,
    Dependent,
    Simple,
    Other,
}

impl StratumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumKind::Good => "GOOD",
            StratumKind::Dependent => "DEPENDENT",
            StratumKind::Simple => "SIMPLE",
            StratumKind::Other => "OTHER",
        }
    }
}

impl fmt::Display for StratumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A codimension-2 flat of B(n,k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRecord {
    /// Index sets `K` of the forms containing the flat, sorted.
    pub members: Vec<IndexSet>,
    /// Canonical basis of the span of the members' coefficient vectors:
    /// reduced echelon rows scaled to primitive integers.
    pub flat_basis: Vec<Vec<BigInt>>,
    pub kind: StratumKind,
    /// `(t, s)` for `DEPENDENT` strata.
    pub shape: Option<(usize, usize)>,
}

impl StratumRecord {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Shape of an admissible triple: `t` common indices and pairwise private
/// overlaps of equal size `s >= 2` covering each set, with `2s + t = k+1`.
pub fn triple_shape(sets: [IndexSet; 3], k: usize) -> Option<(usize, usize)> {
    let [a, b, c] = sets;
    let common = a.intersection(b).intersection(c);
    let t = common.len();
    let ab = a.intersection(b).difference(common);
    let bc = b.intersection(c).difference(common);
    let ac = a.intersection(c).difference(common);
    let s = ab.len();
    if s < 2 || bc.len() != s || ac.len() != s || 2 * s + t != k + 1 {
        return None;
    }
    let covered = a == common.union(ab).union(ac)
        && b == common.union(ab).union(bc)
        && c == common.union(bc).union(ac);
    covered.then_some((t, s))
}

fn classify(members: &[IndexSet], k: usize) -> (StratumKind, Option<(usize, usize)>) {
    let m = members.len();
    if m == 2 {
        return (StratumKind::Simple, None);
    }
    let union = members.iter().fold(IndexSet::EMPTY, |u, s| u.union(*s));
    if m == k + 2 && union.len() == k + 2 {
        // Distinct (k+1)-subsets of a (k+2)-set: k+2 of them means all.
        return (StratumKind::Good, None);
    }
    if m == 3 {
        if let Some(shape) = triple_shape([members[0], members[1], members[2]], k) {
            return (StratumKind::Dependent, Some(shape));
        }
    }
    (StratumKind::Other, None)
}

fn span_key(a: &[BigInt], b: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let to_rat = |v: &[BigInt]| v.iter().map(|x| Rational::from_integer(x.clone())).collect();
    let m = Matrix::from_rows(n, vec![to_rat(a), to_rat(b)]).expect("equal lengths");
    let (r, _) = m.rref();
    (0..r.rows())
        .map(|i| primitive(scale_to_integers(r.row(i)).0))
        .collect()
}

/// All codimension-2 flats, sorted by multiplicity (descending), then
/// members (lexicographic).
pub fn codim2_census(a: &GenericArrangement) -> Result<Vec<StratumRecord>> {
    if a.n() < a.k() + 2 {
        return precondition(format!(
            "census needs n >= k+2 (n = {}, k = {})",
            a.n(),
            a.k()
        ));
    }
    let forms = build_all(a)?;
    census_of_forms(&forms, a.k())
}

/// Census over precomputed forms (`build_all` order).
pub fn census_of_forms(forms: &[DiscForm], k: usize) -> Result<Vec<StratumRecord>> {
    let m = forms.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let keyed: Vec<(Vec<Vec<BigInt>>, usize, usize)> = pairs
        .into_par_iter()
        .map(|(i, j)| (span_key(&forms[i].coeffs, &forms[j].coeffs), i, j))
        .collect();

    let mut groups: HashMap<Vec<Vec<BigInt>>, (Vec<usize>, usize)> = HashMap::new();
    for (key, i, j) in keyed {
        if key.len() != 2 {
            return Err(Error::Fault(format!(
                "forms {} and {} are proportional",
                forms[i].set, forms[j].set
            )));
        }
        let entry = groups.entry(key).or_default();
        entry.0.push(i);
        entry.0.push(j);
        entry.1 += 1;
    }

    let mut out = Vec::with_capacity(groups.len());
    for (key, (mut idx, pair_count)) in groups {
        idx.sort_unstable();
        idx.dedup();
        if pair_count != binomial(idx.len(), 2) {
            return Err(Error::Fault(format!(
                "span shared by {} forms but only {pair_count} pairs",
                idx.len()
            )));
        }
        let members: Vec<IndexSet> = idx.iter().map(|&i| forms[i].set).collect();
        let (kind, shape) = classify(&members, k);
        out.push(StratumRecord {
            members,
            flat_basis: key,
            kind,
            shape,
        });
    }
    out.sort_by(|x, y| {
        y.multiplicity()
            .cmp(&x.multiplicity())
            .then_with(|| x.members.cmp(&y.members))
    });
    Ok(out)
}

/// Counts of census records by kind and by multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub by_kind: BTreeMap<StratumKind, usize>,
    pub by_multiplicity: BTreeMap<usize, usize>,
}

pub fn summarize(census: &[StratumRecord]) -> CensusSummary {
    let mut s = CensusSummary::default();
    for r in census {
        *s.by_kind.entry(r.kind).or_default() += 1;
        *s.by_multiplicity.entry(r.multiplicity()).or_default() += 1;
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DependentTriple {
    pub sets: [IndexSet; 3],
    pub t: usize,
    pub s: usize,
}

/// Admissible triples in canonical form: the common set `T` and three
/// disjoint groups `G1 < G2 < G3` (by least element) give
/// `{T∪G1∪G2, T∪G2∪G3, T∪G1∪G3}`, sorted.
fn admissible_triples(n: usize, k: usize) -> Vec<(IndexSet, [IndexSet; 3], usize)> {
    let mut out = Vec::new();
    let mut s = 2;
    while 2 * s <= k + 1 {
        let t = k + 1 - 2 * s;
        if 3 * s + t <= n {
            for tset in subsets(n, t) {
                let rest = IndexSet::full(n).difference(tset);
                for u in rest.subsets_of_size(3 * s) {
                    for groups in three_groups(u, s) {
                        out.push((tset, groups, s));
                    }
                }
            }
        }
        s += 1;
    }
    out
}

/// Unordered partitions of `u` (`|u| = 3s`) into three `s`-sets, each
/// listed with groups ordered by least element.
pub(crate) fn three_groups(u: IndexSet, s: usize) -> Vec<[IndexSet; 3]> {
    let mut out = Vec::new();
    let first = u.iter().next().expect("nonempty");
    let rest = u.without(first);
    for g1_rest in rest.subsets_of_size(s - 1) {
        let g1 = g1_rest.with(first);
        let r2 = u.difference(g1);
        let second = r2.iter().next().expect("nonempty");
        for g2_rest in r2.without(second).subsets_of_size(s - 1) {
            let g2 = g2_rest.with(second);
            out.push([g1, g2, r2.difference(g2)]);
        }
    }
    out
}

/// `true` iff the three `s`-groups of hyperplanes (rows of `normals`, a
/// `(2s-1)`-dimensional trace) meet in subspaces whose union spans a proper
/// subspace.
fn groups_dependent(normals: &Matrix, groups: &[Vec<usize>; 3], s: usize) -> bool {
    let mut stacked: Vec<Vec<BigInt>> = Vec::with_capacity(3 * (s - 1));
    for g in groups {
        let ker = normals.select_rows(g).nullspace_basis();
        for r in 0..ker.rows() {
            stacked.push(scale_to_integers(ker.row(r)).0);
        }
    }
    int_rank(stacked, normals.cols()) <= 2 * s - 2
}

/// Every dependent triple, found by combinatorial enumeration followed by
/// the span test on the restriction to the common hyperplanes. Sorted.
pub fn dependent_triples(a: &GenericArrangement) -> Result<Vec<DependentTriple>> {
    a.ensure_trace_generic()?;
    let (n, k) = (a.n(), a.k());
    let candidates = admissible_triples(n, k);
    let mut restricted: HashMap<IndexSet, GenericArrangement> = HashMap::new();
    for (tset, _, _) in &candidates {
        if !restricted.contains_key(tset) {
            restricted.insert(*tset, a.restrict_trace(*tset)?);
        }
    }
    let mut out: Vec<DependentTriple> = candidates
        .par_iter()
        .filter_map(|(tset, groups, s)| {
            let r = &restricted[tset];
            let local = groups.map(|g| {
                g.iter()
                    .map(|i| i - tset.iter().filter(|&x| x < i).count())
                    .collect::<Vec<_>>()
            });
            groups_dependent(r.normals(), &local, *s).then(|| {
                let [g1, g2, g3] = *groups;
                let mut sets = [
                    tset.union(g1).union(g2),
                    tset.union(g2).union(g3),
                    tset.union(g1).union(g3),
                ];
                sets.sort();
                DependentTriple {
                    sets,
                    t: tset.len(),
                    s: *s,
                }
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The triple planted by [`construct_dependent`].
pub fn planted_triple(s: usize, t: usize) -> DependentTriple {
    let tail = IndexSet::from_indices(3 * s..3 * s + t);
    let g = |i: usize| IndexSet::from_indices(i * s..(i + 1) * s);
    let mut sets = [
        g(0).union(g(1)).union(tail),
        g(1).union(g(2)).union(tail),
        g(0).union(g(2)).union(tail),
    ];
    sets.sort();
    DependentTriple { sets, t, s }
}

/// A trace-generic arrangement of `n = 3s+t` hyperplanes in dimension
/// `k = 2s-1+t` whose only dependent triple is [`planted_triple`].
///
/// In the trace space `Q^(2s-1)`, three random `(s-1)`-dimensional
/// subspaces are drawn inside the coordinate hyperplane `z_last = 0`; each is
/// cut out by `s` random hyperplanes (rows `0..s`, `s..2s`, `2s..3s`). The
/// `t` extra coordinates are filled randomly and `t` extra hyperplanes
/// `y_i = 0` are appended, so that restricting to them recovers the
/// planted configuration. A random invertible change of coordinates
/// scrambles the result. Candidates are rejected until trace-generic with
/// no further dependent triples.
pub fn construct_dependent(s: usize, t: usize, seed: u64) -> Result<GenericArrangement> {
    if s < 2 {
        return precondition(format!("construct_dependent needs s >= 2, got {s}"));
    }
    let d = 2 * s - 1;
    let (n, k) = (3 * s + t, d + t);
    let mut rng = rng::seeded(seed, streams::DEPENDENT);
    let bound = 4i64;
    let planted = planted_triple(s, t);

    for _ in 0..RESAMPLE_BUDGET {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        let mut subspaces = Vec::with_capacity(3);
        for _ in 0..3 {
            let mut v = random_int_matrix(&mut rng, s - 1, d, bound);
            for r in 0..s - 1 {
                v[(r, d - 1)] = rat(0);
            }
            subspaces.push(v);
        }
        let pairwise_ok = (0..3).all(|i| {
            (i + 1..3).all(|j| subspaces[i].vstack(&subspaces[j]).expect("same width").rank() == 2 * (s - 1))
        });
        if !pairwise_ok {
            continue;
        }
        for v in &subspaces {
            let perp = v.nullspace_basis();
            if perp.rows() != s {
                break;
            }
            let combo = random_int_matrix(&mut rng, s, s, bound);
            let normals = combo.mul(&perp)?;
            for r in 0..s {
                let mut row = normals.row(r).to_vec();
                row.extend((0..t).map(|_| rat(rng.gen_range(-bound..=bound))));
                rows.push(row);
            }
        }
        if rows.len() != 3 * s {
            continue;
        }
        for i in 0..t {
            let mut row = vec![rat(0); k];
            row[d + i] = rat(1);
            rows.push(row);
        }
        let change = random_int_matrix(&mut rng, k, k, bound);
        if change.determinant()?.is_zero() {
            continue;
        }
        let normals = Matrix::from_rows(k, rows)?.mul(&change)?;
        let a = GenericArrangement::new(normals, None)?;
        if a.first_vanishing_minor().is_some() {
            continue;
        }
        if dependent_triples(&a)? == vec![planted] {
            return Ok(a);
        }
    }
    Err(Error::ResampleBudget {
        what: "construct_dependent",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// Replaces normal `row` by random integer rows until the arrangement is
/// trace-generic with no dependent triples.
pub fn perturb_off_dependency(
    a: &GenericArrangement,
    row: usize,
    seed: u64,
) -> Result<GenericArrangement> {
    if row >= a.n() {
        return precondition(format!("row {} out of range", row + 1));
    }
    let mut rng = rng::seeded(seed, streams::PERTURB);
    let bound = (a.n() as i64).max(10);
    for _ in 0..RESAMPLE_BUDGET {
        let new_row: Vec<Rational> = (0..a.k()).map(|_| rat(rng.gen_range(-bound..=bound))).collect();
        let b = a.with_normal(row, new_row)?;
        if b.first_vanishing_minor().is_none() && dependent_triples(&b)?.is_empty() {
            return Ok(b);
        }
    }
    Err(Error::ResampleBudget {
        what: "perturb_off_dependency",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// Random trace-generic arrangement with no dependent triples; successive
/// seeds `seed, seed + 2^32, ...` are tried.
pub fn random_non_dependent(n: usize, k: usize, seed: u64, bound: i64) -> Result<GenericArrangement> {
    for attempt in 0..RESAMPLE_BUDGET as u64 {
        let a = crate::arrangement::random_generic(n, k, seed.wrapping_add(attempt << 32), bound)?;
        if dependent_triples(&a)?.is_empty() {
            return Ok(a);
        }
    }
    Err(Error::ResampleBudget {
        what: "random_non_dependent",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// Largest absolute coefficient over all forms; a size diagnostic.
pub fn max_coefficient(forms: &[DiscForm]) -> BigInt {
    forms
        .iter()
        .flat_map(|f| f.coeffs.iter())
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_generic;

    fn labels(v: &[usize]) -> IndexSet {
        IndexSet::from_labels(v.iter().copied())
    }

    #[test]
    fn k1_form_is_two_by_two_expansion() {
        let a = GenericArrangement::from_i64(&[&[2], &[3], &[5]]).unwrap();
        let f = build_form(&a, labels(&[1, 2])).unwrap();
        // det [[2, x1], [3, x2]] = 2 x2 - 3 x1
        assert_eq!(f.coeffs, vec![BigInt::from(3), BigInt::from(-2), BigInt::zero()]);
    }

    #[test]
    fn wrong_subset_size() {
        let a = random_generic(5, 2, 0, 10).unwrap();
        assert!(matches!(
            build_form(&a, labels(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn concurrent_translates_lie_on_form() {
        for seed in 0..6 {
            let a = random_generic(6, 3, seed, 10).unwrap();
            let mut r = rng::seeded(seed, 99);
            let y: Vec<Rational> = (0..3).map(|_| rat(r.gen_range(-20..=20))).collect();
            let x: Vec<Rational> = (0..6)
                .map(|j| crate::exact::dot(a.normal(j), &y))
                .collect();
            for f in build_all(&a).unwrap() {
                assert!(f.eval(&x).is_zero());
            }
            // Move one translate off the common point.
            let mut x2 = x.clone();
            x2[0] += rat(1);
            let f = build_form(&a, labels(&[1, 2, 3, 4])).unwrap();
            assert!(!f.eval(&x2).is_zero());
        }
    }

    #[test]
    fn build_all_counts_and_rank() {
        for (n, k) in [(4, 2), (6, 3), (7, 4)] {
            let a = random_generic(n, k, 3, 12).unwrap();
            let forms = build_all(&a).unwrap();
            assert_eq!(forms.len(), binomial(n, k + 1));
            let rows: Vec<_> = forms.iter().map(|f| f.coeffs.clone()).collect();
            assert_eq!(int_rank(rows, n), n - k);
        }
    }

    #[test]
    fn good_set_has_codim_two() {
        let a = random_generic(7, 3, 5, 10).unwrap();
        let j = labels(&[1, 3, 4, 6, 7]);
        let ks: Vec<_> = j.subsets_of_size(4).collect();
        assert_eq!(codim_intersection(&a, &ks).unwrap(), 2);
        assert_eq!(codim_of_sets(&a, &[j]).unwrap(), 2);
    }

    #[test]
    fn triple_shape_cases() {
        let triple = [labels(&[1, 2, 3, 4]), labels(&[3, 4, 5, 6]), labels(&[1, 2, 5, 6])];
        assert_eq!(triple_shape(triple, 3), Some((0, 2)));
        let ext = [
            labels(&[1, 2, 3, 4, 7, 8]),
            labels(&[3, 4, 5, 6, 7, 8]),
            labels(&[1, 2, 5, 6, 7, 8]),
        ];
        assert_eq!(triple_shape(ext, 5), Some((2, 2)));
        let bad = [labels(&[1, 2, 3, 4]), labels(&[3, 4, 5, 6]), labels(&[1, 2, 5, 7])];
        assert_eq!(triple_shape(bad, 3), None);
    }

    #[test]
    fn three_group_count() {
        // 3s-set into three unordered s-sets: (3s)! / (s!^3 3!).
        assert_eq!(three_groups(IndexSet::full(6), 2).len(), 15);
        assert_eq!(three_groups(IndexSet::full(9), 3).len(), 280);
    }

    #[test]
    fn project_cases() {
        let ks = vec![labels(&[1, 2, 3]), labels(&[2, 4, 5])];
        assert_eq!(project(&ks, IndexSet::full(5), 2), ks);
        assert!(project(&ks, labels(&[1, 2]), 2).is_empty());
        assert_eq!(project(&ks, labels(&[1, 2, 3, 4]), 2), vec![labels(&[1, 2, 3])]);
    }

    #[test]
    fn six_plane_dependent_construction() {
        let a = construct_dependent(2, 0, 1).unwrap();
        assert_eq!((a.n(), a.k()), (6, 3));
        let triple = [labels(&[1, 2, 3, 4]), labels(&[3, 4, 5, 6]), labels(&[1, 2, 5, 6])];
        assert_eq!(codim_intersection(&a, &triple).unwrap(), 2);
        let census = codim2_census(&a).unwrap();
        let dep: Vec<_> = census.iter().filter(|r| r.kind == StratumKind::Dependent).collect();
        assert_eq!(dep.len(), 1);
        let mut members = triple.to_vec();
        members.sort();
        assert_eq!(dep[0].members, members);
        assert_eq!(dep[0].shape, Some((0, 2)));
    }

    #[test]
    fn perturbation_breaks_dependency() {
        let a = construct_dependent(2, 0, 2).unwrap();
        let b = perturb_off_dependency(&a, 0, 2).unwrap();
        let triple = [labels(&[1, 2, 3, 4]), labels(&[3, 4, 5, 6]), labels(&[1, 2, 5, 6])];
        assert_eq!(codim_intersection(&b, &triple).unwrap(), 3);
    }

    #[test]
    fn census_record_invariants() {
        let a = random_non_dependent(6, 3, 8, 10).unwrap();
        let census = codim2_census(&a).unwrap();
        let s = summarize(&census);
        assert_eq!(s.by_kind.get(&StratumKind::Good), Some(&6));
        assert_eq!(s.by_kind.get(&StratumKind::Other), None);
        assert_eq!(s.by_kind.get(&StratumKind::Dependent), None);
        // 105 pairs: 6 GOOD strata hold C(5,2) = 10 each, the rest are simple.
        assert_eq!(s.by_kind.get(&StratumKind::Simple), Some(&45));
        for r in &census {
            assert_eq!(r.flat_basis.len(), 2);
            assert!(r.multiplicity() >= 2);
        }
    }
}
