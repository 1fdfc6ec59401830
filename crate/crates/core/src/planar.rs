//! Lines in the plane: the case k = 2.
//!
//! `D_J` (`|J| >= 3`) is the locus of translates for which the lines of `J`
//! pass through one point; it has codimension `|J| - 2`. For a family of
//! such sets the dimension of `⋂ D_J` is computed combinatorially:
//!
//! 1. `merge_classes`: sets meeting in two or more indices are replaced by
//!    their union, to a fixpoint (two common lines force a common point).
//! 2. `dim_formula` on the merged family: with `C1` the indices in at least
//!    two sets, each set `J` disjoint from `C1` contributes 2 (its point),
//!    each set meeting `C1` in one index contributes 1 (its point slides on
//!    that line), sets meeting `C1` in two indices contribute nothing, free
//!    indices contribute 1 each, and the lines of `C1` contribute the
//!    dimension of the reduced family `{J ∩ C1 : |J ∩ C1| >= 3}` on `C1`,
//!    computed recursively.
//!
//! When every index lies in two or more sets the recursion makes no
//! progress. Such families are resolved by closure: a subfamily `I` with
//! `|∪I| <= 2 + Σ_I (|J| - 2)` already forces `D_{∪I}` and is merged;
//! a family with no such subfamily has codimension `Σ (|J| - 2)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{random_generic, GenericArrangement};
use crate::discriminantal::build_all;
use crate::error::{precondition, Result};
use crate::exact::int_rank;
use crate::rng::{self, streams};
use crate::subset::{subsets, IndexSet};

/// A family of index sets of `[0, n)`, each of size at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexFamily {
    n: usize,
    sets: Vec<IndexSet>,
}

impl IndexFamily {
    pub fn new(n: usize, sets: Vec<IndexSet>) -> Result<Self> {
        for s in &sets {
            if s.len() < 3 {
                return precondition(format!("set {s} has fewer than 3 elements"));
            }
            if !s.is_subset(IndexSet::full(n)) {
                return precondition(format!("set {s} is not inside [1..{n}]"));
            }
        }
        Ok(Self { n, sets })
    }

    /// From 1-based labels.
    pub fn from_labels(n: usize, sets: &[&[usize]]) -> Result<Self> {
        Self::new(
            n,
            sets.iter()
                .map(|s| IndexSet::from_labels(s.iter().copied()))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    pub fn pairwise_thin(&self) -> bool {
        pairwise_thin(&self.sets)
    }
}

fn pairwise_thin(sets: &[IndexSet]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.intersection(*b).len() <= 1))
}

fn merge_sets(sets: &[IndexSet]) -> Vec<IndexSet> {
    let mut cur: Vec<IndexSet> = sets.to_vec();
    loop {
        let mut merged = false;
        let mut out: Vec<IndexSet> = Vec::with_capacity(cur.len());
        for s in cur {
            let mut acc = s;
            let mut i = 0;
            while i < out.len() {
                if out[i].intersection(acc).len() >= 2 {
                    acc = acc.union(out.swap_remove(i));
                    merged = true;
                    i = 0;
                } else {
                    i += 1;
                }
            }
            out.push(acc);
        }
        cur = out;
        if !merged {
            break;
        }
    }
    cur.sort();
    cur.dedup();
    cur
}

/// Unions sets chained by intersections of size at least 2, to a fixpoint.
/// Output sorted; independent of input order.
pub fn merge_classes(f: &IndexFamily) -> IndexFamily {
    IndexFamily {
        n: f.n,
        sets: merge_sets(&f.sets),
    }
}

/// Memoized evaluator of the dimension formula. Keys are families with
/// their used indices relabeled to `0..m`.
#[derive(Default)]
pub struct DimFormula {
    memo: HashMap<Vec<u64>, usize>,
}

impl DimFormula {
    pub fn new() -> Self {
        Self::default()
    }

    /// Dimension of `⋂ D_J` over a pairwise-thin family.
    pub fn dim(&mut self, f: &IndexFamily) -> Result<usize> {
        if !f.pairwise_thin() {
            return precondition("dim_formula needs pairwise intersections of size <= 1; merge first");
        }
        Ok(self.dim_sets(&f.sets, f.n))
    }

    fn dim_sets(&mut self, sets: &[IndexSet], n: usize) -> usize {
        if sets.is_empty() {
            return n;
        }
        let used = sets.iter().fold(IndexSet::EMPTY, |u, s| u.union(*s));
        let (key, m) = compress(sets, used);
        let free = n - m;
        if let Some(&d) = self.memo.get(&key) {
            return d + free;
        }
        let local: Vec<IndexSet> = key.iter().map(|&b| IndexSet::from_bits(b)).collect();
        let d = self.dim_used(&local, m);
        self.memo.insert(key, d);
        d + free
    }

    /// Every index of `[0, m)` is used by some set.
    fn dim_used(&mut self, sets: &[IndexSet], m: usize) -> usize {
        let mut count = vec![0usize; m];
        for s in sets {
            for i in s.iter() {
                count[i] += 1;
            }
        }
        let c1 = IndexSet::from_indices((0..m).filter(|&i| count[i] >= 2));
        if c1.len() == m {
            return self.dim_closure(sets, m);
        }
        let mut dim = 0;
        let mut reduced = Vec::new();
        for s in sets {
            let l = s.intersection(c1);
            match l.len() {
                0 => dim += 2,
                1 => dim += 1,
                2 => {}
                _ => reduced.push(l),
            }
        }
        let (key, _) = compress(&reduced, c1);
        let relabeled: Vec<IndexSet> = key.iter().map(|&b| IndexSet::from_bits(b)).collect();
        let merged = merge_sets(&relabeled);
        dim + self.dim_sets(&merged, c1.len())
    }

    fn dim_closure(&mut self, sets: &[IndexSet], m: usize) -> usize {
        let p = sets.len();
        for mask in 1u64..(1u64 << p) {
            if mask.count_ones() < 2 {
                continue;
            }
            let chosen: Vec<IndexSet> = (0..p).filter(|i| mask >> i & 1 == 1).map(|i| sets[i]).collect();
            let union = chosen.iter().fold(IndexSet::EMPTY, |u, s| u.union(*s));
            let excess: usize = chosen.iter().map(|s| s.len() - 2).sum();
            if union.len() <= 2 + excess {
                let mut next: Vec<IndexSet> =
                    (0..p).filter(|i| mask >> i & 1 == 0).map(|i| sets[i]).collect();
                next.push(union);
                let merged = merge_sets(&next);
                return self.dim_sets(&merged, m);
            }
        }
        m - sets.iter().map(|s| s.len() - 2).sum::<usize>()
    }
}

/// Relabels the indices of `within` to `0..|within|` (order preserving) and
/// returns the sorted relabeled sets as bit masks.
fn compress(sets: &[IndexSet], within: IndexSet) -> (Vec<u64>, usize) {
    let mut key: Vec<u64> = sets
        .iter()
        .map(|s| {
            IndexSet::from_indices(s.iter().map(|i| within.rank_of(i).expect("index inside"))).bits()
        })
        .collect();
    key.sort_unstable_by_key(|&b| IndexSet::from_bits(b));
    key.dedup();
    (key, within.len())
}

/// Dimension of `⋂ D_J` for a pairwise-thin family.
pub fn dim_formula(f: &IndexFamily) -> Result<usize> {
    DimFormula::new().dim(f)
}

/// `merge_classes` then `dim_formula`: pure combinatorics.
pub fn dim_combinatorial(f: &IndexFamily) -> usize {
    DimFormula::new()
        .dim(&merge_classes(f))
        .expect("merged families are pairwise thin")
}

pub fn codim_combinatorial(f: &IndexFamily) -> usize {
    f.n - dim_combinatorial(f)
}

/// All collections of `1..=cap` distinct elements of `0..m`, as increasing
/// index lists in depth-first (lexicographic) order.
pub fn collections(m: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = cur.last().map_or(0, |&l| l + 1);
        for i in start..m {
            cur.push(i);
            out.push(cur.clone());
            if cur.len() < cap {
                go(m, cap, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, cap, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Echelon basis kept as primitive integer rows with distinct pivots.
/// `None` signals overflow.
fn reduce_into(basis: &[(usize, Vec<i128>)], row: &[i128]) -> Option<Option<(usize, Vec<i128>)>> {
    let mut r = row.to_vec();
    for (p, b) in basis {
        if r[*p] == 0 {
            continue;
        }
        let (x, y) = (b[*p], r[*p]);
        for (ri, bi) in r.iter_mut().zip(b) {
            *ri = ri.checked_mul(x)?.checked_sub(bi.checked_mul(y)?)?;
        }
        let g = r.iter().fold(0, |g, &v| gcd(g, v));
        if g > 1 {
            r.iter_mut().for_each(|v| *v /= g);
        }
    }
    Some(r.iter().position(|&v| v != 0).map(|p| (p, r)))
}

/// Rank of every collection, in [`collections`] order, by incremental
/// elimination along the depth-first walk. `None` on `i128` overflow.
fn ranks_incremental(rows: &[Vec<i128>], cap: usize) -> Option<Vec<u8>> {
    fn go(
        rows: &[Vec<i128>],
        cap: usize,
        start: usize,
        depth: usize,
        basis: &mut Vec<(usize, Vec<i128>)>,
        out: &mut Vec<u8>,
    ) -> Option<()> {
        for i in start..rows.len() {
            let added = reduce_into(basis, &rows[i])?;
            let pushed = added.is_some();
            if let Some(b) = added {
                basis.push(b);
            }
            out.push(basis.len() as u8);
            if depth + 1 < cap {
                go(rows, cap, i + 1, depth + 1, basis, out)?;
            }
            if pushed {
                basis.pop();
            }
        }
        Some(())
    }
    let mut out = Vec::new();
    go(rows, cap, 0, 0, &mut Vec::new(), &mut out)?;
    Some(out)
}

/// Codimension of every collection of discriminantal hyperplanes of
/// `a` (`k = 2`), in [`collections`] order over the triples of `[0, n)`.
pub fn oracle_codims(a: &GenericArrangement, cap: usize) -> Result<Vec<u8>> {
    let forms = build_all(a)?;
    let small: Option<Vec<Vec<i128>>> = forms
        .iter()
        .map(|f| f.coeffs.iter().map(|c| i128::try_from(c).ok()).collect())
        .collect();
    if let Some(rows) = small {
        if let Some(r) = ranks_incremental(&rows, cap) {
            return Ok(r);
        }
    }
    let big: Vec<Vec<BigInt>> = forms.into_iter().map(|f| f.coeffs).collect();
    Ok(collections(big.len(), cap)
        .iter()
        .map(|c| int_rank(c.iter().map(|&i| big[i].clone()).collect(), a.n()) as u8)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// 1-based triples.
    pub collection: Vec<Vec<usize>>,
    pub formula: usize,
    pub oracle_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub n: usize,
    pub collections_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Seeds of the sampled traces.
pub fn trace_seeds(trials: usize, seed: u64) -> Vec<u64> {
    let mut r = rng::seeded(seed, streams::PLANAR);
    (0..trials).map(|_| r.gen()).collect()
}

/// Entry bound for sampled traces.
pub const TRACE_BOUND: i64 = 50;

/// Compares, for every collection of at most `cap` hyperplanes of B(n,2),
/// the rank oracle on `trials` random traces against each other and
/// against [`dim_combinatorial`].
pub fn verify_independence(n: usize, cap: usize, trials: usize, seed: u64) -> Result<IndependenceReport> {
    if n < 4 {
        return precondition(format!("verify_independence needs n >= 4, got {n}"));
    }
    let traces: Vec<GenericArrangement> = trace_seeds(trials, seed)
        .into_iter()
        .map(|s| random_generic(n, 2, s, TRACE_BOUND.max(n as i64)))
        .collect::<Result<_>>()?;
    verify_on_traces(n, cap, &traces)
}

/// [`verify_independence`] on given traces.
pub fn verify_on_traces(n: usize, cap: usize, traces: &[GenericArrangement]) -> Result<IndependenceReport> {
    if let Some(t) = traces.iter().find(|t| t.n() != n || t.k() != 2) {
        return precondition(format!("trace has n = {}, k = {}; expected n = {n}, k = 2", t.n(), t.k()));
    }
    let triples: Vec<IndexSet> = subsets(n, 3).collect();
    let colls = collections(triples.len(), cap);
    let oracle: Vec<Vec<u8>> = traces
        .par_iter()
        .map(|t| oracle_codims(t, cap))
        .collect::<Result<_>>()?;

    let mut formula = DimFormula::new();
    let mut discrepancies = Vec::new();
    for (ci, c) in colls.iter().enumerate() {
        let sets: Vec<IndexSet> = c.iter().map(|&i| triples[i]).collect();
        let fam = IndexFamily { n, sets };
        let dim = formula.dim(&merge_classes(&fam)).expect("merged");
        let dims: Vec<usize> = oracle.iter().map(|o| n - o[ci] as usize).collect();
        if dims.iter().any(|&d| d != dim) {
            discrepancies.push(Discrepancy {
                collection: fam.sets.iter().map(|s| s.labels()).collect(),
                formula: dim,
                oracle_dims: dims,
            });
        }
    }
    Ok(IndependenceReport {
        n,
        collections_checked: colls.len(),
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminantal::codim_of_sets;

    fn fam(n: usize, sets: &[&[usize]]) -> IndexFamily {
        IndexFamily::from_labels(n, sets).unwrap()
    }

    #[test]
    fn merge_examples() {
        assert_eq!(
            merge_classes(&fam(5, &[&[1, 2, 3], &[2, 3, 4]])),
            fam(5, &[&[1, 2, 3, 4]])
        );
        let disjoint = fam(6, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(merge_classes(&disjoint), disjoint);
        let thin = fam(6, &[&[1, 2, 3], &[1, 4, 6], &[3, 4, 5]]);
        assert_eq!(merge_classes(&thin), thin);
    }

    #[test]
    fn merge_chains_transitively() {
        let f = fam(7, &[&[1, 2, 3], &[5, 6, 7], &[3, 4, 5], &[2, 3, 4]]);
        // {1,2,3} + {2,3,4} = {1,2,3,4}, which then meets {3,4,5} in {3,4}.
        assert_eq!(merge_classes(&f), fam(7, &[&[1, 2, 3, 4, 5], &[5, 6, 7]]));
    }

    #[test]
    fn formula_rejects_thick_family() {
        assert!(dim_formula(&fam(5, &[&[1, 2, 3], &[2, 3, 4]])).is_err());
    }

    #[test]
    fn worked_examples() {
        // One set meeting three others in distinct single indices.
        let f = fam(9, &[&[1, 2, 3], &[1, 4, 5], &[2, 6, 7], &[3, 8, 9]]);
        assert_eq!(dim_formula(&f).unwrap(), 5);
        assert_eq!(codim_combinatorial(&f), 4);
        let g = fam(8, &[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(codim_combinatorial(&g), 2);
        let single = fam(8, &[&[1, 2, 4, 6, 7]]);
        assert_eq!(codim_combinatorial(&single), 3);
        assert_eq!(codim_combinatorial(&fam(5, &[&[1, 2, 3], &[2, 3, 4]])), 2);
    }

    #[test]
    fn stuck_family_uses_closure() {
        // Every index in two sets: the lines of a complete quadrilateral.
        let quad = fam(6, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]]);
        assert!(quad.pairwise_thin());
        assert_eq!(codim_combinatorial(&quad), 4);
        // Three of the four sets alone are independent.
        let three = fam(6, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6]]);
        assert_eq!(codim_combinatorial(&three), 3);
    }

    #[test]
    fn collections_order_and_count() {
        let c = collections(4, 2);
        assert_eq!(c.len(), 4 + 6);
        assert_eq!(c[0], vec![0]);
        assert_eq!(c[1], vec![0, 1]);
        assert_eq!(c[3], vec![0, 3]);
        assert_eq!(c[4], vec![1]);
    }

    #[test]
    fn incremental_ranks_match_direct() {
        let a = random_generic(6, 2, 5, 20).unwrap();
        let inc = oracle_codims(&a, 3).unwrap();
        let triples: Vec<IndexSet> = subsets(6, 3).collect();
        for (c, r) in collections(triples.len(), 3).iter().zip(&inc).step_by(7) {
            let sets: Vec<IndexSet> = c.iter().map(|&i| triples[i]).collect();
            assert_eq!(codim_of_sets(&a, &sets).unwrap(), *r as usize);
        }
    }

    #[test]
    fn cap_one_is_trivial() {
        let r = verify_independence(5, 1, 3, 0).unwrap();
        assert_eq!(r.collections_checked, 10);
        assert!(r.discrepancies.is_empty());
    }

    #[test]
    fn small_n_rejected() {
        assert!(verify_independence(3, 2, 1, 0).is_err());
    }
}
