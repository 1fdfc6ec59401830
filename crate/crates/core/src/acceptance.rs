//! The acceptance suite: ten exact checks, each with a wall-clock bound.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arrangement::random_generic;
use crate::discriminantal::{
    codim2_census, codim_of_sets, construct_dependent, dependent_triples, perturb_off_dependency,
    planted_triple, random_non_dependent, StratumKind, StratumRecord,
};
use crate::error::{Error, Result};
use crate::exact::proportional;
use crate::gale::{essential_normals_via_gale, gale_invariance};
use crate::monodromy::{check_against_census, nilpotent_relations, random_section, section_report};
use crate::planar::{codim_combinatorial, verify_independence, IndexFamily};
use crate::subset::{binomial, IndexSet};
use crate::GenericArrangement;

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl CriterionResult {
    /// `PASS  3  generic census  (1234 ms / 120000 ms)  detail`.
    pub fn line(&self) -> String {
        format!(
            "{}  {:>2}  {}  ({} ms / {} ms)  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "dependent construction census", 5),
    (2, "perturbation off the dependency", 5),
    (3, "generic census", 120),
    (4, "restricted dependent triple", 30),
    (5, "planar trace independence", 120),
    (6, "planar worked examples", 1),
    (7, "essential normals via Gale", 10),
    (8, "Gale invariance of concurrency", 10),
    (9, "monodromy invariants", 120),
    (10, "nilpotent relation counts", 10),
];

/// Checks are `Ok(detail)` on success, `Err(detail)` on a failed
/// comparison; library errors become failures with their message.
type Check = std::result::Result<String, String>;

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| e.to_string())
}

pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionResult> {
    let &(_, name, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = match id {
        1 => dependent_census(seed),
        2 => perturbation(seed),
        3 => generic_census(seed),
        4 => restricted_triple(seed),
        5 => planar_independence(seed),
        6 => worked_examples(seed),
        7 => gale_normals(seed),
        8 => gale_concurrency(seed),
        9 => monodromy(seed),
        _ => relation_counts(seed),
    };
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit);
    let (ok, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > limit {
        detail = format!("over time limit; {detail}");
    }
    Some(CriterionResult {
        id,
        name,
        passed: ok && elapsed <= limit,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.as_millis(),
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|c| run_criterion(c.0, seed))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count_mult(census: &[StratumRecord], m: usize) -> usize {
    census.iter().filter(|r| r.multiplicity() == m).count()
}

fn labels(sets: &[IndexSet]) -> String {
    sets.iter().map(ToString::to_string).collect::<Vec<_>>().join("/")
}

fn dependent_census(seed: u64) -> Check {
    let a = lift(construct_dependent(2, 0, seed))?;
    let census = lift(codim2_census(&a))?;
    let planted = planted_triple(2, 0);
    let threes: Vec<&StratumRecord> = census.iter().filter(|r| r.multiplicity() == 3).collect();
    ensure(threes.len() == 1, || format!("{} strata of multiplicity 3", threes.len()))?;
    ensure(threes[0].members == planted.sets, || {
        format!("multiplicity-3 stratum is {}", labels(&threes[0].members))
    })?;
    ensure(threes[0].kind == StratumKind::Dependent, || "triple not classified DEPENDENT".into())?;
    let fives = count_mult(&census, 5);
    ensure(fives == binomial(6, 5), || format!("{fives} strata of multiplicity 5"))?;
    let codim = lift(codim_of_sets(&a, &planted.sets))?;
    ensure(codim == 2, || format!("codim of the triple is {codim}"))?;
    Ok(format!(
        "triple {} codim 2, {fives} of multiplicity 5, {} strata",
        labels(&planted.sets),
        census.len()
    ))
}

fn perturbation(seed: u64) -> Check {
    let a = lift(construct_dependent(2, 0, seed))?;
    let row = (seed % 6) as usize;
    let b = lift(perturb_off_dependency(&a, row, seed))?;
    let planted = planted_triple(2, 0);
    let codim = lift(codim_of_sets(&b, &planted.sets))?;
    ensure(codim == 3, || format!("codim after perturbation is {codim}"))?;
    let census = lift(codim2_census(&b))?;
    ensure(count_mult(&census, 3) == 0, || "a multiplicity-3 stratum survived".into())?;
    Ok(format!("row {} replaced: codim of {} is 3", row + 1, labels(&planted.sets)))
}

const CENSUS_SIZES: [(usize, usize); 4] = [(6, 3), (7, 3), (7, 4), (8, 4)];

fn generic_instances(seed: u64) -> Result<Vec<GenericArrangement>> {
    let mut out = Vec::new();
    for &(n, k) in &CENSUS_SIZES {
        for i in 0..5 {
            out.push(random_non_dependent(n, k, seed + i, 2 * n as i64)?);
        }
    }
    Ok(out)
}

fn generic_census(seed: u64) -> Check {
    let instances = lift(generic_instances(seed))?;
    for a in &instances {
        let (n, k) = (a.n(), a.k());
        let census = lift(codim2_census(a))?;
        if let Some(r) = census
            .iter()
            .find(|r| r.multiplicity() != 2 && r.multiplicity() != k + 2)
        {
            return Err(format!(
                "B({n},{k}) has a stratum of multiplicity {}: {}",
                r.multiplicity(),
                labels(&r.members)
            ));
        }
        let top = count_mult(&census, k + 2);
        ensure(top == binomial(n, k + 2), || {
            format!("B({n},{k}): {top} strata of multiplicity {}, expected {}", k + 2, binomial(n, k + 2))
        })?;
    }
    Ok(format!("{} arrangements, multiplicities in {{2, k+2}}", instances.len()))
}

fn restricted_triple(seed: u64) -> Check {
    let a = lift(construct_dependent(2, 2, seed))?;
    let census = lift(codim2_census(&a))?;
    let planted = planted_triple(2, 2);
    let rec = census
        .iter()
        .find(|r| r.kind == StratumKind::Dependent && r.shape == Some((2, 2)))
        .ok_or_else(|| "no DEPENDENT stratum with t = 2, s = 2".to_string())?;
    ensure(rec.members == planted.sets, || format!("stratum is {}", labels(&rec.members)))?;
    let dim = a.n() - lift(codim_of_sets(&a, &rec.members))?;
    ensure(dim == 6, || format!("intersection dimension {dim}"))?;
    Ok(format!("B(8,5) triple {} has dimension 6", labels(&rec.members)))
}

fn planar_independence(seed: u64) -> Check {
    let mut checked = 0;
    for (n, cap) in [(5, 5), (6, 5), (7, 4)] {
        let rep = lift(verify_independence(n, cap, 5, seed))?;
        ensure(rep.discrepancies.is_empty(), || {
            let d = &rep.discrepancies[0];
            format!(
                "n = {n}: {} discrepancies, first {:?} formula {} oracle {:?}",
                rep.discrepancies.len(),
                d.collection,
                d.formula,
                d.oracle_dims
            )
        })?;
        checked += rep.collections_checked;
    }
    Ok(format!("{checked} collections, 5 traces each, no discrepancy"))
}

fn worked_examples(seed: u64) -> Check {
    let four = lift(IndexFamily::from_labels(9, &[&[1, 2, 3], &[1, 4, 5], &[2, 6, 7], &[3, 8, 9]]))?;
    let c = codim_combinatorial(&four);
    ensure(c == 4, || format!("four-set example gives codim {c}"))?;
    let trace = lift(random_generic(9, 2, seed, 50))?;
    let oracle = lift(codim_of_sets(&trace, four.sets()))?;
    ensure(oracle == 4, || format!("four-set example: rank oracle gives codim {oracle}"))?;
    for n in 5..=9 {
        let two = lift(IndexFamily::from_labels(n, &[&[1, 2, 3], &[3, 4, 5]]))?;
        let c = codim_combinatorial(&two);
        ensure(c == 2, || format!("two-set example at n = {n} gives codim {c}"))?;
    }
    Ok("codim 4 and codim 2; the first confirmed by the rank oracle".into())
}

fn gale_normals(seed: u64) -> Check {
    let mut total = 0;
    for (n, k) in [(6, 3), (7, 3)] {
        let a = lift(random_generic(n, k, seed, 2 * n as i64))?;
        let normals = lift(essential_normals_via_gale(&a))?;
        ensure(normals.len() == binomial(n, k + 1), || format!("B({n},{k}): {} normals", normals.len()))?;
        if let Some(e) = normals.iter().find(|e| !proportional(&e.normal, &e.quotient_image)) {
            return Err(format!("B({n},{k}): D_{} not proportional", e.set));
        }
        total += normals.len();
    }
    Ok(format!("{total} essential normals exactly proportional"))
}

fn gale_concurrency(seed: u64) -> Check {
    let cases = lift(gale_invariance(20, seed))?;
    ensure(cases.len() == 40, || format!("{} cases", cases.len()))?;
    for c in &cases {
        ensure(c.original.is_some() == c.constructed_positive, || {
            format!("seed {}: construction does not have the intended label", c.seed)
        })?;
        ensure(c.agrees(), || format!("seed {}: configuration and Gale dual disagree", c.seed))?;
    }
    Ok("40 of 40 agree (20 positive, 20 negative)".into())
}

fn monodromy(seed: u64) -> Check {
    let instances: Vec<(&str, GenericArrangement)> = vec![
        ("B(4,2)", lift(random_generic(4, 2, seed, 10))?),
        ("B(5,2)", lift(random_generic(5, 2, seed, 10))?),
        ("dependent B(6,3)", lift(construct_dependent(2, 0, seed))?),
    ];
    let mut parts = Vec::new();
    for (name, a) in &instances {
        let census = lift(codim2_census(a))?;
        let sec = lift(random_section(a, seed))?;
        let rep = lift(section_report(&sec, &census))?;
        ensure(rep.passed(), || format!("{name}: {rep:?}"))?;
        parts.push(format!("{name} N = {} with {} points", rep.strands, rep.singular_points));
    }
    Ok(parts.join(", "))
}

fn relation_counts(seed: u64) -> Check {
    let dependent = lift(construct_dependent(2, 0, seed))?;
    let perturbed = lift(perturb_off_dependency(&dependent, (seed % 6) as usize, seed))?;
    let mut instances = vec![dependent, perturbed, lift(construct_dependent(2, 2, seed))?];
    instances.extend(lift(generic_instances(seed))?);
    let mut dependent_count = 0;
    for a in &instances {
        let census = lift(codim2_census(a))?;
        let rel = lift(nilpotent_relations(a))?;
        let census_dependent = census.iter().any(|r| r.kind == StratumKind::Dependent);
        ensure(!rel.dependent.is_empty() == census_dependent, || {
            format!("B({},{}): family (ii) has {} relations", a.n(), a.k(), rel.dependent.len())
        })?;
        ensure(
            !lift(dependent_triples(a))?.is_empty() == census_dependent,
            || "dependent triples disagree with the census".into(),
        )?;
        lift(check_against_census(&rel, &census))?;
        dependent_count += usize::from(census_dependent);
    }
    Ok(format!(
        "{} instances, {dependent_count} dependent, all family sizes match the census",
        instances.len()
    ))
}
