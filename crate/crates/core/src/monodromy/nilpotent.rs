//! Quadratic relations of the nilpotent completion.
//!
//! Each codimension-2 stratum `S` with members `J` contributes the
//! relations `[X_J, Σ_{I ∈ S} X_I]`, one per member. Good strata give
//! family (i), dependent triples family (ii), transversal pairs family
//! (iii); for a pair `{J, K}` the two relations are `±[X_J, X_K]`.
//!
//! Families (i) and (ii) are built from the combinatorics and from
//! [`dependent_triples`]; family (iii) from the pairs not covered by
//! either. None of them reads the census, so comparing against it is a
//! genuine cross-check.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::discriminantal::{dependent_triples, StratumKind, StratumRecord};
use crate::error::{Error, Result};
use crate::subset::{subsets, IndexSet};
use crate::GenericArrangement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationFamily {
    #[serde(rename = "i")]
    Good,
    #[serde(rename = "ii")]
    Dependent,
    #[serde(rename = "iii")]
    Simple,
}

/// `[X_lhs, Σ_{I ∈ stratum} X_I]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: IndexSet,
    pub stratum: Vec<IndexSet>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum: Vec<String> = self.stratum.iter().map(|s| format!("X{s}")).collect();
        write!(f, "[X{}, {}]", self.lhs, sum.join(" + "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NilpotentRelations {
    pub good: Vec<Relation>,
    pub dependent: Vec<Relation>,
    pub simple: Vec<Relation>,
}

impl NilpotentRelations {
    pub fn total(&self) -> usize {
        self.good.len() + self.dependent.len() + self.simple.len()
    }

    /// Unordered pairs behind family (iii).
    pub fn simple_pairs(&self) -> usize {
        self.simple.len() / 2
    }

    pub fn all(&self) -> impl Iterator<Item = &Relation> {
        self.good.iter().chain(&self.dependent).chain(&self.simple)
    }
}

fn per_member(family: RelationFamily, stratum: Vec<IndexSet>) -> impl Iterator<Item = Relation> {
    stratum.clone().into_iter().map(move |lhs| Relation {
        family,
        lhs,
        stratum: stratum.clone(),
    })
}

pub fn nilpotent_relations(a: &GenericArrangement) -> Result<NilpotentRelations> {
    a.ensure_trace_generic()?;
    let (n, k) = (a.n(), a.k());
    let good: Vec<Relation> = subsets(n, k + 2)
        .flat_map(|big| per_member(RelationFamily::Good, big.subsets_of_size(k + 1).collect()))
        .collect();
    let triples = dependent_triples(a)?;
    let dependent: Vec<Relation> = triples
        .iter()
        .flat_map(|t| per_member(RelationFamily::Dependent, t.sets.to_vec()))
        .collect();
    let in_triple: HashSet<(IndexSet, IndexSet)> = triples
        .iter()
        .flat_map(|t| {
            let [x, y, z] = t.sets;
            [(x, y), (x, z), (y, z)]
        })
        .collect();
    let forms: Vec<IndexSet> = subsets(n, k + 1).collect();
    let mut simple = Vec::new();
    for (i, &j) in forms.iter().enumerate() {
        for &l in &forms[i + 1..] {
            if j.union(l).len() > k + 2 && !in_triple.contains(&(j, l)) {
                simple.extend(per_member(RelationFamily::Simple, vec![j, l]));
            }
        }
    }
    Ok(NilpotentRelations {
        good,
        dependent,
        simple,
    })
}

/// Family sizes agree with the census: (i) and (ii) hold one relation per
/// member of each GOOD and DEPENDENT stratum, with the same strata; (iii)
/// holds two per SIMPLE pair. `OTHER` strata are reported as a fault.
pub fn check_against_census(rel: &NilpotentRelations, census: &[StratumRecord]) -> Result<()> {
    let strata = |kind: StratumKind| -> Vec<Vec<IndexSet>> {
        let mut v: Vec<Vec<IndexSet>> = census
            .iter()
            .filter(|r| r.kind == kind)
            .map(|r| r.members.clone())
            .collect();
        v.sort();
        v
    };
    let from_rel = |rs: &[Relation]| -> Vec<Vec<IndexSet>> {
        let mut v: Vec<Vec<IndexSet>> = rs.iter().map(|r| r.stratum.clone()).collect();
        v.sort();
        v.dedup();
        v
    };
    if let Some(o) = census.iter().find(|r| r.kind == StratumKind::Other) {
        return Err(Error::Fault(format!(
            "census has an unclassified stratum of multiplicity {}: {:?}",
            o.multiplicity(),
            o.members
        )));
    }
    let mult = |kind: StratumKind| -> usize {
        census
            .iter()
            .filter(|r| r.kind == kind)
            .map(StratumRecord::multiplicity)
            .sum()
    };
    let checks = [
        ("(i)", rel.good.len(), mult(StratumKind::Good)),
        ("(ii)", rel.dependent.len(), mult(StratumKind::Dependent)),
        ("(iii)", rel.simple.len(), mult(StratumKind::Simple)),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(Error::Fault(format!(
                "family {name} has {got} relations, census multiplicities sum to {want}"
            )));
        }
    }
    if from_rel(&rel.good) != strata(StratumKind::Good) {
        return Err(Error::Fault("family (i) strata differ from GOOD census records".into()));
    }
    if from_rel(&rel.dependent) != strata(StratumKind::Dependent) {
        return Err(Error::Fault(
            "family (ii) strata differ from DEPENDENT census records".into(),
        ));
    }
    if from_rel(&rel.simple) != strata(StratumKind::Simple) {
        return Err(Error::Fault("family (iii) pairs differ from SIMPLE census records".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_generic;
    use crate::discriminantal::{codim2_census, construct_dependent};
    use crate::subset::binomial;

    #[test]
    fn b42_family_one() {
        let a = random_generic(4, 2, 2, 10).unwrap();
        let r = nilpotent_relations(&a).unwrap();
        assert_eq!(r.good.len(), 4);
        assert!(r.dependent.is_empty());
        assert!(r.simple.is_empty());
        check_against_census(&r, &codim2_census(&a).unwrap()).unwrap();
    }

    #[test]
    fn dependent_family_has_three() {
        let a = construct_dependent(2, 0, 4).unwrap();
        let r = nilpotent_relations(&a).unwrap();
        assert_eq!(r.dependent.len(), 3);
        assert_eq!(r.good.len(), binomial(6, 5) * 5);
        check_against_census(&r, &codim2_census(&a).unwrap()).unwrap();
        let pairs = binomial(15, 2);
        assert_eq!(r.simple_pairs() + 6 * binomial(5, 2) + 3, pairs);
    }

    #[test]
    fn display_form() {
        let r = Relation {
            family: RelationFamily::Simple,
            lhs: IndexSet::from_labels([1, 2, 3]),
            stratum: vec![IndexSet::from_labels([1, 2, 3]), IndexSet::from_labels([3, 4, 5])],
        };
        assert_eq!(r.to_string(), "[X{1,2,3}, X{1,2,3} + X{3,4,5}]");
    }
}
