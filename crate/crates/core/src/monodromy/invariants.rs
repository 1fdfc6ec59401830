//! Consistency checks tying a section's monodromy to the census.

use serde::Serialize;

use super::presentation::presentation;
use super::section::{total_monodromy, Section};
use crate::discriminantal::StratumRecord;
use crate::error::Result;
use crate::subset::{binomial, IndexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionReport {
    #[serde(rename = "N")]
    pub strands: usize,
    pub singular_points: usize,
    pub pair_count: usize,
    pub expected_pair_count: usize,
    pub total_is_full_twist: bool,
    pub abelian_free_rank: usize,
    pub abelian_torsion: Vec<String>,
    pub reduced_relators: usize,
    pub reduced_abelian_free_rank: usize,
    pub block_sizes: Vec<usize>,
    pub census_multiplicities: Vec<usize>,
    /// Each singular point carries exactly the forms of one census stratum.
    pub blocks_match_census: bool,
}

impl SectionReport {
    pub fn passed(&self) -> bool {
        self.pair_count == self.expected_pair_count
            && self.total_is_full_twist
            && self.abelian_free_rank == self.strands
            && self.abelian_torsion.is_empty()
            && self.reduced_abelian_free_rank == self.strands
            && self.block_sizes == self.census_multiplicities
            && self.blocks_match_census
    }
}

pub fn section_report(section: &Section, census: &[StratumRecord]) -> Result<SectionReport> {
    let n = section.strand_count();
    let braids = section.braids()?;
    let full = presentation(&braids, n, false).abelianization();
    let reduced = presentation(&braids, n, true);
    let reduced_ab = reduced.abelianization();

    let mut blocks: Vec<Vec<IndexSet>> = section
        .points
        .iter()
        .map(|p| {
            let mut v: Vec<IndexSet> = p.lines.iter().map(|&i| section.lines[i].set).collect();
            v.sort();
            v
        })
        .collect();
    blocks.sort();
    let mut strata: Vec<Vec<IndexSet>> = census.iter().map(|r| r.members.clone()).collect();
    strata.sort();
    let mut census_multiplicities: Vec<usize> = census.iter().map(StratumRecord::multiplicity).collect();
    census_multiplicities.sort_unstable_by(|a, b| b.cmp(a));

    Ok(SectionReport {
        strands: n,
        singular_points: section.points.len(),
        pair_count: section.pair_count(),
        expected_pair_count: binomial(n, 2),
        total_is_full_twist: total_monodromy(n, &braids).normal_form().is_full_twist(),
        abelian_free_rank: full.free_rank,
        abelian_torsion: full.torsion.iter().map(ToString::to_string).collect(),
        reduced_relators: reduced.relators.len(),
        reduced_abelian_free_rank: reduced_ab.free_rank,
        block_sizes: section.block_sizes(),
        census_multiplicities,
        blocks_match_census: blocks == strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_generic;
    use crate::discriminantal::codim2_census;
    use crate::monodromy::section::random_section;

    #[test]
    fn b42_report() {
        let a = random_generic(4, 2, 11, 10).unwrap();
        let sec = random_section(&a, 3).unwrap();
        let r = section_report(&sec, &codim2_census(&a).unwrap()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.block_sizes, vec![4]);
        assert_eq!(r.reduced_relators, 3);
    }
}
