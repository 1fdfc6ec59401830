//! Generic plane sections and the real sweep.
//!
//! Substituting `x_i = a_i t + b_i s + c_i` into the forms of B(n,k) gives
//! one affine line per form in the `(t, s)`-plane. Each line is stored as
//! `t = slope·s + intercept`; singular points are where two or more lines
//! meet. Sweeping `s` upward from a basepoint below every singular value,
//! strands are the lines ordered by `t`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng as _;
use rayon::prelude::*;

use super::braid::BraidWord;
use crate::arrangement::RESAMPLE_BUDGET;
use crate::discriminantal::{build_all, DiscForm};
use crate::error::{precondition, Error, Result};
use crate::exact::{rat, Rational};
use crate::rng::{self, streams};
use crate::subset::{binomial, IndexSet};
use crate::GenericArrangement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionPlane {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl SectionPlane {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(Error::DimensionMismatch {
                what: "section vectors",
                expected: a.len(),
                found: if b.len() != a.len() { b.len() } else { c.len() },
            });
        }
        Ok(Self { a, b, c })
    }

    pub fn from_i64(a: &[i64], b: &[i64], c: &[i64]) -> Result<Self> {
        let v = |x: &[i64]| x.iter().map(|&y| rat(y)).collect();
        Self::new(v(a), v(b), v(c))
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Random integer entries in `[-bound, bound]`.
    pub fn random(n: usize, bound: i64, rng: &mut rng::Rng) -> Self {
        let mut v = || (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect::<Vec<_>>();
        let (a, b, c) = (v(), v(), v());
        Self { a, b, c }
    }
}

/// The section of `D_K`: `t = slope·s + intercept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionLine {
    pub set: IndexSet,
    pub slope: Rational,
    pub intercept: Rational,
}

impl SectionLine {
    pub fn t_at(&self, s: &Rational) -> Rational {
        &self.slope * s + &self.intercept
    }
}

/// Restriction of every form to the plane, validated: every line is a
/// graph over the `s`-axis, no two lines are parallel or equal, and
/// distinct singular points have distinct `s`.
pub fn section_lines(a: &GenericArrangement, plane: &SectionPlane) -> Result<Vec<SectionLine>> {
    if plane.n() != a.n() {
        return Err(Error::DimensionMismatch {
            what: "section plane length",
            expected: a.n(),
            found: plane.n(),
        });
    }
    let forms = build_all(a)?;
    let lines = lines_of_forms(&forms, plane)?;
    singular_points(&lines)?;
    Ok(lines)
}

fn lines_of_forms(forms: &[DiscForm], plane: &SectionPlane) -> Result<Vec<SectionLine>> {
    let mut lines = Vec::with_capacity(forms.len());
    for f in forms {
        let coeffs = f.rational_coeffs();
        let dot = |v: &[Rational]| {
            coeffs
                .iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        };
        let (u, v, w) = (dot(&plane.a), dot(&plane.b), dot(&plane.c));
        if u.is_zero() {
            return Err(Error::NonGenericSection(format!(
                "line of D_{} is parallel to the t-axis",
                f.set
            )));
        }
        lines.push(SectionLine {
            set: f.set,
            slope: -&v / &u,
            intercept: -&w / &u,
        });
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].slope == lines[j].slope {
                let what = if lines[i].intercept == lines[j].intercept {
                    "coincide"
                } else {
                    "are parallel"
                };
                return Err(Error::NonGenericSection(format!(
                    "lines of D_{} and D_{} {what}",
                    lines[i].set, lines[j].set
                )));
            }
        }
    }
    Ok(lines)
}

/// A point where two or more section lines meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub s: Rational,
    pub t: Rational,
    /// Indices into the line list, ascending.
    pub lines: Vec<usize>,
}

/// All intersection points, grouped and sorted by `s`. Fails if two
/// distinct points share an `s`-coordinate.
pub fn singular_points(lines: &[SectionLine]) -> Result<Vec<SingularPoint>> {
    let m = lines.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let meets: Vec<(Rational, Rational, usize, usize)> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let s = (&lines[j].intercept - &lines[i].intercept) / (&lines[i].slope - &lines[j].slope);
            let t = lines[i].t_at(&s);
            (s, t, i, j)
        })
        .collect();
    let mut by_s: BTreeMap<Rational, (Rational, Vec<usize>, usize)> = BTreeMap::new();
    for (s, t, i, j) in meets {
        match by_s.get_mut(&s) {
            Some((t0, members, count)) => {
                if *t0 != t {
                    return Err(Error::NonGenericSection(format!(
                        "two singular points share s = {s} (lines of D_{} and D_{})",
                        lines[i].set, lines[j].set
                    )));
                }
                members.extend([i, j]);
                *count += 1;
            }
            None => {
                by_s.insert(s, (t, vec![i, j], 1));
            }
        }
    }
    let mut out = Vec::with_capacity(by_s.len());
    for (s, (t, mut members, count)) in by_s {
        members.sort_unstable();
        members.dedup();
        if count != binomial(members.len(), 2) {
            return Err(Error::Fault(format!(
                "point at s = {s} has {} lines but {count} crossing pairs",
                members.len()
            )));
        }
        out.push(SingularPoint { s, t, lines: members });
    }
    Ok(out)
}

/// A singular point with its position block and monodromy braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyBraid {
    pub point: SingularPoint,
    /// Basepoint labels (1-based rank by `t` at the basepoint) of the lines
    /// through the point, ascending.
    pub block: Vec<usize>,
    /// First position (1-based) of the block at the critical value.
    pub position: usize,
    pub half_twist: BraidWord,
    pub gamma: BraidWord,
}

/// Strand order at `s0`: line indices sorted by `t`.
pub fn order_at(lines: &[SectionLine], s0: &Rational) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..lines.len()).collect();
    idx.sort_by(|&i, &j| lines[i].t_at(s0).cmp(&lines[j].t_at(s0)));
    idx
}

/// `min s - 1`, or 0 without singular points.
pub fn default_basepoint(points: &[SingularPoint]) -> Rational {
    points.first().map_or_else(Rational::zero, |p| &p.s - rat(1))
}

/// Sweep from `basepoint` upward. For point `i` with half twist `β_i` on
/// its position block, `Γ_i = β_1⁻¹ ... β_(i-1)⁻¹ β_i² β_(i-1) ... β_1`.
pub fn braid_monodromy(
    lines: &[SectionLine],
    points: &[SingularPoint],
    basepoint: &Rational,
) -> Result<Vec<MonodromyBraid>> {
    if let Some(p) = points.first() {
        if &p.s <= basepoint {
            return precondition(format!(
                "basepoint {basepoint} is not below the first singular value {}",
                p.s
            ));
        }
    }
    let n = lines.len();
    let mut order = order_at(lines, basepoint);
    let mut label = vec![0usize; n];
    for (pos, &line) in order.iter().enumerate() {
        label[line] = pos + 1;
    }
    let mut prefix: Vec<i32> = Vec::new();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let mut positions: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, l)| p.lines.contains(l))
            .map(|(i, _)| i)
            .collect();
        positions.sort_unstable();
        let (first, m) = (positions[0], positions.len());
        if positions[m - 1] - first + 1 != m {
            return Err(Error::Fault(format!(
                "block at s = {} is not consecutive: positions {positions:?}",
                p.s
            )));
        }
        let beta = BraidWord::half_twist(n, first + 1, m);
        // prefix = β_(i-1) ... β_1
        let mut letters: Vec<i32> = prefix.iter().rev().map(|l| -l).collect();
        letters.extend(&beta.letters);
        letters.extend(&beta.letters);
        letters.extend(&prefix);
        let gamma = BraidWord::new(n, letters);
        let mut new_prefix = beta.letters.clone();
        new_prefix.extend(&prefix);
        prefix = new_prefix;
        order[first..first + m].reverse();
        let mut block: Vec<usize> = p.lines.iter().map(|&l| label[l]).collect();
        block.sort_unstable();
        out.push(MonodromyBraid {
            point: p.clone(),
            block,
            position: first + 1,
            half_twist: beta,
            gamma,
        });
    }
    Ok(out)
}

/// Product `Γ_1 Γ_2 ... Γ_r`.
pub fn total_monodromy(strands: usize, braids: &[MonodromyBraid]) -> BraidWord {
    braids
        .iter()
        .fold(BraidWord::identity(strands), |acc, b| acc.then(&b.gamma))
}

/// A validated section with its sweep.
#[derive(Clone, Debug)]
pub struct Section {
    pub plane: SectionPlane,
    pub lines: Vec<SectionLine>,
    pub points: Vec<SingularPoint>,
    pub basepoint: Rational,
}

impl Section {
    pub fn strand_count(&self) -> usize {
        self.lines.len()
    }

    pub fn braids(&self) -> Result<Vec<MonodromyBraid>> {
        braid_monodromy(&self.lines, &self.points, &self.basepoint)
    }

    /// `Σ C(|P_i|, 2)`.
    pub fn pair_count(&self) -> usize {
        self.points.iter().map(|p| binomial(p.lines.len(), 2)).sum()
    }

    /// Sizes of the blocks, sorted descending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.points.iter().map(|p| p.lines.len()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

pub fn build_section(a: &GenericArrangement, plane: SectionPlane) -> Result<Section> {
    let lines = section_lines(a, &plane)?;
    let points = singular_points(&lines)?;
    let basepoint = default_basepoint(&points);
    Ok(Section {
        plane,
        lines,
        points,
        basepoint,
    })
}

/// Entry bound for sampled section planes.
pub const SECTION_BOUND: i64 = 20;

/// Samples planes until one passes every genericity check.
pub fn random_section(a: &GenericArrangement, seed: u64) -> Result<Section> {
    let forms = build_all(a)?;
    let mut rng = rng::seeded(seed, streams::SECTION);
    for _ in 0..RESAMPLE_BUDGET {
        let plane = SectionPlane::random(a.n(), SECTION_BOUND, &mut rng);
        let Ok(lines) = lines_of_forms(&forms, &plane) else {
            continue;
        };
        let Ok(points) = singular_points(&lines) else {
            continue;
        };
        let basepoint = default_basepoint(&points);
        return Ok(Section {
            plane,
            lines,
            points,
            basepoint,
        });
    }
    Err(Error::ResampleBudget {
        what: "random_section",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_generic;

    fn line(slope: i64, intercept: i64, label: usize) -> SectionLine {
        SectionLine {
            set: IndexSet::singleton(label),
            slope: rat(slope),
            intercept: rat(intercept),
        }
    }

    #[test]
    fn two_lines_one_point() {
        let lines = vec![line(1, 0, 0), line(-1, 0, 1)];
        let pts = singular_points(&lines).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].lines, vec![0, 1]);
        let b = braid_monodromy(&lines, &pts, &rat(-1)).unwrap();
        assert_eq!(b[0].gamma.letters, vec![1, 1]);
    }

    #[test]
    fn shared_s_rejected() {
        // Lines meeting at (s, t) = (0, 0) and (0, 5).
        let lines = vec![line(1, 0, 0), line(-1, 0, 1), line(2, 5, 2), line(3, 5, 3)];
        assert!(matches!(singular_points(&lines), Err(Error::NonGenericSection(_))));
    }

    #[test]
    fn basepoint_must_be_below() {
        let lines = vec![line(1, 0, 0), line(-1, 0, 1)];
        let pts = singular_points(&lines).unwrap();
        assert!(braid_monodromy(&lines, &pts, &rat(1)).is_err());
    }

    #[test]
    fn zero_b_rejected() {
        let a = random_generic(4, 2, 3, 10).unwrap();
        let plane = SectionPlane::from_i64(&[1, 2, 3, 5], &[0, 0, 0, 0], &[1, -1, 2, 7]).unwrap();
        assert!(matches!(section_lines(&a, &plane), Err(Error::NonGenericSection(_))));
    }

    #[test]
    fn four_lines_of_b42() {
        let a = random_generic(4, 2, 1, 10).unwrap();
        let sec = random_section(&a, 1).unwrap();
        assert_eq!(sec.strand_count(), 4);
        assert_eq!(sec.pair_count(), 6);
        // The four lines pass through one point.
        assert_eq!(sec.block_sizes(), vec![4]);
        let braids = sec.braids().unwrap();
        assert_eq!(braids[0].gamma.letters.len(), 12);
        assert!(total_monodromy(4, &braids).normal_form().is_full_twist());
    }
}
