//! Gale duality.
//!
//! For a spanning configuration of `n` vectors in `Q^d` (the columns of a
//! `d x n` matrix `P`), the Gale transform is the configuration of the
//! images of `e_1..e_n` under `Q^n -> W = Q^n / row(P)`. Concretely it is
//! any `(n-d) x n` matrix `G` of full rank with `G Pᵀ = 0`; the canonical
//! nullspace of `P` fixes the choice.
//!
//! Applied to the transposed normals of a generic arrangement, `W` is the
//! essential part of the space of translates and the hyperplane `D_K`
//! becomes the span of the Gale points outside `K`.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::arrangement::{random_int_matrix, GenericArrangement, RESAMPLE_BUDGET};
use crate::discriminantal::{build_form, three_groups};
use crate::error::{precondition, Error, Result};
use crate::exact::{cross, proportional, rat, Matrix, Rational};
use crate::rng::{self, streams};
use crate::subset::{subsets, IndexSet};

/// `n` vectors in `Q^d`, stored as the columns of a `d x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    vectors: Matrix,
}

impl PointConfig {
    /// Wraps a `d x n` matrix whose columns span `Q^d`.
    pub fn new(vectors: Matrix) -> Result<Self> {
        let r = vectors.rank();
        if r != vectors.rows() {
            return precondition(format!(
                "configuration spans dimension {r}, not d = {}",
                vectors.rows()
            ));
        }
        Ok(Self { vectors })
    }

    /// From a list of `n` points of equal length `d`.
    pub fn from_points(d: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(Matrix::from_rows(d, points)?.transpose())
    }

    pub fn d(&self) -> usize {
        self.vectors.rows()
    }

    pub fn n(&self) -> usize {
        self.vectors.cols()
    }

    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    pub fn point(&self, i: usize) -> Vec<Rational> {
        self.vectors.column(i)
    }

    pub fn points(&self) -> Vec<Vec<Rational>> {
        (0..self.n()).map(|i| self.point(i)).collect()
    }
}

/// The `(n-d) x n` Gale dual, via the canonical nullspace of `P`.
pub fn gale_transform(p: &PointConfig) -> Result<PointConfig> {
    if p.n() <= p.d() {
        return precondition(format!(
            "Gale transform needs n > d (n = {}, d = {})",
            p.n(),
            p.d()
        ));
    }
    PointConfig::new(p.vectors.nullspace_basis())
}

/// `X · diag(λ) · Yᵀ = 0`.
pub fn is_associated(x: &PointConfig, lambda: &[Rational], y: &PointConfig) -> Result<bool> {
    let n = x.n();
    if y.n() != n || lambda.len() != n {
        return Err(Error::DimensionMismatch {
            what: "association test",
            expected: n,
            found: if y.n() != n { y.n() } else { lambda.len() },
        });
    }
    if y.d() + x.d() != n {
        return Err(Error::DimensionMismatch {
            what: "association dimensions d(X) + d(Y)",
            expected: n,
            found: x.d() + y.d(),
        });
    }
    if lambda.iter().any(Zero::is_zero) {
        return precondition("association weights must be nonzero");
    }
    let mut scaled = x.vectors.clone();
    for c in 0..n {
        for r in 0..x.d() {
            scaled[(r, c)] *= &lambda[c];
        }
    }
    Ok(scaled.mul(&y.vectors.transpose())?.is_zero())
}

/// One `D_K` seen through the Gale dual of the normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialNormal {
    pub set: IndexSet,
    /// Normal of the hyperplane spanned by the Gale points outside `K`.
    pub normal: Vec<Rational>,
    /// The functional `λ` on `W` with `λᵀ G = coeffs(D_K)`.
    pub quotient_image: Vec<Rational>,
}

/// For every `(k+1)`-set `K`, the normal in `W` of the span of the
/// `n-k-1` Gale points outside `K`, checked proportional to the image of
/// `D_K` in `W*`. A mismatch is a [`Error::Fault`].
pub fn essential_normals_via_gale(a: &GenericArrangement) -> Result<Vec<EssentialNormal>> {
    a.ensure_trace_generic()?;
    let (n, k) = (a.n(), a.k());
    if n == k + 1 {
        return precondition("n = k+1: the complement of K is empty, no Gale hyperplane");
    }
    let g = gale_transform(&PointConfig::new(a.normals().transpose())?)?;
    let gt = g.vectors.transpose();
    let mut out = Vec::new();
    for set in subsets(n, k + 1) {
        let form = build_form(a, set)?;
        let lambda = gt.solve(&form.rational_coeffs()).ok_or_else(|| {
            Error::Fault(format!("D_{set} does not vanish on the concurrent translates"))
        })?;
        let outside: Vec<usize> = (0..n).filter(|&i| !set.contains(i)).collect();
        let span = gt.select_rows(&outside);
        let ker = span.nullspace_basis();
        if ker.rows() != 1 {
            return Err(Error::Fault(format!(
                "Gale points outside {set} span codimension {}",
                ker.rows()
            )));
        }
        let normal = ker.row(0).to_vec();
        if !proportional(&normal, &lambda) {
            return Err(Error::Fault(format!(
                "Gale hyperplane for {set} is not the image of D_{set}"
            )));
        }
        out.push(EssentialNormal {
            set,
            normal,
            quotient_image: lambda,
        });
    }
    Ok(out)
}

/// A partition of `{0..3s-1}` into three `s`-sets.
pub type Partition = [IndexSet; 3];

fn all_partitions(s: usize) -> Vec<Partition> {
    three_groups(IndexSet::full(3 * s), s)
}

fn check_distinct_points(p: &PointConfig) -> Result<()> {
    let pts = p.points();
    for (i, v) in pts.iter().enumerate() {
        if v.iter().all(Zero::is_zero) {
            return precondition(format!("point {} is zero", i + 1));
        }
        for (j, w) in pts.iter().enumerate().skip(i + 1) {
            if proportional(v, w) {
                return precondition(format!("points {} and {} coincide", i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// Six points of the projective plane: the first partition into three
/// pairs (lexicographic) whose joining lines are concurrent.
pub fn concurrent_partition_exists(p: &PointConfig) -> Result<Option<Partition>> {
    if p.d() != 3 || p.n() != 6 {
        return precondition(format!(
            "concurrency test needs 6 points in dimension 3 (got {} in {})",
            p.n(),
            p.d()
        ));
    }
    check_distinct_points(p)?;
    let pts = p.points();
    for part in all_partitions(2) {
        let lines: Vec<Vec<Rational>> = part
            .iter()
            .map(|g| {
                let v = g.to_vec();
                cross(&pts[v[0]], &pts[v[1]]).to_vec()
            })
            .collect();
        if Matrix::from_rows(3, lines)?.determinant()?.is_zero() {
            return Ok(Some(part));
        }
    }
    Ok(None)
}

/// `3s` points of `P^s`: a partition into three `s`-sets whose spanning
/// hyperplanes lie in a pencil. For `s = 2` this is the concurrency test.
pub fn pencil_partition_exists(p: &PointConfig, s: usize) -> Result<Option<Partition>> {
    if s < 2 || p.d() != s + 1 || p.n() != 3 * s {
        return precondition(format!(
            "pencil test needs 3s points in dimension s+1 (s = {s}, got {} in {})",
            p.n(),
            p.d()
        ));
    }
    check_distinct_points(p)?;
    let pts = p.vectors.transpose();
    for part in all_partitions(s) {
        let mut normals = Matrix::zeros(0, s + 1);
        for g in &part {
            let ker = pts.select_rows(&g.to_vec()).nullspace_basis();
            if ker.rows() != 1 {
                return precondition(format!("points {g} do not span a hyperplane"));
            }
            normals = normals.vstack(&ker)?;
        }
        if normals.rank() <= 2 {
            return Ok(Some(part));
        }
    }
    Ok(None)
}

/// `3s` hyperplanes of `P^(2s-2)` given by their normals: a partition into
/// three `s`-sets whose common subspaces span a proper subspace.
pub fn dependent_partition_exists(p: &PointConfig, s: usize) -> Result<Option<Partition>> {
    if s < 2 || p.d() != 2 * s - 1 || p.n() != 3 * s {
        return precondition(format!(
            "dependency test needs 3s normals in dimension 2s-1 (s = {s}, got {} in {})",
            p.n(),
            p.d()
        ));
    }
    let normals = p.vectors.transpose();
    for part in all_partitions(s) {
        let mut stacked = Matrix::zeros(0, 2 * s - 1);
        for g in &part {
            stacked = stacked.vstack(&normals.select_rows(&g.to_vec()).nullspace_basis())?;
        }
        if stacked.rank() <= 2 * s - 2 {
            return Ok(Some(part));
        }
    }
    Ok(None)
}

fn all_maximal_minors_nonzero(p: &Matrix) -> bool {
    let d = p.rows();
    subsets(p.cols(), d).all(|s| !p.select_cols(&s.to_vec()).determinant().expect("square").is_zero())
}

/// Six points in general position with a concurrent pair partition: two
/// points on each of three lines through a common point, moved by a random
/// projective transformation, rescaled and shuffled.
pub fn concurrent_positive(seed: u64) -> Result<PointConfig> {
    let mut rng = rng::seeded(seed, streams::GALE_POSITIVE);
    let b = 6i64;
    let nz = |rng: &mut rng::Rng| loop {
        let v = rng.gen_range(-b..=b);
        if v != 0 {
            return v;
        }
    };
    for _ in 0..RESAMPLE_BUDGET {
        let c: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-b..=b))).collect();
        let mut pts = Vec::with_capacity(6);
        for _ in 0..3 {
            let dir: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-b..=b))).collect();
            for _ in 0..2 {
                let (al, be) = (rat(nz(&mut rng)), rat(nz(&mut rng)));
                pts.push(c.iter().zip(&dir).map(|(x, y)| &al * x + &be * y).collect::<Vec<_>>());
            }
        }
        let m = random_int_matrix(&mut rng, 3, 3, b);
        if m.determinant()?.is_zero() {
            continue;
        }
        let mut cols: Vec<Vec<Rational>> = Matrix::from_rows(3, pts)?
            .mul(&m.transpose())?
            .row_vecs()
            .into_iter()
            .map(|row| {
                let f = rat(nz(&mut rng));
                row.into_iter().map(|x| x * &f).collect()
            })
            .collect();
        cols.shuffle(&mut rng);
        let v = Matrix::from_rows(3, cols)?.transpose();
        if all_maximal_minors_nonzero(&v) {
            return PointConfig::new(v);
        }
    }
    Err(Error::ResampleBudget {
        what: "concurrent_positive",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// Six random integer points in general position with no concurrent pair
/// partition.
pub fn concurrent_negative(seed: u64) -> Result<PointConfig> {
    let mut rng = rng::seeded(seed, streams::GALE_NEGATIVE);
    for _ in 0..RESAMPLE_BUDGET {
        let v = random_int_matrix(&mut rng, 3, 6, 9);
        if !all_maximal_minors_nonzero(&v) {
            continue;
        }
        let p = PointConfig::new(v)?;
        if concurrent_partition_exists(&p)?.is_none() {
            return Ok(p);
        }
    }
    Err(Error::ResampleBudget {
        what: "concurrent_negative",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// Outcome of the invariance check on one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceCase {
    pub seed: u64,
    pub constructed_positive: bool,
    pub original: Option<Partition>,
    pub dual: Option<Partition>,
}

impl InvarianceCase {
    pub fn agrees(&self) -> bool {
        self.original.is_some() == self.dual.is_some()
    }
}

/// Runs the concurrency test on `P` and on its Gale transform.
pub fn invariance_case(p: &PointConfig, seed: u64, positive: bool) -> Result<InvarianceCase> {
    let q = gale_transform(p)?;
    Ok(InvarianceCase {
        seed,
        constructed_positive: positive,
        original: concurrent_partition_exists(p)?,
        dual: concurrent_partition_exists(&q)?,
    })
}

/// `count` constructed positives and `count` sampled negatives, seeds
/// `seed..seed+count`.
pub fn gale_invariance(count: usize, seed: u64) -> Result<Vec<InvarianceCase>> {
    let mut out = Vec::with_capacity(2 * count);
    for i in 0..count as u64 {
        out.push(invariance_case(&concurrent_positive(seed + i)?, seed + i, true)?);
    }
    for i in 0..count as u64 {
        out.push(invariance_case(&concurrent_negative(seed + i)?, seed + i, false)?);
    }
    Ok(out)
}

/// `diag(1, ..., 1)`.
pub fn unit_weights(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_generic;

    #[test]
    fn block_identity() {
        let mut rows = Vec::new();
        for i in 0..3 {
            let mut r = vec![rat(0); 6];
            r[i] = rat(1);
            r[i + 3] = rat(1);
            rows.push(r);
        }
        let p = PointConfig::new(Matrix::from_rows(6, rows).unwrap()).unwrap();
        let q = gale_transform(&p).unwrap();
        assert_eq!((q.d(), q.n()), (3, 6));
        assert!(p.vectors().mul(&q.vectors().transpose()).unwrap().is_zero());
        // Column-equivalent to [I | -I].
        for i in 0..3 {
            let a = q.vectors().column(i);
            let b: Vec<_> = q.vectors().column(i + 3).into_iter().map(|x| -x).collect();
            assert_eq!(a, b);
        }
        assert!(is_associated(&p, &unit_weights(6), &q).unwrap());
    }

    #[test]
    fn biduality() {
        let a = random_generic(7, 3, 4, 10).unwrap();
        let p = PointConfig::new(a.normals().transpose()).unwrap();
        let qq = gale_transform(&gale_transform(&p).unwrap()).unwrap();
        assert_eq!(qq.vectors().nullspace_basis(), p.vectors().nullspace_basis());
    }

    #[test]
    fn negated_weight_breaks_association() {
        let a = random_generic(6, 3, 9, 10).unwrap();
        let p = PointConfig::new(a.normals().transpose()).unwrap();
        let q = gale_transform(&p).unwrap();
        let mut w = unit_weights(6);
        w[2] = rat(-1);
        assert!(!is_associated(&p, &w, &q).unwrap());
        assert!(matches!(
            is_associated(&p, &unit_weights(5), &q),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn essential_normals_small() {
        for (n, k) in [(4, 2), (5, 3), (6, 3)] {
            let a = random_generic(n, k, 1, 12).unwrap();
            let e = essential_normals_via_gale(&a).unwrap();
            assert_eq!(e.len(), crate::subset::binomial(n, k + 1));
        }
    }

    #[test]
    fn two_dimensional_essential_part_has_distinct_lines() {
        let a = random_generic(5, 3, 2, 10).unwrap();
        let e = essential_normals_via_gale(&a).unwrap();
        assert_eq!(e.len(), 5);
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(!proportional(&e[i].normal, &e[j].normal));
            }
        }
    }

    #[test]
    fn n_equal_k_plus_one_rejected() {
        let a = random_generic(4, 3, 2, 10).unwrap();
        assert!(matches!(essential_normals_via_gale(&a), Err(Error::Precondition(_))));
    }

    #[test]
    fn concurrency_cases() {
        // Lines x=0, y=0, x=y through the origin, two points on each.
        let pts = [[0, 1, 1], [0, 2, 1], [1, 0, 1], [3, 0, 1], [1, 1, 1], [2, 2, 1]];
        let p = PointConfig::from_points(
            3,
            pts.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
        .unwrap();
        let w = concurrent_partition_exists(&p).unwrap().unwrap();
        assert_eq!(
            w,
            [
                IndexSet::from_indices([0, 1]),
                IndexSet::from_indices([2, 3]),
                IndexSet::from_indices([4, 5])
            ]
        );
        let mut dup = pts.to_vec();
        dup[5] = [2, 2, 2];
        let p = PointConfig::from_points(
            3,
            dup.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
        .unwrap();
        assert!(matches!(concurrent_partition_exists(&p), Err(Error::Precondition(_))));
    }

    #[test]
    fn generators_and_invariance() {
        for seed in 0..4 {
            let pos = concurrent_positive(seed).unwrap();
            assert!(concurrent_partition_exists(&pos).unwrap().is_some());
            let neg = concurrent_negative(seed).unwrap();
            assert!(concurrent_partition_exists(&neg).unwrap().is_none());
            assert!(invariance_case(&pos, seed, true).unwrap().agrees());
            assert!(invariance_case(&neg, seed, false).unwrap().agrees());
        }
    }

    #[test]
    fn pencil_reduces_to_concurrency() {
        for seed in 0..3 {
            let pos = concurrent_positive(seed).unwrap();
            assert_eq!(
                pencil_partition_exists(&pos, 2).unwrap(),
                concurrent_partition_exists(&pos).unwrap()
            );
            let neg = concurrent_negative(seed).unwrap();
            assert!(pencil_partition_exists(&neg, 2).unwrap().is_none());
        }
    }
}
