//! Generic affine arrangements and their traces at infinity.
//!
//! Hyperplane `j` is `normals[j] · y = offsets[j]`. The discriminantal
//! arrangement only sees the normals (the trace at infinity); offsets are
//! kept for membership tests of concrete translate tuples.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng as _;

use crate::error::{precondition, Error, Result};
use crate::exact::{bareiss_det, rat, scale_to_integers, Matrix, Rational};
use crate::rng::{self, streams};
use crate::subset::{subsets, IndexSet, MAX_INDEX};

/// Resample budget shared by the randomized constructors.
pub const RESAMPLE_BUDGET: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericArrangement {
    n: usize,
    k: usize,
    normals: Matrix,
    offsets: Option<Vec<Rational>>,
}

impl GenericArrangement {
    /// Wraps a normals matrix (one row per hyperplane). Genericity is not
    /// checked here; see [`GenericArrangement::is_trace_generic`].
    pub fn new(normals: Matrix, offsets: Option<Vec<Rational>>) -> Result<Self> {
        let (n, k) = (normals.rows(), normals.cols());
        if k == 0 {
            return precondition("ambient dimension k must be at least 1");
        }
        if n > MAX_INDEX {
            return precondition(format!("at most {MAX_INDEX} hyperplanes are supported, got {n}"));
        }
        if let Some(off) = &offsets {
            if off.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "offsets",
                    expected: n,
                    found: off.len(),
                });
            }
        }
        Ok(Self {
            n,
            k,
            normals,
            offsets,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64(rows), None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn normals(&self) -> &Matrix {
        &self.normals
    }

    pub fn normal(&self, j: usize) -> &[Rational] {
        self.normals.row(j)
    }

    pub fn offsets(&self) -> Option<&[Rational]> {
        self.offsets.as_deref()
    }

    pub fn with_offsets(mut self, offsets: Vec<Rational>) -> Result<Self> {
        if offsets.len() != self.n {
            return Err(Error::DimensionMismatch {
                what: "offsets",
                expected: self.n,
                found: offsets.len(),
            });
        }
        self.offsets = Some(offsets);
        Ok(self)
    }

    pub fn without_offsets(mut self) -> Self {
        self.offsets = None;
        self
    }

    /// Same arrangement with normal `j` replaced.
    pub fn with_normal(&self, j: usize, row: Vec<Rational>) -> Result<Self> {
        if row.len() != self.k {
            return Err(Error::DimensionMismatch {
                what: "normal row",
                expected: self.k,
                found: row.len(),
            });
        }
        let mut rows = self.normals.row_vecs();
        rows[j] = row;
        Self::new(Matrix::from_rows(self.k, rows)?, self.offsets.clone())
    }

    /// Sub-arrangement on the hyperplanes of `keep`, in increasing order.
    pub fn subarrangement(&self, keep: IndexSet) -> Result<Self> {
        let idx = keep.to_vec();
        let offsets = self
            .offsets
            .as_ref()
            .map(|o| idx.iter().map(|&i| o[i].clone()).collect());
        Self::new(self.normals.select_rows(&idx), offsets)
    }

    fn integer_normals(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|r| scale_to_integers(self.normals.row(r)).0)
            .collect()
    }

    /// `true` iff every `k x k` minor of the normals is nonzero.
    pub fn is_trace_generic(&self) -> Result<bool> {
        if self.n < self.k {
            return precondition(format!(
                "n = {} < k = {}: the arrangement cannot be essential",
                self.n, self.k
            ));
        }
        Ok(self.first_vanishing_minor().is_none())
    }

    /// The lexicographically first `k`-subset whose minor vanishes.
    pub fn first_vanishing_minor(&self) -> Option<IndexSet> {
        let ints = self.integer_normals();
        subsets(self.n, self.k).find(|s| {
            let rows: Vec<Vec<BigInt>> = s.iter().map(|i| ints[i].clone()).collect();
            bareiss_det(rows).is_zero()
        })
    }

    pub fn ensure_trace_generic(&self) -> Result<()> {
        if self.n < self.k {
            return precondition(format!("n = {} < k = {}", self.n, self.k));
        }
        match self.first_vanishing_minor() {
            None => Ok(()),
            Some(s) => Err(Error::NotGeneric(format!(
                "the {k}x{k} minor on rows {s} vanishes",
                k = self.k
            ))),
        }
    }

    /// With offsets present: `true` iff no `k+1` hyperplanes are concurrent.
    /// `None` when the arrangement carries no offsets.
    pub fn is_affine_generic(&self) -> Option<bool> {
        let off = self.offsets.as_ref()?;
        let rows: Vec<Vec<Rational>> = (0..self.n)
            .map(|j| {
                let mut r = self.normals.row(j).to_vec();
                r.push(off[j].clone());
                r
            })
            .collect();
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| scale_to_integers(r).0).collect();
        Some(subsets(self.n, self.k + 1).all(|s| {
            let m: Vec<Vec<BigInt>> = s.iter().map(|i| ints[i].clone()).collect();
            !bareiss_det(m).is_zero()
        }))
    }

    /// Restriction to the flat cut out by the hyperplanes in `t` translated
    /// to `translates` (one value per element of `t`, ascending index order).
    ///
    /// Coordinates on the flat: the equations of `t` are brought to reduced
    /// echelon form and solved for their pivot variables, which are the
    /// smallest-index ones; the remaining variables are the new coordinates.
    /// The remaining hyperplanes keep their relative order. Offsets of the
    /// output are present iff `self` carries offsets.
    pub fn restrict(&self, t: IndexSet, translates: &[Rational]) -> Result<GenericArrangement> {
        if t.len() >= self.k {
            return precondition(format!(
                "restriction needs |T| < k (|T| = {}, k = {})",
                t.len(),
                self.k
            ));
        }
        if translates.len() != t.len() {
            return Err(Error::DimensionMismatch {
                what: "restriction translates",
                expected: t.len(),
                found: translates.len(),
            });
        }
        if let Some(bad) = t.iter().find(|&i| i >= self.n) {
            return precondition(format!("index {} out of range", bad + 1));
        }
        if t.is_empty() {
            return Ok(self.clone());
        }
        let k = self.k;
        let eqs: Vec<Vec<Rational>> = t
            .iter()
            .zip(translates)
            .map(|(j, x)| {
                let mut r = self.normals.row(j).to_vec();
                r.push(x.clone());
                r
            })
            .collect();
        let (red, pivots) = Matrix::from_rows(k + 1, eqs)?.rref();
        if pivots.len() != t.len() || pivots.contains(&k) {
            return Err(Error::NotGeneric(format!(
                "hyperplanes {t} do not meet in a flat of dimension {}",
                k - t.len()
            )));
        }
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();

        let mut rows = Vec::with_capacity(self.n - t.len());
        let mut offs = Vec::with_capacity(self.n - t.len());
        for j in (0..self.n).filter(|&j| !t.contains(j)) {
            let a = self.normals.row(j);
            let row: Vec<Rational> = free
                .iter()
                .map(|&f| {
                    let mut v = a[f].clone();
                    for (i, &p) in pivots.iter().enumerate() {
                        v -= &a[p] * &red[(i, f)];
                    }
                    v
                })
                .collect();
            if let Some(off) = &self.offsets {
                let mut x = off[j].clone();
                for (i, &p) in pivots.iter().enumerate() {
                    x -= &a[p] * &red[(i, k)];
                }
                offs.push(x);
            }
            rows.push(row);
        }
        let out = GenericArrangement::new(
            Matrix::from_rows(free.len(), rows)?,
            self.offsets.is_some().then_some(offs),
        )?;
        if out.n >= out.k {
            if let Some(s) = out.first_vanishing_minor() {
                return Err(Error::Fault(format!(
                    "restriction of a trace-generic arrangement to {t} has vanishing minor {s}"
                )));
            }
        }
        Ok(out)
    }

    /// Restriction of the trace at infinity only (all translates zero).
    pub fn restrict_trace(&self, t: IndexSet) -> Result<GenericArrangement> {
        let zeros = vec![Rational::zero(); t.len()];
        self.clone().without_offsets().restrict(t, &zeros)
    }
}

/// Random integer `n x k` normals with entries in `[-bound, bound]`,
/// resampled until trace-generic. Deterministic in `seed`.
pub fn random_generic(n: usize, k: usize, seed: u64, bound: i64) -> Result<GenericArrangement> {
    check_random_pre(n, k, bound)?;
    let mut rng = rng::seeded(seed, streams::ARRANGEMENT);
    for _ in 0..RESAMPLE_BUDGET {
        let normals = random_int_matrix(&mut rng, n, k, bound);
        let a = GenericArrangement::new(normals, None)?;
        if a.first_vanishing_minor().is_none() {
            return Ok(a);
        }
    }
    Err(Error::ResampleBudget {
        what: "random_generic",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

/// As [`random_generic`], additionally sampling integer offsets in
/// `[-bound, bound]` until no `k+1` hyperplanes are concurrent.
pub fn random_generic_with_offsets(
    n: usize,
    k: usize,
    seed: u64,
    bound: i64,
) -> Result<GenericArrangement> {
    let a = random_generic(n, k, seed, bound)?;
    let mut rng = rng::seeded(seed, streams::OFFSETS);
    for _ in 0..RESAMPLE_BUDGET {
        let off: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect();
        let b = a.clone().with_offsets(off)?;
        if b.is_affine_generic() == Some(true) {
            return Ok(b);
        }
    }
    Err(Error::ResampleBudget {
        what: "random_generic_with_offsets",
        seed,
        attempts: RESAMPLE_BUDGET,
    })
}

fn check_random_pre(n: usize, k: usize, bound: i64) -> Result<()> {
    if k < 1 || n <= k {
        return precondition(format!("random_generic needs n > k >= 1 (n = {n}, k = {k})"));
    }
    if bound < n as i64 {
        return precondition(format!("entry bound {bound} must be at least n = {n}"));
    }
    if n > MAX_INDEX {
        return precondition(format!("at most {MAX_INDEX} hyperplanes are supported"));
    }
    Ok(())
}

pub(crate) fn random_int_matrix(rng: &mut rng::Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| rat(rng.gen_range(-bound..=bound)))
        .collect();
    Matrix::new(rows, cols, data).expect("sized correctly")
}
