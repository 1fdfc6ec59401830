//! Presentations of the fundamental group of the complement of a section.
//!
//! The generators `δ_1..δ_N` are loops around the lines at the basepoint.
//! Each monodromy braid `Γ_i` contributes the relations `Γ_i(δ_j) = δ_j`.
//! Writing `Γ_i = α⁻¹ β_i² α`, the twist `β_i²` conjugates each generator
//! of its block by their product `b`, so the same normal subgroup is
//! generated by `α([b, δ_r])` for all but one `r` in the block: the reduced
//! form keeps exactly `|P_i| - 1` relators per point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::free_group::{Automorphism, FreeWord};
use super::section::MonodromyBraid;
use crate::error::{precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<FreeWord>,
}

/// Relators `Γ_i(δ_j) δ_j⁻¹` (trivial ones dropped), or with `reduce` the
/// `Σ (|P_i| - 1)` transported commutators.
pub fn presentation(braids: &[MonodromyBraid], strands: usize, reduce: bool) -> Presentation {
    let per_point: Vec<Vec<FreeWord>> = braids
        .par_iter()
        .enumerate()
        .map(|(i, mb)| {
            if reduce {
                reduced_relators(braids, i, strands)
            } else {
                let act = Automorphism::of_braid(strands, &mb.gamma.letters);
                (1..=strands)
                    .map(|j| act.image(j).mul(&FreeWord::generator(-(j as i32))))
                    .filter(|w| !w.is_empty())
                    .collect()
            }
        })
        .collect();
    Presentation {
        generator_count: strands,
        relators: per_point.into_iter().flatten().collect(),
    }
}

fn reduced_relators(braids: &[MonodromyBraid], i: usize, strands: usize) -> Vec<FreeWord> {
    let mb = &braids[i];
    let m = mb.block.len();
    let l = mb.position as i32;
    // α = β_(i-1) ... β_1
    let alpha: Vec<i32> = braids[..i]
        .iter()
        .rev()
        .flat_map(|b| b.half_twist.letters.iter().copied())
        .collect();
    let act = Automorphism::of_braid(strands, &alpha);
    let boundary = FreeWord::new((l..l + m as i32).collect());
    (l..l + m as i32 - 1)
        .map(|r| act.apply(&FreeWord::commutator(&boundary, &FreeWord::generator(r))))
        .collect()
}

impl Presentation {
    /// `generators: d1 ... dN`, then one relator per line.
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = (1..=self.generator_count).map(|g| format!("d{g}")).collect();
        let mut out = format!("generators: {}\n", gens.join(" "));
        for r in &self.relators {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut lines = text.lines();
        let head = lines.next().unwrap_or_default();
        let Some(gens) = head.strip_prefix("generators:") else {
            return precondition("presentation must start with 'generators:'");
        };
        let generator_count = gens.split_whitespace().count();
        let relators = lines
            .filter(|l| !l.trim().is_empty())
            .map(FreeWord::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            generator_count,
            relators,
        })
    }

    /// Exponent-sum matrix: one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relators
            .iter()
            .map(|r| {
                r.exponents(self.generator_count)
                    .into_iter()
                    .map(BigInt::from)
                    .collect()
            })
            .collect()
    }

    pub fn abelianization(&self) -> Abelianization {
        let d = smith_diagonal(self.exponent_matrix(), self.generator_count);
        Abelianization {
            free_rank: self.generator_count - d.len(),
            torsion: d.into_iter().filter(|x| !x.is_one()).collect(),
        }
    }
}

/// `Z^free_rank ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.free_rank == r && self.torsion.is_empty()
    }
}

/// Nonzero invariant factors of an integer matrix (Smith normal form).
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, t, cols) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pr, pc) = min_entry_cross(&a, t, cols);
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            // Divisibility: fold a non-multiple row into the pivot row.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    (0..t).map(|i| a[i][i].abs()).collect()
}

fn min_entry(a: &[Vec<BigInt>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for j in t..cols {
            if !row[j].is_zero()
                && best.is_none_or(|(bi, bj)| row[j].abs() < a[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in pivot row `t` or pivot column `t`.
fn min_entry_cross(a: &[Vec<BigInt>], t: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    for (i, row) in a.iter().enumerate().skip(t) {
        if !row[t].is_zero() && row[t].abs() < a[best.0][best.1].abs() {
            best = (i, t);
        }
    }
    for j in t..cols {
        if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}
