//! Artin braid words.

use std::fmt;

use super::garside::{normal_form, NormalForm};

/// A word in `σ_1..σ_(N-1)`: `m > 0` is `σ_m`, `-m` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strand_count: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Self {
        assert!(
            letters.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < strand_count),
            "letter out of range for {strand_count} strands"
        );
        Self {
            strand_count,
            letters,
        }
    }

    pub fn identity(strand_count: usize) -> Self {
        Self::new(strand_count, Vec::new())
    }

    /// Positive half twist on positions `l..l+m` (1-based `l`):
    /// `Π_{j = m-1 .. 1} σ_l σ_(l+1) ... σ_(l+j-1)`.
    pub fn half_twist(strand_count: usize, l: usize, m: usize) -> Self {
        assert!(l >= 1 && l + m - 1 <= strand_count, "block out of range");
        let mut letters = Vec::with_capacity(m * (m - 1) / 2);
        for j in (1..m).rev() {
            letters.extend((l..l + j).map(|g| g as i32));
        }
        Self::new(strand_count, letters)
    }

    /// `Δ²` on all strands.
    pub fn full_twist(strand_count: usize) -> Self {
        let h = Self::half_twist(strand_count, 1, strand_count);
        h.then(&h)
    }

    pub fn then(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strand_count, other.strand_count);
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        BraidWord::new(self.strand_count, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(
            self.strand_count,
            self.letters.iter().rev().map(|l| -l).collect(),
        )
    }

    pub fn normal_form(&self) -> NormalForm {
        normal_form(self.strand_count, &self.letters)
    }

    pub fn equals(&self, other: &BraidWord) -> bool {
        self.strand_count == other.strand_count && self.normal_form() == other.normal_form()
    }

    /// Underlying permutation: `p[x]` is the end position of the strand
    /// starting at `x`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strand_count).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            for p in pos.iter_mut() {
                if *p == i - 1 {
                    *p = i;
                } else if *p == i {
                    *p = i - 1;
                }
            }
        }
        pos
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("S{}", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::garside::Simple;

    /// The half twist on a block is the simple braid reversing it.
    fn half_twist_is_simple(strand_count: usize, l: usize, m: usize) -> bool {
        let nf = BraidWord::half_twist(strand_count, l, m).normal_form();
        let mut rev: Vec<u8> = (0..strand_count as u8).collect();
        rev[l - 1..l - 1 + m].reverse();
        if m == strand_count {
            nf.power == 1 && nf.factors.is_empty()
        } else {
            nf.power == 0 && nf.factors == vec![Simple::from_perm(rev).unwrap()]
        }
    }

    #[test]
    fn half_twist_words() {
        assert_eq!(BraidWord::half_twist(3, 1, 2).letters, vec![1]);
        assert_eq!(BraidWord::half_twist(4, 2, 3).letters, vec![2, 3, 2]);
        assert_eq!(BraidWord::half_twist(5, 1, 4).letters, vec![1, 2, 3, 1, 2, 1]);
        assert!(BraidWord::half_twist(4, 3, 1).is_empty());
    }

    #[test]
    fn half_twist_reverses_block() {
        let h = BraidWord::half_twist(6, 2, 4);
        assert_eq!(h.permutation(), vec![0, 4, 3, 2, 1, 5]);
        assert!(BraidWord::full_twist(6).is_pure());
        assert!(half_twist_is_simple(6, 2, 4));
        assert!(half_twist_is_simple(4, 1, 4));
    }

    #[test]
    fn full_twist_normal_form() {
        for n in 2..7 {
            assert!(BraidWord::full_twist(n).normal_form().is_full_twist());
        }
    }
}
