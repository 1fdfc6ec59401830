//! Left normal form in the braid group `B_N`.
//!
//! Every braid is uniquely `Δ^p A_1 ... A_r` with each `A_i` a simple
//! braid (a positive braid in which any two strands cross at most once),
//! `A_1 ≠ Δ`, `A_r ≠ 1`, and each pair `(A_i, A_{i+1})` left-weighted.
//! Simple braids are stored as permutations: `p[x]` is the end position of
//! the strand starting at position `x`; `σ_i` swaps positions `i-1, i`.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(Vec<u8>);

impl Simple {
    pub fn identity(n: usize) -> Self {
        Simple((0..n as u8).collect())
    }

    pub fn delta(n: usize) -> Self {
        Simple((0..n as u8).rev().collect())
    }

    /// `None` unless `p` is a permutation of `0..p.len()`.
    pub fn from_perm(p: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; p.len()];
        for &x in &p {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Simple(p))
    }

    pub fn sigma(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// `Δ σ_i⁻¹`, the complement of `σ_i` in `Δ`.
    fn delta_sigma_inv(n: usize, i: usize) -> Self {
        let s = Self::sigma(n, i);
        Simple((0..n).map(|x| s.0[n - 1 - x]).collect())
    }

    fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.0.iter().enumerate().all(|(i, &x)| x as usize == n - 1 - i)
    }

    /// `Δ⁻¹ A Δ`.
    fn tau(&self) -> Self {
        let n = self.n();
        Simple((0..n).map(|x| (n - 1 - self.0[n - 1 - x] as usize) as u8).collect())
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.n()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        inv
    }

    /// `{i : σ_i ≼ A}`.
    fn starts_with(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `{i : A ≽ σ_i}`.
    fn finish_set(&self) -> Vec<bool> {
        let inv = self.inverse_perm();
        let mut f = vec![false; self.n()];
        for i in 1..self.n() {
            f[i] = inv[i - 1] > inv[i];
        }
        f
    }

    /// `A σ_i`.
    fn times_sigma(&self, i: usize) -> Self {
        Simple(
            self.0
                .iter()
                .map(|&y| match y as usize {
                    y if y == i - 1 => i as u8,
                    y if y == i => (i - 1) as u8,
                    y => y as u8,
                })
                .collect(),
        )
    }

    /// `σ_i⁻¹ B`, assuming `σ_i ≼ B`.
    fn sigma_inv_times(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Simple(p)
    }

    /// A positive word for the simple braid (bubble sort of the permutation).
    pub fn word(&self) -> Vec<i32> {
        let n = self.n();
        // Strands sorted by end position; swap adjacent inversions.
        let mut cur: Vec<u8> = self.0.clone();
        let mut out = Vec::new();
        while let Some(i) = (1..n).find(|&i| cur[i - 1] > cur[i]) {
            cur.swap(i - 1, i);
            out.push(i as i32);
        }
        out
    }
}

/// `Δ^power · factors`, in left normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub strands: usize,
    pub power: i64,
    pub factors: Vec<Simple>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    /// `Δ^2`, the full twist.
    pub fn is_full_twist(&self) -> bool {
        self.power == 2 && self.factors.is_empty()
    }

    /// Number of canonical factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// An Artin word representing the normal form.
    pub fn word(&self) -> Vec<i32> {
        let delta = Simple::delta(self.strands).word();
        let mut out = Vec::new();
        for _ in 0..self.power.max(0) {
            out.extend(&delta);
        }
        for _ in 0..(-self.power).max(0) {
            out.extend(delta.iter().rev().map(|l| -l));
        }
        for f in &self.factors {
            out.extend(f.word());
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.power)?;
        for a in &self.factors {
            write!(f, " {:?}", a.0)?;
        }
        Ok(())
    }
}

/// Makes `(a, b)` left-weighted; returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let mut moved = false;
    loop {
        let fa = a.finish_set();
        let Some(i) = (1..a.n()).find(|&i| b.starts_with(i) && !fa[i]) else {
            return moved;
        };
        *a = a.times_sigma(i);
        *b = b.sigma_inv_times(i);
        moved = true;
    }
}

/// Cancels adjacent `x x⁻¹` pairs.
fn free_reduce(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Left normal form of an Artin word on `n` strands.
pub fn normal_form(n: usize, letters: &[i32]) -> NormalForm {
    assert!(n >= 1 && n <= u8::MAX as usize, "strand count out of range");
    let mut power = 0i64;
    let mut factors: Vec<Simple> = Vec::new();
    for l in free_reduce(letters) {
        let i = l.unsigned_abs() as usize;
        assert!(i >= 1 && i < n, "generator index {i} out of range for {n} strands");
        if l > 0 {
            factors.push(Simple::sigma(n, i));
        } else {
            // X Δ⁻¹ = Δ⁻¹ τ(X).
            power -= 1;
            for f in factors.iter_mut() {
                *f = f.tau();
            }
            factors.push(Simple::delta_sigma_inv(n, i));
        }
        // The prefix was left-weighted, so one backward pass suffices.
        for j in (0..factors.len() - 1).rev() {
            let (left, right) = factors.split_at_mut(j + 1);
            if !left_weight(&mut left[j], &mut right[0]) {
                break;
            }
        }
        let lead = factors.iter().take_while(|f| f.is_delta()).count();
        power += lead as i64;
        factors.drain(..lead);
        while factors.last().is_some_and(Simple::is_identity) {
            factors.pop();
        }
    }
    NormalForm {
        strands: n,
        power,
        factors,
    }
}

/// Equality in `B_n`.
pub fn braids_equal(n: usize, a: &[i32], b: &[i32]) -> bool {
    normal_form(n, a) == normal_form(n, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::free_group::Automorphism;
    use proptest::prelude::*;

    fn inverse(w: &[i32]) -> Vec<i32> {
        w.iter().rev().map(|l| -l).collect()
    }

    #[test]
    fn basic_relations() {
        assert!(braids_equal(3, &[1, 2, 1], &[2, 1, 2]));
        assert!(braids_equal(4, &[1, 3], &[3, 1]));
        assert!(!braids_equal(3, &[1, 2], &[2, 1]));
        assert!(normal_form(4, &[2, -2, 3, -3]).is_identity());
        assert!(normal_form(4, &[-1, 1]).is_identity());
    }

    #[test]
    fn delta_words() {
        let n = 5;
        let d = Simple::delta(n).word();
        assert_eq!(d.len(), 10);
        let nf = normal_form(n, &d);
        assert_eq!((nf.power, nf.factors.len()), (1, 0));
        let mut dd = d.clone();
        dd.extend(&d);
        assert!(normal_form(n, &dd).is_full_twist());
        assert_eq!(normal_form(n, &inverse(&d)).power, -1);
    }

    #[test]
    fn full_twist_is_central() {
        let n = 4;
        let d = Simple::delta(n).word();
        let mut d2 = d.clone();
        d2.extend(&d);
        for w in [vec![1], vec![2, -3], vec![-1, 2, 2, 3]] {
            let mut left = d2.clone();
            left.extend(&w);
            let mut right = w.clone();
            right.extend(&d2);
            assert!(braids_equal(n, &left, &right));
        }
    }

    #[test]
    fn normal_form_word_round_trip() {
        let w = vec![1, -2, 3, 3, -1, 2, -3, 1];
        let nf = normal_form(4, &w);
        assert_eq!(normal_form(4, &nf.word()), nf);
    }

    fn word_strategy(n: usize, len: usize) -> impl Strategy<Value = Vec<i32>> {
        proptest::collection::vec(
            (1..n as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g }),
            0..len,
        )
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_identity(w in word_strategy(5, 14)) {
            let mut ww = w.clone();
            ww.extend(inverse(&w));
            prop_assert!(normal_form(5, &ww).is_identity());
        }

        #[test]
        fn normal_form_agrees_with_artin_action(a in word_strategy(4, 9), b in word_strategy(4, 9)) {
            // The Artin representation is faithful, so it is an independent
            // equality oracle.
            let same_nf = braids_equal(4, &a, &b);
            let same_action = Automorphism::of_braid(4, &a) == Automorphism::of_braid(4, &b);
            prop_assert_eq!(same_nf, same_action);
        }

        #[test]
        fn normal_form_is_invariant(w in word_strategy(4, 10)) {
            let nf = normal_form(4, &w);
            prop_assert_eq!(Automorphism::of_braid(4, &nf.word()), Automorphism::of_braid(4, &w));
        }

        #[test]
        fn inserted_relations_do_not_change_form(w in word_strategy(4, 8), at in 0usize..8) {
            let at = at.min(w.len());
            let mut x = w.clone();
            x.splice(at..at, [1, 2, 1, -2, -1, -2]);
            prop_assert!(braids_equal(4, &w, &x));
        }
    }
}
