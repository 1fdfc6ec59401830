//! Words in the free group on `δ_1..δ_N` and the Artin action of braids.
//!
//! A letter `g > 0` is `δ_g`, `-g` its inverse. Braids act on the right:
//! the image of a word under `w = l_1 l_2 ... l_r` is obtained by
//! substituting the images under `l_1`, then under `l_2`, and so on.

use std::fmt;

use crate::error::{precondition, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(pub Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn generator(g: i32) -> Self {
        Self(vec![g])
    }

    /// Freely reduced word from letters.
    pub fn new(letters: Vec<i32>) -> Self {
        let mut w = Self(Vec::with_capacity(letters.len()));
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Replaces every letter by the given images of the generators.
    pub fn substitute(&self, images: &[FreeWord], inverses: &[FreeWord]) -> FreeWord {
        let mut w = FreeWord::identity();
        for &l in &self.0 {
            let img = if l > 0 {
                &images[(l - 1) as usize]
            } else {
                &inverses[(-l - 1) as usize]
            };
            for &x in &img.0 {
                w.push(x);
            }
        }
        w
    }

    /// Exponent sum of each generator.
    pub fn exponents(&self, n: usize) -> Vec<i64> {
        let mut e = vec![0i64; n];
        for &l in &self.0 {
            e[(l.unsigned_abs() - 1) as usize] += l.signum() as i64;
        }
        e
    }

    /// Space-separated `d3`/`D3` tokens (upper case for inverses).
    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(|&l| if l > 0 { format!("d{l}") } else { format!("D{}", -l) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(text: &str) -> Result<FreeWord> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let (sign, rest) = match tok.split_at(1) {
                ("d", r) => (1, r),
                ("D", r) => (-1, r),
                _ => return precondition(format!("bad free-group token {tok:?}")),
            };
            match rest.parse::<i32>() {
                Ok(g) if g >= 1 => out.push(sign * g),
                _ => return precondition(format!("bad free-group token {tok:?}")),
            }
        }
        Ok(FreeWord::new(out))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.to_text())
        }
    }
}

/// An automorphism of the free group of rank `N`, stored by the images of
/// the generators and of their inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<FreeWord>,
    inverses: Vec<FreeWord>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        let images: Vec<FreeWord> = (1..=n as i32).map(FreeWord::generator).collect();
        let inverses = images.iter().map(FreeWord::inverse).collect();
        Self { images, inverses }
    }

    /// Action of one Artin letter (`±m`, `1 <= m < N`).
    pub fn artin(n: usize, letter: i32) -> Self {
        let m = letter.unsigned_abs() as usize;
        assert!(m >= 1 && m < n, "generator index out of range");
        let mut a = Self::identity(n);
        let (dm, dm1) = (m as i32, m as i32 + 1);
        let (im, im1) = if letter > 0 {
            (FreeWord::new(vec![dm, dm1, -dm]), FreeWord::generator(dm))
        } else {
            (FreeWord::generator(dm1), FreeWord::new(vec![-dm1, dm, dm1]))
        };
        a.inverses[m - 1] = im.inverse();
        a.inverses[m] = im1.inverse();
        a.images[m - 1] = im;
        a.images[m] = im1;
        a
    }

    /// Right action of an Artin word: letters applied left to right.
    pub fn of_braid(n: usize, letters: &[i32]) -> Self {
        let mut a = Self::identity(n);
        for &l in letters {
            a = a.then(&Self::artin(n, l));
        }
        a
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Automorphism) -> Automorphism {
        let images: Vec<FreeWord> = self
            .images
            .iter()
            .map(|w| w.substitute(&next.images, &next.inverses))
            .collect();
        let inverses = images.iter().map(FreeWord::inverse).collect();
        Automorphism { images, inverses }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images, &self.inverses)
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = FreeWord::new(vec![1, 2, -2, -1, 3]);
        assert_eq!(w, FreeWord::generator(3));
        let a = FreeWord::new(vec![1, 2]);
        assert!(a.mul(&a.inverse()).is_empty());
    }

    #[test]
    fn text_round_trip() {
        let w = FreeWord::new(vec![3, -5, 1]);
        assert_eq!(w.to_text(), "d3 D5 d1");
        assert_eq!(FreeWord::parse("d3 D5 d1").unwrap(), w);
        assert!(FreeWord::parse("x1").is_err());
        assert!(FreeWord::parse("d0").is_err());
    }

    #[test]
    fn letter_and_inverse_cancel() {
        let n = 4;
        for m in 1..4 {
            let a = Automorphism::of_braid(n, &[m, -m]);
            assert_eq!(a, Automorphism::identity(n));
            let b = Automorphism::of_braid(n, &[-m, m]);
            assert_eq!(b, Automorphism::identity(n));
        }
    }

    #[test]
    fn braid_relations_hold() {
        let n = 4;
        assert_eq!(
            Automorphism::of_braid(n, &[1, 2, 1]),
            Automorphism::of_braid(n, &[2, 1, 2])
        );
        assert_eq!(
            Automorphism::of_braid(n, &[1, 3]),
            Automorphism::of_braid(n, &[3, 1])
        );
        assert_ne!(
            Automorphism::of_braid(n, &[1, 2]),
            Automorphism::of_braid(n, &[2, 1])
        );
    }

    #[test]
    fn product_of_generators_is_fixed() {
        let n = 5;
        let boundary = FreeWord::new((1..=n as i32).collect());
        for m in 1..n as i32 {
            for l in [m, -m] {
                assert_eq!(Automorphism::artin(n, l).apply(&boundary), boundary);
            }
        }
    }

    #[test]
    fn square_of_generator_is_commutation() {
        let a = Automorphism::of_braid(2, &[1, 1]);
        let b = FreeWord::new(vec![1, 2]);
        // δ1 ↦ (δ1δ2) δ1 (δ1δ2)⁻¹
        assert_eq!(a.image(1), &b.mul(&FreeWord::generator(1)).mul(&b.inverse()));
        assert_eq!(a.image(2), &b.mul(&FreeWord::generator(2)).mul(&b.inverse()));
    }
}
