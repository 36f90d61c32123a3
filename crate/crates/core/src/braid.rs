//! Words in the braid group and its pure braid subgroup.
//!
//! Convention: the Artin generator `s_i` crosses the strand at position `i`
//! over the strand at position `i + 1` (a right-handed crossing). Words are
//! kept literally as written; free reduction is an explicit operation.

use crate::diagram::{SliceEvent, SliceWord};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sign of a crossing or generator exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One Artin generator occurrence `s_index^(±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// Generator position, `1 <= index <= strands - 1`.
    pub index: u32,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(index: u32, sign: Sign) -> BraidLetter {
        BraidLetter { index, sign }
    }

    pub fn inverse(self) -> BraidLetter {
        BraidLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the Artin generators on a fixed number of strands. The empty
/// word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<BraidLetter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::IndexError("braid needs at least one strand".into()));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexError(format!(
                    "generator s{} out of range for {} strands",
                    l.index, strands
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: u32) -> BraidWord {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation, `self` below `other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::WidthMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reversed word with all signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancel adjacent `s_i s_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.index == l.index && top.sign == l.sign.flip() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The permutation induced on strand endpoints, bottom to top.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<u32> = (1..=self.strands).collect();
        // images[p] = bottom strand currently at position p; swap as we sweep.
        for l in &self.letters {
            let i = (l.index - 1) as usize;
            images.swap(i, i + 1);
        }
        // Invert: we tracked position -> bottom label, want bottom -> top position.
        let mut result = vec![0u32; self.strands as usize];
        for (pos, &bottom) in images.iter().enumerate() {
            result[(bottom - 1) as usize] = pos as u32 + 1;
        }
        Permutation { images: result }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// One `Cross` event per letter; cup- and cap-free by construction.
    pub fn to_slice_word(&self) -> SliceWord {
        SliceWord::new(
            self.strands,
            self.letters
                .iter()
                .map(|l| SliceEvent::Cross {
                    pos: l.index,
                    sign: l.sign,
                })
                .collect(),
        )
    }
}

/// A bijection of `{1, ..., n}`; `images[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(Error::IndexError("not a bijection of 1..n".into()));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// `self` first, then `after`.
    pub fn then(&self, after: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&v| after.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }
}

/// The standard pure braid generator
/// `A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1`.
///
/// Strands `i` and `j` acquire linking number one; all other pairs stay
/// unlinked.
pub fn pure_generator(i: u32, j: u32, n: u32) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexError(format!(
            "pure generator needs 1 <= i < j <= n, got i={i}, j={j}, n={n}"
        )));
    }
    let mut letters = Vec::new();
    for k in ((i + 1)..j).rev() {
        letters.push(BraidLetter::new(k, Sign::Pos));
    }
    letters.push(BraidLetter::new(i, Sign::Pos));
    letters.push(BraidLetter::new(i, Sign::Pos));
    for k in (i + 1)..j {
        letters.push(BraidLetter::new(k, Sign::Neg));
    }
    BraidWord::new(n, letters)
}

/// Deterministic sampler for pure braids: a product of `length` factors,
/// each a pure braid generator `A_ij^(±1)`, or a commutator
/// `[A_ij, A_kl]` when `commutator_only` is set (which forces every
/// pairwise linking number to vanish).
pub fn random_pure_braid(n: u32, length: u32, seed: u64, commutator_only: bool) -> BraidWord {
    assert!(n >= 2, "sampler needs at least two strands");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut word = BraidWord::identity(n);
    for _ in 0..length {
        let (i, j) = pairs[rng.gen_range(0..pairs.len())];
        let a = pure_generator(i, j, n).expect("pair in range");
        let factor = if commutator_only {
            let (k, l) = pairs[rng.gen_range(0..pairs.len())];
            let b = pure_generator(k, l, n).expect("pair in range");
            commutator_word(&a, &b)
        } else if rng.gen_bool(0.5) {
            a
        } else {
            a.inverse()
        };
        word = word.compose(&factor).expect("same strand count");
    }
    word
}

fn commutator_word(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.compose(b)
        .and_then(|w| w.compose(&a.inverse()))
        .and_then(|w| w.compose(&b.inverse()))
        .expect("same strand count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: u32, letters: &[(u32, i8)]) -> BraidWord {
        BraidWord::new(
            n,
            letters
                .iter()
                .map(|&(i, s)| BraidLetter::new(i, if s > 0 { Sign::Pos } else { Sign::Neg }))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn permutation_of_empty_word_is_identity() {
        assert!(BraidWord::identity(3).permutation().is_identity());
    }

    #[test]
    fn single_generator_transposes_adjacent_strands() {
        let p = word(2, &[(1, 1)]).permutation();
        assert_eq!(p.images(), &[2, 1]);
    }

    #[test]
    fn transposition_squared_is_identity() {
        assert!(word(2, &[(1, 1), (1, 1)]).is_pure());
        assert!(!word(2, &[(1, 1)]).is_pure());
    }

    #[test]
    fn commutator_of_pure_words_is_pure() {
        let a = word(3, &[(1, 1), (1, 1)]);
        let b = word(3, &[(2, 1), (2, 1)]);
        assert!(commutator_word(&a, &b).is_pure());
    }

    #[test]
    fn pure_generator_base_cases() {
        assert_eq!(pure_generator(1, 2, 2).unwrap(), word(2, &[(1, 1), (1, 1)]));
        assert_eq!(
            pure_generator(1, 3, 3).unwrap(),
            word(3, &[(2, 1), (1, 1), (1, 1), (2, -1)])
        );
        assert_eq!(pure_generator(2, 3, 3).unwrap(), word(3, &[(2, 1), (2, 1)]));
    }

    #[test]
    fn pure_generator_rejects_bad_bounds() {
        assert!(pure_generator(2, 2, 3).is_err());
        assert!(pure_generator(1, 4, 3).is_err());
        assert!(pure_generator(0, 1, 3).is_err());
    }

    #[test]
    fn pure_generators_are_pure_up_to_six_strands() {
        for n in 2..=6 {
            for i in 1..n {
                for j in (i + 1)..=n {
                    assert!(pure_generator(i, j, n).unwrap().is_pure(), "A_{i}{j} in n={n}");
                }
            }
        }
    }

    #[test]
    fn compose_then_invert_reduces_to_identity() {
        let w = word(3, &[(1, 1), (2, -1), (1, 1)]);
        let round = w.compose(&w.inverse()).unwrap();
        assert!(round.free_reduce().is_empty());
    }

    #[test]
    fn invert_reverses_letters_and_signs() {
        let w = word(3, &[(1, 1), (2, 1)]);
        assert_eq!(w.inverse(), word(3, &[(2, -1), (1, -1)]));
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn identity_is_neutral_for_compose() {
        let w = word(3, &[(2, 1), (1, -1)]);
        assert_eq!(BraidWord::identity(3).compose(&w).unwrap(), w);
        assert_eq!(w.compose(&BraidWord::identity(3)).unwrap(), w);
    }

    #[test]
    fn compose_rejects_width_mismatch() {
        let a = BraidWord::identity(2);
        let b = BraidWord::identity(3);
        assert_eq!(a.compose(&b), Err(Error::WidthMismatch(2, 3)));
    }

    #[test]
    fn sampler_is_deterministic_and_pure() {
        let a = random_pure_braid(4, 8, 17, false);
        let b = random_pure_braid(4, 8, 17, false);
        assert_eq!(a, b);
        assert!(a.is_pure());
        assert!(random_pure_braid(3, 0, 0, false).is_empty());
        assert!(random_pure_braid(4, 5, 3, true).is_pure());
    }

    #[test]
    fn slice_word_of_braid_has_one_cross_per_letter() {
        let w = word(2, &[(1, 1), (1, 1)]);
        let s = w.to_slice_word();
        assert_eq!(s.strands(), 2);
        assert_eq!(
            s.events(),
            &[
                SliceEvent::Cross {
                    pos: 1,
                    sign: Sign::Pos
                },
                SliceEvent::Cross {
                    pos: 1,
                    sign: Sign::Pos
                },
            ]
        );
        assert!(BraidWord::identity(2).to_slice_word().events().is_empty());
        let a13 = pure_generator(1, 3, 3).unwrap().to_slice_word();
        assert_eq!(a13.events().len(), 4);
    }
}
