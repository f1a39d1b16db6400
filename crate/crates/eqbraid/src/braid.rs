//! Braid words in the Artin generators.
//!
//! A word is a finite sequence of letters `σ_i^{±1}` on a fixed strand
//! count `n`, with indices in `1..=n-1`. Words are stored unreduced; free
//! reduction is an explicit operation. The strand count is part of a word's
//! identity: the same letter list on different strand counts compares
//! unequal.

use std::fmt;
use thiserror::Error;

/// A single Artin generator or its inverse, stored as a nonzero integer:
/// `+k` is `σ_k`, `-k` is `σ_k⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// Builds a letter from a signed nonzero integer. Range against a strand
    /// count is checked by [`BraidWord`] constructors, not here.
    pub fn from_int(k: i32) -> Option<Letter> {
        if k == 0 {
            None
        } else {
            Some(Letter(k))
        }
    }

    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index > 0, "generator index must be positive");
        let k = index as i32;
        Letter(if positive { k } else { -k })
    }

    /// Generator index `i` of `σ_i^{±1}`, always ≥ 1.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Index shifted by `d`, same sign.
    pub fn shifted(self, d: usize) -> Letter {
        let d = d as i32;
        Letter(if self.0 > 0 { self.0 + d } else { self.0 - d })
    }

    pub fn as_int(self) -> i32 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    /// A token parsed as an integer but names no generator of the group:
    /// zero, or index beyond `strands - 1`.
    #[error("generator {token} out of range for {strands} strands")]
    OutOfRangeGenerator { token: i64, strands: usize },
    /// A token that is not a signed decimal integer.
    #[error("malformed token {token:?}")]
    MalformedToken { token: String },
    /// Two words on different strand counts were combined.
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
}

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word (identity braid) on `strands` strands.
    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1, "strand count must be at least 1");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a word from letters, checking every index against the strand
    /// count. For `strands = 1` only the empty list is accepted.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, WordError> {
        assert!(strands >= 1, "strand count must be at least 1");
        for l in &letters {
            if l.index() >= strands {
                return Err(WordError::OutOfRangeGenerator {
                    token: l.as_int() as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed integers (`+k` = `σ_k`, `-k` = `σ_k⁻¹`).
    pub fn from_ints(strands: usize, ints: &[i32]) -> Result<BraidWord, WordError> {
        let letters = ints
            .iter()
            .map(|&k| {
                Letter::from_int(k).ok_or(WordError::OutOfRangeGenerator { token: 0, strands })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// Parses the word text format: whitespace-separated signed decimal
    /// integers, blank for the identity.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let k: i64 = tok.parse().map_err(|_| WordError::MalformedToken {
                token: tok.to_string(),
            })?;
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(WordError::OutOfRangeGenerator { token: k, strands });
            }
            letters.push(Letter(k as i32));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Word text: letters as signed integers joined by single spaces,
    /// empty string for the identity. Round-trips through [`parse`].
    ///
    /// [`parse`]: BraidWord::parse
    pub fn text(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.as_int().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word read right to left, indices and signs unchanged.
    pub fn reverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Group inverse: reversed order, all signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`; the strand counts must agree.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.strands != other.strands {
            return Err(WordError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Cancels adjacent `σ_i^{±1} σ_i^{∓1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// The inclusion `σ_i ↦ σ_{i+1}` into the group on one more strand.
    pub fn shift_s(&self) -> BraidWord {
        BraidWord {
            strands: self.strands + 1,
            letters: self.letters.iter().map(|l| l.shifted(1)).collect(),
        }
    }

    /// The inclusion `σ_i ↦ σ_i` into the group on one more strand.
    pub fn embed_e(&self) -> BraidWord {
        BraidWord {
            strands: self.strands + 1,
            letters: self.letters.clone(),
        }
    }

    /// Mirror image: every letter sign flipped, order kept.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// The permutation of strand endpoints: the product of the
    /// transpositions `(i, i+1)` in word order.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_images(l.index() - 1);
        }
        p
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, [{}])", self.strands, self.text())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "(id)")
        } else {
            write!(f, "{}", self.text())
        }
    }
}

/// A bijection on `{1..n}` stored 0-indexed: `images[i]` is the image of
/// point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from a 0-indexed image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (0-indexed).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Post-composes with the transposition of values `i` and `i+1`
    /// (0-indexed): the update for one crossing at position `i`.
    pub(crate) fn swap_images(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// `self` then `other`, as functions applied left to right.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }

    /// Number of inversions: pairs `i < j` with `image(i) > image(j)`.
    pub fn inversion_count(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|&v| v + 1).collect();
        write!(f, "Perm{:?}", one_based)
    }
}
