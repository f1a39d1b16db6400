//! Factoring a palindromic braid as `x · Δ · x̄` with `Δ` a seed block.
//!
//! A *seed block* is a word whose letters use pairwise-distinct generator
//! indices with pairwise distance at least 2, so its letters commute and the
//! block is palindromic for free. Every palindromic braid admits such a
//! factorization; no algorithm for finding one is known in general, so the
//! search here is bounded and failure is reported honestly as
//! [`DeloupError::NotFoundWithinBound`], never as a proof of nonexistence.

use crate::braid::{BraidWord, Letter};
use crate::normal::{is_palindromic, words_equal};
use thiserror::Error;

/// A verified factorization `w = x · seedBlock · x̄` (group equality).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeloupFactorization {
    x: BraidWord,
    seed_block: BraidWord,
}

impl DeloupFactorization {
    pub fn x(&self) -> &BraidWord {
        &self.x
    }

    pub fn seed_block(&self) -> &BraidWord {
        &self.seed_block
    }

    /// The concatenation `x · seedBlock · reverse(x)`.
    pub fn recombined(&self) -> BraidWord {
        self.x
            .concat(&self.seed_block)
            .and_then(|u| u.concat(&self.x.reverse()))
            .expect("equal strands")
    }

    /// Checks the defining equation against a word.
    pub fn verifies(&self, w: &BraidWord) -> bool {
        words_equal(&self.recombined(), w).unwrap_or(false)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeloupError {
    #[error("word is not palindromic")]
    NotPalindromic,
    /// Exhausted the bounded search; says nothing about existence beyond
    /// the bound.
    #[error("no factorization with |x| <= {max_x_len} found")]
    NotFoundWithinBound { max_x_len: usize },
}

/// True iff the letters use pairwise-distinct indices with pairwise
/// distance ≥ 2 (equivalently: the letters commute pairwise).
pub fn is_seed_block(w: &BraidWord) -> bool {
    let letters = w.letters();
    letters.iter().enumerate().all(|(j, a)| {
        letters[j + 1..]
            .iter()
            .all(|b| a.index().abs_diff(b.index()) >= 2)
    })
}

/// All seed blocks on `strands` strands, ascending index sequences, signs
/// `+` before `-` at each position; the empty block comes first.
fn seed_blocks(strands: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut letters: Vec<Letter> = Vec::new();
    fn extend(start: usize, strands: usize, letters: &mut Vec<Letter>, out: &mut Vec<BraidWord>) {
        out.push(BraidWord::new(strands, letters.clone()).expect("valid indices"));
        for i in start..strands {
            for positive in [true, false] {
                letters.push(Letter::new(i, positive));
                extend(i + 2, strands, letters, out);
                letters.pop();
            }
        }
    }
    extend(1, strands, &mut letters, &mut out);
    out
}

/// Letterwise split: smallest `k ≤ cap` with suffix = reversed prefix
/// letter by letter and a seed-block middle.
fn letterwise_split(w: &BraidWord, cap: usize) -> Option<DeloupFactorization> {
    let ls = w.letters();
    let len = ls.len();
    for k in 0..=(len / 2).min(cap) {
        if (0..k).any(|j| ls[len - 1 - j] != ls[j]) {
            continue;
        }
        let middle = BraidWord::new(w.strands(), ls[k..len - k].to_vec()).expect("sub-word");
        if is_seed_block(&middle) {
            let x = BraidWord::new(w.strands(), ls[..k].to_vec()).expect("sub-word");
            return Some(DeloupFactorization {
                x,
                seed_block: middle,
            });
        }
    }
    None
}

/// Factorization of a palindromic word with `|x| ≤ max_x_len`.
///
/// The letterwise split is tried first (it covers words already written in
/// the shape `u·m·ū`); otherwise candidate `x` words are enumerated by
/// length, then lexicographically by signed letter value, against every
/// seed block, testing `x·Δ·x̄ = w` through the word problem. The first
/// match in that fixed order is returned, so results are deterministic.
pub fn deloup_factorize(
    w: &BraidWord,
    max_x_len: usize,
) -> Result<DeloupFactorization, DeloupError> {
    if !is_palindromic(w) {
        return Err(DeloupError::NotPalindromic);
    }
    if let Some(f) = letterwise_split(w, max_x_len) {
        return Ok(f);
    }

    let n = w.strands();
    let blocks = seed_blocks(n);
    let alphabet: Vec<Letter> = (1..n as i32)
        .map(|k| -k)
        .rev()
        .chain(1..n as i32)
        .map(|k| Letter::from_int(k).expect("nonzero"))
        .collect();
    let mut stack: Vec<usize> = Vec::new();
    for len in 0..=max_x_len {
        stack.clear();
        stack.resize(len, 0);
        loop {
            let x = BraidWord::new(n, stack.iter().map(|&i| alphabet[i]).collect())
                .expect("alphabet letters in range");
            let xr = x.reverse();
            for block in &blocks {
                let candidate = x
                    .concat(block)
                    .and_then(|u| u.concat(&xr))
                    .expect("equal strands");
                if words_equal(&candidate, w).expect("equal strands") {
                    return Ok(DeloupFactorization {
                        x,
                        seed_block: block.clone(),
                    });
                }
            }
            // Next letter tuple in lexicographic order.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                stack[pos] += 1;
                if stack[pos] < alphabet.len() {
                    break;
                }
                stack[pos] = 0;
            }
            if stack.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Err(DeloupError::NotFoundWithinBound { max_x_len })
}
