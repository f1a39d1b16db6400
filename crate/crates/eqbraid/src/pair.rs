//! Ordered pairs of palindromic braids and their equivariant closure.

use crate::braid::{BraidWord, WordError};
use crate::diagram::LinkDiagram;
use crate::normal::is_palindromic;
use std::fmt;
use thiserror::Error;

/// Which component of a pair an operation targets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    First,
    Second,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::First => write!(f, "first"),
            Side::Second => write!(f, "second"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    /// The named component is not equal to its reverse as a group element.
    #[error("{side} component is not palindromic")]
    NotPalindromic { side: Side },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// An ordered pair `(α, β)` of palindromic braids on the same strand count.
/// The closure of `αβ` is the underlying link; validity is checked at
/// construction, so a value of this type always satisfies both invariants.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EquivariantPair {
    alpha: BraidWord,
    beta: BraidWord,
}

impl EquivariantPair {
    pub fn new(alpha: BraidWord, beta: BraidWord) -> Result<EquivariantPair, PairError> {
        if alpha.strands() != beta.strands() {
            return Err(WordError::StrandMismatch {
                left: alpha.strands(),
                right: beta.strands(),
            }
            .into());
        }
        if !is_palindromic(&alpha) {
            return Err(PairError::NotPalindromic { side: Side::First });
        }
        if !is_palindromic(&beta) {
            return Err(PairError::NotPalindromic { side: Side::Second });
        }
        Ok(EquivariantPair { alpha, beta })
    }

    pub fn trivial(strands: usize) -> EquivariantPair {
        EquivariantPair {
            alpha: BraidWord::identity(strands),
            beta: BraidWord::identity(strands),
        }
    }

    pub fn alpha(&self) -> &BraidWord {
        &self.alpha
    }

    pub fn beta(&self) -> &BraidWord {
        &self.beta
    }

    pub fn component(&self, side: Side) -> &BraidWord {
        match side {
            Side::First => &self.alpha,
            Side::Second => &self.beta,
        }
    }

    pub fn strands(&self) -> usize {
        self.alpha.strands()
    }

    /// The concatenation `αβ`, unreduced.
    pub fn closure_word(&self) -> BraidWord {
        self.alpha.concat(&self.beta).expect("equal strands")
    }

    /// PD code of the closure of `αβ`.
    pub fn closure_diagram(&self) -> LinkDiagram {
        LinkDiagram::closure_of_word(&self.closure_word())
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation of `αβ`.
    pub fn component_count(&self) -> usize {
        self.closure_word().permutation().cycle_count()
    }

    /// The same pair with both components freely reduced (free reduction
    /// preserves the group element, hence palindromicity).
    pub fn free_reduced(&self) -> EquivariantPair {
        EquivariantPair {
            alpha: self.alpha.free_reduce(),
            beta: self.beta.free_reduce(),
        }
    }
}

impl fmt::Display for EquivariantPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}
