//! Algebra of braid pairs with a palindromic symmetry.
//!
//! The library works with braid words in the Artin generators. A braid is
//! *palindromic* when it equals, as a group element, the word read right to
//! left. An ordered pair of palindromic braids on the same strand count
//! closes up to a link (the closure of the concatenated word), and a small
//! set of moves (equivariant conjugation, two stabilizations on a fixed
//! point, a double stabilization, and component swap) relates pairs with
//! the same closure.
//!
//! The crate provides:
//!
//! * [`BraidWord`]: words in the Artin generators, with reversal, inversion,
//!   free reduction and the two strand-adding inclusions.
//! * [`NormalForm`]: Garside left normal form, solving the word problem and
//!   hence the palindromicity predicate.
//! * [`DeloupFactorization`]: writing a palindromic braid as `x · Δ · x̄`
//!   with `Δ` a block of pairwise-commuting generators.
//! * [`EquivariantPair`] and [`LinkDiagram`]: the closure map into planar
//!   diagram (PD) codes.
//! * Jones (via the Kauffman bracket) and Alexander (via reduced Burau)
//!   polynomials as exact integer Laurent polynomials, used as oracles that
//!   the moves preserve the underlying link.
//! * Bounded bidirectional search for a sequence of moves relating two
//!   pairs, with trace verification.
//! * The bundled example corpus and its batch verifier.

pub mod braid;
pub mod corpus;
pub mod deloup;
pub mod diagram;
pub mod invariants;
pub mod laurent;
pub mod moves;
pub mod normal;
pub mod pair;
pub mod search;
mod util;

pub use braid::{BraidWord, Letter, Permutation, WordError};
pub use corpus::{
    corpus_verify, load_corpus, parse_corpus, reference_word, CheckKind, CheckResult, CorpusEntry,
    CorpusError, CorpusReport,
};
pub use deloup::{deloup_factorize, is_seed_block, DeloupError, DeloupFactorization};
pub use diagram::{Crossing, LinkDiagram};
pub use invariants::{
    alexander, alexander_of_word, burau_reduced, jones, jones_of_word, jones_with_bound,
    kauffman_bracket, kauffman_bracket_with_bound, writhe, BurauMatrix, InvariantError,
    DEFAULT_MAX_CROSSINGS,
};
pub use laurent::LaurentPoly;
pub use moves::{
    apply_move, double_stab, double_stab_with_bound, eq_conjugate, stab_e, stab_e_with_bound,
    stab_s, stab_s_with_bound, swap, MoveDescriptor, MoveError,
};
pub use normal::{is_identity, is_palindromic, normal_form, words_equal, NormalForm, SimpleFactor};
pub use pair::{EquivariantPair, PairError, Side};
pub use search::{
    canonical_key, find_trace, verify_trace, Direction, MoveTrace, PairKey, SearchBudget,
    SearchError, TraceError, TraceStep,
};
