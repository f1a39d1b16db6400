//! The five equivariant Markov moves on pairs of palindromic braids.
//!
//! Every move returns a validated [`EquivariantPair`] with unreduced words,
//! so traces stay auditable letter by letter; free reduction is a separate,
//! explicit step. The stabilizations rest on a factorization `xΔx̄` of the
//! chosen component ([`deloup_factorize`] with the component length as
//! bound): type S shifts all indices up and inserts `σ1` next to the
//! shifted seed block, type E keeps indices and inserts the new top
//! generator, and the double stabilization shifts twice and inserts a
//! canceling `σ1^{±1}` pair split across the two components.

use crate::braid::{BraidWord, Letter, WordError};
use crate::deloup::{deloup_factorize, DeloupError};
use crate::pair::{EquivariantPair, Side};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    /// The factorization of the chosen component has the blocking generator
    /// inside its seed block.
    #[error("seed block contains σ{index}, stabilization inapplicable")]
    PreconditionFailed { index: usize },
    #[error("no factorization found for the {side} component")]
    FactorizationNotFound { side: Side },
    #[error("move descriptor {text:?} is malformed")]
    MalformedDescriptor { text: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A move together with its parameters; the unit of trace serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveDescriptor {
    EqConjugate { e: BraidWord },
    StabS { side: Side, sign: i8 },
    StabE { side: Side, sign: i8 },
    DoubleStab { epsilon: i8, eta: i8 },
    Swap,
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

impl fmt::Display for MoveDescriptor {
    /// Text syntax: `conj <word>`, `stabS first|second +|-`,
    /// `stabE first|second +|-`, `dstab +|- +|-`, `swap`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveDescriptor::EqConjugate { e } => {
                if e.is_empty() {
                    write!(f, "conj")
                } else {
                    write!(f, "conj {}", e.text())
                }
            }
            MoveDescriptor::StabS { side, sign } => write!(f, "stabS {side} {}", sign_str(*sign)),
            MoveDescriptor::StabE { side, sign } => write!(f, "stabE {side} {}", sign_str(*sign)),
            MoveDescriptor::DoubleStab { epsilon, eta } => {
                write!(f, "dstab {} {}", sign_str(*epsilon), sign_str(*eta))
            }
            MoveDescriptor::Swap => write!(f, "swap"),
        }
    }
}

impl MoveDescriptor {
    /// Parses the text syntax; `strands` scopes the conjugating word.
    pub fn parse(text: &str, strands: usize) -> Result<MoveDescriptor, MoveError> {
        let malformed = || MoveError::MalformedDescriptor {
            text: text.to_string(),
        };
        let mut tokens = text.split_whitespace();
        let head = tokens.next().ok_or_else(malformed)?;
        let parse_side = |tok: &str| match tok {
            "first" => Ok(Side::First),
            "second" => Ok(Side::Second),
            _ => Err(malformed()),
        };
        let parse_sign = |tok: &str| match tok {
            "+" => Ok(1i8),
            "-" => Ok(-1i8),
            _ => Err(malformed()),
        };
        let d = match head {
            "conj" => {
                let rest: Vec<&str> = tokens.collect();
                let e = BraidWord::parse(&rest.join(" "), strands)?;
                return Ok(MoveDescriptor::EqConjugate { e });
            }
            "stabS" | "stabE" => {
                let side = parse_side(tokens.next().ok_or_else(malformed)?)?;
                let sign = parse_sign(tokens.next().ok_or_else(malformed)?)?;
                if head == "stabS" {
                    MoveDescriptor::StabS { side, sign }
                } else {
                    MoveDescriptor::StabE { side, sign }
                }
            }
            "dstab" => {
                let epsilon = parse_sign(tokens.next().ok_or_else(malformed)?)?;
                let eta = parse_sign(tokens.next().ok_or_else(malformed)?)?;
                MoveDescriptor::DoubleStab { epsilon, eta }
            }
            "swap" => MoveDescriptor::Swap,
            _ => return Err(malformed()),
        };
        if tokens.next().is_some() {
            return Err(malformed());
        }
        Ok(d)
    }
}

fn validated(alpha: BraidWord, beta: BraidWord) -> EquivariantPair {
    // Move outputs are palindromic by construction; a failure here is a bug.
    EquivariantPair::new(alpha, beta).expect("move output must be a valid pair")
}

/// Equivariant conjugation: `(α, β) ↦ (ε·α·ε̄, ε̄⁻¹·β·ε⁻¹)`, unreduced.
pub fn eq_conjugate(p: &EquivariantPair, e: &BraidWord) -> Result<EquivariantPair, MoveError> {
    if e.strands() != p.strands() {
        return Err(WordError::StrandMismatch {
            left: p.strands(),
            right: e.strands(),
        }
        .into());
    }
    let er = e.reverse();
    let alpha = e.concat(p.alpha())?.concat(&er)?;
    let beta = er.inverse().concat(p.beta())?.concat(&e.inverse())?;
    Ok(validated(alpha, beta))
}

/// Component exchange `(α, β) ↦ (β, α)`.
pub fn swap(p: &EquivariantPair) -> EquivariantPair {
    validated(p.beta().clone(), p.alpha().clone())
}

fn factorize_side(
    p: &EquivariantPair,
    side: Side,
    max_x_len: usize,
) -> Result<(BraidWord, BraidWord), MoveError> {
    let comp = p.component(side);
    match deloup_factorize(comp, max_x_len) {
        Ok(f) => Ok((f.x().clone(), f.seed_block().clone())),
        Err(DeloupError::NotPalindromic) => unreachable!("pair components are palindromic"),
        Err(DeloupError::NotFoundWithinBound { .. }) => {
            Err(MoveError::FactorizationNotFound { side })
        }
    }
}

fn single_letter(strands: usize, index: usize, sign: i8) -> BraidWord {
    BraidWord::new(strands, vec![Letter::new(index, sign > 0)]).expect("index in range")
}

/// Stabilization of type S on a fixed point: the chosen component `xΔx̄`
/// becomes `S(x)·S(Δ)·σ1^sign·S(x̄)` on one more strand; the other component
/// is shifted by S. Requires `σ1 ∉ Δ` so that `σ1` commutes with `S(Δ)`.
/// The factorization bound is the larger of `max_x_len` and the component
/// length, so the bound can only be raised.
pub fn stab_s_with_bound(
    p: &EquivariantPair,
    side: Side,
    sign: i8,
    max_x_len: usize,
) -> Result<EquivariantPair, MoveError> {
    let (x, block) = factorize_side(p, side, max_x_len.max(p.component(side).len()))?;
    if block.letters().iter().any(|l| l.index() == 1) {
        return Err(MoveError::PreconditionFailed { index: 1 });
    }
    let n = p.strands() + 1;
    let stabbed = x
        .shift_s()
        .concat(&block.shift_s())?
        .concat(&single_letter(n, 1, sign))?
        .concat(&x.reverse().shift_s())?;
    let other = p.component(other_side(side)).shift_s();
    Ok(assemble(side, stabbed, other))
}

pub fn stab_s(p: &EquivariantPair, side: Side, sign: i8) -> Result<EquivariantPair, MoveError> {
    stab_s_with_bound(p, side, sign, 0)
}

/// Stabilization of type E on a fixed point: the chosen component `xΔx̄` on
/// `m` strands becomes `E(x)·E(Δ)·σ_m^sign·E(x̄)` on `m+1`; the other
/// component is embedded by E. Requires `σ_{m−1} ∉ Δ` so that the new top
/// generator commutes with `E(Δ)`.
pub fn stab_e_with_bound(
    p: &EquivariantPair,
    side: Side,
    sign: i8,
    max_x_len: usize,
) -> Result<EquivariantPair, MoveError> {
    let m = p.strands();
    let (x, block) = factorize_side(p, side, max_x_len.max(p.component(side).len()))?;
    if m >= 2 && block.letters().iter().any(|l| l.index() == m - 1) {
        return Err(MoveError::PreconditionFailed { index: m - 1 });
    }
    let stabbed = x
        .embed_e()
        .concat(&block.embed_e())?
        .concat(&single_letter(m + 1, m, sign))?
        .concat(&x.reverse().embed_e())?;
    let other = p.component(other_side(side)).embed_e();
    Ok(assemble(side, stabbed, other))
}

pub fn stab_e(p: &EquivariantPair, side: Side, sign: i8) -> Result<EquivariantPair, MoveError> {
    stab_e_with_bound(p, side, sign, 0)
}

/// Double stabilization: with `α = xΔx̄` and `β = yΔ′ȳ`, produce
/// `(S²(x)·S²(Δ)·σ1^ε·S²(x̄), σ2^η·S²(y)·S²(Δ′)·σ1^{−ε}·S²(ȳ)·σ2^η)` on two
/// more strands. The shifted blocks use indices ≥ 3, so no generator
/// precondition arises.
///
/// Flagged convention: the second slot uses the second component's own
/// factorization data (Δ′ and ȳ), not Δ and x̄ from the first. The
/// Jones-preservation sweep over moves is the arbiter for this reading.
pub fn double_stab_with_bound(
    p: &EquivariantPair,
    epsilon: i8,
    eta: i8,
    max_x_len: usize,
) -> Result<EquivariantPair, MoveError> {
    let (x, xblock) = factorize_side(p, Side::First, max_x_len.max(p.alpha().len()))?;
    let (y, yblock) = factorize_side(p, Side::Second, max_x_len.max(p.beta().len()))?;
    let n = p.strands() + 2;
    let s2 = |u: &BraidWord| u.shift_s().shift_s();
    let alpha = s2(&x)
        .concat(&s2(&xblock))?
        .concat(&single_letter(n, 1, epsilon))?
        .concat(&s2(&x.reverse()))?;
    let eta_letter = single_letter(n, 2, eta);
    let beta = eta_letter
        .concat(&s2(&y))?
        .concat(&s2(&yblock))?
        .concat(&single_letter(n, 1, -epsilon))?
        .concat(&s2(&y.reverse()))?
        .concat(&eta_letter)?;
    Ok(validated(alpha, beta))
}

pub fn double_stab(
    p: &EquivariantPair,
    epsilon: i8,
    eta: i8,
) -> Result<EquivariantPair, MoveError> {
    double_stab_with_bound(p, epsilon, eta, 0)
}

fn other_side(side: Side) -> Side {
    match side {
        Side::First => Side::Second,
        Side::Second => Side::First,
    }
}

fn assemble(side: Side, stabbed: BraidWord, other: BraidWord) -> EquivariantPair {
    match side {
        Side::First => validated(stabbed, other),
        Side::Second => validated(other, stabbed),
    }
}

/// Dispatches a descriptor.
pub fn apply_move(p: &EquivariantPair, m: &MoveDescriptor) -> Result<EquivariantPair, MoveError> {
    match m {
        MoveDescriptor::EqConjugate { e } => eq_conjugate(p, e),
        MoveDescriptor::StabS { side, sign } => stab_s(p, *side, *sign),
        MoveDescriptor::StabE { side, sign } => stab_e(p, *side, *sign),
        MoveDescriptor::DoubleStab { epsilon, eta } => double_stab(p, *epsilon, *eta),
        MoveDescriptor::Swap => Ok(swap(p)),
    }
}
