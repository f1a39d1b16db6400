//! Link invariants used as verification oracles.
//!
//! * Kauffman bracket by naive enumeration of all `2^c` smoothings, with
//!   loop counting via union-find on arc identifications; Jones is the
//!   writhe-normalized bracket under `t = A⁻⁴`, normalized so the unknot
//!   maps to `1` and the positive trefoil to positive powers of `t`.
//! * Alexander via the reduced Burau representation: the characteristic
//!   determinant divided exactly by `1 + t + ⋯ + t^{n−1}`, then pinned to a
//!   canonical unit multiple.
//!
//! All arithmetic is exact; polynomials live on the shared half-integer
//! exponent grid (`exp2` = twice the exponent). Bracket polynomials use the
//! variable `A`, everything else `t`.

use crate::braid::BraidWord;
use crate::diagram::LinkDiagram;
use crate::laurent::LaurentPoly;
use crate::pair::EquivariantPair;
use crate::util::UnionFind;
use num_traits::Signed;
use thiserror::Error;

/// Default cap on the `2^c` state sum.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("diagram has {crossings} crossings, over the state-sum bound {bound}")]
    TooManyCrossings { crossings: usize, bound: usize },
    /// The Burau determinant was not a multiple of `1 + t + ⋯ + t^{n−1}`.
    /// Mathematically impossible; signals an implementation bug.
    #[error("Alexander determinant not divisible by the strand cyclotomic factor")]
    NonExactDivision,
}

/// Sum of crossing signs.
pub fn writhe(d: &LinkDiagram) -> i64 {
    d.writhe()
}

/// Kauffman bracket in the variable `A`, default bound.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly, InvariantError> {
    kauffman_bracket_with_bound(d, DEFAULT_MAX_CROSSINGS)
}

/// Kauffman bracket with an explicit crossing bound.
///
/// Each of the `2^c` states contributes `A^(a−b) · δ^(loops−1)` where `a`
/// and `b` count the two smoothing kinds and `δ = −A² − A⁻²`. For a tuple
/// `(x0,x1,x2,x3)` (counterclockwise from the incoming under-strand) the
/// A-smoothing joins `x0~x1` and `x2~x3`, the B-smoothing `x0~x3` and
/// `x1~x2`.
pub fn kauffman_bracket_with_bound(
    d: &LinkDiagram,
    bound: usize,
) -> Result<LaurentPoly, InvariantError> {
    let c = d.crossings().len();
    if c > bound {
        return Err(InvariantError::TooManyCrossings {
            crossings: c,
            bound,
        });
    }
    let arcs = d.arc_count();
    let delta = LaurentPoly::term(-1, 4).add(&LaurentPoly::term(-1, -4));
    // δ powers are shared across states; precompute up to the maximum
    // possible loop count.
    let max_loops = arcs + d.free_loops() + 1;
    let mut delta_pow = Vec::with_capacity(max_loops + 1);
    delta_pow.push(LaurentPoly::one());
    for k in 1..=max_loops {
        delta_pow.push(delta_pow[k - 1].mul(&delta));
    }

    let mut total = LaurentPoly::zero();
    for state in 0u64..(1u64 << c) {
        let mut uf = UnionFind::new(arcs + 1);
        let mut b_count: i64 = 0;
        for (j, cr) in d.crossings().iter().enumerate() {
            let [x0, x1, x2, x3] = cr.arcs;
            if state >> j & 1 == 0 {
                uf.union(x0, x1);
                uf.union(x2, x3);
            } else {
                b_count += 1;
                uf.union(x0, x3);
                uf.union(x1, x2);
            }
        }
        let mut loops = d.free_loops();
        for a in 1..=arcs {
            if uf.find(a) == a {
                loops += 1;
            }
        }
        if loops == 0 {
            // Empty diagram: single state, conventional bracket 1.
            return Ok(LaurentPoly::one());
        }
        let a_count = c as i64 - b_count;
        total = total.add(&delta_pow[loops - 1].mul_term(1, 2 * (a_count - b_count)));
    }
    Ok(total)
}

fn jones_from_bracket(d: &LinkDiagram, bracket: &LaurentPoly) -> LaurentPoly {
    let w = d.writhe();
    // V = (−A)^{−3w}·⟨D⟩ = (−1)^w · A^{−3w} · ⟨D⟩.
    let sign = if w.rem_euclid(2) == 1 { -1 } else { 1 };
    let normalized = bracket.mul_term(sign, -6 * w);
    // Substitute t = A⁻⁴: every surviving A-exponent is even, so the result
    // lands on the half-integer grid in t.
    let mut out = LaurentPoly::zero();
    for (exp2_a, coeff) in normalized.iter() {
        assert!(exp2_a % 4 == 0, "odd A-exponent in normalized bracket");
        out = out.add(&LaurentPoly::term(coeff.clone(), -exp2_a / 4));
    }
    out
}

/// Jones polynomial of a diagram, variable `t`, `V(unknot) = 1`.
pub fn jones(d: &LinkDiagram) -> Result<LaurentPoly, InvariantError> {
    Ok(jones_from_bracket(d, &kauffman_bracket(d)?))
}

/// Jones with an explicit crossing bound.
pub fn jones_with_bound(d: &LinkDiagram, bound: usize) -> Result<LaurentPoly, InvariantError> {
    Ok(jones_from_bracket(
        d,
        &kauffman_bracket_with_bound(d, bound)?,
    ))
}

/// Jones polynomial of the closure of a word.
pub fn jones_of_word(w: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    jones(&LinkDiagram::closure_of_word(w))
}

/// Square matrix over Laurent polynomials; the value of the reduced Burau
/// representation (size `strands − 1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BurauMatrix {
    size: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn identity(size: usize) -> BurauMatrix {
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i == j {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        BurauMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.size, other.size);
        let entries = (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| {
                        let mut acc = LaurentPoly::zero();
                        for k in 0..self.size {
                            acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        BurauMatrix {
            size: self.size,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self == &BurauMatrix::identity(self.size)
    }

    fn sub(&self, other: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.size, other.size);
        let entries = (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| self.entries[i][j].sub(&other.entries[i][j]))
                    .collect()
            })
            .collect();
        BurauMatrix {
            size: self.size,
            entries,
        }
    }

    /// Determinant by expansion along rows, memoized over column subsets.
    fn determinant(&self) -> LaurentPoly {
        let m = self.size;
        if m == 0 {
            return LaurentPoly::one();
        }
        let full: u32 = (1u32 << m) - 1;
        let mut memo: Vec<Option<LaurentPoly>> = vec![None; 1usize << m];
        memo[0] = Some(LaurentPoly::one());
        fn go(mat: &BurauMatrix, mask: u32, memo: &mut Vec<Option<LaurentPoly>>) -> LaurentPoly {
            if let Some(v) = &memo[mask as usize] {
                return v.clone();
            }
            let row = mat.size - mask.count_ones() as usize;
            let mut acc = LaurentPoly::zero();
            let mut idx = 0;
            for col in 0..mat.size {
                if mask >> col & 1 == 0 {
                    continue;
                }
                let e = &mat.entries[row][col];
                if !e.is_zero() {
                    let minor = go(mat, mask & !(1 << col), memo);
                    let term = e.mul(&minor);
                    acc = if idx % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                idx += 1;
            }
            memo[mask as usize] = Some(acc.clone());
            acc
        }
        go(self, full, &mut memo)
    }
}

/// Reduced Burau matrix of one generator. Blocks (1-indexed generator `i`,
/// 0-indexed rows/cols, `m = n − 1` the matrix size):
/// `σ_1 = [[−t,0],[1,1]]` at (0,1); interior `σ_i = [[1,t,0],[0,−t,0],[0,1,1]]`
/// at (i−2,i−1,i); `σ_{n−1} = [[1,t],[0,−t]]` at (m−2,m−1); for n = 2 the
/// 1×1 matrix `(−t)`. Inverses are the hand-inverted blocks.
fn burau_generator(n: usize, index: usize, positive: bool) -> BurauMatrix {
    let m = n - 1;
    let mut g = BurauMatrix::identity(m);
    let t = |c: i64, e: i64| LaurentPoly::term(c, 2 * e);
    let set = |g: &mut BurauMatrix, r: usize, c: usize, v: LaurentPoly| {
        g.entries[r][c] = v;
    };
    if m == 1 {
        set(&mut g, 0, 0, if positive { t(-1, 1) } else { t(-1, -1) });
        return g;
    }
    let i = index;
    if positive {
        if i == 1 {
            set(&mut g, 0, 0, t(-1, 1));
            set(&mut g, 1, 0, t(1, 0));
        } else if i == n - 1 {
            set(&mut g, m - 2, m - 1, t(1, 1));
            set(&mut g, m - 1, m - 1, t(-1, 1));
        } else {
            set(&mut g, i - 2, i - 1, t(1, 1));
            set(&mut g, i - 1, i - 1, t(-1, 1));
            set(&mut g, i, i - 1, t(1, 0));
        }
    } else if i == 1 {
        set(&mut g, 0, 0, t(-1, -1));
        set(&mut g, 1, 0, t(1, -1));
    } else if i == n - 1 {
        set(&mut g, m - 2, m - 1, t(1, 0));
        set(&mut g, m - 1, m - 1, t(-1, -1));
    } else {
        set(&mut g, i - 2, i - 1, t(1, 0));
        set(&mut g, i - 1, i - 1, t(-1, -1));
        set(&mut g, i, i - 1, t(1, -1));
    }
    g
}

/// Reduced Burau representation of a word: the product of generator
/// matrices in word order.
pub fn burau_reduced(w: &BraidWord) -> BurauMatrix {
    let n = w.strands();
    let mut acc = BurauMatrix::identity(n.saturating_sub(1));
    for l in w.letters() {
        acc = acc.mul(&burau_generator(n, l.index(), l.is_positive()));
    }
    acc
}

/// `1 + t + ⋯ + t^{n−1}`.
fn strand_cyclotomic(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p = p.add(&LaurentPoly::term(1, 2 * k as i64));
    }
    p
}

/// Canonical unit multiple of the raw Alexander value.
///
/// One component: shift exponents symmetric about 0 and make the value at
/// `t = 1` positive (it is ±1 for a knot). Several components: the value at
/// 1 can vanish and the `t ↔ t⁻¹` twin can differ by a sign, so pin the
/// unit by lowest exponent 0 and positive lowest coefficient instead.
fn normalize_alexander(raw: LaurentPoly, components: usize) -> LaurentPoly {
    if raw.is_zero() {
        return raw;
    }
    let lo = raw.min_exp2().expect("nonzero");
    let hi = raw.max_exp2().expect("nonzero");
    if components == 1 {
        let centered = raw.mul_term(1, -(lo + hi) / 2);
        if centered.eval_at_one().is_negative() {
            centered.neg()
        } else {
            centered
        }
    } else {
        let shifted = raw.mul_term(1, -lo);
        if shifted.coeff(0).is_negative() {
            shifted.neg()
        } else {
            shifted
        }
    }
}

/// Alexander polynomial of the closure of a word.
pub fn alexander_of_word(w: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    let n = w.strands();
    let m = burau_reduced(w);
    let det = m.sub(&BurauMatrix::identity(n - 1)).determinant();
    let raw = det
        .div_exact(&strand_cyclotomic(n))
        .ok_or(InvariantError::NonExactDivision)?;
    let components = w.permutation().cycle_count();
    Ok(normalize_alexander(raw, components))
}

/// Alexander polynomial of the closure of a pair.
pub fn alexander(p: &EquivariantPair) -> Result<LaurentPoly, InvariantError> {
    alexander_of_word(&p.closure_word())
}
