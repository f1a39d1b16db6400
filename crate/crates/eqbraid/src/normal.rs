//! Garside left normal form and the word problem.
//!
//! Every braid is written uniquely as `Δ^inf · p_1 ⋯ p_m` where `Δ` is the
//! half twist, each `p_k` is a permutation braid other than the identity and
//! `Δ`, and each adjacent pair is left-weighted. Two words represent the
//! same group element iff their normal forms are identical, which makes
//! [`NormalForm`] the equality and hash key for braids throughout the crate.
//!
//! Conventions: words act left to right, so the permutation of `u·v` is
//! "`u` then `v`". A permutation braid is identified with its permutation;
//! its crossed strand pairs are exactly the inversions of that permutation.

use crate::braid::{BraidWord, Letter, Permutation, WordError};

/// A permutation braid: a positive braid in which every pair of strands
/// crosses at most once, identified with its underlying permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimpleFactor(Permutation);

impl SimpleFactor {
    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    /// Canonical positive word: repeatedly peel the smallest descent. The
    /// result has exactly `inversion_count` letters.
    pub fn to_word(&self) -> BraidWord {
        let strands = self.0.degree();
        let mut images = self.0.images().to_vec();
        let mut letters = Vec::with_capacity(self.0.inversion_count());
        // Smallest i with images[i] > images[i+1]; peeling it on the left
        // removes exactly one inversion.
        while let Some(i) = (0..images.len().saturating_sub(1)).find(|&i| images[i] > images[i + 1])
        {
            letters.push(Letter::new(i + 1, true));
            images.swap(i, i + 1);
        }
        BraidWord::new(strands, letters).expect("indices bounded by degree")
    }
}

/// Garside left normal form `Δ^inf · factors`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NormalForm {
    strands: usize,
    inf: i64,
    factors: Vec<SimpleFactor>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the leading half-twist power.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// A word representing the same group element: `|inf|` copies of the
    /// half twist (inverted for negative `inf`) followed by the factors.
    pub fn to_word(&self) -> BraidWord {
        let delta = half_twist_word(self.strands);
        let mut w = BraidWord::identity(self.strands);
        for _ in 0..self.inf.unsigned_abs() {
            let block = if self.inf >= 0 {
                delta.clone()
            } else {
                delta.inverse()
            };
            w = w.concat(&block).expect("equal strands");
        }
        for f in &self.factors {
            w = w.concat(&f.to_word()).expect("equal strands");
        }
        w
    }
}

/// The half twist `Δ = (σ1)(σ2σ1)⋯(σ_{n-1}⋯σ1)` as a word.
pub(crate) fn half_twist_word(strands: usize) -> BraidWord {
    let mut letters = Vec::new();
    for top in 1..strands {
        for i in (1..=top).rev() {
            letters.push(Letter::new(i, true));
        }
    }
    BraidWord::new(strands, letters).expect("indices bounded")
}

fn delta_perm(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("reversal is a bijection")
}

fn transposition(n: usize, index: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(index - 1, index);
    Permutation::from_images(images).expect("swap of identity")
}

/// Conjugation by the half twist: `p ↦ Δ⁻¹ p Δ`, an involution on
/// permutation braids (`σ_i ↦ σ_{n−i}`).
fn phi(p: &Permutation, delta: &Permutation) -> Permutation {
    delta.compose(p).compose(delta)
}

/// Right complement `∂a`: the permutation braid with `a · ∂a = Δ`.
fn right_complement(a: &Permutation, delta: &Permutation) -> Permutation {
    a.inverse().compose(delta)
}

/// Meet of two permutation braids under left divisibility.
///
/// `t ≼ p` iff every strand pair crossed by `t` is crossed by `p`, i.e. the
/// inversion set of `t` is contained in that of `p`. Common left divisors
/// are closed under join, so a unique maximum exists; the greedy loop below
/// reaches it because any strict lower bound admits a one-crossing
/// extension that stays below both arguments.
fn meet(u: &Permutation, v: &Permutation) -> Permutation {
    let n = u.degree();
    let mut images: Vec<usize> = (0..n).collect();
    let mut ends: Vec<usize> = (0..n).collect(); // strand ending at each position
    loop {
        let mut changed = false;
        for pos in 0..n.saturating_sub(1) {
            let (a, b) = (ends[pos], ends[pos + 1]);
            // a < b: the strands have not crossed yet; crossing them now
            // adds the single inversion (a, b), which must lie in both
            // inversion sets.
            if a < b && u.image(a) > u.image(b) && v.image(a) > v.image(b) {
                images[a] = pos + 1;
                images[b] = pos;
                ends.swap(pos, pos + 1);
                changed = true;
            }
        }
        if !changed {
            return Permutation::from_images(images).expect("crossing sequence is a bijection");
        }
    }
}

/// Left-weighted sweep: for each adjacent pair `(a, b)`, move the largest
/// left divisor `t = ∂a ∧ b` of `b` into `a`. Identity factors are dropped
/// and leading half twists absorbed into `inf` between sweeps.
fn normalize(strands: usize, mut inf: i64, mut factors: Vec<Permutation>) -> NormalForm {
    let delta = delta_perm(strands);
    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let t = meet(&right_complement(&factors[j], &delta), &factors[j + 1]);
            if !t.is_identity() {
                factors[j + 1] = t.inverse().compose(&factors[j + 1]);
                factors[j] = factors[j].compose(&t);
                changed = true;
            }
        }
        let before = factors.len();
        factors.retain(|p| !p.is_identity());
        // A leading Δ sits next to the Δ^inf block already; merging it
        // needs no flip (sweeps conjugate factors as Δ bubbles left).
        while factors.first() == Some(&delta) {
            factors.remove(0);
            inf += 1;
        }
        if !changed && factors.len() == before {
            break;
        }
    }
    NormalForm {
        strands,
        inf,
        factors: factors.into_iter().map(SimpleFactor).collect(),
    }
}

/// Left normal form of a word; canonical for the group element.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    if n == 1 {
        return NormalForm {
            strands: 1,
            inf: 0,
            factors: Vec::new(),
        };
    }
    let delta = delta_perm(n);
    // σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹); collecting every Δ⁻¹ at the front twists each
    // factor by φ once per Δ⁻¹ that passes it, so scan right to left and
    // track the parity of Δ⁻¹s seen so far.
    let mut negs: u64 = 0;
    let mut factors_rev: Vec<Permutation> = Vec::with_capacity(w.len());
    for l in w.letters().iter().rev() {
        let s = transposition(n, l.index());
        let mut p = if l.is_positive() {
            s
        } else {
            delta.compose(&s) // Δσ_i⁻¹: the half twist minus a final crossing
        };
        if negs % 2 == 1 {
            p = phi(&p, &delta);
        }
        factors_rev.push(p);
        if !l.is_positive() {
            negs += 1;
        }
    }
    factors_rev.reverse();
    normalize(n, -(negs as i64), factors_rev)
}

/// Group-element equality via normal forms.
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, WordError> {
    if u.strands() != v.strands() {
        return Err(WordError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

/// True iff the word represents the identity braid.
pub fn is_identity(w: &BraidWord) -> bool {
    normal_form(w).is_trivial()
}

/// True iff the word equals its own reverse as a group element.
pub fn is_palindromic(w: &BraidWord) -> bool {
    words_equal(w, &w.reverse()).expect("same strand count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(strands: usize, ints: &[i32]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    #[test]
    fn identity_cases() {
        let nf = normal_form(&w(2, &[1, -1]));
        assert_eq!(nf.inf(), 0);
        assert!(nf.factors().is_empty());
        assert!(is_identity(&w(3, &[2, 1, -1, -2])));
        assert!(is_identity(&BraidWord::identity(1)));
        assert!(!is_identity(&w(3, &[1])));
    }

    #[test]
    fn braid_relation() {
        assert_eq!(
            normal_form(&w(3, &[1, 2, 1])),
            normal_form(&w(3, &[2, 1, 2]))
        );
        assert!(words_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
    }

    #[test]
    fn far_commutation() {
        assert!(words_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
    }

    #[test]
    fn unequal_words() {
        // Cross-checked against the exhaustive rewriting oracle in the
        // acceptance suite.
        assert!(!words_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
        assert!(!words_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
    }

    #[test]
    fn strand_mismatch() {
        assert!(matches!(
            words_equal(&w(3, &[1]), &w(4, &[1])),
            Err(WordError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn half_twist_normal_form() {
        for n in 2..=5 {
            let nf = normal_form(&half_twist_word(n));
            assert_eq!(nf.inf(), 1, "n = {n}");
            assert!(nf.factors().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn single_negative_letter() {
        // σ1⁻¹ in B_3 is Δ⁻¹·(σ1σ2): the factor permutation sends
        // 1↦3, 2↦1, 3↦2 (hand computation of k ↦ s1(δ(k))).
        let nf = normal_form(&w(3, &[-1]));
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.factors()[0].permutation().images(), &[2, 0, 1]);
        assert_eq!(nf.factors()[0].to_word(), w(3, &[1, 2]));
    }

    #[test]
    fn positive_powers_on_two_strands() {
        // In B_2 the only simple factors are 1 and Δ = σ1, so σ1^k = Δ^k.
        let nf = normal_form(&w(2, &[1, 1, 1]));
        assert_eq!(nf.inf(), 3);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&w(2, &[1, 1, 1])));
        // Letterwise reverse differs but σ1 and σ3 commute.
        assert!(is_palindromic(&w(4, &[3, -2, 1, -3, -2, 3])));
        assert!(!is_palindromic(&w(3, &[1, 1, 2])));
        assert!(is_palindromic(&BraidWord::identity(4)));
    }

    #[test]
    fn to_word_round_trip() {
        for (n, ints) in [
            (3, vec![1, -2, 1, 1, -2]),
            (4, vec![-1, -1, 3, 2, -3, 1]),
            (5, vec![4, 3, 2, 1, -2, -4, 2]),
            (2, vec![-1, -1, -1]),
        ] {
            let u = w(n, &ints);
            let back = normal_form(&u).to_word();
            assert!(words_equal(&u, &back).unwrap(), "n={n} {ints:?}");
        }
    }

    #[test]
    fn left_weighted_invariant_holds() {
        // Descent set of each factor must land in the finishing set of the
        // previous one; spot-check on a word with mixed signs.
        let nf = normal_form(&w(5, &[1, -3, 2, 4, -1, 2, 3, -4, 1]));
        for pair in nf.factors().windows(2) {
            let a = pair[0].permutation();
            let b = pair[1].permutation();
            let a_inv = a.inverse();
            for i in 0..4 {
                if b.image(i) > b.image(i + 1) {
                    assert!(a_inv.image(i) > a_inv.image(i + 1));
                }
            }
        }
    }

    fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        (2..=max_strands)
            .prop_flat_map(move |n| {
                (
                    Just(n),
                    prop::collection::vec((1..n as i32, prop::bool::ANY), 0..=max_len),
                )
            })
            .prop_map(|(n, raw)| {
                let ints: Vec<i32> = raw
                    .into_iter()
                    .map(|(i, pos)| if pos { i } else { -i })
                    .collect();
                BraidWord::from_ints(n, &ints).unwrap()
            })
    }

    proptest! {
        #[test]
        fn prop_w_winv_is_identity(u in arb_word(5, 12)) {
            let prod = u.concat(&u.inverse()).unwrap();
            prop_assert!(normal_form(&prod).is_trivial());
        }

        #[test]
        fn prop_insertion_invariance(u in arb_word(4, 8), pos_frac in 0.0f64..1.0, i in 1usize..4, sign in prop::bool::ANY) {
            prop_assume!(i < u.strands());
            let cut = ((u.len() as f64) * pos_frac) as usize;
            let mut ints: Vec<i32> = u.letters().iter().map(|l| l.as_int()).collect();
            let k = if sign { i as i32 } else { -(i as i32) };
            ints.splice(cut..cut, [k, -k]);
            let v = BraidWord::from_ints(u.strands(), &ints).unwrap();
            prop_assert_eq!(normal_form(&u), normal_form(&v));
        }

        #[test]
        fn prop_conjugation_preserves_palindromicity(e in arb_word(4, 6), u in arb_word(4, 8)) {
            prop_assume!(e.strands() == u.strands());
            let conj = e.concat(&u).unwrap().concat(&e.reverse()).unwrap();
            prop_assert_eq!(is_palindromic(&conj), is_palindromic(&u));
        }

        #[test]
        fn prop_normal_form_round_trip(u in arb_word(5, 10)) {
            let back = normal_form(&u).to_word();
            prop_assert!(words_equal(&u, &back).unwrap());
        }

        #[test]
        fn prop_factors_are_proper(u in arb_word(5, 10)) {
            let nf = normal_form(&u);
            let delta: Vec<usize> = (0..nf.strands()).rev().collect();
            for f in nf.factors() {
                prop_assert!(!f.permutation().is_identity());
                prop_assert_ne!(f.permutation().images(), &delta[..]);
            }
        }
    }
}
