//! Seeded random generators for words, algebra elements, and Markov-move
//! rewrites, shared by the verification suites and the test harness.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::BraidWord;
use crate::diagram::enumerate_planar;
use crate::element::AlgebraElement;
use crate::poly::LaurentPoly;

/// Uniform random word of the given length in `B_n` (requires `n >= 2`).
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    assert!(n >= 2, "random words need at least one generator");
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i32;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters generated in range")
}

/// Random element of `CP_n` supported on a few diagrams, with monomial
/// coefficients in `U, V` only (so `M` stays a free parameter for callers
/// that use it as one).
pub fn random_element<R: Rng>(rng: &mut R, n: usize, max_terms: usize) -> AlgebraElement {
    let all = enumerate_planar(n).expect("n within enumeration cap");
    let mut x = AlgebraElement::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let d = all.choose(rng).unwrap().clone();
        let c = LaurentPoly::int_monomial(
            rng.gen_range(-3..=3),
            (rng.gen_range(-2..=2), rng.gen_range(-2..=2), 0),
        );
        let term = AlgebraElement::from_terms(n, [(d, c)]).expect("matching strand count");
        x = x.add(&term).expect("same n");
    }
    x
}

/// Applies one random Markov move: conjugation by a generator, or positive or
/// negative stabilization (capped at `max_n` strands).
pub fn markov_move<R: Rng>(rng: &mut R, w: &BraidWord, max_n: usize) -> BraidWord {
    let n = w.n();
    let can_conjugate = n >= 2;
    let can_stabilize = n < max_n;
    let stabilize = match (can_conjugate, can_stabilize) {
        (true, true) => rng.gen_bool(0.4),
        (false, true) => true,
        (true, false) => false,
        (false, false) => return w.clone(),
    };
    if stabilize {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let wide = w.widen(n + 1).expect("widening to n+1");
        wide.push(sign * n as i32).expect("new generator in range")
    } else {
        let g = rng.gen_range(1..n) as i32;
        let g = if rng.gen_bool(0.5) { g } else { -g };
        let mut letters = vec![g];
        letters.extend_from_slice(w.letters());
        letters.push(-g);
        BraidWord::new(n, letters).expect("letters in range")
    }
}

/// A chain of `moves` random Markov moves applied to `w`.
pub fn markov_rewrites<R: Rng>(
    rng: &mut R,
    w: &BraidWord,
    moves: usize,
    max_n: usize,
) -> BraidWord {
    let mut cur = w.clone();
    for _ in 0..moves {
        cur = markov_move(rng, &cur, max_n);
    }
    cur
}
