//! Independent reference implementations used only for cross-validation:
//! a Kauffman-bracket state sum for the Jones polynomial and a reduced-Burau
//! determinant for the Alexander polynomial, plus the frozen-corpus file
//! format. Neither oracle shares any diagram or trace code with the main
//! engine; only the polynomial ring is reused.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// State-sum budget: `2^24` smoothings is the most we are willing to walk.
pub const CROSSING_CAP: usize = 24;

/// Union-find over arc endpoints; counts the loops closed by each gluing.
struct ArcGlue {
    parent: Vec<usize>,
    loops: usize,
}

impl ArcGlue {
    fn new() -> Self {
        Self {
            parent: vec![],
            loops: 0,
        }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Glues two arc ends; a gluing within one arc closes a loop.
    fn glue(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.loops += 1;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// Kauffman-bracket state sum over the closure of a braid word.
///
/// Each crossing is smoothed two ways: the pass-through smoothing carries
/// weight `A` for a positive generator (`A^-1` for a negative one) and the
/// cup-cap smoothing the reciprocal weight. A closed state evaluates to
/// `(-A^2 - A^-2)^{loops - 1}`, the sum is normalized by `(-A)^{-3 w}`, and
/// the result is reported in `q = A^-2`, so `q^2 = t` under `t = A^-4`.
pub fn kauffman_jones(w: &BraidWord) -> Result<QPoly> {
    let crossings = w.len();
    if crossings > CROSSING_CAP {
        return Err(Error::TooManyCrossings {
            crossings,
            cap: CROSSING_CAP,
        });
    }
    let n = w.n();
    let delta = QPoly::from_int_terms(&[(2, -1), (-2, -1)]); // -A^2 - A^-2 in A
    let mut bracket = QPoly::zero();
    for state in 0u64..(1u64 << crossings) {
        let mut glue = ArcGlue::new();
        let bottom: Vec<usize> = (0..n).map(|_| glue.fresh()).collect();
        let mut cur = bottom.clone();
        let mut a_exp = 0i64;
        for (ci, &letter) in w.letters().iter().enumerate() {
            let i = letter.unsigned_abs() as usize - 1;
            let cupcap = state >> ci & 1 == 1;
            let sign = letter.signum() as i64;
            // pass-through smoothing of a positive crossing weighs A
            a_exp += if cupcap { -sign } else { sign };
            if cupcap {
                glue.glue(cur[i], cur[i + 1]);
                let arc = glue.fresh();
                cur[i] = arc;
                cur[i + 1] = arc;
            }
        }
        for j in 0..n {
            glue.glue(cur[j], bottom[j]);
        }
        debug_assert!(glue.loops >= 1);
        let term = QPoly::int_monomial(1, a_exp).mul_ref(&delta.pow(glue.loops as u32 - 1));
        bracket = bracket.add_ref(&term);
    }
    // multiply by (-A)^{-3w} = (-1)^w A^{-3w}
    let writhe = w.writhe();
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe).scale(&BigRational::from_integer(BigInt::from(sign)));
    // convert A to q = A^-2; all surviving exponents are even
    let mut out = QPoly::zero();
    for (e, c) in normalized.terms() {
        assert!(e % 2 == 0, "normalized bracket has odd A-exponent {e}");
        out = out.add_ref(&QPoly::monomial(c.clone(), -(e / 2)));
    }
    Ok(out)
}

fn t_poly(terms: &[(i64, i64)]) -> QPoly {
    QPoly::from_int_terms(terms)
}

/// Reduced Burau matrix of a single generator on the quotient of the
/// standard `n`-dimensional representation by its fixed vector; entries are
/// Laurent polynomials in `t` (stored in the one-variable ring).
fn burau_generator(n: usize, letter: i32) -> Vec<Vec<QPoly>> {
    let dim = n - 1;
    let mut m: Vec<Vec<QPoly>> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { QPoly::one() } else { QPoly::zero() })
                .collect()
        })
        .collect();
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let positive = letter > 0;
    // columns hold images of basis vectors f_1..f_{n-1}
    if positive {
        if i < n - 1 {
            // f_i -> (1-t) f_i + f_{i+1},  f_{i+1} -> t f_i
            m[i - 1][i - 1] = t_poly(&[(0, 1), (1, -1)]);
            m[i][i - 1] = QPoly::one();
            m[i - 1][i] = t_poly(&[(1, 1)]);
            m[i][i] = QPoly::zero();
        } else {
            // f_{n-1} -> -f_1 - ... - f_{n-2} - t f_{n-1}
            for r in 0..dim - 1 {
                m[r][dim - 1] = t_poly(&[(0, -1)]);
            }
            m[dim - 1][dim - 1] = t_poly(&[(1, -1)]);
        }
    } else if i < n - 1 {
        // f_i -> t^-1 f_{i+1},  f_{i+1} -> f_i + (1 - t^-1) f_{i+1}
        m[i - 1][i - 1] = QPoly::zero();
        m[i][i - 1] = t_poly(&[(-1, 1)]);
        m[i - 1][i] = QPoly::one();
        m[i][i] = t_poly(&[(0, 1), (-1, -1)]);
    } else {
        // f_{n-1} -> -t^-1 (f_1 + ... + f_{n-1})
        for r in 0..dim {
            m[r][dim - 1] = t_poly(&[(-1, -1)]);
        }
    }
    m
}

fn mat_mul(a: &[Vec<QPoly>], b: &[Vec<QPoly>]) -> Vec<Vec<QPoly>> {
    let dim = a.len();
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    let mut acc = QPoly::zero();
                    for l in 0..dim {
                        if a[r][l].is_zero() {
                            continue;
                        }
                        acc = acc.add_ref(&a[r][l].mul_ref(&b[l][c]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion (dimensions stay below five here).
fn det(m: &[Vec<QPoly>]) -> QPoly {
    let dim = m.len();
    if dim == 0 {
        return QPoly::one();
    }
    if dim == 1 {
        return m[0][0].clone();
    }
    let mut acc = QPoly::zero();
    for col in 0..dim {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> = (1..dim)
            .map(|r| {
                (0..dim)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let cof = m[0][col].mul_ref(&det(&minor));
        acc = if col % 2 == 0 {
            acc.add_ref(&cof)
        } else {
            acc.sub_ref(&cof)
        };
    }
    acc
}

/// Alexander polynomial of the closure through the reduced Burau
/// representation: `det(B(w) - I) * (1 - t) / (1 - t^n)`, defined up to units,
/// reported in `q` with `t = q^2`.
pub fn burau_alexander(w: &BraidWord) -> QPoly {
    let n = w.n();
    if n == 1 {
        return QPoly::one();
    }
    let dim = n - 1;
    let mut b: Vec<Vec<QPoly>> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if r == c { QPoly::one() } else { QPoly::zero() })
                .collect()
        })
        .collect();
    for &letter in w.letters() {
        b = mat_mul(&b, &burau_generator(n, letter));
    }
    for (r, row) in b.iter_mut().enumerate() {
        row[r] = row[r].sub_ref(&QPoly::one());
    }
    let d = det(&b);
    if d.is_zero() {
        return QPoly::zero();
    }
    let numer = d.mul_ref(&t_poly(&[(0, 1), (1, -1)]));
    let mut denom = QPoly::zero();
    denom = denom.add_ref(&QPoly::one());
    denom = denom.sub_ref(&t_poly(&[(n as i64, 1)]));
    let delta_t = numer
        .exact_div(&denom)
        .expect("1 - t^n divides det(B - I)(1 - t) for braid closures");
    delta_t.inflate(2)
}

/// `true` iff `p = ±q^k r`, optionally also allowing `r` with `q -> q^-1`.
pub fn equal_up_to_units(p: &QPoly, r: &QPoly, allow_inversion: bool) -> bool {
    p.eq_up_to_units(r) || (allow_inversion && p.eq_up_to_units(&r.invert_var()))
}

/// One frozen corpus record: a named braid word with the oracle values of
/// both invariants, rendered in the canonical display forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub n: usize,
    pub word: Vec<i32>,
    pub jones_q: String,
    pub alexander_q: String,
}

impl CorpusEntry {
    pub fn braid(&self) -> Result<BraidWord> {
        BraidWord::new(self.n, self.word.clone())
    }
}

/// Computes a corpus record from the oracles: the Kauffman value verbatim and
/// the Burau value in its canonical unit form.
pub fn compute_entry(name: &str, w: &BraidWord) -> Result<CorpusEntry> {
    let jones = kauffman_jones(w)?;
    let alexander = burau_alexander(w).canonical_unit_form();
    Ok(CorpusEntry {
        name: name.to_string(),
        n: w.n(),
        word: w.letters().to_vec(),
        jones_q: jones.to_string(),
        alexander_q: alexander.to_string(),
    })
}

/// The standard corpus words, small closures with table-checked invariants.
pub fn standard_corpus_words() -> Vec<(&'static str, BraidWord)> {
    let w = |n: usize, letters: &[i32]| BraidWord::new(n, letters.to_vec()).unwrap();
    vec![
        ("unknot", BraidWord::empty(1)),
        ("unlink2", BraidWord::empty(2)),
        ("unlink3", BraidWord::empty(3)),
        ("hopf_pos", w(2, &[1, 1])),
        ("hopf_neg", w(2, &[-1, -1])),
        ("trefoil_right", w(2, &[1, 1, 1])),
        ("trefoil_left", w(2, &[-1, -1, -1])),
        ("figure_eight", w(3, &[1, -2, 1, -2])),
        ("cinquefoil", w(2, &[1, 1, 1, 1, 1])),
        ("borromean", w(3, &[1, -2, 1, -2, 1, -2])),
    ]
}

/// Recomputes the standard corpus from the oracles.
pub fn regenerate_corpus() -> Result<Vec<CorpusEntry>> {
    standard_corpus_words()
        .iter()
        .map(|(name, w)| compute_entry(name, w))
        .collect()
}

pub fn write_corpus(path: &Path, entries: &[CorpusEntry]) -> Result<()> {
    let mut out = String::new();
    for e in entries {
        let line = serde_json::to_string(e).map_err(|e| Error::Corpus(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::Corpus(e.to_string()))?;
    }
    std::fs::write(path, out).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))
}

pub fn read_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    let mut entries = Vec::new();
    let mut names = BTreeSet::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let e: CorpusEntry = serde_json::from_str(line)
            .map_err(|err| Error::Corpus(format!("line {}: {err}", i + 1)))?;
        if !names.insert(e.name.clone()) {
            return Err(Error::Corpus(format!("duplicate entry {:?}", e.name)));
        }
        entries.push(e);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn kauffman_unknot_and_unlinks() {
        assert!(kauffman_jones(&BraidWord::empty(1)).unwrap().is_one());
        // k-component unlink: (-q - q^-1)^{k-1}
        let unlink2 = kauffman_jones(&BraidWord::empty(2)).unwrap();
        assert_eq!(unlink2, QPoly::from_int_terms(&[(-1, -1), (1, -1)]));
        let unlink3 = kauffman_jones(&BraidWord::empty(3)).unwrap();
        assert_eq!(unlink3, QPoly::from_int_terms(&[(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn kauffman_trefoil_matches_table() {
        // closure of three positive crossings: V = t + t^3 - t^4
        let p = kauffman_jones(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(p, QPoly::from_int_terms(&[(2, 1), (6, 1), (8, -1)]));
        // the mirror swaps q and q^-1
        let m = kauffman_jones(&w(2, &[-1, -1, -1])).unwrap();
        assert_eq!(m, p.invert_var());
    }

    #[test]
    fn kauffman_hopf_links() {
        // positive Hopf link: V = -t^{1/2} - t^{5/2}
        let p = kauffman_jones(&w(2, &[1, 1])).unwrap();
        assert_eq!(p, QPoly::from_int_terms(&[(1, -1), (5, -1)]));
        let m = kauffman_jones(&w(2, &[-1, -1])).unwrap();
        assert_eq!(m, p.invert_var());
    }

    #[test]
    fn kauffman_figure_eight_is_amphichiral() {
        let p = kauffman_jones(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(
            p,
            QPoly::from_int_terms(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
        );
        assert_eq!(p, p.invert_var());
    }

    #[test]
    fn kauffman_is_a_closure_invariant() {
        // conjugation and stabilization do not change the state sum's value
        let mut rng = ChaCha8Rng::seed_from_u64(0xD4);
        for _ in 0..10 {
            let n = rng.gen_range(2..=3);
            let len = rng.gen_range(0..=5);
            let base = crate::sample::random_word(&mut rng, n, len);
            let v = kauffman_jones(&base).unwrap();
            let g = rng.gen_range(1..n) as i32;
            let mut conj = vec![g];
            conj.extend_from_slice(base.letters());
            conj.push(-g);
            assert_eq!(kauffman_jones(&w(n, &conj)).unwrap(), v);
            let stab = base.widen(n + 1).unwrap().push(n as i32).unwrap();
            assert_eq!(kauffman_jones(&stab).unwrap(), v);
            let stab_neg = base.widen(n + 1).unwrap().push(-(n as i32)).unwrap();
            assert_eq!(kauffman_jones(&stab_neg).unwrap(), v);
        }
    }

    #[test]
    fn crossing_cap_enforced() {
        let long = w(2, &[1; 25]);
        assert!(matches!(
            kauffman_jones(&long),
            Err(Error::TooManyCrossings { .. })
        ));
    }

    #[test]
    fn burau_small_knots() {
        // unknot presented in B_2
        let u = burau_alexander(&w(2, &[1]));
        assert!(equal_up_to_units(&u, &QPoly::one(), false));
        // trefoil: t - 1 + t^-1, i.e. q^2 - 1 + q^-2
        let t = burau_alexander(&w(2, &[1, 1, 1]));
        let expect = QPoly::from_int_terms(&[(-2, 1), (0, -1), (2, 1)]);
        assert!(equal_up_to_units(&t, &expect, false));
        // figure-eight: t - 3 + t^-1
        let f = burau_alexander(&w(3, &[1, -2, 1, -2]));
        let expect = QPoly::from_int_terms(&[(-2, 1), (0, -3), (2, 1)]);
        assert!(equal_up_to_units(&f, &expect, false));
    }

    #[test]
    fn burau_links() {
        // Hopf link: t - 1 up to units
        let h = burau_alexander(&w(2, &[1, 1]));
        assert!(equal_up_to_units(
            &h,
            &QPoly::from_int_terms(&[(0, -1), (2, 1)]),
            false
        ));
        // split links vanish
        assert!(burau_alexander(&BraidWord::empty(2)).is_zero());
        assert!(burau_alexander(&BraidWord::empty(3)).is_zero());
    }

    #[test]
    fn burau_mirror_inverts_variable() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xE5);
        for _ in 0..10 {
            let n = rng.gen_range(2..=4);
            let len = rng.gen_range(1..=7);
            let word = crate::sample::random_word(&mut rng, n, len);
            let a = burau_alexander(&word);
            let b = burau_alexander(&word.mirror());
            assert!(equal_up_to_units(&a, &b.invert_var(), false), "word {word}");
        }
    }

    #[test]
    fn unit_equality_flags() {
        let p = QPoly::from_int_terms(&[(-2, 1), (0, -1), (2, 1)]);
        assert!(equal_up_to_units(&p, &p.invert_var(), false)); // palindrome
        assert!(equal_up_to_units(&p.shift(1), &p, false));
        let asym = QPoly::from_int_terms(&[(0, 1), (1, 1), (2, -1)]);
        assert!(!equal_up_to_units(&asym, &asym.invert_var(), false));
        assert!(equal_up_to_units(&asym, &asym.invert_var(), true));
        assert!(!equal_up_to_units(
            &QPoly::from_int_terms(&[(0, 1), (1, 1)]),
            &QPoly::from_int_terms(&[(0, 1), (2, 1)]),
            true
        ));
    }

    #[test]
    fn corpus_roundtrip() {
        let entries = regenerate_corpus().unwrap();
        assert_eq!(entries.len(), standard_corpus_words().len());
        let dir = std::env::temp_dir().join("planar-rook-test-corpus.jsonl");
        write_corpus(&dir, &entries).unwrap();
        let back = read_corpus(&dir).unwrap();
        assert_eq!(entries, back);
        std::fs::remove_file(&dir).ok();
    }
}
