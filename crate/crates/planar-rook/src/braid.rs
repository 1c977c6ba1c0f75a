//! Braid words and the combinatorics of their closures: writhe, underlying
//! permutation, components, self-writhes, linking numbers, and colored
//! crossing counts.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A word in the braid group `B_n`, stored as signed generator indices:
/// letter `k > 0` is the positive crossing between strands `k, k+1`, and
/// `k < 0` its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::IndexOutOfRange("strand count must be >= 1".into()));
        }
        for &k in &letters {
            let idx = k.unsigned_abs() as usize;
            if k == 0 || idx >= n {
                return Err(Error::GeneratorOutOfRange {
                    index: k as i64,
                    n,
                });
            }
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, letters: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of the word, the writhe of the closure diagram.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    /// Word with every crossing sign flipped (the mirror closure).
    pub fn mirror(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().map(|&k| -k).collect(),
        }
    }

    /// Concatenation within the same braid group.
    pub fn concat(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(Self {
            n: self.n,
            letters,
        })
    }

    /// Appends one letter.
    pub fn push(&self, letter: i32) -> Result<Self> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Self::new(self.n, letters)
    }

    /// The same word viewed in `B_m` for `m >= n` (extra trivial strands).
    pub fn widen(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::SizeMismatch(self.n, m));
        }
        Ok(Self {
            n: m,
            letters: self.letters.clone(),
        })
    }

    /// The underlying permutation: strand starting at bottom position `i`
    /// ends at top position `pi(i)`, i.e. the composite of the transpositions
    /// `(k, k+1)` taken in word order (leftmost letter outermost).
    ///
    /// Generator images multiply left-on-top, so the bottom of the stacked
    /// diagram is the last letter; strand tracking therefore runs through the
    /// word right to left.
    pub fn permutation(&self) -> Permutation {
        let mut strand_at_pos: Vec<usize> = (1..=self.n).collect();
        for &k in self.letters.iter().rev() {
            let i = k.unsigned_abs() as usize;
            strand_at_pos.swap(i - 1, i);
        }
        let mut images = vec![0usize; self.n];
        for (pos, &strand) in strand_at_pos.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Permutation { images }
    }

    /// Components, per-component self-crossing sums, and pairwise linking
    /// numbers of the closure. Crossings are attributed to the two strand
    /// identities occupying positions `i, i+1` just before each letter acts.
    pub fn link_data(&self) -> LinkData {
        let n = self.n;
        let mut strand_at_pos: Vec<usize> = (1..=n).collect();
        // signed crossing counts per unordered strand pair; strands are
        // tracked bottom-up, i.e. through the word right to left
        let mut cross = vec![vec![0i64; n + 1]; n + 1];
        for &k in self.letters.iter().rev() {
            let i = k.unsigned_abs() as usize;
            let (a, b) = (strand_at_pos[i - 1], strand_at_pos[i]);
            let s = k.signum() as i64;
            cross[a.min(b)][a.max(b)] += s;
            strand_at_pos.swap(i - 1, i);
        }
        let components = self.permutation().cycles();
        let mut comp_of = vec![0usize; n + 1];
        for (ci, comp) in components.iter().enumerate() {
            for &s in comp {
                comp_of[s] = ci;
            }
        }
        let m = components.len();
        let mut self_writhe = vec![0i64; m];
        let mut raw = vec![vec![0i64; m]; m];
        for a in 1..=n {
            for b in (a + 1)..=n {
                let s = cross[a][b];
                if s == 0 {
                    continue;
                }
                let (ca, cb) = (comp_of[a], comp_of[b]);
                if ca == cb {
                    self_writhe[ca] += s;
                } else {
                    raw[ca][cb] += s;
                    raw[cb][ca] += s;
                }
            }
        }
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let linking = raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&s| BigRational::from_integer(BigInt::from(s)) * &half)
                    .collect()
            })
            .collect();
        LinkData {
            components,
            self_writhe,
            linking,
        }
    }

    /// Colors the strand starting at vertex `s` green when `s` is in `set`,
    /// red otherwise, and returns `(r, r2, T)`: the signed count of red-red
    /// crossings, the signed count of red-green crossings, and the image of
    /// the set under the underlying permutation.
    pub fn colored_counts(&self, set: &BTreeSet<usize>) -> (i64, i64, BTreeSet<usize>) {
        let mut strand_at_pos: Vec<usize> = (1..=self.n).collect();
        let (mut r, mut r2) = (0i64, 0i64);
        for &k in self.letters.iter().rev() {
            let i = k.unsigned_abs() as usize;
            let (a, b) = (strand_at_pos[i - 1], strand_at_pos[i]);
            let s = k.signum() as i64;
            match (set.contains(&a), set.contains(&b)) {
                (false, false) => r += s,
                (true, true) => {}
                _ => r2 += s,
            }
            strand_at_pos.swap(i - 1, i);
        }
        (r, r2, self.permutation().apply_set(set))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.letters.iter().map(|k| k.to_string()).collect();
        write!(f, "n={}: {}", self.n, word.join(" "))
    }
}

/// Parses a whitespace-separated list of nonzero signed generator indices.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let k: i32 = tok
            .parse()
            .map_err(|_| Error::BadToken(tok.to_string()))?;
        if k == 0 {
            return Err(Error::BadToken(tok.to_string()));
        }
        letters.push(k);
    }
    BraidWord::new(n, letters)
}

/// A permutation of `{1..n}`; `images[i-1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn apply_set(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&i| self.apply(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Cycles sorted by minimum element, each cycle listed from its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }
}

/// Closure data of a braid word: the partition of strand start-vertices into
/// components, per-component signed self-crossing sums, and the symmetric
/// matrix of pairwise linking numbers (half the signed inter-component
/// crossing sums, integers for closures).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkData {
    pub components: Vec<Vec<usize>>,
    pub self_writhe: Vec<i64>,
    pub linking: Vec<Vec<BigRational>>,
}

impl LinkData {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Component index containing strand `s`.
    pub fn component_of(&self, s: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&s))
            .expect("strand in some component")
    }

    /// Linking numbers as integers; panics if any entry is non-integral,
    /// which cannot happen for data built from a braid closure.
    pub fn linking_int(&self) -> Vec<Vec<i64>> {
        self.linking
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| {
                        assert!(r.is_integer(), "linking number must be an integer");
                        let i: BigInt = r.to_integer();
                        i64::try_from(&i).expect("linking number fits i64")
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for LinkData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components: {:?}", self.components)?;
        writeln!(f, "self-writhe: {:?}", self.self_writhe)?;
        write!(f, "linking:")?;
        for row in &self.linking {
            let cells: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            write!(f, "\n  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_word("1 1 1", 2).unwrap(), w(2, &[1, 1, 1]));
        assert_eq!(parse_word("1 -2 1 -2", 3).unwrap(), w(3, &[1, -2, 1, -2]));
        assert!(matches!(
            parse_word("3", 3),
            Err(Error::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(parse_word("x", 2), Err(Error::BadToken(_))));
        assert!(matches!(parse_word("0", 2), Err(Error::BadToken(_))));
        assert_eq!(parse_word("", 1).unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(w(2, &[1, 1, 1]).writhe(), 3);
        assert_eq!(w(2, &[1, -1]).writhe(), 0);
        assert_eq!(w(3, &[1, -2, 1, -2]).writhe(), 0);
    }

    #[test]
    fn permutation_examples() {
        let p = w(2, &[1]).permutation();
        assert_eq!((p.apply(1), p.apply(2)), (2, 1));
        assert!(w(2, &[1, 1]).permutation().is_identity());
        let p = w(3, &[1, 2]).permutation();
        assert_eq!(p.cycles(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn permutation_cycle_structure() {
        // strand 1 goes over to position 2, then position swaps with 3
        let p = w(3, &[1, 2]).permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (2, 3, 1));
    }

    #[test]
    fn link_data_hopf() {
        let ld = w(2, &[1, 1]).link_data();
        assert_eq!(ld.components, vec![vec![1], vec![2]]);
        assert_eq!(ld.self_writhe, vec![0, 0]);
        assert_eq!(ld.linking_int()[0][1], 1);
        assert_eq!(ld.linking_int()[1][0], 1);
        assert_eq!(ld.linking_int()[0][0], 0);
    }

    #[test]
    fn link_data_trefoil_single_component() {
        let ld = w(2, &[1, 1, 1]).link_data();
        assert_eq!(ld.components.len(), 1);
        assert_eq!(ld.self_writhe, vec![3]);
    }

    #[test]
    fn link_data_trivial() {
        let ld = BraidWord::empty(3).link_data();
        assert_eq!(ld.components.len(), 3);
        assert!(ld.linking.iter().flatten().all(|r| r.is_zero()));
        assert_eq!(ld.self_writhe, vec![0, 0, 0]);
    }

    #[test]
    fn colored_counts_cases() {
        let word = w(2, &[1]);
        let s1: BTreeSet<usize> = [1].into();
        assert_eq!(word.colored_counts(&s1), (0, 1, [2].into()));
        let empty: BTreeSet<usize> = BTreeSet::new();
        assert_eq!(word.colored_counts(&empty), (1, 0, BTreeSet::new()));
        let inv = w(2, &[-1]);
        let both: BTreeSet<usize> = [1, 2].into();
        assert_eq!(inv.colored_counts(&both), (0, 0, [1, 2].into()));
    }

    fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
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
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn crossing_partition_is_exhaustive() {
        // r + r2 + (green-green count) must always equal the writhe
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..40 {
            let n = rng.gen_range(2..=4);
            let len = rng.gen_range(0..=8);
            let word = random_word(&mut rng, n, len);
            for subset_bits in 0..(1u32 << n) {
                let s: BTreeSet<usize> =
                    (1..=n).filter(|i| subset_bits >> (i - 1) & 1 == 1).collect();
                let (r, r2, _) = word.colored_counts(&s);
                let complement: BTreeSet<usize> =
                    (1..=n).filter(|i| !s.contains(i)).collect();
                let (gg, _, _) = word.colored_counts(&complement);
                assert_eq!(r + r2 + gg, word.writhe());
            }
        }
    }

    #[test]
    fn link_data_invariant_under_free_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let n = rng.gen_range(2..=4);
            let len = rng.gen_range(0..=6);
            let base = random_word(&mut rng, n, len);
            let pos = rng.gen_range(0..=base.len());
            let gen = rng.gen_range(1..n) as i32;
            let mut letters = base.letters().to_vec();
            letters.insert(pos, -gen);
            letters.insert(pos, gen);
            let padded = BraidWord::new(n, letters).unwrap();
            assert_eq!(padded.link_data(), base.link_data());
        }
    }

    #[test]
    fn writhe_decomposes_into_link_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..60 {
            let n = rng.gen_range(2..=5);
            let len = rng.gen_range(0..=10);
            let word = random_word(&mut rng, n, len);
            let ld = word.link_data();
            let selfs: i64 = ld.self_writhe.iter().sum();
            let links: i64 = {
                let li = ld.linking_int();
                let mut acc = 0;
                for i in 0..li.len() {
                    for j in (i + 1)..li.len() {
                        acc += li[i][j];
                    }
                }
                acc
            };
            assert_eq!(selfs + 2 * links, word.writhe());
        }
    }
}
