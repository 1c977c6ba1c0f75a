//! The irreducible matrix representations of the planar rook algebra on
//! subset spaces, the direct-sum decomposition checks, and the colored-braid
//! scalar formula for the first coefficient family.
//!
//! `rho_k` acts on the span of the `k`-subsets of `{1..n}`: a diagram sends
//! `v_S` to `v_{f(S)}` when `S` is contained in the edge-incident bottom
//! vertices (`f` maps each bottom vertex to its top neighbor) and kills it
//! otherwise. With the stacking product this is multiplicative, and the
//! joint map over all `k` identifies `CP_n` with a direct sum of matrix
//! algebras of total dimension `binomial(2n, n)`.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::diagram::{binomial, combinations, enumerate_planar, PlanarDiagram};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::homs::{phi_word, FamilySpec};
use crate::poly::LaurentPoly;
use crate::report::Report;
use crate::sample::{random_element, random_word};
use crate::traces::bubble_trace;

/// Largest strand count for the exhaustive decomposition checks.
pub const REP_CAP: usize = 4;

/// A square matrix over the Laurent ring indexed by the `k`-subsets of
/// `{1..n}` in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMatrix {
    n: usize,
    k: usize,
    basis: Vec<Vec<usize>>,
    entries: Vec<LaurentPoly>, // row-major, dim x dim
}

impl RepMatrix {
    pub fn zero(n: usize, k: usize) -> Self {
        let basis = combinations(n, k);
        let dim = basis.len();
        Self {
            n,
            k,
            basis,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        let mut m = Self::zero(n, k);
        for i in 0..m.dim() {
            *m.entry_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The subset labelling basis column/row `i`.
    pub fn basis_subset(&self, i: usize) -> &[usize] {
        &self.basis[i]
    }

    /// Index of a subset in the lexicographic basis.
    pub fn subset_index(&self, s: &BTreeSet<usize>) -> Option<usize> {
        let key: Vec<usize> = s.iter().copied().collect();
        self.basis.binary_search(&key).ok()
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim() + col]
    }

    fn entry_mut(&mut self, row: usize, col: usize) -> &mut LaurentPoly {
        let dim = self.dim();
        &mut self.entries[row * dim + col]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n || self.k != rhs.k {
            return Err(Error::SizeMismatch(self.dim(), rhs.dim()));
        }
        let dim = self.dim();
        let mut out = Self::zero(self.n, self.k);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = LaurentPoly::zero();
                for l in 0..dim {
                    let a = self.entry(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add_ref(&a.mul_ref(rhs.entry(l, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn add_scaled(&self, rhs: &Self, by: &LaurentPoly) -> Result<Self> {
        if self.n != rhs.n || self.k != rhs.k {
            return Err(Error::SizeMismatch(self.dim(), rhs.dim()));
        }
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = out.entries[i].add_ref(&rhs.entries[i].mul_ref(by));
        }
        Ok(out)
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for i in 0..self.dim() {
            acc = acc.add_ref(self.entry(i, i));
        }
        acc
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rho_{} on {} strands, basis {:?}",
            self.k, self.n, self.basis
        )?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| format!("{}", self.entry(i, j)))
                .collect();
            writeln!(f, "[ {} ]", row.join(" | "))?;
        }
        Ok(())
    }
}

/// Matrix of a single diagram: column `S` is `e_{f(S)}` when every element of
/// `S` is an edge-incident bottom vertex, zero otherwise.
pub fn rho_diagram(k: usize, d: &PlanarDiagram) -> RepMatrix {
    let mut m = RepMatrix::zero(d.n(), k);
    let dim = m.dim();
    for col in 0..dim {
        let s = m.basis[col].clone();
        let image: Option<BTreeSet<usize>> = s.iter().map(|&b| d.image_of(b)).collect();
        if let Some(t) = image {
            let row = m.subset_index(&t).expect("image subset has size k");
            *m.entry_mut(row, col) = LaurentPoly::one();
        }
    }
    m
}

/// Coefficient-weighted sum of `rho_diagram` over the terms of an element.
pub fn rho_element(k: usize, x: &AlgebraElement) -> RepMatrix {
    let mut m = RepMatrix::zero(x.n(), k);
    for (d, c) in x.terms() {
        m = m
            .add_scaled(&rho_diagram(k, d), c)
            .expect("diagrams share the strand count");
    }
    m
}

/// The scalar attached by the first coefficient family to a colored braid:
/// with `(r, r2)` the signed red-red and red-green crossing counts for the
/// green set `S`, and `T` the image of `S` under the underlying permutation,
/// the matrix action is `v_S -> M^r (UV)^{r2} (U/V)^{sum T - sum S} v_T`.
pub fn lambda_formula(w: &BraidWord, s: &BTreeSet<usize>) -> (BTreeSet<usize>, LaurentPoly) {
    let (r, r2, t) = w.colored_counts(s);
    let sum_s: i64 = s.iter().map(|&i| i as i64).sum();
    let sum_t: i64 = t.iter().map(|&i| i as i64).sum();
    let scalar = LaurentPoly::m_pow(r)
        .mul_ref(&LaurentPoly::uv_pow(r2))
        .mul_ref(&LaurentPoly::u_over_v_pow(sum_t - sum_s));
    (t, scalar)
}

/// Direct-sum decomposition checks for `CP_n`:
/// (a) `sum_k binomial(n,k)^2 = binomial(2n,n)` against actual enumeration;
/// (b) the joint map `d -> (rho_0(d), ..., rho_n(d))` is injective;
/// (c) multiplicativity `rho_k(d1 d2) = rho_k(d1) rho_k(d2)`, exhaustive for
///     `n <= 3` and sampled for `n = 4`.
pub fn isomorphism_check(n: usize) -> Result<Report> {
    if n > REP_CAP {
        return Err(Error::CapExceeded { n, cap: REP_CAP });
    }
    let mut report = Report::new(format!("matrix-algebra decomposition, n={n}"));
    let all = enumerate_planar(n)?;

    let dim_sum: u128 = (0..=n).map(|k| binomial(n, k).pow(2)).sum();
    report.check_with(
        format!("dimension count: sum of squares = {} = |P_{n}|", all.len()),
        dim_sum == all.len() as u128 && dim_sum == binomial(2 * n, n),
        format!("sum {dim_sum} vs {} diagrams", all.len()),
    );

    let joint = |d: &PlanarDiagram| -> Vec<RepMatrix> {
        (0..=n).map(|k| rho_diagram(k, d)).collect()
    };
    let images: Vec<Vec<RepMatrix>> = all.iter().map(joint).collect();
    let mut injective = true;
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            if images[i] == images[j] {
                injective = false;
            }
        }
    }
    report.check("joint representation map is injective on diagrams", injective);

    let mut mult_ok = true;
    if n <= 3 {
        for a in &all {
            for b in &all {
                let ab = a.compose(b)?;
                for k in 0..=n {
                    mult_ok &= rho_diagram(k, &ab)
                        == rho_diagram(k, a).mul(&rho_diagram(k, b))?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..200 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            let ab = a.compose(b)?;
            for k in 0..=n {
                mult_ok &=
                    rho_diagram(k, &ab) == rho_diagram(k, a).mul(&rho_diagram(k, b))?;
            }
        }
    }
    report.check("representations are multiplicative on diagram pairs", mult_ok);
    Ok(report)
}

/// Matrix-versus-formula check on random words: every column of
/// `rho_k(phi_1(w))` must be the formula scalar times a standard basis vector.
pub fn lambda_suite(words: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("colored-braid scalar formula");
    let spec = FamilySpec::plain(1).expect("family 1 exists");
    let per_n = words.div_ceil(3);
    for n in 2..=REP_CAP {
        let mut ok = true;
        let mut detail = String::new();
        for _ in 0..per_n {
            let len = rng.gen_range(0..=8);
            let w = random_word(&mut rng, n, len);
            let img = phi_word(spec, &w);
            for k in 0..=n {
                let m = rho_element(k, &img);
                for col in 0..m.dim() {
                    let s: BTreeSet<usize> = m.basis_subset(col).iter().copied().collect();
                    let (t, scalar) = lambda_formula(&w, &s);
                    let row = m.subset_index(&t).expect("permuted subset has size k");
                    for r in 0..m.dim() {
                        let expect = if r == row {
                            scalar.clone()
                        } else {
                            LaurentPoly::zero()
                        };
                        if *m.entry(r, col) != expect {
                            ok = false;
                            detail = format!(
                                "word {w}, k={k}, S={s:?}: entry ({r},{col}) = {}, expected {expect}",
                                m.entry(r, col)
                            );
                        }
                    }
                }
            }
        }
        report.check_with(
            format!("rho_k(phi_1(w)) v_S = lambda v_T for all S, k; n={n}, {per_n} words"),
            ok,
            detail,
        );
    }
    report
}

/// Expresses the bubble trace through matrix traces: for any element `x`
/// whose coefficients do not involve `M`, treating `M` as a free bubble
/// parameter gives `bubble_trace(M, x) = sum_k (M-1)^k trace(rho_k(x))`.
pub fn trace_decomposition_check(n: usize, samples: usize, seed: u64) -> Result<Report> {
    if n > REP_CAP {
        return Err(Error::CapExceeded { n, cap: REP_CAP });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(format!("bubble trace from matrix traces, n={n}"));
    let beta = LaurentPoly::m_pow(1);
    let beta_minus_1 = beta.sub_ref(&LaurentPoly::one());
    let mut ok = true;
    let mut detail = String::new();
    for _ in 0..samples {
        let x = random_element(&mut rng, n, 5);
        let lhs = bubble_trace(&beta, &x);
        let mut rhs = LaurentPoly::zero();
        for k in 0..=n {
            rhs = rhs.add_ref(&beta_minus_1.pow(k as u32).mul_ref(&rho_element(k, &x).trace()));
        }
        if lhs != rhs {
            ok = false;
            detail = format!("lhs {lhs} != rhs {rhs}");
        }
    }
    report.check_with(
        format!("bubble trace equals sum_k (beta-1)^k tr rho_k, {samples} samples"),
        ok,
        detail,
    );
    Ok(report)
}

/// For each `k` and each subset fixed by the underlying permutation, the
/// diagonal scalar of `rho_k(phi_1(w))` must match the formula value and be
/// reconstructible from closure data alone (component self-writhes and
/// pairwise linking numbers).
pub fn linking_dependence_check(w: &BraidWord) -> Report {
    let mut report = Report::new(format!("linking-number dependence for {w}"));
    let spec = FamilySpec::plain(1).expect("family 1 exists");
    let img = phi_word(spec, w);
    let perm = w.permutation();
    let ld = w.link_data();
    let linking = ld.linking_int();
    let n = w.n();
    let mut formula_ok = true;
    let mut reconstruct_ok = true;
    let mut detail = String::new();
    for k in 0..=n {
        let m = rho_element(k, &img);
        for col in 0..m.dim() {
            let s: BTreeSet<usize> = m.basis_subset(col).iter().copied().collect();
            if perm.apply_set(&s) != s {
                continue;
            }
            let (t, scalar) = lambda_formula(w, &s);
            debug_assert_eq!(t, s);
            if *m.entry(col, col) != scalar {
                formula_ok = false;
                detail = format!("k={k}, S={s:?}: diagonal {} != {scalar}", m.entry(col, col));
            }

            // a fixed subset is a union of components; rebuild the crossing
            // exponents from per-component data
            let green: Vec<usize> = (0..ld.num_components())
                .filter(|&ci| ld.components[ci].iter().all(|v| s.contains(v)))
                .collect();
            let red: Vec<usize> = (0..ld.num_components())
                .filter(|ci| !green.contains(ci))
                .collect();
            let mut r = 0i64;
            for (ai, &a) in red.iter().enumerate() {
                r += ld.self_writhe[a];
                for &b in red.iter().skip(ai + 1) {
                    r += 2 * linking[a][b];
                }
            }
            let mut r2 = 0i64;
            for &a in &red {
                for &g in &green {
                    r2 += 2 * linking[a][g];
                }
            }
            let rebuilt = LaurentPoly::m_pow(r).mul_ref(&LaurentPoly::uv_pow(r2));
            if rebuilt != scalar {
                reconstruct_ok = false;
                detail = format!("k={k}, S={s:?}: rebuilt {rebuilt} != {scalar}");
            }
        }
    }
    report.check_with(
        "diagonal scalars match the colored-crossing formula",
        formula_ok,
        detail.clone(),
    );
    report.check_with(
        "diagonal scalars are functions of the closure linking data",
        reconstruct_ok,
        detail,
    );
    report
}

/// Runs `linking_dependence_check` over random words.
pub fn linking_suite(words: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("linking-number dependence");
    let per_n = words.div_ceil(3);
    for n in 2..=REP_CAP {
        let mut ok = true;
        let mut detail = String::new();
        for _ in 0..per_n {
            let len = rng.gen_range(0..=8);
            let w = random_word(&mut rng, n, len);
            let sub = linking_dependence_check(&w);
            if !sub.all_passed() {
                ok = false;
                detail = format!("{sub}");
            }
        }
        report.check_with(
            format!("diagonal scalars reconstructed from linking data; n={n}, {per_n} words"),
            ok,
            detail,
        );
    }
    report
}
