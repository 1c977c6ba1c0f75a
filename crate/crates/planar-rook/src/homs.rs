//! The five coefficient families that turn the six-diagram ansatz
//! `a*d1 + b*d2 + c*d3 + d*d4 + e*d5 + f*d6` into braid-group homomorphisms
//! `B_n -> (CP_n)*`, together with their inverses, the rescaled second family,
//! and symbolic verification of the defining relations.
//!
//! Coefficients are Laurent polynomials in `U, V, M` with `c = U^2`,
//! `d = V^2`; the first family's free parameter is carried through
//! `M = a + c + d - 1`, so its inverse coefficient `1/(a+c+d-1)` is the
//! monomial `M^-1`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::element::{embed_p2, p2_element, AlgebraElement};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::report::Report;
use crate::sample::random_word;

/// Which of the five coefficient families to use; `rescaled` selects the
/// variant of family 2 with `f = 1/sqrt(cd)` instead of `f = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    family: u8,
    rescaled: bool,
}

impl FamilySpec {
    pub fn new(family: u8, rescaled: bool) -> Result<Self> {
        if !(1..=5).contains(&family) {
            return Err(Error::IndexOutOfRange(format!(
                "family {family} outside 1..=5"
            )));
        }
        if rescaled && family != 2 {
            return Err(Error::IndexOutOfRange(
                "only family 2 has a rescaled variant".into(),
            ));
        }
        Ok(Self { family, rescaled })
    }

    pub fn plain(family: u8) -> Result<Self> {
        Self::new(family, false)
    }

    /// Family 2 with `f = 1/sqrt(cd)`, the scaling under which the
    /// single-line trace satisfies the Alexander skein relation.
    pub fn rescaled_two() -> Self {
        Self {
            family: 2,
            rescaled: true,
        }
    }

    pub fn family(&self) -> u8 {
        self.family
    }

    pub fn is_rescaled(&self) -> bool {
        self.rescaled
    }
}

fn mono(c: i64, e: (i64, i64, i64)) -> LaurentPoly {
    LaurentPoly::int_monomial(c, e)
}

fn sum(parts: &[LaurentPoly]) -> LaurentPoly {
    parts
        .iter()
        .fold(LaurentPoly::zero(), |acc, p| acc.add_ref(p))
}

/// The six coefficients `[a, b, c, d, e, f]` of the generator image (or its
/// inverse when `positive` is false).
pub fn generator_coefficients(spec: FamilySpec, positive: bool) -> [LaurentPoly; 6] {
    let one = LaurentPoly::one();
    let neg_one = mono(-1, (0, 0, 0));
    let coeffs = if positive {
        let c = mono(1, (2, 0, 0));
        let d = mono(1, (0, 2, 0));
        let cd = mono(1, (2, 2, 0));
        let neg_cd = mono(-1, (2, 2, 0));
        let a_sum = sum(&[one.clone(), mono(-1, (2, 0, 0)), mono(-1, (0, 2, 0)), cd]);
        match spec.family {
            // a is free; with M = a + c + d - 1 it reads M + 1 - c - d
            1 => [
                sum(&[
                    mono(1, (0, 0, 1)),
                    one.clone(),
                    mono(-1, (2, 0, 0)),
                    mono(-1, (0, 2, 0)),
                ]),
                neg_one.clone(),
                c,
                d,
                neg_one,
                one,
            ],
            2 => [
                sum(&[mono(-1, (2, 0, 0)), mono(-1, (0, 2, 0))]),
                neg_one,
                c,
                d,
                neg_cd,
                one,
            ],
            3 => [
                sum(&[mono(-1, (2, 0, 0)), mono(-1, (0, 2, 0))]),
                neg_cd,
                c,
                d,
                neg_one,
                one,
            ],
            4 => [a_sum, neg_cd, c, d, neg_one, one],
            5 => [a_sum, neg_one, c, d, neg_cd, one],
            _ => unreachable!("validated in FamilySpec::new"),
        }
    } else {
        // inverses: the slash coefficients pick up swapped reciprocals
        // 1/d on d3 and 1/c on d4
        let c_inv = mono(1, (0, -2, 0));
        let d_inv = mono(1, (-2, 0, 0));
        let neg_cd_inv = mono(-1, (-2, -2, 0));
        let a_sum_inv = sum(&[
            one.clone(),
            mono(-1, (-2, 0, 0)),
            mono(-1, (0, -2, 0)),
            mono(1, (-2, -2, 0)),
        ]);
        match spec.family {
            1 => [
                sum(&[
                    one.clone(),
                    mono(-1, (0, -2, 0)),
                    mono(-1, (-2, 0, 0)),
                    mono(1, (0, 0, -1)),
                ]),
                neg_one.clone(),
                c_inv,
                d_inv,
                neg_one,
                one,
            ],
            2 => [
                sum(&[mono(-1, (-2, 0, 0)), mono(-1, (0, -2, 0))]),
                neg_cd_inv,
                c_inv,
                d_inv,
                neg_one,
                one,
            ],
            3 => [
                sum(&[mono(-1, (-2, 0, 0)), mono(-1, (0, -2, 0))]),
                neg_one,
                c_inv,
                d_inv,
                neg_cd_inv,
                one,
            ],
            4 => [a_sum_inv, neg_one, c_inv, d_inv, neg_cd_inv, one],
            5 => [a_sum_inv, neg_cd_inv, c_inv, d_inv, neg_one, one],
            _ => unreachable!("validated in FamilySpec::new"),
        }
    };
    if spec.rescaled {
        // scaling f to 1/sqrt(cd) multiplies sigma images by (UV)^-1 and
        // inverse images by UV
        let factor = LaurentPoly::uv_pow(if positive { -1 } else { 1 });
        coeffs.map(|p| p.mul_ref(&factor))
    } else {
        coeffs
    }
}

/// The image of `sigma_1^{±1}` in `CP_2`.
pub fn phi_p2(spec: FamilySpec, positive: bool) -> AlgebraElement {
    p2_element(&generator_coefficients(spec, positive))
}

/// The image of `sigma_i^{sign}` in `CP_n`.
pub fn phi_generator(spec: FamilySpec, i: usize, sign: i8, n: usize) -> Result<AlgebraElement> {
    embed_p2(&phi_p2(spec, sign > 0), i, n)
}

/// The image of a braid word: the ordered product of its generator images
/// (the identity element for the empty word).
pub fn phi_word(spec: FamilySpec, w: &BraidWord) -> AlgebraElement {
    let n = w.n();
    let mut acc = AlgebraElement::identity(n);
    for &k in w.letters() {
        let g = phi_generator(spec, k.unsigned_abs() as usize, k.signum() as i8, n)
            .expect("letters validated by BraidWord");
        acc = acc.mul(&g).expect("images share the strand count");
    }
    acc
}

/// Checks `x y x == y x y` for two-strand-apart generator images in `CP_3`.
pub fn second_braid_relation_holds(x: &AlgebraElement, y: &AlgebraElement) -> Result<bool> {
    let lhs = x.mul(y)?.mul(x)?;
    let rhs = y.mul(x)?.mul(y)?;
    Ok(lhs == rhs)
}

/// Checks `x y == y x` for generator images on disjoint strand pairs.
pub fn far_commutation_holds(x: &AlgebraElement, y: &AlgebraElement) -> Result<bool> {
    Ok(x.mul(y)? == y.mul(x)?)
}

/// Verifies the braid relation in `CP_3`, far commutation in `CP_4`, and
/// `phi(sigma_i) phi(sigma_i^-1) = 1`, all as exact symbolic identities.
pub fn verify_braid_relations(spec: FamilySpec) -> Report {
    let tag = if spec.is_rescaled() {
        format!("family {} (rescaled)", spec.family())
    } else {
        format!("family {}", spec.family())
    };
    let mut report = Report::new(format!("braid relations, {tag}"));

    let s1 = phi_generator(spec, 1, 1, 3).unwrap();
    let s2 = phi_generator(spec, 2, 1, 3).unwrap();
    report.check(
        format!("{tag}: braid relation s1 s2 s1 = s2 s1 s2 in CP_3"),
        second_braid_relation_holds(&s1, &s2).unwrap(),
    );

    let t1 = phi_generator(spec, 1, 1, 4).unwrap();
    let t3 = phi_generator(spec, 3, 1, 4).unwrap();
    report.check(
        format!("{tag}: far commutation s1 s3 = s3 s1 in CP_4"),
        far_commutation_holds(&t1, &t3).unwrap(),
    );

    let mut inverses_ok = true;
    for (n, is) in [(2usize, vec![1usize]), (3, vec![1, 2])] {
        for i in is {
            let g = phi_generator(spec, i, 1, n).unwrap();
            let ginv = phi_generator(spec, i, -1, n).unwrap();
            inverses_ok &= g.mul(&ginv).unwrap() == AlgebraElement::identity(n);
            inverses_ok &= ginv.mul(&g).unwrap() == AlgebraElement::identity(n);
        }
    }
    report.check(
        format!("{tag}: generator inverses multiply to the identity"),
        inverses_ok,
    );

    report
}

/// Verifies the duality between families 2/3 and 5/4: the image of
/// `sigma_i` under one family equals the image of `sigma_i^-1` under its dual
/// family with parameters swapped to `(1/d, 1/c)`, i.e. with `U -> V^-1,
/// V -> U^-1` applied to the coefficients.
pub fn duality_check() -> Report {
    let mut report = Report::new("duality of coefficient families");
    for (fam, dual, label) in [(2u8, 3u8, "families 2 and 3"), (5, 4, "families 5 and 4")] {
        let lhs = phi_p2(FamilySpec::plain(fam).unwrap(), true);
        let rhs =
            phi_p2(FamilySpec::plain(dual).unwrap(), false).map_coeffs(|c| c.swap_uv_inverse());
        report.check(
            format!("{label}: phi(sigma) matches dual phi(sigma^-1) under c -> 1/d, d -> 1/c"),
            lhs == rhs,
        );
    }
    // the parameter swap is an involution
    let x = phi_p2(FamilySpec::plain(5).unwrap(), true);
    report.check(
        "parameter swap applied twice restores the coefficients",
        x.map_coeffs(|c| c.swap_uv_inverse().swap_uv_inverse()) == x,
    );
    report
}

/// Skein relations on random words: family 5 satisfies
/// `phi(x s_j) - cd * phi(x s_j^-1) = (1 - cd) * phi(x)` and the rescaled
/// family 2 satisfies `phi(x s_j) - phi(x s_j^-1) = (1/(UV) - UV) * phi(x)`.
pub fn skein_suite(words_per_n: usize, max_len: usize, seed: u64) -> Report {
    let mut report = Report::new("skein relations");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cd = LaurentPoly::uv_pow(2);
    let one_minus_cd = LaurentPoly::one().sub_ref(&cd);
    let z2 = LaurentPoly::uv_pow(-1).sub_ref(&LaurentPoly::uv_pow(1));
    let phi5 = FamilySpec::plain(5).unwrap();
    let phi2 = FamilySpec::rescaled_two();
    for n in 2..=4usize {
        let mut ok5 = true;
        let mut ok2 = true;
        for _ in 0..words_per_n {
            let len = rng.gen_range(0..=max_len);
            let x = random_word(&mut rng, n, len);
            let j = rng.gen_range(1..n) as i32;
            let pos = x.push(j).unwrap();
            let neg = x.push(-j).unwrap();

            let lhs5 = phi_word(phi5, &pos)
                .sub(&phi_word(phi5, &neg).scale(&cd))
                .unwrap();
            ok5 &= lhs5 == phi_word(phi5, &x).scale(&one_minus_cd);

            let lhs2 = phi_word(phi2, &pos).sub(&phi_word(phi2, &neg)).unwrap();
            ok2 &= lhs2 == phi_word(phi2, &x).scale(&z2);
        }
        report.check(
            format!("family 5 skein phi(xs) - cd*phi(xs^-1) = (1-cd)*phi(x), n={n}, {words_per_n} words"),
            ok5,
        );
        report.check(
            format!(
                "rescaled family 2 skein phi(xs) - phi(xs^-1) = (1/(UV)-UV)*phi(x), n={n}, {words_per_n} words"
            ),
            ok2,
        );
    }
    report
}

/// The quadratic (Hecke) relation for family 5 and the failure of any such
/// relation for family 1.
pub fn quadratic_report() -> Report {
    let mut report = Report::new("quadratic relations");
    let phi5 = FamilySpec::plain(5).unwrap();
    for n in [2usize, 3] {
        let mut ok = true;
        for i in 1..n {
            let g = phi_generator(phi5, i, 1, n).unwrap();
            let id = AlgebraElement::identity(n);
            let lhs = g
                .sub(&id)
                .unwrap()
                .mul(&g.add(&id.scale(&LaurentPoly::uv_pow(2))).unwrap())
                .unwrap();
            ok &= lhs.is_zero();
        }
        report.check(
            format!("family 5 satisfies (phi(s) - 1)(phi(s) + cd) = 0 in CP_{n}"),
            ok,
        );
    }
    report.check(
        "family 1: phi(s)^2 is not a module combination of phi(s) and 1",
        phi1_square_outside_span(),
    );
    report
}

/// Rank test: the coefficient vectors of `1`, `phi_1(sigma)`, and
/// `phi_1(sigma)^2` over the six-diagram basis of `CP_2` are linearly
/// independent over the fraction field (witnessed by a nonzero 3x3 minor),
/// so no quadratic `phi^2 = alpha phi + beta` with scalar coefficients holds.
pub fn phi1_square_outside_span() -> bool {
    let spec = FamilySpec::plain(1).unwrap();
    let g = phi_p2(spec, true);
    let gg = g.mul(&g).unwrap();
    let id = AlgebraElement::identity(2);
    let basis = crate::diagram::p2_basis();
    let row = |x: &AlgebraElement| -> Vec<LaurentPoly> {
        basis.iter().map(|d| x.coeff(d)).collect()
    };
    let rows = [row(&id), row(&g), row(&gg)];
    // any nonzero 3x3 minor certifies rank 3
    for c0 in 0..6 {
        for c1 in (c0 + 1)..6 {
            for c2 in (c1 + 1)..6 {
                let det = det3([
                    [&rows[0][c0], &rows[0][c1], &rows[0][c2]],
                    [&rows[1][c0], &rows[1][c1], &rows[1][c2]],
                    [&rows[2][c0], &rows[2][c1], &rows[2][c2]],
                ]);
                if !det.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn det3(m: [[&LaurentPoly; 3]; 3]) -> LaurentPoly {
    let det2 = |a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly, d: &LaurentPoly| {
        a.mul_ref(d).sub_ref(&b.mul_ref(c))
    };
    let t0 = m[0][0].mul_ref(&det2(m[1][1], m[1][2], m[2][1], m[2][2]));
    let t1 = m[0][1].mul_ref(&det2(m[1][0], m[1][2], m[2][0], m[2][2]));
    let t2 = m[0][2].mul_ref(&det2(m[1][0], m[1][1], m[2][0], m[2][1]));
    t0.sub_ref(&t1).add_ref(&t2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::p2_basis;
    use crate::element::p2_element;

    fn all_specs() -> Vec<FamilySpec> {
        let mut v: Vec<FamilySpec> = (1..=5).map(|f| FamilySpec::plain(f).unwrap()).collect();
        v.push(FamilySpec::rescaled_two());
        v
    }

    #[test]
    fn family_spec_validation() {
        assert!(FamilySpec::new(0, false).is_err());
        assert!(FamilySpec::new(6, false).is_err());
        assert!(FamilySpec::new(3, true).is_err());
        assert!(FamilySpec::new(2, true).is_ok());
    }

    #[test]
    fn family5_generator_coefficients() {
        // (1 - c - d + cd) d1 - d2 + c d3 + d d4 - cd d5 + d6
        let g = phi_p2(FamilySpec::plain(5).unwrap(), true);
        let [d1, d2, d3, d4, d5, d6] = p2_basis();
        let a = LaurentPoly::one()
            .sub_ref(&mono(1, (2, 0, 0)))
            .sub_ref(&mono(1, (0, 2, 0)))
            .add_ref(&mono(1, (2, 2, 0)));
        assert_eq!(g.coeff(&d1), a);
        assert_eq!(g.coeff(&d2), mono(-1, (0, 0, 0)));
        assert_eq!(g.coeff(&d3), mono(1, (2, 0, 0)));
        assert_eq!(g.coeff(&d4), mono(1, (0, 2, 0)));
        assert_eq!(g.coeff(&d5), mono(-1, (2, 2, 0)));
        assert_eq!(g.coeff(&d6), LaurentPoly::one());
    }

    #[test]
    fn rescaled_family2_inverse_coefficients() {
        // (-U/V - V/U) d1 - (UV)^-1 d2 + (U/V) d3 + (V/U) d4 - UV d5 + UV d6
        let g = phi_p2(FamilySpec::rescaled_two(), false);
        let [d1, d2, d3, d4, d5, d6] = p2_basis();
        assert_eq!(
            g.coeff(&d1),
            mono(-1, (1, -1, 0)).add_ref(&mono(-1, (-1, 1, 0)))
        );
        assert_eq!(g.coeff(&d2), mono(-1, (-1, -1, 0)));
        assert_eq!(g.coeff(&d3), mono(1, (1, -1, 0)));
        assert_eq!(g.coeff(&d4), mono(1, (-1, 1, 0)));
        assert_eq!(g.coeff(&d5), mono(-1, (1, 1, 0)));
        assert_eq!(g.coeff(&d6), mono(1, (1, 1, 0)));
    }

    #[test]
    fn generator_times_inverse_is_identity() {
        for spec in all_specs() {
            for n in [2usize, 3] {
                for i in 1..n {
                    let g = phi_generator(spec, i, 1, n).unwrap();
                    let ginv = phi_generator(spec, i, -1, n).unwrap();
                    assert_eq!(
                        g.mul(&ginv).unwrap(),
                        AlgebraElement::identity(n),
                        "family {:?} i={i} n={n}",
                        spec
                    );
                }
            }
        }
    }

    #[test]
    fn all_families_pass_relations() {
        for spec in all_specs() {
            let report = verify_braid_relations(spec);
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn mutated_family_fails_relation() {
        // family 5 with b flipped to +1 must break the braid relation
        let mut coeffs = generator_coefficients(FamilySpec::plain(5).unwrap(), true);
        coeffs[1] = LaurentPoly::one();
        let bad = p2_element(&coeffs);
        let s1 = embed_p2(&bad, 1, 3).unwrap();
        let s2 = embed_p2(&bad, 2, 3).unwrap();
        assert!(!second_braid_relation_holds(&s1, &s2).unwrap());
    }

    #[test]
    fn phi_word_empty_and_cancellation() {
        let spec = FamilySpec::plain(5).unwrap();
        assert_eq!(
            phi_word(spec, &BraidWord::empty(3)),
            AlgebraElement::identity(3)
        );
        let w = BraidWord::new(2, vec![1, -1]).unwrap();
        assert_eq!(phi_word(spec, &w), AlgebraElement::identity(2));
    }

    #[test]
    fn sigma_cubed_satisfies_quadratic_reduction() {
        // phi(s^3) = phi(s) * phi(s^2) where phi(s^2) = (1-cd) phi(s) + cd
        let spec = FamilySpec::plain(5).unwrap();
        let s = BraidWord::new(2, vec![1]).unwrap();
        let s3 = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let g = phi_word(spec, &s);
        let cd = LaurentPoly::uv_pow(2);
        let g2 = g
            .scale(&LaurentPoly::one().sub_ref(&cd))
            .add(&AlgebraElement::identity(2).scale(&cd))
            .unwrap();
        assert_eq!(phi_word(spec, &s3), g.mul(&g2).unwrap());
        assert!(phi_word(spec, &s3).num_terms() <= 6);
    }

    #[test]
    fn duality_identities_hold() {
        let report = duality_check();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn skein_suite_passes() {
        let report = skein_suite(12, 6, 0xC0FFEE);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn quadratic_report_passes() {
        let report = quadratic_report();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn homomorphism_property_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xFEED);
        for spec in [FamilySpec::plain(1).unwrap(), FamilySpec::rescaled_two()] {
            for _ in 0..10 {
                let n = rng.gen_range(2..=4);
                let len = rng.gen_range(0..=5);
                let u = random_word(&mut rng, n, len);
                let len = rng.gen_range(0..=5);
                let v = random_word(&mut rng, n, len);
                let uv = u.concat(&v).unwrap();
                assert_eq!(
                    phi_word(spec, &uv),
                    phi_word(spec, &u).mul(&phi_word(spec, &v)).unwrap()
                );
            }
        }
    }
}
