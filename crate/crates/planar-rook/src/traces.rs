//! Trace functions on the planar rook algebra and the two Markov-normalized
//! traces built from them: the writhe-corrected bubble trace over family 5
//! (which recovers the Jones polynomial) and the normalized single-line trace
//! over the rescaled family 2 (which recovers the Alexander polynomial).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::homs::{phi_word, FamilySpec};
use crate::poly::LaurentPoly;
use crate::report::Report;
use crate::sample::{random_element, random_word};

/// Largest strand count for the closed-form checks below.
pub const VIP_CAP: usize = 6;

/// `sum coeff(d) * beta^{k(d)}` where `k(d)` counts vertical lines.
pub fn bubble_trace(beta: &LaurentPoly, x: &AlgebraElement) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (d, c) in x.terms() {
        acc = acc.add_ref(&c.mul_ref(&beta.pow(d.vertical_line_count() as u32)));
    }
    acc
}

/// Sum of the coefficients of diagrams with exactly one vertical line.
pub fn single_line_trace(x: &AlgebraElement) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (d, c) in x.terms() {
        if d.vertical_line_count() == 1 {
            acc = acc.add_ref(c);
        }
    }
    acc
}

/// The bubble parameter `(1 + cd)/cd = 1 + (UV)^-2` that makes the family-5
/// bubble trace a Markov trace after writhe correction.
pub fn markov5_beta() -> LaurentPoly {
    LaurentPoly::one().add_ref(&LaurentPoly::uv_pow(-2))
}

/// The Markov trace over family 5:
/// `(UV)^{writhe + n} * bubble_trace(1 + (UV)^-2, phi_5(w))`.
pub fn markov_trace_5(w: &BraidWord) -> LaurentPoly {
    let spec = FamilySpec::plain(5).expect("family 5 exists");
    let img = phi_word(spec, w);
    let tr = bubble_trace(&markov5_beta(), &img);
    LaurentPoly::uv_pow(w.writhe() + w.n() as i64).mul_ref(&tr)
}

/// Closed form of the single-line trace of the positive half-twist
/// `x_n = s_1 ... s_{n-1}` under the rescaled family 2:
/// `(-1/(UV))^{n-1} * (1 + cd + ... + (cd)^{n-1})`.
pub fn trace2_normalizer(n: usize) -> LaurentPoly {
    let mut geom = LaurentPoly::zero();
    for i in 0..n {
        geom = geom.add_ref(&LaurentPoly::uv_pow(2 * i as i64));
    }
    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    LaurentPoly::int_monomial(sign, (-(n as i64 - 1), -(n as i64 - 1), 0)).mul_ref(&geom)
}

/// The positive half-twist word `x_n = s_1 s_2 ... s_{n-1}` in `B_n`.
pub fn half_twist(n: usize) -> BraidWord {
    BraidWord::new(n, (1..n as i32).collect()).expect("indices in range")
}

/// The normalized single-line trace over the rescaled family 2; equals the
/// Alexander polynomial of the closure. The division is exact for braid
/// words, so a `NotDivisible` here signals an implementation fault.
pub fn trace_2(w: &BraidWord) -> Result<LaurentPoly> {
    let img = phi_word(FamilySpec::rescaled_two(), w);
    single_line_trace(&img).exact_div(&trace2_normalizer(w.n()))
}

/// The block braid attached to a partition `(n_1, ..., n_k)`: ascending runs
/// of generators with offsets, one run per part.
pub fn tau_lambda(parts: &[usize]) -> Result<BraidWord> {
    if parts.is_empty() {
        return Err(Error::BadPartition("empty partition".into()));
    }
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::BadPartition("zero part".into()));
    }
    let n: usize = parts.iter().sum();
    let mut letters = Vec::new();
    let mut offset = 0usize;
    for &p in parts {
        for i in 1..p {
            letters.push((offset + i) as i32);
        }
        offset += p;
    }
    BraidWord::new(n, letters)
}

/// All partitions of `n` (parts weakly decreasing).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The three closed-form checks on `phi_2(x_n)` (rescaled):
/// 1. coefficients of diagrams with no vertical line sum to zero;
/// 2. coefficients of diagrams whose only vertical line sits at `n` sum to
///    `(-UV)^{n-1}`;
/// 3. the single-line trace equals `(-1/(UV))^{n-1} (1 + cd + ... + (cd)^{n-1})`.
pub fn vip_checks(n: usize) -> Result<Report> {
    if !(2..=VIP_CAP).contains(&n) {
        return Err(Error::CapExceeded { n, cap: VIP_CAP });
    }
    let mut report = Report::new(format!("half-twist trace closed forms, n={n}"));
    let img = phi_word(FamilySpec::rescaled_two(), &half_twist(n));

    let mut no_vertical = LaurentPoly::zero();
    let mut only_at_n = LaurentPoly::zero();
    for (d, c) in img.terms() {
        let k = d.vertical_line_count();
        if k == 0 {
            no_vertical = no_vertical.add_ref(c);
        }
        if k == 1 && d.has_edge(n, n) {
            only_at_n = only_at_n.add_ref(c);
        }
    }
    report.check_with(
        format!("claim 1 (n={n}): no-vertical-line coefficients sum to 0"),
        no_vertical.is_zero(),
        format!("got {no_vertical}"),
    );

    let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let expect2 = LaurentPoly::int_monomial(sign, (n as i64 - 1, n as i64 - 1, 0));
    report.check_with(
        format!("claim 2 (n={n}): single vertical line at {n} sums to (-UV)^{}", n - 1),
        only_at_n == expect2,
        format!("got {only_at_n}"),
    );

    let got3 = single_line_trace(&img);
    let expect3 = trace2_normalizer(n);
    report.check_with(
        format!("claim 3 (n={n}): single-line trace matches the closed form"),
        got3 == expect3,
        format!("got {got3}"),
    );
    Ok(report)
}

/// Markov-move behaviour of the two traces on random words, plus the
/// `tr(xy) = tr(yx)` property of the underlying diagram traces.
pub fn markov_suite(words: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("Markov trace properties");

    let mut sym_bubble = true;
    let mut sym_single = true;
    for _ in 0..words.min(40) {
        let n = rng.gen_range(2..=3);
        let x = random_element(&mut rng, n, 4);
        let y = random_element(&mut rng, n, 4);
        let (xy, yx) = (x.mul(&y).unwrap(), y.mul(&x).unwrap());
        let beta = markov5_beta();
        sym_bubble &= bubble_trace(&beta, &xy) == bubble_trace(&beta, &yx);
        sym_single &= single_line_trace(&xy) == single_line_trace(&yx);
    }
    report.check("bubble trace satisfies tr(xy) = tr(yx)", sym_bubble);
    report.check("single-line trace satisfies tr(xy) = tr(yx)", sym_single);

    let mut conj = true;
    let mut stab_pos = true;
    let mut stab_neg = true;
    let mut alex_skein = true;
    let per_n = words.div_ceil(3);
    for n in 2..=4usize {
        for _ in 0..per_n {
            let len_u = rng.gen_range(0..=6);
            let u = random_word(&mut rng, n, len_u);
            let len_v = rng.gen_range(0..=6);
            let v = random_word(&mut rng, n, len_v);
            conj &= markov_trace_5(&u.concat(&v).unwrap())
                == markov_trace_5(&v.concat(&u).unwrap());

            let len_x = rng.gen_range(0..=6);
            let x = random_word(&mut rng, n, len_x);
            let up = x.widen(n + 1).unwrap().push(n as i32).unwrap();
            let down = x.widen(n + 1).unwrap().push(-(n as i32)).unwrap();
            stab_pos &= markov_trace_5(&up) == markov_trace_5(&x);
            stab_neg &= markov_trace_5(&down) == markov_trace_5(&x);

            let j = rng.gen_range(1..n) as i32;
            let lhs = trace_2(&x.push(j).unwrap())
                .unwrap()
                .sub_ref(&trace_2(&x.push(-j).unwrap()).unwrap());
            let z = LaurentPoly::uv_pow(-1).sub_ref(&LaurentPoly::uv_pow(1));
            alex_skein &= lhs == z.mul_ref(&trace_2(&x).unwrap());
        }
    }
    report.check(
        format!("writhe-corrected family-5 trace is conjugation invariant ({words} words)"),
        conj,
    );
    report.check(
        format!("positive stabilization preserves the family-5 trace ({words} words)"),
        stab_pos,
    );
    report.check(
        format!("negative stabilization preserves the family-5 trace ({words} words)"),
        stab_neg,
    );
    report.check(
        format!("normalized family-2 trace satisfies the Alexander skein ({words} words)"),
        alex_skein,
    );
    report
}

/// `trace_2(tau_lambda) = 0` for every partition with more than one part and
/// `= 1` for the single-part partition, for all `n <= max_n`.
pub fn partition_vanishing_suite(max_n: usize) -> Report {
    let mut report = Report::new("block-braid trace vanishing");
    for n in 2..=max_n {
        let mut ok_zero = true;
        let mut detail = String::new();
        for parts in partitions(n) {
            let t = trace_2(&tau_lambda(&parts).unwrap()).unwrap();
            if parts.len() == 1 {
                report.check_with(
                    format!("trace of the full-cycle block braid is 1, n={n}"),
                    t.is_one(),
                    format!("got {t}"),
                );
            } else if !t.is_zero() {
                ok_zero = false;
                detail = format!("partition {parts:?} gave {t}");
            }
        }
        report.check_with(
            format!("trace vanishes on proper block braids, n={n}"),
            ok_zero,
            detail,
        );
    }
    report
}
