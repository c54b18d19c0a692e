//! Divided difference operators and their isobaric and β-deformed relatives.

use crate::permutations::Perm;
use crate::polyring::{trim, BetaScalar, Exps, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms, non_camel_case_types)]
pub enum OperatorKind {
    /// `∂_i`
    DD,
    /// `π_i f = ∂_i(x_i f)`
    ISO,
    /// `π̄_i = π_i - 1`
    BAR,
    /// `∂^β_i f = ∂_i((1 + β x_{i+1}) f)`
    DD_B,
    /// `π^β_i f = ∂^β_i(x_i f)`
    ISO_B,
    /// `π̄^β_i = π^β_i - 1`
    BAR_B,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 6] = [
        OperatorKind::DD,
        OperatorKind::ISO,
        OperatorKind::BAR,
        OperatorKind::DD_B,
        OperatorKind::ISO_B,
        OperatorKind::BAR_B,
    ];
}

fn get(e: &[u32], i: usize) -> u32 {
    e.get(i - 1).copied().unwrap_or(0)
}

/// Adds `c · ∂_i(x^e)` to `out`.
fn dd_monomial(e: &[u32], i: usize, c: &BetaScalar, out: &mut Poly) {
    let (a, b) = (get(e, i), get(e, i + 1));
    if a == b {
        return;
    }
    let (hi, lo, neg) = if a > b { (a, b, false) } else { (b, a, true) };
    let coeff = if neg { c.neg_ref() } else { c.clone() };
    let mut base: Exps = e.to_vec();
    if base.len() < i + 1 {
        base.resize(i + 1, 0);
    }
    // (x_i^hi x_{i+1}^lo - x_i^lo x_{i+1}^hi) / (x_i - x_{i+1}) = (x_i x_{i+1})^lo h_{hi-lo-1}(x_i, x_{i+1})
    for k in 0..hi - lo {
        let mut m = base.clone();
        m[i - 1] = hi - 1 - k;
        m[i] = lo + k;
        out.add_term(trim(m), &coeff);
    }
}

fn dd(i: usize, f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (e, c) in f.terms() {
        dd_monomial(e, i, c, &mut out);
    }
    out
}

/// `(1 + β x_{i+1}) f`
fn one_plus_beta_x(i: usize, f: &Poly) -> Poly {
    let mut unit = vec![0u32; i + 1];
    unit[i] = 1;
    let shifted = f.mul_monomial(&unit).scalar_mul(&BetaScalar::beta_pow(1));
    f + &shifted
}

fn times_x(i: usize, f: &Poly) -> Poly {
    let mut unit = vec![0u32; i];
    unit[i - 1] = 1;
    f.mul_monomial(&unit)
}

/// `π^β_i f` in one pass: `∂_i(x_i f) + β ∂_i(x_i x_{i+1} f)`.
fn iso_beta(i: usize, f: &Poly) -> Poly {
    let mut out = Poly::zero();
    let mut e: Exps = Vec::new();
    for (m, c) in f.terms() {
        e.clear();
        e.extend_from_slice(m);
        if e.len() < i + 1 {
            e.resize(i + 1, 0);
        }
        e[i - 1] += 1;
        dd_monomial(&e, i, c, &mut out);
        e[i] += 1;
        dd_monomial(&e, i, &c.shift(1), &mut out);
    }
    out
}

/// Apply a single operator with index `i >= 1`.
pub fn apply(kind: OperatorKind, i: usize, f: &Poly) -> Poly {
    assert!(i >= 1, "operator index must be positive");
    match kind {
        OperatorKind::DD => dd(i, f),
        OperatorKind::ISO => dd(i, &times_x(i, f)),
        OperatorKind::BAR => &apply(OperatorKind::ISO, i, f) - f,
        OperatorKind::DD_B => dd(i, &one_plus_beta_x(i, f)),
        OperatorKind::ISO_B => iso_beta(i, f),
        OperatorKind::BAR_B => &iso_beta(i, f) - f,
    }
}

/// `T_{i_1} T_{i_2} ⋯ T_{i_l} f`: the last letter acts first.
pub fn apply_word(kind: OperatorKind, word: &[usize], f: &Poly) -> Poly {
    word.iter().rev().fold(f.clone(), |g, &i| apply(kind, i, &g))
}

/// `T_w f` along a reduced word of `w`.
pub fn apply_perm(kind: OperatorKind, w: &Perm, f: &Poly) -> Poly {
    let mut w = w.clone();
    if matches!(kind, OperatorKind::ISO | OperatorKind::ISO_B) {
        // π_w = π_{w s_i} π_i when w s_i < w, and π_i fixes s_i-invariant f
        while let Some(i) = (1..w.n()).find(|&i| w.has_descent(i) && f.swap_vars(i) == *f) {
            w = w.mul_s_right(i);
        }
    }
    apply_word(kind, &w.reduced_word(), f)
}

/// Reduced word for the longest element of `S_n`, as `(s_1)(s_2 s_1)⋯(s_{n-1}⋯s_1)`.
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut v = Vec::new();
    for k in 1..n {
        v.extend((1..=k).rev());
    }
    v
}

/// `π_{w_n} f` or `π^β_{w_n} f`.
pub fn symmetrize(kind: OperatorKind, n: usize, f: &Poly) -> Poly {
    assert!(
        matches!(kind, OperatorKind::ISO | OperatorKind::ISO_B),
        "symmetrize takes ISO or ISO_B"
    );
    // Both operators fix symmetric inputs.
    if f.is_symmetric(n) {
        return f.clone();
    }
    let w0: Vec<u32> = (1..=n as u32).rev().collect();
    let w0 = Perm::from_one_line(&w0).expect("a permutation");
    apply_perm(kind, &w0, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::all_perms;
    use proptest::prelude::*;
    use OperatorKind::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn single_steps() {
        assert_eq!(apply(DD, 1, &p("x1")), Poly::one());
        assert_eq!(apply(ISO, 1, &p("x1")), p("x1 + x2"));
        assert_eq!(apply(ISO_B, 1, &p("x1")), p("x1 + x2 + b*x1*x2"));
        assert_eq!(apply(DD, 2, &p("x1^3")), Poly::zero());
        assert_eq!(apply(DD, 1, &p("x2")), p("-1"));
        assert_eq!(apply(DD_B, 1, &p("1")), p("-b"));
    }

    #[test]
    fn key_example_by_operators() {
        let u = Perm::parse("3142").unwrap();
        let x = Poly::x_pow(&[2, 1, 1]);
        let key = apply_perm(ISO, &u, &x);
        let expected = p("x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2 + x1^2*x2*x4 + x1^2*x3*x4 + x1*x2^2*x4 + x1*x2*x3*x4 + x1*x3^2*x4");
        assert_eq!(key, expected);
        assert_eq!(apply_perm(BAR, &u, &x), p("x1*x3^2*x4 + x1*x2*x3*x4"));
        assert_eq!(apply_word(ISO, &[2, 1, 3, 1], &Poly::one()), Poly::one());
    }

    #[test]
    fn symmetrize_matches_longest_word() {
        for f in [p("x1^2*x3"), p("x1*x2*x4^2 + b*x3"), p("x1^3*x2^3 + x4"), p("x2^2")] {
            for n in 1..=4 {
                for kind in [ISO, ISO_B] {
                    assert_eq!(symmetrize(kind, n, &f), apply_word(kind, &longest_word(n), &f), "{f} {n}");
                }
            }
        }
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(ISO, 2, &p("x1")), p("x1 + x2"));
        let s = p("x1^2 + x2^2 + x3^2");
        assert_eq!(symmetrize(ISO, 3, &s), s);
        let g = symmetrize(ISO_B, 3, &p("x1^2*x2"));
        assert!(g.is_symmetric(3));
        assert_eq!(symmetrize(ISO_B, 3, &g), g);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..4), -3i64..4, 0usize..2), 0..5).prop_map(|ts| {
            let mut f = Poly::zero();
            for (e, c, d) in ts {
                f.add_term(trim(e), &BetaScalar::monomial(c, d));
            }
            f
        })
    }

    #[test]
    fn reduced_words_agree() {
        let f = p("x1^3*x2 + 2*x2^2*x3*x4 - b*x1*x4^2 + x3");
        for w in all_perms(5).into_iter().filter(|w| w.length() >= 3).step_by(7) {
            let words = w.all_reduced_words();
            for kind in OperatorKind::ALL {
                let first = apply_word(kind, &words[0], &f);
                for word in words.iter().skip(1).take(3) {
                    assert_eq!(apply_word(kind, word, &f), first);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn braid_relations(f in small_poly(), i in 1usize..4) {
            for kind in OperatorKind::ALL {
                let l = apply_word(kind, &[i, i + 1, i], &f);
                let r = apply_word(kind, &[i + 1, i, i + 1], &f);
                prop_assert_eq!(l, r);
                let far_l = apply_word(kind, &[i, i + 2], &f);
                let far_r = apply_word(kind, &[i + 2, i], &f);
                prop_assert_eq!(far_l, far_r);
            }
        }

        #[test]
        fn quadratic_relations(f in small_poly(), i in 1usize..4) {
            let twice = |k| apply(k, i, &apply(k, i, &f));
            let once = |k| apply(k, i, &f);
            prop_assert!(twice(DD).is_zero());
            prop_assert_eq!(twice(ISO), once(ISO));
            prop_assert_eq!(twice(BAR), -once(BAR));
            prop_assert_eq!(twice(DD_B), once(DD_B).scalar_mul(&BetaScalar::monomial(-1, 1)));
            prop_assert_eq!(twice(ISO_B), once(ISO_B));
            prop_assert_eq!(twice(BAR_B), -once(BAR_B));
        }

        #[test]
        fn symmetric_equivalences(f in small_poly(), i in 1usize..4) {
            let sym = &f + &f.swap_vars(i);
            prop_assert!(apply(DD, i, &sym).is_zero());
            prop_assert_eq!(apply(DD_B, i, &sym), sym.scalar_mul(&BetaScalar::monomial(-1, 1)));
            prop_assert_eq!(apply(ISO_B, i, &sym), sym.clone());
            prop_assert!(apply(BAR_B, i, &sym).is_zero());
            let prod = &sym * &f;
            prop_assert_eq!(apply(ISO_B, i, &prod), &sym * &apply(ISO_B, i, &f));
            prop_assert_eq!(apply(DD_B, i, &prod), &sym * &apply(DD_B, i, &f));
            let not_sym = f.swap_vars(i) != f;
            prop_assert_eq!(not_sym, !apply(DD, i, &f).is_zero());
        }

        #[test]
        fn truncation_compatibility(f in small_poly(), m in 1usize..3) {
            let n = 3;
            for kind in [ISO, ISO_B] {
                let g = symmetrize(kind, n, &f);
                prop_assert_eq!(g.truncate_vars(m), symmetrize(kind, m, &f.truncate_vars(m)));
            }
        }
    }
}
