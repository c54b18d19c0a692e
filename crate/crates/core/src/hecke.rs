//! 0-Hecke monoid words, bounded Hecke factorizations and the symplectic `∗`-action.

use std::collections::BTreeSet;
use std::fmt;

use crate::bases::{self, Index};
use crate::error::{Error, Result};
use crate::expand::grothendieck_expand;
use crate::permutations::{FpfInvolution, Perm};
use crate::polyring::{BetaScalar, Poly};

/// Demazure product `s_{i1} ∘ s_{i2} ∘ ⋯`.
pub fn demazure_product(word: &[usize]) -> Perm {
    word.iter().fold(Perm::identity(), |w, &i| w.demazure_s(i))
}

pub fn is_hecke_word(w: &Perm, word: &[usize]) -> bool {
    word.iter().all(|&i| i >= 1) && demazure_product(word) == *w
}

/// Blocks `a¹, a², …` of strictly decreasing letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeckeFactorization {
    pub blocks: Vec<Vec<usize>>,
}

impl HeckeFactorization {
    pub fn weight(&self) -> Vec<u32> {
        crate::compositions::canon(&self.blocks.iter().map(|b| b.len() as u32).collect::<Vec<_>>())
    }

    pub fn word(&self) -> Vec<usize> {
        self.blocks.concat()
    }

    /// `i ≤ min(aⁱ)` for every nonempty block.
    pub fn is_bounded(&self) -> bool {
        self.blocks.iter().enumerate().all(|(k, b)| b.iter().all(|&x| x > k))
    }

    pub fn is_valid(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|p| p[0] > p[1]))
    }
}

impl fmt::Display for HeckeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| if b.is_empty() { "∅".to_string() } else { b.iter().map(|x| x.to_string()).collect() })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every bounded Hecke factorization of `w`, with `n - 1` blocks for `w ∈ S_n` minimal.
pub fn bhf_enumerate(w: &Perm) -> Vec<HeckeFactorization> {
    let m = w.n().saturating_sub(1);
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    bhf_rec(w, m, 1, Perm::identity(), &mut blocks, &mut out);
    out.sort();
    out
}

fn bhf_rec(
    w: &Perm,
    m: usize,
    block: usize,
    prod: Perm,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<HeckeFactorization>,
) {
    if block > m {
        if prod == *w {
            out.push(HeckeFactorization { blocks: blocks.clone() });
        }
        return;
    }
    // letters of block `block` lie in [block, m]; a decreasing word is a subset
    let letters: Vec<usize> = (block..=m).rev().collect();
    for mask in 0u32..(1 << letters.len()) {
        let word: Vec<usize> = letters.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect();
        let next = word.iter().fold(prod.clone(), |p, &i| p.demazure_s(i));
        if !next.bruhat_leq(w) {
            continue;
        }
        blocks.push(word);
        bhf_rec(w, m, block + 1, next, blocks, out);
        blocks.pop();
    }
}

/// `Σ_{a ∈ BHF(w)} β^{|wt(a)| - ℓ(w)} x^{wt(a)}`.
pub fn knutson_miller_sum(w: &Perm) -> Poly {
    let l = w.length();
    let mut f = Poly::zero();
    for a in bhf_enumerate(w) {
        let wt = a.weight();
        let d: u32 = wt.iter().sum();
        f.add_term(wt, &BetaScalar::beta_pow(d as usize - l));
    }
    f
}

/// `z ∗ s_i`, with `None` standing for the absorbing element ⊥.
pub fn star_apply(z: Option<&FpfInvolution>, i: usize) -> Option<FpfInvolution> {
    let z = z?;
    let (a, b) = (z.get(i), z.get(i + 1));
    if a == i + 1 {
        None
    } else if a < b {
        Some(z.conj_s(i))
    } else {
        Some(z.clone())
    }
}

/// Whether `1_fpf ∗ s_{i1} ∗ s_{i2} ∗ ⋯ = z`.
pub fn is_sp_hecke_word(z: &FpfInvolution, word: &[usize]) -> bool {
    let mut cur = Some(FpfInvolution::one());
    for &i in word {
        if i == 0 {
            return false;
        }
        cur = star_apply(cur.as_ref(), i);
    }
    cur.as_ref() == Some(z)
}

/// `B^Sp(z)`, read off from the Grothendieck expansion of `G^Sp_z`, whose coefficients
/// must be exactly `β^{ℓ(w) - |D^Sp(z)|}`.
pub fn bsp(z: &FpfInvolution) -> Result<BTreeSet<Perm>> {
    let e = grothendieck_expand(&bases::groth_sp(z))?;
    if !e.is_complete() {
        return Err(Error::Invariant(format!("Grothendieck expansion of G^Sp_{} left a residual", z.cycle_string())));
    }
    let d = z.diagram_sp().len();
    let mut out = BTreeSet::new();
    for (idx, c) in e.terms {
        let Index::Permutation(w) = idx else { unreachable!() };
        let ok = w.length() >= d && c == BetaScalar::beta_pow(w.length() - d);
        if !ok {
            return Err(Error::Invariant(format!(
                "coefficient of G_{w} in G^Sp_{} is {c}, expected β^(ℓ(w)-{d})",
                z.cycle_string()
            )));
        }
        out.insert(w);
    }
    Ok(out)
}

/// Every right descent of every `w ∈ B^Sp(z)` is at most some fpf visible descent of `z`.
pub fn desv_cover_check(z: &FpfInvolution) -> Result<bool> {
    let top = z.visible_descents().iter().max().copied().unwrap_or(0);
    Ok(bsp(z)?.iter().all(|w| w.descents().iter().all(|&i| i <= top)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::{all_fpf_involutions, all_perms};

    fn fac(s: &[&str]) -> HeckeFactorization {
        HeckeFactorization {
            blocks: s.iter().map(|b| b.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect()).collect(),
        }
    }

    #[test]
    fn bhf_2143() {
        let w = Perm::parse("2143").unwrap();
        let got = bhf_enumerate(&w);
        let mut want: Vec<HeckeFactorization> = [
            ["1", "", "3"],
            ["1", "3", ""],
            ["31", "", ""],
            ["1", "3", "3"],
            ["31", "", "3"],
            ["31", "3", ""],
            ["31", "3", "3"],
        ]
        .iter()
        .map(|b| fac(b))
        .collect();
        want.sort();
        assert_eq!(got, want);
        assert!(got.iter().all(|a| a.is_bounded() && a.is_valid() && demazure_product(&a.word()) == w));
        assert_eq!(bhf_enumerate(&Perm::identity()), vec![HeckeFactorization { blocks: vec![] }]);
    }

    #[test]
    fn knutson_miller_reproduces_grothendieck() {
        for n in 1..=4 {
            for w in all_perms(n) {
                assert_eq!(knutson_miller_sum(&w), bases::grothendieck(&w), "{w}");
            }
        }
    }

    #[test]
    fn star_action() {
        let one = FpfInvolution::one();
        assert_eq!(star_apply(Some(&one), 1), None);
        assert_eq!(star_apply(None, 2), None);
        let z = star_apply(Some(&one), 2).unwrap();
        assert_eq!(z, FpfInvolution::parse("(1,3)(2,4)").unwrap());
        assert!(is_sp_hecke_word(&z, &[2]));
        assert!(!is_sp_hecke_word(&z, &[1, 2]));
        let top = star_apply(Some(&z), 1).unwrap();
        assert_eq!(top, FpfInvolution::parse("(1,4)(2,3)").unwrap());
        // at a descent the action is idempotent
        assert_eq!(star_apply(Some(&top), 1), Some(top.clone()));
        assert!(is_sp_hecke_word(&top, &[2, 1, 1, 3]));
    }

    #[test]
    fn bsp_example() {
        let z = FpfInvolution::parse("(1,4)(2,3)").unwrap();
        let got: Vec<String> = bsp(&z).unwrap().iter().map(|w| w.to_string()).collect();
        let mut want: Vec<String> = ["1342", "3142", "3124"].iter().map(|s| Perm::parse(s).unwrap().to_string()).collect();
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
        assert_eq!(bsp(&FpfInvolution::one()).unwrap().into_iter().collect::<Vec<_>>(), vec![Perm::identity()]);
    }

    #[test]
    fn bsp_properties() {
        for z in all_fpf_involutions(6) {
            let b = bsp(&z).unwrap();
            for w in &b {
                let win = w.window(z.n());
                for i in (1..z.n()).step_by(2) {
                    let p = |v: usize| win.iter().position(|&x| x as usize == v).unwrap();
                    assert!(p(i) < p(i + 1), "{z} {w}");
                }
            }
            assert!(desv_cover_check(&z).unwrap(), "{z}");
        }
        let z = FpfInvolution::parse("(1,4)(2,3)").unwrap();
        let top = bsp(&z).unwrap().iter().flat_map(|w| w.descents()).max().unwrap();
        assert_eq!(top, 3);
        assert!(z.visible_descents().iter().max().copied().unwrap() >= 3);
    }

    #[test]
    fn sp_hecke_words_land_in_bsp() {
        let n = 6;
        for z in all_fpf_involutions(n) {
            let b = bsp(&z).unwrap();
            // words of length up to |D^Sp(z)| + 1 over letters < n
            let maxlen = z.diagram_sp().len() + 1;
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            while let Some(word) = stack.pop() {
                if is_sp_hecke_word(&z, &word) {
                    assert!(b.contains(&demazure_product(&word)), "{z} {word:?}");
                }
                if word.len() < maxlen {
                    for i in 1..n {
                        let mut w2 = word.clone();
                        w2.push(i);
                        stack.push(w2);
                    }
                }
            }
        }
    }
}
