//! Constructors for the polynomial families: key and Lascoux polynomials with their
//! atoms, shifted P/Q analogues, Schubert and Grothendieck polynomials and their
//! symplectic and orthogonal involution versions.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::compositions::{self as comp, canon, sort_to_partition, sorting_permutation};
use crate::error::{Error, Result};
use crate::operators::{apply, apply_perm, OperatorKind};
use crate::permutations::{code_to_involution, Cell, FpfInvolution, Perm};
use crate::polyring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms, non_camel_case_types)]
pub enum BasisId {
    KEY,
    ATOM,
    LASCOUX,
    LASCOUX_ATOM,
    PKEY,
    PATOM,
    QKEY,
    QATOM,
    PLASCOUX,
    PLASCOUX_ATOM,
    LTILDE_O,
    LTILDE_O_ATOM,
    QLASCOUX,
    SCHUBERT,
    GROTHENDIECK,
    INV_SCHUB_SP,
    INV_SCHUB_O,
    GROTH_SP,
    GROTH_O_VEX,
}

/// What kind of object indexes a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    Composition,
    Permutation,
    Involution,
    FpfInvolution,
}

impl BasisId {
    pub const ALL: [BasisId; 19] = [
        BasisId::KEY,
        BasisId::ATOM,
        BasisId::LASCOUX,
        BasisId::LASCOUX_ATOM,
        BasisId::PKEY,
        BasisId::PATOM,
        BasisId::QKEY,
        BasisId::QATOM,
        BasisId::PLASCOUX,
        BasisId::PLASCOUX_ATOM,
        BasisId::LTILDE_O,
        BasisId::LTILDE_O_ATOM,
        BasisId::QLASCOUX,
        BasisId::SCHUBERT,
        BasisId::GROTHENDIECK,
        BasisId::INV_SCHUB_SP,
        BasisId::INV_SCHUB_O,
        BasisId::GROTH_SP,
        BasisId::GROTH_O_VEX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasisId::KEY => "key",
            BasisId::ATOM => "atom",
            BasisId::LASCOUX => "lascoux",
            BasisId::LASCOUX_ATOM => "lascoux_atom",
            BasisId::PKEY => "pkey",
            BasisId::PATOM => "patom",
            BasisId::QKEY => "qkey",
            BasisId::QATOM => "qatom",
            BasisId::PLASCOUX => "plascoux",
            BasisId::PLASCOUX_ATOM => "plascoux_atom",
            BasisId::LTILDE_O => "ltilde_o",
            BasisId::LTILDE_O_ATOM => "ltilde_o_atom",
            BasisId::QLASCOUX => "qlascoux",
            BasisId::SCHUBERT => "schubert",
            BasisId::GROTHENDIECK => "grothendieck",
            BasisId::INV_SCHUB_SP => "inv_schub_sp",
            BasisId::INV_SCHUB_O => "inv_schub_o",
            BasisId::GROTH_SP => "groth_sp",
            BasisId::GROTH_O_VEX => "groth_o_vex",
        }
    }

    pub fn index_kind(self) -> IndexKind {
        match self {
            BasisId::SCHUBERT | BasisId::GROTHENDIECK => IndexKind::Permutation,
            BasisId::INV_SCHUB_O | BasisId::GROTH_O_VEX => IndexKind::Involution,
            BasisId::INV_SCHUB_SP | BasisId::GROTH_SP => IndexKind::FpfInvolution,
            _ => IndexKind::Composition,
        }
    }

    /// Whether the family involves β.
    pub fn is_k_theoretic(self) -> bool {
        matches!(
            self,
            BasisId::LASCOUX
                | BasisId::LASCOUX_ATOM
                | BasisId::PLASCOUX
                | BasisId::PLASCOUX_ATOM
                | BasisId::LTILDE_O
                | BasisId::LTILDE_O_ATOM
                | BasisId::QLASCOUX
                | BasisId::GROTHENDIECK
                | BasisId::GROTH_SP
                | BasisId::GROTH_O_VEX
        )
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let t = match t.as_str() {
            "q_lascoux" => "qlascoux",
            "inv_schubert_sp" => "inv_schub_sp",
            "inv_schubert_o" => "inv_schub_o",
            other => other,
        };
        BasisId::ALL
            .iter()
            .copied()
            .find(|b| b.name() == t)
            .ok_or_else(|| Error::parse(format!("unknown basis {s:?}")))
    }
}

/// A parsed index for some family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Index {
    Composition(Vec<u32>),
    Permutation(Perm),
    Fpf(FpfInvolution),
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Composition(a) => write!(f, "{}", comp::label(a)),
            Index::Permutation(w) => write!(f, "{w}"),
            Index::Fpf(z) => write!(f, "{z}"),
        }
    }
}

pub fn parse_index(id: BasisId, s: &str) -> Result<Index> {
    Ok(match id.index_kind() {
        IndexKind::Composition => Index::Composition(comp::parse(s)?),
        IndexKind::Permutation => Index::Permutation(Perm::parse(s)?),
        IndexKind::Involution => {
            let z = Perm::parse(s)?;
            if !z.is_involution() {
                return Err(Error::domain(format!("{z} is not an involution")));
            }
            Index::Permutation(z)
        }
        IndexKind::FpfInvolution => Index::Fpf(FpfInvolution::parse(s)?),
    })
}

/// Evaluate a family at a parsed index.
pub fn eval(id: BasisId, index: &Index) -> Result<Poly> {
    match (id, index) {
        (BasisId::KEY, Index::Composition(a)) => Ok(key(a)),
        (BasisId::ATOM, Index::Composition(a)) => Ok(atom(a)),
        (BasisId::LASCOUX, Index::Composition(a)) => Ok(lascoux(a)),
        (BasisId::LASCOUX_ATOM, Index::Composition(a)) => Ok(lascoux_atom(a)),
        (BasisId::PKEY, Index::Composition(a)) => pkey(a),
        (BasisId::PATOM, Index::Composition(a)) => patom(a),
        (BasisId::QKEY, Index::Composition(a)) => qkey(a),
        (BasisId::QATOM, Index::Composition(a)) => qatom(a),
        (BasisId::PLASCOUX, Index::Composition(a)) => plascoux(a),
        (BasisId::PLASCOUX_ATOM, Index::Composition(a)) => plascoux_atom(a),
        (BasisId::LTILDE_O, Index::Composition(a)) => ltilde_o(a),
        (BasisId::LTILDE_O_ATOM, Index::Composition(a)) => ltilde_o_atom(a),
        (BasisId::QLASCOUX, Index::Composition(a)) => q_lascoux(a),
        (BasisId::SCHUBERT, Index::Permutation(w)) => Ok(schubert(w)),
        (BasisId::GROTHENDIECK, Index::Permutation(w)) => Ok(grothendieck(w)),
        (BasisId::INV_SCHUB_O, Index::Permutation(z)) => inv_schubert_o(z),
        (BasisId::GROTH_O_VEX, Index::Permutation(z)) => groth_o_vex(z),
        (BasisId::INV_SCHUB_SP, Index::Fpf(z)) => Ok(inv_schubert_sp(z)),
        (BasisId::GROTH_SP, Index::Fpf(z)) => Ok(groth_sp(z)),
        _ => Err(Error::domain(format!("index {index} does not fit basis {id}"))),
    }
}

pub fn eval_str(id: BasisId, s: &str) -> Result<Poly> {
    eval(id, &parse_index(id, s)?)
}

// ---------------------------------------------------------------------------
// memo cache

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Tag {
    Key,
    Lascoux,
    Schubert,
    Groth,
    InvSp,
    InvO,
    GrothSp,
    GrothO,
}

type Cache = RwLock<HashMap<(Tag, Vec<u32>), Poly>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn lookup(tag: Tag, key: &[u32]) -> Option<Poly> {
    cache().read().unwrap().get(&(tag, key.to_vec())).cloned()
}

fn store(tag: Tag, key: &[u32], p: &Poly) {
    cache().write().unwrap().insert((tag, key.to_vec()), p.clone());
}

// ---------------------------------------------------------------------------
// key and Lascoux families

fn demazure(kind: OperatorKind, a: &[u32]) -> Poly {
    apply_perm(kind, &sorting_permutation(a), &Poly::x_pow(&sort_to_partition(a)))
}

fn cached_demazure(tag: Tag, kind: OperatorKind, a: &[u32]) -> Poly {
    let a = canon(a);
    if let Some(p) = lookup(tag, &a) {
        return p;
    }
    let p = demazure(kind, &a);
    store(tag, &a, &p);
    p
}

/// `κ_α = π_{u(α)} x^{λ(α)}`.
pub fn key(a: &[u32]) -> Poly {
    cached_demazure(Tag::Key, OperatorKind::ISO, a)
}

/// `κ̄_α = π̄_{u(α)} x^{λ(α)}`.
pub fn atom(a: &[u32]) -> Poly {
    demazure(OperatorKind::BAR, a)
}

pub fn lascoux(a: &[u32]) -> Poly {
    cached_demazure(Tag::Lascoux, OperatorKind::ISO_B, a)
}

pub fn lascoux_atom(a: &[u32]) -> Poly {
    demazure(OperatorKind::BAR_B, a)
}

fn prod_cells(cells: impl IntoIterator<Item = Cell>, k_theoretic: bool) -> Poly {
    let mut p = Poly::one();
    for (i, j) in cells {
        let f = if k_theoretic {
            Poly::var(i).oplus(&Poly::var(j))
        } else {
            &Poly::var(i) + &Poly::var(j)
        };
        p = &p * &f;
    }
    p
}

/// `∏_{(i,j) ∈ D_μ} (x_i + x_{i+j})`.
pub fn p_base(mu: &[u32]) -> Poly {
    prod_cells(comp::young_cells(mu).into_iter().map(|(i, j)| (i, i + j)), false)
}

/// `∏_{(i,j) ∈ D_μ} (x_i + x_{i+j-1})`.
pub fn q_base(mu: &[u32]) -> Poly {
    prod_cells(comp::young_cells(mu).into_iter().map(|(i, j)| (i, i + j - 1)), false)
}

pub fn pkey_wmu(w: &Perm, mu: &[u32]) -> Poly {
    apply_perm(OperatorKind::ISO, w, &p_base(mu))
}

pub fn patom_wmu(w: &Perm, mu: &[u32]) -> Poly {
    apply_perm(OperatorKind::BAR, w, &p_base(mu))
}

pub fn qkey_wmu(w: &Perm, mu: &[u32]) -> Poly {
    apply_perm(OperatorKind::ISO, w, &q_base(mu))
}

pub fn qatom_wmu(w: &Perm, mu: &[u32]) -> Poly {
    apply_perm(OperatorKind::BAR, w, &q_base(mu))
}

fn require_symmetric(a: &[u32], what: &str) -> Result<()> {
    if comp::is_symmetric(a) {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} needs a symmetric composition, got {}", comp::label(a))))
    }
}

/// `κ^P_α`. Defined through `half_<(λ(α))`, which only needs `α` symmetric.
pub fn pkey(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "pkey")?;
    Ok(pkey_wmu(&sorting_permutation(a), &comp::half_lt(&sort_to_partition(a))?))
}

pub fn patom(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "patom")?;
    Ok(patom_wmu(&sorting_permutation(a), &comp::half_lt(&sort_to_partition(a))?))
}

pub fn qkey(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "qkey")?;
    Ok(qkey_wmu(&sorting_permutation(a), &comp::half_le(&sort_to_partition(a))?))
}

pub fn qatom(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "qatom")?;
    Ok(qatom_wmu(&sorting_permutation(a), &comp::half_le(&sort_to_partition(a))?))
}

fn shifted_lascoux(kind: OperatorKind, a: &[u32], weak: bool) -> Poly {
    let la = sort_to_partition(a);
    let cells = comp::young_cells(&la).into_iter().filter(|&(i, j)| i > j || (weak && i == j));
    apply_perm(kind, &sorting_permutation(a), &prod_cells(cells, true))
}

/// `L^P_α = π^β_{u(α)} ∏_{(i,j) ∈ D_λ, i > j} (x_i ⊕ x_j)`.
pub fn plascoux(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "plascoux")?;
    Ok(shifted_lascoux(OperatorKind::ISO_B, a, false))
}

pub fn plascoux_atom(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "plascoux_atom")?;
    Ok(shifted_lascoux(OperatorKind::BAR_B, a, false))
}

/// `L̃^O_α = π^β_{u(α)} ∏_{(i,j) ∈ D_λ, i ≥ j} (x_i ⊕ x_j)`.
pub fn ltilde_o(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "ltilde_o")?;
    Ok(shifted_lascoux(OperatorKind::ISO_B, a, true))
}

pub fn ltilde_o_atom(a: &[u32]) -> Result<Poly> {
    require_symmetric(a, "ltilde_o_atom")?;
    Ok(shifted_lascoux(OperatorKind::BAR_B, a, true))
}

/// `L^Q_{c(z)} = G^O_z` for vexillary involutions `z`.
pub fn q_lascoux(a: &[u32]) -> Result<Poly> {
    let z = code_to_involution(a)?;
    if !z.is_vexillary() {
        return Err(Error::domain(format!("code {} gives the non-vexillary involution {}", comp::label(a), z.cycle_string())));
    }
    groth_o_vex(&z)
}

// ---------------------------------------------------------------------------
// Schubert and Grothendieck

fn first_ascent(w: &Perm) -> Option<usize> {
    (1..w.n()).find(|&i| !w.has_descent(i))
}

fn schubert_like(w: &Perm, tag: Tag, kind: OperatorKind) -> Poly {
    let key = w.one_line().to_vec();
    if let Some(p) = lookup(tag, &key) {
        return p;
    }
    let p = if w.is_dominant() {
        Poly::x_pow(&w.code())
    } else {
        let i = first_ascent(w).expect("a non-dominant permutation has an ascent in its window");
        apply(kind, i, &schubert_like(&w.mul_s_right(i), tag, kind))
    };
    store(tag, &key, &p);
    p
}

/// `S_w`, from `S_w = ∂_i S_{w s_i}` at an ascent, down from a dominant element.
pub fn schubert(w: &Perm) -> Poly {
    schubert_like(w, Tag::Schubert, OperatorKind::DD)
}

pub fn grothendieck(w: &Perm) -> Poly {
    schubert_like(w, Tag::Groth, OperatorKind::DD_B)
}

fn fpf_key(z: &FpfInvolution) -> Vec<u32> {
    z.one_line().to_vec()
}

fn sp_like(z: &FpfInvolution, tag: Tag, kind: OperatorKind, k_theoretic: bool) -> Poly {
    let key = fpf_key(z);
    if let Some(p) = lookup(tag, &key) {
        return p;
    }
    let p = if z.is_dominant() {
        prod_cells(z.diagram_sp(), k_theoretic)
    } else {
        let i = (1..z.n())
            .find(|&i| z.get(i) < z.get(i + 1))
            .expect("a non-dominant fpf involution has an ascent in its window");
        apply(kind, i, &sp_like(&z.conj_s(i), tag, kind, k_theoretic))
    };
    store(tag, &key, &p);
    p
}

/// `S^Sp_z`.
pub fn inv_schubert_sp(z: &FpfInvolution) -> Poly {
    sp_like(z, Tag::InvSp, OperatorKind::DD, false)
}

/// `G^Sp_z`.
pub fn groth_sp(z: &FpfInvolution) -> Poly {
    sp_like(z, Tag::GrothSp, OperatorKind::DD_B, true)
}

fn require_involution(z: &Perm) -> Result<()> {
    if z.is_involution() {
        Ok(())
    } else {
        Err(Error::domain(format!("{z} is not an involution")))
    }
}

/// `S^O_z`.
pub fn inv_schubert_o(z: &Perm) -> Result<Poly> {
    require_involution(z)?;
    inv_o_rec(z)
}

fn inv_o_rec(z: &Perm) -> Result<Poly> {
    let key = z.one_line().to_vec();
    if let Some(p) = lookup(Tag::InvO, &key) {
        return Ok(p);
    }
    let p = if z.is_dominant() {
        prod_cells(z.diagram_o(), false)
    } else {
        let i = first_ascent(z).expect("a non-dominant involution has an ascent in its window");
        if z.get(i) == i && z.get(i + 1) == i + 1 {
            let up = inv_o_rec(&z.mul_s_right(i))?;
            apply(OperatorKind::DD, i, &up)
                .exact_div_int(2)
                .map_err(|_| Error::Invariant(format!("odd coefficient in the S^O step at {}", z.cycle_string())))?
        } else {
            apply(OperatorKind::DD, i, &inv_o_rec(&z.conj_s(i))?)
        }
    };
    store(Tag::InvO, &key, &p);
    Ok(p)
}

/// `G^O_z` for vexillary `z`, pulled back along a chain of vexillary conjugations
/// that ends at a dominant involution.
pub fn groth_o_vex(z: &Perm) -> Result<Poly> {
    require_involution(z)?;
    if !z.is_vexillary() {
        return Err(Error::domain(format!("{} is not vexillary", z.cycle_string())));
    }
    if let Some(p) = lookup(Tag::GrothO, z.one_line()) {
        return Ok(p);
    }
    let budget = z.visible_descents().iter().max().copied().unwrap_or(0) + z.length() + 2;
    let mut seen = HashSet::new();
    let chain = vexillary_chain(z, budget, &mut seen).ok_or_else(|| Error::NoChain(z.cycle_string()))?;
    // chain = [(z_0 = z, i_0), (z_1, i_1), ...], ending at a dominant z_k with no step
    let (top, _) = chain.last().unwrap();
    let mut p = match lookup(Tag::GrothO, top.one_line()) {
        Some(p) => p,
        None => prod_cells(top.diagram_o(), true),
    };
    store(Tag::GrothO, top.one_line(), &p);
    for k in (0..chain.len() - 1).rev() {
        let (y, i) = &chain[k];
        p = apply(OperatorKind::DD_B, i.unwrap(), &p);
        store(Tag::GrothO, y.one_line(), &p);
    }
    Ok(p)
}

type Chain = Vec<(Perm, Option<usize>)>;

fn vexillary_chain(z: &Perm, budget: usize, seen: &mut HashSet<Perm>) -> Option<Chain> {
    if z.is_dominant() || lookup(Tag::GrothO, z.one_line()).is_some() {
        return Some(vec![(z.clone(), None)]);
    }
    if !seen.insert(z.clone()) {
        return None;
    }
    for i in 1..budget {
        if z.get(i) >= z.get(i + 1) {
            continue;
        }
        let y = z.conj_s(i);
        if y == *z || y.n() > budget || !y.is_vexillary() {
            continue;
        }
        if let Some(mut rest) = vexillary_chain(&y, budget, seen) {
            rest.insert(0, (z.clone(), Some(i)));
            return Some(rest);
        }
    }
    None
}

/// `L̃^O_λ` at a symmetric partition agrees with `G^O` of the dominant involution of that shape.
pub fn dominant_involution_of_shape(la: &[u32]) -> Result<Perm> {
    let la = canon(la);
    if !comp::is_partition(&la) || comp::transpose(&la) != la {
        return Err(Error::domain(format!("{la:?} is not a symmetric partition")));
    }
    Perm::dominant_of_shape(&la)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{arrangements, is_skew_symmetric, skew_symmetric_partitions, symmetric_partitions};
    use crate::permutations::{all_fpf_involutions, all_involutions, all_perms};
    use crate::polyring::{BetaScalar, Grading};

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn keys(list: &[&[u32]]) -> Poly {
        list.iter().fold(Poly::zero(), |acc, a| &acc + &key(a))
    }

    #[test]
    fn key_and_atom_example() {
        assert_eq!(key(&[1, 0, 2, 1]).len(), 8);
        assert_eq!(atom(&[1, 0, 2, 1]), p("x1*x3^2*x4 + x1*x2*x3*x4"));
        assert_eq!(key(&[]), Poly::one());
    }

    #[test]
    fn lascoux_specializes_to_key() {
        for k in 0..=5 {
            for la in crate::compositions::partitions(k) {
                for a in arrangements(&la, la.len() + 1) {
                    assert_eq!(lascoux(&a).at_beta_zero(), key(&a));
                    assert_eq!(lascoux_atom(&a).at_beta_zero(), atom(&a));
                    assert!(lascoux(&a).is_homogeneous(Grading::XMinusBeta));
                }
            }
        }
    }

    #[test]
    fn shifted_key_examples() {
        let w = Perm::parse("3142").unwrap();
        assert_eq!(pkey_wmu(&w, &[3, 1]), keys(&[&[0, 0, 2, 2], &[0, 0, 3, 1], &[0, 1, 1, 2]]));
        assert!(qatom_wmu(&w, &[3, 1]).is_zero());
        let q = qkey(&[2, 0, 3, 1]).unwrap();
        assert_eq!(q, keys(&[&[1, 0, 3], &[2, 0, 2], &[1, 0, 2, 1]]).mul_int(4));
        assert_eq!(pkey(&[2, 2]).unwrap(), p("x1 + x2"));
        assert_eq!(qkey(&[]).unwrap(), Poly::one());
        assert!(qkey(&[2]).is_err());
    }

    #[test]
    fn hook_shapes() {
        let word = |m: u32, zeros: u32, ones: u32| -> Vec<u32> {
            let mut a = vec![m];
            a.extend(std::iter::repeat(0).take(zeros as usize));
            a.extend(std::iter::repeat(1).take(ones as usize));
            a
        };
        for n in 1..=6u32 {
            let mut p_side = key(&word(0, 0, n));
            for m in 2..=n {
                p_side = &p_side + &key(&word(m, m, n - m));
            }
            assert_eq!(pkey_wmu(&Perm::identity(), &[n]), p_side, "n = {n}");
            let q_side = (1..=n).fold(Poly::zero(), |acc, m| &acc + &key(&word(m, m - 1, n - m)));
            assert_eq!(qkey_wmu(&Perm::identity(), &[n]), q_side.mul_int(2), "n = {n}");
        }
    }

    #[test]
    fn qkey_divisibility_and_degree() {
        for k in 0..=8 {
            for la in symmetric_partitions(k) {
                for a in arrangements(&la, la.len() + 1) {
                    let hl = comp::half_le(&la).unwrap();
                    let q = qkey(&a).unwrap();
                    assert!(q.exact_div_int(1u64 << hl.len()).is_ok());
                    assert!(q.is_homogeneous(Grading::X));
                    assert_eq!(q.max_x_degree().unwrap_or(0), hl.iter().sum::<u32>());
                }
            }
        }
    }

    #[test]
    fn plascoux_examples() {
        let l = |a: &[u32]| lascoux(a);
        let b = |k: usize| BetaScalar::beta_pow(k);
        let expected = [
            l(&[0, 0, 2, 2]),
            l(&[0, 0, 3, 1]),
            l(&[0, 1, 1, 2]),
            l(&[0, 0, 3, 2]).scalar_mul(&b(1)),
            l(&[0, 1, 2, 2]).scalar_mul(&b(1)),
            l(&[0, 1, 3, 1]).scalar_mul(&b(1)),
            l(&[0, 1, 3, 2]).scalar_mul(&b(2)),
        ]
        .iter()
        .fold(Poly::zero(), |acc, t| &acc + t);
        assert_eq!(plascoux(&[3, 1, 4, 3]).unwrap(), expected);
        assert_eq!(plascoux(&[1, 2]).unwrap(), p("x2 + x1 + b*x1*x2"));
        assert_eq!(plascoux(&[]).unwrap(), Poly::one());
        assert_eq!(
            ltilde_o(&[0, 1]).unwrap(),
            p("2*x2 + 2*x1 + b*x2^2 + 3*b*x1*x2 + b*x1^2 + b^2*x1*x2^2 + b^2*x1^2*x2")
        );
        assert_eq!(ltilde_o(&[]).unwrap(), Poly::one());
    }

    #[test]
    fn shifted_lascoux_specialize() {
        for k in 0..=9 {
            for la in skew_symmetric_partitions(k) {
                for a in arrangements(&la, la.len() + 1) {
                    assert_eq!(plascoux(&a).unwrap().at_beta_zero(), pkey(&a).unwrap());
                    assert_eq!(plascoux_atom(&a).unwrap().at_beta_zero(), patom(&a).unwrap());
                }
            }
            for la in symmetric_partitions(k) {
                for a in arrangements(&la, la.len() + 1).into_iter().take(6) {
                    assert_eq!(ltilde_o(&a).unwrap().at_beta_zero(), qkey(&a).unwrap());
                    assert_eq!(ltilde_o_atom(&a).unwrap().at_beta_zero(), qatom(&a).unwrap());
                }
            }
        }
    }

    #[test]
    fn grothendieck_example() {
        let g = grothendieck(&Perm::parse("2143").unwrap());
        assert_eq!(
            g,
            p("x1*x3 + x1*x2 + x1^2 + b*x1*x2*x3 + b*x1^2*x3 + b*x1^2*x2 + b^2*x1^2*x2*x3")
        );
    }

    #[test]
    fn schubert_against_longest_element() {
        // independent route: S_w = ∂_{w^{-1} w_0} x^δ
        for n in 1..=5 {
            let w0: Vec<u32> = (1..=n as u32).rev().collect();
            let w0 = Perm::from_one_line(&w0).unwrap();
            let delta: Vec<u32> = (0..n as u32).rev().collect();
            for w in all_perms(n) {
                let v = w.inverse().compose(&w0);
                let s = apply_perm(OperatorKind::DD, &v, &Poly::x_pow(&delta));
                assert_eq!(schubert(&w), s, "{w}");
                let g = apply_perm(OperatorKind::DD_B, &v, &Poly::x_pow(&delta));
                assert_eq!(grothendieck(&w), g, "{w}");
                assert_eq!(grothendieck(&w).at_beta_zero(), schubert(&w));
                assert_eq!(grothendieck(&w).homogeneous_part(w.length() as i64, Grading::X), schubert(&w));
            }
        }
    }

    #[test]
    fn involution_schubert_examples() {
        let z = Perm::parse("321").unwrap();
        assert_eq!(inv_schubert_o(&z).unwrap(), p("2*x1^2 + 2*x1*x2"));
        let y = FpfInvolution::parse("(1,3)(2,5)(4,7)(6,8)").unwrap();
        let expected = &pkey(&[3, 3, 0, 3]).unwrap() + &pkey(&[1, 4, 0, 1, 0, 1]).unwrap();
        assert_eq!(inv_schubert_sp(&y), expected);
        let z = Perm::parse("(1,2)(3,4)").unwrap();
        assert_eq!(inv_schubert_o(&z).unwrap(), qkey(&[2, 0, 1]).unwrap().mul_int(2));
        assert_eq!(inv_schubert_sp(&FpfInvolution::one()), Poly::one());
    }

    #[test]
    fn groth_sp_examples() {
        let z = FpfInvolution::from_window(&[4, 3, 2, 1]).unwrap();
        let expected = &Poly::var(2).oplus(&Poly::var(1)) * &Poly::var(3).oplus(&Poly::var(1));
        assert_eq!(groth_sp(&z), expected);
        assert_eq!(groth_sp(&FpfInvolution::one()), Poly::one());
        for y in all_fpf_involutions(6) {
            assert_eq!(groth_sp(&y).at_beta_zero(), inv_schubert_sp(&y));
            assert!(groth_sp(&y).is_homogeneous(Grading::XMinusBeta));
        }
    }

    #[test]
    fn groth_o_examples() {
        let g23 = groth_o_vex(&Perm::parse("(2,3)").unwrap()).unwrap();
        assert_eq!(
            g23,
            p("2*x2 + 2*x1 + b*x2^2 + 4*b*x1*x2 + b*x1^2 + 2*b^2*x1*x2^2 + 2*b^2*x1^2*x2 + b^3*x1^2*x2^2")
        );
        assert_eq!(q_lascoux(&[0, 1]).unwrap(), g23);
        assert_eq!(groth_o_vex(&Perm::identity()).unwrap(), Poly::one());
        assert_eq!(q_lascoux(&[]).unwrap(), Poly::one());
        assert!(groth_o_vex(&Perm::parse("2143").unwrap()).is_err());
    }

    #[test]
    fn groth_o_specializes() {
        for z in all_involutions(6) {
            if z.is_vexillary() {
                let g = groth_o_vex(&z).unwrap();
                assert_eq!(g.at_beta_zero(), inv_schubert_o(&z).unwrap(), "{}", z.cycle_string());
                let c = z.code();
                assert_eq!(q_lascoux(&c).unwrap().at_beta_zero(), qkey(&c).unwrap(), "{}", z.cycle_string());
            }
        }
    }

    #[test]
    fn ltilde_dominant_matches_groth_o() {
        for k in 0..=9 {
            for la in symmetric_partitions(k) {
                let z = dominant_involution_of_shape(&la).unwrap();
                assert!(z.is_involution());
                assert_eq!(ltilde_o(&la).unwrap(), groth_o_vex(&z).unwrap());
            }
        }
    }

    #[test]
    fn alpha1_theorem_small() {
        for k in 0..=7 {
            for la in symmetric_partitions(k) {
                for a in arrangements(&la, la.len() + 2) {
                    if a.first().copied().unwrap_or(0) != 0 {
                        continue;
                    }
                    let e = comp::eta(&a).unwrap();
                    assert!(is_skew_symmetric(&e));
                    let d = comp::diag(&a).unwrap();
                    assert_eq!(qkey(&a).unwrap(), pkey(&e).unwrap().mul_int(1u64 << d), "{a:?}");
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        for b in BasisId::ALL {
            assert_eq!(b.name().parse::<BasisId>().unwrap(), b);
        }
        assert!("nope".parse::<BasisId>().is_err());
        assert_eq!(eval_str(BasisId::KEY, "1021").unwrap(), key(&[1, 0, 2, 1]));
        assert!(eval_str(BasisId::GROTH_O_VEX, "231").is_err());
    }
}
