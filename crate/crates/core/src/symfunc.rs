//! Symmetric functions truncated to finitely many variables: Schur, Schur P and Q,
//! Stanley and stable Grothendieck, K-theoretic GP and GQ, and their expansions into
//! Schur and symmetric Grothendieck polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::bases;
use crate::compositions::{self as comp, canon};
use crate::error::{Error, Result};
use crate::expand::{key_expand, lascoux_expand};
use crate::operators::{symmetrize, OperatorKind};
use crate::permutations::{lambda_o_igrassmannian, Cell, FpfInvolution, Perm};
use crate::polyring::{BetaScalar, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymFamily {
    Stanley,
    InvStanleyP,
    InvStanleyQ,
    Schur,
    SchurP,
    SchurQ,
    StableGroth,
    GLambda,
    GP,
    GQ,
    GPz,
    GQz,
}

impl SymFamily {
    pub fn name(self) -> &'static str {
        match self {
            SymFamily::Stanley => "F",
            SymFamily::InvStanleyP => "P_z",
            SymFamily::InvStanleyQ => "Q_z",
            SymFamily::Schur => "s",
            SymFamily::SchurP => "P",
            SymFamily::SchurQ => "Q",
            SymFamily::StableGroth => "G_w",
            SymFamily::GLambda => "G",
            SymFamily::GP => "GP",
            SymFamily::GQ => "GQ",
            SymFamily::GPz => "GP_z",
            SymFamily::GQz => "GQ_z",
        }
    }
}

/// A symmetric function evaluated at `x_1, …, x_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricTruncation {
    pub value: Poly,
    pub n: usize,
    pub family: SymFamily,
    pub index: String,
}

impl SymmetricTruncation {
    fn new(value: Poly, n: usize, family: SymFamily, index: String) -> Self {
        debug_assert!(value.is_symmetric(n), "{} {} is not symmetric in {} variables", family.name(), index, n);
        SymmetricTruncation { value, n, family, index }
    }

    pub fn at_beta_zero(&self) -> Poly {
        self.value.at_beta_zero()
    }
}

impl fmt::Display for SymmetricTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}(x1..x{}) = {}", self.family.name(), self.index, self.n, self.value)
    }
}

fn check_rows(cells: &std::collections::BTreeSet<Cell>, n: usize, what: &str) -> Result<()> {
    match cells.iter().map(|c| c.0).find(|&r| r > n) {
        Some(r) => Err(Error::domain(format!("row {r} of {what} lies outside [{n}]"))),
        None => Ok(()),
    }
}

fn check_descents(d: &std::collections::BTreeSet<usize>, n: usize, what: &str) -> Result<()> {
    match d.iter().find(|&&i| i > n) {
        Some(i) => Err(Error::domain(format!("{what} contains {i}, outside [{n}]"))),
        None => Ok(()),
    }
}

/// `(λ_n, …, λ_1)`.
pub fn reverse_pad(la: &[u32], n: usize) -> Result<Vec<u32>> {
    let la = canon(la);
    if la.len() > n {
        return Err(Error::domain(format!("{} has more than {n} parts", comp::label(&la))));
    }
    let mut v = vec![0; n - la.len()];
    v.extend(la.iter().rev());
    Ok(canon(&v))
}

pub fn stanley(v: &Perm, n: usize) -> Result<SymmetricTruncation> {
    check_rows(&v.rothe_diagram(), n, "D(v)")?;
    let f = symmetrize(OperatorKind::ISO, n, &bases::schubert(v));
    Ok(SymmetricTruncation::new(f, n, SymFamily::Stanley, v.to_string()))
}

pub fn inv_stanley_p(y: &FpfInvolution, n: usize) -> Result<SymmetricTruncation> {
    check_rows(&y.diagram_sp(), n, "D^Sp(y)")?;
    let f = symmetrize(OperatorKind::ISO, n, &bases::inv_schubert_sp(y));
    Ok(SymmetricTruncation::new(f, n, SymFamily::InvStanleyP, y.cycle_string()))
}

pub fn inv_stanley_q(z: &Perm, n: usize) -> Result<SymmetricTruncation> {
    check_rows(&z.diagram_o(), n, "D^O(z)")?;
    let f = symmetrize(OperatorKind::ISO, n, &bases::inv_schubert_o(z)?);
    Ok(SymmetricTruncation::new(f, n, SymFamily::InvStanleyQ, z.cycle_string()))
}

pub fn schur(la: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let a = reverse_pad(&comp::sort_to_partition(la), n)?;
    Ok(SymmetricTruncation::new(bases::key(&a), n, SymFamily::Schur, comp::label(&canon(la))))
}

/// `P_μ(x_1..x_n)` as the P-key of the reversed skew-symmetric lift of `μ`.
pub fn schur_p(mu: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let la = comp::from_half_lt(mu)?;
    let f = bases::pkey(&reverse_pad(&la, n)?)?;
    Ok(SymmetricTruncation::new(f, n, SymFamily::SchurP, comp::label(&canon(mu))))
}

/// `Q_ν(x_1..x_n)` as the Q-key of the reversed symmetric lift of `ν`.
pub fn schur_q(nu: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let la = comp::from_half_le(nu)?;
    let f = bases::qkey(&reverse_pad(&la, n)?)?;
    Ok(SymmetricTruncation::new(f, n, SymFamily::SchurQ, comp::label(&canon(nu))))
}

pub fn stable_groth(w: &Perm, n: usize) -> Result<SymmetricTruncation> {
    check_descents(&w.descents(), n, "Des_R(w)")?;
    let f = symmetrize(OperatorKind::ISO_B, n, &bases::grothendieck(w));
    Ok(SymmetricTruncation::new(f, n, SymFamily::StableGroth, w.to_string()))
}

pub fn g_lambda(la: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let a = reverse_pad(&comp::sort_to_partition(la), n)?;
    Ok(SymmetricTruncation::new(bases::lascoux(&a), n, SymFamily::GLambda, comp::label(&canon(la))))
}

/// `π^β_{w_n}(x^μ ∏_{i≤r} ∏_{j} (x_i ⊕ x_j) / x_i)` with `j > i` (GP) or `j ≥ i` (GQ).
///
/// The operand is a Laurent polynomial in general. It is multiplied by `(x_1⋯x_n)^K`,
/// which commutes with every `π^β_i`, and the factor is removed after symmetrizing.
fn shifted_symmetrize(mu: &[u32], n: usize, weak: bool) -> Result<Poly> {
    if !comp::is_strict(mu) {
        return Err(Error::domain(format!("{mu:?} is not a strict partition")));
    }
    let mu = canon(mu);
    let r = mu.len();
    if r > n {
        return Err(Error::domain(format!("{} has more than {n} parts", comp::label(&mu))));
    }
    let factors = |i: usize| if weak { n + 1 - i } else { n - i } as u32;
    let k = (1..=r).map(|i| factors(i).saturating_sub(mu[i - 1])).max().unwrap_or(0);
    let mut shift = vec![k; n];
    for i in 1..=r {
        shift[i - 1] = mu[i - 1] + k - factors(i);
    }
    let mut f = Poly::x_pow(&canon(&shift));
    for i in 1..=r {
        let start = if weak { i } else { i + 1 };
        for j in start..=n {
            f = &f * &Poly::var(i).oplus(&Poly::var(j));
        }
    }
    let g = symmetrize(OperatorKind::ISO_B, n, &f);
    divide_by_power_of_product(&g, n, k)
}

/// `f / (x_1⋯x_n)^k`, which must be exact.
fn divide_by_power_of_product(f: &Poly, n: usize, k: u32) -> Result<Poly> {
    if k == 0 {
        return Ok(f.clone());
    }
    let mut out = Poly::zero();
    for (e, c) in f.terms() {
        let mut e2 = e.clone();
        e2.resize(n.max(e.len()), 0);
        if e2.len() > n || e2.iter().any(|&x| x < k) {
            return Err(Error::Invariant(format!("(x1..x{n})^{k} does not divide the symmetrized operand")));
        }
        for x in e2.iter_mut() {
            *x -= k;
        }
        out.add_term(canon(&e2), c);
    }
    Ok(out)
}

pub fn gp(mu: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let f = shifted_symmetrize(mu, n, false)?;
    Ok(SymmetricTruncation::new(f, n, SymFamily::GP, comp::label(&canon(mu))))
}

pub fn gq(mu: &[u32], n: usize) -> Result<SymmetricTruncation> {
    let f = shifted_symmetrize(mu, n, true)?;
    Ok(SymmetricTruncation::new(f, n, SymFamily::GQ, comp::label(&canon(mu))))
}

pub fn gp_z(z: &FpfInvolution, n: usize) -> Result<SymmetricTruncation> {
    check_descents(&z.visible_descents(), n, "Des^fpf_V(z)")?;
    let f = symmetrize(OperatorKind::ISO_B, n, &bases::groth_sp(z));
    Ok(SymmetricTruncation::new(f, n, SymFamily::GPz, z.cycle_string()))
}

/// `π^β_{w_n}(G^O_z)` for I-Grassmannian `z` with `Des_V(z) = {n}`; equals `GQ_{λ^O(z)}`.
pub fn gq_z_igrassmannian(z: &Perm, n: usize) -> Result<SymmetricTruncation> {
    let dv = z.visible_descents();
    if dv.len() != 1 || !dv.contains(&n) {
        return Err(Error::domain(format!(
            "Des_V({}) = {:?}, expected exactly {{{n}}}",
            z.cycle_string(),
            dv
        )));
    }
    lambda_o_igrassmannian(z)?;
    let f = symmetrize(OperatorKind::ISO_B, n, &bases::groth_o_vex(z)?);
    Ok(SymmetricTruncation::new(f, n, SymFamily::GQz, z.cycle_string()))
}

/// Expansion of a symmetric polynomial into partition-indexed functions.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionExpansion {
    /// `"s"` or `"G"`.
    pub basis: &'static str,
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BetaScalar>,
}

impl PartitionExpansion {
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(BetaScalar::is_nonneg)
    }

    pub fn max_rows(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis,
            "n": self.n,
            "terms": self.terms.iter().map(|(la, c)| json!({
                "partition": la,
                "coeff": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PartitionExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(la, c)| {
                let idx = comp::format(la);
                if c.is_one() {
                    format!("{}[{idx}]", self.basis)
                } else {
                    format!("({c})*{}[{idx}]", self.basis)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn to_partition_index(a: &[u32], n: usize) -> Result<Vec<u32>> {
    let padded = {
        let mut v = vec![0; n.saturating_sub(a.len())];
        v.extend_from_slice(a);
        v
    };
    if a.len() > n || padded.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::domain(format!(
            "insufficient variables: index {} is not a reversed partition in {n} variables",
            comp::label(a)
        )));
    }
    Ok(canon(&padded.iter().rev().copied().collect::<Vec<_>>()))
}

fn partition_expansion(t: &SymmetricTruncation, basis: &'static str) -> Result<PartitionExpansion> {
    if !t.value.is_symmetric(t.n) {
        return Err(Error::domain(format!("{} is not symmetric in {} variables", t.index, t.n)));
    }
    let e = if basis == "s" { key_expand(&t.value)? } else { lascoux_expand(&t.value)? };
    let mut terms = BTreeMap::new();
    for (idx, c) in e.terms {
        let bases::Index::Composition(a) = idx else { unreachable!() };
        terms.insert(to_partition_index(&a, t.n)?, c);
    }
    Ok(PartitionExpansion { basis, n: t.n, terms })
}

/// Schur expansion, read off from the key expansion.
pub fn schur_expand(t: &SymmetricTruncation) -> Result<PartitionExpansion> {
    partition_expansion(t, "s")
}

/// Expansion into `G_λ(x_1..x_n)`, read off from the Lascoux expansion.
pub fn g_basis_expand(t: &SymmetricTruncation) -> Result<PartitionExpansion> {
    partition_expansion(t, "G")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowBoundKind {
    GP,
    GQ,
}

/// Whether `GP_μ` (or `GQ_μ`) lies in the ℕ[β]-span of `G_λ` with at most `n` rows.
///
/// Evaluated at `max(μ) + 2` variables, which exceeds the number of rows any term can have.
pub fn row_bound_check(kind: RowBoundKind, mu: &[u32], n: usize) -> Result<bool> {
    let e = row_bound_expansion(kind, mu)?;
    Ok(e.max_rows() <= n && e.is_positive())
}

/// `G_λ`-expansion of `GP_μ` or `GQ_μ` at `max(μ) + 2` variables.
pub fn row_bound_expansion(kind: RowBoundKind, mu: &[u32]) -> Result<PartitionExpansion> {
    let mu = canon(mu);
    let vars = mu.first().copied().unwrap_or(0) as usize + 2;
    row_bound_expansion_at(kind, &mu, vars)
}

/// As [`row_bound_expansion`] at a chosen variable count; terms with more than `vars`
/// rows vanish there and cannot be seen.
pub fn row_bound_expansion_at(kind: RowBoundKind, mu: &[u32], vars: usize) -> Result<PartitionExpansion> {
    let mu = canon(mu);
    let vars = vars.max(mu.len()).max(1);
    let t = match kind {
        RowBoundKind::GP => gp(&mu, vars)?,
        RowBoundKind::GQ => gq(&mu, vars)?,
    };
    g_basis_expand(&t)
}

/// The strict partition `ν` with `Q_ν(x_1..x_n) = f`, searched among partitions of the
/// degree of `f`.
pub fn identify_schur_q(f: &Poly, n: usize) -> Result<Option<Vec<u32>>> {
    let Some(d) = f.max_x_degree() else { return Ok(Some(Vec::new())) };
    for nu in comp::strict_partitions(d) {
        let Ok(la) = comp::from_half_le(&nu) else { continue };
        if la.len() > n {
            continue;
        }
        if &schur_q(&nu, n)?.value == f {
            return Ok(Some(nu));
        }
    }
    Ok(None)
}
