//! Change of basis: triangular peeling into key, Lascoux, Schubert and Grothendieck
//! bases, and backtracking search for positive expansions into shifted families.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::bases::{self, BasisId, Index};
use crate::compositions::{self as comp, arrangements, canon};
use crate::error::{Error, Result};
use crate::operators::OperatorKind;
use crate::permutations::Perm;
use crate::polyring::{lex_cmp, BetaScalar, Exps, Guard, Poly};

/// A linear combination of basis elements plus whatever could not be peeled off.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionResult {
    pub basis: BasisId,
    pub terms: Vec<(Index, BetaScalar)>,
    pub residual: Poly,
}

impl ExpansionResult {
    fn new(basis: BasisId) -> Self {
        ExpansionResult { basis, terms: Vec::new(), residual: Poly::zero() }
    }

    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_nonneg())
    }

    pub fn is_complete(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn coefficient(&self, index: &Index) -> BetaScalar {
        self.terms.iter().find(|(i, _)| i == index).map(|(_, c)| c.clone()).unwrap_or_else(BetaScalar::zero)
    }

    /// `Σ c · basis(index) + residual`.
    pub fn reconstruct(&self) -> Result<Poly> {
        let mut out = self.residual.clone();
        for (idx, c) in &self.terms {
            out = &out + &bases::eval(self.basis, idx)?.scalar_mul(c);
        }
        Ok(out)
    }

    fn push(&mut self, idx: Index, c: BetaScalar) {
        if let Some(slot) = self.terms.iter_mut().find(|(i, _)| *i == idx) {
            slot.1.add_assign(&c);
        } else {
            self.terms.push((idx, c));
        }
        self.terms.retain(|(_, c)| !c.is_zero());
    }

    /// Terms sorted by index label for stable output.
    pub fn sorted_terms(&self) -> Vec<(Index, BetaScalar)> {
        let mut v = self.terms.clone();
        v.sort_by(|a, b| index_order(&a.0, &b.0));
        v
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .iter()
            .map(|(i, c)| {
                json!({
                    "index": i.to_string(),
                    "coeff": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "basis": self.basis.name(),
            "terms": terms,
            "residual": self.residual.to_json(),
            "positive": self.is_positive(),
        })
    }
}

fn index_order(a: &Index, b: &Index) -> std::cmp::Ordering {
    match (a, b) {
        (Index::Composition(x), Index::Composition(y)) => {
            comp::size(x).cmp(&comp::size(y)).then_with(|| lex_cmp(x, y))
        }
        (Index::Permutation(x), Index::Permutation(y)) => x.length().cmp(&y.length()).then_with(|| x.cmp(y)),
        (Index::Fpf(x), Index::Fpf(y)) => x.cmp(y),
        _ => a.to_string().cmp(&b.to_string()),
    }
}

fn scalar_label(c: &BetaScalar) -> String {
    let s = c.to_string();
    if c.coeffs().iter().filter(|x| !x.is_zero()).count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            BasisId::KEY => "κ",
            BasisId::LASCOUX => "L",
            BasisId::SCHUBERT => "S",
            BasisId::GROTHENDIECK => "G",
            BasisId::PKEY => "κP",
            BasisId::QKEY => "κQ",
            BasisId::PLASCOUX => "LP",
            other => other.name(),
        };
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(i, c)| {
                if c.is_one() {
                    format!("{sym}[{i}]")
                } else {
                    format!("{}*{sym}[{i}]", scalar_label(c))
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", parts.join(" + "))?;
        }
        if !self.residual.is_zero() {
            write!(f, "  [residual: {}]", self.residual)?;
        }
        Ok(())
    }
}

fn peel<F>(f: &Poly, basis: BasisId, guard: Guard, mut element: F) -> Result<ExpansionResult>
where
    F: FnMut(&Exps) -> Result<(Index, Poly)>,
{
    let mut out = ExpansionResult::new(basis);
    let mut r = f.clone();
    let mut steps = 0;
    while let Some((e, c)) = r.lex_min_term() {
        steps += 1;
        guard.check(steps, r.len())?;
        let (e, c) = (e.clone(), c.clone());
        let (idx, b) = element(&e)?;
        let lead = b.coeff(&e);
        if !lead.is_one() {
            return Err(Error::Invariant(format!("basis element {idx} has lex-minimal coefficient {lead}")));
        }
        if c.is_one() {
            r.sub_assign_ref(&b);
        } else {
            r.sub_assign_ref(&b.scalar_mul(&c));
        }
        out.push(idx, c);
    }
    out.residual = r;
    Ok(out)
}

/// Expansion into key polynomials, using that `x^α` is the lex-minimal term of `κ_α`.
pub fn key_expand(f: &Poly) -> Result<ExpansionResult> {
    peel(f, BasisId::KEY, Guard::default(), |e| Ok((Index::Composition(e.clone()), bases::key(e))))
}

pub fn lascoux_expand(f: &Poly) -> Result<ExpansionResult> {
    peel(f, BasisId::LASCOUX, Guard::default(), |e| Ok((Index::Composition(e.clone()), bases::lascoux(e))))
}

/// Schubert expansion. The lex-minimal term of `S_w` is `x^{c(w)}`, so peeling by
/// lex-minimal monomials recovers the coefficients.
pub fn schubert_expand(f: &Poly) -> Result<ExpansionResult> {
    peel(f, BasisId::SCHUBERT, Guard::default(), |e| {
        let w = Perm::from_code(e);
        Ok((Index::Permutation(w.clone()), bases::schubert(&w)))
    })
}

/// Grothendieck expansion: the lowest x-degree layer of the residual is expanded into
/// Schubert polynomials, and the matching Grothendieck polynomials are subtracted.
pub fn grothendieck_expand(f: &Poly) -> Result<ExpansionResult> {
    let guard = Guard::default();
    let mut out = ExpansionResult::new(BasisId::GROTHENDIECK);
    let mut r = f.clone();
    let mut steps = 0;
    while let Some(d) = r.min_x_degree() {
        steps += 1;
        guard.check(steps, r.len())?;
        let layer = r.homogeneous_part(d as i64, crate::polyring::Grading::X);
        let s = schubert_expand(&layer)?;
        for (idx, c) in s.terms {
            let Index::Permutation(w) = &idx else { unreachable!() };
            r = &r - &bases::grothendieck(w).scalar_mul(&c);
            out.push(Index::Permutation(w.clone()), c);
        }
    }
    out.residual = r;
    Ok(out)
}

/// Schubert coefficient of `w` in a homogeneous `f`, as `(∂_w f)(0)`.
pub fn schubert_coefficient_by_differences(f: &Poly, w: &Perm) -> BetaScalar {
    let g = crate::operators::apply_perm(OperatorKind::DD, w, f);
    g.coeff(&[])
}

/// `w ∘ α`, defined by `π_w κ_α = κ_{w∘α}`.
pub fn w_circ_alpha(w: &Perm, a: &[u32]) -> Vec<u32> {
    let mut v = canon(a);
    for &i in w.reduced_word().iter().rev() {
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        if v[i - 1] > v[i] {
            v.swap(i - 1, i);
        }
    }
    canon(&v)
}

// ---------------------------------------------------------------------------
// positive search

/// Families searched for positive expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms, non_camel_case_types)]
pub enum PositiveFamily {
    PKEY,
    QKEY_2POW,
    PLASCOUX,
}

impl PositiveFamily {
    pub fn basis(self) -> BasisId {
        match self {
            PositiveFamily::PKEY => BasisId::PKEY,
            PositiveFamily::QKEY_2POW => BasisId::QKEY,
            PositiveFamily::PLASCOUX => BasisId::PLASCOUX,
        }
    }

    fn strict(self) -> bool {
        !matches!(self, PositiveFamily::QKEY_2POW)
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Variable bound; defaults to the number of variables of the input.
    pub nvars: Option<usize>,
    /// Collect every solution (up to `max_solutions`) instead of stopping at the first.
    pub all_solutions: bool,
    pub max_solutions: usize,
    /// For `QKEY_2POW`: force coefficients `2^{cyc - diag(α)}`.
    pub cyc: Option<u32>,
    pub max_nodes: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { nvars: None, all_solutions: false, max_solutions: 64, cyc: None, max_nodes: 2_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub solutions: Vec<ExpansionResult>,
    /// True when the search space was fully explored.
    pub exhausted: bool,
    pub nodes: usize,
}

impl SearchOutcome {
    /// An exhausted search without solutions certifies that no expansion of the searched shape exists.
    pub fn certified_failure(&self) -> bool {
        self.exhausted && self.solutions.is_empty()
    }
}

/// Symmetric partitions whose relevant half has size `d` and at most `n` rows.
fn shapes_of_degree(fam: PositiveFamily, d: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = comp::strict_partitions(d)
        .iter()
        .map(|mu| if fam.strict() { comp::from_half_lt(mu) } else { comp::from_half_le(mu) })
        .collect::<Result<Vec<_>>>()
        .expect("every strict partition has a symmetric lift")
        .into_iter()
        .filter(|la| la.len() <= n)
        .collect();
    out.sort();
    out
}

type CandidateIndex = HashMap<Exps, Vec<Vec<u32>>>;

/// Candidates grouped by their expected lex-minimal exponent: `ρ(α)` for Q-keys, `ρ̃(α)` otherwise.
fn candidate_index(fam: PositiveFamily, n: usize, d: u32) -> std::sync::Arc<CandidateIndex> {
    type Store = Mutex<HashMap<(PositiveFamily, usize, u32), std::sync::Arc<CandidateIndex>>>;
    static STORE: OnceLock<Store> = OnceLock::new();
    let store = STORE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (if fam == PositiveFamily::PLASCOUX { PositiveFamily::PKEY } else { fam }, n, d);
    if let Some(ix) = store.lock().unwrap().get(&key) {
        return ix.clone();
    }
    let mut ix: CandidateIndex = HashMap::new();
    for la in shapes_of_degree(fam, d, n) {
        for a in arrangements(&la, n) {
            let (rho, _) = comp::counts(&a, fam.strict()).expect("symmetric by construction");
            ix.entry(rho).or_default().push(a);
        }
    }
    for v in ix.values_mut() {
        v.sort_by(|x, y| comp::size(x).cmp(&comp::size(y)).then_with(|| lex_cmp(x, y)));
    }
    let ix = std::sync::Arc::new(ix);
    store.lock().unwrap().insert(key, ix.clone());
    ix
}

struct Search<'a> {
    fam: PositiveFamily,
    cfg: &'a SearchConfig,
    n: usize,
    base_degree: u32,
    memo: HashMap<Vec<u32>, Poly>,
    chosen: Vec<(Vec<u32>, BetaScalar)>,
    solutions: Vec<ExpansionResult>,
    nodes: usize,
    aborted: bool,
    err: Option<Error>,
}

impl Search<'_> {
    fn element(&mut self, a: &[u32]) -> Result<Poly> {
        if let Some(p) = self.memo.get(a) {
            return Ok(p.clone());
        }
        let p = match self.fam {
            PositiveFamily::PKEY => bases::pkey(a)?,
            PositiveFamily::QKEY_2POW => bases::qkey(a)?,
            PositiveFamily::PLASCOUX => bases::plascoux(a)?,
        };
        self.memo.insert(a.to_vec(), p.clone());
        Ok(p)
    }

    fn duplicates_earlier(&mut self, earlier: &[Vec<u32>], b: &Poly) -> bool {
        for a in earlier {
            match self.element(a) {
                Ok(p) if &p == b => return true,
                _ => {}
            }
        }
        false
    }

    fn done(&self) -> bool {
        self.aborted || (!self.solutions.is_empty() && (!self.cfg.all_solutions || self.solutions.len() >= self.cfg.max_solutions))
    }

    fn coefficient_options(&self, a: &[u32], need: &BetaScalar, lead: &BetaScalar, m: &Exps) -> Vec<BetaScalar> {
        match self.fam {
            PositiveFamily::PKEY => vec![BetaScalar::one()],
            PositiveFamily::PLASCOUX => {
                let d = m.iter().sum::<u32>();
                vec![BetaScalar::beta_pow(d.saturating_sub(self.base_degree) as usize)]
            }
            PositiveFamily::QKEY_2POW => {
                let diag = comp::diag(a).unwrap_or(0) as u32;
                if let Some(cyc) = self.cfg.cyc {
                    if cyc < diag {
                        return Vec::new();
                    }
                    return vec![BetaScalar::int(BigInt::one() << (cyc - diag))];
                }
                let (Some((need, 0)), Some((lead, 0))) = (need.single_term(), lead.single_term()) else {
                    return Vec::new();
                };
                let mut v = Vec::new();
                let mut k = BigInt::one();
                while &k * &lead <= need {
                    v.push(BetaScalar::from_big(k.clone()));
                    k <<= 1;
                }
                v.reverse();
                v
            }
        }
    }

    fn run(&mut self, r: &Poly, last: Option<(Exps, usize)>) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.cfg.max_nodes {
            self.aborted = true;
            return;
        }
        let Some((m, c)) = r.lex_min_term() else {
            let mut res = ExpansionResult::new(self.fam.basis());
            for (a, k) in &self.chosen {
                res.push(Index::Composition(a.clone()), k.clone());
            }
            self.solutions.push(res);
            return;
        };
        let (m, c) = (m.clone(), c.clone());
        if m.len() > self.n {
            return;
        }
        let d = m.iter().sum::<u32>();
        let ix = candidate_index(self.fam, self.n, d);
        let Some(cands) = ix.get(&m) else { return };
        let start = match &last {
            Some((lm, k)) if *lm == m => *k + 1,
            _ => 0,
        };
        for k in start..cands.len() {
            let a = cands[k].clone();
            let b = match self.element(&a) {
                Ok(b) => b,
                Err(e) => {
                    self.err = Some(e);
                    self.aborted = true;
                    return;
                }
            };
            if b.lex_min_term().map(|t| t.0) != Some(&m) {
                continue;
            }
            // distinct indices can give equal polynomials; keep the first
            if self.duplicates_earlier(&cands[..k], &b) {
                continue;
            }
            let lead = b.coeff(&m);
            for coef in self.coefficient_options(&a, &c, &lead, &m) {
                let next = r - &b.scalar_mul(&coef);
                if !next.is_nonneg() {
                    continue;
                }
                self.chosen.push((a.clone(), coef));
                self.run(&next, Some((m.clone(), k)));
                self.chosen.pop();
                if self.done() {
                    return;
                }
            }
        }
    }
}

/// Backtracking search for expansions of `f` as a nonnegative combination in one of the
/// shifted families, each index used at most once.
pub fn positive_search(f: &Poly, fam: PositiveFamily, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if !f.is_nonneg() {
        return Err(Error::domain("positive search needs nonnegative coefficients"));
    }
    let n = cfg.nvars.unwrap_or_else(|| f.nvars());
    let mut s = Search {
        fam,
        cfg,
        n,
        base_degree: f.min_x_degree().unwrap_or(0),
        memo: HashMap::new(),
        chosen: Vec::new(),
        solutions: Vec::new(),
        nodes: 0,
        aborted: false,
        err: None,
    };
    s.run(f, None);
    if let Some(e) = s.err {
        return Err(e);
    }
    let exhausted = !s.aborted && (s.solutions.is_empty() || cfg.all_solutions && s.solutions.len() < cfg.max_solutions);
    Ok(SearchOutcome { solutions: s.solutions, exhausted, nodes: s.nodes })
}

// ---------------------------------------------------------------------------
// span membership

/// Either coefficients expressing the target, or a functional vanishing on every
/// generator but not on the target.
#[derive(Clone, Debug, PartialEq)]
pub enum SpanCertificate {
    Combination(Vec<BigRational>),
    Separator(BTreeMap<Exps, BigRational>),
}

impl SpanCertificate {
    pub fn to_json(&self) -> Value {
        match self {
            SpanCertificate::Combination(v) => json!({
                "combination": v.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            }),
            SpanCertificate::Separator(m) => json!({
                "separator": m.iter().map(|(e, c)| json!({"exps": e, "value": c.to_string()})).collect::<Vec<_>>()
            }),
        }
    }
}

type SparseVec = BTreeMap<Exps, BigRational>;

fn rational_coords(p: &Poly) -> SparseVec {
    p.terms().map(|(e, c)| (e.clone(), BigRational::from_integer(c.coeff(0)))).collect()
}

/// `v -= k * w`, dropping zeros.
fn axpy(v: &mut SparseVec, k: &BigRational, w: &SparseVec) {
    for (e, c) in w {
        let slot = v.entry(e.clone()).or_insert_with(BigRational::zero);
        *slot -= k * c;
        if slot.is_zero() {
            v.remove(e);
        }
    }
}

/// Exact rational test of whether `f` lies in the ℚ-span of `gens`.
pub fn span_membership(f: &Poly, gens: &[Poly]) -> Result<(bool, SpanCertificate)> {
    if f.has_beta() || gens.iter().any(Poly::has_beta) {
        return Err(Error::domain("span membership works at β = 0"));
    }
    // reduced row echelon basis: (pivot, vector, vector as a combination of generators)
    let mut basis: Vec<(Exps, SparseVec, BTreeMap<usize, BigRational>)> = Vec::new();
    let reduce = |v: &mut SparseVec, comb: &mut BTreeMap<usize, BigRational>, basis: &[(Exps, SparseVec, BTreeMap<usize, BigRational>)]| {
        for (p, b, bc) in basis {
            if let Some(k) = v.get(p).cloned() {
                axpy(v, &k, b);
                for (g, c) in bc {
                    let slot = comb.entry(*g).or_insert_with(BigRational::zero);
                    *slot += &k * c;
                }
            }
        }
    };
    for (gi, g) in gens.iter().enumerate() {
        let mut v = rational_coords(g);
        // comb tracks what was subtracted; the new vector is g - Σ comb
        let mut sub = BTreeMap::new();
        reduce(&mut v, &mut sub, &basis);
        let Some((p, lead)) = v.iter().next().map(|(e, c)| (e.clone(), c.clone())) else { continue };
        let inv = lead.recip();
        for c in v.values_mut() {
            *c *= &inv;
        }
        let mut comb: BTreeMap<usize, BigRational> = sub.into_iter().map(|(k, c)| (k, -c * &inv)).collect();
        comb.insert(gi, inv);
        comb.retain(|_, c| !c.is_zero());
        for (_, b, bc) in basis.iter_mut() {
            if let Some(k) = b.get(&p).cloned() {
                axpy(b, &k, &v);
                for (g2, c) in &comb {
                    let slot = bc.entry(*g2).or_insert_with(BigRational::zero);
                    *slot -= &k * c;
                }
                bc.retain(|_, c| !c.is_zero());
            }
        }
        basis.push((p, v, comb));
    }
    let mut r = rational_coords(f);
    let mut used = BTreeMap::new();
    reduce(&mut r, &mut used, &basis);
    if let Some((m, _)) = r.iter().next() {
        // y(v) = v[m] - Σ_k v[p_k] b_k[m] kills the span and gives y(f) = r[m]
        let mut sep: BTreeMap<Exps, BigRational> = BTreeMap::new();
        sep.insert(m.clone(), BigRational::one());
        for (p, b, _) in &basis {
            if let Some(c) = b.get(m) {
                sep.insert(p.clone(), -c.clone());
            }
        }
        return Ok((false, SpanCertificate::Separator(sep)));
    }
    let mut coeffs = vec![BigRational::zero(); gens.len()];
    for (g, c) in used {
        coeffs[g] = c;
    }
    Ok((true, SpanCertificate::Combination(coeffs)))
}

// ---------------------------------------------------------------------------
// leading terms

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTermReport {
    pub alpha: Vec<u32>,
    pub strict: bool,
    pub rho: Vec<u32>,
    pub gamma: Vec<u32>,
    /// `x^ρ + x^γ + (ℕ-span of lex-greater monomials)`.
    pub leading_ok: bool,
    /// Key positivity of `κ^Q_α - 2^{diag} κ_δ` (or `κ^P_α - κ_ε`).
    pub one_term_ok: bool,
    pub notes: Vec<String>,
}

impl LeadingTermReport {
    pub fn passed(&self) -> bool {
        self.leading_ok && self.one_term_ok
    }
}

/// Checks the conjectured leading-term shape of `2^{-diag}κ^Q_α` (or `κ^P_α` when
/// `strict`), together with the one-term key positivity statement.
pub fn leading_term_check(a: &[u32], strict: bool) -> Result<LeadingTermReport> {
    let a = canon(a);
    let la = comp::sort_to_partition(&a);
    let (rho, gamma) = comp::counts(&a, strict)?;
    let diag = comp::diag(&a)? as u32;
    let mut notes = Vec::new();
    let f = if strict {
        if !comp::is_skew_symmetric(&a) {
            return Err(Error::domain(format!("{} is not skew-symmetric", comp::label(&a))));
        }
        bases::pkey(&a)?
    } else {
        bases::qkey(&a)?.exact_div_int(BigInt::one() << diag)?
    };
    let leading_ok = if rho == gamma {
        // only ∅ and unit vectors (the Q case), where the statement is vacuous
        true
    } else {
        let mut g = f.clone();
        g.sub_term(rho.clone(), &BetaScalar::one());
        g.sub_term(gamma.clone(), &BetaScalar::one());
        let nonneg = g.is_nonneg();
        let above = g.terms().all(|(e, _)| lex_cmp(e, &rho) == std::cmp::Ordering::Greater);
        let in_box = f.nvars() <= a.len();
        if !nonneg {
            notes.push("negative coefficient after removing x^ρ and x^γ".into());
        }
        if !above {
            notes.push("monomial not lex-greater than x^ρ".into());
        }
        if !in_box {
            notes.push("polynomial uses more than ℓ(α) variables".into());
        }
        nonneg && above && in_box
    };
    let u = comp::sorting_permutation(&a);
    let (rl, _) = comp::counts(&la, strict)?;
    let target = w_circ_alpha(&u, &rl);
    let full = if strict { bases::pkey(&a)? } else { bases::qkey(&a)? };
    let scale = if strict { BigInt::one() } else { BigInt::one() << diag };
    let diff = &full - &bases::key(&target).mul_int(scale);
    let e = key_expand(&diff)?;
    let one_term_ok = e.is_complete() && e.is_positive();
    if !one_term_ok {
        notes.push(format!("one-term difference with κ_{} is not key positive", comp::label(&target)));
    }
    Ok(LeadingTermReport { alpha: a, strict, rho, gamma, leading_ok, one_term_ok, notes })
}

/// Whether `f` is a nonnegative integer combination of key polynomials.
pub fn is_key_positive(f: &Poly) -> Result<bool> {
    let e = key_expand(f)?;
    Ok(e.is_complete() && e.is_positive())
}

/// Magnitude helper used by reports: largest absolute integer coefficient.
pub fn max_abs_coefficient(f: &Poly) -> BigInt {
    f.terms().flat_map(|(_, c)| c.coeffs().iter().map(|x| x.abs())).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{grothendieck, groth_o_vex, groth_sp, inv_schubert_o, inv_schubert_sp, key, lascoux, pkey, qkey, schubert};
    use crate::permutations::{all_perms, FpfInvolution};
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn comp_terms(e: &ExpansionResult) -> BTreeMap<Vec<u32>, BetaScalar> {
        e.terms
            .iter()
            .map(|(i, c)| match i {
                Index::Composition(a) => (a.clone(), c.clone()),
                _ => panic!("expected composition index"),
            })
            .collect()
    }

    fn perm_terms(e: &ExpansionResult) -> BTreeMap<String, BetaScalar> {
        e.terms.iter().map(|(i, c)| (i.to_string(), c.clone())).collect()
    }

    #[test]
    fn schubert_to_keys() {
        let s = schubert(&Perm::parse("214365").unwrap());
        let e = key_expand(&s).unwrap();
        let want: BTreeMap<Vec<u32>, BetaScalar> =
            [vec![3], vec![1, 0, 2], vec![1, 0, 1, 0, 1], vec![2, 0, 0, 0, 1]]
                .into_iter()
                .map(|a| (a, BetaScalar::one()))
                .collect();
        assert_eq!(comp_terms(&e), want);
        assert_eq!(e.reconstruct().unwrap(), s);
    }

    #[test]
    fn grothendieck_to_lascoux() {
        let g = grothendieck(&Perm::parse("2143").unwrap());
        let e = lascoux_expand(&g).unwrap();
        let want: BTreeMap<Vec<u32>, BetaScalar> = [
            (vec![2], BetaScalar::one()),
            (vec![1, 0, 1], BetaScalar::one()),
            (vec![2, 0, 1], BetaScalar::beta_pow(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(comp_terms(&e), want);
    }

    #[test]
    fn schubert_and_grothendieck_peeling() {
        let e = schubert_expand(&p("x1*x2")).unwrap();
        assert_eq!(perm_terms(&e), [("231".to_string(), BetaScalar::one())].into_iter().collect());
        let g = groth_o_vex(&Perm::parse("(1,2)").unwrap()).unwrap();
        let e = grothendieck_expand(&g).unwrap();
        let want = [("21".to_string(), BetaScalar::int(2)), ("312".to_string(), BetaScalar::beta_pow(1))];
        assert_eq!(perm_terms(&e), want.into_iter().collect());
        let z = FpfInvolution::parse("(1,4)(2,3)").unwrap();
        let e = grothendieck_expand(&groth_sp(&z)).unwrap();
        let want: BTreeMap<String, BetaScalar> = [("1342", 0), ("312", 0), ("3142", 1)]
            .into_iter()
            .map(|(w, k)| (w.to_string(), BetaScalar::beta_pow(k)))
            .collect();
        assert_eq!(perm_terms(&e), want);
        assert_eq!(e.reconstruct().unwrap(), groth_sp(&z));
    }

    #[test]
    fn schubert_peeling_matches_difference_oracle() {
        for n in 1..=4 {
            for w in all_perms(n) {
                let f = &schubert(&w).mul_int(3) + &p("x1^2*x2");
                let e = schubert_expand(&f).unwrap();
                for v in all_perms(4).into_iter().filter(|v| v.length() == f.max_x_degree().unwrap() as usize) {
                    let want = schubert_coefficient_by_differences(&f, &v);
                    assert_eq!(e.coefficient(&Index::Permutation(v.clone())), want, "{w} {v}");
                }
            }
        }
    }

    #[test]
    fn w_circ_examples() {
        assert_eq!(w_circ_alpha(&Perm::s(1), &[2, 1]), vec![1, 2]);
        assert_eq!(w_circ_alpha(&Perm::parse("3142").unwrap(), &[2, 1, 1]), vec![1, 0, 2, 1]);
        for w in all_perms(4) {
            for a in [vec![2, 0, 1], vec![0, 3, 1, 1], vec![1, 2]] {
                let lhs = crate::operators::apply_perm(OperatorKind::ISO, &w, &key(&a));
                assert_eq!(lhs, key(&w_circ_alpha(&w, &a)));
            }
        }
    }

    #[test]
    fn span_examples() {
        let f = p("x1 + 2*x2");
        assert!(span_membership(&f, &[f.clone()]).unwrap().0);
        let q1 = p("x1*x2");
        let gens: Vec<Poly> = vec![key(&[2]), key(&[0, 2]), key(&[1])];
        let (inside, cert) = span_membership(&q1, &gens).unwrap();
        assert!(!inside);
        let SpanCertificate::Separator(y) = cert else { panic!() };
        let apply = |g: &Poly| -> BigRational {
            y.iter().fold(BigRational::zero(), |acc, (e, v)| acc + v * BigRational::from_integer(g.coeff(e).coeff(0)))
        };
        assert!(gens.iter().all(|g| apply(g).is_zero()));
        assert!(!apply(&q1).is_zero());
        let mut gens = gens;
        gens.push(&key(&[2]) + &key(&[1]));
        let f = &(&key(&[2]).mul_int(2) - &key(&[0, 2])) + &key(&[1]).mul_int(3);
        let (inside, cert) = span_membership(&f, &gens).unwrap();
        assert!(inside);
        let SpanCertificate::Combination(c) = cert else { panic!() };
        let mut back = Poly::zero();
        for (g, k) in gens.iter().zip(&c) {
            assert!(k.is_integer());
            back = &back + &g.mul_int(k.to_integer());
        }
        assert_eq!(back, f);
    }

    #[test]
    fn degree_one_and_five_span_separation() {
        let q1 = qkey(&[1]).unwrap();
        let gens: Vec<Poly> = (1..5).map(|k| key(&[vec![0; k], vec![1]].concat())).collect();
        assert!(!span_membership(&q1, &gens).unwrap().0);
        let target = pkey(&[4, 4, 2, 2]).unwrap();
        let mut gens = Vec::new();
        for la in [vec![5, 1, 1, 1, 1], vec![4, 2, 1, 1], vec![3, 3, 2]] {
            for a in arrangements(&la, 7) {
                gens.push(qkey(&a).unwrap());
            }
        }
        let (inside, cert) = span_membership(&target, &gens).unwrap();
        assert!(!inside);
        let SpanCertificate::Separator(y) = cert else { panic!() };
        let apply = |g: &Poly| -> BigRational {
            y.iter().fold(BigRational::zero(), |acc, (e, v)| acc + v * BigRational::from_integer(g.coeff(e).coeff(0)))
        };
        assert!(gens.iter().all(|g| apply(g).is_zero()));
        assert!(!apply(&target).is_zero());
    }

    #[test]
    fn leading_terms() {
        let r = leading_term_check(&[1, 2], false).unwrap();
        assert!(r.passed());
        assert_eq!((r.rho.clone(), r.gamma.clone()), (vec![0, 2], vec![1, 1]));
        assert!(leading_term_check(&[], false).unwrap().passed());
        assert!(leading_term_check(&[1, 3, 1], true).unwrap().passed());
    }

    #[test]
    fn pkey_search_examples() {
        let z = FpfInvolution::parse("(1,5)(2,3)(4,8)(6,7)").unwrap();
        let f = inv_schubert_sp(&z);
        let out = positive_search(&f, PositiveFamily::PKEY, &SearchConfig { all_solutions: true, ..Default::default() }).unwrap();
        let want: Vec<Vec<u32>> = vec![vec![4, 2, 2, 4], vec![5, 1, 3, 3, 0, 0, 1], vec![6, 1, 1, 1, 0, 1, 1]];
        assert!(out.solutions.iter().any(|s| {
            let got: Vec<Vec<u32>> = comp_terms(s).into_keys().collect();
            let mut w = want.clone();
            w.sort();
            got == w
        }));
        let self_search = positive_search(&pkey(&[3, 1, 4, 3]).unwrap(), PositiveFamily::PKEY, &SearchConfig::default()).unwrap();
        assert_eq!(self_search.solutions.len(), 1);
        assert_eq!(self_search.solutions[0].reconstruct().unwrap(), pkey(&[3, 1, 4, 3]).unwrap());
    }

    const SP_FIXTURES: [(&str, &[&str]); 13] = [
        ("(1,3)(2,5)(4,7)(6,8)", &["3303", "140101"]),
        ("(1,4)(2,3)(5,7)(6,8)", &["333", "411001"]),
        ("(1,3)(2,4)(5,8)(6,7)", &["33003", "1400011"]),
        ("(1,3)(2,5)(4,8)(6,7)", &["3304001", "1501011"]),
        ("(1,5)(2,3)(4,7)(6,8)", &["4133", "511101"]),
        ("(1,4)(2,3)(5,8)(6,7)", &["3340001", "41303", "5110011"]),
        ("(1,5)(2,3)(4,8)(6,7)", &["4224", "5133001", "6111011"]),
        ("(1,5)(2,4)(3,7)(6,8)", &["4242", "533101"]),
        ("(1,3)(2,6)(4,8)(5,7)", &["24042", "1503301"]),
        ("(1,5)(2,4)(3,8)(6,7)", &["4252001", "6331011"]),
        ("(1,6)(2,3)(4,8)(5,7)", &["51242", "6113301"]),
        ("(1,6)(2,4)(3,8)(5,7)", &["52522", "6241201"]),
        ("(1,6)(2,5)(3,8)(4,7)", &["54542", "6444101"]),
    ];

    #[test]
    fn fpf_eight_multi_term_expansions() {
        for (z, labels) in SP_FIXTURES {
            let f = inv_schubert_sp(&FpfInvolution::parse(z).unwrap());
            let want: Poly = labels.iter().fold(Poly::zero(), |acc, l| &acc + &pkey(&comp::parse(l).unwrap()).unwrap());
            assert_eq!(f, want, "{z}");
            let cfg = SearchConfig { all_solutions: true, ..Default::default() };
            let out = positive_search(&f, PositiveFamily::PKEY, &cfg).unwrap();
            assert!(out.exhausted);
            assert_eq!(out.solutions.len(), 1, "{z}");
            let mut got: Vec<Vec<u32>> = comp_terms(&out.solutions[0]).into_keys().collect();
            let mut exp: Vec<Vec<u32>> = labels.iter().map(|l| comp::parse(l).unwrap()).collect();
            got.sort();
            exp.sort();
            assert_eq!(got, exp, "{z}");
        }
    }

    #[test]
    fn twisted_key_expansions_differ() {
        // 35421 in the inverse reading
        let w = Perm::parse("35421").unwrap().inverse();
        let pk = key_expand(&crate::bases::pkey_wmu(&w, &[4, 2])).unwrap();
        let qk = key_expand(&crate::bases::qkey_wmu(&w, &[4, 2]).exact_div_int(4).unwrap()).unwrap();
        let table = |e: &ExpansionResult| -> BTreeMap<Vec<u32>, i64> {
            comp_terms(e).into_iter().map(|(a, c)| (a, i64::try_from(c.coeff(0)).unwrap())).collect()
        };
        let want_p: BTreeMap<Vec<u32>, i64> =
            [("00024", 1), ("00033", 1), ("00114", 1), ("00222", 1), ("01113", 1), ("01122", 1), ("00123", 2)]
                .into_iter()
                .map(|(l, c)| (comp::parse(l).unwrap(), c))
                .collect();
        let want_q: BTreeMap<Vec<u32>, i64> = [
            "00024", "00033", "10014", "20022", "10113", "10122", "00123", "10023",
        ]
        .into_iter()
        .map(|l| (comp::parse(l).unwrap(), 1))
        .collect();
        assert_eq!(table(&pk), want_p);
        assert_eq!(table(&qk), want_q);
    }

    #[test]
    fn qkey_search_not_unique() {
        let z = Perm::parse("(1,4)(2,5)(6,8)").unwrap();
        let f = inv_schubert_o(&z).unwrap();
        let cfg = SearchConfig { all_solutions: true, cyc: Some(z.cyc() as u32), ..Default::default() };
        let out = positive_search(&f, PositiveFamily::QKEY_2POW, &cfg).unwrap();
        assert!(out.solutions.len() >= 2, "{}", out.solutions.len());
        for s in &out.solutions {
            assert_eq!(s.reconstruct().unwrap(), f);
        }
    }

    #[test]
    fn plascoux_search_example() {
        let z = FpfInvolution::parse("(1,4)(2,3)(5,8)(6,7)").unwrap();
        let f = groth_sp(&z);
        let lp = |l: &str| crate::bases::plascoux(&comp::parse(l).unwrap()).unwrap();
        let b = |k| BetaScalar::beta_pow(k);
        let want = [
            ("5110011", 0), ("3340001", 0), ("43103", 0), ("42402", 1), ("5330011", 1), ("5310301", 1), ("5240201", 2),
        ]
        .iter()
        .fold(Poly::zero(), |acc, (l, k)| &acc + &lp(l).scalar_mul(&b(*k)));
        assert_eq!(f, want);
        assert_eq!(lp("43103"), lp("41303"));
        let out = positive_search(&f, PositiveFamily::PLASCOUX, &SearchConfig { all_solutions: true, ..Default::default() }).unwrap();
        assert_eq!(out.solutions.len(), 1);
        assert_eq!(out.solutions[0].reconstruct().unwrap(), f);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn key_self_expansion(a in prop::collection::vec(0u32..3, 0..5)) {
            let e = key_expand(&key(&a)).unwrap();
            prop_assert_eq!(comp_terms(&e), [(canon(&a), BetaScalar::one())].into_iter().collect::<BTreeMap<_, _>>());
            let l = lascoux_expand(&lascoux(&a)).unwrap();
            prop_assert_eq!(l.terms.len(), 1);
        }
    }
}
