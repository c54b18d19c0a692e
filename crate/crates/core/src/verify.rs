//! Exhaustive bounded sweeps of the shifted-key conjectures, plus regeneration of the
//! stored key-expansion tables.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bases::{self, Index};
use crate::compositions::{self as comp, canon};
use crate::error::{Error, Result};
use crate::expand::{key_expand, leading_term_check, positive_search, ExpansionResult, PositiveFamily, SearchConfig};
use crate::operators::{symmetrize, OperatorKind};
use crate::permutations::{all_fpf_involutions, all_involutions, FpfInvolution, Perm};
use crate::polyring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms, non_camel_case_types)]
pub enum ConjectureId {
    FKSS,
    FKSO,
    FKGS,
    SYM_UNIQUE,
    LEAD_Q,
    LEAD_P,
    VEX_CODE,
    ALPHA1_CONV,
    PKEY_SHAPE,
    GQ_Z1,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 10] = [
        ConjectureId::FKSS,
        ConjectureId::FKSO,
        ConjectureId::FKGS,
        ConjectureId::SYM_UNIQUE,
        ConjectureId::LEAD_Q,
        ConjectureId::LEAD_P,
        ConjectureId::VEX_CODE,
        ConjectureId::ALPHA1_CONV,
        ConjectureId::PKEY_SHAPE,
        ConjectureId::GQ_Z1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::FKSS => "FKSS",
            ConjectureId::FKSO => "FKSO",
            ConjectureId::FKGS => "FKGS",
            ConjectureId::SYM_UNIQUE => "SYM_UNIQUE",
            ConjectureId::LEAD_Q => "LEAD_Q",
            ConjectureId::LEAD_P => "LEAD_P",
            ConjectureId::VEX_CODE => "VEX_CODE",
            ConjectureId::ALPHA1_CONV => "ALPHA1_CONV",
            ConjectureId::PKEY_SHAPE => "PKEY_SHAPE",
            ConjectureId::GQ_Z1 => "GQ_Z1",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            ConjectureId::FKSS => "S^Sp_z is a sum of distinct P-key polynomials",
            ConjectureId::FKSO => "S^O_z = sum of 2^(cyc(z)-diag(a)) Q-keys",
            ConjectureId::FKGS => "G^Sp_z = sum of beta^(|D^Sp(a)|-|D^Sp(z)|) P-Lascoux polynomials",
            ConjectureId::SYM_UNIQUE => "distinct symmetric a, b give distinct Q-keys",
            ConjectureId::LEAD_Q => "2^-diag(a) Q-key has leading terms x^rho + x^gamma",
            ConjectureId::LEAD_P => "P-key has leading terms x^rho~ + x^gamma~",
            ConjectureId::VEX_CODE => "S^O_z = Q-key of c(z) for vexillary z",
            ConjectureId::ALPHA1_CONV => "a Q-key that is a multiple of a P-key has a_1 = 0",
            ConjectureId::PKEY_SHAPE => "keys in a P-key have parts > 1 before the first zero",
            ConjectureId::GQ_Z1 => "for z(1) = 1 the symmetrized G^O_z is stable in the number of variables",
        }
    }

    /// Whether the bound counts variables/rank (`n`) rather than composition size.
    pub fn bound_is_rank(self) -> bool {
        matches!(
            self,
            ConjectureId::FKSS | ConjectureId::FKSO | ConjectureId::FKGS | ConjectureId::VEX_CODE | ConjectureId::GQ_Z1
        )
    }

    /// Bound used when none is given; each runs in seconds to a few minutes.
    pub fn default_bound(self) -> usize {
        match self {
            ConjectureId::FKSS => 8,
            ConjectureId::FKSO => 6,
            ConjectureId::FKGS => 6,
            ConjectureId::VEX_CODE => 7,
            ConjectureId::SYM_UNIQUE => 8,
            ConjectureId::LEAD_Q => 8,
            ConjectureId::LEAD_P => 9,
            ConjectureId::ALPHA1_CONV => 8,
            ConjectureId::PKEY_SHAPE => 9,
            ConjectureId::GQ_Z1 => 6,
        }
    }

    /// The largest bounds checked in the literature; hour-scale.
    pub fn full_bound(self) -> usize {
        match self {
            ConjectureId::FKSS => 10,
            ConjectureId::FKSO => 9,
            ConjectureId::FKGS => 8,
            ConjectureId::VEX_CODE => 9,
            other => other.default_bound() + 2,
        }
    }

    pub fn max_bound(self) -> usize {
        self.full_bound().max(12)
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let u = s.trim().to_ascii_uppercase().replace('-', "_");
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == u)
            .ok_or_else(|| Error::parse(format!("unknown conjecture id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 2,
            Status::Inconclusive => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: ConjectureId,
    pub bound: usize,
    pub range: String,
    pub status: Status,
    pub instances: usize,
    /// Counterexamples when the status says so, otherwise notable instances (e.g. multi-term expansions).
    pub witnesses: Vec<Value>,
    pub stats: BTreeMap<String, Value>,
    /// Set for inconclusive runs: how far the sweep got.
    pub progress: Option<String>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn stat_usize(&self, key: &str) -> Option<usize> {
        self.stats.get(key).and_then(Value::as_u64).map(|x| x as usize)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id.name(),
            "statement": self.id.statement(),
            "bound": self.bound,
            "range": self.range,
            "status": self.status,
            "instances": self.instances,
            "witnesses": self.witnesses,
            "stats": self.stats,
            "progress": self.progress,
            "wall_time_ms": self.wall_time_ms as u64,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]: {} over {} instances", self.id, self.range, self.status, self.instances)?;
        for (k, v) in &self.stats {
            writeln!(f, "  {k}: {v}")?;
        }
        if let Some(p) = &self.progress {
            writeln!(f, "  progress: {p}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}

/// Result of checking one instance.
enum Verdict {
    Pass(Option<Value>),
    Fail(Value),
    Unknown(Value),
}

fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Verdict> + Sync) -> Vec<Verdict> {
    items
        .par_iter()
        .map(|x| match f(x) {
            Ok(v) => v,
            Err(Error::Guard(m)) => Verdict::Unknown(json!({ "guard": m })),
            Err(e) => Verdict::Fail(json!({ "error": e.to_string() })),
        })
        .collect()
}

fn finish(
    id: ConjectureId,
    bound: usize,
    range: String,
    verdicts: Vec<Verdict>,
    mut stats: BTreeMap<String, Value>,
    start: Instant,
) -> VerificationReport {
    let instances = verdicts.len();
    let mut fails = Vec::new();
    let mut unknown = Vec::new();
    let mut notable = Vec::new();
    for v in verdicts {
        match v {
            Verdict::Pass(Some(w)) => notable.push(w),
            Verdict::Pass(None) => {}
            Verdict::Fail(w) => fails.push(w),
            Verdict::Unknown(w) => unknown.push(w),
        }
    }
    stats.insert("notable".into(), json!(notable.len()));
    let (status, witnesses, progress) = if !fails.is_empty() {
        stats.insert("counterexamples".into(), json!(fails.len()));
        (Status::Counterexample, fails, None)
    } else if !unknown.is_empty() {
        let p = format!("{} of {instances} instances decided; first undecided {}", instances - unknown.len(), unknown[0]);
        (Status::Inconclusive, unknown, Some(p))
    } else {
        (Status::Verified, notable, None)
    };
    VerificationReport {
        id,
        bound,
        range,
        status,
        instances,
        witnesses,
        stats,
        progress,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

/// Runs the sweep for `id` up to `bound` (the default bound when `None`).
pub fn run(id: ConjectureId, bound: Option<usize>) -> Result<VerificationReport> {
    let bound = bound.unwrap_or_else(|| id.default_bound());
    if bound > id.max_bound() {
        return Err(Error::Guard(format!("bound {bound} for {id} exceeds the configured limit {}", id.max_bound())));
    }
    let start = Instant::now();
    let mut stats = BTreeMap::new();
    let (range, verdicts) = match id {
        ConjectureId::FKSS => run_fkss(bound, &mut stats),
        ConjectureId::FKSO => run_fkso(bound, &mut stats),
        ConjectureId::FKGS => run_fkgs(bound, &mut stats),
        ConjectureId::VEX_CODE => run_vex_code(bound, &mut stats),
        ConjectureId::SYM_UNIQUE => run_sym_unique(bound, &mut stats),
        ConjectureId::LEAD_Q => run_lead(bound, false),
        ConjectureId::LEAD_P => run_lead(bound, true),
        ConjectureId::ALPHA1_CONV => run_alpha1(bound),
        ConjectureId::PKEY_SHAPE => run_pkey_shape(bound),
        ConjectureId::GQ_Z1 => run_gq_z1(bound),
    };
    Ok(finish(id, bound, range, verdicts, stats, start))
}

fn expansion_json(input: String, sols: &[ExpansionResult]) -> Value {
    json!({
        "input": input,
        "expansion": sols[0].to_string(),
        "terms": sols[0].terms.len(),
        "solutions": sols.len(),
    })
}

/// Runs a positive search and replays each solution against `f`.
fn searched(f: &Poly, fam: PositiveFamily, cfg: &SearchConfig, input: &str) -> Result<std::result::Result<Vec<ExpansionResult>, Verdict>> {
    let out = positive_search(f, fam, cfg)?;
    if out.solutions.is_empty() {
        let w = json!({ "input": input, "nodes": out.nodes });
        return Ok(Err(if out.exhausted { Verdict::Fail(w) } else { Verdict::Unknown(w) }));
    }
    for s in &out.solutions {
        if s.reconstruct()? != *f {
            return Err(Error::Invariant(format!("search solution for {input} does not reconstruct")));
        }
    }
    let mut sols = out.solutions;
    sols.sort_by_key(|s| s.terms.len());
    Ok(Ok(sols))
}

fn all_solutions() -> SearchConfig {
    SearchConfig { all_solutions: true, ..Default::default() }
}

fn run_fkss(bound: usize, stats: &mut BTreeMap<String, Value>) -> (String, Vec<Verdict>) {
    let n = bound - bound % 2;
    let zs = all_fpf_involutions(n);
    let verdicts = sweep(&zs, |z| {
        let f = bases::inv_schubert_sp(z);
        let input = z.cycle_string();
        Ok(match searched(&f, PositiveFamily::PKEY, &all_solutions(), &input)? {
            Err(v) => v,
            Ok(sols) => Verdict::Pass((sols[0].terms.len() > 1).then(|| expansion_json(input, &sols))),
        })
    });
    let multi = verdicts.iter().filter(|v| matches!(v, Verdict::Pass(Some(_)))).count();
    stats.insert("multi_term".into(), json!(multi));
    (format!("z in I^fpf_{n}"), verdicts)
}

fn run_fkso(bound: usize, stats: &mut BTreeMap<String, Value>) -> (String, Vec<Verdict>) {
    let zs = all_involutions(bound);
    let verdicts = sweep(&zs, |z| {
        let f = bases::inv_schubert_o(z)?;
        let input = z.cycle_string();
        let cfg = SearchConfig { cyc: Some(z.cyc() as u32), ..all_solutions() };
        Ok(match searched(&f, PositiveFamily::QKEY_2POW, &cfg, &input)? {
            Err(v) => v,
            Ok(sols) => {
                let single = sols.iter().any(|s| s.terms.len() == 1 && s.terms[0].1.is_one());
                Verdict::Pass((!single || sols.len() > 1).then(|| {
                    let mut w = expansion_json(input, &sols);
                    w["single_q_key"] = json!(single);
                    w
                }))
            }
        })
    });
    let count = |pred: &dyn Fn(&Value) -> bool| {
        verdicts.iter().filter(|v| matches!(v, Verdict::Pass(Some(w)) if pred(w))).count()
    };
    stats.insert("not_single_q_key".into(), json!(count(&|w| w["single_q_key"] == json!(false))));
    stats.insert("non_unique".into(), json!(count(&|w| w["solutions"].as_u64().unwrap_or(0) > 1)));
    (format!("z in I_{bound}"), verdicts)
}

fn run_fkgs(bound: usize, stats: &mut BTreeMap<String, Value>) -> (String, Vec<Verdict>) {
    let n = bound - bound % 2;
    let zs = all_fpf_involutions(n);
    let verdicts = sweep(&zs, |z| {
        let f = bases::groth_sp(z);
        let input = z.cycle_string();
        Ok(match searched(&f, PositiveFamily::PLASCOUX, &all_solutions(), &input)? {
            Err(v) => v,
            Ok(sols) => Verdict::Pass((sols[0].terms.len() > 1).then(|| expansion_json(input, &sols))),
        })
    });
    let multi = verdicts.iter().filter(|v| matches!(v, Verdict::Pass(Some(_)))).count();
    stats.insert("multi_term".into(), json!(multi));
    (format!("z in I^fpf_{n}"), verdicts)
}

fn run_vex_code(bound: usize, stats: &mut BTreeMap<String, Value>) -> (String, Vec<Verdict>) {
    let zs: Vec<Perm> = all_involutions(bound).into_iter().filter(Perm::is_vexillary).collect();
    stats.insert("vexillary".into(), json!(zs.len()));
    let verdicts = sweep(&zs, |z| {
        let c = z.code();
        let input = json!({ "input": z.cycle_string(), "code": comp::label(&c) });
        let q = match bases::qkey(&c) {
            Ok(q) => q,
            Err(e) => return Ok(Verdict::Fail(json!({ "input": input, "error": e.to_string() }))),
        };
        Ok(if bases::inv_schubert_o(z)? == q { Verdict::Pass(None) } else { Verdict::Fail(input) })
    });
    (format!("vexillary z in I_{bound}"), verdicts)
}

/// Every (skew-)symmetric weak composition of size at most `k` whose length exceeds
/// the length of its sorted partition by at most two.
pub fn padded_compositions(k: u32, skew: bool) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for d in 0..=k {
        let shapes = if skew { comp::skew_symmetric_partitions(d) } else { comp::symmetric_partitions(d) };
        for la in shapes {
            for a in comp::arrangements(&la, la.len() + 2) {
                out.insert(a);
            }
        }
    }
    let mut v: Vec<Vec<u32>> = out.into_iter().collect();
    v.sort_by(|a, b| comp::size(a).cmp(&comp::size(b)).then_with(|| a.cmp(b)));
    v
}

fn padded_range(k: usize, what: &str) -> String {
    format!("{what} a with |a| <= {k}, l(a) <= l(lambda(a)) + 2")
}

fn run_sym_unique(bound: usize, stats: &mut BTreeMap<String, Value>) -> (String, Vec<Verdict>) {
    let alphas = padded_compositions(bound as u32, false);
    let polys: Vec<Result<Poly>> = alphas.par_iter().map(|a| bases::qkey(a)).collect();
    let mut seen: HashMap<Poly, Vec<u32>> = HashMap::new();
    let mut verdicts = Vec::with_capacity(alphas.len());
    for (a, p) in alphas.iter().zip(polys) {
        let v = match p {
            Err(e) => Verdict::Fail(json!({ "input": comp::label(a), "error": e.to_string() })),
            Ok(p) => match seen.get(&p) {
                Some(b) => Verdict::Fail(json!({ "input": [comp::label(b), comp::label(a)] })),
                None => {
                    seen.insert(p, a.clone());
                    Verdict::Pass(None)
                }
            },
        };
        verdicts.push(v);
    }
    stats.insert("distinct_polynomials".into(), json!(seen.len()));
    (padded_range(bound, "symmetric"), verdicts)
}

fn run_lead(bound: usize, strict: bool) -> (String, Vec<Verdict>) {
    let alphas = padded_compositions(bound as u32, strict);
    let verdicts = sweep(&alphas, |a| {
        let r = leading_term_check(a, strict)?;
        Ok(if r.passed() {
            Verdict::Pass(None)
        } else {
            Verdict::Fail(json!({ "input": comp::label(a), "notes": r.notes }))
        })
    });
    (padded_range(bound, if strict { "skew-symmetric" } else { "symmetric" }), verdicts)
}

/// `f` divided by the gcd of its coefficients, made to have a positive lex-min coefficient.
pub fn primitive_part(f: &Poly) -> Poly {
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        for x in c.coeffs() {
            g = g.gcd(x);
        }
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.lex_min_term().is_some_and(|(_, c)| c.coeffs().iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())) {
        g = -g;
    }
    f.exact_div_int(g).expect("gcd divides every coefficient")
}

fn run_alpha1(bound: usize) -> (String, Vec<Verdict>) {
    let alphas: Vec<Vec<u32>> =
        padded_compositions(bound as u32, false).into_iter().filter(|a| a.first().is_some_and(|&x| x > 0)).collect();
    // P-keys grouped by (degree, length bound), indexed by primitive part
    let mut keys: BTreeSet<(u32, usize)> = BTreeSet::new();
    let qs: Vec<Result<Poly>> = alphas.par_iter().map(|a| bases::qkey(a)).collect();
    for (a, q) in alphas.iter().zip(&qs) {
        if let Ok(q) = q {
            keys.insert((q.max_x_degree().unwrap_or(0), a.len() + 1));
        }
    }
    let tables: HashMap<(u32, usize), HashMap<Poly, Vec<u32>>> = keys
        .into_par_iter()
        .map(|(d, len)| {
            let shapes: Vec<Vec<u32>> =
                comp::strict_partitions(d).iter().filter_map(|mu| comp::from_half_lt(mu).ok()).collect();
            let gammas = comp::compositions_of_shapes(&shapes, len);
            let t: HashMap<Poly, Vec<u32>> = gammas
                .par_iter()
                .filter_map(|g| bases::pkey(g).ok().map(|p| (primitive_part(&p), g.clone())))
                .collect();
            ((d, len), t)
        })
        .collect();
    let verdicts = alphas
        .iter()
        .zip(qs)
        .map(|(a, q)| match q {
            Err(e) => Verdict::Fail(json!({ "input": comp::label(a), "error": e.to_string() })),
            Ok(q) => {
                let t = &tables[&(q.max_x_degree().unwrap_or(0), a.len() + 1)];
                match t.get(&primitive_part(&q)) {
                    Some(g) => Verdict::Fail(json!({ "input": comp::label(a), "p_key": comp::label(g) })),
                    None => Verdict::Pass(None),
                }
            }
        })
        .collect();
    (padded_range(bound, "symmetric a_1 > 0,") + ", P-keys of length <= l(a) + 1", verdicts)
}

/// Whether a key index `γ` has every part before its first zero greater than one.
pub fn pkey_shape_ok(gamma: &[u32]) -> bool {
    gamma.iter().take_while(|&&x| x != 0).all(|&x| x > 1)
}

fn run_pkey_shape(bound: usize) -> (String, Vec<Verdict>) {
    let alphas = padded_compositions(bound as u32, true);
    let verdicts = sweep(&alphas, |a| {
        let e = key_expand(&bases::pkey(a)?)?;
        if !e.is_complete() || !e.is_positive() {
            return Err(Error::Invariant(format!("P-key {} is not key positive", comp::label(a))));
        }
        let bad: Vec<String> = e
            .terms
            .iter()
            .filter_map(|(i, _)| match i {
                Index::Composition(g) if !pkey_shape_ok(g) => Some(comp::label(g)),
                _ => None,
            })
            .collect();
        Ok(if bad.is_empty() { Verdict::Pass(None) } else { Verdict::Fail(json!({ "input": comp::label(a), "keys": bad })) })
    });
    (padded_range(bound, "skew-symmetric"), verdicts)
}

fn run_gq_z1(bound: usize) -> (String, Vec<Verdict>) {
    let zs: Vec<Perm> = all_involutions(bound).into_iter().filter(|z| z.get(1) == 1 && z.is_vexillary()).collect();
    let verdicts = sweep(&zs, |z| {
        let g = bases::groth_o_vex(z)?;
        let m = z.visible_descents().iter().max().copied().unwrap_or(1);
        let a = symmetrize(OperatorKind::ISO_B, m, &g);
        let b = symmetrize(OperatorKind::ISO_B, m + 1, &g);
        let input = z.cycle_string();
        Ok(if !a.is_symmetric(m) || !b.is_symmetric(m + 1) {
            Verdict::Fail(json!({ "input": input, "reason": "not symmetric" }))
        } else if b.truncate_vars(m) != a {
            Verdict::Fail(json!({ "input": input, "reason": format!("x_{} = 0 restriction differs", m + 1) }))
        } else {
            Verdict::Pass(None)
        })
    });
    (format!("vexillary z in I_{bound} with z(1) = 1, n = max Des_V(z) and n + 1"), verdicts)
}

// ---------------------------------------------------------------------------
// tables

/// One row of a key-expansion table: `κ^X_λ = κ^X_{1,μ} = c(Σ κ_γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub factor: BigInt,
    pub keys: Vec<Vec<u32>>,
}

fn tex_label(a: &[u32]) -> String {
    if a.is_empty() {
        "\\emptyset".into()
    } else {
        comp::label(a)
    }
}

impl TableRow {
    pub fn to_latex(&self, strict: bool) -> String {
        let sym = if strict { "\\psymbol" } else { "\\qsymbol" };
        let sum: Vec<String> = self.keys.iter().map(|g| format!("\\kappa_{{{}}}", tex_label(g))).collect();
        let rhs = if self.factor.is_one() {
            sum.join(" + ")
        } else if sum.len() == 1 {
            format!("{}{}", self.factor, sum[0])
        } else {
            format!("{}({})", self.factor, sum.join(" + "))
        };
        format!(
            "\\kappa^{sym}_{{{}}} = \\kappa^{sym}_{{1,{}}} = {rhs}",
            tex_label(&self.lambda),
            tex_label(&self.mu)
        )
    }

    pub fn to_text(&self, strict: bool) -> String {
        let sym = if strict { "κP" } else { "κQ" };
        let sum: Vec<String> = self.keys.iter().map(|g| format!("κ[{}]", comp::label(g))).collect();
        let rhs = if self.factor.is_one() {
            sum.join(" + ")
        } else {
            format!("{}*({})", self.factor, sum.join(" + "))
        };
        format!("{sym}[{}] = {sym}[1,{}] = {rhs}", comp::label(&self.lambda), comp::label(&self.mu), rhs = rhs)
    }
}

/// Rows for every strict `μ` with `|μ| ≤ max_degree`, ordered by size then lexicographically.
pub fn generate_table(strict: bool, max_degree: u32) -> Result<Vec<TableRow>> {
    let mus: Vec<Vec<u32>> = (0..=max_degree).flat_map(|d| {
        let mut v = comp::strict_partitions(d);
        v.sort();
        v
    }).collect();
    mus.par_iter()
        .map(|mu| {
            let la = if strict { comp::from_half_lt(mu)? } else { comp::from_half_le(mu)? };
            let f = if strict { bases::pkey(&la)? } else { bases::qkey(&la)? };
            let e = key_expand(&f)?;
            if !e.is_complete() {
                return Err(Error::Invariant(format!("key expansion of {} left a residual", comp::label(&la))));
            }
            let mut terms: Vec<(String, Vec<u32>, BigInt)> = e
                .terms
                .iter()
                .map(|(i, c)| match i {
                    Index::Composition(g) => Ok((comp::label(g), g.clone(), c.coeff(0))),
                    _ => Err(Error::Invariant("non-composition key index".into())),
                })
                .collect::<Result<_>>()?;
            terms.sort_by(|a, b| a.0.cmp(&b.0));
            let factor = terms.iter().fold(BigInt::zero(), |g, t| g.gcd(&t.2));
            let factor = if factor.is_zero() { BigInt::one() } else { factor };
            let keys = terms
                .into_iter()
                .flat_map(|(_, g, c)| std::iter::repeat_n(g, usize::try_from(&c / &factor).unwrap_or(0)))
                .collect();
            Ok(TableRow { lambda: la, mu: mu.clone(), factor, keys })
        })
        .collect()
}

/// Stored rows of both tables, as LaTeX.
pub const TABLE_P: &[&str] = &[
    "\\kappa^\\psymbol_{\\emptyset} = \\kappa^\\psymbol_{1,\\emptyset} = \\kappa_{\\emptyset}",
    "\\kappa^\\psymbol_{22} = \\kappa^\\psymbol_{1,1} = \\kappa_{01}",
    "\\kappa^\\psymbol_{311} = \\kappa^\\psymbol_{1,2} = \\kappa_{011} + \\kappa_{2}",
    "\\kappa^\\psymbol_{333} = \\kappa^\\psymbol_{1,21} = \\kappa_{012}",
    "\\kappa^\\psymbol_{4111} = \\kappa^\\psymbol_{1,3} = \\kappa_{0111} + \\kappa_{2001} + \\kappa_{3}",
    "\\kappa^\\psymbol_{4331} = \\kappa^\\psymbol_{1,31} = \\kappa_{0121} + \\kappa_{202} + \\kappa_{301}",
    "\\kappa^\\psymbol_{51111} = \\kappa^\\psymbol_{1,4} = \\kappa_{01111} + \\kappa_{20011} + \\kappa_{30001} + \\kappa_{4}",
    "\\kappa^\\psymbol_{4422} = \\kappa^\\psymbol_{1,32} = \\kappa_{0122} + \\kappa_{0311} + \\kappa_{23}",
    "\\kappa^\\psymbol_{53311} = \\kappa^\\psymbol_{1,41} = \\kappa_{01211} + \\kappa_{20201} + \\kappa_{30101} + \\kappa_{302} + \\kappa_{401}",
    "\\kappa^\\psymbol_{611111} = \\kappa^\\psymbol_{1,5} = \\kappa_{011111} + \\kappa_{200111} + \\kappa_{300011} + \\kappa_{400001} + \\kappa_{5}",
    "\\kappa^\\psymbol_{4444} = \\kappa^\\psymbol_{1,321} = \\kappa_{0123}",
    "\\kappa^\\psymbol_{54221} = \\kappa^\\psymbol_{1,42} = \\kappa_{01221} + \\kappa_{03111} + \\kappa_{2022} + \\kappa_{23001} + \\kappa_{3012} + \\kappa_{33} + \\kappa_{4011} + \\kappa_{42}",
    "\\kappa^\\psymbol_{633111} = \\kappa^\\psymbol_{1,51} = \\kappa_{012111} + \\kappa_{202011} + \\kappa_{301011} + \\kappa_{302001} + \\kappa_{401001} + \\kappa_{402} + \\kappa_{501}",
    "\\kappa^\\psymbol_{7111111} = \\kappa^\\psymbol_{1,6} = \\kappa_{0111111} + \\kappa_{2001111} + \\kappa_{3000111} + \\kappa_{4000011} + \\kappa_{5000001} + \\kappa_{6}",
];

pub const TABLE_Q: &[&str] = &[
    "\\kappa^\\qsymbol_{\\emptyset} = \\kappa^\\qsymbol_{1,\\emptyset} = \\kappa_{\\emptyset}",
    "\\kappa^\\qsymbol_{1} = \\kappa^\\qsymbol_{1,1} = 2\\kappa_{1}",
    "\\kappa^\\qsymbol_{21} = \\kappa^\\qsymbol_{1,2} = 2(\\kappa_{11} + \\kappa_{2})",
    "\\kappa^\\qsymbol_{22} = \\kappa^\\qsymbol_{1,21} = 4\\kappa_{12}",
    "\\kappa^\\qsymbol_{311} = \\kappa^\\qsymbol_{1,3} = 2(\\kappa_{111} + \\kappa_{201} + \\kappa_{3})",
    "\\kappa^\\qsymbol_{321} = \\kappa^\\qsymbol_{1,31} = 4(\\kappa_{121} + \\kappa_{22} + \\kappa_{31})",
    "\\kappa^\\qsymbol_{4111} = \\kappa^\\qsymbol_{1,4} = 2(\\kappa_{1111} + \\kappa_{2011} + \\kappa_{3001} + \\kappa_{4})",
    "\\kappa^\\qsymbol_{332} = \\kappa^\\qsymbol_{1,32} = 4(\\kappa_{122} + \\kappa_{131} + \\kappa_{23})",
    "\\kappa^\\qsymbol_{4211} = \\kappa^\\qsymbol_{1,41} = 4(\\kappa_{1211} + \\kappa_{2201} + \\kappa_{3101} + \\kappa_{32} + \\kappa_{41})",
    "\\kappa^\\qsymbol_{51111} = \\kappa^\\qsymbol_{1,5} = 2(\\kappa_{11111} + \\kappa_{20111} + \\kappa_{30011} + \\kappa_{40001} + \\kappa_{5})",
    "\\kappa^\\qsymbol_{333} = \\kappa^\\qsymbol_{1,321} = 8\\kappa_{123}",
    "\\kappa^\\qsymbol_{4321} = \\kappa^\\qsymbol_{1,42} = 4(\\kappa_{1221} + \\kappa_{1311} + \\kappa_{222} + \\kappa_{2301} + \\kappa_{312} + \\kappa_{33} + \\kappa_{411} + \\kappa_{42})",
    "\\kappa^\\qsymbol_{52111} = \\kappa^\\qsymbol_{1,51} = 4(\\kappa_{12111} + \\kappa_{22011} + \\kappa_{31011} + \\kappa_{32001} + \\kappa_{41001} + \\kappa_{42} + \\kappa_{51})",
    "\\kappa^\\qsymbol_{611111} = \\kappa^\\qsymbol_{1,6} = 2(\\kappa_{111111} + \\kappa_{201111} + \\kappa_{300111} + \\kappa_{400011} + \\kappa_{500001} + \\kappa_{6})",
];

#[derive(Clone, Debug)]
pub struct TablesReport {
    pub p_rows: Vec<String>,
    pub q_rows: Vec<String>,
    /// First mismatching row per table: (table, row number, got, stored).
    pub mismatches: Vec<(String, usize, String, String)>,
    /// `n` for which `2κ^P_{(n+1)1^n} = κ^Q_{n101^{n-2}} - κ^Q_{1n01^{n-2}} + κ^Q_{0n1^{n-1}}` failed.
    pub linear_comb_failures: Vec<usize>,
    pub wall_time_ms: u128,
}

impl TablesReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.linear_comb_failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok(),
            "p_rows": self.p_rows,
            "q_rows": self.q_rows,
            "mismatches": self.mismatches,
            "linear_comb_failures": self.linear_comb_failures,
            "wall_time_ms": self.wall_time_ms as u64,
        })
    }
}

fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn first_mismatch(name: &str, got: &[String], want: &[&str]) -> Option<(String, usize, String, String)> {
    let n = got.len().max(want.len());
    (0..n).find_map(|i| {
        let g = got.get(i).map(|s| normalize_ws(s)).unwrap_or_default();
        let w = want.get(i).map(|s| normalize_ws(s)).unwrap_or_default();
        (g != w).then(|| (name.to_string(), i + 1, g, w))
    })
}

/// `2κ^P_{(n+1)1^n} = κ^Q_{n101^{n-2}} - κ^Q_{1n01^{n-2}} + κ^Q_{0n1^{n-1}}` for `n ≥ 2`.
pub fn p_linear_comb_q(n: usize) -> Result<bool> {
    let k = n as u32;
    let ones = |m: usize| vec![1u32; m];
    let lhs = bases::pkey(&[vec![k + 1], ones(n)].concat())?.mul_int(2);
    let a = bases::qkey(&[vec![k, 1, 0], ones(n - 2)].concat())?;
    let b = bases::qkey(&[vec![1, k, 0], ones(n - 2)].concat())?;
    let c = bases::qkey(&[vec![0, k], ones(n - 1)].concat())?;
    Ok(lhs == &(&a - &b) + &c)
}

/// Regenerates both tables and diffs them against [`TABLE_P`] and [`TABLE_Q`].
pub fn reproduce_tables() -> Result<TablesReport> {
    let start = Instant::now();
    let p_rows: Vec<String> = generate_table(true, 6)?.iter().map(|r| r.to_latex(true)).collect();
    let q_rows: Vec<String> = generate_table(false, 6)?.iter().map(|r| r.to_latex(false)).collect();
    let mismatches = [first_mismatch("P", &p_rows, TABLE_P), first_mismatch("Q", &q_rows, TABLE_Q)]
        .into_iter()
        .flatten()
        .collect();
    let mut linear_comb_failures = Vec::new();
    for n in 2..=5 {
        if !p_linear_comb_q(n)? {
            linear_comb_failures.push(n);
        }
    }
    Ok(TablesReport { p_rows, q_rows, mismatches, linear_comb_failures, wall_time_ms: start.elapsed().as_millis() })
}

/// An fpf involution and the P-key indices of its expansion.
pub const SP_EIGHT_FIXTURES: &[(&str, &[&str])] = &[
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

/// An involution in `I_5` and its Q-key expansion as `(coefficient, index)` pairs.
pub const O_FIVE_FIXTURES: &[(&str, &[(u32, &str)])] = &[
    ("(1,2)(3,4)", &[(2, "201")]),
    ("(1,2)(4,5)", &[(2, "2001")]),
    ("(2,3)(4,5)", &[(2, "0201")]),
    ("(1,2)(3,5)", &[(1, "202"), (2, "3011")]),
    ("(1,3)(4,5)", &[(1, "22"), (2, "3101")]),
];

/// Checks each stored expansion by direct evaluation.
pub fn check_sp_fixtures() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (z, labels) in SP_EIGHT_FIXTURES {
        let f = bases::inv_schubert_sp(&FpfInvolution::parse(z)?);
        let mut g = Poly::zero();
        for l in *labels {
            g = &g + &bases::pkey(&comp::parse(l)?)?;
        }
        if f != g {
            bad.push(z.to_string());
        }
    }
    Ok(bad)
}

pub fn check_o_fixtures() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (z, terms) in O_FIVE_FIXTURES {
        let f = bases::inv_schubert_o(&Perm::parse(z)?)?;
        let mut g = Poly::zero();
        for (c, l) in *terms {
            g = &g + &bases::qkey(&canon(&comp::parse(l)?))?.mul_int(*c);
        }
        if f != g {
            bad.push(z.to_string());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ConjectureId::ALL {
            assert_eq!(id.name().parse::<ConjectureId>().unwrap(), id);
        }
        assert_eq!("lead-q".parse::<ConjectureId>().unwrap(), ConjectureId::LEAD_Q);
        assert!("FOO".parse::<ConjectureId>().is_err());
        assert!(matches!(run(ConjectureId::FKSS, Some(40)), Err(Error::Guard(_))));
    }

    #[test]
    fn small_sweeps_verify() {
        for (id, b) in [
            (ConjectureId::FKSS, 6),
            (ConjectureId::FKSO, 4),
            (ConjectureId::FKGS, 4),
            (ConjectureId::VEX_CODE, 5),
            (ConjectureId::SYM_UNIQUE, 4),
            (ConjectureId::LEAD_Q, 4),
            (ConjectureId::LEAD_P, 5),
            (ConjectureId::ALPHA1_CONV, 5),
            (ConjectureId::PKEY_SHAPE, 5),
            (ConjectureId::GQ_Z1, 4),
        ] {
            let r = run(id, Some(b)).unwrap();
            assert_eq!(r.status, Status::Verified, "{r}");
            assert!(r.instances > 0, "{id}");
        }
    }

    #[test]
    fn fkso_breakdown_at_five() {
        let r = run(ConjectureId::FKSO, Some(5)).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.instances, 26);
        assert_eq!(r.stat_usize("not_single_q_key"), Some(5));
        assert!(check_o_fixtures().unwrap().is_empty());
    }

    #[test]
    fn reports_replay() {
        let a = run(ConjectureId::LEAD_P, Some(5)).unwrap();
        let b = run(ConjectureId::LEAD_P, Some(5)).unwrap();
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.stats, b.stats);
        let j = a.to_json();
        assert_eq!(j["status"], "verified");
    }

    #[test]
    fn primitive_parts() {
        let f = Poly::parse("4*x1^2 + 6*x2").unwrap();
        assert_eq!(primitive_part(&f), Poly::parse("2*x1^2 + 3*x2").unwrap());
        assert_eq!(primitive_part(&f.mul_int(-1)), primitive_part(&f));
    }

    #[test]
    fn shape_condition() {
        assert!(pkey_shape_ok(&[2, 3, 0, 1]));
        assert!(pkey_shape_ok(&[0, 1]));
        assert!(!pkey_shape_ok(&[1, 0, 2]));
        assert!(!pkey_shape_ok(&[2, 1]));
    }

    #[test]
    fn linear_combination_identity() {
        for n in 2..=4 {
            assert!(p_linear_comb_q(n).unwrap(), "{n}");
        }
    }
}
