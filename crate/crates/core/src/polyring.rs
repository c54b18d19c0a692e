//! Sparse polynomials in `x1, x2, ...` with coefficients in `Z[β]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector with trailing zeros stripped. Vec ordering on this
/// canonical form coincides with lexicographic order after padding.
pub type Exps = Vec<u32>;

pub fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// Lexicographic comparison after padding with zeros.
pub fn lex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            return x.cmp(&y);
        }
    }
    std::cmp::Ordering::Equal
}

/// Polynomial in β with arbitrary precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaScalar {
    c: Vec<BigInt>,
}

impl BetaScalar {
    pub fn zero() -> Self {
        BetaScalar { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int<T: Into<BigInt>>(v: T) -> Self {
        Self::from_coeffs(vec![v.into()])
    }

    pub fn from_big(v: BigInt) -> Self {
        Self::from_coeffs(vec![v])
    }

    /// `k * β^d`
    pub fn monomial<T: Into<BigInt>>(k: T, d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d];
        c.push(k.into());
        Self::from_coeffs(c)
    }

    pub fn beta_pow(d: usize) -> Self {
        Self::monomial(1, d)
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        BetaScalar { c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.c.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    /// True when every coefficient is nonnegative, i.e. the value lies in `N[β]`.
    pub fn is_nonneg(&self) -> bool {
        self.c.iter().all(|x| !x.is_negative())
    }

    /// `Some((k, d))` if the value is `k β^d` for a single power.
    pub fn single_term(&self) -> Option<(BigInt, usize)> {
        let nz: Vec<usize> = (0..self.c.len()).filter(|&i| !self.c[i].is_zero()).collect();
        if nz.len() == 1 {
            Some((self.c[nz[0]].clone(), nz[0]))
        } else {
            None
        }
    }

    pub fn eval(&self, beta: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for k in self.c.iter().rev() {
            acc = acc * beta + k;
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * k).collect())
    }

    /// Multiply by `β^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); d];
        c.extend(self.c.iter().cloned());
        BetaScalar { c }
    }

    pub fn div_exact_int(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.c.len());
        for x in &self.c {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_coeffs(out))
    }

    pub fn add_assign(&mut self, o: &BetaScalar) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), BigInt::zero());
        }
        for (i, x) in o.c.iter().enumerate() {
            self.c[i] += x;
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn sub_assign(&mut self, o: &BetaScalar) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), BigInt::zero());
        }
        for (i, x) in o.c.iter().enumerate() {
            self.c[i] -= x;
        }
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn mul_ref(&self, o: &BetaScalar) -> BetaScalar {
        if self.is_zero() || o.is_zero() {
            return BetaScalar::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn neg_ref(&self) -> BetaScalar {
        BetaScalar { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Add for BetaScalar {
    type Output = BetaScalar;
    fn add(mut self, o: BetaScalar) -> BetaScalar {
        self.add_assign(&o);
        self
    }
}

impl Sub for BetaScalar {
    type Output = BetaScalar;
    fn sub(mut self, o: BetaScalar) -> BetaScalar {
        self.sub_assign(&o);
        self
    }
}

impl Mul for BetaScalar {
    type Output = BetaScalar;
    fn mul(self, o: BetaScalar) -> BetaScalar {
        self.mul_ref(&o)
    }
}

impl Neg for BetaScalar {
    type Output = BetaScalar;
    fn neg(self) -> BetaScalar {
        self.neg_ref()
    }
}

impl fmt::Display for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, k) in self.c.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            let neg = k.is_negative();
            let a = k.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (d, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write_beta(f, d)?,
                _ => {
                    write!(f, "{a}*")?;
                    write_beta(f, d)?
                }
            }
        }
        Ok(())
    }
}

fn write_beta(f: &mut fmt::Formatter<'_>, d: usize) -> fmt::Result {
    if d == 1 {
        write!(f, "b")
    } else {
        write!(f, "b^{d}")
    }
}

/// Grading used by [`Poly::homogeneous_part`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Total degree in the x variables.
    X,
    /// x-degree minus β-degree, i.e. `deg(β) = -1`.
    XMinusBeta,
}

/// Sparse polynomial: exponent vector to nonzero `BetaScalar`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exps, BetaScalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BetaScalar::one())
    }

    pub fn constant(c: BetaScalar) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn int<T: Into<BigInt>>(k: T) -> Self {
        Self::constant(BetaScalar::int(k))
    }

    /// The polynomial β.
    pub fn beta() -> Self {
        Self::constant(BetaScalar::beta_pow(1))
    }

    /// The variable `x_i`, 1-based.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0u32; i];
        e[i - 1] = 1;
        Self::monomial(e, BetaScalar::one())
    }

    pub fn monomial(e: Exps, c: BetaScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(e), c);
        }
        Poly { terms }
    }

    /// `x^e` with coefficient 1.
    pub fn x_pow(e: &[u32]) -> Self {
        Self::monomial(e.to_vec(), BetaScalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, BetaScalar)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exps, BetaScalar> {
        self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> BetaScalar {
        let key = trim(e.to_vec());
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(x-monomial, β-power)` pairs with nonzero coefficient.
    pub fn num_beta_terms(&self) -> usize {
        self.terms.values().map(|c| c.coeffs().iter().filter(|k| !k.is_zero()).count()).sum()
    }

    pub fn add_term(&mut self, e: Exps, c: &BetaScalar) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        match self.terms.get_mut(&e) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn sub_term(&mut self, e: Exps, c: &BetaScalar) {
        self.add_term(e, &c.neg_ref());
    }

    pub fn add_assign_ref(&mut self, o: &Poly) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn sub_assign_ref(&mut self, o: &Poly) {
        for (e, c) in &o.terms {
            self.sub_term(e.clone(), c);
        }
    }

    pub fn add_ref(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }

    pub fn sub_ref(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        r.sub_assign_ref(o);
        r
    }

    pub fn mul_ref(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (i, x) in e1.iter().enumerate() {
                    e[i] += x;
                }
                for (i, x) in e2.iter().enumerate() {
                    e[i] += x;
                }
                out.add_term(e, &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..k {
            r = r.mul_ref(self);
        }
        r
    }

    pub fn scalar_mul(&self, c: &BetaScalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul_ref(c))).collect() }
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T) -> Poly {
        self.scalar_mul(&BetaScalar::int(k))
    }

    /// Multiply by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &[u32]) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let n = m.len().max(e.len());
            let mut x = vec![0u32; n];
            for (i, v) in m.iter().enumerate() {
                x[i] += v;
            }
            for (i, v) in e.iter().enumerate() {
                x[i] += v;
            }
            terms.insert(trim(x), c.clone());
        }
        Poly { terms }
    }

    /// Specialize β to an integer value.
    pub fn substitute_beta<T: Into<BigInt>>(&self, value: T) -> Poly {
        let v: BigInt = value.into();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &BetaScalar::from_big(c.eval(&v)));
        }
        out
    }

    /// The β = 0 specialization.
    pub fn at_beta_zero(&self) -> Poly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = c.coeff(0);
            if !k.is_zero() {
                terms.insert(e.clone(), BetaScalar::from_big(k));
            }
        }
        Poly { terms }
    }

    pub fn has_beta(&self) -> bool {
        self.terms.values().any(|c| c.coeffs().len() > 1)
    }

    pub fn homogeneous_part(&self, degree: i64, grading: Grading) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let xd: i64 = e.iter().map(|&v| v as i64).sum();
            match grading {
                Grading::X => {
                    if xd == degree {
                        out.terms.insert(e.clone(), c.clone());
                    }
                }
                Grading::XMinusBeta => {
                    let d = xd - degree;
                    if d >= 0 {
                        let k = c.coeff(d as usize);
                        if !k.is_zero() {
                            out.terms.insert(e.clone(), BetaScalar::monomial(k, d as usize));
                        }
                    }
                }
            }
        }
        out
    }

    /// True if every monomial has the same degree under `grading`.
    pub fn is_homogeneous(&self, grading: Grading) -> bool {
        let mut seen: Option<i64> = None;
        for (e, c) in &self.terms {
            let xd: i64 = e.iter().map(|&v| v as i64).sum();
            for (d, k) in c.coeffs().iter().enumerate() {
                if k.is_zero() {
                    continue;
                }
                let g = match grading {
                    Grading::X => xd,
                    Grading::XMinusBeta => xd - d as i64,
                };
                if *seen.get_or_insert(g) != g {
                    return false;
                }
            }
        }
        true
    }

    pub fn min_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest variable index that occurs.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Lexicographically minimal monomial and its coefficient.
    pub fn lex_min_term(&self) -> Option<(&Exps, &BetaScalar)> {
        self.terms.iter().next()
    }

    pub fn lex_max_term(&self) -> Option<(&Exps, &BetaScalar)> {
        self.terms.iter().next_back()
    }

    pub fn exact_div_int<T: Into<BigInt>>(&self, k: T) -> Result<Poly> {
        let k: BigInt = k.into();
        if k.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            match c.div_exact_int(&k) {
                Some(q) => {
                    terms.insert(e.clone(), q);
                }
                None => {
                    return Err(Error::InexactDivision(format!("coefficient {c} of {e:?} not divisible by {k}")))
                }
            }
        }
        Ok(Poly { terms })
    }

    /// All coefficients in `N[β]`.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| c.is_nonneg())
    }

    /// Apply the transposition `s_i` to the variables (swap `x_i` and `x_{i+1}`).
    pub fn swap_vars(&self, i: usize) -> Poly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut x = e.clone();
            if x.len() < i + 1 {
                x.resize(i + 1, 0);
            }
            x.swap(i - 1, i);
            terms.insert(trim(x), c.clone());
        }
        Poly { terms }
    }

    /// Set `x_j = 0` for all `j > m`.
    pub fn truncate_vars(&self, m: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.len() <= m)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Symmetric in `x_1..x_n`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        (1..n).all(|i| self.swap_vars(i) == *self)
    }

    /// `f ⊕ g = f + g + β f g`.
    pub fn oplus(&self, g: &Poly) -> Poly {
        let mut r = self.add_ref(g);
        r.add_assign_ref(&self.mul_ref(g).scalar_mul(&BetaScalar::beta_pow(1)));
        r
    }

    /// Terms ordered for display: ascending total degree, descending lex, ascending β-power.
    pub fn display_terms(&self) -> Vec<(Exps, usize, BigInt)> {
        let mut v: Vec<(Exps, usize, BigInt)> = Vec::new();
        for (e, c) in &self.terms {
            for (d, k) in c.coeffs().iter().enumerate() {
                if !k.is_zero() {
                    v.push((e.clone(), d, k.clone()));
                }
            }
        }
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| lex_cmp(&b.0, &a.0)).then_with(|| a.1.cmp(&b.1))
        });
        v
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .display_terms()
                .into_iter()
                .map(|(e, d, k)| TermJson { beta: d as u32, exps: e, coeff: k.to_string() })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json(j: &PolyJson) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in &j.terms {
            let k: BigInt = t.coeff.parse().map_err(|_| Error::parse(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.exps.clone(), &BetaScalar::monomial(k, t.beta as usize));
        }
        Ok(p)
    }

    pub fn from_json_str(s: &str) -> Result<Poly> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))?;
        Self::from_json(&j)
    }

    /// LaTeX rendering, same term order as `Display`.
    pub fn to_latex(&self) -> String {
        let ts = self.display_terms();
        if ts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (e, d, k)) in ts.iter().enumerate() {
            let neg = k.is_negative();
            let a = k.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let bare = e.is_empty() && *d == 0;
            if !a.is_one() || bare {
                s.push_str(&a.to_string());
            }
            if *d == 1 {
                s.push_str("\\beta ");
            } else if *d > 1 {
                s.push_str(&format!("\\beta^{{{d}}} "));
            }
            for (i, &v) in e.iter().enumerate() {
                match v {
                    0 => {}
                    1 => s.push_str(&format!("x_{{{}}}", i + 1)),
                    _ => s.push_str(&format!("x_{{{}}}^{{{}}}", i + 1, v)),
                }
            }
            while s.ends_with(' ') {
                s.pop();
            }
        }
        s
    }

    pub fn parse(s: &str) -> Result<Poly> {
        parse_poly(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub beta: u32,
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts = self.display_terms();
        if ts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, d, k)) in ts.iter().enumerate() {
            let neg = k.is_negative();
            let a = k.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || (e.is_empty() && *d == 0) {
                factors.push(a.to_string());
            }
            match d {
                0 => {}
                1 => factors.push("b".into()),
                _ => factors.push(format!("b^{d}")),
            }
            for (i, &v) in e.iter().enumerate() {
                match v {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, v)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, o: Poly) -> Poly {
        self.add_assign_ref(&o);
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, o: Poly) -> Poly {
        self.sub_assign_ref(&o);
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        self.mul_ref(&o)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(e, c)| (e, c.neg_ref())).collect() }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.sub_ref(o)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.mul_ref(o)
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn small(&mut self, what: &str) -> Result<u32> {
        let n = self.number().ok_or_else(|| Error::parse(format!("expected {what} at offset {}", self.pos)))?;
        n.parse().map_err(|_| Error::parse(format!("{what} too large: {n}")))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small("exponent")
        } else {
            Ok(1)
        }
    }
}

/// Parse `term ::= [int] ['*'] ['b' '^' k] {'x' i ['^' e]}` joined by `+`/`-`.
/// Factors may be separated by `*` and appear in any order.
fn parse_poly(src: &str) -> Result<Poly> {
    let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
    let mut out = Poly::zero();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return Err(Error::parse("empty polynomial")),
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                1
            }
            Some(b'-') => {
                lx.pos += 1;
                -1
            }
            Some(_) if first => 1,
            Some(c) => return Err(Error::parse(format!("unexpected '{}' at offset {}", c as char, lx.pos))),
        };
        first = false;
        let mut coeff = BigInt::from(sign);
        let mut bdeg = 0usize;
        let mut exps: Vec<u32> = Vec::new();
        let mut nfactors = 0;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = lx.number().unwrap();
                    coeff *= n.parse::<BigInt>().map_err(|_| Error::parse("bad integer"))?;
                }
                Some(b'b') => {
                    lx.pos += 1;
                    bdeg += lx.exponent()? as usize;
                }
                Some(b'x') => {
                    lx.pos += 1;
                    let i = lx.small("variable index")? as usize;
                    if i == 0 {
                        return Err(Error::parse("variables are 1-based"));
                    }
                    let e = lx.exponent()?;
                    if exps.len() < i {
                        exps.resize(i, 0);
                    }
                    exps[i - 1] += e;
                }
                _ => break,
            }
            nfactors += 1;
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            }
        }
        if nfactors == 0 {
            return Err(Error::parse(format!("expected a term at offset {}", lx.pos)));
        }
        out.add_term(exps, &BetaScalar::monomial(coeff, bdeg));
    }
    Ok(out)
}

/// Resource limits for peeling and search algorithms.
#[derive(Clone, Copy, Debug)]
pub struct Guard {
    pub max_steps: usize,
    pub max_terms: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_steps: 200_000, max_terms: 2_000_000 }
    }
}

impl Guard {
    pub fn check(&self, steps: usize, terms: usize) -> Result<()> {
        if steps > self.max_steps {
            return Err(Error::Guard(format!("step limit {} exceeded", self.max_steps)));
        }
        if terms > self.max_terms {
            return Err(Error::Guard(format!("term limit {} exceeded", self.max_terms)));
        }
        Ok(())
    }
}
