//! Weak compositions and partitions, symmetric diagrams, and their counting data.
//!
//! Compositions are plain `Vec<u32>` kept in canonical form (no trailing zeros).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::permutations::{Cell, Perm};

pub fn canon(a: &[u32]) -> Vec<u32> {
    let mut v = a.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn size(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn is_partition(a: &[u32]) -> bool {
    a.windows(2).all(|p| p[0] >= p[1])
}

/// `λ(α)`: the parts of `α` sorted into weakly decreasing order.
pub fn sort_to_partition(a: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// `u(α)`: the minimal permutation with `α = u · λ(α)`, where `(u·λ)_i = λ_{u^{-1}(i)}`.
/// Equal parts keep their relative order.
pub fn sorting_permutation(a: &[u32]) -> Perm {
    let a = canon(a);
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by(|&i, &j| a[j].cmp(&a[i]).then(i.cmp(&j)));
    let w: Vec<u32> = idx.iter().map(|&i| i as u32 + 1).collect();
    Perm::from_one_line(&w).expect("sorting permutation is a bijection")
}

/// `(u·λ)_i = λ_{u^{-1}(i)}`.
pub fn act(u: &Perm, la: &[u32]) -> Vec<u32> {
    let n = u.n().max(la.len());
    let ui = u.inverse();
    canon(&(1..=n).map(|i| la.get(ui.get(i) - 1).copied().unwrap_or(0)).collect::<Vec<_>>())
}

pub fn transpose(la: &[u32]) -> Vec<u32> {
    let m = la.first().copied().unwrap_or(0);
    (1..=m).map(|j| la.iter().filter(|&&x| x >= j).count() as u32).collect()
}

/// Cells of the Young diagram, 1-based `(row, col)`.
pub fn young_cells(la: &[u32]) -> Vec<Cell> {
    let mut v = Vec::new();
    for (i, &r) in la.iter().enumerate() {
        for j in 1..=r as usize {
            v.push((i + 1, j));
        }
    }
    v
}

/// The partition whose Young diagram is `cells`, if any.
pub fn partition_of_cells(cells: &BTreeSet<Cell>) -> Option<Vec<u32>> {
    let rows = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let la: Vec<u32> = (1..=rows).map(|r| cells.iter().filter(|c| c.0 == r).count() as u32).collect();
    if !is_partition(&la) {
        return None;
    }
    let ok = young_cells(&la).into_iter().collect::<BTreeSet<_>>() == *cells;
    ok.then(|| canon(&la))
}

/// Number of diagonal cells of a partition.
pub fn diag_len(la: &[u32]) -> usize {
    la.iter().enumerate().filter(|&(i, &x)| x as usize > i).count()
}

pub fn is_symmetric(a: &[u32]) -> bool {
    let la = sort_to_partition(a);
    transpose(&la) == la
}

fn part(la: &[u32], i: usize) -> usize {
    if i == 0 {
        usize::MAX
    } else {
        la.get(i - 1).copied().unwrap_or(0) as usize
    }
}

fn in_diagram(la: &[u32], i: usize, j: usize) -> bool {
    i >= 1 && j >= 1 && part(la, i) >= j
}

fn removable(la: &[u32], i: usize, j: usize) -> bool {
    in_diagram(la, i, j) && !in_diagram(la, i + 1, j) && !in_diagram(la, i, j + 1)
}

fn addable(la: &[u32], i: usize, j: usize) -> bool {
    i >= 1 && j >= 1 && part(la, i) + 1 == j && part(la, i - 1) >= j
}

/// Symmetric plus the two diagonal corner conditions.
pub fn is_skew_symmetric(a: &[u32]) -> bool {
    let la = sort_to_partition(a);
    if transpose(&la) != la {
        return false;
    }
    let bound = la.len() + 2;
    for i in 1..=bound {
        if removable(&la, i, i) && addable(&la, i, i + 1) {
            return false;
        }
        if addable(&la, i, i) && removable(&la, i, i - 1) {
            return false;
        }
    }
    true
}

fn require_symmetric_partition(la: &[u32]) -> Result<Vec<u32>> {
    let la = sort_to_partition(la);
    if transpose(&la) != la {
        return Err(Error::domain(format!("{la:?} is not symmetric")));
    }
    Ok(la)
}

/// Strict partition with parts `{λ_i - i} ∩ P`.
pub fn half_lt(la: &[u32]) -> Result<Vec<u32>> {
    let la = require_symmetric_partition(la)?;
    Ok(la.iter().enumerate().filter(|&(i, &x)| x as usize > i + 1).map(|(i, &x)| x - i as u32 - 1).collect())
}

/// Strict partition with parts `{λ_i - i + 1} ∩ P`.
pub fn half_le(la: &[u32]) -> Result<Vec<u32>> {
    let la = require_symmetric_partition(la)?;
    Ok(la.iter().enumerate().filter(|&(i, &x)| x as usize > i).map(|(i, &x)| x - i as u32).collect())
}

/// Symmetric partition with the first `d` rows given, lower rows filled by transposition.
fn fill_symmetric(top: &[u32]) -> Option<Vec<u32>> {
    let d = top.len();
    let mut la = top.to_vec();
    for i in d + 1..=top.first().copied().unwrap_or(0) as usize {
        la.push(top.iter().filter(|&&x| x as usize >= i).count() as u32);
    }
    let la = canon(&la);
    (is_partition(&la) && transpose(&la) == la).then_some(la)
}

/// The symmetric partition `λ` with `half_≤(λ) = ν`.
pub fn from_half_le(nu: &[u32]) -> Result<Vec<u32>> {
    if !is_strict(nu) {
        return Err(Error::domain(format!("{nu:?} is not a strict partition")));
    }
    let nu = canon(nu);
    let top: Vec<u32> = nu.iter().enumerate().map(|(i, &x)| x + i as u32).collect();
    fill_symmetric(&top).ok_or_else(|| Error::Invariant(format!("no symmetric partition over {nu:?}")))
}

/// The skew-symmetric partition `λ` with `half_<(λ) = μ`.
pub fn from_half_lt(mu: &[u32]) -> Result<Vec<u32>> {
    if !is_strict(mu) {
        return Err(Error::domain(format!("{mu:?} is not a strict partition")));
    }
    let mu = canon(mu);
    let top: Vec<u32> = mu.iter().enumerate().map(|(i, &x)| x + i as u32 + 1).collect();
    let mut longer = top.clone();
    longer.push(mu.len() as u32 + 1);
    [top, longer]
        .iter()
        .filter_map(|t| fill_symmetric(t))
        .find(|la| is_skew_symmetric(la) && half_lt(la).ok().as_deref() == Some(&mu[..]))
        .ok_or_else(|| Error::Invariant(format!("no skew-symmetric partition over {mu:?}")))
}

pub fn is_strict(mu: &[u32]) -> bool {
    let v = canon(mu);
    v.windows(2).all(|p| p[0] > p[1]) && !v.contains(&0)
}

/// `D^sym_α = {(u(i), u(j)) : (i,j) ∈ D_λ}`.
pub fn symmetric_diagram(a: &[u32]) -> BTreeSet<Cell> {
    let u = sorting_permutation(a);
    let la = sort_to_partition(a);
    young_cells(&la).into_iter().map(|(i, j)| (u.get(i), u.get(j))).collect()
}

/// Sub-diagonal row and column counts `(ρ, γ)`, or the strict versions.
pub fn counts(a: &[u32], strict: bool) -> Result<(Vec<u32>, Vec<u32>)> {
    if !is_symmetric(a) {
        return Err(Error::domain(format!("{a:?} is not symmetric")));
    }
    Ok(counts_of_cells(&symmetric_diagram(a), strict))
}

pub fn counts_of_cells(d: &BTreeSet<Cell>, strict: bool) -> (Vec<u32>, Vec<u32>) {
    let n = d.iter().map(|c| c.0.max(c.1)).max().unwrap_or(0);
    let mut rho = vec![0u32; n];
    let mut gam = vec![0u32; n];
    for &(a, b) in d {
        if a > b || (!strict && a == b) {
            rho[a - 1] += 1;
            gam[b - 1] += 1;
        }
    }
    (canon(&rho), canon(&gam))
}

/// Number of diagonal cells of `D^sym_α`.
pub fn diag(a: &[u32]) -> Result<usize> {
    if !is_symmetric(a) {
        return Err(Error::domain(format!("{a:?} is not symmetric")));
    }
    Ok(diag_len(&sort_to_partition(a)))
}

/// Row counts of a cell set.
pub fn row_counts(d: &BTreeSet<Cell>) -> Vec<u32> {
    let n = d.iter().map(|c| c.0).max().unwrap_or(0);
    let mut v = vec![0u32; n];
    for c in d {
        v[c.0 - 1] += 1;
    }
    canon(&v)
}

/// Inverse of [`counts`] by maximal-hook stripping; the result is checked by recomputing counts.
pub fn reconstruct_from_counts(rho: &[u32], gam: &[u32], strict: bool) -> Result<Vec<u32>> {
    let cells = strip_hooks(rho, gam, strict, 0)?;
    let a = row_counts(&cells);
    let class_ok = if strict { is_skew_symmetric(&a) } else { is_symmetric(&a) };
    if !class_ok || symmetric_diagram(&a) != cells {
        return Err(Error::domain(format!(
            "no {} composition has counts ({rho:?}, {gam:?})",
            if strict { "skew-symmetric" } else { "symmetric" }
        )));
    }
    let (r2, g2) = counts(&a, strict)?;
    if r2 != canon(rho) || g2 != canon(gam) {
        return Err(Error::domain(format!("counts ({rho:?}, {gam:?}) are inconsistent")));
    }
    Ok(a)
}

fn strip_hooks(rho: &[u32], gam: &[u32], strict: bool, depth: usize) -> Result<BTreeSet<Cell>> {
    let n = rho.len().max(gam.len());
    let r = |i: usize| rho.get(i).copied().unwrap_or(0) as i64;
    let g = |i: usize| gam.get(i).copied().unwrap_or(0) as i64;
    if (0..n).all(|i| r(i) == 0 && g(i) == 0) {
        return Ok(BTreeSet::new());
    }
    if depth > 4 * n + 4 {
        return Err(Error::domain("count reconstruction does not terminate"));
    }
    let off = if strict { 1 } else { -1 };
    let score = |i: usize| if r(i) + g(i) == 0 { i64::MIN } else { r(i) + g(i) + off };
    let best = (0..n).map(score).max().unwrap();
    let big_i: Vec<usize> = (0..n).filter(|&i| score(i) == best).collect();
    let mut r2 = vec![0u32; n];
    let mut g2 = vec![0u32; n];
    for i in 0..n {
        if big_i.contains(&i) {
            continue;
        }
        let below = big_i.iter().filter(|&&j| j < i).count() as i64;
        let above = big_i.iter().filter(|&&j| j > i).count() as i64;
        if r(i) != 0 {
            let v = r(i) - below;
            if v < 0 {
                return Err(Error::domain("negative row count during reconstruction"));
            }
            r2[i] = v as u32;
        }
        if g(i) != 0 {
            let v = g(i) - above;
            if v < 0 {
                return Err(Error::domain("negative column count during reconstruction"));
            }
            g2[i] = v as u32;
        }
    }
    let mut cells = strip_hooks(&r2, &g2, strict, depth + 1)?;
    for &i in &big_i {
        for j in 0..n {
            if (r2[j] as i64) < r(j) || (g2[j] as i64) < g(j) {
                cells.insert((i + 1, j + 1));
                cells.insert((j + 1, i + 1));
            }
        }
    }
    Ok(cells)
}

/// `η(α)` for symmetric `α` with `α_1 = 0`.
pub fn eta(a: &[u32]) -> Result<Vec<u32>> {
    let a = canon(a);
    if a.first().is_some_and(|&x| x != 0) {
        return Err(Error::domain(format!("eta requires first part 0, got {a:?}")));
    }
    if !is_symmetric(&a) {
        return Err(Error::domain(format!("{a:?} is not symmetric")));
    }
    let d = symmetric_diagram(&a);
    let h = d.iter().filter(|c| c.0 == c.1).count() as u32;
    let mut e1 = a.clone();
    if e1.is_empty() {
        e1.push(0);
    }
    for &(i, j) in &d {
        if i == j {
            e1[i - 1] += 1;
        }
    }
    e1[0] = h;
    let mut e2 = e1.clone();
    e2[0] += 1;
    let (s1, s2) = (is_skew_symmetric(&e1), is_skew_symmetric(&e2));
    match (s1, s2) {
        (true, false) => Ok(canon(&e1)),
        (false, true) => Ok(canon(&e2)),
        _ => Err(Error::Invariant(format!("eta({a:?}): expected exactly one skew-symmetric candidate"))),
    }
}

/// Strict partitions of `k`.
pub fn strict_partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(k)).rev() {
            cur.push(p);
            rec(k - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Strict partitions with all parts at most `max_part` and size at most `max_size`.
pub fn strict_partitions_up_to(max_size: u32) -> Vec<Vec<u32>> {
    (0..=max_size).flat_map(strict_partitions).collect()
}

/// Partitions of `k`.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(k)).rev() {
            cur.push(p);
            rec(k - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn symmetric_partitions(k: u32) -> Vec<Vec<u32>> {
    partitions(k).into_iter().filter(|la| transpose(la) == *la).collect()
}

pub fn skew_symmetric_partitions(k: u32) -> Vec<Vec<u32>> {
    partitions(k).into_iter().filter(|la| is_skew_symmetric(la)).collect()
}

/// Number of skew-symmetric partitions of each size `0..=n`, counted from strict partitions.
pub fn count_skew_symmetric(n: usize) -> Vec<u64> {
    let mut ret = vec![0u64; n + 1];
    ret[0] = 1;
    for k in 1..=(n / 2 + 1) as u32 {
        for la in strict_partitions(k) {
            let s = 2 * la.iter().sum::<u32>() as usize + la.len() + usize::from(*la.last().unwrap() == 1);
            if s <= n {
                ret[s] += 1;
            }
        }
    }
    ret
}

/// Distinct rearrangements of `parts` (padded with zeros to length `n`), canonicalized.
pub fn arrangements(parts: &[u32], n: usize) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = parts.to_vec();
    v.resize(n.max(parts.len()), 0);
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(canon(&v));
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { break };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

/// All weak compositions of length at most `n` that rearrange partitions from `shapes`.
pub fn compositions_of_shapes(shapes: &[Vec<u32>], n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for la in shapes {
        if la.len() <= n {
            out.extend(arrangements(la, n));
        }
    }
    out
}

pub fn parse(s: &str) -> Result<Vec<u32>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let v: Vec<u32> = if t.contains(',') || t.contains(' ') {
        t.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::parse(format!("bad composition part {x:?}"))))
            .collect::<Result<_>>()?
    } else {
        t.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::parse(format!("bad composition {s:?}"))))
            .collect::<Result<_>>()?
    };
    Ok(canon(&v))
}

pub fn format(a: &[u32]) -> String {
    let v: Vec<String> = canon(a).iter().map(|x| x.to_string()).collect();
    match v.as_slice() {
        // a lone multi-digit part would otherwise read back as digits
        [one] if one.len() > 1 => format!("{one},"),
        _ => v.join(","),
    }
}

/// Compact label, digits juxtaposed when all parts are below 10.
pub fn label(a: &[u32]) -> String {
    let a = canon(a);
    if a.is_empty() {
        return "∅".into();
    }
    if a.iter().all(|&x| x < 10) {
        a.iter().map(|x| x.to_string()).collect()
    } else {
        format(&a)
    }
}

pub fn lex_leq(a: &[u32], b: &[u32]) -> bool {
    crate::polyring::lex_cmp(a, b) != std::cmp::Ordering::Greater
}
