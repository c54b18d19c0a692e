//! Finitely supported permutations, involutions and fixed-point-free involutions.

use std::collections::BTreeSet;
use std::fmt;

use crate::compositions;
use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// A permutation of the positive integers fixing all but finitely many points,
/// stored by its shortest one-line window.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm {
    w: Vec<u32>,
}

impl Perm {
    pub fn identity() -> Self {
        Perm { w: Vec::new() }
    }

    /// Build from a one-line window; validates that it is a bijection of `1..=n`.
    pub fn from_one_line(v: &[u32]) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in v {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::domain(format!("{v:?} is not a permutation window")));
            }
            seen[x] = true;
        }
        Ok(Self::from_window_unchecked(v.to_vec()))
    }

    fn from_window_unchecked(mut w: Vec<u32>) -> Self {
        while let Some(&last) = w.last() {
            if last as usize == w.len() {
                w.pop();
            } else {
                break;
            }
        }
        Perm { w }
    }

    /// Simple transposition `s_i`.
    pub fn s(i: usize) -> Self {
        let mut w: Vec<u32> = (1..=(i as u32 + 1)).collect();
        w.swap(i - 1, i);
        Perm { w }
    }

    /// Minimal window size.
    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.w
    }

    pub fn window(&self, n: usize) -> Vec<u32> {
        let mut v = self.w.clone();
        for i in v.len()..n {
            v.push(i as u32 + 1);
        }
        v
    }

    /// `w(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        if i >= 1 && i <= self.w.len() {
            self.w[i - 1] as usize
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0u32; self.w.len()];
        for (i, &x) in self.w.iter().enumerate() {
            v[x as usize - 1] = i as u32 + 1;
        }
        Perm { w: v }
    }

    /// Composition `(self ∘ o)(i) = self(o(i))`.
    pub fn compose(&self, o: &Perm) -> Perm {
        let n = self.n().max(o.n());
        Perm::from_window_unchecked((1..=n).map(|i| self.get(o.get(i)) as u32).collect())
    }

    /// `w s_i`: swap positions i and i+1.
    pub fn mul_s_right(&self, i: usize) -> Perm {
        let mut v = self.window(i + 1);
        v.swap(i - 1, i);
        Perm::from_window_unchecked(v)
    }

    /// `s_i w`: swap values i and i+1.
    pub fn mul_s_left(&self, i: usize) -> Perm {
        let mut v = self.window(i + 1);
        for x in v.iter_mut() {
            if *x as usize == i {
                *x = i as u32 + 1;
            } else if *x as usize == i + 1 {
                *x = i as u32;
            }
        }
        Perm::from_window_unchecked(v)
    }

    /// `s_i w s_i`.
    pub fn conj_s(&self, i: usize) -> Perm {
        self.mul_s_left(i).mul_s_right(i)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.w;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.get(i) > self.get(i + 1)
    }

    /// Right descent set `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.has_descent(i)).collect()
    }

    /// Lehmer code, trailing zeros stripped.
    pub fn code(&self) -> Vec<u32> {
        let w = &self.w;
        let c: Vec<u32> =
            (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count() as u32).collect();
        compositions::canon(&c)
    }

    /// Inverse of [`Perm::code`].
    pub fn from_code(c: &[u32]) -> Perm {
        let n = c.iter().enumerate().map(|(i, &v)| i + 1 + v as usize).max().unwrap_or(0).max(c.len());
        let mut avail: Vec<u32> = (1..=n as u32).collect();
        let mut w = Vec::with_capacity(n);
        for i in 0..n {
            let k = c.get(i).copied().unwrap_or(0) as usize;
            w.push(avail.remove(k));
        }
        Perm::from_window_unchecked(w)
    }

    /// Rothe diagram `{(i, w(j)) : i < j, w(i) > w(j)}`.
    pub fn rothe_diagram(&self) -> BTreeSet<Cell> {
        let n = self.n();
        let mut d = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.get(i) > self.get(j) {
                    d.insert((i, self.get(j)));
                }
            }
        }
        d
    }

    /// 132-avoiding, equivalently weakly decreasing code.
    pub fn is_dominant(&self) -> bool {
        let c = self.code();
        c.windows(2).all(|p| p[0] >= p[1])
    }

    /// The dominant permutation whose Rothe diagram is the Young diagram of `la`.
    pub fn dominant_of_shape(la: &[u32]) -> Result<Perm> {
        if !compositions::is_partition(la) {
            return Err(Error::domain(format!("{la:?} is not a partition")));
        }
        Ok(Perm::from_code(la))
    }

    pub fn contains_pattern(&self, pat: &[u32]) -> bool {
        let w = &self.w;
        let k = pat.len();
        if k > w.len() {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let vals: Vec<u32> = idx.iter().map(|&i| w[i]).collect();
            if (0..k).all(|a| (0..k).all(|b| (pat[a] < pat[b]) == (vals[a] < vals[b]))) {
                return true;
            }
            // next k-subset of positions
            let mut t = k;
            loop {
                if t == 0 {
                    return false;
                }
                t -= 1;
                if idx[t] < w.len() - k + t {
                    idx[t] += 1;
                    for s in t + 1..k {
                        idx[s] = idx[s - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        !self.contains_pattern(&[2, 1, 4, 3])
    }

    /// A reduced word `i1..il` with `w = s_{i1} ... s_{il}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_descent(i)) {
            word.push(i);
            w = w.mul_s_right(i);
        }
        word.reverse();
        word
    }

    /// Every reduced word (exponential; for small tests).
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.descents() {
            for mut r in self.mul_s_right(i).all_reduced_words() {
                r.push(i);
                out.push(r);
            }
        }
        out
    }

    pub fn from_word(word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(), |w, &i| w.mul_s_right(i))
    }

    /// Demazure product `w ∘ s_i`.
    pub fn demazure_s(&self, i: usize) -> Perm {
        if self.has_descent(i) {
            self.clone()
        } else {
            self.mul_s_right(i)
        }
    }

    /// `u ∘ v` in the 0-Hecke monoid.
    pub fn circ(&self, v: &Perm) -> Perm {
        v.reduced_word().iter().fold(self.clone(), |w, &i| w.demazure_s(i))
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_leq(&self, w: &Perm) -> bool {
        let n = self.n().max(w.n());
        for i in 1..=n {
            for j in 1..=n {
                let cu = (1..=i).filter(|&a| self.get(a) >= j).count();
                let cw = (1..=i).filter(|&a| w.get(a) >= j).count();
                if cu > cw {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|i| self.get(self.get(i)) == i)
    }

    /// 2-cycles `(a, b)` with `a < b`, sorted.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).filter(|&i| self.get(i) > i).map(|i| (i, self.get(i))).collect()
    }

    /// Number of 2-cycles of an involution.
    pub fn cyc(&self) -> usize {
        (1..=self.n()).filter(|&i| self.get(i) > i).count()
    }

    /// Visible descents `{i : z(i) > z(i+1) <= i}` of an involution.
    pub fn visible_descents(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.get(i) > self.get(i + 1) && self.get(i + 1) <= i).collect()
    }

    /// `D^O(z)`: weakly sub-diagonal Rothe cells.
    pub fn diagram_o(&self) -> BTreeSet<Cell> {
        self.rothe_diagram().into_iter().filter(|&(i, j)| i >= j).collect()
    }

    /// Parse one-line (`53124`, `5,3,1,2,4`, `[5 3 1 2 4]`) or cycle notation (`(1,4)(2,3)`).
    pub fn parse(s: &str) -> Result<Perm> {
        let t = s.trim();
        if t.starts_with('(') {
            let cycles = parse_cycles(t)?;
            let n = cycles.iter().flatten().copied().max().unwrap_or(0);
            let mut w: Vec<u32> = (1..=n as u32).collect();
            for c in &cycles {
                for k in 0..c.len() {
                    let a = c[k];
                    let b = c[(k + 1) % c.len()];
                    w[a - 1] = b as u32;
                }
            }
            return Perm::from_one_line(&w);
        }
        let t = t.trim_start_matches('[').trim_end_matches(']');
        let v: Vec<u32> = if t.contains(',') || t.contains(' ') {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| Error::parse(format!("bad permutation entry {x:?}"))))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::parse(format!("bad permutation {s:?}"))))
                .collect::<Result<_>>()?
        };
        if v == [1] || v.is_empty() {
            return Ok(Perm::identity());
        }
        Perm::from_one_line(&v)
    }

    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.n() + 1];
        let mut out = String::new();
        for i in 1..=self.n() {
            if seen[i] || self.get(i) == i {
                continue;
            }
            let mut c = vec![i];
            seen[i] = true;
            let mut j = self.get(i);
            while j != i {
                seen[j] = true;
                c.push(j);
                j = self.get(j);
            }
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("({})", parts.join(",")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_empty() {
            return write!(f, "1");
        }
        if self.w.len() < 10 {
            for x in &self.w {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::parse(format!("bad cycle notation {s:?}")));
        }
        let close = rest.find(')').ok_or_else(|| Error::parse(format!("unclosed cycle in {s:?}")))?;
        let body = &rest[1..close];
        let c: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::parse(format!("bad cycle entry {x:?}"))))
            .collect::<Result<_>>()?;
        if c.contains(&0) {
            return Err(Error::parse("cycle entries are positive"));
        }
        if !c.is_empty() {
            out.push(c);
        }
        rest = rest[close + 1..].trim_start();
    }
    let mut all: Vec<usize> = out.iter().flatten().copied().collect();
    let len = all.len();
    all.sort();
    all.dedup();
    if all.len() != len {
        return Err(Error::parse(format!("cycles in {s:?} are not disjoint")));
    }
    Ok(out)
}

/// All permutations of `S_n`, in lexicographic order of one-line windows.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut v: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Perm::from_window_unchecked(v.clone()));
        // next lexicographic permutation
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { break };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

/// All involutions in `S_n`.
pub fn all_involutions(n: usize) -> Vec<Perm> {
    fn rec(w: &mut Vec<u32>, out: &mut Vec<Perm>) {
        let Some(i) = w.iter().position(|&x| x == 0) else {
            out.push(Perm::from_window_unchecked(w.clone()));
            return;
        };
        w[i] = i as u32 + 1;
        rec(w, out);
        w[i] = 0;
        for j in i + 1..w.len() {
            if w[j] == 0 {
                w[i] = j as u32 + 1;
                w[j] = i as u32 + 1;
                rec(w, out);
                w[i] = 0;
                w[j] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], &mut out);
    out.sort();
    out
}

/// A fixed-point-free involution of the integers agreeing with
/// `1_fpf : i ↦ i - (-1)^i` outside a finite even window.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FpfInvolution {
    w: Vec<u32>,
}

fn one_fpf(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

impl FpfInvolution {
    pub fn one() -> Self {
        FpfInvolution { w: Vec::new() }
    }

    pub fn from_window(v: &[u32]) -> Result<Self> {
        if v.len() % 2 == 1 {
            return Err(Error::domain(format!("fpf window {v:?} has odd length")));
        }
        let p = Perm::from_one_line(v)?;
        for i in 1..=v.len() {
            if p.get(i) == i || p.get(p.get(i)) != i {
                return Err(Error::domain(format!("{v:?} is not a fixed-point-free involution")));
            }
        }
        Ok(Self::canonical(v.to_vec()))
    }

    fn canonical(mut w: Vec<u32>) -> Self {
        while w.len() >= 2 {
            let n = w.len();
            if w[n - 1] as usize == n - 1 && w[n - 2] as usize == n {
                w.truncate(n - 2);
            } else {
                break;
            }
        }
        FpfInvolution { w }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.w
    }

    pub fn get(&self, i: usize) -> usize {
        if i >= 1 && i <= self.w.len() {
            self.w[i - 1] as usize
        } else {
            one_fpf(i)
        }
    }

    /// Window of even length at least `n`.
    pub fn window(&self, n: usize) -> Vec<u32> {
        let m = n.max(self.n());
        let m = m + m % 2;
        (1..=m).map(|i| self.get(i) as u32).collect()
    }

    /// The window viewed as a permutation of `S_n`.
    pub fn as_perm(&self, n: usize) -> Perm {
        Perm::from_window_unchecked(self.window(n))
    }

    /// `s_i z s_i`, growing the window when `i` touches its boundary.
    pub fn conj_s(&self, i: usize) -> FpfInvolution {
        let mut v = self.window(i + 1);
        let swap = |x: u32| -> u32 {
            if x as usize == i {
                i as u32 + 1
            } else if x as usize == i + 1 {
                i as u32
            } else {
                x
            }
        };
        for x in v.iter_mut() {
            *x = swap(*x);
        }
        v.swap(i - 1, i);
        Self::canonical(v)
    }

    pub fn rothe_diagram(&self) -> BTreeSet<Cell> {
        self.as_perm(self.n()).rothe_diagram()
    }

    /// `D^Sp(z)`: strictly sub-diagonal Rothe cells.
    pub fn diagram_sp(&self) -> BTreeSet<Cell> {
        self.rothe_diagram().into_iter().filter(|&(i, j)| i > j).collect()
    }

    /// Row counts of `D^Sp(z)`.
    pub fn code_sp(&self) -> Vec<u32> {
        let d = self.diagram_sp();
        let rows = d.iter().map(|c| c.0).max().unwrap_or(0);
        let v: Vec<u32> = (1..=rows).map(|r| d.iter().filter(|c| c.0 == r).count() as u32).collect();
        compositions::canon(&v)
    }

    /// `{i : y(i) > y(i+1) < i}`.
    pub fn visible_descents(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.get(i) > self.get(i + 1) && self.get(i + 1) < i).collect()
    }

    pub fn cycles(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).filter(|&i| self.get(i) > i).map(|i| (i, self.get(i))).collect()
    }

    /// Skew-symmetric shape if `z` is dominant.
    pub fn dominant_shape(&self) -> Option<Vec<u32>> {
        let off: BTreeSet<Cell> = self.rothe_diagram().into_iter().filter(|&(i, j)| i != j).collect();
        let bound = off.iter().map(|c| c.0.max(c.1)).max().unwrap_or(0) + 1;
        for h in 0..=bound {
            let mut cells = off.clone();
            for i in 1..=h {
                cells.insert((i, i));
            }
            if let Some(la) = compositions::partition_of_cells(&cells) {
                if compositions::is_skew_symmetric(&la) {
                    return Some(la);
                }
            }
        }
        None
    }

    pub fn is_dominant(&self) -> bool {
        self.dominant_shape().is_some()
    }

    /// The dominant fpf involution with skew-symmetric shape `la`, found by
    /// filling rows left to right and backtracking over the diagonal cells.
    pub fn dominant_of_shape(la: &[u32]) -> Result<FpfInvolution> {
        if !compositions::is_skew_symmetric(la) {
            return Err(Error::domain(format!("{la:?} is not skew-symmetric")));
        }
        let la = compositions::canon(la);
        let off: BTreeSet<Cell> =
            compositions::young_cells(&la).into_iter().filter(|&(i, j)| i != j).collect();
        let first = la.first().copied().unwrap_or(0) as usize + 1;
        let mut n = first + first % 2;
        while n <= first + 4 {
            let mut z = vec![0usize; n + 1];
            if fill_rows(1, n, &off, &mut z) {
                let w: Vec<u32> = z[1..].iter().map(|&v| v as u32).collect();
                let cand = FpfInvolution::from_window(&w)?;
                if cand.dominant_shape().as_deref() == Some(&la[..]) {
                    return Ok(cand);
                }
            }
            n += 2;
        }
        Err(Error::Invariant(format!("no dominant fpf involution of shape {la:?}")))
    }

    /// `λ^Sp(z)`: transpose of the sorted row counts of `D^Sp(z)`.
    pub fn lambda_sp(&self) -> Vec<u32> {
        compositions::transpose(&compositions::sort_to_partition(&self.code_sp()))
    }

    pub fn parse(s: &str) -> Result<FpfInvolution> {
        let t = s.trim();
        if t.starts_with('(') {
            let cycles = parse_cycles(t)?;
            let mut n = cycles.iter().flatten().copied().max().unwrap_or(0);
            n += n % 2;
            let mut w = vec![0u32; n];
            for c in &cycles {
                if c.len() != 2 {
                    return Err(Error::domain(format!("fpf involution cycles must be 2-cycles: {s:?}")));
                }
                w[c[0] - 1] = c[1] as u32;
                w[c[1] - 1] = c[0] as u32;
            }
            for i in 0..n {
                if w[i] == 0 {
                    if i + 1 == n && n > 0 {
                        return Err(Error::domain(format!("{s:?} leaves {} unmatched", i + 1)));
                    }
                    // unmatched points must follow 1_fpf
                    let j = one_fpf(i + 1);
                    if j > n || w[j - 1] != 0 {
                        return Err(Error::domain(format!("{s:?} leaves {} unmatched", i + 1)));
                    }
                    w[i] = j as u32;
                    w[j - 1] = i as u32 + 1;
                }
            }
            return FpfInvolution::from_window(&w);
        }
        let p = Perm::parse(t)?;
        if p.is_identity() && (t == "1" || t.is_empty()) {
            return Ok(FpfInvolution::one());
        }
        FpfInvolution::from_window(&p.window(p.n() + p.n() % 2))
    }

    pub fn cycle_string(&self) -> String {
        let c = self.cycles();
        if c.is_empty() {
            return "()".into();
        }
        c.iter().map(|(a, b)| format!("({a},{b})")).collect()
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.window(2);
        if w.len() < 10 {
            for x in &w {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

fn fill_rows(i: usize, n: usize, off: &BTreeSet<Cell>, z: &mut Vec<usize>) -> bool {
    if i > n {
        return true;
    }
    let row_ok = |z: &Vec<usize>, zi: usize| {
        (1..=n).all(|j| {
            if j == i {
                return true;
            }
            let cell = j < zi && (z[j] == 0 || z[j] > i);
            cell == off.contains(&(i, j))
        }) && off.iter().all(|&(r, c)| r != i || c <= n)
    };
    if z[i] != 0 {
        let zi = z[i];
        return row_ok(z, zi) && fill_rows(i + 1, n, off, z);
    }
    for zi in i + 1..=n {
        if z[zi] != 0 || !row_ok(z, zi) {
            continue;
        }
        z[i] = zi;
        z[zi] = i;
        if fill_rows(i + 1, n, off, z) {
            return true;
        }
        z[i] = 0;
        z[zi] = 0;
    }
    false
}


/// All elements of `I^fpf_n` (empty for odd `n`).
pub fn all_fpf_involutions(n: usize) -> Vec<FpfInvolution> {
    fn rec(w: &mut Vec<u32>, out: &mut Vec<FpfInvolution>) {
        let Some(i) = w.iter().position(|&x| x == 0) else {
            out.push(FpfInvolution::canonical(w.clone()));
            return;
        };
        for j in i + 1..w.len() {
            if w[j] == 0 {
                w[i] = j as u32 + 1;
                w[j] = i as u32 + 1;
                rec(w, out);
                w[i] = 0;
                w[j] = 0;
            }
        }
    }
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], &mut out);
    out.sort();
    out
}

/// Lehmer-decode `alpha` and require an involution.
pub fn code_to_involution(alpha: &[u32]) -> Result<Perm> {
    let w = Perm::from_code(alpha);
    if w.is_involution() {
        Ok(w)
    } else {
        Err(Error::domain(format!("code {alpha:?} decodes to {w}, which is not an involution")))
    }
}

/// Shape `λ^O(z)` of an I-Grassmannian involution `z = (φ1 n+1)...(φr n+r)`.
pub fn lambda_o_igrassmannian(z: &Perm) -> Result<Vec<u32>> {
    if !z.is_involution() {
        return Err(Error::domain(format!("{z} is not an involution")));
    }
    let dv = z.visible_descents();
    if dv.is_empty() {
        return if z.is_identity() {
            Ok(Vec::new())
        } else {
            Err(Error::domain(format!("{z} has no visible descent")))
        };
    }
    if dv.len() > 1 {
        return Err(Error::domain(format!("{} is not I-Grassmannian", z.cycle_string())));
    }
    let n = *dv.iter().next().unwrap();
    let mut cyc = z.cycles();
    cyc.sort_by_key(|c| c.1);
    let mut mu = Vec::new();
    let mut last_phi = 0;
    for (k, &(phi, b)) in cyc.iter().enumerate() {
        if b != n + k + 1 || phi > n || phi <= last_phi {
            return Err(Error::domain(format!("{} is not of I-Grassmannian form", z.cycle_string())));
        }
        last_phi = phi;
        mu.push((n + 1 - phi) as u32);
    }
    Ok(mu)
}
