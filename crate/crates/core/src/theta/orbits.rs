//! Orbit labels `(λ, (s, I_s))` for the pair `(GL_n, GL_m)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::next_perm;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitLabel {
    pub lambda: Vec<i32>,
    /// `I_s ⊂ {1..m}`, increasing.
    pub subset: Vec<usize>,
    /// `s(i)` for each `i` in `subset`, a bijection onto `{1..n}`.
    pub bijection: Vec<usize>,
}

fn combinations(m: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if n > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (1..=n).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..n).rev().find(|&p| idx[p] < m - (n - 1 - p)) else { break };
        idx[pos] += 1;
        for q in pos + 1..n {
            idx[q] = idx[q - 1] + 1;
        }
    }
    out
}

fn injections(n: usize, m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for subset in combinations(m, n) {
        let mut perm: Vec<usize> = (1..=n).collect();
        loop {
            out.push((subset.clone(), perm.clone()));
            if !next_perm(&mut perm) {
                break;
            }
        }
    }
    out
}

/// `|S_{n,m}| = m!/(m−n)!`.
pub fn injection_count(n: usize, m: usize) -> u128 {
    if n > m {
        return 0;
    }
    (m - n + 1..=m).map(|x| x as u128).product()
}

fn check_bounds(n: usize, m: usize, big_n: i32, r: i32) -> Result<()> {
    if n > m {
        return Err(Error::Invalid(format!("n={n} exceeds m={m}")));
    }
    if big_n + r <= 0 {
        return Err(Error::Invalid(format!("bounds N={big_n}, r={r} need N + r > 0")));
    }
    Ok(())
}

/// All labels whose coweight satisfies `−N ≤ λ_i ≤ r`, in lexicographic order.
pub fn enumerate_orbits(n: usize, m: usize, big_n: i32, r: i32) -> Result<Vec<OrbitLabel>> {
    check_bounds(n, m, big_n, r)?;
    let mut lambdas = vec![Vec::new()];
    for _ in 0..n {
        lambdas = lambdas
            .into_iter()
            .flat_map(|p: Vec<i32>| {
                (-big_n..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let inj = injections(n, m);
    let mut out = Vec::with_capacity(lambdas.len() * inj.len());
    for lambda in &lambdas {
        for (subset, bijection) in &inj {
            out.push(OrbitLabel { lambda: lambda.clone(), subset: subset.clone(), bijection: bijection.clone() });
        }
    }
    Ok(out)
}

/// Count labels by scanning a strictly larger coweight box against the orbit condition
/// (`ν₁ ≤ r` and `−ν_n ≤ N` for every permutation `ν` of `λ`) and all maps `{1..n} → {1..m}`.
pub fn brute_force_orbits(n: usize, m: usize, big_n: i32, r: i32) -> Result<u128> {
    check_bounds(n, m, big_n, r)?;
    let lo = -big_n - 2;
    let hi = r + 2;
    let mut good = 0u128;
    let mut lambda = vec![lo; n];
    loop {
        let mut nu = lambda.clone();
        nu.sort();
        let mut ok = true;
        if n > 0 {
            loop {
                if nu[0] > r || -nu[n - 1] > big_n {
                    ok = false;
                    break;
                }
                if !next_perm(&mut nu) {
                    break;
                }
            }
        }
        if ok {
            good += 1;
        }
        let Some(pos) = (0..n).find(|&p| lambda[p] < hi) else { break };
        lambda[pos] += 1;
        for x in &mut lambda[..pos] {
            *x = lo;
        }
    }
    let mut maps = 0u128;
    let mut f = vec![1usize; n];
    loop {
        let mut seen = vec![false; m + 1];
        if f.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
            maps += 1;
        }
        let Some(pos) = (0..n).find(|&p| f[p] < m) else { break };
        f[pos] += 1;
        for x in &mut f[..pos] {
            *x = 1;
        }
    }
    Ok(good * maps)
}

/// The `n × m` monomial table with `t^{λ_{s(i)}}` at `(s(i), i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub rows: usize,
    pub cols: usize,
    /// `(row, column, exponent)`, 1-based.
    pub entries: Vec<(usize, usize, i32)>,
}

pub fn orbit_representative(label: &OrbitLabel) -> Result<Representative> {
    let n = label.lambda.len();
    let valid = label.subset.len() == n
        && label.bijection.len() == n
        && label.subset.windows(2).all(|w| w[0] < w[1])
        && label.subset.first().is_none_or(|&x| x >= 1);
    let mut seen = vec![false; n + 1];
    if !valid || !label.bijection.iter().all(|&x| x >= 1 && x <= n && !std::mem::replace(&mut seen[x], true)) {
        return Err(Error::Invalid("malformed orbit label".into()));
    }
    let cols = label.subset.last().copied().unwrap_or(0).max(n);
    let mut entries: Vec<(usize, usize, i32)> =
        label.subset.iter().zip(&label.bijection).map(|(&i, &si)| (si, i, label.lambda[si - 1])).collect();
    entries.sort();
    Ok(Representative { rows: n, cols, entries })
}

impl Representative {
    /// Widen to `m` columns.
    pub fn with_columns(mut self, m: usize) -> Self {
        self.cols = self.cols.max(m);
        self
    }
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 1..=self.rows {
            let cells: Vec<String> = (1..=self.cols)
                .map(|col| match self.entries.iter().find(|e| e.0 == row && e.1 == col) {
                    Some(&(_, _, 0)) => "1".into(),
                    Some(&(_, _, 1)) => "t".into(),
                    Some(&(_, _, a)) => format!("t^{a}"),
                    None => "0".into(),
                })
                .collect();
            if row > 1 {
                writeln!(f)?;
            }
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
