//! Fraction-free linear algebra over Laurent polynomial rings.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Profile};
use crate::error::{Error, Result};

/// `a / b` when the quotient is a Laurent polynomial.
///
/// Leading-term division in lex order; quotient exponents are confined to the
/// box `[min a − min b, max a − max b]`, which makes the loop finite.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    assert_eq!(a.profile(), b.profile(), "profile mismatch");
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(a.clone());
    }
    if let Some((_, c)) = b.as_term() {
        if c.abs().is_one() {
            return Some(a * &b.inverse().expect("unit"));
        }
    }
    let (alo, ahi) = a.exponent_box()?;
    let (blo, bhi) = b.exponent_box()?;
    let qlo: Vec<i32> = alo.iter().zip(&blo).map(|(x, y)| x - y).collect();
    let qhi: Vec<i32> = ahi.iter().zip(&bhi).map(|(x, y)| x - y).collect();
    if qlo.iter().zip(&qhi).any(|(l, h)| l > h) {
        return None;
    }
    let (lb, lc) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut r = a.clone();
    let mut q = LaurentPoly::zero(a.profile());
    while let Some((lm, c)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let t = lm.div(&lb);
        if t.exps().iter().zip(qlo.iter().zip(&qhi)).any(|(e, (l, h))| e < l || e > h) {
            return None;
        }
        let (coef, rem) = c.div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        r.add_scaled(b, &-&coef, &t);
        q.add_term(t, coef);
    }
    Some(q)
}

fn divide(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    div_exact(a, b).expect("fraction-free step must divide exactly")
}

/// Bareiss determinant.
pub fn det(profile: Profile, a: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one(profile);
    }
    let mut m: Vec<Vec<LaurentPoly>> = a.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one(profile);
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPoly::zero(profile);
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = divide(&num, &prev);
            }
            m[i][k] = LaurentPoly::zero(profile);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Fraction-free solve of `A·Y = d·B`; returns `(Y, d)` with `d = ±det A ≠ 0`.
pub fn solve(
    profile: Profile,
    a: &[Vec<LaurentPoly>],
    b: &[Vec<LaurentPoly>],
) -> Result<(Vec<Vec<LaurentPoly>>, LaurentPoly)> {
    let n = a.len();
    if n == 0 {
        return Ok((Vec::new(), LaurentPoly::one(profile)));
    }
    let r = b[0].len();
    let mut m: Vec<Vec<LaurentPoly>> =
        a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect()).collect();
    let w = n + r;
    let mut prev = LaurentPoly::one(profile);
    for k in 0..n {
        let p = (k..n).find(|&row| !m[row][k].is_zero()).ok_or(Error::Singular)?;
        m.swap(p, k);
        for i in k + 1..n {
            for j in k + 1..w {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = divide(&num, &prev);
            }
            m[i][k] = LaurentPoly::zero(profile);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    let mut y = vec![vec![LaurentPoly::zero(profile); r]; n];
    for i in (0..n).rev() {
        for c in 0..r {
            let mut acc = &d * &m[i][n + c];
            for j in i + 1..n {
                acc = &acc - &(&m[i][j] * &y[j][c]);
            }
            y[i][c] = divide(&acc, &m[i][i]);
        }
    }
    Ok((y, d))
}

/// `(adj A, det A)` with `A · adj A = det A · I`.
pub fn adjugate(profile: Profile, a: &[Vec<LaurentPoly>]) -> Result<(Vec<Vec<LaurentPoly>>, LaurentPoly)> {
    let n = a.len();
    let id: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one(profile) } else { LaurentPoly::zero(profile) })
                .collect()
        })
        .collect();
    solve(profile, a, &id)
}

fn normalize_parts(num: &mut [&mut LaurentPoly], den: &mut LaurentPoly) {
    if den.is_one() {
        return;
    }
    if let Some((_, c)) = den.as_term() {
        if c.abs().is_one() {
            let inv = den.inverse().expect("unit");
            for x in num.iter_mut() {
                **x = &**x * &inv;
            }
            *den = LaurentPoly::one(den.profile());
            return;
        }
    }
    let mut quotients = Vec::with_capacity(num.len());
    for x in num.iter() {
        match div_exact(x, den) {
            Some(q) => quotients.push(q),
            None => return,
        }
    }
    for (x, q) in num.iter_mut().zip(quotients) {
        **x = q;
    }
    *den = LaurentPoly::one(den.profile());
}

/// Vector over the fraction field, stored with a common denominator.
#[derive(Clone, Debug)]
pub struct FracVec {
    pub num: Vec<LaurentPoly>,
    pub den: LaurentPoly,
}

impl FracVec {
    pub fn integral(num: Vec<LaurentPoly>) -> Self {
        let profile = num.first().map(|p| p.profile()).unwrap_or(Profile::GS);
        FracVec { num, den: LaurentPoly::one(profile) }
    }

    pub fn new(num: Vec<LaurentPoly>, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut v = FracVec { num, den };
        v.normalize();
        v
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn normalize(&mut self) {
        let mut refs: Vec<&mut LaurentPoly> = self.num.iter_mut().collect();
        normalize_parts(&mut refs, &mut self.den);
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &LaurentPoly) -> FracVec {
        FracVec::new(self.num.iter().map(|x| x * c).collect(), self.den.clone())
    }

    pub fn add(&self, other: &FracVec) -> FracVec {
        if self.den == other.den {
            return FracVec::new(
                self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect(),
                self.den.clone(),
            );
        }
        FracVec::new(
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| &(a * &other.den) + &(b * &self.den))
                .collect(),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &FracVec) -> FracVec {
        self.add(&FracVec { num: other.num.iter().map(|x| -x).collect(), den: other.den.clone() })
    }

    /// Equality over the fraction field.
    pub fn same(&self, other: &FracVec) -> bool {
        self.num.len() == other.num.len()
            && self.num.iter().zip(&other.num).all(|(a, b)| a * &other.den == b * &self.den)
    }
}

/// Matrix over the fraction field, stored with a common denominator.
#[derive(Clone, Debug)]
pub struct FracMatrix {
    pub num: Vec<Vec<LaurentPoly>>,
    pub den: LaurentPoly,
}

impl FracMatrix {
    pub fn new(num: Vec<Vec<LaurentPoly>>, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut m = FracMatrix { num, den };
        m.normalize();
        m
    }

    pub fn integral(num: Vec<Vec<LaurentPoly>>, profile: Profile) -> Self {
        FracMatrix { num, den: LaurentPoly::one(profile) }
    }

    pub fn identity(n: usize, profile: Profile) -> Self {
        Self::scalar(n, &LaurentPoly::one(profile))
    }

    pub fn scalar(n: usize, c: &LaurentPoly) -> Self {
        let profile = c.profile();
        let num = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c.clone() } else { LaurentPoly::zero(profile) }).collect())
            .collect();
        FracMatrix { num, den: LaurentPoly::one(profile) }
    }

    pub fn from_columns(cols: &[FracVec]) -> Self {
        let n = cols.first().map(|c| c.len()).unwrap_or(0);
        let profile = cols.first().map(|c| c.den.profile()).unwrap_or(Profile::GS);
        let mut den = LaurentPoly::one(profile);
        for c in cols {
            if c.den != den && div_exact(&den, &c.den).is_none() {
                den = &den * &c.den;
            }
        }
        let num = (0..n)
            .map(|i| cols.iter().map(|c| &c.num[i] * &divide(&den, &c.den)).collect())
            .collect();
        FracMatrix::new(num, den)
    }

    pub fn dim(&self) -> usize {
        self.num.len()
    }

    pub fn profile(&self) -> Profile {
        self.den.profile()
    }

    pub fn normalize(&mut self) {
        let mut refs: Vec<&mut LaurentPoly> = self.num.iter_mut().flat_map(|r| r.iter_mut()).collect();
        normalize_parts(&mut refs, &mut self.den);
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn column(&self, j: usize) -> FracVec {
        FracVec::new(self.num.iter().map(|r| r[j].clone()).collect(), self.den.clone())
    }

    pub fn mul(&self, other: &FracMatrix) -> FracMatrix {
        let n = self.num.len();
        let c = other.num.first().map(|r| r.len()).unwrap_or(0);
        let profile = self.profile();
        let mut out = vec![vec![LaurentPoly::zero(profile); c]; n];
        for (row, out_row) in self.num.iter().zip(out.iter_mut()) {
            for (a, b_row) in row.iter().zip(&other.num) {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    if !b.is_zero() {
                        *o = &*o + &(a * b);
                    }
                }
            }
        }
        FracMatrix::new(out, &self.den * &other.den)
    }

    pub fn apply(&self, v: &FracVec) -> FracVec {
        let profile = self.profile();
        let num = self
            .num
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&v.num)
                    .fold(LaurentPoly::zero(profile), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        FracVec::new(num, &self.den * &v.den)
    }

    fn combine(&self, other: &FracMatrix, sign: i32) -> FracMatrix {
        let (da, db) = if self.den == other.den {
            (LaurentPoly::one(self.profile()), LaurentPoly::one(self.profile()))
        } else {
            (other.den.clone(), self.den.clone())
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .map(|(a, b)| {
                        let x = a * &da;
                        let y = b * &db;
                        if sign > 0 {
                            &x + &y
                        } else {
                            &x - &y
                        }
                    })
                    .collect()
            })
            .collect();
        FracMatrix::new(num, den)
    }

    pub fn add(&self, other: &FracMatrix) -> FracMatrix {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &FracMatrix) -> FracMatrix {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &LaurentPoly) -> FracMatrix {
        FracMatrix::new(
            self.num.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
            self.den.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// Equality over the fraction field.
    pub fn same(&self, other: &FracMatrix) -> bool {
        self.num.len() == other.num.len()
            && self.num.iter().zip(&other.num).all(|(ra, rb)| {
                ra.len() == rb.len() && ra.iter().zip(rb).all(|(a, b)| a * &other.den == b * &self.den)
            })
    }

    pub fn det(&self) -> (LaurentPoly, LaurentPoly) {
        let n = self.num.len() as i64;
        (det(self.profile(), &self.num), self.den.pow(n).expect("nonnegative power"))
    }

    /// Inverse over the fraction field.
    pub fn inverse(&self) -> Result<FracMatrix> {
        let (adj, d) = adjugate(self.profile(), &self.num)?;
        let scaled: Vec<Vec<LaurentPoly>> =
            adj.iter().map(|r| r.iter().map(|x| x * &self.den).collect()).collect();
        Ok(FracMatrix::new(scaled, d))
    }
}

impl std::fmt::Display for FracVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.num.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))?;
        if !self.den.is_one() {
            write!(f, "/({})", self.den)?;
        }
        Ok(())
    }
}
