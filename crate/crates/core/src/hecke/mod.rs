//! The extended affine Hecke algebra of GL_m in the Bernstein basis `e^λ T_w`.
//!
//! Coefficients live in `ℤ[s^±]` with `v = s²`. Products are normal-ordered by
//! moving `T_{s_i}` letters right past `e^μ` with
//! `T_i e^μ = e^{s_iμ} T_i + (v−1)(e^μ − e^{s_iμ})/(1 − e^{−α_i})`.

mod algebra;

pub use algebra::{dominant_split, HeckeAlgebra};
pub(crate) use algebra::HeckeSemantics;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{raise, Error, Result};
use crate::rings::{demazure_quotient, term_cap, LaurentPoly, Profile};
use crate::weyl::Perm;

pub type Key = (Vec<i32>, Perm);

/// A finite sum `Σ c_{λ,w} e^λ T_w` with `c ∈ ℤ[s^±]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    m: usize,
    terms: BTreeMap<Key, LaurentPoly>,
}

fn v() -> LaurentPoly {
    LaurentPoly::s_pow(Profile::S, 2)
}

fn v_minus_one() -> LaurentPoly {
    &v() - &LaurentPoly::one(Profile::S)
}

impl HeckeElt {
    pub fn zero(m: usize) -> Self {
        HeckeElt { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(m, LaurentPoly::one(Profile::S))
    }

    pub fn scalar(m: usize, c: LaurentPoly) -> Self {
        Self::basis(vec![0; m], Perm::identity(m), c)
    }

    /// `c · e^λ T_w`.
    pub fn basis(lambda: Vec<i32>, perm: Perm, c: LaurentPoly) -> Self {
        assert_eq!(lambda.len(), perm.len(), "rank mismatch");
        assert_eq!(c.profile(), Profile::S, "coefficients live in ℤ[s^±]");
        let mut out = Self::zero(lambda.len());
        out.add_term((lambda, perm), c);
        out
    }

    pub fn e(lambda: &[i32]) -> Self {
        Self::basis(lambda.to_vec(), Perm::identity(lambda.len()), LaurentPoly::one(Profile::S))
    }

    pub fn t_perm(perm: Perm) -> Self {
        let m = perm.len();
        Self::basis(vec![0; m], perm, LaurentPoly::one(Profile::S))
    }

    /// `T_{s_i}` for a finite simple reflection `1 ≤ i < m`.
    pub fn t_finite(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i < m, "finite simple reflection index {i} out of range");
        Self::t_perm(Perm::transposition(m, i, i + 1))
    }

    /// `Σ_μ c_μ e^μ` from a polynomial in profile `X(m)`; the `s` exponents become coefficients.
    pub fn from_x_poly(p: &LaurentPoly) -> Self {
        let m = p.profile().rank().expect("x-profile polynomial");
        let mut out = Self::zero(m);
        for (mono, c) in p.terms() {
            let e = mono.exps();
            let coeff = LaurentPoly::term(Profile::S, crate::rings::Monomial::from_exps(vec![e[m]]), c.clone());
            out.add_term((e[..m].to_vec(), Perm::identity(m)), coeff);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &[i32], perm: &Perm) -> LaurentPoly {
        self.terms.get(&(lambda.to_vec(), perm.clone())).cloned().unwrap_or_else(|| LaurentPoly::zero(Profile::S))
    }

    /// The scalar if this element is `c · 1`.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        if self.terms.is_empty() {
            return Some(LaurentPoly::zero(Profile::S));
        }
        match self.terms.iter().next() {
            Some(((l, p), c)) if self.terms.len() == 1 && p.is_identity() && l.iter().all(|&x| x == 0) => {
                Some(c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, key: Key, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_rank(&self, other: &HeckeElt) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.m, other.m))
        }
    }

    pub fn checked_add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        self.checked_add(other).unwrap_or_else(|e| raise(e))
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        self.checked_sub(other).unwrap_or_else(|e| raise(e))
    }

    pub fn neg(&self) -> HeckeElt {
        HeckeElt { m: self.m, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero(self.m);
        for (k, d) in &self.terms {
            out.add_term(k.clone(), d * c);
        }
        out
    }

    /// `e^λ · self`.
    pub fn shift(&self, lambda: &[i32]) -> HeckeElt {
        HeckeElt {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|((l, p), c)| ((l.iter().zip(lambda).map(|(a, b)| a + b).collect(), p.clone()), c.clone()))
                .collect(),
        }
    }

    /// `T_{s_i} · self` for a finite index `1 ≤ i < m`.
    pub fn left_mul_simple(&self, i: usize) -> HeckeElt {
        let m = self.m;
        let si = Perm::transposition(m, i, i + 1);
        let vm1 = v_minus_one();
        let vv = v();
        let mut out = HeckeElt::zero(m);
        for ((mu, u), c) in &self.terms {
            let reflected = si.act(mu);
            let siu = si.compose(u);
            let uinv = u.inverse();
            if uinv.at(i - 1) < uinv.at(i) {
                out.add_term((reflected, siu), c.clone());
            } else {
                out.add_term((reflected.clone(), u.clone()), c * &vm1);
                out.add_term((reflected, siu), c * &vv);
            }
            let d = demazure_quotient(mu, i);
            if !d.is_zero() {
                let cd = c * &vm1;
                for (mono, k) in d.terms() {
                    let nu = mono.exps()[..m].to_vec();
                    out.add_term((nu, u.clone()), cd.scale(k));
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check_rank(other)?;
        let mut by_perm: BTreeMap<&Perm, Vec<(&Vec<i32>, &LaurentPoly)>> = BTreeMap::new();
        for ((l, p), c) in &self.terms {
            by_perm.entry(p).or_default().push((l, c));
        }
        let mut out = HeckeElt::zero(self.m);
        for (perm, parts) in by_perm {
            let mut tb = other.clone();
            for &i in perm.reduced_word().iter().rev() {
                tb = tb.left_mul_simple(i);
            }
            for (lambda, c) in parts {
                for ((l, p), d) in &tb.terms {
                    let key = (l.iter().zip(lambda.iter()).map(|(a, b)| a + b).collect(), p.clone());
                    out.add_term(key, c * d);
                }
            }
        }
        if let Some(cap) = term_cap() {
            if out.len() > cap {
                return Err(Error::TermCap(out.len(), cap));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeckeElt) -> HeckeElt {
        self.checked_mul(other).unwrap_or_else(|e| raise(e))
    }

    /// Specialize `s ↦ 1`: the image in the group algebra `ℤ[W̃]`, keyed by `(λ, w)`.
    pub fn at_s_one(&self) -> BTreeMap<Key, num_bigint::BigInt> {
        let mut out: BTreeMap<Key, num_bigint::BigInt> = BTreeMap::new();
        for (k, c) in &self.terms {
            let total: num_bigint::BigInt = c.terms().map(|(_, x)| x.clone()).sum();
            if total != num_bigint::BigInt::from(0) {
                *out.entry(k.clone()).or_default() += total;
            }
        }
        out.retain(|_, c| *c != num_bigint::BigInt::from(0));
        out
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, lambda: &[i32], perm: &Perm) -> fmt::Result {
    let mut parts = Vec::new();
    if lambda.iter().any(|&x| x != 0) {
        let l: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
        parts.push(format!("e[{}]", l.join(",")));
    }
    for i in perm.reduced_word() {
        parts.push(format!("T[{i}]"));
    }
    f.write_str(&parts.join("*"))
}

/// Canonical Bernstein form, e.g. `(s^2 - 1)*e[1,0]*T[1] - s*e[0,1]`.
impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((lambda, perm), c)) in self.terms.iter().enumerate() {
            let bare = perm.is_identity() && lambda.iter().all(|&x| x == 0);
            let single = c.as_term().map(|(mono, k)| (mono.clone(), k.clone()));
            match single {
                Some((mono, k)) => {
                    let neg = k.is_negative();
                    match (idx, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    let abs = LaurentPoly::term(Profile::S, mono, k.abs());
                    if bare {
                        write!(f, "{abs}")?;
                    } else {
                        if !abs.is_one() {
                            write!(f, "{abs}*")?;
                        }
                        write_factor(f, lambda, perm)?;
                    }
                }
                None => {
                    if idx > 0 {
                        f.write_str(" + ")?;
                    }
                    if bare {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*")?;
                        write_factor(f, lambda, perm)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt[m={}]({})", self.m, self)
    }
}

impl serde::Serialize for HeckeElt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl HeckeElt {
    pub(crate) fn is_unit_coefficient(c: &LaurentPoly) -> bool {
        c.as_term().map(|(_, k)| k.abs().is_one()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests;
