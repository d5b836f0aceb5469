//! Exact sparse Laurent polynomials over the integers.
//!
//! A polynomial lives in one of three variable profiles: `{s}`, `{g, s}` or
//! `{x1..xm, s}`. Monomials are dense exponent vectors over the profile's
//! variables in that slot order, compared lexicographically, and the term map
//! is a `BTreeMap`, so equal values always have identical representations.
//! Terms print in descending order with variables written as `g, s, x1, …`.

mod linalg;
mod ops;
mod parse;

pub use linalg::{adjugate, det, div_exact, solve, FracMatrix, FracVec};
pub use ops::{demazure_quotient, orbit_sum, specialize, telescope};
pub use parse::{parse_poly, term_cap, TERM_CAP_ENV};
pub(crate) use ops::next_permutation as next_perm;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{raise, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    G,
    S,
    X(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::G => f.write_str("g"),
            Var::S => f.write_str("s"),
            Var::X(k) => write!(f, "x{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Profile {
    /// `ℤ[s^±]`
    S,
    /// `ℤ[g^±, s^±]`
    GS,
    /// `ℤ[x1^±, …, xm^±, s^±]`
    X(u8),
}

impl Profile {
    pub fn arity(self) -> usize {
        match self {
            Profile::S => 1,
            Profile::GS => 2,
            Profile::X(m) => 1 + m as usize,
        }
    }

    pub fn vars(self) -> Vec<Var> {
        match self {
            Profile::S => vec![Var::S],
            Profile::GS => vec![Var::G, Var::S],
            Profile::X(m) => (1..=m).map(Var::X).chain(std::iter::once(Var::S)).collect(),
        }
    }

    pub fn slot(self, var: Var) -> Option<usize> {
        match (self, var) {
            (Profile::S, Var::S) => Some(0),
            (Profile::GS, Var::G) => Some(0),
            (Profile::GS, Var::S) => Some(1),
            (Profile::X(m), Var::S) => Some(m as usize),
            (Profile::X(m), Var::X(k)) if k >= 1 && k <= m => Some(k as usize - 1),
            _ => None,
        }
    }

    /// Slot of `s`, present in every profile.
    pub fn s_slot(self) -> usize {
        match self {
            Profile::S => 0,
            Profile::GS => 1,
            Profile::X(m) => m as usize,
        }
    }

    pub fn rank(self) -> Option<usize> {
        match self {
            Profile::X(m) => Some(m as usize),
            _ => None,
        }
    }
}

/// Dense exponent vector; the variables are those of the owning profile.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity].into_boxed_slice())
    }

    pub fn from_exps(exps: Vec<i32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    profile: Profile,
    terms: BTreeMap<Monomial, BigInt>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.profile, self)
    }
}

impl LaurentPoly {
    pub fn zero(profile: Profile) -> Self {
        LaurentPoly { profile, terms: BTreeMap::new() }
    }

    pub fn one(profile: Profile) -> Self {
        Self::constant(profile, BigInt::one())
    }

    pub fn constant(profile: Profile, c: impl Into<BigInt>) -> Self {
        Self::term(profile, Monomial::one(profile.arity()), c)
    }

    pub fn term(profile: Profile, mono: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(mono.0.len(), profile.arity(), "monomial arity");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPoly { profile, terms }
    }

    pub fn monomial(profile: Profile, exps: &[i32]) -> Self {
        Self::term(profile, Monomial::from_exps(exps.to_vec()), 1)
    }

    pub fn var(profile: Profile, var: Var) -> Result<Self> {
        Self::var_pow(profile, var, 1)
    }

    pub fn var_pow(profile: Profile, var: Var, k: i32) -> Result<Self> {
        let slot = profile
            .slot(var)
            .ok_or_else(|| Error::Invalid(format!("variable {var} not in profile {profile:?}")))?;
        let mut e = vec![0; profile.arity()];
        e[slot] = k;
        Ok(Self::monomial(profile, &e))
    }

    /// `s^k` in the given profile.
    pub fn s_pow(profile: Profile, k: i32) -> Self {
        let mut e = vec![0; profile.arity()];
        e[profile.s_slot()] = k;
        Self::monomial(profile, &e)
    }

    /// `x^λ` in profile `X(m)`.
    pub fn x_pow(lambda: &[i32]) -> Self {
        let mut e = lambda.to_vec();
        e.push(0);
        Self::monomial(Profile::X(lambda.len() as u8), &e)
    }

    /// `g^a s^b` in profile `GS`.
    pub fn gs(a: i32, b: i32) -> Self {
        Self::monomial(Profile::GS, &[a, b])
    }

    pub fn from_terms(profile: Profile, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(profile);
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        debug_assert_eq!(mono.0.len(), self.profile.arity());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt, shift: &Monomial) {
        assert_eq!(self.profile, other.profile, "profile mismatch");
        for (m, d) in &other.terms {
            self.add_term(m.mul(shift), d * c);
        }
    }

    /// The monomial and coefficient if this is a single term.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_profile(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_profile(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_profile(other)?;
        let mut out = LaurentPoly::zero(self.profile);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        if let Some(cap) = term_cap() {
            if out.len() > cap {
                return Err(Error::TermCap(out.len(), cap));
            }
        }
        Ok(out)
    }

    fn same_profile(&self, other: &LaurentPoly) -> Result<()> {
        if self.profile == other.profile {
            Ok(())
        } else {
            Err(Error::ProfileMismatch(self.profile, other.profile))
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.profile);
        }
        LaurentPoly {
            profile: self.profile,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn shift(&self, mono: &Monomial) -> LaurentPoly {
        LaurentPoly {
            profile: self.profile,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Integer power; negative exponents are allowed only for single terms with unit coefficient.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            let (m, c) = self.as_term().ok_or(Error::NotInvertible)?;
            if !c.abs().is_one() {
                return Err(Error::NotInvertible);
            }
            let k = i32::try_from(-k).map_err(|_| Error::Invalid("exponent too large".into()))?;
            let sign = if c.is_negative() && k % 2 == 1 { -1 } else { 1 };
            return Ok(LaurentPoly::term(self.profile, m.pow(-k), sign));
        }
        let mut out = LaurentPoly::one(self.profile);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                out = out.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(out)
    }

    /// Inverse of a unit (`±` monomial).
    pub fn inverse(&self) -> Result<LaurentPoly> {
        self.pow(-1)
    }

    /// Re-embed in a profile containing all variables of this one.
    pub fn embed(&self, target: Profile) -> Result<LaurentPoly> {
        if target == self.profile {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .profile
            .vars()
            .into_iter()
            .map(|v| target.slot(v).ok_or(Error::ProfileMismatch(self.profile, target)))
            .collect::<Result<_>>()?;
        let n = target.arity();
        Ok(LaurentPoly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exps(e), c.clone())
            }),
        ))
    }

    /// Substitute every variable by a unit monomial of another profile.
    ///
    /// `images[i]` is the image of the i-th profile variable as a dense exponent
    /// vector of `target`.
    pub fn substitute_monomials(&self, target: Profile, images: &[Vec<i32>]) -> LaurentPoly {
        assert_eq!(images.len(), self.profile.arity());
        let n = target.arity();
        LaurentPoly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0i32; n];
                for (i, &x) in m.0.iter().enumerate() {
                    if x != 0 {
                        for (slot, &y) in images[i].iter().enumerate() {
                            e[slot] += x * y;
                        }
                    }
                }
                (Monomial::from_exps(e), c.clone())
            }),
        )
    }

    /// Coefficient-wise split by the exponent of one slot.
    pub fn split_by_slot(&self, slot: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.0[slot])
                .or_insert_with(|| LaurentPoly::zero(self.profile))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Per-slot minimum and maximum exponents; `None` for zero.
    pub fn exponent_box(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.to_vec();
        let mut hi = first.0.to_vec();
        for m in it {
            for (i, &e) in m.0.iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        Some((lo, hi))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| raise(e))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            profile: self.profile,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[(Var, usize)], mono: &Monomial) -> fmt::Result {
    let mut first = true;
    for &(v, slot) in vars {
        let e = mono.0[slot];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Descending canonical order, e.g. `3*s^-2*x1^2 - x2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut vars: Vec<(Var, usize)> = self.profile.vars().into_iter().enumerate().map(|(i, v)| (v, i)).collect();
        vars.sort();
        for (idx, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, &vars, mono)?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(profile: Profile, s: &str) -> LaurentPoly {
        parse_poly(profile, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = Profile::X(2);
        let a = p(x, "x1 + s");
        let b = p(x, "x1 - s");
        assert_eq!(&a * &b, p(x, "x1^2 - s^2"));
    }

    #[test]
    fn unit_shift() {
        let x = Profile::X(2);
        let a = &LaurentPoly::x_pow(&[1, 0]) - &LaurentPoly::x_pow(&[0, 1]);
        let b = LaurentPoly::x_pow(&[0, 1]).inverse().unwrap();
        assert_eq!(&a * &b, p(x, "x1*x2^-1 - 1"));
    }

    #[test]
    fn printing_is_descending() {
        let x = Profile::X(2);
        let a = p(x, "-1 + s^2 + s^2*x1*x2^-1");
        assert_eq!(a.to_string(), "s^2*x1*x2^-1 + s^2 - 1");
        assert_eq!(p(x, "3*s^-2*x1^2 - x2").to_string(), "3*s^-2*x1^2 - x2");
        assert_eq!(LaurentPoly::zero(x).to_string(), "0");
        assert_eq!(p(Profile::GS, "-g").to_string(), "-g");
    }

    #[test]
    fn profile_mismatch_rejected() {
        let a = LaurentPoly::one(Profile::S);
        let b = LaurentPoly::one(Profile::GS);
        assert_eq!(a.checked_add(&b), Err(Error::ProfileMismatch(Profile::S, Profile::GS)));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn embed_s_into_x() {
        let a = p(Profile::S, "s^2 - 1");
        let b = a.embed(Profile::X(3)).unwrap();
        assert_eq!(b, p(Profile::X(3), "s^2 - 1"));
        assert!(b.embed(Profile::S).is_err());
    }

    #[test]
    fn negative_power_of_binomial_rejected() {
        assert_eq!(p(Profile::S, "s + 1").pow(-1), Err(Error::NotInvertible));
        assert_eq!(p(Profile::S, "-s").pow(-3).unwrap(), p(Profile::S, "-s^-3"));
    }
}
