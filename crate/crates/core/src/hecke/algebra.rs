use std::collections::BTreeMap;
use std::sync::Mutex;

use super::HeckeElt;
use crate::error::{Error, Result};
use crate::rings::{LaurentPoly, Profile};
use crate::syntax::{self, Atom, Semantics};
use crate::weyl::{AffineWeylElt, Perm};

/// Generators of `𝓗_m` with the affine and length-zero elements precomputed.
///
/// `T_{w₁} = s^{1−m} e^{−ω₁} T_{σ₁}`, `T_{w₁}^{−1} = s^{m−1} T_{σ₁}^{−1} e^{ω₁}` and
/// `T_{s_m} = T_{w₁}^{−1} T_{s₁} T_{w₁}`.
pub struct HeckeAlgebra {
    m: usize,
    tw1: HeckeElt,
    tw1_inv: HeckeElt,
    tsm: Option<HeckeElt>,
    omega_pows: Mutex<BTreeMap<i64, HeckeElt>>,
}

fn s_pow(k: i32) -> LaurentPoly {
    LaurentPoly::s_pow(Profile::S, k)
}

impl HeckeAlgebra {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "rank must be positive");
        let m32 = m as i32;
        let omega1: Vec<i32> = (0..m).map(|k| (k == 0) as i32).collect();
        let neg_omega1: Vec<i32> = omega1.iter().map(|x| -x).collect();
        let sigma1 = Perm::rotation(m, 1);
        let tw1 = HeckeElt::basis(neg_omega1, sigma1, s_pow(1 - m32));
        let sigma_inv = (1..m).rev().fold(HeckeElt::one(m), |acc, i| acc.mul(&finite_inverse(m, i)));
        let tw1_inv = sigma_inv.mul(&HeckeElt::e(&omega1)).scale(&s_pow(m32 - 1));
        let tsm = (m >= 2).then(|| tw1_inv.mul(&HeckeElt::t_finite(m, 1)).mul(&tw1));
        HeckeAlgebra { m, tw1, tw1_inv, tsm, omega_pows: Mutex::new(BTreeMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    /// `T_{s_i}` for `1 ≤ i ≤ m`; `i = m` is the affine node.
    pub fn t(&self, i: usize) -> HeckeElt {
        assert!(self.m >= 2 && i >= 1 && i <= self.m, "no generator T[{i}] for m={}", self.m);
        if i < self.m {
            HeckeElt::t_finite(self.m, i)
        } else {
            self.tsm.clone().expect("m ≥ 2")
        }
    }

    /// `T_{s_i}^{−1} = v^{−1}T_{s_i} + (v^{−1} − 1)`.
    pub fn t_inverse(&self, i: usize) -> HeckeElt {
        let t = self.t(i);
        t.scale(&s_pow(-2)).add(&HeckeElt::scalar(self.m, &s_pow(-2) - &LaurentPoly::one(Profile::S)))
    }

    /// `T_{w₁}^k`; `T_{w_i} = T_{w₁}^i`.
    pub fn tw(&self, k: i64) -> HeckeElt {
        if k == 0 {
            return HeckeElt::one(self.m);
        }
        if let Some(h) = self.omega_pows.lock().expect("cache").get(&k) {
            return h.clone();
        }
        let (base, prev) = if k > 0 { (&self.tw1, k - 1) } else { (&self.tw1_inv, k + 1) };
        let h = self.tw(prev).mul(base);
        self.omega_pows.lock().expect("cache").insert(k, h.clone());
        h
    }

    /// `T_w` in the Bernstein basis, via `w = w₁^k s_{i₁}⋯s_{i_ℓ}`.
    pub fn t_element(&self, w: &AffineWeylElt) -> HeckeElt {
        assert_eq!(w.rank(), self.m, "rank mismatch");
        let (k, word) = w.reduced_word();
        word.iter().fold(self.tw(k), |acc, &i| acc.mul(&self.t(i)))
    }

    /// `T_w^{−1} = T_{s_{i_ℓ}}^{−1}⋯T_{s_{i₁}}^{−1} T_{w₁}^{−k}`.
    pub fn t_element_inverse(&self, w: &AffineWeylElt) -> HeckeElt {
        assert_eq!(w.rank(), self.m, "rank mismatch");
        let (k, word) = w.reduced_word();
        let letters = word.iter().rev().fold(HeckeElt::one(self.m), |acc, &i| acc.mul(&self.t_inverse(i)));
        letters.mul(&self.tw(-k))
    }

    /// `e^λ = s^{ℓ(t^{λ⁻}) − ℓ(t^{λ⁺})} T_{t^{λ⁺}} T_{t^{λ⁻}}^{−1}` with `λ = λ⁺ − λ⁻` both dominant.
    pub fn e_via_translations(&self, lambda: &[i32]) -> HeckeElt {
        let (plus, minus) = dominant_split(lambda);
        let tp = AffineWeylElt::translation(&plus);
        let tm = AffineWeylElt::translation(&minus);
        let shift = tm.length() as i32 - tp.length() as i32;
        self.t_element(&tp).mul(&self.t_element_inverse(&tm)).scale(&s_pow(shift))
    }

    /// Invert a single term `c·e^λT_w` with `c` a unit, or the affine generator `T_{s_m}`.
    pub fn try_inverse(&self, h: &HeckeElt) -> Result<HeckeElt> {
        let m = self.m;
        if h.len() == 1 {
            let ((lambda, perm), c) = h.terms().next().expect("one term");
            if HeckeElt::is_unit_coefficient(c) {
                let neg: Vec<i32> = lambda.iter().map(|x| -x).collect();
                let word = perm.reduced_word();
                let t_inv = word.iter().rev().fold(HeckeElt::one(m), |acc, &i| acc.mul(&finite_inverse(m, i)));
                return Ok(t_inv.mul(&HeckeElt::e(&neg)).scale(&c.inverse()?));
            }
        }
        if m >= 2 && *h == self.t(m) {
            return Ok(self.t_inverse(m));
        }
        Err(Error::NotInvertible)
    }

    /// Parse `e[λ]`, `T[i]`, `Tw[k]`, `s`, integers, sums, products and powers.
    pub fn parse(&self, src: &str) -> Result<HeckeElt> {
        syntax::parse(&HeckeSemantics(self), src)
    }
}

fn finite_inverse(m: usize, i: usize) -> HeckeElt {
    HeckeElt::t_finite(m, i)
        .scale(&s_pow(-2))
        .add(&HeckeElt::scalar(m, &s_pow(-2) - &LaurentPoly::one(Profile::S)))
}

/// `(λ⁺, λ⁻)` with both dominant and `λ = λ⁺ − λ⁻`.
pub fn dominant_split(lambda: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let m = lambda.len();
    let mut minus = vec![0; m];
    for j in (0..m.saturating_sub(1)).rev() {
        minus[j] = minus[j + 1].max(minus[j + 1] + lambda[j + 1] - lambda[j]);
    }
    let plus = lambda.iter().zip(&minus).map(|(a, b)| a + b).collect();
    (plus, minus)
}

pub(crate) struct HeckeSemantics<'a>(pub &'a HeckeAlgebra);

impl HeckeSemantics<'_> {
    fn bad(pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse { pos, msg: msg.into() }
    }
}

impl Semantics for HeckeSemantics<'_> {
    type Value = HeckeElt;

    fn atom(&self, atom: Atom<'_>, pos: usize) -> Result<HeckeElt> {
        let alg = self.0;
        let m = alg.rank();
        match atom {
            Atom::Int(n) => Ok(HeckeElt::scalar(m, LaurentPoly::constant(Profile::S, n))),
            Atom::Ident("s", None) => Ok(HeckeElt::scalar(m, s_pow(1))),
            Atom::Ident("v", None) => Ok(HeckeElt::scalar(m, s_pow(2))),
            Atom::Ident("e", Some(args)) => {
                if args.len() != m {
                    return Err(Self::bad(pos, format!("e[..] needs {m} entries")));
                }
                let lambda = args
                    .into_iter()
                    .map(|x| i32::try_from(x).map_err(|_| Self::bad(pos, "entry out of range")))
                    .collect::<Result<Vec<i32>>>()?;
                Ok(HeckeElt::e(&lambda))
            }
            Atom::Ident("T", Some(args)) => match args.as_slice() {
                [i] if m >= 2 && *i >= 1 && (*i as usize) <= m => Ok(alg.t(*i as usize)),
                _ => Err(Self::bad(pos, format!("T[i] needs 1 ≤ i ≤ {m} (and m ≥ 2)"))),
            },
            Atom::Ident("Tw", Some(args)) => match args.as_slice() {
                [k] => Ok(alg.tw(*k)),
                _ => Err(Self::bad(pos, "Tw[k] takes one integer")),
            },
            Atom::Ident(name, _) => Err(Self::bad(pos, format!("unknown symbol {name}"))),
        }
    }

    fn add(&self, a: HeckeElt, b: HeckeElt, _: usize) -> Result<HeckeElt> {
        a.checked_add(&b)
    }

    fn sub(&self, a: HeckeElt, b: HeckeElt, _: usize) -> Result<HeckeElt> {
        a.checked_sub(&b)
    }

    fn mul(&self, a: HeckeElt, b: HeckeElt, _: usize) -> Result<HeckeElt> {
        a.checked_mul(&b)
    }

    fn neg(&self, a: HeckeElt, _: usize) -> Result<HeckeElt> {
        Ok(a.neg())
    }

    fn pow(&self, a: HeckeElt, k: i64, pos: usize) -> Result<HeckeElt> {
        let base = if k < 0 { self.0.try_inverse(&a).map_err(|e| Self::bad(pos, e.to_string()))? } else { a };
        let mut out = HeckeElt::one(self.0.rank());
        for _ in 0..k.unsigned_abs() {
            out = out.checked_mul(&base)?;
        }
        Ok(out)
    }
}
