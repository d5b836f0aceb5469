//! Translating the sheaf-level formulas into Hecke elements and evaluating them.
//!
//! Two readings of `[n](d/2)` are compared. Convention A drops Tate twists and
//! reads the shift `[n]` as `s^{−n}`, so `[L_{s}] = s^{−1}(T_s + 1)` and
//! `[L_{s!}] = s^{−1}T_s`. Convention B takes traces of Frobenius: `[n] ↦ (−1)^n`,
//! `(d/2) ↦ s^{−d}`, so `[L_{s}] = −s^{−1}(T_s + 1)` and `[L_{s!}] = −s^{−1}T_s`.

use serde::Serialize;

use super::{ThetaModule, ThetaVector};
use crate::error::Result;
use crate::rings::{FracVec, LaurentPoly, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Convention {
    A,
    B,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::A => "convention-A",
            Convention::B => "convention-B",
        }
    }

    /// `[n](d/2)` as an element of `ℤ[s^±]`.
    pub fn shift_twist(self, n: i32, d: i32) -> LaurentPoly {
        match self {
            Convention::A => LaurentPoly::gs(0, -n),
            Convention::B => {
                let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
                LaurentPoly::gs(0, -d).scale(&sign.into())
            }
        }
    }

    fn sign(self) -> LaurentPoly {
        match self {
            Convention::A => LaurentPoly::one(Profile::GS),
            Convention::B => LaurentPoly::constant(Profile::GS, -1),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaResult {
    pub formula: usize,
    pub label: &'static str,
    pub matches: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DictionaryReport {
    pub m: usize,
    pub convention_a: Vec<FormulaResult>,
    pub convention_b: Vec<FormulaResult>,
    /// Conventions under which all five formulas hold.
    pub reproducing: Vec<Convention>,
}

fn show(v: &FracVec) -> String {
    let body: Vec<String> = v.num.iter().map(|x| x.to_string()).collect();
    if v.den.is_one() {
        format!("[{}]", body.join(", "))
    } else {
        format!("[{}]/({})", body.join(", "), v.den)
    }
}

struct Formula {
    label: &'static str,
    first: Option<String>,
}

impl Formula {
    fn new(label: &'static str) -> Self {
        Formula { label, first: None }
    }

    fn expect(&mut self, at: String, lhs: &ThetaVector, rhs: &ThetaVector) {
        if self.first.is_none() && !lhs.same(rhs) {
            self.first = Some(format!("{at}: got {}, expected {}", show(&lhs.coords), show(&rhs.coords)));
        }
    }

    fn finish(self, formula: usize) -> FormulaResult {
        FormulaResult { formula, label: self.label, matches: self.first.is_none(), counterexample: self.first }
    }
}

/// Evaluate the five IC-basis formulas under one convention.
pub fn ic_sheaf_dictionary(theta: &ThetaModule, convention: Convention) -> Result<Vec<FormulaResult>> {
    let m = theta.rank();
    let mi = m as i64;
    let ic = |k: i64| ThetaVector::ic(m, k);
    let one = LaurentPoly::one(Profile::GS);
    let s_inv = LaurentPoly::gs(0, -1);
    let mut f1 = Formula::new("L_si * IC^i = IC^(i+1) + IC^(i-1)");
    let mut f2 = Formula::new("L_si! * IC^i = IC^(i+1,!) + IC^(i-1)");
    let mut f3 = Formula::new("L_si * IC^j = IC^j ([1](1/2) + [-1](-1/2)), j != i mod m");
    let mut f4 = Formula::new("L_si! * IC^j = IC^j [-1](-1/2), j != i mod m");
    let mut f5 = Formula::new("L_wi * IC^k = IC^(k+i)");
    if m >= 2 {
        let both = &convention.shift_twist(1, 1) + &convention.shift_twist(-1, -1);
        let down = convention.shift_twist(-1, -1);
        let shift = convention.shift_twist(1, 0);
        for i in 1..=m {
            let t = theta.t(i)?;
            let eps = convention.sign();
            let l_s = t.add(&crate::rings::FracMatrix::scalar(m, &one)).scale(&(&eps * &s_inv));
            let l_shriek = t.scale(&(&eps * &s_inv));
            let ii = i as i64;
            let at = format!("i={i}");
            f1.expect(at.clone(), &ic(ii).apply(&l_s), &ic(ii + 1).add(&ic(ii - 1)));
            let shriek = ic(ii + 1).add(&ic(ii).scale(&-&shift));
            f2.expect(at, &ic(ii).apply(&l_shriek), &shriek.add(&ic(ii - 1)));
            for j in 0..mi {
                if (j - ii).rem_euclid(mi) == 0 {
                    continue;
                }
                let at = format!("i={i} j={j}");
                f3.expect(at.clone(), &ic(j).apply(&l_s), &ic(j).scale(&both));
                f4.expect(at, &ic(j).apply(&l_shriek), &ic(j).scale(&down));
            }
        }
    }
    for i in -mi..=mi {
        let tw = theta.tw(i)?;
        for k in 0..mi {
            f5.expect(format!("i={i} k={k}"), &ic(k).apply(&tw), &ic(k + i));
        }
    }
    Ok([f1, f2, f3, f4, f5].into_iter().enumerate().map(|(n, f)| f.finish(n + 1)).collect())
}

impl DictionaryReport {
    pub fn build(theta: &ThetaModule) -> Result<Self> {
        let convention_a = ic_sheaf_dictionary(theta, Convention::A)?;
        let convention_b = ic_sheaf_dictionary(theta, Convention::B)?;
        let mut reproducing = Vec::new();
        if convention_a.iter().all(|r| r.matches) {
            reproducing.push(Convention::A);
        }
        if convention_b.iter().all(|r| r.matches) {
            reproducing.push(Convention::B);
        }
        Ok(DictionaryReport { m: theta.rank(), convention_a, convention_b, reproducing })
    }

    /// Plain-text rendering, one line per formula and convention.
    pub fn render(&self) -> String {
        let mut out = format!("m={}\n", self.m);
        for (conv, rows) in [(Convention::A, &self.convention_a), (Convention::B, &self.convention_b)] {
            for r in rows {
                let status = if r.matches { "match" } else { "mismatch" };
                out.push_str(&format!("{} formula {} {}: {}\n", conv.name(), r.formula, status, r.label));
                if let Some(c) = &r.counterexample {
                    out.push_str(&format!("  {c}\n"));
                }
            }
        }
        let names: Vec<&str> = self.reproducing.iter().map(|c| c.name()).collect();
        out.push_str(&format!("reproducing: {}\n", if names.is_empty() { "none".into() } else { names.join(", ") }));
        out
    }
}
