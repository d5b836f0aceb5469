//! The polynomial representation of `𝓗_m` on `ℤ[x^±, s^±]`.
//!
//! `e^λ` acts by multiplication with `x^{−λ}` and a finite `T_{s_i}` acts on
//! monomials by the Demazure–Lusztig operator
//! `T_i x^μ = x^{−α}[Tel(μ, n) − v·Tel(μ, n−1)]`, `n = ⟨μ, α̌_i⟩`,
//! where `Tel(μ, k) = (x^μ − x^{μ−kα})/(1 − x^{−α})` is a finite telescoping sum.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::rings::{telescope, LaurentPoly, Monomial, Profile};

/// Elements of the module: polynomials in profile `X(m)`.
pub type PolyRepVector = LaurentPoly;

fn alpha(m: usize, i: usize) -> Vec<i32> {
    let mut a = vec![0; m];
    a[i - 1] = 1;
    a[i] = -1;
    a
}

/// `T_{s_i} ∗ f` for a finite index `1 ≤ i < m`.
pub fn t_act(i: usize, f: &LaurentPoly) -> LaurentPoly {
    let profile = f.profile();
    let m = profile.rank().expect("x-profile vector");
    let mut out = LaurentPoly::zero(profile);
    let mut neg_alpha: Vec<i32> = alpha(m, i).iter().map(|x| -x).collect();
    neg_alpha.push(0);
    for (mono, c) in f.terms() {
        let e = mono.exps();
        let mu = &e[..m];
        let n = mu[i - 1] - mu[i];
        let mut shift = neg_alpha.clone();
        shift[m] = e[m];
        let shift = Monomial::from_exps(shift);
        let upper = telescope(mu, i, n);
        let lower = telescope(mu, i, n - 1);
        out.add_scaled(&upper, c, &shift);
        let mut vshift = shift.exps().to_vec();
        vshift[m] += 2;
        out.add_scaled(&lower, &-c, &Monomial::from_exps(vshift));
    }
    debug_assert!(demazure_lusztig_identity(i, f, &out), "T_{i} action is not exact");
    out
}

/// `(x^α − 1)·T f = (1 − v) f − (1 − v x^α)·s_i f`.
fn demazure_lusztig_identity(i: usize, f: &LaurentPoly, tf: &LaurentPoly) -> bool {
    let profile = f.profile();
    let m = profile.rank().expect("x-profile vector");
    let one = LaurentPoly::one(profile);
    let v = LaurentPoly::s_pow(profile, 2);
    let xa = LaurentPoly::x_pow(&alpha(m, i));
    let swapped = swap_vars(f, i);
    let lhs = &(&xa - &one) * tf;
    let rhs = &(&(&one - &v) * f) - &(&(&one - &(&v * &xa)) * &swapped);
    lhs == rhs
}

/// `x_i ↔ x_{i+1}`.
pub fn swap_vars(f: &LaurentPoly, i: usize) -> LaurentPoly {
    LaurentPoly::from_terms(
        f.profile(),
        f.terms().map(|(mono, c)| {
            let mut e = mono.exps().to_vec();
            e.swap(i - 1, i);
            (Monomial::from_exps(e), c.clone())
        }),
    )
}

/// `h ∗ u`, through the Bernstein expansion of `h`.
pub fn act(h: &HeckeElt, u: &LaurentPoly) -> Result<LaurentPoly> {
    let m = h.rank();
    if u.profile() != Profile::X(m as u8) {
        return Err(Error::ProfileMismatch(Profile::X(m as u8), u.profile()));
    }
    let mut by_perm: std::collections::BTreeMap<_, Vec<_>> = std::collections::BTreeMap::new();
    for ((lambda, perm), c) in h.terms() {
        by_perm.entry(perm).or_default().push((lambda, c));
    }
    let mut out = LaurentPoly::zero(u.profile());
    for (perm, parts) in by_perm {
        let mut tu = u.clone();
        for &i in perm.reduced_word().iter().rev() {
            tu = t_act(i, &tu);
        }
        for (lambda, c) in parts {
            let mut shift: Vec<i32> = lambda.iter().map(|x| -x).collect();
            shift.push(0);
            let shift = Monomial::from_exps(shift);
            for (smono, k) in c.terms() {
                let mut sh = shift.exps().to_vec();
                sh[m] = smono.exps()[0];
                out.add_scaled(&tu, k, &Monomial::from_exps(sh));
            }
        }
    }
    Ok(out)
}

/// `(s² − 1) + s^{2(m−1)} x^{ξ+ω₁}` with `ξ = (0,…,0,−1)`.
pub fn tsm_closed_form(m: usize) -> LaurentPoly {
    let profile = Profile::X(m as u8);
    let mut lambda = vec![0; m];
    lambda[0] += 1;
    lambda[m - 1] -= 1;
    let mut e = lambda;
    e.push(2 * (m as i32 - 1));
    let head = &LaurentPoly::s_pow(profile, 2) - &LaurentPoly::one(profile);
    &head + &LaurentPoly::term(profile, Monomial::from_exps(e), BigInt::from(1))
}

/// `T_{s_m} ∗ 1` computed through `T_{s_m} = T_{w₁}^{−1}T_{s₁}T_{w₁}`, checked against the closed form.
pub fn t_sm_on_one(alg: &HeckeAlgebra) -> Result<LaurentPoly> {
    let m = alg.rank();
    if m < 2 {
        return Err(Error::Invalid("T_{s_m} needs m ≥ 2".into()));
    }
    let value = act(&alg.t(m), &LaurentPoly::one(Profile::X(m as u8)))?;
    if value != tsm_closed_form(m) {
        return Err(Error::Invalid(format!("T_s{m} * 1 = {value}, expected {}", tsm_closed_form(m))));
    }
    Ok(value)
}
