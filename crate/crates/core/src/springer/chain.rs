//! Sheaves on the nodal chain, localized at the fixed points.
//!
//! A class is recorded by its restriction at each `p_k`, normalized so that the
//! structure sheaf of the chain restricts to 1. A sheaf on `V_i` with fibers
//! `(a, b)` at `(p_i, p_{i+1})` restricts to `a·f` and `b·f'`, where the factor
//! is 1 at a smooth end of the chain and `(1 − c')/(1 − c'c)` at a node, `c`
//! and `c'` being the cotangent weights of `V_i` and of the other branch.

use super::FixedFlagTable;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::rings::{solve, FracVec, LaurentPoly, Profile};

fn gs(a: i32, b: i32) -> LaurentPoly {
    LaurentPoly::gs(a, b)
}

fn one() -> LaurentPoly {
    LaurentPoly::one(Profile::GS)
}

fn zero() -> LaurentPoly {
    LaurentPoly::zero(Profile::GS)
}

/// Cotangent weight of `V_i` at `p_i` (`left`) or at `p_{i+1}`.
fn cotangent(m: usize, i: usize, left: bool) -> LaurentPoly {
    let d = 2 * i as i32 - m as i32;
    if left {
        gs(1, d)
    } else {
        gs(-1, -d)
    }
}

/// `(numerator, denominator)` of the restriction factor of `𝒪_{V_i}` at one of its ends.
fn end_factor(m: usize, i: usize, left: bool) -> (LaurentPoly, LaurentPoly) {
    let own = cotangent(m, i, left);
    let other = if left {
        (i >= 2).then(|| cotangent(m, i - 1, false))
    } else {
        (i + 1 < m).then(|| cotangent(m, i + 1, true))
    };
    match other {
        None => (one(), one()),
        Some(c) => (&one() - &c, &one() - &(&c * &own)),
    }
}

/// The class of a line bundle on `V_i` with fibers `a` at `p_i` and `b` at `p_{i+1}`.
pub fn sheaf_on_line(m: usize, i: usize, a: &LaurentPoly, b: &LaurentPoly) -> FracVec {
    assert!(i >= 1 && i < m, "no line V_{i} for m={m}");
    let (ln, ld) = end_factor(m, i, true);
    let (rn, rd) = end_factor(m, i, false);
    let mut num = vec![zero(); m];
    num[i - 1] = &(a * &ln) * &rd;
    num[i] = &(b * &rn) * &ld;
    FracVec::new(num, &ld * &rd)
}

/// Skyscraper at a smooth end of the chain (`p_1` or `p_m`), or the point class when `m = 1`.
pub fn skyscraper(m: usize, k: usize) -> FracVec {
    let mut num = vec![zero(); m];
    num[k - 1] = match (m, k) {
        (1, _) => one(),
        (_, 1) => &one() - &cotangent(m, 1, true),
        (_, k) if k == m => &one() - &cotangent(m, m - 1, false),
        _ => panic!("p_{k} is a node"),
    };
    FracVec::integral(num)
}

/// `𝒪_{V_i}(−1)`: the tautological line, fibers `g` at `p_i` and `s^{m−2i}` at `p_{i+1}`.
pub fn tautological(m: usize, i: usize) -> FracVec {
    sheaf_on_line(m, i, &gs(1, 0), &gs(0, m as i32 - 2 * i as i32))
}

/// The Lusztig basis `𝒪_{p₁}, 𝒪_{V₁}(−1), …, 𝒪_{V_{m−1}}(−1)` from the localization model.
pub fn lusztig_tuples_geometric(m: usize) -> Vec<FracVec> {
    let mut out = vec![skyscraper(m, 1)];
    out.extend((1..m).map(|i| tautological(m, i)));
    out
}

/// Rows `𝒪, L_{ω₁}, …, L_{ω_{m−1}}` in terms of the Lusztig basis, entries in `ℤ[s^±]`.
///
/// `corrected` puts the factor `s^{(k−1)(m−k)}` on the diagonal entry of row `k`;
/// without it that entry is 1.
pub fn change_of_basis(m: usize, corrected: bool) -> Vec<Vec<LaurentPoly>> {
    let s = |k: i32| LaurentPoly::s_pow(Profile::S, k);
    let mi = m as i32;
    let mut rows = Vec::with_capacity(m);
    let mut first = vec![LaurentPoly::one(Profile::S)];
    first.extend((1..mi).map(|j| s(2 * j - mi)));
    rows.push(first);
    for k in 1..mi {
        let base = (k - 1) * (mi - k);
        let mut row = vec![LaurentPoly::zero(Profile::S)];
        for j in 1..mi {
            row.push(match j.cmp(&k) {
                std::cmp::Ordering::Less => s(base),
                std::cmp::Ordering::Equal if corrected => s(base),
                std::cmp::Ordering::Equal => s(0),
                std::cmp::Ordering::Greater => s(base + 2 * (j - k)),
            });
        }
        rows.push(row);
    }
    rows
}

/// Solve the change-of-basis system for the Lusztig tuples; also returns its determinant.
pub fn lusztig_tuples_solved(flags: &FixedFlagTable, corrected: bool) -> Result<(Vec<FracVec>, LaurentPoly)> {
    let m = flags.m;
    let c: Vec<Vec<LaurentPoly>> = change_of_basis(m, corrected)
        .iter()
        .map(|row| row.iter().map(|x| x.embed(Profile::GS)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let det = crate::rings::det(Profile::GS, &c);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let known: Vec<Vec<LaurentPoly>> = (0..m)
        .map(|r| {
            let lambda: Vec<i32> = (0..m).map(|i| (i < r) as i32).collect();
            flags.line_bundle(&lambda)
        })
        .collect();
    let (y, d) = solve(Profile::GS, &c, &known)?;
    Ok((y.into_iter().map(|row| FracVec::new(row, d.clone())).collect(), det))
}

fn check(label: String, holds: bool) -> Check {
    Check::new(label, holds)
}

/// The three relations for `𝒪_{V_i}(−1)`, checked against the given Lusztig tuples.
pub fn twist_identity_checks(m: usize, lusztig: &[FracVec]) -> Vec<Check> {
    let mut out = Vec::new();
    for (i, taut) in lusztig.iter().enumerate().take(m).skip(1) {
        let d = 2 * i as i32 - m as i32;
        let minus_left = sheaf_on_line(m, i, &cotangent(m, i, true), &one());
        out.push(check(format!("O_V{i}(-p{i}) = s^{d}*O_V{i}(-1)"), minus_left.same(&taut.scale(&gs(0, d)))));
        let minus_right = sheaf_on_line(m, i, &one(), &cotangent(m, i, false));
        out.push(check(format!("O_V{i}(-p{}) = g^-1*O_V{i}(-1)", i + 1), minus_right.same(&taut.scale(&gs(-1, 0)))));
        let trivial = sheaf_on_line(m, i, &one(), &one());
        let ambient = trivial.scale(&(&gs(1, 0) + &gs(0, -d)));
        let quotient = sheaf_on_line(m, i, &gs(0, -d), &gs(1, 0));
        out.push(check(format!("O_V{i}(-1) is a subbundle of g*O + s^{}*O", -d), ambient.same(&taut.add(&quotient))));
    }
    out
}

/// `L_{ω_k}|_{V_j}` against the table, plus the decomposition of `L_{ω_k}` along the chain.
///
/// The diagonal entry is compared with `s^{(k−1)(m−k)}𝒪_{V_k}(−1)`; a separate
/// check records that the untwisted `𝒪_{V_k}(−1)` differs from it by exactly that power.
pub fn table_checks(flags: &FixedFlagTable) -> Vec<Check> {
    let m = flags.m;
    let mi = m as i32;
    let mut out = Vec::new();
    for k in 1..m {
        let ki = k as i32;
        let omega: Vec<i32> = (0..m).map(|i| (i < k) as i32).collect();
        let fibers = flags.line_bundle(&omega);
        let base = (ki - 1) * (mi - ki);
        let mut decomposition = FracVec::integral(vec![zero(); m]);
        for j in 1..m {
            let (a, b) = (&fibers[j - 1], &fibers[j]);
            let expected = match j.cmp(&k) {
                std::cmp::Ordering::Less => (gs(1, base), gs(1, base)),
                std::cmp::Ordering::Equal => (gs(1, base), gs(0, base + mi - 2 * ki)),
                std::cmp::Ordering::Greater => (gs(0, ki * (mi - ki - 1)), gs(0, ki * (mi - ki - 1))),
            };
            out.push(check(format!("L_w{k}|V{j}"), *a == expected.0 && *b == expected.1));
            if j == k {
                let untwisted = (gs(1, 0), gs(0, mi - 2 * ki));
                let factor = gs(0, base);
                out.push(check(
                    format!("L_w{k}|V{k} = s^{base}*O_V{k}(-1)"),
                    *a == &untwisted.0 * &factor && *b == &untwisted.1 * &factor,
                ));
            }
            let piece = match j.cmp(&k) {
                std::cmp::Ordering::Less => sheaf_on_line(m, j, a, &(b * &cotangent(m, j, false))),
                std::cmp::Ordering::Equal => sheaf_on_line(m, j, a, b),
                std::cmp::Ordering::Greater => sheaf_on_line(m, j, &(a * &cotangent(m, j, true)), b),
            };
            decomposition = decomposition.add(&piece);
        }
        out.push(check(format!("L_w{k} decomposes along the chain"), decomposition.same(&FracVec::integral(fibers))));
    }
    out
}

/// The two exact sequences through the skyscraper at `p_m`, for `λ = (−1,0,…,0,1)`.
pub fn exact_sequence_checks(flags: &FixedFlagTable) -> Vec<Check> {
    let m = flags.m;
    if m < 2 {
        return Vec::new();
    }
    let mi = m as i32;
    let line = |lambda: &[i32]| FracVec::integral(flags.line_bundle(lambda));
    let mut lambda = vec![0; m];
    lambda[0] = -1;
    lambda[m - 1] += 1;
    let neg_omega = |k: usize| -> Vec<i32> { (0..m).map(|i| -((i < k) as i32)).collect() };
    let structure = line(&vec![0; m]);
    let point = skyscraper(m, m).scale(&gs(1, 2 - mi));
    let l_lambda = line(&lambda);
    let first = line(&neg_omega(1)).scale(&gs(0, 2 - mi)).add(&point);
    let second = line(&neg_omega(m - 1)).scale(&gs(1, 2 - mi)).sub(&structure.scale(&gs(0, 4 - 2 * mi)));
    vec![
        check("L_lambda = s^(2-m)*L_-w1 + g*s^(2-m)*O_pm".into(), l_lambda.same(&first)),
        check("g*s^(2-m)*O_pm = g*s^(2-m)*L_-w(m-1) - s^(4-2m)*O".into(), point.same(&second)),
    ]
}
