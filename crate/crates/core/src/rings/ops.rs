use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LaurentPoly, Monomial, Profile, Var};
use crate::error::{Error, Result};

/// `(x^λ − x^{λ−kα_i}) / (1 − x^{−α_i})` as a finite sum, in profile `X(m)`.
///
/// For `k > 0` this is `Σ_{j<k} x^{λ−jα}`, for `k < 0` it is `−Σ_{1≤j≤|k|} x^{λ+jα}`.
pub fn telescope(lambda: &[i32], i: usize, k: i32) -> LaurentPoly {
    let m = lambda.len();
    assert!(i >= 1 && i < m, "simple root index {i} out of range for m={m}");
    let profile = Profile::X(m as u8);
    let mut out = LaurentPoly::zero(profile);
    let mut exps = lambda.to_vec();
    exps.push(0);
    let (a, b) = (i - 1, i);
    let (range, sign): (Box<dyn Iterator<Item = i32>>, i64) = if k > 0 {
        (Box::new(0..k), 1)
    } else {
        (Box::new((1..=-k).map(|j| -j)), -1)
    };
    for j in range {
        let mut e = exps.clone();
        e[a] -= j;
        e[b] += j;
        out.add_term(Monomial::from_exps(e), BigInt::from(sign));
    }
    out
}

/// `(e^λ − e^{s_i λ}) / (1 − e^{−α_i})`.
pub fn demazure_quotient(lambda: &[i32], i: usize) -> LaurentPoly {
    let n = lambda[i - 1] - lambda[i];
    telescope(lambda, i, n)
}

/// Sum of `x^μ` over the distinct `S_m`-permutations `μ` of `λ`.
pub fn orbit_sum(lambda: &[i32]) -> LaurentPoly {
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut cur = sorted.clone();
    loop {
        seen.insert(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let mut out = LaurentPoly::zero(Profile::X(lambda.len() as u8));
    for mu in seen {
        out = &out + &LaurentPoly::x_pow(&mu);
    }
    out
}

/// Lexicographic successor; false when `v` is the last permutation.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exact evaluation at nonzero rational values.
pub fn specialize(p: &LaurentPoly, assignments: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
    let vars = p.profile().vars();
    let used: Vec<bool> = (0..vars.len()).map(|i| p.terms().any(|(m, _)| m.exps()[i] != 0)).collect();
    let mut values = Vec::with_capacity(vars.len());
    for (i, v) in vars.iter().enumerate() {
        match assignments.get(v) {
            Some(x) if x.is_zero() => return Err(Error::ZeroAssignment(v.to_string())),
            Some(x) => values.push(x.clone()),
            None if used[i] => return Err(Error::Unassigned(v.to_string())),
            None => values.push(BigRational::one()),
        }
    }
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        let mut t = BigRational::from_integer(c.clone());
        for (x, &e) in values.iter().zip(m.exps()) {
            if e != 0 {
                t *= num_traits::pow::Pow::pow(x, e);
            }
        }
        total += t;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_poly;

    fn alpha_factor(m: usize, i: usize) -> LaurentPoly {
        let mut a = vec![0; m];
        a[i - 1] = -1;
        a[i] = 1;
        &LaurentPoly::one(Profile::X(m as u8)) - &LaurentPoly::x_pow(&a)
    }

    fn reflect(lambda: &[i32], i: usize) -> Vec<i32> {
        let mut v = lambda.to_vec();
        v.swap(i - 1, i);
        v
    }

    #[test]
    fn operation_examples() {
        assert_eq!(demazure_quotient(&[1, 0], 1), LaurentPoly::x_pow(&[1, 0]));
        assert!(demazure_quotient(&[2, 2, 0], 1).is_zero());
        assert_eq!(
            demazure_quotient(&[2, 0], 1),
            &LaurentPoly::x_pow(&[2, 0]) + &LaurentPoly::x_pow(&[1, 1])
        );
    }

    #[test]
    fn multiply_back_exhaustive() {
        for m in 2..=4usize {
            let box_size = if m == 4 { 2 } else { 3 };
            let vals: Vec<i32> = (-box_size..=box_size).collect();
            let mut idx = vec![0usize; m];
            loop {
                let lambda: Vec<i32> = idx.iter().map(|&j| vals[j]).collect();
                for i in 1..m {
                    let q = demazure_quotient(&lambda, i);
                    let lhs = &q * &alpha_factor(m, i);
                    let rhs = &LaurentPoly::x_pow(&lambda) - &LaurentPoly::x_pow(&reflect(&lambda, i));
                    assert_eq!(lhs, rhs, "λ={lambda:?} i={i}");
                }
                let mut k = 0;
                while k < m {
                    idx[k] += 1;
                    if idx[k] < vals.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == m {
                    break;
                }
            }
        }
    }

    #[test]
    fn orbit_sums() {
        assert_eq!(orbit_sum(&[1, 0]), parse_poly(Profile::X(2), "x1 + x2").unwrap());
        assert_eq!(orbit_sum(&[1, 1]), parse_poly(Profile::X(2), "x1*x2").unwrap());
        assert_eq!(orbit_sum(&[2, 1, 0]).len(), 6);
        assert_eq!(orbit_sum(&[1, 1, 0, 0]).len(), 6);
    }

    #[test]
    fn specialization() {
        let q = |x: i64| BigRational::from_integer(x.into());
        let s1: BTreeMap<_, _> = [(Var::S, q(1))].into();
        assert!(specialize(&parse_poly(Profile::S, "s^2 - 1").unwrap(), &s1).unwrap().is_zero());

        let a: BTreeMap<_, _> = [(Var::X(1), q(2)), (Var::X(2), q(3)), (Var::S, q(1))].into();
        assert_eq!(specialize(&LaurentPoly::x_pow(&[1, 0]), &a).unwrap(), q(2));

        let tsm = parse_poly(Profile::X(2), "s^2 - 1 + s^2*x1*x2^-1").unwrap();
        let b: BTreeMap<_, _> = [(Var::X(1), q(2)), (Var::X(2), q(1)), (Var::S, q(3))].into();
        assert_eq!(specialize(&tsm, &b).unwrap(), q(26));

        let z: BTreeMap<_, _> = [(Var::S, q(0))].into();
        assert_eq!(
            specialize(&parse_poly(Profile::S, "s").unwrap(), &z),
            Err(Error::ZeroAssignment("s".into()))
        );
        assert_eq!(
            specialize(&LaurentPoly::x_pow(&[1, 0]), &BTreeMap::new()),
            Err(Error::Unassigned("x1".into()))
        );
    }
}
