//! Random bounded elements and the breadth-first length oracle.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use rand::Rng;

use crate::hecke::HeckeElt;
use crate::rings::{LaurentPoly, Monomial, Profile};
use crate::weyl::{AffineWeylElt, Perm};

fn coefficient<R: Rng>(rng: &mut R) -> LaurentPoly {
    let c: i64 = if rng.gen_bool(0.5) { rng.gen_range(1..=2) } else { -rng.gen_range(1..=2) };
    LaurentPoly::s_pow(Profile::S, rng.gen_range(-1..=1)).scale(&BigInt::from(c))
}

/// Permutations of length at most `max_len`, in breadth-first order.
pub fn short_perms(m: usize, max_len: usize) -> Vec<Perm> {
    let mut out = vec![Perm::identity(m)];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 1..m {
                let q = p.compose(&Perm::transposition(m, i, i + 1));
                if !out.contains(&q) && !next.contains(&q) {
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every permutation for small `m`, short ones otherwise.
pub fn sample_perms(m: usize) -> Vec<Perm> {
    if m <= 4 {
        Perm::all(m)
    } else {
        short_perms(m, 3)
    }
}

/// A sum of up to `max_terms` terms `c·e^λT_w` with `|λ_i| ≤ 1`.
pub fn random_hecke<R: Rng>(rng: &mut R, perms: &[Perm], max_terms: usize) -> HeckeElt {
    let m = perms[0].len();
    let mut out = HeckeElt::zero(m);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let lambda: Vec<i32> = (0..m).map(|_| rng.gen_range(-1..=1)).collect();
        let perm = perms[rng.gen_range(0..perms.len())].clone();
        out = out.add(&HeckeElt::basis(lambda, perm, coefficient(rng)));
    }
    out
}

/// A polynomial with up to `max_terms` monomials, exponents in `[−1, 1]`.
pub fn random_vector<R: Rng>(rng: &mut R, m: usize, max_terms: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(Profile::X(m as u8));
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut e: Vec<i32> = (0..m).map(|_| rng.gen_range(-1..=1)).collect();
        e.push(rng.gen_range(-1..=1));
        let c: i64 = if rng.gen_bool(0.5) { rng.gen_range(1..=3) } else { -rng.gen_range(1..=3) };
        out.add_term(Monomial::from_exps(e), BigInt::from(c));
    }
    out
}

/// Elements `t^λw` with `|λ_i| ≤ bound` whose formula length disagrees with the word
/// length found by breadth-first search on the Coxeter part, as `(element, formula, search)`.
///
/// Each element is written `w₁^k·u` with `u` in the group generated by `s_1, …, s_m`;
/// the search runs on that group, and `w₁` contributes nothing to the length.
pub fn length_oracle(m: usize, bound: i32) -> Vec<(AffineWeylElt, usize, Option<usize>)> {
    let gens: Vec<AffineWeylElt> = if m >= 2 { (1..=m).map(|i| AffineWeylElt::simple(m, i)).collect() } else { Vec::new() };
    let mut targets = Vec::new();
    let mut lambda = vec![-bound; m];
    loop {
        for perm in Perm::all(m) {
            let w = AffineWeylElt::new(lambda.clone(), perm);
            let k: i64 = -lambda.iter().map(|&x| x as i64).sum::<i64>();
            let u = AffineWeylElt::omega_power(m, -k).mul(&w);
            targets.push((w, u));
        }
        let Some(pos) = (0..m).find(|&p| lambda[p] < bound) else { break };
        lambda[pos] += 1;
        for x in &mut lambda[..pos] {
            *x = -bound;
        }
    }
    let mut dist: HashMap<AffineWeylElt, usize> = HashMap::new();
    let identity = AffineWeylElt::identity(m);
    dist.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    let mut missing = targets.iter().filter(|(_, u)| !dist.contains_key(u)).count();
    while missing > 0 {
        let Some(x) = queue.pop_front() else { break };
        let d = dist[&x];
        for g in &gens {
            let y = x.mul(g);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
        missing = targets.iter().filter(|(_, u)| !dist.contains_key(u)).count();
    }
    targets
        .into_iter()
        .filter_map(|(w, u)| {
            let found = dist.get(&u).copied();
            let formula = w.length();
            (found != Some(formula)).then_some((w, formula, found))
        })
        .collect()
}
