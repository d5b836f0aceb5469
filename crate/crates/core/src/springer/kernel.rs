//! Random elements of the kernel of the push-down on a bounded monomial box.
//!
//! `π(Σ c_λ x^λ)` vanishes iff for every fixed point `p_k` and every power `g^a`
//! the `s`-coefficients cancel: `Σ_{λ_k = −a} c_λ s^{b_k(λ)} = 0`. This is a linear
//! system over `ℤ[s^±]`; a fraction-free echelon form picks independent rows and
//! pivot columns, and kernel vectors are `x_F = d·c_F`, `x_P = −adj(A_P)·A_F c_F`.

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use super::FixedFlagTable;
use crate::error::Result;
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::polyrep::act;
use crate::rings::{adjugate, div_exact, LaurentPoly, Monomial, Profile};

pub struct KernelSampler {
    m: usize,
    flags: FixedFlagTable,
    columns: Vec<Vec<i32>>,
    rows: Vec<usize>,
    pivots: Vec<usize>,
    free: Vec<usize>,
    matrix: Vec<Vec<LaurentPoly>>,
    adj: Vec<Vec<LaurentPoly>>,
    det: LaurentPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub m: usize,
    pub samples: usize,
    pub generators: Vec<String>,
    pub violations: Vec<String>,
}

fn box_points(m: usize, radius: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-radius..=radius).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Row indices and pivot columns of a fraction-free echelon form.
fn echelon_pivots(a: &[Vec<LaurentPoly>]) -> (Vec<usize>, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    let mut order: Vec<usize> = (0..rows).collect();
    let mut prev = LaurentPoly::one(Profile::S);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        order.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let x = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = div_exact(&x, &prev).expect("fraction-free step divides exactly");
            }
            m[i][c] = LaurentPoly::zero(Profile::S);
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (order[..r].to_vec(), pivots)
}

impl KernelSampler {
    /// Equations for exponents in `[−radius, radius]^m`.
    pub fn new(m: usize, radius: i32) -> Result<Self> {
        let flags = super::build_fixed_flags(m);
        let columns = box_points(m, radius);
        let g_range: Vec<i32> = (-radius..=radius).collect();
        let mut matrix = Vec::new();
        for k in 0..m {
            for &a in &g_range {
                let row = columns
                    .iter()
                    .map(|lambda| {
                        if -lambda[k] != a {
                            return LaurentPoly::zero(Profile::S);
                        }
                        let b: i32 = flags.weights[k].iter().zip(lambda).map(|(&(_, w), &l)| -w * l).sum();
                        LaurentPoly::s_pow(Profile::S, b)
                    })
                    .collect();
                matrix.push(row);
            }
        }
        let (rows, pivots) = echelon_pivots(&matrix);
        let square: Vec<Vec<LaurentPoly>> =
            rows.iter().map(|&i| pivots.iter().map(|&j| matrix[i][j].clone()).collect()).collect();
        let (adj, det) = adjugate(Profile::S, &square)?;
        let free = (0..columns.len()).filter(|j| !pivots.contains(j)).collect();
        Ok(KernelSampler { m, flags, columns, rows, pivots, free, matrix, adj, det })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel_dimension(&self) -> usize {
        self.free.len()
    }

    /// A random kernel vector supported on at most `max_free` free monomials.
    pub fn sample<R: Rng>(&self, rng: &mut R, max_free: usize) -> LaurentPoly {
        let profile = Profile::X(self.m as u8);
        let count = rng.gen_range(1..=max_free.min(self.free.len()).max(1));
        let mut chosen: Vec<(usize, LaurentPoly)> = Vec::new();
        while chosen.len() < count {
            let j = self.free[rng.gen_range(0..self.free.len())];
            if chosen.iter().any(|(c, _)| *c == j) {
                continue;
            }
            let mut c = rng.gen_range(1..=3i64);
            if rng.gen_bool(0.5) {
                c = -c;
            }
            let coeff = LaurentPoly::s_pow(Profile::S, rng.gen_range(-2..=2)).scale(&BigInt::from(c));
            chosen.push((j, coeff));
        }
        let mut values: Vec<(usize, LaurentPoly)> =
            chosen.iter().map(|(j, c)| (*j, c * &self.det)).collect();
        let rhs: Vec<LaurentPoly> = self
            .rows
            .iter()
            .map(|&i| chosen.iter().fold(LaurentPoly::zero(Profile::S), |acc, (j, c)| &acc + &(&self.matrix[i][*j] * c)))
            .collect();
        for (p, &col) in self.pivots.iter().enumerate() {
            let x = self.adj[p].iter().zip(&rhs).fold(LaurentPoly::zero(Profile::S), |acc, (a, b)| &acc - &(a * b));
            values.push((col, x));
        }
        let mut out = LaurentPoly::zero(profile);
        for (j, c) in values {
            let mut e = self.columns[j].clone();
            e.push(0);
            for (mono, k) in c.terms() {
                e[self.m] = mono.exps()[0];
                out.add_term(Monomial::from_exps(e.clone()), k.clone());
            }
        }
        out
    }

    pub fn restricts_to_zero(&self, u: &LaurentPoly) -> bool {
        self.flags.push_down(u).iter().all(|x| x.is_zero())
    }

    /// Check that `samples` random kernel vectors stay in the kernel under every generator.
    pub fn stability<R: Rng>(&self, alg: &HeckeAlgebra, samples: usize, rng: &mut R) -> Result<KernelReport> {
        let m = self.m;
        let mut gens: Vec<(String, HeckeElt)> = (1..=m).filter(|_| m >= 2).map(|i| (format!("T[{i}]"), alg.t(i))).collect();
        gens.push(("Tw[1]".into(), alg.tw(1)));
        gens.push(("Tw[-1]".into(), alg.tw(-1)));
        for j in 0..m {
            let eps: Vec<i32> = (0..m).map(|k| (k == j) as i32).collect();
            gens.push((format!("e[{}]", eps.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")), HeckeElt::e(&eps)));
        }
        let mut violations = Vec::new();
        for n in 0..samples {
            let u = self.sample(rng, 3);
            if !self.restricts_to_zero(&u) {
                violations.push(format!("sample {n} is not in the kernel"));
                continue;
            }
            for (name, h) in &gens {
                if !self.restricts_to_zero(&act(h, &u)?) {
                    violations.push(format!("sample {n}: {name}"));
                }
            }
        }
        Ok(KernelReport { m, samples, generators: gens.into_iter().map(|(n, _)| n).collect(), violations })
    }
}
