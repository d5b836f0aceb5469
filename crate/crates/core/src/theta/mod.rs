//! The rank-`m` IC-basis module, its Hecke action transported from the Springer
//! module along `B_i ↦ IC^i`, the sheaf–function dictionary and orbit labels.

mod dictionary;
mod orbits;

pub use dictionary::{ic_sheaf_dictionary, Convention, DictionaryReport, FormulaResult};
pub use orbits::{
    brute_force_orbits, enumerate_orbits, injection_count, orbit_representative, OrbitLabel, Representative,
};

use std::collections::BTreeMap;

use crate::check::Check;
use crate::error::Result;
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::rings::{demazure_quotient, orbit_sum, FracMatrix, FracVec, LaurentPoly, Profile};
use crate::springer::{res_sigma, SpringerModule};
use crate::weyl::{conjugate_simple, Perm};

/// Coordinates in `IC⁰, …, IC^{m−1}` over the fraction field of `ℤ[g^±, s^±]`.
#[derive(Clone, Debug)]
pub struct ThetaVector {
    pub coords: FracVec,
}

impl ThetaVector {
    /// `IC^k` for any `k ∈ ℤ`, using `IC^{k−mj} = g^j·IC^k`.
    pub fn ic(m: usize, k: i64) -> Self {
        let mi = m as i64;
        let (q, r) = (k.div_euclid(mi), k.rem_euclid(mi));
        let mut num = vec![LaurentPoly::zero(Profile::GS); m];
        num[r as usize] = LaurentPoly::gs(-q as i32, 0);
        ThetaVector { coords: FracVec::integral(num) }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn apply(&self, mat: &FracMatrix) -> ThetaVector {
        ThetaVector { coords: mat.apply(&self.coords) }
    }

    pub fn add(&self, other: &ThetaVector) -> ThetaVector {
        ThetaVector { coords: self.coords.add(&other.coords) }
    }

    pub fn scale(&self, c: &LaurentPoly) -> ThetaVector {
        ThetaVector { coords: self.coords.scale(c) }
    }

    pub fn same(&self, other: &ThetaVector) -> bool {
        self.coords.same(&other.coords)
    }
}

/// The Hecke action on the IC basis, defined through the Springer module.
pub struct ThetaModule {
    springer: SpringerModule,
    cache: std::sync::Mutex<BTreeMap<String, FracMatrix>>,
}

impl ThetaModule {
    pub fn new(m: usize) -> Result<Self> {
        Ok(ThetaModule { springer: SpringerModule::new(m)?, cache: Default::default() })
    }

    pub fn rank(&self) -> usize {
        self.springer.rank()
    }

    pub fn springer(&self) -> &SpringerModule {
        &self.springer
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        self.springer.algebra()
    }

    /// Matrix of an arbitrary element in the IC basis.
    pub fn matrix(&self, h: &HeckeElt) -> Result<FracMatrix> {
        self.springer.action_matrix(h)
    }

    fn cached(&self, key: String, h: impl FnOnce() -> HeckeElt) -> Result<FracMatrix> {
        if let Some(x) = self.cache.lock().expect("cache").get(&key) {
            return Ok(x.clone());
        }
        let mat = self.matrix(&h())?;
        self.cache.lock().expect("cache").insert(key, mat.clone());
        Ok(mat)
    }

    pub fn t(&self, i: usize) -> Result<FracMatrix> {
        self.cached(format!("T[{i}]"), || self.algebra().t(i))
    }

    pub fn tw(&self, k: i64) -> Result<FracMatrix> {
        self.cached(format!("Tw[{k}]"), || self.algebra().tw(k))
    }

    pub fn e(&self, lambda: &[i32]) -> Result<FracMatrix> {
        self.cached(format!("e{lambda:?}"), || HeckeElt::e(lambda))
    }

    /// Named generator matrices: `T[1..m]`, `Tw[1]`, `Tw[-1]`, `e[ω_i]`, `g`, `s`.
    pub fn generator_matrices(&self) -> Result<Vec<(String, FracMatrix)>> {
        let m = self.rank();
        let mut out = Vec::new();
        if m >= 2 {
            for i in 1..=m {
                out.push((format!("T[{i}]"), self.t(i)?));
            }
        }
        out.push(("Tw[1]".into(), self.tw(1)?));
        out.push(("Tw[-1]".into(), self.tw(-1)?));
        for i in 1..=m {
            let omega: Vec<i32> = (0..m).map(|k| (k < i) as i32).collect();
            out.push((format!("e[{}]", join(&omega)), self.e(&omega)?));
        }
        out.push(("g".into(), FracMatrix::scalar(m, &LaurentPoly::gs(1, 0))));
        out.push(("s".into(), FracMatrix::scalar(m, &LaurentPoly::gs(0, 1))));
        Ok(out)
    }

    /// Quadratic, braid, commutation, length-zero conjugation and Bernstein relations.
    ///
    /// Bernstein relations are checked for every `λ ∈ [−radius, radius]^m`.
    pub fn relation_checks(&self, radius: i32) -> Result<Vec<Check>> {
        let m = self.rank();
        let mut out = Vec::new();
        let id = FracMatrix::identity(m, Profile::GS);
        let v = LaurentPoly::gs(0, 2);
        out.push(Check::new("Tw[1]*Tw[-1] = 1", self.tw(1)?.mul(&self.tw(-1)?).same(&id)));
        if m < 2 {
            return Ok(out);
        }
        let ts: Vec<FracMatrix> = (1..=m).map(|i| self.t(i)).collect::<Result<_>>()?;
        let tw = self.tw(1)?;
        let tw_inv = self.tw(-1)?;
        for i in 1..=m {
            let t = &ts[i - 1];
            let lhs = t.add(&id).mul(&t.sub(&FracMatrix::scalar(m, &v)));
            out.push(Check::new(format!("(T[{i}] + 1)(T[{i}] - v) = 0"), lhs.is_zero()));
            let j = conjugate_simple(m, i, 1);
            out.push(Check::new(format!("Tw[1]*T[{i}]*Tw[-1] = T[{j}]"), tw.mul(t).mul(&tw_inv).same(&ts[j - 1])));
        }
        if m >= 3 {
            for i in 1..=m {
                let j = i % m + 1;
                let (a, b) = (&ts[i - 1], &ts[j - 1]);
                out.push(Check::new(format!("braid T[{i}], T[{j}]"), a.mul(b).mul(a).same(&b.mul(a).mul(b))));
                for k in i + 1..=m {
                    if k != j && k % m + 1 != i {
                        let c = &ts[k - 1];
                        out.push(Check::new(format!("T[{i}]*T[{k}] = T[{k}]*T[{i}]"), a.mul(c).same(&c.mul(a))));
                    }
                }
            }
        }
        let vm1 = LaurentPoly::gs(0, 2) - LaurentPoly::one(Profile::GS);
        for lambda in lattice_box(m, radius) {
            let e = self.e(&lambda)?;
            for i in 1..m {
                let reflected = Perm::transposition(m, i, i + 1).act(&lambda);
                let lhs = ts[i - 1].mul(&e).sub(&self.e(&reflected)?.mul(&ts[i - 1]));
                let mut rhs = FracMatrix::scalar(m, &LaurentPoly::zero(Profile::GS));
                for (mono, c) in demazure_quotient(&lambda, i).terms() {
                    let nu = &mono.exps()[..m];
                    rhs = rhs.add(&self.e(nu)?.scale(&LaurentPoly::constant(Profile::GS, c.clone())));
                }
                out.push(Check::new(
                    format!("Bernstein T[{i}], e[{}]", join(&lambda)),
                    lhs.same(&rhs.scale(&vm1)),
                ));
            }
            for j in 0..m {
                let mut shifted = lambda.clone();
                shifted[j] += 1;
                let eps: Vec<i32> = (0..m).map(|k| (k == j) as i32).collect();
                let holds = e.mul(&self.e(&eps)?).same(&self.e(&shifted)?);
                if !holds {
                    out.push(Check::new(format!("e[{}]*e[eps{}] additive", join(&lambda), j + 1), false));
                }
            }
        }
        Ok(out)
    }

    /// `det[IC⁰, T_{w₁}IC⁰, …, T_{w₁}^{m−1}IC⁰]` as `(numerator, denominator)`.
    pub fn freeness_determinant(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        let m = self.rank();
        let tw = self.tw(1)?;
        let mut cols = vec![ThetaVector::ic(m, 0).coords];
        for k in 1..m {
            cols.push(tw.apply(&cols[k - 1]));
        }
        Ok(FracMatrix::from_columns(&cols).det())
    }

    /// `Z(e_k)` acts by `res_sigma(e_k)` for `k = 1..m`.
    pub fn central_character_checks(&self) -> Result<Vec<Check>> {
        let m = self.rank();
        (1..=m)
            .map(|k| {
                let omega: Vec<i32> = (0..m).map(|i| (i < k) as i32).collect();
                let e = orbit_sum(&omega);
                let mat = self.matrix(&HeckeElt::from_x_poly(&e))?;
                let scalar = res_sigma(&e)?;
                Ok(Check::new(format!("Z(e_{k}) = {scalar}"), mat.same(&FracMatrix::scalar(m, &scalar))))
            })
            .collect()
    }

    /// Cyclic shift `IC^k ↦ IC^{k+1}` with the `g^{−1}` wrap.
    pub fn shift_matrix(m: usize) -> FracMatrix {
        let cols: Vec<FracVec> = (0..m as i64).map(|k| ThetaVector::ic(m, k + 1).coords).collect();
        FracMatrix::from_columns(&cols)
    }
}

fn join(v: &[i32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn lattice_box(m: usize, radius: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i32>| {
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
