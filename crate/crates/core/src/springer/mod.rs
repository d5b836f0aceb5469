//! Equivariant K-theory of the subregular Springer fiber of GL_m.
//!
//! The fiber is a chain of projective lines `V_1, …, V_{m−1}` with torus-fixed
//! points `p_1, …, p_m`, `V_i` joining `p_i` and `p_{i+1}`. Classes are
//! represented by their restrictions to the fixed points (the "tuple"), with a
//! common denominator for sheaves supported on the lines.

mod chain;
mod kernel;

pub use chain::{
    change_of_basis, exact_sequence_checks, lusztig_tuples_geometric, lusztig_tuples_solved, table_checks,
    twist_identity_checks,
};
pub use kernel::{KernelSampler, KernelReport};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::polyrep::{act, swap_vars};
use crate::rings::{adjugate, FracMatrix, FracVec, LaurentPoly, Profile};

/// `g^a s^b` as an exponent pair.
pub type Weight = (i32, i32);

/// Graded-line weights `w(F_i/F_{i−1})` at each fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedFlagTable {
    pub m: usize,
    /// `weights[k][i]`: weight of the `(i+1)`-th graded piece at `p_{k+1}`.
    pub weights: Vec<Vec<Weight>>,
}

/// Weight of the basis vector `u_j`: `u₁ ↦ g`, `u_j ↦ s^{m−2j+2}`.
pub fn line_weight(m: usize, j: usize) -> Weight {
    if j == 1 {
        (1, 0)
    } else {
        (0, m as i32 - 2 * j as i32 + 2)
    }
}

/// `p_k = (u₂, …, u_k, u₁, u_{k+1}, …, u_m)` read as the ordered basis of the flag.
pub fn build_fixed_flags(m: usize) -> FixedFlagTable {
    assert!(m >= 1, "rank must be positive");
    let weights = (1..=m)
        .map(|k| {
            let mut order: Vec<usize> = (2..=k).collect();
            order.push(1);
            order.extend(k + 1..=m);
            order.into_iter().map(|j| line_weight(m, j)).collect()
        })
        .collect();
    FixedFlagTable { m, weights }
}

impl FixedFlagTable {
    pub fn weight_poly(&self, k: usize, i: usize) -> LaurentPoly {
        let (a, b) = self.weights[k][i];
        LaurentPoly::gs(a, b)
    }

    /// `L_λ`: fiber `Π_i w(F_i/F_{i−1})^{λ_i}` at every fixed point.
    pub fn line_bundle(&self, lambda: &[i32]) -> Vec<LaurentPoly> {
        assert_eq!(lambda.len(), self.m, "rank mismatch");
        self.weights
            .iter()
            .map(|ws| {
                let (a, b) = ws.iter().zip(lambda).fold((0, 0), |(a, b), (&(wa, wb), &l)| (a + wa * l, b + wb * l));
                LaurentPoly::gs(a, b)
            })
            .collect()
    }

    /// `x^λ ↦ L_{−λ}`: substitute `x_i ↦ w_i(p_k)^{−1}` at each fixed point.
    pub fn push_down(&self, f: &LaurentPoly) -> Vec<LaurentPoly> {
        let m = self.m;
        assert_eq!(f.profile(), Profile::X(m as u8), "push-down expects an x-profile polynomial");
        self.weights
            .iter()
            .map(|ws| {
                let mut images: Vec<Vec<i32>> = ws.iter().map(|&(a, b)| vec![-a, -b]).collect();
                images.push(vec![0, 1]);
                f.substitute_monomials(Profile::GS, &images)
            })
            .collect()
    }
}

fn omega(m: usize, i: usize) -> Vec<i32> {
    (0..m).map(|k| (k < i) as i32).collect()
}

/// A K-class: its fixed-point tuple and, when known, its theorem-basis coordinates.
#[derive(Clone, Debug)]
pub struct KClass {
    pub tuple: FracVec,
    pub coords: Option<FracVec>,
}

/// The K-module with the theorem basis `B_0 = 𝒪`, `B_i = s^{i(m−i)} L_{−ω_i}`.
pub struct SpringerModule {
    m: usize,
    alg: HeckeAlgebra,
    flags: FixedFlagTable,
    basis: Vec<Vec<LaurentPoly>>,
    preimages: Vec<LaurentPoly>,
    adj: Vec<Vec<LaurentPoly>>,
    det: LaurentPoly,
}

impl SpringerModule {
    pub fn new(m: usize) -> Result<Self> {
        let alg = HeckeAlgebra::new(m);
        let flags = build_fixed_flags(m);
        let preimages: Vec<LaurentPoly> = (0..m)
            .map(|i| {
                let mut e = omega(m, i);
                e.push((i * (m - i)) as i32);
                LaurentPoly::monomial(Profile::X(m as u8), &e)
            })
            .collect();
        let columns: Vec<Vec<LaurentPoly>> = preimages.iter().map(|p| flags.push_down(p)).collect();
        let basis: Vec<Vec<LaurentPoly>> = (0..m).map(|k| (0..m).map(|j| columns[j][k].clone()).collect()).collect();
        let (adj, det) = adjugate(Profile::GS, &basis)?;
        Ok(SpringerModule { m, alg, flags, basis, preimages, adj, det })
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.alg
    }

    pub fn flags(&self) -> &FixedFlagTable {
        &self.flags
    }

    /// `basis_matrix()[k][j] = B_j(p_k)`.
    pub fn basis_matrix(&self) -> &[Vec<LaurentPoly>] {
        &self.basis
    }

    pub fn basis_tuple(&self, j: usize) -> FracVec {
        FracVec::integral((0..self.m).map(|k| self.basis[k][j].clone()).collect())
    }

    /// The canonical preimages `1, s^{i(m−i)} x^{ω_i}` in the polynomial representation.
    pub fn preimages(&self) -> &[LaurentPoly] {
        &self.preimages
    }

    /// `det [B_j(p_k)]` up to the sign fixed by the elimination.
    pub fn basis_determinant(&self) -> &LaurentPoly {
        &self.det
    }

    pub fn coords_of(&self, tuple: &FracVec) -> FracVec {
        let num = self
            .adj
            .iter()
            .map(|row| row.iter().zip(&tuple.num).fold(LaurentPoly::zero(Profile::GS), |acc, (a, b)| &acc + &(a * b)))
            .collect();
        FracVec::new(num, &self.det * &tuple.den)
    }

    pub fn tuple_of(&self, coords: &FracVec) -> FracVec {
        FracMatrix::integral(self.basis.clone(), Profile::GS).apply(coords)
    }

    pub fn class_from_tuple(&self, tuple: FracVec) -> KClass {
        let coords = Some(self.coords_of(&tuple));
        KClass { tuple, coords }
    }

    pub fn class_from_coords(&self, coords: FracVec) -> KClass {
        KClass { tuple: self.tuple_of(&coords), coords: Some(coords) }
    }

    /// Push down `h ∗ pre` for a polynomial preimage.
    pub fn act_on_preimage(&self, h: &HeckeElt, pre: &LaurentPoly) -> Result<FracVec> {
        Ok(FracVec::integral(self.flags.push_down(&act(h, pre)?)))
    }

    /// Matrix of `h` in the theorem basis: column `j` holds the coordinates of `h·B_j`.
    pub fn action_matrix(&self, h: &HeckeElt) -> Result<FracMatrix> {
        if h.rank() != self.m {
            return Err(Error::RankMismatch(h.rank(), self.m));
        }
        let cols = self
            .preimages
            .iter()
            .map(|pre| Ok(self.coords_of(&self.act_on_preimage(h, pre)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FracMatrix::from_columns(&cols))
    }

    /// `h · c` through the polynomial representation: lift along the preimages, act, push down.
    pub fn k_act(&self, h: &HeckeElt, c: &KClass) -> Result<KClass> {
        let coords = match &c.coords {
            Some(x) => x.clone(),
            None => self.coords_of(&c.tuple),
        };
        if !self.tuple_of(&coords).same(&c.tuple) {
            return Err(Error::OutsideSpan);
        }
        let mut total = FracVec::integral(vec![LaurentPoly::zero(Profile::GS); self.m]);
        for (j, pre) in self.preimages.iter().enumerate() {
            if coords.num[j].is_zero() {
                continue;
            }
            let image = self.act_on_preimage(h, pre)?;
            let scaled = FracVec::new(image.num.iter().map(|x| x * &coords.num[j]).collect(), coords.den.clone());
            total = total.add(&scaled);
        }
        Ok(self.class_from_tuple(total))
    }

    /// Tuple of `L_{−λ}` as a class.
    pub fn line_bundle(&self, lambda: &[i32]) -> FracVec {
        FracVec::integral(self.flags.line_bundle(lambda))
    }

    pub fn structure_sheaf(&self) -> KClass {
        let mut c = vec![LaurentPoly::zero(Profile::GS); self.m];
        c[0] = LaurentPoly::one(Profile::GS);
        self.class_from_coords(FracVec::integral(c))
    }
}

/// `x₁ ↦ g`, `x_j ↦ s^{m−2j+2}` on symmetric polynomials.
pub fn res_sigma(p: &LaurentPoly) -> Result<LaurentPoly> {
    let m = p.profile().rank().ok_or_else(|| Error::Invalid("res_sigma expects an x-profile polynomial".into()))?;
    for i in 1..m {
        if swap_vars(p, i) != *p {
            return Err(Error::NotSymmetric(m));
        }
    }
    let mut images: Vec<Vec<i32>> = (1..=m).map(|j| { let (a, b) = line_weight(m, j); vec![a, b] }).collect();
    images.push(vec![0, 1]);
    Ok(p.substitute_monomials(Profile::GS, &images))
}

/// The `{g,s}`-valued weights of all fixed points, keyed by point index, for display.
pub fn flag_table_strings(table: &FixedFlagTable) -> BTreeMap<String, Vec<String>> {
    (0..table.m)
        .map(|k| {
            (format!("p{}", k + 1), (0..table.m).map(|i| table.weight_poly(k, i).to_string()).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests;
