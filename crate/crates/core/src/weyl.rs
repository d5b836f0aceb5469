//! The extended affine Weyl group `W̃ = ℤ^m ⋊ S_m` of GL_m.
//!
//! Permutations act on vectors by `w(λ)_{w(k)} = λ_k`, and elements multiply as
//! `(λ₁,w₁)(λ₂,w₂) = (λ₁ + w₁λ₂, w₁w₂)`. The length-zero generator is
//! `w₁ = t^{−ω₁}σ₁` with `σ₁(k) = k+1 mod m`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::syntax::{self, Atom, Semantics};

/// Permutation of `{1..m}` in one-line notation, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m as u8).collect())
    }

    /// From 1-based images `π(1), …, π(m)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p: Vec<u8> = (0..m as u8).collect();
        p.swap(a - 1, b - 1);
        Perm(p.into())
    }

    /// The rotation `k ↦ k + i (mod m)`.
    pub fn rotation(m: usize, i: i64) -> Self {
        let m64 = m as i64;
        Perm((0..m64).map(|k| (k + i).rem_euclid(m64) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based image of a 0-based point.
    pub fn at(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&k| self.0[k as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Perm(inv.into())
    }

    /// `w(λ)_{w(k)} = λ_k`.
    pub fn act(&self, lambda: &[i32]) -> Vec<i32> {
        let mut out = vec![0; lambda.len()];
        for (k, &x) in self.0.iter().enumerate() {
            out[x as usize] = lambda[k];
        }
        out
    }

    pub fn inversions(&self) -> usize {
        let n = self.0.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.0[i] > self.0[j]).count()
    }

    /// Reduced word in the finite simple reflections, `w = s_{i₁}⋯s_{i_ℓ}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut peeled = Vec::new();
        // right descent: w(i) > w(i+1)
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w.0[i] > w.0[i + 1]) {
            w.0.swap(i, i + 1);
            peeled.push(i + 1);
        }
        peeled.reverse();
        peeled
    }

    pub fn all(m: usize) -> Vec<Perm> {
        let mut cur: Vec<u8> = (0..m as u8).collect();
        let mut out = vec![Perm(cur.clone().into())];
        while crate::rings::next_perm(&mut cur) {
            out.push(Perm(cur.clone().into()));
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "p[{}]", parts.join(","))
    }
}

/// `t^λ w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineWeylElt {
    pub lambda: Vec<i32>,
    pub perm: Perm,
}

impl AffineWeylElt {
    pub fn new(lambda: Vec<i32>, perm: Perm) -> Self {
        assert_eq!(lambda.len(), perm.len(), "rank mismatch");
        AffineWeylElt { lambda, perm }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(vec![0; m], Perm::identity(m))
    }

    pub fn translation(lambda: &[i32]) -> Self {
        Self::new(lambda.to_vec(), Perm::identity(lambda.len()))
    }

    pub fn finite(perm: Perm) -> Self {
        Self::new(vec![0; perm.len()], perm)
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    /// `s_i` for `1 ≤ i < m`, and the affine reflection `s_m = t^{(−1,0,…,0,1)}(1 m)`.
    pub fn simple(m: usize, i: usize) -> Self {
        assert!(m >= 2 && i >= 1 && i <= m, "no simple reflection s_{i} for m={m}");
        if i < m {
            Self::finite(Perm::transposition(m, i, i + 1))
        } else {
            let mut lambda = vec![0; m];
            lambda[0] = -1;
            lambda[m - 1] += 1;
            Self::new(lambda, Perm::transposition(m, 1, m))
        }
    }

    pub fn sigma(m: usize, i: i64) -> Self {
        Self::finite(Perm::rotation(m, i))
    }

    /// `w_i = t^{−ω_i}σ_i`, the length-zero element; `w_i = w₁^i`.
    pub fn omega_elt(m: usize, i: usize) -> Self {
        let lambda = (0..m).map(|k| if k < i { -1 } else { 0 }).collect();
        Self::new(lambda, Perm::rotation(m, i as i64))
    }

    /// `w₁^k` for any integer `k`.
    pub fn omega_power(m: usize, k: i64) -> Self {
        let base = if k >= 0 { Self::omega_elt(m, 1) } else { Self::omega_elt(m, 1).inverse() };
        (0..k.unsigned_abs()).fold(Self::identity(m), |acc, _| acc.mul(&base))
    }

    pub fn mul(&self, other: &AffineWeylElt) -> AffineWeylElt {
        let moved = self.perm.act(&other.lambda);
        AffineWeylElt {
            lambda: self.lambda.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> AffineWeylElt {
        let inv = self.perm.inverse();
        let lambda = inv.act(&self.lambda).into_iter().map(|x| -x).collect();
        AffineWeylElt { lambda, perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.lambda.iter().all(|&x| x == 0)
    }

    /// `ℓ(t^λw) = Σ_{i<j} |λ_i − λ_j + [w⁻¹(i) > w⁻¹(j)]|`.
    pub fn length(&self) -> usize {
        let inv = self.perm.inverse();
        let m = self.rank();
        let mut total = 0i64;
        for i in 0..m {
            for j in i + 1..m {
                let d = (self.lambda[i] - self.lambda[j]) as i64 + (inv.at(i) > inv.at(j)) as i64;
                total += d.abs();
            }
        }
        total as usize
    }

    /// `(k, word)` with `self = w₁^k · s_{i₁}⋯s_{i_ℓ}` and `ℓ = length`.
    ///
    /// Peels off the smallest right descent until the length is zero.
    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let m = self.rank();
        let mut w = self.clone();
        let mut peeled = Vec::new();
        if m >= 2 {
            let gens: Vec<AffineWeylElt> = (1..=m).map(|i| Self::simple(m, i)).collect();
            let mut len = w.length();
            while len > 0 {
                let (i, next, next_len) = gens
                    .iter()
                    .enumerate()
                    .find_map(|(i, g)| {
                        let n = w.mul(g);
                        let l = n.length();
                        (l < len).then_some((i + 1, n, l))
                    })
                    .expect("positive length implies a right descent");
                peeled.push(i);
                w = next;
                len = next_len;
            }
        }
        peeled.reverse();
        let k = -(w.lambda.iter().map(|&x| x as i64).sum::<i64>());
        debug_assert_eq!(w, Self::omega_power(m, k));
        (k, peeled)
    }

    /// Recompose `w₁^k s_{i₁}⋯s_{i_ℓ}`.
    pub fn from_word(m: usize, k: i64, word: &[usize]) -> Self {
        word.iter().fold(Self::omega_power(m, k), |acc, &i| acc.mul(&Self::simple(m, i)))
    }

    /// The convention involution `t^λw ↦ t^{−λ}w`.
    ///
    /// It maps `t^{−ω_i}σ_i` to the element `t^{ω_i}σ_i`, of length `2i(m−i)`.
    pub fn negate_translation(&self) -> Self {
        AffineWeylElt { lambda: self.lambda.iter().map(|x| -x).collect(), perm: self.perm.clone() }
    }

    /// Parse `t[λ]*p[π]`, `W1`, products and integer powers.
    pub fn parse(m: usize, src: &str) -> Result<Self> {
        syntax::parse(&WeylSemantics(m), src)
    }
}

impl fmt::Display for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(|x| x.to_string()).collect();
        write!(f, "t[{}]*{}", parts.join(","), self.perm)
    }
}

impl Serialize for AffineWeylElt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// `w_j s_i w_j^{−1} = s_{i+j mod m}` on indices.
pub fn conjugate_simple(m: usize, i: usize, j: i64) -> usize {
    ((i as i64 - 1 + j).rem_euclid(m as i64) + 1) as usize
}

struct WeylSemantics(usize);

impl WeylSemantics {
    fn vector(&self, args: Vec<i64>, pos: usize) -> Result<Vec<i64>> {
        if args.len() != self.0 {
            return Err(Error::Parse { pos, msg: format!("expected {} entries", self.0) });
        }
        Ok(args)
    }
}

impl Semantics for WeylSemantics {
    type Value = AffineWeylElt;

    fn atom(&self, atom: Atom<'_>, pos: usize) -> Result<AffineWeylElt> {
        let m = self.0;
        match atom {
            Atom::Ident("t", Some(args)) => {
                let v = self.vector(args, pos)?;
                let lambda = v
                    .into_iter()
                    .map(|x| i32::try_from(x).map_err(|_| Error::Parse { pos, msg: "entry out of range".into() }))
                    .collect::<Result<Vec<i32>>>()?;
                Ok(AffineWeylElt::translation(&lambda))
            }
            Atom::Ident("p", Some(args)) => {
                let v = self.vector(args, pos)?;
                let images: Vec<usize> = v.into_iter().map(|x| x.max(0) as usize).collect();
                Perm::from_images(&images)
                    .map(AffineWeylElt::finite)
                    .map_err(|e| Error::Parse { pos, msg: e.to_string() })
            }
            Atom::Ident("W1", None) => Ok(AffineWeylElt::omega_elt(m, 1)),
            Atom::Int(n) if n == 1.into() => Ok(AffineWeylElt::identity(m)),
            _ => Err(Error::Parse { pos, msg: "expected t[..], p[..] or W1".into() }),
        }
    }

    fn add(&self, _: AffineWeylElt, _: AffineWeylElt, pos: usize) -> Result<AffineWeylElt> {
        Err(Error::Parse { pos, msg: "group elements cannot be added".into() })
    }

    fn sub(&self, _: AffineWeylElt, _: AffineWeylElt, pos: usize) -> Result<AffineWeylElt> {
        Err(Error::Parse { pos, msg: "group elements cannot be subtracted".into() })
    }

    fn mul(&self, a: AffineWeylElt, b: AffineWeylElt, _: usize) -> Result<AffineWeylElt> {
        Ok(a.mul(&b))
    }

    fn neg(&self, _: AffineWeylElt, pos: usize) -> Result<AffineWeylElt> {
        Err(Error::Parse { pos, msg: "group elements cannot be negated".into() })
    }

    fn pow(&self, a: AffineWeylElt, k: i64, _: usize) -> Result<AffineWeylElt> {
        let base = if k < 0 { a.inverse() } else { a };
        Ok((0..k.unsigned_abs()).fold(AffineWeylElt::identity(self.0), |acc, _| acc.mul(&base)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translation_lengths() {
        for m in 1..=6 {
            for i in 1..m {
                let omega: Vec<i32> = (0..m).map(|k| (k < i) as i32).collect();
                let t = AffineWeylElt::translation(&omega);
                assert_eq!(t.length(), i * (m - i));
                assert_eq!(AffineWeylElt::sigma(m, i as i64).length(), i * (m - i));
                assert_eq!(AffineWeylElt::omega_elt(m, i).length(), 0);
                assert_eq!(AffineWeylElt::omega_elt(m, i).negate_translation().length(), 2 * i * (m - i));
            }
            if m >= 2 {
                assert_eq!(AffineWeylElt::simple(m, m).length(), 1);
            }
        }
    }

    #[test]
    fn omega_structure() {
        for m in 1..=6 {
            let w1 = AffineWeylElt::omega_elt(m, 1);
            for i in 1..m {
                assert_eq!(AffineWeylElt::omega_power(m, i as i64), AffineWeylElt::omega_elt(m, i));
            }
            let full: Vec<i32> = vec![-1; m];
            assert_eq!(AffineWeylElt::omega_power(m, m as i64), AffineWeylElt::translation(&full));
            if m >= 2 {
                for i in 1..=m {
                    let conj = w1.mul(&AffineWeylElt::simple(m, i)).mul(&w1.inverse());
                    assert_eq!(conj, AffineWeylElt::simple(m, conjugate_simple(m, i, 1)));
                }
            }
        }
    }

    #[test]
    fn conjugate_simple_examples() {
        assert_eq!(conjugate_simple(4, 1, 1), 2);
        assert_eq!(conjugate_simple(4, 4, 1), 1);
        assert_eq!(conjugate_simple(4, 2, 4), 2);
        assert_eq!(conjugate_simple(3, 1, -1), 3);
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(AffineWeylElt::identity(3).reduced_word(), (0, vec![]));
        assert_eq!(AffineWeylElt::simple(3, 3).reduced_word(), (0, vec![3]));
        for m in 2..=6 {
            let inv = AffineWeylElt::sigma(m, 1).inverse();
            let expected: Vec<usize> = (1..m).rev().collect();
            assert_eq!(inv.reduced_word(), (0, expected));
            assert_eq!(AffineWeylElt::sigma(m, 1).perm.reduced_word(), (1..m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn literal_grammar() {
        let w = AffineWeylElt::parse(3, "t[1,0,-1]*p[2,3,1]").unwrap();
        assert_eq!(w.to_string(), "t[1,0,-1]*p[2,3,1]");
        assert_eq!(AffineWeylElt::parse(3, "W1^3").unwrap(), AffineWeylElt::translation(&[-1, -1, -1]));
        assert!(AffineWeylElt::parse(3, "p[1,1,2]").is_err());
        assert!(AffineWeylElt::parse(3, "t[1,2]").is_err());
    }
}
