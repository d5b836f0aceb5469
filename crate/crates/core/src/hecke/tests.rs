use super::*;
use crate::rings::parse_poly;
use crate::weyl::AffineWeylElt;

fn sp(src: &str) -> LaurentPoly {
    parse_poly(Profile::S, src).unwrap()
}

fn omega(m: usize, i: usize) -> Vec<i32> {
    (0..m).map(|k| (k < i) as i32).collect()
}

#[test]
fn quadratic_relation() {
    let alg = HeckeAlgebra::new(3);
    let t = alg.t(1);
    let expected = t.scale(&sp("s^2 - 1")).add(&HeckeElt::scalar(3, sp("s^2")));
    assert_eq!(t.mul(&t), expected);
}

#[test]
fn bernstein_relations() {
    let m = 3;
    let alg = HeckeAlgebra::new(m);
    // ⟨λ, α̌₁⟩ = 0
    let lambda = [2, 2, -1];
    assert_eq!(alg.t(1).mul(&HeckeElt::e(&lambda)), HeckeElt::e(&lambda).mul(&alg.t(1)));
    // ⟨λ, α̌₁⟩ = 1: T e^{s(λ)} T = v e^λ
    let lambda = [1, 0, 3];
    let reflected = [0, 1, 3];
    let lhs = alg.t(1).mul(&HeckeElt::e(&reflected)).mul(&alg.t(1));
    assert_eq!(lhs, HeckeElt::e(&lambda).scale(&sp("s^2")));
}

#[test]
fn t_element_examples() {
    for m in 1..=5 {
        let alg = HeckeAlgebra::new(m);
        assert_eq!(alg.t_element(&AffineWeylElt::identity(m)), HeckeElt::one(m));
        for i in 1..m {
            let w = omega(m, i);
            let t = alg.t_element(&AffineWeylElt::translation(&w));
            assert_eq!(t, HeckeElt::e(&w).scale(&LaurentPoly::s_pow(Profile::S, (i * (m - i)) as i32)));
        }
    }
    let alg = HeckeAlgebra::new(2);
    let w1 = alg.t_element(&AffineWeylElt::omega_elt(2, 1));
    assert_eq!(w1, HeckeElt::basis(vec![-1, 0], Perm::rotation(2, 1), sp("s^-1")));
    // T_{t^{ω₁}} T_{w₁} = T_{σ₁}
    let prod = alg.t_element(&AffineWeylElt::translation(&[1, 0])).mul(&w1);
    assert_eq!(prod, HeckeElt::t_perm(Perm::rotation(2, 1)));
}

#[test]
fn dominant_translations() {
    for m in 2..=4 {
        let alg = HeckeAlgebra::new(m);
        let top = 2;
        let mut lambda = vec![0i32; m];
        loop {
            if lambda.windows(2).all(|w| w[0] >= w[1]) {
                let t = AffineWeylElt::translation(&lambda);
                let expected = HeckeElt::e(&lambda).scale(&LaurentPoly::s_pow(Profile::S, t.length() as i32));
                assert_eq!(alg.t_element(&t), expected, "λ={lambda:?}");
            }
            let mut k = 0;
            while k < m {
                lambda[k] += 1;
                if lambda[k] <= top {
                    break;
                }
                lambda[k] = -1;
                k += 1;
            }
            if k == m {
                break;
            }
        }
    }
}

#[test]
fn e_from_translations() {
    let m = 3;
    let alg = HeckeAlgebra::new(m);
    for lambda in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 2, 0], [0, -1, 1], [2, -1, -1]] {
        assert_eq!(alg.e_via_translations(&lambda), HeckeElt::e(&lambda), "λ={lambda:?}");
    }
}

#[test]
fn inverses() {
    for m in 2..=5 {
        let alg = HeckeAlgebra::new(m);
        for i in 1..=m {
            assert_eq!(alg.t(i).mul(&alg.t_inverse(i)), HeckeElt::one(m), "m={m} i={i}");
            assert_eq!(alg.t_inverse(i).mul(&alg.t(i)), HeckeElt::one(m));
        }
        assert_eq!(alg.tw(1).mul(&alg.tw(-1)), HeckeElt::one(m));
        assert_eq!(alg.tw(-1).mul(&alg.tw(1)), HeckeElt::one(m));
        assert_eq!(alg.try_inverse(&alg.tw(2)).unwrap(), alg.tw(-2));
    }
    let alg = HeckeAlgebra::new(2);
    let at_one: Vec<_> = alg.t_inverse(1).at_s_one().into_iter().collect();
    let t_one: Vec<_> = alg.t(1).at_s_one().into_iter().collect();
    assert_eq!(at_one, t_one);
}

#[test]
fn sigma_conjugates_e() {
    let alg = HeckeAlgebra::new(2);
    let sigma = HeckeElt::t_perm(Perm::rotation(2, 1));
    let sigma_inv = alg.try_inverse(&sigma).unwrap();
    let lhs = sigma_inv.mul(&HeckeElt::e(&[1, 0])).mul(&sigma);
    // v⁻¹ e^{(0,1)} T² = e^{(0,1)} + (1 − v⁻¹) e^{(0,1)} T
    let expected = HeckeElt::e(&[0, 1]).add(&HeckeElt::basis(vec![0, 1], Perm::rotation(2, 1), sp("1 - s^-2")));
    assert_eq!(lhs, expected);
}

#[test]
fn omega_conjugation_and_braids() {
    for m in 2..=5 {
        let alg = HeckeAlgebra::new(m);
        for i in 1..=m {
            let conj = alg.tw(1).mul(&alg.t(i)).mul(&alg.tw(-1));
            assert_eq!(conj, alg.t(crate::weyl::conjugate_simple(m, i, 1)), "m={m} i={i}");
        }
        if m >= 3 {
            for i in 1..=m {
                let j = i % m + 1;
                let (a, b) = (alg.t(i), alg.t(j));
                assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b), "braid m={m} i={i}");
                for k in 1..=m {
                    if k != i && k != j && k % m + 1 != i {
                        assert_eq!(a.mul(&alg.t(k)), alg.t(k).mul(&a), "commute m={m} {i},{k}");
                    }
                }
            }
        }
    }
}

#[test]
fn affine_generator_quadratic() {
    for m in 2..=5 {
        let alg = HeckeAlgebra::new(m);
        let t = alg.t(m);
        let lhs = t.add(&HeckeElt::one(m)).mul(&t.sub(&HeckeElt::scalar(m, sp("s^2"))));
        assert!(lhs.is_zero(), "m={m}");
    }
}

#[test]
fn center_commutes() {
    let m = 3;
    let alg = HeckeAlgebra::new(m);
    for lambda in [[1, 0, 0], [1, 1, 0], [2, 0, -1], [1, -1, 0]] {
        let z = HeckeElt::from_x_poly(&crate::rings::orbit_sum(&lambda));
        for i in 1..=m {
            assert_eq!(z.mul(&alg.t(i)), alg.t(i).mul(&z), "λ={lambda:?} i={i}");
        }
        assert_eq!(z.mul(&alg.tw(1)), alg.tw(1).mul(&z));
    }
}

#[test]
fn printing_round_trip() {
    let alg = HeckeAlgebra::new(3);
    for src in ["T[3]", "Tw[1]", "e[1,0,-1]*T[1]*T[2] - s*T[2] + 3", "(T[1] + 1)*(T[1] - v)", "Tw[-2]"] {
        let h = alg.parse(src).unwrap();
        let printed = h.to_string();
        assert_eq!(alg.parse(&printed).unwrap(), h, "{src} -> {printed}");
    }
    assert!(alg.parse("(T[1] + 1)*(T[1] - v)").unwrap().is_zero());
    assert_eq!(alg.parse("T[1]").unwrap().to_string(), "T[1]");
    assert_eq!(alg.parse("T[1]*T[1]").unwrap().to_string(), "s^2 + (s^2 - 1)*T[1]");
    assert_eq!(alg.parse("T[2]^-1*T[2]").unwrap(), HeckeElt::one(3));
    assert!(alg.parse("T[4]").is_err());
    assert!(alg.parse("e[1,0]").is_err());
    assert!(alg.parse("(T[1] + 1)^-1").is_err());
}

#[test]
fn tw1_matches_weyl_at_s_one() {
    for m in 2..=4 {
        let alg = HeckeAlgebra::new(m);
        let w = AffineWeylElt::omega_elt(m, 1);
        let img: Vec<_> = alg.tw(1).at_s_one().into_keys().collect();
        assert_eq!(img, vec![(w.lambda.clone(), w.perm.clone())]);
    }
}
