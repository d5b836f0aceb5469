use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use theta_hecke::hecke::{HeckeAlgebra, HeckeElt};
use theta_hecke::polyrep::act;
use theta_hecke::rings::{parse_poly, LaurentPoly, Monomial, Profile};
use theta_hecke::verify::{random_hecke, random_vector, sample_perms};
use theta_hecke::weyl::{AffineWeylElt, Perm};

fn poly(m: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, m + 1), -4i64..=4), 0..5).prop_map(move |terms| {
        let mut p = LaurentPoly::zero(Profile::X(m as u8));
        for (e, c) in terms {
            p.add_term(Monomial::from_exps(e), c.into());
        }
        p
    })
}

fn weyl(m: usize) -> impl Strategy<Value = AffineWeylElt> {
    (prop::collection::vec(-2i32..=2, m), Just(Perm::all(m)), any::<prop::sample::Index>())
        .prop_map(|(lambda, perms, i)| AffineWeylElt::new(lambda, i.get(&perms).clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn parse_round_trip(a in poly(3)) {
        prop_assert_eq!(parse_poly(Profile::X(3), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn hecke_associativity(seed in any::<u64>(), m in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perms = sample_perms(m);
        let alg = HeckeAlgebra::new(m);
        let a = random_hecke(&mut rng, &perms, 3).mul(&alg.tw(1));
        let b = random_hecke(&mut rng, &perms, 3);
        let c = random_hecke(&mut rng, &perms, 3);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn module_axiom(seed in any::<u64>(), m in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perms = sample_perms(m);
        let alg = HeckeAlgebra::new(m);
        let a = alg.t(m).mul(&random_hecke(&mut rng, &perms, 2));
        let b = random_hecke(&mut rng, &perms, 2);
        let u = random_vector(&mut rng, m, 3);
        prop_assert_eq!(act(&a.mul(&b), &u).unwrap(), act(&a, &act(&b, &u).unwrap()).unwrap());
        prop_assert_eq!(act(&HeckeElt::one(m), &u).unwrap(), u);
    }

    #[test]
    fn length_is_word_length(w in weyl(3)) {
        let (k, word) = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(AffineWeylElt::from_word(3, k, &word), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        for i in 1..=3 {
            let d = w.mul(&AffineWeylElt::simple(3, i)).length() as i64 - w.length() as i64;
            prop_assert_eq!(d.abs(), 1);
        }
    }

    #[test]
    fn t_element_is_invertible(w in weyl(2)) {
        let alg = HeckeAlgebra::new(2);
        let h = alg.t_element(&w).mul(&alg.t_element_inverse(&w));
        prop_assert_eq!(h, HeckeElt::one(2));
    }
}
