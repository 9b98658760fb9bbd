use num_bigint::BigInt;
use proptest::prelude::*;

use untwist::braid::BraidWord;
use untwist::cyclo::{find_finite_field_root, zeta_twist_value, Cyclotomic};
use untwist::families::{torus_homfly, twist_knot_homfly, untwist_witness, FamilyInstance};
use untwist::homfly::{conway_of, SkeinEngine};
use untwist::obstruct::{t_test, t_test_modp, MoveFamily};
use untwist::poly::{LaurentPoly1, LaurentPoly2, Ring, Var, Zmod};

fn poly2(max_terms: usize, z_min: i64) -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-4i64..=4, z_min..=4, -5i64..=5), 0..max_terms)
        .prop_map(|t| LaurentPoly2::from_small(&t))
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec((1..n as i32, any::<bool>()), 1..=max_len).prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(g, pos)| if pos { g } else { -g })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly2(6, -3), q in poly2(6, -3), r in poly2(6, -3)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &LaurentPoly2::one(), p.clone());
    }

    #[test]
    fn json_round_trip(p in poly2(8, -3)) {
        prop_assert_eq!(LaurentPoly2::from_json(&p.to_json()).unwrap(), p.clone());
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly2>(&text).unwrap(), p);
    }

    #[test]
    fn specialization_is_a_homomorphism(p in poly2(5, 0), q in poly2(5, 0), v in 1i64..13) {
        let v = Zmod::new(v, 13);
        let lhs = (&p * &q).specialize_z(&v).unwrap();
        let rhs = &p.specialize_z(&v).unwrap() * &q.specialize_z(&v).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = (&p + &q).specialize_a(&v).unwrap();
        prop_assert_eq!(sum, &p.specialize_a(&v).unwrap() + &q.specialize_a(&v).unwrap());
    }

    #[test]
    fn cyclotomic_then_reduce_matches_prime_field(p in poly2(6, 0), k in 3u64..=5, skip in 0usize..2) {
        let root = find_finite_field_root(k, skip).unwrap();
        let (_, z) = zeta_twist_value(k).unwrap();
        let via_cyclo = p.specialize_z(&z).unwrap().map_coeffs(|c| c.to_prime_field(&root.zeta));
        let direct = p.specialize_z(&root.n_value).unwrap();
        prop_assert_eq!(via_cyclo, direct);
    }

    #[test]
    fn skein_relation(w in word(4, 10), j in any::<prop::sample::Index>()) {
        let engine = SkeinEngine::default();
        let j = j.index(w.len());
        let mut letters = w.letters().to_vec();
        letters[j] = letters[j].abs();
        let plus = BraidWord::new(w.strands(), letters.clone()).unwrap();
        letters[j] = -letters[j];
        let minus = BraidWord::new(w.strands(), letters.clone()).unwrap();
        letters.remove(j);
        let zero = BraidWord::new(w.strands(), letters).unwrap();
        let pp = engine.homfly_braid(&plus).unwrap();
        let pm = engine.homfly_braid(&minus).unwrap();
        let p0 = engine.homfly_braid(&zero).unwrap();
        prop_assert_eq!(&pp.shift(-1, 0) - &pm.shift(1, 0), p0.shift(0, 1));
    }

    #[test]
    fn markov_moves(w in word(4, 9), shift in 0usize..9, positive in any::<bool>()) {
        let engine = SkeinEngine::default();
        let p = engine.homfly_braid(&w).unwrap();
        prop_assert_eq!(engine.homfly_braid(&w.rotate(shift)).unwrap(), p.clone());
        prop_assert_eq!(engine.homfly_braid(&w.stabilize(positive)).unwrap(), p);
    }

    #[test]
    fn braid_print_parse(w in word(6, 12)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn components_match_permutation(w in word(6, 12)) {
        let perm = w.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                }
            }
        }
        prop_assert_eq!(w.to_diagram().component_count(), cycles);
        prop_assert_eq!(w.closure_component_count(), cycles);
    }

    #[test]
    fn mirror_inverts_a(w in word(4, 8)) {
        let engine = SkeinEngine::default();
        let p = engine.homfly_braid(&w).unwrap();
        let q = engine.homfly_braid(&w.mirror()).unwrap();
        let flipped = LaurentPoly2::from_terms(
            p.terms().map(|(a, z, c)| (-a, z, if z % 2 == 0 { c.clone() } else { -c })),
        );
        prop_assert_eq!(q, flipped);
    }

    #[test]
    fn witnesses_replay(m in -60i64..60, n in 0i64..40, k in 1u64..30) {
        let m = 2 * m + 1;
        if let Some(seq) = untwist_witness(&FamilyInstance::torus2(m).unwrap(), MoveFamily::T, k).unwrap() {
            prop_assert!(seq.replays_to_unknot());
            prop_assert!(seq.moves.iter().all(|mv| mv.k == k));
        }
        if let Some(seq) = untwist_witness(&FamilyInstance::twist(n).unwrap(), MoveFamily::Tbar, k).unwrap() {
            prop_assert!(seq.replays_to_unknot());
        }
    }

    #[test]
    fn modp_never_contradicts_cyclotomic(p in poly2(5, 0), k in 3u64..=5, skip in 0usize..2) {
        let root = find_finite_field_root(k, skip).unwrap();
        if t_test_modp(&p, k, &root).unwrap().is_obstructed() {
            prop_assert!(t_test(&p, k).unwrap().is_obstructed());
        }
    }
}

#[test]
fn torus_closed_form_matches_engine() {
    let engine = SkeinEngine::default();
    for m in (1..=11).step_by(2) {
        let w = BraidWord::two_strand(m);
        assert_eq!(
            torus_homfly(m).unwrap(),
            engine.homfly_braid(&w).unwrap(),
            "m = {m}"
        );
        assert_eq!(
            torus_homfly(-m).unwrap(),
            engine.homfly_braid(&w.mirror()).unwrap(),
            "m = -{m}"
        );
    }
}

#[test]
fn twist_knot_conway_and_span() {
    for n in 0..=8u64 {
        let p = twist_knot_homfly(n);
        let expected = LaurentPoly1::from_terms(
            Var::Z,
            [(0, BigInt::from(1)), (2, BigInt::from(-(n as i64)))],
        );
        assert_eq!(conway_of(&p).unwrap(), expected, "n = {n}");
        if n >= 1 {
            let prof = p.degree_profile().unwrap();
            assert_eq!(
                (prof.a_min, prof.a_max, prof.a_span),
                (-2, 2 * n as i64, 2 * n as i64 + 2)
            );
        }
    }
}

#[test]
fn twist_knot_braids_beyond_default_cap() {
    let engine = SkeinEngine::new(30);
    for n in 6..=7 {
        let w = untwist::families::twist_knot_braid(n);
        assert_eq!(
            engine.homfly_braid(&w).unwrap(),
            twist_knot_homfly(n as u64),
            "n = {n}"
        );
    }
}

#[test]
fn cyclotomic_root_identities() {
    for k in 2..=12u64 {
        let n = 2 * k as u32;
        let zeta = Cyclotomic::root(n);
        assert_eq!(zeta.pow(k), Cyclotomic::from_int(n, -1));
        let odd_sum = (0..n as i64)
            .filter(|e| e % 2 == 1)
            .fold(Cyclotomic::from_int(n, 0), |acc, e| {
                acc.add(&Cyclotomic::root_pow(n, e))
            });
        assert!(odd_sum.is_zero());
    }
}
