use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vbraid::abelian::{invariants_of, relation_matrix, smith_normal_form, IntegerMatrix};
use vbraid::coset::phi;
use vbraid::report::{minor_gcd_factors, random_kernel_word, random_relator_product};
use vbraid::rewriter::{canonical, expand_subgroup_word, rewrite_tau, tau};
use vbraid::word::substitute_parametric;
use vbraid::{Coset, Letter, Presentation, Relator, ShiftRule, Symbol, Word};

fn braid_word(n: u32, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..n, any::<bool>(), any::<bool>()), 0..max).prop_map(|v| {
        Word::new(
            v.into_iter()
                .map(|(k, rho, inv)| Letter::new(if rho { Symbol::Rho(k) } else { Symbol::Sigma(k) }, inv))
                .collect(),
        )
    })
}

fn subgroup_word(max: usize) -> impl Strategy<Value = Word> {
    let sym = prop_oneof![
        (-4i64..4).prop_map(Symbol::A),
        (-4i64..4, 0u8..2).prop_map(|(m, e)| Symbol::B(m, e)),
        (3u32..6).prop_map(Symbol::C),
        (-4i64..4, 0u8..2).prop_map(|(m, e)| Symbol::F(m, e)),
        (-4i64..4, 3u32..6).prop_map(|(m, l)| Symbol::G(m, l)),
    ];
    prop::collection::vec((sym, any::<bool>()), 0..max)
        .prop_map(|v| Word::new(v.into_iter().map(|(s, inv)| Letter::new(s, inv)).collect()))
}

fn add(a: Coset, b: Coset) -> Coset {
    Coset::new(a.i + b.i, a.eps ^ b.eps)
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #[test]
    fn inverse_is_an_involution(w in subgroup_word(20)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn shifts_compose(w in subgroup_word(20), a in -5i64..5, b in -5i64..5) {
        prop_assert_eq!(w.shift(a).shift(b), w.shift(a + b));
    }

    #[test]
    fn canonical_forgets_rotation_and_inversion(w in subgroup_word(16), k in 0usize..16) {
        let c = canonical(&w);
        prop_assert_eq!(canonical(&c), c.clone());
        prop_assert_eq!(canonical(&w.inverse()), c.clone());
        let r = w.cyclically_reduced();
        if !r.is_empty() {
            prop_assert_eq!(canonical(&r.rotate(k % r.len())), c);
        }
    }

    #[test]
    fn phi_is_a_homomorphism(u in braid_word(6, 30), v in braid_word(6, 30)) {
        prop_assert_eq!(phi(&u.concat(&v)).unwrap(), add(phi(&u).unwrap(), phi(&v).unwrap()));
        let inv = phi(&u.inverse()).unwrap();
        prop_assert!(add(phi(&u).unwrap(), inv).is_identity());
    }

    #[test]
    fn tau_round_trips(seed in any::<u64>(), n in 3u32..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_relator_product(&mut rng, n, 80);
        prop_assert_eq!(expand_subgroup_word(&rewrite_tau(&w).unwrap(), true), w);
    }

    #[test]
    fn tau_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_kernel_word(&mut rng, 4, 15);
        let v = random_kernel_word(&mut rng, 4, 15);
        prop_assert_eq!(tau(&u.concat(&v)).unwrap(), tau(&u).unwrap().concat(&tau(&v).unwrap()));
    }

    #[test]
    fn off_kernel_words_are_rejected(w in braid_word(4, 20)) {
        prop_assert_eq!(rewrite_tau(&w).is_ok(), phi(&w).unwrap().is_identity());
    }

    #[test]
    fn substitution_commutes_with_instantiation(w in subgroup_word(12), m in -3i64..3) {
        let rule = ShiftRule::new(Symbol::F(0, 1), Word::parse("f(0,0)^-1 a(1)").unwrap()).unwrap();
        prop_assert_eq!(substitute_parametric(&w, &rule).shift(m), rule.apply(&w.shift(m)));
    }

    #[test]
    fn smith_form_matches_minors(rows in small_matrix()) {
        let m = IntegerMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
        let diag: Vec<BigInt> = s.diagonal().into_iter().filter(|d| !d.is_zero()).collect();
        prop_assert_eq!(diag, minor_gcd_factors(&rows));
    }

    #[test]
    fn relation_rows_are_additive(u in subgroup_word(10), v in subgroup_word(10)) {
        let gens: Vec<_> = u.symbols().into_iter().chain(v.symbols()).map(vbraid::GenDecl::Concrete).collect();
        let p = Presentation {
            name: "t".into(),
            generators: gens,
            relators: vec![Relator::concrete(u.clone(), "u"), Relator::concrete(v.clone(), "v"), Relator::concrete(u.concat(&v), "uv")],
        };
        let (_, m) = relation_matrix(&p).unwrap();
        for j in 0..m.cols() {
            prop_assert_eq!(m.get(2, j), &(m.get(0, j) + m.get(1, j)));
        }
    }

    #[test]
    fn invariants_ignore_row_order(mut rows in small_matrix()) {
        let a = invariants_of(&IntegerMatrix::from_rows(&rows)).unwrap();
        rows.reverse();
        prop_assert_eq!(invariants_of(&IntegerMatrix::from_rows(&rows)).unwrap(), a);
    }
}
