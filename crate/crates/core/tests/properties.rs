use proptest::prelude::*;

use gelfand_tsetlin::document::{parse_seed, SeedDocument};
use gelfand_tsetlin::omega::seed_omega;
use gelfand_tsetlin::random::{random_shift, rng, SeedSampler};
use gelfand_tsetlin::rational::{frac, int};
use gelfand_tsetlin::structure::OmegaProfile;
use gelfand_tsetlin::{
    act, act_lowering, act_raising, gamma_eigenvalue, is_standard, omega_plus_set, omega_set,
    same_class, seeds_same_irreducible, ActionMode, Actor, FiniteModule, Generator, GtVector,
    HighestWeight, Seed, Shift, Tableau, WordOrder,
};

fn seed_strategy() -> impl Strategy<Value = Seed> {
    (2usize..=4, any::<u64>()).prop_map(|(n, s)| SeedSampler::new(n).sample(&mut rng(s)))
}

fn shift_for(n: usize, s: u64, radius: i64) -> Shift {
    random_shift(&mut rng(s), n, radius)
}

fn seed_of(t: &Tableau<'_>) -> Seed {
    Seed::new(t.rows().into_iter().rev().collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shifting_keeps_genericity_and_omega(seed in seed_strategy(), s in any::<u64>()) {
        let t = Tableau::new(&seed, shift_for(seed.n(), s, 4)).unwrap();
        prop_assert!(seed_of(&t).is_generic());
        prop_assert_eq!(omega_set(&t), seed_omega(&seed));
    }

    #[test]
    fn omega_plus_is_inside_omega(seed in seed_strategy(), s in any::<u64>()) {
        let t = Tableau::new(&seed, shift_for(seed.n(), s, 4)).unwrap();
        prop_assert!(omega_plus_set(&t).is_subset(&omega_set(&t)));
    }

    #[test]
    fn profile_matches_direct_omega_plus(seed in seed_strategy(), s in any::<u64>()) {
        let profile = OmegaProfile::new(&seed).unwrap();
        let z = shift_for(seed.n(), s, 5);
        let t = Tableau::new(&seed, z.clone()).unwrap();
        prop_assert_eq!(profile.to_set(profile.mask(&z)), omega_plus_set(&t));
    }

    #[test]
    fn same_class_is_an_equivalence(seed in seed_strategy(), s in any::<u64>()) {
        let n = seed.n();
        let mut r = rng(s);
        let ts: Vec<Tableau<'_>> =
            (0..3).map(|_| Tableau::new(&seed, random_shift(&mut r, n, 1)).unwrap()).collect();
        let eq = |a: usize, b: usize| same_class(&ts[a], &ts[b]).unwrap();
        for a in 0..3 {
            prop_assert!(eq(a, a));
            for b in 0..3 {
                prop_assert_eq!(eq(a, b), eq(b, a));
                for c in 0..3 {
                    if eq(a, b) && eq(b, c) {
                        prop_assert!(eq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn same_irreducible_is_symmetric(seed in seed_strategy(), s in any::<u64>()) {
        let t = Tableau::new(&seed, shift_for(seed.n(), s, 2)).unwrap();
        let other = seed_of(&t);
        prop_assert!(seeds_same_irreducible(&seed, &seed).unwrap());
        prop_assert_eq!(
            seeds_same_irreducible(&seed, &other).unwrap(),
            seeds_same_irreducible(&other, &seed).unwrap()
        );
        // The identity permutation is always admissible.
        if same_class(&Tableau::origin(&seed), &t).unwrap() {
            prop_assert!(seeds_same_irreducible(&seed, &other).unwrap());
        }
    }

    #[test]
    fn action_is_local(seed in seed_strategy(), s in any::<u64>()) {
        let n = seed.n();
        let t = Tableau::new(&seed, shift_for(n, s, 3)).unwrap();
        let v = GtVector::basis(&t);
        for g in Generator::all(n) {
            let reach = (g.i as i64 - g.j as i64).abs();
            for target in act(g, &v, ActionMode::Generic).unwrap().support() {
                prop_assert!(target.shift().l1_distance(t.shift()) <= reach);
            }
        }
    }

    #[test]
    fn seed_documents_round_trip(seed in seed_strategy()) {
        let doc = SeedDocument::from_seed(&seed);
        prop_assert_eq!(parse_seed(&doc.to_json()).unwrap(), seed);
    }
}

fn small_weights() -> impl Strategy<Value = HighestWeight> {
    (2usize..=3, prop::collection::vec(0i64..=3, 3)).prop_map(|(n, mut v)| {
        v.truncate(n);
        v.sort_unstable_by(|a, b| b.cmp(a));
        HighestWeight::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Standard mode only drops the non-standard targets of generic mode; it
    /// never changes a coefficient.
    #[test]
    fn standard_mode_restricts_generic_mode(w in small_weights()) {
        let module = FiniteModule::new(w);
        let n = module.weight().n();
        for t in module.standard_tableaux() {
            for k in 1..n {
                for (generic, standard) in [
                    (act_raising(k, &t, ActionMode::Generic), act_raising(k, &t, ActionMode::Standard)),
                    (act_lowering(k, &t, ActionMode::Generic), act_lowering(k, &t, ActionMode::Standard)),
                ] {
                    let (generic, standard) = (generic.unwrap(), standard.unwrap());
                    let mut kept = GtVector::zero(module.seed());
                    for (z, c) in generic.terms() {
                        if is_standard(&t.with_shift(z.clone())) {
                            kept.add_term(z.clone(), c.clone());
                        }
                    }
                    prop_assert_eq!(kept, standard);
                }
            }
        }
    }
}

/// The monomials of `c_{mk}` act with their rightmost factor first; the
/// opposite order breaks the eigenvalue law from `k = 3` on.
#[test]
fn gamma_words_act_rightmost_first() {
    let seed = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![frac(1, 5), frac(4, 3)],
        vec![frac(1, 7)],
    ])
    .unwrap();
    let t = Tableau::new(&seed, Shift::new(3, vec![1, -1, 2]).unwrap()).unwrap();
    let v = GtVector::basis(&t);
    let mut actor = Actor::new(ActionMode::Generic);
    for m in 1..=3 {
        for k in 1..=m {
            let expected = v.scaled(&gamma_eigenvalue(m, k, &t).unwrap());
            let right = actor
                .gamma_generator(m, k, &v, WordOrder::RightmostFirst)
                .unwrap();
            assert_eq!(right, expected, "c_{m}{k}");
        }
    }
    let left = actor
        .gamma_generator(3, 3, &v, WordOrder::LeftmostFirst)
        .unwrap();
    assert_ne!(left, v.scaled(&gamma_eigenvalue(3, 3, &t).unwrap()));
}
