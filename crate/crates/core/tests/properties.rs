//! Randomized invariants over the bundled corpus. Each case draws a seed and
//! builds its instance from it, so failures shrink to a reproducible seed.

use std::sync::Arc;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use hvdc_core::construct::{
    associators, companion, companion_identities_hold, conjoint, conjoint_identities_hold, cotabulation, horizontal_composite,
    left_unitor, restriction_as_composite, right_unitor,
};
use hvdc_core::corpus::{categories, monoidal_structure};
use hvdc_core::monoidal::{day_convolution, day_unit_law};
use hvdc_core::random::{random_functor, random_presheaf, random_profunctor, seeded, SeededRng};
use hvdc_core::yoneda::{yoneda_lemma_check, yoneda_object};
use hvdc_core::{FinCategory, FinFunctor, Profunctor};

fn small(rng: &mut SeededRng) -> Arc<FinCategory> {
    let cats: Vec<_> = categories().into_iter().map(|(_, c)| c).filter(|c| c.num_objects() <= 3).collect();
    cats.choose(rng).unwrap().clone()
}

fn functor(rng: &mut SeededRng, a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> FinFunctor {
    random_functor(rng, a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn companions_and_conjoints_satisfy_their_identities(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        let f = functor(&mut rng, &a, &b);
        prop_assert!(companion_identities_hold(&f, &companion(&f).unwrap()).unwrap());
        prop_assert!(conjoint_identities_hold(&f, &conjoint(&f).unwrap()).unwrap());
    }

    #[test]
    fn hom_profunctors_are_units_for_composition(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        let j = random_profunctor(&mut rng, &a, &b, 2);
        prop_assert!(left_unitor(&j).unwrap().verify());
        prop_assert!(right_unitor(&j).unwrap().verify());
    }

    #[test]
    fn composition_is_associative_up_to_iso(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let cs: Vec<_> = (0..4).map(|_| small(&mut rng)).collect();
        let js: Vec<Profunctor> = (0..3).map(|i| random_profunctor(&mut rng, &cs[i], &cs[i + 1], 2)).collect();
        let (l, r) = associators(&js[0], &js[1], &js[2]).unwrap();
        prop_assert!(l.verify() && r.verify());
        let flat = horizontal_composite(&js).unwrap().profunctor;
        prop_assert!(flat.is_valid());
    }

    #[test]
    fn restrictions_are_composites_with_representables(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b, c, d) = (small(&mut rng), small(&mut rng), small(&mut rng), small(&mut rng));
        let k = random_profunctor(&mut rng, &c, &d, 2);
        let (f, g) = (functor(&mut rng, &a, &c), functor(&mut rng, &b, &d));
        let (_, _, iso) = restriction_as_composite(&k, &f, &g).unwrap();
        prop_assert!(iso.verify());
    }

    #[test]
    fn yoneda_bijection_has_the_size_of_the_fibre(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = small(&mut rng);
        let p = random_presheaf(&mut rng, &a, 3);
        for x in 0..a.num_objects() {
            let chk = yoneda_lemma_check(&a, &p, x).unwrap();
            prop_assert!(chk.holds());
            prop_assert_eq!(chk.hom.len(), p.size(x));
        }
    }

    #[test]
    fn cographs_contain_both_categories(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b) = (small(&mut rng), small(&mut rng));
        let j = random_profunctor(&mut rng, &a, &b, 2);
        let cot = cotabulation(&j).unwrap();
        prop_assert!(cot.category.is_valid());
        prop_assert_eq!(cot.category.num_objects(), a.num_objects() + b.num_objects());
        let extra = (0..a.num_objects()).flat_map(|x| (0..b.num_objects()).map(move |y| (x, y))).map(|(x, y)| j.size(x, y)).sum::<usize>();
        prop_assert_eq!(cot.category.num_morphisms(), a.num_morphisms() + b.num_morphisms() + extra);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn day_unit_laws_hold_on_discrete_z2(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let m = monoidal_structure("z2", 3).unwrap();
        let p = random_presheaf(&mut rng, m.base(), 2);
        for left in [true, false] {
            prop_assert!(day_unit_law(&m, &p, left).unwrap().is_some_and(|i| i.verify()));
        }
        // on a discrete group, (p ⊛ y g)(x) = p(x - g)
        let y1 = yoneda_object(m.base(), 1).unwrap();
        let conv = day_convolution(&m, &[p.clone(), y1]).unwrap();
        prop_assert_eq!(conv.presheaf.size(0), p.size(1));
        prop_assert_eq!(conv.presheaf.size(1), p.size(0));
    }
}
