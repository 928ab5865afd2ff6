mod common;

use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::Index;
use xmlift::derivation::{
    crossed_homomorphisms, crossed_homomorphisms_brute_force, find_sections, lifting_map,
    BRUTE_FORCE_BUDGET,
};
use xmlift::group::DEFAULT_SIZE_BOUND;
use xmlift::{CrossedModule, Derivation, DerivationSemigroup, Lifting};

fn within_budget(xm: &CrossedModule) -> bool {
    (xm.a().order() as u128).pow(xm.b().order() as u32) <= BRUTE_FORCE_BUDGET
}

#[test]
fn pruned_search_matches_brute_force() {
    let mut compared = 0;
    for xm in common::pool().iter().chain(&common::standard()) {
        if !within_budget(xm) {
            continue;
        }
        let pruned = crossed_homomorphisms(xm.action(), DEFAULT_SIZE_BOUND).unwrap();
        let brute = crossed_homomorphisms_brute_force(xm.action()).unwrap();
        assert_eq!(pruned, brute);
        compared += 1;
    }
    assert!(compared > 100);
}

#[test]
fn semigroup_laws_and_regularity() {
    for xm in common::pool().iter().chain(&common::standard()) {
        let semi = DerivationSemigroup::enumerate(xm, DEFAULT_SIZE_BOUND).unwrap();
        assert_eq!(semi.associativity_failure(), None);
        assert!(semi.elements()[0].values().iter().all(|&v| v == 0));
        for d in semi.elements() {
            let cert = d.certify_regularity(Some(&semi)).unwrap();
            assert!(cert.agrees());
            assert_eq!(cert.unit, d.is_regular());
            let (_, h) = d.endomorphism().unwrap();
            assert_eq!(h.d(), d.values());
        }
    }
}

#[test]
fn theta_and_sigma_are_multiplicative() {
    for xm in common::standard() {
        let semi = DerivationSemigroup::enumerate(&xm, DEFAULT_SIZE_BOUND).unwrap();
        let ds = semi.elements();
        for (i, d1) in ds.iter().enumerate() {
            for (j, d2) in ds.iter().enumerate() {
                let d = &ds[semi.product()[i][j]];
                for a in xm.a().elements() {
                    assert_eq!(d.theta()[a], d1.theta()[d2.theta()[a]]);
                }
                for b in xm.b().elements() {
                    assert_eq!(d.sigma()[b], d1.sigma()[d2.sigma()[b]]);
                }
            }
        }
    }
}

fn check_lifting(xm: &Arc<CrossedModule>, l: &Lifting) -> Result<(), TestCaseError> {
    let base = DerivationSemigroup::enumerate(xm, DEFAULT_SIZE_BOUND).unwrap();
    let upper = DerivationSemigroup::enumerate(l.upper(), DEFAULT_SIZE_BOUND).unwrap();
    let map = lifting_map(&base, &upper, l).unwrap();
    prop_assert!(map.homomorphism);
    prop_assert!(map.units_to_units);
    for d in base.elements() {
        let up = d.lift(l).unwrap();
        prop_assert_eq!(up.theta(), d.theta());
        for x in l.x().elements() {
            prop_assert_eq!(
                d.sigma()[l.omega().apply(x)],
                l.omega().apply(up.sigma()[x])
            );
        }
    }
    let sections = find_sections(l.omega(), DEFAULT_SIZE_BOUND).unwrap();
    if !sections.is_empty() {
        prop_assert!(map.injective);
        for s in &sections {
            for d in base.elements() {
                prop_assert_eq!(&d.lift(l).unwrap().descend(l, s).unwrap(), d);
            }
        }
    }
    Ok(())
}

#[test]
fn lifting_derivations_on_standard_fixtures() {
    let mut with_sections = 0;
    for xm in common::standard() {
        for l in Lifting::enumerate(&xm, DEFAULT_SIZE_BOUND).unwrap() {
            check_lifting(&xm, &l).unwrap();
            if !find_sections(l.omega(), DEFAULT_SIZE_BOUND)
                .unwrap()
                .is_empty()
            {
                with_sections += 1;
            }
        }
    }
    assert!(with_sections > 0);
}

#[test]
fn mod_two_fixture() {
    let xm = common::standard()
        .into_iter()
        .find(|x| x.a().order() == 4 && x.b().order() == 2)
        .unwrap();
    let semi = DerivationSemigroup::enumerate(&xm, DEFAULT_SIZE_BOUND).unwrap();
    assert_eq!(semi.len(), 2);
    assert_eq!(semi.units(), &[0, 1]);
    assert!(semi.elements().iter().all(Derivation::is_regular));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lifting_derivations_on_generated_instances(i in any::<Index>(), k in any::<Index>()) {
        let pool = common::pool();
        let xm = &pool[i.index(pool.len())];
        let ls = Lifting::enumerate(xm, DEFAULT_SIZE_BOUND).unwrap();
        check_lifting(xm, &ls[k.index(ls.len())])?;
    }
}
