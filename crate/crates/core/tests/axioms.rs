mod common;

use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::Index;
use xmlift::group::{automorphism_group, DEFAULT_SIZE_BOUND};
use xmlift::{CrossedModule, GroupHom, Lifting, XModMorphism};

// Oracle for CM1 and CM2, independent of the constructor.
fn peiffer_holds(xm: &CrossedModule) -> bool {
    let (a, b) = (xm.a(), xm.b());
    let cm1 = b.elements().all(|y| {
        a.elements()
            .all(|x| xm.alpha(xm.act(y, x)) == b.conj(y, xm.alpha(x)))
    });
    let cm2 = a.elements().all(|x| {
        a.elements()
            .all(|x1| xm.act(xm.alpha(x), x1) == a.conj(x, x1))
    });
    cm1 && cm2
}

#[test]
fn pool_is_large_and_valid() {
    let pool = common::pool();
    assert!(pool.len() > 100, "only {} crossed modules", pool.len());
    for xm in pool {
        assert!(peiffer_holds(xm));
        assert!(xm.verify_structure().all_true(), "{xm:?}");
    }
}

#[test]
fn standard_fixtures_are_valid() {
    for xm in common::standard() {
        assert!(peiffer_holds(&xm));
        assert!(xm.verify_structure().all_true());
    }
}

#[test]
fn every_crossed_module_lifts_the_automorphism_crossed_module() {
    for xm in common::pool() {
        let aut = Arc::new(CrossedModule::automorphism(xm.a(), DEFAULT_SIZE_BOUND).unwrap());
        let theta = xm.action_to_theta(DEFAULT_SIZE_BOUND).unwrap();
        let theta = GroupHom::new(
            theta.source().clone(),
            aut.b().clone(),
            theta.map().to_vec(),
        )
        .unwrap();
        let l = Lifting::new(aut, xm.boundary().clone(), theta).unwrap();
        assert_eq!(**l.upper(), **xm);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_of_boundary_is_conjugation(i in any::<Index>()) {
        let xm = &common::pool()[i.index(common::pool().len())];
        let aut = automorphism_group(xm.a(), DEFAULT_SIZE_BOUND).unwrap();
        let theta = xm.action_to_theta(DEFAULT_SIZE_BOUND).unwrap();
        for a in xm.a().elements() {
            let inner: Vec<usize> = xm.a().elements().map(|x| xm.a().conj(a, x)).collect();
            prop_assert_eq!(&aut.perms[theta.apply(xm.alpha(a))], &inner);
        }
    }

    #[test]
    fn morphisms_compose(i in any::<Index>(), j in any::<Index>(), k in any::<Index>()) {
        let pool = common::pool();
        let (x, y, z) = (
            &pool[i.index(pool.len())],
            &pool[j.index(pool.len())],
            &pool[k.index(pool.len())],
        );
        let xy = XModMorphism::enumerate(x, y, DEFAULT_SIZE_BOUND).unwrap();
        let yz = XModMorphism::enumerate(y, z, DEFAULT_SIZE_BOUND).unwrap();
        for m in xy.iter().take(4) {
            prop_assert_eq!(XModMorphism::identity(y).after(m).unwrap(), m.clone());
            prop_assert_eq!(m.after(&XModMorphism::identity(x)).unwrap(), m.clone());
            for n in yz.iter().take(4) {
                prop_assert!(n.after(m).is_ok());
            }
        }
    }
}
