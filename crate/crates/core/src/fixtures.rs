//! Named crossed modules and liftings used by the command-line catalog and
//! by the test suites, plus exhaustive enumeration of small crossed modules.

use std::sync::Arc;

use crate::error::Result;
use crate::group::{
    automorphism_group, catalog, homomorphisms, FiniteGroup, GroupAction, GroupHom,
};
use crate::lifting::Lifting;
use crate::xmod::CrossedModule;

/// The standard crossed modules, in a fixed order.
pub fn crossed_modules(bound: usize) -> Result<Vec<(&'static str, Arc<CrossedModule>)>> {
    let z = |n| Arc::new(catalog::cyclic(n));
    let s3 = Arc::new(catalog::symmetric3());
    let klein = Arc::new(catalog::klein());
    let (z4, z2) = (z(4), z(2));
    let mod_two = CrossedModule::new(
        GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1])?,
        GroupAction::trivial(&z2, &z4),
    )?;
    let one = Arc::new(FiniteGroup::trivial());
    let klein_over_one = CrossedModule::new(
        GroupHom::zero(&klein, &one),
        GroupAction::trivial(&one, &klein),
    )?;
    Ok(vec![
        (
            "a3-in-s3",
            Arc::new(CrossedModule::inclusion(&catalog::alternating3_in(&s3))?),
        ),
        (
            "aut-z3",
            Arc::new(CrossedModule::automorphism(&z(3), bound)?),
        ),
        ("aut-s3", Arc::new(CrossedModule::automorphism(&s3, bound)?)),
        (
            "aut-klein",
            Arc::new(CrossedModule::automorphism(&klein, bound)?),
        ),
        ("z4-mod2", Arc::new(mod_two)),
        ("klein-over-trivial", Arc::new(klein_over_one)),
    ])
}

/// For each standard crossed module `(A, B, α)` with `N = ker α`, the
/// lifting `(A, A/N, p)` over `ω(a + N) = α(a)`.
pub fn quotient_liftings(bound: usize) -> Result<Vec<(&'static str, Arc<Lifting>)>> {
    crossed_modules(bound)?
        .into_iter()
        .map(|(name, xm)| {
            let kernel = xm.boundary().kernel();
            Ok((name, Arc::new(Lifting::from_subgroup(&xm, &kernel)?)))
        })
        .collect()
}

/// Groups of order at most 4 together with `S3`.
pub fn small_groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        Arc::new(FiniteGroup::trivial()),
        Arc::new(catalog::cyclic(2)),
        Arc::new(catalog::cyclic(3)),
        Arc::new(catalog::cyclic(4)),
        Arc::new(catalog::klein()),
        Arc::new(catalog::symmetric3()),
    ]
}

/// Every crossed module `(A, B, α)` with `A` and `B` drawn from `groups`:
/// all pairs of an action `B -> Aut(A)` and a boundary `A -> B` that
/// satisfy both axioms.
pub fn all_crossed_modules(
    groups: &[Arc<FiniteGroup>],
    bound: usize,
) -> Result<Vec<Arc<CrossedModule>>> {
    let mut out = Vec::new();
    for a in groups {
        let aut = automorphism_group(a, bound)?;
        for b in groups {
            let boundaries = homomorphisms(a, b, bound)?;
            for theta in homomorphisms(b, &aut.group, bound)? {
                let action = aut.action.through(&theta)?;
                for alpha in &boundaries {
                    if let Ok(xm) = CrossedModule::new(alpha.clone(), action.clone()) {
                        out.push(Arc::new(xm));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_SIZE_BOUND;

    #[test]
    fn standard_fixtures_build() {
        assert_eq!(crossed_modules(DEFAULT_SIZE_BOUND).unwrap().len(), 6);
        assert_eq!(quotient_liftings(DEFAULT_SIZE_BOUND).unwrap().len(), 6);
    }

    #[test]
    fn crossed_modules_over_z2() {
        let z2 = vec![Arc::new(catalog::cyclic(2))];
        // Aut(Z2) is trivial: only the trivial action, and α ∈ {0, 1}
        assert_eq!(
            all_crossed_modules(&z2, DEFAULT_SIZE_BOUND).unwrap().len(),
            2
        );
    }
}
