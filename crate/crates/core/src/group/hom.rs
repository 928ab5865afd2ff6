use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A validated group homomorphism, stored as its table of images.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::MalformedMap(format!(
                "{} images given for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some((x, &y)) = map.iter().enumerate().find(|(_, &y)| y >= target.order()) {
            return Err(Error::MalformedMap(format!(
                "image {y} of {x} is outside the target"
            )));
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(Error::NotHomomorphism(x, y));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    pub(crate) fn new_unchecked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(map.len(), source.order());
        GroupHom {
            source,
            target,
            map,
        }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom::new_unchecked(g.clone(), g.clone(), g.elements().collect())
    }

    pub fn zero(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        GroupHom::new_unchecked(source.clone(), target.clone(), vec![0; source.order()])
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &GroupHom) -> Result<GroupHom> {
        if *inner.target != *self.source {
            return Err(Error::CodomainMismatch);
        }
        Ok(GroupHom::new_unchecked(
            inner.source.clone(),
            self.target.clone(),
            inner.map.iter().map(|&x| self.map[x]).collect(),
        ))
    }

    pub fn kernel(&self) -> Subgroup {
        let elems = self
            .source
            .elements()
            .filter(|&x| self.map[x] == 0)
            .collect();
        Subgroup::from_sorted_unchecked(self.source.clone(), elems)
    }

    pub fn image(&self) -> Subgroup {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        let elems = (0..hit.len()).filter(|&y| hit[y]).collect();
        Subgroup::from_sorted_unchecked(self.target.clone(), elems)
    }

    pub fn is_injective(&self) -> bool {
        self.source.elements().skip(1).all(|x| self.map[x] != 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.source.order() == self.target.order()
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}: {:?})",
            self.source.order(),
            self.target.order(),
            self.map
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn mod_two_projection() {
        let z4 = Arc::new(catalog::cyclic(4));
        let z2 = Arc::new(catalog::cyclic(2));
        let h = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(h.kernel().elements(), &[0, 2]);
        assert!(h.is_surjective());
        assert!(!h.is_injective());
        assert!(h.kernel().is_normal());
    }

    #[test]
    fn not_a_homomorphism_reports_first_pair() {
        let z4 = Arc::new(catalog::cyclic(4));
        let z2 = Arc::new(catalog::cyclic(2));
        // map(1 + 1) = map(2) = 1 but map(1) + map(1) = 0
        assert_eq!(
            GroupHom::new(z4, z2, vec![0, 1, 1, 0]),
            Err(Error::NotHomomorphism(1, 1))
        );
    }

    #[test]
    fn zero_and_identity() {
        let s3 = Arc::new(catalog::symmetric3());
        let z4 = Arc::new(catalog::cyclic(4));
        let zero = GroupHom::zero(&s3, &z4);
        assert_eq!(
            GroupHom::new(s3.clone(), z4.clone(), zero.map().to_vec()).unwrap(),
            zero
        );
        assert_eq!(zero.image().elements(), &[0]);
        let id = GroupHom::identity(&s3);
        assert_eq!(id.kernel().elements(), &[0]);
        assert!(id.is_bijective());
    }

    #[test]
    fn malformed_maps() {
        let z2 = Arc::new(catalog::cyclic(2));
        assert!(matches!(
            GroupHom::new(z2.clone(), z2.clone(), vec![0]),
            Err(Error::MalformedMap(_))
        ));
        assert!(matches!(
            GroupHom::new(z2.clone(), z2, vec![0, 2]),
            Err(Error::MalformedMap(_))
        ));
    }

    #[test]
    fn composition() {
        let z4 = Arc::new(catalog::cyclic(4));
        let z2 = Arc::new(catalog::cyclic(2));
        let p = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        let double = GroupHom::new(z4.clone(), z4.clone(), vec![0, 2, 0, 2]).unwrap();
        assert!(p.after(&double).unwrap().is_zero());
        assert_eq!(double.after(&p), Err(Error::CodomainMismatch));
    }
}
