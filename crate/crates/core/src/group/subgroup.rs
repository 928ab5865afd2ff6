use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// A subgroup, stored as the sorted list of its elements in the parent.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::NotASubgroup(format!("{x} is not an element")));
        }
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x] = true;
        }
        for &x in &elements {
            for &y in &elements {
                if !member[parent.op(x, y)] {
                    return Err(Error::NotASubgroup(format!("not closed at ({x}, {y})")));
                }
            }
        }
        Ok(Subgroup { parent, elements })
    }

    pub(crate) fn from_sorted_unchecked(parent: Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { parent, elements }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// First `(g, n)` with `g + n - g` outside the subgroup, if any.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        for g in self.parent.elements() {
            for &n in &self.elements {
                if !self.contains(self.parent.conj(g, n)) {
                    return Some((g, n));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    pub(crate) fn require_normal(&self) -> Result<()> {
        match self.normality_witness() {
            Some((g, n)) => Err(Error::NotNormal { g, n }),
            None => Ok(()),
        }
    }

    /// Position of a parent element in the subgroup's own labelling.
    pub fn local_index(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The subgroup as a group in its own right, with elements relabelled
    /// `0..order` in increasing parent order, and the inclusion into the parent.
    pub fn to_group(&self) -> (Arc<FiniteGroup>, GroupHom) {
        let p = &self.parent;
        let local = |x: usize| self.local_index(x).expect("subgroup is closed");
        let mut g = FiniteGroup::from_fn(self.order(), |i, j| {
            local(p.op(self.elements[i], self.elements[j]))
        })
        .expect("a subgroup is a group");
        if let Some(names) = p.names() {
            g = g
                .with_names(self.elements.iter().map(|&x| names[x].clone()).collect())
                .expect("one name per element");
        }
        let g = Arc::new(g);
        let inc = GroupHom::new_unchecked(g.clone(), p.clone(), self.elements.clone());
        (g, inc)
    }

    /// Image of a subgroup of `hom.source()` under `hom`.
    pub fn map_through(&self, hom: &GroupHom) -> Subgroup {
        let mut elems: Vec<usize> = self.elements.iter().map(|&x| hom.apply(x)).collect();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_sorted_unchecked(hom.target().clone(), elems)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}
