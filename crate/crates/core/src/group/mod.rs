//! Finite groups as Cayley tables, and the constructions built on them.
//!
//! Groups are written additively throughout: `op(a, b)` is `a + b`,
//! `sub(a, b)` is `a - b`, and the identity is always index `0`.

mod action;
pub mod catalog;
mod construct;
mod hom;
mod search;
mod subgroup;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use action::GroupAction;
pub use construct::{
    automorphism_group, direct_product, pullback, quotient, subgroups, Automorphisms, Pullback,
    Quotient,
};
pub use hom::GroupHom;
pub use search::{generators, homomorphisms, homomorphisms_where};
pub use subgroup::Subgroup;

/// Default bound on group orders for subgroup, automorphism and
/// homomorphism enumeration.
pub const DEFAULT_SIZE_BOUND: usize = 64;

/// A validated finite group on the indices `0..order`, with identity `0`.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a raw Cayley table. If the identity is not at index 0 the
    /// identity and 0 are swapped; error witnesses use the raw labels.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::MalformedTable(format!(
                    "entry ({i}, {j}) = {v} is out of range"
                )));
            }
        }
        let op = |a: usize, b: usize| rows[a][b];

        let e = (0..n)
            .find(|&e| (0..n).all(|x| op(e, x) == x && op(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| op(x, y) == e && op(y, x) == e)
                    .ok_or(Error::NoInverse(x))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = op(a, b);
                for c in 0..n {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }

        // Canonical relabelling: swap e and 0.
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(op(a, b));
            }
            inv[relabel(a)] = relabel(inverse[a]);
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverse: inv,
            names: None,
        })
    }

    /// Builds a group from an operation known to be a group law with
    /// identity 0. Still validated; a failure here is a defect in the caller.
    pub(crate) fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| op(a, b)).collect())
            .collect();
        let g = Self::from_table(&rows)?;
        if rows.iter().zip(0..order).any(|(r, a)| r[0] != a) {
            return Err(Error::defect("constructed group does not have identity 0"));
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverse: vec![0],
            names: None,
        }
    }

    /// Attaches element labels. Names are cosmetic and ignored by equality.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::MalformedTable(format!(
                "{} names given for a group of order {}",
                names.len(),
                self.order
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a - b`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.op(a, self.inverse[b])
    }

    /// `g + a - g`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.op(self.op(g, a), self.inverse[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn center(self: &Arc<Self>) -> Subgroup {
        let elems = self
            .elements()
            .filter(|&z| self.elements().all(|g| self.op(z, g) == self.op(g, z)))
            .collect();
        Subgroup::from_sorted_unchecked(self.clone(), elems)
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.clone(), self.elements().collect())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.clone(), vec![0])
    }

    pub(crate) fn check_bound(&self, what: &'static str, bound: usize) -> Result<()> {
        if self.order > bound {
            return Err(Error::SizeBound {
                what,
                size: self.order as u128,
                bound: bound as u128,
            });
        }
        Ok(())
    }
}

/// Equality is table identity; element names are ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.table == other.table)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}", self.order)?;
        if self.order <= 8 {
            write!(f, ", {:?}", self.rows())?;
        }
        write!(f, ")")
    }
}
