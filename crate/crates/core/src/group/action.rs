use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// A left action of `actor` on `space` by group automorphisms, `b·a`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    table: Vec<usize>,
}

impl GroupAction {
    pub fn new(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        table: Vec<usize>,
    ) -> Result<Self> {
        let (nb, na) = (actor.order(), space.order());
        if table.len() != nb * na {
            return Err(Error::ActionAxiomViolation(format!(
                "table has {} entries, expected {}",
                table.len(),
                nb * na
            )));
        }
        if let Some(i) = table.iter().position(|&v| v >= na) {
            return Err(Error::ActionAxiomViolation(format!(
                "{}·{} is outside the acted-on group",
                i / na,
                i % na
            )));
        }
        let act = |b: usize, a: usize| table[b * na + a];
        for a in space.elements() {
            if act(0, a) != a {
                return Err(Error::ActionAxiomViolation(format!("0·{a} != {a}")));
            }
        }
        for b in actor.elements() {
            for a in space.elements() {
                for a1 in space.elements() {
                    if act(b, space.op(a, a1)) != space.op(act(b, a), act(b, a1)) {
                        return Err(Error::ActionAxiomViolation(format!(
                            "{b}·({a}+{a1}) != {b}·{a} + {b}·{a1}"
                        )));
                    }
                }
            }
        }
        for b in actor.elements() {
            for b1 in actor.elements() {
                for a in space.elements() {
                    if act(actor.op(b, b1), a) != act(b, act(b1, a)) {
                        return Err(Error::ActionAxiomViolation(format!(
                            "({b}+{b1})·{a} != {b}·({b1}·{a})"
                        )));
                    }
                }
            }
        }
        Ok(GroupAction {
            actor,
            space,
            table,
        })
    }

    pub fn from_fn(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table = actor
            .elements()
            .flat_map(|b| space.elements().map(move |a| (b, a)))
            .map(|(b, a)| act(b, a))
            .collect();
        Self::new(actor, space, table)
    }

    pub fn trivial(actor: &Arc<FiniteGroup>, space: &Arc<FiniteGroup>) -> Self {
        let table = (0..actor.order()).flat_map(|_| space.elements()).collect();
        GroupAction {
            actor: actor.clone(),
            space: space.clone(),
            table,
        }
    }

    /// `g·a = g + a - g` on the group itself.
    pub fn conjugation(g: &Arc<FiniteGroup>) -> Self {
        let table = g
            .elements()
            .flat_map(|x| g.elements().map(move |a| g.conj(x, a)))
            .collect();
        GroupAction {
            actor: g.clone(),
            space: g.clone(),
            table,
        }
    }

    /// The action of `hom.source()` obtained by acting through `hom`.
    pub fn through(&self, hom: &GroupHom) -> Result<Self> {
        if **hom.target() != *self.actor {
            return Err(Error::ComponentMismatch(
                "homomorphism does not land in the acting group".into(),
            ));
        }
        let na = self.space.order();
        let table = hom
            .map()
            .iter()
            .flat_map(|&b| self.table[b * na..(b + 1) * na].iter().copied())
            .collect();
        Ok(GroupAction {
            actor: hom.source().clone(),
            space: self.space.clone(),
            table,
        })
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.table[b * self.space.order() + a]
    }

    /// The permutation of `space` induced by `b`.
    pub fn row(&self, b: usize) -> &[usize] {
        let na = self.space.order();
        &self.table[b * na..(b + 1) * na]
    }

    pub fn is_trivial(&self) -> bool {
        self.actor
            .elements()
            .all(|b| self.row(b).iter().enumerate().all(|(a, &v)| a == v))
    }
}

impl fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupAction({} on {})",
            self.actor.order(),
            self.space.order()
        )
    }
}
