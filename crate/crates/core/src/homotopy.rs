//! Homotopies between crossed-module morphisms and their lifting.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupHom;
use crate::lifting::Lifting;
use crate::xmod::XModMorphism;

/// A homotopy `d: (f1, g1) ≃ (f2, g2)` between morphisms
/// `(Ã, B̃, α̃) -> (A, B, α)`, for a map `d: B̃ -> A` with
///
/// * H1 `d(b1 + b2) = d(b1) + g2(b1)·d(b2)`
/// * H2 `d(α̃(a)) = f1(a) - f2(a)`
/// * H3 `α(d(b)) = g1(b) - g2(b)`
///
/// H1 twists by `g2`. By CM2 this is the same as
/// `d(b1 + b2) = g1(b1)·d(b2) + d(b1)`, and agrees with
/// `d(b1) + g1(b1)·d(b2)` whenever `A` is abelian.
#[derive(Clone, PartialEq, Eq)]
pub struct Homotopy {
    d: Vec<usize>,
    from: Arc<XModMorphism>,
    to: Arc<XModMorphism>,
}

impl Homotopy {
    pub fn new(d: Vec<usize>, from: Arc<XModMorphism>, to: Arc<XModMorphism>) -> Result<Self> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::ComponentMismatch(
                "homotopic morphisms must share source and target".into(),
            ));
        }
        let src = from.source();
        let tgt = from.target();
        let (a, bt) = (tgt.a(), src.b());
        if d.len() != bt.order() || d.iter().any(|&v| v >= a.order()) {
            return Err(Error::MalformedMap(
                "homotopy must map every element of B̃ into A".into(),
            ));
        }
        let (f1, g1) = (from.f1(), from.f2());
        let (f2, g2) = (to.f1(), to.f2());
        for b1 in bt.elements() {
            for b2 in bt.elements() {
                let rhs = a.op(d[b1], tgt.act(g2.apply(b1), d[b2]));
                if d[bt.op(b1, b2)] != rhs {
                    return Err(Error::H1Violation { b1, b2 });
                }
            }
        }
        for x in src.a().elements() {
            if d[src.alpha(x)] != a.sub(f1.apply(x), f2.apply(x)) {
                return Err(Error::H2Violation { a: x });
            }
        }
        for b in bt.elements() {
            if tgt.alpha(d[b]) != tgt.b().sub(g1.apply(b), g2.apply(b)) {
                return Err(Error::H3Violation { b });
            }
        }
        Ok(Homotopy { d, from, to })
    }

    /// The zero homotopy from a morphism to itself.
    pub fn zero(m: &Arc<XModMorphism>) -> Self {
        Homotopy {
            d: vec![0; m.source().b().order()],
            from: m.clone(),
            to: m.clone(),
        }
    }

    /// Given `(f2, g2)` and a map `d` that is a derivation for the action of
    /// `B̃` on `A` through `g2`, builds `f1 = dα̃ + f2`, `g1 = αd + g2` and the
    /// homotopy `d: (f1, g1) ≃ (f2, g2)`.
    pub fn ending_at(to: &Arc<XModMorphism>, d: Vec<usize>) -> Result<Self> {
        let src = to.source();
        let tgt = to.target();
        if d.len() != src.b().order() || d.iter().any(|&v| v >= tgt.a().order()) {
            return Err(Error::MalformedMap(
                "homotopy must map every element of B̃ into A".into(),
            ));
        }
        let f1 = src
            .a()
            .elements()
            .map(|x| tgt.a().op(d[src.alpha(x)], to.f1().apply(x)))
            .collect();
        let g1 = src
            .b()
            .elements()
            .map(|b| tgt.b().op(tgt.alpha(d[b]), to.f2().apply(b)))
            .collect();
        let f1 = GroupHom::new(src.a().clone(), tgt.a().clone(), f1)?;
        let g1 = GroupHom::new(src.b().clone(), tgt.b().clone(), g1)?;
        let from = XModMorphism::new(src.clone(), tgt.clone(), f1, g1)?;
        Homotopy::new(d, Arc::new(from), to.clone())
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn from(&self) -> &Arc<XModMorphism> {
        &self.from
    }

    pub fn to(&self) -> &Arc<XModMorphism> {
        &self.to
    }

    /// Re-validates the same `d` as a homotopy between the lifted morphisms
    /// `(f1, g̃1)` and `(f2, g̃2)` into `(A, X, φ)`.
    pub fn lift(
        &self,
        lifting: &Lifting,
        lifted_from: &Arc<XModMorphism>,
        lifted_to: &Arc<XModMorphism>,
    ) -> Result<Homotopy> {
        if **self.from.target() != **lifting.base() {
            return Err(Error::BaseMismatch);
        }
        for (down, up) in [(&self.from, lifted_from), (&self.to, lifted_to)] {
            if up.target() != lifting.upper() || up.source() != down.source() {
                return Err(Error::ComponentMismatch(
                    "lifted morphism must run from the same source into (A, X, φ)".into(),
                ));
            }
            if up.f1() != down.f1() || lifting.omega().after(up.f2())? != *down.f2() {
                return Err(Error::ComponentMismatch(
                    "lifted morphism does not lie over the original".into(),
                ));
            }
        }
        Homotopy::new(self.d.clone(), lifted_from.clone(), lifted_to.clone())
    }
}

impl fmt::Debug for Homotopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homotopy({:?})", self.d)
    }
}
