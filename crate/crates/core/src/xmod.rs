//! Crossed modules of finite groups and their morphisms.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    automorphism_group, homomorphisms, FiniteGroup, GroupAction, GroupHom, Subgroup,
};

/// A crossed module `(A, B, α)`: a boundary `α: A -> B` and an action of
/// `B` on `A` satisfying CM1 and CM2.
#[derive(Clone, PartialEq, Eq)]
pub struct CrossedModule {
    boundary: GroupHom,
    action: GroupAction,
}

impl CrossedModule {
    /// Validates CM1 `α(b·a) = b + α(a) - b` for all `(b, a)`, then CM2
    /// `α(a)·a1 = a + a1 - a` for all `(a, a1)`, reporting the first
    /// failure in lexicographic order.
    pub fn new(boundary: GroupHom, action: GroupAction) -> Result<Self> {
        let (a, b) = (boundary.source(), boundary.target());
        if **action.actor() != **b || **action.space() != **a {
            return Err(Error::ComponentMismatch(
                "action must be of the boundary's target on its source".into(),
            ));
        }
        for y in b.elements() {
            for x in a.elements() {
                if boundary.apply(action.act(y, x)) != b.conj(y, boundary.apply(x)) {
                    return Err(Error::Cm1Violation { b: y, a: x });
                }
            }
        }
        for x in a.elements() {
            for x1 in a.elements() {
                if action.act(boundary.apply(x), x1) != a.conj(x, x1) {
                    return Err(Error::Cm2Violation { a: x, a1: x1 });
                }
            }
        }
        Ok(CrossedModule { boundary, action })
    }

    /// Inclusion of a normal subgroup with the conjugation action.
    pub fn inclusion(normal: &Subgroup) -> Result<Self> {
        normal.require_normal()?;
        let (n, inc) = normal.to_group();
        let g = normal.parent();
        let action = GroupAction::from_fn(g.clone(), n.clone(), |x, i| {
            normal
                .local_index(g.conj(x, inc.apply(i)))
                .expect("normal subgroup")
        })?;
        CrossedModule::new(inc, action)
    }

    /// `(G, Aut(G), ι)` with `ι(g)` conjugation by `g` and the natural action.
    pub fn automorphism(g: &Arc<FiniteGroup>, bound: usize) -> Result<Self> {
        let aut = automorphism_group(g, bound)?;
        let iota = g
            .elements()
            .map(|x| {
                let perm: Vec<usize> = g.elements().map(|a| g.conj(x, a)).collect();
                aut.index_of(&perm).expect("inner automorphism")
            })
            .collect();
        let iota = GroupHom::new(g.clone(), aut.group.clone(), iota)?;
        CrossedModule::new(iota, aut.action)
    }

    pub fn a(&self) -> &Arc<FiniteGroup> {
        self.boundary.source()
    }

    pub fn b(&self) -> &Arc<FiniteGroup> {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    #[inline]
    pub fn alpha(&self, a: usize) -> usize {
        self.boundary.apply(a)
    }

    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.action.act(b, a)
    }

    /// The structural consequences of the axioms, each checked exhaustively.
    pub fn verify_structure(&self) -> StructureReport {
        let image = self.boundary.image();
        let kernel = self.boundary.kernel();
        let center = self.a().center();
        let image_fixes_center = image.elements().iter().all(|&b| {
            center
                .elements()
                .iter()
                .all(|&z| self.action.act(b, z) == z)
        });
        StructureReport {
            image_normal: image.is_normal(),
            kernel_central: kernel.is_subset_of(&center),
            image_fixes_center,
        }
    }

    pub fn classify(&self) -> TransitivityClass {
        let alpha = &self.boundary;
        if alpha.is_bijective() {
            TransitivityClass::OneTransitive
        } else if alpha.is_injective() {
            TransitivityClass::SimplyTransitive
        } else if alpha.is_surjective() {
            TransitivityClass::Transitive
        } else if alpha.is_zero() && self.a().is_abelian() {
            TransitivityClass::TotallyIntransitive
        } else {
            TransitivityClass::None
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.boundary.is_surjective()
    }

    /// `θ: B -> Aut(A)`, `θ(b)(a) = b·a`, into the automorphism group used
    /// by [`CrossedModule::automorphism`] for `A`.
    pub fn action_to_theta(&self, bound: usize) -> Result<GroupHom> {
        let aut = automorphism_group(self.a(), bound)?;
        let map = self
            .b()
            .elements()
            .map(|b| {
                aut.index_of(self.action.row(b))
                    .ok_or_else(|| Error::defect("action by a non-automorphism"))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(self.b().clone(), aut.group.clone(), map)
    }
}

impl fmt::Debug for CrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CrossedModule({} -> {}, boundary {:?})",
            self.a().order(),
            self.b().order(),
            self.boundary.map()
        )
    }
}

/// Outcome of [`CrossedModule::verify_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// `α(A)` is normal in `B`.
    pub image_normal: bool,
    /// `ker α` lies in the center of `A`.
    pub kernel_central: bool,
    /// `α(A)` fixes the center of `A` pointwise.
    pub image_fixes_center: bool,
}

impl StructureReport {
    pub fn all_true(&self) -> bool {
        self.image_normal && self.kernel_central && self.image_fixes_center
    }
}

/// Reported most-specific first: one-transitive (bijective boundary),
/// simply transitive (injective), transitive (surjective), totally
/// intransitive (zero boundary, abelian `A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransitivityClass {
    OneTransitive,
    SimplyTransitive,
    Transitive,
    TotallyIntransitive,
    None,
}

impl TransitivityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransitivityClass::OneTransitive => "one-transitive",
            TransitivityClass::SimplyTransitive => "simply-transitive",
            TransitivityClass::Transitive => "transitive",
            TransitivityClass::TotallyIntransitive => "totally-intransitive",
            TransitivityClass::None => "none",
        }
    }
}

impl fmt::Display for TransitivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A morphism `(f1, f2): (A, B, α) -> (A', B', α')`.
#[derive(Clone, PartialEq, Eq)]
pub struct XModMorphism {
    source: Arc<CrossedModule>,
    target: Arc<CrossedModule>,
    f1: GroupHom,
    f2: GroupHom,
}

impl XModMorphism {
    pub fn new(
        source: Arc<CrossedModule>,
        target: Arc<CrossedModule>,
        f1: GroupHom,
        f2: GroupHom,
    ) -> Result<Self> {
        if **f1.source() != **source.a()
            || **f1.target() != **target.a()
            || **f2.source() != **source.b()
            || **f2.target() != **target.b()
        {
            return Err(Error::ComponentMismatch(
                "morphism components have the wrong domains".into(),
            ));
        }
        for a in source.a().elements() {
            if f2.apply(source.alpha(a)) != target.alpha(f1.apply(a)) {
                return Err(Error::SquareNotCommuting { a });
            }
        }
        for b in source.b().elements() {
            for a in source.a().elements() {
                if f1.apply(source.act(b, a)) != target.act(f2.apply(b), f1.apply(a)) {
                    return Err(Error::NotEquivariant { b, a });
                }
            }
        }
        Ok(XModMorphism {
            source,
            target,
            f1,
            f2,
        })
    }

    pub fn identity(xm: &Arc<CrossedModule>) -> Self {
        XModMorphism {
            source: xm.clone(),
            target: xm.clone(),
            f1: GroupHom::identity(xm.a()),
            f2: GroupHom::identity(xm.b()),
        }
    }

    /// `self ∘ inner`, componentwise.
    pub fn after(&self, inner: &XModMorphism) -> Result<Self> {
        if *inner.target != *self.source {
            return Err(Error::ComponentMismatch(
                "morphisms are not composable".into(),
            ));
        }
        XModMorphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.f1.after(&inner.f1)?,
            self.f2.after(&inner.f2)?,
        )
    }

    /// Every morphism between two crossed modules, sorted by `(f1, f2)`.
    pub fn enumerate(
        source: &Arc<CrossedModule>,
        target: &Arc<CrossedModule>,
        bound: usize,
    ) -> Result<Vec<Self>> {
        let f1s = homomorphisms(source.a(), target.a(), bound)?;
        let f2s = homomorphisms(source.b(), target.b(), bound)?;
        let mut out = Vec::new();
        for f1 in &f1s {
            for f2 in &f2s {
                if let Ok(m) =
                    XModMorphism::new(source.clone(), target.clone(), f1.clone(), f2.clone())
                {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    pub fn source(&self) -> &Arc<CrossedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CrossedModule> {
        &self.target
    }

    pub fn f1(&self) -> &GroupHom {
        &self.f1
    }

    pub fn f2(&self) -> &GroupHom {
        &self.f2
    }
}

impl fmt::Debug for XModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "XModMorphism(f1 {:?}, f2 {:?})",
            self.f1.map(),
            self.f2.map()
        )
    }
}
