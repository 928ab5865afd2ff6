//! Liftings `(φ, X, ω)` of a crossed module, their morphisms, morphism
//! lifting and pullback liftings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    homomorphisms_where, pullback, quotient, subgroups, GroupHom, Pullback, Subgroup,
};
use crate::xmod::{CrossedModule, XModMorphism};
use crate::FiniteGroup;

/// Above this value of `|B̃|·|X|`, [`lift_morphism`] skips its exhaustive
/// uniqueness check.
pub const UNIQUENESS_CHECK_LIMIT: usize = 4096;

/// A lifting `(φ, X, ω)` of `(A, B, α)`: `ω∘φ = α`, and `(A, X, φ)` is a
/// crossed module for the action `x·a = ω(x)·a`.
///
/// The upstairs action is always derived from the base action through `ω`.
#[derive(Clone, PartialEq, Eq)]
pub struct Lifting {
    base: Arc<CrossedModule>,
    upper: Arc<CrossedModule>,
    omega: GroupHom,
}

impl Lifting {
    pub fn new(base: Arc<CrossedModule>, phi: GroupHom, omega: GroupHom) -> Result<Self> {
        if **phi.source() != **base.a()
            || **omega.target() != **base.b()
            || **phi.target() != **omega.source()
        {
            return Err(Error::ComponentMismatch(
                "expected phi: A -> X and omega: X -> B".into(),
            ));
        }
        for a in base.a().elements() {
            if omega.apply(phi.apply(a)) != base.alpha(a) {
                return Err(Error::TriangleViolation { a });
            }
        }
        if let Some(&a) = phi
            .kernel()
            .elements()
            .iter()
            .find(|&&a| base.alpha(a) != 0)
        {
            return Err(Error::KernelViolation { a });
        }
        let action = base.action().through(&omega)?;
        let upper =
            CrossedModule::new(phi, action).map_err(|e| Error::InducedCmViolation(Box::new(e)))?;
        Ok(Lifting {
            base,
            upper: Arc::new(upper),
            omega,
        })
    }

    /// `(α, B, 1_B)`: every crossed module lifts to itself.
    pub fn identity(base: &Arc<CrossedModule>) -> Self {
        Lifting::new(
            base.clone(),
            base.boundary().clone(),
            GroupHom::identity(base.b()),
        )
        .expect("identity lifting")
    }

    /// The lifting with `X = A/C`, `φ` the projection and `ω(a + C) = α(a)`,
    /// for a subgroup `C` of `ker α`.
    pub fn from_subgroup(base: &Arc<CrossedModule>, c: &Subgroup) -> Result<Self> {
        if **c.parent() != **base.a() {
            return Err(Error::ComponentMismatch(
                "subgroup must live in the source of the boundary".into(),
            ));
        }
        if let Some(&element) = c.elements().iter().find(|&&x| base.alpha(x) != 0) {
            return Err(Error::NotSubgroupOfKernel { element });
        }
        let q = quotient(c)?;
        let omega = q.representatives.iter().map(|&r| base.alpha(r)).collect();
        let omega = GroupHom::new(q.group.clone(), base.b().clone(), omega)?;
        let lifting = Lifting::new(base.clone(), q.projection, omega)?;

        if lifting.phi().kernel().elements() != c.elements() {
            return Err(Error::defect("kernel of the quotient lift is not C"));
        }
        let kernel_alpha = base.boundary().kernel().order();
        if lifting.omega.kernel().order() * c.order() != kernel_alpha {
            return Err(Error::defect("|ker ω|·|C| differs from |ker α|"));
        }
        Ok(lifting)
    }

    /// One quotient lifting per subgroup of `ker α`, in subgroup order.
    pub fn enumerate(base: &Arc<CrossedModule>, bound: usize) -> Result<Vec<Self>> {
        let (kernel, inclusion) = base.boundary().kernel().to_group();
        subgroups(&kernel, bound)?
            .iter()
            .map(|c| Lifting::from_subgroup(base, &c.map_through(&inclusion)))
            .collect()
    }

    pub fn base(&self) -> &Arc<CrossedModule> {
        &self.base
    }

    /// The crossed module `(A, X, φ)`.
    pub fn upper(&self) -> &Arc<CrossedModule> {
        &self.upper
    }

    pub fn x(&self) -> &Arc<FiniteGroup> {
        self.upper.b()
    }

    pub fn phi(&self) -> &GroupHom {
        self.upper.boundary()
    }

    pub fn omega(&self) -> &GroupHom {
        &self.omega
    }

    /// `(1_A, ω): (A, X, φ) -> (A, B, α)`.
    pub fn projection_morphism(&self) -> Result<XModMorphism> {
        XModMorphism::new(
            self.upper.clone(),
            self.base.clone(),
            GroupHom::identity(self.base.a()),
            self.omega.clone(),
        )
    }
}

impl fmt::Debug for Lifting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lifting(phi {:?}, omega {:?})",
            self.phi().map(),
            self.omega.map()
        )
    }
}

/// `f: X -> X'` with `f∘φ = φ'` and `ω'∘f = ω`.
#[derive(Clone, PartialEq, Eq)]
pub struct LiftingMorphism {
    source: Arc<Lifting>,
    target: Arc<Lifting>,
    f: GroupHom,
}

impl LiftingMorphism {
    pub fn new(source: Arc<Lifting>, target: Arc<Lifting>, f: GroupHom) -> Result<Self> {
        if *source.base != *target.base {
            return Err(Error::BaseMismatch);
        }
        if **f.source() != **source.x() || **f.target() != **target.x() {
            return Err(Error::ComponentMismatch(
                "lifting morphism must map X to X'".into(),
            ));
        }
        for a in source.base.a().elements() {
            if f.apply(source.phi().apply(a)) != target.phi().apply(a) {
                return Err(Error::PhiViolation { a });
            }
        }
        for x in source.x().elements() {
            if target.omega.apply(f.apply(x)) != source.omega.apply(x) {
                return Err(Error::OmegaViolation { x });
            }
        }
        Ok(LiftingMorphism { source, target, f })
    }

    pub fn identity(l: &Arc<Lifting>) -> Self {
        LiftingMorphism {
            source: l.clone(),
            target: l.clone(),
            f: GroupHom::identity(l.x()),
        }
    }

    /// The map `φ(a) ↦ φ'(a)`, defined when `φ` is onto `X`.
    pub fn induced(source: Arc<Lifting>, target: Arc<Lifting>) -> Result<Self> {
        if *source.base != *target.base {
            return Err(Error::BaseMismatch);
        }
        let mut map = vec![usize::MAX; source.x().order()];
        for a in source.base.a().elements() {
            let x = source.phi().apply(a);
            let y = target.phi().apply(a);
            if map[x] == usize::MAX {
                map[x] = y;
            } else if map[x] != y {
                return Err(Error::PhiViolation { a });
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::ComponentMismatch(
                "source lift is not surjective".into(),
            ));
        }
        let f = GroupHom::new(source.x().clone(), target.x().clone(), map)?;
        LiftingMorphism::new(source, target, f)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &LiftingMorphism) -> Result<Self> {
        if *inner.target != *self.source {
            return Err(Error::ComponentMismatch(
                "lifting morphisms are not composable".into(),
            ));
        }
        LiftingMorphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.f.after(&inner.f)?,
        )
    }

    pub fn source(&self) -> &Arc<Lifting> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Lifting> {
        &self.target
    }

    pub fn f(&self) -> &GroupHom {
        &self.f
    }
}

impl fmt::Debug for LiftingMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LiftingMorphism({:?})", self.f.map())
    }
}

/// Lifts `(f, g): (Ã, B̃, α̃) -> (A, B, α)` to `(f, g̃): (Ã, B̃, α̃) -> (A, X, φ)`
/// with `ω∘g̃ = g`, where `g̃(b̃) = φ(f(ã))` for any `ã` with `α̃(ã) = b̃`.
///
/// Requires a transitive source and `f(ker α̃) ⊆ ker φ`.
pub fn lift_morphism(m: &XModMorphism, lifting: &Lifting) -> Result<XModMorphism> {
    if **m.target() != *lifting.base {
        return Err(Error::BaseMismatch);
    }
    let src = m.source();
    if !src.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let phi = lifting.phi();
    let f = m.f1();
    if let Some(&a) = src
        .boundary()
        .kernel()
        .elements()
        .iter()
        .find(|&&a| phi.apply(f.apply(a)) != 0)
    {
        return Err(Error::KernelConditionFails { a });
    }

    let mut g_tilde = vec![usize::MAX; src.b().order()];
    for a in src.a().elements() {
        let b = src.alpha(a);
        let v = phi.apply(f.apply(a));
        if g_tilde[b] == usize::MAX {
            g_tilde[b] = v;
        } else if g_tilde[b] != v {
            return Err(Error::WellDefinednessDefect { b });
        }
    }
    let g_tilde = GroupHom::new(src.b().clone(), lifting.x().clone(), g_tilde)
        .map_err(|e| Error::defect(format!("lifted map is not a homomorphism: {e}")))?;
    if lifting.omega.after(&g_tilde)? != *m.f2() {
        return Err(Error::defect("ω∘g̃ differs from g"));
    }
    let lifted = XModMorphism::new(src.clone(), lifting.upper.clone(), f.clone(), g_tilde)
        .map_err(|e| Error::defect(format!("lifted pair is not a morphism: {e}")))?;

    if src.b().order() * lifting.x().order() <= UNIQUENESS_CHECK_LIMIT {
        let all = morphism_lifts(m, lifting, usize::MAX)?;
        if all.len() != 1 || all[0] != *lifted.f2() {
            return Err(Error::defect(format!(
                "expected a unique lift, found {}",
                all.len()
            )));
        }
    }
    Ok(lifted)
}

/// Every `g̃: B̃ -> X` with `ω∘g̃ = g` making `(f, g̃)` a morphism into
/// `(A, X, φ)`, by exhaustive homomorphism search.
pub fn morphism_lifts(m: &XModMorphism, lifting: &Lifting, bound: usize) -> Result<Vec<GroupHom>> {
    if **m.target() != *lifting.base {
        return Err(Error::BaseMismatch);
    }
    let g = m.f2();
    let omega = &lifting.omega;
    let candidates = homomorphisms_where(m.source().b(), lifting.x(), bound, |b, x| {
        omega.apply(x) == g.apply(b)
    })?;
    Ok(candidates
        .into_iter()
        .filter(|gt| {
            XModMorphism::new(
                m.source().clone(),
                lifting.upper.clone(),
                m.f1().clone(),
                gt.clone(),
            )
            .is_ok()
        })
        .collect())
}

/// The pullback lifting `(ψ, X ×_{ω,g} B̃, π2)` of `(Ã, B̃, α̃)` with
/// `ψ = (φf, α̃)`, together with `(f, π1): (Ã, X ×_{ω,g} B̃, ψ) -> (A, X, φ)`.
#[derive(Clone, Debug)]
pub struct PullbackLifting {
    pub lifting: Arc<Lifting>,
    pub projection: XModMorphism,
    pub pullback: Pullback,
}

pub fn pullback_lifting(m: &XModMorphism, lifting: &Lifting) -> Result<PullbackLifting> {
    if **m.target() != *lifting.base {
        return Err(Error::BaseMismatch);
    }
    let src = m.source();
    let pb = pullback(&lifting.omega, m.f2())?;
    let psi = src
        .a()
        .elements()
        .map(|a| {
            pb.index_of(lifting.phi().apply(m.f1().apply(a)), src.alpha(a))
                .ok_or_else(|| Error::defect("(φf(ã), α̃(ã)) is not in the pullback"))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi = GroupHom::new(src.a().clone(), pb.group.clone(), psi)?;
    let pulled = Arc::new(Lifting::new(src.clone(), psi, pb.right.clone())?);
    let projection = XModMorphism::new(
        pulled.upper.clone(),
        lifting.upper.clone(),
        m.f1().clone(),
        pb.left.clone(),
    )?;
    Ok(PullbackLifting {
        lifting: pulled,
        projection,
        pullback: pb,
    })
}

/// `λ*` on morphisms: `h ↦ h × 1` between the pullback liftings.
pub fn pullback_functor(m: &XModMorphism, h: &LiftingMorphism) -> Result<LiftingMorphism> {
    if **m.target() != *h.source.base {
        return Err(Error::BaseMismatch);
    }
    let from = pullback_lifting(m, &h.source)?;
    let to = pullback_lifting(m, &h.target)?;
    let map = from
        .pullback
        .pairs
        .iter()
        .map(|&(x, b)| {
            to.pullback
                .index_of(h.f.apply(x), b)
                .ok_or_else(|| Error::defect("h × 1 leaves the pullback"))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = GroupHom::new(from.lifting.x().clone(), to.lifting.x().clone(), map)?;
    LiftingMorphism::new(from.lifting, to.lifting, f)
}
