//! Finite groupoids, group-groupoids, their actions on groups, the action
//! groupoid and covering morphisms.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{direct_product, pullback, FiniteGroup, GroupHom, Pullback};

/// A finite groupoid with objects `0..objects` and morphisms `0..len`.
/// `h∘g` is defined exactly when `d0(h) = d1(g)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    identities: Vec<usize>,
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroupoid {
    /// Validates the category axioms and finds inverses. `compose(h, g)` is
    /// only called on composable pairs.
    pub fn new(
        objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = source.len();
        if target.len() != n || identities.len() != objects {
            return Err(Error::GroupoidAxiom("inconsistent table sizes".into()));
        }
        if source.iter().chain(&target).any(|&x| x >= objects) {
            return Err(Error::GroupoidAxiom("endpoint out of range".into()));
        }
        let mut table = vec![None; n * n];
        for h in 0..n {
            for g in 0..n {
                if source[h] != target[g] {
                    continue;
                }
                let c = compose(h, g);
                if c >= n || source[c] != source[g] || target[c] != target[h] {
                    return Err(Error::GroupoidAxiom(format!(
                        "{h}∘{g} has the wrong endpoints"
                    )));
                }
                table[h * n + g] = Some(c);
            }
        }
        let mut gd = FiniteGroupoid {
            objects,
            source,
            target,
            identities,
            compose: table,
            inverse: Vec::new(),
        };
        for x in 0..objects {
            let e = gd.identities[x];
            if e >= n || gd.source[e] != x || gd.target[e] != x {
                return Err(Error::GroupoidAxiom(format!(
                    "identity of {x} is not a loop at {x}"
                )));
            }
            for g in 0..n {
                if gd.target[g] == x && gd.compose(e, g) != Some(g) {
                    return Err(Error::GroupoidAxiom(format!("1_{x}∘{g} != {g}")));
                }
                if gd.source[g] == x && gd.compose(g, e) != Some(g) {
                    return Err(Error::GroupoidAxiom(format!("{g}∘1_{x} != {g}")));
                }
            }
        }
        for h in 0..n {
            for g in 0..n {
                let Some(hg) = gd.compose(h, g) else { continue };
                for f in 0..n {
                    let Some(gf) = gd.compose(g, f) else { continue };
                    if gd.compose(hg, f) != gd.compose(h, gf) {
                        return Err(Error::GroupoidAxiom(format!(
                            "composition is not associative at ({h}, {g}, {f})"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let (x, y) = (gd.source[g], gd.target[g]);
            let inv = (0..n).find(|&h| {
                gd.compose(h, g) == Some(gd.identities[x])
                    && gd.compose(g, h) == Some(gd.identities[y])
            });
            inverse.push(
                inv.ok_or_else(|| Error::GroupoidAxiom(format!("morphism {g} has no inverse")))?,
            );
        }
        gd.inverse = inverse;
        Ok(gd)
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    /// `d0`
    pub fn source(&self, g: usize) -> usize {
        self.source[g]
    }

    /// `d1`
    pub fn target(&self, g: usize) -> usize {
        self.target[g]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn compose(&self, h: usize, g: usize) -> Option<usize> {
        self.compose[h * self.len() + g]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `St x = d0⁻¹(x)`, in index order.
    pub fn star(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.source[g] == x).collect()
    }

    /// All composable pairs `(h, g)`.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |h| (0..n).filter_map(move |g| self.compose(h, g).map(|_| (h, g))))
    }
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroupoid({} objects, {} morphisms)",
            self.objects,
            self.len()
        )
    }
}

/// A groupoid whose objects and morphisms form groups such that `d0`, `d1`,
/// the identity assignment and inversion are homomorphisms and
/// `(h∘g) + (h'∘g') = (h + h')∘(g + g')`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupGroupoid {
    groupoid: Arc<FiniteGroupoid>,
    objects: Arc<FiniteGroup>,
    morphisms: Arc<FiniteGroup>,
}

impl GroupGroupoid {
    pub fn new(
        groupoid: FiniteGroupoid,
        objects: Arc<FiniteGroup>,
        morphisms: Arc<FiniteGroup>,
    ) -> Result<Self> {
        if objects.order() != groupoid.objects() || morphisms.order() != groupoid.len() {
            return Err(Error::GroupoidAxiom(
                "group orders differ from the groupoid".into(),
            ));
        }
        let structure = |what: &str, r: Result<GroupHom>| {
            r.map(|_| ())
                .map_err(|e| Error::GroupoidAxiom(format!("{what} is not a homomorphism: {e}")))
        };
        structure(
            "d0",
            GroupHom::new(morphisms.clone(), objects.clone(), groupoid.source.clone()),
        )?;
        structure(
            "d1",
            GroupHom::new(morphisms.clone(), objects.clone(), groupoid.target.clone()),
        )?;
        structure(
            "the identity assignment",
            GroupHom::new(
                objects.clone(),
                morphisms.clone(),
                groupoid.identities.clone(),
            ),
        )?;
        structure(
            "groupoid inversion",
            GroupHom::new(
                morphisms.clone(),
                morphisms.clone(),
                groupoid.inverse.clone(),
            ),
        )?;
        let pairs: Vec<(usize, usize)> = groupoid.composable_pairs().collect();
        for &(h, g) in &pairs {
            let hg = groupoid.compose(h, g).expect("composable");
            for &(h1, g1) in &pairs {
                let lhs = morphisms.op(hg, groupoid.compose(h1, g1).expect("composable"));
                let rhs = groupoid.compose(morphisms.op(h, h1), morphisms.op(g, g1));
                if rhs != Some(lhs) {
                    return Err(Error::GroupoidAxiom(format!(
                        "interchange fails at ({h}, {g}, {h1}, {g1})"
                    )));
                }
            }
        }
        Ok(GroupGroupoid {
            groupoid: Arc::new(groupoid),
            objects,
            morphisms,
        })
    }

    /// Only identity morphisms.
    pub fn discrete(h: &Arc<FiniteGroup>) -> Result<Self> {
        let ids: Vec<usize> = h.elements().collect();
        let gd = FiniteGroupoid::new(h.order(), ids.clone(), ids.clone(), ids, |a, _| a)?;
        GroupGroupoid::new(gd, h.clone(), h.clone())
    }

    /// Exactly one morphism `(x, y): x -> y` for each pair of objects.
    pub fn indiscrete(h: &Arc<FiniteGroup>) -> Result<Self> {
        let prod = direct_product(h, h);
        let pairs = prod.pairs.clone();
        let gd = FiniteGroupoid::new(
            h.order(),
            pairs.iter().map(|&(x, _)| x).collect(),
            pairs.iter().map(|&(_, y)| y).collect(),
            h.elements()
                .map(|x| prod.index_of(x, x).expect("diagonal"))
                .collect(),
            |k, g| prod.index_of(pairs[g].0, pairs[k].1).expect("pair"),
        )?;
        GroupGroupoid::new(gd, h.clone(), prod.group)
    }

    /// A group as a groupoid with one object, composing by the group law.
    /// The interchange law holds only for abelian groups.
    pub fn one_object(b: &Arc<FiniteGroup>) -> Result<Self> {
        let gd = FiniteGroupoid::new(
            1,
            vec![0; b.order()],
            vec![0; b.order()],
            vec![0],
            |h, g| b.op(h, g),
        )?;
        GroupGroupoid::new(gd, Arc::new(FiniteGroup::trivial()), b.clone())
    }

    pub fn groupoid(&self) -> &Arc<FiniteGroupoid> {
        &self.groupoid
    }

    pub fn object_group(&self) -> &Arc<FiniteGroup> {
        &self.objects
    }

    pub fn morphism_group(&self) -> &Arc<FiniteGroup> {
        &self.morphisms
    }

    pub fn d0(&self) -> GroupHom {
        GroupHom::new_unchecked(
            self.morphisms.clone(),
            self.objects.clone(),
            self.groupoid.source.clone(),
        )
    }

    pub fn d1(&self) -> GroupHom {
        GroupHom::new_unchecked(
            self.morphisms.clone(),
            self.objects.clone(),
            self.groupoid.target.clone(),
        )
    }
}

impl fmt::Debug for GroupGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupGroupoid({:?})", self.groupoid)
    }
}

/// A functor between finite groupoids.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupoidMorphism {
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
    on_objects: Vec<usize>,
    on_morphisms: Vec<usize>,
}

impl GroupoidMorphism {
    pub fn new(
        source: Arc<FiniteGroupoid>,
        target: Arc<FiniteGroupoid>,
        on_objects: Vec<usize>,
        on_morphisms: Vec<usize>,
    ) -> Result<Self> {
        if on_objects.len() != source.objects()
            || on_morphisms.len() != source.len()
            || on_objects.iter().any(|&x| x >= target.objects())
            || on_morphisms.iter().any(|&g| g >= target.len())
        {
            return Err(Error::NotAMorphism("maps have the wrong shape".into()));
        }
        for g in 0..source.len() {
            let p = on_morphisms[g];
            if target.source(p) != on_objects[source.source(g)]
                || target.target(p) != on_objects[source.target(g)]
            {
                return Err(Error::NotAMorphism(format!(
                    "morphism {g} is sent to {p} with the wrong endpoints"
                )));
            }
        }
        for x in 0..source.objects() {
            if on_morphisms[source.identity(x)] != target.identity(on_objects[x]) {
                return Err(Error::NotAMorphism(format!(
                    "identity of {x} is not preserved"
                )));
            }
        }
        for (h, g) in source.composable_pairs() {
            let hg = source.compose(h, g).expect("composable");
            if target.compose(on_morphisms[h], on_morphisms[g]) != Some(on_morphisms[hg]) {
                return Err(Error::NotAMorphism(format!(
                    "composition {h}∘{g} is not preserved"
                )));
            }
        }
        Ok(GroupoidMorphism {
            source,
            target,
            on_objects,
            on_morphisms,
        })
    }

    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        GroupoidMorphism {
            source: g.clone(),
            target: g.clone(),
            on_objects: (0..g.objects()).collect(),
            on_morphisms: (0..g.len()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        &self.target
    }

    pub fn on_objects(&self) -> &[usize] {
        &self.on_objects
    }

    pub fn on_morphisms(&self) -> &[usize] {
        &self.on_morphisms
    }
}

impl fmt::Debug for GroupoidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupoidMorphism({:?}, {:?})",
            self.on_objects, self.on_morphisms
        )
    }
}

/// Star sizes and the first failing object of a covering check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringReport {
    pub covering: bool,
    pub witness: Option<usize>,
    /// `(|St x̃|, |St p(x̃)|)` for every object `x̃` of the source.
    pub stars: Vec<(usize, usize)>,
}

/// A morphism is a covering when each `St x̃ -> St p(x̃)` is a bijection.
pub fn is_covering_morphism(p: &GroupoidMorphism) -> CoveringReport {
    let mut witness = None;
    let mut stars = Vec::with_capacity(p.source.objects());
    for x in 0..p.source.objects() {
        let upstairs = p.source.star(x);
        let downstairs = p.target.star(p.on_objects[x]);
        let mut image: Vec<usize> = upstairs.iter().map(|&g| p.on_morphisms[g]).collect();
        image.sort_unstable();
        image.dedup();
        if witness.is_none() && (image.len() != upstairs.len() || image != downstairs) {
            witness = Some(x);
        }
        stars.push((upstairs.len(), downstairs.len()));
    }
    CoveringReport {
        covering: witness.is_none(),
        witness,
        stars,
    }
}

/// A morphism of group-groupoids: a functor whose object and morphism maps
/// are homomorphisms.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupGroupoidMorphism {
    source: Arc<GroupGroupoid>,
    target: Arc<GroupGroupoid>,
    objects: GroupHom,
    morphisms: GroupHom,
    functor: GroupoidMorphism,
}

impl GroupGroupoidMorphism {
    pub fn new(
        source: Arc<GroupGroupoid>,
        target: Arc<GroupGroupoid>,
        objects: GroupHom,
        morphisms: GroupHom,
    ) -> Result<Self> {
        if **objects.source() != *source.objects
            || **objects.target() != *target.objects
            || **morphisms.source() != *source.morphisms
            || **morphisms.target() != *target.morphisms
        {
            return Err(Error::NotAMorphism(
                "homomorphisms do not match the group-groupoids".into(),
            ));
        }
        let functor = GroupoidMorphism::new(
            source.groupoid.clone(),
            target.groupoid.clone(),
            objects.map().to_vec(),
            morphisms.map().to_vec(),
        )?;
        Ok(GroupGroupoidMorphism {
            source,
            target,
            objects,
            morphisms,
            functor,
        })
    }

    pub fn identity(g: &Arc<GroupGroupoid>) -> Self {
        GroupGroupoidMorphism {
            source: g.clone(),
            target: g.clone(),
            objects: GroupHom::identity(&g.objects),
            morphisms: GroupHom::identity(&g.morphisms),
            functor: GroupoidMorphism::identity(&g.groupoid),
        }
    }

    pub fn source(&self) -> &Arc<GroupGroupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupGroupoid> {
        &self.target
    }

    /// `f0`
    pub fn on_objects(&self) -> &GroupHom {
        &self.objects
    }

    /// `f1`
    pub fn on_morphisms(&self) -> &GroupHom {
        &self.morphisms
    }

    pub fn functor(&self) -> &GroupoidMorphism {
        &self.functor
    }
}

impl fmt::Debug for GroupGroupoidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupGroupoidMorphism({:?})", self.functor)
    }
}

/// An action of a group-groupoid `G` on a group `X` via `ω: X -> Ob(G)`:
/// `g•x` is defined when `d0(g) = ω(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GGAction {
    gg: Arc<GroupGroupoid>,
    omega: GroupHom,
    table: Vec<Option<usize>>,
}

impl GGAction {
    /// `rows[g][x]` must be `Some` exactly where `d0(g) = ω(x)`.
    pub fn new(
        gg: Arc<GroupGroupoid>,
        omega: GroupHom,
        rows: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        if **omega.target() != *gg.objects {
            return Err(Error::GgActionViolation("ω must land in Ob(G)".into()));
        }
        let (nm, nx) = (gg.morphisms.order(), omega.source().order());
        if rows.len() != nm || rows.iter().any(|r| r.len() != nx) {
            return Err(Error::GgActionViolation("table has the wrong shape".into()));
        }
        for (g, row) in rows.iter().enumerate() {
            for (x, v) in row.iter().enumerate() {
                let defined = gg.groupoid.source(g) == omega.apply(x);
                match v {
                    Some(v) if !defined || *v >= nx => {
                        return Err(Error::GgActionViolation(format!(
                            "{g}•{x} is given but must be undefined or is out of range"
                        )))
                    }
                    None if defined => {
                        return Err(Error::GgActionViolation(format!("{g}•{x} is missing")))
                    }
                    _ => {}
                }
            }
        }
        let act = GGAction {
            gg,
            omega,
            table: rows.into_iter().flatten().collect(),
        };
        act.validate()?;
        Ok(act)
    }

    /// Builds the table from `f(g, x)`, called only where `d0(g) = ω(x)`.
    pub fn from_fn(
        gg: Arc<GroupGroupoid>,
        omega: GroupHom,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let rows = (0..gg.morphisms.order())
            .map(|g| {
                omega
                    .source()
                    .elements()
                    .map(|x| (gg.groupoid.source(g) == omega.apply(x)).then(|| f(g, x)))
                    .collect()
            })
            .collect();
        GGAction::new(gg, omega, rows)
    }

    fn validate(&self) -> Result<()> {
        let gd = &self.gg.groupoid;
        let (mg, xg) = (&self.gg.morphisms, self.omega.source());
        let fail = |m: String| Err(Error::GgActionViolation(m));
        for g in 0..gd.len() {
            for x in xg.elements() {
                let Some(y) = self.act(g, x) else { continue };
                if self.omega.apply(y) != gd.target(g) {
                    return fail(format!("ω({g}•{x}) != d1({g})"));
                }
            }
        }
        for x in xg.elements() {
            if self.act(gd.identity(self.omega.apply(x)), x) != Some(x) {
                return fail(format!("the identity at ω({x}) moves {x}"));
            }
        }
        for (h, g) in gd.composable_pairs() {
            let hg = gd.compose(h, g).expect("composable");
            for x in xg.elements() {
                let Some(gx) = self.act(g, x) else { continue };
                if self.act(hg, x) != self.act(h, gx) {
                    return fail(format!("({h}∘{g})•{x} != {h}•({g}•{x})"));
                }
            }
        }
        for g in 0..gd.len() {
            for x in xg.elements() {
                let Some(gx) = self.act(g, x) else { continue };
                for g1 in 0..gd.len() {
                    for x1 in xg.elements() {
                        let Some(gx1) = self.act(g1, x1) else {
                            continue;
                        };
                        if self.act(mg.op(g, g1), xg.op(x, x1)) != Some(xg.op(gx, gx1)) {
                            return fail(format!("interchange fails at ({g}, {x}), ({g1}, {x1})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group_groupoid(&self) -> &Arc<GroupGroupoid> {
        &self.gg
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        self.omega.source()
    }

    pub fn omega(&self) -> &GroupHom {
        &self.omega
    }

    pub fn act(&self, g: usize, x: usize) -> Option<usize> {
        self.table[g * self.space().order() + x]
    }

    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        self.table
            .chunks(self.space().order().max(1))
            .map(<[_]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for GGAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GGAction({:?} on order {})",
            self.gg,
            self.space().order()
        )
    }
}

/// An equivariant homomorphism `h: X -> Y` between two actions of the same
/// group-groupoid, with `ω_Y∘h = ω_X`.
#[derive(Clone, PartialEq, Eq)]
pub struct GGActionMorphism {
    source: Arc<GGAction>,
    target: Arc<GGAction>,
    map: GroupHom,
}

impl GGActionMorphism {
    pub fn new(source: Arc<GGAction>, target: Arc<GGAction>, map: GroupHom) -> Result<Self> {
        if source.gg != target.gg {
            return Err(Error::ComponentMismatch(
                "actions of different group-groupoids".into(),
            ));
        }
        if **map.source() != **source.space() || **map.target() != **target.space() {
            return Err(Error::ComponentMismatch(
                "map between the wrong groups".into(),
            ));
        }
        for x in source.space().elements() {
            if target.omega.apply(map.apply(x)) != source.omega.apply(x) {
                return Err(Error::GgActionViolation(format!(
                    "ω is not preserved at {x}"
                )));
            }
            for g in 0..source.gg.morphisms.order() {
                let Some(gx) = source.act(g, x) else { continue };
                if target.act(g, map.apply(x)) != Some(map.apply(gx)) {
                    return Err(Error::GgActionViolation(format!(
                        "not equivariant at ({g}, {x})"
                    )));
                }
            }
        }
        Ok(GGActionMorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &Arc<GGAction> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GGAction> {
        &self.target
    }

    pub fn map(&self) -> &GroupHom {
        &self.map
    }
}

impl fmt::Debug for GGActionMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GGActionMorphism({:?})", self.map.map())
    }
}

/// `G⋉X` with its projection to `G`.
#[derive(Clone, Debug)]
pub struct ActionGroupoid {
    pub groupoid: Arc<GroupGroupoid>,
    /// Morphism `i` is `pairs[i] = (g, x)`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub projection: GroupGroupoidMorphism,
}

/// Objects are the elements of `X`, morphisms the pairs `(g, x)` with
/// `d0(g) = ω(x)`, `(g, x): x -> g•x`, and
/// `(g', s')∘(g, s) = (g'∘g, s)` whenever `s' = g•s`. The group
/// structures are componentwise and the projection is `(g, x) ↦ g`.
pub fn action_groupoid(act: &GGAction) -> Result<ActionGroupoid> {
    let gg = &act.gg;
    let gd = &gg.groupoid;
    let pb: Pullback = pullback(&gg.d0(), &act.omega)?;
    let pairs = pb.pairs.clone();
    let target: Vec<usize> = pairs
        .iter()
        .map(|&(g, x)| act.act(g, x).expect("defined on the fibre product"))
        .collect();
    let groupoid = FiniteGroupoid::new(
        act.space().order(),
        pairs.iter().map(|&(_, x)| x).collect(),
        target,
        act.space()
            .elements()
            .map(|x| {
                pb.index_of(gd.identity(act.omega.apply(x)), x)
                    .expect("identity pair")
            })
            .collect(),
        |k, j| {
            let ((g1, _), (g, s)) = (pairs[k], pairs[j]);
            let c = gd.compose(g1, g).expect("composable in G");
            pb.index_of(c, s).expect("composite pair")
        },
    )
    .map_err(|e| Error::defect(format!("action groupoid is not a groupoid: {e}")))?;
    let groupoid = Arc::new(
        GroupGroupoid::new(groupoid, act.space().clone(), pb.group.clone())
            .map_err(|e| Error::defect(format!("action groupoid is not a group-groupoid: {e}")))?,
    );
    let projection = GroupGroupoidMorphism::new(
        groupoid.clone(),
        gg.clone(),
        act.omega.clone(),
        pb.left.clone(),
    )
    .map_err(|e| Error::defect(format!("projection is not a morphism: {e}")))?;
    Ok(ActionGroupoid {
        groupoid,
        pairs,
        projection,
    })
}

/// The action of `G̃` on `X ×_{ω, f0} Ob(G̃)` via `π2`,
/// `g̃•(x, õ) = (f1(g̃)•x, d1(g̃))`.
#[derive(Clone, Debug)]
pub struct PullbackAction {
    pub action: Arc<GGAction>,
    pub pullback: Pullback,
}

pub fn pullback_action(f: &GroupGroupoidMorphism, act: &GGAction) -> Result<PullbackAction> {
    if f.target != act.gg {
        return Err(Error::ComponentMismatch(
            "the action is not by the target of the morphism".into(),
        ));
    }
    let pb = pullback(&act.omega, &f.objects)?;
    let gt = &f.source;
    let action = GGAction::from_fn(gt.clone(), pb.right.clone(), |g, p| {
        let (x, _) = pb.pairs[p];
        let y = act
            .act(f.morphisms.apply(g), x)
            .expect("f preserves sources");
        pb.index_of(y, gt.groupoid.target(g))
            .expect("f preserves targets")
    })
    .map_err(|e| Error::defect(format!("pullback action fails validation: {e}")))?;
    Ok(PullbackAction {
        action: Arc::new(action),
        pullback: pb,
    })
}

/// `h × 1` between the pullbacks of two actions along the same `f`.
pub fn pullback_action_morphism(
    h: &GGActionMorphism,
    source: &PullbackAction,
    target: &PullbackAction,
) -> Result<GGActionMorphism> {
    let map = source
        .pullback
        .pairs
        .iter()
        .map(|&(x, o)| {
            target
                .pullback
                .index_of(h.map.apply(x), o)
                .ok_or(Error::ComponentMismatch(
                    "pullbacks are not along the same morphism".into(),
                ))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = GroupHom::new(
        source.pullback.group.clone(),
        target.pullback.group.clone(),
        map,
    )?;
    GGActionMorphism::new(source.action.clone(), target.action.clone(), map)
        .map_err(|e| Error::defect(format!("h × 1 is not a morphism of actions: {e}")))
}
