//! Whitehead derivations of a crossed module, the circle product, regular
//! derivations, and moving derivations between a crossed module and its
//! liftings.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{homomorphisms_where, GroupAction, GroupHom};
use crate::homotopy::Homotopy;
use crate::lifting::Lifting;
use crate::xmod::{CrossedModule, XModMorphism};

/// Search-space ceiling for [`crossed_homomorphisms_brute_force`].
pub const BRUTE_FORCE_BUDGET: u128 = 1_000_000;

/// A derivation `d: B -> A` of `(A, B, α)`, `d(b + b1) = d(b) + b·d(b1)`,
/// with its endomorphisms `θ_d(a) = dα(a) + a` and `σ_d(b) = αd(b) + b`.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    xm: Arc<CrossedModule>,
    values: Vec<usize>,
    theta: Vec<usize>,
    sigma: Vec<usize>,
}

impl Derivation {
    pub fn new(xm: Arc<CrossedModule>, values: Vec<usize>) -> Result<Self> {
        let (a, b) = (xm.a().clone(), xm.b().clone());
        if values.len() != b.order() || values.iter().any(|&v| v >= a.order()) {
            return Err(Error::MalformedMap(
                "a derivation maps every element of B into A".into(),
            ));
        }
        if let Some((x, y)) = derivation_failure(xm.action(), &values) {
            return Err(Error::NotADerivation { b: x, b1: y });
        }
        let theta: Vec<usize> = a.elements().map(|x| a.op(values[xm.alpha(x)], x)).collect();
        let sigma: Vec<usize> = b.elements().map(|y| b.op(xm.alpha(values[y]), y)).collect();
        let d = Derivation {
            xm,
            values,
            theta,
            sigma,
        };
        d.theta_hom()
            .map_err(|e| Error::defect(format!("θ_d is not an endomorphism: {e}")))?;
        d.sigma_hom()
            .map_err(|e| Error::defect(format!("σ_d is not an endomorphism: {e}")))?;
        if let Some(y) = b
            .elements()
            .find(|&y| d.theta[d.values[y]] != d.values[d.sigma[y]])
        {
            return Err(Error::defect(format!("θ_d(d({y})) != d(σ_d({y}))")));
        }
        Ok(d)
    }

    pub fn zero(xm: &Arc<CrossedModule>) -> Self {
        Derivation::new(xm.clone(), vec![0; xm.b().order()]).expect("zero derivation")
    }

    pub fn crossed_module(&self) -> &Arc<CrossedModule> {
        &self.xm
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, b: usize) -> usize {
        self.values[b]
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn theta_hom(&self) -> Result<GroupHom> {
        GroupHom::new(self.xm.a().clone(), self.xm.a().clone(), self.theta.clone())
    }

    pub fn sigma_hom(&self) -> Result<GroupHom> {
        GroupHom::new(self.xm.b().clone(), self.xm.b().clone(), self.sigma.clone())
    }

    /// Regular means `θ_d` is an automorphism of `A`.
    pub fn is_regular(&self) -> bool {
        is_permutation(&self.theta)
    }

    /// The circle product `self ∘ other`: `d(b) = d1(σ_{d2}(b)) + d2(b)`
    /// with `d1 = self`, `d2 = other`. The alternative form
    /// `θ_{d1}(d2(b)) + d1(b)` is evaluated as well and must agree.
    pub fn compose(&self, other: &Derivation) -> Result<Derivation> {
        if self.xm != other.xm {
            return Err(Error::ComponentMismatch(
                "derivations of different crossed modules".into(),
            ));
        }
        let a = self.xm.a();
        let mut values = Vec::with_capacity(self.values.len());
        for b in self.xm.b().elements() {
            let primary = a.op(self.values[other.sigma[b]], other.values[b]);
            let alternative = a.op(self.theta[other.values[b]], self.values[b]);
            if primary != alternative {
                return Err(Error::FormulaMismatch { b });
            }
            values.push(primary);
        }
        let d = Derivation::new(self.xm.clone(), values)
            .map_err(|e| Error::defect(format!("circle product is not a derivation: {e}")))?;
        let theta: Vec<usize> = other.theta.iter().map(|&x| self.theta[x]).collect();
        let sigma: Vec<usize> = other.sigma.iter().map(|&y| self.sigma[y]).collect();
        if d.theta != theta || d.sigma != sigma {
            return Err(Error::defect("θ or σ is not multiplicative over ∘"));
        }
        Ok(d)
    }

    /// Cross-checks regularity three ways against the enumerated semigroup.
    pub fn certify_regularity(
        &self,
        semigroup: Option<&DerivationSemigroup>,
    ) -> Result<RegularityCertificate> {
        let semigroup = semigroup.ok_or(Error::RequiresEnumeration)?;
        if semigroup.xm != self.xm {
            return Err(Error::ComponentMismatch(
                "semigroup belongs to another crossed module".into(),
            ));
        }
        let index = semigroup
            .index_of(&self.values)
            .ok_or_else(|| Error::defect("derivation missing from the enumeration"))?;
        let cert = RegularityCertificate {
            theta_bijective: is_permutation(&self.theta),
            sigma_bijective: is_permutation(&self.sigma),
            unit: semigroup.inverse_of(index).is_some(),
        };
        if !cert.agrees() {
            return Err(Error::defect(format!(
                "regularity criteria disagree: {cert:?}"
            )));
        }
        Ok(cert)
    }

    /// `d̃ = d∘ω`, a derivation of `(A, X, φ)`.
    pub fn lift(&self, lifting: &Lifting) -> Result<Derivation> {
        if *self.xm != **lifting.base() {
            return Err(Error::BaseMismatch);
        }
        let omega = lifting.omega();
        let values = lifting
            .x()
            .elements()
            .map(|x| self.values[omega.apply(x)])
            .collect();
        let lifted = Derivation::new(lifting.upper().clone(), values)
            .map_err(|e| Error::defect(format!("lifted map is not a derivation: {e}")))?;
        if lifted.theta != self.theta {
            return Err(Error::defect("θ_d differs from θ of the lift"));
        }
        if lifting
            .x()
            .elements()
            .any(|x| self.sigma[omega.apply(x)] != omega.apply(lifted.sigma[x]))
        {
            return Err(Error::defect("σ_d∘ω differs from ω∘σ of the lift"));
        }
        if self.is_regular() && !lifted.is_regular() {
            return Err(Error::defect(
                "regular derivation lifted to a non-regular one",
            ));
        }
        Ok(lifted)
    }

    /// `d = d̃∘s` for a derivation `d̃` of `(A, X, φ)` and a section `s` of `ω`.
    pub fn descend(&self, lifting: &Lifting, section: &GroupHom) -> Result<Derivation> {
        if self.xm != *lifting.upper() {
            return Err(Error::BaseMismatch);
        }
        let base = lifting.base();
        if **section.source() != **base.b() || **section.target() != **lifting.x() {
            return Err(Error::ComponentMismatch("a section maps B to X".into()));
        }
        if let Some(b) = base
            .b()
            .elements()
            .find(|&b| lifting.omega().apply(section.apply(b)) != b)
        {
            return Err(Error::NotASection { b });
        }
        let values = base
            .b()
            .elements()
            .map(|b| self.values[section.apply(b)])
            .collect();
        Derivation::new(base.clone(), values)
            .map_err(|e| Error::defect(format!("descended map is not a derivation: {e}")))
    }

    /// `(θ_d, σ_d)` as an endomorphism of the crossed module, with the
    /// homotopy `d: (θ_d, σ_d) ≃ (1_A, 1_B)`.
    pub fn endomorphism(&self) -> Result<(XModMorphism, Homotopy)> {
        let m = XModMorphism::new(
            self.xm.clone(),
            self.xm.clone(),
            self.theta_hom()?,
            self.sigma_hom()?,
        )
        .map_err(|e| Error::defect(format!("(θ_d, σ_d) is not a morphism: {e}")))?;
        let m = Arc::new(m);
        let id = Arc::new(XModMorphism::identity(&self.xm));
        let h = Homotopy::new(self.values.clone(), m.clone(), id)
            .map_err(|e| Error::defect(format!("d is not a homotopy to the identity: {e}")))?;
        Ok(((*m).clone(), h))
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation({:?})", self.values)
    }
}

/// Three equivalent characterisations of a regular derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityCertificate {
    pub theta_bijective: bool,
    pub sigma_bijective: bool,
    pub unit: bool,
}

impl RegularityCertificate {
    pub fn agrees(&self) -> bool {
        self.theta_bijective == self.sigma_bijective && self.sigma_bijective == self.unit
    }

    pub fn is_regular(&self) -> bool {
        self.agrees() && self.unit
    }
}

/// `Der(B, A)` under the circle product, tabulated.
#[derive(Clone)]
pub struct DerivationSemigroup {
    xm: Arc<CrossedModule>,
    elements: Vec<Derivation>,
    product: Vec<Vec<usize>>,
    units: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
}

impl DerivationSemigroup {
    /// All derivations in lexicographic order of their value tables (the
    /// zero derivation first), with the product table and the units.
    pub fn enumerate(xm: &Arc<CrossedModule>, bound: usize) -> Result<Self> {
        let values = crossed_homomorphisms(xm.action(), bound)?;
        let elements = values
            .into_iter()
            .map(|v| Derivation::new(xm.clone(), v))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<Vec<usize>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, d)| (d.values.clone(), i))
            .collect();
        let mut product = Vec::with_capacity(elements.len());
        for d1 in &elements {
            let row = elements
                .iter()
                .map(|d2| {
                    let d = d1.compose(d2)?;
                    index
                        .get(&d.values)
                        .copied()
                        .ok_or_else(|| Error::defect("Der(B, A) is not closed under ∘"))
                })
                .collect::<Result<Vec<_>>>()?;
            product.push(row);
        }
        let n = elements.len();
        if (0..n).any(|i| product[0][i] != i || product[i][0] != i) {
            return Err(Error::defect("zero derivation is not a two-sided unit"));
        }
        let units = (0..n)
            .filter(|&i| (0..n).any(|j| product[i][j] == 0 && product[j][i] == 0))
            .collect();
        Ok(DerivationSemigroup {
            xm: xm.clone(),
            elements,
            product,
            units,
            index,
        })
    }

    pub fn crossed_module(&self) -> &Arc<CrossedModule> {
        &self.xm
    }

    pub fn elements(&self) -> &[Derivation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `product()[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub fn product(&self) -> &[Vec<usize>] {
        &self.product
    }

    /// Indices of the regular derivations (the Whitehead group).
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn index_of(&self, values: &[usize]) -> Option<usize> {
        self.index.get(values).copied()
    }

    pub fn inverse_of(&self, i: usize) -> Option<usize> {
        (0..self.len()).find(|&j| self.product[i][j] == 0 && self.product[j][i] == 0)
    }

    /// First triple violating associativity of the table, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let p = &self.product;
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if p[p[i][j]][k] != p[i][p[j][k]] {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for DerivationSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DerivationSemigroup({} elements, {} units)",
            self.len(),
            self.units.len()
        )
    }
}

/// The map `Der(B, A) -> Der(X, A)`, `d ↦ dω`, as indices between two
/// enumerated semigroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingMap {
    pub indices: Vec<usize>,
    pub homomorphism: bool,
    pub injective: bool,
    pub units_to_units: bool,
}

pub fn lifting_map(
    base: &DerivationSemigroup,
    upper: &DerivationSemigroup,
    lifting: &Lifting,
) -> Result<LiftingMap> {
    if base.xm != *lifting.base() || upper.xm != *lifting.upper() {
        return Err(Error::BaseMismatch);
    }
    let indices = base
        .elements
        .iter()
        .map(|d| {
            let lifted = d.lift(lifting)?;
            upper
                .index_of(&lifted.values)
                .ok_or_else(|| Error::defect("lifted derivation missing from Der(X, A)"))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = base.len();
    let homomorphism = (0..n).all(|i| {
        (0..n).all(|j| indices[base.product[i][j]] == upper.product[indices[i]][indices[j]])
    });
    let mut sorted = indices.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == n;
    let units_to_units = base
        .units
        .iter()
        .all(|&u| upper.units.contains(&indices[u]));
    Ok(LiftingMap {
        indices,
        homomorphism,
        injective,
        units_to_units,
    })
}

/// Every section `s: B -> X` of `ω: X -> B` (`ω∘s = 1_B`).
pub fn find_sections(omega: &GroupHom, bound: usize) -> Result<Vec<GroupHom>> {
    homomorphisms_where(omega.target(), omega.source(), bound, |b, x| {
        omega.apply(x) == b
    })
}

/// First pair `(b, b1)` with `d(b + b1) != d(b) + b·d(b1)`.
fn derivation_failure(action: &GroupAction, d: &[usize]) -> Option<(usize, usize)> {
    let (b, a) = (action.actor(), action.space());
    for x in b.elements() {
        for y in b.elements() {
            if d[b.op(x, y)] != a.op(d[x], action.act(x, d[y])) {
                return Some((x, y));
            }
        }
    }
    None
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
}

/// All maps `d: B -> A` with `d(b + b1) = d(b) + b·d(b1)` for the given
/// action, in lexicographic order.
///
/// Backtracks over `d(b)` for the smallest unassigned `b`, propagating the
/// identity to every product of assigned elements.
pub fn crossed_homomorphisms(action: &GroupAction, bound: usize) -> Result<Vec<Vec<usize>>> {
    let (b, a) = (action.actor(), action.space());
    b.check_bound("derivation domain", bound)?;
    a.check_bound("derivation codomain", bound)?;
    let limit = bound * bound;
    let mut partial = vec![None; b.order()];
    partial[0] = Some(0);
    let mut out = Vec::new();
    if propagate(action, &mut partial, vec![0]) {
        backtrack(action, partial, &mut out, limit)?;
    }
    out.sort();
    Ok(out)
}

fn backtrack(
    action: &GroupAction,
    partial: Vec<Option<usize>>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    let Some(next) = partial.iter().position(Option::is_none) else {
        out.push(partial.into_iter().map(Option::unwrap).collect());
        if out.len() > limit {
            return Err(Error::SizeBound {
                what: "derivation semigroup",
                size: out.len() as u128,
                bound: limit as u128,
            });
        }
        return Ok(());
    };
    for v in action.space().elements() {
        let mut trial = partial.clone();
        trial[next] = Some(v);
        if propagate(action, &mut trial, vec![next]) {
            backtrack(action, trial, out, limit)?;
        }
    }
    Ok(())
}

/// Closes a partial assignment under the derivation identity. Returns
/// `false` on a contradiction.
fn propagate(action: &GroupAction, partial: &mut [Option<usize>], mut work: Vec<usize>) -> bool {
    let (b, a) = (action.actor(), action.space());
    while let Some(x) = work.pop() {
        let dx = partial[x].expect("queued elements are assigned");
        let assigned: Vec<usize> = (0..partial.len())
            .filter(|&y| partial[y].is_some())
            .collect();
        for y in assigned {
            let dy = partial[y].expect("assigned");
            for (p, q, dp, dq) in [(x, y, dx, dy), (y, x, dy, dx)] {
                let s = b.op(p, q);
                let v = a.op(dp, action.act(p, dq));
                match partial[s] {
                    None => {
                        partial[s] = Some(v);
                        work.push(s);
                    }
                    Some(w) if w != v => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Exhaustive scan over all `|A|^|B|` maps, for cross-checking
/// [`crossed_homomorphisms`]. Refuses search spaces above
/// [`BRUTE_FORCE_BUDGET`].
pub fn crossed_homomorphisms_brute_force(action: &GroupAction) -> Result<Vec<Vec<usize>>> {
    let (nb, na) = (action.actor().order(), action.space().order());
    let space = (na as u128).checked_pow(nb as u32).unwrap_or(u128::MAX);
    if space > BRUTE_FORCE_BUDGET {
        return Err(Error::SizeBound {
            what: "brute-force derivation search",
            size: space,
            bound: BRUTE_FORCE_BUDGET,
        });
    }
    let mut out = Vec::new();
    let mut d = vec![0; nb];
    loop {
        if derivation_failure(action, &d).is_none() {
            out.push(d.clone());
        }
        // odometer, last position fastest, so output is lexicographic
        let mut i = nb;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            d[i] += 1;
            if d[i] < na {
                break;
            }
            d[i] = 0;
        }
    }
}
