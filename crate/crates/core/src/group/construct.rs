use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::{homomorphisms_where, FiniteGroup, GroupAction, GroupHom, Subgroup};
use crate::error::{Error, Result};

/// `G/N` with its canonical projection. Cosets are numbered in increasing
/// order of their minimal element, which is also the stored representative.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: GroupHom,
    pub representatives: Vec<usize>,
}

pub fn quotient(normal: &Subgroup) -> Result<Quotient> {
    normal.require_normal()?;
    let g = normal.parent();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            let idx = reps.len();
            reps.push(x);
            for &n in normal.elements() {
                coset_of[g.op(x, n)] = idx;
            }
        }
    }
    let mut q = FiniteGroup::from_fn(reps.len(), |i, j| coset_of[g.op(reps[i], reps[j])])?;
    q = q.with_names(reps.iter().map(|&r| format!("{}+N", g.name(r))).collect())?;
    let q = Arc::new(q);
    let projection = GroupHom::new_unchecked(g.clone(), q.clone(), coset_of);
    Ok(Quotient {
        group: q,
        projection,
        representatives: reps,
    })
}

/// The fibre product `{(x, y) : p(x) = q(y)}` with its two projections.
/// Pairs are ordered lexicographically.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub group: Arc<FiniteGroup>,
    pub pairs: Vec<(usize, usize)>,
    pub left: GroupHom,
    pub right: GroupHom,
    index: HashMap<(usize, usize), usize>,
}

impl Pullback {
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }
}

pub fn pullback(p: &GroupHom, q: &GroupHom) -> Result<Pullback> {
    if **p.target() != **q.target() {
        return Err(Error::CodomainMismatch);
    }
    let (xg, yg) = (p.source(), q.source());
    let pairs: Vec<(usize, usize)> = xg
        .elements()
        .flat_map(|x| yg.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| p.apply(x) == q.apply(y))
        .collect();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &pr)| (pr, i)).collect();
    let group = FiniteGroup::from_fn(pairs.len(), |i, j| {
        let (x1, y1) = pairs[i];
        let (x2, y2) = pairs[j];
        index[&(xg.op(x1, x2), yg.op(y1, y2))]
    })?
    .with_names(
        pairs
            .iter()
            .map(|&(x, y)| format!("({},{})", xg.name(x), yg.name(y)))
            .collect(),
    )?;
    let group = Arc::new(group);
    let left = GroupHom::new_unchecked(
        group.clone(),
        xg.clone(),
        pairs.iter().map(|&(x, _)| x).collect(),
    );
    let right = GroupHom::new_unchecked(
        group.clone(),
        yg.clone(),
        pairs.iter().map(|&(_, y)| y).collect(),
    );
    Ok(Pullback {
        group,
        pairs,
        left,
        right,
        index,
    })
}

/// `G × H` as the pullback of the two zero maps to the trivial group.
pub fn direct_product(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> Pullback {
    let one = Arc::new(FiniteGroup::trivial());
    pullback(&GroupHom::zero(g, &one), &GroupHom::zero(h, &one)).expect("common codomain")
}

/// Every subgroup, sorted by order and then by element list.
pub fn subgroups(g: &Arc<FiniteGroup>, bound: usize) -> Result<Vec<Subgroup>> {
    g.check_bound("subgroup enumeration", bound)?;
    let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut work = vec![vec![0]];
    found.insert((1, vec![0]));
    // Every subgroup arises by adjoining one element at a time.
    while let Some(h) = work.pop() {
        let mut inside = vec![false; g.order()];
        for &x in &h {
            inside[x] = true;
        }
        for x in g.elements().filter(|&x| !inside[x]) {
            let mut gens = h.clone();
            gens.push(x);
            let k = g.closure(&gens);
            if found.insert((k.len(), k.clone())) {
                work.push(k);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(_, elems)| Subgroup::from_sorted_unchecked(g.clone(), elems))
        .collect())
}

/// `Aut(G)` as a group of permutation tables, composed right to left, with
/// its natural action on `G`. The identity automorphism is element 0.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub group: Arc<FiniteGroup>,
    pub perms: Vec<Vec<usize>>,
    pub action: GroupAction,
    index: HashMap<Vec<usize>, usize>,
}

impl Automorphisms {
    pub fn index_of(&self, perm: &[usize]) -> Option<usize> {
        self.index.get(perm).copied()
    }
}

/// The order of `G` must be within `bound`, and `|Aut(G)|` within `bound²`.
pub fn automorphism_group(g: &Arc<FiniteGroup>, bound: usize) -> Result<Automorphisms> {
    g.check_bound("automorphism enumeration", bound)?;
    let perms: Vec<Vec<usize>> = homomorphisms_where(g, g, bound, |x, y| x == 0 || y != 0)?
        .into_iter()
        .filter(|h| h.is_injective())
        .map(|h| h.map().to_vec())
        .collect();
    if perms.len() > bound * bound {
        return Err(Error::SizeBound {
            what: "automorphism group",
            size: perms.len() as u128,
            bound: (bound * bound) as u128,
        });
    }
    let index: HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let group = Arc::new(FiniteGroup::from_fn(perms.len(), |s, t| {
        let comp: Vec<usize> = perms[t].iter().map(|&x| perms[s][x]).collect();
        index[&comp]
    })?);
    let action = GroupAction::from_fn(group.clone(), g.clone(), |s, a| perms[s][a])?;
    Ok(Automorphisms {
        group,
        perms,
        action,
        index,
    })
}
