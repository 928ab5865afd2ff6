use std::sync::Arc;

use super::{FiniteGroup, GroupHom};
use crate::error::Result;

/// A generating set chosen greedily in index order: each generator is the
/// smallest element outside the subgroup generated so far.
pub fn generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    for x in g.elements() {
        if !inside[x] {
            gens.push(x);
            for y in g.closure(&gens) {
                inside[y] = true;
            }
        }
    }
    gens
}

/// All homomorphisms `source -> target`, sorted by image table.
pub fn homomorphisms(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    bound: usize,
) -> Result<Vec<GroupHom>> {
    homomorphisms_where(source, target, bound, |_, _| true)
}

/// All homomorphisms `h` with `allowed(x, h(x))` for every `x`, sorted by
/// image table. The filter is applied to generators during the search and
/// to every element of each candidate.
pub fn homomorphisms_where(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    bound: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Vec<GroupHom>> {
    source.check_bound("homomorphism source", bound)?;
    target.check_bound("homomorphism target", bound)?;
    let gens = generators(source);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let n = source.element_order(g);
            target
                .elements()
                .filter(|&y| n.is_multiple_of(target.element_order(y)) && allowed(g, y))
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut images = vec![0; gens.len()];
    search(
        source,
        target,
        &gens,
        &candidates,
        &mut images,
        0,
        &mut |map| {
            if map.iter().enumerate().all(|(x, &y)| allowed(x, y)) {
                found.push(GroupHom::new_unchecked(source.clone(), target.clone(), map));
            }
        },
    );
    found.sort_by(|a, b| a.map().cmp(b.map()));
    Ok(found)
}

fn search(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
    emit: &mut dyn FnMut(Vec<usize>),
) {
    if depth == gens.len() {
        if let Some(map) = extend(source, target, gens, images) {
            emit(map);
        }
        return;
    }
    for &y in &candidates[depth] {
        images[depth] = y;
        search(source, target, gens, candidates, images, depth + 1, emit);
    }
}

/// Extends generator images along the right Cayley graph. Consistency on
/// every edge `x -> x + g` makes the result a homomorphism.
fn extend(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = source.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.op(x, g);
            let v = target.op(map[x], img);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}
