//! Built-in small groups.

use std::sync::Arc;

use super::{FiniteGroup, Subgroup};

/// Keywords accepted by [`by_keyword`], with a short description.
pub const KEYWORDS: &[(&str, &str)] = &[
    ("trivial", "the trivial group"),
    ("Z<n>", "cyclic group of order n, e.g. Z4"),
    ("Z2xZ2", "Klein four-group, elements 00 01 10 11"),
    (
        "S3",
        "symmetric group on 3 points, permutations in lexicographic order",
    ),
    ("D4", "dihedral group of order 8, symmetries of a square"),
    ("Q8", "quaternion group, elements 1 -1 i -i j -j k -k"),
];

pub fn by_keyword(word: &str) -> Option<FiniteGroup> {
    match word {
        "trivial" | "1" => Some(FiniteGroup::trivial()),
        "Z2xZ2" | "V4" | "Klein" => Some(klein()),
        "S3" => Some(symmetric3()),
        "D4" => Some(dihedral4()),
        "Q8" => Some(quaternion8()),
        _ => {
            let n: usize = word.strip_prefix('Z')?.parse().ok()?;
            (n >= 1).then(|| cyclic(n))
        }
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    FiniteGroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
}

pub fn klein() -> FiniteGroup {
    FiniteGroup::from_fn(4, |a, b| a ^ b)
        .and_then(|g| g.with_names(["00", "01", "10", "11"].map(String::from).to_vec()))
        .expect("Klein four-group")
}

pub fn symmetric3() -> FiniteGroup {
    permutation_group(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Symmetries of a square with vertices 0..4 in cyclic order.
pub fn dihedral4() -> FiniteGroup {
    permutation_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

pub fn quaternion8() -> FiniteGroup {
    // units 1, i, j, k as 0..4; product of units as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    // element index = 2 * unit + negated
    let g = FiniteGroup::from_fn(8, |a, b| {
        let (ua, sa) = (a / 2, a % 2 == 1);
        let (ub, sb) = (b / 2, b % 2 == 1);
        let (s, u) = UNIT[ua][ub];
        2 * u + usize::from(s ^ sa ^ sb)
    })
    .expect("quaternion group");
    g.with_names(
        ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .map(String::from)
            .to_vec(),
    )
    .expect("eight names")
}

/// The group generated by the given permutations of `0..degree`, elements
/// sorted lexicographically, composed right to left: `(s + t)(i) = s(t(i))`.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    let identity: Vec<usize> = (0..degree).collect();
    let compose = |s: &[usize], t: &[usize]| -> Vec<usize> { t.iter().map(|&i| s[i]).collect() };
    let mut elems = vec![identity];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = compose(&elems[i], g);
            if !elems.contains(&p) {
                elems.push(p);
            }
        }
        i += 1;
    }
    elems.sort();
    let index = |p: &[usize]| elems.iter().position(|q| q == p).expect("closed");
    let names = elems.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_fn(elems.len(), |a, b| index(&compose(&elems[a], &elems[b])))
        .and_then(|g| g.with_names(names))
        .expect("permutation group")
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// The even permutations inside [`symmetric3`].
pub fn alternating3_in(s3: &Arc<FiniteGroup>) -> Subgroup {
    let elems = s3
        .elements()
        .filter(|&x| s3.element_order(x) != 2)
        .collect();
    Subgroup::new(s3.clone(), elems).expect("A3 is a subgroup")
}
