//! Brute-force oracles that share no code with the library beyond reading
//! the order relation and element names.

#![allow(dead_code)]

use std::collections::BTreeSet;

use relcomp::{ElementId, ElementSet, Interval, Lattice};

/// `le[x][y]` for a lattice.
pub fn order_matrix(l: &Lattice) -> Vec<Vec<bool>> {
    l.elements()
        .map(|x| l.elements().map(|y| l.le(x, y)).collect())
        .collect()
}

fn lub(le: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = le.len();
    let ups: Vec<usize> = (0..n).filter(|&u| le[x][u] && le[y][u]).collect();
    ups.iter().copied().find(|&u| ups.iter().all(|&w| le[u][w]))
}

fn glb(le: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = le.len();
    let downs: Vec<usize> = (0..n).filter(|&u| le[u][x] && le[u][y]).collect();
    downs
        .iter()
        .copied()
        .find(|&u| downs.iter().all(|&w| le[w][u]))
}

pub fn is_lattice(le: &[Vec<bool>]) -> bool {
    let n = le.len();
    (0..n).all(|x| (0..n).all(|y| lub(le, x, y).is_some() && glb(le, x, y).is_some()))
}

/// Canonical form: the lexicographically least order matrix over all
/// relabellings of the points strictly between the bounds (bounds stay at
/// index 0 and n-1).
pub fn canonical(le: &[Vec<bool>]) -> Vec<bool> {
    let n = le.len();
    let inner: Vec<usize> = (1..n.saturating_sub(1)).collect();
    let mut best: Option<Vec<bool>> = None;
    let mut perm = inner.clone();
    permute(&mut perm, 0, &mut |p| {
        let mut map = vec![0; n];
        map[0] = 0;
        if n > 1 {
            map[n - 1] = n - 1;
        }
        for (k, &q) in p.iter().enumerate() {
            map[inner[k]] = q;
        }
        let mut m = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                m[map[x] * n + map[y]] = le[x][y];
            }
        }
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
    });
    best.unwrap()
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for j in k..v.len() {
        v.swap(k, j);
        permute(v, k + 1, f);
        v.swap(k, j);
    }
}

/// Lattices with `n` elements up to isomorphism, by scanning every strict
/// relation on the `n - 2` inner points (bottom 0 and top n-1 fixed), as
/// canonical forms.
pub fn brute_force_lattices(n: usize) -> BTreeSet<Vec<bool>> {
    let mut out = BTreeSet::new();
    if n == 1 {
        out.insert(vec![true]);
        return out;
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    for mask in 0u64..1 << pairs.len() {
        let mut lt = vec![vec![false; m]; m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                lt[i][j] = true;
            }
        }
        let strict_order = (0..m).all(|i| {
            (0..m).all(|j| {
                !(lt[i][j] && lt[j][i]) && (0..m).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k])
            })
        });
        if !strict_order {
            continue;
        }
        let mut le = vec![vec![false; n]; n];
        for (x, row) in le.iter_mut().enumerate() {
            row[n - 1] = true;
            row[x] = true;
        }
        le[0].fill(true);
        for i in 0..m {
            for j in 0..m {
                if lt[i][j] {
                    le[i + 1][j + 1] = true;
                }
            }
        }
        if is_lattice(&le) {
            out.insert(canonical(&le));
        }
    }
    out
}

/// Canonical form of a library lattice, with bottom moved to index 0 and
/// top to n-1.
pub fn canonical_of(l: &Lattice) -> Vec<bool> {
    let n = l.len();
    let mut order: Vec<ElementId> = vec![l.bottom()];
    order.extend(l.elements().filter(|&x| x != l.bottom() && x != l.top()));
    if n > 1 {
        order.push(l.top());
    }
    let le: Vec<Vec<bool>> = order
        .iter()
        .map(|&x| order.iter().map(|&y| l.le(x, y)).collect())
        .collect();
    canonical(&le)
}

/// `x^ab` by direct double loop over the order matrix.
pub fn rel_complements(l: &Lattice, a: usize, b: usize, x: usize) -> BTreeSet<usize> {
    let le = order_matrix(l);
    (0..l.len())
        .filter(|&y| le[a][y] && le[y][b])
        .filter(|&y| lub(&le, x, y) == Some(b) && glb(&le, x, y) == Some(a))
        .collect()
}

pub fn ids(s: &ElementSet) -> BTreeSet<usize> {
    s.iter().map(|x| x.index()).collect()
}

/// Every `A^ab` for `A ⊆ [a, b]`, by scanning all subsets.
pub fn closed_family(i: &Interval<'_>) -> BTreeSet<BTreeSet<usize>> {
    let l = i.lattice();
    let members: Vec<usize> = ids(i.members()).into_iter().collect();
    let (a, b) = (i.lower().index(), i.upper().index());
    let rel: Vec<BTreeSet<usize>> = members
        .iter()
        .map(|&x| rel_complements(l, a, b, x))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << members.len() {
        let mut s: BTreeSet<usize> = members.iter().copied().collect();
        for (k, r) in rel.iter().enumerate() {
            if mask & (1 << k) != 0 {
                s = s.intersection(r).copied().collect();
            }
        }
        out.insert(s);
    }
    out
}
