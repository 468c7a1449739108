//! Isomorphism testing for finite lattices.
//!
//! Elements are first coloured by iterated refinement of
//! (down-set size, up-set size, colours below, colours above). Lattices whose
//! colour multisets differ are not isomorphic; otherwise a backtracking
//! search over colour-respecting bijections decides.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::lattice::{ElementId, Lattice};

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Stable per-element colours.
pub fn colours(l: &Lattice) -> Vec<u64> {
    let n = l.len();
    let mut col: Vec<u64> = l
        .elements()
        .map(|x| hash_of(&(l.down_set(x).len(), l.up_set(x).len())))
        .collect();
    let mut classes = distinct(&col);
    for _ in 0..n {
        let next: Vec<u64> = l
            .elements()
            .map(|x| {
                let mut below: Vec<u64> = l
                    .down_set(x)
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| col[y.index()])
                    .collect();
                let mut above: Vec<u64> = l
                    .up_set(x)
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| col[y.index()])
                    .collect();
                below.sort_unstable();
                above.sort_unstable();
                hash_of(&(col[x.index()], below, above))
            })
            .collect();
        col = next;
        let c = distinct(&col);
        if c == classes {
            break;
        }
        classes = c;
    }
    col
}

fn distinct(col: &[u64]) -> usize {
    let mut v = col.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Isomorphism-invariant fingerprint: the sorted colour multiset.
pub fn invariant(l: &Lattice) -> Vec<u64> {
    let mut c = colours(l);
    c.sort_unstable();
    c
}

/// An order isomorphism `l1 → l2`, if one exists, as a table indexed by
/// `l1`'s element ids.
pub fn find_isomorphism(l1: &Lattice, l2: &Lattice) -> Option<Vec<ElementId>> {
    if l1.len() != l2.len() {
        return None;
    }
    let (c1, c2) = (colours(l1), colours(l2));
    let mut s1 = c1.clone();
    let mut s2 = c2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    // Assign elements of l1 in order of increasing down-set size so that
    // most order constraints are checked early.
    let mut order: Vec<ElementId> = l1.elements().collect();
    order.sort_by_key(|&x| (l1.down_set(x).len(), x));
    let mut map: Vec<Option<ElementId>> = vec![None; l1.len()];
    let mut used = vec![false; l2.len()];
    if extend(l1, l2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    l1: &Lattice,
    l2: &Lattice,
    c1: &[u64],
    c2: &[u64],
    order: &[ElementId],
    depth: usize,
    map: &mut [Option<ElementId>],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in l2.elements() {
        if used[y.index()] || c1[x.index()] != c2[y.index()] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = map[p.index()].unwrap();
            l1.le(p, x) == l2.le(q, y) && l1.le(x, p) == l2.le(y, q)
        });
        if !consistent {
            continue;
        }
        map[x.index()] = Some(y);
        used[y.index()] = true;
        if extend(l1, l2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        map[x.index()] = None;
        used[y.index()] = false;
    }
    false
}

pub fn are_isomorphic(l1: &Lattice, l2: &Lattice) -> bool {
    find_isomorphism(l1, l2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig4_is_two_times_m3() {
        let p = Lattice::direct_product(&[&Lattice::chain(2).unwrap(), &Lattice::mn(3).unwrap()])
            .unwrap();
        let f4 = fixtures::fig4();
        let map = find_isomorphism(&f4, &p).unwrap();
        for x in f4.elements() {
            for y in f4.elements() {
                assert_eq!(
                    map[f4.join(x, y).index()],
                    p.join(map[x.index()], map[y.index()])
                );
            }
        }
    }

    #[test]
    fn non_isomorphic_pairs() {
        let m3 = Lattice::mn(3).unwrap();
        let n5 = Lattice::from_covers(
            "N5",
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        )
        .unwrap();
        assert!(!are_isomorphic(&m3, &n5));
        assert!(!are_isomorphic(&fixtures::fig4(), &fixtures::fig1()));
        assert!(are_isomorphic(&fixtures::fig1(), &fixtures::fig1()));
    }

    #[test]
    fn two_squared_is_boolean_square() {
        let c2 = Lattice::chain(2).unwrap();
        let sq = Lattice::direct_product(&[&c2, &c2]).unwrap();
        assert!(are_isomorphic(&sq, &Lattice::boolean(2).unwrap()));
    }
}
