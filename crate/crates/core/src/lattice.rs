//! Finite lattices stored as up-sets plus precomputed join and meet tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::MAX_ELEMENTS;

/// Position of an element in its lattice's element table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(u32);

impl ElementId {
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

static NEXT_UNIVERSE: AtomicU64 = AtomicU64::new(1);

fn fresh_universe() -> u64 {
    NEXT_UNIVERSE.fetch_add(1, Ordering::Relaxed)
}

/// A finite bounded lattice.
///
/// Immutable after construction. Two lattices compare equal when they have
/// the same name, the same element table and the same order; the internal
/// universe tag used to keep sets apart is ignored.
#[derive(Clone)]
pub struct Lattice {
    universe: u64,
    name: String,
    names: Vec<String>,
    index: HashMap<String, ElementId>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: ElementId,
    top: ElementId,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.names == other.names
            && self.len() == other.len()
            && self
                .elements()
                .all(|x| self.up[x.index()].iter().eq(other.up[x.index()].iter()))
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("name", &self.name)
            .field("elements", &self.names)
            .field("covers", &self.cover_names())
            .finish()
    }
}

impl Lattice {
    /// Builds a lattice from a Hasse diagram.
    ///
    /// `covers` may contain redundant (transitive) pairs; the order is their
    /// reflexive-transitive closure. When a pair lacks a least upper or
    /// greatest lower bound, the first such pair in ascending id order is
    /// reported.
    pub fn from_covers<S: AsRef<str>>(
        name: &str,
        names: &[S],
        covers: &[(S, S)],
    ) -> Result<Lattice> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::SizeOverflow(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, nm) in names.iter().enumerate() {
            if index
                .insert(nm.as_ref().to_string(), ElementId::new(i))
                .is_some()
            {
                return Err(Error::DuplicateElement(nm.as_ref().to_string()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo)?, lookup(hi)?);
            if lo == hi {
                return Err(Error::Cycle(names[lo.index()].as_ref().to_string()));
            }
            succ[lo.index()].push(hi.index());
            indeg[hi.index()] += 1;
        }

        // Kahn's algorithm; whatever is left over sits on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(x) = ready.pop() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(y);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::Cycle(names[stuck].as_ref().to_string()));
        }

        let universe = fresh_universe();
        let mut up = vec![ElementSet::empty_in(universe, n); n];
        for &x in order.iter().rev() {
            let mut s = ElementSet::empty_in(universe, n);
            s.insert(ElementId::new(x));
            for &y in &succ[x] {
                s.union_with(&up[y]);
            }
            up[x] = s;
        }
        let names = names.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_up_sets(universe, name.to_string(), names, index, up)
    }

    /// Synthesizes join/meet tables from a partial order given by up-sets.
    fn from_up_sets(
        universe: u64,
        name: String,
        names: Vec<String>,
        index: HashMap<String, ElementId>,
        up: Vec<ElementSet>,
    ) -> Result<Lattice> {
        let n = names.len();
        let mut down = vec![ElementSet::empty_in(universe, n); n];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.iter() {
                down[y.index()].insert(ElementId::new(x));
            }
        }
        let bottom = (0..n)
            .find(|&x| up[x].len() == n)
            .ok_or(Error::NoBounds("least"))?;
        let top = (0..n)
            .find(|&x| down[x].len() == n)
            .ok_or(Error::NoBounds("greatest"))?;

        let up_len: Vec<usize> = up.iter().map(ElementSet::len).collect();
        let down_len: Vec<usize> = down.iter().map(ElementSet::len).collect();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            join[x * n + x] = x as u32;
            meet[x * n + x] = x as u32;
            for y in x + 1..n {
                let uppers = &up[x] & &up[y];
                let lub = uppers
                    .iter()
                    .max_by_key(|u| up_len[u.index()])
                    .filter(|u| up[u.index()] == uppers)
                    .ok_or_else(|| Error::NotALattice {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        which: "least upper bound",
                    })?;
                let lowers = &down[x] & &down[y];
                let glb = lowers
                    .iter()
                    .max_by_key(|u| down_len[u.index()])
                    .filter(|u| down[u.index()] == lowers)
                    .ok_or_else(|| Error::NotALattice {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        which: "greatest lower bound",
                    })?;
                join[x * n + y] = lub.0;
                join[y * n + x] = lub.0;
                meet[x * n + y] = glb.0;
                meet[y * n + x] = glb.0;
            }
        }
        Ok(Lattice {
            universe,
            name,
            names,
            index,
            up,
            down,
            join,
            meet,
            bottom: ElementId::new(bottom),
            top: ElementId::new(top),
        })
    }

    /// Builds a lattice from an order relation given as up-sets over element
    /// indices. Used by constructors that already know the order.
    pub(crate) fn from_order(
        name: String,
        names: Vec<String>,
        ups: &[Vec<usize>],
    ) -> Result<Lattice> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let universe = fresh_universe();
        let mut index = HashMap::with_capacity(n);
        for (i, nm) in names.iter().enumerate() {
            if index.insert(nm.clone(), ElementId::new(i)).is_some() {
                return Err(Error::DuplicateElement(nm.clone()));
            }
        }
        let up = ups
            .iter()
            .map(|v| {
                let mut s = ElementSet::empty_in(universe, n);
                for &y in v {
                    s.insert(ElementId::new(y));
                }
                s
            })
            .collect();
        Self::from_up_sets(universe, name, names, index, up)
    }

    /// The `n`-atom Boolean algebra of subsets of `{a, b, ...}`.
    pub fn boolean(n: usize) -> Result<Lattice> {
        if n > 12 {
            return Err(Error::SizeOverflow(1usize << n.min(40)));
        }
        let size = 1usize << n;
        let names = (0..size)
            .map(|m| match m {
                0 => "0".to_string(),
                m if m == size - 1 => "1".to_string(),
                m => (0..n)
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect(),
            })
            .collect();
        let ups: Vec<Vec<usize>> = (0..size)
            .map(|m| (0..size).filter(|&o| o & m == m).collect())
            .collect();
        Self::from_order(format!("B{n}"), names, &ups)
    }

    /// `0 < a1, ..., an < 1`.
    pub fn mn(n: usize) -> Result<Lattice> {
        if n < 3 {
            return Err(Error::MnTooSmall(n));
        }
        if n + 2 > MAX_ELEMENTS {
            return Err(Error::SizeOverflow(n + 2));
        }
        let mut names = vec!["0".to_string()];
        names.extend((1..=n).map(|i| format!("a{i}")));
        names.push("1".to_string());
        let top = n + 1;
        let mut ups = vec![(0..=top).collect::<Vec<_>>()];
        ups.extend((1..=n).map(|i| vec![i, top]));
        ups.push(vec![top]);
        Self::from_order(format!("M{n}"), names, &ups)
    }

    /// N5 with `0 < a < c < d` and `0 < b < d`.
    pub fn pentagon() -> Lattice {
        Lattice::from_covers(
            "N5",
            &["0", "a", "b", "c", "d"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("c", "d"), ("b", "d")],
        )
        .expect("the pentagon is a lattice")
    }

    /// The `k`-element chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Result<Lattice> {
        if k > MAX_ELEMENTS {
            return Err(Error::SizeOverflow(k));
        }
        let names = (0..k).map(|i| i.to_string()).collect();
        let ups: Vec<Vec<usize>> = (0..k).map(|i| (i..k).collect()).collect();
        Self::from_order(format!("C{k}"), names, &ups)
    }

    /// Direct product with componentwise order and operations.
    ///
    /// Element names are the component names joined by `·`; the first
    /// factor varies slowest.
    pub fn direct_product(factors: &[&Lattice]) -> Result<Lattice> {
        let (first, rest) = factors.split_first().ok_or(Error::Empty)?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = acc.product_with(f)?;
        }
        if factors.len() > 1 {
            acc.name = factors
                .iter()
                .map(|l| l.name.as_str())
                .collect::<Vec<_>>()
                .join("x");
        }
        Ok(acc)
    }

    fn product_with(&self, other: &Lattice) -> Result<Lattice> {
        let (n1, n2) = (self.len(), other.len());
        let n = n1
            .checked_mul(n2)
            .filter(|&n| n <= MAX_ELEMENTS)
            .ok_or(Error::SizeOverflow(n1.saturating_mul(n2)))?;
        let universe = fresh_universe();
        let pair = |i: usize| (i / n2, i % n2);
        let mut names = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for i in 0..n {
            let (x, y) = pair(i);
            let nm = format!("{}·{}", self.names[x], other.names[y]);
            if index.insert(nm.clone(), ElementId::new(i)).is_some() {
                return Err(Error::DuplicateElement(nm));
            }
            names.push(nm);
        }
        let mut up = Vec::with_capacity(n);
        let mut down = Vec::with_capacity(n);
        for i in 0..n {
            let (x, y) = pair(i);
            let mut u = ElementSet::empty_in(universe, n);
            let mut d = ElementSet::empty_in(universe, n);
            for j in 0..n {
                let (p, q) = pair(j);
                if self.le(ElementId::new(x), ElementId::new(p))
                    && other.le(ElementId::new(y), ElementId::new(q))
                {
                    u.insert(ElementId::new(j));
                }
                if self.le(ElementId::new(p), ElementId::new(x))
                    && other.le(ElementId::new(q), ElementId::new(y))
                {
                    d.insert(ElementId::new(j));
                }
            }
            up.push(u);
            down.push(d);
        }
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for i in 0..n {
            let (x1, y1) = pair(i);
            for j in 0..n {
                let (x2, y2) = pair(j);
                let jx = self.join[x1 * n1 + x2] as usize;
                let jy = other.join[y1 * n2 + y2] as usize;
                let mx = self.meet[x1 * n1 + x2] as usize;
                let my = other.meet[y1 * n2 + y2] as usize;
                join[i * n + j] = (jx * n2 + jy) as u32;
                meet[i * n + j] = (mx * n2 + my) as u32;
            }
        }
        Ok(Lattice {
            universe,
            name: format!("{}x{}", self.name, other.name),
            names,
            index,
            up,
            down,
            join,
            meet,
            bottom: ElementId::new(self.bottom.index() * n2 + other.bottom.index()),
            top: ElementId::new(self.top.index() * n2 + other.top.index()),
        })
    }

    /// Returns a copy carrying a different name.
    pub fn renamed(mut self, name: &str) -> Lattice {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.len()).map(ElementId::new)
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.index.get(name).copied()
    }

    /// Like [`element`](Self::element) but with an error naming the missing element.
    pub fn lookup(&self, name: &str) -> Result<ElementId> {
        self.element(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn name_of(&self, x: ElementId) -> &str {
        &self.names[x.index()]
    }

    pub fn check_id(&self, x: ElementId) -> Result<ElementId> {
        if x.index() < self.len() {
            Ok(x)
        } else {
            Err(Error::ElementOutOfRange(x.index()))
        }
    }

    #[inline]
    pub fn le(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x.index()].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.le(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.join[x.index() * self.len() + y.index()])
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.meet[x.index() * self.len() + y.index()])
    }

    /// `{y | x <= y}`
    pub fn up_set(&self, x: ElementId) -> &ElementSet {
        &self.up[x.index()]
    }

    /// `{y | y <= x}`
    pub fn down_set(&self, x: ElementId) -> &ElementSet {
        &self.down[x.index()]
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty_in(self.universe, self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full_in(self.universe, self.len())
    }

    pub fn set_of<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementSet {
        let mut s = self.empty_set();
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Builds a set from element names.
    pub fn set_named<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for nm in names {
            s.insert(self.lookup(nm.as_ref())?);
        }
        Ok(s)
    }

    pub fn owns(&self, s: &ElementSet) -> bool {
        s.universe() == self.universe && s.width() == self.len()
    }

    fn check_owned(&self, s: &ElementSet) -> Result<()> {
        if self.owns(s) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Element names of `s`, sorted by name.
    pub fn sorted_names(&self, s: &ElementSet) -> Vec<&str> {
        let mut v: Vec<&str> = s.iter().map(|x| self.name_of(x)).collect();
        v.sort_unstable();
        v
    }

    /// Renders a set as `{x, y, z}` with names sorted lexicographically.
    pub fn format_set(&self, s: &ElementSet) -> String {
        format!("{{{}}}", self.sorted_names(s).join(", "))
    }

    /// The Hasse diagram: pairs `(x, y)` with `x` covered by `y`, ascending.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            let mut strict = self.up[x.index()].clone();
            strict.remove(x);
            for y in strict.iter() {
                let mut between = &strict & &self.down[y.index()];
                between.remove(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn cover_names(&self) -> Vec<(&str, &str)> {
        self.covers()
            .into_iter()
            .map(|(x, y)| (self.name_of(x), self.name_of(y)))
            .collect()
    }

    /// `A ∨ B = {x ∨ y | x ∈ A, y ∈ B}`
    pub fn join_set(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.check_owned(a)?;
        self.check_owned(b)?;
        Ok(self.image(a, b, Lattice::join))
    }

    /// `A ∧ B = {x ∧ y | x ∈ A, y ∈ B}`
    pub fn meet_set(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.check_owned(a)?;
        self.check_owned(b)?;
        Ok(self.image(a, b, Lattice::meet))
    }

    pub(crate) fn image(
        &self,
        a: &ElementSet,
        b: &ElementSet,
        op: fn(&Lattice, ElementId, ElementId) -> ElementId,
    ) -> ElementSet {
        let mut out = self.empty_set();
        for x in a {
            for y in b {
                out.insert(op(self, x, y));
            }
        }
        out
    }

    pub fn is_antichain(&self, s: &ElementSet) -> bool {
        debug_assert!(self.owns(s));
        let v: Vec<ElementId> = s.iter().collect();
        v.iter()
            .enumerate()
            .all(|(i, &x)| v[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    pub fn is_convex(&self, s: &ElementSet) -> bool {
        debug_assert!(self.owns(s));
        s.iter().all(|d| {
            s.iter()
                .all(|e| !self.le(d, e) || (self.up_set(d) & self.down_set(e)).is_subset(s))
        })
    }

    /// `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z` for all triples.
    pub fn is_modular(&self) -> bool {
        self.elements().all(|x| {
            self.up_set(x).iter().all(|z| {
                self.elements()
                    .all(|y| self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), z))
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.elements().all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    pub fn is_complemented(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .any(|y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom)
        })
    }

    pub fn is_rel_complemented(&self) -> bool {
        self.elements().all(|a| {
            self.up_set(a).iter().all(|b| {
                let members = self.up_set(a) & self.down_set(b);
                members.iter().all(|x| {
                    members
                        .iter()
                        .any(|y| self.join(x, y) == b && self.meet(x, y) == a)
                })
            })
        })
    }

    /// Do these five elements form a pentagon `lo < e < f < hi`, `lo < d < hi`
    /// with `d` incomparable to `e` and `f`, closed under join and meet?
    pub fn is_pentagon(&self, [lo, d, e, f, hi]: [ElementId; 5]) -> bool {
        self.lt(e, f)
            && !self.comparable(d, e)
            && !self.comparable(d, f)
            && self.join(d, e) == hi
            && self.join(d, f) == hi
            && self.meet(d, e) == lo
            && self.meet(d, f) == lo
    }

    /// Finds a sublattice isomorphic to N₅, returned as `[lo, d, e, f, hi]`
    /// with `e < f`. Scans the side element `d`, then `e`, then `f` in
    /// ascending id order.
    pub fn find_n5(&self) -> Option<[ElementId; 5]> {
        for d in self.elements() {
            for e in self.elements() {
                if self.comparable(d, e) {
                    continue;
                }
                let (hi, lo) = (self.join(d, e), self.meet(d, e));
                for f in self.up_set(e).iter() {
                    let p = [lo, d, e, f, hi];
                    if f != e && self.is_pentagon(p) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }
}
