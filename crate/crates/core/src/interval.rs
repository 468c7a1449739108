use crate::error::{Error, Result};
use crate::lattice::{ElementId, Lattice};
use crate::set::ElementSet;

/// The interval `[a, b] = {x | a ≤ x ≤ b}` of a lattice.
#[derive(Clone, Debug)]
pub struct Interval<'l> {
    lattice: &'l Lattice,
    a: ElementId,
    b: ElementId,
    members: ElementSet,
}

impl<'l> Interval<'l> {
    pub fn new(lattice: &'l Lattice, a: ElementId, b: ElementId) -> Result<Self> {
        lattice.check_id(a)?;
        lattice.check_id(b)?;
        if !lattice.le(a, b) {
            return Err(Error::NotComparable {
                a: lattice.name_of(a).to_string(),
                b: lattice.name_of(b).to_string(),
            });
        }
        let members = lattice.up_set(a) & lattice.down_set(b);
        Ok(Interval {
            lattice,
            a,
            b,
            members,
        })
    }

    pub fn named(lattice: &'l Lattice, a: &str, b: &str) -> Result<Self> {
        Self::new(lattice, lattice.lookup(a)?, lattice.lookup(b)?)
    }

    /// `[0, 1]`
    pub fn whole(lattice: &'l Lattice) -> Self {
        Self::new(lattice, lattice.bottom(), lattice.top()).expect("bottom <= top")
    }

    /// Every interval `[a, b]` with `a ≤ b`, ordered by `(a, b)`.
    pub fn all(lattice: &'l Lattice) -> impl Iterator<Item = Interval<'l>> + 'l {
        lattice.elements().flat_map(move |a| {
            lattice
                .up_set(a)
                .iter()
                .collect::<Vec<_>>()
                .into_iter()
                .map(move |b| Interval::new(lattice, a, b).expect("a <= b"))
        })
    }

    pub fn lattice(&self) -> &'l Lattice {
        self.lattice
    }

    pub fn lower(&self) -> ElementId {
        self.a
    }

    pub fn upper(&self) -> ElementId {
        self.b
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.contains(x)
    }

    pub(crate) fn require(&self, x: ElementId) -> Result<ElementId> {
        self.lattice.check_id(x)?;
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::OutsideInterval(self.lattice.name_of(x).to_string()))
        }
    }

    pub(crate) fn require_subset(&self, s: &ElementSet) -> Result<()> {
        if !self.lattice.owns(s) {
            return Err(Error::UniverseMismatch);
        }
        match (s - &self.members).first() {
            None => Ok(()),
            Some(x) => Err(Error::OutsideInterval(self.lattice.name_of(x).to_string())),
        }
    }

    pub fn label(&self) -> String {
        format!(
            "[{}, {}]",
            self.lattice.name_of(self.a),
            self.lattice.name_of(self.b)
        )
    }

    /// Is `[a, b]` a modular lattice in its own right? Intervals are always
    /// sublattices, so this is the modular law over member triples.
    pub fn is_modular(&self) -> bool {
        let l = self.lattice;
        self.members.iter().all(|x| {
            (l.up_set(x) & &self.members).iter().all(|z| {
                self.members
                    .iter()
                    .all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z))
            })
        })
    }

    /// A pentagon `[a, d, e, f, b]` whose bounds are the interval's bounds,
    /// scanning `d`, `e`, `f` in ascending id order.
    pub fn find_n5_through(&self) -> Option<[ElementId; 5]> {
        let l = self.lattice;
        if self.len() < 5 {
            return None;
        }
        let inner: Vec<ElementId> = self
            .members
            .iter()
            .filter(|&x| x != self.a && x != self.b)
            .collect();
        for &d in &inner {
            for &e in &inner {
                if l.join(d, e) != self.b || l.meet(d, e) != self.a {
                    continue;
                }
                for &f in &inner {
                    let p = [self.a, d, e, f, self.b];
                    if f != e && l.is_pentagon(p) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fig1_interval_e_h() {
        let l = fixtures::fig1();
        let i = Interval::named(&l, "e", "h").unwrap();
        // Oracle: scan all ten elements for e ≤ x ≤ h.
        let (e, h) = (l.lookup("e").unwrap(), l.lookup("h").unwrap());
        let scan: Vec<ElementId> = l.elements().filter(|&x| l.le(e, x) && l.le(x, h)).collect();
        assert_eq!(i.members().iter().collect::<Vec<_>>(), scan);
        assert_eq!(l.sorted_names(i.members()), ["e", "f", "h"]);
    }

    #[test]
    fn whole_and_degenerate() {
        let l = fixtures::fig1();
        assert_eq!(Interval::whole(&l).members(), &l.full_set());
        let f = l.lookup("f").unwrap();
        let i = Interval::new(&l, f, f).unwrap();
        assert_eq!(i.members(), &l.set_of([f]));
        assert!(i.is_degenerate());
        assert!(matches!(
            Interval::named(&l, "h", "e"),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            Interval::named(&l, "b", "e"),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn pentagon_through_bounds() {
        let l = fixtures::fig1();
        let i = Interval::named(&l, "0", "d").unwrap();
        let p = i.find_n5_through().unwrap();
        let names: Vec<&str> = p.iter().map(|&x| l.name_of(x)).collect();
        assert_eq!(names, ["0", "b", "a", "c", "d"]);
        let m3 = Lattice::mn(3).unwrap();
        assert_eq!(Interval::whole(&m3).find_n5_through(), None);
        assert_eq!(
            Interval::named(&l, "e", "h").unwrap().find_n5_through(),
            None
        );
    }

    #[test]
    fn interval_count_matches_comparable_pairs() {
        let l = fixtures::fig2();
        let pairs = l
            .elements()
            .flat_map(|a| l.elements().map(move |b| (a, b)))
            .filter(|&(a, b)| l.le(a, b))
            .count();
        assert_eq!(Interval::all(&l).count(), pairs);
    }
}
