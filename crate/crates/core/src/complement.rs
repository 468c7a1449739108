//! Complements, relative complements and the sets they induce.
//!
//! Notation used in the docs below: `x⁺` is the set of complements of `x`
//! in the whole lattice and `x^ab` the set of relative complements of `x`
//! in the interval `[a, b]`.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lattice::{ElementId, Lattice};
use crate::set::ElementSet;

/// `x⁺ = {y | x ∨ y = 1 and x ∧ y = 0}`
pub fn complements(l: &Lattice, x: ElementId) -> ElementSet {
    l.set_of(
        l.elements()
            .filter(|&y| l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()),
    )
}

/// `A⁺`, the common complements of every member of `A`. `∅⁺` is the whole
/// lattice.
pub fn complements_of_set(l: &Lattice, a: &ElementSet) -> Result<ElementSet> {
    if !l.owns(a) {
        return Err(Error::UniverseMismatch);
    }
    let mut out = l.full_set();
    for x in a {
        out.intersect_with(&complements(l, x));
    }
    Ok(out)
}

fn rel_complements_unchecked(i: &Interval<'_>, x: ElementId) -> ElementSet {
    let l = i.lattice();
    let (a, b) = (i.lower(), i.upper());
    l.set_of(
        i.members()
            .iter()
            .filter(|&y| l.join(x, y) == b && l.meet(x, y) == a),
    )
}

/// `x^ab = {y ∈ [a, b] | x ∨ y = b and x ∧ y = a}`
pub fn rel_complements(i: &Interval<'_>, x: ElementId) -> Result<ElementSet> {
    i.require(x)?;
    Ok(rel_complements_unchecked(i, x))
}

/// `A^ab`, the common relative complements of every member of `A`. `∅^ab`
/// is the whole interval.
pub fn rel_complements_of_set(i: &Interval<'_>, a: &ElementSet) -> Result<ElementSet> {
    i.require_subset(a)?;
    let mut out = i.members().clone();
    for x in a {
        out.intersect_with(&rel_complements_unchecked(i, x));
    }
    Ok(out)
}

/// `x̄_ab = (x⁺ ∨ a) ∧ b`, defined for every `x` of the lattice.
pub fn bar(i: &Interval<'_>, x: ElementId) -> Result<ElementSet> {
    let l = i.lattice();
    l.check_id(x)?;
    let comps = complements(l, x);
    Ok(l.set_of(
        comps
            .iter()
            .map(|u| l.meet(l.join(u, i.lower()), i.upper())),
    ))
}

/// `x̂_ab = (x⁺ ∧ b) ∨ a`, defined for every `x` of the lattice.
pub fn hat(i: &Interval<'_>, x: ElementId) -> Result<ElementSet> {
    let l = i.lattice();
    l.check_id(x)?;
    let comps = complements(l, x);
    Ok(l.set_of(
        comps
            .iter()
            .map(|u| l.join(l.meet(u, i.upper()), i.lower())),
    ))
}

/// Relative complements of every member of one interval, computed once.
///
/// The closure and verification code asks for `x^ab` over and over; this
/// keeps those lookups to a clone.
#[derive(Clone, Debug)]
pub struct RelComplementTable<'l> {
    interval: Interval<'l>,
    table: Vec<Option<ElementSet>>,
}

impl<'l> RelComplementTable<'l> {
    pub fn new(interval: &Interval<'l>) -> Self {
        let l = interval.lattice();
        let mut table = vec![None; l.len()];
        for x in interval.members() {
            table[x.index()] = Some(rel_complements_unchecked(interval, x));
        }
        RelComplementTable {
            interval: interval.clone(),
            table,
        }
    }

    pub fn interval(&self) -> &Interval<'l> {
        &self.interval
    }

    /// `x^ab`; `x` must be a member of the interval.
    pub fn of(&self, x: ElementId) -> &ElementSet {
        self.table[x.index()]
            .as_ref()
            .expect("element outside the interval")
    }

    /// `A^ab` for `A` inside the interval.
    pub fn of_set(&self, a: &ElementSet) -> ElementSet {
        let mut out = self.interval.members().clone();
        for x in a {
            out.intersect_with(self.of(x));
        }
        out
    }

    /// `(A^ab)^ab`
    pub fn closure(&self, a: &ElementSet) -> ElementSet {
        self.of_set(&self.of_set(a))
    }

    /// `({x}^ab)^ab`
    pub fn closure_of(&self, x: ElementId) -> ElementSet {
        self.of_set(self.of(x))
    }

    /// Every member has at least one relative complement.
    pub fn is_complemented(&self) -> bool {
        self.interval
            .members()
            .iter()
            .all(|x| !self.of(x).is_empty())
    }

    /// The first member with no relative complement.
    pub fn uncomplemented(&self) -> Option<ElementId> {
        self.interval
            .members()
            .iter()
            .find(|&x| self.of(x).is_empty())
    }
}

/// Outcome of testing whether an ambient element `u` induces a relative
/// complement of `z` in `[x, y]`.
///
/// Condition 1 is `(u ∨ x) ∧ y = (u ∧ y) ∨ x`; condition 2 is
/// `(u ∨ x) ∧ z = x and (u ∧ y) ∨ z = y`. When condition 1 holds,
/// `v = (u ∨ x) ∧ y` lies in `z^xy` exactly when condition 2 holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedReport {
    pub u: ElementId,
    pub z: ElementId,
    pub lower: ElementId,
    pub upper: ElementId,
    pub cond1_holds: bool,
    pub cond2_holds: bool,
    pub v: Option<ElementId>,
    pub v_in_relcomp: Option<bool>,
}

pub fn check_induced(i: &Interval<'_>, z: ElementId, u: ElementId) -> Result<InducedReport> {
    let l = i.lattice();
    i.require(z)?;
    l.check_id(u)?;
    let (x, y) = (i.lower(), i.upper());
    let ux_y = l.meet(l.join(u, x), y);
    let uy_x = l.join(l.meet(u, y), x);
    let cond1 = ux_y == uy_x;
    let cond2 = l.meet(l.join(u, x), z) == x && l.join(l.meet(u, y), z) == y;
    let (v, v_in) = if cond1 {
        let in_rel = l.join(z, ux_y) == y && l.meet(z, ux_y) == x;
        debug_assert_eq!(
            in_rel,
            cond2,
            "induced element membership disagrees with condition 2 (u={}, z={}, {})",
            l.name_of(u),
            l.name_of(z),
            i.label()
        );
        (Some(ux_y), Some(in_rel))
    } else {
        (None, None)
    };
    Ok(InducedReport {
        u,
        z,
        lower: x,
        upper: y,
        cond1_holds: cond1,
        cond2_holds: cond2,
        v,
        v_in_relcomp: v_in,
    })
}

impl InducedReport {
    pub fn render(&self, l: &Lattice) -> String {
        let opt = |v: Option<ElementId>| v.map_or("-".to_string(), |e| l.name_of(e).to_string());
        let ob = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
        format!(
            "interval: [{}, {}]\nz: {}\nu: {}\ncond1: {}\ncond2: {}\nv: {}\nv_in_relcomp: {}\n",
            l.name_of(self.lower),
            l.name_of(self.upper),
            l.name_of(self.z),
            l.name_of(self.u),
            self.cond1_holds,
            self.cond2_holds,
            opt(self.v),
            ob(self.v_in_relcomp)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(l: &Lattice, s: &ElementSet) -> Vec<String> {
        l.sorted_names(s).into_iter().map(String::from).collect()
    }

    fn id(l: &Lattice, s: &str) -> ElementId {
        l.lookup(s).unwrap()
    }

    #[test]
    fn fig1_complements() {
        let l = fixtures::fig1();
        assert_eq!(names(&l, &complements(&l, id(&l, "g"))), ["a", "c"]);
        assert_eq!(names(&l, &complements(&l, l.bottom())), ["1"]);
        // Oracle: intersect a⁺ and c⁺ by scanning all ten elements.
        let (a, c) = (id(&l, "a"), id(&l, "c"));
        let both: Vec<&str> = l
            .elements()
            .filter(|&y| {
                [a, c]
                    .iter()
                    .all(|&x| l.join(x, y) == l.top() && l.meet(x, y) == l.bottom())
            })
            .map(|y| l.name_of(y))
            .collect();
        let set = l.set_named(&["a", "c"]).unwrap();
        assert_eq!(l.sorted_names(&complements_of_set(&l, &set).unwrap()), both);
        assert_eq!(both, ["g"]);
    }

    #[test]
    fn set_complement_edge_cases() {
        let l = fixtures::fig1();
        assert_eq!(
            complements_of_set(&l, &l.empty_set()).unwrap(),
            l.full_set()
        );
        let bounds = l.set_of([l.bottom(), l.top()]);
        assert!(complements_of_set(&l, &bounds).unwrap().is_empty());
    }

    #[test]
    fn fig5_complements() {
        let l = fixtures::fig5();
        assert_eq!(
            names(&l, &complements(&l, id(&l, "i"))),
            ["a", "b", "c", "d"]
        );
        assert_eq!(names(&l, &complements(&l, id(&l, "h"))), ["a", "b"]);
    }

    #[test]
    fn relative_complements() {
        let l = fixtures::fig1();
        let ah = Interval::named(&l, "a", "h").unwrap();
        assert_eq!(
            names(&l, &rel_complements(&ah, id(&l, "f")).unwrap()),
            ["c"]
        );
        assert_eq!(
            rel_complements(&ah, id(&l, "b")).unwrap_err(),
            Error::OutsideInterval("b".into())
        );
        assert_eq!(
            rel_complements(&ah, ah.lower()).unwrap(),
            l.set_of([ah.upper()])
        );
        let l5 = fixtures::fig5();
        let e1 = Interval::named(&l5, "e", "1").unwrap();
        assert_eq!(
            names(&l5, &rel_complements(&e1, id(&l5, "h")).unwrap()),
            ["f", "g", "i"]
        );
        assert_eq!(
            rel_complements_of_set(&e1, &l5.empty_set()).unwrap(),
            *e1.members()
        );
        assert!(rel_complements_of_set(&e1, &l5.set_named(&["a"]).unwrap()).is_err());
    }

    #[test]
    fn bar_and_hat() {
        let l = fixtures::fig5();
        let e1 = Interval::named(&l, "e", "1").unwrap();
        let (h, i) = (id(&l, "h"), id(&l, "i"));
        assert_eq!(names(&l, &bar(&e1, h).unwrap()), ["f", "g"]);
        assert_eq!(names(&l, &hat(&e1, h).unwrap()), ["f", "g"]);
        assert_eq!(names(&l, &bar(&e1, i).unwrap()), ["1", "f", "g", "h"]);
        assert_eq!(names(&l, &hat(&e1, i).unwrap()), ["1", "f", "g", "h"]);

        let l2 = fixtures::fig2();
        let oh = Interval::named(&l2, "0", "h").unwrap();
        let a = id(&l2, "a");
        assert_eq!(names(&l2, &bar(&oh, a).unwrap()), ["b", "c"]);
        assert_eq!(bar(&oh, a).unwrap(), rel_complements(&oh, a).unwrap());
        assert_eq!(hat(&oh, a).unwrap(), rel_complements(&oh, a).unwrap());
    }

    #[test]
    fn bar_of_uncomplemented_element_is_empty() {
        let c3 = Lattice::chain(3).unwrap();
        let i = Interval::whole(&c3);
        let mid = id(&c3, "1");
        assert!(bar(&i, mid).unwrap().is_empty());
        assert!(hat(&i, mid).unwrap().is_empty());
    }

    #[test]
    fn induced_examples() {
        let l = fixtures::fig1();
        let eh = Interval::named(&l, "e", "h").unwrap();
        let r = check_induced(&eh, id(&l, "f"), id(&l, "b")).unwrap();
        assert!(r.cond1_holds && !r.cond2_holds);
        assert_eq!(r.v, Some(id(&l, "e")));
        assert_eq!(r.v_in_relcomp, Some(false));

        let ah = Interval::named(&l, "a", "h").unwrap();
        let r = check_induced(&ah, id(&l, "f"), id(&l, "b")).unwrap();
        assert!(!r.cond1_holds);
        assert_eq!(r.v, None);
        assert_eq!(r.v_in_relcomp, None);

        let b1 = Interval::named(&l, "b", "1").unwrap();
        for u in ["a", "c"] {
            let r = check_induced(&b1, id(&l, "g"), id(&l, u)).unwrap();
            assert!(r.cond1_holds && r.cond2_holds);
            assert_eq!(r.v, Some(id(&l, "d")));
            assert_eq!(r.v_in_relcomp, Some(true));
        }
        assert!(check_induced(&b1, id(&l, "a"), id(&l, "a")).is_err());
    }

    #[test]
    fn table_agrees_with_direct_scan() {
        let l = fixtures::fig5();
        for i in Interval::all(&l) {
            let t = RelComplementTable::new(&i);
            for x in i.members() {
                assert_eq!(t.of(x), &rel_complements(&i, x).unwrap());
            }
        }
    }
}
