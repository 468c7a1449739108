//! The closure operator `A ↦ (A^ab)^ab` on subsets of an interval, the
//! family of closed sets with its orthocomplementation, and the `≤₁`
//! preorder on subsets.

use std::collections::{BTreeSet, HashMap};

use crate::complement::RelComplementTable;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lattice::Lattice;
use crate::set::ElementSet;

/// `(A^ab)^ab`
pub fn closure(i: &Interval<'_>, a: &ElementSet) -> Result<ElementSet> {
    i.require_subset(a)?;
    Ok(RelComplementTable::new(i).closure(a))
}

/// `A ≤₁ B`: every member of `A` lies below some member of `B`.
pub fn le1(l: &Lattice, a: &ElementSet, b: &ElementSet) -> Result<bool> {
    if !l.owns(a) || !l.owns(b) {
        return Err(Error::UniverseMismatch);
    }
    Ok(le1_unchecked(l, a, b))
}

pub(crate) fn le1_unchecked(l: &Lattice, a: &ElementSet, b: &ElementSet) -> bool {
    a.iter().all(|x| !l.up_set(x).is_disjoint(b))
}

/// `A =₁ B`: `A ≤₁ B` and `B ≤₁ A`.
pub fn eq1(l: &Lattice, a: &ElementSet, b: &ElementSet) -> Result<bool> {
    Ok(le1(l, a, b)? && le1(l, b, a)?)
}

/// All closed subsets of an interval `[a, b]` with `a < b`, ordered by
/// cardinality and then by member list, with the orthocomplement and the
/// lattice operations as index tables.
#[derive(Clone, Debug)]
pub struct ClosedFamily<'l> {
    interval: Interval<'l>,
    closed_sets: Vec<ElementSet>,
    ortho: Vec<usize>,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl<'l> ClosedFamily<'l> {
    /// Every closed set is `A^ab` for some `A`, and `A^ab` is the
    /// intersection of the `x^ab` over `x ∈ A`. So the family is the
    /// interval itself plus everything reachable from the `x^ab` by
    /// intersection.
    pub fn new(i: &Interval<'l>) -> Result<Self> {
        if i.is_degenerate() {
            return Err(Error::DegenerateInterval);
        }
        let table = RelComplementTable::new(i);
        let mut family: BTreeSet<ElementSet> = BTreeSet::new();
        family.insert(i.members().clone());
        family.insert(table.of_set(i.members()));
        let seeds: Vec<ElementSet> = i
            .members()
            .iter()
            .map(|x| table.of(x).clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut frontier: Vec<ElementSet> = Vec::new();
        for s in &seeds {
            family.insert(s.clone());
            frontier.push(s.clone());
        }
        while let Some(s) = frontier.pop() {
            for t in &seeds {
                let m = &s & t;
                if family.insert(m.clone()) {
                    frontier.push(m);
                }
            }
        }

        let closed_sets: Vec<ElementSet> = family.into_iter().collect();
        let pos: HashMap<&ElementSet, usize> = closed_sets
            .iter()
            .enumerate()
            .map(|(k, s)| (s, k))
            .collect();
        let find = |s: &ElementSet| -> usize {
            *pos.get(s)
                .expect("closed-set family is closed under the operators")
        };
        let k = closed_sets.len();
        let ortho: Vec<usize> = closed_sets.iter().map(|s| find(&table.of_set(s))).collect();
        let mut join = vec![0; k * k];
        let mut meet = vec![0; k * k];
        for p in 0..k {
            for q in 0..k {
                meet[p * k + q] = find(&(&closed_sets[p] & &closed_sets[q]));
                join[p * k + q] = find(&table.closure(&(&closed_sets[p] | &closed_sets[q])));
            }
        }
        let family = ClosedFamily {
            interval: i.clone(),
            closed_sets,
            ortho,
            join,
            meet,
        };
        Ok(family)
    }

    pub fn interval(&self) -> &Interval<'l> {
        &self.interval
    }

    pub fn len(&self) -> usize {
        self.closed_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed_sets.is_empty()
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.closed_sets
    }

    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.closed_sets.binary_search(s).ok()
    }

    /// `A ↦ A^ab` on indices.
    pub fn ortho(&self, p: usize) -> usize {
        self.ortho[p]
    }

    /// `((A ∪ B)^ab)^ab`
    pub fn join(&self, p: usize, q: usize) -> usize {
        self.join[p * self.len() + q]
    }

    /// `A ∩ B`
    pub fn meet(&self, p: usize, q: usize) -> usize {
        self.meet[p * self.len() + q]
    }

    /// Index of `∅`.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole interval.
    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// Checks the bounded ortholattice axioms, returning the first violation.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let table = RelComplementTable::new(&self.interval);
        let sets = &self.closed_sets;
        let k = self.len();
        let l = self.interval.lattice();
        let show = |p: usize| l.format_set(&sets[p]);
        if !sets[0].is_empty() {
            return Err(format!("least closed set is {} rather than empty", show(0)));
        }
        if &sets[k - 1] != self.interval.members() {
            return Err(format!("greatest closed set is {}", show(k - 1)));
        }
        for p in 0..k {
            if table.closure(&sets[p]) != sets[p] {
                return Err(format!("{} is not closed", show(p)));
            }
            let o = self.ortho(p);
            if self.ortho(o) != p {
                return Err(format!(
                    "orthocomplement is not an involution at {}",
                    show(p)
                ));
            }
            if !sets[p].is_disjoint(&sets[o]) {
                return Err(format!("{} meets its orthocomplement", show(p)));
            }
            if self.join(p, o) != self.top() || self.meet(p, o) != self.bottom() {
                return Err(format!(
                    "{} and its orthocomplement are not complements",
                    show(p)
                ));
            }
            for q in 0..k {
                let (j, m) = (self.join(p, q), self.meet(p, q));
                if sets[m] != &sets[p] & &sets[q] {
                    return Err(format!(
                        "meet of {} and {} is not the intersection",
                        show(p),
                        show(q)
                    ));
                }
                if !sets[p].is_subset(&sets[j]) || !sets[q].is_subset(&sets[j]) {
                    return Err(format!(
                        "join of {} and {} is not an upper bound",
                        show(p),
                        show(q)
                    ));
                }
                if (0..k).any(|r| {
                    sets[p].is_subset(&sets[r])
                        && sets[q].is_subset(&sets[r])
                        && !sets[j].is_subset(&sets[r])
                }) {
                    return Err(format!("join of {} and {} is not least", show(p), show(q)));
                }
                if sets[p].is_subset(&sets[q]) && !sets[self.ortho(q)].is_subset(&sets[o]) {
                    return Err(format!(
                        "orthocomplement does not reverse {} ⊆ {}",
                        show(p),
                        show(q)
                    ));
                }
            }
        }
        Ok(())
    }
}
