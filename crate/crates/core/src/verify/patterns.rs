//! Anchored sublattice search and the two pattern statements built on it.

use std::collections::BTreeSet;

use crate::fixtures;
use crate::lattice::{ElementId, Lattice};

use super::statements::Statement;
use super::{complements, induced_bar, induced_hat, CheckReport, Witness};

/// The two pattern lattices. In `Bar` two complements of `c` induce the same
/// element `(d ∨ a) ∧ b`; in `Hat` the same `(d ∧ b) ∨ a`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PatternKind {
    Bar,
    Hat,
}

impl PatternKind {
    pub const ALL: [PatternKind; 2] = [PatternKind::Bar, PatternKind::Hat];

    pub fn lattice(self) -> Lattice {
        match self {
            PatternKind::Bar => fixtures::fig6_pattern(),
            PatternKind::Hat => fixtures::fig7_pattern(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PatternKind::Bar => "bar",
            PatternKind::Hat => "hat",
        }
    }

    fn induce(self, l: &Lattice, u: ElementId, a: ElementId, b: ElementId) -> ElementId {
        match self {
            PatternKind::Bar => induced_bar(l, u, a, b),
            PatternKind::Hat => induced_hat(l, u, a, b),
        }
    }
}

/// An embedding of `pattern` into `target` preserving joins and meets and
/// sending bottom and top to bottom and top.
#[derive(Clone, Debug)]
pub struct PatternMatch<'a> {
    pub pattern: &'a Lattice,
    pub target: &'a Lattice,
    /// Indexed by pattern element id.
    pub embedding: Vec<ElementId>,
}

impl PatternMatch<'_> {
    /// Image of the pattern element called `name`.
    pub fn image_of(&self, name: &str) -> Option<ElementId> {
        self.pattern
            .element(name)
            .map(|p| self.embedding[p.index()])
    }

    pub fn preserves_operations(&self) -> bool {
        let (p, t, m) = (self.pattern, self.target, &self.embedding);
        p.elements().all(|x| {
            p.elements().all(|y| {
                m[p.join(x, y).index()] == t.join(m[x.index()], m[y.index()])
                    && m[p.meet(x, y).index()] == t.meet(m[x.index()], m[y.index()])
            })
        })
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .pattern
            .elements()
            .map(|x| {
                format!(
                    "{}->{}",
                    self.pattern.name_of(x),
                    self.target.name_of(self.embedding[x.index()])
                )
            })
            .collect();
        parts.join(" ")
    }
}

/// Every anchored embedding of `pattern` into `target`, one per image set,
/// in lexicographic order of the embedding.
pub fn find_pattern<'a>(target: &'a Lattice, pattern: &'a Lattice) -> Vec<PatternMatch<'a>> {
    if pattern.len() > target.len() {
        return Vec::new();
    }
    let mut order: Vec<ElementId> = pattern.elements().collect();
    order.sort_by_key(|&x| (pattern.down_set(x).len(), x));
    let mut search = Search {
        target,
        pattern,
        order,
        map: vec![None; pattern.len()],
        used: vec![false; target.len()],
        seen: BTreeSet::new(),
        found: Vec::new(),
    };
    search.extend(0);
    search
        .found
        .into_iter()
        .map(|embedding| PatternMatch {
            pattern,
            target,
            embedding,
        })
        .collect()
}

struct Search<'a> {
    target: &'a Lattice,
    pattern: &'a Lattice,
    order: Vec<ElementId>,
    map: Vec<Option<ElementId>>,
    used: Vec<bool>,
    seen: BTreeSet<Vec<ElementId>>,
    found: Vec<Vec<ElementId>>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        let (p, t) = (self.pattern, self.target);
        let Some(&x) = self.order.get(depth) else {
            let embedding: Vec<ElementId> = self.map.iter().map(|m| m.unwrap()).collect();
            let mut image = embedding.clone();
            image.sort_unstable();
            if self.seen.insert(image) {
                self.found.push(embedding);
            }
            return;
        };
        let candidates: Vec<ElementId> = if x == p.bottom() {
            vec![t.bottom()]
        } else if x == p.top() {
            vec![t.top()]
        } else {
            t.elements().collect()
        };
        for y in candidates {
            if self.used[y.index()] || !self.consistent(depth, x, y) {
                continue;
            }
            self.map[x.index()] = Some(y);
            self.used[y.index()] = true;
            self.extend(depth + 1);
            self.map[x.index()] = None;
            self.used[y.index()] = false;
        }
    }

    // Elements are placed in order of increasing down-set size, so meets
    // with placed elements are already placed, and a join is checked when
    // the element it names is placed.
    fn consistent(&self, depth: usize, x: ElementId, y: ElementId) -> bool {
        let (p, t) = (self.pattern, self.target);
        let placed = &self.order[..depth];
        let img = |q: ElementId| self.map[q.index()];
        for &q in placed {
            let fq = img(q).unwrap();
            if p.le(q, x) != t.le(fq, y) || p.le(x, q) != t.le(y, fq) {
                return false;
            }
            if img(p.meet(q, x)) != Some(t.meet(fq, y)) {
                return false;
            }
        }
        for (k, &q) in placed.iter().enumerate() {
            for &r in &placed[k + 1..] {
                if p.join(q, r) == x && t.join(img(q).unwrap(), img(r).unwrap()) != y {
                    return false;
                }
            }
        }
        true
    }
}

struct Roles {
    a: ElementId,
    b: ElementId,
    c: ElementId,
    d: ElementId,
    e: ElementId,
}

fn roles(m: &PatternMatch<'_>) -> Roles {
    let r = |n: &str| {
        m.image_of(n)
            .unwrap_or_else(|| panic!("pattern has no element `{n}`"))
    };
    Roles {
        a: r("a"),
        b: r("b"),
        c: r("c"),
        d: r("d"),
        e: r("e"),
    }
}

fn coincide_holds(l: &Lattice, kind: PatternKind, r: &Roles) -> bool {
    let comps = complements(l, r.c);
    let v = kind.induce(l, r.d, r.a, r.b);
    r.d != r.e
        && comps.contains(r.d)
        && comps.contains(r.e)
        && v == kind.induce(l, r.e, r.a, r.b)
        && l.join(r.c, v) == r.b
        && l.meet(r.c, v) == r.a
}

fn pattern_witness(l: &Lattice, kind: PatternKind, r: &Roles) -> Witness {
    let mut w = Witness::new(l)
        .elem("c", r.c)
        .elem("d", r.d)
        .elem("e", r.e)
        .note(format!("{} pattern", kind.label()));
    w.interval = Some((r.a, r.b));
    w
}

/// For every embedded copy of either pattern: `d` and `e` are distinct
/// complements of `c`, they induce the same element of `c̄_ab` (resp.
/// `ĉ_ab`), and that element lies in `c^ab`.
pub fn verify_remark_patterns(l: &Lattice) -> CheckReport {
    let mut report = CheckReport::new(Statement::PatternCoincide, l);
    for kind in PatternKind::ALL {
        let pattern = kind.lattice();
        for m in find_pattern(l, &pattern) {
            report.instance();
            let r = roles(&m);
            if !coincide_holds(l, kind, &r) {
                report.fail(pattern_witness(l, kind, &r));
            }
        }
    }
    if report.checked_instances == 0 {
        report.note = Some("no pattern sublattice".into());
    }
    report
}

fn distinct_induced_violation(
    l: &Lattice,
    x: ElementId,
    y: ElementId,
    u: ElementId,
    w: ElementId,
) -> Option<PatternKind> {
    PatternKind::ALL
        .into_iter()
        .find(|k| k.induce(l, u, x, y) == k.induce(l, w, x, y))
}

/// Whenever `x < z < y`, distinct complements of `z` induce distinct
/// elements of `z̄_xy` and distinct elements of `ẑ_xy`.
pub fn verify_distinct_induced(l: &Lattice) -> CheckReport {
    let mut report = CheckReport::new(Statement::PatternDistinct, l);
    for z in l.elements() {
        let comps: Vec<ElementId> = complements(l, z).iter().collect();
        for x in l.down_set(z).iter().filter(|&x| x != z) {
            for y in l.up_set(z).iter().filter(|&y| y != z) {
                for (k, &u) in comps.iter().enumerate() {
                    for &w in &comps[k + 1..] {
                        report.instance();
                        if let Some(kind) = distinct_induced_violation(l, x, y, u, w) {
                            let v = kind.induce(l, u, x, y);
                            let mut wit = Witness::new(l)
                                .elem("z", z)
                                .elem("u", u)
                                .elem("w", w)
                                .elem("v", v)
                                .note(format!(
                                    "both complements induce the same {} element",
                                    kind.label()
                                ));
                            wit.interval = Some((x, y));
                            report.fail(wit);
                        }
                    }
                }
            }
        }
    }
    report
}

pub(crate) fn witness_violates(s: Statement, l: &Lattice, w: &Witness) -> bool {
    let Some((a, b)) = w.interval else {
        return false;
    };
    let valid = |x: ElementId| x.index() < l.len();
    if !valid(a) || !valid(b) {
        return false;
    }
    match s {
        Statement::PatternCoincide => {
            let kind = if w.note.starts_with("hat") {
                PatternKind::Hat
            } else {
                PatternKind::Bar
            };
            match (w.element("c"), w.element("d"), w.element("e")) {
                (Some(c), Some(d), Some(e)) if valid(c) && valid(d) && valid(e) => {
                    !coincide_holds(l, kind, &Roles { a, b, c, d, e })
                }
                _ => false,
            }
        }
        Statement::PatternDistinct => match (w.element("z"), w.element("u"), w.element("w")) {
            (Some(z), Some(u), Some(v)) if valid(z) && valid(u) && valid(v) => {
                let comps = complements(l, z);
                l.lt(a, z)
                    && l.lt(z, b)
                    && u != v
                    && comps.contains(u)
                    && comps.contains(v)
                    && distinct_induced_violation(l, a, b, u, v).is_some()
            }
            _ => false,
        },
        _ => false,
    }
}
