//! Executable checks of the structural statements about relative
//! complementation.
//!
//! Each statement is identified by a short dotted id (see
//! [`Statement::id`]). Interval-scoped statements are checked on one
//! [`Interval`] at a time; [`check_lattice`] runs a statement over every
//! interval of a lattice and aggregates the outcome into one
//! [`CheckReport`].
//!
//! Hypotheses that are not met (an interval that is not complemented, a
//! lattice that is not modular, ...) are never silently skipped: the
//! interval-level functions either return
//! [`Error::HypothesisFailed`] or a report with `skipped` set, and the
//! aggregate counts those instances separately from the checked ones.

mod patterns;
mod statements;

use std::fmt::Write as _;

use crate::complement::{self, RelComplementTable};
use crate::error::Error;
use crate::interval::Interval;
use crate::lattice::{ElementId, Lattice};
use crate::set::ElementSet;

pub use patterns::{
    find_pattern, verify_distinct_induced, verify_remark_patterns, PatternKind, PatternMatch,
};
pub use statements::*;

/// A concrete instance on which a statement fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lattice: String,
    pub interval: Option<(ElementId, ElementId)>,
    pub elements: Vec<(String, ElementId)>,
    pub sets: Vec<(String, ElementSet)>,
    pub note: String,
}

impl Witness {
    fn new(l: &Lattice) -> Self {
        Witness {
            lattice: l.name().to_string(),
            interval: None,
            elements: Vec::new(),
            sets: Vec::new(),
            note: String::new(),
        }
    }

    fn on(i: &Interval<'_>) -> Self {
        let mut w = Witness::new(i.lattice());
        w.interval = Some((i.lower(), i.upper()));
        w
    }

    fn elem(mut self, role: &str, x: ElementId) -> Self {
        self.elements.push((role.to_string(), x));
        self
    }

    fn set(mut self, role: &str, s: &ElementSet) -> Self {
        self.sets.push((role.to_string(), s.clone()));
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn element(&self, role: &str) -> Option<ElementId> {
        self.elements
            .iter()
            .find(|(r, _)| r == role)
            .map(|&(_, x)| x)
    }

    pub fn set_named(&self, role: &str) -> Option<&ElementSet> {
        self.sets.iter().find(|(r, _)| r == role).map(|(_, s)| s)
    }

    pub fn render(&self, l: &Lattice) -> String {
        let mut out = format!("lattice {}", self.lattice);
        if let Some((a, b)) = self.interval {
            let _ = write!(out, ", interval [{}, {}]", l.name_of(a), l.name_of(b));
        }
        for (role, x) in &self.elements {
            let _ = write!(out, ", {role}={}", l.name_of(*x));
        }
        for (role, s) in &self.sets {
            let _ = write!(out, ", {role}={}", l.format_set(s));
        }
        if !self.note.is_empty() {
            let _ = write!(out, ": {}", self.note);
        }
        out
    }
}

/// Outcome of checking one statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub statement: String,
    pub lattice: String,
    pub holds: bool,
    pub counterexample: Option<Witness>,
    /// Instances on which the statement was evaluated.
    pub checked_instances: u64,
    /// Instances whose hypotheses were not met.
    pub skipped: u64,
    pub note: Option<String>,
}

impl CheckReport {
    fn new(statement: Statement, l: &Lattice) -> Self {
        CheckReport {
            statement: statement.id().to_string(),
            lattice: l.name().to_string(),
            holds: true,
            counterexample: None,
            checked_instances: 0,
            skipped: 0,
            note: None,
        }
    }

    fn vacuous(statement: Statement, l: &Lattice, why: impl Into<String>) -> Self {
        let mut r = Self::new(statement, l);
        r.skipped = 1;
        r.note = Some(why.into());
        r
    }

    fn instance(&mut self) {
        self.checked_instances += 1;
    }

    fn fail(&mut self, w: Witness) {
        self.holds = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(w);
        }
    }

    /// Nothing was checked because no instance met the hypotheses.
    pub fn is_vacuous(&self) -> bool {
        self.checked_instances == 0 && self.skipped > 0
    }

    /// Folds another report for the same statement into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked_instances += other.checked_instances;
        self.skipped += other.skipped;
        if !other.holds {
            self.holds = false;
            if self.counterexample.is_none() {
                self.counterexample = other.counterexample;
            }
        }
        if self.note.is_none() {
            self.note = other.note;
        }
    }

    pub fn statement(&self) -> Option<Statement> {
        Statement::from_id(&self.statement)
    }

    /// Re-evaluates the counterexample on `l` and reports whether it really
    /// violates the statement. Reports without a counterexample return false.
    pub fn revalidate(&self, l: &Lattice) -> bool {
        match (&self.counterexample, self.statement()) {
            (Some(w), Some(s)) => statements::witness_violates(s, l, w),
            _ => false,
        }
    }

    pub fn render(&self, l: &Lattice) -> String {
        let status = if !self.holds {
            "FAIL"
        } else if self.is_vacuous() {
            "VACUOUS"
        } else {
            "ok"
        };
        let mut out = format!(
            "{status:<7} {:<22} {} (checked {}, skipped {})",
            self.statement, self.lattice, self.checked_instances, self.skipped
        );
        if let Some(w) = &self.counterexample {
            let _ = write!(out, "\n        counterexample: {}", w.render(l));
        }
        out
    }
}

/// Subsets of an interval used for set-quantified statements: all of them
/// when the interval has at most `limit` members, otherwise every subset
/// with at most two members plus the whole interval.
fn subsets(i: &Interval<'_>, limit: usize) -> Vec<ElementSet> {
    let l = i.lattice();
    let members: Vec<ElementId> = i.members().iter().collect();
    if members.len() <= limit {
        (0u64..1 << members.len())
            .map(|mask| {
                l.set_of(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &x)| x),
                )
            })
            .collect()
    } else {
        let mut out = vec![l.empty_set(), i.members().clone()];
        for (k, &x) in members.iter().enumerate() {
            out.push(l.set_of([x]));
            for &y in &members[k + 1..] {
                out.push(l.set_of([x, y]));
            }
        }
        out
    }
}

/// The standing hypotheses for the closed-set statements: `a < b` and every
/// member of `[a, b]` has a relative complement.
fn standing_hypotheses(t: &RelComplementTable<'_>) -> std::result::Result<(), String> {
    let i = t.interval();
    if i.is_degenerate() {
        return Err(format!("{} is degenerate", i.label()));
    }
    match t.uncomplemented() {
        Some(x) => Err(format!(
            "{} is not complemented: {} has no relative complement",
            i.label(),
            i.lattice().name_of(x)
        )),
        None => Ok(()),
    }
}

fn induced_bar(l: &Lattice, u: ElementId, a: ElementId, b: ElementId) -> ElementId {
    l.meet(l.join(u, a), b)
}

fn induced_hat(l: &Lattice, u: ElementId, a: ElementId, b: ElementId) -> ElementId {
    l.join(l.meet(u, b), a)
}

/// Runs `statement` on `l`, over every interval where it is interval-scoped.
pub fn check_lattice(l: &Lattice, statement: Statement) -> CheckReport {
    if statement.is_lattice_scoped() {
        return statements::check_lattice_scoped(l, statement);
    }
    let mut report = CheckReport::new(statement, l);
    for i in Interval::all(l) {
        match statements::check_interval(&i, statement) {
            Ok(r) => report.absorb(r),
            Err(Error::HypothesisFailed(_)) => report.skipped += 1,
            Err(e) => {
                report.fail(Witness::on(&i).note(format!("checker error: {e}")));
            }
        }
    }
    if report.is_vacuous() {
        report.note = Some("no interval meets the hypotheses".into());
    } else {
        report.note = None;
    }
    report
}

/// Runs every statement in `statements` on `l`.
pub fn check_all(l: &Lattice, statements: &[Statement]) -> Vec<CheckReport> {
    statements.iter().map(|&s| check_lattice(l, s)).collect()
}

/// The induced element `(u ∨ a) ∧ b` and friends, exposed for callers that
/// want to print them.
pub fn induced_elements(
    l: &Lattice,
    u: ElementId,
    a: ElementId,
    b: ElementId,
) -> (ElementId, ElementId) {
    (induced_bar(l, u, a, b), induced_hat(l, u, a, b))
}

/// `c⁺` restricted helper re-exported for the pattern checks.
fn complements(l: &Lattice, c: ElementId) -> ElementSet {
    complement::complements(l, c)
}
