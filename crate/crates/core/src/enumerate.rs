//! All lattices with a given number of elements, up to isomorphism, and a
//! driver that runs the verify suite over them.
//!
//! Generation: every naturally labelled poset on the `n - 2` inner points is
//! built by adding points one at a time, each new point taking a down-closed
//! subset of the earlier points as its strict down-set. Bounds are added and
//! non-lattices dropped; the survivors are bucketed by [`iso::invariant`]
//! and compared within a bucket by [`iso::find_isomorphism`].

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::iso;
use crate::lattice::Lattice;
use crate::verify::{check_lattice, CheckReport, Statement};

/// Largest size [`enumerate_lattices`] accepts.
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// One representative per isomorphism class of lattices with exactly `n`
/// elements, named `L{n}.{k}`. Elements are `0`, `a`, `b`, ..., `1`.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeBound(n));
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    if n == 1 {
        return Ok(vec![Lattice::from_order(
            "L1.1".into(),
            vec!["0".into()],
            &[vec![0]],
        )?]);
    }
    let inner = n - 2;
    let mut posets = Vec::new();
    grow(inner, &mut Vec::new(), &mut posets);

    let mut reps: Vec<Lattice> = Vec::new();
    let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for down in posets {
        let name = format!("L{n}.{}", reps.len() + 1);
        let Some(l) = bounded(name, &down)? else {
            continue;
        };
        let bucket = buckets.entry(iso::invariant(&l)).or_default();
        if bucket.iter().any(|&k| iso::are_isomorphic(&reps[k], &l)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(l);
    }
    Ok(reps)
}

/// Extends a naturally labelled poset (strict down-sets as bitmasks) by one
/// maximal point in every possible way.
fn grow(target: usize, down: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let k = down.len();
    if k == target {
        out.push(down.clone());
        return;
    }
    for mask in 0u32..1 << k {
        let closed = (0..k)
            .filter(|j| mask & (1 << j) != 0)
            .all(|j| down[j] & !mask == 0);
        if closed {
            down.push(mask);
            grow(target, down, out);
            down.pop();
        }
    }
}

/// The poset with a new bottom and top, if that is a lattice.
fn bounded(name: String, down: &[u32]) -> Result<Option<Lattice>> {
    let m = down.len();
    let n = m + 2;
    let top = n - 1;
    let mut names = vec!["0".to_string()];
    names.extend((0..m).map(|i| ((b'a' + i as u8) as char).to_string()));
    names.push("1".to_string());
    let mut ups = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..m {
        let mut up = vec![i + 1];
        up.extend((0..m).filter(|&j| down[j] & (1 << i) != 0).map(|j| j + 1));
        up.push(top);
        ups.push(up);
    }
    ups.push(vec![top]);
    match Lattice::from_order(name, names, &ups) {
        Ok(l) => Ok(Some(l)),
        Err(Error::NotALattice { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Outcome of running statements over every lattice up to a size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationRun {
    pub max_size: usize,
    pub count_by_size: BTreeMap<usize, usize>,
    pub statements: Vec<String>,
    /// (lattice, statement) pairs evaluated.
    pub reports: u64,
    pub checked_instances: u64,
    pub skipped: u64,
    /// Pairs that evaluated nothing because no instance met the hypotheses.
    pub vacuous: u64,
    pub failures: Vec<CheckReport>,
}

impl EnumerationRun {
    pub fn lattices(&self) -> usize {
        self.count_by_size.values().sum()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (size, count) in &self.count_by_size {
            let _ = writeln!(out, "size {size}: {count} lattices");
        }
        let _ = writeln!(
            out,
            "{} statements, {} reports, {} instances checked, {} skipped, {} vacuous",
            self.statements.len(),
            self.reports,
            self.checked_instances,
            self.skipped,
            self.vacuous
        );
        let _ = writeln!(out, "failures: {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "  {} on {}", f.statement, f.lattice);
            if let Some(w) = &f.counterexample {
                let _ = writeln!(out, "    {w:?}");
            }
        }
        out
    }
}

/// Resolves statement patterns (`all`, exact ids, `prefix.*`) in order,
/// dropping repeats.
pub fn resolve_statements(patterns: &[&str]) -> Result<Vec<Statement>> {
    let mut out: Vec<Statement> = Vec::new();
    for p in patterns {
        for s in Statement::select(p)? {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Runs `statements` on every lattice with at most `n` elements.
pub fn run_suite(n: usize, statements: &[&str]) -> Result<EnumerationRun> {
    let resolved = resolve_statements(statements)?;
    let mut run = EnumerationRun {
        max_size: n,
        statements: resolved.iter().map(|s| s.id().to_string()).collect(),
        ..Default::default()
    };
    for size in 1..=n {
        let lattices = enumerate_lattices(size)?;
        run.count_by_size.insert(size, lattices.len());
        let pairs: Vec<(&Lattice, Statement)> = lattices
            .iter()
            .flat_map(|l| resolved.iter().map(move |&s| (l, s)))
            .collect();
        // collect() keeps input order, so aggregation is deterministic.
        let reports: Vec<CheckReport> = pairs
            .par_iter()
            .map(|&(l, s)| check_lattice(l, s))
            .collect();
        for r in reports {
            run.reports += 1;
            run.checked_instances += r.checked_instances;
            run.skipped += r.skipped;
            if r.is_vacuous() {
                run.vacuous += 1;
            }
            if !r.holds {
                run.failures.push(r);
            }
        }
    }
    Ok(run)
}
