//! Every worked value from the figures, recomputed and compared.
//!
//! Each row pairs a stated value with the value the library computes. The
//! table is what `relcomp paper-regress` prints.

use std::fmt::Write as _;

use crate::closure::ClosedFamily;
use crate::complement::{
    bar, check_induced, complements, hat, rel_complements, RelComplementTable,
};
use crate::fixtures;
use crate::interval::Interval;
use crate::iso;
use crate::lattice::{ElementId, Lattice};
use crate::set::ElementSet;
use crate::verify::{
    check_lattice, find_biclosure_fixed_point, find_pattern, verify_biclosure_identity,
    verify_distinct_induced, verify_product_identity, verify_remark_patterns, Factor, PatternKind,
    Statement,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub figure: &'static str,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

impl Row {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

struct Table {
    figure: &'static str,
    rows: Vec<Row>,
}

impl Table {
    fn row(&mut self, claim: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.rows.push(Row {
            figure: self.figure,
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

fn id(l: &Lattice, name: &str) -> ElementId {
    l.lookup(name).expect("fixture element")
}

fn iv<'l>(l: &'l Lattice, a: &str, b: &str) -> Interval<'l> {
    Interval::named(l, a, b).expect("fixture interval")
}

fn show(l: &Lattice, s: &ElementSet) -> String {
    l.format_set(s)
}

fn show_opt(l: &Lattice, x: Option<ElementId>) -> String {
    x.map_or("-".into(), |x| l.name_of(x).to_string())
}

/// Induced-element outcome as `cond1/cond2/v/v-in`.
fn induced(l: &Lattice, a: &str, b: &str, z: &str, u: &str) -> String {
    let i = iv(l, a, b);
    let r = check_induced(&i, id(l, z), id(l, u)).expect("fixture query");
    format!(
        "cond1={} cond2={} v={} v-in={}",
        r.cond1_holds,
        r.cond2_holds,
        show_opt(l, r.v),
        r.v_in_relcomp.map_or("-".into(), |b| b.to_string())
    )
}

fn fig1_rows(t: &mut Table) {
    let l = fixtures::fig1();
    t.row("fixture size", 10, l.len());
    t.row("complemented", true, l.is_complemented());
    t.row("modular", false, l.is_modular());
    t.row("g+", "{a, c}", show(&l, &complements(&l, id(&l, "g"))));
    t.row(
        "[b, 1], z=g, u=a",
        "cond1=true cond2=true v=d v-in=true",
        induced(&l, "b", "1", "g", "a"),
    );
    t.row(
        "[b, 1], z=g, u=c",
        "cond1=true cond2=true v=d v-in=true",
        induced(&l, "b", "1", "g", "c"),
    );
    t.row("f+", "{b}", show(&l, &complements(&l, id(&l, "f"))));
    t.row(
        "[e, h], z=f, u=b",
        "cond1=true cond2=false v=e v-in=false",
        induced(&l, "e", "h", "f", "b"),
    );
    t.row(
        "[e, 1], z=f, u=b",
        "cond1=true cond2=true v=g v-in=true",
        induced(&l, "e", "1", "f", "b"),
    );
    t.row("b+", "{f, h}", show(&l, &complements(&l, id(&l, "b"))));
    t.row(
        "[0, d], z=b, u=f",
        "cond1=true cond2=true v=a v-in=true",
        induced(&l, "0", "d", "b", "f"),
    );
    t.row(
        "[0, d], z=b, u=h",
        "cond1=true cond2=true v=c v-in=true",
        induced(&l, "0", "d", "b", "h"),
    );
    t.row(
        "[a, h], z=f, u=b",
        "cond1=false cond2=false v=- v-in=-",
        induced(&l, "a", "h", "f", "b"),
    );
    let i = iv(&l, "a", "h");
    t.row(
        "f^ah",
        "{c}",
        show(
            &l,
            &rel_complements(&i, id(&l, "f")).expect("fixture query"),
        ),
    );
    let p = iv(&l, "0", "d").find_n5_through();
    t.row(
        "pentagon through [0, d]",
        "0 b a c d",
        p.map_or("-".into(), |p| {
            p.iter()
                .map(|&x| l.name_of(x))
                .collect::<Vec<_>>()
                .join(" ")
        }),
    );
    for kind in PatternKind::ALL {
        t.row(
            format!("{} pattern sublattices", kind.label()),
            0,
            find_pattern(&l, &kind.lattice()).len(),
        );
    }
    let r = verify_distinct_induced(&l);
    t.row(
        "x<z<y: distinct complements of z induce distinct elements",
        "holds",
        match &r.counterexample {
            None => "holds".to_string(),
            Some(w) => format!("fails: {}", w.render(&l)),
        },
    );
}

fn fig2_rows(t: &mut Table) {
    let l = fixtures::fig2();
    t.row("fixture size", 16, l.len());
    t.row("modular", true, l.is_modular());
    t.row("complemented", true, l.is_complemented());
    let i = iv(&l, "0", "h");
    let a = id(&l, "a");
    t.row("a+", "{k, l, m, n}", show(&l, &complements(&l, a)));
    t.row(
        "bar a_0h",
        "{b, c}",
        show(&l, &bar(&i, a).expect("fixture query")),
    );
    t.row(
        "hat a_0h",
        "{b, c}",
        show(&l, &hat(&i, a).expect("fixture query")),
    );
    t.row(
        "a^0h",
        "{b, c}",
        show(&l, &rel_complements(&i, a).expect("fixture query")),
    );
    t.row(
        "(a^0h)^0h",
        "{a}",
        show(&l, &RelComplementTable::new(&i).closure_of(a)),
    );
    let mut all = true;
    let mut fixed = true;
    for i in Interval::all(&l) {
        let table = RelComplementTable::new(&i);
        for z in i.members() {
            let rel = table.of(z);
            all &= bar(&i, z).ok().as_ref() == Some(rel)
                && hat(&i, z).ok().as_ref() == Some(rel)
                && table.closure_of(z) == l.set_of([z]);
            fixed &= find_biclosure_fixed_point(&i, z) == Ok(z);
        }
    }
    t.row(
        "all [x, y], z: bar = hat = z^xy, (z^xy)^xy = {z}",
        true,
        all,
    );
    t.row("fixed point of every c is c", true, fixed);
    let th2 = Interval::all(&l)
        .all(|i| verify_biclosure_identity(&i).is_ok_and(|r| r.holds && r.checked_instances == 1));
    t.row("biclosure identity criterion on every interval", true, th2);
}

fn fig4_rows(t: &mut Table) {
    let l = fixtures::fig4();
    let product = Lattice::direct_product(&[
        &Lattice::chain(2).expect("chain"),
        &Lattice::mn(3).expect("M3"),
    ])
    .expect("product");
    t.row(
        "isomorphic to 2 x M3",
        true,
        iso::are_isomorphic(&l, &product),
    );
    t.row("modular", true, l.is_modular());
    t.row("relatively complemented", true, l.is_rel_complemented());
    let closures = Interval::all(&l).all(|i| {
        let table = RelComplementTable::new(&i);
        i.members()
            .iter()
            .all(|z| table.closure_of(z) == l.set_of([z]))
    });
    t.row("all [x, y], z: (z^xy)^xy = {z}", true, closures);
    let th1 = verify_product_identity(&[Factor::Boolean(1), Factor::M(3)]);
    t.row(
        "product identity on 2 x M3",
        true,
        th1.is_ok_and(|r| r.holds),
    );
    t.row(
        "product identity on the fixture",
        true,
        check_lattice(&l, Statement::ProductIdentity).holds,
    );
}

fn fig5_rows(t: &mut Table) {
    let l = fixtures::fig5();
    t.row("modular", false, l.is_modular());
    t.row("complemented", true, l.is_complemented());
    let witness = ["0", "d", "e", "i", "1"].map(|n| id(&l, n));
    t.row(
        "{0, d, e, i, 1} is a pentagon",
        true,
        l.is_pentagon(witness),
    );
    t.row(
        "pentagon found",
        "0 d e i 1",
        l.find_n5().map_or("-".into(), |p| {
            p.iter()
                .map(|&x| l.name_of(x))
                .collect::<Vec<_>>()
                .join(" ")
        }),
    );
    let fig4 = fixtures::fig4();
    t.row(
        "contains the fig. 4 lattice",
        true,
        !find_pattern(&l, &fig4).is_empty(),
    );
    let i = iv(&l, "e", "1");
    t.row("[e, 1] modular", true, i.is_modular());
    let ab = l.set_named(&["a", "b"]).expect("names");
    let e = l.set_of([id(&l, "e")]);
    t.row(
        "{a, b} v e",
        "{f, g}",
        show(&l, &l.join_set(&ab, &e).expect("same lattice")),
    );
    for (x, plus, b, r) in [
        ("h", "{a, b}", "{f, g}", "{f, g, i}"),
        ("i", "{a, b, c, d}", "{1, f, g, h}", "{f, g, h}"),
    ] {
        let xid = id(&l, x);
        t.row(format!("{x}+"), plus, show(&l, &complements(&l, xid)));
        t.row(
            format!("bar {x}_e1"),
            b,
            show(&l, &bar(&i, xid).expect("fixture query")),
        );
        t.row(
            format!("hat {x}_e1"),
            b,
            show(&l, &hat(&i, xid).expect("fixture query")),
        );
        t.row(
            format!("{x}^e1"),
            r,
            show(&l, &rel_complements(&i, xid).expect("fixture query")),
        );
    }
    let h = id(&l, "h");
    let ih = id(&l, "i");
    let hb = bar(&i, h).expect("fixture query");
    let hr = rel_complements(&i, h).expect("fixture query");
    let ib = bar(&i, ih).expect("fixture query");
    let ir = rel_complements(&i, ih).expect("fixture query");
    t.row(
        "bar h_e1 strictly inside h^e1",
        true,
        hb.is_subset(&hr) && hb != hr,
    );
    t.row(
        "bar i_e1 strictly contains i^e1",
        true,
        ir.is_subset(&ib) && ib != ir,
    );
}

fn pattern_rows(t: &mut Table) {
    for kind in PatternKind::ALL {
        let p = kind.lattice();
        t.row(
            format!("{} pattern: anchored self-matches", kind.label()),
            1,
            find_pattern(&p, &p).len(),
        );
        let r = verify_remark_patterns(&p);
        t.row(
            format!("{} pattern: complements coincide", kind.label()),
            true,
            r.holds && r.checked_instances > 0,
        );
    }
}

fn mn_rows(t: &mut Table) {
    let l = Lattice::mn(3).expect("M3");
    let ok = l
        .elements()
        .filter(|&x| x != l.bottom() && x != l.top())
        .all(|x| {
            let mut others = l.full_set();
            others.remove(x);
            others.remove(l.bottom());
            others.remove(l.top());
            complements(&l, x) == others
        });
    t.row("M3: atoms complement each other", true, ok);
    let cl = ClosedFamily::new(&Interval::whole(&l)).map(|f| f.len());
    t.row("M3: closed sets on [0, 1]", 10, cl.map_or(0, |n| n));
}

/// All rows, grouped by figure.
pub fn rows() -> Vec<Row> {
    type Fill = fn(&mut Table);
    let groups: [(&'static str, Fill); 6] = [
        ("fig1", fig1_rows),
        ("fig2", fig2_rows),
        ("fig4", fig4_rows),
        ("fig5", fig5_rows),
        ("patterns", pattern_rows),
        ("M_n", mn_rows),
    ];
    let mut out = Vec::new();
    for (figure, fill) in groups {
        let mut t = Table {
            figure,
            rows: Vec::new(),
        };
        fill(&mut t);
        out.extend(t.rows);
    }
    out
}

/// Renders rows as a fixed-width table followed by a summary line.
pub fn render(rows: &[Row]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = if r.holds() { "ok" } else { "FAIL" };
        let _ = writeln!(out, "{status:<5}{:<9}{}", r.figure, r.claim);
        let _ = writeln!(out, "         expected: {}", r.expected);
        if !r.holds() {
            let _ = writeln!(out, "         actual:   {}", r.actual);
        }
    }
    let failed = rows.iter().filter(|r| !r.holds()).count();
    let _ = writeln!(out, "{} assertions, {} failed", rows.len(), failed);
    out
}
