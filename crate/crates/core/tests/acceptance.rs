//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use relcomp::closure::ClosedFamily;
use relcomp::complement::{
    bar, check_induced, complements, hat, rel_complements, RelComplementTable,
};
use relcomp::enumerate::{enumerate_lattices, run_suite};
use relcomp::format::{parse_lattice, print_lattice};
use relcomp::verify::{
    find_pattern, verify_distinct_induced, verify_product_identity, verify_remark_patterns, Factor,
    PatternKind,
};
use relcomp::{fixtures, ElementId, ElementSet, Interval, Lattice};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn id(l: &Lattice, n: &str) -> ElementId {
    l.lookup(n).unwrap()
}

fn set(l: &Lattice, names: &[&str]) -> ElementSet {
    l.set_named(names).unwrap()
}

fn expect_set(l: &Lattice, what: &str, got: &ElementSet, want: &[&str]) -> Check {
    ensure!(
        *got == set(l, want),
        "{what}: expected {}, got {}",
        l.format_set(&set(l, want)),
        l.format_set(got)
    );
    Ok(())
}

/// (cond1, cond2, v, v in z^xy)
fn induced(
    l: &Lattice,
    a: &str,
    b: &str,
    z: &str,
    u: &str,
) -> (bool, bool, Option<String>, Option<bool>) {
    let i = Interval::named(l, a, b).unwrap();
    let r = check_induced(&i, id(l, z), id(l, u)).unwrap();
    (
        r.cond1_holds,
        r.cond2_holds,
        r.v.map(|v| l.name_of(v).to_string()),
        r.v_in_relcomp,
    )
}

fn fig1_regression() -> Check {
    let l = fixtures::fig1();
    expect_set(&l, "g+", &complements(&l, id(&l, "g")), &["a", "c"])?;
    for u in ["a", "c"] {
        let got = induced(&l, "b", "1", "g", u);
        ensure!(
            got == (true, true, Some("d".into()), Some(true)),
            "[b,1] u={u}: {got:?}"
        );
    }
    let gb1 = rel_complements(&Interval::named(&l, "b", "1").unwrap(), id(&l, "g")).unwrap();
    ensure!(gb1.contains(id(&l, "d")), "d not in g^b1");
    expect_set(&l, "f+", &complements(&l, id(&l, "f")), &["b"])?;
    let got = induced(&l, "e", "h", "f", "b");
    ensure!(
        got == (true, false, Some("e".into()), Some(false)),
        "[e,h] u=b: {got:?}"
    );
    let feh = rel_complements(&Interval::named(&l, "e", "h").unwrap(), id(&l, "f")).unwrap();
    ensure!(!feh.contains(id(&l, "e")), "e in f^eh");
    let got = induced(&l, "e", "1", "f", "b");
    ensure!(
        got == (true, true, Some("g".into()), Some(true)),
        "[e,1] u=b: {got:?}"
    );
    expect_set(&l, "b+", &complements(&l, id(&l, "b")), &["f", "h"])?;
    for (u, v) in [("f", "a"), ("h", "c")] {
        let got = induced(&l, "0", "d", "b", u);
        ensure!(
            got == (true, true, Some(v.into()), Some(true)),
            "[0,d] u={u}: {got:?}"
        );
    }
    let got = induced(&l, "a", "h", "f", "b");
    ensure!(!got.0, "cond1 holds for u=b on [a,h]");
    let fah = rel_complements(&Interval::named(&l, "a", "h").unwrap(), id(&l, "f")).unwrap();
    expect_set(&l, "f^ah", &fah, &["c"])
}

fn fig2_regression() -> Check {
    let l = fixtures::fig2();
    ensure!(
        l.is_modular() && l.is_complemented(),
        "fig2 not modular and complemented"
    );
    let i = Interval::named(&l, "0", "h").unwrap();
    let a = id(&l, "a");
    expect_set(&l, "bar a_0h", &bar(&i, a).unwrap(), &["b", "c"])?;
    expect_set(&l, "hat a_0h", &hat(&i, a).unwrap(), &["b", "c"])?;
    expect_set(&l, "a^0h", &rel_complements(&i, a).unwrap(), &["b", "c"])?;
    expect_set(
        &l,
        "(a^0h)^0h",
        &RelComplementTable::new(&i).closure_of(a),
        &["a"],
    )?;
    for i in Interval::all(&l) {
        let t = RelComplementTable::new(&i);
        for z in i.members() {
            ensure!(
                bar(&i, z).unwrap() == *t.of(z) && hat(&i, z).unwrap() == *t.of(z),
                "{} z={}: bar/hat differ from z^xy",
                i.label(),
                l.name_of(z)
            );
            ensure!(
                t.closure_of(z) == l.set_of([z]),
                "{} closure of {}",
                i.label(),
                l.name_of(z)
            );
        }
    }
    Ok(())
}

fn fig4_regression() -> Check {
    let l = fixtures::fig4();
    for i in Interval::all(&l) {
        let t = RelComplementTable::new(&i);
        for z in i.members() {
            ensure!(
                t.closure_of(z) == l.set_of([z]),
                "{} closure of {}",
                i.label(),
                l.name_of(z)
            );
        }
    }
    let r =
        verify_product_identity(&[Factor::Boolean(1), Factor::M(3)]).map_err(|e| e.to_string())?;
    ensure!(
        r.holds && r.checked_instances > 0,
        "product identity on 2 x M3: {r:?}"
    );
    Ok(())
}

fn fig5_regression() -> Check {
    let l = fixtures::fig5();
    ensure!(!l.is_modular(), "fig5 reported modular");
    let witness = ["0", "d", "e", "i", "1"].map(|n| id(&l, n));
    ensure!(l.is_pentagon(witness), "{{0,d,e,i,1}} is not a pentagon");
    let found = l.find_n5().ok_or("no pentagon found")?;
    ensure!(
        found == witness,
        "pentagon found: {:?}",
        found.map(|x| l.name_of(x).to_string())
    );
    let i = Interval::named(&l, "e", "1").unwrap();
    let (h, ie) = (id(&l, "h"), id(&l, "i"));
    expect_set(&l, "h+", &complements(&l, h), &["a", "b"])?;
    expect_set(&l, "bar h_e1", &bar(&i, h).unwrap(), &["f", "g"])?;
    expect_set(&l, "hat h_e1", &hat(&i, h).unwrap(), &["f", "g"])?;
    expect_set(
        &l,
        "h^e1",
        &rel_complements(&i, h).unwrap(),
        &["f", "g", "i"],
    )?;
    expect_set(&l, "i+", &complements(&l, ie), &["a", "b", "c", "d"])?;
    expect_set(&l, "bar i_e1", &bar(&i, ie).unwrap(), &["f", "g", "h", "1"])?;
    expect_set(&l, "hat i_e1", &hat(&i, ie).unwrap(), &["f", "g", "h", "1"])?;
    expect_set(
        &l,
        "i^e1",
        &rel_complements(&i, ie).unwrap(),
        &["f", "g", "h"],
    )?;
    let (hb, hr) = (bar(&i, h).unwrap(), rel_complements(&i, h).unwrap());
    let (ib, ir) = (bar(&i, ie).unwrap(), rel_complements(&i, ie).unwrap());
    ensure!(
        hb.is_subset(&hr) && hb != hr,
        "bar h_e1 not strictly inside h^e1"
    );
    ensure!(
        ir.is_subset(&ib) && ib != ir,
        "bar i_e1 does not strictly contain i^e1"
    );
    Ok(())
}

fn product_at_scale() -> Check {
    let factors = [Factor::Boolean(2), Factor::M(3), Factor::M(4)];
    let r = verify_product_identity(&factors).map_err(|e| e.to_string())?;
    let built: Vec<Lattice> = factors.iter().map(|f| f.build().unwrap()).collect();
    let refs: Vec<&Lattice> = built.iter().collect();
    let l = Lattice::direct_product(&refs).unwrap();
    ensure!(l.len() == 120, "product has {} elements", l.len());
    ensure!(r.holds, "{}", r.render(&l));
    ensure!(r.checked_instances > 0, "nothing checked");
    Ok(())
}

fn enumeration_suite() -> Check {
    for n in 1..=5 {
        let oracle = common::brute_force_lattices(n);
        let ours: BTreeSet<Vec<bool>> = enumerate_lattices(n)
            .unwrap()
            .iter()
            .map(common::canonical_of)
            .collect();
        ensure!(
            ours == oracle,
            "n={n}: {} lattices, oracle {}",
            ours.len(),
            oracle.len()
        );
    }
    let run = run_suite(6, &["all"]).map_err(|e| e.to_string())?;
    let counts: Vec<usize> = run.count_by_size.values().copied().collect();
    ensure!(counts == [1, 1, 1, 2, 5, 15], "counts {counts:?}");
    ensure!(run.failures.is_empty(), "{}", run.render());
    ensure!(run.checked_instances > 0, "nothing checked");
    Ok(())
}

fn closed_family_oracle() -> Check {
    let mut lattices: Vec<Lattice> = fixtures::ALL
        .iter()
        .map(|(_, text)| parse_lattice(text).unwrap())
        .collect();
    lattices.push(Lattice::mn(3).unwrap());
    let mut compared = 0;
    for l in &lattices {
        for i in Interval::all(l) {
            let t = RelComplementTable::new(&i);
            if i.is_degenerate() || !t.is_complemented() || i.len() > 16 {
                continue;
            }
            let family = ClosedFamily::new(&i).map_err(|e| e.to_string())?;
            let ours: BTreeSet<BTreeSet<usize>> = family.sets().iter().map(common::ids).collect();
            ensure!(
                ours == common::closed_family(&i),
                "{} {}: seeded family differs from the subset scan",
                l.name(),
                i.label()
            );
            family
                .check_axioms()
                .map_err(|e| format!("{} {}: {e}", l.name(), i.label()))?;
            compared += 1;
        }
    }
    ensure!(compared > 0, "no interval compared");
    let m3 = Lattice::mn(3).unwrap();
    let n = ClosedFamily::new(&Interval::whole(&m3)).unwrap().len();
    ensure!(n == 10, "M3 [0,1] has {n} closed sets");
    Ok(())
}

fn pattern_machinery() -> Check {
    let p = fixtures::fig6_pattern();
    let own = find_pattern(&p, &p);
    ensure!(
        own.len() == 1,
        "fig6 pattern has {} anchored self-matches",
        own.len()
    );
    let r = verify_remark_patterns(&p);
    ensure!(
        r.holds && r.checked_instances > 0,
        "remark patterns on fig6: {}",
        r.render(&p)
    );
    let l = fixtures::fig1();
    for kind in PatternKind::ALL {
        let n = find_pattern(&l, &kind.lattice()).len();
        ensure!(n == 0, "fig1 contains {n} {} pattern copies", kind.label());
    }
    let r = verify_distinct_induced(&l);
    ensure!(
        r.holds,
        "distinct complements do not always induce distinct elements in fig1: {}",
        r.counterexample
            .as_ref()
            .map_or(String::new(), |w| w.render(&l))
    );
    Ok(())
}

fn cli_determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_relcomp");
    let run = || {
        Command::new(bin)
            .arg("paper-regress")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure!(
        a.stdout == b.stdout,
        "paper-regress output differs between runs"
    );
    for (name, text) in fixtures::ALL {
        let l = parse_lattice(text).map_err(|e| format!("{name}: {e}"))?;
        let printed = print_lattice(&l);
        let back = parse_lattice(&printed).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            back == l && print_lattice(&back) == printed,
            "{name}: round trip changed the lattice"
        );
    }
    ensure!(
        a.status.code() == Some(0),
        "paper-regress exited with {:?}:\n{}",
        a.status.code(),
        String::from_utf8_lossy(&a.stdout)
            .lines()
            .filter(|l| l.starts_with("FAIL"))
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fig. 1 regression", Duration::from_secs(1), fig1_regression),
        ("fig. 2 regression", Duration::from_secs(5), fig2_regression),
        ("fig. 4 regression", Duration::from_secs(2), fig4_regression),
        ("fig. 5 regression", Duration::from_secs(1), fig5_regression),
        (
            "product identity on 2^2 x M3 x M4",
            Duration::from_secs(120),
            product_at_scale,
        ),
        (
            "enumeration suite up to 6 elements",
            Duration::from_secs(300),
            enumeration_suite,
        ),
        (
            "closed-family oracle",
            Duration::from_secs(30),
            closed_family_oracle,
        ),
        (
            "pattern machinery",
            Duration::from_secs(5),
            pattern_machinery,
        ),
        ("CLI determinism", Duration::from_secs(60), cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            if took > budget {
                Err(format!("took {took:.2?}, budget {budget:?}"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("PASS {}. {name} ({took:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} ({took:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
