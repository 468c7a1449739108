//! The `.lat` text format.
//!
//! Line oriented. `#` starts a comment that runs to the end of the line and
//! tokens are separated by whitespace. Three directives:
//!
//! ```text
//! lattice <name>          # optional, at most once
//! elem <name>+            # may repeat; names accumulate in order
//! cover <lower> <upper>
//! ```

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

const DEFAULT_NAME: &str = "unnamed";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut name: Option<String> = None;
    let mut elems: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut covers: Vec<(usize, String, String)> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(directive) = toks.next() else {
            continue;
        };
        let args: Vec<&str> = toks.collect();
        match directive {
            "lattice" => {
                if name.is_some() {
                    return Err(parse_err(line, "`lattice` given twice"));
                }
                match args.as_slice() {
                    [n] => name = Some(n.to_string()),
                    _ => return Err(parse_err(line, "`lattice` takes exactly one name")),
                }
            }
            "elem" => {
                if args.is_empty() {
                    return Err(parse_err(line, "`elem` needs at least one name"));
                }
                for a in args {
                    if !seen.insert(a.to_string()) {
                        return Err(parse_err(line, format!("duplicate element name `{a}`")));
                    }
                    elems.push(a.to_string());
                }
            }
            "cover" => match args.as_slice() {
                [lo, hi] => covers.push((line, lo.to_string(), hi.to_string())),
                _ => return Err(parse_err(line, "`cover` takes a lower and an upper name")),
            },
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }

    if elems.is_empty() {
        return Err(parse_err(last_line.max(1), "no elements declared"));
    }
    for (line, lo, hi) in &covers {
        for n in [lo, hi] {
            if !seen.contains(n) {
                return Err(parse_err(*line, format!("undeclared element `{n}`")));
            }
        }
    }
    let pairs: Vec<(String, String)> = covers.into_iter().map(|(_, l, h)| (l, h)).collect();
    Lattice::from_covers(name.as_deref().unwrap_or(DEFAULT_NAME), &elems, &pairs)
}

/// Canonical text for a lattice: name, element table, then the Hasse
/// diagram in ascending id order.
pub fn print_lattice(l: &Lattice) -> String {
    let mut out = format!(
        "lattice {}\nelem {}\n",
        l.name(),
        l.element_names().join(" ")
    );
    for (x, y) in l.covers() {
        out.push_str(&format!("cover {} {}\n", l.name_of(x), l.name_of(y)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let l = parse_lattice(
            "# pentagon\n\nlattice N5   # name\nelem 0 a b\nelem c d\ncover 0 a\ncover 0 b\n\
             cover a c\ncover c d\ncover b d\n",
        )
        .unwrap();
        assert_eq!(l.name(), "N5");
        assert_eq!(l.len(), 5);
        assert!(!l.is_modular());
    }

    #[test]
    fn empty_element_list() {
        assert!(matches!(
            parse_lattice("lattice x\n# nothing\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_lattice(""),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_names_the_element() {
        let err = parse_lattice("elem 0 a\nelem a 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "duplicate element name `a`".into()
            }
        );
    }

    #[test]
    fn other_parse_errors_carry_line_numbers() {
        let cases = [
            ("elem 0 1\ncover 0\n", 2),
            ("elem 0 1\ncover 0 2\n", 2),
            ("elem 0\nlattice a\nlattice b\n", 3),
            ("lattice a b\n", 1),
            ("elem 0\nedge 0 0\n", 2),
            ("elem\n", 1),
        ];
        for (text, line) in cases {
            match parse_lattice(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn lattice_errors_pass_through() {
        assert!(matches!(
            parse_lattice("elem x y\ncover x y\ncover y x\n"),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(
            parse_lattice("elem x y\n"),
            Err(Error::NoBounds(_))
        ));
    }

    #[test]
    fn print_then_parse_is_identity() {
        let l = Lattice::direct_product(&[&Lattice::chain(2).unwrap(), &Lattice::mn(3).unwrap()])
            .unwrap();
        let text = print_lattice(&l);
        assert_eq!(parse_lattice(&text).unwrap(), l);
        assert_eq!(print_lattice(&parse_lattice(&text).unwrap()), text);
    }
}
