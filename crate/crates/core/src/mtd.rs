//! The MTD v1 tournament file format.
//!
//! Line-oriented UTF-8; `#` starts a comment, blank lines are ignored:
//!
//! ```text
//! mtd 1
//! part <name> <v1> <v2> ...   # one line per part, at least three
//! arc <u> <v>                 # u -> v, exactly one line per cross pair
//! ```
//!
//! Names are nonempty ASCII tokens without whitespace. Canonical
//! serialization lists parts and their vertices in declaration order and
//! arcs sorted by (tail, head) in canonical vertex order, so parsing a
//! canonically ordered document and serializing it again is byte-identical.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::tournament::{MultipartiteTournament, Partition};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn check_token(line: usize, token: &str) -> Result<()> {
    if token.is_ascii() {
        Ok(())
    } else {
        Err(syntax(line, format!("non-ASCII name `{token}`")))
    }
}

/// Parses and validates an MTD v1 document.
pub fn parse_mtd(text: &str) -> Result<MultipartiteTournament> {
    let mut parts: Vec<(String, Vec<String>)> = Vec::new();
    let mut arcs: Vec<(String, String)> = Vec::new();
    let mut arc_lines: Vec<usize> = Vec::new();
    let mut header_seen = false;
    let mut arcs_started = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if !header_seen {
            if tokens != ["mtd", "1"] {
                return Err(syntax(line_no, "expected header `mtd 1`"));
            }
            header_seen = true;
            continue;
        }
        match tokens[0] {
            "part" => {
                if arcs_started {
                    return Err(syntax(line_no, "part line after arc lines"));
                }
                if tokens.len() < 3 {
                    return Err(syntax(line_no, "part needs a name and at least one vertex"));
                }
                for t in &tokens[1..] {
                    check_token(line_no, t)?;
                }
                parts.push((
                    tokens[1].to_string(),
                    tokens[2..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            "arc" => {
                if parts.is_empty() {
                    return Err(syntax(line_no, "arc before any part line"));
                }
                arcs_started = true;
                if tokens.len() != 3 {
                    return Err(syntax(line_no, "arc needs exactly two vertices"));
                }
                check_token(line_no, tokens[1])?;
                check_token(line_no, tokens[2])?;
                if tokens[1] == tokens[2] {
                    return Err(syntax(line_no, format!("self-loop at `{}`", tokens[1])));
                }
                arcs.push((tokens[1].to_string(), tokens[2].to_string()));
                arc_lines.push(line_no);
            }
            other => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
        }
    }

    if !header_seen {
        return Err(syntax(1, "missing header `mtd 1`"));
    }
    if parts.is_empty() {
        return Err(syntax(text.lines().count().max(1), "no part lines"));
    }

    // Line-attributed duplicate/orientation checks before whole-document
    // validation.
    let mut seen: std::collections::HashSet<(&str, &str)> = std::collections::HashSet::new();
    for (k, (u, v)) in arcs.iter().enumerate() {
        let line_no = arc_lines[k];
        if seen.contains(&(u.as_str(), v.as_str())) {
            return Err(syntax(line_no, format!("duplicate arc `{u} {v}`")));
        }
        if seen.contains(&(v.as_str(), u.as_str())) {
            return Err(syntax(
                line_no,
                format!("both orientations between `{u}` and `{v}`"),
            ));
        }
        seen.insert((u, v));
    }

    let partition = Partition::new(parts)?;
    let labels: Vec<String> = partition.canonical_vertices().map(String::from).collect();
    let arc_refs: Vec<(&str, &str)> = arcs.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
    let digraph = Digraph::new(labels, &arc_refs)?;
    MultipartiteTournament::validate(&digraph, &partition)
}

/// Canonical MTD v1 serialization.
pub fn serialize_mtd(d: &MultipartiteTournament) -> String {
    let mut out = String::from("mtd 1\n");
    for (name, members) in d.partition().parts() {
        out.push_str("part ");
        out.push_str(name);
        for v in members {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
    }
    for (u, v) in d.digraph().arcs() {
        out.push_str("arc ");
        out.push_str(d.digraph().label(u));
        out.push(' ');
        out.push_str(d.digraph().label(v));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::Fixture;

    #[test]
    fn fixture_round_trips() {
        for f in [Fixture::T3, Fixture::Star5, Fixture::Sink4] {
            let d = MultipartiteTournament::fixture(f);
            let text = serialize_mtd(&d);
            let back = parse_mtd(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(serialize_mtd(&back), text);
        }
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a fixture\nmtd 1\n\npart X1 a  # singleton\npart X2 b\npart X3 c\narc a b\narc b c\narc c a\n";
        let d = parse_mtd(text).unwrap();
        assert_eq!(d, MultipartiteTournament::fixture(Fixture::T3));
    }

    #[test]
    fn syntax_errors() {
        let loops = "mtd 1\npart X1 u1\npart X2 u2\npart X3 u3\narc u1 u1\n";
        assert_eq!(
            parse_mtd(loops),
            Err(Error::Syntax {
                line: 5,
                message: "self-loop at `u1`".into()
            })
        );

        let no_parts = "mtd 1\narc a b\n";
        assert!(matches!(
            parse_mtd(no_parts),
            Err(Error::Syntax { line: 2, .. })
        ));

        let no_header = "part X1 a\n";
        assert!(matches!(
            parse_mtd(no_header),
            Err(Error::Syntax { line: 1, .. })
        ));

        let dup = "mtd 1\npart X1 a\npart X2 b\npart X3 c\narc a b\narc a b\n";
        assert!(matches!(parse_mtd(dup), Err(Error::Syntax { line: 6, .. })));

        let both = "mtd 1\npart X1 a\npart X2 b\npart X3 c\narc a b\narc b a\n";
        assert!(matches!(
            parse_mtd(both),
            Err(Error::Syntax { line: 6, .. })
        ));
    }

    #[test]
    fn validation_errors_surface() {
        let missing = "mtd 1\npart X1 a\npart X2 b\npart X3 c\narc a b\narc b c\n";
        assert_eq!(
            parse_mtd(missing),
            Err(Error::MissingCrossArc("a".into(), "c".into()))
        );
        let few = "mtd 1\npart X1 a\npart X2 b\narc a b\n";
        assert_eq!(parse_mtd(few), Err(Error::TooFewParts(2)));
    }
}
