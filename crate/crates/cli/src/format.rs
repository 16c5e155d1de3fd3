//! Edge-list text format.
//!
//! ```text
//! # comment
//! vertices: a b c d
//! a b
//! b c
//! ```
//!
//! Each non-comment line is either the `vertices:` header or an edge given as
//! two whitespace-separated labels. Repeated edges collapse to one.

use std::fmt::Write;

use geodom::{Graph, GraphBuilder};

pub const HEADER: &str = "vertices:";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: expected `u v` or `{HEADER} ...`, found `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop on `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("no vertices declared")]
    Empty,
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut builder = GraphBuilder::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if let Some(rest) = tokens.first().and_then(|t| t.strip_prefix(HEADER)) {
            // `vertices:a b` is read the same as `vertices: a b`.
            let labels = std::iter::once(rest).chain(tokens[1..].iter().copied());
            for label in labels.filter(|l| !l.is_empty()) {
                builder.add_vertex(label);
            }
            continue;
        }
        match tokens[..] {
            [u, v] if u == v => {
                return Err(ParseError::SelfLoop {
                    line,
                    label: u.to_string(),
                })
            }
            [u, v] => builder.add_edge(u, v).expect("distinct endpoints"),
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    if builder.vertex_count() == 0 {
        return Err(ParseError::Empty);
    }
    Ok(builder.build().expect("labels are unique and edges are loop-free"))
}

/// Header with every vertex, then one line per edge in index order.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::from(HEADER);
    for label in g.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_of_three() {
        let g = parse_graph("a b\nb c").unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("a b\nb a\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn self_loop() {
        assert_eq!(
            parse_graph("a b\na a"),
            Err(ParseError::SelfLoop {
                line: 2,
                label: "a".into()
            })
        );
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = parse_graph("# header\na b\n\na b c\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Malformed {
                line: 4,
                content: "a b c".into()
            }
        );
        assert!(err.to_string().starts_with("line 4:"));
        assert!(matches!(parse_graph("lonely"), Err(ParseError::Malformed { line: 1, .. })));
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(parse_graph(""), Err(ParseError::Empty));
        assert_eq!(parse_graph("# nothing\n\n"), Err(ParseError::Empty));
        assert_eq!(parse_graph("vertices:"), Err(ParseError::Empty));
    }

    #[test]
    fn header_declares_isolated_vertices() {
        let g = parse_graph("vertices: z\n  # indented comment\na b\n").unwrap();
        assert_eq!(g.order(), 3);
        assert!(!g.is_connected());
        assert_eq!(parse_graph("vertices:z").unwrap().labels(), &["z"]);
    }

    #[test]
    fn emit_round_trips() {
        let g = parse_graph("c d\na b\nb c\nvertices: e\n").unwrap();
        let text = emit_graph(&g);
        assert_eq!(text, "vertices: a b c d e\na b\nb c\nc d\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
