//! DIMACS graph format: `c` comment lines, one `p edge <n> <m>` problem
//! line, then `e <u> <v>` edge lines with 1-based endpoints.
//!
//! The reader is strict about structure (problem line before edges,
//! endpoints in range, no self-loops) and lenient about noise (comments,
//! blank lines, extra whitespace). Duplicate edges collapse to one; that
//! and a declared edge count that disagrees with the distinct count are
//! reported as warnings on the parsed instance, not errors. The writer
//! emits a canonical form — problem line, then edges sorted ascending —
//! so equal graphs always serialize to equal bytes.

use std::io::{BufRead, Write};

use crate::error::Error;
use crate::graph::Graph;

/// A parsed graph plus any non-fatal irregularities in its source.
#[derive(Debug)]
pub struct DimacsInstance {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<DimacsInstance, Error> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace();
        let Some(kind) = tokens.next() else {
            continue; // blank line
        };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::Input(format!(
                        "line {lineno}: second problem line"
                    )));
                }
                let rest: Vec<&str> = tokens.collect();
                let [format, n, m] = rest.as_slice() else {
                    return Err(Error::Input(format!(
                        "line {lineno}: problem line needs the form 'p edge <n> <m>'"
                    )));
                };
                if *format != "edge" {
                    return Err(Error::Input(format!(
                        "line {lineno}: unsupported format '{format}', expected 'edge'"
                    )));
                }
                let n = parse_count(n, lineno, "vertex count")?;
                let m = parse_count(m, lineno, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::Input(format!(
                        "line {lineno}: edge before the problem line"
                    )));
                };
                let rest: Vec<&str> = tokens.collect();
                let [u, v] = rest.as_slice() else {
                    return Err(Error::Input(format!(
                        "line {lineno}: edge line needs the form 'e <u> <v>'"
                    )));
                };
                let u = parse_count(u, lineno, "endpoint")?;
                let v = parse_count(v, lineno, "endpoint")?;
                // DIMACS vertices are 1-based
                if u < 1 || u > n || v < 1 || v > n {
                    return Err(Error::Input(format!(
                        "line {lineno}: endpoint out of range 1..={n}"
                    )));
                }
                if u == v {
                    return Err(Error::Input(format!(
                        "line {lineno}: self-loop at vertex {u}"
                    )));
                }
                edges.push((u - 1, v - 1));
                edge_lines += 1;
            }
            other => {
                return Err(Error::Input(format!(
                    "line {lineno}: unrecognized line type '{other}'"
                )));
            }
        }
    }
    let Some((n, declared_m)) = header else {
        return Err(Error::Input("no problem line found".into()));
    };
    let graph = Graph::from_edges(n, &edges)?;
    let mut warnings = Vec::new();
    let distinct = graph.edge_count();
    if distinct != edge_lines {
        warnings.push(format!(
            "{} duplicate edge line(s) collapsed",
            edge_lines - distinct
        ));
    }
    if declared_m != distinct {
        warnings.push(format!(
            "problem line declares {declared_m} edges but the file has {distinct} distinct"
        ));
    }
    Ok(DimacsInstance { graph, warnings })
}

fn parse_count(token: &str, lineno: usize, what: &str) -> Result<usize, Error> {
    token.parse().map_err(|_| {
        Error::Input(format!("line {lineno}: {what} '{token}' is not a number"))
    })
}

pub fn parse_dimacs(text: &str) -> Result<DimacsInstance, Error> {
    read_dimacs(text.as_bytes())
}

pub fn read_dimacs_file(path: &std::path::Path) -> Result<DimacsInstance, Error> {
    let file = std::fs::File::open(path)?;
    read_dimacs(std::io::BufReader::new(file))
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn to_dimacs_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("DIMACS output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_plain_five_cycle() {
        let text = "c a five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
        let inst = parse_dimacs(text).unwrap();
        assert_eq!(inst.graph.n(), 5);
        assert_eq!(
            inst.graph.edges(),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );
        assert!(inst.warnings.is_empty(), "got: {:?}", inst.warnings);
    }

    #[test]
    fn tolerates_noise_between_lines() {
        let text = "c header\n\n  \nc more\np edge  3   2\n c indented comment\ne  1\t2\ne 2 3\n";
        let inst = parse_dimacs(text).unwrap();
        assert_eq!(inst.graph.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn collapses_duplicates_with_a_warning() {
        let text = "p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n";
        let inst = parse_dimacs(text).unwrap();
        assert_eq!(inst.graph.edge_count(), 2);
        assert_eq!(inst.warnings.len(), 2, "duplicate + count mismatch: {:?}", inst.warnings);
        assert!(inst.warnings[0].contains("duplicate"));
        assert!(inst.warnings[1].contains("declares 3"));
    }

    #[test]
    fn warns_when_the_declared_count_is_off() {
        let inst = parse_dimacs("p edge 4 9\ne 1 2\n").unwrap();
        assert_eq!(inst.warnings.len(), 1);
        assert!(inst.warnings[0].contains("declares 9"));
    }

    #[test]
    fn rejects_malformed_inputs() {
        let cases: &[(&str, &str)] = &[
            ("e 1 2\np edge 3 1\n", "edge before"),
            ("p edge 3 0\np edge 3 0\n", "second problem line"),
            ("p edge x 0\n", "not a number"),
            ("p col 3 0\n", "unsupported format"),
            ("p edge 3\n", "problem line needs"),
            ("p edge 3 1\ne 1\n", "edge line needs"),
            ("p edge 3 1\ne 0 2\n", "out of range"),
            ("p edge 3 1\ne 1 4\n", "out of range"),
            ("p edge 3 1\ne 2 2\n", "self-loop"),
            ("p edge 3 1\nq 1 2\n", "unrecognized"),
            ("c only comments\n", "no problem line"),
        ];
        for (text, needle) in cases {
            match parse_dimacs(text) {
                Err(Error::Input(message)) => {
                    assert!(
                        message.contains(needle),
                        "for {text:?} expected {needle:?} in {message:?}"
                    );
                }
                other => panic!("expected an input error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn writes_a_canonical_form() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (0, 3)]).unwrap();
        assert_eq!(to_dimacs_string(&g), "p edge 4 3\ne 1 2\ne 1 4\ne 3 4\n");
        assert_eq!(to_dimacs_string(&Graph::empty(0)), "p edge 0 0\n");
        assert_eq!(to_dimacs_string(&Graph::empty(3)), "p edge 3 0\n");
    }

    #[test]
    fn round_trips_preserve_the_graph_and_the_bytes() {
        let graphs = [
            Graph::empty(0),
            Graph::empty(6),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            Graph::from_edges(7, &[(0, 6), (5, 6), (1, 2)]).unwrap(),
        ];
        for g in &graphs {
            let text = to_dimacs_string(g);
            let back = parse_dimacs(&text).unwrap();
            assert!(back.warnings.is_empty());
            assert_eq!(back.graph.n(), g.n());
            assert_eq!(back.graph.edges(), g.edges());
            assert_eq!(to_dimacs_string(&back.graph), text, "writer is idempotent");
        }
    }
}
