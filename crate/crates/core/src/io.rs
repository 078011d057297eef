//! Text formats for edges and vertex weights.
//!
//! Edge file: UTF-8, one edge per line as `<upper> <lower>` with 1-based
//! per-layer ids separated by whitespace. Extra columns are ignored. Lines
//! whose first non-blank character is `%` are comments; blank lines are
//! skipped.
//!
//! Weight file: one vertex per line as `U <id> <weight>` or
//! `V <id> <weight>`, 1-based ids, non-negative integer weights. Comments
//! and blank lines as above. Vertices without a line get weight 1.
//!
//! The layer sizes of the loaded graph are the largest ids mentioned for
//! each layer across both files.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{WeightedBipartiteGraph, MAX_WEIGHT};

pub const DEFAULT_WEIGHT: u64 = 1;

pub fn load_graph<E, W>(edges: E, weights: Option<W>) -> Result<WeightedBipartiteGraph>
where
    E: BufRead,
    W: BufRead,
{
    let mut pairs = Vec::new();
    let mut upper_count = 0usize;
    let mut lower_count = 0usize;

    for (idx, line) in edges.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let Some(mut fields) = data_fields(&line) else {
            continue;
        };
        let u = parse_id(fields.next(), line_no, "upper id")?;
        let v = parse_id(fields.next(), line_no, "lower id")?;
        upper_count = upper_count.max(u as usize);
        lower_count = lower_count.max(v as usize);
        pairs.push((u - 1, v - 1));
    }

    let mut upper_w: HashMap<u32, u64> = HashMap::new();
    let mut lower_w: HashMap<u32, u64> = HashMap::new();
    if let Some(weights) = weights {
        for (idx, line) in weights.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let Some(mut fields) = data_fields(&line) else {
                continue;
            };
            let table = match fields.next() {
                Some("U") => &mut upper_w,
                Some("V") => &mut lower_w,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!(
                            "expected layer tag U or V, found {:?}",
                            other.unwrap_or("")
                        ),
                    })
                }
            };
            let id = parse_id(fields.next(), line_no, "vertex id")?;
            let w = parse_weight(fields.next(), line_no)?;
            if table.insert(id, w).is_some() {
                return Err(Error::Validation(format!(
                    "line {line_no}: duplicate weight for vertex {id}"
                )));
            }
        }
    }
    upper_count = upper_count.max(upper_w.keys().max().copied().unwrap_or(0) as usize);
    lower_count = lower_count.max(lower_w.keys().max().copied().unwrap_or(0) as usize);

    let expand = |count: usize, table: &HashMap<u32, u64>| -> Vec<u64> {
        (1..=count as u32)
            .map(|id| table.get(&id).copied().unwrap_or(DEFAULT_WEIGHT))
            .collect()
    };
    WeightedBipartiteGraph::from_edges(
        upper_count,
        lower_count,
        pairs,
        expand(upper_count, &upper_w),
        expand(lower_count, &lower_w),
    )
}

/// Convenience wrapper over [`load_graph`] for in-memory text.
pub fn parse_graph(edges: &str, weights: Option<&str>) -> Result<WeightedBipartiteGraph> {
    load_graph(edges.as_bytes(), weights.map(str::as_bytes))
}

pub fn write_edges<W: Write>(graph: &WeightedBipartiteGraph, mut out: W) -> Result<()> {
    writeln!(
        out,
        "% bip unweighted {} {} {}",
        graph.edge_count(),
        graph.upper_count(),
        graph.lower_count()
    )?;
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", u + 1, v + 1)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_weights<W: Write>(graph: &WeightedBipartiteGraph, mut out: W) -> Result<()> {
    for (i, w) in graph.upper_weights().iter().enumerate() {
        writeln!(out, "U {} {}", i + 1, w)?;
    }
    for (i, w) in graph.lower_weights().iter().enumerate() {
        writeln!(out, "V {} {}", i + 1, w)?;
    }
    out.flush()?;
    Ok(())
}

fn data_fields(line: &str) -> Option<std::str::SplitWhitespace<'_>> {
    let trimmed = line.trim_start();
    if trimmed.is_empty() || trimmed.starts_with('%') {
        None
    } else {
        Some(trimmed.split_whitespace())
    }
}

fn parse_id(field: Option<&str>, line: usize, what: &str) -> Result<u32> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    let value: i64 = field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} {field:?} is not an integer"),
    })?;
    if value <= 0 {
        return Err(Error::Validation(format!(
            "line {line}: {what} must be a positive 1-based id, found {value}"
        )));
    }
    u32::try_from(value)
        .map_err(|_| Error::Validation(format!("line {line}: {what} {value} too large")))
}

fn parse_weight(field: Option<&str>, line: usize) -> Result<u64> {
    let field = field.ok_or_else(|| Error::Parse {
        line,
        message: "missing weight".into(),
    })?;
    match field.parse::<i128>() {
        Ok(w) if w < 0 => Err(Error::Validation(format!(
            "line {line}: negative weight {w}"
        ))),
        Ok(w) if w > MAX_WEIGHT as i128 => Err(Error::Validation(format!(
            "line {line}: weight {w} exceeds the limit {MAX_WEIGHT}"
        ))),
        Ok(w) => Ok(w as u64),
        Err(_) if field.parse::<f64>().is_ok() => Err(Error::Validation(format!(
            "line {line}: weight {field} is not an integer"
        ))),
        Err(_) => Err(Error::Parse {
            line,
            message: format!("weight {field:?} is not a number"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_duplicates() {
        let g = parse_graph("%hdr\n1 1\n1 2\n2 1\n1 1\n", None).unwrap();
        assert_eq!(
            (g.upper_count(), g.lower_count(), g.edge_count()),
            (2, 2, 3)
        );
        assert!(g
            .upper_weights()
            .iter()
            .chain(g.lower_weights())
            .all(|&w| w == 1));
    }

    #[test]
    fn empty_stream() {
        let g = parse_graph("", None).unwrap();
        assert_eq!(
            (g.upper_count(), g.lower_count(), g.edge_count()),
            (0, 0, 0)
        );
    }

    #[test]
    fn malformed_line_names_line_number() {
        match parse_graph("1 x", None) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph("% c\n1 2\n3\n", None) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn extra_columns_ignored() {
        let g = parse_graph("1 2 1 1234567\n  2 1\t9\n", None).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn zero_id_is_a_validation_error() {
        assert!(matches!(
            parse_graph("0 1\n", None),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn weights_file() {
        let g = parse_graph("1 1\n2 1\n", Some("% w\nU 2 7\nV 1 0\nV 3 4\n")).unwrap();
        assert_eq!(g.upper_weights(), &[1, 7]);
        // V 3 extends the lower layer with an isolated vertex.
        assert_eq!(g.lower_weights(), &[0, 1, 4]);
    }

    #[test]
    fn weight_errors() {
        assert!(matches!(
            parse_graph("1 1\n", Some("U 1 -3\n")),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_graph("1 1\n", Some("U 1 2.5\n")),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_graph("1 1\n", Some("U 0 2\n")),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_graph("1 1\n", Some("U 1 2\nU 1 3\n")),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_graph("1 1\n", Some("W 1 2\n")),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("1 1\n", Some("U 1 abc\n")),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn write_then_load_is_lossless() {
        let g = WeightedBipartiteGraph::from_edges(
            3,
            4,
            [(0, 0), (2, 1)],
            vec![5, 0, 9],
            vec![1, 2, 3, 4],
        )
        .unwrap();
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        write_edges(&g, &mut edges).unwrap();
        write_weights(&g, &mut weights).unwrap();
        let back = load_graph(edges.as_slice(), Some(weights.as_slice())).unwrap();
        assert_eq!(back, g);
    }
}
