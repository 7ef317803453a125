//! Tab-separated partition and edge-list files.
//!
//! Partition files start with `#multinet-partition v1` and hold one record per state
//! node, `node<TAB>a1,...,ad<TAB>label`, sorted by (flat layer, node). Network files
//! start with `#multinet-edges v1 undirected` (or `directed`) and hold one record per
//! edge, `a1,...,ad<TAB>i<TAB>b1,...,bd<TAB>j<TAB>weight`. All indices are 1-based.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::model::{AspectSpec, Edge, MultilayerNetwork, MultilayerPartition, MultilayerShape, StateNode};

pub const PARTITION_HEADER: &str = "#multinet-partition v1";
pub const NETWORK_HEADER: &str = "#multinet-edges v1";

fn coords(shape: &MultilayerShape, layer: usize) -> String {
    let c = shape.unflatten(layer).expect("layer index in range");
    c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")
}

pub fn write_partition<W: Write>(partition: &MultilayerPartition, mut out: W) -> Result<()> {
    let shape = partition.shape();
    writeln!(out, "{PARTITION_HEADER}")?;
    for layer in 0..shape.layer_count() {
        let c = coords(shape, layer);
        for (i, label) in partition.induced(layer).iter().enumerate() {
            writeln!(out, "{}\t{c}\t{label}", i + 1)?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_network<W: Write>(network: &MultilayerNetwork, mut out: W) -> Result<()> {
    let shape = network.shape();
    let kind = if network.is_directed() { "directed" } else { "undirected" };
    writeln!(out, "{NETWORK_HEADER} {kind}")?;
    for e in network.edges() {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            coords(shape, e.source.layer),
            e.source.node + 1,
            coords(shape, e.target.layer),
            e.target.node + 1,
            e.weight
        )?;
    }
    out.flush()?;
    Ok(())
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_index(field: &str, line: usize, what: &str) -> Result<usize> {
    match field.trim().parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(parse_err(line, format!("{what} {field:?} is not a positive integer"))),
    }
}

fn parse_coords(field: &str, line: usize) -> Result<Vec<usize>> {
    field.split(',').map(|c| parse_index(c, line, "layer coordinate")).collect()
}

// Records after the header, with 1-based line numbers.
fn records<R: BufRead>(input: R, header: &str) -> Result<(String, Vec<(usize, String)>)> {
    let mut lines = input.lines();
    let first = lines.next().ok_or_else(|| parse_err(1, "empty file"))??;
    if !first.starts_with(header) {
        return Err(parse_err(1, format!("expected header {header:?}")));
    }
    let mut out = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        out.push((k + 2, line));
    }
    Ok((first, out))
}

// Shape with aspect sizes taken from the largest coordinates seen. Ordering is not
// recorded in the files, so inferred aspects are unordered.
fn infer_shape(nodes: usize, maxima: &[usize]) -> Result<MultilayerShape> {
    MultilayerShape::new(nodes, maxima.iter().map(|&m| AspectSpec::unordered(m + 1)).collect())
}

fn update_maxima(maxima: &mut Vec<usize>, c: &[usize], line: usize) -> Result<()> {
    if maxima.is_empty() {
        maxima.resize(c.len(), 0);
    }
    if maxima.len() != c.len() {
        return Err(parse_err(line, format!("expected {} layer coordinates", maxima.len())));
    }
    for (m, &x) in maxima.iter_mut().zip(c) {
        *m = (*m).max(x);
    }
    Ok(())
}

/// Reads a partition file. With `shape` the records are checked against it;
/// without, the shape is inferred (aspects marked unordered).
pub fn read_partition<R: BufRead>(input: R, shape: Option<&MultilayerShape>) -> Result<MultilayerPartition> {
    let (_, lines) = records(input, PARTITION_HEADER)?;
    let mut rows = Vec::with_capacity(lines.len());
    let mut maxima = Vec::new();
    let mut max_node = 0;
    for (line, text) in &lines {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 3 {
            return Err(parse_err(*line, "expected node, layer and label separated by tabs"));
        }
        let node = parse_index(fields[0], *line, "node")?;
        let c = parse_coords(fields[1], *line)?;
        let label = parse_index(fields[2], *line, "label")? + 1;
        update_maxima(&mut maxima, &c, *line)?;
        max_node = max_node.max(node);
        rows.push((*line, node, c, label));
    }
    if rows.is_empty() {
        return Err(parse_err(1, "no records"));
    }
    let shape = match shape {
        Some(s) => s.clone(),
        None => infer_shape(max_node + 1, &maxima)?,
    };
    let mut labels = vec![0usize; shape.state_node_count()];
    for (line, node, c, label) in rows {
        let layer = shape.flatten(&c).map_err(|e| parse_err(line, e.to_string()))?;
        let s = StateNode::new(node, layer);
        shape.check_state_node(s).map_err(|e| parse_err(line, e.to_string()))?;
        let slot = &mut labels[shape.supra_index(s)];
        if *slot != 0 {
            return Err(parse_err(line, "state node listed twice"));
        }
        *slot = label;
    }
    if let Some(k) = labels.iter().position(|&x| x == 0) {
        let s = shape.state_node_at(k);
        return Err(parse_err(
            0,
            format!("no label for node {} in layer ({})", s.node + 1, coords(&shape, s.layer)),
        ));
    }
    MultilayerPartition::from_labels(shape, labels)
}

/// Reads a network file; see [`read_partition`] for the role of `shape`.
pub fn read_network<R: BufRead>(input: R, shape: Option<&MultilayerShape>) -> Result<MultilayerNetwork> {
    let (header, lines) = records(input, NETWORK_HEADER)?;
    let directed = match header[NETWORK_HEADER.len()..].trim() {
        "undirected" => false,
        "directed" => true,
        other => return Err(parse_err(1, format!("unknown network kind {other:?}"))),
    };
    let mut rows = Vec::with_capacity(lines.len());
    let mut maxima = Vec::new();
    let mut max_node = 0;
    for (line, text) in &lines {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 5 {
            return Err(parse_err(*line, "expected 5 tab-separated fields"));
        }
        let ca = parse_coords(fields[0], *line)?;
        let i = parse_index(fields[1], *line, "node")?;
        let cb = parse_coords(fields[2], *line)?;
        let j = parse_index(fields[3], *line, "node")?;
        let weight: f64 = fields[4]
            .trim()
            .parse()
            .map_err(|_| parse_err(*line, format!("weight {:?} is not a number", fields[4])))?;
        update_maxima(&mut maxima, &ca, *line)?;
        update_maxima(&mut maxima, &cb, *line)?;
        max_node = max_node.max(i).max(j);
        rows.push((*line, ca, i, cb, j, weight));
    }
    let shape = match shape {
        Some(s) => s.clone(),
        None if rows.is_empty() => return Err(parse_err(1, "cannot infer a shape without edges")),
        None => infer_shape(max_node + 1, &maxima)?,
    };
    let mut edges = Vec::with_capacity(rows.len());
    for (line, ca, i, cb, j, weight) in rows {
        let a = shape.flatten(&ca).map_err(|e| parse_err(line, e.to_string()))?;
        let b = shape.flatten(&cb).map_err(|e| parse_err(line, e.to_string()))?;
        edges.push(Edge {
            source: StateNode::new(i, a),
            target: StateNode::new(j, b),
            weight,
        });
    }
    MultilayerNetwork::new(shape, directed, edges)
}
