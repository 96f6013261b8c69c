//! Plain-text formats.
//!
//! Graph: first line `n`, then one `u v` edge per line (0-based, `u != v`).
//! Poset: first line `n`, then one `u v` per line meaning `u < v`; the
//! transitive closure is taken and cycles are rejected.
//! Witness: graphs in the graph format separated by `---` lines.
//! Realizer: first line `n`, then one permutation of `0..n` per line, least
//! element first.
//! Interval representation: first line `n`, then `l r` for vertex 0, 1, ...
//! Vertex map: `old new` per line.
//!
//! `#` starts a comment in every format; blank lines are ignored. Errors carry
//! 1-based line numbers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graphs::{Graph, IntervalRep, MAX_VERTICES};
use crate::posets::{poset_from_relation, LinearExtension, Poset, Realizer};

pub const WITNESS_SEPARATOR: &str = "---";

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

/// Non-empty content lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn numbers<T: std::str::FromStr>(line_no: usize, line: &str) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| match tok.parse::<T>() {
            Ok(x) => Ok(x),
            Err(_) => parse_err(line_no, format!("expected an integer, found `{tok}`")),
        })
        .collect()
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, what: &str) -> Result<(usize, usize)> {
    let Some((no, line)) = lines.next() else {
        return parse_err(1, format!("missing {what} count"));
    };
    let v: Vec<usize> = numbers(no, line)?;
    match v[..] {
        [n] if n <= MAX_VERTICES => Ok((no, n)),
        [n] => parse_err(no, format!("{n} {what}s exceeds the supported maximum {MAX_VERTICES}")),
        _ => parse_err(no, format!("first line must hold the {what} count alone")),
    }
}

fn pairs<'a>(lines: impl Iterator<Item = (usize, &'a str)>, n: usize) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (no, line) in lines {
        let v: Vec<usize> = numbers(no, line)?;
        let [u, w] = v[..] else {
            return parse_err(no, "expected two integers `u v`");
        };
        if u >= n || w >= n {
            return parse_err(no, format!("vertex out of range for n = {n}"));
        }
        out.push((no, u, w));
    }
    Ok(out)
}

fn graph_from_lines<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph> {
    let (_, n) = header(&mut lines, "vertex")?;
    let mut g = Graph::new(n)?;
    for (no, u, v) in pairs(lines, n)? {
        if u == v {
            return parse_err(no, format!("self-loop at vertex {u}"));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    graph_from_lines(content_lines(text))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (_, n) = header(&mut lines, "element")?;
    let rel: Vec<(usize, usize)> = pairs(lines, n)?.into_iter().map(|(_, u, v)| (u, v)).collect();
    poset_from_relation(n, &rel)
}

/// Writes the cover relation, which closes back to the same poset.
pub fn write_poset(p: &Poset) -> String {
    let mut s = format!("{}\n", p.n());
    for (u, v) in p.covers() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Graphs separated by `---` lines. Text with no content is the empty list.
pub fn parse_witness(text: &str) -> Result<Vec<Graph>> {
    // each block remembers the line that opened it
    let mut blocks: Vec<(usize, Vec<(usize, &str)>)> = vec![(1, Vec::new())];
    for (no, line) in content_lines(text) {
        if line == WITNESS_SEPARATOR {
            blocks.push((no, Vec::new()));
        } else {
            blocks.last_mut().expect("nonempty").1.push((no, line));
        }
    }
    if blocks.len() == 1 && blocks[0].1.is_empty() {
        return Ok(Vec::new());
    }
    let mut graphs: Vec<Graph> = Vec::with_capacity(blocks.len());
    for (start, block) in blocks {
        let Some(&(first, _)) = block.first() else {
            return parse_err(start, "empty witness block");
        };
        let g = graph_from_lines(block.into_iter())?;
        if graphs.first().is_some_and(|h| h.n() != g.n()) {
            return parse_err(first, "witness graphs have different vertex counts");
        }
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn write_witness(graphs: &[Graph]) -> String {
    graphs.iter().map(write_graph).collect::<Vec<_>>().join(&format!("{WITNESS_SEPARATOR}\n"))
}

pub fn parse_realizer(text: &str) -> Result<Realizer> {
    let mut lines = content_lines(text);
    let (_, n) = header(&mut lines, "element")?;
    let mut exts = Vec::new();
    for (no, line) in lines {
        let order: Vec<usize> = numbers(no, line)?;
        let ext = LinearExtension(order);
        if ext.0.len() != n || ext.positions().is_none() {
            return parse_err(no, format!("not a permutation of 0..{n}"));
        }
        exts.push(ext);
    }
    Ok(Realizer(exts))
}

pub fn write_realizer(n: usize, r: &Realizer) -> String {
    let mut s = format!("{n}\n");
    for ext in &r.0 {
        let line: Vec<String> = ext.0.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

pub fn parse_interval_rep(text: &str) -> Result<IntervalRep> {
    let mut lines = content_lines(text);
    let (head, n) = header(&mut lines, "vertex")?;
    let mut iv = Vec::with_capacity(n);
    let mut last = head;
    for (no, line) in lines {
        let v: Vec<i64> = numbers(no, line)?;
        let [l, r] = v[..] else {
            return parse_err(no, "expected two integers `l r`");
        };
        if l > r {
            return parse_err(no, format!("left end {l} exceeds right end {r}"));
        }
        if iv.len() == n {
            return parse_err(no, format!("more than {n} intervals"));
        }
        iv.push((l, r));
        last = no;
    }
    if iv.len() != n {
        return parse_err(last, format!("expected {n} intervals, found {}", iv.len()));
    }
    IntervalRep::new(iv)
}

pub fn write_interval_rep(rep: &IntervalRep) -> String {
    let mut s = format!("{}\n", rep.n());
    for &(l, r) in &rep.intervals {
        let _ = writeln!(s, "{l} {r}");
    }
    s
}

pub fn parse_vertex_map(text: &str) -> Result<Vec<(usize, usize)>> {
    content_lines(text)
        .map(|(no, line)| {
            let v: Vec<usize> = numbers(no, line)?;
            match v[..] {
                [a, b] => Ok((a, b)),
                _ => parse_err(no, "expected `old new`"),
            }
        })
        .collect()
}

pub fn write_vertex_map(map: &[(usize, usize)]) -> String {
    map.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}
