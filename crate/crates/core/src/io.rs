//! Line-oriented text formats.
//!
//! | object  | header           | body lines                 |
//! |---------|------------------|----------------------------|
//! | graph   | `n <count>`      | `e <u> <v>`, `u < v`       |
//! | complex | `g <ground>`     | `f <v1> <v2> ...`          |
//! | ideal   | `n <ground>`     | `m <v1> <v2> ...` / `unit` |
//! | Betti   | `subject <name>` | `b <i> <j> <multiplicity>` |
//!
//! Lines starting with `#` and empty lines are ignored. Tokens are
//! separated by single spaces; output uses LF line endings.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::homology::BettiTable;
use crate::ideals::SquareFreeMonomialIdeal;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Non-comment lines with their 1-based line numbers, split into tokens.
fn content_lines(text: &str) -> Result<Vec<(usize, Vec<&str>)>> {
    let mut out = Vec::new();
    for (idx, line) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !line.is_ascii() {
            return Err(parse_err(lineno, "non-ASCII input"));
        }
        let tokens: Vec<&str> = line.split(' ').collect();
        if tokens.iter().any(|t| t.is_empty() || t.contains(|c: char| c.is_whitespace())) {
            return Err(parse_err(lineno, "tokens must be separated by single spaces"));
        }
        out.push((lineno, tokens));
    }
    Ok(out)
}

fn number(lineno: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(lineno, format!("expected a nonnegative integer, got {tok:?}")))
}

fn size_header(lines: &[(usize, Vec<&str>)], key: &str) -> Result<(usize, usize)> {
    let Some((lineno, tokens)) = lines.first() else {
        return Err(parse_err(1, format!("missing `{key} <size>` header")));
    };
    if tokens.len() != 2 || tokens[0] != key {
        return Err(parse_err(*lineno, format!("expected `{key} <size>`")));
    }
    let n = number(*lineno, tokens[1])?;
    if n > MAX_VERTICES {
        return Err(parse_err(*lineno, Error::TooManyVertices(n).to_string()));
    }
    Ok((*lineno, n))
}

fn vertex_list(lineno: usize, tokens: &[&str], n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    let mut prev = None;
    for tok in tokens {
        let v = number(lineno, tok)?;
        if v >= n {
            return Err(parse_err(lineno, format!("vertex {v} out of range 0..{n}")));
        }
        if prev.is_some_and(|p| p >= v) {
            return Err(parse_err(lineno, "vertices must be strictly ascending"));
        }
        prev = Some(v);
        set.insert(v);
    }
    Ok(set)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let lines = content_lines(text)?;
    let (_, n) = size_header(&lines, "n")?;
    let mut g = Graph::empty(n)?;
    for (lineno, tokens) in &lines[1..] {
        let lineno = *lineno;
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(parse_err(lineno, "expected `e <u> <v>`"));
        }
        let u = number(lineno, tokens[1])?;
        let v = number(lineno, tokens[2])?;
        if !(u < v && v < n) {
            return Err(parse_err(lineno, format!("edge must satisfy 0 <= u < v < {n}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(lineno, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.universe());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

fn write_set(out: &mut String, tag: &str, set: VertexSet) {
    out.push_str(tag);
    for v in set.iter() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
}

/// Ground set is `0..<ground>`; `f` alone is the empty facet, no `f`
/// lines is the void complex.
pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let lines = content_lines(text)?;
    let (_, n) = size_header(&lines, "g")?;
    let mut facets = Vec::new();
    for (lineno, tokens) in &lines[1..] {
        if tokens[0] != "f" {
            return Err(parse_err(*lineno, "expected `f <v1> <v2> ...`"));
        }
        facets.push(vertex_list(*lineno, &tokens[1..], n)?);
    }
    SimplicialComplex::from_facets(VertexSet::first(n), facets)
}

/// Facets in lexicographic order. The ground size written is one past the
/// largest ground label.
pub fn write_facet_list(c: &SimplicialComplex) -> String {
    let ground = c.ground_set().max().map_or(0, |m| m + 1);
    let mut out = format!("g {ground}\n");
    let mut facets = c.facets().to_vec();
    facets.sort_by(|a, b| a.lex_cmp(*b));
    for f in facets {
        write_set(&mut out, "f", f);
    }
    out
}

pub fn parse_ideal(text: &str) -> Result<SquareFreeMonomialIdeal> {
    let lines = content_lines(text)?;
    let (_, n) = size_header(&lines, "n")?;
    let ground = VertexSet::first(n);
    let mut gens = Vec::new();
    let mut unit = false;
    for (lineno, tokens) in &lines[1..] {
        match tokens[0] {
            "unit" if tokens.len() == 1 => unit = true,
            "m" => {
                let g = vertex_list(*lineno, &tokens[1..], n)?;
                if g.is_empty() {
                    return Err(parse_err(*lineno, "empty generator; use `unit`"));
                }
                gens.push(g);
            }
            _ => return Err(parse_err(*lineno, "expected `m <v1> ...` or `unit`")),
        }
    }
    if unit {
        if !gens.is_empty() {
            return Err(parse_err(lines[0].0, "`unit` cannot be combined with generators"));
        }
        return Ok(SquareFreeMonomialIdeal::unit(ground));
    }
    SquareFreeMonomialIdeal::new(ground, gens)
}

pub fn write_ideal(ideal: &SquareFreeMonomialIdeal) -> String {
    let ground = ideal.ground_set().max().map_or(0, |m| m + 1);
    let mut out = format!("n {ground}\n");
    if ideal.is_unit() {
        out.push_str("unit\n");
        return out;
    }
    let mut gens = ideal.generators().to_vec();
    gens.sort_by(|a, b| a.lex_cmp(*b));
    for g in gens {
        write_set(&mut out, "m", g);
    }
    out
}

pub fn write_betti(table: &BettiTable) -> String {
    let mut out = format!("subject {}\n", table.subject);
    for ((i, j), m) in table.entries() {
        writeln!(out, "b {i} {j} {m}").unwrap();
    }
    out
}

pub fn parse_betti(text: &str) -> Result<BettiTable> {
    let mut table = None;
    for (idx, line) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match (&mut table, line.strip_prefix("subject ")) {
            (None, Some(name)) => table = Some(BettiTable::new(name)),
            (None, None) => return Err(parse_err(lineno, "expected `subject <name>`")),
            (Some(t), None) => {
                let tokens: Vec<&str> = line.split(' ').collect();
                if tokens.len() != 4 || tokens[0] != "b" {
                    return Err(parse_err(lineno, "expected `b <i> <j> <multiplicity>`"));
                }
                let (i, j, m) = (
                    number(lineno, tokens[1])?,
                    number(lineno, tokens[2])?,
                    number(lineno, tokens[3])?,
                );
                if m == 0 {
                    return Err(parse_err(lineno, "multiplicities must be positive"));
                }
                t.add(i, j, m);
            }
            (Some(_), Some(_)) => return Err(parse_err(lineno, "duplicate subject header")),
        }
    }
    table.ok_or_else(|| parse_err(1, "missing `subject <name>` header"))
}
