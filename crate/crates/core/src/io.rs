//! Text formats: edge lists, grid point lists, words, and JSON models.
//!
//! Edge-list files start with `n m`, may carry a `labels: p1 .. pn` line
//! giving the label of each vertex (identity by default), and list `m`
//! edges as 1-based vertex pairs. Blank lines and `#` comments are ignored.

use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, GridGraph, LabeledGraph, Labeling, Side};
use crate::models::{IntervalModel, TriangleModel};
use crate::recognition::Model;
use crate::word::Word;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty())
}

fn parse_uint(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| parse_err(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n = parse_uint(toks[0], hline)?;
    let m = parse_uint(toks[1], hline)?;

    let mut graph = Graph::new(n);
    let mut labels: Option<Vec<u32>> = None;
    let mut edges = 0;
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("labels:") {
            if labels.is_some() {
                return Err(parse_err(ln, "duplicate labels line"));
            }
            let ls =
                rest.split_whitespace().map(|t| parse_uint(t, ln).map(|v| v as u32)).collect::<Result<Vec<_>>>()?;
            if ls.len() != n {
                return Err(parse_err(ln, format!("expected {n} labels, found {}", ls.len())));
            }
            labels = Some(ls);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "edge line must be `x y`"));
        }
        let (x, y) = (parse_uint(toks[0], ln)?, parse_uint(toks[1], ln)?);
        if x == 0 || y == 0 || x > n || y > n {
            return Err(parse_err(ln, format!("vertex out of range 1..={n}")));
        }
        if x == y {
            return Err(parse_err(ln, "self-loop"));
        }
        if graph.has_edge(x - 1, y - 1) {
            return Err(parse_err(ln, "duplicate edge"));
        }
        graph.add_edge(x - 1, y - 1).map_err(|e| parse_err(ln, e.to_string()))?;
        edges += 1;
    }
    if edges != m {
        return Err(parse_err(hline, format!("header announces {m} edges, found {edges}")));
    }
    let labeling = match labels {
        Some(ls) => Labeling::from_labels(ls).map_err(|e| parse_err(hline, e.to_string()))?,
        None => Labeling::identity(n),
    };
    LabeledGraph::new(graph, labeling)
}

pub fn write_graph(lg: &LabeledGraph) -> String {
    let g = lg.graph();
    let mut out = format!("{} {}\n", g.n(), g.m());
    if lg.labeling() != &Labeling::identity(g.n()) {
        let ls: Vec<String> = lg.labeling().labels().iter().map(u32::to_string).collect();
        out.push_str(&format!("labels: {}\n", ls.join(" ")));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_grid(text: &str) -> Result<GridGraph> {
    let mut points = Vec::new();
    for (ln, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "grid line must be `x y`"));
        }
        let coord = |t: &str| t.parse::<i64>().map_err(|_| parse_err(ln, format!("bad coordinate {t:?}")));
        let p = (coord(toks[0])?, coord(toks[1])?);
        if points.contains(&p) {
            return Err(parse_err(ln, format!("duplicate point ({}, {})", p.0, p.1)));
        }
        points.push(p);
    }
    GridGraph::from_points(&points)
}

/// A word file holds one line of space-separated letters.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut lines = content_lines(text);
    let Some((ln, line)) = lines.next() else {
        return Err(parse_err(1, "empty word file"));
    };
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "word must be on a single line"));
    }
    let letters = line
        .split_whitespace()
        .map(|t| match t.parse::<u32>() {
            Ok(0) | Err(_) => Err(parse_err(ln, format!("bad letter {t:?}"))),
            Ok(l) => Ok(l),
        })
        .collect::<Result<Vec<_>>>()?;
    Word::new(letters)
}

fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        Value::Number(Number::from(x as i64))
    } else {
        Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
    }
}

/// JSON text of a model. Keys are 1-based vertex numbers.
pub fn model_to_json(model: &Model) -> String {
    let value = match model {
        Model::Interval(m) => {
            let bp = m.bipartition();
            let ids = |side| bp.class(side).into_iter().map(|v| v + 1).collect::<Vec<_>>();
            let mut intervals = Map::new();
            for v in 0..m.n() {
                let (l, r) = m.interval(v);
                intervals.insert((v + 1).to_string(), json!([number(l), number(r)]));
            }
            json!({
                "kind": "interval-containment",
                "X": ids(Side::X),
                "Y": ids(Side::Y),
                "intervals": intervals,
            })
        }
        Model::Triangle(m) => {
            let mut apex = Map::new();
            let mut base = Map::new();
            for v in 0..m.n() {
                apex.insert((v + 1).to_string(), number(m.apex(v)));
                let (l, r) = m.base(v);
                base.insert((v + 1).to_string(), json!([number(l), number(r)]));
            }
            json!({ "kind": "simple-triangle", "apex": apex, "base": base })
        }
    };
    serde_json::to_string_pretty(&value).unwrap()
}

fn model_err(msg: impl Into<String>) -> Error {
    Error::InvalidModel(msg.into())
}

fn keyed_entries<'a>(obj: &'a Value, field: &str) -> Result<Vec<&'a Value>> {
    let map =
        obj.get(field).and_then(Value::as_object).ok_or_else(|| model_err(format!("missing object {field:?}")))?;
    let n = map.len();
    let mut slots: Vec<Option<&Value>> = vec![None; n];
    for (k, v) in map {
        let id: usize = k.parse().map_err(|_| model_err(format!("key {k:?} is not a vertex number")))?;
        if id == 0 || id > n || slots[id - 1].is_some() {
            return Err(model_err(format!("{field:?} keys must be exactly 1..={n}")));
        }
        slots[id - 1] = Some(v);
    }
    Ok(slots.into_iter().map(Option::unwrap).collect())
}

fn as_coord(v: &Value) -> Result<f64> {
    v.as_f64().ok_or_else(|| model_err(format!("coordinate {v} is not a number")))
}

fn as_pair(v: &Value) -> Result<(f64, f64)> {
    match v.as_array().map(Vec::as_slice) {
        Some([l, r]) => Ok((as_coord(l)?, as_coord(r)?)),
        _ => Err(model_err(format!("expected [l, r], found {v}"))),
    }
}

pub fn model_from_json(text: &str) -> Result<Model> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    match value.get("kind").and_then(Value::as_str) {
        Some("interval-containment") => {
            let intervals = keyed_entries(&value, "intervals")?.into_iter().map(as_pair).collect::<Result<Vec<_>>>()?;
            let n = intervals.len();
            let mut sides: Vec<Option<Side>> = vec![None; n];
            for (field, side) in [("X", Side::X), ("Y", Side::Y)] {
                let ids = value
                    .get(field)
                    .and_then(Value::as_array)
                    .ok_or_else(|| model_err(format!("missing {field:?}")))?;
                for id in ids {
                    let id = id.as_u64().ok_or_else(|| model_err(format!("bad vertex {id} in {field:?}")))? as usize;
                    if id == 0 || id > n || sides[id - 1].is_some() {
                        return Err(model_err(format!("vertex {id} misplaced in {field:?}")));
                    }
                    sides[id - 1] = Some(side);
                }
            }
            let sides = sides
                .into_iter()
                .enumerate()
                .map(|(v, s)| s.ok_or_else(|| model_err(format!("vertex {} in neither X nor Y", v + 1))))
                .collect::<Result<Vec<_>>>()?;
            Ok(Model::Interval(IntervalModel::new(intervals, Bipartition::new(sides))?))
        }
        Some("simple-triangle") => {
            let apex = keyed_entries(&value, "apex")?.into_iter().map(as_coord).collect::<Result<Vec<_>>>()?;
            let base = keyed_entries(&value, "base")?.into_iter().map(as_pair).collect::<Result<Vec<_>>>()?;
            Ok(Model::Triangle(TriangleModel::new(apex, base)?))
        }
        other => Err(model_err(format!("unknown model kind {other:?}"))),
    }
}
