//! Reading and writing relations, morphisms, weight functions, complexes and
//! cosheaves.
//!
//! Relations come in a plain-text form
//!
//! ```text
//! #x: a b c d
//! #y: 1 2 3 4 5 6
//! 4 6
//! 1 0 1 0 0 1
//! ...
//! ```
//!
//! or as a JSON object with `x_labels`, `y_labels` and `matrix`. Either
//! may be passed to [`parse_relation`]; a leading `{` selects JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::{parse_simplex, Simplex, SimplicialComplex};
use crate::cosheaf::SetCosheaf;
use crate::duality::ComplexCosheaf;
use crate::error::{Axis, Error, Result};
use crate::labels::LabelSet;
use crate::relation::{RelMorphism, Relation};
use crate::weights::{WeightFunction, WeightKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub x_labels: Vec<String>,
    pub y_labels: Vec<String>,
    pub matrix: Vec<Vec<u8>>,
}

impl From<&Relation> for RelationDoc {
    fn from(r: &Relation) -> Self {
        Self {
            x_labels: r.x_labels().to_vec(),
            y_labels: r.y_labels().to_vec(),
            matrix: r
                .rows()
                .iter()
                .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                .collect(),
        }
    }
}

impl TryFrom<RelationDoc> for Relation {
    type Error = Error;

    fn try_from(doc: RelationDoc) -> Result<Relation> {
        Relation::from_matrix(&doc.x_labels, &doc.y_labels, &doc.matrix)
    }
}

pub fn parse_relation(text: &str) -> Result<Relation> {
    if text.trim_start().starts_with('{') {
        parse_relation_json(text)
    } else {
        parse_relation_text(text)
    }
}

pub fn parse_relation_json(text: &str) -> Result<Relation> {
    serde_json::from_str::<RelationDoc>(text)?.try_into()
}

pub fn relation_to_json(r: &Relation) -> String {
    serde_json::to_string_pretty(&RelationDoc::from(r)).expect("serializable")
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_relation_text(text: &str) -> Result<Relation> {
    let mut x_labels: Option<Vec<String>> = None;
    let mut y_labels: Option<Vec<String>> = None;
    let mut header: Option<(usize, usize)> = None;
    let mut matrix: Vec<Vec<u8>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#x:") {
            x_labels = Some(rest.split_whitespace().map(str::to_owned).collect());
            continue;
        }
        if let Some(rest) = line.strip_prefix("#y:") {
            y_labels = Some(rest.split_whitespace().map(str::to_owned).collect());
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some((nx, ny)) = header else {
            let [a, b] = tokens[..] else {
                return Err(parse_err(line_no, "expected a header `nx ny`"));
            };
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("`{t}` is not a count")))
            };
            header = Some((parse(a)?, parse(b)?));
            continue;
        };
        if matrix.len() == nx {
            return Err(parse_err(line_no, format!("more than {nx} rows")));
        }
        let cells: Vec<String> = if tokens.len() == 1 && ny > 1 {
            // Compact rows like `101001`.
            tokens[0].chars().map(String::from).collect()
        } else {
            tokens.iter().map(|t| t.to_string()).collect()
        };
        if cells.len() != ny {
            return Err(parse_err(
                line_no,
                format!("expected {ny} entries, found {}", cells.len()),
            ));
        }
        let row = cells
            .iter()
            .enumerate()
            .map(|(col, c)| match c.as_str() {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(Error::InvalidEntry {
                    row: matrix.len() + 1,
                    col: col + 1,
                    entry: other.to_owned(),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        matrix.push(row);
    }
    let Some((nx, ny)) = header else {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing header `nx ny`",
        ));
    };
    if matrix.len() != nx {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {nx} rows, found {}", matrix.len()),
        ));
    }
    let x = x_labels.unwrap_or_else(|| LabelSet::numbered("x", nx).to_vec());
    let y = y_labels.unwrap_or_else(|| LabelSet::numbered("y", ny).to_vec());
    if x.len() != nx || y.len() != ny {
        return Err(Error::DimensionMismatch(format!(
            "{} x labels and {} y labels for a {nx}x{ny} matrix",
            x.len(),
            y.len()
        )));
    }
    Relation::from_matrix(&x, &y, &matrix)
}

pub fn relation_to_text(r: &Relation) -> String {
    let mut out = String::new();
    out.push_str(&format!("#x: {}\n", r.x_labels().to_vec().join(" ")));
    out.push_str(&format!("#y: {}\n", r.y_labels().to_vec().join(" ")));
    out.push_str(&format!("{} {}\n", r.nx(), r.ny()));
    for row in r.rows() {
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Deserialize)]
struct MorphismDoc {
    f: BTreeMap<String, String>,
    g: BTreeMap<String, String>,
}

/// Either `{"f": {...}, "g": {...}}` or lines `f a A` / `g 1 1`.
pub fn parse_morphism(text: &str, source: &Relation, target: &Relation) -> Result<RelMorphism> {
    let (f, g) = if text.trim_start().starts_with('{') {
        let doc: MorphismDoc = serde_json::from_str(text)?;
        (doc.f, doc.g)
    } else {
        let mut f = BTreeMap::new();
        let mut g = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                ["f", a, b] => f.insert(a.to_owned(), b.to_owned()),
                ["g", a, b] => g.insert(a.to_owned(), b.to_owned()),
                _ => return Err(parse_err(n + 1, "expected `f <x> <x'>` or `g <y> <y'>`")),
            };
        }
        (f, g)
    };
    RelMorphism::from_label_maps(source.clone(), target.clone(), &f, &g)
}

pub fn morphism_to_json(m: &RelMorphism) -> Value {
    let f: BTreeMap<&str, &str> = m
        .source()
        .x_labels()
        .iter()
        .zip(m.f())
        .map(|(a, &b)| (a, m.target().x_labels().label(b)))
        .collect();
    let g: BTreeMap<&str, &str> = m
        .source()
        .y_labels()
        .iter()
        .zip(m.g())
        .map(|(a, &b)| (a, m.target().y_labels().label(b)))
        .collect();
    json!({ "f": f, "g": g })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
}

impl From<&SimplicialComplex> for ComplexDoc {
    fn from(k: &SimplicialComplex) -> Self {
        Self {
            vertices: k.universe().to_vec(),
            maximal_simplices: k
                .maximal()
                .iter()
                .map(|s| s.label_vec(k.universe()))
                .collect(),
        }
    }
}

impl TryFrom<&ComplexDoc> for SimplicialComplex {
    type Error = Error;

    fn try_from(doc: &ComplexDoc) -> Result<SimplicialComplex> {
        let universe = LabelSet::new(doc.vertices.iter(), Axis::X)?;
        let gens = doc
            .maximal_simplices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|l| {
                        universe.id(l).ok_or_else(|| Error::UnknownLabel {
                            axis: Axis::X,
                            label: l.clone(),
                        })
                    })
                    .collect::<Result<Simplex>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_generators(universe, gens)
    }
}

pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    serde_json::to_value(ComplexDoc::from(k)).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsDoc {
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
    /// Canonical simplex strings (`a,c,d`; empty for ∅) to values.
    pub weights: BTreeMap<String, u64>,
    #[serde(default)]
    pub kind: Option<String>,
}

/// `default_kind` applies when the document does not name one.
pub fn parse_weights(text: &str, default_kind: WeightKind) -> Result<WeightFunction> {
    let doc: WeightsDoc = serde_json::from_str(text)?;
    let complex = SimplicialComplex::try_from(&ComplexDoc {
        vertices: doc.vertices.clone(),
        maximal_simplices: doc.maximal_simplices.clone(),
    })?;
    let kind = match &doc.kind {
        None => default_kind,
        Some(k) => WeightKind::parse(k)
            .ok_or_else(|| Error::InvalidWeights(format!("unknown weight kind `{k}`")))?,
    };
    let mut values = BTreeMap::new();
    for (key, &v) in &doc.weights {
        let s = parse_simplex(key, complex.universe())?;
        if values.insert(s, v).is_some() {
            return Err(Error::InvalidWeights(format!("`{key}` is given twice")));
        }
    }
    WeightFunction::new(complex, values, kind)
}

pub fn weights_to_doc(w: &WeightFunction) -> WeightsDoc {
    let k = w.complex();
    WeightsDoc {
        vertices: k.universe().to_vec(),
        maximal_simplices: k
            .maximal()
            .iter()
            .map(|s| s.label_vec(k.universe()))
            .collect(),
        weights: w
            .values()
            .iter()
            .map(|(s, &v)| (s.key(k.universe()), v))
            .collect(),
        kind: Some(w.kind().as_str().to_owned()),
    }
}

pub fn weights_to_json(w: &WeightFunction) -> String {
    serde_json::to_string_pretty(&weights_to_doc(w)).expect("serializable")
}

fn labels_of<'a>(set: impl IntoIterator<Item = &'a usize>, labels: &LabelSet) -> Vec<String> {
    set.into_iter()
        .map(|&i| labels.label(i).to_owned())
        .collect()
}

/// Per-simplex costalks and cover-indexed extension tables.
pub fn set_cosheaf_to_json(c: &SetCosheaf) -> Value {
    let base = c.base();
    let name = |i: usize| base.element(i).key(base.universe());
    let costalks: Vec<Value> = (0..base.len())
        .map(|i| json!({ "simplex": name(i), "costalk": labels_of(c.costalk(i), c.fiber()) }))
        .collect();
    let extensions: Vec<Value> = base
        .covers()
        .iter()
        .map(|&(lo, hi)| {
            let map: BTreeMap<&str, &str> = c
                .cover_extension(lo, hi)
                .expect("covers carry extensions")
                .iter()
                .map(|(&a, &b)| (c.fiber().label(a), c.fiber().label(b)))
                .collect();
            json!({ "from": name(hi), "to": name(lo), "map": map })
        })
        .collect();
    json!({ "costalks": costalks, "extensions": extensions })
}

pub fn complex_cosheaf_to_json(c: &ComplexCosheaf) -> Value {
    let base = c.base();
    let name = |i: usize| base.element(i).key(base.universe());
    let costalks: Vec<Value> = (0..base.len())
        .map(|i| {
            let k = c.costalk(i);
            json!({
                "simplex": name(i),
                "vertices": labels_of(&k.vertices(), c.fiber()),
                "maximal_simplices": k.maximal().iter().map(|s| s.label_vec(c.fiber())).collect::<Vec<_>>(),
            })
        })
        .collect();
    let extensions: Vec<Value> = base
        .covers()
        .iter()
        .map(|&(lo, hi)| json!({ "from": name(hi), "to": name(lo), "inclusion": true }))
        .collect();
    json!({ "costalks": costalks, "extensions": extensions })
}
