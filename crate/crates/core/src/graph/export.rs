use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Graph, InnerPart, Label};
use crate::error::Result;

/// JSON form of a graph: `{"n": 3, "edges": [[0,1],...], "labels": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[Label]>::to_vec),
        }
    }
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        let mut g = Graph::from_edges(self.n, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        if let Some(labels) = self.labels {
            g.set_labels(labels)?;
        }
        Ok(g)
    }
}

fn label_name(label: Label) -> String {
    match label {
        Label::CopyVertex { i, j } => format!("v{i}^{j}"),
        Label::GadgetInner {
            i,
            j,
            part: InnerPart::S,
        } => format!("S[{i},{j}]"),
        Label::GadgetInner {
            i,
            j,
            part: InnerPart::SPrime,
        } => format!("S'[{i},{j}]"),
        Label::ProductVertex { i, t } => format!("V{i}.{t}"),
        Label::Universal { slot } => format!("V*{slot}"),
    }
}

fn role_color(label: Label) -> &'static str {
    match label {
        Label::CopyVertex { .. } => "lightblue",
        Label::GadgetInner {
            part: InnerPart::S, ..
        } => "lightgray",
        Label::GadgetInner {
            part: InnerPart::SPrime,
            ..
        } => "gray",
        Label::ProductVertex { .. } => "palegreen",
        Label::Universal { .. } => "gold",
    }
}

/// Graphviz export. Labeled vertices are named after their provenance and
/// filled by role.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(labels) = g.labels() {
        out.push_str("  node [style=filled];\n");
        for (v, &l) in labels.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {v} [label=\"{}\", fillcolor={}];",
                label_name(l),
                role_color(l)
            );
        }
    } else {
        for v in 0..g.order() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
