use serde_json::{json, Value};

use super::{add_gadget_edges, color_gadget, GadgetShape};
use crate::error::Result;
use crate::graph::{Graph, GraphJson, InnerPart, Label};
use crate::worm::Coloring;

/// The gadget `G₁(F)`: vertex 0 is `x`, vertex 1 is `y`, then `S`, then `S'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub graph: Graph,
    pub pattern_order: usize,
    pub min_degree: usize,
    pub x: usize,
    pub y: usize,
    pub inner_s: Vec<usize>,
    pub inner_sprime: Vec<usize>,
}

/// Builds `G₁(F)` for a 2-connected pattern: `|S'| = n - δ - 1`,
/// `|S ∪ S'| = (n-1)^2 - 1`.
pub fn gadget(pattern: &Graph) -> Result<GadgetLayout> {
    let shape = GadgetShape::of(pattern)?;
    let total = 2 + shape.inner_len();
    let inner_s: Vec<usize> = (2..2 + shape.s_len).collect();
    let inner_sprime: Vec<usize> = (2 + shape.s_len..total).collect();
    let mut graph = Graph::new(total);
    add_gadget_edges(&mut graph, 0, 1, &inner_s, &inner_sprime);
    let mut labels = vec![
        Label::CopyVertex { i: 0, j: 0 },
        Label::CopyVertex { i: 0, j: 1 },
    ];
    labels.extend(inner_s.iter().map(|_| Label::GadgetInner {
        i: 0,
        j: 0,
        part: InnerPart::S,
    }));
    labels.extend(inner_sprime.iter().map(|_| Label::GadgetInner {
        i: 0,
        j: 0,
        part: InnerPart::SPrime,
    }));
    graph.set_labels(labels)?;
    Ok(GadgetLayout {
        graph,
        pattern_order: shape.n,
        min_degree: shape.delta,
        x: 0,
        y: 1,
        inner_s,
        inner_sprime,
    })
}

impl GadgetLayout {
    fn shape(&self) -> GadgetShape {
        GadgetShape {
            n: self.pattern_order,
            delta: self.min_degree,
            s_len: self.inner_s.len(),
            sprime_len: self.inner_sprime.len(),
        }
    }

    /// The `(n-1)`-color WORM coloring in which both outer vertices get
    /// `outer` (which must be below `n - 1`).
    pub fn witness(&self, outer: usize) -> Coloring {
        let palette = self.pattern_order - 1;
        assert!(
            outer < palette,
            "outer color must be one of the n - 1 gadget colors"
        );
        let mut colors = vec![0; self.graph.order()];
        colors[self.x] = outer;
        colors[self.y] = outer;
        color_gadget(
            &mut colors,
            self.shape(),
            outer,
            &self.inner_s,
            &self.inner_sprime,
            palette,
        );
        Coloring::new(colors)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "construction": "gadget",
            "pattern_order": self.pattern_order,
            "min_degree": self.min_degree,
            "x": self.x,
            "y": self.y,
            "inner_s": self.inner_s,
            "inner_sprime": self.inner_sprime,
            "graph": GraphJson::from(&self.graph),
        })
    }
}
