//! Hasse diagrams of simplicial complexes.
//!
//! The Hasse diagram has one node per face and an undirected edge for every
//! codimension-one incidence. Nodes keep the face ids of the originating
//! complex, so faces, Hasse nodes, and layer positions all agree. The layer
//! structure (faces grouped by dimension) is retained for rendering and for
//! layer statistics, and can be deliberately forgotten via [`HasseDiagram::as_graph`]
//! when symmetries that flip the diagram upside down should become visible.

use std::fmt::Write as _;
use std::ops::Range;

use thiserror::Error;

use crate::complex::{FaceId, SimplicialComplex};
use crate::graph::{escape_dot, Graph};

/// Errors raised by Hasse-diagram queries.
#[derive(Debug, Error)]
pub enum HasseError {
    /// A layer statistic was requested for a layer that does not exist.
    #[error("layer {layer} does not exist; the diagram has layers 0..{layers}")]
    NoSuchLayer { layer: usize, layers: usize },
    /// The nodes of a layer do not share a common degree.
    #[error("layer {layer} has non-uniform degrees (found {lo} and {hi})")]
    NonUniformDegree { layer: usize, lo: usize, hi: usize },
}

/// The Hasse diagram of a complex: faces as nodes, codimension-one
/// incidences as edges, nodes grouped into layers by dimension.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    /// `up[id]` lists the faces one dimension above that contain face `id`.
    up: Vec<Vec<FaceId>>,
    /// `down[id]` lists the faces one dimension below contained in `id`.
    down: Vec<Vec<FaceId>>,
    /// `layer_starts[d]` is the first node id of layer `d`, with a final
    /// sentinel of `node_count`.
    layer_starts: Vec<usize>,
    /// Display label of each node, copied from the complex's face labels.
    labels: Vec<String>,
}

/// Builds the Hasse diagram of a complex.
pub fn build_hasse(k: &SimplicialComplex) -> HasseDiagram {
    let n = k.num_faces();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for (id, face) in k.faces().iter().enumerate() {
        for sub in face.boundary() {
            let sub_id = k
                .face_id(&sub)
                .expect("complexes are downward closed by construction");
            down[id].push(sub_id);
            up[sub_id].push(id);
        }
    }
    for list in up.iter_mut().chain(down.iter_mut()) {
        list.sort_unstable();
    }
    let dims = k.dimension().map_or(0, |d| d + 1);
    let mut layer_starts: Vec<usize> = (0..dims).map(|d| k.dim_start(d)).collect();
    layer_starts.push(n);
    let labels = (0..n).map(|id| k.face_label(id)).collect();
    HasseDiagram {
        up,
        down,
        layer_starts,
        labels,
    }
}

impl HasseDiagram {
    /// Number of nodes (faces of the complex).
    pub fn node_count(&self) -> usize {
        self.up.len()
    }

    /// Number of incidence edges.
    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Number of layers (one per face dimension).
    pub fn layer_count(&self) -> usize {
        self.layer_starts.len() - 1
    }

    /// The node ids of layer `d`, as a contiguous range.
    pub fn layer_range(&self, d: usize) -> Range<usize> {
        self.layer_starts[d]..self.layer_starts[d + 1]
    }

    /// The layer (face dimension) of a node.
    pub fn layer_of(&self, id: FaceId) -> usize {
        // layer_starts is sorted; find the last start at or below id.
        match self.layer_starts.binary_search(&id) {
            Ok(mut d) => {
                // Skip over empty layers that share the same start.
                while d + 1 < self.layer_starts.len() - 1 && self.layer_starts[d + 1] == id {
                    d += 1;
                }
                d
            }
            Err(d) => d - 1,
        }
    }

    /// Faces one dimension up that contain `id`.
    pub fn up(&self, id: FaceId) -> &[FaceId] {
        &self.up[id]
    }

    /// Faces one dimension down contained in `id`.
    pub fn down(&self, id: FaceId) -> &[FaceId] {
        &self.down[id]
    }

    /// Degree of a node in the underlying graph (up plus down neighbors).
    pub fn degree(&self, id: FaceId) -> usize {
        self.up[id].len() + self.down[id].len()
    }

    /// Node labels, one per face.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sizes of the layers; equals the f-vector of the complex.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layer_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// The common degree of all nodes in one layer.
    ///
    /// Errors when the layer does not exist or its nodes disagree.
    pub fn layer_degree(&self, layer: usize) -> Result<usize, HasseError> {
        if layer >= self.layer_count() {
            return Err(HasseError::NoSuchLayer {
                layer,
                layers: self.layer_count(),
            });
        }
        let mut degrees = self.layer_range(layer).map(|id| self.degree(id));
        let first = degrees.next().expect("layers are nonempty");
        for d in degrees {
            if d != first {
                return Err(HasseError::NonUniformDegree {
                    layer,
                    lo: first.min(d),
                    hi: first.max(d),
                });
            }
        }
        Ok(first)
    }

    /// The underlying undirected graph, with the layer structure forgotten.
    ///
    /// Automorphisms of this graph may exchange layers (for instance turn
    /// the diagram upside down); queries that should see such symmetries
    /// must go through this view.
    pub fn as_graph(&self) -> Graph {
        let mut g = Graph::new(self.node_count());
        for (id, ups) in self.up.iter().enumerate() {
            for &u in ups {
                g.add_edge(id, u);
            }
        }
        g
    }

    /// Renders the diagram in DOT format with one rank per layer, bottom
    /// layer lowest. Output is deterministic: nodes in canonical face
    /// order, edges grouped by lower endpoint.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        out.push_str("  rankdir = BT;\n");
        for d in 0..self.layer_count() {
            out.push_str("  { rank = same;");
            for id in self.layer_range(d) {
                write!(out, " n{id} [label=\"{}\"];", escape_dot(&self.labels[id])).unwrap();
            }
            out.push_str(" }\n");
        }
        for (id, ups) in self.up.iter().enumerate() {
            for &u in ups {
                writeln!(out, "  n{id} -- n{u};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
