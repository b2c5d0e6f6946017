//! Finite abstract simplicial complexes.
//!
//! A complex stores its complete face list in a canonical order (dimension,
//! then lexicographic vertex list), so faces have stable dense ids that all
//! other modules share. Vertices are labeled; ids `0..num_vertices` are
//! assigned in first-appearance order and double as the face ids of the
//! corresponding 0-faces.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::simplex::{Simplex, Vertex};

/// Dense index of a face in a complex's canonical face order.
pub type FaceId = usize;

/// Errors raised while building or analysing a complex.
#[derive(Debug, Error)]
pub enum ComplexError {
    /// No facets were supplied.
    #[error("facet list is empty")]
    EmptyFacetList,
    /// A facet had no vertices.
    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },
    /// A facet repeated a vertex label.
    #[error("facet {index} repeats vertex {label:?}")]
    DuplicateVertex { index: usize, label: String },
    /// Two vertices were given the same label.
    #[error("vertex label {label:?} is used twice")]
    DuplicateLabel { label: String },
    /// A vertex label appears in no face.
    #[error("vertex {label:?} appears in no face")]
    UnusedVertex { label: String },
    /// A face references a vertex id outside the label table.
    #[error("face references vertex id {id} but only {count} vertices are labeled")]
    VertexOutOfRange { id: usize, count: usize },
    /// A face family was promised to be downward closed but is not.
    #[error("face family is not downward closed: missing a face of {label:?}")]
    NotDownwardClosed { label: String },
    /// A label was referenced that the complex does not know.
    #[error("unknown vertex label {label:?}")]
    UnknownLabel { label: String },
    /// A generator parameter was below its minimum.
    #[error("{what} requires n >= {min}, got {got}")]
    ParameterTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    /// Classification is only defined for connected complexes.
    #[error("complex is not connected")]
    Disconnected,
    /// A textual input could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A JSON input could not be parsed.
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// The shape classes that decide which symmetry statement applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// The cycle graph on `n` vertices, `n >= 3`.
    Cycle { n: usize },
    /// The boundary of the `n`-simplex, `n >= 2`.
    BoundarySimplex { n: usize },
    /// Both at once: the triangle is the 3-cycle and the boundary of the
    /// 2-simplex.
    Both { n_cycle: usize, n_boundary: usize },
    /// Any other connected complex.
    Other,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cycle { n } => write!(f, "cycle(n={n})"),
            Classification::BoundarySimplex { n } => write!(f, "boundary-simplex(n={n})"),
            Classification::Both { n_cycle, n_boundary } => {
                write!(f, "cycle(n={n_cycle}) and boundary-simplex(n={n_boundary})")
            }
            Classification::Other => write!(f, "other"),
        }
    }
}

/// A finite abstract simplicial complex with labeled vertices.
///
/// Immutable once built: every constructor validates its input and computes
/// the full downward-closed face list up front.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// All faces in canonical (dimension, lexicographic) order.
    faces: Vec<Simplex>,
    face_index: HashMap<Simplex, FaceId>,
    /// `dim_starts[d]` is the first face id of dimension `d`; a final
    /// sentinel entry holds `faces.len()`.
    dim_starts: Vec<usize>,
    /// Ids of the maximal faces, in canonical order.
    facets: Vec<FaceId>,
}

/// Serialized form: facets (maximal faces) by label, plus the face-count
/// vector for quick inspection.
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
    f_vector: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from a family of generating faces given by label.
    ///
    /// The family need not be closed or maximal; the downward closure is
    /// taken and maximal faces are recomputed. Vertex ids are assigned in
    /// first-appearance order.
    pub fn from_facets(facets: &[&[&str]]) -> Result<Self, ComplexError> {
        let owned: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.iter().map(|s| s.to_string()).collect())
            .collect();
        Self::from_facet_labels(&owned)
    }

    /// As [`from_facets`](Self::from_facets), for owned label lists.
    pub fn from_facet_labels(facets: &[Vec<String>]) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::EmptyFacetList);
        }
        let mut labels: Vec<String> = Vec::new();
        let mut ids: HashMap<String, Vertex> = HashMap::new();
        let mut generators: Vec<Simplex> = Vec::new();
        for (index, facet) in facets.iter().enumerate() {
            if facet.is_empty() {
                return Err(ComplexError::EmptyFacet { index });
            }
            let mut verts = Vec::with_capacity(facet.len());
            for label in facet {
                let id = *ids.entry(label.clone()).or_insert_with(|| {
                    labels.push(label.clone());
                    labels.len() - 1
                });
                if verts.contains(&id) {
                    return Err(ComplexError::DuplicateVertex {
                        index,
                        label: label.clone(),
                    });
                }
                verts.push(id);
            }
            generators.push(Simplex::new(verts));
        }
        Self::from_generating_faces(labels, generators)
    }

    /// Builds a complex from explicit vertex labels and generating faces
    /// over vertex ids `0..labels.len()`. The downward closure is taken.
    pub fn from_generating_faces(
        labels: Vec<String>,
        generators: Vec<Simplex>,
    ) -> Result<Self, ComplexError> {
        let mut closed: Vec<Simplex> = Vec::new();
        for g in &generators {
            push_subsets(g, &mut closed);
        }
        closed.sort();
        closed.dedup();
        Self::from_closed_faces(labels, closed, false)
    }

    /// Builds a complex from a face family that is already downward closed.
    ///
    /// Unlike the closure-taking constructors this one *checks* closure and
    /// errors if any subset of a listed face is missing, so structural
    /// guarantees of the input survive as invariants of the result.
    pub fn from_labeled_faces(
        labels: Vec<String>,
        faces: Vec<Simplex>,
    ) -> Result<Self, ComplexError> {
        let mut sorted = faces;
        sorted.sort();
        sorted.dedup();
        Self::from_closed_faces(labels, sorted, true)
    }

    fn from_closed_faces(
        labels: Vec<String>,
        faces: Vec<Simplex>,
        check_closure: bool,
    ) -> Result<Self, ComplexError> {
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for label in &labels {
            if seen.insert(label, ()).is_some() {
                return Err(ComplexError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }

        let mut used = vec![false; labels.len()];
        for face in &faces {
            for &v in face.vertices() {
                if v >= labels.len() {
                    return Err(ComplexError::VertexOutOfRange {
                        id: v,
                        count: labels.len(),
                    });
                }
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(ComplexError::UnusedVertex {
                label: labels[v].clone(),
            });
        }

        let face_index: HashMap<Simplex, FaceId> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        if check_closure {
            for face in &faces {
                for sub in face.boundary() {
                    if !face_index.contains_key(&sub) {
                        let label = join_labels(&labels, face.vertices());
                        return Err(ComplexError::NotDownwardClosed { label });
                    }
                }
            }
        }

        let max_dim = faces.last().map(Simplex::dim);
        let mut dim_starts = Vec::new();
        match max_dim {
            None => dim_starts.push(0),
            Some(max_dim) => {
                let mut next = 0;
                for d in 0..=max_dim {
                    dim_starts.push(next);
                    while next < faces.len() && faces[next].dim() == d {
                        next += 1;
                    }
                }
                dim_starts.push(faces.len());
            }
        }

        // A face is maximal when no other face properly contains it. Each
        // face has few cofaces at desk scale, so scan faces of the next
        // dimension up.
        let mut facets = Vec::new();
        for (id, face) in faces.iter().enumerate() {
            let d = face.dim() + 1;
            let above = match dim_starts.get(d + 1) {
                Some(&end) => &faces[dim_starts[d]..end],
                None => &[],
            };
            if !above.iter().any(|big| face.is_face_of(big)) {
                facets.push(id);
            }
        }

        Ok(SimplicialComplex {
            labels,
            faces,
            face_index,
            dim_starts,
            facets,
        })
    }

    /// Number of vertices.
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Vertex labels in id order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of one vertex.
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    /// All faces in canonical order.
    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    /// Number of faces of all dimensions.
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// The face with a given id.
    pub fn face(&self, id: FaceId) -> &Simplex {
        &self.faces[id]
    }

    /// Id of a face, if present.
    pub fn face_id(&self, s: &Simplex) -> Option<FaceId> {
        self.face_index.get(s).copied()
    }

    /// Does the complex contain this simplex as a face?
    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.face_index.contains_key(s)
    }

    /// The faces of one dimension, as a contiguous canonical slice.
    pub fn faces_of_dim(&self, d: usize) -> &[Simplex] {
        match (self.dim_starts.get(d), self.dim_starts.get(d + 1)) {
            (Some(&a), Some(&b)) => &self.faces[a..b],
            _ => &[],
        }
    }

    /// First face id of dimension `d` (faces of one dimension are
    /// contiguous in id order).
    pub fn dim_start(&self, d: usize) -> usize {
        self.dim_starts.get(d).copied().unwrap_or(self.faces.len())
    }

    /// Ids of the maximal faces.
    pub fn facet_ids(&self) -> &[FaceId] {
        &self.facets
    }

    /// Dimension of the complex; `None` when it has no faces.
    pub fn dimension(&self) -> Option<usize> {
        self.faces.last().map(Simplex::dim)
    }

    /// Face counts by dimension: entry `i` counts the `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        self.dim_starts
            .windows(2)
            .map(|w| w[1] - w[0])
            .collect()
    }

    /// Human-readable label of a face: vertex labels concatenated when all
    /// are single characters (so the edge on `a` and `b` reads `ab`),
    /// comma-joined otherwise.
    pub fn face_label(&self, id: FaceId) -> String {
        join_labels(&self.labels, self.faces[id].vertices())
    }

    /// Does this vertex mapping preserve the face set?
    ///
    /// `images[v]` is the image of vertex `v`. The map must be a
    /// permutation of the vertices sending every face to a face; since
    /// faces then map injectively into faces, it is onto them by counting.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        let n = self.labels.len();
        if images.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.faces
            .iter()
            .all(|f| self.contains_face(&f.map(images)))
    }

    /// Is the complex connected? Vacuously true for zero or one vertices.
    pub fn is_connected(&self) -> bool {
        if self.labels.len() <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.labels.len()];
        for edge in self.faces_of_dim(1) {
            let (u, v) = (edge.vertices()[0], edge.vertices()[1]);
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.labels.len()
    }

    /// Decides which symmetry statement applies to this complex.
    ///
    /// Errors on a disconnected complex; the classification is only
    /// meaningful for connected ones.
    pub fn classify(&self) -> Result<Classification, ComplexError> {
        if !self.is_connected() {
            return Err(ComplexError::Disconnected);
        }
        let is_cycle = self.is_cycle();
        let boundary_n = self.boundary_simplex_n();
        Ok(match (is_cycle, boundary_n) {
            (true, Some(n)) => Classification::Both {
                n_cycle: self.num_vertices(),
                n_boundary: n,
            },
            (true, None) => Classification::Cycle {
                n: self.num_vertices(),
            },
            (false, Some(n)) => Classification::BoundarySimplex { n },
            (false, None) => Classification::Other,
        })
    }

    /// Is this the cycle graph on `>= 3` vertices?
    fn is_cycle(&self) -> bool {
        let n = self.num_vertices();
        if n < 3 || self.dimension() != Some(1) {
            return false;
        }
        if self.faces_of_dim(1).len() != n {
            return false;
        }
        // Connected, n vertices, n edges, pure of dimension 1: a cycle iff
        // every vertex has degree exactly 2.
        let mut degree = vec![0usize; n];
        for edge in self.faces_of_dim(1) {
            degree[edge.vertices()[0]] += 1;
            degree[edge.vertices()[1]] += 1;
        }
        degree.iter().all(|&d| d == 2)
    }

    /// If this is the boundary of an `n`-simplex (`n >= 2`), returns `n`.
    fn boundary_simplex_n(&self) -> Option<usize> {
        let dim = self.dimension()?;
        let n = dim + 1;
        if n < 2 || self.num_vertices() != n + 1 {
            return None;
        }
        // The boundary of the n-simplex contains *every* nonempty proper
        // subset of its n+1 vertices, so matching the full f-vector pins
        // down the face set exactly.
        let f = self.f_vector();
        (0..=dim).all(|i| f[i] == binomial(n + 1, i + 1)).then_some(n)
    }

    /// Serializes the complex as a JSON document.
    pub fn to_json_value(&self) -> serde_json::Value {
        let facets = self
            .facets
            .iter()
            .map(|&id| {
                self.faces[id]
                    .vertices()
                    .iter()
                    .map(|&v| self.labels[v].clone())
                    .collect()
            })
            .collect();
        serde_json::to_value(ComplexJson {
            vertices: self.labels.clone(),
            facets,
            f_vector: self.f_vector(),
        })
        .expect("complex serialization cannot fail")
    }

    /// JSON document as a pretty-printed string with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .expect("complex serialization cannot fail");
        s.push('\n');
        s
    }

    /// Reads a complex back from its JSON document. Vertex ids follow the
    /// order of the `vertices` array.
    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        let doc: ComplexJson = serde_json::from_str(text)?;
        let mut ids: HashMap<&str, Vertex> = HashMap::new();
        for (i, label) in doc.vertices.iter().enumerate() {
            if ids.insert(label, i).is_some() {
                return Err(ComplexError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        let mut generators = Vec::new();
        for facet in &doc.facets {
            let mut verts = Vec::with_capacity(facet.len());
            for label in facet {
                let id = *ids
                    .get(label.as_str())
                    .ok_or_else(|| ComplexError::UnknownLabel {
                        label: label.clone(),
                    })?;
                verts.push(id);
            }
            generators.push(Simplex::new(verts));
        }
        Self::from_generating_faces(doc.vertices, generators)
    }

    /// Parses the facet text format: one facet per line as
    /// whitespace-separated vertex labels, `#` starting a comment, blank
    /// lines ignored.
    pub fn parse_facet_text(text: &str) -> Result<Self, ComplexError> {
        let mut facets: Vec<Vec<String>> = Vec::new();
        let mut facet_lines: Vec<usize> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            facets.push(line.split_whitespace().map(str::to_string).collect());
            facet_lines.push(lineno + 1);
        }
        Self::from_facet_labels(&facets).map_err(|e| match e {
            // Re-anchor facet-level errors to their source line.
            ComplexError::DuplicateVertex { index, label } => ComplexError::Parse {
                line: facet_lines[index],
                message: format!("facet repeats vertex {label:?}"),
            },
            ComplexError::EmptyFacetList => ComplexError::Parse {
                line: text.lines().count().max(1),
                message: "no facets found".to_string(),
            },
            other => other,
        })
    }

    /// Writes the facet text format, one maximal face per line.
    ///
    /// The text format carries no vertex table, so ordering by internal ids
    /// would not survive a round trip; instead vertices are sorted by label
    /// within each line and lines by (dimension, labels), making the output
    /// a function of the labeled face set alone.
    pub fn to_facet_text(&self) -> String {
        let mut lines: Vec<Vec<&str>> = self
            .facets
            .iter()
            .map(|&id| {
                let mut labels: Vec<&str> = self.faces[id]
                    .vertices()
                    .iter()
                    .map(|&v| self.labels[v].as_str())
                    .collect();
                labels.sort_unstable();
                labels
            })
            .collect();
        lines.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut out = String::new();
        for line in lines {
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(vertices={}, f_vector={:?})",
            self.num_vertices(),
            self.f_vector()
        )
    }
}

/// Joins vertex labels into a face label: concatenated when all labels are
/// single characters, comma-separated otherwise.
pub(crate) fn join_labels(labels: &[String], verts: &[Vertex]) -> String {
    let parts: Vec<&str> = verts.iter().map(|&v| labels[v].as_str()).collect();
    if parts.iter().all(|p| p.chars().count() == 1) {
        parts.concat()
    } else {
        parts.join(",")
    }
}

/// Pushes every nonempty subset of `s` (including `s` itself) onto `out`.
fn push_subsets(s: &Simplex, out: &mut Vec<Simplex>) {
    let verts = s.vertices();
    for mask in 1u64..(1 << verts.len()) {
        let subset: Vec<Vertex> = verts
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        out.push(Simplex::new(subset));
    }
}

/// Binomial coefficient `C(n, k)` in exact integer arithmetic.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// The cycle on `n >= 3` vertices, labeled `v0..v{n-1}` in cyclic order.
pub fn generate_cycle(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n < 3 {
        return Err(ComplexError::ParameterTooSmall {
            what: "cycle",
            min: 3,
            got: n,
        });
    }
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let generators = (0..n)
        .map(|i| Simplex::new(vec![i, (i + 1) % n]))
        .collect();
    SimplicialComplex::from_generating_faces(labels, generators)
}

/// The path on `n >= 2` vertices, labeled `v0..v{n-1}` along the path.
pub fn generate_path(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n < 2 {
        return Err(ComplexError::ParameterTooSmall {
            what: "path",
            min: 2,
            got: n,
        });
    }
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let generators = (0..n - 1).map(|i| Simplex::new(vec![i, i + 1])).collect();
    SimplicialComplex::from_generating_faces(labels, generators)
}

/// The full `n`-simplex (`n >= 1`) on `n + 1` vertices `v0..vn`.
pub fn generate_simplex(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n < 1 {
        return Err(ComplexError::ParameterTooSmall {
            what: "simplex",
            min: 1,
            got: n,
        });
    }
    let labels: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let generators = vec![Simplex::new((0..=n).collect::<Vec<_>>())];
    SimplicialComplex::from_generating_faces(labels, generators)
}

/// The boundary of the `n`-simplex (`n >= 2`): all proper faces of the full
/// simplex on `n + 1` vertices. For `n = 1` this would be two isolated
/// points, which is disconnected, so it is rejected.
pub fn generate_boundary_simplex(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n < 2 {
        return Err(ComplexError::ParameterTooSmall {
            what: "boundary-simplex",
            min: 2,
            got: n,
        });
    }
    let labels: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
    let generators = (0..=n)
        .map(|skip| Simplex::new((0..=n).filter(|&v| v != skip).collect::<Vec<_>>()))
        .collect();
    SimplicialComplex::from_generating_faces(labels, generators)
}
