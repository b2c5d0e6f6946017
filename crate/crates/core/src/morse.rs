//! Discrete vector fields, gradient fields, and the Morse complex.
//!
//! A *primitive vector* on a complex is a pair (σ, τ) where σ is a
//! codimension-one face of τ. A *discrete vector field* is a set of
//! primitives whose supporting simplices are pairwise distinct (a matching
//! in the Hasse diagram). A *V-path* alternates upward through matched
//! pairs and downward to other faces,
//!
//! ```text
//!     α0, β0, α1, β1, .., α_k      (α_i, β_i) ∈ V,  α_{i+1} ⊂ β_i,  α_{i+1} ≠ α_i
//! ```
//!
//! and a field is a *gradient field* exactly when it admits no nontrivial
//! closed V-path. The *Morse complex* M(K) has the primitives of K as
//! vertices and the nonempty gradient fields as simplices; every subset of
//! a gradient field is again one, which is what makes this family of sets
//! a simplicial complex.

use std::collections::BTreeMap;
use std::collections::HashMap;

use thiserror::Error;

use crate::complex::{ComplexError, FaceId, SimplicialComplex};
use crate::simplex::Simplex;

/// Default bound on the number of gradient fields enumerated.
pub const DEFAULT_GVF_BUDGET: usize = 5_000_000;

/// Errors raised by vector-field construction and enumeration.
#[derive(Debug, Error)]
pub enum MorseError {
    /// A simplex appears in two pairs of a would-be matching.
    #[error("simplex {label:?} belongs to two pairs")]
    MatchingViolation { label: String },
    /// A pair is not a codimension-one incidence of the complex.
    #[error("({face:?}, {coface:?}) is not a codimension-one incidence")]
    NotPrimitive { face: String, coface: String },
    /// A face id does not exist in the complex.
    #[error("face id {id} is out of range ({count} faces)")]
    FaceOutOfRange { id: usize, count: usize },
    /// Enumeration found more gradient fields than the budget allows.
    #[error("budget of {budget} gradient fields exceeded")]
    BudgetExceeded { budget: usize },
    /// A textual field description could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Building the Morse complex failed structurally.
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A primitive vector: a face together with a coface one dimension up.
///
/// Primitives order by (coface, face); the position of a primitive in the
/// canonical list [`primitives`] is its vertex id in the Morse complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveVector {
    pub face: FaceId,
    pub coface: FaceId,
}

impl PrimitiveVector {
    /// The index of the primitive: the dimension of its coface (one more
    /// than the dimension of its face).
    pub fn index(&self, k: &SimplicialComplex) -> usize {
        k.face(self.coface).dim()
    }

    /// Display label `face|coface` using the complex's face labels.
    pub fn label(&self, k: &SimplicialComplex) -> String {
        format!("{}|{}", k.face_label(self.face), k.face_label(self.coface))
    }
}

impl Ord for PrimitiveVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.coface, self.face).cmp(&(other.coface, other.face))
    }
}

impl PartialOrd for PrimitiveVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All primitive vectors of a complex in canonical order: sorted by
/// (coface id, face id). There is one per Hasse-diagram edge.
pub fn primitives(k: &SimplicialComplex) -> Vec<PrimitiveVector> {
    let mut out = Vec::new();
    for (coface_id, coface) in k.faces().iter().enumerate() {
        let mut face_ids: Vec<FaceId> = coface
            .boundary()
            .iter()
            .map(|s| k.face_id(s).expect("complexes are downward closed"))
            .collect();
        face_ids.sort_unstable();
        for face in face_ids {
            out.push(PrimitiveVector {
                face,
                coface: coface_id,
            });
        }
    }
    out
}

/// A discrete vector field: a set of primitives forming a matching (no
/// simplex supports two pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteVectorField {
    /// The pairs in canonical (coface, face) order.
    pairs: Vec<PrimitiveVector>,
    /// face -> its matched coface.
    up_of: BTreeMap<FaceId, FaceId>,
    /// coface -> its matched face.
    down_of: BTreeMap<FaceId, FaceId>,
}

impl DiscreteVectorField {
    /// The pairs, canonically ordered.
    pub fn pairs(&self) -> &[PrimitiveVector] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Is the field empty?
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The coface matched to `face`, when `face` is the lower half of a
    /// pair.
    pub fn partner_up(&self, face: FaceId) -> Option<FaceId> {
        self.up_of.get(&face).copied()
    }

    /// The face matched to `coface`, when `coface` is the upper half of a
    /// pair.
    pub fn partner_down(&self, coface: FaceId) -> Option<FaceId> {
        self.down_of.get(&coface).copied()
    }

    /// Does any pair use this simplex (in either role)?
    pub fn is_matched(&self, face: FaceId) -> bool {
        self.up_of.contains_key(&face) || self.down_of.contains_key(&face)
    }

    /// Membership test for a single pair.
    pub fn contains_pair(&self, p: &PrimitiveVector) -> bool {
        self.up_of.get(&p.face) == Some(&p.coface)
    }

    /// Is every pair of `self` also a pair of `other`?
    pub fn is_subfield_of(&self, other: &DiscreteVectorField) -> bool {
        self.pairs.iter().all(|p| other.contains_pair(p))
    }
}

/// Builds a discrete vector field from a list of pairs, validating that
/// each pair is a primitive of `k` and that no simplex is used twice.
pub fn make_dvf(
    k: &SimplicialComplex,
    pairs: &[PrimitiveVector],
) -> Result<DiscreteVectorField, MorseError> {
    let mut sorted: Vec<PrimitiveVector> = pairs.to_vec();
    sorted.sort();
    sorted.dedup();

    let count = k.num_faces();
    let mut up_of = BTreeMap::new();
    let mut down_of = BTreeMap::new();
    for p in &sorted {
        for id in [p.face, p.coface] {
            if id >= count {
                return Err(MorseError::FaceOutOfRange { id, count });
            }
        }
        let (face, coface) = (k.face(p.face), k.face(p.coface));
        if face.dim() + 1 != coface.dim() || !face.is_face_of(coface) {
            return Err(MorseError::NotPrimitive {
                face: k.face_label(p.face),
                coface: k.face_label(p.coface),
            });
        }
    }
    // Check the matching property in canonical order so the simplex named
    // in an error is deterministic.
    let mut used: BTreeMap<FaceId, ()> = BTreeMap::new();
    for p in &sorted {
        for id in [p.face, p.coface] {
            if used.insert(id, ()).is_some() {
                return Err(MorseError::MatchingViolation {
                    label: k.face_label(id),
                });
            }
        }
    }
    for p in &sorted {
        up_of.insert(p.face, p.coface);
        down_of.insert(p.coface, p.face);
    }
    Ok(DiscreteVectorField {
        pairs: sorted,
        up_of,
        down_of,
    })
}

/// A V-path: alternating faces `α0, β0, α1, .., α_k` with each `(α_i, β_i)`
/// a pair of the field, `α_{i+1}` a face of `β_i`, and `α_{i+1} ≠ α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPath {
    alphas: Vec<FaceId>,
    betas: Vec<FaceId>,
}

impl VPath {
    /// The lower faces `α_0..α_k`.
    pub fn alphas(&self) -> &[FaceId] {
        &self.alphas
    }

    /// The upper faces `β_0..β_{k-1}`.
    pub fn betas(&self) -> &[FaceId] {
        &self.betas
    }

    /// The number of steps `k`.
    pub fn steps(&self) -> usize {
        self.betas.len()
    }

    /// Nontrivial means at least one step.
    pub fn is_nontrivial(&self) -> bool {
        self.steps() > 0
    }

    /// Closed means the path returns to its starting face.
    pub fn is_closed(&self) -> bool {
        self.is_nontrivial() && self.alphas.first() == self.alphas.last()
    }
}

/// Enumerates every nontrivial simple V-path of the field: paths whose
/// lower faces are pairwise distinct, except that the final face may equal
/// the first (a closed path). This follows the definition literally — walk
/// up through a matched pair, step down to any other face — and serves as
/// the reference against which the fast gradient test is checked.
pub fn enumerate_v_paths(k: &SimplicialComplex, v: &DiscreteVectorField) -> Vec<VPath> {
    let down_lists = boundary_ids(k);
    let mut out = Vec::new();
    for start in 0..k.num_faces() {
        if v.partner_up(start).is_none() {
            continue;
        }
        let mut path = VPath {
            alphas: vec![start],
            betas: Vec::new(),
        };
        extend_v_paths(v, &down_lists, &mut path, &mut out);
    }
    out
}

fn extend_v_paths(
    v: &DiscreteVectorField,
    down_lists: &[Vec<FaceId>],
    path: &mut VPath,
    out: &mut Vec<VPath>,
) {
    let alpha = *path.alphas.last().expect("paths start nonempty");
    let beta = v
        .partner_up(alpha)
        .expect("extension only proceeds from matched faces");
    for &next in &down_lists[beta] {
        if next == alpha {
            continue;
        }
        path.alphas.push(next);
        path.betas.push(beta);
        out.push(path.clone());
        // Extend unless the path closed or would revisit a face: a closed
        // path through any revisited face is found from that face's own
        // start instead.
        let closed = next == path.alphas[0];
        let revisit = path.alphas[..path.alphas.len() - 1].contains(&next);
        if !closed && !revisit && v.partner_up(next).is_some() {
            extend_v_paths(v, down_lists, path, out);
        }
        path.alphas.pop();
        path.betas.pop();
    }
}

/// Is the field a gradient field (no nontrivial closed V-path)?
///
/// Decided by cycle detection on the flow digraph: matched incidences
/// point up (σ → τ), all others point down (τ → σ). A directed cycle in
/// this digraph cannot leave a pair of consecutive dimensions — after an
/// up-step the only moves are down-steps, and two consecutive down-steps
/// can never climb back — so a cycle is precisely an alternating up/down
/// walk, i.e. a closed V-path. The literal path enumeration above
/// cross-checks this equivalence in the test suites.
pub fn is_gradient(k: &SimplicialComplex, v: &DiscreteVectorField) -> bool {
    let n = k.num_faces();
    let mut succ: Vec<Vec<FaceId>> = vec![Vec::new(); n];
    for (coface_id, coface) in k.faces().iter().enumerate() {
        if coface.dim() == 0 {
            continue;
        }
        for sub in coface.boundary() {
            let face_id = k.face_id(&sub).expect("complexes are downward closed");
            if v.partner_up(face_id) == Some(coface_id) {
                succ[face_id].push(coface_id);
            } else {
                succ[coface_id].push(face_id);
            }
        }
    }
    !has_directed_cycle(&succ)
}

/// Iterative three-color DFS cycle detection.
fn has_directed_cycle(succ: &[Vec<usize>]) -> bool {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let mut color = vec![WHITE; succ.len()];
    for root in 0..succ.len() {
        if color[root] != WHITE {
            continue;
        }
        // Stack entries: (node, index of next successor to visit).
        let mut stack = vec![(root, 0usize)];
        color[root] = GRAY;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < succ[node].len() {
                let child = succ[node][*next];
                *next += 1;
                match color[child] {
                    WHITE => {
                        color[child] = GRAY;
                        stack.push((child, 0));
                    }
                    GRAY => return true,
                    _ => {}
                }
            } else {
                color[node] = BLACK;
                stack.pop();
            }
        }
    }
    false
}

/// Enumerates every nonempty gradient field of the complex, in
/// lexicographic order of primitive index sets.
///
/// The empty field is vacuously a gradient field but corresponds to no
/// simplex of the Morse complex, so it is not returned. Errors when more
/// than `budget` fields exist.
pub fn enumerate_gvfs(
    k: &SimplicialComplex,
    budget: usize,
) -> Result<Vec<DiscreteVectorField>, MorseError> {
    let prims = primitives(k);
    let sets = enumerate_gvf_index_sets(k, &prims, budget)?;
    Ok(sets
        .into_iter()
        .map(|set| {
            let pairs: Vec<PrimitiveVector> = set.iter().map(|&i| prims[i]).collect();
            make_dvf(k, &pairs).expect("enumerated sets are valid matchings")
        })
        .collect())
}

/// Core enumeration: depth-first extension over primitives in canonical
/// order, keeping a field only while it stays a matching and acyclic.
/// Returns index sets into `prims`, in lexicographic order.
fn enumerate_gvf_index_sets(
    k: &SimplicialComplex,
    prims: &[PrimitiveVector],
    budget: usize,
) -> Result<Vec<Vec<usize>>, MorseError> {
    let down_lists = boundary_ids(k);
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; k.num_faces()];
    let mut up_of: Vec<Option<FaceId>> = vec![None; k.num_faces()];
    // Reachability stamps avoid clearing a visited array per check.
    let mut stamp = vec![0u64; k.num_faces()];
    let mut clock = 0u64;

    // Explicit stack of the next primitive index to try at each depth.
    let mut cursor: Vec<usize> = vec![0];
    loop {
        let next = match cursor.last_mut() {
            Some(next) => next,
            None => break,
        };
        let i = *next;
        if i == prims.len() {
            cursor.pop();
            if let Some(&chosen) = current.last() {
                // Undo the choice made at the depth we return to.
                let p = prims[chosen];
                used[p.face] = false;
                used[p.coface] = false;
                up_of[p.face] = None;
                current.pop();
            }
            continue;
        }
        *next += 1;
        let p = prims[i];
        if used[p.face] || used[p.coface] {
            continue;
        }
        // Adding (σ, τ) keeps the field acyclic unless τ already reaches σ
        // through the existing flow.
        clock += 1;
        if reaches(&down_lists, &up_of, &mut stamp, clock, p.coface, p.face) {
            continue;
        }
        used[p.face] = true;
        used[p.coface] = true;
        up_of[p.face] = Some(p.coface);
        current.push(i);
        if found.len() == budget {
            return Err(MorseError::BudgetExceeded { budget });
        }
        found.push(current.clone());
        cursor.push(i + 1);
    }
    Ok(found)
}

/// Can `from` (an upper face) reach `target` (a lower face) by alternating
/// down-steps and matched up-steps? Used as the incremental acyclicity
/// test: matching `target` with `from` creates a closed V-path exactly
/// when such a route already exists.
fn reaches(
    down_lists: &[Vec<FaceId>],
    up_of: &[Option<FaceId>],
    stamp: &mut [u64],
    clock: u64,
    from: FaceId,
    target: FaceId,
) -> bool {
    let mut stack: Vec<FaceId> = Vec::new();
    for &alpha in &down_lists[from] {
        if alpha == target {
            // Once (target, from) is matched, the down-step from `from` to
            // `target` no longer exists, so it cannot start a cycle.
            continue;
        }
        if stamp[alpha] != clock {
            stamp[alpha] = clock;
            stack.push(alpha);
        }
    }
    while let Some(alpha) = stack.pop() {
        let Some(beta) = up_of[alpha] else {
            continue;
        };
        for &next in &down_lists[beta] {
            if next == alpha {
                continue;
            }
            if next == target {
                return true;
            }
            if stamp[next] != clock {
                stamp[next] = clock;
                stack.push(next);
            }
        }
    }
    false
}

/// Face-id boundary lists, indexed by face id.
fn boundary_ids(k: &SimplicialComplex) -> Vec<Vec<FaceId>> {
    k.faces()
        .iter()
        .map(|face| {
            let mut ids: Vec<FaceId> = face
                .boundary()
                .iter()
                .map(|s| k.face_id(s).expect("complexes are downward closed"))
                .collect();
            ids.sort_unstable();
            ids
        })
        .collect()
}

/// Builds the Morse complex M(K): one vertex per primitive of `k` (labeled
/// `face|coface`), one simplex per nonempty gradient field.
///
/// The construction hands the full family of gradient fields to the
/// closure-*checking* complex constructor, so the heredity of gradient
/// fields — every subset of one is again one — is re-proved structurally
/// on every call rather than assumed.
pub fn build_morse_complex(
    k: &SimplicialComplex,
    budget: usize,
) -> Result<SimplicialComplex, MorseError> {
    let prims = primitives(k);
    let labels: Vec<String> = prims.iter().map(|p| p.label(k)).collect();
    let sets = enumerate_gvf_index_sets(k, &prims, budget)?;
    let faces: Vec<Simplex> = sets.into_iter().map(Simplex::new).collect();
    Ok(SimplicialComplex::from_labeled_faces(labels, faces)?)
}

/// Parses one discrete vector field from a line of `σ>τ` tokens.
///
/// Within a token, a simplex is written as its vertex labels, either
/// comma-separated (`v0,v1`) or, when every label is a single character,
/// simply concatenated (`ab`).
pub fn parse_gvf_line(
    k: &SimplicialComplex,
    line: &str,
) -> Result<DiscreteVectorField, MorseError> {
    parse_gvf_fields(k, line).and_then(|fields| {
        fields.into_iter().next().ok_or(MorseError::Parse {
            line: 1,
            message: "no field on line".to_string(),
        })
    })
}

/// Parses a fixture file of discrete vector fields: one field per line as
/// whitespace-separated `σ>τ` tokens, `#` starting a comment, blank lines
/// ignored.
pub fn parse_gvf_fields(
    k: &SimplicialComplex,
    text: &str,
) -> Result<Vec<DiscreteVectorField>, MorseError> {
    let label_ids: HashMap<&str, usize> = k
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let mut pairs = Vec::new();
        for token in line.split_whitespace() {
            let mut halves = token.split('>');
            let (face, coface) = match (halves.next(), halves.next(), halves.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(MorseError::Parse {
                        line: lineno,
                        message: format!("token {token:?} is not of the form σ>τ"),
                    })
                }
            };
            let face = parse_simplex_token(k, &label_ids, face, lineno)?;
            let coface = parse_simplex_token(k, &label_ids, coface, lineno)?;
            pairs.push(PrimitiveVector { face, coface });
        }
        let dvf = make_dvf(k, &pairs).map_err(|e| match e {
            MorseError::Parse { .. } => e,
            other => MorseError::Parse {
                line: lineno,
                message: other.to_string(),
            },
        })?;
        out.push(dvf);
    }
    Ok(out)
}

/// Resolves a simplex written as vertex labels to its face id.
fn parse_simplex_token(
    k: &SimplicialComplex,
    label_ids: &HashMap<&str, usize>,
    token: &str,
    lineno: usize,
) -> Result<FaceId, MorseError> {
    let parse_err = |message: String| MorseError::Parse {
        line: lineno,
        message,
    };
    let verts: Vec<usize> = if token.contains(',') {
        token
            .split(',')
            .map(|l| {
                label_ids
                    .get(l)
                    .copied()
                    .ok_or_else(|| parse_err(format!("unknown vertex label {l:?}")))
            })
            .collect::<Result<_, _>>()?
    } else if let Some(&v) = label_ids.get(token) {
        vec![v]
    } else {
        token
            .chars()
            .map(|c| {
                label_ids
                    .get(c.to_string().as_str())
                    .copied()
                    .ok_or_else(|| parse_err(format!("unknown simplex {token:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    if verts.len() != verts.iter().collect::<std::collections::BTreeSet<_>>().len() {
        return Err(parse_err(format!("simplex {token:?} repeats a vertex")));
    }
    k.face_id(&Simplex::new(verts))
        .ok_or_else(|| parse_err(format!("{token:?} is not a face of the complex")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate_cycle, generate_path, SimplicialComplex};

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[&["a", "b"], &["b", "c"], &["a", "c"]]).unwrap()
    }

    /// Face ids in the triangle: a=0, b=1, c=2, ab=3, ac=4, bc=5.
    fn prim(face: FaceId, coface: FaceId) -> PrimitiveVector {
        PrimitiveVector { face, coface }
    }

    #[test]
    fn primitive_order_matches_morse_vertex_ids() {
        let k = triangle();
        let prims = primitives(&k);
        assert_eq!(
            prims,
            vec![
                prim(0, 3), // (a, ab)
                prim(1, 3), // (b, ab)
                prim(0, 4), // (a, ac)
                prim(2, 4), // (c, ac)
                prim(1, 5), // (b, bc)
                prim(2, 5), // (c, bc)
            ]
        );
        assert_eq!(prims[0].label(&k), "a|ab");
        assert_eq!(prims[0].index(&k), 1);
    }

    #[test]
    fn primitive_count_equals_hasse_edge_count() {
        for k in [
            triangle(),
            generate_path(4).unwrap(),
            crate::complex::generate_boundary_simplex(3).unwrap(),
        ] {
            let h = crate::hasse::build_hasse(&k);
            assert_eq!(primitives(&k).len(), h.edge_count());
        }
    }

    #[test]
    fn make_dvf_accepts_matchings() {
        let k = triangle();
        let v = make_dvf(&k, &[prim(0, 3), prim(2, 4)]).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.partner_up(0), Some(3));
        assert_eq!(v.partner_down(4), Some(2));
        assert!(v.is_matched(2));
        assert!(!v.is_matched(1));
        assert!(v.contains_pair(&prim(0, 3)));
        assert!(!v.contains_pair(&prim(1, 3)));
        assert!(make_dvf(&k, &[]).unwrap().is_empty());
    }

    #[test]
    fn make_dvf_names_the_doubly_used_simplex() {
        let k = triangle();
        // Both pairs use vertex a.
        match make_dvf(&k, &[prim(0, 3), prim(0, 4)]) {
            Err(MorseError::MatchingViolation { label }) => assert_eq!(label, "a"),
            other => panic!("expected matching violation, got {other:?}"),
        }
        // Both pairs use edge ab.
        match make_dvf(&k, &[prim(0, 3), prim(1, 3)]) {
            Err(MorseError::MatchingViolation { label }) => assert_eq!(label, "ab"),
            other => panic!("expected matching violation, got {other:?}"),
        }
    }

    #[test]
    fn make_dvf_rejects_non_primitives() {
        let k = triangle();
        // (a, bc): not incident.
        assert!(matches!(
            make_dvf(&k, &[prim(0, 5)]),
            Err(MorseError::NotPrimitive { .. })
        ));
        // (ab, a): wrong way up.
        assert!(matches!(
            make_dvf(&k, &[prim(3, 0)]),
            Err(MorseError::NotPrimitive { .. })
        ));
        assert!(matches!(
            make_dvf(&k, &[prim(0, 17)]),
            Err(MorseError::FaceOutOfRange { id: 17, .. })
        ));
    }

    #[test]
    fn single_primitive_v_paths() {
        let k = triangle();
        let v = make_dvf(&k, &[prim(0, 3)]).unwrap();
        let paths = enumerate_v_paths(&k, &v);
        // One path: a, ab, b. It is nontrivial and open.
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].alphas(), &[0, 1]);
        assert_eq!(paths[0].betas(), &[3]);
        assert!(paths[0].is_nontrivial());
        assert!(!paths[0].is_closed());
        assert!(is_gradient(&k, &v));
    }

    #[test]
    fn cyclic_matching_has_closed_path() {
        let k = triangle();
        // (a, ab), (b, bc), (c, ac): flows a -> b -> c -> a.
        let v = make_dvf(&k, &[prim(0, 3), prim(1, 5), prim(2, 4)]).unwrap();
        let paths = enumerate_v_paths(&k, &v);
        assert!(paths.iter().any(VPath::is_closed));
        assert!(!is_gradient(&k, &v));
        // The opposite cyclic orientation is the only other non-gradient
        // matching.
        let w = make_dvf(&k, &[prim(1, 3), prim(2, 5), prim(0, 4)]).unwrap();
        assert!(!is_gradient(&k, &w));
        // Dropping any pair leaves a gradient field.
        let partial = make_dvf(&k, &[prim(0, 3), prim(1, 5)]).unwrap();
        assert!(is_gradient(&k, &partial));
        assert!(!enumerate_v_paths(&k, &partial).iter().any(VPath::is_closed));
    }

    #[test]
    fn empty_field_is_gradient_with_no_paths() {
        let k = triangle();
        let v = make_dvf(&k, &[]).unwrap();
        assert!(enumerate_v_paths(&k, &v).is_empty());
        assert!(is_gradient(&k, &v));
    }

    #[test]
    fn gradient_test_agrees_with_path_oracle_on_triangle() {
        // All 2^6 subsets of primitives: keep the matchings, compare the
        // digraph test against the literal path enumeration.
        let k = triangle();
        let prims = primitives(&k);
        let mut checked = 0;
        for mask in 0u32..1 << prims.len() {
            let pairs: Vec<PrimitiveVector> = (0..prims.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| prims[i])
                .collect();
            let Ok(v) = make_dvf(&k, &pairs) else {
                continue;
            };
            let oracle = !enumerate_v_paths(&k, &v).iter().any(VPath::is_closed);
            assert_eq!(is_gradient(&k, &v), oracle, "mask {mask:b}");
            checked += 1;
        }
        // Matchings of the 6-node incidence cycle: the Lucas number L6.
        assert_eq!(checked, 18);
    }

    #[test]
    fn gvf_enumeration_counts() {
        // Counts fixed against an independent brute-force enumeration
        // (filter all primitive subsets by matching + no closed path).
        let by_size = |k: &SimplicialComplex| {
            let gvfs = enumerate_gvfs(k, DEFAULT_GVF_BUDGET).unwrap();
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for v in &gvfs {
                *counts.entry(v.len()).or_default() += 1;
            }
            counts
        };
        let c3 = by_size(&generate_cycle(3).unwrap());
        assert_eq!(c3, BTreeMap::from([(1, 6), (2, 9)]));
        let c4 = by_size(&generate_cycle(4).unwrap());
        assert_eq!(c4, BTreeMap::from([(1, 8), (2, 20), (3, 16)]));
        let p3 = by_size(&generate_path(3).unwrap());
        assert_eq!(p3, BTreeMap::from([(1, 4), (2, 3)]));
        // A single edge: two primitives, both sharing the edge.
        let edge = SimplicialComplex::from_facets(&[&["a", "b"]]).unwrap();
        assert_eq!(by_size(&edge), BTreeMap::from([(1, 2)]));
    }

    #[test]
    fn gvf_enumeration_is_lexicographic_and_deterministic() {
        let k = generate_cycle(3).unwrap();
        let gvfs = enumerate_gvfs(&k, DEFAULT_GVF_BUDGET).unwrap();
        let prims = primitives(&k);
        let index_of = |p: &PrimitiveVector| prims.iter().position(|q| q == p).unwrap();
        let sets: Vec<Vec<usize>> = gvfs
            .iter()
            .map(|v| v.pairs().iter().map(|p| index_of(p)).collect())
            .collect();
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sets, sorted);
        assert_eq!(sets[0], vec![0]);
    }

    #[test]
    fn gvf_budget_is_enforced() {
        let k = generate_cycle(3).unwrap();
        assert!(matches!(
            enumerate_gvfs(&k, 5),
            Err(MorseError::BudgetExceeded { budget: 5 })
        ));
        assert_eq!(enumerate_gvfs(&k, 15).unwrap().len(), 15);
    }

    #[test]
    fn morse_complex_of_triangle() {
        let k = triangle();
        let m = build_morse_complex(&k, DEFAULT_GVF_BUDGET).unwrap();
        assert_eq!(m.f_vector(), vec![6, 9]);
        assert_eq!(m.dimension(), Some(1));
        let labels: Vec<&str> = m.labels().iter().map(String::as_str).collect();
        assert_eq!(labels, vec!["a|ab", "b|ab", "a|ac", "c|ac", "b|bc", "c|bc"]);
        assert!(m.is_connected());
    }

    #[test]
    fn morse_complex_of_path_is_a_path() {
        // The 3-vertex path has 4 primitives and its Morse complex is the
        // 4-vertex path.
        let m = build_morse_complex(&generate_path(3).unwrap(), DEFAULT_GVF_BUDGET).unwrap();
        assert_eq!(m.f_vector(), vec![4, 3]);
        let p4 = generate_path(4).unwrap();
        assert_eq!(m.f_vector(), p4.f_vector());
    }

    #[test]
    fn morse_complex_of_single_edge_is_two_points() {
        let edge = SimplicialComplex::from_facets(&[&["a", "b"]]).unwrap();
        let m = build_morse_complex(&edge, DEFAULT_GVF_BUDGET).unwrap();
        assert_eq!(m.f_vector(), vec![2]);
        assert!(!m.is_connected());
    }

    #[test]
    fn morse_complex_of_point_is_empty() {
        let pt = SimplicialComplex::from_facets(&[&["a"]]).unwrap();
        let m = build_morse_complex(&pt, DEFAULT_GVF_BUDGET).unwrap();
        assert_eq!(m.num_faces(), 0);
        assert_eq!(m.num_vertices(), 0);
        assert_eq!(m.dimension(), None);
    }

    #[test]
    fn subfield_relation() {
        let k = triangle();
        let small = make_dvf(&k, &[prim(0, 3)]).unwrap();
        let big = make_dvf(&k, &[prim(0, 3), prim(2, 5)]).unwrap();
        let other = make_dvf(&k, &[prim(1, 3)]).unwrap();
        assert!(small.is_subfield_of(&big));
        assert!(small.is_subfield_of(&small));
        assert!(!big.is_subfield_of(&small));
        assert!(!other.is_subfield_of(&big));
        assert!(make_dvf(&k, &[]).unwrap().is_subfield_of(&small));
    }

    #[test]
    fn gvf_text_parsing() {
        let k = triangle();
        let fields = parse_gvf_fields(&k, "# two fields\na>ab b>bc\n\na>ac\n").unwrap();
        assert_eq!(fields.len(), 2);
        assert_eq!(fields[0].len(), 2);
        assert!(fields[0].contains_pair(&prim(0, 3)));
        assert!(fields[0].contains_pair(&prim(1, 5)));
        assert_eq!(fields[1].pairs(), &[prim(0, 4)]);

        // Comma-separated labels address multi-character vertex names.
        let c4 = generate_cycle(4).unwrap();
        let fields = parse_gvf_fields(&c4, "v0>v0,v1 v2>v2,v3\n").unwrap();
        assert_eq!(fields[0].len(), 2);

        let single = parse_gvf_line(&k, "c>bc").unwrap();
        assert_eq!(single.pairs(), &[prim(2, 5)]);
    }

    #[test]
    fn gvf_parse_errors_carry_line_numbers() {
        let k = triangle();
        match parse_gvf_fields(&k, "a>ab\nq>ab\n") {
            Err(MorseError::Parse { line: 2, message }) => assert!(message.contains('q')),
            other => panic!("expected parse error on line 2, got {other:?}"),
        }
        match parse_gvf_fields(&k, "ab\n") {
            Err(MorseError::Parse { line: 1, message }) => {
                assert!(message.contains("σ>τ"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // Matching violations surface as parse errors with the line.
        match parse_gvf_fields(&k, "\na>ab a>ac\n") {
            Err(MorseError::Parse { line: 2, message }) => {
                assert!(message.contains("two pairs"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // A valid simplex that is not a face.
        let path = generate_path(3).unwrap();
        assert!(matches!(
            parse_gvf_fields(&path, "v0>v0,v2\n"),
            Err(MorseError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn subsets_of_gradient_fields_stay_gradient() {
        let k = triangle();
        for v in enumerate_gvfs(&k, DEFAULT_GVF_BUDGET).unwrap() {
            let pairs = v.pairs();
            for mask in 0u32..1 << pairs.len() {
                let sub: Vec<PrimitiveVector> = (0..pairs.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| pairs[i])
                    .collect();
                let sub = make_dvf(&k, &sub).unwrap();
                assert!(is_gradient(&k, &sub));
                assert!(sub.is_subfield_of(&v));
            }
        }
    }
}
