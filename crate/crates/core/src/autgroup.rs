//! Automorphism groups of complexes and graphs.
//!
//! Groups are stored by explicit element lists: every instance this crate
//! targets is desk-scale (a few hundred elements at most), and explicit
//! lists keep every downstream check — homomorphism, injectivity, coset
//! decompositions — a direct set computation.
//!
//! The searches are exact backtracking over vertex images. An iterated
//! neighborhood-color refinement (each round recolors a node by its color
//! plus the multiset of neighbor colors) is used only to seed initial
//! colors and prune candidates; correctness never depends on its strength,
//! since every face/adjacency constraint is checked explicitly before a
//! map is accepted.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::complex::{FaceId, SimplicialComplex};
use crate::graph::Graph;
use crate::perm::Permutation;

/// Default bound on backtracking-search nodes.
pub const DEFAULT_SEARCH_BUDGET: usize = 10_000_000;

/// Above this many pairwise products, `from_elements` skips the explicit
/// closure table. Every group in this crate's domain is far below it.
const CLOSURE_CHECK_LIMIT: usize = 4_000_000;

/// Errors raised by group construction and symmetry searches.
#[derive(Debug, Error)]
pub enum AutError {
    /// The backtracking search exceeded its node budget.
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: usize },
    /// A group was built from an empty element list.
    #[error("a permutation group needs at least one element")]
    Empty,
    /// Elements of different degrees were mixed.
    #[error("element degrees disagree: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    /// The identity is missing from the element list.
    #[error("element list does not contain the identity")]
    MissingIdentity,
    /// An element's inverse is missing.
    #[error("element list does not contain the inverse of {element}")]
    MissingInverse { element: String },
    /// Two elements compose to something outside the list.
    #[error("element list is not closed: {a} ∘ {b} is not present")]
    NotClosed { a: String, b: String },
    /// A map between groups does not cover its domain.
    #[error("map does not cover group element {element}")]
    MapNotTotal { element: String },
}

/// A finite permutation group given by its full, sorted element list.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    /// All elements, sorted; binary search gives membership.
    elements: Vec<Permutation>,
    /// An irredundant generating set, chosen greedily from the sorted
    /// element list (hence deterministic).
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    /// Builds a group from an explicit element list, verifying the group
    /// axioms: identity and inverses always, closure via the full product
    /// table whenever the list is small enough (it always is at the scales
    /// this crate is built for).
    pub fn from_elements(
        degree: usize,
        elements: Vec<Permutation>,
    ) -> Result<Self, AutError> {
        if elements.is_empty() {
            return Err(AutError::Empty);
        }
        for e in &elements {
            if e.degree() != degree {
                return Err(AutError::DegreeMismatch(degree, e.degree()));
            }
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();

        let identity = Permutation::identity(degree);
        if elements.binary_search(&identity).is_err() {
            return Err(AutError::MissingIdentity);
        }
        for e in &elements {
            if elements.binary_search(&e.inverse()).is_err() {
                return Err(AutError::MissingInverse {
                    element: e.to_string(),
                });
            }
        }
        if elements.len() * elements.len() <= CLOSURE_CHECK_LIMIT {
            for a in &elements {
                for b in &elements {
                    if elements.binary_search(&a.compose(b)).is_err() {
                        return Err(AutError::NotClosed {
                            a: a.to_string(),
                            b: b.to_string(),
                        });
                    }
                }
            }
        }
        if degree <= 34 {
            // Lagrange sanity: the order must divide degree!.
            let fact: u128 = (1..=degree as u128).product();
            assert!(
                fact % elements.len() as u128 == 0,
                "group order {} does not divide {}! — search bug",
                elements.len(),
                degree
            );
        }

        let generators = minimal_generators(degree, &elements);
        Ok(PermutationGroup {
            degree,
            elements,
            generators,
        })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// An irredundant generating set (empty for the trivial group).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Is this the trivial group?
    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Membership test.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Do the two groups have exactly the same elements?
    pub fn same_elements(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

/// The orbit of a point block under a group, acting setwise. Blocks are
/// returned sorted internally and ordered lexicographically.
pub fn orbit(group: &PermutationGroup, block: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for g in group.elements() {
        let mut image: Vec<usize> = block.iter().map(|&p| g.image(p)).collect();
        image.sort_unstable();
        seen.insert(image);
    }
    let orbit: Vec<Vec<usize>> = seen.into_iter().collect();
    debug_assert_eq!(
        orbit.len() * stabilizer_order(group, block),
        group.order(),
        "orbit-stabilizer mismatch"
    );
    orbit
}

/// The order of the setwise stabilizer of a point block.
pub fn stabilizer_order(group: &PermutationGroup, block: &[usize]) -> usize {
    let target: BTreeSet<usize> = block.iter().copied().collect();
    group
        .elements()
        .iter()
        .filter(|g| {
            block.iter().all(|&p| target.contains(&g.image(p)))
        })
        .count()
}

/// Checks that `map` is a group homomorphism from `domain` into `codomain`:
/// total on the domain, images in the codomain, and compatible with
/// composition on every pair. Errors when the map misses a domain element;
/// returns `false` when some pair composes incompatibly.
pub fn is_homomorphism(
    map: &BTreeMap<Permutation, Permutation>,
    domain: &PermutationGroup,
    codomain: &PermutationGroup,
) -> Result<bool, AutError> {
    for a in domain.elements() {
        let fa = map.get(a).ok_or_else(|| AutError::MapNotTotal {
            element: a.to_string(),
        })?;
        if !codomain.contains(fa) {
            return Ok(false);
        }
    }
    for a in domain.elements() {
        for b in domain.elements() {
            let ab = a.compose(b);
            let fab = map.get(&ab).ok_or_else(|| AutError::MapNotTotal {
                element: ab.to_string(),
            })?;
            if *fab != map[a].compose(&map[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is the map injective (no two keys share an image)?
pub fn is_injective(map: &BTreeMap<Permutation, Permutation>) -> bool {
    let images: BTreeSet<&Permutation> = map.values().collect();
    images.len() == map.len()
}

/// All automorphisms of a graph.
pub fn graph_automorphisms(g: &Graph, budget: usize) -> Result<PermutationGroup, AutError> {
    let n = g.node_count();
    if n == 0 {
        return PermutationGroup::from_elements(0, vec![Permutation::identity(0)]);
    }
    let colors = refine_colors(g, &vec![0; n]);
    let found = search_maps(
        &GraphSide::new(g, &colors),
        &GraphSide::new(g, &colors),
        budget,
        true,
        |_, _, _| true,
    )?;
    PermutationGroup::from_elements(n, found)
}

/// Searches for an isomorphism between two graphs.
///
/// Returns an explicit node bijection when one exists, or `None` after the
/// search space is exhausted (a sound certificate: color refinement only
/// merges nodes that could correspond, and the backtracking enumerates
/// every color-respecting candidate).
pub fn graph_isomorphism(
    g: &Graph,
    h: &Graph,
    budget: usize,
) -> Result<Option<Permutation>, AutError> {
    if g.node_count() != h.node_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.node_count();
    if n == 0 {
        return Ok(Some(Permutation::identity(0)));
    }
    // Refine the disjoint union so colors on the two sides are comparable.
    let mut union = Graph::new(2 * n);
    for (u, v) in g.edges() {
        union.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        union.add_edge(n + u, n + v);
    }
    let colors = refine_colors(&union, &vec![0; 2 * n]);
    let (cg, ch) = (&colors[..n], &colors[n..]);
    let mut found = search_maps(
        &GraphSide::new(g, cg),
        &GraphSide::new(h, ch),
        budget,
        false,
        |_, _, _| true,
    )?;
    Ok(found.pop())
}

/// All automorphisms of a complex: vertex bijections mapping every face to
/// a face.
pub fn complex_automorphisms(
    k: &SimplicialComplex,
    budget: usize,
) -> Result<PermutationGroup, AutError> {
    let n = k.num_vertices();
    if n == 0 {
        return PermutationGroup::from_elements(0, vec![Permutation::identity(0)]);
    }

    // Initial colors: how many faces of each dimension touch the vertex.
    // Automorphisms preserve these profiles.
    let dims = k.dimension().map_or(0, |d| d + 1);
    let mut profiles = vec![vec![0usize; dims]; n];
    for face in k.faces() {
        for &v in face.vertices() {
            profiles[v][face.dim()] += 1;
        }
    }
    let mut distinct: Vec<Vec<usize>> = profiles.to_vec();
    distinct.sort();
    distinct.dedup();
    let init: Vec<usize> = profiles
        .iter()
        .map(|p| distinct.binary_search(p).expect("profile present"))
        .collect();

    let mut skeleton = Graph::new(n);
    for edge in k.faces_of_dim(1) {
        skeleton.add_edge(edge.vertices()[0], edge.vertices()[1]);
    }
    let colors = refine_colors(&skeleton, &init);

    // The search assigns vertices in a fixed order, so each face becomes
    // fully assigned exactly when its last vertex (in that order) receives
    // an image. Bucketing faces by that completion vertex lets the accept
    // check validate each face exactly once per search path, instead of
    // rescanning every incident face on every assignment.
    let side = GraphSide::new(&skeleton, &colors);
    let order = assignment_order(&side);
    let mut position = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    let faces_by_completion: Vec<Vec<FaceId>> = {
        let mut fbc = vec![Vec::new(); n];
        for (id, face) in k.faces().iter().enumerate() {
            let last = face
                .vertices()
                .iter()
                .max_by_key(|&&v| position[v])
                .expect("faces are nonempty");
            fbc[*last].push(id);
        }
        fbc
    };

    // Accept v -> w only while every face completed by v maps to a face.
    // A full assignment that passes all checks maps faces injectively into
    // faces — a bijection by counting.
    //
    // With at most 64 vertices a face is a u64 bitmask, so the image face
    // is assembled and looked up without allocating; this is the hot loop
    // when the complex has hundreds of thousands of faces.
    let face_masks: Option<HashSet<u64>> = (n <= 64).then(|| {
        k.faces()
            .iter()
            .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    });
    let check = |v: usize, _w: usize, img: &[usize]| -> bool {
        if let Some(masks) = &face_masks {
            for &fid in &faces_by_completion[v] {
                let mut mask = 0u64;
                for &u in k.face(fid).vertices() {
                    debug_assert_ne!(img[u], usize::MAX);
                    mask |= 1 << img[u];
                }
                if !masks.contains(&mask) {
                    return false;
                }
            }
            return true;
        }
        for &fid in &faces_by_completion[v] {
            let face = k.face(fid);
            let mapped: Vec<usize> = face.vertices().iter().map(|&u| img[u]).collect();
            debug_assert!(!mapped.contains(&usize::MAX));
            if k.face_id(&crate::simplex::Simplex::new(mapped)).is_none() {
                return false;
            }
        }
        true
    };

    let found = search_maps_ordered(&side, &side, order, budget, true, check)?;
    PermutationGroup::from_elements(n, found)
}

/// One side of a matching search: a graph plus node colors.
struct GraphSide<'a> {
    graph: &'a Graph,
    colors: &'a [usize],
}

impl<'a> GraphSide<'a> {
    fn new(graph: &'a Graph, colors: &'a [usize]) -> Self {
        GraphSide { graph, colors }
    }
}

/// Backtracking search for color- and adjacency-respecting node bijections
/// from `a` to `b`, with an extra acceptance check run on every tentative
/// assignment. Collects all maps (`all = true`) or stops at the first.
fn search_maps(
    a: &GraphSide<'_>,
    b: &GraphSide<'_>,
    budget: usize,
    all: bool,
    accept: impl Fn(usize, usize, &[usize]) -> bool,
) -> Result<Vec<Permutation>, AutError> {
    let order = assignment_order(a);
    search_maps_ordered(a, b, order, budget, all, accept)
}

/// The fixed order in which [`search_maps`] assigns nodes: from the most
/// constrained color classes first, but always preferring a node adjacent
/// to already-ordered ones, whose adjacency constraints then prune
/// candidates immediately. Without that preference, a large color class of
/// pairwise non-adjacent nodes (e.g. the vertex and facet layers of a
/// Hasse diagram taken together) would be assigned with no pruning at all,
/// and the search would degenerate to factorial time.
fn assignment_order(a: &GraphSide<'_>) -> Vec<usize> {
    let n = a.graph.node_count();
    let mut a_sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in a.colors {
        *a_sizes.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut attached = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse(attached[v]),
                    a_sizes[&a.colors[v]],
                    a.colors[v],
                    v,
                )
            })
            .expect("an unplaced node remains");
        placed[v] = true;
        order.push(v);
        for &u in a.graph.neighbors(v) {
            attached[u] += 1;
        }
    }
    order
}

fn search_maps_ordered(
    a: &GraphSide<'_>,
    b: &GraphSide<'_>,
    order: Vec<usize>,
    budget: usize,
    all: bool,
    accept: impl Fn(usize, usize, &[usize]) -> bool,
) -> Result<Vec<Permutation>, AutError> {
    let n = a.graph.node_count();

    // Nodes of `b`, grouped by color.
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (w, &c) in b.colors.iter().enumerate() {
        by_color.entry(c).or_default().push(w);
    }
    // Color class sizes must agree side to side.
    let mut a_sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in a.colors {
        *a_sizes.entry(c).or_default() += 1;
    }
    if a_sizes.len() != by_color.len()
        || a_sizes.iter().any(|(c, &s)| by_color.get(c).map(Vec::len) != Some(s))
    {
        return Ok(Vec::new());
    }

    let mut state = SearchState {
        a,
        b,
        order,
        by_color,
        budget,
        visited: 0,
        all,
        img: vec![usize::MAX; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
        found: Vec::new(),
    };
    state.dfs(0, &accept)?;
    Ok(state.found)
}

struct SearchState<'a, 'g> {
    a: &'a GraphSide<'g>,
    b: &'a GraphSide<'g>,
    order: Vec<usize>,
    by_color: BTreeMap<usize, Vec<usize>>,
    budget: usize,
    visited: usize,
    all: bool,
    img: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    found: Vec<Permutation>,
}

impl SearchState<'_, '_> {
    fn dfs(
        &mut self,
        depth: usize,
        accept: &impl Fn(usize, usize, &[usize]) -> bool,
    ) -> Result<(), AutError> {
        if depth == self.order.len() {
            let p = Permutation::new(self.img.clone()).expect("search images are bijective");
            self.found.push(p);
            return Ok(());
        }
        let v = self.order[depth];
        let candidates = self.by_color[&self.a.colors[v]].clone();
        for w in candidates {
            if self.used[w] {
                continue;
            }
            self.visited += 1;
            if self.visited > self.budget {
                return Err(AutError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            // Adjacency to every already-assigned node must match.
            let consistent = self.assigned.iter().all(|&u| {
                self.a.graph.has_edge(v, u) == self.b.graph.has_edge(w, self.img[u])
            });
            if !consistent {
                continue;
            }
            self.img[v] = w;
            if accept(v, w, &self.img) {
                self.used[w] = true;
                self.assigned.push(v);
                self.dfs(depth + 1, accept)?;
                self.assigned.pop();
                self.used[w] = false;
                if !self.all && !self.found.is_empty() {
                    self.img[v] = usize::MAX;
                    return Ok(());
                }
            }
            self.img[v] = usize::MAX;
        }
        Ok(())
    }
}

/// Iterated neighborhood-color refinement. Starting from `init`, each
/// round recolors a node by the pair (own color, sorted multiset of
/// neighbor colors) and renumbers densely; stops at a fixed point. The
/// result is canonical: isomorphic colored graphs get identical color
/// multisets.
fn refine_colors(g: &Graph, init: &[usize]) -> Vec<usize> {
    let n = g.node_count();
    let mut colors = dense_renumber(init);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut keys: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        keys.sort();
        keys.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| keys.binary_search(&s).expect("own signature present"))
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

/// Renumbers arbitrary color values to `0..k` preserving relative order.
fn dense_renumber(colors: &[usize]) -> Vec<usize> {
    let mut keys: Vec<usize> = colors.to_vec();
    keys.sort_unstable();
    keys.dedup();
    colors
        .iter()
        .map(|c| keys.binary_search(c).expect("own color present"))
        .collect()
}

/// Greedily extracts an irredundant generating set from a sorted element
/// list, then prunes generators made redundant by later picks.
fn minimal_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = close_under_products(degree, &gens);
    for e in elements {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(e) {
            gens.push(e.clone());
            span = close_under_products(degree, &gens);
        }
    }
    // Drop any generator the others still span.
    let mut i = 0;
    while i < gens.len() {
        let without: Vec<Permutation> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        if close_under_products(degree, &without).len() == elements.len() {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

/// The subgroup generated by `gens`, as an element set.
fn close_under_products(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let mut span: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = vec![Permutation::identity(degree)];
    span.insert(queue[0].clone());
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g.compose(&p);
            if span.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    span
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        generate_boundary_simplex, generate_cycle, generate_path, generate_simplex,
        SimplicialComplex,
    };

    fn budget() -> usize {
        DEFAULT_SEARCH_BUDGET
    }

    #[test]
    fn cycle_graph_symmetries_are_dihedral() {
        for n in 3..=8 {
            let g = Graph::cycle(n);
            let aut = graph_automorphisms(&g, budget()).unwrap();
            assert_eq!(aut.order(), 2 * n, "cycle on {n} nodes");
        }
    }

    #[test]
    fn path_and_complete_graph_symmetries() {
        let aut = graph_automorphisms(&Graph::path(4), budget()).unwrap();
        assert_eq!(aut.order(), 2);
        let aut = graph_automorphisms(&Graph::complete(4), budget()).unwrap();
        assert_eq!(aut.order(), 24);
        let aut = graph_automorphisms(&Graph::new(1), budget()).unwrap();
        assert!(aut.is_trivial());
    }

    #[test]
    fn complex_symmetries_match_known_shapes() {
        let aut = complex_automorphisms(&generate_cycle(3).unwrap(), budget()).unwrap();
        assert_eq!(aut.order(), 6);
        let aut = complex_automorphisms(&generate_cycle(6).unwrap(), budget()).unwrap();
        assert_eq!(aut.order(), 12);
        let aut = complex_automorphisms(&generate_path(3).unwrap(), budget()).unwrap();
        assert_eq!(aut.order(), 2);
        let aut = complex_automorphisms(&generate_boundary_simplex(3).unwrap(), budget()).unwrap();
        assert_eq!(aut.order(), 24);
        let aut = complex_automorphisms(&generate_simplex(3).unwrap(), budget()).unwrap();
        assert_eq!(aut.order(), 24);
    }

    #[test]
    fn complex_symmetries_see_faces_not_just_edges() {
        // Two triangles sharing an edge, one filled: the 1-skeletons agree,
        // but swapping the filled and hollow triangle is not allowed.
        let filled =
            SimplicialComplex::from_facets(&[&["a", "b", "c"], &["b", "c"], &["b", "d"], &["c", "d"]])
                .unwrap();
        let aut = complex_automorphisms(&filled, budget()).unwrap();
        // Only the identity and the b <-> c swap survive.
        assert_eq!(aut.order(), 2);
    }

    #[test]
    fn isomorphism_finds_explicit_bijection() {
        // An 8-cycle labeled two different ways.
        let g = Graph::cycle(8);
        let edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 3) % 8)).collect();
        let h = Graph::with_edges(8, &edges);
        let iso = graph_isomorphism(&g, &h, budget()).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(iso.image(u), iso.image(v)));
        }
    }

    #[test]
    fn isomorphism_rejects_distinct_graphs() {
        // Same node and edge counts: a 6-cycle vs two triangles.
        let g = Graph::cycle(6);
        let h = Graph::with_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(graph_isomorphism(&g, &h, budget()).unwrap().is_none());
        // Different sizes.
        assert!(graph_isomorphism(&Graph::cycle(3), &Graph::cycle(4), budget())
            .unwrap()
            .is_none());
    }

    #[test]
    fn group_axioms_are_enforced() {
        let id = Permutation::identity(3);
        let rot = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(matches!(
            PermutationGroup::from_elements(3, vec![rot.clone()]),
            Err(AutError::MissingIdentity)
        ));
        assert!(matches!(
            PermutationGroup::from_elements(3, vec![id.clone(), rot.clone()]),
            Err(AutError::MissingInverse { .. })
        ));
        let c3 = PermutationGroup::from_elements(
            3,
            vec![id.clone(), rot.clone(), rot.compose(&rot)],
        )
        .unwrap();
        assert_eq!(c3.order(), 3);
        assert!(c3.contains(&rot));
        // A set with identity and inverses that is not closed.
        let a = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::new(vec![0, 1, 3, 2]).unwrap();
        assert!(matches!(
            PermutationGroup::from_elements(4, vec![Permutation::identity(4), a, b]),
            Err(AutError::NotClosed { .. })
        ));
    }

    #[test]
    fn generators_span_the_group() {
        let aut = graph_automorphisms(&Graph::cycle(5), budget()).unwrap();
        assert_eq!(aut.order(), 10);
        let span = close_under_products(5, aut.generators());
        assert_eq!(span.len(), 10);
        // A dihedral group needs two generators; greedy pruning should not
        // return more.
        assert_eq!(aut.generators().len(), 2);
        assert!(PermutationGroup::trivial(4).generators().is_empty());
    }

    #[test]
    fn orbit_and_stabilizer_multiply_to_group_order() {
        let aut = graph_automorphisms(&Graph::path(3), budget()).unwrap();
        // The end nodes 0 and 2 form one orbit; the middle node is fixed.
        assert_eq!(orbit(&aut, &[0]), vec![vec![0], vec![2]]);
        assert_eq!(orbit(&aut, &[1]), vec![vec![1]]);
        assert_eq!(stabilizer_order(&aut, &[1]), 2);
        assert_eq!(stabilizer_order(&aut, &[0]), 1);
        // Setwise: the pair {0, 2} is fixed as a set by both elements.
        assert_eq!(orbit(&aut, &[0, 2]).len(), 1);
        assert_eq!(stabilizer_order(&aut, &[0, 2]), 2);
    }

    #[test]
    fn homomorphism_and_injectivity_checks() {
        let aut = graph_automorphisms(&Graph::cycle(4), budget()).unwrap();
        // The identity map is an injective homomorphism.
        let id_map: BTreeMap<Permutation, Permutation> = aut
            .elements()
            .iter()
            .map(|g| (g.clone(), g.clone()))
            .collect();
        assert!(is_homomorphism(&id_map, &aut, &aut).unwrap());
        assert!(is_injective(&id_map));
        // The constant-identity map is a homomorphism but not injective.
        let collapse: BTreeMap<Permutation, Permutation> = aut
            .elements()
            .iter()
            .map(|g| (g.clone(), Permutation::identity(4)))
            .collect();
        assert!(is_homomorphism(&collapse, &aut, &aut).unwrap());
        assert!(!is_injective(&collapse));
        // Mapping everything to a fixed non-identity element breaks
        // composition.
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let constant: BTreeMap<Permutation, Permutation> = aut
            .elements()
            .iter()
            .map(|g| (g.clone(), rot.clone()))
            .collect();
        assert!(!is_homomorphism(&constant, &aut, &aut).unwrap());
        // A map missing an element errors.
        let mut partial = id_map.clone();
        partial.remove(&Permutation::identity(4));
        assert!(matches!(
            is_homomorphism(&partial, &aut, &aut),
            Err(AutError::MapNotTotal { .. })
        ));
    }

    #[test]
    fn budget_is_respected() {
        let err = graph_automorphisms(&Graph::complete(6), 10);
        assert!(matches!(err, Err(AutError::BudgetExceeded { budget: 10 })));
    }

    #[test]
    fn refinement_separates_degree_classes() {
        let g = Graph::path(4);
        let colors = refine_colors(&g, &vec![0; 4]);
        // Ends get one color, middles another.
        assert_eq!(colors[0], colors[3]);
        assert_eq!(colors[1], colors[2]);
        assert_ne!(colors[0], colors[1]);
    }

    #[test]
    fn empty_and_degenerate_graphs() {
        let aut = graph_automorphisms(&Graph::new(0), budget()).unwrap();
        assert_eq!(aut.degree(), 0);
        assert_eq!(aut.order(), 1);
        let aut = graph_automorphisms(&Graph::new(3), budget()).unwrap();
        assert_eq!(aut.order(), 6);
    }
}
