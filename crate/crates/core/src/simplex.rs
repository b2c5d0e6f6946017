//! Abstract simplices over dense vertex ids.
//!
//! A simplex is a nonempty finite set of vertices, stored as a sorted
//! `Vec<usize>`. When every vertex id fits below 64 we additionally keep a
//! bitmask so that face/disjointness tests are single word operations; the
//! vector representation stays authoritative for larger vertex sets.

use std::cmp::Ordering;
use std::fmt;

/// A vertex of a complex, as a dense index into the complex's label table.
pub type Vertex = usize;

/// A nonempty set of vertices, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    verts: Vec<Vertex>,
    /// Bitmask over vertex ids; zero (and unused) when any id is >= 64.
    bits: u64,
}

impl Simplex {
    /// Builds a simplex from a list of vertex ids.
    ///
    /// The list is sorted internally. Panics on an empty list or a repeated
    /// vertex: both indicate a bug in the caller, since user-facing inputs
    /// are validated before simplices are constructed.
    pub fn new(verts: impl Into<Vec<Vertex>>) -> Self {
        let mut verts = verts.into();
        verts.sort_unstable();
        assert!(!verts.is_empty(), "a simplex needs at least one vertex");
        assert!(
            verts.windows(2).all(|w| w[0] != w[1]),
            "a simplex cannot repeat a vertex"
        );
        let bits = if *verts.last().unwrap() < 64 {
            verts.iter().fold(0u64, |m, &v| m | 1 << v)
        } else {
            0
        };
        Simplex { verts, bits }
    }

    /// The vertices of the simplex, in increasing order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    /// Dimension: one less than the number of vertices.
    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    /// True when the bitmask representation is valid for this simplex.
    fn small(&self) -> bool {
        // `verts` is sorted, so checking the last id suffices.
        *self.verts.last().unwrap() < 64
    }

    /// Does this simplex contain the vertex `v`?
    pub fn contains(&self, v: Vertex) -> bool {
        if self.small() {
            v < 64 && self.bits & (1 << v) != 0
        } else {
            self.verts.binary_search(&v).is_ok()
        }
    }

    /// Is `self` a (not necessarily proper) face of `other`?
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.small() && other.small() {
            return self.bits & !other.bits == 0;
        }
        // Merge walk over the two sorted vertex lists.
        let mut it = other.verts.iter();
        self.verts
            .iter()
            .all(|v| it.by_ref().any(|w| w == v))
    }

    /// Do the two simplices share no vertex?
    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        if self.small() && other.small() {
            return self.bits & other.bits == 0;
        }
        let (mut i, mut j) = (0, 0);
        while i < self.verts.len() && j < other.verts.len() {
            match self.verts[i].cmp(&other.verts[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// The codimension-one faces, i.e. every subset missing exactly one
    /// vertex. Empty for a single vertex.
    pub fn boundary(&self) -> Vec<Simplex> {
        if self.verts.len() == 1 {
            return Vec::new();
        }
        (0..self.verts.len())
            .map(|skip| {
                let verts: Vec<Vertex> = self
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                Simplex::new(verts)
            })
            .collect()
    }

    /// The image of this simplex under a vertex map given as an image table.
    ///
    /// Panics if the map collapses two vertices of the simplex; callers only
    /// apply bijections.
    pub fn map(&self, images: &[Vertex]) -> Simplex {
        Simplex::new(
            self.verts
                .iter()
                .map(|&v| images[v])
                .collect::<Vec<_>>(),
        )
    }
}

/// Simplices order first by dimension, then lexicographically by vertex
/// list. This is the canonical face order used throughout the crate.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.verts
            .len()
            .cmp(&other.verts.len())
            .then_with(|| self.verts.cmp(&other.verts))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simplex{:?}", self.verts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_vertices() {
        let s = Simplex::new(vec![2, 0, 1]);
        assert_eq!(s.vertices(), &[0, 1, 2]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    #[should_panic(expected = "repeat")]
    fn construction_rejects_duplicates() {
        let _ = Simplex::new(vec![1, 1]);
    }

    #[test]
    fn face_and_disjointness_tests() {
        let edge = Simplex::new(vec![0, 2]);
        let tri = Simplex::new(vec![0, 1, 2]);
        assert!(edge.is_face_of(&tri));
        assert!(!tri.is_face_of(&edge));
        assert!(tri.is_face_of(&tri));
        assert!(edge.is_disjoint(&Simplex::new(vec![1, 3])));
        assert!(!edge.is_disjoint(&Simplex::new(vec![2, 3])));
    }

    #[test]
    fn large_ids_fall_back_to_merge_walk() {
        // Same answers with and without the bitmask fast path.
        let a = Simplex::new(vec![100, 3]);
        let b = Simplex::new(vec![3, 100, 200]);
        assert!(a.is_face_of(&b));
        assert!(!b.is_face_of(&a));
        assert!(a.is_disjoint(&Simplex::new(vec![101, 201])));
        assert!(!a.is_disjoint(&Simplex::new(vec![100])));
        assert!(a.contains(100));
        assert!(!a.contains(4));
    }

    #[test]
    fn boundary_of_triangle_is_three_edges() {
        let tri = Simplex::new(vec![0, 1, 2]);
        let mut bd = tri.boundary();
        bd.sort();
        assert_eq!(
            bd,
            vec![
                Simplex::new(vec![0, 1]),
                Simplex::new(vec![0, 2]),
                Simplex::new(vec![1, 2]),
            ]
        );
        assert!(Simplex::new(vec![5]).boundary().is_empty());
    }

    #[test]
    fn canonical_order_is_dimension_then_lex() {
        let mut faces = vec![
            Simplex::new(vec![0, 1, 2]),
            Simplex::new(vec![2]),
            Simplex::new(vec![0, 2]),
            Simplex::new(vec![0, 1]),
            Simplex::new(vec![0]),
        ];
        faces.sort();
        let dims: Vec<usize> = faces.iter().map(Simplex::dim).collect();
        assert_eq!(dims, vec![0, 0, 1, 1, 2]);
        assert_eq!(faces[2].vertices(), &[0, 1]);
        assert_eq!(faces[3].vertices(), &[0, 2]);
    }

    #[test]
    fn map_relabels_and_resorts() {
        let s = Simplex::new(vec![0, 2]);
        // 0 -> 3, 1 -> 1, 2 -> 0
        assert_eq!(s.map(&[3, 1, 0]).vertices(), &[0, 3]);
    }
}
