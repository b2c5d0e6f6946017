//! Plain undirected graphs.
//!
//! Used for 1-skeletons, for Hasse diagrams with the layer structure
//! forgotten, and for reference shapes (cycles, paths, complete graphs)
//! that other graphs are compared against.

use std::fmt::Write as _;

/// A finite simple undirected graph on nodes `0..n`, stored as sorted
/// adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// An edgeless graph on `n` nodes.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// A graph on `n` nodes with the given edges.
    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts an undirected edge; repeated insertions are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of `u`, in increasing order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Degree of `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Is `{u, v}` an edge?
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as ordered pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The cycle graph on `n >= 3` nodes, `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle graph needs at least 3 nodes");
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::with_edges(n, &edges)
    }

    /// The path graph on `n >= 1` nodes.
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::with_edges(n, &edges)
    }

    /// The complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Renders the graph in DOT format. Node `i` becomes `n<i>` with
    /// `labels[i]` as its displayed label.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        assert_eq!(labels.len(), self.node_count());
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for (i, label) in labels.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", escape_dot(label)).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  n{u} -- n{v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Escapes a string for use inside a double-quoted DOT label.
pub(crate) fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
