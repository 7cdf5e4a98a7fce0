//! Vertex labels, symbolic graph families, and explicit edge sets.
//!
//! A [`GraphFamily`] is a symbolic description of a structured graph;
//! [`materialize`] expands it into an explicit [`EdgeSet`] over canonical
//! vertex labels. Tensor products use `[row, col]` coordinates: `(r1,c1)` and
//! `(r2,c2)` are adjacent exactly when the rows are adjacent in the left
//! factor *and* the columns are adjacent in the right factor.
//!
//! All values here are immutable after construction, so they can be shared
//! freely across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A vertex label: one coordinate for plain graphs, two for bipartite graphs
/// (`[side, index]`, side 0 = "a", side 1 = "b") and for tensor products
/// (`[row, col]`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    Single(u32),
    Pair(u32, u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Single(i) => write!(f, "{i}"),
            Vertex::Pair(a, b) => write!(f, "{a},{b}"),
        }
    }
}

/// An unordered edge; the lexicographically smaller endpoint is stored first,
/// so equal edges compare equal and sets of edges have exact semantics.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn is_loop(&self) -> bool {
        self.0 == self.1
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})-({})", self.0, self.1)
    }
}

/// Symbolic description of a structured graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphFamily {
    /// Complete graph on `m >= 1` vertices.
    Complete(u32),
    /// Complete graph on an even number `m >= 2` of vertices minus the
    /// perfect matching `{0-1, 2-3, ...}`.
    CompleteMinusFactor(u32),
    /// Complete bipartite graph with side sizes `a, b >= 1`.
    CompleteBipartite(u32, u32),
    /// Complete bipartite graph with both sides of size `n`, minus the
    /// matching that pairs equal indexes across the sides.
    CompleteBipartiteMinusFactor(u32),
    /// Cycle on `m >= 3` vertices, edges `{i, i+1 mod m}`.
    Cycle(u32),
    /// Tensor (categorical) product of two plain families.
    Tensor(Box<GraphFamily>, Box<GraphFamily>),
}

impl GraphFamily {
    pub fn tensor(left: GraphFamily, right: GraphFamily) -> GraphFamily {
        GraphFamily::Tensor(Box::new(left), Box::new(right))
    }

    /// True for families whose vertices are single coordinates. Only plain
    /// families may appear as tensor factors, which keeps every product
    /// vertex at exactly two coordinates.
    pub fn is_plain(&self) -> bool {
        matches!(
            self,
            GraphFamily::Complete(_) | GraphFamily::CompleteMinusFactor(_) | GraphFamily::Cycle(_)
        )
    }

    /// Checks the parameter invariants of the family.
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphFamily::Complete(m) => {
                if *m < 1 {
                    return Err(Error::InvalidFamily("complete graph needs m >= 1".into()));
                }
            }
            GraphFamily::CompleteMinusFactor(m) => {
                if *m < 2 || m % 2 != 0 {
                    return Err(Error::InvalidFamily(format!(
                        "complete graph minus a 1-factor needs even m >= 2, got {m}"
                    )));
                }
            }
            GraphFamily::CompleteBipartite(a, b) => {
                if *a < 1 || *b < 1 {
                    return Err(Error::InvalidFamily(
                        "complete bipartite graph needs a, b >= 1".into(),
                    ));
                }
            }
            GraphFamily::CompleteBipartiteMinusFactor(n) => {
                if *n < 1 {
                    return Err(Error::InvalidFamily(
                        "bipartite minus-factor graph needs n >= 1".into(),
                    ));
                }
            }
            GraphFamily::Cycle(m) => {
                if *m < 3 {
                    return Err(Error::InvalidFamily(format!("cycle needs m >= 3, got {m}")));
                }
            }
            GraphFamily::Tensor(left, right) => {
                left.validate()?;
                right.validate()?;
                if !left.is_plain() || !right.is_plain() {
                    return Err(Error::InvalidFamily(
                        "tensor factors must be plain (one-coordinate) families".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> u32 {
        match self {
            GraphFamily::Complete(m)
            | GraphFamily::CompleteMinusFactor(m)
            | GraphFamily::Cycle(m) => *m,
            GraphFamily::CompleteBipartite(a, b) => a + b,
            GraphFamily::CompleteBipartiteMinusFactor(n) => 2 * n,
            GraphFamily::Tensor(left, right) => left.order() * right.order(),
        }
    }

    /// The family's full vertex list in ascending order, including any
    /// isolated vertices.
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            GraphFamily::Complete(m)
            | GraphFamily::CompleteMinusFactor(m)
            | GraphFamily::Cycle(m) => (0..*m).map(Vertex::Single).collect(),
            GraphFamily::CompleteBipartite(a, b) => (0..*a)
                .map(|i| Vertex::Pair(0, i))
                .chain((0..*b).map(|i| Vertex::Pair(1, i)))
                .collect(),
            GraphFamily::CompleteBipartiteMinusFactor(n) => (0..*n)
                .map(|i| Vertex::Pair(0, i))
                .chain((0..*n).map(|i| Vertex::Pair(1, i)))
                .collect(),
            GraphFamily::Tensor(left, right) => {
                let rows = left.order();
                let cols = right.order();
                let mut vs = Vec::with_capacity((rows * cols) as usize);
                for r in 0..rows {
                    for c in 0..cols {
                        vs.push(Vertex::Pair(r, c));
                    }
                }
                vs
            }
        }
    }
}

/// Explicit edge set of a materialized family: the full vertex list plus a
/// set of canonical edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeSet {
    vertices: Vec<Vertex>,
    edges: BTreeSet<Edge>,
}

impl EdgeSet {
    fn new(vertices: Vec<Vertex>, edges: BTreeSet<Edge>) -> EdgeSet {
        EdgeSet { vertices, edges }
    }

    /// Vertex count, isolated vertices included.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: &Edge) -> bool {
        self.edges.contains(edge)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges in ascending canonical order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }
}

/// Expands a family into its explicit edge set.
///
/// For `Tensor(left, right)` the edge relation is the categorical product:
/// `((r1,c1),(r2,c2))` is an edge iff `(r1,r2)` is an edge of `left` and
/// `(c1,c2)` is an edge of `right`. Each pair of factor edges therefore
/// contributes exactly two product edges (the two ways of matching ends).
pub fn materialize(family: &GraphFamily) -> Result<EdgeSet> {
    family.validate()?;
    let mut edges = BTreeSet::new();
    match family {
        GraphFamily::Complete(m) => {
            for i in 0..*m {
                for j in (i + 1)..*m {
                    edges.insert(Edge::new(Vertex::Single(i), Vertex::Single(j)));
                }
            }
        }
        GraphFamily::CompleteMinusFactor(m) => {
            for i in 0..*m {
                for j in (i + 1)..*m {
                    // skip the matching edge {2t, 2t+1}
                    if j == i + 1 && i % 2 == 0 {
                        continue;
                    }
                    edges.insert(Edge::new(Vertex::Single(i), Vertex::Single(j)));
                }
            }
        }
        GraphFamily::CompleteBipartite(a, b) => {
            for i in 0..*a {
                for j in 0..*b {
                    edges.insert(Edge::new(Vertex::Pair(0, i), Vertex::Pair(1, j)));
                }
            }
        }
        GraphFamily::CompleteBipartiteMinusFactor(n) => {
            for i in 0..*n {
                for j in 0..*n {
                    if i == j {
                        continue;
                    }
                    edges.insert(Edge::new(Vertex::Pair(0, i), Vertex::Pair(1, j)));
                }
            }
        }
        GraphFamily::Cycle(m) => {
            for i in 0..*m {
                edges.insert(Edge::new(Vertex::Single(i), Vertex::Single((i + 1) % m)));
            }
        }
        GraphFamily::Tensor(left, right) => {
            let left_edges = materialize(left)?;
            let right_edges = materialize(right)?;
            for le in left_edges.edges() {
                let (Vertex::Single(r1), Vertex::Single(r2)) = le.endpoints() else {
                    unreachable!("plain factor produces single-coordinate vertices");
                };
                for re in right_edges.edges() {
                    let (Vertex::Single(c1), Vertex::Single(c2)) = re.endpoints() else {
                        unreachable!("plain factor produces single-coordinate vertices");
                    };
                    edges.insert(Edge::new(Vertex::Pair(r1, c1), Vertex::Pair(r2, c2)));
                    edges.insert(Edge::new(Vertex::Pair(r1, c2), Vertex::Pair(r2, c1)));
                }
            }
        }
    }
    Ok(EdgeSet::new(family.vertices(), edges))
}

/// The subgraph of a tensor product induced between two of its columns.
///
/// For `left = Complete(m)` this is `K_{m,m}` minus the same-row matching;
/// for `left = Cycle(m)` with `m` even it is two disjoint `m`-cycles, and for
/// odd `m` a single `2m`-cycle.
pub fn column_pair_subgraph(family: &GraphFamily, j: u32, j2: u32) -> Result<EdgeSet> {
    family.validate()?;
    let GraphFamily::Tensor(left, right) = family else {
        return Err(Error::InvalidFamily(
            "column pairs exist only in tensor products".into(),
        ));
    };
    let cols = right.order();
    if j == j2 {
        return Err(Error::BadColumn(format!(
            "columns must differ, got {j} twice (columns are independent sets)"
        )));
    }
    if j >= cols || j2 >= cols {
        return Err(Error::BadColumn(format!(
            "column out of range: {j}, {j2} with {cols} columns"
        )));
    }

    let right_edges = materialize(right)?;
    let columns_adjacent =
        right_edges.contains(&Edge::new(Vertex::Single(j), Vertex::Single(j2)));

    let mut edges = BTreeSet::new();
    if columns_adjacent {
        let left_edges = materialize(left)?;
        for le in left_edges.edges() {
            let (Vertex::Single(r1), Vertex::Single(r2)) = le.endpoints() else {
                unreachable!("plain factor produces single-coordinate vertices");
            };
            edges.insert(Edge::new(Vertex::Pair(r1, j), Vertex::Pair(r2, j2)));
            edges.insert(Edge::new(Vertex::Pair(r1, j2), Vertex::Pair(r2, j)));
        }
    }

    let rows = left.order();
    let mut vertices = Vec::with_capacity(2 * rows as usize);
    for r in 0..rows {
        vertices.push(Vertex::Pair(r, j.min(j2)));
        vertices.push(Vertex::Pair(r, j.max(j2)));
    }
    vertices.sort();
    Ok(EdgeSet::new(vertices, edges))
}

/// Histogram of vertex degrees (degree -> number of vertices).
pub fn degree_profile(edges: &EdgeSet) -> BTreeMap<usize, usize> {
    let mut degree: BTreeMap<Vertex, usize> = edges.vertices().iter().map(|v| (*v, 0)).collect();
    for e in edges.edges() {
        let (a, b) = e.endpoints();
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    let mut profile = BTreeMap::new();
    for d in degree.values() {
        *profile.entry(*d).or_insert(0) += 1;
    }
    profile
}
