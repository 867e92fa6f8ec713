//! Simple graphs, multigraphs and the structural predicates used everywhere
//! else: bipartiteness, connectivity tiers, subdivision and smoothing.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple undirected graph on the vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted; adjacency lists are
/// sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate pairs and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, norm))
    }

    /// Builds a graph from pairs that may repeat; duplicates collapse.
    /// Loops and out-of-range endpoints are still errors.
    pub fn from_edge_set(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        norm.sort_unstable();
        norm.dedup();
        Self::new(n, norm)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted list of normalized edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.adj.iter().map(Vec::len).collect())
    }

    /// Returns `self` plus the given edges. Fails on duplicates.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Returns `self` minus the given edges.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Result<Self> {
        let mut drop: Vec<_> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        drop.sort_unstable();
        for &(u, v) in &drop {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        let kept = self.edges.iter().copied().filter(|e| drop.binary_search(e).is_err());
        Graph::new(self.n, kept)
    }

    /// Returns the graph with one extra vertex adjacent to `targets`.
    pub fn with_apex(&self, targets: &[usize]) -> Result<Self> {
        let apex = self.n;
        let mut g = Graph::new(apex + 1, self.edges.iter().copied())?;
        g = g.with_edges(targets.iter().map(|&t| (apex, t)))?;
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }

    /// Disjoint union, `other` renumbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_sorted(self.n + other.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components_avoiding(self, &vec![false; self.n]).len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_avoiding(self, &vec![false; self.n])
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph { n: self.n, edges: self.edges.clone() }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Undirected multigraph; loops and parallel edges allowed. The identity
/// token of an edge is its index in [`Multigraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degrees().iter().all(|&d| d == k)
    }

    /// Edge tokens incident to `v`; a loop appears twice.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (t, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(t);
            }
            if b == v {
                out.push(t);
            }
        }
        out
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn is_simple(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e.windows(2).all(|w| w[0] != w[1])
    }

    /// Converts to a simple graph; fails on loops or parallel edges.
    pub fn to_simple(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }

    /// The simple graph with the same adjacencies (loops dropped, parallel
    /// edges merged).
    pub fn underlying_simple(&self) -> Graph {
        Graph::from_edge_set(self.n, self.edges.iter().copied().filter(|&(a, b)| a != b))
            .expect("endpoints validated at construction")
    }
}

/// Two-colouring of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub class_a: Vec<usize>,
    pub class_b: Vec<usize>,
}

impl Bipartition {
    /// Colour of each vertex: `false` for class A, `true` for class B.
    pub fn colors(&self, n: usize) -> Vec<bool> {
        let mut c = vec![false; n];
        for &v in &self.class_b {
            c[v] = true;
        }
        c
    }
}

/// A separating pair and the components left after removing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutPair {
    pub u: usize,
    pub v: usize,
    pub components: Vec<Vec<usize>>,
}

/// Vertex degrees sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(degree, multiplicity)` pairs, highest degree first.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.0 {
            match out.last_mut() {
                Some((deg, k)) if *deg == d => *k += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn count(&self, degree: usize) -> usize {
        self.0.iter().filter(|&&d| d == degree).count()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents().iter().map(|(d, k)| format!("{d}^{k}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Two-colouring per component; the lowest vertex of every component goes to
/// class A. `None` if an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    _ => {}
                }
            }
        }
    }
    let (mut class_a, mut class_b) = (Vec::new(), Vec::new());
    for (v, c) in color.iter().enumerate() {
        if c.unwrap() {
            class_b.push(v);
        } else {
            class_a.push(v);
        }
    }
    Some(Bipartition { class_a, class_b })
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Components of `g` after deleting the vertices flagged in `removed`.
pub fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = removed.to_vec();
    let mut comps = Vec::new();
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn count_components_avoiding(g: &Graph, removed: &[bool]) -> usize {
    let mut seen = removed.to_vec();
    let mut stack = Vec::new();
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`; reports whether it did.
fn any_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        match (0..k).rev().find(|&i| idx[i] < n - k + i) {
            None => return false,
            Some(i) => {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }
}

fn separates(g: &Graph, set: &[usize], removed: &mut [bool]) -> bool {
    for &v in set {
        removed[v] = true;
    }
    let split = count_components_avoiding(g, removed) > 1;
    for &v in set {
        removed[v] = false;
    }
    split
}

/// Whether some vertex set of size exactly `k` disconnects `g`.
fn has_separator_of_size(g: &Graph, k: usize) -> bool {
    let mut removed = vec![false; g.n()];
    if k == 0 {
        return !g.is_connected();
    }
    // Removing k vertices must leave at least two behind.
    if g.n() < k + 2 {
        return false;
    }
    any_subset(g.n(), k, |set| separates(g, set, &mut removed))
}

/// Exact vertex connectivity by exhaustive removal of vertex subsets.
///
/// Subsets are tried by increasing size up to `min_degree - 1`; if none
/// separates, the connectivity equals the minimum degree.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { needed: 2, n: g.n() });
    }
    let delta = g.min_degree();
    for k in 0..delta {
        if has_separator_of_size(g, k) {
            return Ok(k);
        }
    }
    Ok(delta)
}

/// `k`-connected in the sense used throughout: at least `k + 1` vertices
/// and no separating set of fewer than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() < k + 1 {
        return false;
    }
    (0..k).all(|s| !has_separator_of_size(g, s))
}

/// All separating pairs of `g`, in lexicographic order.
pub fn two_cuts(g: &Graph) -> Vec<CutPair> {
    let mut out = Vec::new();
    if g.n() < 4 {
        return out;
    }
    let mut removed = vec![false; g.n()];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            removed[u] = true;
            removed[v] = true;
            let comps = components_avoiding(g, &removed);
            removed[u] = false;
            removed[v] = false;
            if comps.len() >= 2 {
                out.push(CutPair { u, v, components: comps });
            }
        }
    }
    out
}

/// Connectivity exactly 2 with every 2-cut leaving exactly two components.
/// The list of 2-cuts is returned either way.
pub fn semi_hyper_2_connected(g: &Graph) -> (bool, Vec<CutPair>) {
    let cuts = two_cuts(g);
    let two_connected = is_k_connected(g, 2);
    let ok = two_connected && !cuts.is_empty() && cuts.iter().all(|c| c.components.len() == 2);
    (ok, cuts)
}

/// Replaces `edge` of a multigraph by a path through `times` new vertices.
/// New vertices are numbered from `n` upward, ordered from the edge's first
/// endpoint to its second. The replaced edge's token is reused for the
/// first segment; the other segments are appended.
pub fn subdivide_multi(g: &Multigraph, edge: usize, times: usize) -> Result<(Multigraph, Vec<usize>)> {
    let &(u, v) = g.edges.get(edge).ok_or(Error::BadParams(format!("no edge token {edge}")))?;
    if times == 0 {
        return Err(Error::BadParams("subdivision count must be at least 1".into()));
    }
    let inserted: Vec<usize> = (g.n..g.n + times).collect();
    let mut edges = g.edges.clone();
    edges[edge] = (u, inserted[0]);
    for w in inserted.windows(2) {
        edges.push((w[0], w[1]));
    }
    edges.push((*inserted.last().unwrap(), v));
    Ok((Multigraph { n: g.n + times, edges }, inserted))
}

/// Simple-graph form of [`subdivide_multi`], addressing the edge by its
/// endpoints; the path runs from `edge.0` to `edge.1`.
pub fn subdivide(g: &Graph, edge: (usize, usize), times: usize) -> Result<(Graph, Vec<usize>)> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let mut m = Multigraph::new(g.n, g.edges.iter().copied().filter(|&e| e != (u.min(v), u.max(v))))?;
    m.edges.push((u, v));
    let token = m.edges.len() - 1;
    let (m, inserted) = subdivide_multi(&m, token, times)?;
    Ok((m.to_simple()?, inserted))
}

/// Suppresses each listed degree-2 vertex, merging its two edges into one.
/// Remaining vertices keep their relative order.
pub fn smooth_degree2(g: &Graph, vertices: &[usize]) -> Result<Multigraph> {
    smooth_degree2_multi(&g.to_multigraph(), vertices)
}

pub fn smooth_degree2_multi(g: &Multigraph, vertices: &[usize]) -> Result<Multigraph> {
    let mut edges: Vec<Option<(usize, usize)>> = g.edges.iter().copied().map(Some).collect();
    let mut gone = vec![false; g.n];
    for &x in vertices {
        if x >= g.n {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n });
        }
        let mut ends = Vec::new();
        for (t, e) in edges.iter().enumerate() {
            if let Some((a, b)) = *e {
                if a == x {
                    ends.push((t, b));
                }
                if b == x {
                    ends.push((t, a));
                }
            }
        }
        if ends.len() != 2 {
            return Err(Error::DegreeNotTwo { vertex: x, degree: ends.len() });
        }
        let (t0, p) = ends[0];
        let (t1, q) = ends[1];
        if t0 == t1 {
            return Err(Error::BadParams(format!("vertex {x} carries only a loop")));
        }
        edges[t0] = Some((p, q));
        edges[t1] = None;
        gone[x] = true;
    }
    let mut index = vec![usize::MAX; g.n];
    let mut next = 0;
    for v in 0..g.n {
        if !gone[v] {
            index[v] = next;
            next += 1;
        }
    }
    let kept = edges.into_iter().flatten().map(|(a, b)| (index[a], index[b]));
    Multigraph::new(next, kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn cube() -> Graph {
        Graph::new(8, (0..8).flat_map(|v| [1, 2, 4].into_iter().filter(move |b| v & b == 0).map(move |b| (v, v | b))))
            .unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn complete_and_cube_shapes() {
        let k4 = complete(4);
        assert!(k4.is_regular(3));
        assert_eq!(k4.edge_count(), 6);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        let q = cube();
        assert!(q.is_regular(3));
        assert!(is_bipartite(&q));
        assert_eq!(q.degree_sequence().sum(), 2 * q.edge_count());
    }

    #[test]
    fn bipartition_examples() {
        assert!(bipartition(&cycle(5)).is_none());
        let b = bipartition(&cycle(6)).unwrap();
        assert_eq!(b.class_a, vec![0, 2, 4]);
        assert_eq!(b.class_b, vec![1, 3, 5]);
        // Cube classes are the even- and odd-weight bit strings.
        let b = bipartition(&cube()).unwrap();
        assert_eq!(b.class_a, vec![0, 3, 5, 6]);
        assert_eq!(b.class_b, vec![1, 2, 4, 7]);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&cube()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&cycle(6)).unwrap(), 2);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&p3).unwrap(), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), Err(Error::TooFewVertices { needed: 2, n: 1 }));
        for n in 3..9 {
            assert_eq!(vertex_connectivity(&cycle(n)).unwrap(), 2);
        }
        for n in 2..8 {
            assert_eq!(vertex_connectivity(&complete(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn semi_hyper_examples() {
        let (ok, cuts) = semi_hyper_2_connected(&cycle(6));
        assert!(ok);
        assert_eq!(cuts.len(), 9);
        let (ok, cuts) = semi_hyper_2_connected(&cube());
        assert!(!ok);
        assert!(cuts.is_empty());
        // Bowtie with a pendant vertex: connectivity 1.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        assert!(!semi_hyper_2_connected(&g).0);
        // K_{2,3}: the cut {0,1} leaves three components.
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!semi_hyper_2_connected(&k23).0);
    }

    #[test]
    fn subdivide_and_smooth() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let (p4, ins) = subdivide(&k2, (0, 1), 2).unwrap();
        assert_eq!(ins, vec![2, 3]);
        assert_eq!(p4.edges(), &[(0, 2), (1, 3), (2, 3)]);
        let (c6, _) = subdivide(&cycle(4), (0, 1), 2).unwrap();
        assert!(c6.is_regular(2) && c6.n() == 6 && c6.is_connected());
        assert_eq!(subdivide(&k2, (0, 0), 1).unwrap_err(), Error::MissingEdge(0, 0));

        // Theta multigraph: split one of three parallel edges once.
        let theta = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let (t, ins) = subdivide_multi(&theta, 1, 1).unwrap();
        assert_eq!(ins, vec![2]);
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (0, 1), (2, 1)]);
        assert_eq!(t.degree(2), 2);

        let m = smooth_degree2(&cycle(6), &[1, 2, 4, 5]).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m.edges(), &[(0, 1), (0, 1)]);
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let k = smooth_degree2(&p4, &[1, 2]).unwrap();
        assert_eq!(k.to_simple().unwrap(), k2);
        assert!(matches!(smooth_degree2(&cube(), &[0]), Err(Error::DegreeNotTwo { vertex: 0, degree: 3 })));
    }

    #[test]
    fn loops_count_twice() {
        let m = Multigraph::new(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(m.degree(0), 3);
        assert!(!m.is_simple());
    }
}
