//! Canonical labelling, isomorphism and automorphism enumeration by
//! colour refinement plus individualisation backtracking.
//!
//! The refinement is label-invariant: a vertex's new colour is the rank of
//! its (old colour, sorted neighbour colours) signature, so isomorphic
//! coloured graphs refine to corresponding partitions. The search target is
//! always the first smallest non-singleton cell.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Environment variable overriding the default search cap.
pub const MAX_N_ENV: &str = "KPOLY_MAX_N";
const DEFAULT_MAX_N: usize = 32;
const DEFAULT_MAX_NODES: u64 = 2_000_000;

/// Guards for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by automorphism and witness searches.
    pub max_n: usize,
    /// Search-tree node budget per call.
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: DEFAULT_MAX_N, max_nodes: DEFAULT_MAX_NODES }
    }
}

impl Limits {
    /// Default limits with `max_n` read from `KPOLY_MAX_N` when set.
    pub fn from_env() -> Self {
        let max_n = std::env::var(MAX_N_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_N);
        Limits { max_n, ..Limits::default() }
    }

    pub fn with_max_n(self, max_n: usize) -> Self {
        Limits { max_n, ..self }
    }

    pub(crate) fn check_n(&self, n: usize, what: &str) -> Result<()> {
        if n > self.max_n {
            Err(Error::SearchBudgetExceeded(format!("{what}: {n} vertices exceeds cap {}", self.max_n)))
        } else {
            Ok(())
        }
    }
}

/// Ordered partition of the vertex set, stored as a colour per vertex.
/// Colours are dense ranks `0..cells`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Coloring {
    color: Vec<u32>,
    cells: u32,
}

impl Coloring {
    fn unit(n: usize) -> Self {
        Coloring { color: vec![0; n], cells: if n == 0 { 0 } else { 1 } }
    }

    fn from_keys<K: Ord + Clone>(keys: &[K]) -> Self {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut color = vec![0u32; keys.len()];
        let mut rank = 0u32;
        for i in 0..order.len() {
            if i > 0 && keys[order[i]] != keys[order[i - 1]] {
                rank += 1;
            }
            color[order[i]] = rank;
        }
        Coloring { color, cells: if keys.is_empty() { 0 } else { rank + 1 } }
    }

    fn cell_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.cells as usize];
        for &c in &self.color {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// First smallest cell with more than one vertex.
    fn target_cell(&self) -> Option<u32> {
        let sizes = self.cell_sizes();
        let mut best: Option<(u32, u32)> = None;
        for (c, &s) in sizes.iter().enumerate() {
            if s > 1 && best.is_none_or(|(_, bs)| s < bs) {
                best = Some((c as u32, s));
            }
        }
        best.map(|(c, _)| c)
    }

    fn members(&self, cell: u32) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == cell).collect()
    }

    /// Splits `v` off its cell, placing it first.
    fn individualize(&self, v: usize) -> Self {
        let keys: Vec<(u32, bool)> = (0..self.color.len()).map(|u| (self.color[u], u != v)).collect();
        Coloring::from_keys(&keys)
    }
}

fn refine(g: &Graph, mut col: Coloring) -> Coloring {
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| col.color[w]).collect();
                nb.sort_unstable();
                (col.color[v], nb)
            })
            .collect();
        let next = Coloring::from_keys(&keys);
        if next.cells == col.cells {
            return next;
        }
        col = next;
    }
}

/// Isomorphism-invariant certificate: vertex count plus the adjacency
/// upper triangle (row-major) under the canonical labelling, packed
/// most-significant-bit first so the derived ordering is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub n: usize,
    pub bits: Vec<u64>,
}

impl Certificate {
    fn of_labelling(g: &Graph, pos: &[u32]) -> Self {
        let n = g.n();
        let total = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64)];
        for &(u, v) in g.edges() {
            let (a, b) = (pos[u].min(pos[v]) as usize, pos[u].max(pos[v]) as usize);
            // Row a holds columns a+1..n.
            let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
            bits[idx / 64] |= 1u64 << (63 - idx % 64);
        }
        Certificate { n, bits }
    }

    /// Hex rendering, stable across runs.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{}:", self.n);
        for w in &self.bits {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }
}

/// Canonical labelling result.
#[derive(Clone, Debug)]
pub struct Canon {
    pub certificate: Certificate,
    /// `labelling[v]` is the canonical position of vertex `v`.
    pub labelling: Vec<usize>,
}

impl Canon {
    /// The graph relabelled into canonical position.
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labelling)
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    twins: Vec<usize>,
    best: Option<(Certificate, Vec<u32>)>,
    autos: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

/// Representative of each vertex's twin class (same neighbourhood up to
/// each other). Swapping twins is an automorphism.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for u in 0..n {
        if rep[u] != u {
            continue;
        }
        for v in u + 1..n {
            if rep[v] != v || g.degree(u) != g.degree(v) {
                continue;
            }
            let strip = |x: usize, other: usize| -> Vec<usize> {
                g.neighbors(x).iter().copied().filter(|&w| w != other).collect()
            };
            if strip(u, v) == strip(v, u) {
                rep[v] = u;
            }
        }
    }
    rep
}

fn orbit_reps(n: usize, gens: &[&Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for gen in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

impl CanonSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudgetExceeded(format!(
                "canonical labelling exceeded {} search nodes",
                self.max_nodes
            )));
        }
        Ok(())
    }

    fn visit(&mut self, col: Coloring, fixed: &mut Vec<usize>) -> Result<()> {
        self.tick()?;
        let Some(cell) = col.target_cell() else {
            let cert = Certificate::of_labelling(self.g, &col.color);
            match &self.best {
                None => self.best = Some((cert, col.color)),
                Some((best, best_pos)) => match cert.cmp(best) {
                    Ordering::Less => self.best = Some((cert, col.color)),
                    Ordering::Equal => {
                        // Same certificate: best^-1 . current is an automorphism.
                        let mut inv = vec![0usize; best_pos.len()];
                        for (v, &p) in best_pos.iter().enumerate() {
                            inv[p as usize] = v;
                        }
                        let auto: Vec<usize> = col.color.iter().map(|&p| inv[p as usize]).collect();
                        self.autos.push(auto);
                    }
                    Ordering::Greater => {}
                },
            }
            return Ok(());
        };
        let members = col.members(cell);
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if explored.iter().any(|&u| self.twins[u] == self.twins[v]) {
                continue;
            }
            // Automorphisms fixing the individualised prefix pointwise.
            let stab: Vec<&Vec<usize>> =
                self.autos.iter().filter(|a| fixed.iter().all(|&x| a[x] == x)).collect();
            if !stab.is_empty() {
                let reps = orbit_reps(self.g.n(), &stab);
                if explored.iter().any(|&u| reps[u] == reps[v]) {
                    continue;
                }
            }
            explored.push(v);
            let child = refine(self.g, col.individualize(v));
            fixed.push(v);
            self.visit(child, fixed)?;
            fixed.pop();
        }
        Ok(())
    }
}

/// Canonical labelling with the default node budget.
pub fn canonical_form(g: &Graph) -> Result<Canon> {
    canonical_form_with(g, &Limits::default())
}

pub fn canonical_form_with(g: &Graph, limits: &Limits) -> Result<Canon> {
    let mut search = CanonSearch {
        g,
        twins: twin_classes(g),
        best: None,
        autos: Vec::new(),
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    let start = refine(g, Coloring::unit(g.n()));
    search.visit(start, &mut Vec::new())?;
    let (certificate, pos) = search.best.unwrap_or((Certificate { n: 0, bits: Vec::new() }, Vec::new()));
    Ok(Canon { certificate, labelling: pos.into_iter().map(|p| p as usize).collect() })
}

pub fn certificate(g: &Graph) -> Result<Certificate> {
    Ok(canonical_form(g)?.certificate)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(certificate(a)? == certificate(b)?)
}

/// An explicit isomorphism `a -> b` (as `map[v_a] = v_b`), if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ca, cb) = (canonical_form(a)?, canonical_form(b)?);
    if ca.certificate != cb.certificate {
        return Ok(None);
    }
    let mut inv_b = vec![0; b.n()];
    for (v, &p) in cb.labelling.iter().enumerate() {
        inv_b[p] = v;
    }
    Ok(Some(ca.labelling.iter().map(|&p| inv_b[p]).collect()))
}

/// Whether `perm` maps edges of `g` onto edges of `g`.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    perm.len() == g.n() && g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

struct AutoSearch<'a> {
    g: &'a Graph,
    found: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl AutoSearch<'_> {
    fn visit(&mut self, left: &Coloring, right: &Coloring) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudgetExceeded(format!(
                "automorphism search exceeded {} nodes",
                self.max_nodes
            )));
        }
        if left.cells != right.cells || left.cell_sizes() != right.cell_sizes() {
            return Ok(());
        }
        let Some(cell) = left.target_cell() else {
            let mut at = vec![0usize; self.g.n()];
            for (w, &c) in right.color.iter().enumerate() {
                at[c as usize] = w;
            }
            let perm: Vec<usize> = left.color.iter().map(|&c| at[c as usize]).collect();
            if is_automorphism(self.g, &perm) {
                self.found.push(perm);
            }
            return Ok(());
        };
        let v = left.members(cell)[0];
        let left_child = refine(self.g, left.individualize(v));
        for w in right.members(cell) {
            let right_child = refine(self.g, right.individualize(w));
            self.visit(&left_child, &right_child)?;
        }
        Ok(())
    }
}

/// Every automorphism of `g`, sorted lexicographically.
pub fn automorphisms(g: &Graph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    limits.check_n(g.n(), "automorphisms")?;
    let mut search = AutoSearch { g, found: Vec::new(), nodes: 0, max_nodes: limits.max_nodes };
    let start = refine(g, Coloring::unit(g.n()));
    search.visit(&start, &start)?;
    let mut found = search.found;
    found.sort();
    Ok(found)
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

    fn brute_force_automorphisms(g: &Graph) -> usize {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            let k = perm.len();
            if k == g.n() {
                *count += 1;
                return;
            }
            for w in 0..g.n() {
                if used[w] || g.degree(w) != g.degree(k) {
                    continue;
                }
                if (0..k).all(|u| g.has_edge(u, k) == g.has_edge(perm[u], w)) {
                    used[w] = true;
                    perm.push(w);
                    rec(g, perm, used, count);
                    perm.pop();
                    used[w] = false;
                }
            }
        }
        let mut count = 0;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut count);
        count
    }

    #[test]
    fn automorphism_counts() {
        let lim = Limits::default();
        assert_eq!(automorphisms(&complete(4), &lim).unwrap().len(), 24);
        assert_eq!(automorphisms(&cycle(6), &lim).unwrap().len(), 12);
        assert_eq!(brute_force_automorphisms(&cube()), 48);
        assert_eq!(automorphisms(&cube(), &lim).unwrap().len(), 48);
    }

    #[test]
    fn ladder_and_square_are_isomorphic() {
        // C4 with vertices relabelled: 0-1-3-2-0.
        let f4 = Graph::new(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert!(is_isomorphic(&cycle(4), &f4).unwrap());
        assert!(!is_isomorphic(&cycle(6), &Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap())
            .unwrap());
    }

    #[test]
    fn edgeless_and_complete_graphs_stay_cheap() {
        let lim = Limits { max_n: 64, max_nodes: 10_000 };
        canonical_form_with(&Graph::empty(40), &lim).unwrap();
        canonical_form_with(&complete(30), &lim).unwrap();
    }

    #[test]
    fn isomorphism_map_is_explicit() {
        let g = cube();
        let perm = [3, 7, 0, 1, 6, 2, 5, 4];
        let h = g.permuted(&perm);
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v])));
    }

    #[test]
    fn search_cap_is_enforced() {
        let lim = Limits { max_n: 5, ..Limits::default() };
        assert!(matches!(automorphisms(&cycle(6), &lim), Err(Error::SearchBudgetExceeded(_))));
    }
}
