use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::{automorphisms, certificate, Certificate, Limits};
use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};
use crate::products::cover;

/// A Kronecker root `j` of `G` and the involution of `G` it is the
/// quotient of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub j: Graph,
    pub involution: Vec<usize>,
    /// `orbit_map[c]` is the vertex of `G` that cover vertex `c` maps to.
    pub orbit_map: Vec<usize>,
}

/// Roots of a bipartite graph, pairwise non-isomorphic, ordered by
/// certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Whether `map` (cover vertex -> vertex of `g`) is an isomorphism.
fn is_isomorphism(c: &Graph, g: &Graph, map: &[usize]) -> bool {
    if c.n() != g.n() || c.edge_count() != g.edge_count() {
        return false;
    }
    let mut hit = vec![false; g.n()];
    for &v in map {
        if v >= g.n() || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    c.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
}

/// Quotient of `g` by a class-swapping fixed-point-free involution, with
/// the explicit cover isomorphism.
fn quotient(g: &Graph, class_a: &[usize], sigma: &[usize]) -> Option<Root> {
    let mut orbit = vec![usize::MAX; g.n()];
    for (o, &u) in class_a.iter().enumerate() {
        orbit[u] = o;
        orbit[sigma[u]] = o;
    }
    let mut edges = Vec::with_capacity(g.edge_count() / 2);
    for &(u, v) in g.edges() {
        let (ou, ov) = (orbit[u], orbit[v]);
        if ou == ov {
            return None;
        }
        edges.push((ou.min(ov), ou.max(ov)));
    }
    edges.sort_unstable();
    edges.dedup();
    let j = Graph::new(class_a.len(), edges).ok()?;
    let c = cover(&j).0;
    let orbit_map: Vec<usize> = (0..c.n()).map(|v| if v % 2 == 0 { class_a[v / 2] } else { sigma[class_a[v / 2]] }).collect();
    is_isomorphism(&c, g, &orbit_map).then(|| Root { j, involution: sigma.to_vec(), orbit_map })
}

/// All graphs `J` with `J ∧ K2 ≅ G`, one per isomorphism class.
pub fn kronecker_roots(g: &Graph) -> Result<RootSet> {
    kronecker_roots_with(g, &Limits::from_env())
}

pub fn kronecker_roots_with(g: &Graph, limits: &Limits) -> Result<RootSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bip = bipartition(g).ok_or(Error::NotBipartite)?;
    if bip.class_a.len() != bip.class_b.len() {
        return Ok(RootSet { roots: Vec::new() });
    }
    let color = bip.colors(g.n());
    let mut found: BTreeMap<Certificate, Root> = BTreeMap::new();
    for sigma in automorphisms(g, limits)? {
        let good = (0..g.n()).all(|u| {
            let s = sigma[u];
            s != u && sigma[s] == u && color[s] != color[u] && !g.has_edge(u, s)
        });
        if !good {
            continue;
        }
        if let Some(root) = quotient(g, &bip.class_a, &sigma) {
            let cert = certificate(&root.j)?;
            found.entry(cert).or_insert(root);
        }
    }
    Ok(RootSet { roots: found.into_values().collect() })
}
