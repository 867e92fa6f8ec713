//! Planarity, combinatorial embeddings, faces and the planar predicates
//! used by the recognition code.

mod dmp;
mod embedding;

use serde::Serialize;

pub use embedding::{all_embeddings, is_planar, planar_embed, planar_embed_multi, Embedding, Face, FaceSet, FaceStats};

use crate::error::Result;
use crate::graph::{is_k_connected, Graph};

/// Faces of an embedding.
pub fn faces(e: &Embedding) -> Result<FaceSet> {
    e.faces()
}

pub fn face_stats(f: &FaceSet) -> FaceStats {
    f.stats()
}

/// Simple, planar, 3-connected, at least four vertices.
pub fn is_polyhedron(g: &Graph) -> bool {
    g.n() >= 4 && g.edge_count() <= 3 * g.n() - 6 && is_k_connected(g, 3) && is_planar(g)
}

/// Planar with every vertex on one face: `g` plus an apex joined to all
/// vertices is planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    g.with_apex(&all).map(|h| is_planar(&h)).unwrap_or(false)
}

/// A polyhedron whose faces are all quadrilaterals.
pub fn is_quadrangulation(g: &Graph) -> bool {
    is_polyhedron(g)
        && planar_embed(g)
            .and_then(|e| e.faces().ok())
            .is_some_and(|f| f.faces.iter().all(|face| face.len() == 4))
}

/// Whether the cycle `cycle` (consecutive vertices adjacent, closing back)
/// bounds a face in some planar embedding of `g`.
pub fn is_facial_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.iter().any(|&v| v >= g.n()) {
        return false;
    }
    if !(0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k])) {
        return false;
    }
    g.with_apex(cycle).map(|h| is_planar(&h)).unwrap_or(false)
}

/// Dual of a polyhedron: one vertex per face (in [`FaceSet`] order), one
/// edge per pair of faces sharing an edge.
pub fn dual(g: &Graph) -> Result<Graph> {
    if !is_polyhedron(g) {
        return Err(crate::error::Error::NotPolyhedral);
    }
    let fs = planar_embed(g).expect("polyhedra are planar").faces()?;
    let mut face_of = vec![0; 2 * g.edge_count()];
    for (i, f) in fs.faces.iter().enumerate() {
        for &d in &f.darts {
            face_of[d] = i;
        }
    }
    Graph::new(fs.len(), (0..g.edge_count()).map(|e| (face_of[2 * e], face_of[2 * e + 1])))
}

/// Odd faces of an embedding and how they meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddFacePattern {
    /// Odd faces, each as its boundary walk.
    pub odd_faces: Vec<Vec<usize>>,
    /// `(i, j, common vertices)` for every pair of odd faces.
    pub pairs: Vec<(usize, usize, Vec<usize>)>,
    /// `(i, j, k, common vertices)` for every triple of odd faces.
    pub triples: Vec<(usize, usize, usize, Vec<usize>)>,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

pub fn odd_face_pattern(e: &Embedding) -> Result<OddFacePattern> {
    let fs = e.faces()?;
    let odd: Vec<&Face> = fs.odd_faces();
    let sets: Vec<Vec<usize>> = odd.iter().map(|f| f.vertex_set()).collect();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let ij = intersect(&sets[i], &sets[j]);
            for k in j + 1..sets.len() {
                triples.push((i, j, k, intersect(&ij, &sets[k])));
            }
            pairs.push((i, j, ij));
        }
    }
    triples.sort();
    Ok(OddFacePattern { odd_faces: odd.iter().map(|f| f.vertices.clone()).collect(), pairs, triples })
}
