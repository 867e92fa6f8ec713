use serde::Serialize;

use crate::canon::Limits;
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, two_cuts, CutPair, Graph};
use crate::planar::{all_embeddings, is_planar, is_polyhedron, planar_embed, Embedding, Face};

/// Which odd-face condition a planar graph satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConditionTag {
    C0,
    C1,
    C2,
    C3,
    None,
}

impl std::fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConditionTag::C0 => "C0",
            ConditionTag::C1 => "C1",
            ConditionTag::C2 => "C2",
            ConditionTag::C3 => "C3",
            ConditionTag::None => "none",
        };
        f.write_str(s)
    }
}

/// How "a component contains an odd region" is read for condition C0.
pub const C0_CONTAINMENT: &str =
    "a component of J-a-b contains a region when every boundary vertex of the region other than a, b lies in it";

/// Classification result with the evidence that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddFaceCondition {
    pub tag: ConditionTag,
    /// Odd faces (boundary walks) of the embedding that decided the tag.
    pub odd_faces: Vec<Vec<usize>>,
    /// C3: the vertex shared by all odd faces but one, missed by that one.
    pub shared_vertex: Option<usize>,
    /// C3: index into `odd_faces` of the face not through `shared_vertex`.
    pub exceptional_face: Option<usize>,
    /// C0: the 2-cuts of `J`.
    pub two_cuts: Vec<(usize, usize)>,
    /// Embeddings examined (more than one only for connectivity 2).
    pub embeddings_examined: usize,
    /// Interpretation used for C0, present when C0 was evaluated.
    pub interpretation: Option<&'static str>,
}

fn vertex_sets(faces: &[&Face]) -> Vec<Vec<usize>> {
    faces.iter().map(|f| f.vertex_set()).collect()
}

fn meets(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.binary_search(x).is_ok())
}

fn check_c1(sets: &[Vec<usize>]) -> bool {
    sets.len() == 2 && !meets(&sets[0], &sets[1])
}

fn check_c2(sets: &[Vec<usize>]) -> bool {
    if sets.len() != 4 {
        return false;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if !meets(&sets[i], &sets[j]) {
                return false;
            }
            for k in j + 1..4 {
                if sets[i].iter().any(|x| sets[j].binary_search(x).is_ok() && sets[k].binary_search(x).is_ok()) {
                    return false;
                }
            }
        }
    }
    true
}

/// `(exceptional face, shared vertex)` for C3.
fn check_c3(sets: &[Vec<usize>]) -> Option<(usize, usize)> {
    if sets.len() < 4 {
        return None;
    }
    for e in 0..sets.len() {
        if !(0..sets.len()).all(|j| j == e || meets(&sets[e], &sets[j])) {
            continue;
        }
        let others: Vec<&Vec<usize>> = (0..sets.len()).filter(|&j| j != e).map(|j| &sets[j]).collect();
        let shared = others[0].iter().find(|x| {
            others[1..].iter().all(|s| s.binary_search(x).is_ok()) && sets[e].binary_search(x).is_err()
        });
        if let Some(&v) = shared {
            return Some((e, v));
        }
    }
    None
}

fn check_c0(emb: &Embedding, cuts: &[CutPair]) -> Result<bool> {
    let fs = emb.faces()?;
    let odd = fs.odd_faces();
    let sets = vertex_sets(&odd);
    let without_cut = sets
        .iter()
        .filter(|s| !cuts.iter().any(|c| s.binary_search(&c.u).is_ok() && s.binary_search(&c.v).is_ok()))
        .count();
    if without_cut != 2 {
        return Ok(false);
    }
    for c in cuts {
        for comp in &c.components {
            let inside = sets.iter().any(|s| {
                s.iter().all(|&x| x == c.u || x == c.v || comp.binary_search(&x).is_ok())
                    && s.iter().any(|&x| x != c.u && x != c.v)
            });
            if !inside {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First satisfied condition in the order C1, C2, C3 (polyhedral `J`),
/// then C0 (connectivity exactly 2, tried over every embedding).
pub fn classify_odd_faces(j: &Graph) -> Result<OddFaceCondition> {
    classify_odd_faces_with(j, &Limits::default())
}

pub fn classify_odd_faces_with(j: &Graph, limits: &Limits) -> Result<OddFaceCondition> {
    if !is_planar(j) {
        return Err(Error::NonPlanarInput);
    }
    let mut out = OddFaceCondition {
        tag: ConditionTag::None,
        odd_faces: Vec::new(),
        shared_vertex: None,
        exceptional_face: None,
        two_cuts: Vec::new(),
        embeddings_examined: 0,
        interpretation: None,
    };
    if is_polyhedron(j) {
        let emb = planar_embed(j).expect("planar");
        let fs = emb.faces()?;
        let odd = fs.odd_faces();
        let sets = vertex_sets(&odd);
        out.odd_faces = odd.iter().map(|f| f.vertices.clone()).collect();
        out.embeddings_examined = 1;
        if check_c1(&sets) {
            out.tag = ConditionTag::C1;
        } else if check_c2(&sets) {
            out.tag = ConditionTag::C2;
        } else if let Some((e, v)) = check_c3(&sets) {
            out.tag = ConditionTag::C3;
            out.exceptional_face = Some(e);
            out.shared_vertex = Some(v);
        }
        return Ok(out);
    }
    // A vertex of degree 2 survives as one in the cover.
    if j.n() < 4 || j.min_degree() < 3 || !is_k_connected(j, 2) {
        return Ok(out);
    }
    let cuts = two_cuts(j);
    out.two_cuts = cuts.iter().map(|c| (c.u, c.v)).collect();
    out.interpretation = Some(C0_CONTAINMENT);
    if cuts.is_empty() || cuts.iter().any(|c| c.components.len() != 2) {
        return Ok(out);
    }
    let limit = (limits.max_nodes as usize).min(4096);
    let embeddings = all_embeddings(j, limit)?;
    out.embeddings_examined = embeddings.len();
    for emb in &embeddings {
        if check_c0(emb, &cuts)? {
            out.tag = ConditionTag::C0;
            out.odd_faces = emb.faces()?.odd_faces().iter().map(|f| f.vertices.clone()).collect();
            return Ok(out);
        }
    }
    if let Some(emb) = embeddings.first() {
        out.odd_faces = emb.faces()?.odd_faces().iter().map(|f| f.vertices.clone()).collect();
    }
    Ok(out)
}
