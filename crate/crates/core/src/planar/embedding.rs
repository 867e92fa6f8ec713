use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::dmp::planar_rotation;
use crate::error::{Error, Result};
use crate::graph::{components_avoiding, two_cuts, Graph, Multigraph};

/// Rotation system over edge tokens. Dart `2e` runs along token `e` from its
/// first endpoint to its second, dart `2e + 1` runs back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    n: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
    /// Index of the designated outer face in [`Embedding::faces`].
    pub outer_face: usize,
    connected: bool,
}

impl Embedding {
    /// Validates a rotation system: every dart appears exactly once, in the
    /// rotation of its tail.
    pub fn from_rotation(n: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::CorruptRotation(format!("{} rotations for {n} vertices", rotation.len())));
        }
        let mut seen = vec![false; 2 * edges.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for &d in rot {
                if d >= seen.len() || seen[d] {
                    return Err(Error::CorruptRotation(format!("dart {d} repeated or unknown at vertex {v}")));
                }
                seen[d] = true;
                let e = edges[d / 2];
                let tail = if d % 2 == 0 { e.0 } else { e.1 };
                if tail != v {
                    return Err(Error::CorruptRotation(format!("dart {d} listed at {v}, its tail is {tail}")));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::CorruptRotation(format!("dart {d} missing")));
        }
        let connected = Multigraph::new(n, edges.iter().copied())?.underlying_simple().is_connected();
        Ok(Embedding { n, edges, rotation, outer_face: 0, connected })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Darts leaving `v` in cyclic order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn tail(&self, d: usize) -> usize {
        let e = self.edges[d / 2];
        if d % 2 == 0 { e.0 } else { e.1 }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(d ^ 1)
    }

    /// The same embedding seen from the other side of the plane.
    pub fn mirrored(&self) -> Self {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let mut e = Embedding { rotation, ..self.clone() };
        e.canonical_starts();
        e
    }

    fn canonical_starts(&mut self) {
        for r in &mut self.rotation {
            if let Some(i) = r.iter().enumerate().min_by_key(|&(_, d)| *d).map(|(i, _)| i) {
                r.rotate_left(i);
            }
        }
    }

    /// Traces every face: after arriving along `a -> b`, leave `b` along
    /// the dart following `b -> a` in the rotation at `b`.
    pub fn faces(&self) -> Result<FaceSet> {
        let darts = 2 * self.edges.len();
        let mut pos = vec![usize::MAX; darts];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::CorruptRotation(format!("unknown dart {d}")));
                }
                pos[d] = i;
            }
        }
        if pos.contains(&usize::MAX) {
            return Err(Error::CorruptRotation("dart missing from rotation".into()));
        }
        let mut used = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if used[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !used[d] {
                used[d] = true;
                walk.push(d);
                let back = d ^ 1;
                let b = self.tail(back);
                let rot = &self.rotation[b];
                d = rot[(pos[back] + 1) % rot.len()];
            }
            if d != start {
                return Err(Error::CorruptRotation(format!("face walk from dart {start} does not close")));
            }
            let vertices = walk.iter().map(|&d| self.tail(d)).collect();
            faces.push(Face { darts: walk, vertices });
        }
        faces.sort_by(|a, b| a.oriented_key().cmp(&b.oriented_key()).then_with(|| a.darts.cmp(&b.darts)));
        Ok(FaceSet { p: self.n, q: self.edges.len(), faces })
    }

    /// Picks the orientation whose smallest face walk is lexicographically
    /// smallest, so repeated embeddings of a 3-connected graph coincide.
    fn normalized(mut self) -> Self {
        self.canonical_starts();
        let mirror = self.mirrored();
        let keys = |e: &Embedding| -> Vec<Vec<usize>> {
            e.faces().map(|f| f.faces.iter().map(Face::oriented_key).collect()).unwrap_or_default()
        };
        if keys(&mirror) < keys(&self) {
            mirror
        } else {
            self
        }
    }

    /// Euler characteristic check `p - q + r = 1 + components`.
    pub fn is_planar_embedding(&self) -> bool {
        let Ok(fs) = self.faces() else { return false };
        let simple = Multigraph::new(self.n, self.edges.iter().copied()).map(|m| m.underlying_simple());
        let Ok(simple) = simple else { return false };
        let comps = simple.components();
        let isolated = comps.iter().filter(|c| c.len() == 1 && simple.degree(c[0]) == 0).count();
        let non_trivial = comps.len() - isolated;
        // Each non-trivial component traces its own outer face.
        (self.n - isolated) as isize - self.edges.len() as isize + fs.faces.len() as isize == 2 * non_trivial as isize
    }
}

/// A closed boundary walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub darts: Vec<usize>,
    pub vertices: Vec<usize>,
}

fn min_rotation(seq: &[usize]) -> Vec<usize> {
    (0..seq.len().max(1))
        .map(|i| seq[i..].iter().chain(&seq[..i]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Sorted distinct boundary vertices.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Smallest rotation of the vertex walk in its own direction.
    pub fn oriented_key(&self) -> Vec<usize> {
        min_rotation(&self.vertices)
    }

    /// Smallest rotation in either direction; identifies the face up to
    /// reflection of the embedding.
    pub fn key(&self) -> Vec<usize> {
        let rev: Vec<usize> = self.vertices.iter().rev().copied().collect();
        self.oriented_key().min(min_rotation(&rev))
    }
}

/// All faces of an embedding together with the graph's order and size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub p: usize,
    pub q: usize,
    pub faces: Vec<Face>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Face::len).collect()
    }

    pub fn odd_faces(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.is_odd()).collect()
    }

    /// Sorted reflection-invariant face keys.
    pub fn keys(&self) -> Vec<Vec<usize>> {
        let mut k: Vec<Vec<usize>> = self.faces.iter().map(Face::key).collect();
        k.sort();
        k
    }

    pub fn stats(&self) -> FaceStats {
        let mut r_k = BTreeMap::new();
        for f in &self.faces {
            *r_k.entry(f.len()).or_insert(0) += 1;
        }
        FaceStats { p: self.p, q: self.q, r: self.faces.len(), r_k }
    }
}

/// Order, size, face count and face-length histogram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceStats {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub r_k: BTreeMap<usize, usize>,
}

impl FaceStats {
    pub fn euler_characteristic(&self) -> isize {
        self.p as isize - self.q as isize + self.r as isize
    }

    pub fn count(&self, k: usize) -> usize {
        self.r_k.get(&k).copied().unwrap_or(0)
    }
}

/// A planar embedding of `g`, or `None` if `g` is non-planar. Edge tokens
/// are the indices of `g.edges()`.
pub fn planar_embed(g: &Graph) -> Option<Embedding> {
    let rot = planar_rotation(g)?;
    let edges = g.edges().to_vec();
    let dart = |v: usize, w: usize| {
        let e = edges.binary_search(&(v.min(w), v.max(w))).expect("rotation uses graph edges");
        if v < w { 2 * e } else { 2 * e + 1 }
    };
    let rotation = rot.iter().enumerate().map(|(v, r)| r.iter().map(|&w| dart(v, w)).collect()).collect();
    let e = Embedding { n: g.n(), edges: edges.clone(), rotation, outer_face: 0, connected: g.is_connected() };
    Some(e.normalized())
}

/// Embeds a multigraph by subdividing loops twice and repeated parallel
/// edges once, embedding the simple result, and reading the rotation back.
pub fn planar_embed_multi(m: &Multigraph) -> Option<Embedding> {
    let n = m.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = n;
    let mut seen_pairs = BTreeSet::new();
    let mut at: HashMap<(usize, usize), usize> = HashMap::new();
    for (e, &(u, v)) in m.edges().iter().enumerate() {
        let (fwd, back) = (2 * e, 2 * e + 1);
        if u == v {
            let (s1, s2) = (next, next + 1);
            next += 2;
            edges.extend([(u, s1), (s1, s2), (s2, u)]);
            at.insert((u, s1), fwd);
            at.insert((u, s2), back);
        } else if seen_pairs.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
            at.insert((u, v), fwd);
            at.insert((v, u), back);
        } else {
            let s = next;
            next += 1;
            edges.extend([(u, s), (s, v)]);
            at.insert((u, s), fwd);
            at.insert((v, s), back);
        }
    }
    let simple = Graph::new(next, edges).expect("subdivision is simple");
    let rot = planar_rotation(&simple)?;
    let rotation = (0..n).map(|v| rot[v].iter().map(|&w| at[&(v, w)]).collect()).collect();
    let connected = m.underlying_simple().is_connected();
    let e = Embedding { n, edges: m.edges().to_vec(), rotation, outer_face: 0, connected };
    Some(e.normalized())
}

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}

/// Reverses the part of the embedding that lies in `part` (a union of
/// bridges at the separating pair `{a, b}`); `with_ab` includes the edge
/// `ab` itself. Returns `None` if the part is not contiguous at `a` or `b`.
fn flip(e: &Embedding, a: usize, b: usize, part: &[bool], with_ab: bool) -> Option<Embedding> {
    let mut out = e.clone();
    for (x, other) in [(a, b), (b, a)] {
        let rot = &out.rotation[x];
        let inside: Vec<bool> = rot
            .iter()
            .map(|&d| {
                let h = e.head(d);
                part[h] || (with_ab && h == other)
            })
            .collect();
        let k = inside.len();
        let changes = (0..k).filter(|&i| inside[i] != inside[(i + 1) % k]).count();
        if changes > 2 {
            return None;
        }
        let count = inside.iter().filter(|&&f| f).count();
        if count == 0 || count == k {
            continue;
        }
        let start = (0..k).find(|&i| inside[i] && !inside[(i + k - 1) % k])?;
        let mut r = rot.clone();
        r.rotate_left(start);
        r[..count].reverse();
        out.rotation[x] = r;
    }
    for v in 0..e.n {
        if part[v] {
            out.rotation[v].reverse();
        }
    }
    out.canonical_starts();
    out.is_planar_embedding().then_some(out)
}

/// Every embedding of a connected planar graph up to reflection, reached by
/// flipping bridges at separating pairs. Fails once more than `limit`
/// distinct embeddings have been found.
pub fn all_embeddings(g: &Graph, limit: usize) -> Result<Vec<Embedding>> {
    let first = planar_embed(g).ok_or(Error::NonPlanarInput)?;
    let cuts = two_cuts(g);
    if cuts.is_empty() {
        return Ok(vec![first]);
    }
    // Candidate parts: single bridges and unions of two bridges.
    let mut parts: Vec<(usize, usize, Vec<bool>, bool)> = Vec::new();
    for cut in &cuts {
        let mut removed = vec![false; g.n()];
        removed[cut.u] = true;
        removed[cut.v] = true;
        let comps = components_avoiding(g, &removed);
        let mut bridges: Vec<(Vec<bool>, bool)> = comps
            .iter()
            .map(|c| {
                let mut mask = vec![false; g.n()];
                for &v in c {
                    mask[v] = true;
                }
                (mask, false)
            })
            .collect();
        if g.has_edge(cut.u, cut.v) {
            bridges.push((vec![false; g.n()], true));
        }
        for i in 0..bridges.len() {
            parts.push((cut.u, cut.v, bridges[i].0.clone(), bridges[i].1));
            if bridges.len() > 2 {
                for j in i + 1..bridges.len() {
                    let mask = bridges[i].0.iter().zip(&bridges[j].0).map(|(x, y)| *x || *y).collect();
                    parts.push((cut.u, cut.v, mask, bridges[i].1 || bridges[j].1));
                }
            }
        }
    }
    let key = |e: &Embedding| e.faces().map(|f| f.keys()).unwrap_or_default();
    let mut seen = BTreeSet::from([key(&first)]);
    let mut out = vec![first.clone()];
    let mut queue = VecDeque::from([first]);
    while let Some(e) = queue.pop_front() {
        for (a, b, mask, with_ab) in &parts {
            if let Some(f) = flip(&e, *a, *b, mask, *with_ab) {
                if seen.insert(key(&f)) {
                    if out.len() >= limit {
                        return Err(Error::SearchBudgetExceeded(format!("more than {limit} embeddings")));
                    }
                    out.push(f.clone());
                    queue.push_back(f);
                }
            }
        }
    }
    Ok(out.into_iter().map(Embedding::normalized).collect())
}
