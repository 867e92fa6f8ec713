use serde::Serialize;

use crate::error::{Error, Result, SpecClause};
use crate::graph::{is_bipartite, is_k_connected, semi_hyper_2_connected, subdivide, subdivide_multi, Graph, Multigraph};
use crate::planar::{all_embeddings, is_facial_cycle, is_planar, planar_embed_multi, Face};
use crate::recognition::{FactorWitness, OrderVariant};

/// Plan for a cubic factor: split edges of an even face of `j2`, then pair
/// the inserted vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicBuildSpec {
    #[serde(skip)]
    pub j2: Multigraph,
    /// Edge tokens of `j2` around the region, in boundary order.
    pub region: Vec<usize>,
    /// Times each region edge is split, parallel to `region`.
    pub splits: Vec<usize>,
    /// `(a_i, b_i)` as positions in the sequence of inserted vertices met
    /// walking the region.
    pub pairing: Vec<(usize, usize)>,
    pub order_variant: OrderVariant,
}

fn violation(clause: SpecClause, detail: impl Into<String>) -> Error {
    Error::SpecViolation { clause, detail: detail.into() }
}

/// Vertices `w_0..w_{k-1}` with region edge `i` joining `w_i` and `w_{i+1}`.
fn region_walk(j2: &Multigraph, region: &[usize]) -> Result<Vec<usize>> {
    let k = region.len();
    let edge = |i: usize| -> Result<(usize, usize)> {
        j2.edges()
            .get(region[i])
            .copied()
            .ok_or_else(|| violation(SpecClause::EvenRegion, format!("no edge token {}", region[i])))
    };
    if k < 2 {
        return Err(violation(SpecClause::EvenRegion, "region needs at least two edges"));
    }
    let (x, y) = edge(0)?;
    let (p, q) = edge(1)?;
    let mut walk = vec![if y == p || y == q { x } else { y }];
    for i in 0..k {
        let (u, v) = edge(i)?;
        let cur = walk[i];
        let next = if u == cur {
            v
        } else if v == cur {
            u
        } else {
            return Err(violation(SpecClause::EvenRegion, format!("edge token {} does not continue the walk", region[i])));
        };
        walk.push(next);
    }
    if walk[k] != walk[0] {
        return Err(violation(SpecClause::EvenRegion, "region walk is not closed"));
    }
    walk.pop();
    Ok(walk)
}

fn check_base(j2: &Multigraph) -> Result<()> {
    if !j2.is_regular(3) || j2.has_loops() {
        return Err(violation(SpecClause::BaseStructure, "base multigraph must be cubic and loopless"));
    }
    if planar_embed_multi(j2).is_none() {
        return Err(violation(SpecClause::BaseStructure, "base multigraph is not planar"));
    }
    let simple = j2.underlying_simple();
    if !(is_k_connected(&simple, 3) || semi_hyper_2_connected(&simple).0) {
        return Err(violation(SpecClause::BaseStructure, "base is neither 3-connected nor semi-hyper-2-connected"));
    }
    Ok(())
}

/// Whether the pairs, read in the order `variant` prescribes, visit the
/// walk positions `0..total` consecutively in one direction.
fn follows_order(pairing: &[(usize, usize)], variant: OrderVariant, total: usize) -> bool {
    let mut seq: Vec<usize> = pairing.iter().map(|p| p.0).collect();
    match variant {
        OrderVariant::Ord1 => seq.extend(pairing.iter().rev().map(|p| p.1)),
        OrderVariant::Ord2 => seq.extend(pairing.iter().map(|p| p.1)),
    }
    if seq.len() != total {
        return false;
    }
    let forward = (1..total).all(|t| seq[t] == (seq[0] + t) % total);
    let backward = (1..total).all(|t| seq[t] == (seq[0] + total - t) % total);
    forward || backward
}

/// Builds `J = J_1 + a_1 b_1 + .. + a_m b_m`, checking every clause of the
/// cubic construction. The witness has `J' = J_1`.
pub fn cubic_build(spec: &CubicBuildSpec) -> Result<(Graph, FactorWitness)> {
    let j2 = &spec.j2;
    check_base(j2)?;
    let walk = region_walk(j2, &spec.region)?;
    if spec.region.len() % 2 == 1 {
        return Err(violation(SpecClause::EvenRegion, format!("region has odd length {}", spec.region.len())));
    }
    let mut tokens = spec.region.clone();
    tokens.sort_unstable();
    if tokens.windows(2).any(|w| w[0] == w[1]) {
        return Err(violation(SpecClause::EvenRegion, "region repeats an edge"));
    }
    if spec.splits.len() != spec.region.len() {
        return Err(Error::BadParams(format!("{} split counts for {} region edges", spec.splits.len(), spec.region.len())));
    }
    let split_edges = spec.splits.iter().filter(|&&k| k > 0).count();
    if split_edges < 2 {
        return Err(violation(SpecClause::SplitCount, format!("{split_edges} region edge(s) split, need at least 2")));
    }

    let mut j1 = j2.clone();
    let mut cycle = Vec::new();
    let mut inserted = Vec::new();
    let mut starts = Vec::new();
    for (i, &tok) in spec.region.iter().enumerate() {
        starts.push(cycle.len());
        cycle.push(walk[i]);
        if spec.splits[i] == 0 {
            continue;
        }
        let (next, mut new) = subdivide_multi(&j1, tok, spec.splits[i])?;
        if j2.edges()[tok].0 != walk[i] {
            new.reverse();
        }
        j1 = next;
        cycle.extend(&new);
        inserted.extend(new);
    }
    let total = inserted.len();
    if !j1.is_simple() {
        return Err(violation(SpecClause::Simplicity, "subdivided graph has parallel edges"));
    }
    let j1 = j1.to_simple()?;
    if !is_facial_cycle(&j1, &cycle) {
        return Err(violation(SpecClause::EvenRegion, "region is not a face"));
    }

    if let Some(e) = face_clauses(j2.n(), &j1, &cycle, &starts, spec)? {
        return Err(e);
    }
    if !is_bipartite(&j1) {
        return Err(violation(SpecClause::SplitParity, "subdivided graph is not bipartite"));
    }

    let mut used = vec![false; total];
    for &(a, b) in &spec.pairing {
        for x in [a, b] {
            if x >= total || std::mem::replace(&mut used[x], true) {
                return Err(violation(SpecClause::PairOrder, format!("position {x} is invalid or reused")));
            }
        }
    }
    if total % 2 == 1 || spec.pairing.len() * 2 != total || spec.pairing.len() < 2 {
        return Err(violation(SpecClause::PairOrder, format!("{total} inserted vertices, {} pairs", spec.pairing.len())));
    }
    if !follows_order(&spec.pairing, spec.order_variant, total) {
        return Err(violation(SpecClause::PairOrder, format!("pairing does not follow {:?}", spec.order_variant)));
    }
    let pairs: Vec<(usize, usize)> = spec.pairing.iter().map(|&(a, b)| (inserted[a], inserted[b])).collect();
    for (i, &p) in pairs.iter().enumerate() {
        if j1.has_edge(p.0, p.1) {
            return Err(violation(SpecClause::Simplicity, format!("a_{0} b_{0} is already an edge", i + 1)));
        }
        if is_bipartite(&j1.with_edges([p])?) {
            return Err(violation(SpecClause::PairParity, format!("J_1 + a_{0} b_{0} is bipartite", i + 1)));
        }
    }
    let witness = FactorWitness { j_prime: j1, pairs, region: cycle, order_variant: spec.order_variant };
    Ok((witness.assemble()?, witness))
}

/// Adjacency and parity clauses, tried over every embedding of `j1` in
/// which the region is a face. `starts[i]` is the position on `cycle` where
/// region edge `i` begins. Returns the first failure if no embedding passes.
fn face_clauses(j2_n: usize, j1: &Graph, cycle: &[usize], starts: &[usize], spec: &CubicBuildSpec) -> Result<Option<Error>> {
    let k = cycle.len();
    let region_key = Face { darts: Vec::new(), vertices: cycle.to_vec() }.key();
    let mut on_region = std::collections::BTreeSet::new();
    for t in 0..k {
        let (u, v) = (cycle[t], cycle[(t + 1) % k]);
        on_region.insert((u.min(v), u.max(v)));
    }
    let base_len = |f: &Face| f.len() - f.vertices.iter().filter(|&&v| v >= j2_n).count();
    let face_edges = |f: &Face| {
        let n = f.vertices.len();
        (0..n)
            .map(|t| {
                let (u, v) = (f.vertices[t], f.vertices[(t + 1) % n]);
                (u.min(v), u.max(v))
            })
            .collect::<Vec<_>>()
    };
    let mut first = None;
    for emb in all_embeddings(j1, 4096)? {
        let fs = emb.faces()?;
        if !fs.faces.iter().any(|f| f.key() == region_key) {
            continue;
        }
        let others: Vec<&Face> = fs.faces.iter().filter(|f| f.key() != region_key).collect();
        let lonely = others.iter().find(|f| base_len(f) % 2 == 1 && !face_edges(f).iter().any(|e| on_region.contains(e)));
        let failure = if let Some(f) = lonely {
            Some(violation(SpecClause::OddRegionAdjacency, format!("odd face {:?} shares no edge with the region", f.vertices)))
        } else {
            starts.iter().zip(&spec.splits).zip(&spec.region).find_map(|((&p, &times), &tok)| {
                let (u, v) = (cycle[p], cycle[(p + 1) % k]);
                let seg = (u.min(v), u.max(v));
                let odd = others.iter().any(|f| base_len(f) % 2 == 1 && face_edges(f).contains(&seg));
                (odd != (times % 2 == 1)).then(|| {
                    let side = if odd { "an odd" } else { "no odd" };
                    violation(SpecClause::SplitParity, format!("edge token {tok} split {times} time(s) but lies on {side} face"))
                })
            })
        };
        match failure {
            None => return Ok(None),
            Some(e) => {
                first.get_or_insert(e);
            }
        }
    }
    Ok(Some(first.unwrap_or_else(|| violation(SpecClause::EvenRegion, "region is not a face"))))
}

/// Replaces the quadrilateral face `[p_0, p_1, p_2, p_3]` of a cubic planar
/// graph by three quadrilaterals: `p_0 p_1` becomes `p_0 a_1 a_2 p_1`,
/// `p_2 p_3` becomes `p_2 b_1 b_2 p_3`, and the chords `a_1 b_2`, `a_2 b_1`
/// are added.
pub fn quad_expand(g: &Graph, face: [usize; 4]) -> Result<Graph> {
    if !g.is_regular(3) {
        return Err(Error::NotCubic);
    }
    if !is_planar(g) {
        return Err(Error::NonPlanarInput);
    }
    let [p0, p1, p2, p3] = face;
    if face.iter().any(|&v| v >= g.n()) || !is_facial_cycle(g, &face) {
        return Err(Error::NotQuadFace(format!("{face:?}")));
    }
    let (g, a) = subdivide(g, (p0, p1), 2)?;
    let (g, b) = subdivide(&g, (p2, p3), 2)?;
    g.with_edges([(a[0], b[1]), (a[1], b[0])])
}

/// Demonstration specs that build successfully: the cube with two opposite
/// edges of a face split twice, and the triangular prism with a square face
/// split once on each triangle edge and twice on a rung.
pub fn cubic_demo_specs() -> Vec<CubicBuildSpec> {
    vec![cube_spec(), prism_spec()]
}

/// Cube `0..8` as a multigraph with the face `0-1-3-2` first: tokens
/// `0: (0,1)`, `1: (1,3)`, `2: (3,2)`, `3: (2,0)`.
pub fn cube_multigraph() -> Multigraph {
    Multigraph::new(8, [(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)])
        .expect("cube")
}

fn cube_spec() -> CubicBuildSpec {
    CubicBuildSpec {
        j2: cube_multigraph(),
        region: vec![0, 1, 2, 3],
        splits: vec![2, 0, 2, 0],
        pairing: vec![(0, 2), (1, 3)],
        order_variant: OrderVariant::Ord2,
    }
}

/// Triangular prism: triangles `0,1,2` and `3,4,5`, face `0-1-4-3` first.
fn prism_spec() -> CubicBuildSpec {
    let j2 = Multigraph::new(6, [(0, 1), (1, 4), (4, 3), (3, 0), (1, 2), (2, 0), (4, 5), (5, 3), (2, 5)]).expect("prism");
    CubicBuildSpec {
        j2,
        region: vec![0, 1, 2, 3],
        splits: vec![1, 2, 1, 0],
        pairing: vec![(0, 1), (3, 2)],
        order_variant: OrderVariant::Ord1,
    }
}

/// Variants of the cube demo spec, each breaking exactly one clause.
pub fn cubic_mutations() -> Vec<(SpecClause, CubicBuildSpec)> {
    let cube = cube_spec();
    let k33 = Multigraph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).expect("K33");
    let k4 = Multigraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]).expect("K4");

    // Vertex 7 truncated: the triangle 7-8-9 misses the face 0-1-3-2.
    let mut e = cube_multigraph().edges().to_vec();
    e.retain(|&(u, v)| u != 7 && v != 7);
    e.extend([(5, 7), (6, 8), (3, 9), (7, 8), (8, 9), (9, 7)]);
    let truncated = Multigraph::new(10, e).expect("truncated cube");

    // Edge 0-1 replaced by 0-8, a doubled 8-9, and 9-1.
    let mut e: Vec<(usize, usize)> = cube_multigraph().edges()[1..].to_vec();
    e.splice(0..0, [(0, 8), (8, 9), (9, 1)]);
    e.push((8, 9));
    let digon = Multigraph::new(10, e).expect("cube with a digon");

    vec![
        (SpecClause::BaseStructure, CubicBuildSpec { j2: k33, ..cube.clone() }),
        (SpecClause::EvenRegion, CubicBuildSpec { j2: k4, region: vec![0, 1, 2], splits: vec![1, 1, 1], ..cube.clone() }),
        (SpecClause::OddRegionAdjacency, CubicBuildSpec { j2: truncated, ..cube.clone() }),
        (SpecClause::SplitCount, CubicBuildSpec { splits: vec![4, 0, 0, 0], ..cube.clone() }),
        (SpecClause::SplitParity, CubicBuildSpec { splits: vec![1, 0, 1, 0], ..cube.clone() }),
        (SpecClause::PairOrder, CubicBuildSpec { pairing: vec![(0, 1), (2, 3)], ..cube.clone() }),
        (
            SpecClause::Simplicity,
            CubicBuildSpec { j2: digon, region: vec![0, 1, 2, 3, 4, 5], splits: vec![0, 0, 0, 2, 0, 2], ..cube.clone() },
        ),
        (SpecClause::PairParity, CubicBuildSpec { pairing: vec![(0, 3), (1, 2)], order_variant: OrderVariant::Ord1, ..cube }),
    ]
}
