//! Planarity by path addition (Demoucron, Malgrange, Pertuiset) on each
//! biconnected block, producing a neighbour rotation per vertex.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::Graph;

/// Edge lists of the biconnected blocks of `g` (bridges are one-edge blocks).
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    const NONE: usize = usize::MAX;
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.disc[u] = s.timer;
        s.low[u] = s.timer;
        s.timer += 1;
        for i in 0..s.g.neighbors(u).len() {
            let w = s.g.neighbors(u)[i];
            if s.disc[w] == NONE {
                s.stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let mut s = State {
        g,
        disc: vec![NONE; g.n()],
        low: vec![NONE; g.n()],
        timer: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if s.disc[v] == NONE {
            dfs(&mut s, v, NONE);
        }
    }
    s.out
}

enum Fragment {
    Edge(usize, usize),
    Component(Vec<usize>),
}

/// Faces (as consistently oriented vertex cycles) of a planar embedding of
/// a 2-connected simple graph on `0..adj.len()`, or `None` if non-planar.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let cycle = initial_cycle(adj)?;
    let mut in_h = vec![false; n];
    let mut embedded: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        embedded.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    while embedded.len() < m {
        let fragments = fragments(adj, &in_h, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, (_, attach)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| attach.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice?;
        let (frag, attach) = &fragments[fi];
        let path = match frag {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component(comp) => fragment_path(adj, comp, attach[0], attach[1]),
        };
        for w in path.windows(2) {
            embedded.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (f1, f2) = split_face(&faces[face_idx], &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
    Some(faces)
}

/// Vertex 0, two of its neighbours, and a path between them avoiding 0.
fn initial_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let (x, y) = (*adj[0].first()?, *adj[0].get(1)?);
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    prev[x] = x;
    prev[0] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for &w in &adj[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if prev[y] == usize::MAX {
        return None;
    }
    let mut path = vec![y];
    let mut u = y;
    while u != x {
        u = prev[u];
        path.push(u);
    }
    path.reverse();
    let mut cycle = vec![0];
    cycle.extend(path);
    Some(cycle)
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], embedded: &HashSet<(usize, usize)>) -> Vec<(Fragment, Vec<usize>)> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !embedded.contains(&(u, v)) {
                out.push((Fragment::Edge(u, v), vec![u, v]));
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut attach = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in &adj[u] {
                if in_h[w] {
                    attach.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        comp.sort_unstable();
        out.push((Fragment::Component(comp), attach));
    }
    out
}

/// Path `a, c_1, .., c_k, b` through the fragment's interior.
fn fragment_path(adj: &[Vec<usize>], comp: &[usize], a: usize, b: usize) -> Vec<usize> {
    let inside: HashSet<usize> = comp.iter().copied().collect();
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if adj[u].contains(&b) {
            let mut path = vec![b, u];
            let mut x = u;
            while prev[&x] != a {
                x = prev[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a 2-connected graph joins any two of its attachments")
}

/// Splits an oriented face cycle by a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let pos = |x: usize| face.iter().position(|&v| v == x).expect("path end on face");
    let (i, j) = (pos(path[0]), pos(path[path.len() - 1]));
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

/// Rotation with `succ_b(a) = c` for every face walk `.., a, b, c, ..`.
fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            succ[f[i]].insert(f[(i + k - 1) % k], f[(i + 1) % k]);
        }
    }
    succ.iter()
        .map(|s| {
            let Some(&start) = s.keys().min() else { return Vec::new() };
            let mut rot = vec![start];
            let mut x = s[&start];
            while x != start {
                rot.push(x);
                x = s[&x];
            }
            rot
        })
        .collect()
}

/// Neighbour rotation of every vertex in some planar embedding of `g`.
/// Blocks are embedded separately and concatenated at cut vertices.
pub(crate) fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut local = vec![usize::MAX; g.n()];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            adj[local[u]].push(local[v]);
            adj[local[v]].push(local[u]);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        let faces = embed_biconnected(&adj)?;
        for (i, r) in rotation_from_faces(verts.len(), &faces).into_iter().enumerate() {
            rot[verts[i]].extend(r.into_iter().map(|w| verts[w]));
        }
    }
    Some(rot)
}
