use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::Limits;
use crate::error::{Error, Result};
use crate::graph::{bipartition, is_bipartite, is_k_connected, semi_hyper_2_connected, two_cuts, Graph};
use crate::planar::{all_embeddings, is_facial_cycle, is_planar, planar_embed, Embedding};

/// The two admissible orders of the terminals around the region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderVariant {
    /// `a_1, .., a_m, b_m, .., b_1`
    Ord1,
    /// `a_1, .., a_m, b_1, .., b_m`
    Ord2,
}

/// `J = J' + a_1 b_1 + .. + a_m b_m` with `region` a face of `J'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    pub j_prime: Graph,
    pub pairs: Vec<(usize, usize)>,
    /// Boundary cycle of the region, in cyclic order.
    pub region: Vec<usize>,
    pub order_variant: OrderVariant,
}

impl FactorWitness {
    /// `J' + all pair edges`.
    pub fn assemble(&self) -> Result<Graph> {
        self.j_prime.with_edges(self.pairs.iter().copied())
    }

    /// The terminals in the order the variant prescribes around the region.
    pub fn terminal_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        match self.order_variant {
            OrderVariant::Ord1 => seq.extend(self.pairs.iter().rev().map(|p| p.1)),
            OrderVariant::Ord2 => seq.extend(self.pairs.iter().map(|p| p.1)),
        }
        seq
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    pub clause: &'static str,
    pub ok: bool,
    pub detail: String,
}

/// Clause-by-clause outcome of [`verify_factor_witness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub valid: bool,
    pub clauses: Vec<ClauseCheck>,
    /// The separating-pair clause read literally: every 2-cut on the region
    /// and outside the closed arcs between `b_1, a_1` and `a_m, b_m` (ord1)
    /// or `b_m, a_1` and `a_m, b_1` (ord2). Informational only.
    pub literal_arc_clause: bool,
}

/// Offsets of `seq` around `cycle` when walked in direction `dir` from the
/// position of `seq[0]`, or `None` if some vertex is not on the cycle.
fn offsets(cycle: &[usize], seq: &[usize], forward: bool) -> Option<Vec<usize>> {
    let k = cycle.len();
    let pos: Vec<usize> = seq.iter().map(|v| cycle.iter().position(|c| c == v)).collect::<Option<_>>()?;
    let base = pos[0];
    Some(pos.iter().map(|&p| if forward { (p + k - base) % k } else { (base + k - p) % k }).collect())
}

/// Whether `seq` can be read around `cycle` in order (weakly, so repeated
/// consecutive vertices are allowed), in some direction.
pub(crate) fn in_cyclic_order(cycle: &[usize], seq: &[usize]) -> bool {
    [true, false].into_iter().any(|fwd| offsets(cycle, seq, fwd).is_some_and(|o| o.windows(2).all(|w| w[0] <= w[1])))
}

/// Vertices strictly inside the closed arc from `from` to `to` along the
/// reading direction that places the terminals in order, plus the ends.
fn closed_arc(cycle: &[usize], from: usize, to: usize, forward: bool) -> Vec<usize> {
    let k = cycle.len();
    let i = cycle.iter().position(|&c| c == from).expect("on cycle");
    let mut out = vec![from];
    let mut t = i;
    while cycle[t] != to {
        t = if forward { (t + 1) % k } else { (t + k - 1) % k };
        out.push(cycle[t]);
    }
    out
}

fn reading_direction(cycle: &[usize], seq: &[usize]) -> bool {
    offsets(cycle, seq, true).is_some_and(|o| o.windows(2).all(|w| w[0] <= w[1]))
}

/// Every component of `J' - c - d`, for each 2-cut `{c, d}`, holds a
/// terminal other than `c` and `d`.
fn cuts_separate_terminals(jp: &Graph, terminals: &BTreeSet<usize>) -> (bool, String) {
    for cut in two_cuts(jp) {
        for comp in &cut.components {
            if !comp.iter().any(|v| terminals.contains(v)) {
                return (false, format!("component {:?} of J'-{}-{} has no terminal", comp, cut.u, cut.v));
            }
        }
    }
    (true, String::new())
}

/// Checks every clause of the factor-witness definition for `w` against `j`.
pub fn verify_factor_witness(j: &Graph, w: &FactorWitness) -> Result<WitnessReport> {
    let jp = &w.j_prime;
    let m = w.pairs.len();
    if jp.n() != j.n() {
        return Err(Error::InconsistentWitness(format!("J' has {} vertices, J has {}", jp.n(), j.n())));
    }
    if m < 2 {
        return Err(Error::InconsistentWitness(format!("need m >= 2 pairs, got {m}")));
    }
    if w.region.iter().any(|&v| v >= j.n()) {
        return Err(Error::InconsistentWitness("region vertex out of range".into()));
    }
    let assembled = w.assemble().map_err(|e| Error::InconsistentWitness(format!("J' + pairs: {e}")))?;
    if &assembled != j {
        return Err(Error::InconsistentWitness("J' plus the pair edges differs from J".into()));
    }
    let mut clauses = Vec::new();
    let mut push = |clause: &'static str, ok: bool, detail: String| clauses.push(ClauseCheck { clause, ok, detail });

    let (a1, b1, am, bm) = (w.pairs[0].0, w.pairs[0].1, w.pairs[m - 1].0, w.pairs[m - 1].1);
    let ends: BTreeSet<usize> = [a1, b1, am, bm].into_iter().collect();
    push("distinct_ends", ends.len() == 4, format!("a1={a1} b1={b1} am={am} bm={bm}"));
    let bip = bipartition(jp);
    push("bipartite", bip.is_some(), String::new());
    let planar = is_planar(jp);
    push("planar", planar, String::new());
    let three = is_k_connected(jp, 3);
    let (semi, _) = semi_hyper_2_connected(jp);
    push(
        "connectivity",
        three || semi,
        if three { "3-connected".into() } else if semi { "semi-hyper-2-connected".into() } else { "neither".into() },
    );
    let facial = planar && is_facial_cycle(jp, &w.region);
    push("region_is_face", facial, format!("{:?}", w.region));
    let seq = w.terminal_sequence();
    let ordered = in_cyclic_order(&w.region, &seq);
    push("terminal_order", ordered, format!("{:?} as {:?}", seq, w.order_variant));
    let parity = match &bip {
        Some(b) => {
            let c = b.colors(jp.n());
            w.pairs.iter().all(|&(a, b)| c[a] == c[b])
        }
        None => false,
    };
    push("pair_parity", parity, String::new());
    let terminals: BTreeSet<usize> = w.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let (sep, detail) = cuts_separate_terminals(jp, &terminals);
    push("two_cuts_separate_terminals", sep, detail);

    let literal_arc_clause = ordered && {
        let fwd = reading_direction(&w.region, &seq);
        let forbidden: Vec<Vec<usize>> = match w.order_variant {
            OrderVariant::Ord1 => vec![closed_arc(&w.region, b1, a1, fwd), closed_arc(&w.region, am, bm, fwd)],
            OrderVariant::Ord2 => vec![closed_arc(&w.region, bm, a1, fwd), closed_arc(&w.region, am, b1, fwd)],
        };
        two_cuts(jp).iter().all(|c| {
            w.region.contains(&c.u)
                && w.region.contains(&c.v)
                && !forbidden.iter().any(|arc| arc.contains(&c.u) || arc.contains(&c.v))
        })
    };
    let valid = clauses.iter().all(|c| c.ok);
    Ok(WitnessReport { valid, clauses, literal_arc_clause })
}

/// Orients and orders `edges` so that they read around `cycle` as `variant`.
fn order_on_cycle(cycle: &[usize], edges: &[(usize, usize)], variant: OrderVariant) -> Option<Vec<(usize, usize)>> {
    let k = cycle.len();
    let mut pos = vec![usize::MAX; cycle.iter().max().map_or(0, |&x| x + 1)];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let at = |v: usize| pos.get(v).copied().filter(|&p| p != usize::MAX);
    let raw: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| Some((at(u)?, at(v)?))).collect::<Option<_>>()?;
    for forward in [true, false] {
        for start in 0..k {
            let off = |p: usize| if forward { (p + k - start) % k } else { (start + k - p) % k };
            let mut oriented: Vec<(usize, usize, usize, usize)> = raw
                .iter()
                .zip(edges)
                .map(|(&(pu, pv), &(u, v))| {
                    let (ou, ov) = (off(pu), off(pv));
                    if ou < ov { (ou, ov, u, v) } else { (ov, ou, v, u) }
                })
                .collect();
            let ok = match variant {
                OrderVariant::Ord1 => {
                    oriented.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
                    oriented.windows(2).all(|p| p[0].1 >= p[1].1)
                        && oriented.last().unwrap().0 < oriented.last().unwrap().1
                }
                OrderVariant::Ord2 => {
                    oriented.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
                    oriented.windows(2).all(|p| p[0].1 <= p[1].1)
                        && oriented.last().unwrap().0 < oriented[0].1
                }
            };
            if !ok {
                continue;
            }
            let pairs: Vec<(usize, usize)> = oriented.iter().map(|o| (o.2, o.3)).collect();
            let m = pairs.len();
            let ends: BTreeSet<usize> = [pairs[0].0, pairs[0].1, pairs[m - 1].0, pairs[m - 1].1].into_iter().collect();
            if ends.len() == 4 {
                return Some(pairs);
            }
        }
    }
    None
}

/// Edge sets `S` of size `k` such that some 2-colouring of `j` has exactly
/// `S` monochromatic and every vertex keeps at least two bichromatic edges.
fn monochromatic_sets(j: &Graph, k: usize, budget: &mut u64) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = j.n();
    // Breadth-first order so each new vertex has an assigned neighbour.
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in j.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    struct Ctx<'a> {
        j: &'a Graph,
        order: Vec<usize>,
        rank: Vec<usize>,
        color: Vec<bool>,
        mono_at: Vec<usize>,
        k: usize,
        out: BTreeSet<Vec<(usize, usize)>>,
        budget: &'a mut u64,
    }
    fn rec(c: &mut Ctx, idx: usize, mono: usize) -> Result<()> {
        if *c.budget == 0 {
            return Err(Error::SearchBudgetExceeded("factor witness colouring search".into()));
        }
        *c.budget -= 1;
        if idx == c.order.len() {
            if mono == c.k {
                let mut s: Vec<(usize, usize)> =
                    c.j.edges().iter().copied().filter(|&(u, v)| c.color[u] == c.color[v]).collect();
                s.sort_unstable();
                c.out.insert(s);
            }
            return Ok(());
        }
        let v = c.order[idx];
        let choices: &[bool] = if idx == 0 { &[false] } else { &[false, true] };
        for &col in choices {
            c.color[v] = col;
            let earlier: Vec<usize> =
                c.j.neighbors(v).iter().copied().filter(|&w| c.rank[w] < idx && c.color[w] == col).collect();
            let extra = earlier.len();
            let fits = mono + extra <= c.k
                && c.mono_at[v] + extra + 2 <= c.j.degree(v)
                && earlier.iter().all(|&w| c.mono_at[w] + 1 + 2 <= c.j.degree(w));
            if fits {
                c.mono_at[v] += extra;
                for &w in &earlier {
                    c.mono_at[w] += 1;
                }
                rec(c, idx + 1, mono + extra)?;
                c.mono_at[v] -= extra;
                for &w in &earlier {
                    c.mono_at[w] -= 1;
                }
            }
        }
        Ok(())
    }
    let mut ctx = Ctx {
        j,
        order,
        rank,
        color: vec![false; n],
        mono_at: vec![0; n],
        k,
        out: BTreeSet::new(),
        budget,
    };
    rec(&mut ctx, 0, 0)?;
    Ok(ctx.out.into_iter().collect())
}

fn candidate_embeddings(jp: &Graph, three_connected: bool) -> Result<Vec<Embedding>> {
    if three_connected {
        Ok(planar_embed(jp).into_iter().collect())
    } else {
        all_embeddings(jp, 4096)
    }
}

/// Searches removable edge sets by increasing size (then lexicographically)
/// and every face of every embedding of the remainder for a valid witness.
pub fn find_factor_witness(j: &Graph) -> Result<Option<FactorWitness>> {
    find_factor_witness_with(j, &Limits::from_env())
}

pub fn find_factor_witness_with(j: &Graph, limits: &Limits) -> Result<Option<FactorWitness>> {
    limits.check_n(j.n(), "factor witness search")?;
    if j.n() < 4 || !j.is_connected() {
        return Ok(None);
    }
    let mut budget = limits.max_nodes;
    let max_k = j.edge_count().saturating_sub(j.n());
    for k in 2..=max_k {
        for s in monochromatic_sets(j, k, &mut budget)? {
            let jp = j.without_edges(&s)?;
            if !is_bipartite(&jp) || !is_planar(&jp) {
                continue;
            }
            let three = is_k_connected(&jp, 3);
            if !three && !semi_hyper_2_connected(&jp).0 {
                continue;
            }
            let terminals: BTreeSet<usize> = s.iter().flat_map(|&(a, b)| [a, b]).collect();
            if !cuts_separate_terminals(&jp, &terminals).0 {
                continue;
            }
            let mut tried = BTreeSet::new();
            for emb in candidate_embeddings(&jp, three)? {
                for face in emb.faces()?.faces {
                    if !tried.insert(face.key()) || !terminals.iter().all(|t| face.contains(*t)) {
                        continue;
                    }
                    for variant in [OrderVariant::Ord1, OrderVariant::Ord2] {
                        if let Some(pairs) = order_on_cycle(&face.vertices, &s, variant) {
                            let w = FactorWitness {
                                j_prime: jp.clone(),
                                pairs,
                                region: face.vertices.clone(),
                                order_variant: variant,
                            };
                            if verify_factor_witness(j, &w)?.valid {
                                return Ok(Some(w));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Region labelling `v_1..v_{2l}` and indices with `a_i = v_{r_i}`,
/// `b_i = v_{s_i}` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadWitness {
    pub labeling: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl QuadWitness {
    /// `r_1 = 1`, `r_m` even, `s_1 = r_m + 1`, `s_m = 2l`, and each step
    /// advances `r` and `s` by two in total.
    pub fn index_equations_hold(&self) -> bool {
        let m = self.r.len();
        let two_l = self.labeling.len();
        m >= 2
            && self.s.len() == m
            && self.r[0] == 1
            && self.r[m - 1] % 2 == 0
            && self.s[0] == self.r[m - 1] + 1
            && self.s[m - 1] == two_l
            && (0..m - 1).all(|i| {
                self.r[i + 1] >= self.r[i]
                    && self.s[i + 1] >= self.s[i]
                    && (self.r[i + 1] - self.r[i]) + (self.s[i + 1] - self.s[i]) == 2
            })
    }
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    let k = a.len();
    let Some(i) = b.iter().position(|&x| x == a[0]) else { return false };
    (0..k).all(|t| a[t] == b[(i + t) % k]) || (0..k).all(|t| a[t] == b[(i + k - t) % k])
}

/// Factor-witness clauses plus: every face of `J'` other than the region is
/// a quadrilateral, and the index equations hold.
pub fn verify_quad_witness(j: &Graph, w: &FactorWitness, q: &QuadWitness) -> Result<bool> {
    let m = w.pairs.len();
    if q.r.len() != m || q.s.len() != m {
        return Err(Error::InconsistentWitness(format!("{m} pairs but {} / {} indices", q.r.len(), q.s.len())));
    }
    let idx = |i: usize| -> Result<usize> {
        q.labeling
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::InconsistentWitness(format!("index {i} outside 1..={}", q.labeling.len())))
    };
    for (t, &(a, b)) in w.pairs.iter().enumerate() {
        if idx(q.r[t])? != a || idx(q.s[t])? != b {
            return Err(Error::InconsistentWitness(format!("pair {} does not match v_r / v_s", t + 1)));
        }
    }
    if !same_cycle(&q.labeling, &w.region) {
        return Err(Error::InconsistentWitness("labelling is not a traversal of the region".into()));
    }
    if q.labeling.len() < 4 || !q.index_equations_hold() {
        return Ok(false);
    }
    if !verify_factor_witness(j, w)?.valid {
        return Ok(false);
    }
    let three = is_k_connected(&w.j_prime, 3);
    let region_key = {
        let f = crate::planar::Face { darts: Vec::new(), vertices: w.region.clone() };
        f.key()
    };
    for emb in candidate_embeddings(&w.j_prime, three)? {
        let fs = emb.faces()?;
        if fs.faces.iter().any(|f| f.key() == region_key)
            && fs.faces.iter().all(|f| f.key() == region_key || f.len() == 4)
        {
            return Ok(true);
        }
    }
    Ok(false)
}
