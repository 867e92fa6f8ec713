use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

/// One step applied to the current inner hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum T3333Move {
    T1,
    T2,
    /// Mirror image of `T2`.
    T2m,
}

/// Closing step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum T3333Final {
    /// Add the edge `c_1 c_4`.
    F1,
    /// Add `v'`, `v''` and one vertex joined to `v'`, `v''`, `c_4`.
    F2,
}

/// A build plan: moves in order, then the closing step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct T3333Script {
    pub moves: Vec<T3333Move>,
    pub last: T3333Final,
}

impl T3333Script {
    pub fn new(moves: Vec<T3333Move>, last: T3333Final) -> Self {
        T3333Script { moves, last }
    }

    /// Order of the built graph: `7 + 3k` or `10 + 3k` for `k` moves.
    pub fn order(&self) -> usize {
        let base = match self.last {
            T3333Final::F1 => 7,
            T3333Final::F2 => 10,
        };
        base + 3 * self.moves.len()
    }

    /// Every script with at most `max_moves` moves, shortest first.
    pub fn all_up_to(max_moves: usize) -> Vec<T3333Script> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<T3333Move>> = vec![Vec::new()];
        for k in 0..=max_moves {
            for moves in &layer {
                for last in [T3333Final::F1, T3333Final::F2] {
                    out.push(T3333Script::new(moves.clone(), last));
                }
            }
            if k < max_moves {
                layer = layer
                    .iter()
                    .flat_map(|m| {
                        [T3333Move::T1, T3333Move::T2, T3333Move::T2m].into_iter().map(move |t| {
                            let mut m = m.clone();
                            m.push(t);
                            m
                        })
                    })
                    .collect();
            }
        }
        out
    }
}

/// Builds the graph of a script.
///
/// Start: the 6-cycle `[a_1, a_3, b_1, b_2, w_1, b_3]` (ids `0..6`) with
/// `a_1 b_1`, `a_3 b_2`, `a_3 b_3`, and `c_1` (id 6) on `a_1, b_1`. The
/// hexagon `c_1..c_6 = [c_1, b_1, b_2, w_1, b_3, a_1]` has degrees
/// `2,4,3,2,3,4`; each move adds `v'` on `c_1, c_3`, `v''` on `c_1, c_5` and
/// a vertex `z`, then relabels the hexagon.
pub fn t3333_build(script: &T3333Script) -> Result<Graph> {
    let (a1, a3, b1, b2, w1, b3, c1) = (0, 1, 2, 3, 4, 5, 6);
    let mut edges = vec![(a1, a3), (a3, b1), (b1, b2), (b2, w1), (w1, b3), (b3, a1), (a1, b1), (a3, b2), (a3, b3)];
    edges.extend([(c1, a1), (c1, b1)]);
    let mut n = 7;
    let mut c = [c1, b1, b2, w1, b3, a1];
    let fresh = |n: &mut usize| {
        *n += 1;
        *n - 1
    };
    for &mv in &script.moves {
        let v1 = fresh(&mut n);
        let v2 = fresh(&mut n);
        let z = fresh(&mut n);
        edges.extend([(v1, c[0]), (v1, c[2]), (v2, c[0]), (v2, c[4])]);
        c = match mv {
            T3333Move::T1 => {
                edges.extend([(z, v1), (z, v2)]);
                [c[3], c[4], v2, z, v1, c[2]]
            }
            T3333Move::T2 => {
                edges.extend([(z, v1), (z, c[3])]);
                [v2, c[0], v1, z, c[3], c[4]]
            }
            T3333Move::T2m => {
                edges.extend([(z, v2), (z, c[3])]);
                [v1, c[2], c[3], z, v2, c[0]]
            }
        };
    }
    match script.last {
        T3333Final::F1 => edges.push((c[0], c[3])),
        T3333Final::F2 => {
            let v1 = fresh(&mut n);
            let v2 = fresh(&mut n);
            let z = fresh(&mut n);
            edges.extend([(v1, c[0]), (v1, c[2]), (v2, c[0]), (v2, c[4]), (z, v1), (z, v2), (z, c[3])]);
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{is_polyhedron, planar_embed};
    use crate::products::cover;
    use crate::recognition::{classify_odd_faces, ConditionTag};

    #[test]
    fn start_graphs() {
        let j = t3333_build(&T3333Script::new(vec![], T3333Final::F1)).unwrap();
        assert_eq!(j.n(), 7);
        assert_eq!(j.degree_sequence().exponents(), vec![(4, 3), (3, 4)]);
        let j = t3333_build(&T3333Script::new(vec![], T3333Final::F2)).unwrap();
        assert_eq!(j.n(), 10);
    }

    #[test]
    fn scripts_give_extremal_covers() {
        for s in T3333Script::all_up_to(2) {
            let j = t3333_build(&s).unwrap();
            let p = j.n();
            assert_eq!(p, s.order());
            assert_eq!(p % 3, 1);
            assert!(is_polyhedron(&j), "{s:?}");
            let fs = planar_embed(&j).unwrap().faces().unwrap();
            assert_eq!(fs.stats().count(3), 4);
            assert_eq!(fs.stats().count(4), fs.len() - 4);
            assert_eq!(classify_odd_faces(&j).unwrap().tag, ConditionTag::C3, "{s:?}");
            let c = cover(&j).0;
            assert!(is_polyhedron(&c));
            assert_eq!(c.degree_sequence().exponents(), vec![(4, 2 * p - 8), (3, 8)]);
        }
    }

    #[test]
    fn script_enumeration() {
        assert_eq!(T3333Script::all_up_to(3).len(), 2 * (1 + 3 + 9 + 27));
    }
}
