use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SpecClause};
use crate::graph::Graph;
use crate::products::cartesian;

use super::basic::{complete, cycle};

/// The polygon `u_1..u_{2l}` (ids `0..2l`) and its chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DouHSpec {
    pub half: usize,
    pub diagonals: Vec<(usize, usize)>,
}

fn violation(clause: SpecClause, detail: String) -> Error {
    Error::SpecViolation { clause, detail }
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize| a.0 < x && x < a.1;
    let shared = [b.0, b.1].iter().any(|&x| x == a.0 || x == a.1);
    !shared && inside(b.0) != inside(b.1)
}

/// The polygon with its chords, after checking the chord set is
/// non-antipodal, closed under the half-turn, non-crossing and bipartite.
pub fn dou_h(spec: &DouHSpec) -> Result<Graph> {
    let l = spec.half;
    if l < 2 {
        return Err(Error::BadParams(format!("half-length must be at least 2, got {l}")));
    }
    let n = 2 * l;
    let mut chords = Vec::new();
    for &(u, v) in &spec.diagonals {
        let (u, v) = (u.min(v), u.max(v));
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let gap = v - u;
        if gap <= 1 || gap == n - 1 {
            return Err(Error::BadParams(format!("({u}, {v}) is a polygon edge or a loop")));
        }
        if gap == l {
            return Err(violation(SpecClause::AntipodalChord, format!("({u}, {v})")));
        }
        if gap % 2 == 0 {
            return Err(violation(SpecClause::ChordParity, format!("({u}, {v}) joins vertices of equal parity")));
        }
        chords.push((u, v));
    }
    chords.sort_unstable();
    chords.dedup();
    for &(u, v) in &chords {
        let (x, y) = ((u + l) % n, (v + l) % n);
        if chords.binary_search(&(x.min(y), x.max(y))).is_err() {
            return Err(violation(SpecClause::ShiftClosure, format!("({u}, {v}) has no partner ({x}, {y})")));
        }
    }
    for (i, &a) in chords.iter().enumerate() {
        if let Some(&b) = chords[i + 1..].iter().find(|&&b| crosses(a, b)) {
            return Err(violation(SpecClause::CrossingChords, format!("{a:?} crosses {b:?}")));
        }
    }
    cycle(n)?.with_edges(chords)
}

/// The Kronecker factor of `H □ K2`: `H` plus the antipodal chords when `l`
/// is even, `Ĥ □ K2` when `l` is odd, where `Ĥ` is the `l`-gon with the
/// chords reduced mod `l`.
pub fn dou_j(h: &Graph) -> Result<Graph> {
    let n = h.n();
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadParams(format!("expected a polygon on 2l >= 4 vertices, got {n}")));
    }
    let l = n / 2;
    if !(0..n).all(|i| h.has_edge(i, (i + 1) % n)) {
        return Err(Error::BadParams("vertices 0..2l are not a Hamiltonian cycle in order".into()));
    }
    let chords: Vec<(usize, usize)> =
        h.edges().iter().copied().filter(|&(u, v)| v - u != 1 && v - u != n - 1).collect();
    if l % 2 == 0 {
        h.with_edges((0..l).map(|i| (i, i + l)))
    } else {
        let reduced = chords.iter().map(|&(u, v)| (u % l, v % l)).filter(|&(u, v)| u != v);
        let hat = Graph::from_edge_set(l, (0..l).map(|i| (i, (i + 1) % l)).chain(reduced))?;
        Ok(cartesian(&hat, &complete(2)?).0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::generators::basic::{ladder, stacked_prism};
    use crate::products::{cover, prism};

    #[test]
    fn ladder_instance() {
        let h = dou_h(&DouHSpec { half: 4, diagonals: vec![(1, 6), (2, 5)] }).unwrap();
        assert!(is_isomorphic(&h, &ladder(4).unwrap()).unwrap());
        let j = dou_j(&h).unwrap();
        assert!(is_isomorphic(&prism(&h), &cover(&j).0).unwrap());
        assert!(is_isomorphic(&prism(&h), &stacked_prism(4, 4).unwrap()).unwrap());
    }

    #[test]
    fn odd_half() {
        let h = dou_h(&DouHSpec { half: 5, diagonals: vec![] }).unwrap();
        let j = dou_j(&h).unwrap();
        assert!(is_isomorphic(&j, &stacked_prism(5, 2).unwrap()).unwrap());
        assert!(is_isomorphic(&prism(&h), &cover(&j).0).unwrap());
        let h = dou_h(&DouHSpec { half: 5, diagonals: vec![(0, 3), (5, 8)] }).unwrap();
        assert!(is_isomorphic(&prism(&h), &cover(&dou_j(&h).unwrap()).0).unwrap());
    }

    #[test]
    fn violations() {
        let clause = |half, diagonals| match dou_h(&DouHSpec { half, diagonals }) {
            Err(Error::SpecViolation { clause, .. }) => Some(clause),
            _ => None,
        };
        assert_eq!(clause(4, vec![(0, 3)]), Some(SpecClause::ShiftClosure));
        assert_eq!(clause(4, vec![(0, 4)]), Some(SpecClause::AntipodalChord));
        assert_eq!(clause(4, vec![(0, 2)]), Some(SpecClause::ChordParity));
        assert_eq!(clause(6, vec![(0, 3), (6, 9), (1, 4), (7, 10)]), Some(SpecClause::CrossingChords));
    }
}
